#ifndef GP_WORDS_HPP_
#define GP_WORDS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_group.hpp"

namespace gp {

struct syllable {
  std::size_t  vertex = 0;
  std::int64_t value  = 0;

  auto operator<=>(syllable const&) const = default;
};

using element = syllable;
using word    = std::vector<syllable>;

// The pair (graph, vertex groups).
class graph_product {
 public:
  graph_product() = default;
  graph_product(simplicial_graph g, std::vector<vertex_group> groups)
      : _graph(std::move(g)), _groups(std::move(groups)) {
    if (_groups.size() != _graph.size()) {
      throw std::invalid_argument("graph_product: one group per vertex");
    }
  }

  simplicial_graph const& graph() const noexcept { return _graph; }
  vertex_group const& group(std::size_t v) const { return _groups.at(v); }
  std::size_t size() const noexcept { return _graph.size(); }

  bool commute(std::size_t u, std::size_t v) const {
    return _graph.adjacent(u, v);
  }

  std::vector<bool> infinite_flags() const {
    std::vector<bool> out;
    for (auto const& g : _groups) {
      out.push_back(!g.finite());
    }
    return out;
  }

  bool all_finite() const {
    for (auto const& g : _groups) {
      if (!g.finite()) {
        return false;
      }
    }
    return true;
  }

  void check(syllable const& s) const {
    if (s.vertex >= size() || !_groups[s.vertex].contains(s.value)) {
      throw error(error_code::foreign_element,
                  "syllable (" + std::to_string(s.vertex) + ", " +
                      std::to_string(s.value) + ")");
    }
  }

  syllable compose(syllable const& x, syllable const& y) const {
    if (x.vertex != y.vertex) {
      throw error(error_code::foreign_element, "compose across vertices");
    }
    return {x.vertex, group(x.vertex).compose(x.value, y.value)};
  }

  syllable invert(syllable const& s) const {
    return {s.vertex, group(s.vertex).invert(s.value)};
  }

  bool is_identity(syllable const& s) const { return s.value == 0; }

  std::uint64_t length(syllable const& s) const {
    return group(s.vertex).length(s.value);
  }

 private:
  simplicial_graph          _graph;
  std::vector<vertex_group> _groups;
};

////////////////////////////////////////////////////////////////////////////
// Grammar
////////////////////////////////////////////////////////////////////////////

inline word parse_word(std::string_view text, graph_product const& gp) {
  word out;
  if (text.empty()) {
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    auto sp  = text.find(' ', pos);
    auto tok = text.substr(pos, sp == std::string_view::npos ? sp : sp - pos);
    if (tok.empty()) {
      throw error(error_code::syntax_error,
                  "empty token at offset " + std::to_string(pos));
    }
    auto colon = tok.find(':');
    if (colon == std::string_view::npos || colon == 0 ||
        colon + 1 == tok.size()) {
      throw error(error_code::syntax_error,
                  "expected <vertex>:<atom>, got '" + std::string(tok) + "'");
    }
    auto vname = tok.substr(0, colon);
    auto v     = gp.graph().index_of(vname);
    if (!v) {
      throw error(error_code::unknown_vertex, std::string(vname));
    }
    out.push_back({*v, gp.group(*v).parse_atom(tok.substr(colon + 1))});
    if (sp == std::string_view::npos) {
      break;
    }
    pos = sp + 1;
  }
  return out;
}

inline std::string format_syllable(syllable const& s, graph_product const& gp) {
  return gp.graph().name(s.vertex) + ":" + gp.group(s.vertex).format_atom(s.value);
}

inline std::string format_word(word const& w, graph_product const& gp) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += format_syllable(w[i], gp);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Basic word algebra
////////////////////////////////////////////////////////////////////////////

inline word inverse(word const& w, graph_product const& gp) {
  word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(gp.invert(*it));
  }
  return out;
}

template <class... Ws>
word concat(Ws const&... ws) {
  word out;
  (out.insert(out.end(), ws.begin(), ws.end()), ...);
  return out;
}

// s_i may be moved to the front by shuffles.
inline bool front_shuffleable(word const& w, std::size_t i,
                              graph_product const& gp) {
  for (std::size_t k = 0; k < i; ++k) {
    if (!gp.commute(w[k].vertex, w[i].vertex)) {
      return false;
    }
  }
  return true;
}

inline bool end_shuffleable(word const& w, std::size_t j,
                            graph_product const& gp) {
  for (std::size_t k = j + 1; k < w.size(); ++k) {
    if (!gp.commute(w[k].vertex, w[j].vertex)) {
      return false;
    }
  }
  return true;
}

namespace detail {
  // Smallest j, then the unique i < j, forming a mergeable pair.
  inline std::optional<std::pair<std::size_t, std::size_t>> first_mergeable(
      word const& w, graph_product const& gp) {
    for (std::size_t j = 1; j < w.size(); ++j) {
      for (std::size_t k = j; k-- > 0;) {
        if (w[k].vertex == w[j].vertex) {
          return std::pair{k, j};
        }
        if (!gp.commute(w[k].vertex, w[j].vertex)) {
          break;
        }
      }
    }
    return std::nullopt;
  }
}  // namespace detail

inline bool is_graphically_reduced(word const& w, graph_product const& gp) {
  for (auto const& s : w) {
    gp.check(s);
    if (gp.is_identity(s)) {
      return false;
    }
  }
  return !detail::first_mergeable(w, gp);
}

inline word reduce(word w, graph_product const& gp) {
  for (auto const& s : w) {
    gp.check(s);
  }
  std::erase_if(w, [&](syllable const& s) { return gp.is_identity(s); });
  while (auto p = detail::first_mergeable(w, gp)) {
    auto [i, j] = *p;
    w[i]        = gp.compose(w[i], w[j]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    if (gp.is_identity(w[i])) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return w;
}

// Lex-least linearization of the shuffle class of reduce(w).
inline word canonical_form(word const& w, graph_product const& gp) {
  word const        r = reduce(w, gp);
  std::vector<bool> used(r.size(), false);
  word              out;
  out.reserve(r.size());
  for (std::size_t step = 0; step < r.size(); ++step) {
    std::size_t best = npos;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (used[i]) {
        continue;
      }
      bool free = true;
      for (std::size_t k = 0; k < i && free; ++k) {
        if (!used[k] && !gp.commute(r[k].vertex, r[i].vertex)) {
          free = false;
        }
      }
      if (free && (best == npos || r[i] < r[best])) {
        best = i;
      }
    }
    used[best] = true;
    out.push_back(r[best]);
  }
  return out;
}

inline bool equal(word const& a, word const& b, graph_product const& gp) {
  return canonical_form(a, gp) == canonical_form(b, gp);
}

inline std::uint64_t word_length(word const& w, graph_product const& gp) {
  std::uint64_t n = 0;
  for (auto const& s : reduce(w, gp)) {
    n += gp.length(s);
  }
  return n;
}

}  // namespace gp

#endif  // GP_WORDS_HPP_
