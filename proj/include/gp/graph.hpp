#ifndef GP_GRAPH_HPP_
#define GP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gp {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// The defining graph. Vertices are addressed by their index in declaration
// order; that order is the total order used for canonical forms.
class simplicial_graph {
 public:
  simplicial_graph() = default;

  std::size_t size() const noexcept { return _names.size(); }

  std::string const& name(std::size_t v) const { return _names.at(v); }
  std::vector<std::string> const& names() const noexcept { return _names; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return _adj[u * size() + v] != 0;
  }

  std::vector<std::size_t> link(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v) {
      if (adjacent(u, v)) {
        out.push_back(v);
      }
    }
    return out;
  }

  bool is_complete() const {
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (!adjacent(u, v)) {
          return false;
        }
      }
    }
    return true;
  }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  friend simplicial_graph validate_graph(
      std::vector<std::string> const&,
      std::vector<std::pair<std::string, std::string>> const&);

 private:
  std::vector<std::string>           _names;
  std::map<std::string, std::size_t> _index;
  std::vector<char>                  _adj;
};

inline simplicial_graph validate_graph(
    std::vector<std::string> const&                          vertices,
    std::vector<std::pair<std::string, std::string>> const& edges) {
  simplicial_graph g;
  for (auto const& v : vertices) {
    if (!g._index.emplace(v, g._names.size()).second) {
      throw error(error_code::duplicate_vertex, "vertex '" + v + "'");
    }
    g._names.push_back(v);
  }
  std::size_t const n = g._names.size();
  g._adj.assign(n * n, 0);
  for (auto const& [x, y] : edges) {
    auto ix = g.index_of(x);
    auto iy = g.index_of(y);
    if (!ix) {
      throw error(error_code::unknown_endpoint, "edge endpoint '" + x + "'");
    }
    if (!iy) {
      throw error(error_code::unknown_endpoint, "edge endpoint '" + y + "'");
    }
    if (*ix == *iy) {
      throw error(error_code::self_loop, "edge " + x + "-" + y);
    }
    g._adj[*ix * n + *iy] = 1;
    g._adj[*iy * n + *ix] = 1;
  }
  return g;
}

// Largest diameter of a connected component of the opposite graph. An
// isolated vertex is a component of diameter 0.
inline std::size_t opposite_diameter(simplicial_graph const& g) {
  std::size_t const n    = g.size();
  std::size_t       best = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), npos);
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      best = std::max(best, dist[u]);
      for (std::size_t v = 0; v < n; ++v) {
        if (v != u && !g.adjacent(u, v) && dist[v] == npos) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
  }
  return best;
}

namespace detail {
  inline void bron_kerbosch(simplicial_graph const&           g,
                            std::vector<std::size_t>&          r,
                            std::vector<std::size_t>           p,
                            std::vector<std::size_t>           x,
                            std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    while (!p.empty()) {
      std::size_t v = p.front();
      std::vector<std::size_t> p2, x2;
      for (auto w : p) {
        if (g.adjacent(v, w)) {
          p2.push_back(w);
        }
      }
      for (auto w : x) {
        if (g.adjacent(v, w)) {
          x2.push_back(w);
        }
      }
      r.push_back(v);
      bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
      r.pop_back();
      p.erase(p.begin());
      x.push_back(v);
    }
  }
}  // namespace detail

// All maximal cliques, each sorted by vertex index, the list sorted
// lexicographically.
inline std::vector<std::vector<std::size_t>> enumerate_cliques(
    simplicial_graph const& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.size() == 0) {
    return out;
  }
  std::vector<std::size_t> r, p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    p[i] = i;
  }
  detail::bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

// True iff some four vertices induce a 4-cycle.
inline bool has_induced_square(simplicial_graph const& g) {
  std::size_t const n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) {
        continue;
      }
      // a and c opposite corners; need two non-adjacent common neighbours.
      std::vector<std::size_t> common;
      for (std::size_t v = 0; v < n; ++v) {
        if (g.adjacent(a, v) && g.adjacent(c, v)) {
          common.push_back(v);
        }
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

inline bool meier_condition(simplicial_graph const& g,
                            std::vector<bool> const& infinite) {
  if (infinite.size() != g.size()) {
    throw std::invalid_argument("meier_condition: one flag per vertex");
  }
  if (has_induced_square(g)) {
    return false;
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!infinite[u]) {
      continue;
    }
    auto lk = g.link(u);
    for (std::size_t i = 0; i < lk.size(); ++i) {
      if (infinite[lk[i]]) {
        return false;
      }
      for (std::size_t j = i + 1; j < lk.size(); ++j) {
        if (!g.adjacent(lk[i], lk[j])) {
          return false;
        }
      }
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////////
// Dehn classifier
////////////////////////////////////////////////////////////////////////////

enum class dehn_case { clique, meier, non_meier };

struct dehn_term {
  enum class kind { linear, quadratic, delta, closure };
  kind        k;
  std::size_t vertex = npos;

  bool operator==(dehn_term const&) const = default;
};

struct dehn_class {
  dehn_case              tag;
  std::vector<dehn_term> terms;

  bool operator==(dehn_class const&) const = default;
};

inline std::string_view to_string(dehn_case c) {
  switch (c) {
    case dehn_case::clique: return "clique";
    case dehn_case::meier: return "meier";
    case dehn_case::non_meier: return "non-meier";
  }
  return "?";
}

inline std::string to_string(dehn_class const& d, simplicial_graph const& g) {
  std::string s = "max(";
  bool        first = true;
  for (auto const& t : d.terms) {
    if (!first) {
      s += ", ";
    }
    first = false;
    switch (t.k) {
      case dehn_term::kind::linear: s += "linear"; break;
      case dehn_term::kind::quadratic: s += "quadratic"; break;
      case dehn_term::kind::delta: s += "delta(" + g.name(t.vertex) + ")"; break;
      case dehn_term::kind::closure:
        s += "closure-of-delta(" + g.name(t.vertex) + ")";
        break;
    }
  }
  return s + ")";
}

// Symbolic Dehn function of the graph product. The clique case is reported
// only when the direct sum has at most one infinite factor; two infinite
// factors force the quadratic term.
//
// In the meier case the emitted form is max(linear, ~delta_u ...); the equal
// form max(closure(delta_u) ...) is not produced.
inline dehn_class dehn_classify(simplicial_graph const& g,
                                std::vector<bool> const& infinite) {
  bool const meier = meier_condition(g, infinite);
  dehn_class out;
  if (g.is_complete() && meier) {
    out.tag = dehn_case::clique;
    for (std::size_t u = 0; u < g.size(); ++u) {
      out.terms.push_back({dehn_term::kind::delta, u});
    }
    return out;
  }
  out.tag = meier ? dehn_case::meier : dehn_case::non_meier;
  out.terms.push_back(
      {meier ? dehn_term::kind::linear : dehn_term::kind::quadratic, npos});
  for (std::size_t u = 0; u < g.size(); ++u) {
    bool central = g.link(u).size() + 1 == g.size();
    out.terms.push_back(
        {central ? dehn_term::kind::delta : dehn_term::kind::closure, u});
  }
  return out;
}

// max over compositions n = n_1 + ... + n_k of sum f(n_i); f[i] holds f(i+1).
inline std::uint64_t subnegative_closure(std::vector<std::uint64_t> const& f,
                                         std::size_t                      n) {
  if (n == 0 || n > f.size()) {
    throw std::invalid_argument("subnegative_closure: need 1 <= n <= |f|");
  }
  std::vector<std::uint64_t> best(n + 1, 0);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      best[m] = std::max(best[m], f[k - 1] + best[m - k]);
    }
  }
  return best[n];
}

}  // namespace gp

#endif  // GP_GRAPH_HPP_
