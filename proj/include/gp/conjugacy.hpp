#ifndef GP_CONJUGACY_HPP_
#define GP_CONJUGACY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "words.hpp"

namespace gp {

inline constexpr std::size_t default_bfs_states = 1000000;

inline bool is_graphically_cyclically_reduced(word const&          w,
                                              graph_product const& gp) {
  if (!is_graphically_reduced(w, gp)) {
    return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!front_shuffleable(w, i, gp)) {
      continue;
    }
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == w[i].vertex && end_shuffleable(w, j, gp)) {
        return false;
      }
    }
  }
  return true;
}

// input = conjugator . core . conjugator^-1
struct cyclic_reduction {
  word conjugator;
  word core;
};

namespace detail {
  // First pair i < j on one vertex with s_i front- and s_j end-shuffleable,
  // filtered by pred(i, j).
  template <class Pred>
  std::optional<std::pair<std::size_t, std::size_t>> find_end_pair(
      word const& w, graph_product const& gp, Pred pred) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!front_shuffleable(w, i, gp)) {
        continue;
      }
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex && end_shuffleable(w, j, gp) &&
            pred(i, j)) {
          return std::pair{i, j};
        }
      }
    }
    return std::nullopt;
  }

  inline void erase_pair(word& w, std::size_t i, std::size_t j) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
  }
}  // namespace detail

inline cyclic_reduction cyclically_reduce(word const& w, graph_product const& gp) {
  word x = reduce(w, gp);
  word g;

  // Inverse shell pairs.
  while (auto p = detail::find_end_pair(x, gp, [&](auto i, auto j) {
           return x[i] == gp.invert(x[j]);
         })) {
    g.push_back(x[p->first]);
    detail::erase_pair(x, p->first, p->second);
  }

  // Remaining end pairs on pairwise adjacent vertices.
  word                     as, bs;
  std::vector<std::size_t> us;
  while (auto p = detail::find_end_pair(x, gp, [&](auto i, auto) {
           return std::all_of(us.begin(), us.end(), [&](std::size_t u) {
             return gp.commute(u, x[i].vertex);
           });
         })) {
    as.push_back(x[p->first]);
    bs.push_back(x[p->second]);
    us.push_back(x[p->first].vertex);
    detail::erase_pair(x, p->first, p->second);
  }

  std::uint64_t la = 0, lb = 0;
  for (std::size_t k = 0; k < as.size(); ++k) {
    la += gp.length(as[k]);
    lb += gp.length(bs[k]);
  }

  word merged;
  for (std::size_t k = 0; k < as.size(); ++k) {
    merged.push_back(gp.compose(bs[k], as[k]));
  }
  cyclic_reduction out;
  if (lb <= la) {
    for (auto const& b : bs) {
      g.push_back(gp.invert(b));
    }
    out.core = concat(merged, x);
  } else {
    g.insert(g.end(), as.begin(), as.end());
    std::reverse(merged.begin(), merged.end());
    out.core = concat(x, merged);
  }
  out.conjugator = reduce(std::move(g), gp);
  out.core       = reduce(std::move(out.core), gp);
  return out;
}

struct floating_decomposition_t {
  word core;
  word floats;  // sorted by vertex
};

inline floating_decomposition_t floating_decomposition(
    word const& w, graph_product const& gp) {
  if (!is_graphically_cyclically_reduced(w, gp)) {
    throw error(error_code::not_cyclically_reduced, format_word(w, gp));
  }
  floating_decomposition_t out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool floats = true;
    for (std::size_t k = 0; k < w.size() && floats; ++k) {
      if (k != i && !gp.commute(w[k].vertex, w[i].vertex)) {
        floats = false;
      }
    }
    (floats ? out.floats : out.core).push_back(w[i]);
  }
  std::sort(out.floats.begin(), out.floats.end());
  return out;
}

// Canonical forms reachable from core by cyclic permutations and shuffles,
// each with a conjugator d such that d . core . d^-1 is that form. Uniform
// cost search, so d minimizes the summed length of the rotated syllables.
inline std::map<word, word> cyclic_shuffle_class(
    word const& core, graph_product const& gp,
    std::size_t limit = default_bfs_states) {
  using item = std::tuple<std::uint64_t, std::uint64_t, word, word>;
  std::priority_queue<item, std::vector<item>, std::greater<>> pq;
  std::map<word, word>                                         done;
  std::map<word, std::uint64_t>                                best;
  std::uint64_t                                                seq = 0;

  auto start = canonical_form(core, gp);
  best[start] = 0;
  pq.emplace(0, seq++, start, word{});
  while (!pq.empty()) {
    auto [cost, order, v, d] = pq.top();
    pq.pop();
    if (done.count(v)) {
      continue;
    }
    done.emplace(v, d);
    if (done.size() > limit) {
      throw error(error_code::bfs_limit_exceeded,
                  "cyclic shuffle class exceeds " + std::to_string(limit) +
                      " states");
    }
    auto push = [&](word next, word nd, std::uint64_t step) {
      auto key = canonical_form(next, gp);
      if (done.count(key)) {
        return;
      }
      auto c  = cost + step;
      auto it = best.find(key);
      if (it != best.end() && it->second <= c) {
        return;
      }
      best[key] = c;
      pq.emplace(c, seq++, std::move(key), reduce(std::move(nd), gp));
    };
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (front_shuffleable(v, i, gp)) {
        word rest = v;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        rest.push_back(v[i]);
        push(std::move(rest), concat(word{gp.invert(v[i])}, d),
             gp.length(v[i]));
      }
      if (end_shuffleable(v, i, gp)) {
        word rest = v;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        rest.insert(rest.begin(), v[i]);
        push(std::move(rest), concat(word{v[i]}, d), gp.length(v[i]));
      }
    }
  }
  return done;
}

struct conjugacy_witness {
  word          conjugator;
  std::uint64_t length          = 0;
  std::uint64_t certified_bound = 0;
};

inline std::uint64_t float_bound(graph_product const& gp, word const& floats,
                                 std::uint64_t n) {
  std::uint64_t s = 0;
  if (n == 0) {
    return 0;
  }
  for (auto const& p : floats) {
    s += gp.group(p.vertex).local_clf(n);
  }
  return s;
}

// c with c . a . c^-1 = b, or none when a and b are not conjugate.
inline std::optional<conjugacy_witness> are_conjugate(
    word const& a, word const& b, graph_product const& gp,
    std::size_t limit = default_bfs_states) {
  auto ra = cyclically_reduce(a, gp);
  auto rb = cyclically_reduce(b, gp);
  auto fa = floating_decomposition(ra.core, gp);
  auto fb = floating_decomposition(rb.core, gp);
  if (fa.floats.size() != fb.floats.size()) {
    return std::nullopt;
  }
  word k;
  for (std::size_t i = 0; i < fa.floats.size(); ++i) {
    auto const& p = fa.floats[i];
    auto const& q = fb.floats[i];
    if (p.vertex != q.vertex) {
      return std::nullopt;
    }
    auto c = gp.group(p.vertex).conjugacy_witness(p.value, q.value);
    if (!c) {
      return std::nullopt;
    }
    k.push_back({p.vertex, *c});
  }
  if (fa.core.size() != fb.core.size()) {
    return std::nullopt;
  }
  auto cls = cyclic_shuffle_class(fa.core, gp, limit);
  auto it  = cls.find(canonical_form(fb.core, gp));
  if (it == cls.end()) {
    return std::nullopt;
  }
  conjugacy_witness out;
  out.conjugator = reduce(
      concat(rb.conjugator, it->second, k, inverse(ra.conjugator, gp)), gp);
  out.length = word_length(out.conjugator, gp);
  auto n     = word_length(a, gp) + word_length(b, gp);
  out.certified_bound =
      (opposite_diameter(gp.graph()) + 1) * n + float_bound(gp, fa.floats, n);
  return out;
}

inline bool verify_witness(word const& a, word const& b, word const& c,
                           graph_product const& gp) {
  return equal(concat(c, a, inverse(c, gp)), b, gp);
}

inline std::uint64_t clf_upper_bound(graph_product const& gp, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("clf_upper_bound: n must be positive");
  }
  std::uint64_t best = 0;
  for (auto const& clique : enumerate_cliques(gp.graph())) {
    std::uint64_t s = 0;
    for (auto u : clique) {
      s += gp.group(u).local_clf(n);
    }
    best = std::max(best, s);
  }
  return (opposite_diameter(gp.graph()) + 1) * n + best;
}

}  // namespace gp

#endif  // GP_CONJUGACY_HPP_
