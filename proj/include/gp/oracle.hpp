#ifndef GP_ORACLE_HPP_
#define GP_ORACLE_HPP_

// Brute-force ground truth. Nothing in here calls reduce, canonical_form or
// the conjugacy engine; the only shared pieces are the group tables and the
// graph adjacency.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "conjugacy.hpp"
#include "error.hpp"
#include "words.hpp"

namespace gp {

inline constexpr std::size_t default_oracle_cap = 8;
inline constexpr std::size_t default_clf_cap    = 6;
inline constexpr std::size_t default_ball_limit = 2000000;

namespace detail {
  inline std::string encode(word const& w) {
    std::string s;
    s.reserve(w.size() * 16);
    for (auto const& x : w) {
      s.append(reinterpret_cast<char const*>(&x.vertex), sizeof x.vertex);
      s.append(reinterpret_cast<char const*>(&x.value), sizeof x.value);
    }
    return s;
  }

  inline word decode(std::string const& s) {
    word        w;
    std::size_t step = sizeof(std::size_t) + sizeof(std::int64_t);
    for (std::size_t p = 0; p + step <= s.size(); p += step) {
      syllable x;
      std::memcpy(&x.vertex, s.data() + p, sizeof x.vertex);
      std::memcpy(&x.value, s.data() + p + sizeof x.vertex, sizeof x.value);
      w.push_back(x);
    }
    return w;
  }

  // One step of the closure moves from w.
  template <class F>
  void rewrite_neighbours(word const& w, graph_product const& gp, F&& emit) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const& g = gp.group(w[i].vertex);
      if (g.is_identity(w[i].value)) {
        word n = w;
        n.erase(n.begin() + static_cast<std::ptrdiff_t>(i));
        emit(std::move(n));
      }
      if (i + 1 == w.size()) {
        continue;
      }
      if (gp.graph().adjacent(w[i].vertex, w[i + 1].vertex)) {
        word n = w;
        std::swap(n[i], n[i + 1]);
        emit(std::move(n));
      } else if (w[i].vertex == w[i + 1].vertex) {
        word n = w;
        n[i].value = g.compose(w[i].value, w[i + 1].value);
        n.erase(n.begin() + static_cast<std::ptrdiff_t>(i + 1));
        emit(std::move(n));
      }
    }
  }

  inline void check_cap(word const& w, std::size_t cap) {
    if (w.size() > cap) {
      throw error(error_code::cap_exceeded,
                  std::to_string(w.size()) + " syllables, cap " +
                      std::to_string(cap));
    }
  }
}  // namespace detail

// Every raw word reachable from w by deleting identity syllables, swapping
// neighbours on adjacent vertices and merging neighbours on one vertex.
inline std::unordered_set<std::string> rewrite_closure(
    word const& w, graph_product const& gp,
    std::size_t cap = default_oracle_cap) {
  detail::check_cap(w, cap);
  std::unordered_set<std::string> seen;
  std::deque<word>                todo;
  seen.insert(detail::encode(w));
  todo.push_back(w);
  while (!todo.empty()) {
    word cur = std::move(todo.front());
    todo.pop_front();
    detail::rewrite_neighbours(cur, gp, [&](word n) {
      if (seen.insert(detail::encode(n)).second) {
        todo.push_back(std::move(n));
      }
    });
  }
  return seen;
}

inline bool oracle_equal(word const& w1, word const& w2, graph_product const& gp,
                         std::size_t cap = default_oracle_cap) {
  detail::check_cap(w2, cap);
  auto const closure = rewrite_closure(w1, gp, cap);
  std::unordered_set<std::string> seen;
  std::deque<word>                todo;
  auto                            key = detail::encode(w2);
  if (closure.count(key)) {
    return true;
  }
  seen.insert(key);
  todo.push_back(w2);
  bool hit = false;
  while (!todo.empty() && !hit) {
    word cur = std::move(todo.front());
    todo.pop_front();
    detail::rewrite_neighbours(cur, gp, [&](word n) {
      if (hit) {
        return;
      }
      auto k = detail::encode(n);
      if (closure.count(k)) {
        hit = true;
      } else if (seen.insert(std::move(k)).second) {
        todo.push_back(std::move(n));
      }
    });
  }
  return hit;
}

////////////////////////////////////////////////////////////////////////////
// Element identification for ball enumeration
////////////////////////////////////////////////////////////////////////////

// Append-with-cancellation normal form: each new syllable travels left past
// commuting syllables and merges into the first one on its own vertex.
inline word oracle_reduce(word const& w, graph_product const& gp) {
  word out;
  for (auto const& s : w) {
    auto const& g = gp.group(s.vertex);
    if (g.is_identity(s.value)) {
      continue;
    }
    std::size_t k     = out.size();
    bool        fused = false;
    while (k-- > 0) {
      if (out[k].vertex == s.vertex) {
        out[k].value = g.compose(out[k].value, s.value);
        if (g.is_identity(out[k].value)) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        }
        fused = true;
        break;
      }
      if (!gp.graph().adjacent(out[k].vertex, s.vertex)) {
        break;
      }
    }
    if (!fused) {
      out.push_back(s);
    }
  }
  return out;
}

// Projections of the normal form onto every pair of non-commuting vertices
// (a vertex with itself included). Two elements are equal iff keys match.
inline std::string element_key(word const& w, graph_product const& gp) {
  auto const  r = oracle_reduce(w, gp);
  std::size_t n = gp.size();
  std::string key;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (u != v && gp.graph().adjacent(u, v)) {
        continue;
      }
      word proj;
      for (auto const& s : r) {
        if (s.vertex == u || s.vertex == v) {
          proj.push_back(s);
        }
      }
      key += detail::encode(proj);
      key += '|';
    }
  }
  return key;
}

// Breadth-first enumeration of the Cayley graph with respect to the union of
// the vertex generating sets.
class cayley_ball {
 public:
  explicit cayley_ball(graph_product const& gp,
                       std::size_t          limit = default_ball_limit)
      : _gp(&gp), _limit(limit) {
    for (std::size_t v = 0; v < gp.size(); ++v) {
      for (auto x : gp.group(v).letters()) {
        _letters.push_back({v, x});
      }
    }
    _reps.push_back({});
    _dist.push_back(0);
    _index.emplace(element_key({}, gp), 0);
  }

  void extend(std::uint64_t radius) {
    while (_radius < radius) {
      std::size_t const begin = _shell_begin;
      std::size_t const end   = _reps.size();
      if (begin == end) {
        break;  // finite group exhausted
      }
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& s : _letters) {
          word next = oracle_reduce(concat(_reps[i], word{s}), *_gp);
          auto key  = element_key(next, *_gp);
          if (_index.emplace(std::move(key), _reps.size()).second) {
            _reps.push_back(std::move(next));
            _dist.push_back(_radius + 1);
            if (_reps.size() > _limit) {
              throw error(error_code::cap_exceeded,
                          "Cayley ball exceeds " + std::to_string(_limit) +
                              " elements");
            }
          }
        }
      }
      _shell_begin = end;
      ++_radius;
    }
  }

  std::uint64_t radius() const noexcept { return _radius; }
  std::size_t   size() const noexcept { return _reps.size(); }

  // Representatives in nondecreasing distance order.
  word const&   rep(std::size_t i) const { return _reps.at(i); }
  std::uint64_t dist(std::size_t i) const { return _dist.at(i); }

  std::optional<std::uint64_t> distance_of(word const& w) const {
    auto it = _index.find(element_key(w, *_gp));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return _dist[it->second];
  }

 private:
  graph_product const*                         _gp;
  std::size_t                                  _limit;
  std::vector<syllable>                        _letters;
  std::vector<word>                            _reps;
  std::vector<std::uint64_t>                   _dist;
  std::unordered_map<std::string, std::size_t> _index;
  std::uint64_t                                _radius      = 0;
  std::size_t                                  _shell_begin = 0;
};

namespace detail {
  inline void require_finite(graph_product const& gp) {
    if (!gp.all_finite()) {
      throw error(error_code::unsupported_kind,
                  "conjugacy oracles need finite vertex groups");
    }
  }
}  // namespace detail

// First c in the ball (so of least length) with c a c^-1 = b.
inline std::optional<word> oracle_conjugate(word const& a, word const& b,
                                            std::uint64_t radius,
                                            cayley_ball&  ball,
                                            graph_product const& gp) {
  detail::require_finite(gp);
  word const  x      = a;  // a and b may live inside the ball
  auto const  target = element_key(b, gp);
  ball.extend(radius);
  for (std::size_t i = 0; i < ball.size() && ball.dist(i) <= radius; ++i) {
    auto const& c = ball.rep(i);
    if (element_key(concat(c, x, inverse(c, gp)), gp) == target) {
      return c;
    }
  }
  return std::nullopt;
}

inline std::optional<word> oracle_conjugate(word const& a, word const& b,
                                            std::uint64_t        radius,
                                            graph_product const& gp) {
  cayley_ball ball(gp);
  return oracle_conjugate(a, b, radius, ball, gp);
}

// Max over conjugate pairs with |a| + |b| <= n of the least conjugator length.
inline std::uint64_t empirical_clf(graph_product const& gp, std::uint64_t n,
                                   std::size_t cap = default_clf_cap) {
  detail::require_finite(gp);
  if (n > cap) {
    throw error(error_code::cap_exceeded,
                "n = " + std::to_string(n) + ", cap " + std::to_string(cap));
  }
  if (n == 0) {
    return 0;
  }
  auto const  radius = clf_upper_bound(gp, n);
  cayley_ball ball(gp);
  ball.extend(radius);
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < ball.size() && ball.dist(i) <= n; ++i) {
    small.push_back(i);
  }
  std::uint64_t best = 0;
  for (auto i : small) {
    for (auto j : small) {
      if (ball.dist(i) + ball.dist(j) > n) {
        continue;
      }
      auto c = oracle_conjugate(ball.rep(i), ball.rep(j), radius, ball, gp);
      if (c) {
        best = std::max(best, *ball.distance_of(*c));
      }
    }
  }
  return best;
}

}  // namespace gp

#endif  // GP_ORACLE_HPP_
