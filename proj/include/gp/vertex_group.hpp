#ifndef GP_VERTEX_GROUP_HPP_
#define GP_VERTEX_GROUP_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace gp {

enum class group_kind { cyclic, integers, table };

inline std::string_view to_string(group_kind k) {
  switch (k) {
    case group_kind::cyclic: return "cyclic";
    case group_kind::integers: return "integers";
    case group_kind::table: return "table";
  }
  return "?";
}

// One vertex group. Elements are plain integers: residues in [0, order) for
// cyclic groups, any value for the integers, table indices for table groups
// (identity at index 0). The integer order is the serialization order.
class vertex_group {
 public:
  using value_type = std::int64_t;

  static vertex_group cyclic(std::int64_t order) {
    if (order == 1) {
      throw error(error_code::trivial_group, "cyclic group of order 1");
    }
    if (order < 1) {
      throw error(error_code::not_a_group,
                  "cyclic order " + std::to_string(order));
    }
    vertex_group g;
    g._kind  = group_kind::cyclic;
    g._order = order;
    return g;
  }

  static vertex_group integers() {
    vertex_group g;
    g._kind = group_kind::integers;
    return g;
  }

  static vertex_group table(std::vector<std::string>              names,
                            std::vector<std::vector<std::size_t>> mul,
                            std::vector<std::string> const&       generators);

  group_kind kind() const noexcept { return _kind; }
  bool       finite() const noexcept { return _kind != group_kind::integers; }

  // Number of elements; 0 for the integers.
  std::size_t size() const noexcept {
    switch (_kind) {
      case group_kind::cyclic: return static_cast<std::size_t>(_order);
      case group_kind::integers: return 0;
      case group_kind::table: return _names.size();
    }
    return 0;
  }

  std::int64_t order() const noexcept { return _order; }

  std::vector<std::string> const& element_names() const noexcept {
    return _names;
  }
  std::vector<std::size_t> const& generators() const noexcept { return _gens; }
  std::vector<std::vector<std::size_t>> const& table_data() const noexcept {
    return _mul;
  }

  bool contains(value_type x) const noexcept {
    switch (_kind) {
      case group_kind::cyclic: return 0 <= x && x < _order;
      case group_kind::integers: return true;
      case group_kind::table:
        return 0 <= x && x < static_cast<value_type>(_names.size());
    }
    return false;
  }

  value_type identity() const noexcept { return 0; }
  bool is_identity(value_type x) const noexcept { return x == 0; }

  value_type compose(value_type x, value_type y) const {
    check(x);
    check(y);
    switch (_kind) {
      case group_kind::cyclic: return (x + y) % _order;
      case group_kind::integers: return x + y;
      case group_kind::table: return static_cast<value_type>(_mul[x][y]);
    }
    return 0;
  }

  value_type invert(value_type x) const {
    check(x);
    switch (_kind) {
      case group_kind::cyclic: return (_order - x) % _order;
      case group_kind::integers: return -x;
      case group_kind::table: return static_cast<value_type>(_inv[x]);
    }
    return 0;
  }

  // Geodesic length w.r.t. the declared generators and their inverses.
  std::uint64_t length(value_type x) const {
    check(x);
    switch (_kind) {
      case group_kind::cyclic:
        return static_cast<std::uint64_t>(std::min(x, _order - x));
      case group_kind::integers:
        return static_cast<std::uint64_t>(x < 0 ? -x : x);
      case group_kind::table: return _len[x];
    }
    return 0;
  }

  // Elements of length one, i.e. the generators together with their
  // inverses, in serialization order.
  std::vector<value_type> letters() const {
    std::vector<value_type> out;
    switch (_kind) {
      case group_kind::cyclic:
        out.push_back(1);
        if (_order > 2) {
          out.push_back(_order - 1);
        }
        break;
      case group_kind::integers:
        out.push_back(-1);
        out.push_back(1);
        break;
      case group_kind::table:
        for (std::size_t i = 0; i < _names.size(); ++i) {
          if (_len[i] == 1) {
            out.push_back(static_cast<value_type>(i));
          }
        }
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // k with k x k^-1 = y, of minimal length (ties broken by value), or none.
  std::optional<value_type> conjugacy_witness(value_type x,
                                              value_type y) const {
    check(x);
    check(y);
    if (_kind != group_kind::table) {
      if (x == y) {
        return identity();
      }
      return std::nullopt;
    }
    auto w = _witness[x * _names.size() + y];
    if (w == no_witness) {
      return std::nullopt;
    }
    return static_cast<value_type>(w);
  }

  // Conjugacy length function of this group at n.
  std::uint64_t local_clf(std::uint64_t n) const {
    if (n == 0) {
      throw std::invalid_argument("local_clf: n must be positive");
    }
    if (_kind != group_kind::table) {
      return 0;
    }
    if (n >= _clf.size()) {
      return _clf.back();
    }
    return _clf[n];
  }

  value_type parse_atom(std::string_view atom) const {
    if (_kind == group_kind::table) {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == atom) {
          return static_cast<value_type>(i);
        }
      }
      throw error(error_code::unknown_element,
                  "no element named '" + std::string(atom) + "'");
    }
    value_type  v     = 0;
    char const* first = atom.data();
    char const* last  = atom.data() + atom.size();
    if (first != last && *first == '+') {
      ++first;
    }
    auto [p, ec] = std::from_chars(first, last, v);
    if (atom.empty() || ec != std::errc() || p != last) {
      throw error(error_code::syntax_error,
                  "bad integer atom '" + std::string(atom) + "'");
    }
    if (_kind == group_kind::cyclic) {
      v %= _order;
      if (v < 0) {
        v += _order;
      }
    }
    return v;
  }

  std::string format_atom(value_type x) const {
    check(x);
    if (_kind == group_kind::table) {
      return _names[x];
    }
    return std::to_string(x);
  }

 private:
  static constexpr std::size_t no_witness = static_cast<std::size_t>(-1);

  void check(value_type x) const {
    if (!contains(x)) {
      throw error(error_code::foreign_element,
                  "value " + std::to_string(x) + " not in " +
                      std::string(to_string(_kind)) + " group");
    }
  }

  group_kind   _kind  = group_kind::cyclic;
  std::int64_t _order = 0;

  std::vector<std::string>              _names;
  std::vector<std::vector<std::size_t>> _mul;
  std::vector<std::size_t>              _gens;
  std::vector<std::size_t>              _inv;
  std::vector<std::uint64_t>            _len;
  std::vector<std::size_t>              _witness;
  std::vector<std::uint64_t>            _clf;  // _clf[n], prefix maxima
};

inline vertex_group vertex_group::table(
    std::vector<std::string>              names,
    std::vector<std::vector<std::size_t>> mul,
    std::vector<std::string> const&       generators) {
  std::size_t const n = names.size();
  if (n == 0) {
    throw error(error_code::not_a_group, "empty table");
  }
  if (mul.size() != n) {
    throw error(error_code::not_a_group, "table must have one row per element");
  }
  {
    std::map<std::string, int> seen;
    for (auto const& s : names) {
      if (s.empty() || ++seen[s] > 1) {
        throw error(error_code::not_a_group, "bad element name '" + s + "'");
      }
    }
  }
  for (auto const& row : mul) {
    if (row.size() != n) {
      throw error(error_code::not_a_group, "table row of wrong length");
    }
    for (auto x : row) {
      if (x >= n) {
        throw error(error_code::not_a_group, "table not closed");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mul[0][x] != x || mul[x][0] != x) {
      throw error(error_code::not_a_group,
                  "index 0 is not a two-sided identity");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) {
          throw error(error_code::not_a_group,
                      "not associative at (" + names[x] + "," + names[y] +
                          "," + names[z] + ")");
        }
      }
    }
  }
  if (n == 1) {
    throw error(error_code::trivial_group, "table with one element");
  }

  vertex_group g;
  g._kind  = group_kind::table;
  g._order = static_cast<std::int64_t>(n);
  g._inv.assign(n, no_witness);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul[x][y] == 0 && mul[y][x] == 0) {
        g._inv[x] = y;
        break;
      }
    }
    if (g._inv[x] == no_witness) {
      throw error(error_code::not_a_group, "'" + names[x] + "' has no inverse");
    }
  }

  for (auto const& s : generators) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
      throw error(error_code::unknown_element, "generator '" + s + "'");
    }
    g._gens.push_back(static_cast<std::size_t>(it - names.begin()));
  }

  // Cayley graph BFS from the identity.
  constexpr auto unseen = std::numeric_limits<std::uint64_t>::max();
  g._len.assign(n, unseen);
  g._len[0] = 0;
  std::queue<std::size_t> q;
  q.push(0);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto s : g._gens) {
      for (auto t : {s, g._inv[s]}) {
        auto y = mul[x][t];
        if (g._len[y] == unseen) {
          g._len[y] = g._len[x] + 1;
          q.push(y);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g._len[x] == unseen) {
      throw error(error_code::generators_do_not_generate,
                  "'" + names[x] + "' is unreachable");
    }
  }

  g._names = std::move(names);
  g._mul   = std::move(mul);

  // Minimal conjugators: scan k by (length, index); first hit wins.
  std::vector<std::size_t> by_len(n);
  std::iota(by_len.begin(), by_len.end(), 0);
  std::stable_sort(by_len.begin(), by_len.end(),
                   [&](auto a, auto b) { return g._len[a] < g._len[b]; });
  g._witness.assign(n * n, no_witness);
  for (auto k : by_len) {
    for (std::size_t x = 0; x < n; ++x) {
      auto y = g._mul[g._mul[k][x]][g._inv[k]];
      auto& w = g._witness[x * n + y];
      if (w == no_witness) {
        w = k;
      }
    }
  }

  std::uint64_t max_len = *std::max_element(g._len.begin(), g._len.end());
  g._clf.assign(2 * max_len + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto w = g._witness[x * n + y];
      if (w == no_witness) {
        continue;
      }
      auto& c = g._clf[g._len[x] + g._len[y]];
      c       = std::max(c, g._len[w]);
    }
  }
  for (std::size_t i = 1; i < g._clf.size(); ++i) {
    g._clf[i] = std::max(g._clf[i], g._clf[i - 1]);
  }
  return g;
}

}  // namespace gp

#endif  // GP_VERTEX_GROUP_HPP_
