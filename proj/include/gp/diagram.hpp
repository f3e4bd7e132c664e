#ifndef GP_DIAGRAM_HPP_
#define GP_DIAGRAM_HPP_

// Planar diagrams over the presentation whose relators are commutator squares
// and product triangles, stored as combinatorial maps.
//
//   opposite(d)  the other half of d's edge
//   next(d)      next dart counterclockwise around d's origin
//   phi(d)       next^-1(opposite(d)), the dart after d on the face to the
//                left of d
//
// Interior faces are phi-orbits traversed counterclockwise; the outer face
// orbit runs clockwise around the diagram, which is the boundary reading.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "words.hpp"

namespace gp {

struct dart {
  std::size_t opposite = 0;
  std::size_t next     = 0;
  syllable    label;
  bool        forward = true;
};

struct diagram {
  std::vector<dart>          darts;
  std::optional<std::size_t> outer;  // basepoint of the outer boundary
  std::optional<std::size_t> inner;  // basepoint of the inner boundary

  std::size_t size() const noexcept { return darts.size(); }
  bool annular() const noexcept { return inner.has_value(); }

  std::size_t opp(std::size_t d) const { return darts[d].opposite; }
  std::size_t phi(std::size_t d) const { return _prev.at(opp(d)); }

  // Recomputes the inverse rotation; call after editing darts.
  void index() {
    _prev.assign(darts.size(), npos);
    for (std::size_t d = 0; d < darts.size(); ++d) {
      if (darts[d].next < darts.size()) {
        _prev[darts[d].next] = d;
      }
    }
  }

 private:
  std::vector<std::size_t> _prev;
};

struct face_structure {
  std::vector<std::vector<std::size_t>> faces;  // each starts at its least dart
  std::vector<std::size_t>              face_of;
  std::vector<std::size_t>              vertex_of;  // origin vertex of dart
  std::size_t                           vertex_count = 0;
};

inline face_structure compute_faces(diagram const& d) {
  face_structure fs;
  std::size_t    n = d.size();
  fs.face_of.assign(n, npos);
  fs.vertex_of.assign(n, npos);
  for (std::size_t s = 0; s < n; ++s) {
    if (fs.face_of[s] == npos) {
      std::vector<std::size_t> f;
      for (auto x = s; fs.face_of[x] == npos; x = d.phi(x)) {
        fs.face_of[x] = fs.faces.size();
        f.push_back(x);
      }
      fs.faces.push_back(std::move(f));
    }
    if (fs.vertex_of[s] == npos) {
      for (auto x = s; fs.vertex_of[x] == npos; x = d.darts[x].next) {
        fs.vertex_of[x] = fs.vertex_count;
      }
      ++fs.vertex_count;
    }
  }
  return fs;
}

// The face cycle containing d, starting at d.
inline std::vector<std::size_t> face_from(diagram const& dg, std::size_t d) {
  std::vector<std::size_t> out{d};
  for (auto x = dg.phi(d); x != d; x = dg.phi(x)) {
    out.push_back(x);
  }
  return out;
}

// Builds a diagram from face cycles; every dart must lie on exactly one face.
inline diagram from_faces(std::vector<std::size_t> const&              opposite,
                          std::vector<syllable> const&                 labels,
                          std::vector<bool> const&                     forward,
                          std::vector<std::vector<std::size_t>> const& faces,
                          std::optional<std::size_t>                   outer,
                          std::optional<std::size_t>                   inner) {
  diagram dg;
  dg.darts.resize(opposite.size());
  std::vector<bool> placed(opposite.size(), false);
  for (auto const& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto x = f[i];
      auto y = f[(i + 1) % f.size()];
      if (x >= opposite.size() || placed[x]) {
        throw error(error_code::bad_map_structure, "dart on two faces");
      }
      placed[x]           = true;
      dg.darts[y].next    = opposite[x];
    }
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
    throw error(error_code::bad_map_structure, "dart on no face");
  }
  for (std::size_t d = 0; d < opposite.size(); ++d) {
    dg.darts[d].opposite = opposite[d];
    dg.darts[d].label    = labels[d];
    dg.darts[d].forward  = forward[d];
  }
  dg.outer = outer;
  dg.inner = inner;
  dg.index();
  return dg;
}

////////////////////////////////////////////////////////////////////////////
// Validation
////////////////////////////////////////////////////////////////////////////

namespace detail {
  inline void check_map_structure(diagram const& dg, graph_product const& gp) {
    std::size_t const n = dg.size();
    std::vector<int>  hits(n, 0);
    for (std::size_t d = 0; d < n; ++d) {
      auto const& x = dg.darts[d];
      if (x.opposite >= n || x.next >= n) {
        throw error(error_code::bad_map_structure,
                    "dart " + std::to_string(d) + " points outside the map");
      }
      if (x.opposite == d || dg.darts[x.opposite].opposite != d) {
        throw error(error_code::bad_map_structure,
                    "opposite is not a fixed-point-free involution at dart " +
                        std::to_string(d));
      }
      if (dg.darts[x.opposite].forward == x.forward) {
        throw error(error_code::bad_map_structure,
                    "edge of dart " + std::to_string(d) +
                        " needs exactly one forward dart");
      }
      ++hits[x.next];
      gp.check(x.label);
      if (gp.is_identity(x.label)) {
        throw error(error_code::identity_edge_label,
                    "dart " + std::to_string(d));
      }
      if (dg.darts[x.opposite].label != gp.invert(x.label)) {
        throw error(error_code::bad_map_structure,
                    "opposite darts " + std::to_string(d) + ", " +
                        std::to_string(x.opposite) +
                        " do not carry inverse labels");
      }
    }
    for (std::size_t d = 0; d < n; ++d) {
      if (hits[d] != 1) {
        throw error(error_code::bad_map_structure,
                    "rotation is not a permutation");
      }
    }
    for (auto b : {dg.outer, dg.inner}) {
      if (b && *b >= n) {
        throw error(error_code::bad_map_structure, "basepoint out of range");
      }
    }
  }

  inline bool connected(diagram const& dg) {
    if (dg.size() == 0) {
      return true;
    }
    std::vector<bool>        seen(dg.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto d = stack.back();
      stack.pop_back();
      for (auto e : {dg.darts[d].opposite, dg.darts[d].next}) {
        if (!seen[e]) {
          seen[e] = true;
          ++count;
          stack.push_back(e);
        }
      }
    }
    return count == dg.size();
  }

  inline std::string face_name(std::vector<std::size_t> const& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      s += (i ? " " : "") + std::to_string(f[i]);
    }
    return s + "]";
  }

  // f must be an interior face; throws on a bad relator.
  inline void check_relator(diagram const& dg, std::vector<std::size_t> const& f,
                            graph_product const& gp) {
    if (f.size() != 3 && f.size() != 4) {
      throw error(error_code::bad_face_size,
                  "face " + face_name(f) + " has " + std::to_string(f.size()) +
                      " sides");
    }
    auto l = [&](std::size_t i) { return dg.darts[f[i]].label; };
    if (f.size() == 3) {
      if (l(0).vertex != l(1).vertex || l(1).vertex != l(2).vertex) {
        throw error(error_code::bad_triangle_relator,
                    "face " + face_name(f) + " mixes vertex groups");
      }
      auto p = gp.compose(gp.compose(l(0), l(1)), l(2));
      if (!gp.is_identity(p)) {
        throw error(error_code::bad_triangle_relator,
                    "face " + face_name(f) + " does not read x_g x_h x_gh^-1");
      }
      return;
    }
    if (l(2) != gp.invert(l(0)) || l(3) != gp.invert(l(1)) ||
        !gp.commute(l(0).vertex, l(1).vertex)) {
      throw error(error_code::bad_square_relator,
                  "face " + face_name(f) +
                      " is not a commutator of adjacent vertex groups");
    }
  }
}  // namespace detail

inline diagram validate_diagram(diagram dg, graph_product const& gp) {
  dg.index();
  detail::check_map_structure(dg, gp);
  if (dg.size() == 0) {
    if (dg.inner) {
      throw error(error_code::wrong_boundary_count,
                  "empty diagram cannot be annular");
    }
    return dg;
  }
  if (!dg.outer) {
    throw error(error_code::wrong_boundary_count, "missing outer basepoint");
  }
  if (!detail::connected(dg)) {
    throw error(error_code::not_planar, "map is not connected");
  }
  auto fs = compute_faces(dg);
  long euler = static_cast<long>(fs.vertex_count) -
               static_cast<long>(dg.size() / 2) +
               static_cast<long>(fs.faces.size());
  if (euler != 2) {
    throw error(error_code::not_planar,
                "V - E + F = " + std::to_string(euler));
  }
  auto const outer = fs.face_of[*dg.outer];
  auto const inner = dg.inner ? fs.face_of[*dg.inner] : npos;
  if (inner == outer) {
    throw error(error_code::wrong_boundary_count,
                "inner and outer basepoints lie on one face");
  }
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (f != outer && f != inner) {
      detail::check_relator(dg, fs.faces[f], gp);
    }
  }
  return dg;
}

////////////////////////////////////////////////////////////////////////////
// Boundary
////////////////////////////////////////////////////////////////////////////

struct boundary {
  word                outer;
  std::optional<word> inner;

  bool operator==(boundary const&) const = default;
};

// Darts of the outer boundary in reading order from the basepoint.
inline std::vector<std::size_t> outer_darts(diagram const& dg) {
  if (!dg.outer) {
    return {};
  }
  return face_from(dg, *dg.outer);
}

inline boundary boundary_label(diagram const& dg, graph_product const& gp) {
  boundary b;
  for (auto d : outer_darts(dg)) {
    b.outer.push_back(dg.darts[d].label);
  }
  if (dg.inner) {
    word w;
    for (auto d : face_from(dg, *dg.inner)) {
      w.push_back(dg.darts[d].label);
    }
    b.inner = inverse(w, gp);
  }
  return b;
}

////////////////////////////////////////////////////////////////////////////
// Dual curves
////////////////////////////////////////////////////////////////////////////

enum class curve_shape { circle, tree, other };

inline std::string_view to_string(curve_shape s) {
  switch (s) {
    case curve_shape::circle: return "circle";
    case curve_shape::tree: return "tree";
    case curve_shape::other: return "other";
  }
  return "?";
}

struct dual_curve {
  std::vector<std::size_t> edges;        // least dart of each crossed edge
  std::vector<std::size_t> singularities;  // triangle faces on the curve
  std::size_t              segments = 0;   // arcs inside faces
  curve_shape              shape    = curve_shape::other;
  std::size_t              vertex   = npos;  // label, npos if inconsistent
};

namespace detail {
  struct union_find {
    std::vector<std::size_t> parent;
    explicit union_find(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  };

  inline bool is_boundary_face(diagram const& dg, face_structure const& fs,
                               std::size_t f) {
    return (dg.outer && fs.face_of[*dg.outer] == f) ||
           (dg.inner && fs.face_of[*dg.inner] == f);
  }
}  // namespace detail

inline std::vector<dual_curve> dual_curves(diagram const& dg) {
  std::vector<dual_curve> out;
  if (dg.size() == 0) {
    return out;
  }
  auto const fs   = compute_faces(dg);
  auto       edge = [&](std::size_t d) { return std::min(d, dg.opp(d)); };
  detail::union_find uf(dg.size());
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    auto const& c = fs.faces[f];
    if (detail::is_boundary_face(dg, fs, f)) {
      continue;
    }
    if (c.size() == 4) {
      uf.unite(edge(c[0]), edge(c[2]));
      uf.unite(edge(c[1]), edge(c[3]));
    } else if (c.size() == 3) {
      uf.unite(edge(c[0]), edge(c[1]));
      uf.unite(edge(c[1]), edge(c[2]));
    }
  }

  std::vector<std::size_t> curve_of(dg.size(), npos);
  for (std::size_t d = 0; d < dg.size(); ++d) {
    if (edge(d) != d) {
      continue;
    }
    auto root = uf.find(d);
    if (curve_of[root] == npos) {
      curve_of[root] = out.size();
      out.emplace_back();
    }
    auto& cv = out[curve_of[root]];
    cv.edges.push_back(d);
    auto v = dg.darts[d].label.vertex;
    if (cv.edges.size() == 1) {
      cv.vertex = v;
    } else if (cv.vertex != v) {
      cv.vertex = npos;
    }
  }

  // Incidence multigraph: nodes are crossings and singularities.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links(
      out.size());
  std::vector<std::size_t> degree(dg.size() + fs.faces.size(), 0);
  auto node_of_face = [&](std::size_t f) { return dg.size() + f; };
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    auto const& c = fs.faces[f];
    if (detail::is_boundary_face(dg, fs, f)) {
      continue;
    }
    if (c.size() == 4) {
      for (int k = 0; k < 2; ++k) {
        auto a = edge(c[k]), b = edge(c[k + 2]);
        links[curve_of[uf.find(a)]].emplace_back(a, b);
        ++degree[a];
        ++degree[b];
      }
    } else if (c.size() == 3) {
      auto& cv = out[curve_of[uf.find(edge(c[0]))]];
      cv.singularities.push_back(f);
      for (auto x : c) {
        links[curve_of[uf.find(edge(x))]].emplace_back(edge(x),
                                                       node_of_face(f));
        ++degree[edge(x)];
        ++degree[node_of_face(f)];
      }
    }
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& cv = out[i];
    cv.segments = links[i].size();
    std::vector<std::size_t> nodes = cv.edges;
    for (auto f : cv.singularities) {
      nodes.push_back(node_of_face(f));
    }
    // Connected by construction, so acyclic iff segments = nodes - 1.
    bool two_regular = std::all_of(nodes.begin(), nodes.end(),
                                   [&](std::size_t x) { return degree[x] == 2; });
    if (cv.segments + 1 == nodes.size()) {
      cv.shape = curve_shape::tree;
    } else if (two_regular && cv.singularities.empty()) {
      cv.shape = curve_shape::circle;
    } else {
      cv.shape = curve_shape::other;
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Laws
////////////////////////////////////////////////////////////////////////////

struct law_result {
  std::string              name;
  bool                     pass = true;
  std::vector<std::string> offenders;
};

struct law_report {
  std::vector<law_result> laws;

  bool pass() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](auto const& l) { return l.pass; });
  }
  law_result const* find(std::string_view name) const {
    for (auto const& l : laws) {
      if (l.name == name) {
        return &l;
      }
    }
    return nullptr;
  }
};

// A run of consecutive darts on the outer boundary, by reading position.
struct boundary_segment {
  std::size_t start  = 0;
  std::size_t length = 0;
};

inline law_report check_dual_curve_laws(
    diagram const& dg, graph_product const& gp,
    std::vector<boundary_segment> const& segments = {}) {
  law_report rep;
  auto const curves = dual_curves(dg);
  auto const fs     = compute_faces(dg);

  law_result same_vertex{"same-vertex", true, {}};
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].vertex == npos) {
      same_vertex.pass = false;
      same_vertex.offenders.push_back("curve " + std::to_string(i));
    }
  }

  law_result transverse{"transverse-adjacent", true, {}};
  law_result parallel{"parallel-labels", true, {}};
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    auto const& c = fs.faces[f];
    if (c.size() != 4 || detail::is_boundary_face(dg, fs, f)) {
      continue;
    }
    auto l = [&](std::size_t k) { return dg.darts[c[k]].label; };
    if (!gp.commute(l(0).vertex, l(1).vertex)) {
      transverse.pass = false;
      transverse.offenders.push_back("face " + detail::face_name(c));
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (l(k + 2) != gp.invert(l(k))) {
        parallel.pass = false;
        parallel.offenders.push_back("face " + detail::face_name(c) +
                                     " darts " + std::to_string(c[k]) + "/" +
                                     std::to_string(c[k + 2]));
      }
    }
  }

  law_result shapes{"circles-or-trees", true, {}};
  if (!dg.annular()) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (curves[i].shape == curve_shape::other) {
        shapes.pass = false;
        shapes.offenders.push_back("curve " + std::to_string(i));
      }
    }
  }

  law_result once{"reduced-segment-once", true, {}};
  auto const od = outer_darts(dg);
  if (!segments.empty()) {
    std::vector<std::size_t> curve_of(dg.size(), npos);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (auto e : curves[i].edges) {
        curve_of[e] = i;
        curve_of[dg.opp(e)] = i;
      }
    }
    for (auto const& s : segments) {
      std::vector<std::size_t> hits(curves.size(), 0);
      for (std::size_t k = 0; k < s.length; ++k) {
        auto pos = s.start + k;
        if (pos >= od.size()) {
          throw std::out_of_range("boundary segment past the boundary");
        }
        if (++hits[curve_of[od[pos]]] == 2) {
          once.pass = false;
          once.offenders.push_back("curve " + std::to_string(curve_of[od[pos]]) +
                                   " in segment at " + std::to_string(s.start));
        }
      }
    }
  }

  rep.laws = {same_vertex, transverse, parallel, shapes, once};
  return rep;
}

}  // namespace gp

#endif  // GP_DIAGRAM_HPP_
