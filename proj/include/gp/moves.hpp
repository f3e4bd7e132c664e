#ifndef GP_MOVES_HPP_
#define GP_MOVES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "words.hpp"

namespace gp {

enum class move_kind { inversion, hexagonal, pentagonal, flip, square_reduction };

inline std::string_view to_string(move_kind k) {
  switch (k) {
    case move_kind::inversion: return "inversion";
    case move_kind::hexagonal: return "hexagonal";
    case move_kind::pentagonal: return "pentagonal";
    case move_kind::flip: return "flip";
    case move_kind::square_reduction: return "square-reduction";
  }
  return "?";
}

inline std::optional<move_kind> parse_move_kind(std::string_view s) {
  for (auto k : {move_kind::inversion, move_kind::hexagonal,
                 move_kind::pentagonal, move_kind::flip,
                 move_kind::square_reduction}) {
    if (to_string(k) == s) {
      return k;
    }
  }
  return std::nullopt;
}

// Location conventions, all by dart id:
//   inversion         any dart of the edge
//   flip              a dart whose two sides are distinct triangles
//   square-reduction  d1 of squares [d1 d2 x1 y1], [d2' d1' x2 y2] with the
//                     middle vertex of degree two
//   pentagonal        a triangle dart e whose opposite lies on a square; with
//                     reverse set, any dart leaving an interior vertex of
//                     degree three surrounded by one triangle and two squares
//   hexagonal         any dart leaving an interior vertex of degree three
//                     surrounded by three squares
struct move {
  move_kind   kind;
  std::size_t dart    = 0;
  bool        reverse = false;
};

namespace detail {
  [[noreturn]] inline void mismatch(std::string const& what) {
    throw error(error_code::pattern_mismatch, what);
  }

  // Face-list editing; rebuilds the rotation and renumbers darts on finish.
  class map_editor {
   public:
    explicit map_editor(diagram const& dg) : _fs(compute_faces(dg)) {
      for (auto const& x : dg.darts) {
        _opp.push_back(x.opposite);
        _label.push_back(x.label);
        _fwd.push_back(x.forward);
      }
      _dead.assign(dg.size(), false);
      _faces = _fs.faces;
      _face_alive.assign(_faces.size(), true);
      _outer = dg.outer;
      _inner = dg.inner;
    }

    face_structure const& original() const noexcept { return _fs; }

    bool boundary_face(std::size_t f) const {
      return (_outer && _fs.face_of[*_outer] == f) ||
             (_inner && _fs.face_of[*_inner] == f);
    }

    // Interior face of d, rotated to start at d.
    std::vector<std::size_t> interior_face(std::size_t d,
                                           std::size_t size) const {
      auto f = _fs.face_of[d];
      if (boundary_face(f) || _fs.faces[f].size() != size) {
        mismatch("dart " + std::to_string(d) + " is not on an interior " +
                 std::to_string(size) + "-gon");
      }
      auto c = _fs.faces[f];
      std::rotate(c.begin(), std::find(c.begin(), c.end(), d), c.end());
      return c;
    }

    std::size_t add_edge(syllable l, graph_product const& gp) {
      auto d = _opp.size();
      _opp.push_back(d + 1);
      _opp.push_back(d);
      _label.push_back(l);
      _label.push_back(gp.invert(l));
      _fwd.push_back(true);
      _fwd.push_back(false);
      _dead.push_back(false);
      _dead.push_back(false);
      return d;
    }

    void kill_edge(std::size_t d) {
      _dead[d]       = true;
      _dead[_opp[d]] = true;
    }

    void kill_face_of(std::size_t d) { _face_alive[_fs.face_of[d]] = false; }

    void add_face(std::vector<std::size_t> f) { _new.push_back(std::move(f)); }

    void replace(std::size_t from, std::size_t to) {
      for (auto& f : _faces) {
        std::replace(f.begin(), f.end(), from, to);
      }
      for (auto* b : {&_outer, &_inner}) {
        if (*b && **b == from) {
          *b = to;
        }
      }
    }

    syllable label(std::size_t d) const { return _label[d]; }
    std::size_t opp(std::size_t d) const { return _opp[d]; }
    std::vector<bool>& forward() { return _fwd; }

    diagram finish(graph_product const& gp) const {
      std::vector<std::size_t> id(_opp.size(), npos);
      std::size_t              n = 0;
      for (std::size_t d = 0; d < _opp.size(); ++d) {
        if (!_dead[d]) {
          id[d] = n++;
        }
      }
      std::vector<std::size_t> opp(n);
      std::vector<syllable>    lab(n);
      std::vector<bool>        fwd(n);
      for (std::size_t d = 0; d < _opp.size(); ++d) {
        if (!_dead[d]) {
          opp[id[d]] = id[_opp[d]];
          lab[id[d]] = _label[d];
          fwd[id[d]] = _fwd[d];
        }
      }
      std::vector<std::vector<std::size_t>> faces;
      auto take = [&](std::vector<std::size_t> const& f) {
        std::vector<std::size_t> g;
        for (auto d : f) {
          if (_dead[d]) {
            mismatch("edited face keeps a deleted dart");
          }
          g.push_back(id[d]);
        }
        faces.push_back(std::move(g));
      };
      for (std::size_t f = 0; f < _faces.size(); ++f) {
        if (_face_alive[f]) {
          take(_faces[f]);
        }
      }
      for (auto const& f : _new) {
        take(f);
      }
      auto remap = [&](std::optional<std::size_t> b) -> std::optional<std::size_t> {
        if (!b) {
          return b;
        }
        if (_dead[*b]) {
          mismatch("move would delete a basepoint");
        }
        return id[*b];
      };
      try {
        return validate_diagram(
            from_faces(opp, lab, fwd, faces, remap(_outer), remap(_inner)), gp);
      } catch (error const& e) {
        if (e.code() == error_code::pattern_mismatch) {
          throw;
        }
        mismatch(std::string("result is not a diagram: ") + e.what());
      }
    }

   private:
    face_structure                        _fs;
    std::vector<std::size_t>              _opp;
    std::vector<syllable>                 _label;
    std::vector<bool>                     _fwd;
    std::vector<bool>                     _dead;
    std::vector<std::vector<std::size_t>> _faces;
    std::vector<bool>                     _face_alive;
    std::vector<std::vector<std::size_t>> _new;
    std::optional<std::size_t>            _outer, _inner;
  };

  template <class... Ds>
  void require_distinct(Ds... ds) {
    std::vector<std::size_t> v{ds...};
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      mismatch("degenerate configuration");
    }
  }

  // Outgoing darts around an interior vertex of degree three.
  inline std::vector<std::size_t> degree_three_star(diagram const& dg,
                                                    map_editor const& ed,
                                                    std::size_t       d) {
    std::vector<std::size_t> star{d, dg.darts[d].next,
                                  dg.darts[dg.darts[d].next].next};
    if (dg.darts[star[2]].next != d || star[1] == d || star[2] == d) {
      mismatch("vertex of dart " + std::to_string(d) + " is not of degree 3");
    }
    for (auto x : star) {
      if (ed.boundary_face(ed.original().face_of[x])) {
        mismatch("vertex of dart " + std::to_string(d) + " is on the boundary");
      }
    }
    return star;
  }

  inline diagram do_flip(diagram const& dg, std::size_t d,
                         graph_product const& gp) {
    map_editor ed(dg);
    auto       t1 = ed.interior_face(d, 3);
    auto       t2 = ed.interior_face(dg.opp(d), 3);
    if (ed.original().face_of[d] == ed.original().face_of[dg.opp(d)]) {
      mismatch("both sides of the edge lie on one face");
    }
    auto x1 = t1[1], y1 = t1[2], x2 = t2[1], y2 = t2[2];
    require_distinct(d, dg.opp(d), x1, y1, x2, y2);
    auto l = gp.invert(gp.compose(ed.label(y1), ed.label(x2)));
    if (gp.is_identity(l)) {
      mismatch("new diagonal would carry the identity");
    }
    ed.kill_face_of(d);
    ed.kill_face_of(dg.opp(d));
    ed.kill_edge(d);
    auto n = ed.add_edge(l, gp);
    ed.add_face({y1, x2, n});
    ed.add_face({y2, x1, ed.opp(n)});
    return ed.finish(gp);
  }

  inline diagram do_square_reduction(diagram const& dg, std::size_t d1,
                                     graph_product const& gp) {
    map_editor ed(dg);
    auto       f1 = ed.interior_face(d1, 4);
    auto       d2 = f1[1];
    auto       f2 = ed.interior_face(dg.opp(d2), 4);
    if (f2[1] != dg.opp(d1)) {
      mismatch("squares do not share two consecutive edges");
    }
    if (dg.darts[d2].next != dg.opp(d1) || dg.darts[dg.opp(d1)].next != d2) {
      mismatch("middle vertex is not of degree 2");
    }
    auto x1 = f1[2], y1 = f1[3], x2 = f2[2], y2 = f2[3];
    require_distinct(d1, d2, dg.opp(d1), dg.opp(d2), x1, y1, x2, y2,
                     dg.opp(x1), dg.opp(y1), dg.opp(x2), dg.opp(y2));
    ed.kill_face_of(d1);
    ed.kill_face_of(dg.opp(d2));
    auto ax2 = dg.opp(x2), ay2 = dg.opp(y2);
    ed.kill_edge(d1);
    ed.kill_edge(d2);
    ed.kill_edge(x2);
    ed.kill_edge(y2);
    ed.replace(ax2, y1);
    ed.replace(ay2, x1);
    return ed.finish(gp);
  }

  inline diagram do_pentagonal(diagram const& dg, std::size_t e,
                               graph_product const& gp) {
    map_editor ed(dg);
    auto       t = ed.interior_face(e, 3);
    auto       q = ed.interior_face(dg.opp(e), 4);
    auto t1 = t[1], t2 = t[2], f = q[1], e2 = q[2], f2 = q[3];
    require_distinct(e, dg.opp(e), t1, t2, f, e2, f2);
    ed.kill_face_of(e);
    ed.kill_face_of(dg.opp(e));
    ed.kill_edge(e);
    auto yz = ed.add_edge(ed.label(t1), gp);
    auto rz = ed.add_edge(ed.label(f), gp);
    auto xz = ed.add_edge(gp.invert(ed.label(t2)), gp);
    ed.add_face({e2, yz, ed.opp(xz)});
    ed.add_face({f2, t1, rz, ed.opp(yz)});
    ed.add_face({t2, f, xz, ed.opp(rz)});
    return ed.finish(gp);
  }

  inline diagram do_pentagonal_reverse(diagram const& dg, std::size_t z,
                                       graph_product const& gp) {
    map_editor ed(dg);
    auto       star = degree_three_star(dg, ed, z);
    auto const& fs  = ed.original();
    std::size_t zx  = npos;
    for (auto x : star) {
      if (fs.faces[fs.face_of[x]].size() == 3) {
        if (zx != npos) {
          mismatch("more than one triangle at the vertex");
        }
        zx = x;
      }
    }
    if (zx == npos) {
      mismatch("no triangle at the vertex");
    }
    auto tp = ed.interior_face(zx, 3);  // [ZX e' YZ]
    auto e2 = tp[1], yz = tp[2];
    auto s1 = ed.interior_face(dg.opp(yz), 4);  // [ZY f' t1 RZ]
    auto f2 = s1[1], t1 = s1[2], rz = s1[3];
    auto s2 = ed.interior_face(dg.opp(rz), 4);  // [ZR t2 f XZ]
    auto t2 = s2[1], f = s2[2];
    if (s2[3] != dg.opp(zx)) {
      mismatch("faces around the vertex do not close up");
    }
    require_distinct(e2, f2, t1, t2, f, zx, yz, rz, dg.opp(zx), dg.opp(yz),
                     dg.opp(rz));
    ed.kill_face_of(zx);
    ed.kill_face_of(dg.opp(yz));
    ed.kill_face_of(dg.opp(rz));
    ed.kill_edge(zx);
    ed.kill_edge(yz);
    ed.kill_edge(rz);
    auto e = ed.add_edge(ed.label(e2), gp);
    ed.add_face({e, t1, t2});
    ed.add_face({ed.opp(e), f, e2, f2});
    return ed.finish(gp);
  }

  inline diagram do_hexagonal(diagram const& dg, std::size_t c0,
                              graph_product const& gp) {
    map_editor ed(dg);
    auto       c = degree_three_star(dg, ed, c0);
    std::vector<std::size_t> h1(3), h2(3);
    for (std::size_t i = 0; i < 3; ++i) {
      auto f = ed.interior_face(c[i], 4);  // [c_i h_i1 h_i2 c_{i+1}']
      if (f[3] != dg.opp(c[(i + 1) % 3])) {
        mismatch("faces around the vertex do not close up");
      }
      h1[i] = f[1];
      h2[i] = f[2];
    }
    require_distinct(c[0], c[1], c[2], dg.opp(c[0]), dg.opp(c[1]),
                     dg.opp(c[2]), h1[0], h1[1], h1[2], h2[0], h2[1], h2[2]);
    for (auto x : c) {
      ed.kill_face_of(x);
    }
    for (auto x : c) {
      ed.kill_edge(x);
    }
    std::vector<std::size_t> m(3);
    for (std::size_t i = 0; i < 3; ++i) {
      m[i] = ed.add_edge(gp.invert(ed.label(h1[(i + 1) % 3])), gp);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      auto j = (i + 1) % 3;
      ed.add_face({h2[i], h1[j], ed.opp(m[j]), m[i]});
    }
    return ed.finish(gp);
  }
}  // namespace detail

inline diagram apply_move(diagram const& dg, move const& mv,
                          graph_product const& gp) {
  if (mv.dart >= dg.size()) {
    detail::mismatch("dart " + std::to_string(mv.dart) + " does not exist");
  }
  switch (mv.kind) {
    case move_kind::inversion: {
      diagram out = dg;
      out.darts[mv.dart].forward = !out.darts[mv.dart].forward;
      out.darts[dg.opp(mv.dart)].forward = !out.darts[dg.opp(mv.dart)].forward;
      out.index();
      return out;
    }
    case move_kind::flip: return detail::do_flip(dg, mv.dart, gp);
    case move_kind::square_reduction:
      return detail::do_square_reduction(dg, mv.dart, gp);
    case move_kind::pentagonal:
      return mv.reverse ? detail::do_pentagonal_reverse(dg, mv.dart, gp)
                        : detail::do_pentagonal(dg, mv.dart, gp);
    case move_kind::hexagonal: return detail::do_hexagonal(dg, mv.dart, gp);
  }
  detail::mismatch("unknown move");
}

// Every (kind, dart, reverse) at which apply_move succeeds.
inline std::vector<move> applicable_moves(diagram const& dg,
                                          graph_product const& gp) {
  std::vector<move> out;
  for (auto k : {move_kind::inversion, move_kind::hexagonal,
                 move_kind::pentagonal, move_kind::flip,
                 move_kind::square_reduction}) {
    for (bool rev : {false, true}) {
      if (rev && k != move_kind::pentagonal) {
        continue;
      }
      for (std::size_t d = 0; d < dg.size(); ++d) {
        move mv{k, d, rev};
        try {
          (void)apply_move(dg, mv, gp);
          out.push_back(mv);
        } catch (error const& e) {
          if (e.code() != error_code::pattern_mismatch) {
            throw;
          }
        }
      }
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Construction
////////////////////////////////////////////////////////////////////////////

// The square stack realizing a sequence of commuting transpositions. Swap k
// exchanges the syllables at positions k and k + 1 of the current word. The
// boundary reads w1 followed by the inverse of the final word.
inline diagram shuffle_diagram(word const& w1, std::vector<std::size_t> const& swaps,
                               graph_product const& gp) {
  std::vector<std::size_t>              opp;
  std::vector<syllable>                 lab;
  std::vector<bool>                     fwd;
  std::vector<std::vector<std::size_t>> faces;
  auto add_edge = [&](syllable l) {
    auto d = opp.size();
    opp.push_back(d + 1);
    opp.push_back(d);
    lab.push_back(l);
    lab.push_back(gp.invert(l));
    fwd.push_back(true);
    fwd.push_back(false);
    return d;
  };
  for (auto const& s : w1) {
    gp.check(s);
    if (gp.is_identity(s)) {
      throw error(error_code::identity_edge_label, format_syllable(s, gp));
    }
  }
  word                     cur = w1;
  std::vector<std::size_t> base, front;
  for (auto const& s : w1) {
    base.push_back(add_edge(s));
  }
  front = base;
  for (auto k : swaps) {
    if (k + 1 >= cur.size() || !gp.commute(cur[k].vertex, cur[k + 1].vertex)) {
      throw error(error_code::illegal_swap, "swap at " + std::to_string(k));
    }
    auto n1 = add_edge(cur[k + 1]);
    auto n2 = add_edge(cur[k]);
    faces.push_back({n1, n2, opp[front[k + 1]], opp[front[k]]});
    front[k]     = n1;
    front[k + 1] = n2;
    std::swap(cur[k], cur[k + 1]);
  }
  if (w1.empty()) {
    return validate_diagram(diagram{}, gp);
  }
  std::vector<std::size_t> outer = base;
  for (auto it = front.rbegin(); it != front.rend(); ++it) {
    outer.push_back(opp[*it]);
  }
  faces.push_back(outer);
  return validate_diagram(
      from_faces(opp, lab, fwd, faces, base.front(), std::nullopt), gp);
}

}  // namespace gp

#endif  // GP_MOVES_HPP_
