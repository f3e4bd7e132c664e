#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace gp;
using fx::w;

namespace {

std::size_t interior_faces(diagram const& dg) {
  return compute_faces(dg).faces.size() - 1 - (dg.annular() ? 1 : 0);
}

std::optional<move> first_move(diagram const& dg, graph_product const& gp,
                               move_kind k, bool reverse = false) {
  for (auto const& m : applicable_moves(dg, gp)) {
    if (m.kind == k && m.reverse == reverse) {
      return m;
    }
  }
  return std::nullopt;
}

error_code code_of(auto f) {
  try {
    f();
  } catch (error const& e) {
    return e.code();
  }
  return error_code::syntax_error;
}

// Single triangle in cyclic(3) over vertex c of gamma_ex.
diagram triangle_tile(graph_product const& gp) {
  auto seg = fx::segment(w("c:1", gp).front(), gp);
  return fx::glue_triangle(seg, *seg.outer, w("c:2", gp).front(), gp);
}

}  // namespace

TEST_CASE("validate_diagram", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto sq = shuffle_diagram(w("a:1 c:1", gp), {0}, gp);
  CHECK(interior_faces(sq) == 1);

  auto tri = triangle_tile(gp);
  CHECK(interior_faces(tri) == 1);
  CHECK(compute_faces(tri).faces.size() == 2);

  CHECK(code_of([&] { shuffle_diagram(w("a:1 b:1", gp), {0}, gp); }) ==
        error_code::illegal_swap);
  CHECK(code_of([&] { shuffle_diagram(w("a:0", gp), {}, gp); }) ==
        error_code::identity_edge_label);

  // Relabel the square's c edge as b: a and b do not commute.
  auto bad = sq;
  for (auto& d : bad.darts) {
    if (d.label.vertex == 2) {
      d.label.vertex = 1;
      d.label.value  = 1;
    }
  }
  CHECK(code_of([&] { validate_diagram(bad, gp); }) ==
        error_code::bad_square_relator);

  // Breaking the triangle relator.
  auto t2 = tri;
  t2.darts[0].label.value = gp.group(2).invert(t2.darts[0].label.value);
  t2.darts[1].label.value = gp.group(2).invert(t2.darts[1].label.value);
  CHECK(code_of([&] { validate_diagram(t2, gp); }) ==
        error_code::bad_triangle_relator);

  auto nobase = sq;
  nobase.outer.reset();
  CHECK(code_of([&] { validate_diagram(nobase, gp); }) ==
        error_code::wrong_boundary_count);

  auto ann = fx::annulus(w("a:1", gp).front(), w("c:1", gp).front(), gp);
  CHECK(ann.annular());
  CHECK(interior_faces(ann) == 2);
}

TEST_CASE("boundary_label", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto sq = shuffle_diagram(w("a:1 c:1", gp), {0}, gp);
  CHECK(boundary_label(sq, gp).outer == w("a:1 c:1 a:1 c:2", gp));

  auto tri = triangle_tile(gp);
  auto b   = boundary_label(tri, gp).outer;
  REQUIRE(b.size() == 3);
  CHECK(reduce(b, gp).empty());
  for (auto const& s : b) {
    CHECK(s.vertex == 2);
  }

  auto ann = fx::annulus(w("a:1", gp).front(), w("c:1", gp).front(), gp);
  auto ab  = boundary_label(ann, gp);
  REQUIRE(ab.inner);
  // the outer ring is conjugate to the inner one through the spokes
  CHECK(are_conjugate(ab.outer, *ab.inner, gp));

  auto s4 = fx::load("shuffle4.json");
  auto w1 = w("u1:1 u2:1 u3:1 u4:1", s4);
  auto fig = shuffle_diagram(w1, {0, 1, 2, 0}, s4);
  CHECK(interior_faces(fig) == 4);
  CHECK(boundary_label(fig, s4).outer ==
        concat(w1, inverse(w("u3:1 u2:1 u4:1 u1:1", s4), s4)));

  auto flat = shuffle_diagram(w1, {}, s4);
  CHECK(interior_faces(flat) == 0);
  CHECK(boundary_label(flat, s4).outer == concat(w1, inverse(w1, s4)));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    auto [r, swaps] = fx::random_shuffle(rng, s4, 6, 8);
    auto dg         = shuffle_diagram(r, swaps, s4);
    auto out        = boundary_label(dg, s4).outer;
    REQUIRE(out.size() == 2 * r.size());
    word w2(out.begin() + static_cast<std::ptrdiff_t>(r.size()), out.end());
    CHECK(word(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r.size())) == r);
    CHECK(equal(inverse(w2, s4), r, s4));
  }
}

TEST_CASE("dual_curves", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto sq = shuffle_diagram(w("a:1 c:1", gp), {0}, gp);
  auto cs = dual_curves(sq);
  REQUIRE(cs.size() == 2);
  for (auto const& c : cs) {
    CHECK(c.singularities.empty());
    CHECK(c.shape == curve_shape::tree);
    CHECK(c.edges.size() == 2);
  }
  CHECK(gp.commute(cs[0].vertex, cs[1].vertex));
  CHECK(cs[0].vertex != cs[1].vertex);

  auto tri = dual_curves(triangle_tile(gp));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].singularities.size() == 1);
  CHECK(tri[0].shape == curve_shape::tree);
  CHECK(tri[0].edges.size() == 3);
  CHECK(tri[0].vertex == 2);

  // The annulus carries one circle through both squares.
  auto ann = fx::annulus(w("a:1", gp).front(), w("c:1", gp).front(), gp);
  std::size_t circles = 0;
  for (auto const& c : dual_curves(ann)) {
    circles += c.shape == curve_shape::circle;
  }
  CHECK(circles == 1);
}

TEST_CASE("check_dual_curve_laws", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto sq = shuffle_diagram(w("a:1 c:1", gp), {0}, gp);
  CHECK(check_dual_curve_laws(sq, gp, {{0, 2}, {2, 2}}).pass());
  CHECK(check_dual_curve_laws(triangle_tile(gp), gp).pass());

  // Same map, but the second c edge keeps c:1 where c:2 belongs.
  auto f  = compute_faces(sq);
  auto in = f.face_of[*sq.outer] == 0 ? f.faces[1] : f.faces[0];
  auto bad = sq;
  for (std::size_t k = 0; k < 4; ++k) {
    auto d = in[k];
    if (bad.darts[d].label.vertex == 2) {
      bad.darts[d].label.value          = 1;
      bad.darts[bad.opp(d)].label.value = 2;
    }
  }
  auto rep = check_dual_curve_laws(bad, gp);
  CHECK_FALSE(rep.pass());
  auto const* par = rep.find("parallel-labels");
  REQUIRE(par);
  CHECK_FALSE(par->pass);
  CHECK_FALSE(par->offenders.empty());
  CHECK(rep.find("same-vertex")->pass);

  auto s4 = fx::load("shuffle4.json");
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    auto [r, swaps] = fx::random_shuffle(rng, s4, 6, 10);
    auto dg         = shuffle_diagram(r, swaps, s4);
    auto rep2       = check_dual_curve_laws(dg, s4, {{0, r.size()}, {r.size(), r.size()}});
    CHECK(rep2.pass());
  }
}

TEST_CASE("elementary moves", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto a1 = w("a:1", gp).front();
  auto c1 = w("c:1", gp).front();
  auto c2 = w("c:2", gp).front();

  SECTION("inversion") {
    auto dg = shuffle_diagram(w("a:1 c:1 b:1", gp), {0}, gp);
    for (std::size_t d = 0; d < dg.size(); ++d) {
      auto out = apply_move(dg, {move_kind::inversion, d}, gp);
      CHECK(out.darts[d].forward != dg.darts[d].forward);
      CHECK(boundary_label(out, gp) == boundary_label(dg, gp));
      CHECK(apply_move(out, {move_kind::inversion, d}, gp).darts[d].forward ==
            dg.darts[d].forward);
    }
  }

  SECTION("pentagonal and its reverse") {
    auto seg = fx::segment(a1, gp);
    auto sq  = fx::glue_square(seg, *seg.outer, c1, gp);
    // glue a triangle onto the c:1 side of the square
    std::size_t side = npos;
    for (auto d : outer_darts(sq)) {
      if (sq.darts[d].label == c1) side = d;
    }
    REQUIRE(side != npos);
    auto dg = fx::glue_triangle(sq, side, c2, gp);
    auto m  = first_move(dg, gp, move_kind::pentagonal);
    REQUIRE(m);
    auto out = apply_move(dg, *m, gp);
    CHECK(boundary_label(out, gp) == boundary_label(dg, gp));
    CHECK(interior_faces(out) == interior_faces(dg) + 1);
    auto back = first_move(out, gp, move_kind::pentagonal, true);
    REQUIRE(back);
    auto again = apply_move(out, *back, gp);
    CHECK(boundary_label(again, gp) == boundary_label(dg, gp));
    CHECK(interior_faces(again) == interior_faces(dg));
  }

  SECTION("flip") {
    // two C3 triangles on one edge always force an identity diagonal
    auto c5  = fx::make({"u"}, {}, {vertex_group::cyclic(5)});
    auto seg = fx::segment(w("u:1", c5).front(), c5);
    auto t   = fx::glue_triangle(seg, *seg.outer, w("u:2", c5).front(), c5);
    auto p   = outer_darts(t)[0];
    auto dg  = fx::glue_triangle(t, p, w("u:3", c5).front(), c5);
    auto m   = first_move(dg, c5, move_kind::flip);
    REQUIRE(m);
    auto out = apply_move(dg, *m, c5);
    CHECK(boundary_label(out, c5) == boundary_label(dg, c5));
    CHECK(interior_faces(out) == 2);
    CHECK(check_dual_curve_laws(out, c5).pass());
  }

  SECTION("square-reduction") {
    auto dg = shuffle_diagram(w("a:1 c:1", gp), {0, 0}, gp);
    CHECK(interior_faces(dg) == 2);
    auto m = first_move(dg, gp, move_kind::square_reduction);
    REQUIRE(m);
    auto out = apply_move(dg, *m, gp);
    CHECK(boundary_label(out, gp) == boundary_label(dg, gp));
    CHECK(interior_faces(out) == 0);
  }

  SECTION("hexagonal") {
    auto t3 = fx::triangle3();
    auto dg = shuffle_diagram(w("x:1 y:1 z:1", t3), {0, 1, 0}, t3);
    auto m  = first_move(dg, t3, move_kind::hexagonal);
    REQUIRE(m);
    auto out = apply_move(dg, *m, t3);
    CHECK(boundary_label(out, t3) == boundary_label(dg, t3));
    CHECK(interior_faces(out) == 3);
    auto other = shuffle_diagram(w("x:1 y:1 z:1", t3), {1, 0, 1}, t3);
    CHECK(boundary_label(other, t3) == boundary_label(dg, t3));
  }

  SECTION("mismatch") {
    auto dg = shuffle_diagram(w("a:1 c:1", gp), {0}, gp);
    CHECK(code_of([&] { apply_move(dg, {move_kind::flip, 0}, gp); }) ==
          error_code::pattern_mismatch);
    CHECK(code_of([&] { apply_move(dg, {move_kind::hexagonal, 99}, gp); }) ==
          error_code::pattern_mismatch);
    CHECK_FALSE(parse_move_kind("twist"));
    CHECK(parse_move_kind("square-reduction") == move_kind::square_reduction);
  }
}

TEST_CASE("diagram files", "[diagram]") {
  auto gp = fx::gamma_ex();
  auto dg = shuffle_diagram(w("a:1 c:1 b:1", gp), {0}, gp);
  auto j  = diagram_to_json(dg, gp);
  auto back = validate_diagram(parse_diagram(j, gp), gp);
  CHECK(boundary_label(back, gp) == boundary_label(dg, gp));

  auto loaded = detail::read_json_file(fx::data("diagrams/square.json"));
  auto spec   = load_group_spec(fx::data("gamma_ex.json"));
  auto sq     = validate_diagram(parse_diagram(loaded, spec.product), spec.product);
  CHECK(boundary_label(sq, gp).outer == w("a:1 c:1 a:1 c:2", gp));
}
