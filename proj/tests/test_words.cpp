#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace gp;
using fx::w;

namespace {

graph_product single(std::int64_t order) {
  return fx::make({"u"}, {}, {vertex_group::cyclic(order)});
}

}  // namespace

TEST_CASE("parse_word", "[words]") {
  auto gp = fx::load("frobenius.json");
  auto x  = w("a:1 c:r2 a:1", gp);
  REQUIRE(x.size() == 3);
  CHECK(x[1].vertex == 2);
  CHECK(gp.group(2).format_atom(x[1].value) == "r2");
  CHECK(w("", gp).empty());
  CHECK(format_word(x, gp) == "a:1 c:r2 a:1");

  auto code = [&](char const* t) {
    try {
      parse_word(t, gp);
    } catch (error const& e) {
      return e.code();
    }
    return error_code::trivial_group;
  };
  CHECK(code("z:1") == error_code::unknown_vertex);
  CHECK(code("a:1  b:1") == error_code::syntax_error);
  CHECK(code("a1") == error_code::syntax_error);
  CHECK(code("c:q") == error_code::unknown_element);
}

TEST_CASE("reduce", "[words]") {
  auto u = single(3);
  CHECK(reduce(w("u:1 u:2", u), u).empty());

  auto gp = fx::gamma_ex();
  CHECK(reduce(w("a:1 c:1 a:1", gp), gp) == w("c:1", gp));
  CHECK(oracle_equal(w("a:1 c:1 a:1", gp), w("c:1", gp), gp));
  CHECK(reduce(w("a:1 b:1 a:1", gp), gp) == w("a:1 b:1 a:1", gp));
  // leftmost merge: the c syllables fuse across a
  CHECK(reduce(w("c:1 a:1 c:1 b:1", gp), gp) == w("c:2 a:1 b:1", gp));

  std::mt19937_64 rng(11);
  auto            alpha = fx::alphabet(gp);
  for (int t = 0; t < 500; ++t) {
    auto x = fx::random_word(rng, alpha, 7);
    auto r = reduce(x, gp);
    CHECK(is_graphically_reduced(r, gp));
    CHECK(reduce(r, gp) == r);
    CHECK(oracle_equal(x, r, gp));
  }
}

TEST_CASE("is_graphically_reduced", "[words]") {
  auto gp = fx::gamma_ex();
  CHECK(is_graphically_reduced({}, gp));
  CHECK_FALSE(is_graphically_reduced(w("a:1 c:1 a:1", gp), gp));
  CHECK(is_graphically_reduced(w("a:1 b:1 a:1", gp), gp));
  CHECK_FALSE(is_graphically_reduced(w("a:0", gp), gp));
}

TEST_CASE("canonical_form", "[words]") {
  auto gp = fx::gamma_ex();
  CHECK(canonical_form(w("c:1 b:1", gp), gp) == w("b:1 c:1", gp));
  auto u = single(3);
  CHECK(canonical_form(w("u:1 u:2", u), u).empty());

  auto s4 = fx::load("shuffle4.json");
  auto w1 = w("u1:1 u2:1 u3:1 u4:1", s4);
  auto w2 = w("u3:1 u2:1 u4:1 u1:1", s4);
  CHECK(canonical_form(w1, s4) == canonical_form(w2, s4));
  CHECK(oracle_equal(w1, w2, s4));

  // canonical form is the lex-least member of the raw closure of a
  // reduced word, restricted to words of the same length
  std::mt19937_64 rng(5);
  auto            alpha = fx::alphabet(s4, false);
  for (int t = 0; t < 300; ++t) {
    auto r = reduce(fx::random_word(rng, alpha, 6), s4);
    word best;
    bool first = true;
    for (auto const& s : rewrite_closure(r, s4)) {
      auto x = detail::decode(s);
      if (x.size() == r.size() && (first || x < best)) {
        best  = x;
        first = false;
      }
    }
    CHECK(canonical_form(r, s4) == best);
  }
}

TEST_CASE("equal", "[words]") {
  auto gp = fx::gamma_ex();
  auto x  = w("a:1 c:2 b:1", gp);
  CHECK(equal(x, x, gp));
  CHECK_FALSE(equal(w("a:1 b:1", gp), w("b:1 a:1", gp), gp));
  CHECK(equal(w("a:1 c:1", gp), w("c:1 a:1", gp), gp));
  CHECK(equal(concat(x, inverse(x, gp)), {}, gp));
}

TEST_CASE("word_length", "[words]") {
  auto gp = fx::gamma_ex();
  CHECK(word_length({}, gp) == 0);
  auto c5 = single(5);
  CHECK(word_length(w("u:3", c5), c5) == 2);
  CHECK(word_length(w("a:1 b:1 a:1", gp), gp) == 3);
  cayley_ball ball(gp);
  ball.extend(3);
  CHECK(ball.distance_of(w("a:1 b:1 a:1", gp)) == 3u);
}
