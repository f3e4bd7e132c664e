#ifndef GP_TESTS_FIXTURES_HPP_
#define GP_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gp/gp.hpp>

#ifndef GP_DATA_DIR
#  define GP_DATA_DIR "data"
#endif

namespace fx {

using namespace gp;

inline std::string data(std::string const& name) {
  return std::string(GP_DATA_DIR) + "/" + name;
}

inline graph_product load(std::string const& name) {
  return load_group_spec(data(name)).product;
}

inline graph_product gamma_ex() { return load("gamma_ex.json"); }

inline graph_product make(std::vector<std::string> const&                      names,
                          std::vector<std::pair<std::string, std::string>> const& edges,
                          std::vector<vertex_group>                                groups) {
  return graph_product(validate_graph(names, edges), std::move(groups));
}

// Three pairwise commuting cyclic(3) vertices: room for every move kind.
inline graph_product triangle3() {
  return make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}},
              {vertex_group::cyclic(3), vertex_group::cyclic(3),
               vertex_group::cyclic(3)});
}

inline word w(char const* text, graph_product const& gp) {
  return parse_word(text, gp);
}

// Every syllable, identity included.
inline std::vector<syllable> alphabet(graph_product const& gp,
                                      bool with_identity = true) {
  std::vector<syllable> out;
  for (std::size_t v = 0; v < gp.size(); ++v) {
    auto const& g = gp.group(v);
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(g.size()); ++x) {
      if (with_identity || !g.is_identity(x)) {
        out.push_back({v, x});
      }
    }
  }
  return out;
}

// All words over the alphabet with at most max_len syllables.
inline std::vector<word> all_words(std::vector<syllable> const& alpha,
                                   std::size_t                  max_len) {
  std::vector<word> out{{}};
  std::size_t       from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i) {
      for (auto const& s : alpha) {
        word n = out[i];
        n.push_back(s);
        out.push_back(std::move(n));
      }
    }
    from = to;
  }
  return out;
}

inline word random_word(std::mt19937_64& rng, std::vector<syllable> const& alpha,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
  word out(len(rng));
  for (auto& s : out) {
    s = alpha[pick(rng)];
  }
  return out;
}

// A reduced word with random shuffles applied; the swap list is legal for it.
inline std::pair<word, std::vector<std::size_t>> random_shuffle(
    std::mt19937_64& rng, graph_product const& gp, std::size_t max_len,
    std::size_t swaps) {
  auto alpha = alphabet(gp, false);
  word r;
  while (r.empty()) {
    r = reduce(random_word(rng, alpha, max_len), gp);
  }
  word                     cur = r;
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < swaps && cur.size() > 1; ++t) {
    std::vector<std::size_t> legal;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (gp.commute(cur[k].vertex, cur[k + 1].vertex)) {
        legal.push_back(k);
      }
    }
    if (legal.empty()) {
      break;
    }
    auto k = legal[std::uniform_int_distribution<std::size_t>(
        0, legal.size() - 1)(rng)];
    out.push_back(k);
    std::swap(cur[k], cur[k + 1]);
  }
  return {r, out};
}

////////////////////////////////////////////////////////////////////////////
// Gluing cells onto the outer boundary
////////////////////////////////////////////////////////////////////////////

struct map_parts {
  std::vector<std::size_t>              opp;
  std::vector<syllable>                 lab;
  std::vector<bool>                     fwd;
  std::vector<std::vector<std::size_t>> faces;
  std::size_t                           outer_face = 0;
  std::optional<std::size_t>            outer, inner;

  explicit map_parts(diagram const& dg) : outer(dg.outer), inner(dg.inner) {
    auto fs = compute_faces(dg);
    for (auto const& d : dg.darts) {
      opp.push_back(d.opposite);
      lab.push_back(d.label);
      fwd.push_back(d.forward);
    }
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
      faces.push_back(face_from(dg, fs.faces[f].front()));
    }
    outer_face = fs.face_of.at(*dg.outer);
  }

  std::size_t edge(syllable l, graph_product const& gp) {
    auto d = opp.size();
    opp.push_back(d + 1);
    opp.push_back(d);
    lab.push_back(l);
    lab.push_back(gp.invert(l));
    fwd.push_back(true);
    fwd.push_back(false);
    return d;
  }

  // Replaces dart d on the outer face by the path ps.
  void reroute(std::size_t d, std::vector<std::size_t> const& ps) {
    auto& f  = faces[outer_face];
    auto  it = std::find(f.begin(), f.end(), d);
    if (outer == d) {
      outer = ps.front();
    }
    it = f.erase(it);
    f.insert(it, ps.begin(), ps.end());
  }

  diagram build(graph_product const& gp) const {
    return validate_diagram(from_faces(opp, lab, fwd, faces, outer, inner), gp);
  }
};

// Outer dart d labelled x becomes a triangle bounded outside by y, y^-1 x.
inline diagram glue_triangle(diagram const& dg, std::size_t d, syllable y,
                             graph_product const& gp) {
  map_parts m(dg);
  auto      x = m.lab[d];
  auto      p = m.edge(y, gp);
  auto      q = m.edge(gp.compose(gp.invert(y), x), gp);
  m.reroute(d, {p, q});
  m.faces.push_back({d, m.opp[q], m.opp[p]});
  return m.build(gp);
}

// Outer dart d labelled x becomes a square bounded outside by y, x, y^-1.
inline diagram glue_square(diagram const& dg, std::size_t d, syllable y,
                           graph_product const& gp) {
  map_parts m(dg);
  auto      x = m.lab[d];
  auto      p = m.edge(y, gp);
  auto      q = m.edge(x, gp);
  auto      r = m.edge(gp.invert(y), gp);
  m.reroute(d, {p, q, r});
  m.faces.push_back({d, m.opp[r], m.opp[q], m.opp[p]});
  return m.build(gp);
}

// A single edge: the smallest nonempty disc diagram.
inline diagram segment(syllable x, graph_product const& gp) {
  return shuffle_diagram(word{x}, {}, gp);
}

// Two squares around a hole: boundary x y x^-1 y^-1 outside, same inside
// up to reading direction.
inline diagram annulus(syllable x, syllable y, graph_product const& gp) {
  std::vector<std::size_t> opp;
  std::vector<syllable>    lab;
  std::vector<bool>        fwd;
  auto                     edge = [&](syllable l) {
    auto d = opp.size();
    opp.push_back(d + 1);
    opp.push_back(d);
    lab.push_back(l);
    lab.push_back(gp.invert(l));
    fwd.push_back(true);
    fwd.push_back(false);
    return d;
  };
  // Outer ring o0 o1 (x then y-side), inner ring i0 i1, spokes s0 s1.
  auto o0 = edge(x), o1 = edge(x);
  auto i0 = edge(x), i1 = edge(x);
  auto s0 = edge(y), s1 = edge(y);
  std::vector<std::vector<std::size_t>> faces{
      {o0, o1},
      {opp[i1], opp[i0]},
      {opp[o0], s0, i0, opp[s1]},
      {opp[o1], s1, i1, opp[s0]},
  };
  return validate_diagram(from_faces(opp, lab, fwd, faces, o0, opp[i1]), gp);
}

}  // namespace fx

#endif  // GP_TESTS_FIXTURES_HPP_
