#ifndef GP_SPEC_IO_HPP_
#define GP_SPEC_IO_HPP_

// JSON readers and writers for group specs and diagrams.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diagram.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "vertex_group.hpp"
#include "words.hpp"

namespace gp {

struct spec_limits {
  std::optional<std::size_t> bfs_states;
  std::optional<std::size_t> oracle_cap;
};

struct group_spec {
  graph_product product;
  spec_limits   limits;
};

namespace detail {
  using json = nlohmann::json;

  [[noreturn]] inline void bad_spec(std::string const& what) {
    throw error(error_code::bad_spec_file, what);
  }

  template <class T>
  T field(json const& j, char const* key, std::string const& where) {
    if (!j.is_object() || !j.contains(key)) {
      bad_spec(where + ": missing \"" + key + "\"");
    }
    try {
      return j.at(key).get<T>();
    } catch (json::exception const&) {
      bad_spec(where + ": \"" + key + "\" has the wrong type");
    }
  }

  inline vertex_group parse_group(json const& g, std::string const& where) {
    auto kind = field<std::string>(g, "kind", where);
    if (kind == "cyclic") {
      return vertex_group::cyclic(field<std::int64_t>(g, "order", where));
    }
    if (kind == "integers") {
      return vertex_group::integers();
    }
    if (kind == "table") {
      return vertex_group::table(
          field<std::vector<std::string>>(g, "elements", where),
          field<std::vector<std::vector<std::size_t>>>(g, "table", where),
          field<std::vector<std::string>>(g, "generators", where));
    }
    throw error(error_code::unsupported_kind, where + ": kind '" + kind + "'");
  }

  inline json group_to_json(vertex_group const& g) {
    switch (g.kind()) {
      case group_kind::cyclic: return {{"kind", "cyclic"}, {"order", g.order()}};
      case group_kind::integers: return {{"kind", "integers"}};
      case group_kind::table: {
        std::vector<std::string> gens;
        for (auto i : g.generators()) {
          gens.push_back(g.element_names()[i]);
        }
        return {{"kind", "table"},
                {"elements", g.element_names()},
                {"table", g.table_data()},
                {"generators", gens}};
      }
    }
    return {};
  }

  inline json read_json_file(std::filesystem::path const& p) {
    std::ifstream in(p);
    if (!in) {
      bad_spec("cannot open '" + p.string() + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      bad_spec(p.string() + ": " + e.what());
    }
  }
}  // namespace detail

inline group_spec parse_group_spec(nlohmann::json const& j) {
  using detail::field;
  if (!j.is_object()) {
    detail::bad_spec("spec must be an object");
  }
  auto const& vs = j.contains("vertices") ? j.at("vertices") : nlohmann::json();
  if (!vs.is_array()) {
    detail::bad_spec("\"vertices\" must be an array");
  }
  std::vector<std::string>  names;
  std::vector<vertex_group> groups;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto where = "vertices[" + std::to_string(i) + "]";
    names.push_back(field<std::string>(vs[i], "name", where));
    if (!vs[i].contains("group")) {
      detail::bad_spec(where + ": missing \"group\"");
    }
    groups.push_back(detail::parse_group(vs[i].at("group"), where + ".group"));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    auto const& es = j.at("edges");
    if (!es.is_array()) {
      detail::bad_spec("\"edges\" must be an array");
    }
    for (auto const& e : es) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string()) {
        detail::bad_spec("each edge must be a pair of vertex names");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  group_spec out{graph_product(validate_graph(names, edges), std::move(groups)),
                 {}};
  if (j.contains("limits")) {
    auto const& l = j.at("limits");
    if (l.contains("bfs_states")) {
      out.limits.bfs_states = field<std::size_t>(l, "bfs_states", "limits");
    }
    if (l.contains("oracle_cap")) {
      out.limits.oracle_cap = field<std::size_t>(l, "oracle_cap", "limits");
    }
  }
  return out;
}

inline group_spec load_group_spec(std::filesystem::path const& p) {
  return parse_group_spec(detail::read_json_file(p));
}

inline nlohmann::json group_spec_to_json(graph_product const& gp) {
  nlohmann::json vs = nlohmann::json::array();
  for (std::size_t v = 0; v < gp.size(); ++v) {
    vs.push_back({{"name", gp.graph().name(v)},
                  {"group", detail::group_to_json(gp.group(v))}});
  }
  nlohmann::json es = nlohmann::json::array();
  for (auto [u, v] : gp.graph().edges()) {
    es.push_back({gp.graph().name(u), gp.graph().name(v)});
  }
  return {{"vertices", vs}, {"edges", es}};
}

////////////////////////////////////////////////////////////////////////////
// Diagram files
////////////////////////////////////////////////////////////////////////////

// Dart records carry arbitrary integer ids; they are renumbered densely in
// file order. "forward" defaults to true on the dart listed first.
inline diagram parse_diagram(nlohmann::json const& j, graph_product const& gp) {
  using detail::field;
  auto const& ds = j.contains("darts") ? j.at("darts") : nlohmann::json();
  if (!ds.is_array()) {
    detail::bad_spec("\"darts\" must be an array");
  }
  std::map<long long, std::size_t> id;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto k = field<long long>(ds[i], "id", "darts[" + std::to_string(i) + "]");
    if (!id.emplace(k, i).second) {
      detail::bad_spec("duplicate dart id " + std::to_string(k));
    }
  }
  auto lookup = [&](long long k) {
    auto it = id.find(k);
    if (it == id.end()) {
      throw error(error_code::bad_map_structure,
                  "reference to unknown dart " + std::to_string(k));
    }
    return it->second;
  };
  diagram dg;
  dg.darts.resize(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto where = "darts[" + std::to_string(i) + "]";
    auto& d    = dg.darts[i];
    d.opposite = lookup(field<long long>(ds[i], "opposite", where));
    d.next     = lookup(field<long long>(ds[i], "next", where));
    auto vname = field<std::string>(ds[i], "vertex", where);
    auto v     = gp.graph().index_of(vname);
    if (!v) {
      throw error(error_code::unknown_vertex, where + ": " + vname);
    }
    auto const& el = ds[i].contains("element") ? ds[i].at("element")
                                               : nlohmann::json();
    std::string atom = el.is_string() ? el.get<std::string>()
                       : el.is_number_integer() ? std::to_string(el.get<long long>())
                                                : "";
    if (atom.empty()) {
      detail::bad_spec(where + ": missing \"element\"");
    }
    d.label = {*v, gp.group(*v).parse_atom(atom)};
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i].contains("forward")) {
      dg.darts[i].forward = field<bool>(ds[i], "forward", "darts");
    } else {
      dg.darts[i].forward = i < dg.darts[i].opposite;
    }
  }
  auto base = [&](char const* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) {
      return std::nullopt;
    }
    return lookup(field<long long>(j.at(key), "basepoint", key));
  };
  dg.outer = base("outer");
  dg.inner = base("inner");
  dg.index();
  return dg;
}

inline nlohmann::json diagram_to_json(diagram const& dg, graph_product const& gp) {
  nlohmann::json ds = nlohmann::json::array();
  for (std::size_t i = 0; i < dg.size(); ++i) {
    auto const& d = dg.darts[i];
    ds.push_back({{"id", i},
                  {"opposite", d.opposite},
                  {"next", d.next},
                  {"vertex", gp.graph().name(d.label.vertex)},
                  {"element", gp.group(d.label.vertex).format_atom(d.label.value)},
                  {"forward", d.forward}});
  }
  nlohmann::json out{{"darts", ds}};
  if (dg.outer) {
    out["outer"] = {{"basepoint", *dg.outer}};
  }
  if (dg.inner) {
    out["inner"] = {{"basepoint", *dg.inner}};
  }
  return out;
}

}  // namespace gp

#endif  // GP_SPEC_IO_HPP_
