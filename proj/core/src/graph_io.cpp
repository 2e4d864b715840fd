#include "idealgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "idealgraph/error.hpp"
#include "json.hpp"

namespace idealgraph {

using nlohmann::json;

namespace {

Multiplicity parse_multiplicity(const json& node, const std::string& edge) {
  if (node.is_string()) {
    if (node.get<std::string>() == "omega") return Multiplicity::omega();
    throw Error(Errc::invalid_multiplicity, "edge '" + edge + "': expected a positive integer or \"omega\"");
  }
  if (node.is_number_unsigned()) {
    auto n = node.get<std::uint64_t>();
    if (n == 0) throw Error(Errc::invalid_multiplicity, "edge '" + edge + "': multiplicity 0");
    return Multiplicity::finite(n);
  }
  throw Error(Errc::invalid_multiplicity, "edge '" + edge + "': expected a positive integer or \"omega\"");
}

std::string required_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw Error(Errc::malformed_document, where + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::malformed_document, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::malformed_document, "top level must be an object");

  auto vit = doc.find("vertices");
  if (vit == doc.end() || !vit->is_array())
    throw Error(Errc::malformed_document, "missing array 'vertices'");
  std::vector<std::string> vertices;
  for (const auto& v : *vit) {
    if (!v.is_string()) throw Error(Errc::malformed_document, "vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<FamilySpec> families;
  if (auto eit = doc.find("edges"); eit != doc.end()) {
    if (!eit->is_array()) throw Error(Errc::malformed_document, "'edges' must be an array");
    std::size_t i = 0;
    for (const auto& e : *eit) {
      std::string where = "edge #" + std::to_string(i++);
      if (!e.is_object()) throw Error(Errc::malformed_document, where + " must be an object");
      FamilySpec spec;
      spec.name = required_string(e, "name", where);
      spec.src = required_string(e, "src", where);
      spec.dst = required_string(e, "dst", where);
      if (auto m = e.find("mult"); m != e.end()) spec.mult = parse_multiplicity(*m, spec.name);
      families.push_back(std::move(spec));
    }
  }
  return Graph::build(std::move(vertices), std::move(families));
}

std::string emit_graph(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertex_names()) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const auto& f : g.families()) {
    json e;
    e["name"] = f.name;
    e["src"] = g.name(f.src);
    e["dst"] = g.name(f.dst);
    if (f.mult.is_omega())
      e["mult"] = "omega";
    else
      e["mult"] = f.mult.count();
    doc["edges"].push_back(std::move(e));
  }
  return doc.dump(2);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_document, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace idealgraph
