#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "CLI11.hpp"
#include "idealgraph/constructions.hpp"
#include "idealgraph/error.hpp"
#include "idealgraph/graph_io.hpp"
#include "idealgraph/ideal_lattice.hpp"
#include "idealgraph/ideal_ops.hpp"
#include "idealgraph/iso_check.hpp"
#include "idealgraph/lpa.hpp"
#include "idealgraph/paths.hpp"
#include "json.hpp"

namespace idealgraph::cli {

using nlohmann::json;

const std::string& bundled_example() {
  static const std::string text = R"({
  "vertices": ["v", "w", "x"],
  "edges": [
    {"name": "e", "src": "v", "dst": "w", "mult": 1},
    {"name": "f", "src": "w", "dst": "v", "mult": 1},
    {"name": "g", "src": "v", "dst": "x", "mult": "omega"},
    {"name": "h", "src": "w", "dst": "x", "mult": "omega"}
  ]
}
)";
  return text;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Graph load(const RunConfig& cfg) {
  return cfg.graph_path ? load_graph_file(*cfg.graph_path) : parse_graph(bundled_example());
}

json names(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s.members()) out.push_back(g.name(v));
  return out;
}

json pair_json(const Graph& g, const AdmissiblePair& p) {
  return json{{"H", names(g, p.hereditary)}, {"S", names(g, p.breaking)}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

AdmissiblePair parse_pair(const Graph& g, const std::string& text) {
  AdmissiblePair p{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
  for (const auto& raw : split(text, ';')) {
    std::string part = trim(raw);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(Errc::parse_error, "pair component '" + part + "' lacks '='");
    std::string key = trim(part.substr(0, eq));
    VertexSet* target = key == "H" ? &p.hereditary : key == "S" ? &p.breaking : nullptr;
    if (!target) throw Error(Errc::parse_error, "pair component must be H or S, got '" + key + "'");
    for (const auto& name : split(part.substr(eq + 1), ',')) {
      std::string n = trim(name);
      if (!n.empty()) target->insert(g.vertex(n));
    }
  }
  validate_admissible(g, p);
  return p;
}

constexpr const char* kExamplePair = "H=x;S=v,w";

std::vector<AdmissiblePair> selected_pairs(const Graph& g, const RunConfig& cfg) {
  if (cfg.pair) return {parse_pair(g, *cfg.pair)};
  return enumerate_admissible_pairs(g);
}

json check_json(const CheckResult& c) {
  json out{{"name", c.name},
           {"status", to_string(c.status)},
           {"checked", c.checked},
           {"skipped", c.skipped},
           {"detail", c.detail}};
  out["defect"] = c.defect ? json(*c.defect) : json(nullptr);
  return out;
}

void append(json& checks, const Report& r) {
  for (const auto& c : r.checks) checks.push_back(check_json(c));
}

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << indent << key << ":\n";
        render_text(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat) {
      std::string line;
      for (const auto& x : j) line += (line.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
      out << indent << "[" << line << "]\n";
      return;
    }
    for (const auto& x : j) {
      out << indent << "-\n";
      render_text(x, out, indent + "  ");
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const json& doc, std::ostream& out) {
  if (cfg.format == Format::json)
    out << doc.dump(2) << "\n";
  else
    render_text(doc, out, "");
}

// The checks run by `verify` for one pair.
json verify_pair(const AlgebraPtr& alg, const AdmissiblePair& pair, const RunConfig& cfg, bool& passed) {
  const Graph& g = alg->graph();
  auto family = build_family(alg, pair, cfg.trunc, cfg.omega_width);
  json checks = json::array();
  Report relations = verify_leavitt_relations(family);
  Report injective = injectivity_witnesses(family);
  Report onto = verify_surjectivity_window(family, cfg.degree);
  append(checks, relations);
  append(checks, injective);
  append(checks, onto);

  auto cycles = cycle_correspondence_check(g, family.built);
  checks.push_back(check_json(CheckResult{"cycle_correspondence",
                                          cycles.holds ? CheckStatus::pass : CheckStatus::fail,
                                          cycles.cycles, 0, cycles.detail, std::nullopt}));

  IdealWindow window(alg, pair, cfg.degree, cfg.omega_width);
  auto closure = closure_under_generators(window);
  checks.push_back(check_json(CheckResult{
      "closure_under_generators", closure.closed ? CheckStatus::pass : CheckStatus::fail, closure.products_checked,
      closure.products_skipped, closure.closed ? "products above the degree bound skipped" : closure.failure,
      std::nullopt}));
  checks.push_back(check_json(verify_images_in_window(family, window)));

  bool ok = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["status"] != "fail"; });
  passed = passed && ok;
  json notes = relations.notes;
  for (const auto& n : injective.notes) notes.push_back(n);
  for (const auto& n : onto.notes) notes.push_back(n);
  for (const auto& n : family.built.notes) notes.push_back(n);
  return json{{"pair", pair_json(g, pair)},
              {"passed", ok},
              {"constructed_vertices", family.built.graph.vertex_count()},
              {"truncated_at", family.built.truncated_at ? json(*family.built.truncated_at) : json(nullptr)},
              {"checks", std::move(checks)},
              {"tallies", onto.tallies},
              {"notes", std::move(notes)}};
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  auto start = Clock::now();
  Graph g = load(cfg);
  json kinds = json::object();
  for (VertexId v : g.vertices()) kinds[g.name(v)] = to_string(g.classify(v));

  json sets = json::array();
  json breaking = json::array();
  for (const auto& h : saturated_hereditary_subsets(g)) {
    sets.push_back(names(g, h));
    breaking.push_back(json{{"H", names(g, h)}, {"B_H", names(g, breaking_vertices(g, h))}});
  }
  json pairs = json::array();
  for (const auto& p : enumerate_admissible_pairs(g)) pairs.push_back(pair_json(g, p));

  json cycles = json::array();
  for (const auto& c : vertex_simple_cycles(g, g.vertex_count())) cycles.push_back(c.path.word(g));
  json returns = json::object();
  for (VertexId v : g.vertices()) {
    int n = return_path_count(g, v);
    returns[g.name(v)] = n >= 2 ? json("2+") : json(n);
  }

  json doc{{"command", "analyze"},
           {"vertices", g.vertex_names()},
           {"vertex_kinds", std::move(kinds)},
           {"saturated_hereditary_sets", std::move(sets)},
           {"breaking_vertices", std::move(breaking)},
           {"admissible_pairs", std::move(pairs)},
           {"cycles", std::move(cycles)},
           {"return_paths", std::move(returns)},
           {"condition_L", condition_L(g)},
           {"condition_K", condition_K(g)}};
  doc["elapsed_ms"] = elapsed_ms(start);
  emit(cfg, doc, out);
  return 0;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  Graph g = load(cfg);
  auto build = [&](const AdmissiblePair& pair) {
    auto built = cfg.old ? build_old_graph(g, pair, cfg.trunc, cfg.omega_width)
                         : build_bar_graph(g, pair, cfg.trunc, cfg.omega_width);
    return json::parse(emit_constructed(g, built));
  };
  std::optional<std::string> chosen = cfg.pair;
  // The bundled example has one pair of interest; default to it.
  if (!chosen && !cfg.all_pairs && !cfg.graph_path) chosen = kExamplePair;
  if (chosen) {
    AdmissiblePair pair = parse_pair(g, *chosen);
    json doc = build(pair);
    doc["construction"] = cfg.old ? "old" : "bar";
    doc["pair"] = pair_json(g, pair);
    emit(cfg, doc, out);
    return 0;
  }
  if (!cfg.all_pairs) throw Error(Errc::parse_error, "construct needs --pair or --all-pairs");
  json list = json::array();
  for (const auto& p : enumerate_admissible_pairs(g)) {
    json doc = build(p);
    doc["pair"] = pair_json(g, p);
    list.push_back(std::move(doc));
  }
  emit(cfg, json{{"command", "construct"}, {"construction", cfg.old ? "old" : "bar"}, {"constructions", list}},
       out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto start = Clock::now();
  Graph g = load(cfg);
  auto alg = LeavittAlgebra::create(g, Field::parse(cfg.field));
  bool passed = true;
  json results = json::array();
  for (const auto& pair : selected_pairs(g, cfg)) results.push_back(verify_pair(alg, pair, cfg, passed));
  json doc{{"command", "verify"},
           {"field", alg->field().describe()},
           {"degree", cfg.degree},
           {"trunc", cfg.trunc},
           {"passed", passed},
           {"pairs", std::move(results)}};
  doc["elapsed_ms"] = elapsed_ms(start);
  emit(cfg, doc, out);
  return passed ? 0 : 1;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
  auto start = Clock::now();
  Graph g = parse_graph(bundled_example());
  auto alg = LeavittAlgebra::create(g, Field::parse(cfg.field));
  AdmissiblePair pair = parse_pair(g, kExamplePair);

  GapReport gap = old_construction_gap(alg, pair, cfg.degree, cfg.trunc, cfg.omega_width);
  json missing = json::array();
  for (const auto& d : gap.missing) missing.push_back(format_descriptor(g, d));

  json probe = nullptr;
  bool probe_zero = false;
  if (gap.probe) {
    probe = json{{"holds", gap.probe->holds}, {"checked", gap.probe->checked}};
    if (gap.probe->witness) {
      probe["witness"] = gap.probe->witness->to_string();
      probe["left_product"] = gap.probe->left_product->to_string();
      probe["right_product"] = gap.probe->right_product->to_string();
      probe_zero = gap.probe->left_product->is_zero() || gap.probe->right_product->is_zero();
    }
  }

  // Named witnesses: e.w^H, and ef.v^H which the old image cannot reach.
  auto old = build_old_family(alg, pair, cfg.trunc, cfg.omega_width);
  OldImageSpan span(old, cfg.degree);
  IdealWindow window(alg, pair, cfg.degree, cfg.omega_width);
  LpaElement q_old = alg->zero();
  for (const auto& x : old.image.q) q_old += x;
  auto witness = [&](const std::string& label, const LpaElement& x) {
    json w{{"element", label}, {"normal_form", x.to_string()}, {"degree", x.degree()}};
    w["in_ideal_window"] = x.degree() <= cfg.degree ? json(window.contains(x)) : json(nullptr);
    w["in_old_image_span"] = span.contains(x);
    LpaElement left = mul(q_old, x);
    LpaElement right = mul(x, q_old);
    w["probe_left_product"] = left.to_string();
    w["probe_right_product"] = right.to_string();
    w["probe_fails"] = !(left == x) || !(right == x);
    return w;
  };
  EdgeRef e = *g.find_edge("e");
  EdgeRef f = *g.find_edge("f");
  json named = json::array();
  named.push_back(witness("e.w^H", mul(alg->edge(e), alg->gap_idempotent(g.vertex("w"), pair.hereditary))));
  named.push_back(witness("e.f.v^H", mul(alg->path(Path::from_edges(g, {e, f})),
                                         alg->gap_idempotent(g.vertex("v"), pair.hereditary))));

  bool fresh_passed = true;
  json fresh = verify_pair(alg, pair, cfg, fresh_passed);

  bool reproduced = !gap.missing.empty() && gap.probe && !gap.probe->holds && probe_zero &&
                    gap.old_relations.passed() && fresh_passed;
  json old_checks = json::array();
  append(old_checks, gap.old_relations);
  json doc{{"command", "counterexample"},
           {"field", alg->field().describe()},
           {"degree", cfg.degree},
           {"trunc", cfg.trunc},
           {"pair", pair_json(g, pair)},
           {"old_family_relations", std::move(old_checks)},
           {"old_relations_passed", gap.old_relations.passed()},
           {"spanning_checked", gap.spanning_checked},
           {"old_span_rank", gap.old_span_rank},
           {"gap", std::move(missing)},
           {"identity_probe", std::move(probe)},
           {"named_witnesses", std::move(named)},
           {"new_construction", std::move(fresh)},
           {"reproduced", reproduced},
           {"notes", gap.notes}};
  doc["elapsed_ms"] = elapsed_ms(start);
  emit(cfg, doc, out);
  return reproduced ? 0 : 1;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideals of graph algebras: constructions and exact Leavitt path algebra checks", "idealgraph"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  std::string graph;
  std::string pair;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", graph, "graph document (JSON); the bundled example when omitted");
    sub->add_option("--pair", pair, "admissible pair, e.g. \"H=x;S=v,w\"");
    sub->add_flag("--all-pairs", cfg.all_pairs, "every admissible pair");
    sub->add_option("--degree", cfg.degree, "degree bound of the ideal window")->check(CLI::PositiveNumber);
    sub->add_option("--trunc", cfg.trunc, "path-length truncation of constructed graphs")->check(CLI::PositiveNumber);
    sub->add_option("--omega-width", cfg.omega_width, "edges materialized per infinite family")
        ->check(CLI::PositiveNumber);
    sub->add_option("--field", cfg.field, "rational or gf:P");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* analyze = app.add_subcommand("analyze", "hereditary sets, breaking vertices, pairs, conditions (L) and (K)");
  auto* construct = app.add_subcommand("construct", "emit the constructed graph with origin annotations");
  auto* verify = app.add_subcommand("verify", "check the generator family, surjectivity window and closure");
  auto* counter = app.add_subcommand("counterexample", "replay the old-construction gap on the bundled example");
  for (auto* sub : {analyze, construct, verify, counter}) common(sub);
  construct->add_flag("--old", cfg.old, "use the old construction");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (!graph.empty()) cfg.graph_path = graph;
  if (!pair.empty()) cfg.pair = pair;
  cfg.format = format == "text" ? Format::text : Format::json;
  if (cfg.pair && cfg.all_pairs) {
    err << "error: --pair and --all-pairs are exclusive\n";
    return 2;
  }

  try {
    Field::parse(cfg.field);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_counterexample(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace idealgraph::cli
