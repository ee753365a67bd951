// gassoc: command-line front end for the cluster fan, the generalized
// associahedron and the verification suites.

#include "gassoc/checks.hpp"
#include "gassoc/mutation.hpp"
#include "gassoc/polytope.hpp"
#include "gassoc/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gassoc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string datum;
  std::string coxeter;
  bool all_coxeter = false;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, Common& opt, const std::vector<std::string>& formats = {"text", "json"}) {
  cmd->add_option("datum", opt.datum, "Cartan type, e.g. A3, C3, B2xG2")->required();
  cmd->add_option("--coxeter", opt.coxeter, "Coxeter element as a node order, e.g. 1,2,3 (default 1,...,n)");
  cmd->add_flag("--all-coxeter", opt.all_coxeter, "Run for every Coxeter element (acyclic orientation)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--output,-o", opt.output, "Write to this file instead of stdout");
}

std::vector<CoxeterElement> coxeter_elements(const Common& opt) {
  auto group = std::make_shared<const WeylGroup>(make_datum(opt.datum));
  if (opt.all_coxeter) {
    if (!opt.coxeter.empty()) throw UsageError("--coxeter and --all-coxeter are exclusive");
    return all_coxeter_elements(group);
  }
  Word order;
  if (opt.coxeter.empty()) {
    for (Node i = 0; i < group->rank(); ++i) order.push_back(i);
  } else {
    order = parse_word(opt.coxeter, group->rank());
  }
  return {coxeter_from_order(group, order)};
}

Json coxeter_json(const CoxeterElement& c) {
  Json out = Json::array();
  for (Node i : c.order()) out.push_back(i + 1);
  return out;
}

std::string weight_name(const IntVec& w) { return render_linear(w, "w"); }

void emit(const Common& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + opt.output);
  out << text;
}

void emit_json(const Common& opt, const std::vector<Json>& items) {
  const Json doc = opt.all_coxeter ? Json(items) : items.front();
  emit(opt, doc.dump(2) + "\n");
}

std::string header(const ClusterModel& model) { return model.datum().label() + " c=" + model.coxeter().to_string() + "\n"; }

int cmd_orbits(const Common& opt) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    Json orbits = Json::array();
    text << header(model);
    for (const auto& orbit : model.orbits()) {
      Json entries = Json::array();
      std::string line;
      for (LabelId id : orbit) {
        const PiLabel& l = model.pi_labels()[static_cast<std::size_t>(id)];
        entries.push_back(Json{{"i", l.i + 1}, {"m", l.m}, {"weight", to_json(l.weight)}});
        line += (line.empty() ? "" : " -> ") + weight_name(l.weight);
      }
      orbits.push_back(std::move(entries));
      text << "  " << line << "\n";
    }
    items.push_back(Json{{"datum", model.datum().label()}, {"coxeter", coxeter_json(c)}, {"orbits", std::move(orbits)}});
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_compat(const Common& opt) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    const Json full = model_to_json(model);
    items.push_back(Json{{"datum", full["datum"]}, {"coxeter", full["coxeter"]}, {"labels", full["labels"]}, {"compat", full["compat"]}});
    text << header(model);
    for (LabelId a = 0; a < static_cast<LabelId>(model.size()); ++a) {
      text << "  " << std::left << std::setw(14) << weight_name(model.weight(a));
      for (LabelId b = 0; b < static_cast<LabelId>(model.size()); ++b) text << " " << model.compat(a, b);
      text << "\n";
    }
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_clusters(const Common& opt) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    items.push_back(model_to_json(model));
    text << header(model) << "  " << model.clusters().size() << " clusters\n";
    for (const Cluster& cl : model.clusters()) {
      std::string line;
      for (LabelId id : cl) line += (line.empty() ? "" : ", ") + weight_name(model.weight(id));
      text << "  {" << line << "}\n";
    }
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_expand(const Common& opt, const std::string& point, const std::string& basis) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    IntVec v;
    std::string cell;
    std::istringstream in(point);
    while (std::getline(in, cell, ',')) {
      try {
        v.emplace_back(std::stoll(cell));
      } catch (const std::exception&) {
        throw UsageError("malformed point '" + point + "'");
      }
    }
    if (static_cast<int>(v.size()) != model.rank()) throw UsageError("point needs " + std::to_string(model.rank()) + " coordinates");
    const Expansion e = basis == "root" ? model.expand_root(v) : model.expand_weight(v);
    Json terms = Json::array();
    std::string line;
    for (const auto& [id, m] : e) {
      const PiLabel& l = model.pi_labels()[static_cast<std::size_t>(id)];
      terms.push_back(Json{{"coeff", to_string(m)}, {"i", l.i + 1}, {"m", l.m}, {"weight", to_json(l.weight)}, {"root", to_json(model.root(id))}});
      const std::string name = basis == "root" ? render_linear(model.root(id), "a") : weight_name(l.weight);
      line += (line.empty() ? "" : " + ") + (m == 1 ? "" : to_string(m) + "*") + "(" + name + ")";
    }
    items.push_back(Json{{"datum", model.datum().label()}, {"coxeter", coxeter_json(c)}, {"basis", basis},
                         {"point", to_json(v)}, {"expansion", std::move(terms)}});
    text << header(model) << "  " << (line.empty() ? "0" : line) << "\n";
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_polytope(const Common& opt, const std::string& f_text, int precision) {
  const std::vector<CoxeterElement> cs = coxeter_elements(opt);
  if (opt.format == "off" && cs.size() != 1) throw UsageError("--format off needs a single Coxeter element");
  const RatVec f = parse_f(cs.front().datum(), f_text);
  if (auto bad = violated_condition(cs.front().datum(), f)) {
    std::cerr << "invalid f: violates " << *bad << "\n";
    return 2;
  }
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : cs) {
    const ClusterModel model(c);
    AssocPolytope poly = build_polytope(model, f);
    if (opt.format == "off") {
      if (model.rank() != 2 && model.rank() != 3) throw UsageError("OFF export needs rank 2 or 3");
      emit(opt, to_off(poly, precision));
      if (!opt.output.empty()) {
        std::ofstream side(opt.output + ".exact", std::ios::binary);
        side << to_exact_sidecar(poly);
      }
      return 0;
    }
    items.push_back(polytope_to_json(model, poly));
    text << header(model) << "  f = " << to_string(f) << "\n";
    for (const auto& [i, j] : f_conditions(model.datum()).equalities) text << "  condition " << render_equality(i, j) << "\n";
    for (const IntVec& cond : reduced_inequalities(model.datum())) text << "  condition " << render_inequality(cond) << "\n";
    for (const std::string& g : facet_groups(model)) text << "  " << g << "\n";
    text << "  vertices " << poly.vertices.size() << ", facets " << poly.hrep.facets.size() << ", edges " << poly.edges.size() << "\n";
    for (const Vertex& v : poly.vertices) {
      std::string cl;
      for (LabelId id : v.cluster) cl += (cl.empty() ? "" : ", ") + weight_name(model.weight(id));
      text << "  " << to_string(v.coords) << "  {" << cl << "}\n";
    }
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_verify(const Common& opt, const std::string& suite, const SuiteOptions& base, const std::string& f_text) {
  bool ok = true;
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    SuiteOptions options = base;
    if (f_text != "default") {
      options.f = parse_f(model.datum(), f_text);
      if (auto bad = violated_condition(model.datum(), options.f)) {
        std::cerr << "invalid f: violates " << *bad << "\n";
        return 2;
      }
    }
    const CheckReport report = run_suite(suite, model, options);
    ok = ok && report.ok();
    text << (report.ok() ? "PASS " : "FAIL ") << model.datum().label() << " c=" << c.to_string() << " suite=" << suite
         << " checked=" << report.checked << " failures=" << report.failures.size() << "\n";
    for (const std::string& s : report.skipped) text << "  skipped " << s << "\n";
    for (const std::string& s : report.failures) text << "  " << s << "\n";
    items.push_back(Json{{"datum", model.datum().label()},
                         {"coxeter", coxeter_json(c)},
                         {"suite", suite},
                         {"ok", report.ok()},
                         {"checked", report.checked},
                         {"failures", report.failures},
                         {"skipped", report.skipped}});
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return ok ? 0 : 1;
}

int cmd_sorting_word(const Common& opt, const std::string& word) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const WeylElement w = c.group().from_word(parse_word(word, c.rank()));
    const SortingWord sw = c_sorting_word(c, w);
    const bool sortable = is_sortable(c, w), antisortable = is_antisortable(c, w);
    Json factors = Json::array();
    for (const NodeSet& f : sw.factors) {
      Json nodes = Json::array();
      for (Node i : f) nodes.push_back(i + 1);
      factors.push_back(std::move(nodes));
    }
    Json letters = Json::array();
    for (Node i : sw.word) letters.push_back(i + 1);
    items.push_back(Json{{"datum", c.datum().label()},
                         {"coxeter", coxeter_json(c)},
                         {"word", std::move(letters)},
                         {"factors", std::move(factors)},
                         {"sortable", sortable},
                         {"antisortable", antisortable}});
    text << c.datum().label() << " c=" << c.to_string() << "\n  c-sorting word " << word_to_string(sw.word) << "\n  "
         << (sortable ? "sortable" : "not sortable") << ", " << (antisortable ? "antisortable" : "not antisortable") << "\n";
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_singletons(const Common& opt) {
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const std::vector<Singleton> all = singletons(c);
    Json words = Json::array();
    text << c.datum().label() << " c=" << c.to_string() << "\n  " << all.size() << " singletons\n";
    for (const Singleton& s : all) {
      Json letters = Json::array();
      for (Node i : s.word) letters.push_back(i + 1);
      words.push_back(std::move(letters));
      text << "  " << word_to_string(s.word) << "\n";
    }
    items.push_back(Json{{"datum", c.datum().label()}, {"coxeter", coxeter_json(c)}, {"singletons", std::move(words)}});
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return 0;
}

int cmd_exchange_graph(const Common& opt, bool flip) {
  bool ok = true;
  std::ostringstream text;
  std::vector<Json> items;
  for (const CoxeterElement& c : coxeter_elements(opt)) {
    const ClusterModel model(c);
    const ExchangeGraph graph = exchange_graph(c, flip);
    const CheckReport report = verify_exchange_relations(graph, model);
    ok = ok && report.ok();
    Json doc{{"datum", model.datum().label()}, {"coxeter", coxeter_json(c)}};
    doc.update(exchange_graph_to_json(graph));
    items.push_back(std::move(doc));
    const std::size_t n = static_cast<std::size_t>(model.rank());
    text << header(model) << "  variables " << graph.variables.size() << ", seeds " << graph.seeds.size() << ", edges "
         << graph.edges.size() << ", exchange relations " << (report.ok() ? "hold" : "FAIL") << "\n";
    for (std::size_t v = 0; v < graph.variables.size(); ++v)
      text << "  g=" << std::left << std::setw(14) << weight_name(graph.g_vectors[v]) << " " << graph.variables[v].to_string(n) << "\n";
    for (const std::string& s : report.failures) text << "  " << s << "\n";
  }
  if (opt.format == "json")
    emit_json(opt, items);
  else
    emit(opt, text.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster fans and generalized associahedra for finite-type Cartan data"};
  app.require_subcommand(1);

  Common opt;
  std::string f_text = "default", point, basis = "weight", suite = "all", word;
  int precision = 6;
  SuiteOptions suite_options;
  bool flip = false;

  auto* orbits = app.add_subcommand("orbits", "tau-orbits of Pi(c)");
  add_common(orbits, opt);
  auto* compat = app.add_subcommand("compat", "compatibility degree table");
  add_common(compat, opt);
  auto* clusters = app.add_subcommand("clusters", "all c-clusters");
  add_common(clusters, opt);
  auto* expand = app.add_subcommand("expand", "c-cluster expansion of a lattice point");
  add_common(expand, opt);
  expand->add_option("point", point, "Coordinates, e.g. 1,-2,0")->required();
  expand->add_option("--basis", basis, "Coordinates of the point")->check(CLI::IsMember({"weight", "root"}));
  auto* polytope = app.add_subcommand("polytope", "the generalized associahedron Asso_c^f");
  add_common(polytope, opt, {"text", "json", "off"});
  polytope->add_option("--f", f_text, "f(1),...,f(n) as rationals, or 'default'");
  polytope->add_option("--precision", precision, "Decimal digits in OFF output")->check(CLI::Range(0, 40));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, opt);
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify->add_option("--f", f_text, "f(1),...,f(n) as rationals, or 'default'");
  verify->add_option("--seed", suite_options.seed, "Seed for randomized checks");
  verify->add_option("--samples", suite_options.samples, "Random lattice points per Coxeter element")->check(CLI::NonNegativeNumber);
  auto* sorting = app.add_subcommand("sorting-word", "c-sorting word of an element");
  add_common(sorting, opt);
  sorting->add_option("word", word, "Element as a word, e.g. s2s3s2 or 2,3,2")->required();
  auto* single = app.add_subcommand("singletons", "c-singletons");
  add_common(single, opt);
  auto* exchange = app.add_subcommand("exchange-graph", "exchange graph from seed mutation of B(c)");
  add_common(exchange, opt);
  exchange->add_flag("--flip-b", flip, "Use -B(c) as the initial exchange matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbits) return cmd_orbits(opt);
    if (*compat) return cmd_compat(opt);
    if (*clusters) return cmd_clusters(opt);
    if (*expand) return cmd_expand(opt, point, basis);
    if (*polytope) return cmd_polytope(opt, f_text, precision);
    if (*verify) return cmd_verify(opt, suite, suite_options, f_text);
    if (*sorting) return cmd_sorting_word(opt, word);
    if (*single) return cmd_singletons(opt);
    if (*exchange) return cmd_exchange_graph(opt, flip);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
