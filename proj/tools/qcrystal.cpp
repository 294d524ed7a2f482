#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcrystal/axioms.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/operators.hpp"
#include "qcrystal/rectification.hpp"
#include "qcrystal/schur.hpp"
#include "qcrystal/selftest.hpp"
#include "qcrystal/tableau_io.hpp"

using namespace qcrystal;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerificationFailure = 2;

struct Options {
  std::string kind = "young";
  std::string shape;
  std::string with;
  int n = 0;
  bool queer = false;
  std::string format = "text";
  std::string out;
  std::string dot;
  std::string json_path;
  std::string graph;
  std::string input = "-";
  bool trace = false;
  int max_size = 6;
  int max_n = 4;
  unsigned threads = 0;
};

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::invalid_argument("failed writing " + path);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

int cmd_enumerate(const Options& o, std::ostream& os) {
  require_n(o.n);
  json out = json::array();
  auto emit = [&](const auto& ts) {
    if (o.format == "json") {
      for (const auto& t : ts) out.push_back(to_json(t));
      os << out.dump(2) << '\n';
    } else {
      for (const auto& t : ts) os << t.id() << '\n';
    }
  };
  if (o.kind == "young")
    emit(enumerate_ssyt(Partition::parse(o.shape), o.n));
  else
    emit(enumerate_ssht(StrictPartition::parse(o.shape), o.n));
  return kOk;
}

ColoredDigraph build(const Options& o) {
  require_n(o.n);
  if (o.kind == "young") {
    if (o.queer) throw std::invalid_argument("--queer applies to shifted crystals only");
    return young_crystal(Partition::parse(o.shape), o.n);
  }
  return shifted_crystal(StrictPartition::parse(o.shape), o.n, o.queer);
}

int cmd_crystal(const Options& o, std::ostream& os) {
  const ColoredDigraph g = build(o);
  if (!o.dot.empty()) {
    std::ostringstream ss;
    write_dot(ss, g);
    write_file(o.dot, ss.str());
  }
  if (!o.json_path.empty()) {
    std::ostringstream ss;
    write_json(ss, g);
    write_file(o.json_path, ss.str());
  }
  std::vector<int> colors;
  for (int c = g.queer() ? 0 : 1; c < g.degree(); ++c) colors.push_back(c);
  const auto comps = components(g);
  os << "vertices " << g.vertex_count() << '\n';
  os << "edges " << g.edges().size() << '\n';
  os << "components " << comps.size() << '\n';
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto sub = g.induced(comps[k]);
    os << "component " << k + 1 << ": " << comps[k].size() << " vertices; sources";
    for (std::size_t v : sources(sub, colors))
      os << ' ' << sub.vertex(v).id << " weight " << to_string(*sub.vertex(v).weight);
    os << '\n';
  }
  return kOk;
}

int cmd_check_axioms(const Options& o, std::ostream& os) {
  ColoredDigraph g;
  if (!o.graph.empty()) {
    std::istringstream in(read_input(o.graph));
    g = read_graph_json(in);
  } else {
    g = build(o);
  }
  const bool queer = o.queer || g.queer();
  const AxiomReport report = queer ? check_queer_regular(g) : check_regular(g);
  if (o.format == "json")
    os << report.to_json().dump(2) << '\n';
  else
    os << report.to_text();
  return report.passed() ? kOk : kVerificationFailure;
}

int cmd_poly(const Options& o, std::ostream& os) {
  require_n(o.n);
  const SymPolynomial p = o.kind == "young" ? schur(Partition::parse(o.shape), o.n)
                                            : schur_p(StrictPartition::parse(o.shape), o.n);
  if (o.format == "json")
    os << p.to_json().dump() << '\n';
  else
    os << p.to_string() << '\n';
  return kOk;
}

std::string combination(const std::vector<std::pair<std::string, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [shape, c] : terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.str() + "*";
    s += paren(shape);
  }
  return s;
}

int cmd_expand_schur(const Options& o, std::ostream& os) {
  require_n(o.n);
  const auto parts = expand_p_in_schur(StrictPartition::parse(o.shape), o.n);
  std::vector<std::pair<std::string, Integer>> terms;
  for (const auto& p : parts) {
    if (!terms.empty() && terms.back().first == p.to_string())
      terms.back().second += 1;
    else
      terms.emplace_back(p.to_string(), 1);
  }
  if (o.format == "json") {
    json out = json::array();
    for (const auto& [s, c] : terms)
      out.push_back({{"shape", Partition::parse(s).parts()}, {"coef", c.str()}});
    os << out.dump() << '\n';
  } else {
    os << combination(terms) << '\n';
  }
  return kOk;
}

int cmd_product(const Options& o, std::ostream& os) {
  if (o.n < 0) throw std::invalid_argument("--n must not be negative");
  const auto f = expand_product_in_p(StrictPartition::parse(o.shape),
                                     StrictPartition::parse(o.with), o.n);
  std::vector<std::pair<std::string, Integer>> terms;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    terms.emplace_back(it->first.to_string(), it->second);
  if (o.format == "json") {
    json out = json::array();
    for (auto it = f.rbegin(); it != f.rend(); ++it)
      out.push_back({{"shape", it->first.parts()}, {"coef", it->second.str()}});
    os << out.dump() << '\n';
  } else {
    os << combination(terms) << '\n';
  }
  return kOk;
}

int cmd_rectify(const Options& o, std::ostream& os) {
  json j;
  try {
    j = json::parse(read_input(o.input));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  const std::string kind = j.is_object() ? j.value("kind", "") : "";
  std::vector<std::string> trace;
  YoungTableau y;
  if (kind == "shifted")
    y = rect(shifted_from_json(j), o.trace ? &trace : nullptr);
  else if (kind == "partial")
    y = rectify(partial_from_json(j), o.trace ? &trace : nullptr);
  else
    throw std::invalid_argument("rectify expects a \"shifted\" or \"partial\" tableau");
  for (const auto& line : trace) std::cerr << line << '\n';
  os << to_json(y).dump() << '\n';
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& os) {
  if (o.max_size < 0 || o.max_n < 1) throw std::invalid_argument("bad selftest bounds");
  const auto results = run_selftest({o.max_size, o.max_n, o.threads});
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.description << " ("
       << r.cases << " cases)\n";
    for (std::size_t k = 0; k < r.failures.size() && k < 20; ++k)
      os << "  failure: " << r.failures[k] << '\n';
    if (r.failures.size() > 20) os << "  ... " << r.failures.size() - 20 << " more\n";
    for (const auto& note : r.notes) os << "  note: " << note << '\n';
  }
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal graphs on Young and shifted tableaux"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "young or shifted")
        ->check(CLI::IsMember({"young", "shifted"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List all tableaux of a shape");
  add_kind(enumerate);
  enumerate->add_option("--shape", o.shape, "Comma separated parts, e.g. 3,1")->required();
  enumerate->add_option("--n", o.n, "Largest entry")->required();
  add_format(enumerate);
  add_out(enumerate);

  auto* crystal = app.add_subcommand("crystal", "Build a crystal graph and summarise it");
  add_kind(crystal);
  crystal->add_option("--shape", o.shape)->required();
  crystal->add_option("--n", o.n)->required();
  crystal->add_flag("--queer", o.queer, "Add the queer 0-edges (shifted only)");
  crystal->add_option("--dot", o.dot, "Write Graphviz DOT to this file");
  crystal->add_option("--json", o.json_path, "Write the graph as JSON to this file");
  add_out(crystal);

  auto* check = app.add_subcommand("check-axioms", "Check the regular or queer axioms");
  check->add_option("--graph", o.graph, "Graph JSON file (- for stdin)");
  add_kind(check);
  check->add_option("--shape", o.shape);
  check->add_option("--n", o.n);
  check->add_flag("--queer", o.queer, "Check the queer axioms");
  add_format(check);
  add_out(check);

  auto* poly = app.add_subcommand("poly", "Schur (young) or Schur P (shifted) polynomial");
  add_kind(poly);
  poly->add_option("--shape", o.shape)->required();
  poly->add_option("--n", o.n)->required();
  add_format(poly);
  add_out(poly);

  auto* expand = app.add_subcommand("expand-schur", "Expand P_shape into Schur polynomials");
  expand->add_option("--shape", o.shape)->required();
  expand->add_option("--n", o.n)->required();
  add_format(expand);
  add_out(expand);

  auto* product = app.add_subcommand("product", "Expand P_shape * P_with in the P basis");
  product->add_option("--shape", o.shape)->required();
  product->add_option("--with", o.with)->required();
  product->add_option("--n", o.n, "Number of variables (default: total size)");
  add_format(product);
  add_out(product);

  auto* rectify_cmd = app.add_subcommand("rectify", "Rectify a shifted tableau or partial filling");
  rectify_cmd->add_option("--input", o.input, "JSON file (- for stdin)");
  rectify_cmd->add_flag("--trace", o.trace, "Print each slide to stderr");
  add_out(rectify_cmd);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--max-size", o.max_size);
  selftest->add_option("--max-n", o.max_n);
  selftest->add_option("--threads", o.threads, "Worker threads (default QCRYSTAL_THREADS)");
  add_out(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomainError;
  }

  std::ostringstream os;
  int code = kOk;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "enumerate") code = cmd_enumerate(o, os);
    else if (name == "crystal") code = cmd_crystal(o, os);
    else if (name == "check-axioms") {
      if (o.graph.empty() && o.shape.empty())
        throw std::invalid_argument("check-axioms needs --graph or --shape/--n");
      code = cmd_check_axioms(o, os);
    }
    else if (name == "poly") code = cmd_poly(o, os);
    else if (name == "expand-schur") code = cmd_expand_schur(o, os);
    else if (name == "product") code = cmd_product(o, os);
    else if (name == "rectify") code = cmd_rectify(o, os);
    else code = cmd_selftest(o, os);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const ClosureError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (o.out.empty())
      std::cout << os.str();
    else
      write_file(o.out, os.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return code;
}
