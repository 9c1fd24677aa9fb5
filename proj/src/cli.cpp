#include "wgraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <thread>

#include "wgraph/analysis.hpp"
#include "wgraph/constructions.hpp"
#include "wgraph/cwg_io.hpp"
#include "wgraph/embedding.hpp"
#include "wgraph/homomorphism.hpp"
#include "wgraph/report_json.hpp"
#include "wgraph/search.hpp"

namespace wgraph::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  bool timing = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  CLI::Option* threads_opt = nullptr;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
  return v;
}

ColoredGraph load_graph(const std::string& path) {
  try {
    return read_cwg_file(path);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<ColoredGraph> load_family(const std::string& selector) {
  if (selector.rfind("F:", 0) == 0) return gen_family(parse_int(selector.substr(2), "family index"));
  if (selector.rfind("file:", 0) == 0) {
    const std::string path = selector.substr(5);
    try {
      return read_cwg_list_file(path);
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
  }
  throw std::invalid_argument("family selector must be F:<t> or file:<path>, got '" + selector + "'");
}

EnumerationMode parse_mode(const std::string& m) {
  return m == "iso" ? EnumerationMode::IsomorphFree : EnumerationMode::Raw;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string format_classes(const std::vector<std::vector<int>>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    s += i ? " |" : "";
    for (int v : classes[i]) s += " " + std::to_string(v);
    if (classes[i].empty()) s += " -";
  }
  return s;
}

int report_search(const SearchReport& rep, const std::string& command, const Globals& g, std::ostream& out) {
  if (g.json) {
    json j = report_header(command);
    j.update(to_json(rep, g.timing));
    emit(out, j);
  } else {
    out << to_string(rep.kind) << ": " << to_string(rep.outcome);
    if (rep.value) out << " " << *rep.value;
    out << '\n';
    if (rep.threshold) out << "threshold " << rep.threshold->str() << ", cutoff " << *rep.cutoff << '\n';
    if (rep.kind == ReportKind::ExValue) {
      out << "nodes " << rep.stats.nodes << '\n';
    } else {
      out << "enumerated " << rep.stats.enumerated << ", passing hypothesis " << rep.stats.hypothesis << '\n';
    }
    if (!rep.diagnosis.empty()) out << rep.diagnosis << '\n';
    if (rep.graph) out << to_cwg(*rep.graph);
    if (g.timing) out << "wall " << rep.stats.wall_seconds << " s\n";
  }
  switch (rep.outcome) {
    case Outcome::Counterexample: return kCounterexample;
    case Outcome::Inconclusive: return kError;
    default: return kOk;
  }
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string construction;
  int n = -1;
  int r = -1;
  int t = -1;
  int b = -1;
  int q = -1;
  int k = -1;
  int scale = 1;
  std::string pattern;
  std::vector<int> sizes;
  std::string output;
  std::string parts;
};

int need(int v, const char* flag) {
  if (v < 0) throw std::invalid_argument(std::string("this construction needs ") + flag);
  return v;
}

PartitionedConstruction plain(ColoredGraph g) { return {std::move(g), {}}; }

PartitionedConstruction build(const GenArgs& a) {
  const std::string& c = a.construction;
  if (c == "rk") return plain(gen_rk(need(a.n, "--n")));
  if (c == "bk") return plain(gen_bk(need(a.n, "--n")));
  if (c == "rk-minus") return plain(gen_rk_minus(need(a.n, "--n")));
  if (c == "gab") return plain(gen_gab(need(a.t, "--t"), need(a.b, "--b")));
  if (c == "hk") return gen_hk(need(a.q, "--q"), need(a.b, "--b"), need(a.k, "--k"));
  if (c == "j") return gen_j(need(a.r, "--r"));
  if (c == "odd-extremal") return gen_odd_extremal(need(a.r, "--r"), a.scale);
  if (c == "even-extremal") return gen_even_extremal(need(a.r, "--r"), a.scale);
  if (c == "ehss-blowup") return gen_ehss_blowup(need(a.r, "--r"));
  if (c == "blow-up") {
    if (a.pattern.empty()) throw std::invalid_argument("blow-up needs --pattern");
    return blow_up(load_graph(a.pattern), a.sizes);
  }
  throw std::invalid_argument("unknown construction '" + c + "'");
}

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
  std::vector<ColoredGraph> graphs;
  std::optional<PartitionedConstruction> pc;
  if (a.construction == "family") {
    graphs = gen_family(need(a.t, "--t"));
  } else {
    pc = build(a);
    graphs.push_back(pc->graph);
  }
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) text += (i ? "\n" : "") + to_cwg(graphs[i]);

  if (!a.output.empty()) {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + a.output + "'");
    f << text;
  }
  if (!a.parts.empty()) {
    std::ofstream f(a.parts, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + a.parts + "'");
    f << (pc ? parts_to_json(*pc) : json::object()).dump(2) << '\n';
  }
  if (g.json) {
    json j = report_header("gen");
    j["construction"] = a.construction;
    j["graphs"] = json::array();
    for (const auto& gr : graphs) j["graphs"].push_back(to_json(gr));
    j["parts"] = pc ? parts_to_json(*pc) : json::object();
    if (!a.output.empty()) j["output"] = a.output;
    emit(out, j);
  } else if (a.output.empty()) {
    out << text;
  }
  return kOk;
}

// --- remaining commands -----------------------------------------------------

int cmd_check(const std::string& family, const std::string& file, const Globals& g, std::ostream& out) {
  const auto fam = load_family(family);
  const auto host = load_graph(file);
  const FreenessResult res = is_free(host, fam);
  if (g.json) {
    json j = report_header("check");
    j.update(to_json(res));
    emit(out, j);
  } else if (res.free) {
    out << "free\n";
  } else {
    out << "not free: member " << res.member << " embeds via";
    for (int v : res.witness->map) out << ' ' << v;
    out << '\n';
  }
  return kOk;
}

int cmd_hom(const std::string& target, const std::string& file, std::uint64_t budget, const Globals& g,
            std::ostream& out) {
  const auto graph = load_graph(file);
  HomResult res;
  if (target.rfind("rk:", 0) == 0) {
    res = find_hom_rk(graph, parse_int(target.substr(3), "target r"), budget);
  } else if (target.rfind("rkminus:", 0) == 0) {
    res = find_hom_rk_minus(graph, parse_int(target.substr(8), "target r"), budget);
  } else if (target.rfind("file:", 0) == 0) {
    res = find_hom_general(graph, load_graph(target.substr(5)), budget);
  } else {
    throw std::invalid_argument("target must be rk:<r>, rkminus:<r> or file:<path>, got '" + target + "'");
  }
  if (g.json) {
    json j = report_header("hom");
    j.update(to_json(res));
    emit(out, j);
  } else {
    out << to_string(res.status);
    if (res.certificate) out << ":" << format_classes(res.certificate->classes);
    out << "\nnodes " << res.nodes << '\n';
  }
  return res.status == HomStatus::BudgetExceeded ? kError : kOk;
}

int cmd_analyze(int r, const std::string& file, const Globals& g, std::ostream& out) {
  const StructureReport rep = analyze(load_graph(file), r);
  if (g.json) {
    json j = report_header("analyze");
    j.update(to_json(rep));
    emit(out, j);
    return kOk;
  }
  const Decomposition& d = rep.decomposition;
  out << "wicked triangles " << rep.wicked_triangles.size() << " (blue " << rep.blue_wicked.size() << ")\n";
  out << "insecure blue " << rep.audit.insecure_blue.size() << ", insecure green " << rep.audit.insecure_green.size()
      << '\n';
  out << "J embeds: " << (rep.j_embedding ? "yes" : "no") << '\n';
  out << "hypotheses: family-free " << (d.family_free ? "yes" : "no") << ", degree " << (d.degree_ok ? "yes" : "no")
      << '\n';
  if (d.succeeded) {
    out << "decomposition: m = " << d.m << ", s = " << d.s << ", classes" << format_classes(d.certificate->classes)
        << '\n';
  } else {
    out << "decomposition failed at " << to_string(d.failed_step) << ": " << d.diagnosis << '\n';
  }
  return kOk;
}

int cmd_complete(const std::string& family, const std::string& file, const std::string& output, bool shuffle,
                 const Globals& g, std::ostream& out) {
  const auto fam = load_family(family);
  const auto in = load_graph(file);
  const ColoredGraph done = extremal_completion(in, fam, {shuffle, g.seed});
  if (!output.empty()) write_cwg_file(output, done);
  if (g.json) {
    json j = report_header("complete");
    j["input_weight"] = edge_weight_sum(in);
    j["output_weight"] = edge_weight_sum(done);
    j["graph"] = to_json(done);
    j["policy"] = shuffle ? "shuffled" : "lexicographic";
    if (shuffle) j["seed"] = g.seed;
    if (!output.empty()) j["output"] = output;
    emit(out, j);
  } else if (output.empty()) {
    out << to_cwg(done);
  }
  return kOk;
}

int cmd_density(const std::string& family, const std::vector<std::string>& files, bool standard, const Globals& g,
                std::ostream& out) {
  const auto fam = load_family(family);
  std::vector<std::pair<std::string, ColoredGraph>> items;
  if (standard && family.rfind("F:", 0) == 0) {
    const int t = parse_int(family.substr(2), "family index");
    const int r = t / 2;
    if (t % 2 == 1 && r >= 2) {
      items.emplace_back("odd-extremal r=" + std::to_string(r), gen_odd_extremal(r, 1).graph);
      items.emplace_back("rk blow-up r=" + std::to_string(r),
                         blow_up(gen_rk(r), std::vector<int>(static_cast<std::size_t>(r), 2)).graph);
    } else if (t % 2 == 0 && r >= 3) {
      items.emplace_back("even-extremal r=" + std::to_string(r), gen_even_extremal(r, 1).graph);
      items.emplace_back("ehss-blowup r=" + std::to_string(r), gen_ehss_blowup(r).graph);
    }
  }
  for (const auto& f : files) items.emplace_back(f, load_graph(f));
  const auto rows = density_report(fam, items);
  if (g.json) {
    json j = report_header("density");
    j["family"] = family;
    j["rows"] = to_json(rows);
    emit(out, j);
  } else {
    for (const auto& row : rows) {
      out << row.name << ": n = " << row.n << ", e = " << row.e << ", 2e/n^2 = " << row.density.str();
      if (row.reference) out << ", reference " << row.reference->str();
      out << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics for {0,1,2}-weighted graphs", "wgraph"};
  app.set_version_flag("--version", std::string("wgraph ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_flag("--timing", g.timing, "Include wall time in reports");
  g.threads_opt = app.add_option("--threads", g.threads, "Worker threads (default: all cores for verify/ex/threshold)")
                      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "Seed for randomised policies");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Write a named construction as .cwg");
  c_gen->add_option("--construction", gen.construction,
                    "rk | bk | rk-minus | gab | family | hk | j | odd-extremal | even-extremal | ehss-blowup | blow-up")
      ->required();
  c_gen->add_option("--n", gen.n, "Order (rk, bk, rk-minus)");
  c_gen->add_option("--r", gen.r, "Parameter r");
  c_gen->add_option("--t", gen.t, "Index t (gab, family)");
  c_gen->add_option("--b", gen.b, "Parameter b (gab, hk)");
  c_gen->add_option("--q", gen.q, "Order q (hk)");
  c_gen->add_option("--k", gen.k, "Parameter k (hk)");
  c_gen->add_option("--scale", gen.scale, "Scale (odd-extremal, even-extremal)");
  c_gen->add_option("--pattern", gen.pattern, "Pattern .cwg (blow-up)");
  c_gen->add_option("--sizes", gen.sizes, "Class sizes (blow-up)");
  c_gen->add_option("-o,--output", gen.output, "Output .cwg");
  c_gen->add_option("--parts", gen.parts, "Output JSON part map");

  std::string family, file, target, output, theorem = "odd", mode = "raw", kind = "odd";
  std::vector<std::string> files;
  int r = 0, n = 0, cap = 2;
  bool shuffle = false, standard = false;
  std::uint64_t budget = kDefaultNodeBudget;

  auto* c_check = app.add_subcommand("check", "Test family-freeness");
  c_check->add_option("--family", family, "F:<t> or file:<path>")->required();
  c_check->add_option("graph", file, "Host .cwg")->required();

  auto* c_hom = app.add_subcommand("hom", "Search for a homomorphism");
  c_hom->add_option("--target", target, "rk:<r>, rkminus:<r> or file:<path>")->required();
  c_hom->add_option("--budget", budget, "Node budget");
  c_hom->add_option("graph", file, "Input .cwg")->required();

  auto* c_analyze = app.add_subcommand("analyze", "Structural report for the even-index argument");
  c_analyze->add_option("--r", r, "Parameter r (>= 3)")->required();
  c_analyze->add_option("graph", file, "Input .cwg")->required();

  auto* c_complete = app.add_subcommand("complete", "Raise weights to a family-free fixpoint");
  c_complete->add_option("--family", family, "F:<t> or file:<path>")->required();
  c_complete->add_option("-o,--output", output, "Output .cwg");
  c_complete->add_flag("--shuffle", shuffle, "Sweep pairs in a seeded random order");
  c_complete->add_option("graph", file, "Input .cwg")->required();

  auto* c_verify = app.add_subcommand("verify", "Exhaustively check a theorem at order n");
  c_verify->add_option("--theorem", theorem)->check(CLI::IsMember({"odd", "even"}))->required();
  c_verify->add_option("--r", r)->required();
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--mode", mode)->check(CLI::IsMember({"raw", "iso"}));

  auto* c_ex = app.add_subcommand("ex", "Exact extremal number");
  c_ex->add_option("--n", n)->required();
  c_ex->add_option("--family", family, "F:<t> or file:<path>")->required();
  c_ex->add_option("--cap", cap)->check(CLI::IsMember({1, 2}));

  auto* c_threshold = app.add_subcommand("threshold", "Largest minimum degree without a homomorphism");
  c_threshold->add_option("--n", n)->required();
  c_threshold->add_option("--r", r)->required();
  c_threshold->add_option("--kind", kind)->check(CLI::IsMember({"odd", "even"}))->required();
  c_threshold->add_option("--mode", mode)->check(CLI::IsMember({"raw", "iso"}));

  auto* c_density = app.add_subcommand("density", "Edge densities next to the family's limiting density");
  c_density->add_option("--family", family, "F:<t> or file:<path>")->required();
  c_density->add_flag("--standard", standard, "Include the standard constructions for the family");
  c_density->add_option("graphs", files, "Graph .cwg files");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const bool search = c_verify->parsed() || c_ex->parsed() || c_threshold->parsed();
  if (search && g.threads_opt->count() == 0) g.threads = std::max(1u, std::thread::hardware_concurrency());
  const SearchOptions opts{parse_mode(mode), g.threads};

  try {
    if (c_gen->parsed()) return cmd_gen(gen, g, out);
    if (c_check->parsed()) return cmd_check(family, file, g, out);
    if (c_hom->parsed()) return cmd_hom(target, file, budget, g, out);
    if (c_analyze->parsed()) return cmd_analyze(r, file, g, out);
    if (c_complete->parsed()) return cmd_complete(family, file, output, shuffle, g, out);
    if (c_verify->parsed()) {
      const auto rep = theorem == "odd" ? verify_theorem_odd(r, n, opts) : verify_theorem_even(r, n, opts);
      return report_search(rep, "verify", g, out);
    }
    if (c_ex->parsed()) {
      return report_search(compute_ex(n, load_family(family), cap, opts, family), "ex", g, out);
    }
    if (c_threshold->parsed()) {
      const auto k = kind == "odd" ? TheoremKind::Odd : TheoremKind::Even;
      return report_search(empirical_threshold(n, r, k, opts), "threshold", g, out);
    }
    if (c_density->parsed()) return cmd_density(family, files, standard, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace wgraph::cli
