#include "gainarr/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/io.hpp"
#include "gainarr/lowdim.hpp"
#include "gainarr/signed.hpp"
#include "gainarr/verify.hpp"
#include "gainarr/version.hpp"

namespace gainarr {

namespace {

struct RunConfig {
  int max_vertices = 12;
  std::size_t max_hyperplanes = 24;
  std::size_t node_cap = 100000;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string input;
};

Json header(const std::string& command, const RunConfig& cfg) {
  return Json{{"tool", "gainarr"},
              {"version", version},
              {"command", command},
              {"seed", cfg.seed},
              {"bounds",
               {{"max_vertices", cfg.max_vertices},
                {"max_hyperplanes", cfg.max_hyperplanes},
                {"node_cap", cfg.node_cap}}}};
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "tsv") {
    for (const auto& [k, v] : j.items()) out << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
}

GainGraph load(const RunConfig& cfg, std::ostream& err) {
  ParsedGraph p = parse_graph_text(read_text_file(cfg.input));
  for (const auto& w : p.warnings) err << "warning: " << w << '\n';
  if (static_cast<int>(p.graph.num_vertices()) > cfg.max_vertices) {
    fail(ErrorKind::BoundExceeded, "graph has " + std::to_string(p.graph.num_vertices()) +
                                       " vertices, above --max-vertices " + std::to_string(cfg.max_vertices));
  }
  return std::move(p.graph);
}

int cmd_chi(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GainGraph g = load(cfg, err);
  Json j = header("chi", cfg);
  j["graph"] = to_json(g);
  const IntPolynomial a = chi_gaingraph_recursive(g, ArrangementKind::Affinographic);
  const IntPolynomial c = chi_gaingraph_recursive(g, ArrangementKind::ConeAffinographic);
  const IntPolynomial b = chi_gaingraph_recursive(g, ArrangementKind::Bias);
  j["chiA"] = to_json(a);
  j["chiConeA"] = to_json(c);
  j["chiB"] = to_json(b);
  const bool shift_ok = a == b.shifted(1);
  j["lemmaCheck"] = shift_ok;
  bool poset_ok = true;
  if (g.num_vertices() + g.num_edges() <= cfg.max_hyperplanes) {
    const PosetOptions po{cfg.max_hyperplanes, PosetOptions{}.max_flats};
    poset_ok = chi_poset(build_arrangement(g, ArrangementKind::Affinographic), po) == a &&
               chi_poset(build_arrangement(g, ArrangementKind::ConeAffinographic), po) == c &&
               chi_poset(build_arrangement(g, ArrangementKind::Bias), po) == b;
    j["posetCheck"] = poset_ok;
  } else {
    j["posetCheck"] = nullptr;
    err << "note: poset cross-check skipped, more than " << cfg.max_hyperplanes << " hyperplanes\n";
  }
  emit(j, cfg, out);
  return shift_ok && poset_ok ? ExitPass : ExitVerification;
}

Json signed_predicates(const GainGraph& g) {
  if (!g.group().is_signed()) fail(ErrorKind::Precondition, "signed graphs need 'group F 2'");
  const SignedGraphView s(g);
  Json j{{"balancedChordal", is_balanced_chordal(s)},
         {"inducedUnbalancedCycle", has_induced_unbalanced_cycle(s)},
         {"switchingObstruction", has_switching_obstruction(s)},
         {"criterion", signed_freeness_criterion(s)},
         {"positiveComplete", s.positive().is_complete()}};
  if (s.positive().is_complete()) {
    j["negativeThreshold"] = is_threshold(s.negative());
    j["edelmanReiner"] = edelman_reiner_freeness(s);
  }
  return j;
}

int free_along(const GainGraph& g, FreenessMode mode, const RunConfig& cfg, Json& j) {
  FreenessOptions fo;
  fo.node_cap = cfg.node_cap;
  bool ok = true;
  bool verdicts[2];
  int k = 0;
  for (auto kind : {ArrangementKind::ConeAffinographic, ArrangementKind::Bias}) {
    const FreenessCertificate cert = decide_along_edges(g, kind, mode, fo);
    Json c = to_json(cert);
    if (cert.verdict) {
      const bool replayed = replay_witness(cert);
      c["replayed"] = replayed;
      ok = ok && replayed;
    }
    verdicts[k++] = cert.verdict;
    j[kind == ArrangementKind::Bias ? "bias" : "cone"] = std::move(c);
  }
  j["agree"] = verdicts[0] == verdicts[1];
  return ok && verdicts[0] == verdicts[1] ? ExitPass : ExitVerification;
}

int cmd_free(const RunConfig& cfg, const std::string& mode, std::ostream& out, std::ostream& err) {
  const GainGraph g = load(cfg, err);
  Json j = header("free", cfg);
  j["mode"] = mode;
  j["graph"] = to_json(g);
  int code = ExitPass;
  if (mode == "if-edges" || mode == "df-edges") {
    code = free_along(g, mode == "if-edges" ? FreenessMode::InductiveAlongEdges : FreenessMode::DivisionalAlongEdges,
                      cfg, j);
  } else if (mode == "signed") {
    j["predicates"] = signed_predicates(g);
    const bool crit = j["predicates"]["criterion"];
    const bool bias = free_along_edges(g, ArrangementKind::Bias, FreenessMode::DivisionalAlongEdges, cfg.node_cap);
    const bool cone =
        free_along_edges(g, ArrangementKind::ConeAffinographic, FreenessMode::DivisionalAlongEdges, cfg.node_cap);
    j["verdict"] = crit ? "yes" : "no";
    j["dfBias"] = bias;
    j["dfCone"] = cone;
    j["agree"] = crit == bias && crit == cone;
    code = crit == bias && crit == cone ? ExitPass : ExitVerification;
  } else {
    if (!g.group().is_integers() || g.num_vertices() != 3) {
      fail(ErrorKind::Precondition, "free3 needs a three-vertex graph over Z");
    }
    const Coincidence3 r = coincidence_3dim(g);
    j["cone"] = to_json(r.cone);
    j["bias"] = to_json(r.bias);
    j["agree"] = true;
  }
  emit(j, cfg, out);
  return code;
}

int cmd_signed_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GainGraph g = load(cfg, err);
  Json j = header("signed-check", cfg);
  j["graph"] = to_json(g);
  j["predicates"] = signed_predicates(g);
  emit(j, cfg, out);
  return ExitPass;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, VerifyConfig vc, std::ostream& out,
               std::ostream& err) {
  vc.seed = cfg.seed;
  vc.node_cap = cfg.node_cap;
  const SuiteReport rep = run_suite(suite, vc);
  for (const auto& c : rep.criteria) {
    err << "[" << c.id << "] " << c.title << ": " << (c.pass() ? "PASS" : "FAIL") << '\n';
  }
  if (cfg.format == "tsv") {
    out << "criterion\tcheck\tinstances\tfailures\tpass\n";
    for (const auto& c : rep.criteria) {
      for (const auto& k : c.checks) {
        out << c.id << '\t' << k.name << '\t' << k.instances << '\t' << k.failures << '\t'
            << (k.pass() ? "true" : "false") << '\n';
      }
    }
  } else {
    Json j = to_json(rep);
    j["command"] = "verify";
    out << j.dump(2) << '\n';
  }
  return rep.pass() ? ExitPass : ExitVerification;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BoundExceeded:
    case ErrorKind::Overflow:
      return ExitBound;
    case ErrorKind::Verification:
      return ExitVerification;
    default:
      return ExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gain graphs, their hyperplane arrangements and freeness checks", "gainarr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version);
  RunConfig cfg;
  app.add_option("--max-vertices", cfg.max_vertices, "Largest accepted graph")->check(CLI::PositiveNumber);
  app.add_option("--max-hyperplanes", cfg.max_hyperplanes, "Poset cross-checks above this size are skipped")
      ->check(CLI::Range(1, 64));
  app.add_option("--node-cap", cfg.node_cap, "Graphs a freeness search may decide")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random corpora");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  auto* chi = app.add_subcommand("chi", "Characteristic polynomials of A, cA and B");
  chi->add_option("graph", cfg.input, "Gain-graph file")->required();

  std::string mode = "if-edges";
  auto* free = app.add_subcommand("free", "Freeness verdicts with certificates");
  free->add_option("graph", cfg.input, "Gain-graph file")->required();
  free->add_option("--mode", mode, "if-edges, df-edges, signed or free3")
      ->check(CLI::IsMember({"if-edges", "df-edges", "signed", "free3"}));

  auto* signed_check = app.add_subcommand("signed-check", "Signed-graph predicates");
  signed_check->add_option("graph", cfg.input, "Gain-graph file over F 2")->required();

  auto* free3 = app.add_subcommand("free3", "Three-vertex freeness of cA and B");
  free3->add_option("graph", cfg.input, "Three-vertex gain-graph file over Z")->required();

  std::string kind;
  int l = 3, m = 1;
  auto* family = app.add_subcommand("family", "Write a family graph in the text format");
  family->add_option("kind", kind, "coxeter, boolean, catalan, shi or dms")
      ->required()
      ->check(CLI::IsMember({"coxeter", "boolean", "catalan", "shi", "dms"}));
  family->add_option("--l", l, "Number of vertices")->check(CLI::Range(2, 64));
  family->add_option("--m", m, "Gain range parameter")->check(CLI::NonNegativeNumber);

  std::string suite = "all";
  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "coincidence, families, signed, lowdim, properties or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--random-graphs", vc.random_graphs, "Random graphs per randomized check");
  verify->add_option("--workers", vc.workers, "Worker threads, 0 for one per core");
  verify->add_option("--max-examples", vc.max_examples, "Failing instances kept per check");
  verify->add_option("--corpus-max-vertices", vc.corpus_max_vertices, "Exhaustive corpus size")
      ->check(CLI::Range(1, 5));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ExitPass : ExitUsage;
  }

  try {
    if (*chi) return cmd_chi(cfg, out, err);
    if (*free) return cmd_free(cfg, mode, out, err);
    if (*free3) return cmd_free(cfg, "free3", out, err);
    if (*signed_check) return cmd_signed_check(cfg, out, err);
    if (*family) {
      out << write_graph_text(make_family(parse_family_kind(kind), l, m));
      return ExitPass;
    }
    if (*verify) return cmd_verify(cfg, suite, vc, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitUsage;
  }
  return ExitUsage;
}

}  // namespace gainarr
