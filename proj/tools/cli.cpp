#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/census.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey::cli {

namespace fs = std::filesystem;

namespace {

struct Request {
  int threads = 1;
  std::string format = "human";

  int t = 0;
  int m = 0;
  int ell = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string kind = "blowup";
  std::uint64_t node_budget = kDefaultCensusNodeBudget;
  int max_tries = 1;
  int ell_min = 2;
  int ell_max = 6;
  bool no_cache = false;

  std::string out_path;
  std::string graph_file;
  std::string spec_file;
  std::string certificate_file;
  std::string edge_dump;
};

std::string format_log2(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << x;
  return s.str();
}

void check_even_t(int t) {
  if (t % 2 != 0) {
    throw InputError("construction requires even t (got t=" + std::to_string(t) + ")");
  }
  if (t < 2 || t > kMaxEnumerationDimension) {
    throw InputError("t must lie in [2, " + std::to_string(kMaxEnumerationDimension) + "]");
  }
}

fs::path cache_dir() {
  if (const char* dir = std::getenv(kCacheEnvVar); dir != nullptr && *dir != '\0') return dir;
  return ".ramsey-cache";
}

// Census of G0(t), cached on disk under (t, hash of the graph file).
IndependentSetCensus g0_census(int t, const Request& req, std::ostream& err) {
  const BitGraph g = build_g0(t);
  const std::string hash = fnv1a_hex(graph_file_text(t, g));
  const fs::path file = cache_dir() / ("census_t" + std::to_string(t) + "_" + hash + ".csv");
  if (!req.no_cache && fs::exists(file)) {
    try {
      IndependentSetCensus cached = census_from_csv(read_text_file(file.string()));
      if (cached.max_size == t && cached.vertex_count == g.size()) {
        err << "census: loaded " << file.string() << '\n';
        return cached;
      }
    } catch (const InputError&) {
      err << "census: ignoring unreadable cache file " << file.string() << '\n';
    }
  }
  CensusOptions opts;
  opts.node_budget = req.node_budget;
  opts.threads = req.threads;
  IndependentSetCensus census = count_independent_sets(g, t, opts);
  if (!req.no_cache) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    if (!ec) {
      try {
        write_text_file(file.string(), census_to_csv(census));
      } catch (const InputError& e) {
        err << "census: cache not written: " << e.what() << '\n';
      }
    }
  }
  return census;
}

void echo(std::ostream& err, const std::string& command, const std::string& params) {
  err << "ramsey " << command << ": " << params << '\n';
}

std::string lemma1_line(const BitGraph& g, int t, bool& ok) {
  const MaxCliqueResult clique = max_clique(g);
  ok = clique.size <= t - 1;
  std::ostringstream s;
  s << "n=" << g.size() << " m=" << g.edge_count() << " max_clique=" << clique.size
    << " lemma1: " << (ok ? "OK" : "FAIL");
  return s.str();
}

int cmd_build_graph(const Request& req, std::ostream& out, std::ostream& err) {
  check_even_t(req.t);
  const std::string path = req.out_path.empty() ? "g0_t" + std::to_string(req.t) + ".txt"
                                                : req.out_path;
  echo(err, "build-graph", "t=" + std::to_string(req.t) + " out=" + path);
  const BitGraph g = build_g0(req.t);
  write_text_file(path, graph_file_text(req.t, g));
  bool ok = false;
  out << lemma1_line(g, req.t, ok) << '\n';
  return ok ? kOk : kUnverified;
}

int cmd_verify_g0(const Request& req, std::ostream& out, std::ostream& err) {
  echo(err, "verify-g0", "graph-file=" + req.graph_file);
  const G0File file = read_graph_file(req.graph_file);
  check_even_t(file.t);
  if (!(file.graph == build_g0(file.t))) {
    err << "verify-g0: graph does not match G0(t=" << file.t << ")\n";
    return kUnverified;
  }
  bool ok = false;
  out << lemma1_line(file.graph, file.t, ok) << '\n';
  return ok ? kOk : kUnverified;
}

int cmd_census(const Request& req, std::ostream& out, std::ostream& err) {
  int t = req.t;
  IndependentSetCensus census;
  if (!req.graph_file.empty()) {
    echo(err, "census", "graph-file=" + req.graph_file + " node-budget=" +
                            std::to_string(req.node_budget) +
                            " threads=" + std::to_string(req.threads));
    const G0File file = read_graph_file(req.graph_file);
    t = req.t > 0 ? req.t : file.t;
    CensusOptions opts;
    opts.node_budget = req.node_budget;
    opts.threads = req.threads;
    census = count_independent_sets(file.graph, t, opts);
  } else {
    check_even_t(t);
    echo(err, "census", "t=" + std::to_string(t) + " node-budget=" +
                            std::to_string(req.node_budget) +
                            " threads=" + std::to_string(req.threads));
    census = g0_census(t, req, err);
  }

  const std::string csv = census_to_csv(census);
  std::ostream& summary = req.out_path.empty() ? err : out;
  if (req.out_path.empty()) {
    out << csv;
  } else {
    write_text_file(req.out_path, csv);
  }
  const double log2_total = std::log2(static_cast<double>(census.total_nonempty()));
  const double ceiling = 5.0 * t * t / 8.0;
  summary << "total_nonempty=" << census.total_nonempty()
          << " total_with_empty=" << census.total_with_empty() << '\n';
  summary << "log2(total_nonempty)=" << format_log2(log2_total)
          << " 5t^2/8=" << format_log2(ceiling) << " slack(2t)=" << 2 * t
          << " growth: " << (log2_total <= ceiling + 2 * t ? "OK" : "EXCEEDS") << '\n';
  return kOk;
}

int cmd_certify(const Request& req, std::ostream& out, std::ostream& err) {
  check_even_t(req.t);
  if (req.m < 0) throw InputError("m must be non-negative");
  echo(err, "certify", "t=" + std::to_string(req.t) + " m=" + std::to_string(req.m) +
                           " node-budget=" + std::to_string(req.node_budget));
  IndependentSetCensus census;
  if (req.m > 0) census = g0_census(req.t, req, err);
  const CertifiedN result = certify_max_n(req.t, req.m, census);
  const int ell = req.m + 2;

  if (req.format == "json") {
    nlohmann::ordered_json j;
    j["t"] = req.t;
    j["m"] = req.m;
    j["ell"] = ell;
    if (result.n) {
      j["certified_n"] = *result.n;
      j["ramsey_lower_bound"] = *result.n + 1;
    } else {
      j["certified_n"] = nullptr;
      j["ramsey_lower_bound"] = nullptr;
    }
    j["p_ind_exact"] = to_fraction_string(result.report.p_ind);
    j["expected_count_exact"] = to_fraction_string(result.report.expected_count);
    j["expected_count_display"] = result.report.display_fraction();
    j["expected_count"] = to_decimal_string(result.report.expected_count);
    j["next_expected_count_exact"] = to_fraction_string(result.next_report.expected_count);
    out << j.dump(2) << '\n';
    return result.n ? kOk : kUnverified;
  }

  if (!result.n) {
    out << "no certifiable N: expected count at N=t is " << result.report.display_fraction()
        << " >= 1\n";
    return kUnverified;
  }
  const std::uint64_t n = *result.n;
  out << "certified N=" << n << ", r(" << req.t << ";" << ell << ") ≥ " << n + 1
      << ", E = " << result.report.display_fraction() << '\n';
  out << "  p_ind = " << to_fraction_string(result.report.p_ind)
      << "  E(N) = " << to_fraction_string(result.report.expected_count) << " ≈ "
      << to_decimal_string(result.report.expected_count, 6) << '\n';
  out << "  E(N+1) = " << result.next_report.display_fraction() << " ≈ "
      << to_decimal_string(result.next_report.expected_count, 6) << " (not < 1)\n";
  return kOk;
}

int cmd_generate(const Request& req, std::ostream& out, std::ostream& err) {
  ColoringSpec spec;
  spec.kind = parse_coloring_kind(req.kind);
  if (spec.kind == ColoringKind::kProduct) {
    throw InputError("generate builds blowup or erdos specs; write product specs by hand");
  }
  spec.t = req.t;
  spec.n = req.n;
  if (spec.kind == ColoringKind::kBlowup) {
    spec.m = req.m;
    spec.ell = req.m + 2;
  } else {
    spec.m = 0;
    spec.ell = req.ell;
  }
  spec.seed = req.seed ? *req.seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
  spec.validate();
  if (spec.t < 2 || spec.n < static_cast<std::uint64_t>(spec.t)) {
    throw InputError("need 2 <= t <= N");
  }
  echo(err, "generate", "kind=" + to_string(spec.kind) + " t=" + std::to_string(spec.t) +
                            " m=" + std::to_string(spec.m) + " ell=" + std::to_string(spec.ell) +
                            " N=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed));
  const std::string json = spec_to_json(spec);
  if (req.out_path.empty()) {
    out << json;
  } else {
    write_text_file(req.out_path, json);
  }
  if (!req.edge_dump.empty()) {
    std::ostringstream csv;
    write_edge_csv(csv, build_coloring(spec));
    write_text_file(req.edge_dump, csv.str());
  }
  return kOk;
}

VerifyOptions verify_options(const Request& req, std::ostream& err) {
  VerifyOptions opts;
  opts.max_tries = req.max_tries;
  opts.search.threads = req.threads;
  opts.search.node_budget = req.node_budget;
  opts.census = [&req, &err](int t) { return g0_census(t, req, err); };
  return opts;
}

std::string witness_text(const MonoWitness& w) {
  std::string s = "color " + std::to_string(w.color) + " on {";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    s += (i ? "," : "") + std::to_string(w.vertices[i]);
  }
  return s + "}";
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err) {
  const ColoringSpec spec = spec_from_json(read_text_file(req.spec_file));
  echo(err, "verify", "spec-file=" + req.spec_file + " kind=" + to_string(spec.kind) +
                          " t=" + std::to_string(spec.t) + " N=" + std::to_string(spec.n) +
                          " seed=" + std::to_string(spec.seed) +
                          " max-tries=" + std::to_string(req.max_tries) +
                          " threads=" + std::to_string(req.threads));
  VerifyOptions opts = verify_options(req, err);
  opts.on_failure = [&err](std::uint64_t seed, const MonoSearchResult& r) {
    err << "seed " << seed << ": "
        << (r.witness ? "monochromatic K_t, " + witness_text(*r.witness)
                      : std::string("search not exhaustive"))
        << '\n';
  };
  const Certificate cert = verify_coloring(spec, opts);
  const std::string json = certificate_to_json(cert);
  if (req.out_path.empty()) {
    out << json;
  } else {
    write_text_file(req.out_path, json);
  }
  if (cert.verified) {
    err << "verified: seed " << cert.seed << " after " << cert.stats.tries << " tries; r("
        << cert.t << ";" << spec.ell << ") ≥ " << spec.n + 1 << '\n';
    return kOk;
  }
  err << "not verified after " << cert.stats.tries << " tries\n";
  return kUnverified;
}

int cmd_recheck(const Request& req, std::ostream& out, std::ostream& err) {
  echo(err, "recheck", "certificate-file=" + req.certificate_file +
                           " threads=" + std::to_string(req.threads));
  const Certificate cert = certificate_from_json(read_text_file(req.certificate_file));
  VerifyOptions opts = verify_options(req, err);
  const RecheckResult r = recheck_certificate(cert, opts);
  if (!req.out_path.empty() && r.reproduces) {
    write_text_file(req.out_path, certificate_to_json(r.regenerated));
  }
  if (!r.reproduces) {
    out << "recheck: FAILED (" << r.reason << ")\n";
    return kUnverified;
  }
  out << "recheck: OK (" << (cert.verified ? "verified" : "unverified") << " certificate reproduces)\n";
  return kOk;
}

int cmd_bounds_table(const Request& req, std::ostream& out, std::ostream& err) {
  echo(err, "bounds-table", "ell-min=" + std::to_string(req.ell_min) +
                                " ell-max=" + std::to_string(req.ell_max) +
                                (req.t > 0 ? " t=" + std::to_string(req.t) : ""));
  const auto rows = asymptotic_bound_table(req.ell_min, req.ell_max);
  std::string text;
  if (req.format == "human") {
    std::ostringstream s;
    s << std::left << std::setw(5) << "ell" << std::setw(15) << "source" << std::setw(16)
      << "rate" << std::setw(10) << "2^rate";
    if (req.t > 0) s << "log2 N at t=" << req.t;
    s << '\n';
    for (const auto& r : rows) {
      const bool compound = r.rate_num.find('+') != std::string::npos;
      const std::string rate =
          r.rate_den == "1" ? r.rate_num
                            : (compound ? "(" + r.rate_num + ")" : r.rate_num) + "/" + r.rate_den;
      s << std::setw(5) << r.ell << std::setw(15) << to_string(r.source) << std::setw(16) << rate
        << std::setw(10) << (r.base_2pow.empty() ? "-" : r.base_2pow);
      if (req.t > 0) s << (r.rate_value ? format_log2(*r.rate_value * req.t) : "-");
      if (!r.note.empty()) s << "  (" << r.note << ")";
      s << '\n';
    }
    text = s.str();
  } else {
    text = bound_table_csv(rows);
  }
  if (req.out_path.empty()) {
    out << text;
  } else {
    write_text_file(req.out_path, text);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multicolour Ramsey lower bounds from random blowups of GF(2) graphs", "ramsey"};
  app.require_subcommand(1);
  Request req;
  app.add_option("--threads", req.threads, "Worker threads for searches")
      ->check(CLI::Range(1, 256));

  auto* build = app.add_subcommand("build-graph", "Write G0(t) and check its clique number");
  build->add_option("--t", req.t, "Even dimension t")->required();
  build->add_option("--out", req.out_path, "Graph file path (default g0_t<t>.txt)");

  auto* verify_g0 = app.add_subcommand("verify-g0", "Re-check a G0 graph file");
  verify_g0->add_option("--graph-file", req.graph_file)->required();

  auto* census = app.add_subcommand("census", "Count independent sets of G0(t) by size");
  auto* census_t = census->add_option("--t", req.t, "Even dimension t");
  auto* census_graph = census->add_option("--graph-file", req.graph_file, "Graph file to census");
  census_t->excludes(census_graph);
  census->add_option("--node-budget", req.node_budget);
  census->add_option("--out", req.out_path, "CSV path (default: standard output)");
  census->add_flag("--no-cache", req.no_cache);

  auto* certify = app.add_subcommand("certify", "Largest N with expected monochromatic count < 1");
  certify->add_option("--t", req.t)->required();
  certify->add_option("--m", req.m)->required();
  certify->add_option("--node-budget", req.node_budget);
  certify->add_option("--format", req.format)->check(CLI::IsMember({"human", "json"}));
  certify->add_flag("--no-cache", req.no_cache);

  auto* generate = app.add_subcommand("generate", "Write a colouring spec");
  generate->add_option("--kind", req.kind)->check(CLI::IsMember({"blowup", "erdos"}));
  generate->add_option("--t", req.t)->required();
  generate->add_option("--m", req.m);
  generate->add_option("--ell", req.ell, "Colours (erdos kind)");
  generate->add_option("--N", req.n)->required();
  generate->add_option("--seed", req.seed, "Seed (default: random, echoed)");
  generate->add_option("--out", req.out_path, "Spec path (default: standard output)");
  generate->add_option("--dump-edges", req.edge_dump, "Write x,y,color CSV (N <= 2000)");

  auto* verify = app.add_subcommand("verify", "Search seeds for a colouring with no mono K_t");
  verify->add_option("--spec-file", req.spec_file)->required();
  verify->add_option("--max-tries", req.max_tries)->check(CLI::PositiveNumber);
  verify->add_option("--node-budget", req.node_budget);
  verify->add_option("--out", req.out_path, "Certificate path (default: standard output)");
  verify->add_flag("--no-cache", req.no_cache);

  auto* bounds = app.add_subcommand("bounds-table", "Asymptotic growth-rate comparison");
  bounds->add_option("--ell-min", req.ell_min);
  bounds->add_option("--ell-max", req.ell_max);
  bounds->add_option("--t", req.t, "Also show rate * t");
  bounds->add_option("--format", req.format)->check(CLI::IsMember({"human", "csv"}));
  bounds->add_option("--out", req.out_path);

  auto* recheck = app.add_subcommand("recheck", "Re-verify a certificate from scratch");
  recheck->add_option("--certificate-file", req.certificate_file)->required();
  recheck->add_option("--node-budget", req.node_budget);
  recheck->add_option("--out", req.out_path, "Write the regenerated certificate");
  recheck->add_flag("--no-cache", req.no_cache);

  // bounds-table defaults to CSV, everything else to human-readable text.
  bounds->preparse_callback([&req](std::size_t) { req.format = "csv"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    if (*build) return cmd_build_graph(req, out, err);
    if (*verify_g0) return cmd_verify_g0(req, out, err);
    if (*census) {
      if (req.t == 0 && req.graph_file.empty()) throw InputError("census needs --t or --graph-file");
      return cmd_census(req, out, err);
    }
    if (*certify) return cmd_certify(req, out, err);
    if (*generate) return cmd_generate(req, out, err);
    if (*verify) return cmd_verify(req, out, err);
    if (*bounds) return cmd_bounds_table(req, out, err);
    if (*recheck) return cmd_recheck(req, out, err);
  } catch (const CensusAborted& e) {
    err << "error: " << e.what() << '\n';
    err << "partial counts:";
    for (auto c : e.partial().counts) err << ' ' << c;
    err << '\n';
    return kBudgetAbort;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetAbort;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }
  return kParameterError;
}

}  // namespace ramsey::cli
