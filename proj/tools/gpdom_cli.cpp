#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpdom/constructor.hpp"
#include "gpdom/domination.hpp"
#include "gpdom/error.hpp"
#include "gpdom/graph.hpp"
#include "gpdom/json_io.hpp"
#include "gpdom/normalizer.hpp"
#include "gpdom/robustness.hpp"
#include "gpdom/solver.hpp"

using namespace gpdom;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Common {
  bool one_based = false;
  bool zero_based = false;
  int base() const { return one_based ? 1 : 0; }
};

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeLimit: return kExitGuard;
    case ErrorCode::InvalidParameter:
    case ErrorCode::InvalidFault:
    case ErrorCode::InvalidEdge:
    case ErrorCode::InvalidVertex:
    case ErrorCode::InvalidSet:
    case ErrorCode::ParseError:
    case ErrorCode::NotApplicable: return kExitUsage;
    default: return kExitMismatch;
  }
}

FaultSpec parse_fault(const std::string& text, int n, int base) {
  if (text.empty() || text == "none") return {};
  auto v = parse_vertex(text, base);
  if (!v || v->index < 0 || v->index >= n)
    throw Error(ErrorCode::InvalidFault, "bad fault '" + text + "' for n=" + std::to_string(n));
  return FaultSpec{*v};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

std::string fault_text(const FaultSpec& f, int base) {
  return f.faulted ? format_vertex(*f.faulted, base) : std::string("none");
}

std::string tokens(const DomSet& s, int base) {
  std::string out;
  for (const Vertex& v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += format_vertex(v, base);
  }
  return out;
}

// Closed-form expectation, or -1 when there is none.
int expected_gamma(int n, const FaultSpec& f) {
  if (!f.faulted) return ceil_three_fifths(n);
  if (f.is_outer() && n >= 5) return faulted_formula(n);
  return -1;
}

void print_certificate(const std::string& format, int n, const FaultSpec& fault, const SolveResult& r,
                       bool verified, int base) {
  if (format == "json") {
    std::cout << certificate_json(n, 2, fault, r, verified, base).dump() << "\n";
  } else if (format == "set") {
    std::cout << "# n=" << n << " fault=" << fault_text(fault, base) << " gamma=" << r.gamma
              << " engine=" << to_string(r.engine) << "\n";
    for (const Vertex& v : r.certificate.vertices()) std::cout << format_vertex(v, base) << "\n";
  } else {
    std::cout << "n=" << n << " fault=" << fault_text(fault, base) << "\n"
              << "gamma=" << r.gamma << "\n"
              << "engine=" << to_string(r.engine) << "\n"
              << "verified=" << (verified ? "true" : "false") << "\n"
              << "set=" << tokens(r.certificate, base) << "\n";
  }
}

// ---- gamma ----

struct GammaArgs {
  int n = 0;
  std::string fault;
  std::string engine = "auto";
  std::string format = "text";
  bool force = false;
};

int cmd_gamma(const GammaArgs& a, const Common& c) {
  const int base = c.base();
  const FaultSpec fault = parse_fault(a.fault, a.n, base);
  const GPGraph g = GPGraph::build(a.n, 2, fault);
  SolveResult r;
  if (a.engine == "bnb") {
    BnbOptions o;
    o.force = a.force;
    r = solve_bnb(g, o);
  } else {
    r = solve_dp(a.n, fault);
  }
  const bool verified = verify_certificate(g, r.certificate, r.gamma).ok();
  print_certificate(a.format, a.n, fault, r, verified, base);

  const int want = expected_gamma(a.n, fault);
  if (a.format == "text") {
    if (want < 0)
      std::cout << "note: no closed form for inner faults; value is solver output only\n";
    else
      std::cout << "formula=" << want << " match=" << (want == r.gamma ? "yes" : "NO") << "\n";
  }
  if (!verified) return kExitMismatch;
  return (want >= 0 && want != r.gamma) ? kExitMismatch : kExitOk;
}

// ---- survey ----

struct SurveyArgs {
  int from = 5;
  int to = 14;
  std::string format = "table";
  int jobs = 1;
};

struct SurveyRow {
  int n = 0;
  int ceil35 = 0;
  int gamma = 0;
  int gamma_f = 0;
  int formula = 0;
  bool match = false;
};

int cmd_survey(const SurveyArgs& a) {
  if (a.from < 3 || a.to < a.from) throw Error(ErrorCode::InvalidParameter, "need 3 <= from <= to");
  const int count = a.to - a.from + 1;
  std::vector<SurveyRow> rows(count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      SurveyRow& row = rows[i];
      row.n = a.from + i;
      row.ceil35 = ceil_three_fifths(row.n);
      row.gamma = solve_dp(row.n).gamma;
      row.gamma_f = solve_dp(row.n, FaultSpec::outer(0, row.n)).gamma;
      row.formula = row.n >= 5 ? faulted_formula(row.n) : row.ceil35;
      row.match = row.gamma == row.ceil35 && row.gamma_f == row.formula;
    }
  };
  const int jobs = std::clamp(a.jobs, 1, count);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  bool all = true;
  if (a.format == "json") {
    auto arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n}, {"ceil_3n_5", r.ceil35}, {"gamma", r.gamma}, {"gamma_f", r.gamma_f},
                     {"residue", r.n % 5}, {"formula", r.formula}, {"match", r.match}});
      all = all && r.match;
    }
    std::cout << arr.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "n,ceil_3n_5,gamma,gamma_f,residue,formula,match\n";
    for (const auto& r : rows) {
      std::cout << r.n << ',' << r.ceil35 << ',' << r.gamma << ',' << r.gamma_f << ',' << r.n % 5 << ','
                << r.formula << ',' << (r.match ? "yes" : "no") << "\n";
      all = all && r.match;
    }
  } else {
    std::cout << "    n  ceil(3n/5)  gamma  gamma_f  n%5  formula  match\n";
    for (const auto& r : rows) {
      char line[96];
      std::snprintf(line, sizeof line, "%5d  %10d  %5d  %7d  %3d  %7d  %5s\n", r.n, r.ceil35, r.gamma, r.gamma_f,
                    r.n % 5, r.formula, r.match ? "yes" : "NO");
      std::cout << line;
      all = all && r.match;
    }
  }
  return all ? kExitOk : kExitMismatch;
}

// ---- verify / normalize ----

struct SetArgs {
  int n = 0;
  std::string fault;
  std::string set;
  int claimed = -1;
  std::string format = "text";
};

DomSet load_set(const SetArgs& a, int base, FaultSpec& fault, int& n, int& claimed) {
  const std::string text = read_input(a.set);
  if (looks_like_json(text)) {
    CertificateDoc doc = parse_certificate_json(text, base);
    if (a.n > 0 && a.n != doc.n) throw Error(ErrorCode::InvalidParameter, "--n disagrees with certificate");
    n = doc.n;
    fault = a.fault.empty() ? doc.fault : parse_fault(a.fault, n, base);
    if (claimed < 0) claimed = doc.gamma;
    return doc.set;
  }
  if (a.n < 3) throw Error(ErrorCode::InvalidParameter, "--n is required for a plain set file");
  n = a.n;
  fault = parse_fault(a.fault, n, base);
  return parse_set_file(text, n, base);
}

int cmd_verify(const SetArgs& a, const Common& c) {
  const int base = c.base();
  FaultSpec fault;
  int n = 0;
  int claimed = a.claimed;
  const DomSet s = load_set(a, base, fault, n, claimed);
  if (claimed < 0) claimed = s.size();
  const GPGraph g = GPGraph::build(n, 2, fault);
  const CertificateReport rep = verify_certificate(g, s, claimed);

  if (a.format == "json") {
    json j{{"n", n},
           {"fault", fault.faulted ? json(format_vertex(*fault.faulted, base)) : json(nullptr)},
           {"size", rep.size},
           {"claimed", rep.claimed},
           {"dominating", rep.dominating},
           {"size_matches", rep.size_matches},
           {"ok", rep.ok()}};
    auto und = json::array();
    for (const Vertex& v : rep.undominated) und.push_back(format_vertex(v, base));
    j["undominated"] = und;
    if (rep.window_ok) j["window"] = {{"low", rep.window_low}, {"high", rep.window_high}, {"ok", *rep.window_ok}};
    if (!rep.error.empty()) j["error"] = rep.error;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " fault=" << fault_text(fault, base) << " size=" << rep.size
              << " claimed=" << rep.claimed << "\n";
    std::cout << "dominating=" << (rep.dominating ? "yes" : "no") << "\n";
    if (!rep.undominated.empty()) {
      std::cout << "undominated=";
      for (std::size_t i = 0; i < rep.undominated.size(); ++i)
        std::cout << (i ? " " : "") << format_vertex(rep.undominated[i], base);
      std::cout << "\n";
    }
    if (rep.window_ok)
      std::cout << "window=[" << rep.window_low << "," << rep.window_high << "] "
                << (*rep.window_ok ? "ok" : "VIOLATED") << "\n";
    if (!rep.error.empty()) std::cout << "error=" << rep.error << "\n";
    std::cout << (rep.ok() ? "OK" : "FAIL") << "\n";
  }
  return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_normalize(const SetArgs& a, const Common& c) {
  const int base = c.base();
  FaultSpec fault;
  int n = 0;
  int claimed = a.claimed;
  const DomSet s = load_set(a, base, fault, n, claimed);
  if (!fault.faulted || !fault.is_outer())
    throw Error(ErrorCode::NotApplicable, "normalize needs an outer fault");
  const GPGraph g = GPGraph::build(n, 2, fault);
  const Normalization out = normalize(g, s, fault);

  if (a.format == "json") {
    auto steps = json::array();
    for (const auto& st : out.steps)
      steps.push_back({{"rule", to_string(st.rule)},
                       {"removed", format_vertex(st.removed, base)},
                       {"added", format_vertex(st.added, base)},
                       {"gamma_profile_after", st.gammas_after}});
    auto set = json::array();
    for (const Vertex& v : out.set.vertices()) set.push_back(format_vertex(v, base));
    std::cout << json{{"steps", steps},
                      {"type", to_string(out.tag)},
                      {"set", set},
                      {"couples_before", out.couples_before_reduction},
                      {"couples_after", out.couples_after_reduction},
                      {"stuck", out.stuck}}
                     .dump()
              << "\n";
  } else {
    std::cout << format_trace(out.steps, base);
    std::cout << "type=" << to_string(out.tag) << "\n"
              << "couples=" << out.couples_before_reduction << "->" << out.couples_after_reduction << "\n"
              << "set=" << tokens(out.set, base) << "\n";
  }
  return kExitOk;
}

// ---- construct ----

struct ConstructArgs {
  int n = 0;
  std::string fault;
  std::string format = "text";
};

int cmd_construct(const ConstructArgs& a, const Common& c) {
  const int base = c.base();
  const FaultSpec fault = parse_fault(a.fault, a.n, base);
  const SolveResult r = construct(a.n, fault);
  const GPGraph g = GPGraph::build(a.n, 2, fault);
  const bool verified = verify_certificate(g, r.certificate, r.gamma).ok();
  print_certificate(a.format, a.n, fault, r, verified, base);
  return verified ? kExitOk : kExitMismatch;
}

// ---- mu / bondage ----

struct RobustArgs {
  int n = 0;
  int r = 2;
  int jobs = 1;
  long long max_solves = -1;
  bool no_symmetry = false;
  std::string format = "text";
};

RobustnessOptions options_of(const RobustArgs& a) {
  RobustnessOptions o;
  o.jobs = std::max(1, a.jobs);
  o.max_solves = a.max_solves;
  o.symmetry_reduction = !a.no_symmetry;
  return o;
}

int cmd_mu(const RobustArgs& a, const Common& c) {
  const int base = c.base();
  const RobustnessReport rep = alteration_number(a.n, a.r, options_of(a));
  const AlterationPart& mu = *rep.mu;
  const bool special = a.n % 5 == 1 || a.n % 5 == 2;
  bool mismatch = !mu.inner_counterexamples.empty();
  if (mu.exact) mismatch = mismatch || (special != (*mu.exact == 1));

  if (a.format == "json") {
    std::cout << to_json(rep, base).dump() << "\n";
  } else {
    std::cout << "n=" << rep.n << " gamma=" << rep.gamma << " solves=" << rep.solves << "\n";
    if (mu.exact)
      std::cout << "mu=" << *mu.exact << "\n";
    else
      std::cout << "mu>=" << mu.lower << (mu.budget_exhausted ? " (budget exhausted)" : "") << "\n";
    for (std::size_t i = 0; i < mu.witnesses.size(); ++i) {
      std::cout << "witness=";
      for (std::size_t j = 0; j < mu.witnesses[i].size(); ++j)
        std::cout << (j ? "," : "") << format_vertex(mu.witnesses[i][j], base);
      std::cout << " gamma_after=" << mu.witness_gammas[i] << "\n";
    }
    for (const Vertex& v : mu.inner_counterexamples)
      std::cout << "FLAG inner vertex " << format_vertex(v, base) << " changes gamma\n";
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_bondage(const RobustArgs& a, const Common& c) {
  const int base = c.base();
  const RobustnessReport rep = bondage_number(a.n, a.r, options_of(a));
  const BondagePart& b = *rep.bondage;
  const bool bounded_class = !(a.n % 5 == 1 || a.n % 5 == 2);
  const bool mismatch = bounded_class && b.exact && (*b.exact < 2 || *b.exact > 3);

  if (a.format == "json") {
    std::cout << to_json(rep, base).dump() << "\n";
  } else {
    std::cout << "n=" << rep.n << " gamma=" << rep.gamma << " solves=" << rep.solves << "\n";
    if (b.exact)
      std::cout << "bondage=" << *b.exact << "\n";
    else
      std::cout << "bondage in [" << b.low << "," << b.high << "]"
                << (b.budget_exhausted ? " (budget exhausted)" : "") << "\n";
    for (std::size_t i = 0; i < b.witnesses.size(); ++i) {
      std::cout << "witness=";
      for (std::size_t j = 0; j < b.witnesses[i].size(); ++j)
        std::cout << (j ? "," : "") << format_edge(b.witnesses[i][j], base);
      std::cout << " gamma_after=" << b.witness_gammas[i] << "\n";
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination in generalized Petersen graphs P(n,2) with an optional faulty vertex"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--one-based", common.one_based, "Read and print vertex indices starting at 1");
  app.add_flag("--zero-based", common.zero_based, "Read and print vertex indices starting at 0 (default)");

  const auto formats = CLI::IsMember({"text", "json", "set"});

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Exact domination number with a certificate");
  gamma->add_option("--n", ga.n, "Cycle length")->required()->check(CLI::Range(3, 1 << 20));
  gamma->add_option("--fault", ga.fault, "Deleted vertex, e.g. u0 or v3");
  gamma->add_option("--engine", ga.engine, "auto, bnb or dp")->check(CLI::IsMember({"auto", "bnb", "dp"}));
  gamma->add_option("--format", ga.format, "text, json or set")->check(formats);
  gamma->add_flag("--force", ga.force, "Lift the branch-and-bound size guard");

  SurveyArgs sa;
  auto* survey = app.add_subcommand("survey", "Tabulate gamma and gamma_f against the closed forms");
  survey->add_option("--from", sa.from)->check(CLI::Range(3, 1 << 20));
  survey->add_option("--to", sa.to)->check(CLI::Range(3, 1 << 20));
  survey->add_option("--format", sa.format)->check(CLI::IsMember({"table", "csv", "json"}));
  survey->add_option("--jobs", sa.jobs)->check(CLI::Range(1, 256));

  SetArgs va;
  auto* verify = app.add_subcommand("verify", "Check a set file or certificate");
  verify->add_option("--n", va.n)->check(CLI::Range(3, 1 << 20));
  verify->add_option("--fault", va.fault);
  verify->add_option("--set", va.set, "Set file, certificate JSON, or - for stdin")->required();
  verify->add_option("--claimed", va.claimed, "Claimed size (defaults to the certificate gamma or |S|)");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

  SetArgs na;
  auto* norm = app.add_subcommand("normalize", "Rewrite a minimum set to Type II/III and print the trace");
  norm->add_option("--n", na.n)->check(CLI::Range(5, 1 << 20));
  norm->add_option("--fault", na.fault);
  norm->add_option("--set", na.set)->required();
  norm->add_option("--format", na.format)->check(CLI::IsMember({"text", "json"}));

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "Build an explicit minimum dominating set");
  cons->add_option("--n", ca.n)->required()->check(CLI::Range(3, 1 << 20));
  cons->add_option("--fault", ca.fault);
  cons->add_option("--format", ca.format)->check(formats);

  RobustArgs ma;
  auto* mu = app.add_subcommand("mu", "Alteration number by exhaustive vertex removal");
  RobustArgs ba;
  auto* bond = app.add_subcommand("bondage", "Bondage number by exhaustive edge removal");
  for (auto [cmd, args] : {std::pair{mu, &ma}, std::pair{bond, &ba}}) {
    cmd->add_option("--n", args->n)->required()->check(CLI::Range(5, 40));
    cmd->add_option("--r", args->r, "Largest removal set size")->check(CLI::Range(1, 6));
    cmd->add_option("--jobs", args->jobs)->check(CLI::Range(1, 256));
    cmd->add_option("--max-solves", args->max_solves, "Solver call budget");
    cmd->add_flag("--no-symmetry", args->no_symmetry, "Search every removal set, not one per orbit");
    cmd->add_option("--format", args->format)->check(CLI::IsMember({"text", "json"}));
  }
  ma.r = 2;
  ba.r = 3;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (common.one_based && common.zero_based) {
    std::cerr << "--one-based and --zero-based are exclusive\n";
    return kExitUsage;
  }

  try {
    if (*gamma) return cmd_gamma(ga, common);
    if (*survey) return cmd_survey(sa);
    if (*verify) return cmd_verify(va, common);
    if (*norm) return cmd_normalize(na, common);
    if (*cons) return cmd_construct(ca, common);
    if (*mu) return cmd_mu(ma, common);
    if (*bond) return cmd_bondage(ba, common);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
