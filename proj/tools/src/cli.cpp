#include "twistlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "output.hpp"
#include "twistlab/abacus.hpp"
#include "twistlab/criteria.hpp"
#include "twistlab/error.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/mullineux.hpp"
#include "twistlab/report.hpp"
#include "twistlab/search.hpp"

namespace twistlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& text, const char* name) {
  try {
    return Partition::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

Backend backend_arg(const std::string& name) {
  if (name == "auto") return Backend::Auto;
  if (name == "generic") return Backend::Generic;
  if (name == "packed") return Backend::Packed;
  throw UsageError("--backend: expected auto, generic or packed");
}

struct Args {
  Part p = 0;
  Part d = 0;
  Part n = 0;
  Part r = 0;
  std::string lambda;
  std::string mu;
  std::size_t beads = 0;
  unsigned max_b = 0;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out_path;
  std::string backend = "auto";
  bool restricted = false;
  bool stacked = false;
  bool show_symbol = false;
  std::uint64_t seed = DecomposeOptions{}.seed;
  std::string fixtures = default_fixtures_path();
};

Json cmd_mull(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  Json out = {{"input", to_json(lambda)}, {"p", a.p}};
  if (a.restricted) {
    out["mullineux"] = to_json(mullineux_restricted(lambda, a.p));
    out["restricted"] = true;
    return out;
  }
  out["mullineux"] = to_json(mullineux_map(lambda, a.p));
  out["symbol"] = symbol_json(mullineux_symbol(lambda, a.p));
  return out;
}

Json cmd_tau(const Args& a) {
  return {{"n", a.n},
          {"p", a.p},
          {"tau", to_json(tau(a.n, a.p))},
          {"closed_form", to_json(tau_closed_form(a.n, a.p))}};
}

Json cmd_hat(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  return {{"input", to_json(lambda)}, {"p", a.p}, {"hat", to_json(hat(lambda, a.p))}};
}

Json cmd_symbol(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  MullineuxSymbol symbol = mullineux_symbol(lambda, a.p);
  MullineuxSymbol image = transform_symbol(symbol);
  return {{"input", to_json(lambda)},
          {"p", a.p},
          {"symbol", symbol_json(symbol)},
          {"transformed", symbol_json(image)},
          {"text", symbol.to_string()}};
}

Json cmd_abacus(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  AbacusDisplay display = a.beads ? to_abacus(lambda, a.p, a.beads) : to_abacus(lambda, a.p);
  BlockData block = p_core(display);
  return {{"input", to_json(lambda)},
          {"p", a.p},
          {"beads", display.beads()},
          {"beta", display.beta},
          {"runners", display.runners()},
          {"core", to_json(block.core)},
          {"weight", block.weight},
          {"p_by_p", is_p_by_p(lambda, a.p)}};
}

Json cmd_ks(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lam");
  Partition mu = partition_arg(a.mu, "--mu");
  KsResult result = ks_ext1({a.p, lambda, mu});
  Json certificate = {{"digits", result.digits}, {"swapped", result.swapped}};
  certificate["witness"] = result.witness ? Json(*result.witness) : Json(nullptr);
  return {{"inputs", {{"p", a.p}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}}},
          {"result", result.dimension},
          {"certificate", certificate}};
}

Json cmd_murphy(const Args& a) {
  MurphyHook hook{a.d, a.r};
  Json result = {{"end_dim", murphy_end_dim(hook)},
                 {"indecomposable", murphy_indecomposable(hook)}};
  Json certificate = {{"shape", to_json(hook.shape())}, {"d_even", a.d % 2 == 0}};
  if (a.d % 2 == 1 && a.r > 0) {
    unsigned level = murphy_level(a.r);
    certificate["L"] = level;
    certificate["modulus"] = checked_pow(2, level);
    certificate["value"] = a.d - a.r - 1;
  }
  return {{"inputs", {{"d", a.d}, {"r", a.r}}}, {"result", result}, {"certificate", certificate}};
}

Json cmd_h0(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  H0Result result = h0_specht(lambda, a.p);
  Json certificate = {{"modulus", result.modulus}};
  certificate["failed_row"] = result.failed_row ? Json(*result.failed_row) : Json(nullptr);
  return {{"inputs", {{"p", a.p}, {"lambda", to_json(lambda)}}},
          {"result", result.nonzero},
          {"certificate", certificate}};
}

Json cmd_specht_hom(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  Partition mu = partition_arg(a.mu, "--mu");
  Backend backend = backend_arg(a.backend);
  SpechtModule source = build_specht(lambda, a.p);
  SpechtModule target = build_specht(mu, a.p);
  Json out = {{"dims", {source.dim(), target.dim()}},
              {"result", hom_dim(source, target, backend)},
              {"method", "spin"}};
  if (a.stacked) {
    out["stacked"] = hom_dim_stacked(source.representation(), target.representation());
  }
  return out;
}

Json cmd_specht_decomposable(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  DecomposeOptions options;
  options.backend = backend_arg(a.backend);
  options.seed = a.seed;
  SpechtModule module = build_specht(lambda, a.p);
  DecompositionResult result = is_decomposable(module, options);
  return {{"dims", {module.dim()}},
          {"result", result.decomposable},
          {"method", to_string(result.method)},
          {"end_dim", result.end_dim},
          {"summand_dim", result.summand_dim}};
}

Json cmd_specht_h0(const Args& a) {
  Partition lambda = partition_arg(a.lambda, "--lambda");
  SpechtModule module = build_specht(lambda, a.p);
  std::size_t fixed = invariants_dim(module);
  return {{"dims", {module.dim()}},
          {"result", fixed},
          {"method", "fixed-space"},
          {"criterion", h0_specht_nonzero(lambda, a.p)}};
}

void emit(const std::string& text, const Args& a, std::ostream& out) {
  if (a.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + a.out_path);
  file << text;
}

ReportFormat format_arg(const std::string& name) {
  try {
    return parse_report_format(name);
  } catch (const Error& e) {
    throw UsageError(std::string("--format: ") + e.what());
  }
}

int run_search(const std::string& which, const Args& a, std::ostream& out) {
  SearchOptions options{a.jobs};
  SearchReport report;
  if (which == "fixed-points") {
    report = find_twist_commuting(a.d, a.p, options);
  } else if (which == "persistence") {
    report = check_twist_persistence(a.d, a.p, options);
  } else if (which == "p-image") {
    report = find_p_image(a.d, a.p, options);
  } else if (which == "multi-twist") {
    if (a.lambda.empty()) throw UsageError("multi-twist needs --lambda");
    report = multi_twist_scan(partition_arg(a.lambda, "--lambda"), a.p, a.max_b);
  } else if (which == "ks-stability") {
    report = ks_stability_scan(a.d, a.p, options);
  } else {
    report = census(a.d, a.p);
  }
  emit(render(report, format_arg(a.format)), a, out);
  bool gate = which == "persistence" || which == "ks-stability";
  return gate && report.has_counterexamples() ? kExitCounterexample : kExitOk;
}

int run_verify(const Args& a, std::ostream& out) {
  FixtureSummary summary = verify_fixtures(a.fixtures);
  Json results = Json::array();
  Json failed = Json::array();
  for (const auto& outcome : summary.outcomes) {
    results.push_back({{"id", outcome.id}, {"passed", outcome.passed}, {"detail", outcome.detail}});
    if (!outcome.passed) failed.push_back(outcome.id);
  }
  Json body = {{"path", a.fixtures},
               {"checked", summary.outcomes.size()},
               {"passed", summary.outcomes.size() - summary.failed()},
               {"failed", failed},
               {"results", results}};
  emit(cli::render(body, format_arg(a.format)), a, out);
  return summary.ok() ? kExitOk : kExitError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Mullineux map, twisting criteria and Specht module computations", "twistlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(version()));
  app.add_option("--format", a.format, "json, csv or table");
  app.add_option("--out", a.out_path, "write output to FILE");

  auto prime = [&](CLI::App* sub) { sub->add_option("--p", a.p, "prime")->required(); };
  auto partition = [&](CLI::App* sub, const char* flags, std::string& target) {
    sub->add_option(flags, target, "comma separated parts, largest first")->required();
  };

  auto* mull = app.add_subcommand("mull", "Mullineux image m(lambda)");
  prime(mull);
  partition(mull, "--lambda", a.lambda);
  mull->add_flag("--restricted", a.restricted, "lambda is p-restricted; apply the conjugate form");
  mull->add_flag("--show-symbol", a.show_symbol, "accepted for compatibility; the symbol is always shown");

  auto* tau_cmd = app.add_subcommand("tau", "p-restricted label of the trivial module");
  prime(tau_cmd);
  tau_cmd->add_option("--n", a.n)->required();

  auto* hat_cmd = app.add_subcommand("hat", "repeat each part p-1 times");
  prime(hat_cmd);
  partition(hat_cmd, "--lambda", a.lambda);

  auto* symbol = app.add_subcommand("symbol", "Mullineux symbol and its transform");
  prime(symbol);
  partition(symbol, "--lambda", a.lambda);

  auto* abacus = app.add_subcommand("abacus", "abacus display, p-core and weight");
  prime(abacus);
  partition(abacus, "--lambda", a.lambda);
  abacus->add_option("--beads", a.beads);

  auto* ks = app.add_subcommand("ks-ext", "Ext^1 between two-part simple modules");
  prime(ks);
  partition(ks, "--lam,--lambda", a.lambda);
  partition(ks, "--mu", a.mu);

  auto* murphy = app.add_subcommand("murphy", "hook Specht module formulas at p = 2");
  murphy->add_option("--d", a.d)->required();
  murphy->add_option("--r", a.r)->required();

  auto* h0 = app.add_subcommand("h0", "H^0 criterion for S^lambda");
  prime(h0);
  partition(h0, "--lambda", a.lambda);

  auto* specht = app.add_subcommand("specht", "linear algebra on Specht modules");
  specht->require_subcommand(1);
  auto* hom = specht->add_subcommand("hom", "dim Hom(S^lambda, S^mu)");
  prime(hom);
  partition(hom, "--lam,--lambda", a.lambda);
  partition(hom, "--mu", a.mu);
  hom->add_option("--backend", a.backend, "auto, generic or packed");
  hom->add_flag("--stacked", a.stacked, "also solve the full stacked system");
  auto* decomposable = specht->add_subcommand("decomposable", "search for a splitting idempotent");
  prime(decomposable);
  partition(decomposable, "--lambda", a.lambda);
  decomposable->add_option("--backend", a.backend, "auto, generic or packed");
  decomposable->add_option("--seed", a.seed, "seed for Fitting sampling");
  auto* specht_h0 = specht->add_subcommand("h0", "dimension of the fixed points of S^lambda");
  prime(specht_h0);
  partition(specht_h0, "--lambda", a.lambda);

  auto* search = app.add_subcommand("search", "exhaustive scans with structured reports");
  search->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> searches;
  for (const char* name :
       {"fixed-points", "persistence", "p-image", "multi-twist", "ks-stability", "census"}) {
    auto* sub = search->add_subcommand(name);
    prime(sub);
    if (std::string(name) == "multi-twist") {
      partition(sub, "--lambda", a.lambda);
      sub->add_option("--max-b", a.max_b)->required();
    } else {
      sub->add_option("--d", a.d)->required();
    }
    sub->add_option("--jobs", a.jobs, "worker threads, 0 for all cores");
    searches.emplace_back(name, sub);
  }

  auto* verify = app.add_subcommand("verify", "evaluate a fixtures file");
  verify->add_option("path", a.fixtures, "fixtures JSON")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<Json(const Args&)>>> simple = {
      {mull, cmd_mull},     {tau_cmd, cmd_tau},       {hat_cmd, cmd_hat},
      {symbol, cmd_symbol}, {abacus, cmd_abacus},     {ks, cmd_ks},
      {murphy, cmd_murphy}, {h0, cmd_h0},             {hom, cmd_specht_hom},
      {decomposable, cmd_specht_decomposable},        {specht_h0, cmd_specht_h0}};
  try {
    for (const auto& [sub, handler] : simple) {
      if (sub->parsed()) {
        ReportFormat format = format_arg(a.format);
        emit(cli::render(handler(a), format), a, out);
        return kExitOk;
      }
    }
    for (const auto& [name, sub] : searches) {
      if (sub->parsed()) return run_search(name, a, out);
    }
    if (verify->parsed()) return run_verify(a, out);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FixtureParseError& e) {
    err << a.fixtures << ':' << e.line() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace twistlab::cli
