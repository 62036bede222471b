#include "bohrlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "bohrlab/errors.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/subordination.hpp"
#include "bohrlab/suites.hpp"

namespace bohrlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kWitnessAgreement = 1e-8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Locale-independent shortest-exact-enough form for CSV cells.
std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json envelope(const std::string& command, Json inputs, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  return j;
}

Json radius_json(const RadiusResult& r) {
  return Json{{"name", r.name},           {"kind", "solver"},         {"value", r.value},
              {"bracket_lo", r.bracket_lo}, {"bracket_hi", r.bracket_hi}, {"residual", r.residual},
              {"iterations", r.iterations}};
}

Json formula_json(const std::string& name, double value) {
  return Json{{"name", name}, {"kind", "formula"}, {"value", value}, {"residual", 0.0}};
}

Json witness_json(const WitnessReport& w) {
  return Json{{"family", family_name(w.family)},
              {"parameter", w.parameter},
              {"p", w.p},
              {"threshold_predicted", w.threshold_predicted},
              {"threshold_found", w.threshold_found},
              {"difference", w.difference()}};
}

struct RadiusArgs {
  std::string name;
  double a0 = 0.0;
  double p = 1.0;
  double tol = kDefaultTolerance;
  CLI::Option* a0_opt = nullptr;
  CLI::Option* p_opt = nullptr;
};

int run_radius(const RadiusArgs& a, std::ostream& out) {
  Json inputs{{"name", a.name}, {"tol", a.tol}};
  auto need_a0 = [&] {
    if (a.a0_opt->count() == 0) throw UsageError("radius --name " + a.name + " requires --a0");
    inputs["a0"] = a.a0;
  };
  Json result;
  if (a.name == "classical") {
    result = formula_json("classical", classical_bohr_radius());
  } else if (a.name == "refined") {
    need_a0();
    result = formula_json("refined", refined_radius(a.a0));
  } else if (a.name == "pfamily") {
    need_a0();
    if (a.p_opt->count() == 0) throw UsageError("radius --name pfamily requires --p");
    inputs["p"] = a.p;
    result = formula_json("pfamily", p_family_radius(a.a0, a.p));
  } else if (a.name == "rstar") {
    result = radius_json(rstar_bisect(a.tol));
    result["cardano"] = rstar_cardano();
  } else if (a.name == "r0") {
    need_a0();
    result = radius_json(solve_r0(a.a0, a.tol));
  } else {
    result = radius_json(solve_rg(a.tol));
  }
  out << envelope("radius", std::move(inputs), std::move(result)).dump(2) << '\n';
  return kOk;
}

struct SweepArgs {
  std::string target;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  double p = 1.0;
};

int run_sweep(const SweepArgs& s, std::ostream& out) {
  if (!(s.from < s.to)) throw UsageError("sweep requires --from < --to");
  if (s.steps < 2) throw UsageError("sweep requires --steps >= 2");
  const bool witness = s.target == "witness_thmB";
  // Evaluate the whole grid first so a domain error leaves stdout empty.
  std::ostringstream buf;
  buf << (witness ? "param,value,predicted,found\n" : "param,value\n");
  for (int k = 0; k < s.steps; ++k) {
    const double x = k + 1 == s.steps ? s.to : s.from + (s.to - s.from) * k / (s.steps - 1);
    if (s.target == "r0") {
      buf << format17(x) << ',' << format17(solve_r0(x).value) << '\n';
    } else if (s.target == "pfamily") {
      buf << format17(x) << ',' << format17(p_family_radius(x, s.p)) << '\n';
    } else {
      const auto w = sharpness_witness_thmB(x, s.p);
      buf << format17(x) << ',' << format17(w.threshold_found) << ',' << format17(w.threshold_predicted) << ','
          << format17(w.threshold_found) << '\n';
    }
  }
  out << buf.str();
  return kOk;
}

int run_verify(const std::string& suite, const suites::SuiteOptions& o, std::ostream& out, std::ostream& err) {
  if (o.trials < 1) throw UsageError("verify requires --trials >= 1");
  if (o.order < 8) throw UsageError("verify requires --order >= 8");
  const auto rep = suites::run_suite(suite, o);
  Json trials = Json::array();
  for (const auto& t : rep.trials)
    trials.push_back(
        Json{{"seed", t.seed}, {"worst_margin", t.worst_margin}, {"max_tail", t.max_tail}, {"passed", t.passed}});
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(Json{{"label", c.label}, {"value", c.value}, {"bound", c.bound}, {"tail", c.tail}, {"passed", c.passed}});
  Json result{{"suite", rep.name},
              {"trials", static_cast<int>(rep.trials.size())},
              {"violations", rep.violations()},
              {"worst_margin", rep.worst_margin()},
              {"per_trial", std::move(trials)},
              {"checks", std::move(checks)}};
  Json inputs{{"suite", suite}, {"seed", o.seed}, {"trials", o.trials}, {"order", o.order}};
  auto j = envelope("verify", std::move(inputs), std::move(result));
  j["pass"] = rep.passed();
  out << j.dump(2) << '\n';
  err << "verify " << suite << ": " << rep.trials.size() << " trials, " << rep.checks.size() << " checks, "
      << rep.violations() << " violations\n";
  return rep.passed() ? kOk : kViolation;
}

struct WitnessArgs {
  std::string theorem;
  double a = 0.0;
  double a0 = 0.0;
  double p = 1.0;
  double lambda = 1.0;
  CLI::Option* a_opt = nullptr;
  CLI::Option* a0_opt = nullptr;
  CLI::Option* p_opt = nullptr;
};

int run_witness(const WitnessArgs& w, std::ostream& out) {
  Json inputs{{"theorem", w.theorem}};
  WitnessReport rep;
  if (w.theorem == "thmB") {
    if (w.a_opt->count() == 0 || w.p_opt->count() == 0) throw UsageError("witness --theorem thmB requires --a and --p");
    inputs["a"] = w.a;
    inputs["p"] = w.p;
    rep = sharpness_witness_thmB(w.a, w.p);
  } else if (w.theorem == "thm1") {
    if (w.a0_opt->count() == 0) throw UsageError("witness --theorem thm1 requires --a0");
    inputs["a0"] = w.a0;
    rep = witness_theorem1(w.a0);
  } else {
    inputs["lambda"] = w.lambda;
    rep = witness_theorem3(w.lambda);
  }
  auto j = envelope("witness", std::move(inputs), witness_json(rep));
  j["pass"] = rep.difference() <= kWitnessAgreement;
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr-radius toolkit: radii, sweeps, verification suites and sharpness witnesses", "bohrlab"};
  app.require_subcommand(1);

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Compute a radius (JSON)");
  radius->add_option("--name", ra.name, "Radius to compute")
      ->required()
      ->check(CLI::IsMember({"classical", "refined", "pfamily", "rstar", "r0", "rg"}));
  ra.a0_opt = radius->add_option("--a0", ra.a0, "|f(0)|");
  ra.p_opt = radius->add_option("--p", ra.p, "Exponent of |a0| (pfamily)");
  radius->add_option("--tol", ra.tol, "Bisection tolerance")->capture_default_str();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep (CSV)");
  sweep->add_option("--target", sa.target, "Curve to sweep")
      ->required()
      ->check(CLI::IsMember({"r0", "pfamily", "witness_thmB"}));
  sweep->add_option("--from", sa.from, "Grid start")->required();
  sweep->add_option("--to", sa.to, "Grid end")->required();
  sweep->add_option("--steps", sa.steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--p", sa.p, "Exponent for pfamily/witness_thmB")->capture_default_str();

  std::string suite;
  suites::SuiteOptions so;
  auto* verify = app.add_subcommand("verify", "Run a verification suite (JSON)");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites::suite_names()));
  verify->add_option("--seed", so.seed, "Base seed")->capture_default_str();
  verify->add_option("--trials", so.trials, "Number of random trials")->capture_default_str();
  verify->add_option("--order", so.order, "Truncation order")->capture_default_str();

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Sharpness witness report (JSON)");
  witness->add_option("--theorem", wa.theorem, "Which witness")->required()->check(CLI::IsMember({"thmB", "thm1", "thm3"}));
  wa.a_opt = witness->add_option("--a", wa.a, "Moebius parameter (thmB)");
  wa.p_opt = witness->add_option("--p", wa.p, "Exponent (thmB)");
  wa.a0_opt = witness->add_option("--a0", wa.a0, "Half-plane centre value (thm1)");
  witness->add_option("--lambda", wa.lambda, "Distance to the boundary (thm3)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (radius->parsed()) return run_radius(ra, out);
    if (sweep->parsed()) return run_sweep(sa, out);
    if (verify->parsed()) return run_verify(suite, so, out, err);
    return run_witness(wa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace bohrlab::cli
