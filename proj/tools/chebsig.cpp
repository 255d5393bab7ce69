// Command-line driver for the experiments.
// Exit codes: 0 ok, 1 --check failure, 2 usage error, 3 I/O error.

#include "chebsig/experiments.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace chebsig;

namespace {

struct Options {
  int n = 100;
  std::uint64_t seed = 42;
  std::string noise = "off";
  std::string spacing = "even";
  std::string uneven_mode = "sorted";
  std::string cheb_fit = "node-values";
  std::string function = "atan";
  int window = 5;
  bool centered = false;
  bool svg = false;
  bool check = false;
  bool serial = false;
  std::string out = "out";
};

const std::map<std::string, UnevenMode> kUnevenModes{{"sorted", UnevenMode::Sorted},
                                                     {"modulated", UnevenMode::Modulated}};
const std::map<std::string, ChebFit> kChebFits{{"node-values", ChebFit::NodeValues},
                                               {"resample", ChebFit::Resample}};
const std::map<std::string, CoeffsFunction> kFunctions{{"atan", CoeffsFunction::Atan},
                                                       {"tanh_sum", CoeffsFunction::TanhSum},
                                                       {"stripe", CoeffsFunction::Stripe}};

RunAllOptions run_all_options(const Options& o) {
  RunAllOptions r;
  r.seed = RngSeed{o.seed};
  r.window = o.window;
  r.uneven_mode = kUnevenModes.at(o.uneven_mode);
  r.cheb_fit = kChebFits.at(o.cheb_fit);
  r.alignment = o.centered ? FilterAlignment::Centered : FilterAlignment::Causal;
  r.parallel = !o.serial;
  return r;
}

int emit(const std::vector<ExperimentReport>& reports, const Options& o) {
  bool ok = true;
  for (const auto& r : reports) {
    write_report(r, o.out, o.svg);
    std::cout << r.name() << " -> " << (std::filesystem::path(o.out) / r.name()).string() << "\n";
    for (const auto& [label, value] : r.scalars()) {
      std::cout << "  " << label << " = " << format_real(value) << "\n";
    }
    if (!o.check) continue;
    for (const auto& c : golden_checks(r)) {
      std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
      ok = ok && c.passed;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev and Fourier interpolation experiments"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output directory")->capture_default_str();
    sub->add_flag("--svg", o.svg, "also write an SVG plot per series");
    sub->add_flag("--check", o.check, "run golden checks; exit 1 on failure");
  };
  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };
  auto fit_option = [&](CLI::App* sub) {
    sub->add_option("--cheb-fit", o.cheb_fit, "node-values | resample")
        ->check(CLI::IsMember({"node-values", "resample"}))
        ->capture_default_str();
  };

  auto* random = app.add_subcommand("random", "interpolate random data and locate its extrema");
  random->add_option("--n", o.n, "number of data points")->check(CLI::Range(2, 100'000'000))->capture_default_str();
  seeded(random);
  common(random);

  auto* converge = app.add_subcommand("converge", "error against degree for exp and the Runge function");
  common(converge);
  auto* scale = app.add_subcommand("scale", "sin on [-6, 6] and [0, 6]");
  common(scale);
  auto* wavelen = app.add_subcommand("wavelen", "adaptive length against wavenumber");
  common(wavelen);

  auto* coeffs = app.add_subcommand("coeffs", "Chebyshev coefficient profiles");
  coeffs->add_option("--function", o.function, "atan | tanh_sum | stripe")
      ->check(CLI::IsMember({"atan", "tanh_sum", "stripe"}))
      ->capture_default_str();
  common(coeffs);

  auto* gamma = app.add_subcommand("gamma", "gamma-variate reconstruction");
  gamma->add_option("--noise", o.noise, "on | off")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  gamma->add_option("--spacing", o.spacing, "even | uneven")
      ->check(CLI::IsMember({"even", "uneven"}))
      ->capture_default_str();
  gamma->add_option("--uneven-mode", o.uneven_mode, "sorted | modulated")
      ->check(CLI::IsMember({"sorted", "modulated"}))
      ->capture_default_str();
  fit_option(gamma);
  seeded(gamma);
  common(gamma);

  auto* spectrum = app.add_subcommand("spectrum", "amplitude spectrum of the gamma variate");
  common(spectrum);
  auto* deviation = app.add_subcommand("deviation", "Chebyshev deviation at the samples");
  fit_option(deviation);
  common(deviation);

  auto* filter = app.add_subcommand("filter", "moving-average filter on a noisy gamma variate");
  filter->add_option("--window", o.window, "window length")->check(CLI::PositiveNumber)->capture_default_str();
  filter->add_flag("--centered", o.centered, "centred window instead of causal");
  seeded(filter);
  common(filter);

  auto* nodes = app.add_subcommand("nodes", "node families and mean-distance profiles");
  nodes->add_option("--n", o.n, "number of nodes")->check(CLI::Range(2, 100000))->capture_default_str();
  common(nodes);

  auto* condition = app.add_subcommand("condition", "basis condition numbers");
  common(condition);

  auto* all = app.add_subcommand("run-all", "every experiment");
  all->add_option("--window", o.window, "filter window")->check(CLI::PositiveNumber)->capture_default_str();
  all->add_option("--uneven-mode", o.uneven_mode, "sorted | modulated")
      ->check(CLI::IsMember({"sorted", "modulated"}))
      ->capture_default_str();
  all->add_flag("--centered", o.centered, "centred filter window");
  all->add_flag("--serial", o.serial, "run experiments one after another");
  fit_option(all);
  seeded(all);
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<ExperimentReport> reports;
    const RngSeed seed{o.seed};
    if (random->parsed()) {
      reports.push_back(run_random(o.n, seed));
    } else if (converge->parsed()) {
      reports.push_back(run_converge());
    } else if (scale->parsed()) {
      reports.push_back(run_scale());
    } else if (wavelen->parsed()) {
      reports.push_back(run_wavelen());
    } else if (coeffs->parsed()) {
      reports.push_back(run_coeffs(kFunctions.at(o.function)));
    } else if (gamma->parsed()) {
      GammaOptions g;
      g.spacing = o.spacing == "even" ? Spacing::Even : Spacing::Uneven;
      g.noise = o.noise == "on";
      g.seed = seed;
      g.uneven_mode = kUnevenModes.at(o.uneven_mode);
      g.cheb_fit = kChebFits.at(o.cheb_fit);
      reports.push_back(run_gamma(g));
    } else if (spectrum->parsed()) {
      reports.push_back(run_spectrum());
    } else if (deviation->parsed()) {
      reports.push_back(run_deviation(kChebFits.at(o.cheb_fit)));
    } else if (filter->parsed()) {
      reports.push_back(
          run_filter(seed, o.window, o.centered ? FilterAlignment::Centered : FilterAlignment::Causal));
    } else if (nodes->parsed()) {
      reports.push_back(run_nodes(o.n));
    } else if (condition->parsed()) {
      reports.push_back(run_condition());
    } else if (all->parsed()) {
      reports = run_all(run_all_options(o));
    }
    return emit(reports, o);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
