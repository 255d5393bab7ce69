#pragma once

// End-to-end experiments. Each run_* function is a pure computation that
// returns an ExperimentReport; writing to disk is left to the caller.
// Reports carry metadata["experiment"] naming the experiment so that
// golden_checks() can pick the matching assertions.

#include "chebsig/report.hpp"
#include "chebsig/signal_lab.hpp"
#include "chebsig/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace chebsig {

enum class ChebFit {
  NodeValues,  // samples reinterpreted as values at second-kind nodes of the sample span
  Resample,    // generator evaluated at true second-kind nodes of the sample span
};

enum class CoeffsFunction { Atan, TanhSum, Stripe };

const char* to_string(CoeffsFunction f);
const char* to_string(ChebFit fit);

struct GammaOptions {
  Spacing spacing = Spacing::Even;
  bool noise = false;
  RngSeed seed{};
  UnevenMode uneven_mode = UnevenMode::Sorted;
  ChebFit cheb_fit = ChebFit::NodeValues;
};

ExperimentReport run_random(Index points, RngSeed seed);
/// Same as run_random with the data supplied instead of drawn.
ExperimentReport run_random_values(const Vector<double>& values, const std::string& name);
ExperimentReport run_converge();
ExperimentReport run_scale();
ExperimentReport run_wavelen();
ExperimentReport run_coeffs(CoeffsFunction function);
ExperimentReport run_gamma(const GammaOptions& options);
ExperimentReport run_spectrum();
ExperimentReport run_deviation(ChebFit fit = ChebFit::NodeValues);
ExperimentReport run_filter(RngSeed seed, Index window = 5,
                            FilterAlignment alignment = FilterAlignment::Causal);
ExperimentReport run_nodes(Index n = 100);
ExperimentReport run_condition();

struct RunAllOptions {
  RngSeed seed{};
  Index window = 5;
  UnevenMode uneven_mode = UnevenMode::Sorted;
  ChebFit cheb_fit = ChebFit::NodeValues;
  FilterAlignment alignment = FilterAlignment::Causal;
  bool parallel = true;
};

/// Every experiment, in a fixed order; computed concurrently when
/// options.parallel is set.
std::vector<ExperimentReport> run_all(const RunAllOptions& options);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Golden-value and schema assertions for a report produced by one of the
/// run_* functions above.
std::vector<CheckResult> golden_checks(const ExperimentReport& report);

}  // namespace chebsig
