#pragma once

namespace cosetlab::thresholds {

// Acceptance thresholds shared by every verification suite. Change them here,
// nowhere else.
inline constexpr double kMinPValue = 0.001;       // chi-squared GOF gates
inline constexpr double kKsNormal = 0.02;         // KS distance to N(0,1)
inline constexpr double kTvExactMixture = 1e-3;   // exact mixture vs Poisson
inline constexpr double kTvZeros = 0.05;          // zeros histogram vs Poisson
inline constexpr double kZerosMeanWindow = 0.15;  // |mean - 3.54| window
inline constexpr double kRejectionMeanRel = 0.05; // rejection-attempt mean
inline constexpr double kChi2Table1Window = 0.01; // |chi2 - 138.28| window
inline constexpr double kApproxRatioWindow = 0.25;  // coset-size approximation
inline constexpr double kMcSigma = 3.0;           // generic Monte Carlo z gate
inline constexpr double kFreqSigma = 5.0;         // per-cell frequency gate

}  // namespace cosetlab::thresholds
