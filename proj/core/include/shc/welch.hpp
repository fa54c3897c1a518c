#pragma once

#include <span>

namespace shc {

struct WelchResult {
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;  // Welch-Satterthwaite
  double p_value = 1.0;             // two-sided
};

/// Welch's unequal-variance t-test. Needs at least two observations per
/// sample (Error{InvalidArgument} otherwise). When both sample variances are
/// zero the test is degenerate: p = 1 if the means agree, p = 0 if not, with
/// t = 0 or +-inf and df = n_a + n_b - 2.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace shc
