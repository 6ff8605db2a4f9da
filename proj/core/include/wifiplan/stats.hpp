#pragma once

#include <optional>
#include <span>
#include <vector>

namespace wifiplan {

double mean(std::span<const double> xs);
double sample_stddev(std::span<const double> xs);  // n-1 denominator

/// Sample Pearson correlation coefficient. Requires two equally sized
/// series of length >= 2 (throws std::invalid_argument otherwise); returns
/// nullopt when either series has zero variance (the coefficient is
/// undefined there, not zero).
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

struct FiveNumber {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Box-plot summary; quartiles by linear interpolation between order
/// statistics. Requires a non-empty input.
FiveNumber five_number_summary(std::vector<double> xs);

/// Two-sided 95% Student-t critical value for the given degrees of
/// freedom (1.96 beyond df = 30).
double student_t_975(int df);

/// Half-width of the 95% confidence interval of the mean; 0 for n < 2.
double mean_ci95_halfwidth(std::span<const double> xs);

}  // namespace wifiplan
