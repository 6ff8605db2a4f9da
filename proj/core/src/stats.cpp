#include "wifiplan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wifiplan {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty series");
  double total = 0.0;
  for (double x : xs) total += x;
  return total / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("sample stddev needs n >= 2");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: size mismatch");
  if (xs.size() < 2) throw std::invalid_argument("pearson: need at least two points");

  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

double quantile_sorted(const std::vector<double>& xs, double q) {
  // Linear interpolation between order statistics (R type 7).
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= xs.size()) return xs.back();
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] * (1.0 - frac) + xs[lo + 1] * frac;
}

}  // namespace

FiveNumber five_number_summary(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("five-number summary of empty series");
  std::sort(xs.begin(), xs.end());
  return {xs.front(), quantile_sorted(xs, 0.25), quantile_sorted(xs, 0.5),
          quantile_sorted(xs, 0.75), xs.back()};
}

double student_t_975(int df) {
  static constexpr double table[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (df < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
  if (df <= 30) return table[df - 1];
  return 1.96;
}

double mean_ci95_halfwidth(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double sd = sample_stddev(xs);
  return student_t_975(static_cast<int>(xs.size()) - 1) * sd /
         std::sqrt(static_cast<double>(xs.size()));
}

}  // namespace wifiplan
