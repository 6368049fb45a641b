#include "udw/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace udw {

namespace {

// Series and asymptotic expansion switch over at |x| = 5: the Maclaurin series
// has only positive terms, and beyond 5 the smallest asymptotic term is below 1e-10.
constexpr double kSeriesLimit = 5.0;

// sum_{n>=0} x^{2n+1} / (n! (2n+1))
double erfi_series_sum(double x) {
  const double x2 = x * x;
  double term = x;  // x^{2n+1} / n!
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) < std::abs(sum) * 1e-17) break;
  }
  return sum;
}

// 2x F(x) ~ sum_n (2n-1)!! / (2x^2)^n, truncated at the smallest term.
double dawson_asymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    const double next = term * (2 * n - 1) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (2.0 * x);
}

}  // namespace

double erfi(double x) {
  const double ax = std::abs(x);
  if (ax <= kSeriesLimit) return 2.0 / std::sqrt(std::numbers::pi) * erfi_series_sum(x);
  const double x2 = x * x;
  if (x2 > 709.0) return std::copysign(std::numeric_limits<double>::infinity(), x);
  return std::copysign(2.0 / std::sqrt(std::numbers::pi) * std::exp(x2) * dawson_asymptotic(ax), x);
}

double dawson(double x) {
  const double ax = std::abs(x);
  if (ax <= kSeriesLimit) return std::exp(-x * x) * erfi_series_sum(x);
  return std::copysign(dawson_asymptotic(ax), x);
}

}  // namespace udw
