#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace spectra {

/// Exact nonnegative pattern counts. No floating point is used anywhere in
/// this module.
using BigCount = boost::multiprecision::cpp_int;

/// A truncated formal power series with exact coefficients;
/// coefficients[k] is the coefficient of x^k.
struct Series {
  std::vector<BigCount> coefficients;
  int order() const { return static_cast<int>(coefficients.size()); }
};

/// T counts (all non-crossing pairings) via the splitting recurrence
/// T(J) = sum_{i=0}^{J-1} T(i) T(J-1-i), T(0) = 1.
BigCount count_T_recurrence(int J);

/// T counts via the Catalan closed form (2J)! / ((J+1)! J!).
BigCount count_T_closed(int J);

/// P counts (centrally symmetric pairings) via
/// P(J) = P(J-1) + sum_{i=0}^{floor(J/2)-1} T(i) P(J-2i-2), P(0) = 1.
BigCount count_P_recurrence(int J);

/// P counts via the closed form binomial(J, floor(J/2)).
BigCount count_P_closed(int J);

/// Full recurrence tables for 0..J_max (one quadratic pass instead of
/// re-deriving each entry).
std::vector<BigCount> table_T_recurrence(int J_max);
std::vector<BigCount> table_P_recurrence(int J_max);

/// Coefficients 0..order-1 of f(x) = sum T(J) x^J, from f = 1 + x f^2 by
/// exact term-by-term convolution.
Series series_f(int order);

/// Coefficients 0..order-1 of g(x) = sum P(J) x^J, from
/// g = 1 + x g + x^2 f(x^2) g; f(x^2) enters by coefficient interleaving.
Series series_g(int order);

/// Exact binomial coefficient, 0 for k < 0 or k > n.
BigCount binomial(int n, int k);

}  // namespace spectra
