#include "spectra/counting.hpp"

#include <stdexcept>

namespace spectra {

namespace {

void check_nonnegative(int J) {
  if (J < 0) throw std::invalid_argument("count index J must be nonnegative");
}

BigCount factorial(int n) {
  BigCount f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;  // exact: b is binomial(n-k+i, i) after this step
  }
  return b;
}

std::vector<BigCount> table_T_recurrence(int J_max) {
  check_nonnegative(J_max);
  std::vector<BigCount> T(static_cast<size_t>(J_max) + 1);
  T[0] = 1;
  for (int J = 1; J <= J_max; ++J) {
    BigCount sum = 0;
    for (int i = 0; i < J; ++i) sum += T[i] * T[J - 1 - i];
    T[J] = std::move(sum);
  }
  return T;
}

std::vector<BigCount> table_P_recurrence(int J_max) {
  check_nonnegative(J_max);
  const auto T = table_T_recurrence(J_max >= 2 ? J_max / 2 - 1 : 0);
  std::vector<BigCount> P(static_cast<size_t>(J_max) + 1);
  P[0] = 1;
  for (int J = 1; J <= J_max; ++J) {
    BigCount sum = P[J - 1];
    for (int i = 0; 2 * i + 2 <= J; ++i) sum += T[i] * P[J - 2 * i - 2];
    P[J] = std::move(sum);
  }
  return P;
}

BigCount count_T_recurrence(int J) {
  check_nonnegative(J);
  return table_T_recurrence(J).back();
}

BigCount count_T_closed(int J) {
  check_nonnegative(J);
  return factorial(2 * J) / (factorial(J + 1) * factorial(J));
}

BigCount count_P_recurrence(int J) {
  check_nonnegative(J);
  return table_P_recurrence(J).back();
}

BigCount count_P_closed(int J) {
  check_nonnegative(J);
  return binomial(J, J / 2);
}

Series series_f(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  std::vector<BigCount> c(static_cast<size_t>(order));
  c[0] = 1;
  // [x^k] (1 + x f^2) needs only coefficients below k, so one forward pass.
  for (int k = 1; k < order; ++k) {
    BigCount sum = 0;
    for (int i = 0; i < k; ++i) sum += c[i] * c[k - 1 - i];
    c[k] = std::move(sum);
  }
  return Series{std::move(c)};
}

Series series_g(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  // h(x) = x^2 f(x^2): h_m = T((m-2)/2) for even m >= 2, else 0.
  const int f_order = order >= 3 ? (order - 3) / 2 + 1 : 1;
  const auto f = series_f(f_order);
  std::vector<BigCount> g(static_cast<size_t>(order));
  g[0] = 1;
  for (int k = 1; k < order; ++k) {
    BigCount sum = g[k - 1];
    for (int m = 2; m <= k; m += 2) sum += f.coefficients[(m - 2) / 2] * g[k - m];
    g[k] = std::move(sum);
  }
  return Series{std::move(g)};
}

}  // namespace spectra
