#pragma once

// Reference computations that do not go through the library code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Core>
#include <Eigen/LU>

namespace oracle {

/// Taylor series with scaling and squaring.
template <class M>
M expm(const M& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const M b = a / std::pow(2.0, squarings);
  M term = M::Identity(), sum = M::Identity();
  for (int k = 1; k < 30; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

/// Sign of the permutation (a, b, c) of (0, 1, 2) by counting inversions; 0 on repeats.
inline double permutation_sign(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  const int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1.0 : -1.0;
}

inline double eta(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? -1.0 : 1.0;
}

/// Explicit basis matrices written out again.
inline Eigen::Matrix2d t(int mu) {
  Eigen::Matrix2d m;
  if (mu == 0) m << 0, 1, -1, 0;
  if (mu == 1) m << 0, 1, 1, 0;
  if (mu == 2) m << 1, 0, 0, -1;
  return m;
}

inline Eigen::Matrix2cd s(int k) {
  using cd = std::complex<double>;
  const cd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  if (k == 0) m << 0, i, i, 0;
  if (k == 1) m << 0, 1, -1, 0;
  if (k == 2) m << i, 0, 0, -i;
  return m;
}

/// max |a - b| entrywise
template <class A, class B>
double gap(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
