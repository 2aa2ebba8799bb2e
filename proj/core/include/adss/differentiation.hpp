#pragma once

#include <type_traits>
#include <utility>

namespace adss {

enum class DifferenceScheme { central, richardson };

struct DiffOptions {
  double step = 1e-4;
  DifferenceScheme scheme = DifferenceScheme::richardson;
};

/// Combines a quantity computed at steps h and h/2 so the O(h^2) term cancels.
template <class T>
T richardson(const T& coarse, const T& fine) {
  T r = (4.0 * fine - coarse) / 3.0;
  return r;
}

/// d/dx f(x) at x = 0 for f taking a scalar offset.
template <class F>
auto derivative(F&& f, const DiffOptions& opt) -> std::decay_t<std::invoke_result_t<F&, double>> {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  auto central = [&](double h) -> R {
    R d = (f(h) - f(-h)) / (2.0 * h);
    return d;
  };
  if (opt.scheme == DifferenceScheme::central) return central(opt.step);
  return richardson<R>(central(opt.step), central(0.5 * opt.step));
}

/// Applies `at_step(h)` once (central) or at h and h/2 (Richardson).
template <class F>
auto extrapolate(F&& at_step, const DiffOptions& opt) -> std::decay_t<std::invoke_result_t<F&, double>> {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  if (opt.scheme == DifferenceScheme::central) return at_step(opt.step);
  return richardson<R>(at_step(opt.step), at_step(0.5 * opt.step));
}

}  // namespace adss
