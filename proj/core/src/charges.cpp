#include "adss/charges.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>
#include <utility>
#include <numbers>
#include <vector>

namespace adss {

namespace {

template <Sector S>
SectorCurrents<S> sector_currents(const SectorParams<S>& p, double tau, double sigma) {
  const GroupElement<S> g = evaluate_sector(p, tau, sigma);
  const AlgebraElement<S> l = p.l_hat.element();
  const AlgebraElement<S> r = p.r_hat.element();
  const AlgebraElement<S> r_moved = adjoint(g, r);            // Ad_g r
  const AlgebraElement<S> l_moved = adjoint(g.inverse(), l);  // Ad_{g^-1} l
  SectorCurrents<S> c;
  c.left_tau = p.lambda * l + p.rho * r_moved;
  c.left_sigma = 0.5 * p.m * l + 0.5 * p.n * r_moved;
  c.right_tau = p.lambda * l_moved + p.rho * r;
  c.right_sigma = 0.5 * p.m * l_moved + 0.5 * p.n * r;
  return c;
}

Eigen::Vector3d pairwise_sum(const std::vector<Eigen::Vector3d>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Eigen::Vector3d s = Eigen::Vector3d::Zero();
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <Sector S>
double casimir(const AlgebraElement<S>& x) {
  return std::sqrt(std::abs(inner(x, x)));
}

void fill_casimirs(ChargeSet& c) {
  c.m_L = casimir(c.L);
  c.m_R = casimir(c.R);
  c.m_L_s = casimir(c.L_s);
  c.m_R_s = casimir(c.R_s);
}

template <Sector S>
std::pair<AlgebraElement<S>, AlgebraElement<S>> sector_charges(const SectorParams<S>& p, double cross) {
  const AlgebraElement<S> l = p.l_hat.element();
  const AlgebraElement<S> r = p.r_hat.element();
  // With m != 0 the sigma-average of Ad_{e^{m sigma l/2}} X is its projection on l;
  // for m = 0 on-shell lambda rho = 0 and no averaging happens.
  AlgebraElement<S> L = p.m != 0 ? (p.lambda + p.rho * cross) * l : p.lambda * l + p.rho * adjoint(p.base, r);
  AlgebraElement<S> R =
      p.n != 0 ? (p.lambda * cross + p.rho) * r : p.lambda * adjoint(p.base.inverse(), l) + p.rho * r;
  return {L, R};
}

}  // namespace

Currents currents(const SolutionParams& p, double tau, double sigma) {
  return {sector_currents(p.ads, tau, sigma), sector_currents(p.sphere, tau, sigma)};
}

int minimum_quadrature_nodes(const SolutionParams& p) {
  const int a = 4 * (std::abs(p.ads.m) + std::abs(p.ads.n)) + 16;
  const int s = 4 * (std::abs(p.sphere.m) + std::abs(p.sphere.n)) + 16;
  return std::max(a, s);
}

ChargeSet charges_numeric(const SolutionParams& p, double tau, int nodes) {
  if (nodes <= 0) throw ValidationError("quadrature needs at least one node");
  const auto count = static_cast<std::size_t>(nodes);
  std::vector<Eigen::Vector3d> l(count), r(count), ls(count), rs(count);
  for (int k = 0; k < nodes; ++k) {
    const double sigma = 2.0 * std::numbers::pi * k / nodes;
    const Currents c = currents(p, tau, sigma);
    const auto i = static_cast<std::size_t>(k);
    l[i] = c.ads.left_tau.coeffs;
    r[i] = c.ads.right_tau.coeffs;
    ls[i] = c.sphere.left_tau.coeffs;
    rs[i] = c.sphere.right_tau.coeffs;
  }
  const double w = 1.0 / nodes;
  ChargeSet out;
  out.L = AdsAlgebraElement(w * pairwise_sum(l, 0, count));
  out.R = AdsAlgebraElement(w * pairwise_sum(r, 0, count));
  out.L_s = SphereAlgebraElement(w * pairwise_sum(ls, 0, count));
  out.R_s = SphereAlgebraElement(w * pairwise_sum(rs, 0, count));
  fill_casimirs(out);
  out.under_resolved = nodes < minimum_quadrature_nodes(p);
  return out;
}

ChargeSet charges_analytic(const SolutionParams& p) {
  const IsometryInvariants iv = isometry_invariants(p);
  ChargeSet out;
  std::tie(out.L, out.R) = sector_charges(p.ads, iv.cosh2theta);
  std::tie(out.L_s, out.R_s) = sector_charges(p.sphere, iv.cos2theta_s);
  fill_casimirs(out);
  return out;
}

}  // namespace adss
