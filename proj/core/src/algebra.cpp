#include "adss/algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

namespace adss {

namespace {

using cd = std::complex<double>;
constexpr cd I1{0.0, 1.0};

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a -= two_pi;
  return a;
}

template <class M>
bool all_finite(const M& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(std::abs(m(i)))) return false;
  }
  return true;
}

// below this |[l,r]|/2 the two unit vectors count as parallel
constexpr double kParallelThreshold = 1e-12;

}  // namespace

const AdsSector::Matrix& AdsSector::basis(int index) {
  static const std::array<Matrix, 3> b = [] {
    std::array<Matrix, 3> t;
    t[0] << 0, 1, -1, 0;
    t[1] << 0, 1, 1, 0;
    t[2] << 1, 0, 0, -1;
    return t;
  }();
  return b.at(static_cast<std::size_t>(index));
}

const SphereSector::Matrix& SphereSector::basis(int index) {
  static const std::array<Matrix, 3> b = [] {
    std::array<Matrix, 3> s;
    s[0] << 0, I1, I1, 0;
    s[1] << 0, 1, -1, 0;
    s[2] << I1, 0, 0, -I1;
    return s;
  }();
  return b.at(static_cast<std::size_t>(index));
}

template <Sector S>
AlgebraElement<S> AlgebraElement<S>::from_matrix(const typename S::Matrix& m) {
  AlgebraElement v;
  for (int i = 0; i < 3; ++i) {
    v.coeffs[i] = S::metric[i] * trace_inner<S>(S::basis(i), m);
  }
  return v;
}

template <Sector S>
typename S::Matrix AlgebraElement<S>::matrix() const {
  typename S::Matrix m = coeffs[0] * S::basis(0);
  m += coeffs[1] * S::basis(1);
  m += coeffs[2] * S::basis(2);
  return m;
}

template <Sector S>
Eigen::Vector3d AlgebraElement<S>::lowered() const {
  return {S::metric[0] * coeffs[0], S::metric[1] * coeffs[1], S::metric[2] * coeffs[2]};
}

template <Sector S>
AlgebraElement<S> commutator(const AlgebraElement<S>& u, const AlgebraElement<S>& v) {
  const auto a = u.matrix();
  const auto b = v.matrix();
  return AlgebraElement<S>::from_matrix(a * b - b * a);
}

namespace structure {

double eta(int mu, int nu) { return mu == nu ? AdsSector::metric.at(static_cast<std::size_t>(mu)) : 0.0; }

double delta(int m, int n) { return m == n ? 1.0 : 0.0; }

double levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  // even permutations of (0,1,2) are the cyclic ones
  return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
}

double levi_civita_mixed(int mu, int nu, int rho) { return levi_civita(mu, nu, rho) * eta(rho, rho); }

}  // namespace structure

template <Sector S>
GroupElement<S> GroupElement<S>::from_matrix(const Matrix& m, double tol) {
  if (!all_finite(m)) throw ValidationError(std::string(S::name) + " group element has non-finite entries");
  GroupElement g(m);
  const double d = g.membership_defect();
  if (!(d <= tol)) {
    throw ValidationError(std::string(S::name) + " group membership violated (defect " + std::to_string(d) + ")");
  }
  return g;
}

template <>
AdsGroupElement AdsGroupElement::from_embedding(const Eigen::Vector4d& y, double tol) {
  if (!all_finite(y)) throw ValidationError("non-finite AdS embedding coordinates");
  const double c = ads_embedding_norm(y) + 1.0;
  if (!(std::abs(c) <= tol)) throw ValidationError("embedding violates Y.Y = -1");
  Matrix m;
  m << y[0] + y[3], y[1] + y[2], y[2] - y[1], y[0] - y[3];
  return GroupElement(m);
}

template <>
SphereGroupElement SphereGroupElement::from_embedding(const Eigen::Vector4d& x, double tol) {
  if (!all_finite(x)) throw ValidationError("non-finite sphere embedding coordinates");
  const double c = sphere_embedding_norm(x) - 1.0;
  if (!(std::abs(c) <= tol)) throw ValidationError("embedding violates X.X = 1");
  Matrix m;
  m << cd(x[3], x[2]), cd(x[1], x[0]), cd(-x[1], x[0]), cd(x[3], -x[2]);
  return GroupElement(m);
}

template <Sector S>
GroupElement<S> GroupElement<S>::inverse() const {
  Matrix inv;
  inv << matrix_(1, 1), -matrix_(0, 1), -matrix_(1, 0), matrix_(0, 0);
  return GroupElement(inv);
}

template <>
Eigen::Vector4d AdsGroupElement::embedding() const {
  const double a = matrix_(0, 0), b = matrix_(0, 1), c = matrix_(1, 0), d = matrix_(1, 1);
  return {0.5 * (a + d), 0.5 * (b - c), 0.5 * (b + c), 0.5 * (a - d)};
}

template <>
Eigen::Vector4d SphereGroupElement::embedding() const {
  const cd a = matrix_(0, 0), b = matrix_(0, 1), c = matrix_(1, 0), d = matrix_(1, 1);
  return {0.5 * (b.imag() + c.imag()), 0.5 * (b.real() - c.real()), 0.5 * (a.imag() - d.imag()),
          0.5 * (a.real() + d.real())};
}

template <>
double AdsGroupElement::membership_defect() const {
  return std::abs(matrix_.determinant() - 1.0);
}

template <>
double SphereGroupElement::membership_defect() const {
  const double det = std::abs(matrix_.determinant() - cd(1.0, 0.0));
  const double unit = (matrix_.adjoint() * matrix_ - Matrix::Identity()).cwiseAbs().maxCoeff();
  return std::max(det, unit);
}

double ads_embedding_norm(const Eigen::Vector4d& y) {
  return -y[0] * y[0] - y[1] * y[1] + y[2] * y[2] + y[3] * y[3];
}

double sphere_embedding_norm(const Eigen::Vector4d& x) { return x.squaredNorm(); }

template <Sector S>
GroupElement<S> exp_algebra(const AlgebraElement<S>& v, double theta) {
  if (!std::isfinite(theta) || !all_finite(v.coeffs)) throw ValidationError("exp of non-finite algebra element");
  using Matrix = typename S::Matrix;
  const AlgebraElement<S> w = theta * v;
  const Matrix wm = w.matrix();
  const double q = inner(w, w);
  // AdS: w^2 = q I.  Sphere: w^2 = -q I.
  double c0 = 0.0, c1 = 0.0;
  const bool compact_direction = std::is_same_v<S, SphereSector> ? q > kParabolicBand : q < -kParabolicBand;
  const bool noncompact_direction = std::is_same_v<S, AdsSector> && q > kParabolicBand;
  if (compact_direction) {
    const double k = std::sqrt(std::abs(q));
    c0 = std::cos(k);
    c1 = std::sin(k) / k;
  } else if (noncompact_direction) {
    const double k = std::sqrt(q);
    c0 = std::cosh(k);
    c1 = std::sinh(k) / k;
  } else {
    const double s = std::is_same_v<S, AdsSector> ? q : -q;
    c0 = 1.0 + s / 2.0 + s * s / 24.0;
    c1 = 1.0 + s / 6.0 + s * s / 120.0;
  }
  Matrix m = c0 * Matrix::Identity() + c1 * wm;
  return GroupElement<S>::unchecked(m);
}

template <Sector S>
AlgebraElement<S> adjoint(const GroupElement<S>& g, const AlgebraElement<S>& v) {
  return AlgebraElement<S>::from_matrix(g.matrix() * v.matrix() * g.inverse().matrix());
}

UnitTimelikeVector::UnitTimelikeVector(double rapidity, double angle) {
  if (!std::isfinite(rapidity) || !std::isfinite(angle)) throw ValidationError("non-finite unit timelike vector");
  if (rapidity < 0.0) {
    rapidity = -rapidity;
    angle += std::numbers::pi;
  }
  rapidity_ = rapidity;
  angle_ = wrap_angle(angle);
}

UnitTimelikeVector UnitTimelikeVector::from_spatial(double x, double y) {
  return UnitTimelikeVector(std::asinh(std::hypot(x, y)), std::atan2(y, x));
}

UnitTimelikeVector UnitTimelikeVector::from_element(const AdsAlgebraElement& v, double tol) {
  if (!all_finite(v.coeffs)) throw ValidationError("non-finite unit timelike vector");
  if (!(std::abs(inner(v, v) + 1.0) <= tol)) throw ValidationError("vector is not unit timelike");
  if (!(v.coeffs[0] > 0.0)) throw ValidationError("past-directed timelike vector");
  return from_spatial(v.coeffs[1], v.coeffs[2]);
}

AdsAlgebraElement UnitTimelikeVector::element() const {
  const double sh = std::sinh(rapidity_);
  return {std::cosh(rapidity_), sh * std::cos(angle_), sh * std::sin(angle_)};
}

UnitSphereVector::UnitSphereVector(double polar, double azimuth) {
  if (!std::isfinite(polar) || !std::isfinite(azimuth)) throw ValidationError("non-finite unit sphere vector");
  polar = wrap_angle(polar);
  if (polar > std::numbers::pi) {
    polar = 2.0 * std::numbers::pi - polar;
    azimuth += std::numbers::pi;
  }
  polar_ = polar;
  azimuth_ = wrap_angle(azimuth);
}

UnitSphereVector UnitSphereVector::from_components(double x1, double x2, double x3) {
  return UnitSphereVector(std::atan2(std::hypot(x1, x2), x3), std::atan2(x2, x1));
}

UnitSphereVector UnitSphereVector::from_element(const SphereAlgebraElement& v, double tol) {
  if (!all_finite(v.coeffs)) throw ValidationError("non-finite unit sphere vector");
  if (!(std::abs(inner(v, v) - 1.0) <= tol)) throw ValidationError("vector is not a unit su(2) element");
  return from_components(v.coeffs[0], v.coeffs[1], v.coeffs[2]);
}

SphereAlgebraElement UnitSphereVector::element() const {
  const double sn = std::sin(polar_);
  return {sn * std::cos(azimuth_), sn * std::sin(azimuth_), std::cos(polar_)};
}

template <Sector S>
NormalizedCommutator<S> normalized_commutator(const AlgebraElement<S>& l, const AlgebraElement<S>& r) {
  const AlgebraElement<S> c = commutator(l, r);
  const double s = 0.5 * std::sqrt(std::max(0.0, inner(c, c)));  // sinh 2gamma or sin 2gamma
  if (!(s > kParallelThreshold)) throw DegenerateConfiguration("normalized commutator of parallel unit vectors");
  NormalizedCommutator<S> out;
  out.axis = (1.0 / (2.0 * s)) * c;
  if constexpr (std::is_same_v<S, AdsSector>) {
    out.angle = 0.5 * std::asinh(s);
  } else {
    out.angle = 0.5 * std::atan2(s, inner(l, r));
  }
  return out;
}

template <Sector S>
AlgebraElement<S> boost(double alpha, const AlgebraElement<S>& axis, const AlgebraElement<S>& r) {
  return adjoint(exp_algebra(axis, -alpha), r);
}

template <Sector S>
GroupElement<S> aligning_element(const AlgebraElement<S>& from, const AlgebraElement<S>& to) {
  const AlgebraElement<S> c = commutator(to, from);
  if (0.5 * std::sqrt(std::max(0.0, inner(c, c))) > kParallelThreshold) {
    const auto nc = normalized_commutator(to, from);
    return exp_algebra(nc.axis, -nc.angle);
  }
  if constexpr (std::is_same_v<S, SphereSector>) {
    if (inner(from, to) < 0.0) {
      // antipodal: half turn about any axis orthogonal to `from`
      int k = 0;
      for (int i = 1; i < 3; ++i) {
        if (std::abs(from.coeffs[i]) < std::abs(from.coeffs[k])) k = i;
      }
      AlgebraElement<S> axis = AlgebraElement<S>::basis(k);
      axis -= inner(axis, from) * from;
      axis *= 1.0 / std::sqrt(inner(axis, axis));
      return exp_algebra(axis, std::numbers::pi / 2.0);
    }
  }
  return GroupElement<S>::identity();
}

#define ADSS_INSTANTIATE(S)                                                                          \
  template struct AlgebraElement<S>;                                                                 \
  template class GroupElement<S>;                                                                    \
  template AlgebraElement<S> commutator<S>(const AlgebraElement<S>&, const AlgebraElement<S>&);     \
  template GroupElement<S> exp_algebra<S>(const AlgebraElement<S>&, double);                         \
  template AlgebraElement<S> adjoint<S>(const GroupElement<S>&, const AlgebraElement<S>&);           \
  template NormalizedCommutator<S> normalized_commutator<S>(const AlgebraElement<S>&,                \
                                                            const AlgebraElement<S>&);               \
  template AlgebraElement<S> boost<S>(double, const AlgebraElement<S>&, const AlgebraElement<S>&);  \
  template GroupElement<S> aligning_element<S>(const AlgebraElement<S>&, const AlgebraElement<S>&);

ADSS_INSTANTIATE(AdsSector)
ADSS_INSTANTIATE(SphereSector)

#undef ADSS_INSTANTIATE

}  // namespace adss
