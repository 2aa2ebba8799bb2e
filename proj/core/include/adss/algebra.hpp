#pragma once

// 2x2 matrix realizations of SL(2,R) ~ AdS3 and SU(2) ~ S3.
//
// AdS basis:    t0 = [[0,1],[-1,0]], t1 = [[0,1],[1,0]], t2 = [[1,0],[0,-1]]
// sphere basis: s1 = i*sigma1, s2 = [[0,1],[-1,0]], s3 = diag(i,-i)
//
// Coefficient index k of an element always refers to the k-th basis matrix,
// so for the sphere index 0 is s1 and index 2 is s3.

#include <array>
#include <complex>
#include <concepts>
#include <type_traits>

#include <Eigen/Core>

#include "adss/errors.hpp"

namespace adss {

inline constexpr double kValidationTolerance = 1e-10;

/// Width of the band |<v,v>| < kParabolicBand where exp uses a series.
inline constexpr double kParabolicBand = 1e-10;

struct AdsSector {
  using Scalar = double;
  using Matrix = Eigen::Matrix2d;
  static constexpr const char* name = "ads";
  static constexpr std::array<double, 3> metric{-1.0, 1.0, 1.0};
  // <u,v> = trace_weight * tr(u v)
  static constexpr double trace_weight = 0.5;
  static const Matrix& basis(int index);
};

struct SphereSector {
  using Scalar = std::complex<double>;
  using Matrix = Eigen::Matrix2cd;
  static constexpr const char* name = "sphere";
  static constexpr std::array<double, 3> metric{1.0, 1.0, 1.0};
  static constexpr double trace_weight = -0.5;
  static const Matrix& basis(int index);
};

template <class S>
concept Sector = std::same_as<S, AdsSector> || std::same_as<S, SphereSector>;

/// <a,b> for matrices of the sector (real part of the weighted trace).
template <Sector S>
double trace_inner(const typename S::Matrix& a, const typename S::Matrix& b) {
  return S::trace_weight * std::real((a * b).trace());
}

template <Sector S>
struct AlgebraElement {
  Eigen::Vector3d coeffs = Eigen::Vector3d::Zero();

  AlgebraElement() = default;
  explicit AlgebraElement(const Eigen::Vector3d& c) : coeffs(c) {}
  AlgebraElement(double c0, double c1, double c2) : coeffs(c0, c1, c2) {}

  static AlgebraElement basis(int index) {
    AlgebraElement v;
    v.coeffs[index] = 1.0;
    return v;
  }
  /// Projects a matrix onto the algebra; the identity part is dropped.
  static AlgebraElement from_matrix(const typename S::Matrix& m);

  typename S::Matrix matrix() const;
  /// Components with the index lowered, v_k = <basis_k, v>.
  Eigen::Vector3d lowered() const;

  double operator[](int i) const { return coeffs[i]; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    coeffs += o.coeffs;
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    coeffs -= o.coeffs;
    return *this;
  }
  AlgebraElement& operator*=(double s) {
    coeffs *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
};

using AdsAlgebraElement = AlgebraElement<AdsSector>;
using SphereAlgebraElement = AlgebraElement<SphereSector>;

template <Sector S>
double inner(const AlgebraElement<S>& u, const AlgebraElement<S>& v) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += S::metric[i] * u.coeffs[i] * v.coeffs[i];
  return s;
}

template <Sector S>
AlgebraElement<S> commutator(const AlgebraElement<S>& u, const AlgebraElement<S>& v);

/// Structure tensors of the two algebras.
namespace structure {
double eta(int mu, int nu);
double delta(int m, int n);
/// Totally antisymmetric symbol with eps(0,1,2) = 1 (all indices down).
double levi_civita(int a, int b, int c);
/// eps_{mu nu}^rho = eps_{mu nu sigma} eta^{sigma rho}.
double levi_civita_mixed(int mu, int nu, int rho);
}  // namespace structure

template <Sector S>
class GroupElement {
 public:
  using Matrix = typename S::Matrix;

  GroupElement() : matrix_(Matrix::Identity()) {}

  static GroupElement identity() { return GroupElement(); }
  /// Throws ValidationError when membership fails beyond tol.
  static GroupElement from_matrix(const Matrix& m, double tol = kValidationTolerance);
  /// AdS: (Y0', Y0, Y1, Y2). Sphere: (X1, X2, X3, X4).
  static GroupElement from_embedding(const Eigen::Vector4d& y, double tol = kValidationTolerance);
  /// No validation. For products and exponentials of valid data.
  static GroupElement unchecked(const Matrix& m) { return GroupElement(m); }

  const Matrix& matrix() const { return matrix_; }
  GroupElement inverse() const;
  Eigen::Vector4d embedding() const;
  /// max(|det - 1|, ||h^dagger h - I||) for the sphere, |det - 1| for AdS.
  double membership_defect() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.matrix_ * b.matrix_);
  }

 private:
  explicit GroupElement(const Matrix& m) : matrix_(m) {}
  Matrix matrix_;
};

using AdsGroupElement = GroupElement<AdsSector>;
using SphereGroupElement = GroupElement<SphereSector>;

/// -Y0'^2 - Y0^2 + Y1^2 + Y2^2
double ads_embedding_norm(const Eigen::Vector4d& y);
double sphere_embedding_norm(const Eigen::Vector4d& x);

template <Sector S>
double embedding_norm(const Eigen::Vector4d& y) {
  if constexpr (std::is_same_v<S, AdsSector>) {
    return ads_embedding_norm(y);
  } else {
    return sphere_embedding_norm(y);
  }
}

/// exp(theta v), classified by the sign of <v,v>.
template <Sector S>
GroupElement<S> exp_algebra(const AlgebraElement<S>& v, double theta = 1.0);

template <Sector S>
AlgebraElement<S> adjoint(const GroupElement<S>& g, const AlgebraElement<S>& v);

/// l = cosh(psi) t0 + sinh(psi) (cos(phi) t1 + sin(phi) t2), future sheet.
class UnitTimelikeVector {
 public:
  UnitTimelikeVector() = default;
  /// Negative rapidity is folded onto the future branch with phi + pi.
  UnitTimelikeVector(double rapidity, double angle);

  /// From the spatial coefficients (l^1, l^2).
  static UnitTimelikeVector from_spatial(double x, double y);
  /// Validates <v,v> = -1 and v^0 > 0.
  static UnitTimelikeVector from_element(const AdsAlgebraElement& v, double tol = kValidationTolerance);

  double rapidity() const { return rapidity_; }
  double angle() const { return angle_; }
  AdsAlgebraElement element() const;

 private:
  double rapidity_ = 0.0;
  double angle_ = 0.0;
};

/// s = cos(polar) s3 + sin(polar) (cos(azimuth) s1 + sin(azimuth) s2).
class UnitSphereVector {
 public:
  UnitSphereVector() = default;
  UnitSphereVector(double polar, double azimuth);

  static UnitSphereVector from_components(double x1, double x2, double x3);
  static UnitSphereVector from_element(const SphereAlgebraElement& v, double tol = kValidationTolerance);

  double polar() const { return polar_; }
  double azimuth() const { return azimuth_; }
  SphereAlgebraElement element() const;

 private:
  double polar_ = 0.0;
  double azimuth_ = 0.0;
};

template <Sector S>
using UnitVector = std::conditional_t<std::is_same_v<S, AdsSector>, UnitTimelikeVector, UnitSphereVector>;

template <Sector S>
struct NormalizedCommutator {
  AlgebraElement<S> axis;  // n
  double angle = 0.0;      // gamma
};

/// AdS: n = [l,r] / (2 sinh 2gamma), cosh 2gamma = -<l,r>.
/// Sphere: n = [l,r] / (2 sin 2gamma), cos 2gamma = <l,r>, gamma in (0, pi/2).
/// Either way Ad_{exp(-gamma n)} r = l.
template <Sector S>
NormalizedCommutator<S> normalized_commutator(const AlgebraElement<S>& l, const AlgebraElement<S>& r);

/// Ad_{exp(-alpha n)} r.
template <Sector S>
AlgebraElement<S> boost(double alpha, const AlgebraElement<S>& axis, const AlgebraElement<S>& r);

/// Some k with Ad_k from = to, for unit vectors of equal norm class.
/// Identity when from == to; for antipodal sphere vectors a half turn.
template <Sector S>
GroupElement<S> aligning_element(const AlgebraElement<S>& from, const AlgebraElement<S>& to);

}  // namespace adss
