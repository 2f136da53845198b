#pragma once

// Pauli-basis algebra on 2x2 complex matrices.
//
// A matrix is stored as w0*I + w1*s1 + w2*s2 + w3*s3 with
//   s1 = [[0, 1], [1, 0]],  s2 = [[0, -i], [i, 0]],  s3 = [[1, 0], [0, -1]].

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace uks {

inline constexpr double kDefaultTol = 1e-9;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using CVector3 = Eigen::Matrix<Complex<Scalar>, 3, 1>;

template <typename Scalar>
struct PauliForm {
  Complex<Scalar> w0{0};
  CVector3<Scalar> w = CVector3<Scalar>::Zero();

  PauliForm() = default;
  PauliForm(Complex<Scalar> w0_, const CVector3<Scalar>& w_) : w0(w0_), w(w_) {}

  static PauliForm identity() { return {Complex<Scalar>(1), CVector3<Scalar>::Zero()}; }

  PauliForm operator+(const PauliForm& o) const { return {w0 + o.w0, w + o.w}; }
  PauliForm operator-(const PauliForm& o) const { return {w0 - o.w0, w - o.w}; }
  PauliForm operator*(Complex<Scalar> c) const { return {c * w0, c * w}; }
  friend PauliForm operator*(Complex<Scalar> c, const PauliForm& p) { return p * c; }
};

using PauliFormd = PauliForm<double>;
using Matrix2cd = Matrix2<double>;

/// The three Pauli matrices, indexed 0..2.
template <typename Scalar = double>
Matrix2<Scalar> pauli_matrix(int index) {
  using C = Complex<Scalar>;
  const C i(0, 1);
  Matrix2<Scalar> m;
  switch (index) {
    case 0: m << C(0), C(1), C(1), C(0); break;
    case 1: m << C(0), -i, i, C(0); break;
    default: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

template <typename Scalar>
Matrix2<Scalar> to_matrix(const PauliForm<Scalar>& p) {
  using C = Complex<Scalar>;
  const C i(0, 1);
  Matrix2<Scalar> m;
  m(0, 0) = p.w0 + p.w(2);
  m(1, 1) = p.w0 - p.w(2);
  m(0, 1) = p.w(0) - i * p.w(1);
  m(1, 0) = p.w(0) + i * p.w(1);
  return m;
}

// w0 = tr(m)/2, wi = tr(m si)/2.
template <typename Derived>
PauliForm<typename Derived::RealScalar> from_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::RealScalar;
  using C = Complex<Scalar>;
  const C i(0, 1);
  const C half(Scalar(0.5));
  PauliForm<Scalar> p;
  p.w0 = half * (C(m(0, 0)) + C(m(1, 1)));
  p.w(0) = half * (C(m(0, 1)) + C(m(1, 0)));
  p.w(1) = half * i * (C(m(0, 1)) - C(m(1, 0)));
  p.w(2) = half * (C(m(0, 0)) - C(m(1, 1)));
  return p;
}

/// Component-wise epsilon-tensor cross product. Neither argument is conjugated.
template <typename Scalar>
CVector3<Scalar> cross(const CVector3<Scalar>& u, const CVector3<Scalar>& v) {
  return {u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0)};
}

/// Bilinear (unconjugated) dot product.
template <typename Scalar>
Complex<Scalar> dot_u(const CVector3<Scalar>& u, const CVector3<Scalar>& v) {
  return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

// (p0 + p.s)(q0 + q.s) = (p0 q0 + p.q) + (p0 q + q0 p + i p x q).s
template <typename Scalar>
PauliForm<Scalar> multiply(const PauliForm<Scalar>& p, const PauliForm<Scalar>& q) {
  const Complex<Scalar> i(0, 1);
  return {p.w0 * q.w0 + dot_u(p.w, q.w), p.w0 * q.w + q.w0 * p.w + i * cross(p.w, q.w)};
}

template <typename Scalar>
PauliForm<Scalar> adjoint(const PauliForm<Scalar>& p) {
  return {std::conj(p.w0), p.w.conjugate()};
}

/// x*x in closed form:
///   (|w0|^2 + |w|^2) I + (w0 conj(w) + conj(w0) w - i [w, conj(w)]).s
template <typename Scalar>
PauliForm<Scalar> star_square(const PauliForm<Scalar>& p) {
  const Complex<Scalar> i(0, 1);
  const CVector3<Scalar> wbar = p.w.conjugate();
  const Scalar scalar = std::norm(p.w0) + p.w.squaredNorm();
  CVector3<Scalar> vec = p.w0 * wbar + std::conj(p.w0) * p.w - i * cross<Scalar>(p.w, wbar);
  return {Complex<Scalar>(scalar), vec};
}

/// Euclidean norm sqrt(|w1|^2 + |w2|^2 + |w3|^2).
template <typename Scalar>
Scalar vector_norm(const PauliForm<Scalar>& p) {
  return p.w.norm();
}

template <typename Scalar>
bool is_hermitian(const PauliForm<Scalar>& p, Scalar tol = Scalar(kDefaultTol)) {
  if (std::abs(p.w0.imag()) > tol) return false;
  for (int j = 0; j < 3; ++j)
    if (std::abs(p.w(j).imag()) > tol) return false;
  return true;
}

/// A >= 0 iff w0, w are real and |w| <= w0.
template <typename Scalar>
bool is_psd(const PauliForm<Scalar>& p, Scalar tol = Scalar(kDefaultTol)) {
  if (!is_hermitian(p, tol)) return false;
  return p.w.real().norm() <= p.w0.real() + tol;
}

template <typename Scalar>
bool approx_equal(const PauliForm<Scalar>& p, const PauliForm<Scalar>& q, Scalar tol) {
  if (std::abs(p.w0 - q.w0) > tol) return false;
  return (p.w - q.w).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace uks
