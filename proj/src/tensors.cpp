#include "cpmp/tensors.hpp"

#include <numbers>

namespace cpmp {

//==============================================================================
SymTensor2 traceless_quadrupole(const SymTensor2 &q) {
  const double tr = q.trace();
  SymTensor2 r = 1.5 * q;
  r.xx -= 0.5 * tr;
  r.yy -= 0.5 * tr;
  r.zz -= 0.5 * tr;
  return r;
}

SymTensor3 traceless_octupole(const SymTensor3 &o) {
  const Vec3 t = octupole_trace_vector(o);
  SymTensor3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        const double v = 5.0 * o(i, j, k) - t[i] * (j == k ? 1.0 : 0.0) -
                         t[j] * (i == k ? 1.0 : 0.0) - t[k] * (i == j ? 1.0 : 0.0);
        r.set(i, j, k, 0.5 * v);
      }
  return r;
}

Vec3 octupole_trace_vector(const SymTensor3 &o) {
  Vec3 t;
  for (int i = 0; i < 3; ++i)
    t[i] = o(i, 0, 0) + o(i, 1, 1) + o(i, 2, 2);
  return t;
}

//==============================================================================
ZzzHarmonicCoefficients zzz_spherical_coefficients() {
  using std::numbers::pi;
  return {0.8 * std::sqrt(pi / 7.0), 1.2 * std::sqrt(pi / 3.0)};
}

double y10(double theta) {
  using std::numbers::pi;
  return std::sqrt(3.0 / (4.0 * pi)) * std::cos(theta);
}

double y30(double theta) {
  using std::numbers::pi;
  const double c = std::cos(theta);
  return std::sqrt(7.0 / (16.0 * pi)) * (5.0 * c * c * c - 3.0 * c);
}

//==============================================================================
SymTensor2 rotational_average_rank2(Vec3 a, Vec3 b) {
  return (dot(a, b) / 3.0) * SymTensor2::identity();
}

double rotational_average_rank4(const SymTensor2 &a, const SymTensor2 &b, const Tensor4 &kernel) {
  // kernel contractions with the three products of Kronecker deltas
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s1 += kernel(i, i, j, j);
      s2 += kernel(i, j, i, j);
      s3 += kernel(i, j, j, i);
    }
  // tensor-side invariants
  const double t1 = a.trace() * b.trace();
  const double t2 = ddot(a, b);
  const double t3 = t2; // a, b symmetric

  const double s[3] = {s1, s2, s3};
  const double t[3] = {t1, t2, t3};
  double r = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      r += s[p] * IsotropicWeight4::weights[p][q] * t[q];
  return r * IsotropicWeight4::prefactor;
}

//==============================================================================
double verify_trace_survival(const SymTensor3 &o, const Tensor4 &d2g, const Mat3 &g, double k_sq) {
  const SymTensor3 omega = traceless_octupole(o);
  const Vec3 t = octupole_trace_vector(o);

  double max_res = 0.0, scale = 0.0;
  for (int m = 0; m < 3; ++m) {
    double lhs = 0.0, omega_term = 0.0, trace_term = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          lhs += o(i, j, k) * d2g(i, j, k, m);
          omega_term += omega(i, j, k) * d2g(i, j, k, m);
        }
    for (int k = 0; k < 3; ++k)
      trace_term += t[k] * g(k, m);
    const double rhs = 0.4 * omega_term - 0.2 * k_sq * trace_term;
    max_res = std::max(max_res, std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  return scale > 0.0 ? max_res / scale : max_res;
}

} // namespace cpmp
