#pragma once
#include <array>
#include <cmath>
#include <stdexcept>

//! Small fixed-size tensor types for 3D multipole algebra, plus traceless
//! decompositions and rotational (isotropic) averaging.
//!
//! Symmetric tensors store only their independent components, so symmetry is
//! an invariant of the type rather than something tests have to re-check.
//! Component order follows the on-disk convention:
//!   rank 2: xx, yy, zz, xy, xz, yz
//!   rank 3: xxx, yyy, zzz, xxy, xxz, xyy, yyz, xzz, yzz, xyz

namespace cpmp {

//==============================================================================
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double &operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

//==============================================================================
//! General (not necessarily symmetric) real 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{};

  double operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }
  double &operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }

  double trace() const { return m[0] + m[4] + m[8]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }
  static Mat3 outer(Vec3 a, Vec3 b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = a[i] * b[j];
    return r;
  }

  friend Mat3 operator+(const Mat3 &a, const Mat3 &b) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i)
      r.m[i] = a.m[i] + b.m[i];
    return r;
  }
  friend Mat3 operator-(const Mat3 &a, const Mat3 &b) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i)
      r.m[i] = a.m[i] - b.m[i];
    return r;
  }
  friend Mat3 operator*(double s, const Mat3 &a) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i)
      r.m[i] = s * a.m[i];
    return r;
  }
};

//! Frobenius contraction sum_ij a_ij b_ij.
inline double ddot(const Mat3 &a, const Mat3 &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i)
    s += a.m[i] * b.m[i];
  return s;
}

inline double max_abs(const Mat3 &a) {
  double s = 0.0;
  for (double v : a.m)
    s = std::max(s, std::abs(v));
  return s;
}

//==============================================================================
//! Symmetric rank-2 tensor; 6 independent components.
struct SymTensor2 {
  double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;

  double operator()(int i, int j) const {
    static constexpr int lut[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    const double *c[6] = {&xx, &yy, &zz, &xy, &xz, &yz};
    return *c[lut[i][j]];
  }

  double trace() const { return xx + yy + zz; }

  static SymTensor2 identity() { return {1, 1, 1, 0, 0, 0}; }
  static SymTensor2 diag(double a, double b, double c) { return {a, b, c, 0, 0, 0}; }

  friend SymTensor2 operator+(SymTensor2 a, SymTensor2 b) {
    return {a.xx + b.xx, a.yy + b.yy, a.zz + b.zz, a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
  }
  friend SymTensor2 operator-(SymTensor2 a, SymTensor2 b) {
    return {a.xx - b.xx, a.yy - b.yy, a.zz - b.zz, a.xy - b.xy, a.xz - b.xz, a.yz - b.yz};
  }
  friend SymTensor2 operator*(double s, SymTensor2 a) {
    return {s * a.xx, s * a.yy, s * a.zz, s * a.xy, s * a.xz, s * a.yz};
  }

  Mat3 as_mat3() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = (*this)(i, j);
    return r;
  }
};

//! Frobenius contraction sum_ij a_ij b_ij (all 9 terms).
inline double ddot(const SymTensor2 &a, const SymTensor2 &b) {
  return a.xx * b.xx + a.yy * b.yy + a.zz * b.zz + 2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

inline double frobenius_norm(const SymTensor2 &a) { return std::sqrt(ddot(a, a)); }

//==============================================================================
//! Fully symmetric rank-3 tensor; 10 independent components.
struct SymTensor3 {
  double xxx = 0, yyy = 0, zzz = 0, xxy = 0, xxz = 0, xyy = 0, yyz = 0, xzz = 0, yzz = 0, xyz = 0;

  double operator()(int i, int j, int k) const { return component(sorted_index(i, j, k)); }
  void set(int i, int j, int k, double v) { component(sorted_index(i, j, k)) = v; }

  friend SymTensor3 operator+(const SymTensor3 &a, const SymTensor3 &b) {
    SymTensor3 r;
    for (int n = 0; n < 10; ++n)
      r.component(n) = a.component(n) + b.component(n);
    return r;
  }
  friend SymTensor3 operator-(const SymTensor3 &a, const SymTensor3 &b) {
    SymTensor3 r;
    for (int n = 0; n < 10; ++n)
      r.component(n) = a.component(n) - b.component(n);
    return r;
  }
  friend SymTensor3 operator*(double s, const SymTensor3 &a) {
    SymTensor3 r;
    for (int n = 0; n < 10; ++n)
      r.component(n) = s * a.component(n);
    return r;
  }

  double &component(int n) {
    double *c[10] = {&xxx, &yyy, &zzz, &xxy, &xxz, &xyy, &yyz, &xzz, &yzz, &xyz};
    return *c[n];
  }
  double component(int n) const {
    const double *c[10] = {&xxx, &yyy, &zzz, &xxy, &xxz, &xyy, &yyz, &xzz, &yzz, &xyz};
    return *c[n];
  }

  static int sorted_index(int i, int j, int k) {
    // order-insensitive lookup into the 10 independent slots
    int a = i, b = j, c = k;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 0 && c == 0) return 0;
    if (a == 1 && b == 1 && c == 1) return 1;
    if (a == 2 && b == 2 && c == 2) return 2;
    if (a == 0 && b == 0 && c == 1) return 3;
    if (a == 0 && b == 0 && c == 2) return 4;
    if (a == 0 && b == 1 && c == 1) return 5;
    if (a == 1 && b == 1 && c == 2) return 6;
    if (a == 0 && b == 2 && c == 2) return 7;
    if (a == 1 && b == 2 && c == 2) return 8;
    return 9; // xyz
  }
};

//! Full 27-term Frobenius contraction sum_ijk a_ijk b_ijk.
inline double dddot(const SymTensor3 &a, const SymTensor3 &b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        s += a(i, j, k) * b(i, j, k);
  return s;
}

inline double frobenius_norm(const SymTensor3 &a) { return std::sqrt(dddot(a, a)); }

//==============================================================================
//! General rank-4 array (3x3x3x3), used for double-gradient Green blocks and
//! quadrupole polarizabilities. Index order (i,j,k,m).
struct Tensor4 {
  std::array<double, 81> a{};

  double operator()(int i, int j, int k, int m) const {
    return a[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + m)];
  }
  double &operator()(int i, int j, int k, int m) {
    return a[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + m)];
  }

  friend Tensor4 operator+(const Tensor4 &x, const Tensor4 &y) {
    Tensor4 r;
    for (std::size_t n = 0; n < 81; ++n)
      r.a[n] = x.a[n] + y.a[n];
    return r;
  }
  friend Tensor4 operator*(double s, const Tensor4 &x) {
    Tensor4 r;
    for (std::size_t n = 0; n < 81; ++n)
      r.a[n] = s * x.a[n];
    return r;
  }
};

inline double max_abs(const Tensor4 &t) {
  double s = 0.0;
  for (double v : t.a)
    s = std::max(s, std::abs(v));
  return s;
}

//==============================================================================
// Traceless decompositions

//! Theta = (3 Q - Tr(Q) I)/2; the trace of the result vanishes identically.
SymTensor2 traceless_quadrupole(const SymTensor2 &q);

//! Omega_ijk = (5 O_ijk - O_ill d_jk - O_jll d_ik - O_kll d_ij)/2;
//! all three pair-traces of the result vanish.
SymTensor3 traceless_octupole(const SymTensor3 &o);

//! Pair-trace vector t_i = O_ill. Transforms as a vector and couples like an
//! effective dipole away from the electrostatic limit.
Vec3 octupole_trace_vector(const SymTensor3 &o);

//==============================================================================
// Spherical-harmonic decomposition of the zzz octupole component

struct ZzzHarmonicCoefficients {
  double c3; //!< coefficient of Y_{3,0}: (4/5) sqrt(pi/7)
  double c1; //!< coefficient of Y_{1,0}: (6/5) sqrt(pi/3)
};

//! Exact coefficients in cos^3(theta) = c3 Y30 + c1 Y10.
ZzzHarmonicCoefficients zzz_spherical_coefficients();

//! Real spherical harmonics, m = 0 (only l = 1, 3 are needed here).
double y10(double theta);
double y30(double theta);

//==============================================================================
// Rotational (isotropic) averaging

//! Weight matrix of the rank-4 isotropic tensor over the three products of
//! Kronecker deltas, with prefactor 1/30.
struct IsotropicWeight4 {
  static constexpr double prefactor = 1.0 / 30.0;
  static constexpr int weights[3][3] = {{4, -1, -1}, {-1, 4, -1}, {-1, -1, 4}};
};

//! <a_i b_j> over rigid rotations = (1/3)(a.b) delta_ij.
SymTensor2 rotational_average_rank2(Vec3 a, Vec3 b);

//! Isotropic average of a_ij b_km K_ijkm over rigid rotations of (a, b),
//! via the rank-4 isotropic tensor with weight matrix (1/30)[[4,-1,-1],...].
//! The kernel index pattern is that of a double-sided Green gradient,
//! K_ijkm = d_i G_jk d'_m.
double rotational_average_rank4(const SymTensor2 &a, const SymTensor2 &b, const Tensor4 &kernel);

//==============================================================================
//! Max-norm relative residual of the trace-survival identity
//!   O_ijk d_i d_j G_km = (2/5) Omega_ijk d_i d_j G_km - (k^2/5) O_kll G_km
//! for a consistent pair (d2g, g) with d2g_ijkm = d_i d_j G_km. Pass
//! k_sq = omega^2/c^2 (or -xi^2/c^2 on the imaginary axis).
double verify_trace_survival(const SymTensor3 &o, const Tensor4 &d2g, const Mat3 &g, double k_sq);

} // namespace cpmp
