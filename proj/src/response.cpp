#include "cpmp/response.hpp"

namespace cpmp {

//==============================================================================
Mat3 alpha_dd(std::span<const TransitionRecord> records, double xi) {
  Mat3 a;
  for (const auto &r : records) {
    const double w = 2.0 * r.omega / (r.omega * r.omega + xi * xi);
    a = a + w * Mat3::outer(r.d, r.d);
  }
  return a;
}

Tensor4 alpha_qq(std::span<const TransitionRecord> records, double xi) {
  Tensor4 a;
  for (const auto &r : records) {
    const double w = 2.0 * r.omega / (r.omega * r.omega + xi * xi);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < 3; ++m)
            a(i, j, k, m) += w * r.Q(i, j) * r.Q(k, m);
  }
  return a;
}

Mat3 alpha_od(std::span<const TransitionRecord> records, double xi) {
  Mat3 a;
  for (const auto &r : records) {
    const Vec3 t = octupole_trace_vector(r.O);
    const double w = r.omega / (r.omega * r.omega + xi * xi);
    a = a + w * (Mat3::outer(r.d, t) + Mat3::outer(t, r.d));
  }
  return a;
}

Mat3 alpha_do(std::span<const TransitionRecord> records, double xi) {
  Mat3 a;
  for (const auto &r : records) {
    const Vec3 t = octupole_trace_vector(r.O);
    const double w = r.omega / (r.omega * r.omega + xi * xi);
    a = a + w * (Mat3::outer(t, r.d) + Mat3::outer(r.d, t));
  }
  return a;
}

//==============================================================================
IsotropicScalars isotropic_scalars(std::span<const TransitionRecord> records) {
  IsotropicScalars s;
  s.dd = alpha_dd(records, 0.0).trace() / 3.0;
  s.qq = isotropic_qq_strength(records, 0.0);
  s.od = alpha_od(records, 0.0).trace();
  s.do_ = alpha_do(records, 0.0).trace();
  return s;
}

double isotropic_qq_strength(std::span<const TransitionRecord> records, double xi) {
  double s = 0.0;
  for (const auto &r : records) {
    // only the traceless part couples; the trace drops against the
    // divergence-free Green tensor
    const SymTensor2 qt = (2.0 / 3.0) * traceless_quadrupole(r.Q);
    s += 2.0 * r.omega / (r.omega * r.omega + xi * xi) * ddot(qt, qt);
  }
  return s;
}

} // namespace cpmp
