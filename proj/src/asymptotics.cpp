#include "cpmp/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cpmp/quadrature.hpp"

namespace cpmp {

using std::numbers::pi;

namespace {

// Static-permittivity Fresnel pair as a function of v alone.
FresnelPair static_fresnel(const PermittivityModel &model, double v) {
  return fresnel(model, 0.0, v);
}

// Retarded v-integrals int_1^inf dv W(v; rs, rp) / v^p, done numerically for
// finite eps; the perfect-mirror values are elementary.
template <class W> double v_integral(const PermittivityModel &model, W &&weight) {
  quad::Options opt;
  opt.rel_tol = 1e-12;
  const auto r = quad::integrate_to_inf(
      [&](double v) {
        const auto [rs, rp] = static_fresnel(model, v);
        return weight(v, rs, rp);
      },
      1.0, 1.0, opt);
  return r.value;
}

} // namespace

//==============================================================================
double retarded_od_trace(const Mat3 &alpha_od0, const PermittivityModel &model) {
  if (model.is_mirror()) {
    const Mat3 geom = Mat3::diag(2.0, 2.0, 1.0);
    double tr = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        tr += alpha_od0(i, j) * geom(j, i);
    return -tr / (160.0 * pi * pi);
  }
  // in-plane and normal v-integrals of the reflection bracket
  const double jxx =
      v_integral(model, [](double v, double rs, double rp) { return (rs - rp * v * v) / std::pow(v, 6); });
  const double jzz = v_integral(
      model, [](double v, double, double rp) { return -rp * (2.0 * v * v - 2.0) / std::pow(v, 6); });
  const double tr = (alpha_od0(0, 0) + alpha_od0(1, 1)) * jxx + alpha_od0(2, 2) * jzz;
  return 3.0 / (128.0 * pi * pi) * tr;
}

//==============================================================================
double retarded_qq(double alpha_qq0, const PermittivityModel &model) {
  if (model.is_mirror())
    return -5.0 * alpha_qq0 / (64.0 * pi * pi);
  const double j = v_integral(model, [](double v, double rs, double rp) {
    const double w = 2.0 * v * v - 1.0;
    return w * (rs - rp * w) / std::pow(v, 6);
  });
  return 3.0 / (128.0 * pi * pi) * alpha_qq0 * j;
}

//==============================================================================
double retarded_dd(double alpha_dd0, const PermittivityModel &model) {
  if (model.is_mirror())
    return -3.0 * alpha_dd0 / (32.0 * pi * pi);
  const double j = v_integral(model, [](double v, double rs, double rp) {
    return (2.0 * rs - rp * (4.0 * v * v - 2.0)) / std::pow(v, 4);
  });
  return 3.0 / (128.0 * pi * pi) * alpha_dd0 * j;
}

//==============================================================================
OdDoCoefficients retarded_od_do_isotropic(double alpha_od0, double alpha_do0) {
  const double c = -1.0 / (96.0 * pi * pi);
  return {c * alpha_od0, c * alpha_do0};
}

double sm_scalar_from_matrix(const Mat3 &alpha0) { return alpha0.trace(); }

//==============================================================================
double ratio_od_do_over_qq(double alpha_od0, double alpha_do0, double alpha_qq0) {
  if (!(alpha_qq0 > 0.0))
    throw std::invalid_argument("ratio_od_do_over_qq: alpha_qq0 must be > 0");
  return 2.0 / 15.0 * (alpha_od0 + alpha_do0) / alpha_qq0;
}

//==============================================================================
double fit_scaling_exponent(std::span<const double> z, std::span<const double> u, double z_lo,
                            double z_hi) {
  std::vector<double> lx, ly;
  int sign = 0;
  for (std::size_t n = 0; n < z.size(); ++n) {
    if (z[n] < z_lo || z[n] > z_hi)
      continue;
    if (u[n] == 0.0 || !std::isfinite(u[n]))
      throw std::invalid_argument("fit_scaling_exponent: zero or non-finite value in window");
    const int s = u[n] > 0.0 ? 1 : -1;
    if (sign == 0)
      sign = s;
    else if (s != sign)
      throw std::invalid_argument("fit_scaling_exponent: sign change in window");
    lx.push_back(std::log(z[n]));
    ly.push_back(std::log(std::abs(u[n])));
  }
  if (lx.size() < 5)
    throw std::invalid_argument("fit_scaling_exponent: need at least 5 points in window");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace cpmp
