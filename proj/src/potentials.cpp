#include "cpmp/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cpmp/quadrature.hpp"

namespace cpmp {

using std::numbers::pi;

namespace {

// Outer xi-quadrature over [0, inf) with the knee at c/z_A; integrand
// support is bounded by max(w_k, c/z_A).
template <class F>
UResult xi_integral(F &&integrand, double z_A, double prefactor, const PotentialOptions &opts,
                    const char *channel_name) {
  quad::Options qopt;
  qopt.rel_tol = opts.rel_tol;
  const auto r = quad::integrate_to_inf(integrand, 0.0, 1.0 / z_A, qopt);
  if (!r.converged)
    throw NonconvergenceError(std::string(channel_name) + ": xi-quadrature did not converge",
                              std::abs(prefactor) * r.error, r.nodes);
  return {prefactor * r.value, std::abs(prefactor) * r.error, r.nodes, r.converged};
}

bool has_any_moment(std::span<const TransitionRecord> records,
                    double (*strength)(const TransitionRecord &)) {
  for (const auto &r : records)
    if (strength(r) != 0.0)
      return true;
  return false;
}

} // namespace

//==============================================================================
UResult u_dipole(std::span<const TransitionRecord> records, const PermittivityModel &model,
                 double z_A, const PotentialOptions &opts) {
  if (!(z_A > 0.0))
    throw std::invalid_argument("u_dipole: z_A must be > 0");
  if (!has_any_moment(records, [](const TransitionRecord &r) { return dot(r.d, r.d); }))
    return {};

  GreenOptions gopts;
  gopts.rel_tol = opts.green_rel_tol;
  auto f = [&](double xi) {
    const Mat3 a = alpha_dd(records, xi);
    const GreenEval ge = green_coincidence(model, z_A, xi, gopts);
    return xi * xi * ddot(a, ge.g);
  };
  return xi_integral(f, z_A, 1.0 / (2.0 * pi), opts, "u_dipole");
}

//==============================================================================
UResult u_quad(std::span<const TransitionRecord> records, const PermittivityModel &model,
               double z_A, const PotentialOptions &opts) {
  if (!(z_A > 0.0))
    throw std::invalid_argument("u_quad: z_A must be > 0");

  GreenOptions gopts;
  gopts.rel_tol = opts.green_rel_tol;

  if (opts.quad_mode == QuadMode::Isotropic) {
    if (isotropic_qq_strength(records, 0.0) == 0.0)
      return {};
    auto f = [&](double xi) {
      const double s = isotropic_qq_strength(records, xi);
      const auto k = green_trace_kernel(model, z_A, xi, gopts);
      return xi * xi * 0.1 * s * k.value;
    };
    return xi_integral(f, z_A, 1.0 / (2.0 * pi), opts, "u_quad");
  }

  if (!has_any_moment(records, [](const TransitionRecord &r) { return ddot(r.Q, r.Q); }))
    return {};
  auto f = [&](double xi) {
    const Tensor4 a = alpha_qq(records, xi);
    const GreenEval ge = green_grad2(model, z_A, xi, gopts);
    double s = 0.0;
    for (std::size_t n = 0; n < 81; ++n)
      s += a.a[n] * ge.grad2->a[n];
    return xi * xi * s;
  };
  return xi_integral(f, z_A, 1.0 / (2.0 * pi), opts, "u_quad");
}

//==============================================================================
namespace {

UResult trace_channel(Mat3 (*alpha)(std::span<const TransitionRecord>, double),
                      std::span<const TransitionRecord> records, const PermittivityModel &model,
                      double z_A, const PotentialOptions &opts, const char *name) {
  if (!(z_A > 0.0))
    throw std::invalid_argument(std::string(name) + ": z_A must be > 0");
  if (max_abs(alpha(records, 0.0)) == 0.0)
    return {};

  GreenOptions gopts;
  gopts.rel_tol = opts.green_rel_tol;
  auto f = [&](double xi) {
    const Mat3 a = alpha(records, xi);
    const GreenEval ge = green_coincidence(model, z_A, xi, gopts);
    double tr = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        tr += a(i, j) * ge.g(j, i);
    return xi * xi * xi * xi * tr;
  };
  return xi_integral(f, z_A, 1.0 / (10.0 * pi), opts, name);
}

} // namespace

UResult u_od_trace(std::span<const TransitionRecord> records, const PermittivityModel &model,
                   double z_A, const PotentialOptions &opts) {
  return trace_channel(&alpha_od, records, model, z_A, opts, "u_od_trace");
}

UResult u_do_trace(std::span<const TransitionRecord> records, const PermittivityModel &model,
                   double z_A, const PotentialOptions &opts) {
  return trace_channel(&alpha_do, records, model, z_A, opts, "u_do_trace");
}

//==============================================================================
UResult u_od_trace_swapped(std::span<const TransitionRecord> records,
                           const PermittivityModel &model, double z_A,
                           const PotentialOptions &opts) {
  if (!(z_A > 0.0))
    throw std::invalid_argument("u_od_trace_swapped: z_A must be > 0");
  if (max_abs(alpha_od(records, 0.0)) == 0.0)
    return {};

  // U = (1/10pi) int_1^inf dv int_0^inf dxi (xi^5/8pi) e^{-2 v xi z}
  //       Tr[ alpha_od(i xi) . (rs diag(1,1,0) - rp diag(v^2,v^2,2v^2-2)) ]
  quad::Options inner_opt;
  inner_opt.rel_tol = opts.green_rel_tol;

  auto outer = [&](double v) {
    auto inner = [&](double xi) {
      const auto [rs, rp] = fresnel(model, xi, v);
      const Mat3 bracket =
          Mat3::diag(rs - rp * v * v, rs - rp * v * v, -rp * (2.0 * v * v - 2.0));
      const Mat3 a = alpha_od(records, xi);
      double tr = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          tr += a(i, j) * bracket(j, i);
      const double x2 = xi * xi;
      return x2 * x2 * xi * std::exp(-2.0 * v * xi * z_A) * tr;
    };
    // xi-support shrinks like 1/(v z); rescale the map accordingly
    const auto r = quad::integrate_to_inf(inner, 0.0, 1.0 / (v * z_A), inner_opt);
    return r.value / (8.0 * pi);
  };

  quad::Options outer_opt;
  outer_opt.rel_tol = opts.rel_tol;
  const auto r = quad::integrate_to_inf(outer, 1.0, 1.0, outer_opt);
  if (!r.converged)
    throw NonconvergenceError("u_od_trace_swapped: v-quadrature did not converge", r.error,
                              r.nodes);
  return {r.value / (10.0 * pi), r.error / (10.0 * pi), r.nodes, r.converged};
}

//==============================================================================
PotentialCurveSet total_potential(std::span<const TransitionRecord> records,
                                  const PermittivityModel &model, std::span<const double> z_grid,
                                  std::span<const Channel> channels,
                                  const PotentialOptions &opts) {
  if (z_grid.empty())
    throw std::invalid_argument("total_potential: empty z grid");
  if (channels.empty())
    throw std::invalid_argument("total_potential: no channels requested");

  PotentialCurveSet set;
  set.z.assign(z_grid.begin(), z_grid.end());
  set.total.assign(z_grid.size(), 0.0);

  for (const Channel ch : channels) {
    PotentialCurve curve;
    curve.channel = ch;
    curve.z = set.z;
    curve.u.resize(z_grid.size());
    curve.quad_error.resize(z_grid.size());
    curve.ok.resize(z_grid.size());

    for (std::size_t n = 0; n < z_grid.size(); ++n) {
      try {
        UResult r;
        switch (ch) {
        case Channel::DipoleDipole:
          r = u_dipole(records, model, z_grid[n], opts);
          break;
        case Channel::QuadQuad:
          r = u_quad(records, model, z_grid[n], opts);
          break;
        case Channel::OctupoleDipoleTrace:
          r = u_od_trace(records, model, z_grid[n], opts);
          break;
        case Channel::DipoleOctupoleTrace:
          r = u_do_trace(records, model, z_grid[n], opts);
          break;
        }
        curve.u[n] = r.value;
        curve.quad_error[n] = r.error;
        curve.ok[n] = true;
        set.total[n] += r.value;
      } catch (const NonconvergenceError &e) {
        curve.u[n] = std::numeric_limits<double>::quiet_NaN();
        curve.quad_error[n] = e.error_estimate;
        curve.ok[n] = false;
        set.total[n] = std::numeric_limits<double>::quiet_NaN();
        set.all_converged = false;
      }
    }
    set.curves.push_back(std::move(curve));
  }
  return set;
}

//==============================================================================
double retarded_onset_z(std::span<const TransitionRecord> records) {
  if (records.empty())
    throw std::invalid_argument("retarded_onset_z: no records");
  double omega_min = std::numeric_limits<double>::infinity();
  for (const auto &r : records)
    omega_min = std::min(omega_min, r.omega);
  return 10.0 / omega_min;
}

//==============================================================================
double trace_crossover_z(const PotentialCurveSet &set, double fraction) {
  const PotentialCurve *qq = nullptr, *od = nullptr, *dp = nullptr;
  for (const auto &c : set.curves) {
    if (c.channel == Channel::QuadQuad)
      qq = &c;
    if (c.channel == Channel::OctupoleDipoleTrace)
      od = &c;
    if (c.channel == Channel::DipoleOctupoleTrace)
      dp = &c;
  }
  if (qq == nullptr || od == nullptr || dp == nullptr)
    throw std::invalid_argument("trace_crossover_z: needs qq, od and do curves");

  std::vector<double> ratio(set.z.size());
  for (std::size_t n = 0; n < set.z.size(); ++n)
    ratio[n] = std::abs(od->u[n] + dp->u[n]) / std::abs(qq->u[n]);

  const double plateau = ratio.back();
  for (std::size_t n = 0; n < set.z.size(); ++n)
    if (ratio[n] >= fraction * plateau)
      return set.z[n];
  return set.z.back();
}

} // namespace cpmp
