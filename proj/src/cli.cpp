#include "cpmp/cli.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

#include "cpmp/quadrature.hpp"

namespace cpmp::cli {

using std::numbers::pi;

//==============================================================================
std::vector<double> RunConfig::make_grid() const {
  if (!(zmin > 0.0) || !(zmax >= zmin))
    throw std::invalid_argument("RunConfig: require 0 < zmin <= zmax");
  if (points < 1)
    throw std::invalid_argument("RunConfig: points must be >= 1");
  std::vector<double> g(static_cast<std::size_t>(points));
  if (points == 1) {
    g[0] = zmin;
    return g;
  }
  for (int n = 0; n < points; ++n) {
    const double t = static_cast<double>(n) / (points - 1);
    g[static_cast<std::size_t>(n)] =
        log_grid ? zmin * std::pow(zmax / zmin, t) : zmin + t * (zmax - zmin);
  }
  return g;
}

std::vector<Channel> parse_channels(const std::string &list) {
  std::vector<Channel> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "dd")
      out.push_back(Channel::DipoleDipole);
    else if (tok == "qq")
      out.push_back(Channel::QuadQuad);
    else if (tok == "od")
      out.push_back(Channel::OctupoleDipoleTrace);
    else if (tok == "do")
      out.push_back(Channel::DipoleOctupoleTrace);
    else if (!tok.empty())
      throw std::invalid_argument("unknown channel '" + tok + "' (expected dd,qq,od,do)");
  }
  if (out.empty())
    throw std::invalid_argument("empty channel list");
  return out;
}

std::string channel_name(Channel c) {
  switch (c) {
  case Channel::DipoleDipole:
    return "dd";
  case Channel::QuadQuad:
    return "qq";
  case Channel::OctupoleDipoleTrace:
    return "od";
  case Channel::DipoleOctupoleTrace:
    return "do";
  }
  return "?";
}

//==============================================================================
bool cmd_potential(const RunConfig &config, const AtomDataset &dataset, std::ostream &out) {
  if (!(config.rel_tol > 0.0 && config.rel_tol < 1.0))
    throw std::invalid_argument("cmd_potential: tolerance must lie in (0, 1)");
  const auto records = dataset.to_internal();
  const auto grid_user = config.make_grid();

  const IsotropicScalars strengths = isotropic_scalars(records);
  for (const Channel ch : config.channels) {
    const bool empty = (ch == Channel::DipoleDipole && alpha_dd(records, 0.0).trace() == 0.0) ||
                       (ch == Channel::QuadQuad && strengths.qq == 0.0) ||
                       (ch == Channel::OctupoleDipoleTrace && strengths.od == 0.0) ||
                       (ch == Channel::DipoleOctupoleTrace && strengths.do_ == 0.0);
    if (empty)
      std::cerr << "cpmp: dataset has no moments for channel " << channel_name(ch)
                << "; column will be zero\n";
  }

  std::vector<double> grid_internal(grid_user.size());
  for (std::size_t n = 0; n < grid_user.size(); ++n)
    grid_internal[n] = units::length_to_internal(grid_user[n], config.unit_system);

  PotentialOptions opts;
  opts.rel_tol = config.rel_tol;

  const PotentialCurveSet set =
      total_potential(records, config.model, grid_internal, config.channels, opts);

  auto find = [&](Channel c) -> const PotentialCurve * {
    for (const auto &crv : set.curves)
      if (crv.channel == c)
        return &crv;
    return nullptr;
  };
  const PotentialCurve *cols[4] = {find(Channel::DipoleDipole), find(Channel::QuadQuad),
                                   find(Channel::OctupoleDipoleTrace),
                                   find(Channel::DipoleOctupoleTrace)};

  out << "z,U_dd,U_qq,U_od,U_do,U_total,err_dd,err_qq,err_od,err_do\n";
  for (std::size_t n = 0; n < grid_user.size(); ++n) {
    out << format_double(grid_user[n]);
    for (const auto *c : cols) {
      out << ',';
      if (c != nullptr)
        out << format_double(units::energy_from_internal(c->u[n], config.unit_system));
    }
    out << ','
        << format_double(units::energy_from_internal(set.total[n], config.unit_system));
    for (const auto *c : cols) {
      out << ',';
      if (c != nullptr)
        out << format_double(units::energy_from_internal(c->quad_error[n], config.unit_system));
    }
    out << '\n';
  }
  return set.all_converged;
}

//==============================================================================
namespace {

SymTensor2 random_sym2(std::mt19937 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

SymTensor3 random_sym3(std::mt19937 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTensor3 o;
  for (int n = 0; n < 10; ++n)
    o.component(n) = u(rng);
  return o;
}

CheckResult make_check(std::string name, double residual, double threshold) {
  CheckResult c;
  c.name = std::move(name);
  c.residual = residual;
  c.threshold = threshold;
  c.pass = residual <= threshold;
  return c;
}

} // namespace

bool VerifyReport::all_pass() const {
  for (const auto &c : checks)
    if (!c.pass)
      return false;
  return true;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto &c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"threshold", c.threshold},
                           {"pass", c.pass}});
  return j.dump(2);
}

VerifyReport cmd_verify(const VerifyOptions &opts) {
  VerifyReport rep;
  GreenOptions gopts;
  gopts.flip_p_dyad_sign = opts.flip_p_dyad_sign;

  // per-mode double-sided transversality across a (q, phi) grid
  {
    double worst_s = 0.0, worst_p = 0.0;
    for (int iq = 0; iq < 10; ++iq)
      for (int ip = 0; ip < 10; ++ip) {
        WeylMode m;
        m.xi = 0.7;
        m.q = 0.3 * iq;
        m.phi = 2.0 * pi * ip / 10.0 + 0.1;
        m.pol = WeylMode::Pol::s;
        worst_s = std::max(worst_s, verify_mode_transversality(m, gopts));
        m.pol = WeylMode::Pol::p;
        worst_p = std::max(worst_p, verify_mode_transversality(m, gopts));
      }
    rep.checks.push_back(make_check("mode_transversality_s", worst_s, 1e-14));
    rep.checks.push_back(make_check("mode_transversality_p", worst_p, 1e-14));
  }

  // integrated Helmholtz residual, mirror and eps = 2
  {
    const PermittivityModel models[2] = {PermittivityModel::perfect_mirror(),
                                         PermittivityModel::constant(2.0)};
    const char *names[2] = {"helmholtz_mirror", "helmholtz_eps2"};
    for (int m = 0; m < 2; ++m) {
      double worst = 0.0;
      for (int iz = 0; iz < 10; ++iz)
        for (int ix = 0; ix < 10; ++ix) {
          const double z = 0.1 * std::pow(100.0, iz / 9.0);
          const double xi = 0.1 * std::pow(100.0, ix / 9.0);
          worst = std::max(worst, verify_helmholtz(models[m], z, xi, gopts));
        }
      rep.checks.push_back(make_check(names[m], worst, 1e-10));
    }
  }

  // quadrupole trace insensitivity: raw vs traceless moments against the
  // double-gradient block (divergence terms drop)
  {
    std::mt19937 rng(12345);
    const GreenEval ge = green_grad2(PermittivityModel::perfect_mirror(), 1.0, 1.0, gopts);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const SymTensor2 q = random_sym2(rng);
      const SymTensor2 qt = (2.0 / 3.0) * traceless_quadrupole(q);
      double full = 0.0, tl = 0.0, scale = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m) {
              const double kern = (*ge.grad2)(i, j, k, m);
              full += q(i, j) * q(k, m) * kern;
              tl += qt(i, j) * qt(k, m) * kern;
              scale = std::max(scale, std::abs(kern));
            }
      worst = std::max(worst, std::abs(full - tl) / (scale > 0 ? scale : 1.0));
    }
    rep.checks.push_back(make_check("quadrupole_trace_survival", worst, 1e-12));
  }

  // octupole trace survival on Weyl-mode blocks (real and imaginary parts)
  {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> uq(0.0, 3.0), uphi(0.0, 2.0 * pi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      WeylMode m;
      m.xi = 0.9;
      m.q = uq(rng);
      m.phi = uphi(rng);
      m.pol = (trial % 2 == 0) ? WeylMode::Pol::p : WeylMode::Pol::s;
      const CMat3 d = weyl_mode_dyad(m, gopts.flip_p_dyad_sign);
      const CVec3 g = weyl_mode_grad_left(m);

      Tensor4 d2g_re, d2g_im;
      Mat3 g_re, g_im;
      for (int k = 0; k < 3; ++k)
        for (int mm = 0; mm < 3; ++mm) {
          const auto dv = d[static_cast<std::size_t>(3 * k + mm)];
          g_re(k, mm) = dv.real();
          g_im(k, mm) = dv.imag();
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              const auto v = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] * dv;
              d2g_re(i, j, k, mm) = v.real();
              d2g_im(i, j, k, mm) = v.imag();
            }
        }
      const SymTensor3 o = random_sym3(rng);
      const double ksq = -m.xi * m.xi;
      worst = std::max({worst, verify_trace_survival(o, d2g_re, g_re, ksq),
                        verify_trace_survival(o, d2g_im, g_im, ksq)});
    }
    rep.checks.push_back(make_check("octupole_trace_survival", worst, 1e-12));
  }

  // frequency-integral identity: int_0^inf xi^5 e^{-2 v z xi} dxi = (15/8)(1/(v z))^6
  {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uv(1.0, 5.0), uz(0.1, 10.0);
    double worst = 0.0;
    for (int trial = 0; trial < 21; ++trial) {
      const double v = (trial == 0) ? 1.0 : uv(rng);
      const double z = (trial == 0) ? 0.5 : uz(rng);
      const auto r = quad::integrate_to_inf(
          [&](double xi) { return std::pow(xi, 5) * std::exp(-2.0 * v * z * xi); }, 0.0,
          1.0 / (v * z));
      const double exact = 15.0 / 8.0 * std::pow(1.0 / (v * z), 6);
      worst = std::max(worst, std::abs(r.value - exact) / exact);
    }
    rep.checks.push_back(make_check("xi5_integral_identity", worst, 1e-10));
  }

  // cos^3 reconstruction from the two m = 0 spherical harmonics
  {
    const auto [c3, c1] = zzz_spherical_coefficients();
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      const double th = pi * (n + 0.5) / 50.0;
      const double rec = c3 * y30(th) + c1 * y10(th);
      worst = std::max(worst, std::abs(rec - std::pow(std::cos(th), 3)));
    }
    rep.checks.push_back(make_check("cos3_reconstruction", worst, 1e-12));
  }

  // traceless decompositions
  {
    std::mt19937 rng(99);
    double worst_q = 0.0, worst_o = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const SymTensor2 q = random_sym2(rng);
      worst_q = std::max(worst_q,
                         std::abs(traceless_quadrupole(q).trace()) / frobenius_norm(q));
      const SymTensor3 o = random_sym3(rng);
      const Vec3 t = octupole_trace_vector(traceless_octupole(o));
      worst_o = std::max(worst_o, norm(t) / frobenius_norm(o));
    }
    rep.checks.push_back(make_check("traceless_quadrupole_trace", worst_q, 1e-14));
    rep.checks.push_back(make_check("traceless_octupole_traces", worst_o, 1e-14));
  }

  return rep;
}

//==============================================================================
std::string RatioReport::to_json() const {
  nlohmann::json j;
  j["alpha_ratio"] = alpha_ratio;
  j["prefactor"] = prefactor;
  j["potential_ratio"] = potential_ratio;
  return j.dump(2);
}

RatioReport cmd_ratio(const AtomDataset &dataset) {
  const auto records = dataset.to_internal();
  const IsotropicScalars s = isotropic_scalars(records);
  if (s.qq == 0.0)
    throw DatasetError("cmd_ratio: dataset has no quadrupole data");

  RatioReport rep;
  rep.alpha_ratio = (s.od + s.do_) / s.qq;
  rep.potential_ratio = ratio_od_do_over_qq(s.od, s.do_, s.qq);
  return rep;
}

//==============================================================================
std::string AsymptoteReport::to_text() const {
  std::ostringstream os;
  os << "channel  analytic_coeff  fitted_coeff  rel_deviation  fitted_exponent  "
        "correction_order\n";
  for (const auto &r : rows) {
    os << channel_name(r.channel) << "  " << format_double(r.analytic) << "  "
       << format_double(r.fitted) << "  " << format_double(r.rel_deviation) << "  "
       << format_double(r.exponent) << "  " << format_double(r.correction_order) << "\n";
  }
  return os.str();
}

AsymptoteReport cmd_asymptote(const RunConfig &config, const AtomDataset &dataset) {
  const auto records = dataset.to_internal();
  const IsotropicScalars s = isotropic_scalars(records);

  // one decade of z, two decades past the retarded onset
  const double z_lo = 100.0 * retarded_onset_z(records);
  const double z_hi = 10.0 * z_lo;
  const int npts = 7;
  std::vector<double> grid(npts);
  for (int n = 0; n < npts; ++n)
    grid[static_cast<std::size_t>(n)] = z_lo * std::pow(z_hi / z_lo, n / double(npts - 1));

  PotentialOptions opts;
  opts.rel_tol = config.rel_tol;

  AsymptoteReport rep;
  for (const Channel ch : config.channels) {
    AsymptoteRow row;
    row.channel = ch;
    int power = 6;
    UResult (*eval)(std::span<const TransitionRecord>, const PermittivityModel &, double,
                    const PotentialOptions &) = nullptr;
    switch (ch) {
    case Channel::DipoleDipole:
      row.analytic = retarded_dd(s.dd, config.model);
      power = 4;
      eval = &u_dipole;
      break;
    case Channel::QuadQuad:
      row.analytic = retarded_qq(s.qq, config.model);
      eval = &u_quad;
      break;
    case Channel::OctupoleDipoleTrace:
      row.analytic = retarded_od_trace(alpha_od(records, 0.0), config.model);
      eval = &u_od_trace;
      break;
    case Channel::DipoleOctupoleTrace:
      row.analytic = retarded_od_trace(alpha_do(records, 0.0), config.model);
      eval = &u_do_trace;
      break;
    }

    if (row.analytic == 0.0) {
      rep.rows.push_back(row);
      continue;
    }

    std::vector<double> uvals(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n)
      uvals[n] = eval(records, config.model, grid[n], opts).value;

    row.fitted = uvals.back() * std::pow(grid.back(), power);
    row.rel_deviation = row.fitted / row.analytic - 1.0;
    row.exponent = fit_scaling_exponent(grid, uvals, z_lo * 0.99, z_hi * 1.01);
    // correction order from the near end of the window, where the
    // finite-distance correction still dominates the quadrature tolerance
    const double c0 = uvals[0] * std::pow(grid[0], power) / row.analytic - 1.0;
    const double c1 = uvals[1] * std::pow(grid[1], power) / row.analytic - 1.0;
    if (c0 != 0.0 && c1 != 0.0 && std::abs(c0) > 10.0 * config.rel_tol)
      row.correction_order = std::log(std::abs(c0 / c1)) / std::log(grid[1] / grid[0]);
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace cpmp::cli
