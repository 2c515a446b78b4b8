#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

//! Adaptive Gauss-Kronrod (G7,K15) quadrature for scalar and small-vector
//! integrands, with semi-infinite interval mapping.
//!
//! The engine integrates whole tensors (up to 90 components for the Green
//! double-gradient block) in a single adaptive pass, with max-norm error
//! control, and reports node counts so callers can surface quadrature
//! diagnostics. Interval splitting is worst-error-first with deterministic
//! tie-breaking, so results are reproducible bit-for-bit.

namespace cpmp::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

template <std::size_t N> struct VecResult {
  std::array<double, N> value{};
  double error = 0.0;    //!< max-norm error estimate
  int nodes = 0;         //!< total integrand evaluations
  bool converged = false;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  int nodes = 0;
  bool converged = false;
};

namespace detail {

// QUADPACK dqk15 abscissae and weights (positive half; node 0 is last)
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <std::size_t N> struct Panel {
  double a, b;
  std::array<double, N> k15{};
  double err;
  long id; // insertion order; makes the split sequence deterministic
};

template <std::size_t N, class F>
Panel<N> evaluate_panel(F &&f, double a, double b, long id) {
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);

  std::array<double, N> k15{};
  std::array<double, N> g7{};
  for (int n = 0; n < 8; ++n) {
    const double dx = hw * kronrod_x[static_cast<std::size_t>(n)];
    std::array<double, N> fv = f(mid + dx);
    if (n < 7) {
      const std::array<double, N> fm = f(mid - dx);
      for (std::size_t c = 0; c < N; ++c)
        fv[c] += fm[c];
    }
    for (std::size_t c = 0; c < N; ++c)
      k15[c] += kronrod_w[static_cast<std::size_t>(n)] * fv[c];
    if (n % 2 == 1)
      for (std::size_t c = 0; c < N; ++c)
        g7[c] += gauss_w[static_cast<std::size_t>(n / 2)] * fv[c];
  }
  double err = 0.0;
  for (std::size_t c = 0; c < N; ++c) {
    k15[c] *= hw;
    err = std::max(err, std::abs(k15[c] - hw * g7[c]));
  }
  return {a, b, k15, err, id};
}

} // namespace detail

//==============================================================================
//! Adaptive integration of an array-valued f over [a, b].
template <std::size_t N, class F>
VecResult<N> integrate_vec(F &&f, double a, double b, const Options &opt = {}) {
  using detail::Panel;

  auto worse = [](const Panel<N> &p, const Panel<N> &q) {
    return p.err < q.err || (p.err == q.err && p.id > q.id);
  };
  std::priority_queue<Panel<N>, std::vector<Panel<N>>, decltype(worse)> panels(worse);

  long next_id = 0;
  Panel<N> first = detail::evaluate_panel<N>(f, a, b, next_id++);
  int evals = 15;

  // running totals, updated as panels are split
  std::array<double, N> total = first.k15;
  double err = first.err;
  panels.push(std::move(first));

  auto finish = [&](bool ok) {
    VecResult<N> out;
    out.value = total;
    out.error = err;
    out.nodes = evals;
    out.converged = ok;
    return out;
  };

  while (true) {
    double scale = 0.0;
    for (std::size_t c = 0; c < N; ++c)
      scale = std::max(scale, std::abs(total[c]));
    if (err <= std::max(opt.abs_tol, opt.rel_tol * scale))
      return finish(true);
    if (static_cast<int>(panels.size()) >= opt.max_intervals)
      return finish(false);

    Panel<N> worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<N> left = detail::evaluate_panel<N>(f, worst.a, mid, next_id++);
    Panel<N> right = detail::evaluate_panel<N>(f, mid, worst.b, next_id++);
    evals += 30;

    for (std::size_t c = 0; c < N; ++c)
      total[c] += left.k15[c] + right.k15[c] - worst.k15[c];
    err += left.err + right.err - worst.err;
    panels.push(std::move(left));
    panels.push(std::move(right));
  }
}

//==============================================================================
//! Adaptive integration of f over the half line [a, inf), mapped by
//! x = a + scale * t/(1-t). Choose scale near the integrand's decay length.
template <std::size_t N, class F>
VecResult<N> integrate_vec_to_inf(F &&f, double a, double scale, const Options &opt = {}) {
  auto g = [&](double t) {
    const double om = 1.0 - t;
    const double x = a + scale * t / om;
    std::array<double, N> v = f(x);
    const double jac = scale / (om * om);
    for (std::size_t c = 0; c < N; ++c)
      v[c] *= jac;
    return v;
  };
  return integrate_vec<N>(g, 0.0, 1.0, opt);
}

//==============================================================================
// Scalar conveniences

template <class F> Result integrate(F &&f, double a, double b, const Options &opt = {}) {
  auto vf = [&](double x) { return std::array<double, 1>{f(x)}; };
  const auto r = integrate_vec<1>(vf, a, b, opt);
  return {r.value[0], r.error, r.nodes, r.converged};
}

template <class F> Result integrate_to_inf(F &&f, double a, double scale, const Options &opt = {}) {
  auto vf = [&](double x) { return std::array<double, 1>{f(x)}; };
  const auto r = integrate_vec_to_inf<1>(vf, a, scale, opt);
  return {r.value[0], r.error, r.nodes, r.converged};
}

} // namespace cpmp::quad
