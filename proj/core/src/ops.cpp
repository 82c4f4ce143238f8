#include "bergman/ops.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

void require_positive_mu(const ProjectionParams& p, const char* who) {
  if (!(p.mu() > 0.0)) {
    throw std::domain_error(std::string(who) +
                            ": requires mu = n+1+sigma > 0 (Gamma(mu) pole or "
                            "nonpositive parameter)");
  }
}

void require_interior(const BallPoint& z, const char* who) {
  if (z.on_boundary() || z.norm_sq() >= 1.0) {
    throw std::domain_error(std::string(who) + ": requires |z| < 1");
  }
}

void append_indices(int remaining_slots, int remaining_degree,
                    std::vector<int>& current, std::vector<MultiIndex>& out) {
  if (remaining_slots == 1) {
    current.push_back(remaining_degree);
    out.push_back(MultiIndex{current});
    current.pop_back();
    return;
  }
  // Lexicographically descending first entry gives ascending... iterate
  // ascending to keep plain lexicographic order on tuples.
  for (int k = remaining_degree; k >= 0; --k) {
    current.push_back(remaining_degree - k);
    append_indices(remaining_slots - 1, k, current, out);
    current.pop_back();
  }
}

Complex int_pow(Complex base, int e) {
  Complex r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

int MultiIndex::degree() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

std::vector<MultiIndex> enumerate_multiindices(int n, int degree) {
  if (n < 1) throw std::invalid_argument("enumerate_multiindices: n must be >= 1");
  if (degree < 0) throw std::invalid_argument("enumerate_multiindices: degree >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(n));
  append_indices(n, degree, current, out);
  return out;
}

Complex monomial(const BallPoint& z, const MultiIndex& alpha) {
  if (z.dim() != alpha.dim()) {
    throw std::invalid_argument("monomial: dimension mismatch");
  }
  Complex r(1.0, 0.0);
  for (int k = 0; k < z.dim(); ++k) r *= int_pow(z[k], alpha.entries[static_cast<std::size_t>(k)]);
  return r;
}

double q_prefactor(const ProjectionParams& p) {
  require_positive_mu(p, "q_prefactor");
  return std::exp(log_gamma(p.n + 1 + p.mu()) - log_gamma(p.mu()));
}

Complex kernel(const ProjectionParams& p, const BallPoint& z, const BallPoint& w) {
  require_interior(z, "kernel");
  require_interior(w, "kernel");
  const Complex denom_base = 1.0 - inner_product(z, w);
  assert(denom_base.real() > 0.0);
  const double weight = std::pow(1.0 - w.norm_sq(), p.sigma);
  return weight * std::pow(denom_base, -(p.n + 1 + p.sigma));
}

IntegralEstimate project(const ProjectionParams& p, const Integrand& f,
                         const BallPoint& z, const QuadratureConfig& cfg) {
  require_interior(z, "project");
  QuadratureConfig c = cfg;
  c.radial_bias = std::min(p.sigma, 0.0);
  auto integrand = [&p, &f, &z](const BallPoint& w) { return kernel(p, z, w) * f(w); };
  return integrate_v(integrand, p.n, c);
}

IntegralEstimate q_op(const ProjectionParams& p, const MultiIndex& alpha,
                      const Integrand& f, const BallPoint& z,
                      const QuadratureConfig& cfg) {
  require_positive_mu(p, "q_op");
  require_interior(z, "q_op");
  if (alpha.dim() != p.n) throw std::invalid_argument("q_op: alpha dimension mismatch");
  const double pref = q_prefactor(p);
  const double expo = -(p.n + 1 + p.mu());
  QuadratureConfig c = cfg;
  c.radial_bias = std::min(p.sigma, 0.0);
  auto integrand = [&](const BallPoint& w) {
    Complex conj_pow(1.0, 0.0);
    for (int k = 0; k < p.n; ++k) {
      conj_pow *= int_pow(std::conj(w[k]), alpha.entries[static_cast<std::size_t>(k)]);
    }
    const double weight = std::pow(1.0 - w.norm_sq(), p.sigma);
    return conj_pow * weight * std::pow(1.0 - inner_product(z, w), expo) * f(w);
  };
  IntegralEstimate est = integrate_v(integrand, p.n, c);
  est.value *= pref;
  est.std_error_re *= pref;
  est.std_error_im *= pref;
  return est;
}

IntegralEstimate q_conj(const ProjectionParams& p, const MultiIndex& alpha,
                        const Integrand& g, const BallPoint& z,
                        const QuadratureConfig& cfg) {
  require_positive_mu(p, "q_conj");
  require_interior(z, "q_conj");
  if (alpha.dim() != p.n) throw std::invalid_argument("q_conj: alpha dimension mismatch");
  const Complex outer = q_prefactor(p) * monomial(z, alpha) *
                        std::pow(1.0 - z.norm_sq(), p.mu());
  const double expo = -(p.n + 1 + p.mu());
  auto integrand = [&](const BallPoint& w) {
    return std::pow(1.0 - inner_product(z, w), expo) * g(w);
  };
  IntegralEstimate est = integrate_v(integrand, p.n, cfg);
  const double scale = std::abs(outer);
  est.value *= outer;
  est.std_error_re *= scale;
  est.std_error_im *= scale;
  return est;
}

ExtremalFunction::ExtremalFunction(Kind kind, ProjectionParams params, BallPoint anchor)
    : kind_(kind), params_(params), anchor_(std::move(anchor)) {
  require_positive_mu(params_, "ExtremalFunction");
}

Complex ExtremalFunction::operator()(const BallPoint& w) const {
  const Complex q = 1.0 - inner_product(anchor_, w);
  const double s = params_.n + 1 + params_.mu();
  // |q|^s / conj(q)^s = exp(i s arg q), unimodular by construction.
  return std::polar(1.0, s * std::arg(q));
}

Integrand ExtremalFunction::as_integrand() const {
  return [copy = *this](const BallPoint& w) { return copy(w); };
}

ExtremalFunction maximizer_g(const ProjectionParams& p, const BallPoint& z) {
  require_interior(z, "maximizer_g");
  return ExtremalFunction(ExtremalFunction::Kind::kMaximizer, p, z);
}

ExtremalFunction extremal_g(const ProjectionParams& p, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("extremal_g: requires eps in (0, 1)");
  }
  return ExtremalFunction(ExtremalFunction::Kind::kBoundaryFamily, p,
                          BallPoint::radial(p.n, eps));
}

SeminormEstimate besov_seminorm(const ProjectionParams& p, const Integrand& f,
                                const QuadratureConfig& cfg_outer,
                                const QuadratureConfig& cfg_inner) {
  require_positive_mu(p, "besov_seminorm");
  const std::vector<MultiIndex> alphas = enumerate_multiindices(p.n, p.n + 1);
  QuadratureConfig outer = cfg_outer;
  outer.radial_bias = 0.0;

  double sum = 0.0, sum_sq = 0.0, inner_se = 0.0;
  std::int64_t i = 0;
  sample_ball(p.n, outer, [&](const BallPoint& z, double weight) {
    QuadratureConfig inner = cfg_inner;
    inner.seed = mix_seed(cfg_inner.seed, static_cast<std::uint64_t>(i));
    double s = 0.0, se = 0.0;
    for (const MultiIndex& alpha : alphas) {
      const IntegralEstimate est = q_op(p, alpha, f, z, inner);
      s += std::abs(est.value);
      se += est.std_error();
    }
    const double v = weight * s;
    sum += v;
    sum_sq += v * v;
    inner_se += se;
    ++i;
  });

  const double nd = static_cast<double>(i);
  SeminormEstimate out;
  out.value = sum / nd;
  double outer_se = 0.0;
  if (i > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / nd) / (nd - 1.0));
    outer_se = std::sqrt(var / nd);
  }
  out.std_error = outer_se + inner_se / nd;
  return out;
}

IntegralEstimate l1_lambda_norm(const Integrand& f, int n, const QuadratureConfig& cfg) {
  auto abs_f = [&f](const BallPoint& w) { return Complex(std::abs(f(w)), 0.0); };
  return integrate_lambda(abs_f, n, cfg);
}

std::vector<NamedIntegrand> admissible_test_family(int n) {
  std::vector<NamedIntegrand> out;
  auto weight_pow = [](double e) {
    return [e](const BallPoint& w) { return Complex(std::pow(1.0 - w.norm_sq(), e), 0.0); };
  };
  out.push_back({"(1-|w|^2)^{n+1}", weight_pow(n + 1.0)});
  out.push_back({"(1-|w|^2)^{n+2}", weight_pow(n + 2.0)});
  out.push_back({"(1-|w|^2)^{n+2} w1", [n](const BallPoint& w) {
                   return std::pow(1.0 - w.norm_sq(), n + 2.0) * w[0];
                 }});
  out.push_back({"(1-|w|^2)^{n+2} w1^2", [n](const BallPoint& w) {
                   return std::pow(1.0 - w.norm_sq(), n + 2.0) * w[0] * w[0];
                 }});
  return out;
}

std::vector<NamedIntegrand> bounded_test_family(int /*n*/) {
  std::vector<NamedIntegrand> out;
  out.push_back({"1", [](const BallPoint&) { return Complex(1.0, 0.0); }});
  out.push_back({"w1", [](const BallPoint& w) { return w[0]; }});
  out.push_back({"conj(w1)", [](const BallPoint& w) { return std::conj(w[0]); }});
  out.push_back({"exp(i |w|^2)", [](const BallPoint& w) {
                   return std::polar(1.0, w.norm_sq());
                 }});
  return out;
}

}  // namespace bergman
