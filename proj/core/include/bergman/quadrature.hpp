#pragma once

#include <cstdint>
#include <functional>

#include "bergman/ball.hpp"
#include "bergman/special.hpp"

namespace bergman {

// Seeded sampling plan.  Estimates are a pure function of
// (integrand, n, config) regardless of worker count: each chunk owns a
// counter-seeded RNG stream and partial sums combine in chunk order.
struct QuadratureConfig {
  std::int64_t sample_count = 100'000;
  std::uint64_t seed = 0;
  double radial_bias = 0.0;  // importance-sampling exponent t_imp > -1
  std::int64_t chunk_size = 16'384;
};

struct IntegralEstimate {
  Complex value{0.0, 0.0};
  double std_error_re = 0.0;
  double std_error_im = 0.0;
  std::int64_t n_samples = 0;

  double real() const { return value.real(); }
  // Root-sum-square error, for modulus comparisons.
  double std_error() const;
};

using Integrand = std::function<Complex(const BallPoint&)>;

// Stream of (point, weight) pairs whose weighted averages estimate
// integrals against normalized volume measure dv.  Direction uniform on
// the sphere, radius via |w|^2 ~ Beta(n, t_imp + 1).
void sample_ball(int n, const QuadratureConfig& cfg,
                 const std::function<void(const BallPoint&, double)>& visit);

// Monte Carlo estimate of int_B f dv.
IntegralEstimate integrate_v(const Integrand& f, int n, const QuadratureConfig& cfg);

// Monte Carlo estimate of int_B f dlambda, dlambda = dv / (1-|w|^2)^{n+1}.
// Rejects integrands whose sampled tail is too heavy for the estimate
// to be meaningful.
IntegralEstimate integrate_lambda(const Integrand& f, int n, const QuadratureConfig& cfg);

// Gauss-Legendre evaluation of n * int_0^1 u^{n-1} g(u) du, the exact
// radial reduction for radially symmetric integrands g(|w|^2).
double integrate_radial(const std::function<double(double)>& g, int n, int node_count);

// Monte Carlo estimate of J_{c,t}(z) at z = r e1, with t_imp = min(t, 0).
IntegralEstimate j_numeric(const JIntegralSpec& spec, QuadratureConfig cfg);

// Same integral at an arbitrary interior point z.
IntegralEstimate j_numeric_at(const BallPoint& z, double c, double t, QuadratureConfig cfg);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Mix a sub-stream index into a seed (used for nested integration).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace bergman
