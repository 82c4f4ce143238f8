#pragma once

#include <string>
#include <vector>

#include "bergman/ball.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

// (n, sigma) with mu = n+1+sigma derived, never stored.
struct ProjectionParams {
  int n = 1;
  double sigma = 0.0;

  double mu() const { return n + 1 + sigma; }
  bool bounded() const { return sigma > -(n + 1.0); }
};

// alpha in Z_+^n; |alpha| = n+1 in Besov semi-norm contexts.
struct MultiIndex {
  std::vector<int> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  int degree() const;
};

// All alpha in Z_+^n with |alpha| = degree, lexicographic.  For
// degree = n+1 the count is d = (2n)! / ((n+1)! (n-1)!).
std::vector<MultiIndex> enumerate_multiindices(int n, int degree);

// z^alpha = prod_k z_k^{alpha_k}.
Complex monomial(const BallPoint& z, const MultiIndex& alpha);

// Gamma(n+1+mu) / Gamma(mu) = mu (mu+1) ... (mu+n), the derivative
// prefactor; requires mu > 0.
double q_prefactor(const ProjectionParams& p);

// Kernel K_sigma(z, w) = (1-|w|^2)^sigma / (1 - <z,w>)^{n+1+sigma},
// principal branch (Re(1 - <z,w>) > 0 on B x B).
Complex kernel(const ProjectionParams& p, const BallPoint& z, const BallPoint& w);

// P_sigma f(z) = int_B K_sigma(z, w) f(w) dv(w), Monte Carlo.
IntegralEstimate project(const ProjectionParams& p, const Integrand& f,
                         const BallPoint& z, const QuadratureConfig& cfg);

// Q_{sigma,alpha} f(z), the mixed holomorphic partial of order |alpha|
// of P_sigma f.
IntegralEstimate q_op(const ProjectionParams& p, const MultiIndex& alpha,
                      const Integrand& f, const BallPoint& z,
                      const QuadratureConfig& cfg);

// The conjugate operator Q*_{sigma,alpha} g(z); the z^alpha (1-|z|^2)^mu
// factor is pulled out of the integral.
IntegralEstimate q_conj(const ProjectionParams& p, const MultiIndex& alpha,
                        const Integrand& g, const BallPoint& z,
                        const QuadratureConfig& cfg);

// Unimodular extremal functions: the pointwise maximizer g_z and the
// boundary family g_eps = g_{eps e1}.
class ExtremalFunction {
 public:
  enum class Kind { kMaximizer, kBoundaryFamily };

  ExtremalFunction(Kind kind, ProjectionParams params, BallPoint anchor);

  Complex operator()(const BallPoint& w) const;
  Kind kind() const { return kind_; }
  const BallPoint& anchor() const { return anchor_; }
  Integrand as_integrand() const;

 private:
  Kind kind_;
  ProjectionParams params_;
  BallPoint anchor_;
};

ExtremalFunction maximizer_g(const ProjectionParams& p, const BallPoint& z);
ExtremalFunction extremal_g(const ProjectionParams& p, double eps);

struct SeminormEstimate {
  double value = 0.0;
  // Outer standard error plus mean inner standard error.
  double std_error = 0.0;
};

// sum_{|alpha|=n+1} int_B |Q_{sigma,alpha} f(z)| dv(z) by nested Monte
// Carlo; inner seeds derive from the outer sample counter.
SeminormEstimate besov_seminorm(const ProjectionParams& p, const Integrand& f,
                                const QuadratureConfig& cfg_outer,
                                const QuadratureConfig& cfg_inner);

// int_B |f| dlambda.
IntegralEstimate l1_lambda_norm(const Integrand& f, int n, const QuadratureConfig& cfg);

// Reproducible weight-times-monomial test families.
struct NamedIntegrand {
  std::string name;
  Integrand fn;
};

// Admissible against dlambda: boundary decay at least (1-|w|^2)^{n+1}.
std::vector<NamedIntegrand> admissible_test_family(int n);
// Bounded functions for the adjoint side.
std::vector<NamedIntegrand> bounded_test_family(int n);

}  // namespace bergman
