#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bergman/ops.hpp"

namespace bergman {

// n! Gamma(n+1+mu) / Gamma^2((n+1+mu)/2), mu = n+1+sigma; the exact
// operator semi-norm L^1(B, dlambda) -> B_1.  Throws DivergenceError
// for sigma <= -(n+1).
double closed_constant(const ProjectionParams& p);

// (r, bound) with bound = [Gamma(n+1+mu)/Gamma(mu)] J_{-mu,0}(r e1);
// nondecreasing in r, sup below closed_constant.
std::vector<std::pair<double, double>> upper_bound_profile(
    const ProjectionParams& p, std::span<const double> radius_grid);

// Limit of the bound profile as r -> 1; equals closed_constant in
// Gamma arithmetic.
double upper_bound_limit(const ProjectionParams& p);

struct LowerBoundPoint {
  double eps = 0.0;
  double numeric = 0.0;    // |Q* g_eps (eps e1)| by Monte Carlo
  double std_error = 0.0;
  double closed = 0.0;     // prefactor * eps^{n+1} * J_{-mu,0}(eps e1)
};

// Extremal sweep witnessing the lower bound, alpha = (n+1, 0, ..., 0).
std::vector<LowerBoundPoint> lower_bound_sweep(const ProjectionParams& p,
                                               std::span<const double> eps_list,
                                               const QuadratureConfig& cfg);

// (eps, J_{-mu,0}(eps e1)) for mu <= 0: demonstrates divergence.
std::vector<std::pair<double, double>> divergence_probe(
    const ProjectionParams& p, std::span<const double> eps_list);

// Default epsilon schedules 1 - 2^{-k}.
std::vector<double> default_eps_schedule(int k_max);
std::vector<double> default_radius_grid();

struct NormCertificate {
  ProjectionParams params;
  bool unbounded = false;
  double closed_form = 0.0;  // 0 in the unbounded branch
  std::vector<std::pair<double, double>> upper_evidence;
  double boundary_limit = 0.0;
  std::vector<LowerBoundPoint> lower_evidence;
  std::vector<std::pair<double, double>> divergence_evidence;
  bool pass = false;
  std::vector<std::string> failures;
  double gamma_rel_tol = 1e-10;
  double mc_band = 3.0;
  // Resolved inputs, for reproducibility.
  QuadratureConfig config;
  std::vector<double> eps_list;
  std::vector<double> radius_grid;

  std::string verdict() const;
};

// Assemble closed form, upper profile and lower sweep (bounded case) or
// divergence probe (unbounded case) into a verdict.
NormCertificate certify(const ProjectionParams& p, const QuadratureConfig& cfg,
                        std::span<const double> eps_list,
                        std::span<const double> radius_grid);

struct SpotCheck {
  std::string name;
  double lhs = 0.0;       // Besov semi-norm estimate of P_sigma f
  double lhs_err = 0.0;
  double rhs = 0.0;       // closed_constant * ||f||_{L^1(dlambda)}
  double rhs_err = 0.0;
  double margin = 0.0;    // rhs + band - lhs
  bool ok = false;
};

// End-to-end inequality on the shipped admissible family.
std::vector<SpotCheck> inequality_spotcheck(const ProjectionParams& p,
                                            const QuadratureConfig& cfg_outer,
                                            const QuadratureConfig& cfg_inner);

}  // namespace bergman
