#pragma once

#include <span>
#include <utility>

namespace bergman {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Digamma function, any non-pole real argument.
double digamma(double x);

// prod Gamma(num) / prod Gamma(den).  Returns 0 when a denominator
// argument sits at a pole; throws DivergenceError when a numerator
// argument does.
double gamma_quotient(std::span<const double> num, std::span<const double> den);

struct HypergeometricInput {
  double a;
  double b;
  double c;
  double x;  // in [0, 1); x = 1 only through gauss_2f1_at_one
};

// Gauss 2F1(a, b; c; x) on [0, 1).  Direct series away from 1,
// connection formulas at 1-x near the boundary.
double gauss_2f1(const HypergeometricInput& h);
double gauss_2f1(double a, double b, double c, double x);

// Gauss summation: Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)),
// valid for c - a - b > 0; throws DivergenceError otherwise.
double gauss_2f1_at_one(double a, double b, double c);

// The radially symmetric integral
//   J_{c,t}(z) = int_B (1-|w|^2)^t |1 - <z,w>|^{-(n+1+t+c)} dv(w),
// which depends on z only through r = |z|.
struct JIntegralSpec {
  int n;
  double c;
  double t;
  double r;  // |z| in [0, 1)

  JIntegralSpec(int n_, double c_, double t_, double r_);

  // The 2F1 parameter a = b = lambda = (n+1+t+c)/2, fixed at construction.
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

// [Gamma(n+1)Gamma(t+1)/Gamma(n+1+t)] * 2F1(lambda, lambda; n+1+t; r^2).
double j_closed_form(const JIntegralSpec& spec);

// Boundary value J_{c,t}(e1) = Gamma(n+1)Gamma(t+1)Gamma(-c) / Gamma^2((n+1+t-c)/2),
// defined for c < 0 (throws DivergenceError for c >= 0).
double j_boundary(double c, double t, int n);

// Extrapolate f(1-u) -> f(1) from samples (u_k, f_k), u_k -> 0, by
// eliminating the leading boundary terms u, u ln u, u^2, u^2 ln u.
// Uses the five smallest-u samples (fewer samples shrink the basis).
double limit_extrapolate(std::span<const std::pair<double, double>> samples);

}  // namespace bergman
