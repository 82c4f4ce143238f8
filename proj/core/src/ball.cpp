#include "bergman/ball.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

void require_interior(const BallPoint& p, const char* who) {
  if (p.on_boundary() || p.norm_sq() >= 1.0) {
    throw std::domain_error(std::string(who) + ": point must lie in the open unit ball");
  }
}

}  // namespace

BallPoint::BallPoint(std::vector<Complex> coords, bool allow_boundary)
    : coords_(std::move(coords)), boundary_(allow_boundary) {
  if (coords_.empty()) {
    throw std::invalid_argument("BallPoint: dimension must be >= 1");
  }
  const double nsq = norm_sq();
  const double limit = allow_boundary ? 1.0 + 1e-12 : 1.0;
  if (!(nsq < limit) || !std::isfinite(nsq)) {
    throw std::domain_error("BallPoint: |z| exceeds the unit ball");
  }
}

BallPoint BallPoint::zero(int n) {
  return BallPoint(std::vector<Complex>(static_cast<std::size_t>(n), Complex(0.0, 0.0)));
}

BallPoint BallPoint::e1(int n) {
  std::vector<Complex> c(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  c[0] = Complex(1.0, 0.0);
  return BallPoint(std::move(c), /*allow_boundary=*/true);
}

BallPoint BallPoint::radial(int n, double r) {
  std::vector<Complex> c(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  c[0] = Complex(r, 0.0);
  return BallPoint(std::move(c));
}

double BallPoint::norm_sq() const {
  double s = 0.0;
  for (const Complex& z : coords_) s += std::norm(z);
  return s;
}

double BallPoint::norm() const { return std::sqrt(norm_sq()); }

Complex inner_product(const BallPoint& z, const BallPoint& w) {
  if (z.dim() != w.dim()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex s(0.0, 0.0);
  for (int k = 0; k < z.dim(); ++k) s += z[k] * std::conj(w[k]);
  return s;
}

BallPoint moebius_map(const BallPoint& z, const BallPoint& omega) {
  require_interior(z, "moebius_map");
  require_interior(omega, "moebius_map");
  if (z.dim() != omega.dim()) {
    throw std::invalid_argument("moebius_map: dimension mismatch");
  }
  const int n = z.dim();
  const double zsq = z.norm_sq();
  if (zsq < 1e-28) {
    // z = 0 convention: phi_0 = -Id.  The z/|z|^2 singularity in the
    // displayed formula is removable only through this branch.
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c[k] = -omega[k];
    return BallPoint(std::move(c));
  }
  const Complex wz = inner_product(omega, z);
  const Complex proj_coef = wz / zsq;  // P omega = proj_coef * z
  const double s = std::sqrt(1.0 - zsq);
  const Complex denom = 1.0 - wz;
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Complex p = proj_coef * z[k];
    const Complex q = omega[k] - p;
    c[k] = (z[k] - p - s * q) / denom;
  }
  return BallPoint(std::move(c));
}

double real_jacobian(const BallPoint& z, const BallPoint& omega) {
  require_interior(z, "real_jacobian");
  require_interior(omega, "real_jacobian");
  const int n = z.dim();
  const double one_minus = 1.0 - z.norm_sq();
  const double d = std::abs(1.0 - inner_product(z, omega));
  return std::pow(one_minus, n + 1) / std::pow(d, 2 * n + 2);
}

double identity_residual(const BallPoint& z, const BallPoint& omega) {
  require_interior(z, "identity_residual");
  require_interior(omega, "identity_residual");
  const BallPoint image = moebius_map(z, omega);
  const double lhs = std::abs(1.0 - inner_product(z, omega)) *
                     std::abs(1.0 - inner_product(z, image));
  return std::abs(lhs - (1.0 - z.norm_sq()));
}

}  // namespace bergman
