#pragma once

#include <complex>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

// A point of the unit ball of C^n, stored as n complex coordinates.
// Interior points satisfy |z| < 1; a boundary-flagged point may have
// |z| = 1 and is accepted only where an operation explicitly allows it.
class BallPoint {
 public:
  explicit BallPoint(std::vector<Complex> coords, bool allow_boundary = false);

  static BallPoint zero(int n);
  // (1, 0, ..., 0), boundary-flagged.
  static BallPoint e1(int n);
  // r * e1 with r in [0, 1).
  static BallPoint radial(int n, double r);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Complex>& coords() const { return coords_; }
  const Complex& operator[](int k) const { return coords_[k]; }

  double norm_sq() const;
  double norm() const;
  bool on_boundary() const { return boundary_; }

 private:
  std::vector<Complex> coords_;
  bool boundary_;
};

// <z, w> = sum_k z_k * conj(w_k).
Complex inner_product(const BallPoint& z, const BallPoint& w);

// The Moebius automorphism phi_z evaluated at omega.  phi_0 = -Id.
BallPoint moebius_map(const BallPoint& z, const BallPoint& omega);

// (1 - |z|^2)^{n+1} / |1 - <z, omega>|^{2n+2}.
double real_jacobian(const BallPoint& z, const BallPoint& omega);

// | |1 - <z,omega>| * |1 - <z, phi_z(omega)>| - (1 - |z|^2) |.
double identity_residual(const BallPoint& z, const BallPoint& omega);

}  // namespace bergman
