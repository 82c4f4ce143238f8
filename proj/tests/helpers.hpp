#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bergman/ball.hpp"

namespace bergman::testing {

// Deterministic generator for test inputs, independent of the library's
// sampling streams.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed ^ 0x853c49e6748fea9bULL) {}

  double uniform() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform direction, radius law r = max_r * U^{1/(2n)} (uniform in volume).
  BallPoint point(int n, double max_r) {
    std::vector<Complex> c(static_cast<std::size_t>(n));
    double nsq = 0.0;
    do {
      nsq = 0.0;
      for (int k = 0; k < n; ++k) {
        c[k] = Complex(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0);
        nsq += std::norm(c[k]);
      }
    } while (nsq == 0.0);
    const double r = max_r * std::pow(uniform(), 1.0 / (2.0 * n));
    const double s = r / std::sqrt(nsq);
    for (Complex& ck : c) ck *= s;
    return BallPoint(std::move(c));
  }

 private:
  std::uint64_t state_;
};

// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    if (m[col][col] == 0.0) return 0.0;
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

// Central-finite-difference real Jacobian determinant of omega -> phi_z(omega),
// viewing C^n as R^{2n}.
inline double fd_jacobian_det(const BallPoint& z, const BallPoint& omega, double step) {
  const int n = z.dim();
  const int m = 2 * n;
  auto perturb = [&](int coord, double h) {
    std::vector<Complex> c = omega.coords();
    const int k = coord / 2;
    if (coord % 2 == 0) {
      c[static_cast<std::size_t>(k)] += Complex(h, 0.0);
    } else {
      c[static_cast<std::size_t>(k)] += Complex(0.0, h);
    }
    return moebius_map(z, BallPoint(std::move(c)));
  };
  std::vector<std::vector<double>> jac(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(m)));
  for (int col = 0; col < m; ++col) {
    const BallPoint plus = perturb(col, step);
    const BallPoint minus = perturb(col, -step);
    for (int k = 0; k < n; ++k) {
      const Complex d = (plus[k] - minus[k]) / (2.0 * step);
      jac[static_cast<std::size_t>(2 * k)][static_cast<std::size_t>(col)] = d.real();
      jac[static_cast<std::size_t>(2 * k + 1)][static_cast<std::size_t>(col)] = d.imag();
    }
  }
  return determinant(std::move(jac));
}

}  // namespace bergman::testing
