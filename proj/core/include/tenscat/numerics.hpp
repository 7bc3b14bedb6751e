#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace tenscat {

using Scalar = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Tolerance knob shared by every approximate comparison in the library.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0) || !(e < 1.0)) throw std::invalid_argument("Tolerance: eps must lie in (0,1)");
  }
};

inline bool approx_eq(Scalar a, Scalar b, Tolerance tol) { return std::abs(a - b) <= tol.eps; }
inline bool approx_zero(double x, Tolerance tol) { return std::abs(x) <= tol.eps; }

/// Dense tensor with row-major entries; the exchange type for structure
/// morphisms and for the .fcat.json file format.
struct DenseTensor {
  std::vector<std::size_t> shape;
  std::vector<Scalar> entries;

  DenseTensor() = default;
  explicit DenseTensor(std::vector<std::size_t> s);

  std::size_t size() const;
  std::size_t rank() const { return shape.size(); }

  Scalar& at(const std::vector<std::size_t>& idx);
  const Scalar& at(const std::vector<std::size_t>& idx) const;

  static DenseTensor from_matrix(const Mat& m);
  Mat as_matrix() const;  // requires rank 2

  double max_norm() const;
};

struct NotIdempotent : std::runtime_error {
  explicit NotIdempotent(double residual)
      : std::runtime_error("split_idempotent: input is not idempotent (residual " +
                           std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rank factorization of an idempotent e = s*r with r*s = id.  Rank is decided
/// by row elimination with pivot threshold eps * max-norm(e).
struct SplitResult {
  Mat r;  // k x n
  Mat s;  // n x k
};
SplitResult split_idempotent(const Mat& e, Tolerance tol);

/// Orthonormal basis of {v : Mv = 0}, threshold eps * max-norm(M).
std::vector<Vec> nullspace_basis(const Mat& m, Tolerance tol);

/// Numerical rank by the same pivoted elimination used for splitting.
Eigen::Index numerical_rank(const Mat& m, Tolerance tol);

/// Search for a permutation p with P S1 P^T = S2 and P T1 P^T = T2 where
/// P[p[i]][i] = 1.  Diagonal multisets of T are matched first to prune.
/// Sizes are capped at 16.
std::optional<std::vector<std::size_t>> match_up_to_permutation(const Mat& s1, const Mat& t1,
                                                                const Mat& s2, const Mat& t2,
                                                                Tolerance tol);

}  // namespace tenscat
