#include "tenscat/numerics.hpp"

#include <algorithm>
#include <numeric>

namespace tenscat {

DenseTensor::DenseTensor(std::vector<std::size_t> s) : shape(std::move(s)) {
  entries.assign(size(), Scalar(0));
}

std::size_t DenseTensor::size() const {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

Scalar& DenseTensor::at(const std::vector<std::size_t>& idx) {
  return const_cast<Scalar&>(static_cast<const DenseTensor*>(this)->at(idx));
}

const Scalar& DenseTensor::at(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape.size()) throw SizeMismatch("DenseTensor::at: rank mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= shape[i]) throw SizeMismatch("DenseTensor::at: index out of range");
    flat = flat * shape[i] + idx[i];
  }
  return entries[flat];
}

DenseTensor DenseTensor::from_matrix(const Mat& m) {
  DenseTensor t({static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())});
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t.entries[i * m.cols() + j] = m(i, j);
  return t;
}

Mat DenseTensor::as_matrix() const {
  if (shape.size() != 2) throw SizeMismatch("DenseTensor::as_matrix: rank != 2");
  Mat m(shape[0], shape[1]);
  for (std::size_t i = 0; i < shape[0]; ++i)
    for (std::size_t j = 0; j < shape[1]; ++j) m(i, j) = entries[i * shape[1] + j];
  return m;
}

double DenseTensor::max_norm() const {
  double m = 0;
  for (const auto& z : entries) m = std::max(m, std::abs(z));
  return m;
}

namespace {

// Row echelon with partial pivoting; records pivot columns.  Threshold is
// relative to the max-norm of the input so the factorization is scale free.
struct Echelon {
  Mat rows;                       // reduced rows, rank many
  std::vector<Eigen::Index> piv;  // pivot column per row
};

Echelon row_reduce(const Mat& m, Tolerance tol) {
  Mat a = m;
  const double thresh = tol.eps * std::max(1e-300, a.cwiseAbs().maxCoeff());
  const Eigen::Index nr = a.rows(), nc = a.cols();
  Echelon out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < nc && row < nr; ++col) {
    Eigen::Index best = row;
    double bestv = std::abs(a(row, col));
    for (Eigen::Index i = row + 1; i < nr; ++i)
      if (std::abs(a(i, col)) > bestv) {
        bestv = std::abs(a(i, col));
        best = i;
      }
    if (bestv <= thresh) continue;
    a.row(row).swap(a.row(best));
    a.row(row) /= a(row, col);
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == row) continue;
      if (std::abs(a(i, col)) > 0) a.row(i) -= a(i, col) * a.row(row);
    }
    out.piv.push_back(col);
    ++row;
  }
  out.rows = a.topRows(row);
  return out;
}

}  // namespace

Eigen::Index numerical_rank(const Mat& m, Tolerance tol) {
  if (m.size() == 0) return 0;
  return static_cast<Eigen::Index>(row_reduce(m, tol).piv.size());
}

SplitResult split_idempotent(const Mat& e, Tolerance tol) {
  if (e.rows() != e.cols()) throw SizeMismatch("split_idempotent: matrix not square");
  const double res = (e * e - e).cwiseAbs().maxCoeff();
  if (res > tol.eps) throw NotIdempotent(res);

  // Rank factorization e = B C from the reduced row echelon form: C is the
  // nonzero rows, B the pivot columns of e.  For an idempotent, C B = id_k
  // follows automatically and is asserted below.
  Echelon ech = row_reduce(e, tol);
  const auto k = static_cast<Eigen::Index>(ech.piv.size());
  Mat b(e.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) b.col(j) = e.col(ech.piv[j]);
  SplitResult out{ech.rows, b};

  const double rs = (out.r * out.s - Mat::Identity(k, k)).cwiseAbs().maxCoeff();
  const double sr = (out.s * out.r - e).cwiseAbs().maxCoeff();
  if (k > 0 && (rs > tol.eps * 100 || sr > tol.eps * 100))
    throw NotIdempotent(std::max(rs, sr));
  return out;
}

std::vector<Vec> nullspace_basis(const Mat& m, Tolerance tol) {
  const Eigen::Index nc = m.cols();
  if (m.size() == 0) {
    std::vector<Vec> basis;
    for (Eigen::Index j = 0; j < nc; ++j) {
      Vec v = Vec::Zero(nc);
      v(j) = 1;
      basis.push_back(v);
    }
    return basis;
  }
  Echelon ech = row_reduce(m, tol);
  std::vector<bool> is_piv(nc, false);
  for (auto c : ech.piv) is_piv[c] = true;

  std::vector<Vec> basis;
  for (Eigen::Index free = 0; free < nc; ++free) {
    if (is_piv[free]) continue;
    Vec v = Vec::Zero(nc);
    v(free) = 1;
    for (std::size_t r = 0; r < ech.piv.size(); ++r) v(ech.piv[r]) = -ech.rows(r, free);
    // Gram-Schmidt against what we already have keeps the basis orthonormal.
    for (const auto& u : basis) v -= u.dot(v) * u;
    double n = v.norm();
    if (n > 0) basis.push_back(v / n);
  }
  return basis;
}

namespace {

bool mats_close(const Mat& a, const Mat& b, Tolerance tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol.eps;
}

bool extend_perm(std::vector<std::size_t>& p, std::vector<bool>& used, std::size_t i,
                 const Mat& s1, const Mat& t1, const Mat& s2, const Mat& t2, Tolerance tol) {
  const auto n = static_cast<std::size_t>(s1.rows());
  if (i == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    if (!approx_eq(t1(i, i), t2(j, j), tol)) continue;
    bool ok = approx_eq(s1(i, i), s2(j, j), tol);
    for (std::size_t k = 0; ok && k < i; ++k) {
      ok = approx_eq(s1(i, k), s2(j, p[k]), tol) && approx_eq(s1(k, i), s2(p[k], j), tol) &&
           approx_eq(t1(i, k), t2(j, p[k]), tol) && approx_eq(t1(k, i), t2(p[k], j), tol);
    }
    if (!ok) continue;
    p[i] = j;
    used[j] = true;
    if (extend_perm(p, used, i + 1, s1, t1, s2, t2, tol)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> match_up_to_permutation(const Mat& s1, const Mat& t1,
                                                                const Mat& s2, const Mat& t2,
                                                                Tolerance tol) {
  const Eigen::Index n = s1.rows();
  if (s1.cols() != n || t1.rows() != n || t1.cols() != n || s2.rows() != n || s2.cols() != n ||
      t2.rows() != n || t2.cols() != n)
    throw SizeMismatch("match_up_to_permutation: inputs must be square of equal size");
  if (n > 16) throw SizeMismatch("match_up_to_permutation: size capped at 16");

  // Prune early: the diagonal multisets of T must agree.
  auto diag_sorted = [&](const Mat& t) {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < n; ++i) d.push_back(t(i, i));
    std::sort(d.begin(), d.end(), [](Scalar a, Scalar b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return d;
  };
  auto d1 = diag_sorted(t1), d2 = diag_sorted(t2);
  for (Eigen::Index i = 0; i < n; ++i)
    if (!approx_eq(d1[i], d2[i], Tolerance(tol.eps * 10))) return std::nullopt;

  std::vector<std::size_t> p(n, 0);
  std::vector<bool> used(n, false);
  if (!extend_perm(p, used, 0, s1, t1, s2, t2, tol)) return std::nullopt;

  // Final verification of the full conjugation identity.
  Mat pm = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) pm(p[i], i) = 1;
  if (!mats_close(pm * s1 * pm.transpose(), s2, Tolerance(tol.eps * 10)) ||
      !mats_close(pm * t1 * pm.transpose(), t2, Tolerance(tol.eps * 10)))
    return std::nullopt;
  return p;
}

}  // namespace tenscat
