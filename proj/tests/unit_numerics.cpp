#include <doctest.h>

#include <random>

#include "tenscat/numerics.hpp"

using namespace tenscat;

TEST_CASE("approx_eq basic cases") {
  CHECK(approx_eq(Scalar(1.0), Scalar(1.0 + 1e-12), Tolerance(1e-9)));
  CHECK_FALSE(approx_eq(Scalar(0), Scalar(1e-6), Tolerance(1e-9)));
  // e^{2 pi i/3} evaluated numerically.
  const Scalar w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(approx_eq(w, Scalar(-0.5, 0.8660254038), Tolerance(1e-8)));
}

TEST_CASE("split_idempotent identity and projector") {
  Tolerance tol;
  {
    Mat e = Mat::Identity(2, 2);
    auto [r, s] = split_idempotent(e, tol);
    CHECK(r.rows() == 2);
    CHECK((r * s - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < tol.eps);
    CHECK((s * r - e).cwiseAbs().maxCoeff() < tol.eps);
  }
  {
    Mat e = Mat::Zero(2, 2);
    e(0, 0) = 1;
    auto [r, s] = split_idempotent(e, tol);
    CHECK(r.rows() == 1);
    CHECK((s * r - e).cwiseAbs().maxCoeff() < tol.eps);
  }
  {
    Mat e(2, 2);
    e << 0.5, 0.5, 0.5, 0.5;
    auto [r, s] = split_idempotent(e, tol);
    CHECK(r.rows() == 1);
    CHECK((r * s - Mat::Identity(1, 1)).cwiseAbs().maxCoeff() < tol.eps);
    CHECK((s * r - e).cwiseAbs().maxCoeff() < tol.eps);
  }
  {
    Mat m(2, 2);
    m << 1, 1, 0, 1;  // not idempotent
    CHECK_THROWS_AS(split_idempotent(m, tol), NotIdempotent);
  }
}

TEST_CASE("split_idempotent on random conjugated projectors") {
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    const int k = 1 + static_cast<int>(rng() % n);
    Mat p = Mat::Zero(n, n);
    for (int i = 0; i < k; ++i) p(i, i) = 1;
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = Scalar(nd(rng), nd(rng));
    g += 3.0 * Mat::Identity(n, n);  // keep it comfortably invertible
    Mat e = g * p * g.inverse();
    e = 0.5 * (e * e + e);  // polish idempotency to numerical precision
    auto [r, s] = split_idempotent(e, Tolerance(1e-7));
    CHECK(r.rows() == k);
    CHECK((r * s - Mat::Identity(k, k)).cwiseAbs().maxCoeff() < 1e-7);
    CHECK((s * r - e).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("nullspace_basis") {
  Tolerance tol;
  {
    auto basis = nullspace_basis(Mat::Zero(2, 2), tol);
    CHECK(basis.size() == 2);
  }
  {
    auto basis = nullspace_basis(Mat::Identity(3, 3), tol);
    CHECK(basis.empty());
  }
  {
    Mat m(1, 2);
    m << 1, 1;
    auto basis = nullspace_basis(m, tol);
    REQUIRE(basis.size() == 1);
    CHECK(std::abs(basis[0].norm() - 1.0) < 1e-12);
    CHECK((m * basis[0]).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(std::abs(basis[0](0) / basis[0](1)) - 1.0) < 1e-12);
  }
}

TEST_CASE("match_up_to_permutation") {
  Tolerance tol;
  Mat s(3, 3), t = Mat::Zero(3, 3);
  s << 1, 2, 3, 2, 5, 6, 3, 6, 9;
  t(0, 0) = 1;
  t(1, 1) = Scalar(0, 1);
  t(2, 2) = -1;
  auto idp = match_up_to_permutation(s, t, s, t, tol);
  REQUIRE(idp.has_value());
  CHECK(*idp == std::vector<std::size_t>({0, 1, 2}));

  // Conjugate by the transposition (0 1).
  Mat p = Mat::Zero(3, 3);
  p(1, 0) = p(0, 1) = p(2, 2) = 1;
  Mat s2 = p * s * p.transpose(), t2 = p * t * p.transpose();
  auto tr = match_up_to_permutation(s, t, s2, t2, tol);
  REQUIRE(tr.has_value());
  CHECK((*tr)[0] == 1);
  CHECK((*tr)[1] == 0);

  // Different diagonal multisets of T: no match.
  Mat t3 = t;
  t3(2, 2) = Scalar(0, -1);
  CHECK_FALSE(match_up_to_permutation(s, t, s, t3, tol).has_value());
}
