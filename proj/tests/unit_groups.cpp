#include <doctest.h>

#include "tenscat/groups.hpp"

using namespace tenscat;

namespace {

CrossedModule make_cm(FiniteGroup g, FiniteGroup h, std::vector<int> t,
                      std::vector<std::vector<int>> phi) {
  CrossedModule cm;
  cm.G = std::move(g);
  cm.H = std::move(h);
  cm.t = std::move(t);
  cm.phi = std::move(phi);
  return cm;
}

std::vector<std::vector<int>> trivial_phi(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::vector<int>> phi(g.order(), std::vector<int>(h.order()));
  for (int e = 0; e < g.order(); ++e)
    for (int x = 0; x < h.order(); ++x) phi[e][x] = x;
  return phi;
}

}  // namespace

TEST_CASE("built-in groups validate") {
  FiniteGroup::cyclic(6).validate();
  FiniteGroup::dihedral(4).validate();
  FiniteGroup::symmetric3().validate();
  CHECK(FiniteGroup::symmetric3().is_commutative() == false);
  CHECK(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order() == 6);
}

TEST_CASE("crossed module verification") {
  auto z2 = FiniteGroup::cyclic(2);
  // (Z2, Z2, t=id, phi trivial): abelian makes Peiffer vacuous.
  auto cm = make_cm(z2, z2, {0, 1}, trivial_phi(z2, z2));
  CHECK(verify_crossed_module(cm).valid());

  // (S3, Z3, t = inclusion of rotations, phi = conjugation).
  auto s3 = FiniteGroup::symmetric3();
  auto z3 = FiniteGroup::cyclic(3);
  std::vector<int> incl = {0, 1, 2};  // rotations sit at indices 0,1,2 in our S3
  std::vector<std::vector<int>> conj(s3.order(), std::vector<int>(3));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 3; ++h) {
      const int img = s3.op(s3.op(s3.inv[g], incl[h]), g);  // g^-1 h g
      REQUIRE(img < 3);
      conj[g][h] = img;
    }
  auto cm2 = make_cm(s3, z3, incl, conj);
  CHECK(verify_crossed_module(cm2).valid());

  // (S3, S3, t=id, phi trivial) breaks the Peiffer identity.
  std::vector<int> id6 = {0, 1, 2, 3, 4, 5};
  auto cm3 = make_cm(s3, s3, id6, trivial_phi(s3, s3));
  auto rep = verify_crossed_module(cm3);
  CHECK_FALSE(rep.valid());
  bool has_peiffer = false;
  for (const auto& f : rep.failures) has_peiffer = has_peiffer || f.law == "peiffer";
  CHECK(has_peiffer);
}

TEST_CASE("two-group structure") {
  auto z2 = FiniteGroup::cyclic(2);
  auto cm = make_cm(z2, z2, {0, 1}, trivial_phi(z2, z2));
  auto tg = build_two_group(cm);
  CHECK(tg.hom(0, 1).size() == 1);
  CHECK(tg.hom(0, 0).size() == 1);

  // t trivial: hom(g,g') empty unless g = g', then |H|.
  auto cm2 = make_cm(z2, z2, {0, 0}, trivial_phi(z2, z2));
  auto tg2 = build_two_group(cm2);
  CHECK(tg2.hom(0, 1).empty());
  CHECK(tg2.hom(1, 1).size() == 2);
  // identity morphisms always present
  CHECK(tg2.hom(1, 1)[0].h == 0);

  // Interchange of composition and tensor on all composable quadruples.
  auto s3 = FiniteGroup::symmetric3();
  auto z3 = FiniteGroup::cyclic(3);
  std::vector<std::vector<int>> conj(6, std::vector<int>(3));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 3; ++h) conj[g][h] = s3.op(s3.op(s3.inv[g], h), g);
  auto tg3 = build_two_group(make_cm(s3, z3, {0, 1, 2}, conj));
  int checked = 0;
  for (int g = 0; g < 6; ++g)
    for (int gp = 0; gp < 6; ++gp)
      for (auto& a : tg3.hom(g, tg3.cm.G.op(0, g)))
        for (auto& b : tg3.hom(gp, gp)) {
          for (auto& a2 : tg3.hom(tg3.target(a), tg3.target(a)))
            for (auto& b2 : tg3.hom(tg3.target(b), tg3.target(b))) {
              auto lhs = tg3.tensor(tg3.compose(a2, a), tg3.compose(b2, b));
              auto rhs = tg3.compose(tg3.tensor(a2, b2), tg3.tensor(a, b));
              CHECK(lhs.g == rhs.g);
              CHECK(lhs.h == rhs.h);
              ++checked;
            }
        }
  CHECK(checked > 0);
}

TEST_CASE("pontryagin dual") {
  Tolerance tol;
  {
    auto d = pontryagin_dual(FiniteGroup::cyclic(2));
    REQUIRE(d.size() == 2);
    // characters {1, sign}; xi = -1 on the generator
    CHECK(approx_eq(d.value(0, 1), Scalar(1), tol) != approx_eq(d.value(1, 1), Scalar(1), tol));
  }
  {
    auto d = pontryagin_dual(FiniteGroup::trivial());
    CHECK(d.size() == 1);
  }
  {
    auto d = pontryagin_dual(FiniteGroup::cyclic(3));
    REQUIRE(d.size() == 3);
    // multiplicativity and orthogonality
    for (int j = 0; j < 3; ++j)
      for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h)
          CHECK(approx_eq(d.value(j, (g + h) % 3), d.value(j, g) * d.value(j, h), tol));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Scalar ip(0);
        for (int g = 0; g < 3; ++g) ip += d.value(i, g) * std::conj(d.value(j, g));
        CHECK(approx_eq(ip / 3.0, i == j ? Scalar(1) : Scalar(0), tol));
      }
    d.as_group().validate();
  }
  CHECK_THROWS_AS(pontryagin_dual(FiniteGroup::symmetric3()), NotCommutative);
}

TEST_CASE("function algebra and dual group algebra") {
  Tolerance tol;
  {
    auto a = function_algebra(FiniteGroup::cyclic(2));
    CHECK(a.verify(tol).worst() < 1e-12);
    // eta = d0 + d1, eps(d_i) = 1
    CHECK(approx_eq(a.eta[0], Scalar(1), tol));
    CHECK(approx_eq(a.eta[1], Scalar(1), tol));
    CHECK(approx_eq(a.eps[0], Scalar(1), tol));
  }
  {
    auto a = function_algebra(FiniteGroup::trivial());
    CHECK(a.dim == 1);
    CHECK(a.verify(tol).worst() < 1e-12);
  }
  {
    // action check for Z3: delta_0 <| 1 = delta_1
    auto a = function_algebra(FiniteGroup::cyclic(3));
    CHECK(approx_eq(a.action[1](1, 0), Scalar(1), tol));
  }
  {
    auto d = pontryagin_dual(FiniteGroup::cyclic(2));
    auto a = dual_group_algebra(d);
    CHECK(a.verify(tol).worst() < 1e-12);
    CHECK(approx_eq(a.eps[0], Scalar(2), tol));
    CHECK(approx_eq(a.eps[1], Scalar(0), tol));
  }
  {
    auto d = pontryagin_dual(FiniteGroup::cyclic(3));
    auto a = dual_group_algebra(d);
    CHECK(a.verify(tol).worst() < 1e-12);
    // Delta(phi_1) = (1/3)(phi_0 x phi_1 + phi_1 x phi_0 + phi_2 x phi_2)
    const int n = 3;
    int one = d.mult(1, 0);  // phi_1 itself
    (void)one;
    int sum = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar v = a.Delta.entries[(static_cast<std::size_t>(1) * n + i) * n + j];
        if (std::abs(v) > 1e-14) {
          CHECK(approx_eq(v, Scalar(1.0 / 3), tol));
          CHECK(d.mult(i, j) == 1);
          ++sum;
        }
      }
    CHECK(sum == 3);
  }
}

TEST_CASE("fourier isomorphism") {
  for (int n = 1; n <= 6; ++n) {
    auto fc = fourier_isomorphism(n);
    CHECK(fc.residual < 1e-12);
    // composed with its inverse: identity
    Mat prod = fc.map * fc.map.inverse();
    CHECK((prod - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // n=2: phi_1 -> d0 - d1
  auto fc = fourier_isomorphism(2);
  CHECK(std::abs(fc.map(0, 1) - Scalar(1)) < 1e-12);
  CHECK(std::abs(fc.map(1, 1) - Scalar(-1)) < 1e-12);
}
