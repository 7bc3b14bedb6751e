#include <doctest.h>

#include "tenscat/two_group_algebra.hpp"

using namespace tenscat;

namespace {

CrossedModule cm_of(FiniteGroup g, FiniteGroup h, std::vector<int> t) {
  CrossedModule cm;
  cm.G = std::move(g);
  cm.H = std::move(h);
  cm.t = std::move(t);
  cm.phi.assign(cm.G.order(), std::vector<int>(cm.H.order()));
  for (int e = 0; e < cm.G.order(); ++e)
    for (int x = 0; x < cm.H.order(); ++x) cm.phi[e][x] = x;
  return cm;
}

}  // namespace

TEST_CASE("two-group algebra on (Z1,Z1)") {
  auto a = build_two_group_algebra(cm_of(FiniteGroup::trivial(), FiniteGroup::trivial(), {0}));
  CHECK(a.dim == 1);
  CHECK(verify_two_group_algebra(a, Tolerance()).worst() < 1e-14);
}

TEST_CASE("two-group algebra on (Z2,Z2,t=0) has Delta weight 1/2") {
  auto a = build_two_group_algebra(cm_of(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), {0, 0}));
  CHECK(a.dim == 4);
  auto rep = verify_two_group_algebra(a, Tolerance());
  CHECK(rep.worst() < 1e-13);
  // Delta(e_(0,0)) carries weight 1/2 on each of the two summands.
  const int i00 = a.index(0, 0);
  const std::size_t n = static_cast<std::size_t>(a.dim);
  double total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      total += std::abs(a.Delta.entries[(static_cast<std::size_t>(i00) * n + x) * n + y]);
  CHECK(total == doctest::Approx(1.0));  // two terms of 1/2
}

TEST_CASE("two-group algebra on (Z2,Z2,t=id) glues shifted legs") {
  auto a = build_two_group_algebra(cm_of(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), {0, 1}));
  CHECK(a.dim == 4);
  CHECK(verify_two_group_algebra(a, Tolerance()).worst() < 1e-13);
  // mu(e_(t(h)g, h') (x) e_(g,h)) with g=0,h=1,h'=1: left index (1,1), right (0,1),
  // result (0, 0).
  const int left = a.index(1, 1), right = a.index(0, 1), out = a.index(0, 0);
  const std::size_t n = static_cast<std::size_t>(a.dim);
  CHECK(std::abs(a.mu.entries[(static_cast<std::size_t>(left) * n + right) * n + out] -
                 Scalar(1)) < 1e-14);
  // mismatched g-legs vanish
  const int bad = a.index(0, 1);
  double s = 0;
  for (std::size_t k = 0; k < n; ++k)
    s += std::abs(a.mu.entries[(static_cast<std::size_t>(bad) * n + bad) * n + k]);
  CHECK(s == doctest::Approx(0.0));
}

TEST_CASE("two-group algebra on the S3 crossed module") {
  auto s3 = FiniteGroup::symmetric3();
  auto z3 = FiniteGroup::cyclic(3);
  CrossedModule cm;
  cm.G = s3;
  cm.H = z3;
  cm.t = {0, 1, 2};
  cm.phi.assign(6, std::vector<int>(3));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 3; ++h) cm.phi[g][h] = s3.op(s3.op(s3.inv[g], h), g);
  auto a = build_two_group_algebra(cm);
  CHECK(a.dim == 18);
  CHECK(verify_two_group_algebra(a, Tolerance()).worst() < 1e-12);
}

TEST_CASE("invalid crossed module is rejected") {
  auto s3 = FiniteGroup::symmetric3();
  CrossedModule cm;
  cm.G = s3;
  cm.H = s3;
  cm.t = {0, 1, 2, 3, 4, 5};
  cm.phi.assign(6, std::vector<int>(6));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) cm.phi[g][h] = h;
  CHECK_THROWS_AS(build_two_group_algebra(cm), InvalidCrossedModule);
}
