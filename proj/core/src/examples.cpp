#include <cmath>
#include <numbers>

#include "tenscat/fusion_cat.hpp"

namespace tenscat {

namespace {

constexpr double pi = std::numbers::pi;

FusionCategoryData pointed_skeleton(const FiniteGroup& g, std::vector<std::string> names) {
  FusionCategoryData c;
  const int n = g.order();
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("pointed_skeleton: need one name per element");
  c.labels = std::move(names);
  c.unit = 0;
  c.dual.resize(n);
  for (int a = 0; a < n; ++a) c.dual[a] = g.inv[a];
  c.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.Nref(a, b, g.op(a, b)) = 1;
  c.pivotal.assign(n, Scalar(1));
  return c;
}

GradedAction trivial_action(const FiniteGroup& g, const FusionCategoryData& c,
                            std::vector<int> grading) {
  GradedAction a;
  a.G = g;
  a.grading = std::move(grading);
  a.perm.assign(g.order(), {});
  for (int e = 0; e < g.order(); ++e) {
    a.perm[e].resize(c.n());
    for (int x = 0; x < c.n(); ++x) a.perm[e][x] = x;
  }
  a.cell2.assign(g.order(), {});
  return a;
}

FusionCategoryData make_vec_trivial(int order) {
  std::vector<std::string> names;
  for (int a = 0; a < order; ++a) names.push_back(a ? "x" + std::to_string(a) : "1");
  auto c = pointed_skeleton(FiniteGroup::cyclic(order), std::move(names));
  c.finalize();
  return c;
}

FusionCategoryData make_vecZ2_cocycle() {
  auto c = make_vec_trivial(2);
  Mat f(1, 1);
  f(0, 0) = -1;
  c.F[c.fkey(1, 1, 1, 1)] = f;
  c.pivotal[1] = -1;
  c.finalize();
  return c;
}

FusionCategoryData make_semion() {
  auto c = make_vecZ2_cocycle();
  c.labels[1] = "s";
  Mat r(1, 1);
  r(0, 0) = Scalar(0, 1);
  c.R[c.rkey(1, 1, 0)] = r;
  c.theta = {Scalar(1), Scalar(0, 1)};
  c.finalize();
  return c;
}

FusionCategoryData make_toric() {
  auto c = pointed_skeleton(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                            {"1", "e", "m", "f"});
  // Encoding a = 2*a1 + a2 with e = (1,0) -> index 2? product(Z2,Z2) uses
  // x = g*2 + h, so index 1 = (0,1), 2 = (1,0).  Take e := index 2, m := 1.
  c.labels = {"1", "m", "e", "f"};
  auto bits = [](int x) { return std::pair<int, int>{x / 2, x % 2}; };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto [a1, a2] = bits(a);
      const auto [b1, b2] = bits(b);
      (void)a1;
      (void)b2;
      Mat r(1, 1);
      r(0, 0) = (a2 * b1) % 2 ? Scalar(-1) : Scalar(1);
      for (int cc = 0; cc < 4; ++cc)
        if (c.N(a, b, cc)) c.R[c.rkey(a, b, cc)] = r;
    }
  c.theta = {Scalar(1), Scalar(1), Scalar(1), Scalar(-1)};
  c.finalize();
  return c;
}

FusionCategoryData make_fibonacci() {
  FusionCategoryData c;
  c.labels = {"1", "tau"};
  c.unit = 0;
  c.dual = {0, 1};
  c.fusion.assign(8, 0);
  c.Nref(0, 0, 0) = c.Nref(0, 1, 1) = c.Nref(1, 0, 1) = 1;
  c.Nref(1, 1, 0) = c.Nref(1, 1, 1) = 1;
  c.pivotal = {Scalar(1), Scalar(1)};
  const double phi = (1 + std::sqrt(5.0)) / 2;
  Mat f(2, 2);
  f << Scalar(1 / phi), Scalar(1 / std::sqrt(phi)), Scalar(1 / std::sqrt(phi)), Scalar(-1 / phi);
  c.F[c.fkey(1, 1, 1, 1)] = f;
  Mat r1(1, 1), rt(1, 1);
  r1(0, 0) = std::polar(1.0, -4 * pi / 5);
  rt(0, 0) = std::polar(1.0, 3 * pi / 5);
  c.R[c.rkey(1, 1, 0)] = r1;
  c.R[c.rkey(1, 1, 1)] = rt;
  c.theta = {Scalar(1), std::polar(1.0, 4 * pi / 5)};
  c.finalize();
  return c;
}

FusionCategoryData make_ising_crossed() {
  FusionCategoryData c;
  c.labels = {"1", "psi", "sigma"};
  c.unit = 0;
  c.dual = {0, 1, 2};
  c.fusion.assign(27, 0);
  const int I = 0, P = 1, S = 2;
  c.Nref(I, I, I) = c.Nref(I, P, P) = c.Nref(P, I, P) = c.Nref(I, S, S) = c.Nref(S, I, S) = 1;
  c.Nref(P, P, I) = 1;
  c.Nref(P, S, S) = c.Nref(S, P, S) = 1;
  c.Nref(S, S, I) = c.Nref(S, S, P) = 1;
  c.pivotal = {Scalar(1), Scalar(1), Scalar(1)};

  const double s2 = std::sqrt(2.0);
  Mat fsss(2, 2);
  fsss << Scalar(1 / s2), Scalar(1 / s2), Scalar(1 / s2), Scalar(-1 / s2);
  c.F[c.fkey(S, S, S, S)] = fsss;
  Mat m1(1, 1);
  m1(0, 0) = -1;
  c.F[c.fkey(P, S, P, S)] = m1;
  c.F[c.fkey(S, P, S, P)] = m1;

  Mat rpp(1, 1), rss1(1, 1), rssp(1, 1), rps(1, 1);
  rpp(0, 0) = -1;
  rss1(0, 0) = std::polar(1.0, -pi / 8);
  rssp(0, 0) = std::polar(1.0, 3 * pi / 8);
  rps(0, 0) = Scalar(0, -1);
  c.R[c.rkey(P, P, I)] = rpp;
  c.R[c.rkey(S, S, I)] = rss1;
  c.R[c.rkey(S, S, P)] = rssp;
  c.R[c.rkey(P, S, S)] = rps;
  c.R[c.rkey(S, P, S)] = rps;
  c.theta = {Scalar(1), Scalar(-1), std::polar(1.0, pi / 8)};

  c.action = trivial_action(FiniteGroup::cyclic(2), c, {0, 0, 1});
  c.finalize();
  return c;
}

}  // namespace

FusionCategoryData vec_group(const FiniteGroup& g, bool crossed) {
  std::vector<std::string> names;
  for (int a = 0; a < g.order(); ++a) names.push_back(a ? "x" + std::to_string(a) : "1");
  auto c = pointed_skeleton(g, std::move(names));
  if (crossed) {
    std::vector<int> grading(g.order());
    for (int a = 0; a < g.order(); ++a) grading[a] = a;
    c.action = trivial_action(g, c, std::move(grading));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        Mat r = Mat::Identity(1, 1);
        c.R[c.rkey(a, b, g.op(a, b))] = r;
      }
    c.theta.assign(g.order(), Scalar(1));
  }
  c.finalize();
  return c;
}

FusionCategoryData rep_category_abelian(const FiniteGroup& g) {
  if (!g.is_commutative())
    throw NotCommutative("rep_category_abelian: nonabelian Rep(G) must be supplied as data");
  const CharacterGroup ghat = pontryagin_dual(g);
  const FiniteGroup dualgrp = ghat.as_group();
  std::vector<std::string> names;
  for (int j = 0; j < dualgrp.order(); ++j) names.push_back("chi" + std::to_string(j));
  auto c = pointed_skeleton(dualgrp, std::move(names));
  for (int a = 0; a < c.n(); ++a)
    for (int b = 0; b < c.n(); ++b) c.R[c.rkey(a, b, dualgrp.op(a, b))] = Mat::Identity(1, 1);
  c.theta.assign(c.n(), Scalar(1));
  c.finalize();
  return c;
}

FusionCategoryData example_library(const std::string& name) {
  if (name == "vec") return make_vec_trivial(1);
  if (name == "vecZ2") return make_vec_trivial(2);
  if (name == "vecZ3") return make_vec_trivial(3);
  if (name == "vecZ2_cocycle") return make_vecZ2_cocycle();
  if (name == "vecZ2_crossed") return vec_group(FiniteGroup::cyclic(2), true);
  if (name == "vecZ3_crossed") return vec_group(FiniteGroup::cyclic(3), true);
  if (name == "fibonacci") return make_fibonacci();
  if (name == "ising_crossed") return make_ising_crossed();
  if (name == "toric") return make_toric();
  if (name == "semion") return make_semion();
  if (name == "repZ2") return rep_category_abelian(FiniteGroup::cyclic(2));
  if (name == "repZ3") return rep_category_abelian(FiniteGroup::cyclic(3));
  throw UnknownExample("example_library: unknown example '" + name + "'");
}

std::vector<std::string> example_names() {
  return {"vec",          "vecZ2",         "vecZ3",        "vecZ2_cocycle",
          "vecZ2_crossed", "vecZ3_crossed", "fibonacci",    "ising_crossed",
          "toric",        "semion",        "repZ2",        "repZ3"};
}

}  // namespace tenscat
