#include <doctest.h>

#include "tenscat/fusion_cat.hpp"
#include "tenscat/hom_engine.hpp"

using namespace tenscat;

TEST_CASE("tree enumeration counts match fusion") {
  auto fib = example_library("fibonacci");
  Engine E(fib);
  Obj t = E.simple(1);
  // tau^3 = 1 + 2 tau in Fibonacci: trees of [t,t,t] at root 0 and 1.
  CHECK(E.tree_count({t, t, t}, 0) == 1);
  CHECK(E.tree_count({t, t, t}, 1) == 2);
  Obj big(2);
  big.mult = {1, 2};  // 1 + 2 tau
  CHECK(E.tensor_obj(t, t).mult == std::vector<int>({1, 1}));
  CHECK(E.tree_count({big}, 1) == 2);
}

TEST_CASE("embed composes coherently (interchange)") {
  Tolerance tol;
  for (const std::string name : {"fibonacci", "ising_crossed", "toric"}) {
    CAPTURE(name);
    auto cat = example_library(name);
    Engine E(cat);
    for (int a = 0; a < cat.n(); ++a) {
      Obj x = E.simple(a);
      // (f (x) id)(id (x) g) = (id (x) g)(f (x) id) for f,g acting on disjoint slots
      Obj y = E.simple((a + 1) % cat.n());
      auto basis_f = E.hom_basis({x, x}, {x, x});
      if (basis_f.empty()) continue;
      const Mor f = basis_f[basis_f.size() / 2];
      auto basis_g = E.hom_basis({y}, {y});
      if (basis_g.empty()) continue;
      const Mor g = basis_g[0];
      Mor lhs = E.compose(E.embed(f, {}, {y}), E.embed(g, {x, x}, {}));
      Mor rhs = E.compose(E.embed(g, {x, x}, {}), E.embed(f, {}, {y}));
      CHECK(diff_norm(lhs, rhs) < tol.eps);
    }
  }
}

TEST_CASE("embedding identities is the identity") {
  Tolerance tol;
  auto cat = example_library("ising_crossed");
  Engine E(cat);
  Obj s = E.simple(2), p = E.simple(1);
  Mor id_s = E.identity({s});
  Mor emb = E.embed(id_s, {p, s}, {s});
  CHECK(diff_norm(emb, E.identity({p, s, s, s})) < tol.eps);
}

TEST_CASE("zigzags and loops") {
  Tolerance tol;
  for (const std::string name : {"fibonacci", "ising_crossed", "semion", "toric"}) {
    CAPTURE(name);
    auto cat = example_library(name);
    Engine E(cat);
    for (int a = 0; a < cat.n(); ++a) {
      Obj x = E.simple(a);
      Obj xs = E.dual_obj(x);
      // Both zigzags for both cup/cap pairs.
      Mor z1 = E.compose(E.embed(E.ev(x), {x}, {}), E.embed(E.coev(x), {}, {x}));
      CHECK(diff_norm(z1, E.identity({x})) < tol.eps);
      Mor z2 = E.compose(E.embed(E.ev(x), {}, {xs}), E.embed(E.coev(x), {xs}, {}));
      CHECK(diff_norm(z2, E.identity({xs})) < tol.eps);
      Mor z3 = E.compose(E.embed(E.ev2(x), {}, {x}), E.embed(E.coev2(x), {x}, {}));
      CHECK(diff_norm(z3, E.identity({x})) < tol.eps);
      Mor z4 = E.compose(E.embed(E.ev2(x), {xs}, {}), E.embed(E.coev2(x), {}, {xs}));
      CHECK(diff_norm(z4, E.identity({xs})) < tol.eps);
      // Loops produce the quantum dimension on both sides.
      CHECK(approx_eq(E.scalar(E.compose(E.ev2(x), E.coev(x))), cat.dims[a], tol));
      CHECK(approx_eq(E.scalar(E.compose(E.ev(x), E.coev2(x))), cat.dims[a], tol));
      // qtrace of the identity = quantum dimension.
      CHECK(approx_eq(E.qtrace(E.identity({x})), cat.dims[a], tol));
    }
  }
}

TEST_CASE("qtrace over composite lists multiplies dimensions") {
  Tolerance tol;
  auto cat = example_library("fibonacci");
  Engine E(cat);
  Obj t = E.simple(1);
  const Scalar d = cat.dims[1];
  CHECK(approx_eq(E.qtrace(E.identity({t, t})), d * d, Tolerance(1e-8)));
  CHECK(approx_eq(E.qtrace(E.identity({t, t, t})), d * d * d, Tolerance(1e-7)));
}

TEST_CASE("transpose_endo preserves trace") {
  Tolerance tol;
  auto cat = example_library("ising_crossed");
  Engine E(cat);
  Obj x(3);
  x.mult = {2, 1, 1};
  auto basis = E.hom_basis({x}, {x});
  Mor f = basis[0] + basis[1] * Scalar(0.5, 0.25);
  Mor ft = E.transpose_endo(f);
  CHECK(approx_eq(E.qtrace(f), E.qtrace(ft), tol));
}

TEST_CASE("flatten round trips") {
  Tolerance tol;
  auto cat = example_library("ising_crossed");
  Engine E(cat);
  Obj s = E.simple(2);
  auto fl = E.flatten({s, s, s});
  Mor round = E.compose(fl.from, fl.to);
  CHECK(diff_norm(round, E.identity({s, s, s})) < tol.eps);
  Mor round2 = E.compose(fl.to, fl.from);
  CHECK(diff_norm(round2, E.identity({fl.total})) < tol.eps);
  // sigma^3 = 2 sigma
  CHECK(fl.total.mult == std::vector<int>({0, 0, 2}));
}

TEST_CASE("cross naturality against embeds") {
  Tolerance tol;
  auto cat = example_library("toric");
  Engine E(cat);
  Obj x(4), y(4);
  x.mult = {1, 1, 0, 0};
  y.mult = {0, 0, 1, 1};
  // Naturality of c in each slot: (g (x) f') c = c (f' (x) g) for projections.
  auto ds = E.direct_sum({E.simple(0), E.simple(1)});
  Mor c_total = E.cross(x, y);
  for (int part = 0; part < 2; ++part) {
    Mor lhs = E.compose(c_total, E.embed(ds.inj[part], {}, {y}));
    Mor rhs = E.compose(E.embed(ds.inj[part], {y}, {}), E.cross(E.simple(part), y));
    CHECK(diff_norm(lhs, rhs) < tol.eps);
  }
}

TEST_CASE("double braiding eigenvalues follow twists") {
  Tolerance tol;
  auto cat = example_library("fibonacci");
  Engine E(cat);
  Obj t = E.simple(1);
  Mor dbl = E.compose(E.cross(t, t), E.cross(t, t));
  for (int c = 0; c < 2; ++c) {
    const Scalar want = cat.theta[c] / (cat.theta[1] * cat.theta[1]);
    CHECK((dbl.block[c] - want * Mat::Identity(dbl.block[c].rows(), dbl.block[c].cols()))
              .cwiseAbs()
              .maxCoeff() < tol.eps);
  }
}

TEST_CASE("act_mor is functorial on ising") {
  Tolerance tol;
  auto cat = example_library("ising_crossed");
  Engine E(cat);
  Obj s = E.simple(2);
  auto basis = E.hom_basis({s, s}, {s, s});
  REQUIRE(basis.size() == 2);  // sigma x sigma = 1 + psi
  Mor f = basis[0] + basis[1] * Scalar(2, 1);
  Mor g = basis[0] * Scalar(0.5) + basis[1] * Scalar(0, -1);
  Mor lhs = E.act_mor(1, E.compose(f, g));
  Mor rhs = E.compose(E.act_mor(1, f), E.act_mor(1, g));
  CHECK(diff_norm(lhs, rhs) < tol.eps);
}
