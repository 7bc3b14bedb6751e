#include "tenscat/frobenius.hpp"

#include <algorithm>
#include <chrono>
#include <complex>

namespace tenscat {

namespace {

Mor delta_eta(Engine& E, const AlgebraObject& A) { return E.compose(A.Delta, A.eta); }

// Vectorize a morphism for linear solving.
Vec vectorize(const Mor& f) {
  std::size_t total = 0;
  for (const auto& b : f.block) total += static_cast<std::size_t>(b.size());
  Vec v(static_cast<Eigen::Index>(total));
  Eigen::Index at = 0;
  for (const auto& b : f.block)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = 0; i < b.rows(); ++i) v(at++) = b(i, j);
  return v;
}

// Solve for coefficient vectors x with sum_i x_i L(h_i) = 0 where L is a
// linear operator on morphisms, given the images L(h_i).
std::vector<Vec> kernel_coefficients(const std::vector<Mor>& images, Tolerance tol) {
  if (images.empty()) return {};
  const Vec first = vectorize(images[0]);
  Mat m(first.size(), static_cast<Eigen::Index>(images.size()));
  m.col(0) = first;
  for (std::size_t i = 1; i < images.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectorize(images[i]);
  return nullspace_basis(m, tol);
}

Mor combine(Engine& E, const std::vector<Mor>& basis, const Vec& coeff) {
  Mor out = E.zero(basis[0].dom, basis[0].cod);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out = out + basis[i] * coeff(static_cast<Eigen::Index>(i));
  return out;
}

// Roots of a monic polynomial by Durand-Kerner; coefficients low-to-high.
std::vector<Scalar> poly_roots(std::vector<Scalar> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-13) coeffs.pop_back();
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg <= 0) return {};
  for (auto& c : coeffs) c /= coeffs.back();
  std::vector<Scalar> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = std::pow(Scalar(0.4, 0.9), i + 1);
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (int i = 0; i < deg; ++i) {
      Scalar p(0);
      for (int k = deg; k >= 0; --k) p = p * roots[i] + coeffs[k];
      Scalar q(1);
      for (int j = 0; j < deg; ++j)
        if (j != i) q *= roots[i] - roots[j];
      const Scalar step = p / q;
      roots[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

}  // namespace

Report verify_algebra(Engine& E, const AlgebraObject& A, const AlgebraFlags& flags,
                      Tolerance tol) {
  Report rep;
  rep.suite = "algebra";
  rep.tolerance = tol.eps;
  const Obj& a = A.obj;
  const ObjList one{a}, two{a, a}, three{a, a, a};

  Mor assoc_l = E.compose(A.mu, E.embed(A.mu, {}, {a}));
  Mor assoc_r = E.compose(A.mu, E.embed(A.mu, {a}, {}));
  rep.add("associativity", diff_norm(assoc_l, assoc_r));

  rep.add("unit_left", diff_norm(E.compose(A.mu, E.embed(A.eta, {}, {a})), E.identity(one)));
  rep.add("unit_right", diff_norm(E.compose(A.mu, E.embed(A.eta, {a}, {})), E.identity(one)));

  Mor coassoc_l = E.compose(E.embed(A.Delta, {}, {a}), A.Delta);
  Mor coassoc_r = E.compose(E.embed(A.Delta, {a}, {}), A.Delta);
  rep.add("coassociativity", diff_norm(coassoc_l, coassoc_r));

  rep.add("counit_left", diff_norm(E.compose(E.embed(A.eps, {}, {a}), A.Delta), E.identity(one)));
  rep.add("counit_right", diff_norm(E.compose(E.embed(A.eps, {a}, {}), A.Delta), E.identity(one)));

  Mor frob_mid = E.compose(A.Delta, A.mu);
  Mor frob_l = E.compose(E.embed(A.mu, {a}, {}), E.embed(A.Delta, {}, {a}));
  Mor frob_r = E.compose(E.embed(A.mu, {}, {a}), E.embed(A.Delta, {a}, {}));
  rep.add("frobenius_left", diff_norm(frob_l, frob_mid));
  rep.add("frobenius_right", diff_norm(frob_r, frob_mid));

  if (flags.delta_separable)
    rep.add("delta_separable", diff_norm(E.compose(A.mu, A.Delta), E.identity(one)));

  if (flags.separable_psi) {
    if (!A.psi) {
      rep.add_bool("psi_present", false);
    } else {
      // (id (x) [mu o (psi^2 (x) id)]) o Delta is a section of mu.
      Mor psi2 = E.compose(A.mu, E.tensor(*A.psi, *A.psi));
      Mor mul_psi2 = E.compose(A.mu, E.embed(psi2, {}, {a}));
      Mor section = E.compose(E.embed(mul_psi2, {a}, {}), A.Delta);
      rep.add("psi_section", diff_norm(E.compose(A.mu, section), E.identity(one)));
    }
  }

  if (flags.commutative) {
    if (!E.category().braided()) {
      rep.add_bool("braiding_present", false);
    } else {
      rep.add("commutative", diff_norm(E.compose(A.mu, E.cross(a, a)), A.mu));
    }
  }

  if (flags.symmetric) {
    // The two pairings A -> A* induced by eps o mu agree.
    Mor pair = E.compose(A.eps, A.mu);
    Obj as = E.dual_obj(a);
    Mor phi_l = E.compose(E.embed(pair, {}, {as}), E.embed(E.coev(a), {a}, {}));
    Mor phi_r = E.compose(E.embed(pair, {as}, {}), E.embed(E.coev2(a), {}, {a}));
    rep.add("symmetric", diff_norm(phi_l, phi_r));
  }

  return rep;
}

AlgebraObject regular_pointed_algebra(Engine& E, const std::vector<int>& support) {
  const auto& C = E.category();
  AlgebraObject A;
  A.obj = Obj(C.n());
  for (int s : support) A.obj.mult[s] = 1;
  if (!A.obj.mult[C.unit])
    throw FlagsMissing("regular_pointed_algebra: support must contain the unit");
  const double n = static_cast<double>(support.size());
  A.mu = E.zero({A.obj, A.obj}, {A.obj});
  A.Delta = E.zero({A.obj}, {A.obj, A.obj});
  A.eta = E.zero({}, {A.obj});
  A.eps = E.zero({A.obj}, {});
  for (int c = 0; c < C.n(); ++c) {
    const auto& pairs = E.trees({A.obj, A.obj}, c);
    if (!A.obj.mult[c]) {
      if (!pairs.empty())
        throw FlagsMissing("regular_pointed_algebra: support not closed under fusion");
      continue;
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      A.mu.block[c](0, static_cast<Eigen::Index>(t)) = 1;
      A.Delta.block[c](static_cast<Eigen::Index>(t), 0) = Scalar(1.0 / n);
    }
  }
  A.eta.block[C.unit](0, 0) = 1;
  A.eps.block[C.unit](0, 0) = Scalar(n);
  A.psi = A.eta;
  return A;
}

double left_module_residual(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& act) {
  const Obj& a = A.obj;
  double r = diff_norm(E.compose(act, E.embed(A.mu, {}, {X})),
                       E.compose(act, E.embed(act, {a}, {})));
  r = std::max(r, diff_norm(E.compose(act, E.embed(A.eta, {}, {X})), E.identity({X})));
  return r;
}

double right_module_residual(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& act) {
  const Obj& a = A.obj;
  double r = diff_norm(E.compose(act, E.embed(A.mu, {X}, {})),
                       E.compose(act, E.embed(act, {}, {a})));
  r = std::max(r, diff_norm(E.compose(act, E.embed(A.eta, {X}, {})), E.identity({X})));
  return r;
}

Mor induced_comodule_left(Engine& E, const AlgebraObject& A, const Mor& act) {
  const Obj X = act.cod[0];
  return E.compose(E.embed(act, {A.obj}, {}), E.embed(delta_eta(E, A), {}, {X}));
}

Mor induced_comodule_right(Engine& E, const AlgebraObject& A, const Mor& act) {
  const Obj X = act.cod[0];
  return E.compose(E.embed(act, {}, {A.obj}), E.embed(delta_eta(E, A), {X}, {}));
}

Mor balancing_idempotent(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& rho,
                         const Obj& Y, const Mor& lam) {
  Mor ins = E.embed(delta_eta(E, A), {X}, {Y});            // [X,Y] -> [X,A,A,Y]
  Mor act_r = E.embed(rho, {}, {A.obj, Y});                // -> [X,A,Y]
  Mor act_l = E.embed(lam, {X}, {});                       // -> [X,Y]
  return E.compose(act_l, E.compose(act_r, ins));
}

RelTensorResult relative_tensor(Engine& E, const Obj& X, const Mor& rho, const AlgebraObject& A,
                                const Obj& Y, const Mor& lam, Tolerance tol) {
  if (diff_norm(E.compose(A.mu, A.Delta), E.identity({A.obj})) > tol.eps)
    throw NotDeltaSeparable("relative_tensor: algebra is not Delta-separable");
  RelTensorResult out;
  out.e = balancing_idempotent(E, A, X, rho, Y, lam);
  out.obj = Obj(E.category().n());
  std::vector<SplitResult> splits(E.category().n());
  for (int c = 0; c < E.category().n(); ++c) {
    if (!out.e.block[c].size()) continue;
    splits[c] = split_idempotent(out.e.block[c], tol);
    out.obj.mult[c] = static_cast<int>(splits[c].r.rows());
  }
  out.r = E.zero({X, Y}, {out.obj});
  out.s = E.zero({out.obj}, {X, Y});
  for (int c = 0; c < E.category().n(); ++c) {
    if (!out.e.block[c].size()) continue;
    out.r.block[c] = splits[c].r;
    out.s.block[c] = splits[c].s;
  }
  return out;
}

std::vector<Mor> balanced_hom(Engine& E, const Obj& X, const Mor& rho, const AlgebraObject& A,
                              const Obj& Y, const Mor& lam, const Obj& K, Tolerance tol) {
  // f balanced iff f o (rho (x) id - id (x) lam) = 0 on [X, A, Y].
  Mor d = E.embed(rho, {}, {Y}) - E.embed(lam, {X}, {});
  std::vector<Mor> basis;
  const auto& C = E.category();
  for (int c = 0; c < C.n(); ++c) {
    const int krows = E.tree_count({K}, c);
    if (!krows || !d.block[c].rows()) continue;
    // Rows of f.block[c] lie in the left null space of d.block[c].
    auto null = nullspace_basis(d.block[c].transpose(), tol);
    for (int r = 0; r < krows; ++r)
      for (const auto& v : null) {
        Mor f = E.zero({X, Y}, {K});
        f.block[c].row(r) = v.transpose();
        basis.push_back(std::move(f));
      }
  }
  return basis;
}

std::vector<Mor> module_hom_basis(Engine& E, const AlgebraObject& B, const ModuleData& m,
                                  const ModuleData& n, Tolerance tol) {
  auto basis = E.hom_basis({m.obj}, {n.obj});
  if (basis.empty()) return {};
  std::vector<Mor> images;
  for (const auto& h : basis)
    images.push_back(E.compose(h, m.act) - E.compose(n.act, E.embed(h, {B.obj}, {})));
  auto kern = kernel_coefficients(images, tol);
  std::vector<Mor> out;
  for (const auto& v : kern) out.push_back(combine(E, basis, v));
  return out;
}

namespace {

// Restrict a module action to an invariant subobject given by per-label
// injection columns; r is any left inverse of s.
ModuleData restrict_action(Engine& E, const AlgebraObject& B, const ModuleData& m, const Mor& s,
                           const Mor& r) {
  ModuleData out;
  out.obj = s.dom[0];
  out.act = E.compose(r, E.compose(m.act, E.embed(s, {B.obj}, {})));
  return out;
}

void decompose_module(Engine& E, const AlgebraObject& B, const ModuleData& m, Tolerance tol,
                      std::vector<ModuleData>& out) {
  if (m.obj.is_zero()) return;
  auto endos = module_hom_basis(E, B, m, m, tol);
  if (endos.size() <= 1) {
    out.push_back(m);
    return;
  }
  // Pick an endomorphism that is not a scalar.
  const Mor id = E.identity({m.obj});
  Mor f = E.zero({m.obj}, {m.obj});
  bool found = false;
  for (const auto& h : endos) {
    // Project out the scalar part using the normalized trace.
    Scalar tr(0);
    double dim = 0;
    for (int c = 0; c < E.category().n(); ++c) {
      if (!h.block[c].size()) continue;
      tr += h.block[c].trace();
      dim += static_cast<double>(h.block[c].rows());
    }
    Mor g = h - id * (tr / dim);
    if (g.max_norm() > tol.eps * 100) {
      f = g;
      found = true;
      break;
    }
  }
  if (!found) {
    out.push_back(m);  // all endomorphisms scalar: simple
    return;
  }

  // Minimal polynomial of f via Krylov iteration on vectorized powers.
  std::vector<Mor> powers{id};
  std::vector<Vec> vecs{vectorize(id)};
  std::vector<Scalar> minpoly;
  for (int k = 1;; ++k) {
    powers.push_back(E.compose(f, powers.back()));
    vecs.push_back(vectorize(powers.back()));
    Mat mm(vecs[0].size(), static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i) mm.col(static_cast<Eigen::Index>(i)) = vecs[i];
    auto null = nullspace_basis(mm, tol);
    if (!null.empty()) {
      const Vec& v = null.front();
      minpoly.assign(v.data(), v.data() + v.size());
      break;
    }
    if (k > 64) throw std::runtime_error("decompose_module: runaway minimal polynomial");
  }
  auto roots = poly_roots(minpoly);
  if (roots.empty()) {
    out.push_back(m);
    return;
  }
  // ker(f - lambda) is a proper submodule for any eigenvalue lambda.
  const Scalar lambda = roots.front();
  Obj w(E.category().n());
  Mor s = E.zero({w}, {m.obj});  // placeholder shapes fixed below
  std::vector<std::vector<Vec>> kernels(E.category().n());
  for (int c = 0; c < E.category().n(); ++c) {
    if (!m.obj.mult[c]) continue;
    Mat fc = f.block[c] - lambda * Mat::Identity(f.block[c].rows(), f.block[c].cols());
    kernels[c] = nullspace_basis(fc, Tolerance(std::max(tol.eps, 1e-10)));
    w.mult[c] = static_cast<int>(kernels[c].size());
  }
  s = E.zero({w}, {m.obj});
  Mor rr = E.zero({m.obj}, {w});
  for (int c = 0; c < E.category().n(); ++c) {
    for (std::size_t j = 0; j < kernels[c].size(); ++j) {
      s.block[c].col(static_cast<Eigen::Index>(j)) = kernels[c][j];
      rr.block[c].row(static_cast<Eigen::Index>(j)) = kernels[c][j].adjoint();
    }
  }
  ModuleData sub = restrict_action(E, B, m, s, rr);

  // Peel off a simple submodule of the kernel, then split the complement.
  std::vector<ModuleData> inner;
  decompose_module(E, B, sub, tol, inner);
  // inner holds simples of the kernel; take the first and find a complement
  // of its image inside m.
  const ModuleData simple = inner.front();
  // Inclusion simple -> m: compose the kernel inclusion with the inclusion of
  // the simple inside the kernel; obtain both as module morphisms by solving.
  auto incls = module_hom_basis(E, B, simple, m, tol);
  auto projs = module_hom_basis(E, B, m, simple, tol);
  Mor iota = incls.front();
  // Find a projection with pi o iota = 1 (nondegenerate pairing on the
  // isotypic part guarantees one).
  bool got = false;
  Mor pi = E.zero({m.obj}, {simple.obj});
  for (const auto& p : projs) {
    Mor comp = E.compose(p, iota);
    Scalar sc(0);
    for (int c = 0; c < E.category().n(); ++c)
      if (comp.block[c].size()) {
        sc = comp.block[c](0, 0);
        break;
      }
    if (std::abs(sc) > 1e-8) {
      pi = p * (Scalar(1) / sc);
      got = true;
      break;
    }
  }
  if (!got) throw std::runtime_error("decompose_module: failed to split a simple summand");
  out.push_back(simple);

  // Complement = image of id - iota pi.
  Mor q = E.identity({m.obj}) - E.compose(iota, pi);
  Obj wc(E.category().n());
  std::vector<SplitResult> sp(E.category().n());
  for (int c = 0; c < E.category().n(); ++c) {
    if (!q.block[c].size()) continue;
    sp[c] = split_idempotent(q.block[c], Tolerance(std::max(tol.eps, 1e-9) * 10));
    wc.mult[c] = static_cast<int>(sp[c].r.rows());
  }
  Mor sc = E.zero({wc}, {m.obj}), rc = E.zero({m.obj}, {wc});
  for (int c = 0; c < E.category().n(); ++c) {
    if (!q.block[c].size()) continue;
    sc.block[c] = sp[c].s;
    rc.block[c] = sp[c].r;
  }
  ModuleData rest = restrict_action(E, B, m, sc, rc);
  decompose_module(E, B, rest, tol, out);
}

}  // namespace

std::vector<ModuleData> enumerate_modules(Engine& E, const AlgebraObject& B, Tolerance tol) {
  if (diff_norm(E.compose(B.mu, B.Delta), E.identity({B.obj})) > tol.eps)
    throw NotDeltaSeparable("enumerate_modules: algebra is not Delta-separable");
  std::vector<ModuleData> simples;
  const auto& C = E.category();
  for (int x = 0; x < C.n(); ++x) {
    // Free module B (x) x with action mu (x) id.
    auto fl = E.flatten({B.obj, E.simple(x)});
    ModuleData free;
    free.obj = fl.total;
    free.act = E.compose(fl.to, E.compose(E.embed(B.mu, {}, {E.simple(x)}),
                                          E.embed(fl.from, {B.obj}, {})));
    std::vector<ModuleData> parts;
    decompose_module(E, B, free, tol, parts);
    for (auto& p : parts) {
      bool known = false;
      for (const auto& q : simples)
        if (!module_hom_basis(E, B, p, q, tol).empty()) {
          known = true;
          break;
        }
      if (!known) simples.push_back(std::move(p));
    }
  }
  return simples;
}

std::vector<std::size_t> local_modules(Engine& E, const AlgebraObject& B,
                                       const std::vector<ModuleData>& modules, Tolerance tol) {
  if (!E.category().braided()) throw NotBraided("local_modules: ambient category not braided");
  if (E.category().braided() &&
      diff_norm(E.compose(B.mu, E.cross(B.obj, B.obj)), B.mu) > tol.eps)
    throw NotCommutative("local_modules: algebra is not commutative");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto& m = modules[i];
    Mor r1 = E.compose(m.act, E.cross(m.obj, B.obj));
    Mor r2 = E.compose(m.act, E.cross_neg(m.obj, B.obj));
    if (diff_norm(r1, r2) <= tol.eps) out.push_back(i);
  }
  return out;
}

Mat MonoidalFunctorData::cell(int a, int b, int c) const {
  auto it = cell2.find(FusionCategoryData::rkey(a, b, c, src->n()));
  if (it != cell2.end()) return it->second;
  const int rows = src->N(a, b, c);
  const int cols = dst->N(obj_map[a], obj_map[b], obj_map[c]);
  if (rows != cols) throw NotMonoidal("functor cell default needs equal multiplicities");
  return Mat::Identity(rows, cols);
}

Report verify_monoidal_functor(const MonoidalFunctorData& f, Tolerance tol) {
  Report rep;
  rep.suite = "functor";
  rep.tolerance = tol.eps;
  const auto& S = *f.src;
  const auto& D = *f.dst;
  rep.add_bool("unit_preserved", f.obj_map[S.unit] == D.unit);

  bool fusion_ok = true;
  std::string fw;
  for (int a = 0; a < S.n() && fusion_ok; ++a)
    for (int b = 0; b < S.n() && fusion_ok; ++b)
      for (int c = 0; c < S.n() && fusion_ok; ++c)
        if (S.N(a, b, c) > D.N(f.obj_map[a], f.obj_map[b], f.obj_map[c])) {
          fusion_ok = false;
          fw = S.labels[a] + "," + S.labels[b] + "->" + S.labels[c];
        }
  rep.add_bool("fusion_compatible", fusion_ok, fw);

  // F-move coherence: L * F_dst = F_src * R with cell-built L and R.
  double coh = 0;
  for (int a = 0; a < S.n(); ++a)
    for (int b = 0; b < S.n(); ++b)
      for (int c = 0; c < S.n(); ++c)
        for (int d = 0; d < S.n(); ++d) {
          const auto lb = S.left_tree_basis(a, b, c, d);
          const auto rb = S.right_tree_basis(a, b, c, d);
          if (lb.empty() || rb.empty()) continue;
          const int pa = f.obj_map[a], pb = f.obj_map[b], pc = f.obj_map[c], pd = f.obj_map[d];
          const auto plb = D.left_tree_basis(pa, pb, pc, pd);
          const auto prb = D.right_tree_basis(pa, pb, pc, pd);
          Mat L = Mat::Zero(lb.size(), plb.size());
          for (std::size_t i = 0; i < lb.size(); ++i) {
            const auto [e, mu, nu] = lb[i];
            const Mat c1 = f.cell(a, b, e), c2 = f.cell(e, c, d);
            for (std::size_t ip = 0; ip < plb.size(); ++ip) {
              const auto [ep, mup, nup] = plb[ip];
              if (ep != f.obj_map[e]) continue;
              L(i, ip) = c1(mu, mup) * c2(nu, nup);
            }
          }
          Mat Rt = Mat::Zero(rb.size(), prb.size());
          for (std::size_t j = 0; j < rb.size(); ++j) {
            const auto [g, rho, sig] = rb[j];
            const Mat c1 = f.cell(b, c, g), c2 = f.cell(a, g, d);
            for (std::size_t jp = 0; jp < prb.size(); ++jp) {
              const auto [gp, rhop, sigp] = prb[jp];
              if (gp != f.obj_map[g]) continue;
              Rt(j, jp) = c1(rho, rhop) * c2(sig, sigp);
            }
          }
          const Mat& Fs = S.Fmat(a, b, c, d);
          // Restrict the target F to the image tree labels.
          Mat Fd = Mat::Zero(plb.size(), prb.size());
          {
            const auto dlb = D.left_tree_basis(pa, pb, pc, pd);
            const auto drb = D.right_tree_basis(pa, pb, pc, pd);
            const Mat& full = D.Fmat(pa, pb, pc, pd);
            for (std::size_t i = 0; i < dlb.size(); ++i)
              for (std::size_t j = 0; j < drb.size(); ++j) Fd(i, j) = full(i, j);
          }
          coh = std::max(coh, (L * Fd - Fs * Rt).cwiseAbs().maxCoeff());
        }
  rep.add("monoidal_coherence", coh);
  return rep;
}

double braided_functor_residual(const MonoidalFunctorData& f) {
  const auto& S = *f.src;
  const auto& D = *f.dst;
  if (!S.braided() || !D.braided()) throw NotBraided("braided_functor_residual: need braidings");
  double res = 0;
  for (int a = 0; a < S.n(); ++a)
    for (int b = 0; b < S.n(); ++b)
      for (int c = 0; c < S.n(); ++c) {
        if (!S.N(a, b, c)) continue;
        Mat lhs = S.Rmat(a, b, c) * f.cell(b, a, c);
        Mat rhs = f.cell(a, b, c) * D.Rmat(f.obj_map[a], f.obj_map[b], f.obj_map[c]);
        res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  return res;
}

Obj transport_obj(const MonoidalFunctorData& f, const Obj& x) {
  Obj y(f.dst->n());
  for (int a = 0; a < f.src->n(); ++a) y.mult[f.obj_map[a]] += x.mult[a];
  return y;
}

namespace {

Mat functor_chain_transform(const MonoidalFunctorData& Fd, Engine& Esrc, Engine& Edst,
                            const ObjList& list, int root) {
  const auto& S = *Fd.src;
  ObjList plist;
  for (const auto& o : list) plist.push_back(transport_obj(Fd, o));
  const int proot = Fd.obj_map[root];
  const auto& src = Esrc.chains(S.unit, list, root);
  const auto& dst = Edst.chains(Fd.dst->unit, plist, proot);
  Mat t = Mat::Zero(static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
  for (std::size_t scol = 0; scol < src.size(); ++scol) {
    const Chain& ch = src[scol];
    const std::size_t m = ch.size() / 4;
    std::vector<std::pair<Chain, Scalar>> terms{{Chain{}, Scalar(1)}};
    int prev = S.unit;
    for (std::size_t j = 0; j < m; ++j) {
      const int a = ch[4 * j], i = ch[4 * j + 1], e = ch[4 * j + 2], mu = ch[4 * j + 3];
      // Slot index of label a within the transported object: labels mapping
      // to the same target label stack up; offset by the source labels before.
      const Obj& part = list[j];
      int offset = 0;
      for (int b = 0; b < a; ++b)
        if (Fd.obj_map[b] == Fd.obj_map[a]) offset += part.mult[b];
      const Mat cell = Fd.cell(prev, a, e);
      std::vector<std::pair<Chain, Scalar>> next;
      for (const auto& [pref, wt] : terms)
        for (int nmu = 0; nmu < Fd.dst->N(Fd.obj_map[prev], Fd.obj_map[a], Fd.obj_map[e]); ++nmu) {
          if (cell(mu, nmu) == Scalar(0)) continue;
          Chain ext = pref;
          ext.push_back(Fd.obj_map[a]);
          ext.push_back(offset + i);
          ext.push_back(Fd.obj_map[e]);
          ext.push_back(nmu);
          next.emplace_back(std::move(ext), wt * cell(mu, nmu));
        }
      terms = std::move(next);
      prev = e;
    }
    for (const auto& [dchain, wt] : terms)
      t(Edst.chain_index(Fd.dst->unit, plist, proot, dchain), static_cast<Eigen::Index>(scol)) +=
          wt;
  }
  return t;
}

}  // namespace

Mor transport_mor(const MonoidalFunctorData& Fd, Engine& Esrc, Engine& Edst, const Mor& m) {
  // Supported for label-injective functors whose image is closed under fusion
  // (the chain transforms are then square).
  Mor r;
  r.cat = Fd.dst;
  for (const auto& o : m.dom) r.dom.push_back(transport_obj(Fd, o));
  for (const auto& o : m.cod) r.cod.push_back(transport_obj(Fd, o));
  r.block.assign(Fd.dst->n(), Mat());
  std::vector<bool> set(Fd.dst->n(), false);
  for (int c = 0; c < Fd.src->n(); ++c) {
    const int pc = Fd.obj_map[c];
    if (set[pc]) throw NotMonoidal("transport_mor: object map must be injective");
    Mat td = functor_chain_transform(Fd, Esrc, Edst, m.dom, c);
    Mat tc = functor_chain_transform(Fd, Esrc, Edst, m.cod, c);
    if (td.rows() != td.cols())
      throw NotMonoidal("transport_mor: functor image is not closed under fusion");
    Mat contrib;
    if (td.size() == 0) {
      contrib = Mat::Zero(tc.rows(), td.rows());
    } else {
      Mat tdi = td.partialPivLu().inverse();
      contrib = tc * m.block[c] * tdi;
    }
    r.block[pc] = contrib;
    set[pc] = true;
  }
  for (int c = 0; c < Fd.dst->n(); ++c)
    if (!set[c] || r.block[c].size() == 0)
      r.block[c] = Mat::Zero(Edst.tree_count(r.cod, c), Edst.tree_count(r.dom, c));
  return r;
}

AlgebraObject transport_frobenius(const MonoidalFunctorData& f, Engine& Esrc, Engine& Edst,
                                  const AlgebraObject& A) {
  AlgebraObject out;
  out.obj = transport_obj(f, A.obj);
  out.mu = transport_mor(f, Esrc, Edst, A.mu);
  out.Delta = transport_mor(f, Esrc, Edst, A.Delta);
  out.eta = transport_mor(f, Esrc, Edst, A.eta) * f.cell0;
  out.eps = transport_mor(f, Esrc, Edst, A.eps) * (Scalar(1) / f.cell0);
  if (A.psi) out.psi = transport_mor(f, Esrc, Edst, *A.psi) * f.cell0;
  return out;
}

}  // namespace tenscat
