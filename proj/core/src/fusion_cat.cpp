#include "tenscat/fusion_cat.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "tenscat/hom_engine.hpp"

namespace tenscat {

Scalar GradedAction::rho2_at(int g, int h, int label) const {
  if (rho2.empty()) return Scalar(1);
  const auto& v = rho2[static_cast<std::size_t>(g) * G.order() + h];
  return v.empty() ? Scalar(1) : v[label];
}

Scalar GradedAction::rho0_at(int label) const {
  return rho0.empty() ? Scalar(1) : rho0[label];
}

int FusionCategoryData::label_index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == name) return i;
  throw std::invalid_argument("unknown label: " + name);
}

long FusionCategoryData::fkey(int a, int b, int c, int d, int n) {
  return ((static_cast<long>(a) * n + b) * n + c) * n + d;
}
long FusionCategoryData::rkey(int a, int b, int c, int n) {
  return (static_cast<long>(a) * n + b) * n + c;
}

std::vector<std::array<int, 3>> FusionCategoryData::left_tree_basis(int a, int b, int c,
                                                                    int d) const {
  std::vector<std::array<int, 3>> out;
  for (int e = 0; e < n(); ++e)
    for (int mu = 0; mu < N(a, b, e); ++mu)
      for (int nu = 0; nu < N(e, c, d); ++nu) out.push_back({e, mu, nu});
  return out;
}

std::vector<std::array<int, 3>> FusionCategoryData::right_tree_basis(int a, int b, int c,
                                                                     int d) const {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < n(); ++f)
    for (int rho = 0; rho < N(b, c, f); ++rho)
      for (int sigma = 0; sigma < N(a, f, d); ++sigma) out.push_back({f, rho, sigma});
  return out;
}

const Mat& FusionCategoryData::Fmat(int a, int b, int c, int d) const {
  auto it = F.find(fkey(a, b, c, d));
  if (it != F.end()) return it->second;
  // Missing entries default to the identity pairing of the two bases; this
  // covers strict units and pointed categories.
  auto ic = f_default_cache.find(fkey(a, b, c, d));
  if (ic != f_default_cache.end()) return ic->second;
  const auto lb = left_tree_basis(a, b, c, d);
  const auto rb = right_tree_basis(a, b, c, d);
  if (lb.size() != rb.size())
    throw ShapeMismatch("F default requested for non-square basis pair");
  Mat m = Mat::Identity(static_cast<Eigen::Index>(lb.size()), static_cast<Eigen::Index>(rb.size()));
  return f_default_cache.emplace(fkey(a, b, c, d), std::move(m)).first->second;
}

Scalar FusionCategoryData::F_entry(int a, int b, int c, int d, int e, int mu, int nu, int f,
                                   int rho, int sigma) const {
  const Mat& m = Fmat(a, b, c, d);
  if (!m.size()) return Scalar(0);
  int row = 0;
  for (int ee = 0; ee < e; ++ee) row += N(a, b, ee) * N(ee, c, d);
  row += mu * N(e, c, d) + nu;
  int col = 0;
  for (int ff = 0; ff < f; ++ff) col += N(b, c, ff) * N(a, ff, d);
  col += rho * N(a, f, d) + sigma;
  return m(row, col);
}

Mat FusionCategoryData::Rmat(int a, int b, int c) const {
  auto it = R.find(rkey(a, b, c));
  if (it != R.end()) return it->second;
  const int pa = action ? action->act(action->deg(b), a) : a;
  const int rows = N(a, b, c), cols = N(b, pa, c);
  if (rows != cols) throw ShapeMismatch("R default requested for non-square component");
  return Mat::Identity(rows, cols);
}

void FusionCategoryData::finalize(Tolerance) {
  const int nn = n();
  dims.assign(nn, Scalar(0));
  ev_c.assign(nn, Scalar(1));
  coev_c.assign(nn, Scalar(1));
  ev2_c.assign(nn, Scalar(1));
  coev2_c.assign(nn, Scalar(1));

  Engine E(*this);
  for (int a = 0; a < nn; ++a) {
    const Obj xa = E.simple(a);
    // Zigzag (id (x) ev)(coev (x) id) = z_a id fixes ev against coev = 1.
    Mor z1 = E.compose(E.embed(E.ev(xa), {xa}, {}), E.embed(E.coev(xa), {}, {xa}));
    const Scalar z = z1.block[a].size() ? z1.block[a](0, 0) : Scalar(0);
    if (z == Scalar(0)) throw ShapeMismatch("finalize: degenerate zigzag for " + labels[a]);
    ev_c[a] = Scalar(1) / z;

    // Quantum dimension from the F-loop, normalized by the pivotal coefficient.
    const Scalar floop = F_entry(a, dual[a], a, a, unit, 0, 0, unit, 0, 0);
    if (floop == Scalar(0)) throw ShapeMismatch("finalize: vanishing F-loop for " + labels[a]);
    dims[a] = pivotal[a] / floop;
  }
  for (int a = 0; a < nn; ++a) {
    const Obj xa = E.simple(a);
    Mor z2 = E.compose(E.embed(E.ev2(xa), {}, {xa}), E.embed(E.coev2(xa), {xa}, {}));
    const Scalar z = z2.block[a].size() ? z2.block[a](0, 0) : Scalar(0);
    if (z == Scalar(0)) throw ShapeMismatch("finalize: degenerate tilde zigzag");
    ev2_c[a] = dims[a];
    coev2_c[a] = Scalar(1) / (z * dims[a]);
  }
}

Scalar FusionCategoryData::global_dimension() const {
  Scalar d(0);
  for (auto x : dims) d += x * x;
  return d;
}

namespace {

std::string idx3(const FusionCategoryData& c, int a, int b, int d) {
  return c.labels[a] + "," + c.labels[b] + "," + c.labels[d];
}

double pentagon_residual(const FusionCategoryData& C, int a, int b, int c, int d, int e,
                         std::string* where) {
  double worst = 0;
  for (int x = 0; x < C.n(); ++x)
    for (int mu1 = 0; mu1 < C.N(a, b, x); ++mu1)
      for (int y = 0; y < C.n(); ++y)
        for (int mu2 = 0; mu2 < C.N(x, c, y); ++mu2)
          for (int mu3 = 0; mu3 < C.N(y, d, e); ++mu3)
            for (int z = 0; z < C.n(); ++z)
              for (int r1 = 0; r1 < C.N(c, d, z); ++r1)
                for (int w = 0; w < C.n(); ++w)
                  for (int r2 = 0; r2 < C.N(b, z, w); ++r2)
                    for (int s2 = 0; s2 < C.N(a, w, e); ++s2) {
                      Scalar lhs(0), rhs(0);
                      for (int s1 = 0; s1 < C.N(x, z, e); ++s1)
                        lhs += C.F_entry(x, c, d, e, y, mu2, mu3, z, r1, s1) *
                               C.F_entry(a, b, z, e, x, mu1, s1, w, r2, s2);
                      for (int u = 0; u < C.n(); ++u)
                        for (int t1 = 0; t1 < C.N(b, c, u); ++t1)
                          for (int t2 = 0; t2 < C.N(a, u, y); ++t2)
                            for (int t3 = 0; t3 < C.N(u, d, w); ++t3)
                              rhs += C.F_entry(a, b, c, y, x, mu1, mu2, u, t1, t2) *
                                     C.F_entry(a, u, d, e, y, t2, mu3, w, t3, s2) *
                                     C.F_entry(b, c, d, w, u, t1, t3, z, r1, r2);
                      const double r = std::abs(lhs - rhs);
                      if (r > worst) {
                        worst = r;
                        if (where)
                          *where = C.labels[a] + "," + C.labels[b] + "," + C.labels[c] + "," +
                                   C.labels[d] + "->" + C.labels[e];
                      }
                    }
  return worst;
}

}  // namespace

Report verify_fusion_data(const FusionCategoryData& C, Tolerance tol) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "fusion";
  rep.tolerance = tol.eps;
  const int n = C.n();

  // Shape and unit constraints.
  bool shapes_ok = static_cast<int>(C.dual.size()) == n &&
                   static_cast<int>(C.fusion.size()) == n * n * n &&
                   static_cast<int>(C.pivotal.size()) == n;
  rep.add_bool("shape.sizes", shapes_ok);
  if (!shapes_ok) return rep;

  bool dual_ok = true;
  for (int a = 0; a < n; ++a) dual_ok = dual_ok && C.dual[C.dual[a]] == a;
  rep.add_bool("dual.involution", dual_ok && C.dual[C.unit] == C.unit);

  bool unit_ok = true;
  std::string unit_where;
  for (int a = 0; a < n && unit_ok; ++a)
    for (int c = 0; c < n && unit_ok; ++c) {
      if (C.N(a, C.unit, c) != (a == c ? 1 : 0) || C.N(C.unit, a, c) != (a == c ? 1 : 0)) {
        unit_ok = false;
        unit_where = idx3(C, a, C.unit, c);
      }
      if (C.N(a, c, C.unit) != (c == C.dual[a] ? 1 : 0)) {
        unit_ok = false;
        unit_where = idx3(C, a, c, C.unit);
      }
    }
  rep.add_bool("fusion.unit", unit_ok, unit_where);

  // F entries with a unit leg act as the identity.
  double unitF = 0;
  for (const auto& [key, m] : C.F) {
    long k = key;
    const int d = static_cast<int>(k % n);
    k /= n;
    const int c = static_cast<int>(k % n);
    k /= n;
    const int b = static_cast<int>(k % n);
    const int a = static_cast<int>(k / n);
    if (a == C.unit || b == C.unit || c == C.unit) {
      if (m.rows() == m.cols())
        unitF = std::max(unitF, m.size() ? (m - Mat::Identity(m.rows(), m.cols()))
                                               .cwiseAbs()
                                               .maxCoeff()
                                         : 0.0);
      else
        unitF = 1.0;
    }
    (void)d;
  }
  rep.add("F.unit_triangle", unitF);

  // Pentagon over all label 5-tuples.
  double pent = 0;
  std::string pwhere;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            std::string w;
            const double r = pentagon_residual(C, a, b, c, d, e, &w);
            if (r > pent) {
              pent = r;
              pwhere = w;
            }
          }
  rep.add("F.pentagon", pent, pwhere);

  // Dimensions.
  double dimres = 0;
  std::string dwhere;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Scalar lhs = C.dims[a] * C.dims[b], rhs(0);
      for (int c = 0; c < n; ++c) rhs += Scalar(C.N(a, b, c)) * C.dims[c];
      if (std::abs(lhs - rhs) > dimres) {
        dimres = std::abs(lhs - rhs);
        dwhere = C.labels[a] + "," + C.labels[b];
      }
    }
  rep.add("dims.fusion_compatible", dimres, dwhere);
  double dualdim = 0;
  for (int a = 0; a < n; ++a) dualdim = std::max(dualdim, std::abs(C.dims[a] - C.dims[C.dual[a]]));
  rep.add("dims.dual_symmetric", dualdim);

  // Sphericality: the left loop equals the right loop (= dims by construction).
  {
    Engine E(C);
    double sph = 0, zig = 0;
    for (int a = 0; a < n; ++a) {
      const Obj xa = E.simple(a);
      const Obj xs = E.dual_obj(xa);
      const Scalar left = E.scalar(E.compose(E.ev(xa), E.coev2(xa)));
      sph = std::max(sph, std::abs(left - C.dims[a]));
      // The dual-side zigzag of the tilde pair is the nontrivial pivotal check.
      Mor z = E.compose(E.embed(E.ev2(xa), {xs}, {}), E.embed(E.coev2(xa), {}, {xs}));
      zig = std::max(zig, diff_norm(z, E.identity({xs})));
    }
    rep.add("pivotal.spherical", sph);
    rep.add("pivotal.second_zigzag", zig);
  }

  if (C.braided() && (!C.action || C.action->G.order() == 1)) {
    Engine E(C);
    double hex1 = 0, hex2 = 0;
    std::string h1w, h2w;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Obj A = E.simple(a), B = E.simple(b), Cc = E.simple(c);
          {
            auto W = E.flatten({B, Cc});
            Mor lhs = E.compose(E.embed(W.from, {}, {A}),
                                E.compose(E.cross(A, W.total), E.embed(W.to, {A}, {})));
            Mor rhs = E.compose(E.embed(E.cross(A, Cc), {B}, {}),
                                E.embed(E.cross(A, B), {}, {Cc}));
            const double r = diff_norm(lhs, rhs);
            if (r > hex1) {
              hex1 = r;
              h1w = idx3(C, a, b, c);
            }
          }
          {
            auto W = E.flatten({A, B});
            Mor lhs = E.compose(E.embed(W.from, {Cc}, {}),
                                E.compose(E.cross(W.total, Cc), E.embed(W.to, {}, {Cc})));
            Mor rhs = E.compose(E.embed(E.cross(A, Cc), {}, {B}),
                                E.embed(E.cross(B, Cc), {A}, {}));
            const double r = diff_norm(lhs, rhs);
            if (r > hex2) {
              hex2 = r;
              h2w = idx3(C, a, b, c);
            }
          }
        }
    rep.add("R.hexagon_left", hex1, h1w);
    rep.add("R.hexagon_right", hex2, h2w);

    if (C.has_theta()) {
      double rib = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Obj A = E.simple(a), B = E.simple(b);
          Mor dbl = E.compose(E.cross(B, A), E.cross(A, B));
          for (int c = 0; c < n; ++c) {
            if (!dbl.block[c].size()) continue;
            const Scalar want = C.theta[c] / (C.theta[a] * C.theta[b]);
            Mat diff = dbl.block[c] - want * Mat::Identity(dbl.block[c].rows(), dbl.block[c].cols());
            rib = std::max(rib, diff.cwiseAbs().maxCoeff());
          }
        }
      rep.add("theta.ribbon_monodromy", rib);
      rep.add("theta.unit", std::abs(C.theta[C.unit] - Scalar(1)));
      double th_dual = 0;
      for (int a = 0; a < n; ++a)
        th_dual = std::max(th_dual, std::abs(C.theta[a] - C.theta[C.dual[a]]));
      rep.add("theta.dual_symmetric", th_dual);
    }
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::map<long, Mat> opposite_crossed_braiding(const FusionCategoryData& C) {
  if (!C.braided()) throw MissingBraiding("opposite_crossed_braiding: no braiding");
  std::map<long, Mat> out;
  const int n = C.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int h = C.action ? C.action->deg(b) : 0;
      const int hinv = C.action ? C.action->G.inv[h] : 0;
      const int apr = C.action ? C.action->act(hinv, a) : a;
      Scalar s(1);
      if (C.action) s = C.action->rho0_at(a) / C.action->rho2_at(h, hinv, a);
      for (int c = 0; c < n; ++c) {
        if (!C.N(b, a, c)) continue;
        Mat rinv = C.Rmat(apr, b, c).partialPivLu().inverse();
        out[C.rkey(b, a, c)] = s * rinv;  // component on Y (x) X -> rho^{-1}(X) (x) Y trees
      }
    }
  return out;
}

Report verify_gcrossed(const FusionCategoryData& C, Tolerance tol) {
  Report rep;
  rep.suite = "gcrossed";
  rep.tolerance = tol.eps;
  if (!C.action) {
    rep.add_bool("action.present", false);
    return rep;
  }
  const auto& A = *C.action;
  const int n = C.n();
  const int ng = A.G.order();

  // (a) grading and action compatibility.
  bool grade_ok = A.deg(C.unit) == 0;
  std::string gw;
  for (int a = 0; a < n && grade_ok; ++a) {
    if (A.deg(C.dual[a]) != A.G.inv[A.deg(a)]) {
      grade_ok = false;
      gw = C.labels[a];
    }
    for (int b = 0; b < n && grade_ok; ++b)
      for (int c = 0; c < n && grade_ok; ++c)
        if (C.N(a, b, c) && A.deg(c) != A.G.op(A.deg(a), A.deg(b))) {
          grade_ok = false;
          gw = idx3(C, a, b, c);
        }
  }
  rep.add_bool("grading.multiplicative", grade_ok, gw);

  bool perm_ok = true;
  std::string pw;
  for (int g = 0; g < ng && perm_ok; ++g) {
    if (A.act(g, C.unit) != C.unit) perm_ok = false;
    for (int a = 0; a < n && perm_ok; ++a) {
      const int want = A.G.op(A.G.op(A.G.inv[g], A.deg(a)), g);
      if (A.deg(A.act(g, a)) != want) {
        perm_ok = false;
        pw = "g=" + std::to_string(g) + "," + C.labels[a];
      }
    }
  }
  rep.add_bool("action.grading_conjugation", perm_ok, pw);
  if (A.perm.empty() || static_cast<int>(A.perm.size()) != ng) {
    rep.add_bool("action.tables", false);
    return rep;
  }
  bool perm_hom = true;
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int a = 0; a < n; ++a)
        if (A.act(g, A.act(h, a)) != A.act(A.G.op(h, g), a)) perm_hom = false;
  rep.add_bool("action.permutation_homomorphism", perm_hom);

  // Monoidal coherence of each rho_g against F.
  double mon = 0;
  std::string mw;
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const auto lb = C.left_tree_basis(a, b, c, d);
            const auto rb = C.right_tree_basis(a, b, c, d);
            if (lb.empty() || rb.empty()) continue;
            const int pa = A.act(g, a), pb = A.act(g, b), pc = A.act(g, c), pd = A.act(g, d);
            auto cell = [&](int x, int y, int z) -> Mat {
              auto it = A.cell2[g].find(C.rkey(x, y, z));
              if (it != A.cell2[g].end()) return it->second;
              return Mat::Identity(C.N(x, y, z), C.N(A.act(g, x), A.act(g, y), A.act(g, z)));
            };
            const auto plb = C.left_tree_basis(pa, pb, pc, pd);
            const auto prb = C.right_tree_basis(pa, pb, pc, pd);
            Mat L = Mat::Zero(lb.size(), plb.size());
            for (std::size_t i = 0; i < lb.size(); ++i) {
              const auto [e, mu, nu] = lb[i];
              const Mat c1 = cell(a, b, e), c2 = cell(e, c, d);
              for (std::size_t ip = 0; ip < plb.size(); ++ip) {
                const auto [ep, mup, nup] = plb[ip];
                if (ep != A.act(g, e)) continue;
                L(i, ip) = c1(mu, mup) * c2(nu, nup);
              }
            }
            Mat Rt = Mat::Zero(rb.size(), prb.size());
            for (std::size_t j = 0; j < rb.size(); ++j) {
              const auto [f, rho, sig] = rb[j];
              const Mat c1 = cell(b, c, f), c2 = cell(a, f, d);
              for (std::size_t jp = 0; jp < prb.size(); ++jp) {
                const auto [fp, rhop, sigp] = prb[jp];
                if (fp != A.act(g, f)) continue;
                Rt(j, jp) = c1(rho, rhop) * c2(sig, sigp);
              }
            }
            const Mat& Fo = C.Fmat(a, b, c, d);
            const Mat& Fp = C.Fmat(pa, pb, pc, pd);
            const double r = (L * Fp - Fo * Rt).cwiseAbs().maxCoeff();
            if (r > mon) {
              mon = r;
              mw = "g=" + std::to_string(g) + " " + idx3(C, a, b, c) + "->" + C.labels[d];
            }
          }
  rep.add("action.monoidal_coherence", mon, mw);

  // rho^2 / rho^0 coherence scalars.
  double coh = 0;
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int k = 0; k < ng; ++k)
        for (int x = 0; x < n; ++x) {
          const Scalar r1 = A.rho2_at(h, k, x) * A.rho2_at(g, A.G.op(k, h), x);
          const Scalar r2 = A.rho2_at(g, h, A.act(k, x)) * A.rho2_at(A.G.op(h, g), k, x);
          coh = std::max(coh, std::abs(r1 - r2));
        }
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < n; ++x) {
      coh = std::max(coh, std::abs(A.rho0_at(x) * A.rho2_at(g, 0, x) - Scalar(1)));
      coh = std::max(coh, std::abs(A.rho0_at(A.act(g, x)) * A.rho2_at(0, g, x) - Scalar(1)));
    }
  rep.add("action.rho_coherence", coh);

  // rho2 components are monoidal natural transformations.
  double rho2nat = 0;
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      const int hg = A.G.op(g, h);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (!C.N(a, b, c)) continue;
            auto cell = [&](int gg, int x, int y, int z) -> Mat {
              auto it = A.cell2[gg].find(C.rkey(x, y, z));
              if (it != A.cell2[gg].end()) return it->second;
              return Mat::Identity(C.N(x, y, z), C.N(A.act(gg, x), A.act(gg, y), A.act(gg, z)));
            };
            Mat lhs = cell(h, a, b, c) * cell(g, A.act(h, a), A.act(h, b), A.act(h, c)) *
                      A.rho2_at(g, h, c);
            Mat rhs = A.rho2_at(g, h, a) * A.rho2_at(g, h, b) * cell(hg, a, b, c);
            rho2nat = std::max(rho2nat, (lhs - rhs).cwiseAbs().maxCoeff());
          }
    }
  rep.add("action.rho2_monoidal_nat", rho2nat);

  if (!C.braided()) {
    rep.add_bool("crossed_braiding.present", false);
    return rep;
  }

  Engine E(C);

  // (c) rho_g(c_{X,Y}) = c_{rho_g X, rho_g Y}.
  double natg = 0;
  std::string nw;
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mor lhs = E.act_mor(g, E.cross(E.simple(a), E.simple(b)));
        Mor rhs = E.cross(E.simple(A.act(g, a)), E.simple(A.act(g, b)));
        const double r = diff_norm(lhs, rhs);
        if (r > natg) {
          natg = r;
          nw = "g=" + std::to_string(g) + "," + C.labels[a] + "," + C.labels[b];
        }
      }
  rep.add("crossed.action_equivariance", natg, nw);

  // (d) tensor compatibility of the crossed braiding.
  double hex1 = 0, hex2 = 0;
  std::string h1w, h2w;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Obj A1 = E.simple(a), B1 = E.simple(b), C1 = E.simple(c);
        {
          // c_{X, Y (x) Z} = (rho2-coherence)(id (x) c_{.,Z})(c_{X,Y} (x) id).
          const int h = A.deg(b), k = A.deg(c);
          auto W = E.flatten({B1, C1});
          Mor lhs = E.compose(E.embed(W.from, {}, {E.act_obj(A.G.op(h, k), A1)}),
                              E.compose(E.cross(A1, W.total), E.embed(W.to, {A1}, {})));
          Obj Ab = E.act_obj(h, A1);
          Mor rhs = E.compose(E.embed(E.cross(Ab, C1), {B1}, {}),
                              E.embed(E.cross(A1, B1), {}, {C1}));
          // (rho2_{k,h})_X identifies rho_k rho_h X with rho_{hk} X; the
          // component is indexed by the original label a.
          Mor corr = E.identity(rhs.cod);
          for (int root = 0; root < n; ++root)
            if (corr.block[root].size())
              corr.block[root] *= A.rho2_at(k, h, a);
          const double r = diff_norm(lhs, E.compose(corr, rhs));
          if (r > hex1) {
            hex1 = r;
            h1w = idx3(C, a, b, c);
          }
        }
        {
          // c_{X (x) Y, Z} = (c_{X,Z} (x) id)(id (x) c_{Y,Z}); the monoidal
          // 2-cell of rho_{deg Z} enters through act_transform on the pair.
          auto W = E.flatten({A1, B1});
          const int k = A.deg(c);
          auto Wperm = E.flatten({E.act_obj(k, A1), E.act_obj(k, B1)});
          Mor tr = E.act_transform(k, {A1, B1});
          Mor lhs = E.compose(E.embed(E.compose(Wperm.from, tr), {C1}, {}),
                              E.compose(E.cross(W.total, C1), E.embed(W.to, {}, {C1})));
          Mor rhs = E.compose(E.embed(E.cross(A1, C1), {}, {E.act_obj(k, B1)}),
                              E.embed(E.cross(B1, C1), {A1}, {}));
          const double r = diff_norm(lhs, rhs);
          if (r > hex2) {
            hex2 = r;
            h2w = idx3(C, a, b, c);
          }
        }
      }
  rep.add("crossed.hexagon_right_module", hex1, h1w);
  rep.add("crossed.hexagon_left_module", hex2, h2w);
  return rep;
}

FusionCategoryData restrict_to_labels(const FusionCategoryData& C, const std::vector<int>& keep) {
  FusionCategoryData out;
  const int m = static_cast<int>(keep.size());
  std::vector<int> from_parent(C.n(), -1);
  for (int i = 0; i < m; ++i) from_parent[keep[i]] = i;
  if (from_parent[C.unit] < 0) throw ShapeMismatch("restrict_to_labels: unit not kept");
  out.unit = from_parent[C.unit];
  for (int i = 0; i < m; ++i) {
    out.labels.push_back(C.labels[keep[i]]);
    const int d = C.dual[keep[i]];
    if (from_parent[d] < 0) throw ShapeMismatch("restrict_to_labels: not closed under duals");
    out.dual.push_back(from_parent[d]);
    out.pivotal.push_back(C.pivotal[keep[i]]);
    if (C.has_theta()) out.theta.push_back(C.theta[keep[i]]);
  }
  out.fusion.assign(static_cast<std::size_t>(m) * m * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < C.n(); ++c) {
        const int nn = C.N(keep[a], keep[b], c);
        if (!nn) continue;
        if (from_parent[c] < 0) throw ShapeMismatch("restrict_to_labels: not fusion closed");
        out.Nref(a, b, from_parent[c]) = nn;
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
          auto it = C.F.find(C.fkey(keep[a], keep[b], keep[c], keep[d]));
          if (it != C.F.end()) out.F[out.fkey(a, b, c, d)] = it->second;
        }
        auto ir = C.R.find(C.rkey(keep[a], keep[b], keep[c]));
        if (ir != C.R.end()) out.R[out.rkey(a, b, c)] = ir->second;
      }
  out.finalize();
  return out;
}

ModularData modular_data(const FusionCategoryData& C, Tolerance tol) {
  if (!C.braided() || !C.has_theta())
    throw MissingBraiding("modular_data: needs braiding and twists");
  Engine E(C);
  const int n = C.n();
  ModularData md;
  md.S = Mat(n, n);
  md.T = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    md.T(a, a) = C.theta[a];
    for (int b = 0; b < n; ++b) {
      Mor dbl = E.compose(E.cross(E.simple(b), E.simple(a)),
                          E.cross(E.simple(a), E.simple(b)));
      md.S(a, b) = E.qtrace(dbl);
    }
  }
  md.s_invertible = numerical_rank(md.S, tol) == n;
  return md;
}

}  // namespace tenscat
