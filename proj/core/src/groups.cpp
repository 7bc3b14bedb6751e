#include "tenscat/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace tenscat {

bool FiniteGroup::is_commutative() const {
  const int n = order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < g; ++h)
      if (mult[g][h] != mult[h][g]) return false;
  return true;
}

void FiniteGroup::validate() const {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group: empty table");
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(mult[g].size()) != n) throw std::invalid_argument("group: ragged table");
    if (mult[0][g] != g || mult[g][0] != g) throw std::invalid_argument("group: 0 is not a unit");
    if (mult[inv[g]][g] != 0 || mult[g][inv[g]] != 0)
      throw std::invalid_argument("group: bad inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw std::invalid_argument("group: not associative");
}

namespace {
FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.name = std::move(name);
  g.mult = std::move(table);
  const int n = static_cast<int>(g.mult.size());
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mult[a][b] == 0) g.inv[a] = b;
  g.validate();
  return g;
}
}  // namespace

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table("Z" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) {
      const int gx = x / nb, hx = x % nb, gy = y / nb, hy = y % nb;
      t[x][y] = a.mult[gx][gy] * nb + b.mult[hx][hy];
    }
  return from_table(a.name + "x" + b.name, std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // Elements 0..n-1 rotations r^k, n..2n-1 reflections s r^k.
  const int m = 2 * n;
  auto enc = [n](int refl, int k) { return refl * n + ((k % n) + n) % n; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int rx = x / n, kx = x % n, ry = y / n, ky = y % n;
      // (s^rx r^kx)(s^ry r^ky) = s^{rx+ry} r^{ky + (-1)^{ry} kx}
      t[x][y] = enc((rx + ry) % 2, ky + (ry ? -kx : kx));
    }
  return from_table("D" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2}: id, (012), (021), (01), (12), (02).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto find = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
      t[a][b] = find(c);
    }
  return from_table("S3", std::move(t));
}

CrossedModuleReport verify_crossed_module(const CrossedModule& cm) {
  CrossedModuleReport rep;
  const int ng = cm.G.order(), nh = cm.H.order();
  auto fail = [&rep](std::string law, int g, int h, int hp) {
    rep.failures.push_back({std::move(law), g, h, hp});
  };
  for (int h = 0; h < nh; ++h)
    for (int hp = 0; hp < nh; ++hp)
      if (cm.t[cm.H.op(h, hp)] != cm.G.op(cm.t[h], cm.t[hp])) fail("t-hom", -1, h, hp);
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int hp = 0; hp < nh; ++hp)
        if (cm.act(g, cm.H.op(h, hp)) != cm.H.op(cm.act(g, h), cm.act(g, hp)))
          fail("phi-aut", g, h, hp);
  // phi a homomorphism out of G^rev: phi_g o phi_g' = phi_{g' g}.
  for (int g = 0; g < ng; ++g)
    for (int gp = 0; gp < ng; ++gp)
      for (int h = 0; h < nh; ++h)
        if (cm.act(g, cm.act(gp, h)) != cm.act(cm.G.op(gp, g), h)) fail("phi-hom", g, gp, h);
  // Peiffer: phi_{t(h)}(h') = h^-1 h' h.
  for (int h = 0; h < nh; ++h)
    for (int hp = 0; hp < nh; ++hp)
      if (cm.act(cm.t[h], hp) != cm.H.op(cm.H.op(cm.H.inv[h], hp), h)) fail("peiffer", -1, h, hp);
  // Equivariance: t(phi_g(h)) = g^-1 t(h) g.
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      if (cm.t[cm.act(g, h)] != cm.G.op(cm.G.op(cm.G.inv[g], cm.t[h]), g))
        fail("equivariance", g, h, -1);
  return rep;
}

std::vector<TwoGroup::Mor> TwoGroup::hom(int g, int gp) const {
  std::vector<Mor> out;
  for (int h = 0; h < cm.H.order(); ++h)
    if (cm.G.op(cm.t[h], g) == gp) out.push_back({g, h});
  return out;
}

TwoGroup::Mor TwoGroup::compose(const Mor& second, const Mor& first) const {
  if (second.g != target(first)) throw std::invalid_argument("TwoGroup: morphisms not composable");
  return {first.g, cm.H.op(second.h, first.h)};
}

TwoGroup::Mor TwoGroup::tensor(const Mor& a, const Mor& b) const {
  return {cm.G.op(a.g, b.g), cm.H.op(a.h, cm.act(cm.G.inv[a.g], b.h))};
}

TwoGroup build_two_group(const CrossedModule& cm) {
  auto rep = verify_crossed_module(cm);
  if (!rep.valid())
    throw InvalidCrossedModule("build_two_group: crossed module axioms fail (" +
                               rep.failures.front().law + ")");
  return TwoGroup{cm};
}

int CharacterGroup::mult(int i, int j, Tolerance tol) const {
  const int n = base.order();
  for (int k = 0; k < size(); ++k) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = approx_eq(characters[i][g] * characters[j][g], characters[k][g], tol);
    if (ok) return k;
  }
  throw std::runtime_error("CharacterGroup::mult: product character not found");
}

int CharacterGroup::inverse(int j, Tolerance tol) const {
  for (int k = 0; k < size(); ++k) {
    bool ok = true;
    for (int g = 0; g < base.order() && ok; ++g)
      ok = approx_eq(characters[j][g] * characters[k][g], Scalar(1), tol);
    if (ok) return k;
  }
  throw std::runtime_error("CharacterGroup::inverse: not found");
}

FiniteGroup CharacterGroup::as_group(Tolerance tol) const {
  const int n = size();
  FiniteGroup g;
  g.name = base.name + "^";
  g.mult.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.mult[i][j] = mult(i, j, tol);
    g.inv[i] = inverse(i, tol);
  }
  g.validate();
  return g;
}

CharacterGroup pontryagin_dual(const FiniteGroup& g) {
  if (!g.is_commutative()) throw NotCommutative("pontryagin_dual: group is not commutative");
  const int n = g.order();

  // Build characters by extending along a chain of cyclic extensions.  Each
  // character on <S, x> is determined by a root z with z^m = chi(x^m) where m
  // is minimal with x^m in S.
  std::vector<int> sub = {0};
  std::vector<std::map<int, Scalar>> chars = {{{0, Scalar(1)}}};
  std::vector<bool> in_sub(n, false);
  in_sub[0] = true;

  while (static_cast<int>(sub.size()) < n) {
    int x = -1;
    for (int e = 1; e < n; ++e)
      if (!in_sub[e]) {
        x = e;
        break;
      }
    int m = 1, p = x;
    while (!in_sub[p]) {
      ++m;
      p = g.op(p, x);
    }
    // p = x^m lies in the current subgroup.
    std::vector<int> new_sub;
    std::vector<std::map<int, Scalar>> new_chars;
    std::vector<int> powers(m);
    powers[0] = 0;
    for (int k = 1; k < m; ++k) powers[k] = g.op(powers[k - 1], x);
    for (int s : sub)
      for (int k = 0; k < m; ++k) new_sub.push_back(g.op(s, powers[k]));
    for (const auto& chi : chars) {
      const Scalar target = chi.at(p);
      const double arg0 = std::arg(target);
      for (int r = 0; r < m; ++r) {
        const double ang = (arg0 + 2 * std::numbers::pi * r) / m;
        const Scalar z = std::polar(1.0, ang);
        std::map<int, Scalar> ext;
        Scalar zk(1);
        for (int k = 0; k < m; ++k) {
          for (int s : sub) ext[g.op(s, powers[k])] = chi.at(s) * zk;
          zk *= z;
        }
        new_chars.push_back(std::move(ext));
      }
    }
    sub = std::move(new_sub);
    chars = std::move(new_chars);
    for (int s : sub) in_sub[s] = true;
  }

  CharacterGroup out;
  out.base = g;
  for (const auto& chi : chars) {
    std::vector<Scalar> row(n);
    for (int e = 0; e < n; ++e) row[e] = chi.at(e);
    out.characters.push_back(std::move(row));
  }
  // Deterministic order: trivial character first, then lexicographic.
  std::sort(out.characters.begin(), out.characters.end(),
            [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (std::abs(a[i] - b[i]) < 1e-12) continue;
                if (std::abs(a[i].real() - b[i].real()) > 1e-12) return a[i].real() > b[i].real();
                return a[i].imag() > b[i].imag();
              }
              return false;
            });
  return out;
}

double GroupRepAlgebra::Check::worst() const {
  return std::max({associativity, unitality, coassociativity, counitality, frobenius,
                   delta_separable, commutative, action_homomorphism, action_intertwines});
}

GroupRepAlgebra::Check GroupRepAlgebra::verify(Tolerance) const {
  const int n = dim;
  auto m3 = [&](const DenseTensor& t, int i, int j, int k) -> Scalar {
    return t.entries[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  Check c{};
  // mu(mu(a,b),c) = mu(a,mu(b,c))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          Scalar lhs(0), rhs(0);
          for (int e = 0; e < n; ++e) {
            lhs += m3(mu, a, b, e) * m3(mu, e, cc, d);
            rhs += m3(mu, b, cc, e) * m3(mu, a, e, d);
          }
          c.associativity = std::max(c.associativity, std::abs(lhs - rhs));
        }
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      Scalar l(0), r(0);
      for (int e = 0; e < n; ++e) {
        l += eta[e] * m3(mu, e, a, d);
        r += eta[e] * m3(mu, a, e, d);
      }
      const Scalar want = (a == d) ? Scalar(1) : Scalar(0);
      c.unitality = std::max({c.unitality, std::abs(l - want), std::abs(r - want)});
    }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Scalar lhs(0), rhs(0);
          for (int e = 0; e < n; ++e) {
            lhs += m3(Delta, a, i, e) * m3(Delta, e, j, k);
            rhs += m3(Delta, a, e, k) * m3(Delta, e, i, j);
          }
          c.coassociativity = std::max(c.coassociativity, std::abs(lhs - rhs));
        }
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      Scalar l(0), r(0);
      for (int e = 0; e < n; ++e) {
        l += m3(Delta, a, e, d) * eps[e];
        r += m3(Delta, a, d, e) * eps[e];
      }
      const Scalar want = (a == d) ? Scalar(1) : Scalar(0);
      c.counitality = std::max({c.counitality, std::abs(l - want), std::abs(r - want)});
    }
  // (id x mu)(Delta x id) = Delta mu = (mu x id)(id x Delta)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar mid(0), left(0), right(0);
          for (int e = 0; e < n; ++e) {
            mid += m3(mu, a, b, e) * m3(Delta, e, i, j);
            left += m3(Delta, a, i, e) * m3(mu, e, b, j);
            right += m3(Delta, b, e, j) * m3(mu, a, e, i);
          }
          c.frobenius = std::max({c.frobenius, std::abs(left - mid), std::abs(right - mid)});
        }
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      Scalar v(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v += m3(Delta, a, i, j) * m3(mu, i, j, d);
      const Scalar want = (a == d) ? Scalar(1) : Scalar(0);
      c.delta_separable = std::max(c.delta_separable, std::abs(v - want));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        c.commutative = std::max(c.commutative, std::abs(m3(mu, a, b, d) - m3(mu, b, a, d)));
  const int ng = G.order();
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      // Right action: e <| g <| h = e <| (gh).
      Mat lhs = action[h] * action[g];
      c.action_homomorphism =
          std::max(c.action_homomorphism, (lhs - action[G.op(g, h)]).cwiseAbs().maxCoeff());
    }
  for (int g = 0; g < ng; ++g) {
    // mu is G-equivariant: mu(a<|g, b<|g) = mu(a,b)<|g, and eta, eps invariant.
    const Mat& A = action[g];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          Scalar lhs(0), rhs(0);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) lhs += A(i, a) * A(j, b) * m3(mu, i, j, d);
          for (int e = 0; e < n; ++e) rhs += m3(mu, a, b, e) * A(d, e);
          c.action_intertwines = std::max(c.action_intertwines, std::abs(lhs - rhs));
        }
    Vec etav(n), epsv(n);
    for (int i = 0; i < n; ++i) {
      etav(i) = eta[i];
      epsv(i) = eps[i];
    }
    c.action_intertwines = std::max(c.action_intertwines, (A * etav - etav).cwiseAbs().maxCoeff());
    c.action_intertwines =
        std::max(c.action_intertwines, (A.transpose() * epsv - epsv).cwiseAbs().maxCoeff());
  }
  return c;
}

GroupRepAlgebra function_algebra(const FiniteGroup& g) {
  const int n = g.order();
  GroupRepAlgebra a;
  a.G = g;
  a.dim = n;
  a.mu = DenseTensor({static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                      static_cast<std::size_t>(n)});
  a.Delta = a.mu;
  a.eta.assign(n, Scalar(1));
  a.eps.assign(n, Scalar(1));
  for (int i = 0; i < n; ++i) {
    a.basis_names.push_back("d" + std::to_string(i));
    a.mu.entries[(static_cast<std::size_t>(i) * n + i) * n + i] = 1;    // d_i d_j = [i=j] d_i
    a.Delta.entries[(static_cast<std::size_t>(i) * n + i) * n + i] = 1; // Delta d_i = d_i x d_i
  }
  for (int e = 0; e < n; ++e) {
    Mat m = Mat::Zero(n, n);
    // (f <| g)(h) = f(h g^-1), so delta_l <| g = delta_{lg}.
    for (int l = 0; l < n; ++l) m(g.op(l, e), l) = 1;
    a.action.push_back(m);
  }
  return a;
}

GroupRepAlgebra dual_group_algebra(const CharacterGroup& ghat) {
  const int n = ghat.size();
  GroupRepAlgebra a;
  a.G = ghat.base;
  a.dim = n;
  a.mu = DenseTensor({static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                      static_cast<std::size_t>(n)});
  a.Delta = a.mu;
  a.eta.assign(n, Scalar(0));
  a.eps.assign(n, Scalar(0));
  Tolerance tol;
  const int unit = [&] {
    for (int j = 0; j < n; ++j) {
      bool triv = true;
      for (int e = 0; e < ghat.base.order() && triv; ++e)
        triv = approx_eq(ghat.value(j, e), Scalar(1), tol);
      if (triv) return j;
    }
    throw std::runtime_error("dual_group_algebra: no trivial character");
  }();
  a.eta[unit] = 1;
  a.eps[unit] = Scalar(n);
  for (int i = 0; i < n; ++i) {
    a.basis_names.push_back("phi" + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      const int k = ghat.mult(i, j, tol);
      a.mu.entries[(static_cast<std::size_t>(i) * n + j) * n + k] = 1;
      a.Delta.entries[(static_cast<std::size_t>(k) * n + i) * n + j] += Scalar(1.0 / n);
    }
  }
  for (int e = 0; e < ghat.base.order(); ++e) {
    Mat m = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = std::conj(ghat.value(j, e));  // phi_j <| g = xi^{-gj} phi_j
    a.action.push_back(m);
  }
  return a;
}

FourierCheck fourier_isomorphism(int n, Tolerance) {
  const FiniteGroup zn = FiniteGroup::cyclic(n);
  const CharacterGroup ghat = pontryagin_dual(zn);
  GroupRepAlgebra cg = function_algebra(zn);
  GroupRepAlgebra cghat = dual_group_algebra(ghat);

  // F(phi_j) = sum_l phi_j(l) delta_l.
  Mat f(n, n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) f(l, j) = ghat.value(j, l);

  double res = 0;
  auto m3 = [n](const DenseTensor& t, int i, int j, int k) -> Scalar {
    return t.entries[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  // mu intertwining: F(mu'(x,y)) = mu(F x, F y).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int d = 0; d < n; ++d) {
        Scalar lhs(0), rhs(0);
        for (int k = 0; k < n; ++k) lhs += m3(cghat.mu, i, j, k) * f(d, k);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) rhs += f(p, i) * f(q, j) * m3(cg.mu, p, q, d);
        res = std::max(res, std::abs(lhs - rhs));
      }
  // Delta intertwining: (F x F)(Delta'(x)) = Delta(F x).
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Scalar lhs(0), rhs(0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) lhs += m3(cghat.Delta, k, i, j) * f(p, i) * f(q, j);
        for (int d = 0; d < n; ++d) rhs += f(d, k) * m3(cg.Delta, d, p, q);
        res = std::max(res, std::abs(lhs - rhs));
      }
  // eta, eps, action.
  for (int d = 0; d < n; ++d) {
    Scalar lhs(0);
    for (int k = 0; k < n; ++k) lhs += cghat.eta[k] * f(d, k);
    res = std::max(res, std::abs(lhs - cg.eta[d]));
  }
  for (int k = 0; k < n; ++k) {
    Scalar rhs(0);
    for (int d = 0; d < n; ++d) rhs += f(d, k) * cg.eps[d];
    res = std::max(res, std::abs(cghat.eps[k] - rhs));
  }
  for (int e = 0; e < n; ++e)
    res = std::max(res, (f * cghat.action[e] - cg.action[e] * f).cwiseAbs().maxCoeff());

  return {f, res};
}

}  // namespace tenscat
