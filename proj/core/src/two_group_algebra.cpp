#include "tenscat/two_group_algebra.hpp"

#include <algorithm>

namespace tenscat {

LinearTwoGroupAlgebra build_two_group_algebra(const CrossedModule& cm) {
  auto rep = verify_crossed_module(cm);
  if (!rep.valid())
    throw InvalidCrossedModule("build_two_group_algebra: invalid crossed module (" +
                               rep.failures.front().law + ")");
  LinearTwoGroupAlgebra a;
  a.cm = cm;
  const int ng = cm.G.order(), nh = cm.H.order();
  a.dim = ng * nh;
  const auto d = static_cast<std::size_t>(a.dim);
  a.mu = DenseTensor({d, d, d});
  a.Delta = DenseTensor({d, d, d});
  a.eta.assign(a.dim, Scalar(0));
  a.eps.assign(a.dim, Scalar(0));

  // mu(e_(t(h)g, h') (x) e_(g, h)) = e_(g, h'h); zero on mismatched g-legs.
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int hp = 0; hp < nh; ++hp) {
        const int left = a.index(cm.G.op(cm.t[h], g), hp);
        const int right = a.index(g, h);
        const int out = a.index(g, cm.H.op(hp, h));
        a.mu.entries[(static_cast<std::size_t>(left) * d + right) * d + out] = 1;
        a.Delta.entries[(static_cast<std::size_t>(out) * d + left) * d + right] +=
            Scalar(1.0 / nh);
      }
  for (int g = 0; g < ng; ++g) {
    a.eta[a.index(g, 0)] = 1;
    a.eps[a.index(g, 0)] = Scalar(nh);
  }
  return a;
}

double TwoGroupAlgebraReport::worst() const {
  return std::max({associativity, unitality, coassociativity, counitality, frobenius,
                   delta_separability, symmetry});
}

TwoGroupAlgebraReport verify_two_group_algebra(const LinearTwoGroupAlgebra& a, Tolerance) {
  const int n = a.dim;
  auto m3 = [n](const DenseTensor& t, int i, int j, int k) -> Scalar {
    return t.entries[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  TwoGroupAlgebraReport r;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int d = 0; d < n; ++d) {
          Scalar lhs(0), rhs(0);
          for (int e = 0; e < n; ++e) {
            lhs += m3(a.mu, x, y, e) * m3(a.mu, e, z, d);
            rhs += m3(a.mu, y, z, e) * m3(a.mu, x, e, d);
          }
          r.associativity = std::max(r.associativity, std::abs(lhs - rhs));
        }
  for (int x = 0; x < n; ++x)
    for (int d = 0; d < n; ++d) {
      Scalar l(0), rr(0);
      for (int e = 0; e < n; ++e) {
        l += a.eta[e] * m3(a.mu, e, x, d);
        rr += a.eta[e] * m3(a.mu, x, e, d);
      }
      const Scalar want = (x == d) ? Scalar(1) : Scalar(0);
      r.unitality = std::max({r.unitality, std::abs(l - want), std::abs(rr - want)});
    }
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Scalar lhs(0), rhs(0);
          for (int e = 0; e < n; ++e) {
            lhs += m3(a.Delta, x, i, e) * m3(a.Delta, e, j, k);
            rhs += m3(a.Delta, x, e, k) * m3(a.Delta, e, i, j);
          }
          r.coassociativity = std::max(r.coassociativity, std::abs(lhs - rhs));
        }
  for (int x = 0; x < n; ++x)
    for (int d = 0; d < n; ++d) {
      Scalar l(0), rr(0);
      for (int e = 0; e < n; ++e) {
        l += m3(a.Delta, x, e, d) * a.eps[e];
        rr += m3(a.Delta, x, d, e) * a.eps[e];
      }
      const Scalar want = (x == d) ? Scalar(1) : Scalar(0);
      r.counitality = std::max({r.counitality, std::abs(l - want), std::abs(rr - want)});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar mid(0), left(0), right(0);
          for (int e = 0; e < n; ++e) {
            mid += m3(a.mu, x, y, e) * m3(a.Delta, e, i, j);
            left += m3(a.Delta, x, i, e) * m3(a.mu, e, y, j);
            right += m3(a.Delta, y, e, j) * m3(a.mu, x, e, i);
          }
          r.frobenius = std::max({r.frobenius, std::abs(left - mid), std::abs(right - mid)});
        }
  for (int x = 0; x < n; ++x)
    for (int d = 0; d < n; ++d) {
      Scalar v(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v += m3(a.Delta, x, i, j) * m3(a.mu, i, j, d);
      const Scalar want = (x == d) ? Scalar(1) : Scalar(0);
      r.delta_separability = std::max(r.delta_separability, std::abs(v - want));
    }
  // Symmetry: the pairing eps(mu(x,y)) agrees with eps(mu(y,x)).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar l(0), rr(0);
      for (int e = 0; e < n; ++e) {
        l += m3(a.mu, x, y, e) * a.eps[e];
        rr += m3(a.mu, y, x, e) * a.eps[e];
      }
      r.symmetry = std::max(r.symmetry, std::abs(l - rr));
    }
  return r;
}

}  // namespace tenscat
