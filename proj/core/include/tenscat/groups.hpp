#pragma once

#include <string>
#include <vector>

#include "tenscat/numerics.hpp"

namespace tenscat {

/// Finite group as a dense multiplication table, elements 0..n-1, 0 = identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mult;  // mult[g][h] = g*h
  std::vector<int> inv;

  int order() const { return static_cast<int>(mult.size()); }
  int op(int g, int h) const { return mult[g][h]; }
  int inverse(int g) const { return inv[g]; }
  bool is_commutative() const;

  /// Checks associativity, unit and inverses exhaustively; throws on failure.
  void validate() const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup dihedral(int n);   // order 2n
  static FiniteGroup symmetric3();      // S3, order 6
  static FiniteGroup trivial() { return cyclic(1); }
};

/// Crossed module (G, H, t, phi) with right G-action phi on H.
struct CrossedModule {
  FiniteGroup G;
  FiniteGroup H;
  std::vector<int> t;                     // t[h] in G
  std::vector<std::vector<int>> phi;      // phi[g][h] = phi_g(h)

  int act(int g, int h) const { return phi[g][h]; }
};

struct CrossedModuleReport {
  struct Failure {
    std::string law;  // "t-hom", "phi-aut", "phi-hom", "peiffer", "equivariance"
    int g = -1, h = -1, hp = -1;
  };
  std::vector<Failure> failures;
  bool valid() const { return failures.empty(); }
};

CrossedModuleReport verify_crossed_module(const CrossedModule& cm);

struct InvalidCrossedModule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The 2-group of a crossed module: objects are elements of G, morphisms
/// (g, h): g -> t(h)g, composition (t(h)g, h') o (g, h) = (g, h'h), tensor
/// (g, h) x (g', h') = (gg', h phi_{g^-1}(h')).
struct TwoGroup {
  CrossedModule cm;

  struct Mor {
    int g, h;
  };

  std::vector<Mor> hom(int g, int gp) const;
  Mor compose(const Mor& second, const Mor& first) const;  // second o first
  Mor tensor(const Mor& a, const Mor& b) const;
  int target(const Mor& m) const { return cm.G.op(cm.t[m.h], m.g); }
};

TwoGroup build_two_group(const CrossedModule& cm);

struct NotCommutative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Characters of a finite commutative group under pointwise multiplication.
struct CharacterGroup {
  FiniteGroup base;
  std::vector<std::vector<Scalar>> characters;  // characters[j][g]

  int size() const { return static_cast<int>(characters.size()); }
  Scalar value(int j, int g) const { return characters[j][g]; }
  /// Index of the pointwise product of characters i and j.
  int mult(int i, int j, Tolerance tol = Tolerance()) const;
  int inverse(int j, Tolerance tol = Tolerance()) const;
  FiniteGroup as_group(Tolerance tol = Tolerance()) const;
};

CharacterGroup pontryagin_dual(const FiniteGroup& g);

/// A Frobenius algebra on a concrete vector space carrying a right G-action;
/// the common shape of C(G) and C[G^] inside Rep(G).
struct GroupRepAlgebra {
  FiniteGroup G;
  int dim = 0;
  std::vector<std::string> basis_names;
  DenseTensor mu;     // (dim, dim, dim): mu[i][j][k] coefficient of e_k in e_i * e_j
  std::vector<Scalar> eta;
  DenseTensor Delta;  // (dim, dim, dim): Delta[k][i][j] coefficient of e_i (x) e_j
  std::vector<Scalar> eps;
  std::vector<Mat> action;  // action[g]: right action of g as a matrix

  /// Residuals of algebra/Frobenius/action axioms; all should vanish.
  struct Check {
    double associativity, unitality, coassociativity, counitality, frobenius, delta_separable,
        commutative, action_homomorphism, action_intertwines;
    double worst() const;
  };
  Check verify(Tolerance tol) const;
};

/// C(G): functions on G with pointwise product, delta-function basis.
GroupRepAlgebra function_algebra(const FiniteGroup& g);

/// C[G^]: group algebra of the Pontryagin dual, character basis.
GroupRepAlgebra dual_group_algebra(const CharacterGroup& ghat);

/// phi_j -> sum_l xi^{lj} delta_l for Z_n; returns the matrix of the map and
/// the worst intertwining residual across mu, Delta, eta, eps and the action.
struct FourierCheck {
  Mat map;
  double residual;
};
FourierCheck fourier_isomorphism(int n, Tolerance tol = Tolerance());

}  // namespace tenscat
