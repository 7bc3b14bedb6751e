#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tenscat/groups.hpp"
#include "tenscat/numerics.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingBraiding : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownExample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// G-action on a skeletal fusion category: label permutations pi_g, the
/// monoidal 2-cells of each rho_g on fusion spaces, and the coherence scalars
/// of rho itself (rho2: rho_g rho_h => rho_{hg}, rho0: id => rho_e).
struct GradedAction {
  FiniteGroup G;
  std::vector<int> grading;               // label -> group element
  std::vector<std::vector<int>> perm;     // perm[g][label]
  // cell2[g] maps key(a,b,c) to the matrix of rho_g on Hom(c, a x b),
  // N[a][b][c] x N[pa][pb][pc].  Missing key = identity.
  std::vector<std::map<long, Mat>> cell2;
  std::vector<std::vector<Scalar>> rho2;  // rho2[g*|G|+h][label], default 1
  std::vector<Scalar> rho0;               // per label, default 1

  int deg(int label) const { return grading.empty() ? 0 : grading[label]; }
  int act(int g, int label) const { return perm[g][label]; }
  Scalar rho2_at(int g, int h, int label) const;
  Scalar rho0_at(int label) const;
};

/// Skeletal fusion category: labels, fusion tensor, F-symbols on split bases,
/// pivotal coefficients, optional braiding/twists, optional grading + action.
///
/// F-convention on splitting trees lambda^{ab}_{c;mu} in Hom(c, a x b):
///   (lambda^{ab}_{e;mu} x id_c) o lambda^{ec}_{d;nu}
///     = sum_{f,rho,sigma} F[a,b,c,d]((e,mu,nu),(f,rho,sigma))
///         (id_a x lambda^{bc}_{f;rho}) o lambda^{af}_{d;sigma}.
/// R-convention: c_{a,b} o lambda^{ab}_{c;mu}
///     = sum_nu R[a,b,c](mu,nu) lambda^{b,pi(a)}_{c;nu},  pi = action of deg(b),
/// drawn with the left strand crossing over the right one.
struct FusionCategoryData {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  std::vector<int> fusion;  // n^3 row-major N[a][b][c]
  std::map<long, Mat> F;    // key(a,b,c,d)
  std::vector<Scalar> pivotal;
  std::map<long, Mat> R;    // key(a,b,c); empty map = no braiding
  std::vector<Scalar> theta;
  std::optional<GradedAction> action;

  // Derived by finalize():
  std::vector<Scalar> dims;
  std::vector<Scalar> ev_c, coev_c, ev2_c, coev2_c;  // cup/cap normalizations

  // Identity defaults for F entries absent from the map, sized on first use.
  mutable std::map<long, Mat> f_default_cache;

  int n() const { return static_cast<int>(labels.size()); }
  int N(int a, int b, int c) const { return fusion[(static_cast<std::size_t>(a) * n() + b) * n() + c]; }
  int& Nref(int a, int b, int c) { return fusion[(static_cast<std::size_t>(a) * n() + b) * n() + c]; }
  bool braided() const { return !R.empty(); }
  bool has_theta() const { return !theta.empty(); }
  int label_index(const std::string& name) const;

  static long fkey(int a, int b, int c, int d, int n);
  static long rkey(int a, int b, int c, int n);
  long fkey(int a, int b, int c, int d) const { return fkey(a, b, c, d, n()); }
  long rkey(int a, int b, int c) const { return rkey(a, b, c, n()); }

  /// Enumerations of the two tree bases F[a,b,c,d] is written in.
  std::vector<std::array<int, 3>> left_tree_basis(int a, int b, int c, int d) const;   // (e,mu,nu)
  std::vector<std::array<int, 3>> right_tree_basis(int a, int b, int c, int d) const;  // (f,rho,sigma)
  const Mat& Fmat(int a, int b, int c, int d) const;
  Scalar F_entry(int a, int b, int c, int d, int e, int mu, int nu, int f, int rho,
                 int sigma) const;
  Mat Rmat(int a, int b, int c) const;  // N[a][b][c] x N[b][pi(a)][c]

  /// Computes dims and cup/cap normalizations; call after populating data.
  void finalize(Tolerance tol = Tolerance());

  Scalar global_dimension() const;
};

Report verify_fusion_data(const FusionCategoryData& cat, Tolerance tol);

/// G-crossed braiding consistency: grading/action compatibility, rho
/// coherence, naturality of the components under the action, and the two
/// tensor-compatibility hexagons of the crossed braiding.
Report verify_gcrossed(const FusionCategoryData& cat, Tolerance tol);

/// Components of the opposite crossed braiding (inverse crossing with the
/// rho-coherence correction), as R-shaped tensors keyed like R.
std::map<long, Mat> opposite_crossed_braiding(const FusionCategoryData& cat);

struct ModularData {
  Mat S;  // unnormalized: S(unit,b) = d_b
  Mat T;
  bool s_invertible = false;
};
ModularData modular_data(const FusionCategoryData& cat, Tolerance tol);

/// Full subcategory on a fusion-closed subset of labels (sorted ascending).
/// Grading/action data are dropped; braiding and twists restrict.
FusionCategoryData restrict_to_labels(const FusionCategoryData& cat,
                                      const std::vector<int>& keep);

/// Pointed category of G-graded lines for commutative G; with `crossed` the
/// tautological grading, trivial action and identity crossed braiding are
/// attached.
FusionCategoryData vec_group(const FiniteGroup& g, bool crossed);

/// Skeletal Rep(G) for commutative G: one simple per character, trivial
/// associators, symmetric braiding.
FusionCategoryData rep_category_abelian(const FiniteGroup& g);

/// Built-in example library; names: vec, vecZ2, vecZ3, vecZ2_cocycle,
/// vecZ2_crossed, vecZ3_crossed, fibonacci, ising_crossed, toric, semion,
/// repZ2, repZ3.
FusionCategoryData example_library(const std::string& name);
std::vector<std::string> example_names();

}  // namespace tenscat
