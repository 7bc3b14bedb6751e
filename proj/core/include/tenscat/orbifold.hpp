#pragma once

#include <memory>

#include "tenscat/frobenius.hpp"

namespace tenscat {

struct ModularityRequired : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBraidedFunctor : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FaithfulGradingRequired : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchedDatum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Orbifold datum (A, T, alpha, alphaBar, psi, phi) living in a ribbon
/// category; alpha and alphaBar are stored in balanced form on [T, T].
struct OrbifoldDatum {
  std::shared_ptr<const FusionCategoryData> cat;
  AlgebraObject A;    // psi required
  BimoduleObject T;   // left action and the two right actions
  Mor alpha;          // [T, T] -> [T, T]
  Mor alphaBar;       // [T, T] -> [T, T]
  Scalar phi{1};

  const Mor& rho1() const { return T.right[0]; }
  const Mor& rho2() const { return T.right[1]; }
};

/// Object of the orbifolded category: an (A,A)-bimodule with T-crossings.
struct TauObject {
  Obj X;
  Mor left;     // [A, X] -> [X]
  Mor right;    // [X, A] -> [X]
  Mor tau1;     // [X, T] -> [T, X]
  Mor tau2;
  Mor tauBar1;  // [T, X] -> [X, T]
  Mor tauBar2;
};

// --- psi insertions -----------------------------------------------------
Mor psi_insert_left(Engine& E, const OrbifoldDatum& D, const Obj& X, const Mor& leftAct,
                    int power);
Mor psi_insert_right(Engine& E, const OrbifoldDatum& D, const Obj& X, const Mor& rightAct,
                     int power);
/// psi0^p on T (left leg), psi_i^p on T (right leg i), omega_i = psi0 psi_i.
Mor psi0T(Engine& E, const OrbifoldDatum& D, int power);
Mor psiiT(Engine& E, const OrbifoldDatum& D, int i, int power);
Mor omegaT(Engine& E, const OrbifoldDatum& D, int i, int power);
/// omega on an (A,A)-bimodule X.
Mor omega_bimodule(Engine& E, const OrbifoldDatum& D, const TauObject& X, int power);

Report verify_orbifold(const OrbifoldDatum& D, Tolerance tol);

OrbifoldDatum orbdat_from_comm_frobenius(std::shared_ptr<const FusionCategoryData> cat,
                                         const AlgebraObject& A, Tolerance tol);

/// 1-form symmetry datum: a braided functor H -> C on invertible simples
/// given by an object assignment and coherence scalars.
struct OneFormAssignment {
  FiniteGroup H;
  std::vector<int> labels;        // R(h) simple label per h
  std::vector<Scalar> r2;         // |H|^2 scalars R^2_{h,h'}, row-major; empty = all 1
  Scalar r0 = Scalar(1);
  Scalar r2_at(int h, int hp) const {
    return r2.empty() ? Scalar(1) : r2[static_cast<std::size_t>(h) * H.order() + hp];
  }
};

OrbifoldDatum orbdat_from_one_form(std::shared_ptr<const FusionCategoryData> cat,
                                   const OneFormAssignment& assign, Tolerance tol);

OrbifoldDatum transport_orbifold(const MonoidalFunctorData& f,
                                 std::shared_ptr<const FusionCategoryData> target,
                                 const OrbifoldDatum& D, Tolerance tol);

/// The Lemma-style datum of a G-crossed braided category inside its neutral
/// component.  Returns the datum plus the chosen simples m_g and the neutral
/// category (owned by the datum).
struct GCrossedDatum {
  OrbifoldDatum datum;
  std::vector<int> m_choice;              // simple label in the ambient category per g
  std::vector<int> neutral_labels;        // neutral labels in ambient indexing
  std::shared_ptr<const FusionCategoryData> ambient;
  // Per (g,h) the injection/projection of chi_{g,h} into T, in neutral indices.
  std::vector<Mor> chi_inj, chi_proj;
  std::vector<Obj> chi_obj;
  int pair_index(int g, int h) const;
};

GCrossedDatum orbdat_from_gcrossed(std::shared_ptr<const FusionCategoryData> cx,
                                   const std::vector<int>& m_choice, Tolerance tol);

Scalar orbifold_global_dimension(const OrbifoldDatum& D);

/// Quantum dimension inside the orbifolded category.
Scalar tau_dim(Engine& E, const OrbifoldDatum& D, const TauObject& X);

TauObject unit_tau_object(Engine& E, const OrbifoldDatum& D);

Report verify_tau_object(const OrbifoldDatum& D, const TauObject& X, Tolerance tol);

/// Morphism space Hom((X,tau), (Y,tau)) in the orbifolded category.
std::vector<Mor> tau_hom_basis(Engine& E, const OrbifoldDatum& D, const TauObject& X,
                               const TauObject& Y, Tolerance tol);

/// Monoidal product X (x)_A Y with composite T-crossings; also returns the
/// splitting maps of the underlying relative tensor product.
struct TauTensor {
  TauObject object;
  Mor r;  // [X, Y] -> [W]
  Mor s;  // [W] -> [X, Y]
};
TauTensor tau_tensor(Engine& E, const OrbifoldDatum& D, const TauObject& X, const TauObject& Y,
                     Tolerance tol);

/// Braiding of the orbifolded category as a map [W_XY] -> [W_YX] between the
/// given relative tensor products.
Mor tau_braiding(Engine& E, const OrbifoldDatum& D, const TauObject& X, const TauObject& Y,
                 const TauTensor& XY, const TauTensor& YX, Tolerance tol);

TauObject tau_dual(Engine& E, const OrbifoldDatum& D, const TauObject& X);

/// Twist of a simple tau-object (scalar by Schur).
Scalar tau_twist(Engine& E, const OrbifoldDatum& D, const TauObject& X, const TauTensor& XX,
                 Tolerance tol);

}  // namespace tenscat
