#pragma once

#include <optional>

#include "tenscat/hom_engine.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

struct NotDeltaSeparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMonoidal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBraided : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FlagsMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Frobenius algebra inside a fusion category, tensors in canonical hom bases.
struct AlgebraObject {
  Obj obj;
  Mor mu;     // [A, A] -> [A]
  Mor eta;    // [] -> [A]
  Mor Delta;  // [A] -> [A, A]
  Mor eps;    // [A] -> []
  std::optional<Mor> psi;  // [] -> [A], invertible insertion element
};

struct AlgebraFlags {
  bool delta_separable = false;
  bool separable_psi = false;
  bool symmetric = false;
  bool commutative = false;
};

/// Bimodule: one left action and one right action per right tensor factor.
struct BimoduleObject {
  Obj obj;
  Mor left;                // [A, X] -> [X]
  std::vector<Mor> right;  // [X, A] -> [X] per factor
};

struct RelTensorResult {
  Obj obj;
  Mor r;  // [X, Y] -> [W]
  Mor s;  // [W] -> [X, Y]
  Mor e;  // balancing idempotent on [X, Y]
};

/// A (left) module in the plain sense.
struct ModuleData {
  Obj obj;
  Mor act;  // [B, M] -> [M]
};

Report verify_algebra(Engine& E, const AlgebraObject& A, const AlgebraFlags& flags,
                      Tolerance tol);

/// Regular Frobenius algebra on a set of invertible labels closed under
/// fusion with trivial associator on the support: mu glues labels, Delta
/// carries weight 1/|support|, eps = |support| * projection onto the unit.
AlgebraObject regular_pointed_algebra(Engine& E, const std::vector<int>& support);

double left_module_residual(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& act);
double right_module_residual(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& act);

/// Coaction induced by the Frobenius structure on a module.
Mor induced_comodule_left(Engine& E, const AlgebraObject& A, const Mor& act);   // [X] -> [A, X]
Mor induced_comodule_right(Engine& E, const AlgebraObject& A, const Mor& act);  // [X] -> [X, A]

/// Balancing idempotent on [X, Y] for a right action rho and left action lam.
Mor balancing_idempotent(Engine& E, const AlgebraObject& A, const Obj& X, const Mor& rho,
                         const Obj& Y, const Mor& lam);

RelTensorResult relative_tensor(Engine& E, const Obj& X, const Mor& rho, const AlgebraObject& A,
                                const Obj& Y, const Mor& lam, Tolerance tol);

/// Basis of balanced maps X (x) Y -> K.
std::vector<Mor> balanced_hom(Engine& E, const Obj& X, const Mor& rho, const AlgebraObject& A,
                              const Obj& Y, const Mor& lam, const Obj& K, Tolerance tol);

/// Module morphisms between left B-modules.
std::vector<Mor> module_hom_basis(Engine& E, const AlgebraObject& B, const ModuleData& m,
                                  const ModuleData& n, Tolerance tol);

/// All simple left B-modules, found by decomposing the free modules B (x) x.
std::vector<ModuleData> enumerate_modules(Engine& E, const AlgebraObject& B, Tolerance tol);

/// Local modules among the given left modules (braided ambient, commutative B).
std::vector<std::size_t> local_modules(Engine& E, const AlgebraObject& B,
                                       const std::vector<ModuleData>& modules, Tolerance tol);

/// Monoidal functor between two skeletal categories, simple-to-simple on
/// objects, with 2-cells on fusion spaces.
struct MonoidalFunctorData {
  const FusionCategoryData* src = nullptr;
  const FusionCategoryData* dst = nullptr;
  std::vector<int> obj_map;
  std::map<long, Mat> cell2;  // key(a,b,c) in src indices -> Mat N_src x N_dst
  Scalar cell0 = Scalar(1);

  int map_label(int a) const { return obj_map[a]; }
  Mat cell(int a, int b, int c) const;
};

Report verify_monoidal_functor(const MonoidalFunctorData& f, Tolerance tol);
double braided_functor_residual(const MonoidalFunctorData& f);

Obj transport_obj(const MonoidalFunctorData& f, const Obj& x);
/// Image of a morphism with all coherence cells inserted; in the canonical
/// hom bases this is F(f) composed with the appropriate F^2 / F^0.
Mor transport_mor(const MonoidalFunctorData& f, Engine& Esrc, Engine& Edst, const Mor& m);

AlgebraObject transport_frobenius(const MonoidalFunctorData& f, Engine& Esrc, Engine& Edst,
                                  const AlgebraObject& A);

}  // namespace tenscat
