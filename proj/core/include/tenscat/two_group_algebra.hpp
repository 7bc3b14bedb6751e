#pragma once

#include "tenscat/groups.hpp"

namespace tenscat {

/// The linearized algebra of a 2-group on the basis {e_(g,h)}: multiplication
/// glues composable 2-group morphisms, comultiplication carries weight 1/|H|,
/// unit is the sum of identities and the counit projects onto them.
struct LinearTwoGroupAlgebra {
  CrossedModule cm;
  int dim = 0;  // |G| * |H|
  // Basis index of (g, h).
  int index(int g, int h) const { return g * cm.H.order() + h; }
  std::pair<int, int> pair_of(int i) const { return {i / cm.H.order(), i % cm.H.order()}; }

  DenseTensor mu;     // (dim, dim, dim)
  std::vector<Scalar> eta;
  DenseTensor Delta;  // (dim, dim, dim)
  std::vector<Scalar> eps;
};

LinearTwoGroupAlgebra build_two_group_algebra(const CrossedModule& cm);

struct TwoGroupAlgebraReport {
  double associativity = 0, unitality = 0, coassociativity = 0, counitality = 0, frobenius = 0,
         delta_separability = 0, symmetry = 0;
  double worst() const;
  bool pass(Tolerance tol) const { return worst() <= tol.eps; }
};

TwoGroupAlgebraReport verify_two_group_algebra(const LinearTwoGroupAlgebra& a, Tolerance tol);

}  // namespace tenscat
