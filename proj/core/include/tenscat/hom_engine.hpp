#pragma once

#include <unordered_map>
#include <vector>

#include "tenscat/fusion_cat.hpp"

namespace tenscat {

/// Multiplicity vector of a (possibly non-simple) object.
struct Obj {
  std::vector<int> mult;

  Obj() = default;
  explicit Obj(int nlabels) : mult(nlabels, 0) {}
  static Obj simple(int nlabels, int label) {
    Obj o(nlabels);
    o.mult[label] = 1;
    return o;
  }
  int total() const;
  bool operator==(const Obj& o) const { return mult == o.mult; }
  bool is_zero() const;
};

using ObjList = std::vector<Obj>;

/// A fusion chain u -> v through a list of objects: per factor the simple
/// slot (a_j, i_j) and the step (mu_j, e_j) with mu_j < N[e_{j-1}][a_j][e_j].
/// Packed as [a1,i1,mu1,e1, a2,i2,mu2,e2, ...]; e_0 is the start label.
using Chain = std::vector<int>;

/// A morphism between tensor products of objects, stored through the hom
/// functor: for every simple c a matrix from chains(unit -> c through dom)
/// to chains(unit -> c through cod).  All associators are absorbed into the
/// tree bases, so composition is plain matrix multiplication.
struct Mor {
  const FusionCategoryData* cat = nullptr;
  ObjList dom, cod;
  std::vector<Mat> block;  // indexed by root label

  Mor() = default;
  Mor operator+(const Mor& o) const;
  Mor operator-(const Mor& o) const;
  Mor operator*(Scalar s) const;
  double max_norm() const;
  bool same_signature(const Mor& o) const;
};

double diff_norm(const Mor& a, const Mor& b);

/// Engine bound to one category; caches tree bases and recoupling matrices.
class Engine {
 public:
  explicit Engine(const FusionCategoryData& cat) : C(cat) {}

  const FusionCategoryData& category() const { return C; }

  Obj simple(int label) const { return Obj::simple(C.n(), label); }
  Obj unit_obj() const { return simple(C.unit); }
  Obj dual_obj(const Obj& x) const;
  Obj tensor_obj(const Obj& x, const Obj& y) const;
  Scalar qdim(const Obj& x) const;

  const std::vector<Chain>& chains(int start, const ObjList& objs, int end) const;
  const std::vector<Chain>& trees(const ObjList& objs, int root) const {
    return chains(C.unit, objs, root);
  }
  int tree_count(const ObjList& objs, int root) const {
    return static_cast<int>(trees(objs, root).size());
  }
  int chain_index(int start, const ObjList& objs, int end, const Chain& ch) const;

  // --- basic morphisms -------------------------------------------------
  Mor identity(const ObjList& objs) const;
  Mor zero(const ObjList& dom, const ObjList& cod) const;
  Mor compose(const Mor& f, const Mor& g) const;  // f o g
  Mor embed(const Mor& f, const ObjList& ctx_left, const ObjList& ctx_right) const;
  /// tensor product f (x) g = (f (x) id) o (id (x) g)
  Mor tensor(const Mor& f, const Mor& g) const;

  /// scalar of a morphism [] -> [] (block at the unit)
  Scalar scalar(const Mor& f) const;

  // --- duality ----------------------------------------------------------
  Mor ev(const Obj& x) const;      // [x*, x] -> []
  Mor coev(const Obj& x) const;    // [] -> [x, x*]
  Mor ev2(const Obj& x) const;     // [x, x*] -> []   (tilde)
  Mor coev2(const Obj& x) const;   // [] -> [x*, x]   (tilde)

  /// Close the last strand of f: [L..., X] -> [L..., X] with the quantum trace.
  Mor close_last(const Mor& f) const;
  /// Full quantum trace of an endomorphism.
  Scalar qtrace(const Mor& f) const;

  /// Transpose an endomorphism onto the dual object.
  Mor transpose_endo(const Mor& f) const;  // f: [X]->[X]  =>  [X*]->[X*]

  // --- braiding ---------------------------------------------------------
  /// c_{X,Y}: [X, Y] -> [Y, rho(X)]; the left strand crosses over.
  Mor cross(const Obj& x, const Obj& y) const;
  /// Opposite braiding  [X, Y] -> [Y, rho^{-1}-twisted X]; right strand over.
  Mor cross_neg(const Obj& x, const Obj& y) const;

  /// Twist morphism [X] -> [rho_{deg}(X)] from theta (per-label scalars).
  Mor twist(const Obj& x) const;
  Mor twist_inv(const Obj& x) const;

  // --- group action -----------------------------------------------------
  Obj act_obj(int g, const Obj& x) const;
  Mor act_mor(int g, const Mor& f) const;
  /// Identification of the g-permuted flatten carrier of `list` with the
  /// flatten carrier of the permuted list, via the action's monoidal cells.
  Mor act_transform(int g, const ObjList& list) const;

  // --- reorganization ---------------------------------------------------
  struct Flattened {
    Obj total;
    Mor to;    // [list...] -> [total]
    Mor from;  // [total] -> [list...]
  };
  Flattened flatten(const ObjList& objs) const;

  /// Direct sum carrier with injections/projections per summand.
  struct DirectSum {
    Obj total;
    std::vector<Mor> inj;   // [part_i] -> [total]
    std::vector<Mor> proj;  // [total] -> [part_i]
  };
  DirectSum direct_sum(const std::vector<Obj>& parts) const;

  /// Basis of Hom([dom...], [cod...]) as morphisms (all block choices).
  std::vector<Mor> hom_basis(const ObjList& dom, const ObjList& cod) const;

  /// Solve for all f in Hom(dom,cod) with lhs(f) = 0 for the given list of
  /// linear conditions expressed as pairs (pre, post): post o f o pre summed
  /// with signs.  Used through specialised helpers in higher layers.
  // (Higher layers assemble their own systems from hom_basis instead.)

 private:
  const FusionCategoryData& C;

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  mutable std::unordered_map<std::vector<int>, std::vector<Chain>, VecHash> chain_cache_;
  mutable std::unordered_map<std::vector<int>, Mat, VecHash> comb_cache_;
  mutable std::unordered_map<std::vector<int>, Mat, VecHash> comb_inv_cache_;

  std::vector<int> chain_key(int start, const ObjList& objs, int end) const;
  Mat act_chain_transform(int g, const ObjList& list, int root) const;

  // Change of basis on Hom(v, u x D1 x ... x Dk): rows = chains(u, Ds, v),
  // cols = (w, chain0 in chains(unit, Ds, w), kappa < N[u][w][v]).
  const Mat& comb(int u, const ObjList& objs, int v) const;
  const Mat& comb_inv(int u, const ObjList& objs, int v) const;
  int comb_col_count(int u, const ObjList& objs, int v) const;
};

}  // namespace tenscat
