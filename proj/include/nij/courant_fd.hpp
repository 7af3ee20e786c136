#ifndef NIJ_COURANT_FD_HPP
#define NIJ_COURANT_FD_HPP

#include <optional>
#include <vector>

#include "nij/algebra.hpp"

namespace nij {

/// Nondegenerate symmetric bilinear form on the carrier.
struct Pairing {
  int dim = 0;
  RatMatrix g;

  Pairing() = default;
  Pairing(int d, RatMatrix m);  // validates symmetry and nondegeneracy

  static Pairing hyperbolic(int n_e);  // [[0,I],[I,0]] on E + E*

  Rational value(const Vec& X, const Vec& Y) const;
};

/// Courant structure over a point: Leibniz product plus pairing, anchor
/// identically zero. Validity is established by check_courant_axioms.
struct CourantStructure {
  BilinearOp op;
  Pairing pairing;

  int dim() const { return op.dim(); }
};

/// Pair of skew Jacobi brackets on E and its dual. Compatibility is, by
/// definition here, the Leibniz property of the assembled double.
struct LieBialgebra {
  int dim_e = 0;
  BilinearOp bracket_e;
  BilinearOp bracket_estar;
};

struct Subspace {
  int ambient_dim = 0;
  std::vector<Vec> basis;  // linearly independent over the rationals

  void validate() const;  // throws on dependence or dimension mismatch
};

/// Block form of a tensor on E + E*: N_E on E, Lambda: E* -> E,
/// Omega: E -> E*, N_Estar on E*.
struct BlockTensor {
  int n_e = 0;
  RatMatrix n_e_block;
  RatMatrix lambda;
  RatMatrix omega;
  RatMatrix n_estar_block;

  OneOneTensor assemble() const;  // 2*n_e tensor in block order (E first)
};

// ---- operations ----

/// Unique N* with <NX,Y> = <X,N*Y>, computed as g^-1 N^t g.
OneOneTensor adjoint(const OneOneTensor& N, const Pairing& pairing);

/// lambda such that N + N* = lambda*I, when one exists.
std::optional<Rational> is_paired(const OneOneTensor& N, const Pairing& pairing);

/// Leibniz identity, polarized pairing axioms and product-invariance of the
/// pairing, all on basis tuples.
CheckReport check_courant_axioms(const CourantStructure& cs);

/// With Delta = N + N*: checks X o Delta Z = Delta(X o Z) and the polarized
/// Delta(YoZ+ZoY) = Delta(Y)oZ + Delta(Z)oY, and cross-checks the verdict
/// against the deformed-product pairing axioms (the two must agree whenever
/// cs itself satisfies the Courant axioms).
CheckReport check_delta_conditions(const CourantStructure& cs, const OneOneTensor& N);

/// Regression for skew-adjoint Nijenhuis tensors: N^2 commutes with left
/// multiplication. Preconditions N* = -N and vanishing torsion are enforced.
CheckReport check_n_squared(const CourantStructure& cs, const OneOneTensor& N);

/// Courant structure on E + E* from the pair of brackets; the mixed products
/// are the coadjoint actions determined by duality against the two brackets.
CourantStructure drinfeld_double(const LieBialgebra& b);

/// Maximal isotropic and closed under the product.
CheckReport is_dirac(const CourantStructure& cs, const Subspace& L);

/// Deformed product closed and skew on L, torsion vanishing on L; on pass,
/// additionally verifies that (L, o_N) is a Lie algebra and that N
/// intertwines o_N on L with o.
CheckReport is_dirac_nijenhuis(const CourantStructure& cs, const Subspace& L,
                               const OneOneTensor& N);

/// Full condition system for a block tensor on the double of a bialgebra:
/// the paired-shape identity, skewness and closedness of both off-diagonal
/// blocks, and the four torsion/bracket-deformation identities. Reports the
/// first failing condition.
CheckReport bialgebroid_nijenhuis_conditions(const LieBialgebra& b, const BlockTensor& N);

// block-coordinate helpers shared with tests and the polynomial module
Vec embed_e(const Vec& v, int n_e);      // E coordinates into E + E*
Vec embed_estar(const Vec& v, int n_e);  // E* coordinates into E + E*
Vec part_e(const Vec& v, int n_e);
Vec part_estar(const Vec& v, int n_e);

}  // namespace nij

#endif
