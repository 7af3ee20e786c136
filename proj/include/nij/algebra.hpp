#ifndef NIJ_ALGEBRA_HPP
#define NIJ_ALGEBRA_HPP

#include <string>
#include <vector>

#include "nij/linalg.hpp"
#include "nij/rational.hpp"
#include "nij/report.hpp"

namespace nij {

/// Element of a finite-dimensional carrier space, coordinates in a fixed basis.
struct Vec {
  int dim = 0;
  std::vector<Rational> x;

  Vec() = default;
  explicit Vec(int d) : dim(d), x(d) {}
  static Vec basis(int d, int i);

  bool is_zero() const;
  Vec operator-() const;
  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const Rational& c, const Vec& v);
  friend bool operator==(const Vec& a, const Vec& b) { return a.dim == b.dim && a.x == b.x; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  std::string str() const;
};

/// Bilinear product on a dim-dimensional space stored as structure constants:
/// e_i o e_j = sum_k c[i][j][k] e_k. No symmetry is assumed.
class BilinearOp {
 public:
  BilinearOp() : dim_(0) {}
  explicit BilinearOp(int dim) : dim_(dim), c_((size_t)dim * dim * dim) {}

  int dim() const { return dim_; }
  Rational& c(int i, int j, int k) { return c_[((size_t)i * dim_ + j) * dim_ + k]; }
  const Rational& c(int i, int j, int k) const { return c_[((size_t)i * dim_ + j) * dim_ + k]; }

  friend bool operator==(const BilinearOp& a, const BilinearOp& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BilinearOp& a, const BilinearOp& b) { return !(a == b); }

  /// Pointwise pencil a*this + b*other on the same carrier.
  static BilinearOp pencil(const Rational& a, const BilinearOp& p, const Rational& b,
                           const BilinearOp& q);

 private:
  int dim_;
  std::vector<Rational> c_;
};

/// (1,1)-tensor on the carrier: N(e_j) = sum_i m[i][j] e_i.
class OneOneTensor {
 public:
  OneOneTensor() = default;
  explicit OneOneTensor(int dim) : m_(dim, dim) {}
  explicit OneOneTensor(RatMatrix m);
  static OneOneTensor identity(int dim) { return OneOneTensor(RatMatrix::identity(dim)); }
  static OneOneTensor scalar(int dim, const Rational& lambda);

  int dim() const { return m_.rows(); }
  Rational& at(int i, int j) { return m_.at(i, j); }
  const Rational& at(int i, int j) const { return m_.at(i, j); }
  const RatMatrix& matrix() const { return m_; }

  Vec apply(const Vec& v) const;

  friend bool operator==(const OneOneTensor& a, const OneOneTensor& b) { return a.m_ == b.m_; }
  friend bool operator!=(const OneOneTensor& a, const OneOneTensor& b) { return !(a == b); }

 private:
  RatMatrix m_;
};

/// Value table of a trilinear map on basis triples.
struct TrilinearMap {
  int dim = 0;
  std::vector<Vec> t;  // t[(i*dim+j)*dim+k]

  explicit TrilinearMap(int d = 0) : dim(d), t((size_t)d * d * d, Vec(d)) {}
  Vec& at(int i, int j, int k) { return t[((size_t)i * dim + j) * dim + k]; }
  const Vec& at(int i, int j, int k) const { return t[((size_t)i * dim + j) * dim + k]; }
};

/// Value table of a bilinear map on basis pairs (the torsion table).
struct BilinearTable {
  int dim = 0;
  std::vector<Vec> t;  // t[i*dim+j]

  explicit BilinearTable(int d = 0) : dim(d), t((size_t)d * d, Vec(d)) {}
  Vec& at(int i, int j) { return t[(size_t)i * dim + j]; }
  const Vec& at(int i, int j) const { return t[(size_t)i * dim + j]; }
  bool is_zero() const;
};

// ---- operations ----

Vec apply(const BilinearOp& op, const Vec& X, const Vec& Y);

/// (X o Y) o Z - X o (Y o Z) + Y o (X o Z); zero iff the Jacobi identity
/// holds on this triple.
Vec jacobi_defect(const BilinearOp& op, const Vec& X, const Vec& Y, const Vec& Z);

/// Exhaustive Jacobi check over all dim^3 basis triples (complete by
/// trilinearity).
CheckReport is_leibniz(const BilinearOp& op);

/// Structure constants of the contracted product
/// X o_N Y = N(X) o Y + X o N(Y) - N(X o Y).
BilinearOp contract(const BilinearOp& op, const OneOneTensor& N);

/// Torsion table T_N(e_i, e_j) = N(e_i) o N(e_j) - N(e_i o_N e_j).
BilinearTable nijenhuis_torsion(const BilinearOp& op, const OneOneTensor& N);

/// Six-term mixed-compatibility expression; vanishes for every N whenever
/// op is Leibniz.
Vec compatibility_defect(const BilinearOp& op, const OneOneTensor& N, const Vec& X, const Vec& Y,
                         const Vec& Z);

/// Coboundary of the torsion cochain:
/// T(X,YoZ) - T(XoY,Z) - T(Y,XoZ) - T(X,Y)oZ + XoT(Y,Z) - YoT(X,Z).
Vec leibniz_coboundary_on_torsion(const BilinearOp& op, const OneOneTensor& N, const Vec& X,
                                  const Vec& Y, const Vec& Z);

/// The coboundary evaluated on every basis triple.
TrilinearMap coboundary_table(const BilinearOp& op, const OneOneTensor& N);

enum class TensorClass { nijenhuis, weak_nijenhuis, neither };

struct Classification {
  TensorClass cls;
  CheckReport report;
};

/// nijenhuis: torsion vanishes on all basis pairs. weak_nijenhuis: torsion
/// nonzero somewhere but its coboundary vanishes on all basis triples.
/// Requires op Leibniz.
Classification classify_tensor(const BilinearOp& op, const OneOneTensor& N);

std::string tensor_class_name(TensorClass c);

// ---- fixture catalogue: verified Leibniz algebras ----

namespace catalogue {

BilinearOp abelian(int dim);
BilinearOp solvable2();     // [e1,e2] = e2
BilinearOp heisenberg3();   // [e1,e2] = e3
BilinearOp loday2();        // e1 o e1 = e2, non-Lie Leibniz

BilinearOp direct_sum(const BilinearOp& a, const BilinearOp& b);

/// Isomorphic copy: X o' Y = g^-1 (gX o gY). Preserves the Jacobi identity.
BilinearOp conjugate(const BilinearOp& op, const RatMatrix& g);

}  // namespace catalogue

}  // namespace nij

#endif
