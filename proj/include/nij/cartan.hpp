#ifndef NIJ_CARTAN_HPP
#define NIJ_CARTAN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nij/multipoly.hpp"
#include "nij/report.hpp"

namespace nij {

/// All monomial exponents with total degree <= max_degree, ascending grlex.
std::vector<Monomial> monomials_up_to_degree(int n, int max_degree);

/// Polynomial vector field X = sum_i X^i d/dx_i on R^n.
struct PolyVectorField {
  int n = 0;
  std::vector<MultiPoly> comp;

  PolyVectorField() = default;
  explicit PolyVectorField(int n_) : n(n_), comp(n_, MultiPoly(n_)) {}
  static PolyVectorField coordinate(int n, int i);  // d/dx_{i+1}

  bool is_zero() const;
  PolyVectorField operator-() const;
  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator*(const MultiPoly& f, const PolyVectorField& X);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.n == b.n && a.comp == b.comp;
  }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

  /// Derivation action X(f).
  MultiPoly apply(const MultiPoly& f) const;
  std::string str() const;
};

/// Index tuple of a form component, strictly increasing, 0-based.
using FormIndex = std::vector<int>;

/// Polynomial differential k-form in canonical skew representation: only
/// strictly increasing index tuples are stored and zero components are absent.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int n, int degree);
  static PolyForm function(const MultiPoly& f);          // degree 0
  static PolyForm coordinate_one_form(int n, int i);     // dx_{i+1}

  int vars() const { return n_; }
  int degree() const { return deg_; }
  bool is_zero() const { return comp_.empty(); }
  const std::map<FormIndex, MultiPoly>& components() const { return comp_; }
  MultiPoly component(const FormIndex& idx) const;  // idx strictly increasing

  void add_component(const FormIndex& idx, const MultiPoly& c);  // accumulates
  /// Component lookup with an arbitrary tuple, resolving the sign of the
  /// sorting permutation; zero on repeated indices.
  MultiPoly antisym_component(FormIndex idx) const;

  PolyForm operator-() const;
  friend PolyForm operator+(const PolyForm& a, const PolyForm& b);
  friend PolyForm operator-(const PolyForm& a, const PolyForm& b);
  friend PolyForm operator*(const MultiPoly& f, const PolyForm& w);
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.comp_ == b.comp_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

  std::string str() const;

 private:
  int n_ = 0;
  int deg_ = 0;
  std::map<FormIndex, MultiPoly> comp_;
};

/// Polynomial bivector field, canonical skew representation on pairs i < j.
struct PolyBivector {
  int n = 0;
  std::map<std::pair<int, int>, MultiPoly> comp;

  PolyBivector() = default;
  explicit PolyBivector(int n_) : n(n_) {}

  void add_component(int i, int j, const MultiPoly& c);  // accepts any i != j
  MultiPoly component(int i, int j) const;               // antisymmetric lookup

  bool is_zero() const { return comp.empty(); }
  MultiPoly value(const PolyForm& xi, const PolyForm& eta) const;
  PolyVectorField apply(const PolyForm& xi) const;  // first-slot contraction
  friend bool operator==(const PolyBivector& a, const PolyBivector& b) {
    return a.n == b.n && a.comp == b.comp;
  }
  std::string str() const;
};

/// Polynomial (1,1)-tensor field; acts on vector fields by the matrix and on
/// one-forms by the transpose.
struct PolyOneOne {
  int n = 0;
  std::vector<MultiPoly> m;  // n*n row-major, (N X)^i = sum_j m[i][j] X^j

  PolyOneOne() = default;
  explicit PolyOneOne(int n_) : n(n_), m((size_t)n_ * n_, MultiPoly(n_)) {}
  static PolyOneOne identity(int n);
  static PolyOneOne scalar(int n, const Rational& lambda);

  MultiPoly& at(int i, int j) { return m[(size_t)i * n + j]; }
  const MultiPoly& at(int i, int j) const { return m[(size_t)i * n + j]; }

  PolyVectorField apply(const PolyVectorField& X) const;
  PolyForm transpose_apply(const PolyForm& xi) const;  // degree-1 forms
  PolyOneOne compose(const PolyOneOne& other) const;   // this after other
  friend PolyOneOne operator+(const PolyOneOne& a, const PolyOneOne& b);
  friend PolyOneOne operator-(const PolyOneOne& a, const PolyOneOne& b);
  friend bool operator==(const PolyOneOne& a, const PolyOneOne& b) {
    return a.n == b.n && a.m == b.m;
  }

  bool is_zero() const;
  /// lambda with N = lambda I (constant entries), when it exists.
  std::optional<Rational> constant_scalar() const;
};

// ---- Cartan calculus ----

PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y);
PolyForm exterior_derivative(const PolyForm& w);
PolyForm interior_product(const PolyVectorField& X, const PolyForm& w);  // degree >= 1
PolyForm lie_derivative(const PolyVectorField& X, const PolyForm& w);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// <xi, X> for a one-form and a vector field.
MultiPoly pair_form_vf(const PolyForm& xi, const PolyVectorField& X);

/// Contracted bracket [X,Y]_N0 = [N0 X, Y] + [X, N0 Y] - N0[X, Y].
PolyVectorField contracted_bracket(const PolyOneOne& N0, const PolyVectorField& X,
                                   const PolyVectorField& Y);

/// Torsion [N0 X, N0 Y] - N0([X,Y]_N0).
PolyVectorField nijenhuis_torsion_vf(const PolyOneOne& N0, const PolyVectorField& X,
                                     const PolyVectorField& Y);

/// Degree-preserving derivation of the form algebra generated by N0: on a
/// k-form, the sum over slots of composing one argument with N0.
PolyForm i_derivation(const PolyOneOne& N0, const PolyForm& w);

/// The commutator i_N0 d - d i_N0.
PolyForm d_n0(const PolyOneOne& N0, const PolyForm& w);

/// Bracket {f,g} = Lambda(df, dg).
MultiPoly poisson_bracket(const PolyBivector& lambda, const MultiPoly& f, const MultiPoly& g);

/// Jacobi defect {{f,g},h} + {{g,h},f} + {{h,f},g}.
MultiPoly poisson_jacobiator(const PolyBivector& lambda, const MultiPoly& f, const MultiPoly& g,
                             const MultiPoly& h);

/// Jacobi-defect evaluation over all monomial triples up to max_degree; the
/// defect is tensorial, so coordinate triples already decide the verdict.
CheckReport is_poisson(const PolyBivector& lambda, int max_degree = 2);

// map-form conversions shared by the Courant module
PolyForm form_apply(const PolyForm& omega2, const PolyVectorField& X);  // i_X Omega, degree 2

}  // namespace nij

#endif
