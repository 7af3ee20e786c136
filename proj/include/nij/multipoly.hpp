#ifndef NIJ_MULTIPOLY_HPP
#define NIJ_MULTIPOLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nij/rational.hpp"

namespace nij {

/// Exponent multi-index for a monomial x1^a1 ... xn^an.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded-lexicographic order: first by total degree, ties broken
/// lexicographically on the exponent vector.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients in canonical
/// form: the term map never stores a zero coefficient, so two polynomials
/// are equal iff their maps are equal.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit MultiPoly(int num_vars = 0) : n_(num_vars) {}

  static MultiPoly zero(int n) { return MultiPoly(n); }
  static MultiPoly constant(int n, const Rational& c);
  static MultiPoly var(int n, int i);                    // x_{i+1}, 0-based i
  static MultiPoly monomial(int n, const Monomial& m, const Rational& c);

  int num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  unsigned degree() const;          // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable var_index (0-based).
  MultiPoly partial(int var_index) const;

  /// Serialization in the grammar term ("+"|"-" term)*,
  /// term := coeff("/"denom)? ("*"? var("^"exp)?)*, vars x1..xn.
  std::string str() const;
  static MultiPoly parse(std::string_view s, int num_vars);

  void add_term(const Monomial& m, const Rational& c);  // accumulates, keeps canonical form

 private:
  void check_same_space(const MultiPoly& o) const;

  int n_;
  TermMap terms_;
};

}  // namespace nij

#endif
