#ifndef NIJ_LINALG_HPP
#define NIJ_LINALG_HPP

#include <optional>
#include <vector>

#include "nij/rational.hpp"

namespace nij {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix zero(int n) { return RatMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  bool is_zero() const;

  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);  // nullopt when singular
int rank(RatMatrix m);

/// Is m equal to lambda * I for some scalar lambda? Returns lambda if so.
std::optional<Rational> scalar_multiple_of_identity(const RatMatrix& m);

/// Least-squares-free exact solve: does the column span of basis (each row a
/// vector) contain v? Used for subspace membership.
bool in_row_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

}  // namespace nij

#endif
