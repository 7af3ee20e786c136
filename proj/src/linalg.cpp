#include "nij/linalg.hpp"

namespace nij {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RatMatrix: shape mismatch");
  RatMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RatMatrix: shape mismatch");
  RatMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("RatMatrix: product shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RatMatrix operator*(const Rational& c, const RatMatrix& m) {
  RatMatrix r(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: not square");
  int n = m.rows();
  RatMatrix a = m;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rational inv_p = Rational(1) / a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col) * inv_p;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: not square");
  int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = Rational(1) / a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= p;
      inv.at(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int rank(RatMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational p = Rational(1) / m.at(r, col);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) * p;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<Rational> scalar_multiple_of_identity(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Rational(0);
  Rational lambda = m.at(0, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j && m.at(i, j) != lambda) return std::nullopt;
      if (i != j && !m.at(i, j).is_zero()) return std::nullopt;
    }
  return lambda;
}

bool in_row_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  int n = (int)v.size();
  int k = (int)basis.size();
  RatMatrix with(k + 1, n), without(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      with.at(i, j) = basis[i][j];
      without.at(i, j) = basis[i][j];
    }
  for (int j = 0; j < n; ++j) with.at(k, j) = v[j];
  return rank(with) == rank(without);
}

}  // namespace nij
