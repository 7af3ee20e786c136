/* algebra.cpp
 *
 * Finite-dimensional Leibniz algebra engine: structure-constant products,
 * contracted products, Nijenhuis torsion, the torsion-coboundary operator,
 * and the exhaustive basis-tuple checks built on the sweep kernels.
 */

#include "nij/algebra.hpp"

#include <sstream>

#include "nij/sweep.hpp"

namespace nij {

Vec Vec::basis(int d, int i) {
  Vec v(d);
  v.x[i] = Rational(1);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Vec Vec::operator-() const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) r.x[i] = -x[i];
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) throw DimensionError("Vec: dimension mismatch");
  Vec r(a.dim);
  for (int i = 0; i < a.dim; ++i) r.x[i] = a.x[i] + b.x[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) throw DimensionError("Vec: dimension mismatch");
  Vec r(a.dim);
  for (int i = 0; i < a.dim; ++i) r.x[i] = a.x[i] - b.x[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.dim);
  for (int i = 0; i < v.dim; ++i) r.x[i] = c * v.x[i];
  return r;
}

std::string Vec::str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < dim; ++i) {
    if (i) out << ", ";
    out << x[i].str();
  }
  out << ")";
  return out.str();
}

BilinearOp BilinearOp::pencil(const Rational& a, const BilinearOp& p, const Rational& b,
                              const BilinearOp& q) {
  if (p.dim_ != q.dim_) throw DimensionError("BilinearOp::pencil: dimension mismatch");
  BilinearOp r(p.dim_);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a * p.c_[i] + b * q.c_[i];
  return r;
}

OneOneTensor::OneOneTensor(RatMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("OneOneTensor: matrix not square");
}

OneOneTensor OneOneTensor::scalar(int dim, const Rational& lambda) {
  OneOneTensor n(dim);
  for (int i = 0; i < dim; ++i) n.at(i, i) = lambda;
  return n;
}

Vec OneOneTensor::apply(const Vec& v) const {
  if (v.dim != dim()) throw DimensionError("OneOneTensor::apply: dimension mismatch");
  Vec r(dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (m_.at(i, j).is_zero() || v.x[j].is_zero()) continue;
      r.x[i] += m_.at(i, j) * v.x[j];
    }
  return r;
}

bool BilinearTable::is_zero() const {
  for (const auto& v : t)
    if (!v.is_zero()) return false;
  return true;
}

Vec apply(const BilinearOp& op, const Vec& X, const Vec& Y) {
  if (X.dim != op.dim() || Y.dim != op.dim())
    throw DimensionError("BilinearOp apply: dimension mismatch");
  Vec r(op.dim());
  for (int i = 0; i < op.dim(); ++i) {
    if (X.x[i].is_zero()) continue;
    for (int j = 0; j < op.dim(); ++j) {
      if (Y.x[j].is_zero()) continue;
      Rational xy = X.x[i] * Y.x[j];
      for (int k = 0; k < op.dim(); ++k) {
        if (op.c(i, j, k).is_zero()) continue;
        r.x[k] += xy * op.c(i, j, k);
      }
    }
  }
  return r;
}

Vec jacobi_defect(const BilinearOp& op, const Vec& X, const Vec& Y, const Vec& Z) {
  return apply(op, apply(op, X, Y), Z) - apply(op, X, apply(op, Y, Z)) +
         apply(op, Y, apply(op, X, Z));
}

namespace {

void decode3(std::size_t t, int dim, int& i, int& j, int& k) {
  k = (int)(t % dim);
  j = (int)((t / dim) % dim);
  i = (int)(t / ((size_t)dim * dim));
}

std::string triple_str(int i, int j, int k) {
  std::ostringstream out;
  out << "(e" << i + 1 << ", e" << j + 1 << ", e" << k + 1 << ")";
  return out.str();
}

}  // namespace

CheckReport is_leibniz(const BilinearOp& op) {
  int dim = op.dim();
  std::size_t count = (size_t)dim * dim * dim;
  std::size_t bad = first_failure(count, [&](std::size_t t) {
    int i, j, k;
    decode3(t, dim, i, j, k);
    return jacobi_defect(op, Vec::basis(dim, i), Vec::basis(dim, j), Vec::basis(dim, k)).is_zero();
  });
  if (bad == sweep_npos)
    return CheckReport::ok("Jacobi identity verified on all " + std::to_string(count) +
                           " basis triples");
  int i, j, k;
  decode3(bad, dim, i, j, k);
  Vec lhs = apply(op, apply(op, Vec::basis(dim, i), Vec::basis(dim, j)), Vec::basis(dim, k));
  Vec rhs = apply(op, Vec::basis(dim, i), apply(op, Vec::basis(dim, j), Vec::basis(dim, k))) -
            apply(op, Vec::basis(dim, j), apply(op, Vec::basis(dim, i), Vec::basis(dim, k)));
  return CheckReport::fail({"(XoY)oZ = Xo(YoZ) - Yo(XoZ)", triple_str(i, j, k), lhs.str(),
                            rhs.str()});
}

BilinearOp contract(const BilinearOp& op, const OneOneTensor& N) {
  int dim = op.dim();
  if (N.dim() != dim) throw DimensionError("contract: dimension mismatch");
  BilinearOp r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec ei = Vec::basis(dim, i), ej = Vec::basis(dim, j);
      Vec v = apply(op, N.apply(ei), ej) + apply(op, ei, N.apply(ej)) - N.apply(apply(op, ei, ej));
      for (int k = 0; k < dim; ++k) r.c(i, j, k) = v.x[k];
    }
  return r;
}

BilinearTable nijenhuis_torsion(const BilinearOp& op, const OneOneTensor& N) {
  int dim = op.dim();
  if (N.dim() != dim) throw DimensionError("nijenhuis_torsion: dimension mismatch");
  BilinearOp opn = contract(op, N);
  BilinearTable t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec ei = Vec::basis(dim, i), ej = Vec::basis(dim, j);
      t.at(i, j) = apply(op, N.apply(ei), N.apply(ej)) - N.apply(apply(opn, ei, ej));
    }
  return t;
}

Vec compatibility_defect(const BilinearOp& op, const OneOneTensor& N, const Vec& X, const Vec& Y,
                         const Vec& Z) {
  BilinearOp opn = contract(op, N);
  return apply(op, apply(opn, X, Y), Z) - apply(opn, X, apply(op, Y, Z)) +
         apply(opn, Y, apply(op, X, Z)) + apply(opn, apply(op, X, Y), Z) -
         apply(op, X, apply(opn, Y, Z)) + apply(op, Y, apply(opn, X, Z));
}

namespace {

Vec torsion_value(const BilinearOp& op, const BilinearOp& opn, const OneOneTensor& N, const Vec& U,
                  const Vec& V) {
  return apply(op, N.apply(U), N.apply(V)) - N.apply(apply(opn, U, V));
}

}  // namespace

Vec leibniz_coboundary_on_torsion(const BilinearOp& op, const OneOneTensor& N, const Vec& X,
                                  const Vec& Y, const Vec& Z) {
  BilinearOp opn = contract(op, N);
  auto T = [&](const Vec& U, const Vec& V) { return torsion_value(op, opn, N, U, V); };
  return T(X, apply(op, Y, Z)) - T(apply(op, X, Y), Z) - T(Y, apply(op, X, Z)) -
         apply(op, T(X, Y), Z) + apply(op, X, T(Y, Z)) - apply(op, Y, T(X, Z));
}

TrilinearMap coboundary_table(const BilinearOp& op, const OneOneTensor& N) {
  int dim = op.dim();
  TrilinearMap t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        t.at(i, j, k) = leibniz_coboundary_on_torsion(op, N, Vec::basis(dim, i),
                                                      Vec::basis(dim, j), Vec::basis(dim, k));
  return t;
}

Classification classify_tensor(const BilinearOp& op, const OneOneTensor& N) {
  CheckReport leib = is_leibniz(op);
  if (!leib.pass)
    throw PreconditionError("classify_tensor: op is not Leibniz (failing triple " +
                            leib.witness->inputs + ")");
  int dim = op.dim();
  BilinearTable torsion = nijenhuis_torsion(op, N);
  if (torsion.is_zero()) {
    return {TensorClass::nijenhuis,
            CheckReport::ok("torsion zero on all " + std::to_string((size_t)dim * dim) +
                            " basis pairs")};
  }
  // first nonzero torsion pair, lexicographic
  int ti = -1, tj = -1;
  for (int i = 0; i < dim && ti < 0; ++i)
    for (int j = 0; j < dim; ++j)
      if (!torsion.at(i, j).is_zero()) {
        ti = i;
        tj = j;
        break;
      }
  std::size_t count = (size_t)dim * dim * dim;
  std::size_t bad = first_failure(count, [&](std::size_t t) {
    int i, j, k;
    decode3(t, dim, i, j, k);
    return leibniz_coboundary_on_torsion(op, N, Vec::basis(dim, i), Vec::basis(dim, j),
                                         Vec::basis(dim, k))
        .is_zero();
  });
  std::ostringstream tw;
  tw << "torsion nonzero at (e" << ti + 1 << ", e" << tj + 1 << ") = " << torsion.at(ti, tj).str();
  if (bad == sweep_npos) {
    CheckReport r = CheckReport::ok("torsion coboundary zero on all " + std::to_string(count) +
                                    " basis triples; " + tw.str());
    r.witness = Witness{"T_N != 0 (not strictly Nijenhuis)", "(e" + std::to_string(ti + 1) +
                        ", e" + std::to_string(tj + 1) + ")", torsion.at(ti, tj).str(), "0"};
    return {TensorClass::weak_nijenhuis, r};
  }
  int i, j, k;
  decode3(bad, dim, i, j, k);
  Vec d = leibniz_coboundary_on_torsion(op, N, Vec::basis(dim, i), Vec::basis(dim, j),
                                        Vec::basis(dim, k));
  return {TensorClass::neither,
          CheckReport::fail({"(dT_N)(X,Y,Z) = 0", triple_str(i, j, k), d.str(), "0"}, tw.str())};
}

std::string tensor_class_name(TensorClass c) {
  switch (c) {
    case TensorClass::nijenhuis: return "nijenhuis";
    case TensorClass::weak_nijenhuis: return "weak_nijenhuis";
    case TensorClass::neither: return "neither";
  }
  return "?";
}

namespace catalogue {

BilinearOp abelian(int dim) { return BilinearOp(dim); }

BilinearOp solvable2() {
  BilinearOp op(2);
  op.c(0, 1, 1) = Rational(1);
  op.c(1, 0, 1) = Rational(-1);
  return op;
}

BilinearOp heisenberg3() {
  BilinearOp op(3);
  op.c(0, 1, 2) = Rational(1);
  op.c(1, 0, 2) = Rational(-1);
  return op;
}

BilinearOp loday2() {
  BilinearOp op(2);
  op.c(0, 0, 1) = Rational(1);
  return op;
}

BilinearOp direct_sum(const BilinearOp& a, const BilinearOp& b) {
  int da = a.dim(), db = b.dim();
  BilinearOp r(da + db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k) r.c(i, j, k) = a.c(i, j, k);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < db; ++k) r.c(da + i, da + j, da + k) = b.c(i, j, k);
  return r;
}

BilinearOp conjugate(const BilinearOp& op, const RatMatrix& g) {
  int dim = op.dim();
  if (g.rows() != dim || g.cols() != dim) throw DimensionError("conjugate: shape mismatch");
  auto gi = inverse(g);
  if (!gi) throw PreconditionError("conjugate: matrix not invertible");
  OneOneTensor G(g), Gi(*gi);
  BilinearOp r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec v = Gi.apply(apply(op, G.apply(Vec::basis(dim, i)), G.apply(Vec::basis(dim, j))));
      for (int k = 0; k < dim; ++k) r.c(i, j, k) = v.x[k];
    }
  return r;
}

}  // namespace catalogue

}  // namespace nij
