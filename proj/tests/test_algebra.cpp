#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nij/algebra.hpp"
#include "nij/courant_fd.hpp"
#include "nij/sweep.hpp"

using namespace nij;

namespace {

const Rational kPool[] = {Rational(0),  Rational(1),    Rational(-1),   Rational(2),
                          Rational(-2), Rational(1, 2), Rational(-1, 3)};

OneOneTensor random_tensor(std::mt19937& rng, int dim) {
  OneOneTensor n(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) n.at(i, j) = kPool[rng() % 7];
  return n;
}

Vec random_vec(std::mt19937& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v.x[i] = kPool[rng() % 7];
  return v;
}

RatMatrix random_invertible(std::mt19937& rng, int dim) {
  for (;;) {
    RatMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g.at(i, j) = kPool[rng() % 7];
    if (!determinant(g).is_zero()) return g;
  }
}

// verified Leibniz algebras at dims 2..4, with randomized isomorphic copies
BilinearOp random_leibniz_op(std::mt19937& rng, int dim) {
  BilinearOp base = catalogue::abelian(dim);
  switch (rng() % 4) {
    case 0: base = catalogue::abelian(dim); break;
    case 1:
      base = catalogue::solvable2();
      while (base.dim() < dim) base = catalogue::direct_sum(base, catalogue::abelian(1));
      break;
    case 2:
      base = catalogue::loday2();
      while (base.dim() < dim) base = catalogue::direct_sum(base, catalogue::abelian(1));
      break;
    case 3:
      if (dim >= 3) {
        base = catalogue::heisenberg3();
        while (base.dim() < dim) base = catalogue::direct_sum(base, catalogue::abelian(1));
      } else {
        base = catalogue::solvable2();
      }
      break;
  }
  return catalogue::conjugate(base, random_invertible(rng, dim));
}

}  // namespace

TEST_CASE("bilinear evaluation against structure constants") {
  BilinearOp op = catalogue::solvable2();  // [e1,e2] = e2
  Vec e1 = Vec::basis(2, 0), e2 = Vec::basis(2, 1);
  CHECK(apply(op, e1, e2) == e2);
  CHECK(apply(op, e2, e1) == -e2);
  CHECK(apply(op, Vec(2), e2).is_zero());   // 0 o Y = 0
  CHECK(apply(op, e1, e1).is_zero());       // no c[1][1][k] entries
  CHECK_THROWS_AS(apply(op, Vec(3), e2), DimensionError);
}

TEST_CASE("jacobi defect vanishes on the catalogue") {
  for (const BilinearOp& op : {catalogue::solvable2(), catalogue::loday2(), catalogue::abelian(2)}) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          CHECK(jacobi_defect(op, Vec::basis(2, i), Vec::basis(2, j), Vec::basis(2, k)).is_zero());
  }
  CHECK(is_leibniz(catalogue::heisenberg3()).pass);
}

TEST_CASE("brute-force search finds a genuinely non-Leibniz product") {
  // 2-dim ops with entries in {0,1,-1}; find one failing the Jacobi identity
  bool found = false;
  BilinearOp witness_op(2);
  for (unsigned mask = 0; mask < 6561 && !found; ++mask) {  // 3^8
    BilinearOp op(2);
    unsigned m = mask;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          int v = (int)(m % 3) - 1;
          m /= 3;
          op.c(i, j, k) = Rational(v);
        }
    if (!is_leibniz(op).pass) {
      found = true;
      witness_op = op;
    }
  }
  REQUIRE(found);
  CheckReport r = is_leibniz(witness_op);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  // the witness reproduces the discrepancy
  CHECK(r.witness->lhs != r.witness->rhs);
}

TEST_CASE("contraction limits: identity and zero tensors") {
  BilinearOp op = catalogue::heisenberg3();
  CHECK(contract(op, OneOneTensor::identity(3)) == op);
  BilinearOp zero = contract(op, OneOneTensor(3));
  CHECK(zero == catalogue::abelian(3));
}

TEST_CASE("contraction of the solvable algebra by a diagonal tensor") {
  BilinearOp op = catalogue::solvable2();
  OneOneTensor n(2);
  n.at(0, 0) = Rational(5);
  n.at(1, 1) = Rational(7);
  BilinearOp opn = contract(op, n);
  // e1 o_N e2 = (a+b) e2 - b e2 = a e2
  CHECK(opn.c(0, 1, 1) == Rational(5));
  CHECK(opn.c(0, 1, 0).is_zero());
  CHECK(opn.c(1, 0, 1) == Rational(-5));
}

TEST_CASE("torsion of scalar tensors vanishes") {
  BilinearOp op = catalogue::heisenberg3();
  CHECK(nijenhuis_torsion(op, OneOneTensor::identity(3)).is_zero());
  CHECK(nijenhuis_torsion(op, OneOneTensor::scalar(3, Rational(-7, 3))).is_zero());
  // diag(a,b) on the solvable algebra: T(e1,e2) = ab e2 - N(a e2) = 0
  OneOneTensor d(2);
  d.at(0, 0) = Rational(3);
  d.at(1, 1) = Rational(11);
  CHECK(nijenhuis_torsion(catalogue::solvable2(), d).is_zero());
}

TEST_CASE("torsion is bilinear") {
  std::mt19937 rng(5150);
  BilinearOp op = catalogue::heisenberg3();
  OneOneTensor n = random_tensor(rng, 3);
  BilinearOp opn = contract(op, n);
  auto torsion = [&](const Vec& u, const Vec& v) {
    return apply(op, n.apply(u), n.apply(v)) - n.apply(apply(opn, u, v));
  };
  for (int iter = 0; iter < 30; ++iter) {
    Vec x = random_vec(rng, 3), x2 = random_vec(rng, 3), y = random_vec(rng, 3);
    Rational a = kPool[rng() % 7];
    CHECK(torsion(a * x + x2, y) == a * torsion(x, y) + torsion(x2, y));
    CHECK(torsion(y, a * x + x2) == a * torsion(y, x) + torsion(y, x2));
  }
}

TEST_CASE("compatibility identity vanishes for Leibniz products") {
  std::mt19937 rng(314159);
  for (int iter = 0; iter < 25; ++iter) {
    int dim = 2 + iter % 3;
    BilinearOp op = random_leibniz_op(rng, dim);
    REQUIRE(is_leibniz(op).pass);
    OneOneTensor n = random_tensor(rng, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          CHECK(compatibility_defect(op, n, Vec::basis(dim, i), Vec::basis(dim, j),
                                     Vec::basis(dim, k))
                    .is_zero());
  }
  // abelian op: everything vanishes whatever the tensor
  std::mt19937 rng2(1);
  OneOneTensor n = random_tensor(rng2, 3);
  CHECK(compatibility_defect(catalogue::abelian(3), n, Vec::basis(3, 0), Vec::basis(3, 1),
                             Vec::basis(3, 2))
            .is_zero());
}

TEST_CASE("coboundary of the torsion equals the deformed Jacobi defect") {
  std::mt19937 rng(2718);
  for (int iter = 0; iter < 25; ++iter) {
    int dim = 2 + iter % 3;
    BilinearOp op = random_leibniz_op(rng, dim);
    OneOneTensor n = random_tensor(rng, dim);
    BilinearOp opn = contract(op, n);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          Vec lhs = jacobi_defect(opn, Vec::basis(dim, i), Vec::basis(dim, j), Vec::basis(dim, k));
          Vec rhs = leibniz_coboundary_on_torsion(op, n, Vec::basis(dim, i), Vec::basis(dim, j),
                                                  Vec::basis(dim, k));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("coboundary table matches per-triple evaluation") {
  std::mt19937 rng(404);
  BilinearOp op = catalogue::loday2();
  OneOneTensor n = random_tensor(rng, 2);
  TrilinearMap t = coboundary_table(op, n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(t.at(i, j, k) == leibniz_coboundary_on_torsion(op, n, Vec::basis(2, i),
                                                             Vec::basis(2, j), Vec::basis(2, k)));
}

TEST_CASE("classification: identity is nijenhuis") {
  Classification c = classify_tensor(catalogue::heisenberg3(), OneOneTensor::identity(3));
  CHECK(c.cls == TensorClass::nijenhuis);
  CHECK(c.report.pass);
}

TEST_CASE("classification: weak tensor found by search on the bialgebra double") {
  LieBialgebra b{2, catalogue::solvable2(), catalogue::abelian(2)};
  CourantStructure d = drinfeld_double(b);
  // search block-diagonal tensors diag(a, b, -a, -b) with small entries
  bool found_weak = false;
  OneOneTensor weak(4);
  for (int a = -2; a <= 2 && !found_weak; ++a)
    for (int bb = -2; bb <= 2 && !found_weak; ++bb) {
      OneOneTensor n(4);
      n.at(0, 0) = Rational(a);
      n.at(1, 1) = Rational(bb);
      n.at(2, 2) = Rational(-a);
      n.at(3, 3) = Rational(-bb);
      Classification c = classify_tensor(d.op, n);
      if (c.cls == TensorClass::weak_nijenhuis) {
        found_weak = true;
        weak = n;
      }
    }
  REQUIRE(found_weak);
  Classification c = classify_tensor(d.op, weak);
  CHECK(c.report.pass);
  CHECK(c.report.witness.has_value());  // records the nonzero-torsion pair
  // weak implies the contraction is Leibniz
  CHECK(is_leibniz(contract(d.op, weak)).pass);
}

TEST_CASE("classification: a tensor with nonzero torsion coboundary") {
  BilinearOp op = catalogue::loday2();
  OneOneTensor n(2);
  n.at(0, 1) = Rational(1);  // nilpotent single entry
  Classification c = classify_tensor(op, n);
  CHECK(c.cls == TensorClass::neither);
  CHECK_FALSE(c.report.pass);
  REQUIRE(c.report.witness.has_value());
  CHECK_FALSE(is_leibniz(contract(op, n)).pass);
}

TEST_CASE("classification requires a Leibniz product") {
  BilinearOp bad(2);
  bad.c(0, 1, 0) = Rational(1);
  bad.c(0, 0, 1) = Rational(1);
  bad.c(1, 1, 0) = Rational(1);  // fails the Jacobi identity
  REQUIRE_FALSE(is_leibniz(bad).pass);
  CHECK_THROWS_AS(classify_tensor(bad, OneOneTensor::identity(2)), PreconditionError);
}

TEST_CASE("contracted product stays Leibniz exactly when the class is not neither") {
  std::mt19937 rng(60902);
  int pos = 0, neg = 0;
  for (int iter = 0; iter < 40; ++iter) {
    int dim = 2 + iter % 2;
    BilinearOp op = random_leibniz_op(rng, dim);
    OneOneTensor n = random_tensor(rng, dim);
    Classification c = classify_tensor(op, n);
    bool leib = is_leibniz(contract(op, n)).pass;
    CHECK(leib == (c.cls != TensorClass::neither));
    (c.cls != TensorClass::neither ? pos : neg)++;
  }
  CHECK(pos > 0);  // both directions must actually occur
  CHECK(neg > 0);
}

TEST_CASE("pencil of a contraction with the original product stays Leibniz") {
  std::mt19937 rng(11);
  const Rational lambdas[] = {Rational(-2), Rational(-1), Rational(1, 2), Rational(1),
                              Rational(3)};
  int tested = 0;
  for (int iter = 0; iter < 30 && tested < 8; ++iter) {
    int dim = 2 + iter % 2;
    BilinearOp op = random_leibniz_op(rng, dim);
    OneOneTensor n = random_tensor(rng, dim);
    Classification c = classify_tensor(op, n);
    if (c.cls == TensorClass::neither) continue;
    ++tested;
    BilinearOp opn = contract(op, n);
    for (const Rational& l : lambdas)
      CHECK(is_leibniz(BilinearOp::pencil(Rational(1), opn, l, op)).pass);
  }
  CHECK(tested > 0);
}

TEST_CASE("degenerate carriers pass vacuously") {
  CHECK(is_leibniz(catalogue::abelian(0)).pass);
  CHECK(is_leibniz(catalogue::abelian(1)).pass);
  BilinearOp dim1(1);
  dim1.c(0, 0, 0) = Rational(0);
  Classification c = classify_tensor(dim1, OneOneTensor::identity(1));
  CHECK(c.cls == TensorClass::nijenhuis);
  CHECK(nijenhuis_torsion(catalogue::abelian(0), OneOneTensor(0)).is_zero());
}

TEST_CASE("witnesses are identical under serial and parallel sweeps") {
  std::mt19937 rng(71);
  bool saved = parallel_sweeps_enabled();
  for (int iter = 0; iter < 15; ++iter) {
    int dim = 3 + iter % 2;
    BilinearOp op(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) op.c(i, j, k) = kPool[rng() % 7];
    set_parallel_sweeps(false);
    CheckReport serial = is_leibniz(op);
    set_parallel_sweeps(true);
    CheckReport parallel = is_leibniz(op);
    CHECK(serial.pass == parallel.pass);
    CHECK(serial.witness.has_value() == parallel.witness.has_value());
    if (serial.witness) {
      CHECK(serial.witness->inputs == parallel.witness->inputs);
      CHECK(serial.witness->lhs == parallel.witness->lhs);
    }
  }
  set_parallel_sweeps(saved);
}

TEST_CASE("failure witness from is_leibniz re-evaluates to the reported values") {
  BilinearOp bad(2);
  bad.c(0, 0, 1) = Rational(1);
  bad.c(1, 1, 0) = Rational(1);
  bad.c(0, 1, 0) = Rational(1);
  CheckReport r = is_leibniz(bad);
  if (!r.pass) {
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->identity == "(XoY)oZ = Xo(YoZ) - Yo(XoZ)");
  }
}
