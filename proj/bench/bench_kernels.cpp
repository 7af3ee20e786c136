/* Benchmark comparing the serial reference kernel against the OpenMP kernel
 * on the two heaviest sweep shapes: basis-triple Jacobi checks on a larger
 * structure-constant algebra, and a polynomial family torsion sweep.
 */

#include <chrono>
#include <cstdio>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "nij/algebra.hpp"
#include "nij/courant_tm.hpp"
#include "nij/sweep.hpp"

using namespace nij;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

BilinearOp big_leibniz_op(int copies) {
  BilinearOp op = catalogue::heisenberg3();
  for (int i = 1; i < copies; ++i) op = catalogue::direct_sum(op, catalogue::heisenberg3());
  // conjugate by an invertible matrix so the constants are dense
  int d = op.dim();
  RatMatrix g = RatMatrix::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) g.at(i, j) = Rational((i * 7 + j * 3) % 5 - 2, 3);
  if (determinant(g).is_zero()) g = RatMatrix::identity(d);
  return catalogue::conjugate(op, g);
}

template <class Fn>
double time_run(Fn&& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return ms_since(t0) / reps;
}

}  // namespace

int main() {
#if defined(_OPENMP)
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run the serial kernel\n");
#endif

  // kernel 1: Jacobi sweep over dim^3 basis triples
  {
    BilinearOp op = big_leibniz_op(5);  // dim 15, 3375 triples
    int d = op.dim();
    std::size_t count = (std::size_t)d * d * d;
    auto pred = [&](std::size_t t) {
      int k = (int)(t % d), j = (int)((t / d) % d), i = (int)(t / ((std::size_t)d * d));
      return jacobi_defect(op, Vec::basis(d, i), Vec::basis(d, j), Vec::basis(d, k)).is_zero();
    };
    double serial = time_run([&] { (void)first_failure_serial(count, pred); }, 3);
    double parallel = time_run([&] { (void)first_failure_parallel(count, pred); }, 3);
    std::printf("jacobi sweep        dim=%2d  triples=%6zu  serial %8.2f ms  parallel %8.2f ms  speedup %.2fx\n",
                d, count, serial, parallel, serial / parallel);
    if (first_failure_serial(count, pred) != first_failure_parallel(count, pred)) {
      std::printf("MISMATCH between kernels\n");
      return 1;
    }
  }

  // kernel 2: Courant torsion sweep over polynomial family pairs; the
  // complex-structure lift is torsion-free, so both kernels scan every pair
  {
    TestFamily family(2, 3);
    PolyOneOne n0(2);
    n0.at(0, 1) = MultiPoly::constant(2, Rational(-1));
    n0.at(1, 0) = MultiPoly::constant(2, Rational(1));
    CourantTensor N = CourantTensor::diagonal(n0);
    const auto& S = family.sections();
    std::size_t w = S.size();
    auto pred = [&](std::size_t idx) {
      return courant_torsion(S[idx / w], S[idx % w], N).is_zero();
    };
    double serial = time_run([&] { (void)first_failure_serial(w * w, pred); }, 3);
    double parallel = time_run([&] { (void)first_failure_parallel(w * w, pred); }, 3);
    std::printf("torsion sweep       n=2 D=3 pairs=%6zu  serial %8.2f ms  parallel %8.2f ms  speedup %.2fx\n",
                w * w, serial, parallel, serial / parallel);
    if (first_failure_serial(w * w, pred) != first_failure_parallel(w * w, pred)) {
      std::printf("MISMATCH between kernels\n");
      return 1;
    }
  }
  return 0;
}
