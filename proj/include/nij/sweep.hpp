#ifndef NIJ_SWEEP_HPP
#define NIJ_SWEEP_HPP

#include <cstddef>

namespace nij {

/// Index returned by the sweep kernels when every element passes.
inline constexpr std::size_t sweep_npos = static_cast<std::size_t>(-1);

/// Process-wide switch between the OpenMP kernel and the serial reference.
/// Defaults to parallel when compiled with OpenMP.
void set_parallel_sweeps(bool on);
bool parallel_sweeps_enabled();

/// Serial reference kernel: least index i in [0,count) with !ok(i), early exit.
template <class Pred>
std::size_t first_failure_serial(std::size_t count, Pred&& ok) {
  for (std::size_t i = 0; i < count; ++i)
    if (!ok(i)) return i;
  return sweep_npos;
}

#if defined(_OPENMP)
/// OpenMP kernel. The predicate must be pure; the min-reduction makes the
/// reported witness the least failing index regardless of schedule.
template <class Pred>
std::size_t first_failure_parallel(std::size_t count, Pred&& ok) {
  unsigned long long best = static_cast<unsigned long long>(count);
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    if (static_cast<unsigned long long>(i) < best && !ok(static_cast<std::size_t>(i)))
      best = static_cast<unsigned long long>(i);
  }
  return best == static_cast<unsigned long long>(count) ? sweep_npos
                                                        : static_cast<std::size_t>(best);
}
#else
template <class Pred>
std::size_t first_failure_parallel(std::size_t count, Pred&& ok) {
  return first_failure_serial(count, static_cast<Pred&&>(ok));
}
#endif

/// Dispatching kernel used by all batch checks. Small sweeps stay serial;
/// the grain keeps thread startup off the dim<=3 hot path.
template <class Pred>
std::size_t first_failure(std::size_t count, Pred&& ok) {
  constexpr std::size_t grain = 64;
  if (parallel_sweeps_enabled() && count >= grain)
    return first_failure_parallel(count, static_cast<Pred&&>(ok));
  return first_failure_serial(count, static_cast<Pred&&>(ok));
}

inline bool& parallel_sweeps_flag() {
#if defined(_OPENMP)
  static bool flag = true;
#else
  static bool flag = false;
#endif
  return flag;
}

inline void set_parallel_sweeps(bool on) { parallel_sweeps_flag() = on; }
inline bool parallel_sweeps_enabled() { return parallel_sweeps_flag(); }

}  // namespace nij

#endif
