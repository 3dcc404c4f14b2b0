#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockscope {

// Thread budget for the OpenMP kernels and the verification fan-out.
// 1 (the default) keeps every loop on the calling thread.
inline int& thread_budget() {
  static int n = 1;
  return n;
}

inline void set_thread_budget(int n) {
  thread_budget() = n < 1 ? 1 : n;
#ifdef _OPENMP
  omp_set_num_threads(thread_budget());
#endif
}

}  // namespace blockscope
