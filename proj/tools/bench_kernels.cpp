// Times the OpenMP kernels against their serial reference implementations
// and verifies they produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "blockscope/parallel.hpp"
#include "blockscope/perm.hpp"
#include "blockscope/weil.hpp"

using namespace blockscope;

namespace {

double time_of(const std::function<void()>& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-24s %10.4f ms %10.4f ms  x%5.2f  %s\n", name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 4;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  set_thread_budget(threads);
  std::printf("kernel benchmark, %d threads, %d reps\n", threads, reps);
  std::printf("%-24s %13s %13s %7s\n", "", "serial", "openmp", "speedup");

  // SL(2,8) on the projective line: 504 elements, 9 classes
  Group g = psl2_group(8);
  {
    auto a = g.class_constants_serial();
    auto b = g.class_constants();
    double ts = time_of([&] { g.class_constants_serial(); }, reps);
    double tp = time_of([&] { g.class_constants(); }, reps);
    row("class constants 504", ts, tp, a == b);
  }
  {
    // S7: 5040 elements, 15 classes
    Group s7 = group_from_generators(7, {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}});
    auto a = s7.class_constants_serial();
    auto b = s7.class_constants();
    double ts = time_of([&] { s7.class_constants_serial(); }, reps);
    double tp = time_of([&] { s7.class_constants(); }, reps);
    row("class constants 5040", ts, tp, a == b);
  }
  {
    Subgroup P = sylow_subgroup(g, 3);
    auto a = normalizer_serial(g, P);
    auto b = normalizer(g, P);
    double ts = time_of([&] { normalizer_serial(g, P); }, reps);
    double tp = time_of([&] { normalizer(g, P); }, reps);
    row("normalizer scan", ts, tp, a.elems == b.elems);
  }
  {
    int x = -1;
    for (long i = 0; i < g.order(); ++i)
      if (g.element_order((int)i) == 9) {
        x = (int)i;
        break;
      }
    auto a = centralizer_serial(g, {x});
    auto b = centralizer(g, {x});
    double ts = time_of([&] { centralizer_serial(g, {x}); }, reps);
    double tp = time_of([&] { centralizer(g, {x}); }, reps);
    row("centralizer scan", ts, tp, a.elems == b.elems);
  }
  {
    UnitaryGroup U = gu_group(3, 2);
    auto a = weil_values_serial(U, 1);
    auto b = weil_values(U, 1);
    bool eq = true;
    for (size_t i = 0; i < a.size(); ++i) eq = eq && a[i] == b[i];
    double ts = time_of([&] { weil_values_serial(U, 1); }, reps);
    double tp = time_of([&] { weil_values(U, 1); }, reps);
    row("weil values GU3(2)", ts, tp, eq);
  }
  return 0;
}
