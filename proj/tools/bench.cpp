// Compares the OpenMP kernels against the serial reference on the heavy
// exact-arithmetic workloads: orthogonality validation, tensor-product
// integrality, and fake-degree batches.

#include <chrono>
#include <iostream>

#include "weylcs/chartab.hpp"
#include "weylcs/parallel.hpp"
#include "weylcs/springer.hpp"

using namespace weylcs;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  auto d8 = classical_table('D', 8);
  CharacterTable e7 = table_for_type("E7");
  struct Task {
    const char* name;
    std::function<void()> run;
  };
  std::vector<Task> tasks = {
      {"validate_table(W(E7))", [&] { validate_table(e7); }},
      {"tensor integrality W(D8)", [&] { validate_tensor_integrality(d8); }},
      {"b-invariants W(E7)", [&] { CharacterTable t = e7; compute_b_invariants(t); }},
  };
  std::cout << "kernel, serial ms, parallel ms, speedup\n";
  for (auto& t : tasks) {
    t.run();  // warm caches and allocations once
    set_parallel_enabled(false);
    double serial = std::min(time_ms(t.run), time_ms(t.run));
    set_parallel_enabled(true);
    double parallel = std::min(time_ms(t.run), time_ms(t.run));
    set_parallel_enabled(true);
    std::cout << t.name << ", " << serial << ", " << parallel << ", "
              << (parallel > 0 ? serial / parallel : 0) << "\n";
  }
  return 0;
}
