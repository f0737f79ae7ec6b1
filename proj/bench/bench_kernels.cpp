// Serial reference against the OpenMP kernels on workloads taken from the
// law checker and the automaton simulator.
#include <chrono>
#include <cstdio>
#include <random>

#include "barrlab/core/monad.hpp"
#include "barrlab/kernels.hpp"
#include "barrlab/series/series.hpp"

using namespace barrlab;

namespace {

template <class Fn>
double millis(Fn&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.2f %10.2f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", kernels::num_threads());
  std::printf("%-34s %10s %10s %9s\n", "workload", "serial ms", "omp ms", "speedup");

  // associativity of the powerset monad at |X| = 2 over M^3 X
  const auto pw = make_builtin_monad("powerset");
  const Card n = 2;
  const Card mx = monad_size(*pw, n);
  const Card mmx = monad_size(*pw, mx);
  const Card count = monad_size(*pw, mmx);
  const Arrow mult{mmx, mx, [&](Element t) { return pw->mult(n, t); }};
  auto assoc = [&](Element w) {
    return pw->mult(n, pw->map(mult, w)) != pw->mult(n, pw->mult(mx, w));
  };
  std::optional<Element> a, b;
  const double s1 = millis([&] { a = kernels::serial::first_violation(count, assoc); });
  const double p1 = millis([&] { b = kernels::parallel::first_violation(count, assoc); });
  row("associativity powerset, |X| = 2", s1, p1);
  if (a != b) std::printf("  MISMATCH\n");

  // table materialization of the same multiplication
  std::vector<Element> ta, tb;
  const double s2 = millis([&] { ta = kernels::serial::tabulate(count, [&](Element w) { return pw->mult(mx, w); }); });
  const double p2 = millis([&] { tb = kernels::parallel::tabulate(count, [&](Element w) { return pw->mult(mx, w); }); });
  row("tabulate m_{MX} for powerset", s2, p2);
  if (ta != tb) std::printf("  MISMATCH\n");

  // behavior of a random 64-state Boolean automaton on words of length < 16
  std::mt19937_64 rng(7);
  MooreAutomaton aut{Semiring::boolean(), FinSet::canonical(64), FinSet::labelled("A", {"a", "b"}),
                     {}, {}};
  std::uniform_int_distribution<Element> state(0, 63), bit(0, 1);
  for (Element s = 0; s < 64; ++s) {
    aut.output.push_back(bit(rng));
    aut.step.push_back({state(rng), state(rng)});
  }
  TruncatedSeries fa, fb;
  const double s3 = millis([&] { fa = serial::behavior(aut, 0, 16); });
  const double p3 = millis([&] { fb = behavior(aut, 0, 16); });
  row("behavior, 2^16 - 1 words", s3, p3);
  if (!(fa == fb)) std::printf("  MISMATCH\n");
  return 0;
}
