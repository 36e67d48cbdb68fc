// Compares the serial reference scan against the OpenMP pairwise kernel on a
// range of constructed codes and cross-checks that both agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "cdc/construction.hpp"
#include "cdc/verify.hpp"

using namespace cdc;

namespace {

template <typename F>
double time_once(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void run_case(const std::string& name, const SubspaceCode& code) {
  VerifyReport serial, parallel;
  double ts = time_once([&] { serial = verify_code_serial(code); });
  double tp = time_once([&] { parallel = verify_code(code); });
  bool agree = serial.min_distance == parallel.min_distance &&
               serial.witness == parallel.witness;
  std::printf("%-28s N=%6zu pairs=%10llu  serial %8.3fs  omp %8.3fs  x%.2f  %s\n",
              name.c_str(), code.words.size(),
              static_cast<unsigned long long>(serial.pairs_checked), ts, tp,
              tp > 0 ? ts / tp : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  std::printf("threads: %d\n", omp_get_max_threads());

  run_case("lifted gabidulin (7,256)", lift(gabidulin(2, 3, 4, 2)));
  run_case("improved linkage (7,265)", best_linkage_construct(2, 7, 4, 3));
  run_case("spread (2,12,2)", spread_construct(2, 12, 2));
  if (scale >= 1) run_case("spread (2,14,2)", spread_construct(2, 14, 2));
  if (scale >= 2) run_case("spread (3,10,2)", spread_construct(3, 10, 2));
  if (scale >= 2)
    run_case("linkage (2,9,4,3)", best_linkage_construct(2, 9, 4, 3));
  return 0;
}
