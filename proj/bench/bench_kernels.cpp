// Copyright 2026 porac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial-reference vs OpenMP timings for the compute-heavy kernels. Results
// of both paths are asserted identical before timing is reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "porac/quantum.hpp"
#include "porac/search.hpp"
#include "porac/seesaw.hpp"

using namespace porac;

namespace {

double time_call(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-38s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  results %s\n", name.c_str(),
              serial_s, parallel_s, serial_s / parallel_s, equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both paths run the serial kernel\n");
#endif

  {
    const Game game(3, 3);
    SearchResult serial_res, parallel_res;
    const double ts = time_call([&] {
      serial_res = search_po_deterministic(game, SearchMode::exhaustive, 0, 0, Exec::serial);
    });
    const double tp = time_call([&] {
      parallel_res = search_po_deterministic(game, SearchMode::exhaustive, 0, 0, Exec::parallel);
    });
    report("exhaustive search (3,3)", ts, tp,
           serial_res.value == parallel_res.value &&
               serial_res.best.encode == parallel_res.best.encode);
  }

  {
    const Game game(4, 4);
    SearchResult serial_res, parallel_res;
    const double ts = time_call([&] {
      serial_res = search_po_deterministic(game, SearchMode::local, 400000, 11, Exec::serial);
    });
    const double tp = time_call([&] {
      parallel_res = search_po_deterministic(game, SearchMode::local, 400000, 11, Exec::parallel);
    });
    report("local search (4,4), 4e5 proposals", ts, tp,
           serial_res.value == parallel_res.value &&
               serial_res.best.encode == parallel_res.best.encode);
  }

  {
    SeesawOptions serial_opt;
    serial_opt.restarts = 24;
    serial_opt.max_iter = 200;
    serial_opt.seed = 5;
    serial_opt.exec = Exec::serial;
    SeesawOptions parallel_opt = serial_opt;
    parallel_opt.exec = Exec::parallel;
    SeesawResult rs, rp;
    const Game game(3, 3);
    const double ts = time_call([&] { rs = seesaw(game, serial_opt); });
    const double tp = time_call([&] { rp = seesaw(game, parallel_opt); });
    report("see-saw (3,3), 24 restarts", ts, tp,
           rs.value == rp.value && rs.best_restart == rp.best_restart);
  }

  {
    const Game game(8, 8);
    const ObservableFamily fam = build_family(8, 8);
    EncodingSet serial_enc, parallel_enc;
    const double ts =
        time_call([&] { serial_enc = states_from_family(fam, game, Exec::serial); });
    const double tp =
        time_call([&] { parallel_enc = states_from_family(fam, game, Exec::parallel); });
    bool equal = true;
    for (std::uint32_t x = 0; x < game.inputs(); ++x)
      equal = equal && serial_enc.state(x).max_abs_diff(parallel_enc.state(x)) == 0.0;
    report("state construction (8,8), dim 128", ts, tp, equal);
  }

  return 0;
}
