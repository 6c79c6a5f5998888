// Scan the first Chern number across helicity labels and print the
// per-level refinement values.

#include <cstdio>

#include "lightcone/chern.hpp"

using namespace lightcone;

int main() {
  std::printf("%6s %12s %12s %12s\n", "2s", "level0", "level1", "expected");
  for (int ts = -4; ts <= 4; ++ts) {
    const ChernResult r = chern_number(Helicity(ts), 2);
    std::printf("%6d %12.8f %12.8f %12.1f\n", ts, r.per_level[0], r.per_level[1],
                -1.0 * ts);
  }
  return 0;
}
