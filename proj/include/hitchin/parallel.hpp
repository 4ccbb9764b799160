#pragma once

#include <functional>

namespace hitchin {

// Global worker count for per-site maps. Reductions never depend on it:
// they always run the fixed pairwise tree, so results are bitwise
// independent of the thread count.
void set_threads(int t);
int threads();

// Static partition of [begin, end); each index is processed exactly once by
// one worker with the same per-index arithmetic as the serial path.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace hitchin
