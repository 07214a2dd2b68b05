// Deterministic parallel loops.
#pragma once

#include <functional>

namespace ulamfloat {

/// Worker count: ULAMFLOAT_THREADS if set, otherwise the hardware concurrency.
int default_threads();

/// Runs body(i) for i in [0, count) on `threads` workers (0 = default_threads()).
/// Each index writes only its own output slot, so results do not depend on scheduling.
/// The first exception thrown by any worker is rethrown after all workers finish.
void parallel_for(int count, const std::function<void(int)>& body, int threads = 0);

}  // namespace ulamfloat
