#pragma once

#include <cstddef>
#include <functional>

namespace idec {

// Runs fn(0) .. fn(count-1) on up to `threads` workers pulling from a shared
// atomic counter. Tasks must not share mutable state except through their
// own output slots; with that discipline results cannot depend on the worker
// count. threads == 0 means hardware concurrency. Exceptions from tasks are
// rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace idec
