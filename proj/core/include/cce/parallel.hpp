#pragma once

#include <functional>

namespace cce {

/// Worker count used when callers pass 0.
unsigned default_workers();

/// Splits [0, rows) into contiguous chunks and runs body(begin, end) on up to
/// `workers` threads. Rows are independent, so the result never depends on
/// the partition.
void parallel_rows(int rows, unsigned workers, const std::function<void(int, int)>& body);

}  // namespace cce
