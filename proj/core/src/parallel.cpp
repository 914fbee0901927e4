#include "cce/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace cce {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_rows(int rows, unsigned workers, const std::function<void(int, int)>& body) {
  if (rows <= 0) return;
  if (workers == 0) workers = default_workers();
  const int chunks = static_cast<int>(std::min<unsigned>(workers, static_cast<unsigned>(rows)));
  if (chunks <= 1) {
    body(0, rows);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(chunks - 1);
  const int per = rows / chunks;
  const int extra = rows % chunks;
  int begin = 0;
  for (int c = 0; c < chunks; ++c) {
    const int end = begin + per + (c < extra ? 1 : 0);
    if (c + 1 == chunks) {
      body(begin, end);
    } else {
      threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
    begin = end;
  }
}

}  // namespace cce
