#include "boxcount/parallel.hpp"

#include <cstdlib>
#include <string>

namespace boxcount {

namespace {

int from_environment() {
  const char* env = std::getenv("BOXCOUNT_JOBS");
  if (!env) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

std::atomic<int>& setting() {
  static std::atomic<int> jobs{from_environment()};
  return jobs;
}

}  // namespace

int worker_count() { return setting().load(); }

void set_worker_count(int jobs) { setting().store(std::max(1, jobs)); }

}  // namespace boxcount
