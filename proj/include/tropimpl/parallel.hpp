#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace tropimpl {

// Worker count for data-parallel loops; 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Runs body(i) for i in [0, n) on the configured workers. The first exception
// thrown by any iteration is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tropimpl
