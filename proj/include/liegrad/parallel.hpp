#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace liegrad {

enum class Exec { Serial, Parallel };

/// Worker count for parallel sections: LIE_GRADINGS_THREADS when set to a
/// positive integer, otherwise the OpenMP default.
int thread_count();

/// out[i] = fn(i) for i < n. With Exec::Parallel the calls run on an OpenMP
/// team; results land in index order either way. If any call throws, the
/// exception from the lowest index is rethrown after all calls finish.
template <class T, class Fn>
std::vector<T> ordered_map(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long i = 0; i < count; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace liegrad
