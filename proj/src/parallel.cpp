#include "liegrad/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace liegrad {

int thread_count() {
  if (const char* env = std::getenv("LIE_GRADINGS_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace liegrad
