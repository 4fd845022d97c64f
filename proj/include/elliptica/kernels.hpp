#pragma once

// Data-parallel loop kernels. Each kernel has a plain serial reference and an
// OpenMP variant; both produce identical results (reductions break ties on the
// lowest index, so the answer does not depend on scheduling).

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace elliptica {

enum class Execution { serial, parallel };

namespace kernels {

struct Extremum {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

inline bool better_min(const Extremum& a, const Extremum& b) {
  return a.value < b.value || (a.value == b.value && a.index < b.index);
}

/// Keeps the exception thrown at the lowest loop index and rethrows it after
/// the parallel region, so a throwing body behaves as in the serial loop.
class FirstError {
 public:
  void capture(std::size_t index) {
#pragma omp critical(elliptica_first_error)
    {
      if (!error_ || index < index_) {
        error_ = std::current_exception();
        index_ = index;
      }
    }
  }
  void rethrow_if_any() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
  std::size_t index_ = 0;
};

template <class Fn>
Extremum argmin_serial(std::size_t n, Fn&& fn) {
  Extremum best;
  for (std::size_t i = 0; i < n; ++i) {
    const Extremum cand{static_cast<double>(fn(i)), i};
    if (i == 0 || better_min(cand, best)) best = cand;
  }
  return best;
}

template <class Fn>
Extremum argmin_parallel(std::size_t n, Fn&& fn) {
  Extremum best;
  bool have = false;
  FirstError err;
#pragma omp parallel
  {
    Extremum local;
    bool local_have = false;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
      const auto i = static_cast<std::size_t>(k);
      try {
        const Extremum cand{static_cast<double>(fn(i)), i};
        if (!local_have || better_min(cand, local)) {
          local = cand;
          local_have = true;
        }
      } catch (...) {
        err.capture(i);
      }
    }
#pragma omp critical(elliptica_argmin)
    {
      if (local_have && (!have || better_min(local, best))) {
        best = local;
        have = true;
      }
    }
  }
  err.rethrow_if_any();
  return best;
}

template <class Fn>
Extremum argmin(Execution exec, std::size_t n, Fn&& fn) {
  return exec == Execution::serial ? argmin_serial(n, fn) : argmin_parallel(n, fn);
}

/// Argmax with the same lowest-index tie rule.
template <class Fn>
Extremum argmax(Execution exec, std::size_t n, Fn&& fn) {
  auto neg = [&fn](std::size_t i) { return -static_cast<double>(fn(i)); };
  Extremum e = argmin(exec, n, neg);
  e.value = -e.value;
  return e;
}

/// out[i] = fn(i).
template <class T, class Fn>
std::vector<T> map_serial(std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

template <class T, class Fn>
std::vector<T> map_parallel(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  FirstError err;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = fn(i);
    } catch (...) {
      err.capture(i);
    }
  }
  err.rethrow_if_any();
  return out;
}

template <class T, class Fn>
std::vector<T> map(Execution exec, std::size_t n, Fn&& fn) {
  return exec == Execution::serial ? map_serial<T>(n, fn) : map_parallel<T>(n, fn);
}

}  // namespace kernels
}  // namespace elliptica
