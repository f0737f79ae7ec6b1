#pragma once

// Data-parallel kernels behind every exhaustive check and table materialization.
//
// Each kernel has a serial reference in `serial::` and an OpenMP version in
// `parallel::`. Both return identical results: searches report the smallest
// violating index regardless of thread completion order, and an exception
// thrown by the callback at the smallest index is the one rethrown.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "barrlab/core/card.hpp"

namespace barrlab::kernels {

void set_num_threads(int threads);
int num_threads();

namespace serial {

template <class Pred>
std::optional<Element> first_violation(Element count, Pred&& violates) {
  for (Element i = 0; i < count; ++i) {
    if (violates(i)) return i;
  }
  return std::nullopt;
}

template <class Fn>
std::vector<Element> tabulate(Element count, Fn&& fn) {
  std::vector<Element> out;
  out.reserve(count);
  for (Element i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace parallel {

namespace detail {

// Keeps the exception raised at the smallest index.
class ErrorSlot {
 public:
  void offer(Element index, std::exception_ptr error) {
    std::lock_guard lock(mutex_);
    if (!error_ || index < index_) {
      index_ = index;
      error_ = std::move(error);
    }
  }
  void rethrow_if_set() const {
    if (error_) std::rethrow_exception(error_);
  }
  bool set() const { return static_cast<bool>(error_); }
  Element index() const { return index_; }

 private:
  std::mutex mutex_;
  Element index_ = 0;
  std::exception_ptr error_;
};

inline void lower_to(std::atomic<Element>& target, Element value) {
  Element current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace detail

template <class Pred>
std::optional<Element> first_violation(Element count, Pred&& violates) {
  std::atomic<Element> best{count};
  detail::ErrorSlot errors;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto index = static_cast<Element>(i);
    if (index >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (violates(index)) detail::lower_to(best, index);
    } catch (...) {
      errors.offer(index, std::current_exception());
      detail::lower_to(best, index);
    }
  }
  const Element found = best.load();
  if (errors.set() && errors.index() <= found) errors.rethrow_if_set();
  if (found == count) return std::nullopt;
  return found;
}

template <class Fn>
std::vector<Element> tabulate(Element count, Fn&& fn) {
  std::vector<Element> out(count);
  detail::ErrorSlot errors;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<Element>(i));
    } catch (...) {
      errors.offer(static_cast<Element>(i), std::current_exception());
    }
  }
  errors.rethrow_if_set();
  return out;
}

}  // namespace parallel

// Library code calls these; tests compare them against serial::.
template <class Pred>
std::optional<Element> first_violation(Element count, Pred&& violates) {
  return parallel::first_violation(count, std::forward<Pred>(violates));
}

template <class Fn>
std::vector<Element> tabulate(Element count, Fn&& fn) {
  return parallel::tabulate(count, std::forward<Fn>(fn));
}

}  // namespace barrlab::kernels
