#pragma once

#include <atomic>

#include "agr/error.h"

namespace agr {

// Cooperative cancellation: long-running computations poll the active token
// and abort with OperationCancelled once it is flipped.
class CancellationToken {
 public:
  void cancel() { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return cancelled_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> cancelled_{false};
};

namespace detail {
inline thread_local const CancellationToken* current_token = nullptr;
}

// Installs a token for the current thread; nesting restores the previous one.
class CancellationScope {
 public:
  explicit CancellationScope(const CancellationToken& t) : prev_(detail::current_token) {
    detail::current_token = &t;
  }
  ~CancellationScope() { detail::current_token = prev_; }
  CancellationScope(const CancellationScope&) = delete;
  CancellationScope& operator=(const CancellationScope&) = delete;

 private:
  const CancellationToken* prev_;
};

inline void check_cancelled() {
  if (detail::current_token && detail::current_token->cancelled())
    fail(ErrorCode::OperationCancelled, "computation cancelled");
}

}  // namespace agr
