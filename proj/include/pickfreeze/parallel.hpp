#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

namespace pickfreeze {

/// Worker count used by OpenMP kernels when a caller passes 0.
int default_workers() noexcept;

/// Sets the process-wide default (values < 1 restore the OpenMP default).
void set_default_workers(int workers) noexcept;

/// Resolves a requested worker count (0 = default).
int resolve_workers(int requested) noexcept;

/// Keeps the exception raised by the lowest loop index, so a failing
/// parallel loop reports the same error as its serial twin.
class FirstException {
 public:
  void capture(std::size_t index) {
    std::lock_guard lock(mutex_);
    if (index < index_) {
      index_ = index;
      error_ = std::current_exception();
    }
  }
  void rethrow_if_any() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::size_t index_ = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error_;
};

}  // namespace pickfreeze
