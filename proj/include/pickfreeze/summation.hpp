#pragma once

#include <span>

namespace pickfreeze {

/// Running Kahan compensated sum.
class KahanSum {
 public:
  void add(double value) noexcept {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  KahanSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Compensated sum of `values`; 0 for an empty span.
double kahan_sum(std::span<const double> values) noexcept;

/// Compensated arithmetic mean. `values` must be non-empty.
double kahan_mean(std::span<const double> values) noexcept;

}  // namespace pickfreeze
