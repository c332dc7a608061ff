#include "pickfreeze/summation.hpp"

namespace pickfreeze {

double kahan_sum(std::span<const double> values) noexcept {
  KahanSum sum;
  for (double v : values) sum.add(v);
  return sum.value();
}

double kahan_mean(std::span<const double> values) noexcept {
  return kahan_sum(values) / static_cast<double>(values.size());
}

}  // namespace pickfreeze
