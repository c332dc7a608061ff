#pragma once

#include <array>
#include <cstdint>

namespace pickfreeze {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

/// xoshiro256** engine. Satisfies UniformRandomBitGenerator, but all
/// distribution sampling in this library goes through the helpers below so
/// that sequences are identical on every platform and standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); never returns 0, safe under log().
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal by Box-Muller (one variate per two uniforms).
  double normal() noexcept;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_{};
};

/// Keyed, splittable stream identity. A stream is a pure value: the same
/// (master_seed, stream_id) always yields the same engine, and derived
/// substreams are addressed by index rather than by draw order, so results
/// do not depend on how work is scheduled across threads.
class RngStream {
 public:
  constexpr RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
      : master_seed_(master_seed),
        stream_id_(stream_id),
        key_(mix64(mix64(master_seed ^ UINT64_C(0x6A09E667F3BCC909)) +
                   mix64(stream_id + UINT64_C(0x9E3779B97F4A7C15)))) {}

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t key() const noexcept { return key_; }

  /// Child stream number `index`. Children of distinct parents, and distinct
  /// children of one parent, have unrelated keys.
  RngStream substream(std::uint64_t index) const noexcept {
    return RngStream(key_, index, Derived{});
  }

  Rng engine() const noexcept { return Rng(key_); }

 private:
  struct Derived {};
  constexpr RngStream(std::uint64_t parent_key, std::uint64_t index, Derived) noexcept
      : master_seed_(parent_key),
        stream_id_(index),
        key_(mix64(parent_key ^ mix64(index ^ UINT64_C(0xBB67AE8584CAA73B)))) {}

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
};

}  // namespace pickfreeze
