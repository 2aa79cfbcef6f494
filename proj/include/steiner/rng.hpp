#pragma once
/**
 * Counter-based random number streams (Philox4x32-10).
 *
 * Each (seed, stream) pair owns an independent sequence; distinct streams
 * never collide because the stream id is part of the counter block. This
 * gives reproducible results independent of thread count when each unit of
 * parallel work draws from its own stream.
 */

#include <cstdint>

namespace steiner {

namespace detail {

struct PhiloxBlock {
  std::uint32_t v[4];
};

inline PhiloxBlock philox4x32_10(const std::uint32_t ctr[4],
                                 const std::uint32_t key[2]) {
  constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
  constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
  std::uint32_t x0 = ctr[0], x1 = ctr[1], x2 = ctr[2], x3 = ctr[3];
  std::uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * x0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * x2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t y0 = hi1 ^ x1 ^ k0;
    const std::uint32_t y2 = hi0 ^ x3 ^ k1;
    x0 = y0;
    x1 = lo1;
    x2 = y2;
    x3 = lo0;
    k0 += W0;
    k1 += W1;
  }
  return {{x0, x1, x2, x3}};
}

}  // namespace detail

/// One Philox stream: 2^64 blocks of 128 bits each, keyed by the seed, with
/// the stream id occupying half of the counter block.
class RngStream {
 public:
  /// `start_counter` positions the stream at a block boundary, so disjoint
  /// counter ranges within one stream never overlap (used to give each path
  /// a fixed draw budget inside its chunk's stream).
  RngStream(std::uint64_t seed, std::uint64_t stream,
            std::uint64_t start_counter = 0)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream),
        counter_(start_counter) {}

  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(counter_),
        static_cast<std::uint32_t>(counter_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    const auto block = detail::philox4x32_10(ctr, key_);
    ++counter_;
    spare_ = (static_cast<std::uint64_t>(block.v[2]) << 32) | block.v[3];
    have_spare_ = true;
    return (static_cast<std::uint64_t>(block.v[0]) << 32) | block.v[1];
  }

  /// Uniform on (0, 1] — safe as an argument to log().
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

 private:
  std::uint32_t key_[2];
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace steiner
