#pragma once

// Counter-based random streams. A stream is the Philox4x32-10 block cipher
// keyed by the master seed, applied to the counter (block, stream index), so
// every (seed, stream) pair addresses its own disjoint sequence and a draw
// depends only on its position, never on which thread produced it.

#include <array>
#include <cstdint>

namespace rfg {

struct StreamSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const StreamSeed&, const StreamSeed&) = default;
};

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

class Stream {
public:
  explicit Stream(StreamSeed seed);
  Stream(std::uint64_t master_seed, std::uint64_t stream_index)
      : Stream(StreamSeed{master_seed, stream_index}) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on (0, 1): zero is redrawn.
  double uniform_positive();

  const StreamSeed& seed() const { return seed_; }
  /// Number of 64-bit words consumed so far.
  std::uint64_t position() const { return position_; }

private:
  void refill();

  StreamSeed seed_;
  PhiloxKey key_{};
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  std::uint64_t position_ = 0;
};

} // namespace rfg
