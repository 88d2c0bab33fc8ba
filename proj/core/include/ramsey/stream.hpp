#pragma once

#include <cstdint>
#include <initializer_list>

namespace ramsey {

/// Domain tags separating the independent random substreams.
enum class StreamTag : std::uint64_t {
  kBlowup = 0x626c6f7775700000ULL,  // "blowup"
  kPair = 0x7061697200000000ULL,    // "pair"
  kSample = 0x73616d706c650000ULL,  // "sample"
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream: a key is a hash of (seed, tag, indices), and
/// draw(j) is a pure function of the key and j. Arithmetic only, so outputs
/// do not depend on generation order, thread count, or byte order.
class StreamKey {
 public:
  constexpr explicit StreamKey(std::uint64_t seed) : state_(mix64(seed)) {}

  constexpr StreamKey with(std::uint64_t word) const {
    StreamKey k = *this;
    k.state_ = mix64(state_ ^ mix64(word + 0x632be59bd9b4e019ULL));
    return k;
  }
  constexpr StreamKey with(StreamTag tag) const { return with(static_cast<std::uint64_t>(tag)); }
  constexpr StreamKey with(std::initializer_list<std::uint64_t> words) const {
    StreamKey k = *this;
    for (auto w : words) k = k.with(w);
    return k;
  }

  constexpr std::uint64_t draw(std::uint64_t counter) const {
    return mix64(state_ + mix64(counter ^ 0xd1b54a32d192ed03ULL));
  }

  /// Uniform on [0, n) by rejection; a power-of-two n never rejects, so the
  /// result is draw(0) masked.
  constexpr std::uint64_t uniform_below(std::uint64_t n) const {
    const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
    for (std::uint64_t j = 0;; ++j) {
      const std::uint64_t r = draw(j);
      if (r >= reject_below) return r % n;
    }
  }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace ramsey
