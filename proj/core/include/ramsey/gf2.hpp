#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Largest dimension for which the even-weight set is materialized.
inline constexpr int kMaxEnumerationDimension = 30;

/// An element of F_2^t, stored as the integer sum(bits[i] * 2^i).
class BitVector {
 public:
  static constexpr int kMaxDimension = 64;

  BitVector() = default;
  BitVector(int dimension, std::uint64_t encoding);

  /// Parses a string like "1100" where character i is coordinate i.
  static BitVector from_string(std::string_view bits);

  int dimension() const { return dimension_; }
  std::uint64_t encoding() const { return encoding_; }
  bool operator[](int i) const { return (encoding_ >> i) & 1U; }

  std::string to_string() const;

  friend BitVector operator^(const BitVector& a, const BitVector& b);
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  int dimension_ = 0;
  std::uint64_t encoding_ = 0;
};

/// Distinct vectors of one dimension in ascending encoding order.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(int dimension) : dimension_(dimension) {}
  /// Sorts and deduplicates; all members must share `dimension`.
  VectorSet(int dimension, std::vector<BitVector> members);

  int dimension() const { return dimension_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const BitVector& operator[](std::size_t i) const { return members_[i]; }
  std::span<const BitVector> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Index of `v` in canonical order, or -1 if absent.
  std::int64_t index_of(const BitVector& v) const;

 private:
  int dimension_ = 0;
  std::vector<BitVector> members_;
};

/// Scalar product over F_2. Throws InputError on dimension mismatch.
bool dot(const BitVector& u, const BitVector& v);

int hamming_weight(const BitVector& v);

/// Encoding of the index-th even-weight vector in ascending order. Each pair
/// {2k, 2k+1} holds exactly one even-weight integer, so this is O(1).
constexpr std::uint64_t even_weight_encoding(std::uint64_t index) {
  return (index << 1) | static_cast<std::uint64_t>(std::popcount(index) & 1);
}

/// Inverse of even_weight_encoding for even-weight inputs.
constexpr std::uint64_t even_weight_index(std::uint64_t encoding) { return encoding >> 1; }

/// All even-weight vectors of F_2^t in canonical order (2^(t-1) of them).
/// Rejects odd t and t outside [2, kMaxEnumerationDimension].
VectorSet enumerate_even_weight(int t);

/// Rank over F_2 by Gaussian elimination on the integer encodings.
int gf2_rank(std::span<const BitVector> vectors);
inline int gf2_rank(const VectorSet& s) { return gf2_rank(s.members()); }

}  // namespace ramsey
