#include "ramsey/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::uint64_t dimension_mask(int dimension) {
  return dimension >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dimension) - 1;
}

}  // namespace

BitVector::BitVector(int dimension, std::uint64_t encoding)
    : dimension_(dimension), encoding_(encoding) {
  if (dimension < 0 || dimension > kMaxDimension) {
    throw InputError("bit vector dimension out of range: " + std::to_string(dimension));
  }
  if ((encoding & ~dimension_mask(dimension)) != 0) {
    throw InputError("bit vector encoding has bits beyond dimension " +
                     std::to_string(dimension));
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw InputError("bit string longer than 64 coordinates");
  }
  std::uint64_t encoding = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      encoding |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw InputError("bit string may only contain '0' and '1'");
    }
  }
  return BitVector(static_cast<int>(bits.size()), encoding);
}

std::string BitVector::to_string() const {
  std::string out(static_cast<std::size_t>(dimension_), '0');
  for (int i = 0; i < dimension_; ++i) {
    if ((*this)[i]) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
  if (a.dimension_ != b.dimension_) {
    throw InputError("xor of bit vectors with different dimensions");
  }
  return BitVector(a.dimension_, a.encoding_ ^ b.encoding_);
}

VectorSet::VectorSet(int dimension, std::vector<BitVector> members)
    : dimension_(dimension), members_(std::move(members)) {
  for (const auto& v : members_) {
    if (v.dimension() != dimension_) {
      throw InputError("vector set member has wrong dimension");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::int64_t VectorSet::index_of(const BitVector& v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return -1;
  return it - members_.begin();
}

bool dot(const BitVector& u, const BitVector& v) {
  if (u.dimension() != v.dimension()) {
    throw InputError("dot product of vectors with dimensions " +
                     std::to_string(u.dimension()) + " and " +
                     std::to_string(v.dimension()));
  }
  return (std::popcount(u.encoding() & v.encoding()) & 1) != 0;
}

int hamming_weight(const BitVector& v) { return std::popcount(v.encoding()); }

VectorSet enumerate_even_weight(int t) {
  if (t % 2 != 0) {
    throw InputError("construction requires even t (got t=" + std::to_string(t) + ")");
  }
  if (t < 2 || t > kMaxEnumerationDimension) {
    throw InputError("t must lie in [2, " + std::to_string(kMaxEnumerationDimension) +
                     "] (got t=" + std::to_string(t) + ")");
  }
  const std::uint64_t count = std::uint64_t{1} << (t - 1);
  std::vector<BitVector> members;
  members.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    members.emplace_back(t, even_weight_encoding(k));
  }
  return VectorSet(t, std::move(members));
}

int gf2_rank(std::span<const BitVector> vectors) {
  // pivots[b] holds a reduced vector whose highest set bit is b.
  std::array<std::uint64_t, 64> pivots{};
  int rank = 0;
  for (const auto& v : vectors) {
    std::uint64_t x = v.encoding();
    while (x != 0) {
      const int top = 63 - std::countl_zero(x);
      if (pivots[static_cast<std::size_t>(top)] == 0) {
        pivots[static_cast<std::size_t>(top)] = x;
        ++rank;
        break;
      }
      x ^= pivots[static_cast<std::size_t>(top)];
    }
  }
  return rank;
}

}  // namespace ramsey
