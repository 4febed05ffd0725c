#include "oseq/edge_set.hpp"

namespace oseq {

EdgeSet::EdgeSet(int k, int order) : k_(k), order_(order) {
  if (k < 2 || order < 2) throw std::invalid_argument("need k >= 2, order >= 2");
  rank_t u = 1;
  for (int i = 0; i < order; ++i) {
    u *= static_cast<rank_t>(k);
    if (u > kHardRankLimit) {
      throw std::invalid_argument("edge universe exceeds the supported limit 2^31");
    }
  }
  universe_ = u;
  words_.assign((u + 63) / 64, 0);
}

void EdgeSet::set(rank_t r) {
  if (r >= universe_) throw std::out_of_range("edge rank out of range");
  std::uint64_t& w = words_[r >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void EdgeSet::clear(rank_t r) {
  if (r >= universe_) throw std::out_of_range("edge rank out of range");
  std::uint64_t& w = words_[r >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

rank_t EdgeSet::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) {
      return static_cast<rank_t>(w * 64 +
                                 static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return npos;
}

}  // namespace oseq
