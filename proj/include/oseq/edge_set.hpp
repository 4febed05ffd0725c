#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "oseq/params.hpp"

namespace oseq {

// Occupancy over the k^order edge ranks of the de Bruijn digraph B_k(order-1).
// Iteration is always in increasing rank.
class EdgeSet {
 public:
  static constexpr rank_t npos = std::numeric_limits<rank_t>::max();

  EdgeSet(int k, int order);

  int k() const { return k_; }
  int order() const { return order_; }
  rank_t universe() const { return universe_; }
  rank_t vertex_universe() const { return universe_ / static_cast<rank_t>(k_); }
  count_t size() const { return size_; }

  bool test(rank_t r) const {
    return (words_[r >> 6] >> (r & 63)) & 1u;
  }
  void set(rank_t r);
  void clear(rank_t r);

  rank_t first_set() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<rank_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const EdgeSet& other) const {
    return k_ == other.k_ && order_ == other.order_ && words_ == other.words_;
  }

 private:
  int k_;
  int order_;
  rank_t universe_;
  count_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oseq
