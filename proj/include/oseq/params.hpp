#pragma once

#include <cstdint>
#include <stdexcept>

namespace oseq {

using symbol_t = std::int32_t;
using rank_t = std::uint64_t;
using count_t = std::int64_t;

// Hard ceiling on the number of tuple ranks any structure may index.
inline constexpr rank_t kHardRankLimit = rank_t{1} << 31;
// Default materialization cap; raise per-call (or via OSEQ_MAX_RANK in the
// CLI) up to the hard ceiling.
inline constexpr rank_t kDefaultRankCap = rank_t{1} << 27;

// A library invariant failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Edge set is not balanced or not connected, so no Euler circuit exists.
struct not_eulerian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

count_t checked_add(count_t a, count_t b);
count_t checked_sub(count_t a, count_t b);
count_t checked_mul(count_t a, count_t b);
count_t checked_pow(count_t base, int exp);

// Divides exactly or throws internal_error (an inexact division here would
// mean a transcribed formula is wrong).
count_t exact_div(count_t num, count_t den);

// Problem parameters for one (k, n) instance: alphabet Z_k, tuple order n.
// delta() is 1 for odd k and 2 for even k.
class Params {
 public:
  Params(int k, int n, rank_t max_rank = kDefaultRankCap);

  int k() const { return k_; }
  int n() const { return n_; }
  int delta() const { return (k_ % 2 == 0) ? 2 : 1; }

  rank_t tuple_count() const { return tuple_count_; }   // k^n
  rank_t vertex_count() const { return vertex_count_; } // k^(n-1)
  rank_t max_rank() const { return max_rank_; }

  bool materializable() const { return tuple_count_ <= max_rank_; }
  // Throws std::invalid_argument when k^n exceeds the materialization cap.
  void require_materializable() const;

 private:
  int k_;
  int n_;
  rank_t tuple_count_;
  rank_t vertex_count_;
  rank_t max_rank_;
};

}  // namespace oseq
