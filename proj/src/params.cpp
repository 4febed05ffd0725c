#include "oseq/params.hpp"

#include <string>

namespace oseq {

count_t checked_add(count_t a, count_t b) {
  count_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw internal_error("count overflow in addition");
  }
  return out;
}

count_t checked_sub(count_t a, count_t b) {
  count_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw internal_error("count overflow in subtraction");
  }
  return out;
}

count_t checked_mul(count_t a, count_t b) {
  count_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw internal_error("count overflow in multiplication");
  }
  return out;
}

count_t checked_pow(count_t base, int exp) {
  if (exp < 0) throw internal_error("negative exponent");
  count_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

count_t exact_div(count_t num, count_t den) {
  if (den == 0 || num % den != 0) {
    throw internal_error("inexact division: " + std::to_string(num) + "/" +
                         std::to_string(den));
  }
  return num / den;
}

Params::Params(int k, int n, rank_t max_rank) : k_(k), n_(n) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  rank_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<rank_t>(k);
    if (count > kHardRankLimit) {
      throw std::invalid_argument("k^n exceeds the supported limit 2^31");
    }
  }
  tuple_count_ = count;
  vertex_count_ = count / static_cast<rank_t>(k);
  max_rank_ = max_rank > kHardRankLimit ? kHardRankLimit : max_rank;
}

void Params::require_materializable() const {
  if (!materializable()) {
    throw std::invalid_argument(
        "k^n (" + std::to_string(tuple_count_) +
        ") exceeds the materialization cap (" + std::to_string(max_rank_) +
        "); raise OSEQ_MAX_RANK up to 2^31 if memory allows");
  }
}

}  // namespace oseq
