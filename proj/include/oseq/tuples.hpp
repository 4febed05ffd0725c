#pragma once

#include <span>
#include <vector>

#include "oseq/params.hpp"

namespace oseq {

// A k-ary m-tuple, symbols in [0, k).
using KTuple = std::vector<symbol_t>;

bool valid_tuple(std::span<const symbol_t> t, int k);

// Doubled pseudoweight: sum over symbols of (k for 0, 2s otherwise).
// Doubling keeps the value integral for odd k; the "middle" threshold for an
// n-tuple is k*n.
count_t pseudoweight2(std::span<const symbol_t> t, int k);

KTuple negate_tuple(std::span<const symbol_t> t, int k);
KTuple reverse_tuple(std::span<const symbol_t> t);

// -t^R mod k. An involution; its fixed points are the negasymmetric tuples.
KTuple reverse_negate(std::span<const symbol_t> t, int k);

// t[i] + t[m-1-i] == 0 (mod k) for all i.
bool is_negasymmetric(std::span<const symbol_t> t, int k);

// Base-k rank with t[0] as the most significant digit.
rank_t encode_tuple(std::span<const symbol_t> t, int k);
KTuple decode_tuple(rank_t r, int k, int n);
void decode_tuple_into(rank_t r, int k, int n, symbol_t* out);

// Rank transforms used by the dense scans; msd_pow = k^(n-1).
rank_t reverse_negate_rank(rank_t r, int k, int n);
inline rank_t rotate_left_rank(rank_t r, rank_t msd_pow, int k) {
  return (r % msd_pow) * static_cast<rank_t>(k) + r / msd_pow;
}

count_t pseudoweight2_of_rank(rank_t r, int k, int n);

}  // namespace oseq
