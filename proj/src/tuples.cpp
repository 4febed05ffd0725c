#include "oseq/tuples.hpp"

#include <algorithm>

namespace oseq {

bool valid_tuple(std::span<const symbol_t> t, int k) {
  if (t.empty()) return false;
  return std::all_of(t.begin(), t.end(),
                     [k](symbol_t s) { return s >= 0 && s < k; });
}

count_t pseudoweight2(std::span<const symbol_t> t, int k) {
  count_t w = 0;
  for (symbol_t s : t) w += (s == 0) ? k : 2 * static_cast<count_t>(s);
  return w;
}

KTuple negate_tuple(std::span<const symbol_t> t, int k) {
  KTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out[i] = t[i] == 0 ? 0 : k - t[i];
  }
  return out;
}

KTuple reverse_tuple(std::span<const symbol_t> t) {
  return KTuple(t.rbegin(), t.rend());
}

KTuple reverse_negate(std::span<const symbol_t> t, int k) {
  KTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const symbol_t s = t[t.size() - 1 - i];
    out[i] = s == 0 ? 0 : k - s;
  }
  return out;
}

bool is_negasymmetric(std::span<const symbol_t> t, int k) {
  const std::size_t m = t.size();
  for (std::size_t i = 0; i <= (m - 1) / 2; ++i) {
    if ((t[i] + t[m - 1 - i]) % k != 0) return false;
  }
  return true;
}

rank_t encode_tuple(std::span<const symbol_t> t, int k) {
  rank_t r = 0;
  for (symbol_t s : t) r = r * static_cast<rank_t>(k) + static_cast<rank_t>(s);
  return r;
}

KTuple decode_tuple(rank_t r, int k, int n) {
  KTuple out(static_cast<std::size_t>(n));
  decode_tuple_into(r, k, n, out.data());
  return out;
}

void decode_tuple_into(rank_t r, int k, int n, symbol_t* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<symbol_t>(r % static_cast<rank_t>(k));
    r /= static_cast<rank_t>(k);
  }
}

rank_t reverse_negate_rank(rank_t r, int k, int n) {
  rank_t out = 0;
  // Digits of r, least significant first, become the leading symbols of the
  // reverse; negation is per digit.
  for (int i = 0; i < n; ++i) {
    const rank_t d = r % static_cast<rank_t>(k);
    r /= static_cast<rank_t>(k);
    const rank_t nd = d == 0 ? 0 : static_cast<rank_t>(k) - d;
    out = out * static_cast<rank_t>(k) + nd;
  }
  return out;
}

count_t pseudoweight2_of_rank(rank_t r, int k, int n) {
  count_t w = 0;
  for (int i = 0; i < n; ++i) {
    const rank_t d = r % static_cast<rank_t>(k);
    r /= static_cast<rank_t>(k);
    w += d == 0 ? k : 2 * static_cast<count_t>(d);
  }
  return w;
}

}  // namespace oseq
