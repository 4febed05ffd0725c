#include "oseq/counting.hpp"

#include <algorithm>
#include <vector>

namespace oseq {

namespace {

void check_args(int k, int n) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (n < 3) throw std::invalid_argument("n must be >= 3");
}

}  // namespace

count_t r_count(int k, int n, count_t s2) {
  check_args(k, n);
  const count_t max_w = 2 * static_cast<count_t>(n) * (k - 1);
  if (s2 < 2 * static_cast<count_t>(n) || s2 > max_w) return 0;

  // Positional DP over doubled symbol weights: k for symbol 0, 2s otherwise.
  std::vector<count_t> ways(static_cast<std::size_t>(max_w) + 1, 0);
  ways[0] = 1;
  for (int pos = 0; pos < n; ++pos) {
    std::vector<count_t> next(ways.size(), 0);
    for (std::size_t w = 0; w < ways.size(); ++w) {
      if (ways[w] == 0) continue;
      for (symbol_t s = 0; s < k; ++s) {
        const std::size_t sw = s == 0 ? static_cast<std::size_t>(k)
                                      : 2 * static_cast<std::size_t>(s);
        if (w + sw < next.size()) {
          next[w + sw] = checked_add(next[w + sw], ways[w]);
        }
      }
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(s2)];
}

count_t r_middle(int k, int n) {
  return r_count(k, n, static_cast<count_t>(k) * n);
}

count_t nega_tuple_count(int k, int n) {
  if (k < 3 || n < 1) throw std::invalid_argument("need k >= 3, n >= 1");
  const count_t half = checked_pow(k, n / 2);
  return (k % 2 == 0 && n % 2 == 1) ? checked_mul(2, half) : half;
}

int odd_part(int n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

NiCounts n_i_counts_formula(int k, int n) {
  check_args(k, n);
  const count_t delta = (k % 2 == 0) ? 2 : 1;
  if (n % 2 == 1) {
    return {0, checked_mul(delta, checked_pow(k, (n - 1) / 2)), 0};
  }
  const int m = odd_part(n);
  const count_t k_half_m = checked_pow(k, (m - 1) / 2);
  const count_t n1 = checked_mul(delta, k_half_m);
  const count_t n0 = exact_div(
      checked_mul(delta,
                  checked_sub(checked_mul(delta, checked_pow(k, (n - 2) / 2)),
                              k_half_m)),
      2);
  const count_t n2 = exact_div(checked_sub(checked_pow(k, n / 2), n1), 2);
  return {n0, n1, n2};
}

count_t e_size(int k, int n) {
  check_args(k, n);
  return exact_div(checked_sub(checked_pow(k, n), r_middle(k, n)), 2);
}

count_t s_partition_bound(int k, int n) {
  check_args(k, n);
  const count_t delta = (k % 2 == 0) ? 2 : 1;
  const int m = odd_part(n);
  const NiCounts ni = n_i_counts_formula(k, n);
  count_t v = checked_pow(k, n);
  v = checked_sub(v, checked_mul(n, checked_add(ni.n0, ni.n2)));
  v = checked_sub(v, checked_mul(m, checked_sub(ni.n1, delta)));
  v = checked_sub(v, delta);
  return exact_div(v, 2);
}

count_t s_closed_form(int k, int n) {
  check_args(k, n);
  const count_t delta = (k % 2 == 0) ? 2 : 1;
  if (n % 2 == 1) {
    // (k^n - delta*(n*(k^((n-1)/2) - 1) - 1)) / 2; evaluates delta above the
    // partition form, which is the value all tabulated entries match.
    const count_t inner =
        checked_sub(checked_mul(n, checked_sub(checked_pow(k, (n - 1) / 2), 1)), 1);
    return exact_div(checked_sub(checked_pow(k, n), checked_mul(delta, inner)), 2);
  }
  const int m = odd_part(n);
  const count_t k_nm2 = checked_pow(k, (n - 2) / 2);   // k^((n-2)/2)
  const count_t k_m = checked_pow(k, (m - 1) / 2);     // k^((m-1)/2)
  count_t v = checked_pow(k, n);
  v = checked_sub(v, exact_div(checked_mul(checked_mul(n, k_nm2),
                                           checked_add(delta * delta, k)),
                               2));
  v = checked_add(v, checked_mul(checked_mul(n, delta), k_m));
  v = checked_sub(v, checked_mul(checked_mul(m, delta), checked_sub(k_m, 1)));
  v = checked_sub(v, delta);
  return exact_div(v, 2);
}

count_t s_lower_bound(int k, int n) {
  return std::max(e_size(k, n), s_partition_bound(k, n));
}

count_t nos_upper_bound(int k, int n) {
  check_args(k, n);
  const count_t delta = (k % 2 == 0) ? 2 : 1;
  const count_t kn = checked_pow(k, n);
  if (n % 2 == 1) {
    return exact_div(
        checked_sub(kn, checked_mul(delta, checked_pow(k, (n - 1) / 2))), 2);
  }
  return exact_div(checked_sub(kn, checked_pow(k, n / 2)), 2);
}

count_t os_upper_bound(int k, int n) {
  check_args(k, n);
  const count_t kn = checked_pow(k, n);
  if (n % 2 == 1) {
    return exact_div(checked_sub(kn, checked_pow(k, (n + 1) / 2)), 2);
  }
  return exact_div(checked_sub(kn, checked_pow(k, n / 2)), 2);
}

CountReport count_report(int k, int n) {
  check_args(k, n);
  CountReport rep;
  rep.k = k;
  rep.n = n;
  rep.delta = (k % 2 == 0) ? 2 : 1;
  rep.m_odd_part = odd_part(n);
  rep.r_middle = r_middle(k, n);
  rep.e_size = e_size(k, n);
  rep.nega_tuples = nega_tuple_count(k, n);
  rep.n_formula = n_i_counts_formula(k, n);
  rep.s_partition = s_partition_bound(k, n);
  rep.s_bound = s_lower_bound(k, n);
  rep.nos_ub = nos_upper_bound(k, n);
  rep.os_ub_next = os_upper_bound(k, n + 1);
  return rep;
}

}  // namespace oseq
