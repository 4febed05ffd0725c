#pragma once

#include "oseq/params.hpp"

namespace oseq {

// Negasymmetric circuits of the middle shell, bucketed by how many
// negasymmetric n-tuples each contains (only 0, 1 or 2 are possible).
struct NiCounts {
  count_t n0 = 0;
  count_t n1 = 0;
  count_t n2 = 0;
  bool operator==(const NiCounts&) const = default;
};

// Number of k-ary n-tuples with doubled pseudoweight exactly s2.
// Zero outside [2n, 2n(k-1)].
count_t r_count(int k, int n, count_t s2);

// Tuples in the middle shell: r_count(k, n, k*n).
count_t r_middle(int k, int n);

// Closed form: 2k^floor(n/2) if k even and n odd, else k^floor(n/2).
count_t nega_tuple_count(int k, int n);

// m where n = 2^t * m with m odd.
int odd_part(int n);

// Closed forms: n odd -> (0, delta*k^((n-1)/2), 0); n even uses the odd part
// of n. All divisions checked exact.
NiCounts n_i_counts_formula(int k, int n);

// (k^n - r_middle)/2: edges strictly below the middle pseudoweight.
count_t e_size(int k, int n);

// Partition-form lower bound on the augmented edge set:
// (k^n - n*(N0+N2) - m*(N1-delta) - delta)/2.  This is the tabulated s-value;
// at (k,n)=(3,4) it is one below e_size.
count_t s_partition_bound(int k, int n);

// Alternative closed form kept as a cross-check. For even n it equals the
// partition form; for odd n it evaluates delta higher (the partition form is
// the one every tabulated value matches).
count_t s_closed_form(int k, int n);

// max(e_size, s_partition_bound): the achieved |X| is never below this, with
// equality when n is prime.
count_t s_lower_bound(int k, int n);

// Period ceiling for a negative orientable sequence of order n.
count_t nos_upper_bound(int k, int n);

// Period ceiling for an orientable sequence of order n.
count_t os_upper_bound(int k, int n);

struct CountReport {
  int k = 0;
  int n = 0;
  int delta = 0;
  int m_odd_part = 0;
  count_t r_middle = 0;
  count_t e_size = 0;
  count_t nega_tuples = 0;
  NiCounts n_formula;
  count_t s_partition = 0;
  count_t s_bound = 0;  // max(e_size, s_partition)
  count_t nos_ub = 0;
  count_t os_ub_next = 0;  // orientable bound at order n+1
};

CountReport count_report(int k, int n);

}  // namespace oseq
