#include "oseq/lempel.hpp"

#include <string>

#include "oseq/graph.hpp"
#include "oseq/verify.hpp"

namespace oseq {

KTuple lempel_d(std::span<const symbol_t> t, int k, int beta) {
  if (!valid_tuple(t, k) || t.size() < 2) {
    throw std::invalid_argument("difference map needs a valid tuple of length >= 2");
  }
  if (beta <= 0 || beta >= k) {
    throw std::invalid_argument("beta must lie in [1, k-1]");
  }
  KTuple out(t.size() - 1);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const int d = ((t[i + 1] - t[i]) % k + k) % k;
    out[i] = static_cast<symbol_t>((static_cast<long long>(beta) * d) % k);
  }
  return out;
}

EdgeSet lift_edges(const EdgeSet& es, rank_t max_rank) {
  const int k = es.k();
  const int n = es.order();
  // Validates the lifted universe k^(n+1) against the hard limit.
  EdgeSet lifted(k, n + 1);
  if (lifted.universe() > max_rank) {
    throw std::invalid_argument(
        "lifted universe k^" + std::to_string(n + 1) +
        " exceeds the materialization cap");
  }

  std::vector<symbol_t> diff(static_cast<std::size_t>(n));
  es.for_each([&](rank_t r) {
    decode_tuple_into(r, k, n, diff.data());
    // Partial sums from each start symbol give the k preimages.
    for (symbol_t c = 0; c < k; ++c) {
      symbol_t a = c;
      rank_t lifted_rank = static_cast<rank_t>(c);
      for (int j = 0; j < n; ++j) {
        a = static_cast<symbol_t>((a + diff[static_cast<std::size_t>(j)]) % k);
        lifted_rank = lifted_rank * static_cast<rank_t>(k) + static_cast<rank_t>(a);
      }
      lifted.set(lifted_rank);
    }
  });

  if (lifted.size() != checked_mul(static_cast<count_t>(k), es.size())) {
    throw internal_error("difference-map preimage has wrong cardinality");
  }
  return lifted;
}

Sequence os_from_x(const Params& p) {
  EdgeSet x = build_x(p);
  EdgeSet lifted = lift_edges(x, p.max_rank());
  Sequence s;
  try {
    s = eulerian_circuit(lifted);
  } catch (const not_eulerian& e) {
    throw internal_error(std::string("lifted edge set lost the Euler property: ") +
                         e.what());
  }
  if (!is_orientable(s, p.n() + 1) ||
      !window_multiset_equals(s, lifted, p.n() + 1)) {
    throw internal_error("constructed sequence failed self-certification");
  }
  return s;
}

}  // namespace oseq
