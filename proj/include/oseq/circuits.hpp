#pragma once

#include <functional>
#include <span>
#include <vector>

#include "oseq/counting.hpp"
#include "oseq/params.hpp"
#include "oseq/tuples.hpp"

namespace oseq {

// Rotation-closure circuit [a_0,...,a_{n-1}]: the period distinct cyclic
// shifts of the canonical (lexicographically least) rotation.
struct Circuit {
  KTuple canonical;
  int period = 0;

  bool operator==(const Circuit&) const = default;
};

struct CircuitClass {
  Circuit circuit;
  bool negasymmetric = false;
  int nega_window_count = 0;  // negasymmetric n-tuples among the period edges
  KTuple partner_canonical;   // canonical of the reverse-negate image circuit
};

Circuit circuit_of(std::span<const symbol_t> t, int k);

// Some rotation of the circuit equals the reverse-negate of another; tested
// as: reverse_negate(canonical) is a rotation of canonical.
bool circuit_is_negasymmetric(const Circuit& c, int k);

int nega_window_count(const Circuit& c, int k);

CircuitClass classify_circuit(const Circuit& c, int k);

// Everything scan_circuits knows about one circuit of the middle shell,
// without materializing the tuple.
struct CircuitScanEntry {
  rank_t canonical_rank = 0;
  int period = 0;
  bool negasymmetric = false;
  int nega_windows = 0;
  rank_t partner_canonical_rank = 0;
};

// Visits every circuit of the middle-shell partition exactly once, in
// increasing canonical rank.
void scan_circuits(const Params& p,
                   const std::function<void(const CircuitScanEntry&)>& visit);

// The full middle-shell partition, sorted by canonical rank. The periods sum
// to r_middle(k, n).
std::vector<Circuit> partition_h(const Params& p);

// Tally of negasymmetric circuits by window count, by exhaustive
// classification; independent of n_i_counts_formula.
NiCounts n_i_counts_enumerated(const Params& p);

// One circuit from each reverse-complementary pair of non-negasymmetric
// circuits: the member with the smaller canonical rank.
std::vector<Circuit> select_addable_circuits(const Params& p);

// e_size + total period of the selected circuits, without building edge sets.
count_t x_size(const Params& p);

}  // namespace oseq
