#pragma once

#include <span>

#include "oseq/edge_set.hpp"
#include "oseq/params.hpp"
#include "oseq/sequence.hpp"
#include "oseq/tuples.hpp"

namespace oseq {

// Difference homomorphism: (beta*(t1-t0), beta*(t2-t1), ...) mod k.
// Only beta = 1 is exercised by the constructions.
KTuple lempel_d(std::span<const symbol_t> t, int k, int beta = 1);

// Preimage of es under the difference map: all (n+1)-tuples whose difference
// tuple is in es. Cardinality is exactly k*|es|.
EdgeSet lift_edges(const EdgeSet& es, rank_t max_rank = kDefaultRankCap);

// Orientable sequence of order n+1 and period k*|build_x(p)|, from an Euler
// circuit of the lifted augmented edge set.
Sequence os_from_x(const Params& p);

}  // namespace oseq
