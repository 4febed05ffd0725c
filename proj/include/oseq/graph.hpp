#pragma once

#include "oseq/edge_set.hpp"
#include "oseq/params.hpp"
#include "oseq/sequence.hpp"

namespace oseq {

// All n-tuples with doubled pseudoweight below k*n. Balanced and connected.
EdgeSet build_e(const Params& p);

// build_e plus every edge of the selected non-negasymmetric circuits.
EdgeSet build_x(const Params& p);

// Every vertex has out-degree equal to in-degree.
bool check_balanced(const EdgeSet& es);

// Every vertex with an outgoing edge is reachable from the least such vertex.
bool check_connected(const EdgeSet& es);

// Euler circuit of es as a symbol sequence: the cyclic n-windows of the
// result are exactly the edges of es, each once. Deterministic: successors
// consumed in increasing final symbol from the least-rank start vertex, then
// rotated to the lexicographically least rotation. Throws invalid_argument
// on an empty set and not_eulerian when balance or connectivity fails.
Sequence eulerian_circuit(const EdgeSet& es);

// Negative orientable sequence of order n and period |build_x|.
Sequence nos_from_x(const Params& p);

}  // namespace oseq
