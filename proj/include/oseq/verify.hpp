#pragma once

#include <optional>
#include <vector>

#include "oseq/edge_set.hpp"
#include "oseq/params.hpp"
#include "oseq/sequence.hpp"
#include "oseq/tuples.hpp"

namespace oseq {

// Independent certification of generated sequences. Shares only the tuple
// algebra with the constructors; nothing here calls the builders.

enum class VerifyMode { window, orientable, negative_orientable };

struct Violation {
  enum class Kind { duplicate, reverse_match, reverse_negate_match };
  count_t i = 0;
  count_t j = 0;
  Kind kind = Kind::duplicate;
};

// The period() cyclic n-windows, in order.
std::vector<KTuple> windows(const Sequence& s, int n);

// First violating window pair for the requested property, or nullopt.
// window: some n-window repeats. orientable: additionally, some window equals
// the reverse of a (possibly identical) window. negative_orientable: same
// with reverse-negate.
std::optional<Violation> find_violation(const Sequence& s, int n,
                                        VerifyMode mode);

bool is_n_window_seq(const Sequence& s, int n);
bool is_orientable(const Sequence& s, int n);
bool is_negative_orientable(const Sequence& s, int n);

// Smallest divisor d of period() such that shifting by d fixes the symbols.
count_t minimal_period(const Sequence& s);

// The cyclic n-window set of s is exactly es, each window once.
bool window_multiset_equals(const Sequence& s, const EdgeSet& es, int n);

}  // namespace oseq
