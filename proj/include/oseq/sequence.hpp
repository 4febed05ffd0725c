#pragma once

#include <vector>

#include "oseq/params.hpp"

namespace oseq {

// One period of a periodic k-ary sequence, tagged with the order n it was
// built (or is to be checked) at.
struct Sequence {
  std::vector<symbol_t> symbols;
  int k = 0;
  int order = 0;

  count_t period() const { return static_cast<count_t>(symbols.size()); }
};

}  // namespace oseq
