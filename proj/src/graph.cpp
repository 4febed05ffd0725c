#include "oseq/graph.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "oseq/circuits.hpp"
#include "oseq/verify.hpp"

namespace oseq {

namespace {

// Index of the lexicographically least rotation (two-pointer scan).
std::size_t least_rotation_index(const std::vector<symbol_t>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const symbol_t a = s[(i + len) % n];
    const symbol_t b = s[(j + len) % n];
    if (a == b) {
      ++len;
      continue;
    }
    if (a > b) {
      i += len + 1;
    } else {
      j += len + 1;
    }
    if (i == j) ++j;
    len = 0;
  }
  return std::min(i, j);
}

}  // namespace

EdgeSet build_e(const Params& p) {
  p.require_materializable();
  const int k = p.k();
  const int n = p.n();
  const count_t middle = static_cast<count_t>(k) * n;
  EdgeSet es(k, n);

  std::vector<symbol_t> t(static_cast<std::size_t>(n), 0);
  count_t w2 = middle;  // all-zero tuple
  const rank_t total = p.tuple_count();
  for (rank_t r = 0;;) {
    if (w2 < middle) es.set(r);
    ++r;
    if (r == total) break;
    int i = n - 1;
    while (true) {
      symbol_t& s = t[static_cast<std::size_t>(i)];
      if (s + 1 == k) {
        w2 += 2 - k;
        s = 0;
        --i;
      } else {
        w2 += (s == 0) ? 2 - k : 2;
        ++s;
        break;
      }
    }
  }

  if (es.size() != e_size(k, n)) {
    throw internal_error("materialized low-shell size disagrees with formula");
  }
  return es;
}

EdgeSet build_x(const Params& p) {
  EdgeSet es = build_e(p);
  const int k = p.k();
  const rank_t msd_pow = p.vertex_count();

  std::vector<std::pair<rank_t, int>> selected;
  scan_circuits(p, [&](const CircuitScanEntry& e) {
    if (!e.negasymmetric && e.canonical_rank < e.partner_canonical_rank) {
      selected.emplace_back(e.canonical_rank, e.period);
    }
  });

  for (const auto& [canonical, period] : selected) {
    rank_t r = canonical;
    for (int j = 0; j < period; ++j) {
      es.set(r);
      r = rotate_left_rank(r, msd_pow, k);
    }
  }
  return es;
}

bool check_balanced(const EdgeSet& es) {
  const rank_t vertices = es.vertex_universe();
  std::vector<std::int32_t> diff(vertices, 0);
  const rank_t k = static_cast<rank_t>(es.k());
  es.for_each([&](rank_t r) {
    ++diff[r / k];        // out-degree of the prefix vertex
    --diff[r % vertices]; // in-degree of the suffix vertex
  });
  return std::all_of(diff.begin(), diff.end(),
                     [](std::int32_t d) { return d == 0; });
}

bool check_connected(const EdgeSet& es) {
  const rank_t first = es.first_set();
  if (first == EdgeSet::npos) return true;
  const rank_t vertices = es.vertex_universe();
  const int k = es.k();

  std::vector<std::uint64_t> seen((vertices + 63) / 64, 0);
  const auto mark = [&](rank_t v) {
    std::uint64_t& w = seen[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool fresh = !(w & bit);
    w |= bit;
    return fresh;
  };

  std::vector<rank_t> stack;
  const rank_t start = first / static_cast<rank_t>(k);
  mark(start);
  stack.push_back(start);
  while (!stack.empty()) {
    const rank_t v = stack.back();
    stack.pop_back();
    const rank_t base = v * static_cast<rank_t>(k);
    for (int s = 0; s < k; ++s) {
      if (!es.test(base + static_cast<rank_t>(s))) continue;
      const rank_t to = (base + static_cast<rank_t>(s)) % vertices;
      if (mark(to)) stack.push_back(to);
    }
  }

  // Every vertex with an outgoing edge must have been reached.
  bool ok = true;
  es.for_each([&](rank_t r) {
    const rank_t v = r / static_cast<rank_t>(k);
    if (!((seen[v >> 6] >> (v & 63)) & 1u)) ok = false;
  });
  return ok;
}

Sequence eulerian_circuit(const EdgeSet& es) {
  if (es.size() == 0) throw std::invalid_argument("empty edge set");
  if (!check_balanced(es)) throw not_eulerian("edge set is not balanced");
  if (!check_connected(es)) throw not_eulerian("edge set is not connected");

  const int k = es.k();
  const int n = es.order();
  const rank_t vertices = es.vertex_universe();
  std::vector<std::uint64_t> remaining = es.words();
  const auto take = [&](rank_t r) {
    remaining[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
  };
  const auto has = [&](rank_t r) {
    return (remaining[r >> 6] >> (r & 63)) & 1u;
  };

  std::vector<std::uint16_t> next_sym(vertices, 0);
  std::vector<std::uint32_t> path;
  std::vector<std::uint32_t> walk;
  path.reserve(static_cast<std::size_t>(es.size()) + 1);
  walk.reserve(static_cast<std::size_t>(es.size()) + 1);

  const rank_t start = es.first_set() / static_cast<rank_t>(k);
  path.push_back(static_cast<std::uint32_t>(start));
  while (!path.empty()) {
    const rank_t v = path.back();
    const rank_t base = v * static_cast<rank_t>(k);
    int s = next_sym[v];
    while (s < k && !has(base + static_cast<rank_t>(s))) ++s;
    if (s < k) {
      take(base + static_cast<rank_t>(s));
      next_sym[v] = static_cast<std::uint16_t>(s + 1);
      path.push_back(
          static_cast<std::uint32_t>((base + static_cast<rank_t>(s)) % vertices));
    } else {
      walk.push_back(path.back());
      path.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());

  if (static_cast<count_t>(walk.size()) != es.size() + 1) {
    throw internal_error("euler walk did not cover every edge");
  }

  // Symbol i is the leading symbol of the i-th vertex on the walk.
  rank_t lead_pow = 1;  // k^(n-2): leading symbol of an (n-1)-tuple vertex
  for (int i = 0; i < n - 2; ++i) lead_pow *= static_cast<rank_t>(k);
  Sequence out;
  out.k = k;
  out.order = n;
  out.symbols.resize(walk.size() - 1);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    out.symbols[i] = static_cast<symbol_t>(walk[i] / lead_pow);
  }

  std::rotate(out.symbols.begin(),
              out.symbols.begin() +
                  static_cast<std::ptrdiff_t>(least_rotation_index(out.symbols)),
              out.symbols.end());
  return out;
}

Sequence nos_from_x(const Params& p) {
  EdgeSet x = build_x(p);
  Sequence s;
  try {
    s = eulerian_circuit(x);
  } catch (const not_eulerian& e) {
    throw internal_error(std::string("augmented edge set lost the Euler property: ") +
                         e.what());
  }
  if (!is_negative_orientable(s, p.n()) || !window_multiset_equals(s, x, p.n())) {
    throw internal_error("constructed sequence failed self-certification");
  }
  return s;
}

}  // namespace oseq
