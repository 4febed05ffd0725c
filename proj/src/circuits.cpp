#include "oseq/circuits.hpp"

#include <algorithm>

namespace oseq {

namespace {

// Rotation ranks of an n-tuple, first entry the tuple itself. Returns the
// minimal period and fills rot[0..period-1] with the distinct rotations.
int rotation_ranks(rank_t start, std::span<const symbol_t> t, rank_t msd_pow,
                   int k, std::vector<rank_t>& rot) {
  rot.clear();
  rank_t r = start;
  const int n = static_cast<int>(t.size());
  for (int j = 0; j < n; ++j) {
    rot.push_back(r);
    r = (r % msd_pow) * static_cast<rank_t>(k) +
        static_cast<rank_t>(t[static_cast<std::size_t>(j)]);
    if (r == start) return j + 1;
  }
  throw internal_error("rotation did not close");
}

bool rotation_is_negasymmetric(std::span<const symbol_t> t, int j, int k) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i <= (n - 1) / 2; ++i) {
    const symbol_t a = t[static_cast<std::size_t>((j + i) % n)];
    const symbol_t b = t[static_cast<std::size_t>((j + n - 1 - i) % n)];
    if ((a + b) % k != 0) return false;
  }
  return true;
}

}  // namespace

Circuit circuit_of(std::span<const symbol_t> t, int k) {
  if (!valid_tuple(t, k)) throw std::invalid_argument("invalid tuple");
  const int n = static_cast<int>(t.size());
  rank_t msd_pow = 1;
  for (int i = 1; i < n; ++i) msd_pow *= static_cast<rank_t>(k);

  const rank_t start = encode_tuple(t, k);
  std::vector<rank_t> rot;
  const int period = rotation_ranks(start, t, msd_pow, k, rot);
  const rank_t canonical = *std::min_element(rot.begin(), rot.end());
  return Circuit{decode_tuple(canonical, k, n), period};
}

bool circuit_is_negasymmetric(const Circuit& c, int k) {
  const int n = static_cast<int>(c.canonical.size());
  for (int j = 0; j < n; ++j) {
    bool match = true;
    // rotation by j equals reverse_negate(canonical)?
    for (int i = 0; i < n && match; ++i) {
      const symbol_t s = c.canonical[static_cast<std::size_t>((j + i) % n)];
      const symbol_t rn =
          c.canonical[static_cast<std::size_t>(n - 1 - i)] == 0
              ? 0
              : k - c.canonical[static_cast<std::size_t>(n - 1 - i)];
      match = (s == rn);
    }
    if (match) return true;
  }
  return false;
}

int nega_window_count(const Circuit& c, int k) {
  int count = 0;
  for (int j = 0; j < c.period; ++j) {
    if (rotation_is_negasymmetric(c.canonical, j, k)) ++count;
  }
  return count;
}

CircuitClass classify_circuit(const Circuit& c, int k) {
  CircuitClass out;
  out.circuit = c;
  out.negasymmetric = circuit_is_negasymmetric(c, k);
  out.nega_window_count = out.negasymmetric ? nega_window_count(c, k) : 0;
  out.partner_canonical =
      out.negasymmetric ? c.canonical
                        : circuit_of(reverse_negate(c.canonical, k), k).canonical;
  return out;
}

void scan_circuits(const Params& p,
                   const std::function<void(const CircuitScanEntry&)>& visit) {
  p.require_materializable();
  const int k = p.k();
  const int n = p.n();
  const rank_t total = p.tuple_count();
  const rank_t msd_pow = p.vertex_count();
  const count_t middle = static_cast<count_t>(k) * n;

  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  std::vector<symbol_t> t(static_cast<std::size_t>(n), 0);
  std::vector<rank_t> rot;
  rot.reserve(static_cast<std::size_t>(n));

  count_t w2 = middle;  // all-zero tuple
  rank_t rank = 0;
  while (true) {
    if (w2 == middle && !((visited[rank >> 6] >> (rank & 63)) & 1u)) {
      // First unvisited edge of a circuit is its least rotation.
      const int period = rotation_ranks(rank, t, msd_pow, k, rot);
      for (int j = 0; j < period; ++j) {
        visited[rot[static_cast<std::size_t>(j)] >> 6] |=
            std::uint64_t{1} << (rot[static_cast<std::size_t>(j)] & 63);
      }

      CircuitScanEntry e;
      e.canonical_rank = rank;
      e.period = period;

      const rank_t rn = reverse_negate_rank(rank, k, n);
      e.negasymmetric =
          std::find(rot.begin(), rot.end(), rn) != rot.end();
      if (e.negasymmetric) {
        e.partner_canonical_rank = rank;
        for (int j = 0; j < period; ++j) {
          if (rotation_is_negasymmetric(t, j, k)) ++e.nega_windows;
        }
      } else {
        // Canonical rank of the partner circuit: least rotation of rn.
        rank_t r = rn;
        rank_t best = rn;
        for (int j = 1; j < n; ++j) {
          r = (r % msd_pow) * static_cast<rank_t>(k) + r / msd_pow;
          best = std::min(best, r);
        }
        e.partner_canonical_rank = best;
      }
      visit(e);
    }

    // Odometer step with incremental doubled pseudoweight.
    ++rank;
    if (rank == total) break;
    int i = n - 1;
    while (true) {
      symbol_t& s = t[static_cast<std::size_t>(i)];
      if (s + 1 == k) {
        w2 += 2 - k;  // k-1 -> 0: weight 2(k-1) -> k
        s = 0;
        --i;
      } else {
        w2 += (s == 0) ? 2 - k : 2;  // 0 -> 1 changes k -> 2, else +2
        ++s;
        break;
      }
    }
  }
}

std::vector<Circuit> partition_h(const Params& p) {
  std::vector<Circuit> out;
  const int k = p.k();
  const int n = p.n();
  scan_circuits(p, [&](const CircuitScanEntry& e) {
    out.push_back(Circuit{decode_tuple(e.canonical_rank, k, n), e.period});
  });
  return out;
}

NiCounts n_i_counts_enumerated(const Params& p) {
  NiCounts ni;
  scan_circuits(p, [&](const CircuitScanEntry& e) {
    if (!e.negasymmetric) return;
    switch (e.nega_windows) {
      case 0: ++ni.n0; break;
      case 1: ++ni.n1; break;
      case 2: ++ni.n2; break;
      default:
        throw internal_error("circuit with more than two negasymmetric windows");
    }
  });
  return ni;
}

std::vector<Circuit> select_addable_circuits(const Params& p) {
  std::vector<Circuit> out;
  const int k = p.k();
  const int n = p.n();
  scan_circuits(p, [&](const CircuitScanEntry& e) {
    if (!e.negasymmetric && e.canonical_rank < e.partner_canonical_rank) {
      out.push_back(Circuit{decode_tuple(e.canonical_rank, k, n), e.period});
    }
  });
  return out;
}

count_t x_size(const Params& p) {
  count_t added = 0;
  scan_circuits(p, [&](const CircuitScanEntry& e) {
    if (!e.negasymmetric && e.canonical_rank < e.partner_canonical_rank) {
      added += e.period;
    }
  });
  return checked_add(e_size(p.k(), p.n()), added);
}

}  // namespace oseq
