#include "oseq/circuits.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "golden_tables.hpp"
#include "test_support.hpp"

using namespace oseq;
using testsupport::brute_pseudoweight2;
using testsupport::for_all_tuples;

namespace {

// Brute-force reference: rotation classes of the middle shell via explicit
// tuple sets, no rank arithmetic.
struct BruteCircuit {
  KTuple canonical;
  std::set<KTuple> edges;
  bool negasymmetric = false;
  int nega_windows = 0;
  KTuple partner;
};

std::vector<KTuple> all_rotations(const KTuple& t) {
  std::vector<KTuple> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    KTuple r(t.begin() + static_cast<std::ptrdiff_t>(j), t.end());
    r.insert(r.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BruteCircuit> brute_partition(int k, int n) {
  std::map<KTuple, BruteCircuit> by_canonical;
  for_all_tuples(k, n, [&](const KTuple& t) {
    if (brute_pseudoweight2(t, k) != static_cast<std::int64_t>(k) * n) return;
    const auto rots = all_rotations(t);
    const KTuple canonical = *std::min_element(rots.begin(), rots.end());
    auto& c = by_canonical[canonical];
    c.canonical = canonical;
    c.edges.insert(t);
  });
  std::vector<BruteCircuit> out;
  for (auto& [canonical, c] : by_canonical) {
    c.negasymmetric = false;
    for (const KTuple& a : c.edges) {
      for (const KTuple& b : c.edges) {
        if (a == reverse_negate(b, k)) c.negasymmetric = true;
      }
    }
    c.nega_windows = static_cast<int>(
        std::count_if(c.edges.begin(), c.edges.end(),
                      [k](const KTuple& e) { return is_negasymmetric(e, k); }));
    const auto partner_rots = all_rotations(reverse_negate(canonical, k));
    c.partner = *std::min_element(partner_rots.begin(), partner_rots.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("circuit_of examples") {
  CHECK(circuit_of(KTuple{1, 2, 0}, 3) == Circuit{{0, 1, 2}, 3});
  CHECK(circuit_of(KTuple{0, 0, 0}, 3) == Circuit{{0, 0, 0}, 1});
  CHECK(circuit_of(KTuple{1, 2, 1, 2}, 3) == Circuit{{1, 2, 1, 2}, 2});
}

TEST_CASE("circuit negasymmetry and window-count examples") {
  const int k = 3;
  CHECK_FALSE(circuit_is_negasymmetric(circuit_of(KTuple{0, 1, 2, 2, 1}, k), k));
  CHECK(circuit_is_negasymmetric(circuit_of(KTuple{0, 1, 0, 2}, k), k));
  CHECK(nega_window_count(circuit_of(KTuple{0, 1, 0, 2}, k), k) == 0);
  CHECK(circuit_is_negasymmetric(circuit_of(KTuple{0, 0, 0}, 5), 5));
  CHECK(nega_window_count(circuit_of(KTuple{0, 0, 0, 0}, k), k) == 1);
  CHECK(nega_window_count(circuit_of(KTuple{0, 0, 1, 2}, k), k) == 2);
  // negasymmetric circuit without negasymmetric windows: rotation by 2
  // matches the reverse-negative
  const Circuit c = circuit_of(KTuple{1, 0, 2, 0}, k);
  CHECK(circuit_is_negasymmetric(c, k));
  CHECK(nega_window_count(c, k) == 0);
}

TEST_CASE("middle-shell partitions for the worked examples") {
  auto canonicals = [](const std::vector<Circuit>& cs) {
    std::vector<KTuple> out;
    for (const auto& c : cs) out.push_back(c.canonical);
    return out;
  };

  SUBCASE("k=3 n=3") {
    const auto cs = partition_h(Params(3, 3));
    CHECK(canonicals(cs) ==
          std::vector<KTuple>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
    CHECK(cs[0].period == 1);
    CHECK(cs[1].period == 3);
    CHECK(cs[2].period == 3);
  }

  SUBCASE("k=5 n=3") {
    const auto cs = partition_h(Params(5, 3));
    std::vector<KTuple> expected = {
        {0, 0, 0}, {0, 1, 4}, {0, 2, 3}, {0, 3, 2}, {0, 4, 1}};
    CHECK(canonicals(cs) == expected);
    for (const auto& c : cs) {
      CHECK(circuit_is_negasymmetric(c, 5));
      CHECK(nega_window_count(c, 5) == 1);
    }
  }

  SUBCASE("k=3 n=4") {
    const auto cs = partition_h(Params(3, 4));
    const auto cans = canonicals(cs);
    std::set<KTuple> got(cans.begin(), cans.end());
    std::set<KTuple> expected;
    for (const KTuple& rep : std::vector<KTuple>{{0, 0, 0, 0},
                                                 {1, 2, 1, 2},
                                                 {0, 0, 1, 2},
                                                 {0, 0, 2, 1},
                                                 {0, 1, 0, 2},
                                                 {1, 1, 2, 2}}) {
      expected.insert(circuit_of(rep, 3).canonical);
    }
    CHECK(got == expected);
    count_t total = 0;
    for (const auto& c : cs) total += c.period;
    CHECK(total == 19);
  }

  SUBCASE("k=3 n=5 has 11 circuits, two non-negasymmetric") {
    const auto cs = partition_h(Params(3, 5));
    CHECK(cs.size() == 11);
    std::vector<KTuple> bad;
    for (const auto& c : cs) {
      if (!circuit_is_negasymmetric(c, 3)) bad.push_back(c.canonical);
    }
    CHECK(bad == std::vector<KTuple>{{0, 1, 2, 2, 1}, {0, 2, 1, 1, 2}});
  }

  SUBCASE("k=3 n=6 has 26 circuits") {
    const auto cs = partition_h(Params(3, 6));
    CHECK(cs.size() == 26);
    std::map<int, int> by_period;
    for (const auto& c : cs) ++by_period[c.period];
    CHECK(by_period == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {6, 22}});
  }

  SUBCASE("k=4 n=3 has 8 circuits, all negasymmetric with one window") {
    const auto cs = partition_h(Params(4, 3));
    CHECK(cs.size() == 8);
    int period_one = 0;
    for (const auto& c : cs) {
      CHECK(circuit_is_negasymmetric(c, 4));
      CHECK(nega_window_count(c, 4) == 1);
      if (c.period == 1) ++period_one;
    }
    CHECK(period_one == 2);  // all-zero and all-2
  }

  SUBCASE("k=4 n=4 has 20 circuits") {
    const auto cs = partition_h(Params(4, 4));
    CHECK(cs.size() == 20);
    std::map<int, int> by_period;
    for (const auto& c : cs) ++by_period[c.period];
    CHECK(by_period == std::map<int, int>{{1, 2}, {2, 2}, {4, 16}});
  }
}

TEST_CASE("period sums cover the shell and divide n") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 6; ++n) {
      const auto cs = partition_h(Params(k, n));
      count_t total = 0;
      for (const auto& c : cs) {
        CHECK(n % c.period == 0);
        CHECK(pseudoweight2(c.canonical, k) == static_cast<count_t>(k) * n);
        total += c.period;
      }
      CHECK(total == r_middle(k, n));
      CHECK(std::is_sorted(cs.begin(), cs.end(),
                           [](const Circuit& a, const Circuit& b) {
                             return a.canonical < b.canonical;
                           }));
    }
  }
}

TEST_CASE("classification agrees with the brute-force oracle") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 6; ++n) {
      const auto brute = brute_partition(k, n);
      const auto cs = partition_h(Params(k, n));
      REQUIRE(cs.size() == brute.size());
      for (std::size_t i = 0; i < cs.size(); ++i) {
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(cs[i].canonical == brute[i].canonical);
        CHECK(static_cast<std::size_t>(cs[i].period) == brute[i].edges.size());
        const CircuitClass cls = classify_circuit(cs[i], k);
        CHECK(cls.negasymmetric == brute[i].negasymmetric);
        CHECK(cls.nega_window_count ==
              (brute[i].negasymmetric ? brute[i].nega_windows : 0));
        CHECK(cls.partner_canonical == brute[i].partner);
        if (!cls.negasymmetric) CHECK(brute[i].nega_windows == 0);
      }
    }
  }
}

TEST_CASE("reverse-negate induces an involution with negasymmetric fixed points") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 6; ++n) {
      std::map<KTuple, CircuitClass> classes;
      for (const auto& c : partition_h(Params(k, n))) {
        classes[c.canonical] = classify_circuit(c, k);
      }
      for (const auto& [canonical, cls] : classes) {
        REQUIRE(classes.count(cls.partner_canonical) == 1);
        const auto& back = classes.at(cls.partner_canonical);
        CHECK(back.partner_canonical == canonical);
        CHECK((cls.partner_canonical == canonical) == cls.negasymmetric);
        CHECK(back.negasymmetric == cls.negasymmetric);
        CHECK(back.circuit.period == cls.circuit.period);
      }
    }
  }
}

TEST_CASE("enumerated circuit-class counts match formula and table") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 3; k <= 6; ++k) {
      const NiCounts enumerated = n_i_counts_enumerated(Params(k, n));
      CAPTURE(k);
      CAPTURE(n);
      CHECK(enumerated == n_i_counts_formula(k, n));
      const auto& g = golden::kNiTable[n - 3][k - 3];
      CHECK(enumerated == NiCounts{g.n0, g.n1, g.n2});
    }
  }
  CHECK(n_i_counts_enumerated(Params(3, 6)) == NiCounts{3, 3, 12});
  CHECK(n_i_counts_enumerated(Params(4, 4)) == NiCounts{7, 2, 7});
  CHECK(n_i_counts_enumerated(Params(3, 4)) == NiCounts{1, 1, 4});
}

TEST_CASE("negasymmetric window positions obey the period laws") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 6; ++n) {
      for (const auto& c : partition_h(Params(k, n))) {
        const CircuitClass cls = classify_circuit(c, k);
        if (!cls.negasymmetric) continue;
        if (c.period % 2 == 1) {
          CHECK(cls.nega_window_count == 1);
        } else {
          CHECK((cls.nega_window_count == 0 || cls.nega_window_count == 2));
        }
        if (cls.nega_window_count == 2) {
          // the two windows sit half a period apart
          std::vector<int> where;
          for (int j = 0; j < c.period; ++j) {
            KTuple rot(c.canonical.begin() + j, c.canonical.end());
            rot.insert(rot.end(), c.canonical.begin(), c.canonical.begin() + j);
            if (is_negasymmetric(rot, k)) where.push_back(j);
          }
          REQUIRE(where.size() == 2);
          CHECK(where[1] - where[0] == c.period / 2);
        }
      }
    }
  }
}

TEST_CASE("negasymmetric circuits and their shorter windows") {
  // odd period: exactly one negasymmetric (n-1)-window; even period with no
  // negasymmetric n-window: exactly two distinct negasymmetric (n-1)-windows
  for (int k = 3; k <= 4; ++k) {
    for (int n = 4; n <= 6; n += 2) {
      for (const auto& c : partition_h(Params(k, n))) {
        const CircuitClass cls = classify_circuit(c, k);
        if (!cls.negasymmetric) continue;
        std::set<KTuple> shorter;
        int shorter_count = 0;
        for (int j = 0; j < n; ++j) {
          KTuple w;
          for (int t = 0; t < n - 1; ++t) {
            w.push_back(c.canonical[static_cast<std::size_t>((j + t) % n)]);
          }
          if (is_negasymmetric(w, k)) {
            ++shorter_count;
            shorter.insert(w);
          }
        }
        if (c.period % 2 == 1) {
          CHECK(shorter.size() == 1);
        } else if (cls.nega_window_count == 0) {
          CHECK(shorter.size() == 2);
        }
        (void)shorter_count;
      }
    }
  }
}

TEST_CASE("vertex degrees in the middle shell") {
  // out-degree == in-degree at every vertex; for odd k the degree is at most
  // one, for even k it is two exactly at vertex weight k(n-1)/2
  for (int k = 3; k <= 4; ++k) {
    for (int n = 3; n <= 5; ++n) {
      std::map<KTuple, int> out_deg, in_deg;
      for_all_tuples(k, n, [&](const KTuple& t) {
        if (brute_pseudoweight2(t, k) != static_cast<std::int64_t>(k) * n) return;
        KTuple from(t.begin(), t.end() - 1);
        KTuple to(t.begin() + 1, t.end());
        ++out_deg[from];
        ++in_deg[to];
      });
      for_all_tuples(k, n - 1, [&](const KTuple& v) {
        const int od = out_deg.count(v) ? out_deg.at(v) : 0;
        const int id = in_deg.count(v) ? in_deg.at(v) : 0;
        CAPTURE(k);
        CAPTURE(n);
        CHECK(od == id);
        const std::int64_t w2 = brute_pseudoweight2(v, k);
        const std::int64_t mid2 = static_cast<std::int64_t>(k) * n;
        const std::int64_t d = mid2 - w2;  // doubled weight of the entering symbol
        const bool in_band = d >= 2 && d <= 2 * (k - 1) && d % 2 == 0;
        if (k % 2 == 1) {
          const bool deg_one =
              in_band || (w2 == static_cast<std::int64_t>(k) * (n - 1));
          CHECK(od == (deg_one ? 1 : 0));
        } else {
          if (w2 == static_cast<std::int64_t>(k) * (n - 1)) {
            CHECK(od == 2);
          } else if (in_band) {
            CHECK(od == 1);
          } else {
            CHECK(od == 0);
          }
        }
      });
    }
  }
}

TEST_CASE("vertex-disjoint circuits for odd k") {
  for (int k : {3, 5}) {
    for (int n : {3, 4, 5}) {
      std::set<KTuple> seen;
      for (const auto& c : partition_h(Params(k, n))) {
        for (int j = 0; j < c.period; ++j) {
          KTuple v;
          for (int t = 0; t < n - 1; ++t) {
            v.push_back(c.canonical[static_cast<std::size_t>((j + t) % n)]);
          }
          CHECK(seen.insert(v).second);
        }
      }
    }
  }
}

TEST_CASE("selected circuits for the worked examples") {
  SUBCASE("k=3 n=5") {
    const auto sel = select_addable_circuits(Params(3, 5));
    REQUIRE(sel.size() == 1);
    CHECK(sel[0].canonical == KTuple{0, 1, 2, 2, 1});
    CHECK(sel[0].period == 5);
  }
  SUBCASE("k=3 n=6") {
    const auto sel = select_addable_circuits(Params(3, 6));
    REQUIRE(sel.size() == 4);
    std::vector<KTuple> got;
    for (const auto& c : sel) got.push_back(c.canonical);
    CHECK(got == std::vector<KTuple>{{0, 0, 1, 2, 2, 1},
                                     {0, 1, 0, 1, 2, 2},
                                     {0, 1, 0, 2, 1, 2},
                                     {0, 1, 0, 2, 2, 1}});
  }
  SUBCASE("k=4 n=4") {
    const auto sel = select_addable_circuits(Params(4, 4));
    REQUIRE(sel.size() == 2);
    CHECK(sel[0].canonical == KTuple{0, 1, 3, 2});
    CHECK(sel[1].canonical == KTuple{0, 2, 3, 1});
  }
  SUBCASE("k=3 n=3 and k=3 n=4 have none") {
    CHECK(select_addable_circuits(Params(3, 3)).empty());
    CHECK(select_addable_circuits(Params(3, 4)).empty());
  }
}

TEST_CASE("selection takes exactly one circuit per reverse-complementary pair") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 3; n <= 6; ++n) {
      const Params p(k, n);
      const auto sel = select_addable_circuits(p);
      std::set<KTuple> selected;
      for (const auto& c : sel) selected.insert(c.canonical);
      count_t non_nega = 0;
      for (const auto& c : partition_h(p)) {
        const CircuitClass cls = classify_circuit(c, k);
        if (cls.negasymmetric) {
          CHECK(selected.count(c.canonical) == 0);
        } else {
          ++non_nega;
          // exactly one endpoint of each pair selected, the lexicographically
          // smaller one
          const bool mine = selected.count(c.canonical) > 0;
          const bool partners = selected.count(cls.partner_canonical) > 0;
          CHECK(mine != partners);
          CHECK(mine == (c.canonical < cls.partner_canonical));
        }
      }
      CHECK(non_nega == 2 * static_cast<count_t>(sel.size()));
    }
  }
}

TEST_CASE("x_size accumulates the selected periods") {
  CHECK(x_size(Params(3, 5)) == 101);
  CHECK(x_size(Params(3, 6)) == 318);
  CHECK(x_size(Params(4, 4)) == 101);
  CHECK(x_size(Params(3, 4)) == 31);  // nothing addable
}

TEST_CASE("selected edges stay clear of their reverse-negatives") {
  for (int k = 3; k <= 4; ++k) {
    for (int n = 4; n <= 6; ++n) {
      std::set<KTuple> added;
      for (const auto& c : select_addable_circuits(Params(k, n))) {
        for (int j = 0; j < c.period; ++j) {
          KTuple rot(c.canonical.begin() + j, c.canonical.end());
          rot.insert(rot.end(), c.canonical.begin(), c.canonical.begin() + j);
          added.insert(rot);
        }
      }
      for (const auto& e : added) {
        CHECK(added.count(reverse_negate(e, k)) == 0);
      }
    }
  }
}

TEST_CASE("materialization cap is enforced") {
  Params tight(3, 5, /*max_rank=*/100);
  CHECK_THROWS_AS(partition_h(tight), std::invalid_argument);
  CHECK_THROWS_AS(Params(10, 10), std::invalid_argument);  // beyond 2^31
}
