#include "oseq/verify.hpp"

#include <vector>

namespace oseq {

namespace {

struct WindowContext {
  rank_t universe = 0;
  rank_t msd_pow = 0;   // k^(n-1)
  std::vector<rank_t> ranks;  // cyclic n-window ranks, in order
};

void check_sequence(const Sequence& s, int n) {
  if (n < 1) throw std::invalid_argument("window length must be >= 1");
  if (s.k < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (s.symbols.empty()) throw std::invalid_argument("empty sequence");
  if (!valid_tuple(s.symbols, s.k)) {
    throw std::invalid_argument("sequence symbol out of range");
  }
}

WindowContext window_ranks(const Sequence& s, int n) {
  check_sequence(s, n);
  WindowContext ctx;
  rank_t u = 1;
  for (int i = 0; i < n; ++i) {
    u *= static_cast<rank_t>(s.k);
    if (u > kHardRankLimit) {
      throw std::invalid_argument("k^n exceeds the supported limit 2^31");
    }
  }
  ctx.universe = u;
  ctx.msd_pow = u / static_cast<rank_t>(s.k);

  const std::size_t period = s.symbols.size();
  rank_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = r * static_cast<rank_t>(s.k) +
        static_cast<rank_t>(s.symbols[static_cast<std::size_t>(i) % period]);
  }
  ctx.ranks.reserve(period);
  for (std::size_t i = 0; i < period; ++i) {
    ctx.ranks.push_back(r);
    r = (r % ctx.msd_pow) * static_cast<rank_t>(s.k) +
        static_cast<rank_t>(
            s.symbols[(i + static_cast<std::size_t>(n)) % period]);
  }
  return ctx;
}

class RankBitset {
 public:
  explicit RankBitset(rank_t universe) : words_((universe + 63) / 64, 0) {}
  bool test(rank_t r) const { return (words_[r >> 6] >> (r & 63)) & 1u; }
  void set(rank_t r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

rank_t reverse_rank(rank_t r, int k, int n) {
  rank_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = out * static_cast<rank_t>(k) + r % static_cast<rank_t>(k);
    r /= static_cast<rank_t>(k);
  }
  return out;
}

}  // namespace

std::vector<KTuple> windows(const Sequence& s, int n) {
  check_sequence(s, n);
  const std::size_t period = s.symbols.size();
  std::vector<KTuple> out;
  out.reserve(period);
  for (std::size_t i = 0; i < period; ++i) {
    KTuple w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      w[static_cast<std::size_t>(j)] =
          s.symbols[(i + static_cast<std::size_t>(j)) % period];
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<Violation> find_violation(const Sequence& s, int n,
                                        VerifyMode mode) {
  const WindowContext ctx = window_ranks(s, n);
  const count_t period = static_cast<count_t>(ctx.ranks.size());

  RankBitset present(ctx.universe);
  for (rank_t r : ctx.ranks) present.set(r);

  // Transformed matches first: they subsume the i == j self-cases the
  // window-only check cannot express.
  if (mode != VerifyMode::window) {
    for (count_t i = 0; i < period; ++i) {
      const rank_t w = ctx.ranks[static_cast<std::size_t>(i)];
      const rank_t tw = mode == VerifyMode::orientable
                            ? reverse_rank(w, s.k, n)
                            : reverse_negate_rank(w, s.k, n);
      if (!present.test(tw)) continue;
      for (count_t j = 0; j < period; ++j) {
        if (ctx.ranks[static_cast<std::size_t>(j)] == tw) {
          return Violation{i, j,
                           mode == VerifyMode::orientable
                               ? Violation::Kind::reverse_match
                               : Violation::Kind::reverse_negate_match};
        }
      }
    }
  }

  RankBitset seen(ctx.universe);
  for (count_t i = 0; i < period; ++i) {
    const rank_t w = ctx.ranks[static_cast<std::size_t>(i)];
    if (seen.test(w)) {
      for (count_t j = 0; j < i; ++j) {
        if (ctx.ranks[static_cast<std::size_t>(j)] == w) {
          return Violation{i, j, Violation::Kind::duplicate};
        }
      }
    }
    seen.set(w);
  }
  return std::nullopt;
}

bool is_n_window_seq(const Sequence& s, int n) {
  return !find_violation(s, n, VerifyMode::window).has_value();
}

bool is_orientable(const Sequence& s, int n) {
  return !find_violation(s, n, VerifyMode::orientable).has_value();
}

bool is_negative_orientable(const Sequence& s, int n) {
  return !find_violation(s, n, VerifyMode::negative_orientable).has_value();
}

count_t minimal_period(const Sequence& s) {
  if (s.symbols.empty()) throw std::invalid_argument("empty sequence");
  const count_t period = s.period();
  for (count_t d = 1; d <= period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (count_t i = 0; ok && i < period; ++i) {
      ok = s.symbols[static_cast<std::size_t>(i)] ==
           s.symbols[static_cast<std::size_t>((i + d) % period)];
    }
    if (ok) return d;
  }
  return period;
}

bool window_multiset_equals(const Sequence& s, const EdgeSet& es, int n) {
  if (s.k != es.k() || n != es.order()) return false;
  if (s.period() != es.size()) return false;
  const WindowContext ctx = window_ranks(s, n);
  RankBitset present(ctx.universe);
  for (rank_t r : ctx.ranks) {
    if (present.test(r)) return false;  // repeated window
    present.set(r);
  }
  return present.words() == es.words();
}

}  // namespace oseq
