#include "xmnlab/xgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace xmnlab {

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

template <typename Fn>
void run_striped(unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0u, 1u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&fn, t, threads] { fn(t, threads); });
}

std::vector<element_t> bits_to_indices(const Bitset& bits) {
  std::vector<element_t> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<element_t>(i));
  }
  return out;
}

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order
// until fn returns false.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Depth-first search for the m-subset with the largest common bad row,
// restricted to subsets whose first element satisfies first % stride == offset.
struct MaxSearch {
  const std::vector<Bitset>& rows;
  std::size_t m;
  long long best = -1;
  std::vector<element_t> best_set;
  std::vector<element_t> current;

  void descend(std::size_t start, const Bitset& acc) {
    const std::size_t depth = current.size();
    if (depth == m) {
      const auto count = static_cast<long long>(acc.count());
      if (count > best) {
        best = count;
        best_set = current;
      }
      return;
    }
    const std::size_t last = rows.size() - (m - depth);
    for (std::size_t v = start; v <= last; ++v) {
      Bitset next = acc & rows[v];
      if (best >= 0 && static_cast<long long>(next.count()) <= best) continue;
      current.push_back(static_cast<element_t>(v));
      descend(v + 1, next);
      current.pop_back();
    }
  }
};

}  // namespace

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  adjacency[a].set(b);
  adjacency[b].set(a);
}

std::uint64_t SimpleGraph::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

Bitset XGraph::bad_row(element_t x) const {
  Bitset row = graph.adjacency[x];
  if (loops.test(x)) row.set(x);
  return row;
}

XGraph build_xgraph(const Group& g, const ClassSpec& cls, unsigned threads) {
  const std::size_t n = g.order();
  threads = resolve_threads(threads);
  // bad[x * n + y] for y >= x; rows are striped across workers.
  std::vector<std::uint8_t> bad(n * n, 0);
  run_striped(threads, [&](unsigned offset, unsigned stride) {
    PairClassifier classify(g, cls.id);
    for (std::size_t x = offset; x < n; x += stride) {
      for (std::size_t y = x; y < n; ++y) {
        bad[x * n + y] =
            classify(static_cast<element_t>(x), static_cast<element_t>(y)) ? 0 : 1;
      }
    }
  });

  XGraph xg;
  xg.host = &g;
  xg.cls = cls;
  xg.graph = SimpleGraph(n);
  xg.loops = Bitset(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (bad[x * n + x]) {
      xg.loops.set(x);
      ++xg.bad_ordered;
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!bad[x * n + y]) continue;
      xg.graph.add_edge(x, y);
      ++xg.eta;
      xg.bad_ordered += 2;
    }
  }
  return xg;
}

Rational x_probability(const XGraph& xg) {
  const BigInt total = BigInt(xg.order()) * xg.order();
  return Rational(total - xg.bad_ordered, total);
}

Rational x_probability(const Group& g, const ClassSpec& cls) {
  return x_probability(build_xgraph(g, cls));
}

Bitset common_bad_neighborhood(const XGraph& xg, const std::vector<element_t>& m_set) {
  if (m_set.empty()) throw std::invalid_argument("M must be nonempty");
  Bitset acc(xg.order());
  acc.set();
  for (element_t x : m_set) {
    if (x >= xg.order()) throw std::out_of_range("element index outside the group");
    acc &= xg.bad_row(x);
  }
  return acc;
}

XmnResult satisfies_xmn(const XGraph& xg, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  XmnResult result;
  const std::size_t order = xg.order();
  if (m > order || n > order) {
    result.vacuous = true;
    return result;
  }

  // Every x in a failing M has at least n bad partners.
  std::vector<Bitset> rows;
  std::vector<element_t> candidates;
  for (std::size_t x = 0; x < order; ++x) {
    Bitset row = xg.bad_row(static_cast<element_t>(x));
    if (row.count() >= n) {
      candidates.push_back(static_cast<element_t>(x));
      rows.push_back(std::move(row));
    }
  }

  std::vector<element_t> current;
  std::optional<XmnWitness> found;
  auto descend = [&](auto&& self, std::size_t start, const Bitset& acc) -> void {
    if (current.size() == m) {
      found = XmnWitness{current, bits_to_indices(acc)};
      return;
    }
    const std::size_t need = m - current.size();
    for (std::size_t i = start; i + need <= candidates.size() && !found; ++i) {
      Bitset next = acc & rows[i];
      if (next.count() < n) continue;
      current.push_back(candidates[i]);
      self(self, i + 1, next);
      current.pop_back();
    }
  };
  Bitset all(order);
  all.set();
  descend(descend, 0, all);

  if (found) {
    result.holds = false;
    result.counterexample = std::move(found);
  }
  return result;
}

NStar n_star(const XGraph& xg, std::size_t m, std::size_t m_cap, unsigned threads) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (m > m_cap) {
    throw LimitError("n_star subset size m = " + std::to_string(m) + " exceeds the m cap of " +
                     std::to_string(m_cap));
  }
  const std::size_t order = xg.order();
  if (m > order) throw std::invalid_argument("m exceeds the group order");

  std::vector<Bitset> rows;
  rows.reserve(order);
  for (std::size_t x = 0; x < order; ++x) rows.push_back(xg.bad_row(static_cast<element_t>(x)));

  threads = resolve_threads(threads);
  std::vector<MaxSearch> searches(threads, MaxSearch{rows, m, -1, {}, {}});
  run_striped(threads, [&](unsigned offset, unsigned stride) {
    MaxSearch& s = searches[offset];
    const std::size_t last_first = order - m;
    for (std::size_t v = offset; v <= last_first; v += stride) {
      s.current = {static_cast<element_t>(v)};
      if (s.best >= 0 && static_cast<long long>(rows[v].count()) <= s.best) continue;
      s.descend(v + 1, rows[v]);
    }
  });

  const MaxSearch* winner = nullptr;
  for (const auto& s : searches) {
    if (s.best < 0) continue;
    if (!winner || s.best > winner->best ||
        (s.best == winner->best && s.best_set < winner->best_set)) {
      winner = &s;
    }
  }
  NStar result;
  result.value = static_cast<std::size_t>(winner->best) + 1;
  result.witness.m_set = winner->best_set;
  result.witness.bad_common = bits_to_indices(common_bad_neighborhood(xg, winner->best_set));
  return result;
}

std::optional<KmnWitness> contains_kmn(const SimpleGraph& g, std::size_t m, std::size_t n,
                                       std::size_t m_cap) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (m > m_cap) {
    throw LimitError("K_{m,n} search part size m = " + std::to_string(m) +
                     " exceeds the m cap of " + std::to_string(m_cap));
  }
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.adjacency[v].count() >= n) candidates.push_back(v);
  }

  std::vector<std::size_t> current;
  std::optional<KmnWitness> found;
  auto descend = [&](auto&& self, std::size_t start, const Bitset& acc) -> void {
    if (current.size() == m) {
      Bitset common = acc;
      for (std::size_t v : current) common.reset(v);
      if (common.count() < n) return;
      KmnWitness w{current, {}};
      for (auto i = common.find_first(); w.n_part.size() < n; i = common.find_next(i)) {
        w.n_part.push_back(i);
      }
      found = std::move(w);
      return;
    }
    const std::size_t need = m - current.size();
    for (std::size_t i = start; i + need <= candidates.size() && !found; ++i) {
      Bitset next = acc & g.adjacency[candidates[i]];
      if (next.count() < n) continue;
      current.push_back(candidates[i]);
      self(self, i + 1, next);
      current.pop_back();
    }
  };
  Bitset all(g.size());
  all.set();
  descend(descend, 0, all);
  return found;
}

bool brute_force_xmn_oracle(const Group& g, const ClassSpec& cls, std::size_t m, std::size_t n,
                            OracleLimits limits) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (g.order() > limits.max_order) {
    throw LimitError("oracle limited to groups of order <= " + std::to_string(limits.max_order));
  }
  if (m > limits.max_subset || n > limits.max_subset) {
    throw LimitError("oracle limited to subsets of size <= " + std::to_string(limits.max_subset));
  }
  const std::size_t order = g.order();
  if (m > order || n > order) return true;

  std::vector<std::uint8_t> good(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      good[x * order + y] =
          pair_in_class(g, static_cast<element_t>(x), static_cast<element_t>(y), cls) ? 1 : 0;
    }
  }

  bool holds = true;
  for_each_subset(order, m, [&](const std::vector<std::size_t>& ms) {
    for_each_subset(order, n, [&](const std::vector<std::size_t>& ns) {
      bool some_good = false;
      for (std::size_t x : ms) {
        for (std::size_t y : ns) some_good = some_good || good[x * order + y];
      }
      if (!some_good) holds = false;
      return holds;
    });
    return holds;
  });
  return holds;
}

}  // namespace xmnlab
