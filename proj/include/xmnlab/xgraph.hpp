#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "xmnlab/group.hpp"
#include "xmnlab/group_class.hpp"
#include "xmnlab/rational.hpp"

namespace xmnlab {

using Bitset = boost::dynamic_bitset<>;

inline constexpr std::size_t kDefaultMCap = 4;

// Undirected simple graph on vertices 0..size-1 as adjacency bitsets.
struct SimpleGraph {
  std::vector<Bitset> adjacency;

  explicit SimpleGraph(std::size_t vertices = 0) : adjacency(vertices, Bitset(vertices)) {}
  std::size_t size() const { return adjacency.size(); }
  void add_edge(std::size_t a, std::size_t b);
  std::uint64_t edge_count() const;
};

// The non-X generating graph of a group: x ~ y (x != y) iff <x, y> is not in
// the class. Pairs (x, x) with <x> outside the class are kept as loop flags.
struct XGraph {
  const Group* host = nullptr;
  ClassSpec cls;
  SimpleGraph graph;
  Bitset loops;
  // Unordered adjacent pairs of distinct vertices.
  std::uint64_t eta = 0;
  // Ordered pairs (x, y) in G x G, x = y allowed, with <x, y> outside the class.
  std::uint64_t bad_ordered = 0;

  std::size_t order() const { return graph.size(); }
  const Bitset& row(element_t x) const { return graph.adjacency[x]; }
  // Row of x with the loop bit included: every y with <x, y> outside the class.
  Bitset bad_row(element_t x) const;
};

// Deterministic for any thread count; `threads` = 0 picks hardware concurrency.
XGraph build_xgraph(const Group& g, const ClassSpec& cls, unsigned threads = 1);

// (|G|^2 - bad_ordered) / |G|^2 over ordered pairs with replacement.
Rational x_probability(const XGraph& xg);
Rational x_probability(const Group& g, const ClassSpec& cls);

// { y : <x, y> outside the class for all x in M }.
Bitset common_bad_neighborhood(const XGraph& xg, const std::vector<element_t>& m_set);

struct XmnWitness {
  std::vector<element_t> m_set;
  std::vector<element_t> bad_common;
};

struct XmnResult {
  bool holds = true;
  // m or n exceeds |G|: no subsets of that size exist.
  bool vacuous = false;
  std::optional<XmnWitness> counterexample;
};

// Condition X(m, n): every m-set M and n-set N (overlap allowed) contain a
// pair generating a class member. Throws std::invalid_argument for m or n = 0.
XmnResult satisfies_xmn(const XGraph& xg, std::size_t m, std::size_t n);

struct NStar {
  std::size_t value = 1;
  XmnWitness witness;
};

// Least n with X(m, n): one plus the largest common bad neighborhood of an
// m-subset. The witness is the lexicographically least maximizing M.
// Throws LimitError if m > m_cap and std::invalid_argument if m is 0 or > |G|.
NStar n_star(const XGraph& xg, std::size_t m, std::size_t m_cap = kDefaultMCap,
             unsigned threads = 1);

struct KmnWitness {
  std::vector<std::size_t> m_part;
  std::vector<std::size_t> n_part;
};

// Searches for disjoint parts of sizes m and n with every cross pair adjacent.
std::optional<KmnWitness> contains_kmn(const SimpleGraph& g, std::size_t m, std::size_t n,
                                       std::size_t m_cap = kDefaultMCap);

struct OracleLimits {
  std::size_t max_order = 16;
  std::size_t max_subset = 3;
};

// X(m, n) evaluated literally over all subset pairs with pair_in_class.
bool brute_force_xmn_oracle(const Group& g, const ClassSpec& cls, std::size_t m, std::size_t n,
                            OracleLimits limits = {});

}  // namespace xmnlab
