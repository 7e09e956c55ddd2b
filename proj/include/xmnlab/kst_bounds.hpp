#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xmnlab/group.hpp"
#include "xmnlab/group_class.hpp"
#include "xmnlab/rational.hpp"
#include "xmnlab/xgraph.hpp"

namespace xmnlab {

// A graph on t vertices with eta edges, tested against K_{m,n}.
struct KstQuery {
  std::uint64_t t = 0;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t eta = 0;
};

// Throws std::invalid_argument unless 1 <= m <= n and eta <= t(t-1)/2.
void validate(const KstQuery& q);

// Outcome of comparing 2*eta against (n-1)^{1/m} t^{2-1/m} + (m-1) t.
enum class KstSide { below, equal, above };

// Exact comparison through L = 2 eta - (m-1) t and L^m vs (n-1) t^{2m-1}.
// L <= 0 counts as below.
KstSide kst_compare(const KstQuery& q);

// 2*eta >= threshold (strict = false) or 2*eta > threshold (strict = true).
bool kst_threshold_exceeded(const KstQuery& q, bool strict = false);

// Floating evaluation of (n-1)^{1/m} t^{2-1/m} + (m-1) t, for display and
// for cross-checking the exact form away from the boundary.
double kst_threshold_twice_edges(std::uint64_t t, std::uint64_t m, std::uint64_t n);

// (2 / (1 - gamma))^m * (n - 1).
Rational theorem_bound(const ClassSpec& cls, unsigned m, std::uint64_t n);
Rational theorem_bound(const Rational& gamma, unsigned m, std::uint64_t n);

// One exact comparison lhs >= rhs (or lhs <= rhs for upper bounds).
struct IneqCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// Diagnostics for the proof chain of the size bound at (m, n).
//   ineq1: eta >= (1-gamma)|G|^2 / 2, printed and with the loop count removed
//   ineq2: 2 eta <= (n-1)^{1/m} |G|^{2-1/m} + (m-1)|G|
//   ineq3: ((n-1)/|G|)^{1/m} + (m-1)/|G| >= 1-gamma, and the weaker
//          ((n-1)/|G|)^{1/m} + (n-1)/|G| >= 1-gamma
//   ineq4: ((n-1)/|G|)^{1/m} >= (1-gamma)/2
// Root comparisons are raised to the m-th power: a^{1/m} >= r is stored as
// lhs = a, rhs = r^m (with r <= 0 always holding).
struct ChainDiagnostics {
  IneqCheck ineq1_printed;
  IneqCheck ineq1_corrected;
  // Exact identity 2*eta + |loops| = bad_ordered.
  bool loop_identity = false;
  // holds means "not strictly above the threshold"; equality is flagged.
  IneqCheck ineq2;
  bool ineq2_boundary = false;
  bool kmn_free = false;
  IneqCheck ineq3;
  IneqCheck ineq3_weak;
  // ineq3 with |loops|/|G|^2 added on the left, implied by ineq1_corrected and ineq2.
  IneqCheck ineq3_corrected;
  bool order_at_least_n_minus_1 = false;
  IneqCheck ineq4;
};

struct BoundCheck {
  std::string group_name;
  std::size_t order = 0;
  ClassId class_id = ClassId::abelian;
  Rational gamma;
  unsigned m = 1;
  std::size_t n_star = 1;
  XmnWitness witness;
  Rational bound;
  bool holds = false;
  // The size bound with the universal base 180/53. Enforced only for
  // extension-closed classes.
  Rational corollary_bound;
  bool corollary_holds = false;
  bool corollary_applies = false;
  // The bound's derivation assumes m <= n.
  bool m_le_n = true;
  ChainDiagnostics chain;

  // Whether this row counts as a falsification of the size bound.
  bool violation() const { return !holds || (corollary_applies && !corollary_holds); }
};

struct VerifyOptions {
  unsigned m_min = 1;
  unsigned m_max = 3;
  std::size_t m_cap = kDefaultMCap;
  unsigned threads = 1;
};

struct GroupVerification {
  std::string group_name;
  std::size_t order = 0;
  ClassSpec cls;
  Rational probability;
  // G itself is in the class: the size bound says nothing.
  bool vacuous = false;
  // p_X(G) <= gamma (expected whenever G is outside the class).
  bool threshold_ok = true;
  std::vector<BoundCheck> checks;
  // Set when n_star hit the m cap; checks stop before this m.
  std::optional<unsigned> limited_at_m;
  std::uint64_t eta = 0;
  std::uint64_t bad_ordered = 0;
  std::uint64_t loops = 0;

  bool has_violation() const;
};

ChainDiagnostics evaluate_chain(const XGraph& xg, unsigned m, std::size_t n);

GroupVerification verify_group(const Group& g, const ClassSpec& cls,
                               const VerifyOptions& opts = {});
// Variant reusing a prebuilt graph.
GroupVerification verify_group(const XGraph& xg, const VerifyOptions& opts = {});

struct KstTestConfig {
  std::uint64_t seed = 42;
  std::size_t t_max = 30;
  std::size_t m = 2;
  std::size_t n = 3;
  std::size_t trials = 500;
  bool strict = true;
};

struct KstBoundaryCase {
  std::size_t trial = 0;
  std::uint64_t t = 0;
  std::uint64_t eta = 0;
  bool contains = false;
};

struct KstTestSummary {
  std::size_t graphs = 0;
  std::size_t exceeded = 0;
  std::size_t witnessed = 0;
  std::size_t violations = 0;
  // Graphs exactly at the threshold.
  std::vector<KstBoundaryCase> boundary;
  // Graphs below the threshold that still contain K_{m,n}.
  std::size_t below_with_kmn = 0;
};

// Random graphs with edge densities drawn around the threshold; every graph
// past the threshold must contain K_{m,n}.
KstTestSummary kst_random_property_test(const KstTestConfig& cfg);

// Per-trial generator seed derived from the run seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace xmnlab
