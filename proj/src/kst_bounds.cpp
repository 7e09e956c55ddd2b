#include "xmnlab/kst_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace xmnlab {

namespace {

KstSide compare_unchecked(std::uint64_t t, std::uint64_t m, std::uint64_t n, std::uint64_t eta) {
  const BigInt lhs = BigInt(2) * eta - BigInt(m - 1) * t;
  if (lhs <= 0) return KstSide::below;
  const unsigned mm = static_cast<unsigned>(m);
  const BigInt power = boost::multiprecision::pow(lhs, mm);
  const BigInt rhs = BigInt(n - 1) * boost::multiprecision::pow(BigInt(t), 2 * mm - 1);
  if (power < rhs) return KstSide::below;
  if (power == rhs) return KstSide::equal;
  return KstSide::above;
}

// a^{1/m} >= r, i.e. a >= max(r, 0)^m for a >= 0.
IneqCheck root_at_least(const Rational& a, const Rational& r, unsigned m) {
  IneqCheck c;
  c.lhs = a;
  c.rhs = r > 0 ? pow(r, m) : Rational(0);
  c.holds = c.lhs >= c.rhs;
  return c;
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate(const KstQuery& q) {
  if (q.m < 1 || q.m > q.n) throw std::invalid_argument("KST query needs 1 <= m <= n");
  const BigInt max_edges = BigInt(q.t) * (q.t == 0 ? 0 : q.t - 1) / 2;
  if (BigInt(q.eta) > max_edges) {
    throw std::invalid_argument("KST query has more edges than a simple graph on t vertices");
  }
}

KstSide kst_compare(const KstQuery& q) {
  validate(q);
  return compare_unchecked(q.t, q.m, q.n, q.eta);
}

bool kst_threshold_exceeded(const KstQuery& q, bool strict) {
  const KstSide side = kst_compare(q);
  return side == KstSide::above || (!strict && side == KstSide::equal);
}

double kst_threshold_twice_edges(std::uint64_t t, std::uint64_t m, std::uint64_t n) {
  const double td = static_cast<double>(t);
  const double md = static_cast<double>(m);
  return std::pow(static_cast<double>(n - 1), 1.0 / md) * std::pow(td, 2.0 - 1.0 / md) +
         (md - 1.0) * td;
}

Rational theorem_bound(const Rational& gamma, unsigned m, std::uint64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("theorem_bound needs m, n >= 1");
  const Rational base = Rational(2) / (Rational(1) - gamma);
  return pow(base, m) * Rational(BigInt(n - 1));
}

Rational theorem_bound(const ClassSpec& cls, unsigned m, std::uint64_t n) {
  return theorem_bound(cls.gamma, m, n);
}

ChainDiagnostics evaluate_chain(const XGraph& xg, unsigned m, std::size_t n) {
  ChainDiagnostics c;
  const Rational order(BigInt(xg.order()));
  const Rational one_minus_gamma = Rational(1) - xg.cls.gamma;
  const Rational eta{BigInt(xg.eta)};
  const Rational loops{BigInt(xg.loops.count())};

  c.loop_identity = 2 * xg.eta + xg.loops.count() == xg.bad_ordered;

  c.ineq1_printed.lhs = eta;
  c.ineq1_printed.rhs = one_minus_gamma * order * order / 2;
  c.ineq1_printed.holds = c.ineq1_printed.lhs >= c.ineq1_printed.rhs;
  c.ineq1_corrected.lhs = eta;
  c.ineq1_corrected.rhs = (one_minus_gamma * order * order - loops) / 2;
  c.ineq1_corrected.holds = c.ineq1_corrected.lhs >= c.ineq1_corrected.rhs;

  // Power form: L^m against (n-1) t^{2m-1}.
  const KstSide side = compare_unchecked(xg.order(), m, n, xg.eta);
  const BigInt big_l = BigInt(2) * xg.eta - BigInt(m - 1) * xg.order();
  c.ineq2.lhs = big_l > 0 ? Rational(boost::multiprecision::pow(big_l, m)) : Rational(big_l);
  c.ineq2.rhs = Rational(BigInt(n - 1) * boost::multiprecision::pow(BigInt(xg.order()), 2 * m - 1));
  c.ineq2.holds = side != KstSide::above;
  c.ineq2_boundary = side == KstSide::equal;
  c.kmn_free = !contains_kmn(xg.graph, m, n, std::max<std::size_t>(m, kDefaultMCap)).has_value();

  const Rational ratio = Rational(BigInt(n - 1)) / order;
  c.ineq3 = root_at_least(ratio, one_minus_gamma - Rational(BigInt(m - 1)) / order, m);
  c.ineq3_weak = root_at_least(ratio, one_minus_gamma - ratio, m);
  c.ineq3_corrected = root_at_least(
      ratio, one_minus_gamma - Rational(BigInt(m - 1)) / order - loops / (order * order), m);
  c.order_at_least_n_minus_1 = order >= Rational(BigInt(n - 1));
  c.ineq4 = root_at_least(ratio, one_minus_gamma / 2, m);
  return c;
}

bool GroupVerification::has_violation() const {
  if (!threshold_ok) return true;
  return std::any_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.violation(); });
}

GroupVerification verify_group(const Group& g, const ClassSpec& cls, const VerifyOptions& opts) {
  const XGraph xg = build_xgraph(g, cls, opts.threads);
  return verify_group(xg, opts);
}

GroupVerification verify_group(const XGraph& xg, const VerifyOptions& opts) {
  const Group& g = *xg.host;
  GroupVerification report;
  report.group_name = g.name();
  report.order = g.order();
  report.cls = xg.cls;
  report.probability = x_probability(xg);
  report.eta = xg.eta;
  report.bad_ordered = xg.bad_ordered;
  report.loops = xg.loops.count();
  report.vacuous = in_class(g, whole_group(g), xg.cls.id);
  report.threshold_ok = report.vacuous || report.probability <= xg.cls.gamma;
  if (report.vacuous) return report;

  const Rational universal_gamma = class_spec(ClassId::fitted_universal).gamma;
  const Rational order(BigInt(g.order()));
  for (unsigned m = opts.m_min; m <= opts.m_max; ++m) {
    if (m > g.order()) break;
    if (m > opts.m_cap) {
      report.limited_at_m = m;
      break;
    }
    const NStar ns = n_star(xg, m, opts.m_cap, opts.threads);
    BoundCheck check;
    check.group_name = g.name();
    check.order = g.order();
    check.class_id = xg.cls.id;
    check.gamma = xg.cls.gamma;
    check.m = m;
    check.n_star = ns.value;
    check.witness = ns.witness;
    check.bound = theorem_bound(xg.cls, m, ns.value);
    check.holds = order <= check.bound;
    check.corollary_bound = theorem_bound(universal_gamma, m, ns.value);
    check.corollary_holds = order <= check.corollary_bound;
    check.corollary_applies = xg.cls.closure.extension_closed;
    check.m_le_n = m <= ns.value;
    check.chain = evaluate_chain(xg, m, ns.value);
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over a per-trial counter
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

KstTestSummary kst_random_property_test(const KstTestConfig& cfg) {
  if (cfg.m < 1 || cfg.m > cfg.n) throw std::invalid_argument("property test needs 1 <= m <= n");
  if (cfg.t_max < 2 || cfg.t_max > 40) throw std::invalid_argument("t_max must be in 2..40");
  if (cfg.trials > 10000) throw std::invalid_argument("at most 10^4 trials");

  KstTestSummary summary;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(trial_seed(cfg.seed, trial));
    const std::uint64_t t = 2 + rng() % (cfg.t_max - 1);
    const double pairs = static_cast<double>(t * (t - 1) / 2);
    const double target = kst_threshold_twice_edges(t, cfg.m, cfg.n) / 2.0 / pairs;
    const double lo = std::clamp(0.7 * target, 0.0, 1.0);
    const double hi = std::clamp(1.3 * target, 0.0, 1.0);
    const double density = lo + (hi - lo) * unit_uniform(rng);

    SimpleGraph graph(t);
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) {
        if (unit_uniform(rng) < density) graph.add_edge(a, b);
      }
    }
    ++summary.graphs;
    const KstQuery q{t, cfg.m, cfg.n, graph.edge_count()};
    const KstSide side = kst_compare(q);
    const bool exceeded = side == KstSide::above || (!cfg.strict && side == KstSide::equal);
    const bool contains = contains_kmn(graph, cfg.m, cfg.n, std::max<std::size_t>(cfg.m, kDefaultMCap))
                              .has_value();
    if (side == KstSide::equal) summary.boundary.push_back({trial, t, q.eta, contains});
    if (exceeded) {
      ++summary.exceeded;
      if (contains) {
        ++summary.witnessed;
      } else {
        ++summary.violations;
      }
    } else if (contains) {
      ++summary.below_with_kmn;
    }
  }
  return summary;
}

}  // namespace xmnlab
