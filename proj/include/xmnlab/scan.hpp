#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xmnlab/catalog.hpp"
#include "xmnlab/kst_bounds.hpp"
#include "xmnlab/report.hpp"

namespace xmnlab {

struct ScanConfig {
  std::size_t max_order = 60;
  std::vector<ClassId> classes;  // empty means the whole registry
  unsigned m_min = 1;
  unsigned m_max = 3;
  std::size_t m_cap = kDefaultMCap;
  std::size_t order_cap = default_order_cap();
  // Recorded in the report; the scan itself draws no random numbers.
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// One (group, class) cell. Exactly one of `result` and `error` is set.
struct ScanCell {
  std::string group;
  std::size_t order = 0;
  ClassId cls = ClassId::abelian;
  std::optional<GroupVerification> result;
  std::string error;
};

struct ScanResult {
  std::vector<CatalogEntry> entries;
  // Sorted by (group name, class id).
  std::vector<ScanCell> cells;
  std::size_t bound_checks = 0;
  std::size_t bound_violations = 0;
  std::size_t threshold_violations = 0;
  std::size_t vacuous = 0;
  std::size_t errors = 0;

  bool has_violation() const { return bound_violations + threshold_violations > 0; }
};

// Verifies every catalog entry of order <= max_order against every selected
// class. Cells run in parallel when threads > 1; the result does not depend
// on the thread count.
ScanResult run_scan(const ScanConfig& cfg);

ordered_json scan_json(const ScanResult& result, const ScanConfig& cfg);
// Rows for cells outside their class; vacuous cells are left out.
void write_scan_csv(std::ostream& out, const ScanResult& result);
// Pass/fail table, one row per group with a status column per class.
void write_scan_text(std::ostream& out, const ScanResult& result, const ScanConfig& cfg);

}  // namespace xmnlab
