#include "xmnlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <thread>

namespace xmnlab {

namespace {

std::vector<ClassId> selected_classes(const ScanConfig& cfg) {
  if (!cfg.classes.empty()) return cfg.classes;
  std::vector<ClassId> all;
  for (const auto& spec : class_registry()) all.push_back(spec.id);
  return all;
}

std::string cell_status(const ScanCell& cell) {
  if (!cell.result) return "error";
  const auto& v = *cell.result;
  if (v.vacuous) return "vacuous";
  return v.has_violation() ? "VIOLATION" : "ok";
}

}  // namespace

ScanResult run_scan(const ScanConfig& cfg) {
  ScanResult result;
  result.entries = catalog_scan(cfg.max_order);
  const auto classes = selected_classes(cfg);

  std::vector<std::optional<Group>> groups(result.entries.size());
  std::vector<std::string> build_errors(result.entries.size());
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    try {
      groups[i] = build_entry(result.entries[i], cfg.order_cap);
    } catch (const std::exception& e) {
      build_errors[i] = e.what();
    }
  }

  const std::size_t ncells = result.entries.size() * classes.size();
  result.cells.resize(ncells);
  VerifyOptions opts;
  opts.m_min = cfg.m_min;
  opts.m_max = cfg.m_max;
  opts.m_cap = cfg.m_cap;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < ncells; c = next++) {
      const std::size_t gi = c / classes.size();
      ScanCell& cell = result.cells[c];
      cell.group = result.entries[gi].name;
      cell.order = result.entries[gi].expected_order;
      cell.cls = classes[c % classes.size()];
      if (!groups[gi]) {
        cell.error = build_errors[gi];
        continue;
      }
      try {
        cell.result = verify_group(*groups[gi], class_spec(cell.cls), opts);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  const unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : cfg.threads;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::stable_sort(result.cells.begin(), result.cells.end(),
                   [](const ScanCell& a, const ScanCell& b) {
                     return std::tie(a.group, a.cls) < std::tie(b.group, b.cls);
                   });
  for (const auto& cell : result.cells) {
    if (!cell.result) {
      ++result.errors;
      continue;
    }
    const auto& v = *cell.result;
    if (v.vacuous) ++result.vacuous;
    if (!v.threshold_ok) ++result.threshold_violations;
    result.bound_checks += v.checks.size();
    for (const auto& check : v.checks) {
      if (check.violation()) ++result.bound_violations;
    }
  }
  return result;
}

ordered_json scan_json(const ScanResult& result, const ScanConfig& cfg) {
  ordered_json classes = ordered_json::array();
  for (ClassId id : selected_classes(cfg)) classes.push_back(class_json(class_spec(id)));
  ordered_json cells = ordered_json::array();
  ordered_json errors = ordered_json::array();
  for (const auto& cell : result.cells) {
    if (cell.result) {
      cells.push_back(verification_json(*cell.result));
    } else {
      errors.push_back(
          {{"group", cell.group}, {"class", std::string(to_string(cell.cls))}, {"error", cell.error}});
    }
  }
  return {
      {"command", "scan"},
      {"max_order", cfg.max_order},
      {"m_range", std::to_string(cfg.m_min) + ".." + std::to_string(cfg.m_max)},
      {"seed", cfg.seed},
      {"conventions", conventions_json()},
      {"classes", classes},
      {"groups", result.entries.size()},
      {"cells", cells},
      {"errors", errors},
      {"summary",
       {{"cells", result.cells.size()},
        {"vacuous", result.vacuous},
        {"bound_checks", result.bound_checks},
        {"bound_violations", result.bound_violations},
        {"threshold_violations", result.threshold_violations},
        {"errors", result.errors},
        {"pass", !result.has_violation()}}},
  };
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
  out << csv_header() << '\n';
  for (const auto& cell : result.cells) {
    if (cell.result && !cell.result->vacuous) write_csv_rows(out, *cell.result);
  }
}

void write_scan_text(std::ostream& out, const ScanResult& result, const ScanConfig& cfg) {
  const auto classes = selected_classes(cfg);
  std::map<std::string, std::vector<const ScanCell*>> rows;
  for (const auto& cell : result.cells) rows[cell.group].push_back(&cell);

  out << std::left << std::setw(14) << "group" << std::setw(7) << "order";
  for (ClassId id : classes) out << std::setw(18) << to_string(id);
  out << '\n';
  for (const auto& [name, cells] : rows) {
    out << std::setw(14) << name << std::setw(7) << cells.front()->order;
    for (const ScanCell* cell : cells) out << std::setw(18) << cell_status(*cell);
    out << '\n';
  }
  out << "groups: " << rows.size() << ", cells: " << result.cells.size()
      << ", vacuous: " << result.vacuous << ", bound checks: " << result.bound_checks
      << ", bound violations: " << result.bound_violations
      << ", threshold violations: " << result.threshold_violations
      << ", errors: " << result.errors << '\n';
  out << (result.has_violation() ? "FAIL" : "PASS") << '\n';
}

}  // namespace xmnlab
