#include "xmnlab/report.hpp"

namespace xmnlab {

namespace {

ordered_json ineq_json(const IneqCheck& c) {
  return {{"lhs", fraction_string(c.lhs)}, {"rhs", fraction_string(c.rhs)}, {"holds", c.holds}};
}

std::string join_indices(const std::vector<element_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

ordered_json conventions_json() {
  return {
      {"probability", "ordered pairs (x, y) drawn from G x G with replacement"},
      {"loops",
       "pairs (x, x) with <x> outside the class are loop flags, not edges; inequality (1) is "
       "checked as printed and with the loop count removed"},
      {"subsets", "condition X(m,n) allows M and N to overlap; K_{m,n} searches use disjoint parts"},
      {"fitted_universal", "decided with the soluble predicate, gamma = 37/90"},
      {"arithmetic", "all bound comparisons are exact rationals; *_float fields are display only"},
      {"root_comparisons", "a^(1/m) >= r is recorded as lhs = a, rhs = max(r,0)^m"},
  };
}

ordered_json class_json(const ClassSpec& cls) {
  return {
      {"id", std::string(cls.name())},
      {"gamma", fraction_string(cls.gamma)},
      {"bound_base", fraction_string(cls.bound_base())},
      {"extension_closed", cls.closure.extension_closed},
      {"provenance", cls.provenance},
  };
}

ordered_json witness_json(const XmnWitness& w) {
  return {{"M", w.m_set}, {"bad_common", w.bad_common}};
}

ordered_json bound_check_json(const BoundCheck& c) {
  const ChainDiagnostics& ch = c.chain;
  ordered_json chain = {
      {"ineq1_printed", ineq_json(ch.ineq1_printed)},
      {"ineq1_corrected", ineq_json(ch.ineq1_corrected)},
      {"loop_identity", ch.loop_identity},
      {"ineq2", ineq_json(ch.ineq2)},
      {"ineq2_boundary", ch.ineq2_boundary},
      {"kmn_free", ch.kmn_free},
      {"ineq3", ineq_json(ch.ineq3)},
      {"ineq3_weak", ineq_json(ch.ineq3_weak)},
      {"ineq3_corrected", ineq_json(ch.ineq3_corrected)},
      {"order_at_least_n_minus_1", ch.order_at_least_n_minus_1},
      {"ineq4", ineq_json(ch.ineq4)},
  };
  return {
      {"group", c.group_name},
      {"order", c.order},
      {"class", std::string(to_string(c.class_id))},
      {"gamma", fraction_string(c.gamma)},
      {"m", c.m},
      {"n_star", c.n_star},
      {"witness_M", c.witness.m_set},
      {"witness", witness_json(c.witness)},
      {"bound", fraction_string(c.bound)},
      {"bound_float", to_double(c.bound)},
      {"holds", c.holds},
      {"m_le_n", c.m_le_n},
      {"corollary_bound", fraction_string(c.corollary_bound)},
      {"corollary_applies", c.corollary_applies},
      {"corollary_holds", c.corollary_holds},
      {"chain", chain},
  };
}

ordered_json verification_json(const GroupVerification& v) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : v.checks) checks.push_back(bound_check_json(c));
  ordered_json out = {
      {"group", v.group_name},
      {"order", v.order},
      {"class", std::string(v.cls.name())},
      {"gamma", fraction_string(v.cls.gamma)},
      {"probability", fraction_string(v.probability)},
      {"probability_float", to_double(v.probability)},
      {"eta", v.eta},
      {"bad_ordered", v.bad_ordered},
      {"loops", v.loops},
      {"vacuous", v.vacuous},
      {"threshold_ok", v.threshold_ok},
  };
  if (v.vacuous) out["note"] = "group lies in the class; the size bound is vacuous";
  if (v.cls.id == ClassId::abelian) out["scope"] = "size bound only; not extension-closed";
  if (v.limited_at_m) out["limited_at_m"] = *v.limited_at_m;
  out["checks"] = checks;
  out["violation"] = v.has_violation();
  return out;
}

std::string csv_header() {
  return "group,order,class,gamma,probability,m,n_star,witness_M,bound,bound_float,holds,"
         "corollary_holds,ineq1_printed,ineq1_corrected,ineq2,ineq3,ineq4,status";
}

void write_csv_rows(std::ostream& out, const GroupVerification& v) {
  const std::string prefix = csv_field(v.group_name) + "," + std::to_string(v.order) + "," +
                             std::string(v.cls.name()) + "," + fraction_string(v.cls.gamma) + "," +
                             fraction_string(v.probability) + ",";
  if (v.checks.empty()) {
    const std::string status =
        v.vacuous ? "vacuous" : (v.threshold_ok ? "no_checks" : "threshold_violation");
    out << prefix << ",,,,,,,,,,,," << status << '\n';
    return;
  }
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& c : v.checks) {
    ordered_json bf = to_double(c.bound);
    out << prefix << c.m << ',' << c.n_star << ',' << join_indices(c.witness.m_set) << ','
        << fraction_string(c.bound) << ',' << bf.dump() << ',' << b(c.holds) << ','
        << (c.corollary_applies ? b(c.corollary_holds) : "n/a") << ','
        << b(c.chain.ineq1_printed.holds) << ',' << b(c.chain.ineq1_corrected.holds) << ','
        << b(c.chain.ineq2.holds) << ',' << b(c.chain.ineq3.holds) << ','
        << b(c.chain.ineq4.holds) << ','
        << (c.violation() ? "violation" : (v.threshold_ok ? "ok" : "threshold_violation"))
        << '\n';
  }
}

void write_dot(std::ostream& out, const XGraph& xg) {
  const Group& g = *xg.host;
  out << "graph \"" << dot_escape(g.name() + " non-" + std::string(xg.cls.name())) << "\" {\n";
  for (std::size_t x = 0; x < xg.order(); ++x) {
    out << "  " << x << " [label=\"" << x << ": "
        << dot_escape(g.element(static_cast<element_t>(x)).to_cycle_string()) << "\"";
    if (xg.loops.test(x)) out << ", loop=true";
    out << "];\n";
  }
  for (std::size_t x = 0; x < xg.order(); ++x) {
    if (xg.loops.test(x)) out << "  " << x << " -- " << x << " [style=dotted];\n";
    const Bitset& row = xg.row(static_cast<element_t>(x));
    for (auto y = row.find_next(x); y != Bitset::npos; y = row.find_next(y)) {
      out << "  " << x << " -- " << y << ";\n";
    }
  }
  out << "}\n";
}

void write_edge_csv(std::ostream& out, const XGraph& xg) {
  out << "x_index,y_index\n";
  for (std::size_t x = 0; x < xg.order(); ++x) {
    const Bitset& row = xg.row(static_cast<element_t>(x));
    for (auto y = row.find_next(x); y != Bitset::npos; y = row.find_next(y)) {
      out << x << ',' << y << '\n';
    }
  }
}

std::string flags_string(const KnownFlags& flags) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(flags.abelian, "abelian");
  add(flags.nilpotent, "nilpotent");
  add(flags.soluble, "soluble");
  add(flags.odd, "odd");
  return out.empty() ? "-" : out;
}

}  // namespace xmnlab
