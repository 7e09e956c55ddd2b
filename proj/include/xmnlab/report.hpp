#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xmnlab/catalog.hpp"
#include "xmnlab/group_class.hpp"
#include "xmnlab/kst_bounds.hpp"
#include "xmnlab/xgraph.hpp"

namespace xmnlab {

using ordered_json = nlohmann::ordered_json;

// Conventions every report carries so its numbers are self-describing.
ordered_json conventions_json();

// { id, gamma: "p/q", bound_base: "p/q", provenance, ... }
ordered_json class_json(const ClassSpec& cls);

ordered_json witness_json(const XmnWitness& w);
ordered_json bound_check_json(const BoundCheck& check);
ordered_json verification_json(const GroupVerification& v);

// CSV with one row per BoundCheck; vacuous or empty verifications get a
// single row with blank m/n_star columns.
std::string csv_header();
void write_csv_rows(std::ostream& out, const GroupVerification& v);

// Vertices labeled "index: cycle notation"; loops as self-edges.
void write_dot(std::ostream& out, const XGraph& xg);
// "x_index,y_index" with x < y, one line per edge.
void write_edge_csv(std::ostream& out, const XGraph& xg);

std::string flags_string(const KnownFlags& flags);

}  // namespace xmnlab
