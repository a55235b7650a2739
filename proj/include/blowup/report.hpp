#pragma once

#include <string>

#include "blowup/runner.hpp"

namespace blowup {

// Human-readable tables. Not byte-stable (contains layout niceties only).
std::string emit_text(const RunReport& report);

// Deterministic JSON with stable keys:
// {version, prime, seed, caveats:[...], instances:[{ring, ideal,
//  invariants:{dim, depth_R, g, l, deviation, r_J, s, depths:{...}, depth_G,
//  grade_Gplus, regularity:{value, status}}, theorems:[{id, hypotheses:{...},
//  t, bound, actual, verdict, notes}], notes:[...], error, timing_ms}]}
std::string emit_json(const RunReport& report);

// Inverse of emit_json; parse(emit(r)) equals r structurally.
RunReport parse_json_report(const std::string& text);

}  // namespace blowup
