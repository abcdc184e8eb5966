#pragma once

#include <string>

#include "core/hypersurface.hpp"
#include "core/verification.hpp"

namespace ahk {

/// Parses the JSON surface-specification document:
///   {"n": 2, "ambient": "euclidean"|"isotropic",
///    "matrix": [[...], ...],                 // n rows of n numbers
///    "profiles": [{"kind": "...", ...}, ...]}  // n profile objects
/// Profile params follow the GeneratingFunction layout: linear {c,d},
/// quadratic {c,d,e}, polynomial {coeffs}, exp_pair/trig_pair {c,d,a,s},
/// log_cos {c}. Errors carry a field path (e.g. "profiles[1].a: ...") and use
/// ErrorCode::ParseError.
HypersurfaceSpec parse_spec_json(const std::string& text);

HypersurfaceSpec load_spec_file(const std::string& path);

/// Serializes with shortest round-trip number formatting; parse(serialize(s))
/// is semantically identical to s.
std::string spec_to_json(const HypersurfaceSpec& spec);

void save_spec_file(const HypersurfaceSpec& spec, const std::string& path);

/// Fixed field order, floating point rendered with 17 significant digits —
/// byte-stable for golden-file comparisons.
std::string report_to_json(const CurvatureReport& report);

std::string fuzz_summary_to_json(const FuzzSummary& summary);

const char* verdict_name(Verdict verdict);

}  // namespace ahk
