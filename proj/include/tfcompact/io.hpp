#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tfcompact/designer.hpp"
#include "tfcompact/mathieu.hpp"
#include "tfcompact/sequence.hpp"
#include "tfcompact/spreads.hpp"
#include "tfcompact/windows.hpp"

namespace tfc::io {

/// Sequence text format: one tap per line as "re im", optionally preceded by
/// a "# offset=<int>" header (offset 0 when absent). Blank lines and other
/// '#' comment lines are skipped; a line with a single number is a real tap.
/// Throws std::runtime_error with the offending line number on bad input.
Sequence read_sequence(std::istream& in);
Sequence read_sequence_file(const std::string& path);

/// Writes the header and one "re im" line per tap (shortest round-trip digits).
void write_sequence(std::ostream& out, const Sequence& s);

/// "index,re,im" CSV.
void write_sequence_csv(std::ostream& out, const Sequence& s);

/// {"offset": n, "taps": [[re, im], ...]}
nlohmann::ordered_json sequence_json(const Sequence& s);

/// Parses "start:stop:points:log|lin" into the grid values. Log grids need
/// positive end points; a one-point grid is {start}. Throws
/// std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string& spec);

/// Shortest round-trip decimal, or "inf" / "-inf" / "nan".
std::string format_number(double v);

/// Infinite values become the string "inf"; NaN becomes null.
nlohmann::ordered_json number_json(double v);

nlohmann::ordered_json to_json(const SpreadReport& r);
nlohmann::ordered_json to_json(const DesignResult& r, bool include_sequence = true);
nlohmann::ordered_json to_json(const MathieuEval& m);

inline constexpr const char* kCurveHeader = "sigma2,delta_n2,eta_p,eta_lower,eta_upper";
inline constexpr const char* kWindowsHeader = "family,param,delta_wp2,delta_n2,eta_p";
inline constexpr const char* kCe0Header = "theta,ce0";
inline constexpr const char* kA0Header = "q,a0";

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);
void write_scan_csv(std::ostream& out, std::span<const ScanPoint> points, bool header = true);

/// {"eta_upper_note": ..., "points": [...]}; failed points carry "error".
nlohmann::ordered_json curve_json(std::span<const CurvePoint> curve);
nlohmann::ordered_json scan_json(std::span<const ScanPoint> points);

void write_ce0_csv(std::ostream& out, const MathieuEval& m);
/// One "q,a0" row per pair; the spans must have equal length.
void write_a0_csv(std::ostream& out, std::span<const double> q, std::span<const double> a0);

}  // namespace tfc::io
