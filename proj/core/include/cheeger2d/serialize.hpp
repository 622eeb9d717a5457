#pragma once

#include <span>
#include <string>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/polygon.hpp"
#include "cheeger2d/search.hpp"
#include "cheeger2d/verify.hpp"

namespace cheeger2d {

// Shortest decimal string that round-trips the binary64 value exactly.
std::string fmt_double(double v);

// Shape JSON: {"vertices": [[x, y], ...]}.  Parsing canonicalizes; throws
// DegenerateInput on malformed JSON, wrong schema, or degenerate geometry.
ConvexPolygon parse_shape_json(const std::string& text);
std::string shape_to_json(const ConvexPolygon& poly);

std::string report_to_json(const ShapeReport& report);
ShapeReport report_from_json(const std::string& text);

std::string asymmetry_to_json(const AsymmetryResult& result, double width);

// One CSV row per (param, entry): param,name,measured,reference,rel_err.
// reference and rel_err are empty for entries with no closed form.
std::string sweep_to_csv(std::span<const SweepRecord> records);

// One CSV row per shape; stability columns appear only when the report
// carries them.
std::string corpus_to_csv(const CorpusReport& report);

// Human-readable multi-line summary (counts, minimal margins, violations).
std::string corpus_summary(const CorpusReport& report);

std::string search_result_to_json(const SearchResult& result);
std::string trajectory_to_csv(const SearchResult& result);

// Schematic SVG: the polygon outline plus its Cheeger set (straight edges
// with circular-arc fillets of radius r*).
std::string svg_cheeger_set(const ConvexPolygon& poly,
                            const CheegerResult& result);

}  // namespace cheeger2d
