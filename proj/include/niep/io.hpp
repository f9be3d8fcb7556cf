#pragma once

// JSON forms of the inputs and reports. Spectra are arrays whose entries are
// numbers or [re, im] pairs; matrices are arrays of rows; graphs are
// {"n": int, "edges": [[u, v], ...]} with 1-based vertices.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "niep/augment.hpp"
#include "niep/constructors.hpp"
#include "niep/deciders.hpp"
#include "niep/graph.hpp"
#include "niep/necessary.hpp"
#include "niep/regions.hpp"
#include "niep/spectrum.hpp"
#include "niep/sufficient.hpp"

namespace niep {

using json = nlohmann::ordered_json;

/// Parses text as JSON; Parse errors carry the byte offset and the token read.
json parse_json(std::string_view text);

std::vector<Complex> values_from_json(const json& j);
std::vector<double> reals_from_json(const json& j);
json values_to_json(std::span<const Complex> values);

SquareMatrix matrix_from_json(const json& j);
json matrix_to_json(const SquareMatrix& a);

UndirectedGraph graph_from_json(const json& j);
json graph_to_json(const UndirectedGraph& g);

void to_json(json& j, const Spectrum& s);
void from_json(const json& j, Spectrum& s);
void to_json(json& j, const SquareMatrix& a);
void from_json(const json& j, SquareMatrix& a);

void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const ConditionReport& r);
void from_json(const json& j, ConditionReport& r);
void to_json(json& j, const NecessaryReport& r);
void from_json(const json& j, NecessaryReport& r);
void to_json(json& j, const Decision& d);
void from_json(const json& j, Decision& d);
void to_json(json& j, const Block& b);
void from_json(const json& j, Block& b);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const SuleimanovaPerfectResult& r);
void from_json(const json& j, SuleimanovaPerfectResult& r);
void to_json(json& j, const RealizationCertificate& c);
void from_json(const json& j, RealizationCertificate& c);
void to_json(json& j, const BhReport& r);
void from_json(const json& j, BhReport& r);
void to_json(json& j, const AugmentReport& r);
void from_json(const json& j, AugmentReport& r);
void to_json(json& j, const RasterCell& c);
void from_json(const json& j, RasterCell& c);

Verdict verdict_from_string(std::string_view s);
Outcome outcome_from_string(std::string_view s);
Aggregate aggregate_from_string(std::string_view s);

/// One line per cell: re,im,in_pi_union,dd_verdict, after a header line.
std::string raster_to_csv(const std::vector<RasterCell>& cells);

}  // namespace niep
