#ifndef SGDOPS_RENDER_HPP
#define SGDOPS_RENDER_HPP

#include <string>

#include <json.hpp>

#include "sgdops/config.hpp"
#include "sgdops/dops.hpp"

namespace sgdops {

// Human-readable summary: facets, face lattice, normal/scored flags,
// interior ideal generators, principality, Gorenstein probe.
std::string analyze_report(const RingSession& session, const Box& probe_window);

// One machine record per degree: degree, which, generators (factored and
// expanded) and the reduced Groebner basis.
nlohmann::json piece_to_json(const GradedPiece& piece, const ConeData& cone);
nlohmann::json quotient_to_json(const QuotientPiece& q, const ConeData& cone);

// Rebuild the ideal of a serialized piece (round-trip testing).
ThetaIdeal ideal_from_json(const nlohmann::json& record, int nvars, const ConeData* cone);

std::string piece_text(const GradedPiece& piece, const ConeData& cone);

std::string compare_table(const CompareReport& report, const ConeData& cone);

// 2-D chamber figures: lattice points colored by chamber signature and
// J-membership, facet lines drawn through the origin.
std::string chambers_svg(const RingSession& session, const Box& window);
std::string chambers_tikz(const RingSession& session, const Box& window);

}  // namespace sgdops

#endif
