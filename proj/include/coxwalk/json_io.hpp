#pragma once

#include "coxwalk/affine.hpp"
#include "coxwalk/ncore.hpp"
#include "coxwalk/shi.hpp"
#include "coxwalk/walker.hpp"
#include "coxwalk/wchain.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace coxwalk {

// Field order in emitted objects is meaningful, so everything uses the
// insertion-ordered variant.
using OrderedJson = nlohmann::ordered_json;

// Floats rendered with 12 significant digits; identical inputs give
// byte-identical output.
std::string format_float(double value);
// The same rounding applied to a JSON number (round-trips through the
// 12-digit decimal form so dumps are stable).
double round_float(double value);

// Canonical reduced word of an affine element: repeatedly strip the smallest
// left descent. Product order, i.e. from_word(reduced_word(aw, x)) == x.
std::vector<int> reduced_word(const AffineWeyl& aw, const AffineElement& x);

std::string word_string(const WeylGroup& group, Index w);
std::string word_string(const AffineWeyl& aw, const AffineElement& x);

// {"word": [...], "type": "<finite-part reduced word>", "lambda": [...]}
OrderedJson element_json(const AffineWeyl& aw, const AffineElement& x);

// {type, weights, zeta, psi, chambers} — the chain report.
OrderedJson chain_report_json(const TransitionMatrix& chain, const Distribution& zeta,
                              const DirectionVector& psi_dir, const Distribution& chambers);
OrderedJson probes_json(const ConjectureReport& report);

OrderedJson distribution_json(const AffineWeyl& aw, const StepDistribution& dist);
std::string trajectory_csv(const AffineWeyl& aw, const Trajectory& traj);

std::string sign_string(const ShiRegion& region);
OrderedJson gamma_json(const GammaGraph& graph);
OrderedJson region_probabilities_json(const GammaGraph& graph,
                                      const std::map<ShiRegion, Rational>& hitting);

OrderedJson core_json(const CorePartition& core);
std::string profile_csv(const BoundaryProfile& profile);
std::string profile_svg(const std::vector<BoundaryProfile>& profiles);
OrderedJson limit_curve_json(const LimitCurve& curve);
OrderedJson first_row_json(const FirstRowStatistics& stats);

}  // namespace coxwalk
