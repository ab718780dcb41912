#pragma once
// Regions of the double hyperplane arrangement {H_alpha^0, H_alpha^1} and the
// absorption analysis of the reduced walk on them.
//
// A region is encoded by its sign vector over the positive roots: the alcove
// address clamped to {-1, 0, +1}.  The walk crosses each hyperplane at most
// once, so a region whose signs are all nonzero — a far translate of a Weyl
// chamber — can never be left.  Projecting the walk to (region, alcove type)
// pairs gives a finite absorbing chain whose absorption probabilities match
// the chamber probabilities computed independently from the chain on W.

#include "coxwalk/affine.hpp"
#include "coxwalk/rational.hpp"
#include "coxwalk/weyl.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace coxwalk {

struct ShiRegion {
    // One entry per positive root, in root-system order: -1, 0, or +1.
    std::vector<std::int8_t> sign;
    friend auto operator<=>(const ShiRegion&, const ShiRegion&) = default;

    // Number of arrangement hyperplanes separating the region from the
    // fundamental alcove: one per nonzero entry (the region beyond H^1 is
    // still on the positive side of H^0, and vice versa).
    long long separation() const;
    bool is_chamber_translate() const;
};

ShiRegion region_of(const AffineWeyl& aw, const AffineElement& x);

// The chamber label w whose inversion set is the negative support of a
// chamber-translate region.  Throws Error for transient regions.
Index chamber_translate_label(const ShiRegion& region, const WeylGroup& wg);

// All regions of the arrangement, found by growing a ball of alcoves until
// the region count is stable for two rounds and matches the closed form
// (h+1)^rank.  Guarded to rank <= 3; throws NonStabilizing at the cap.
std::vector<ShiRegion> enumerate_regions(const AffineWeyl& aw, int initial_length_bound = 0);

struct GammaVertex {
    ShiRegion region;
    Index type = 0;  // finite part of the witness alcoves
    friend auto operator<=>(const GammaVertex&, const GammaVertex&) = default;
};

// Finite projection of the free walk: vertices are reachable (region, type)
// pairs, edge probabilities are read off one witness alcove per vertex.
struct GammaGraph {
    std::shared_ptr<const WeylGroup> group;
    std::vector<GammaVertex> vertices;
    // Out-edges per vertex: (target vertex, probability), sorted by target.
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> edges;
    std::uint32_t source = 0;
    std::vector<std::uint32_t> absorbing;  // vertices in chamber-translate regions
    std::vector<AffineElement> witness;    // first witness alcove per vertex

    std::size_t vertex_index(const GammaVertex& v) const;  // throws NoSuchEdge
};

// Builds the projected graph by breadth-first closure from the fundamental
// alcove.  Every vertex reached by a second witness alcove has its edge
// profile recomputed from that witness; a disagreement (which would mean the
// projection is not well defined) throws ProfileMismatch.  Rank <= 3.
GammaGraph build_gamma(const AffineWeyl& aw);

// Probability that the walk is absorbed into the chamber translate labeled w.
Rational absorption_probability(const GammaGraph& graph, Index w);

// Probability that the walk ever enters each region; the starting region
// gets 1.
std::map<ShiRegion, Rational> region_hitting_probabilities(const GammaGraph& graph);

}  // namespace coxwalk
