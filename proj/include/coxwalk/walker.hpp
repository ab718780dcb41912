#pragma once
// Monte Carlo simulation of the reduced random walk on alcoves, plus exact
// step-N distributions computed by dynamic programming over covers.
//
// Variants: the free walk steps to a uniformly random adjacent alcove it has
// not cut a hyperplane towards yet; the delayed walk attempts a uniformly
// random generator and stays put when that would shorten the word; the
// grassmannian variants confine the walk to the dominant chamber.

#include "coxwalk/affine.hpp"
#include "coxwalk/rational.hpp"
#include "coxwalk/weyl.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace coxwalk {

enum class WalkVariant { free, delayed, grassmannian, delayed_grassmannian };

std::string walk_variant_name(WalkVariant variant);
WalkVariant parse_walk_variant(const std::string& name);

struct Trajectory {
    std::uint64_t seed = 0;
    WalkVariant variant = WalkVariant::free;
    // X_0 = identity through X_N; consecutive entries differ by one left
    // generator, or coincide when a delayed attempt fails.
    std::vector<AffineElement> states;
    // Generator applied at each step; -1 records a delayed stay.
    std::vector<int> moves;
};

struct StepDistribution {
    int steps = 0;
    WalkVariant variant = WalkVariant::free;
    std::map<AffineElement, Rational> probabilities;
};

struct ChamberFrequencies {
    std::shared_ptr<const WeylGroup> group;
    std::vector<double> frequency;  // indexed by chamber label, sums to <= 1
    std::uint64_t undecided = 0;    // endpoints on a wall: reported, not tie-broken
    std::uint64_t trials = 0;
};

Trajectory simulate(const AffineWeyl& aw, int steps, WalkVariant variant,
                    std::uint64_t seed);

// Exact distribution of X_N for the free or delayed walk, as rationals
// summing to one.  Guarded to rank <= 3 and N <= 12 (StateSpaceTooLarge).
StepDistribution exact_distribution(const AffineWeyl& aw, int steps, WalkVariant variant);

// Number of length-N reduced words ending at each element; normalizing gives
// the free-walk-adjacent measure that weights elements by word count.
std::map<AffineElement, BigInt> reduced_word_counts(const AffineWeyl& aw, int steps);

// Endpoint chamber of `trials` independent trajectories (free walk).
ChamberFrequencies empirical_chamber_frequencies(const AffineWeyl& aw, int steps,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 int threads = 1);

// Mean endpoint direction folded into the dominant chamber, unit length
// under the invariant form, in coroot coordinates.
std::vector<double> empirical_direction(const AffineWeyl& aw, int steps,
                                        std::uint64_t trials, std::uint64_t seed,
                                        int threads = 1);

// Transition counts of the finite part w along a trajectory, including
// stays; rows/columns indexed by the finite Weyl group.
std::vector<std::vector<std::uint64_t>> projected_kernel(const AffineWeyl& aw,
                                                         const Trajectory& sample);

}  // namespace coxwalk
