#pragma once
// Partitions with no removable n-ribbon, their bijection with the
// length-minimal coset representatives of type A affine Weyl groups, random
// growth, boundary profiles, and the limiting boundary curve.
//
// Boxes live on diagonals; the residue of box (row r, column c) is
// (c - r) mod n.  Generator i acts by toggling all corners of residue i.
// Boundary profiles are staircase paths in the fourth quadrant; distances
// between profiles are measured along the anti-diagonals x + y = t, which
// every profile crosses exactly once.

#include "coxwalk/affine.hpp"
#include "coxwalk/rational.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace coxwalk {

struct CorePartition {
    std::vector<long long> rows;  // weakly decreasing, positive entries
    int modulus = 0;              // the forbidden ribbon size n
    friend auto operator<=>(const CorePartition&, const CorePartition&) = default;
};

// Staircase boundary of a partition (or a limit curve), scaled by 1/scale.
// Vertices are listed with x + y increasing; the path continues as the
// vertical ray below the first vertex and the horizontal ray after the last.
struct BoundaryProfile {
    std::vector<std::array<double, 2>> vertices;
    long long scale = 1;
};

// Limiting boundary of the scaled random core, the piecewise-linear curve
// with n vertices built from alpha = 6/((n-1)n(n+1)).
struct LimitCurve {
    int n = 0;
    Rational alpha;
    BoundaryProfile profile;
    // Area constant as printed in the source formula n^2(n^2-1)alpha^2/12,
    // and the plain geometric area between the curve and the axes.  The
    // printed constant is exactly twice the geometric one; both are exposed
    // so the discrepancy stays visible.
    Rational area_scale_constant;
    Rational enclosed_area;
    // True when the limiting-direction proportionality psi || rho has been
    // re-verified exactly for this n (done for n <= 6); otherwise the curve
    // is conditional on that unproven proportionality.
    bool direction_verified = false;
};

struct SlopeSegment {
    Rational slope;         // (n-i)/i for the i-th segment
    long long diag_lo = 0;  // n mu_i + i - 2
    long long diag_hi = 0;  // n mu_{i+1} + i - 2
};

enum class FirstRowForm { by_degree, by_boxes };

struct FirstRowStatistics {
    FirstRowForm form = FirstRowForm::by_degree;
    // 3/(n+1) per unit of degree, or sqrt(3)(n-1)/sqrt(n^2-1) per sqrt(box
    // count).  Both rest on the unproven direction proportionality.
    double asymptotic_constant = 0.0;
    double predicted_value = 0.0;
    bool conditional_on_direction = true;
    double monte_carlo_estimate = 0.0;  // 0 unless trials were requested
};

// Adds every addable corner of residue i; failing that, removes every
// removable corner of residue i; otherwise returns the input unchanged.
// `grew` reports whether boxes were added.
std::pair<CorePartition, bool> apply_generator(const CorePartition& core, int residue);

// The bijection with length-minimal coset representatives of the type A
// affine group of modulus n = rank + 1.  Degree (distance from the empty
// partition) equals the Coxeter length.
CorePartition core_from_affine(const AffineWeyl& aw, const AffineElement& x);
AffineElement affine_from_core(const AffineWeyl& aw, const CorePartition& core);

long long core_degree(const CorePartition& core);
long long core_boxes(const CorePartition& core);

// Coordinates of a coweight: library vectors are in simple-coroot
// coordinates; n-core statements use n integers summing to zero.
IntVec standard_to_coroot(const IntVec& standard);
IntVec coroot_to_standard(const IntVec& coroot);

// The n-1 coarse slopes of the boundary of the core of t_mu, with the
// diagonal window of each; mu is given in standard coordinates, weakly
// increasing (anti-dominant), summing to zero.  Window endpoints follow the
// closed formula and are reliable only up to a couple of units.
std::vector<SlopeSegment> slope_profile(const IntVec& mu_standard, int n);

BoundaryProfile boundary_profile(const CorePartition& core);  // scale = degree
BoundaryProfile boundary_profile(const CorePartition& core, long long scale);

// Sup over anti-diagonals of the Euclidean distance between the two
// profiles' crossing points.
double profile_distance(const BoundaryProfile& a, const BoundaryProfile& b);

LimitCurve limit_curve(int n);

FirstRowStatistics first_row_statistics(int n, long long amount, FirstRowForm form,
                                        int mc_trials = 0, std::uint64_t seed = 0);

// Core of the chamber-confined walk after `steps` steps; degree == steps.
CorePartition random_core(int n, int steps, std::uint64_t seed);

}  // namespace coxwalk
