#pragma once
// Projected Markov chain on the finite Weyl group.
//
// The delayed walk in the dominant chamber, watched only through the finite
// part w of x = w t_lambda, is a Markov chain on W: with equal weight on
// each of the rank+1 generators, w steps to s_i w for every left descent i,
// steps to r_theta w when that raises length, and otherwise stays put.
// Its stationary vector zeta determines the limiting direction of the walk
// and the probability of ending in each Weyl chamber.

#include "coxwalk/linalg.hpp"
#include "coxwalk/rational.hpp"
#include "coxwalk/roots.hpp"
#include "coxwalk/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coxwalk {

enum class WeightScheme { uniform, marks, comarks };

std::string weight_scheme_name(WeightScheme scheme);
WeightScheme parse_weight_scheme(const std::string& name);

// Row-stochastic kernel of the projected chain.  Rows hold the off-diagonal
// moves only; the leftover generator weight sits on the diagonal.
class TransitionMatrix {
public:
    TransitionMatrix(std::shared_ptr<const WeylGroup> group, WeightScheme scheme,
                     std::vector<std::vector<std::pair<Index, Rational>>> rows,
                     RationalVec diagonal);

    const std::shared_ptr<const WeylGroup>& group() const { return group_; }
    WeightScheme scheme() const { return scheme_; }
    std::size_t size() const { return diagonal_.size(); }

    // Off-diagonal transitions out of u, each with positive probability.
    const std::vector<std::pair<Index, Rational>>& row(Index u) const { return rows_[u]; }
    const Rational& diagonal(Index u) const { return diagonal_[u]; }
    Rational prob(Index u, Index v) const;

    SparseChain to_sparse_chain() const;

private:
    std::shared_ptr<const WeylGroup> group_;
    WeightScheme scheme_;
    std::vector<std::vector<std::pair<Index, Rational>>> rows_;
    RationalVec diagonal_;
};

// Probability vector indexed by the elements of W.
struct Distribution {
    std::shared_ptr<const WeylGroup> group;
    RationalVec values;
};

// Direction in coroot coordinates: a primitive integer representative of the
// ray together with its unit vector (w.r.t. the invariant form).
struct DirectionVector {
    IntVec coords;
    std::vector<double> unit;
};

// Distance from the origin per unit of Coxeter length along a ray.  The
// squared value is rational; the value itself usually is not.
struct RadialSpeed {
    Rational squared;
    double value = 0.0;
};

// Numerical report on the open questions about zeta.  Everything here is
// observational: callers decide what, if anything, to assert.
struct ConjectureReport {
    std::string type_name;
    // zeta(w) / zeta(longest element) for every w, in group order.
    RationalVec ratios_over_longest;
    bool ratios_all_integral = false;
    Index argmax_state = 0;
    bool argmax_is_identity = false;
    Rational identity_over_longest;
    // For A_{n-1}: prod_{k=0}^{n-1} binom(n,k), the conjectured value of
    // zeta(id)/zeta(w0).  Zero for other families.
    BigInt binomial_product;
    bool identity_ratio_matches_product = false;
    bool psi_parallel_rho_covector = false;
    // max zeta / min zeta under the uniform chain (equals the spread of the
    // chamber probabilities), and whether it is exactly 96.
    Rational uniform_spread;
    bool uniform_spread_is_96 = false;
    // Same spread for the measure weighting elements by reduced-word counts
    // (leading eigenvector of the unweighted move graph), when computed.
    double pathcount_spread = 0.0;
    bool pathcount_spread_near_96 = false;
    bool pathcount_computed = false;
};

TransitionMatrix build_chain(std::shared_ptr<const WeylGroup> group,
                             WeightScheme scheme = WeightScheme::uniform);

// Exact stationary vector.  Verifies irreducibility (throws NotIrreducible)
// and aperiodicity before solving; the result is certified by re-checking
// zeta P = zeta in rational arithmetic.
Distribution stationary_distribution(const TransitionMatrix& chain);

// Probability that the walk ends up in the chamber labeled w, namely
// zeta(w^{-1} w0).
Distribution chamber_probabilities(const Distribution& zeta);

// Limiting direction of the walk: the zeta-weighted average of w^{-1}(theta-
// coroot) over the states where the theta move raises length.  Dominant and
// nonzero for every irreducible type (ZeroDirection otherwise).
DirectionVector psi(const WeylGroup& group, const Distribution& zeta);
DirectionVector psi(std::shared_ptr<const RootSystem> rs,
                    WeightScheme scheme = WeightScheme::uniform);

// Long-run traversal rate of a single move u -> v of the chain, which is
// zeta(u) p(u,v).  Self-loops and absent moves throw NoSuchEdge.
Rational ergodic_edge_rate(const TransitionMatrix& chain, const Distribution& zeta,
                           Index u, Index v);

// Euclidean distance travelled per unit of Coxeter length along direction d:
// |d| / <-(d folded antidominant), 2 rho>.  Invariant under positive scaling
// of d.  Throws ZeroDirection on the zero vector.
RadialSpeed radial_speed(const RootSystem& rs, const DirectionVector& direction);

ConjectureReport conjecture_probes(std::shared_ptr<const RootSystem> rs);

}  // namespace coxwalk
