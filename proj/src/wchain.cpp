#include "coxwalk/wchain.hpp"

#include "coxwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace coxwalk {

namespace {

// Reachability over the off-diagonal moves, forwards or backwards.
std::size_t reach_count(const TransitionMatrix& chain, bool reversed) {
    const std::size_t n = chain.size();
    std::vector<std::vector<Index>> adj(n);
    for (Index u = 0; u < n; ++u)
        for (const auto& [v, p] : chain.row(u)) {
            if (reversed)
                adj[v].push_back(u);
            else
                adj[u].push_back(v);
        }
    std::vector<char> seen(n, 0);
    std::queue<Index> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        Index u = q.front();
        q.pop();
        for (Index v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count;
}

RationalVec generator_weights(const RootSystem& rs, WeightScheme scheme) {
    const int rank = rs.rank();
    RationalVec g(static_cast<std::size_t>(rank) + 1);
    switch (scheme) {
        case WeightScheme::uniform: {
            Rational w = make_rational(1, rank + 1);
            for (auto& x : g) x = w;
            break;
        }
        case WeightScheme::marks: {
            // Highest-root coefficients, with weight 1 on the affine node.
            long h = static_cast<long>(rs.coxeter_number());
            g[0] = make_rational(1, h);
            for (int i = 1; i <= rank; ++i)
                g[static_cast<std::size_t>(i)] =
                    make_rational(rs.marks()[static_cast<std::size_t>(i - 1)], h);
            break;
        }
        case WeightScheme::comarks: {
            long h = static_cast<long>(rs.dual_coxeter_number());
            g[0] = make_rational(1, h);
            for (int i = 1; i <= rank; ++i)
                g[static_cast<std::size_t>(i)] =
                    make_rational(rs.comarks()[static_cast<std::size_t>(i - 1)], h);
            break;
        }
    }
    Rational total(0);
    for (const auto& x : g) total += x;
    if (total != 1) throw Error("generator weights do not sum to 1");
    return g;
}

// Primitive integer vector on the ray of a positive rational vector.
IntVec primitive_ray(const RationalVec& v) {
    BigInt den_lcm(1);
    for (const auto& x : v) {
        BigInt d = x.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> scaled;
    BigInt g(0);
    for (const auto& x : v) {
        BigInt s = BigInt(x.get_num()) * (den_lcm / BigInt(x.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
        scaled.push_back(s);
    }
    if (g == 0) throw ZeroDirection("direction vector is zero");
    IntVec out;
    for (auto& s : scaled) {
        BigInt r = s / g;
        if (!r.fits_slong_p()) throw Error("direction coordinates overflow");
        out.push_back(r.get_si());
    }
    return out;
}

std::vector<double> unit_of(const RootSystem& rs, const IntVec& coords) {
    double norm = std::sqrt(to_double(rs.coroot_norm2(coords)));
    std::vector<double> unit;
    unit.reserve(coords.size());
    for (long long c : coords) unit.push_back(static_cast<double>(c) / norm);
    return unit;
}

}  // namespace

std::string weight_scheme_name(WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::uniform: return "uniform";
        case WeightScheme::marks: return "marks";
        case WeightScheme::comarks: return "comarks";
    }
    return "uniform";
}

WeightScheme parse_weight_scheme(const std::string& name) {
    if (name == "uniform") return WeightScheme::uniform;
    if (name == "marks") return WeightScheme::marks;
    if (name == "comarks") return WeightScheme::comarks;
    throw Error("unknown weight scheme: " + name);
}

TransitionMatrix::TransitionMatrix(std::shared_ptr<const WeylGroup> group,
                                   WeightScheme scheme,
                                   std::vector<std::vector<std::pair<Index, Rational>>> rows,
                                   RationalVec diagonal)
    : group_(std::move(group)),
      scheme_(scheme),
      rows_(std::move(rows)),
      diagonal_(std::move(diagonal)) {}

Rational TransitionMatrix::prob(Index u, Index v) const {
    if (u == v) return diagonal_[u];
    for (const auto& [t, p] : rows_[u])
        if (t == v) return p;
    return Rational(0);
}

SparseChain TransitionMatrix::to_sparse_chain() const {
    SparseChain chain;
    chain.n = diagonal_.size();
    chain.entries.resize(chain.n);
    for (Index u = 0; u < chain.n; ++u) {
        chain.entries[u] = rows_[u];
        if (diagonal_[u] != 0) chain.entries[u].emplace_back(u, diagonal_[u]);
        std::sort(chain.entries[u].begin(), chain.entries[u].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return chain;
}

TransitionMatrix build_chain(std::shared_ptr<const WeylGroup> group, WeightScheme scheme) {
    const WeylGroup& wg = *group;
    const RootSystem& rs = wg.roots();
    const int rank = rs.rank();
    RationalVec g = generator_weights(rs, scheme);

    const Index n = wg.size();
    std::vector<std::vector<std::pair<Index, Rational>>> rows(n);
    RationalVec diagonal(n, Rational(0));
    for (Index w = 0; w < n; ++w) {
        for (int i = 1; i <= rank; ++i) {
            if (wg.is_left_descent(i, w))
                rows[w].emplace_back(wg.left_mul(i, w), g[static_cast<std::size_t>(i)]);
            else
                diagonal[w] += g[static_cast<std::size_t>(i)];
        }
        if (wg.theta_ascent(w))
            rows[w].emplace_back(wg.theta_left_mul(w), g[0]);
        else
            diagonal[w] += g[0];
        std::sort(rows[w].begin(), rows[w].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return TransitionMatrix(std::move(group), scheme, std::move(rows), std::move(diagonal));
}

Distribution stationary_distribution(const TransitionMatrix& chain) {
    const std::size_t n = chain.size();
    if (n > 4096)
        throw StateSpaceTooLarge("stationary solve limited to groups of order <= 4096, got " +
                                 std::to_string(n));
    if (reach_count(chain, false) != n || reach_count(chain, true) != n)
        throw NotIrreducible("chain on W is not strongly connected");
    bool aperiodic = false;
    for (Index u = 0; u < n && !aperiodic; ++u)
        if (chain.diagonal(u) > 0) aperiodic = true;
    if (!aperiodic) throw NotIrreducible("chain on W has no lazy state; period may exceed 1");

    Distribution dist{chain.group(), solve_stationary(chain.to_sparse_chain())};
    return dist;
}

Distribution chamber_probabilities(const Distribution& zeta) {
    const WeylGroup& wg = *zeta.group;
    const Index w0 = wg.longest_element();
    RationalVec values(wg.size());
    for (Index w = 0; w < wg.size(); ++w)
        values[w] = zeta.values[wg.multiply(wg.inverse(w), w0)];
    return Distribution{zeta.group, std::move(values)};
}

DirectionVector psi(const WeylGroup& group, const Distribution& zeta) {
    const RootSystem& rs = group.roots();
    const IntVec& theta_coroot = rs.highest_coroot();
    RationalVec sum(static_cast<std::size_t>(rs.rank()), Rational(0));
    for (Index w = 0; w < group.size(); ++w) {
        if (!group.theta_ascent(w)) continue;
        IntVec moved = group.apply_to_coroot(group.inverse(w), theta_coroot);
        for (std::size_t j = 0; j < sum.size(); ++j)
            sum[j] += zeta.values[w] * rat_of(moved[j]);
    }
    IntVec coords = primitive_ray(sum);
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.pair_with_simple_root(coords, i) < 0)
            throw Error("limiting direction is not dominant");
    return DirectionVector{coords, unit_of(rs, coords)};
}

DirectionVector psi(std::shared_ptr<const RootSystem> rs, WeightScheme scheme) {
    auto group = WeylGroup::build(std::move(rs));
    TransitionMatrix chain = build_chain(group, scheme);
    return psi(*group, stationary_distribution(chain));
}

Rational ergodic_edge_rate(const TransitionMatrix& chain, const Distribution& zeta,
                           Index u, Index v) {
    if (u >= chain.size() || v >= chain.size())
        throw NoSuchEdge("state index out of range");
    if (u == v) throw NoSuchEdge("self-loops are not moves of the chain");
    for (const auto& [t, p] : chain.row(u))
        if (t == v) return zeta.values[u] * p;
    throw NoSuchEdge("no move from state " + std::to_string(u) + " to " + std::to_string(v));
}

RadialSpeed radial_speed(const RootSystem& rs, const DirectionVector& direction) {
    const IntVec& d = direction.coords;
    if (std::all_of(d.begin(), d.end(), [](long long c) { return c == 0; }))
        throw ZeroDirection("radial speed undefined for the zero direction");

    // Fold -d to the antidominant chamber; its negative is the dominant
    // representative of the ray's orbit, whose pairing with 2 rho is the
    // Coxeter length cost of translating by d.
    IntVec v(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) v[j] = -d[j];
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= rs.rank(); ++i)
            if (rs.pair_with_simple_root(v, i) > 0) {
                v = rs.reflect_coroot(i, v);
                moved = true;
            }
    }
    for (auto& c : v) c = -c;
    long long per_step = rs.pair(v, rs.two_rho());

    RadialSpeed speed;
    speed.squared = rs.coroot_norm2(d) / (rat_of(per_step) * rat_of(per_step));
    speed.value = std::sqrt(to_double(speed.squared));
    return speed;
}

ConjectureReport conjecture_probes(std::shared_ptr<const RootSystem> rs) {
    ConjectureReport report;
    report.type_name = rs->type().name();

    auto group = WeylGroup::build(rs);
    TransitionMatrix chain = build_chain(group, WeightScheme::uniform);
    Distribution zeta = stationary_distribution(chain);
    const Index n = group->size();
    const Index w0 = group->longest_element();

    report.ratios_over_longest.reserve(n);
    report.ratios_all_integral = true;
    Index argmax = 0;
    for (Index w = 0; w < n; ++w) {
        Rational r = zeta.values[w] / zeta.values[w0];
        if (r.get_den() != 1) report.ratios_all_integral = false;
        if (zeta.values[w] > zeta.values[argmax]) argmax = w;
        report.ratios_over_longest.push_back(std::move(r));
    }
    report.argmax_state = argmax;
    report.argmax_is_identity = zeta.values[group->identity()] == zeta.values[argmax];
    report.identity_over_longest = report.ratios_over_longest[group->identity()];

    report.binomial_product = 0;
    if (rs->type().family == Family::A) {
        unsigned long n_sym = static_cast<unsigned long>(rs->rank()) + 1;
        BigInt product(1);
        for (unsigned long k = 0; k < n_sym; ++k) {
            BigInt b;
            mpz_bin_uiui(b.get_mpz_t(), n_sym, k);
            product *= b;
        }
        report.binomial_product = product;
        report.identity_ratio_matches_product =
            report.identity_over_longest == Rational(report.binomial_product);
    }

    DirectionVector dir = psi(*group, zeta);
    const IntVec& rho = rs->two_rho_coroot();
    report.psi_parallel_rho_covector = true;
    for (std::size_t i = 0; i < dir.coords.size() && report.psi_parallel_rho_covector; ++i)
        for (std::size_t j = i + 1; j < dir.coords.size(); ++j)
            if (big_of(dir.coords[i]) * big_of(rho[j]) != big_of(dir.coords[j]) * big_of(rho[i])) {
                report.psi_parallel_rho_covector = false;
                break;
            }

    Rational zmin = zeta.values[0], zmax = zeta.values[0];
    for (const auto& z : zeta.values) {
        zmin = std::min(zmin, z);
        zmax = std::max(zmax, z);
    }
    report.uniform_spread = zmax / zmin;
    report.uniform_spread_is_96 = report.uniform_spread == 96;

    if (n <= 2000) {
        // Leading eigenvector of the move graph weighted by reduced-word
        // counts.  The graph is bipartite by length parity, so iterate with
        // an identity shift to get a primitive operator.
        std::vector<double> vec(n, 1.0);
        std::vector<double> next(n);
        double spread = 0.0;
        for (int iter = 0; iter < 200000; ++iter) {
            std::fill(next.begin(), next.end(), 0.0);
            for (Index u = 0; u < n; ++u) {
                next[u] += vec[u];
                for (const auto& [v, p] : chain.row(u)) next[v] += vec[u];
            }
            double total = std::accumulate(next.begin(), next.end(), 0.0);
            double diff = 0.0;
            for (Index u = 0; u < n; ++u) {
                next[u] /= total;
                diff = std::max(diff, std::abs(next[u] - vec[u]));
            }
            vec.swap(next);
            if (diff < 1e-15) break;
        }
        auto [mn, mx] = std::minmax_element(vec.begin(), vec.end());
        spread = *mx / *mn;
        report.pathcount_spread = spread;
        report.pathcount_spread_near_96 = std::abs(spread - 96.0) < 1e-6;
        report.pathcount_computed = true;
    }
    return report;
}

}  // namespace coxwalk
