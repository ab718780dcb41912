#include "coxwalk/walker.hpp"

#include "coxwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace coxwalk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Unbiased uniform draw from {0, ..., n-1}; rejection keeps the stream
// identical across platforms, unlike std::uniform_int_distribution.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % n);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 1));
}

void check_dp_guard(const AffineWeyl& aw, int steps) {
    if (aw.weyl().rank() > 3 || steps > 12)
        throw StateSpaceTooLarge("exact enumeration guarded to rank <= 3 and N <= 12");
    if (steps < 0) throw Error("negative step count");
}

// Runs `body(trial, rng)` for every trial, fanning out across threads; the
// aggregate must not depend on execution order.
template <typename Body>
void fan_out(std::uint64_t trials, std::uint64_t seed, int threads, Body body) {
    if (threads < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::mt19937_64 rng(trial_seed(seed, t));
            body(t, rng);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
        pool.emplace_back([&, k] {
            for (std::uint64_t t = static_cast<std::uint64_t>(k); t < trials;
                 t += static_cast<std::uint64_t>(threads)) {
                std::mt19937_64 rng(trial_seed(seed, t));
                body(t, rng);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::string walk_variant_name(WalkVariant variant) {
    switch (variant) {
        case WalkVariant::free: return "free";
        case WalkVariant::delayed: return "delayed";
        case WalkVariant::grassmannian: return "grassmannian";
        case WalkVariant::delayed_grassmannian: return "delayed-grassmannian";
    }
    return "free";
}

WalkVariant parse_walk_variant(const std::string& name) {
    if (name == "free") return WalkVariant::free;
    if (name == "delayed") return WalkVariant::delayed;
    if (name == "grassmannian") return WalkVariant::grassmannian;
    if (name == "delayed-grassmannian" || name == "delayed_grassmannian")
        return WalkVariant::delayed_grassmannian;
    throw Error("unknown walk variant: " + name);
}

Trajectory simulate(const AffineWeyl& aw, int steps, WalkVariant variant,
                    std::uint64_t seed) {
    if (steps < 0) throw Error("negative step count");
    const int r = aw.weyl().rank() + 1;
    std::mt19937_64 rng(seed);

    Trajectory traj;
    traj.seed = seed;
    traj.variant = variant;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.moves.reserve(static_cast<std::size_t>(steps));
    AffineElement x = aw.identity_element();
    traj.states.push_back(x);
    for (int k = 0; k < steps; ++k) {
        int applied = -1;
        switch (variant) {
            case WalkVariant::free: {
                std::vector<int> moves = aw.up_moves(x);
                applied = moves[uniform_below(rng, moves.size())];
                x = aw.left_mul_gen(applied, x);
                break;
            }
            case WalkVariant::grassmannian: {
                std::vector<int> moves = aw.grassmannian_up_moves(x);
                applied = moves[uniform_below(rng, moves.size())];
                x = aw.left_mul_gen(applied, x);
                break;
            }
            case WalkVariant::delayed: {
                int i = static_cast<int>(uniform_below(rng, static_cast<std::size_t>(r)));
                if (aw.is_up_move(i, x)) {
                    applied = i;
                    x = aw.left_mul_gen(i, x);
                }
                break;
            }
            case WalkVariant::delayed_grassmannian: {
                int i = static_cast<int>(uniform_below(rng, static_cast<std::size_t>(r)));
                if (aw.is_up_move(i, x)) {
                    AffineElement next = aw.left_mul_gen(i, x);
                    if (aw.is_affine_grassmannian(next)) {
                        applied = i;
                        x = std::move(next);
                    }
                }
                break;
            }
        }
        traj.states.push_back(x);
        traj.moves.push_back(applied);
    }
    return traj;
}

StepDistribution exact_distribution(const AffineWeyl& aw, int steps, WalkVariant variant) {
    if (variant != WalkVariant::free && variant != WalkVariant::delayed)
        throw Error("exact distribution implemented for the free and delayed walks only");
    check_dp_guard(aw, steps);
    const int r = aw.weyl().rank() + 1;
    const Rational step_weight = make_rational(1, r);

    std::map<AffineElement, Rational> dist;
    dist[aw.identity_element()] = Rational(1);
    for (int k = 0; k < steps; ++k) {
        std::map<AffineElement, Rational> next;
        for (const auto& [x, p] : dist) {
            if (variant == WalkVariant::free) {
                std::vector<int> moves = aw.up_moves(x);
                Rational share = p / rat_of(static_cast<long long>(moves.size()));
                for (int i : moves) next[aw.left_mul_gen(i, x)] += share;
            } else {
                for (int i = 0; i < r; ++i) {
                    if (aw.is_up_move(i, x))
                        next[aw.left_mul_gen(i, x)] += p * step_weight;
                    else
                        next[x] += p * step_weight;
                }
            }
        }
        dist.swap(next);
    }

    Rational total(0);
    for (const auto& [x, p] : dist) total += p;
    if (total != 1) throw Error("probability mass not conserved in exact enumeration");
    StepDistribution out;
    out.steps = steps;
    out.variant = variant;
    out.probabilities = std::move(dist);
    return out;
}

std::map<AffineElement, BigInt> reduced_word_counts(const AffineWeyl& aw, int steps) {
    check_dp_guard(aw, steps);
    std::map<AffineElement, BigInt> counts;
    counts[aw.identity_element()] = 1;
    for (int k = 0; k < steps; ++k) {
        std::map<AffineElement, BigInt> next;
        for (const auto& [x, c] : counts)
            for (int i : aw.up_moves(x)) next[aw.left_mul_gen(i, x)] += c;
        counts.swap(next);
    }
    return counts;
}

ChamberFrequencies empirical_chamber_frequencies(const AffineWeyl& aw, int steps,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 int threads) {
    if (trials == 0) throw Error("need at least one trial");
    const auto group = aw.weyl_ptr();
    const Index n = group->size();
    const int nthreads = std::max(1, threads);
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(nthreads), std::vector<std::uint64_t>(n, 0));
    std::vector<std::uint64_t> undecided(static_cast<std::size_t>(nthreads), 0);

    fan_out(trials, seed, nthreads, [&](std::uint64_t t, std::mt19937_64& rng) {
        AffineElement x = aw.identity_element();
        for (int k = 0; k < steps; ++k) {
            std::vector<int> moves = aw.up_moves(x);
            x = aw.left_mul_gen(moves[uniform_below(rng, moves.size())], x);
        }
        const std::size_t slot = static_cast<std::size_t>(t % static_cast<std::uint64_t>(nthreads));
        if (auto c = aw.chamber_of(x))
            ++counts[slot][*c];
        else
            ++undecided[slot];
    });

    ChamberFrequencies out;
    out.group = group;
    out.frequency.assign(n, 0.0);
    out.trials = trials;
    for (int k = 0; k < nthreads; ++k) {
        out.undecided += undecided[static_cast<std::size_t>(k)];
        for (Index w = 0; w < n; ++w)
            out.frequency[w] += static_cast<double>(counts[static_cast<std::size_t>(k)][w]);
    }
    for (Index w = 0; w < n; ++w) out.frequency[w] /= static_cast<double>(trials);
    return out;
}

std::vector<double> empirical_direction(const AffineWeyl& aw, int steps,
                                        std::uint64_t trials, std::uint64_t seed,
                                        int threads) {
    if (trials == 0) throw Error("need at least one trial");
    const WeylGroup& wg = aw.weyl();
    const RootSystem& rs = wg.roots();
    const std::size_t dim = static_cast<std::size_t>(rs.rank());
    const int nthreads = std::max(1, threads);
    // Per-trial unit vectors, reduced sequentially afterwards so the result
    // does not depend on the thread count.
    std::vector<double> contrib(static_cast<std::size_t>(trials) * dim, 0.0);

    // Gram matrix of the invariant form on coroot coordinates, as doubles.
    std::vector<std::vector<double>> gram(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            RationalVec ei(dim, Rational(0)), ej(dim, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            gram[i][j] = to_double(rs.coroot_inner(ei, ej));
        }
    auto norm_of = [&](const std::vector<double>& v) {
        double q = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) q += v[i] * gram[i][j] * v[j];
        return std::sqrt(q);
    };

    fan_out(trials, seed, nthreads, [&](std::uint64_t t, std::mt19937_64& rng) {
        AffineElement x = aw.identity_element();
        for (int k = 0; k < steps; ++k) {
            std::vector<int> moves = aw.up_moves(x);
            x = aw.left_mul_gen(moves[uniform_below(rng, moves.size())], x);
        }
        // Dominant representative of the endpoint direction: fold the
        // negated position antidominant and negate back.
        RationalVec pos = aw.centroid(x);
        RationalVec neg(dim);
        for (std::size_t j = 0; j < dim; ++j) neg[j] = -pos[j];
        RationalVec folded = wg.fold_antidominant(neg).second;
        std::vector<double> v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = -to_double(folded[j]);
        double norm = norm_of(v);
        if (norm == 0.0) return;  // walk still at the origin
        for (std::size_t j = 0; j < dim; ++j)
            contrib[static_cast<std::size_t>(t) * dim + j] = v[j] / norm;
    });

    std::vector<double> mean(dim, 0.0);
    for (std::uint64_t t = 0; t < trials; ++t)
        for (std::size_t j = 0; j < dim; ++j)
            mean[j] += contrib[static_cast<std::size_t>(t) * dim + j];
    double norm = norm_of(mean);
    if (norm > 0.0)
        for (std::size_t j = 0; j < dim; ++j) mean[j] /= norm;
    return mean;
}

std::vector<std::vector<std::uint64_t>> projected_kernel(const AffineWeyl& aw,
                                                         const Trajectory& sample) {
    if (sample.states.empty()) throw Error("empty trajectory");
    const Index n = aw.weyl().size();
    std::vector<std::vector<std::uint64_t>> counts(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t k = 0; k + 1 < sample.states.size(); ++k)
        ++counts[sample.states[k].w][sample.states[k + 1].w];
    return counts;
}

}  // namespace coxwalk
