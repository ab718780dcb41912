#include "coxwalk/ncore.hpp"

#include "coxwalk/errors.hpp"
#include "coxwalk/walker.hpp"
#include "coxwalk/wchain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace coxwalk {

namespace {

int floor_mod(long long value, int n) {
    int m = static_cast<int>(value % n);
    return m < 0 ? m + n : m;
}

void validate_core(const CorePartition& core) {
    if (core.modulus < 2) throw Error("core modulus must be at least 2");
    for (std::size_t r = 0; r < core.rows.size(); ++r) {
        if (core.rows[r] <= 0) throw Error("core rows must be positive");
        if (r > 0 && core.rows[r] > core.rows[r - 1])
            throw Error("core rows must be weakly decreasing");
    }
}

// Rows owning an addable (resp. removable) corner of the given residue; the
// addable scan includes the empty row below the diagram.
std::vector<std::size_t> addable_rows(const CorePartition& core, int residue) {
    std::vector<std::size_t> rows;
    const std::size_t R = core.rows.size();
    for (std::size_t r = 0; r <= R; ++r) {
        long long len = r < R ? core.rows[r] : 0;
        if (r > 0 && core.rows[r - 1] <= len) continue;
        if (floor_mod(len - static_cast<long long>(r), core.modulus) == residue)
            rows.push_back(r);
    }
    return rows;
}

std::vector<std::size_t> removable_rows(const CorePartition& core, int residue) {
    std::vector<std::size_t> rows;
    const std::size_t R = core.rows.size();
    for (std::size_t r = 0; r < R; ++r) {
        if (r + 1 < R && core.rows[r + 1] >= core.rows[r]) continue;
        if (floor_mod(core.rows[r] - 1 - static_cast<long long>(r), core.modulus) == residue)
            rows.push_back(r);
    }
    return rows;
}

AffineWeyl affine_group_for(int n) {
    if (n < 2) throw Error("core modulus must be at least 2");
    return AffineWeyl(WeylGroup::build(RootSystem::build(TypeTag{Family::A, n - 1})));
}

void check_type_a(const AffineWeyl& aw) {
    if (aw.roots().type().family != Family::A)
        throw UnsupportedType("the core bijection needs an affine symmetric group");
}

// Exact check that the limiting direction is proportional to rho; feasible
// for n <= 6 (the finite group has order n!).
bool direction_verified_for(int n) {
    if (n > 6) return false;
    auto rs = RootSystem::build(TypeTag{Family::A, n - 1});
    DirectionVector dir = psi(rs);
    const IntVec& rho = rs->two_rho_coroot();
    for (std::size_t i = 0; i < dir.coords.size(); ++i)
        for (std::size_t j = i + 1; j < dir.coords.size(); ++j)
            if (big_of(dir.coords[i]) * big_of(rho[j]) != big_of(dir.coords[j]) * big_of(rho[i]))
                throw Error("direction proportionality check failed for modulus " +
                            std::to_string(n));
    return true;
}

}  // namespace

std::pair<CorePartition, bool> apply_generator(const CorePartition& core, int residue) {
    validate_core(core);
    if (residue < 0 || residue >= core.modulus)
        throw Error("residue out of range for modulus " + std::to_string(core.modulus));

    CorePartition next = core;
    std::vector<std::size_t> add = addable_rows(core, residue);
    if (!add.empty()) {
        for (std::size_t r : add) {
            if (r == next.rows.size())
                next.rows.push_back(1);
            else
                ++next.rows[r];
        }
        validate_core(next);
        return {std::move(next), true};
    }
    std::vector<std::size_t> remove = removable_rows(core, residue);
    for (std::size_t r : remove) --next.rows[r];
    while (!next.rows.empty() && next.rows.back() == 0) next.rows.pop_back();
    if (!next.rows.empty()) validate_core(next);
    return {std::move(next), false};
}

CorePartition core_from_affine(const AffineWeyl& aw, const AffineElement& x) {
    check_type_a(aw);
    if (!aw.is_affine_grassmannian(x))
        throw NotGrassmannian("element is not a minimal coset representative");
    const int n = aw.rank() + 1;

    // Peel left descents down to the identity, then replay the word from the
    // inside out: the walk applies generators on the left, so the first
    // generator applied is the innermost letter.
    std::vector<int> word;
    AffineElement y = x;
    while (!(y == aw.identity_element())) {
        int descent = -1;
        for (int i = 0; i < n && descent < 0; ++i)
            if (!aw.is_up_move(i, y)) descent = i;
        if (descent < 0) throw Error("no descent found while peeling");
        word.push_back(descent);
        y = aw.left_mul_gen(descent, y);
    }

    CorePartition core;
    core.modulus = n;
    for (std::size_t k = word.size(); k-- > 0;) {
        auto [grown, grew] = apply_generator(core, word[k]);
        if (!grew) throw Error("replay of a reduced word failed to grow the core");
        core = std::move(grown);
    }
    return core;
}

AffineElement affine_from_core(const AffineWeyl& aw, const CorePartition& core) {
    check_type_a(aw);
    validate_core(core);
    if (core.modulus != aw.rank() + 1)
        throw DimensionMismatch("core modulus " + std::to_string(core.modulus) +
                                " does not match group modulus " +
                                std::to_string(aw.rank() + 1));
    std::vector<int> word;
    CorePartition current = core;
    while (!current.rows.empty()) {
        int picked = -1;
        for (int i = 0; i < core.modulus && picked < 0; ++i)
            if (addable_rows(current, i).empty() && !removable_rows(current, i).empty())
                picked = i;
        if (picked < 0) throw Error("no removable residue found while peeling core");
        current = apply_generator(current, picked).first;
        word.push_back(picked);
    }
    AffineElement x = aw.from_word(word);
    if (!aw.is_affine_grassmannian(x))
        throw Error("core peeling produced a non-minimal representative");
    return x;
}

long long core_degree(const CorePartition& core) {
    validate_core(core);
    long long steps = 0;
    CorePartition current = core;
    while (!current.rows.empty()) {
        int picked = -1;
        for (int i = 0; i < core.modulus && picked < 0; ++i)
            if (addable_rows(current, i).empty() && !removable_rows(current, i).empty())
                picked = i;
        if (picked < 0) throw Error("no removable residue found while peeling core");
        current = apply_generator(current, picked).first;
        ++steps;
    }
    return steps;
}

long long core_boxes(const CorePartition& core) {
    validate_core(core);
    return std::accumulate(core.rows.begin(), core.rows.end(), 0ll);
}

IntVec standard_to_coroot(const IntVec& standard) {
    if (standard.size() < 2) throw DimensionMismatch("need at least two coordinates");
    long long total = std::accumulate(standard.begin(), standard.end(), 0ll);
    if (total != 0) throw Error("standard coordinates must sum to zero");
    IntVec coroot(standard.size() - 1);
    long long partial = 0;
    for (std::size_t i = 0; i + 1 < standard.size(); ++i) {
        partial += standard[i];
        coroot[i] = partial;
    }
    return coroot;
}

IntVec coroot_to_standard(const IntVec& coroot) {
    IntVec standard(coroot.size() + 1);
    long long prev = 0;
    for (std::size_t i = 0; i < coroot.size(); ++i) {
        standard[i] = coroot[i] - prev;
        prev = coroot[i];
    }
    standard[coroot.size()] = -prev;
    return standard;
}

std::vector<SlopeSegment> slope_profile(const IntVec& mu_standard, int n) {
    if (n < 2 || static_cast<int>(mu_standard.size()) != n)
        throw DimensionMismatch("expected " + std::to_string(n) + " coordinates");
    if (std::accumulate(mu_standard.begin(), mu_standard.end(), 0ll) != 0)
        throw NotAntiDominant("standard coordinates must sum to zero");
    for (std::size_t i = 0; i + 1 < mu_standard.size(); ++i)
        if (mu_standard[i] > mu_standard[i + 1])
            throw NotAntiDominant("coordinates must be weakly increasing");

    std::vector<SlopeSegment> segments;
    for (int i = 1; i < n; ++i) {
        SlopeSegment seg;
        seg.slope = make_rational(n - i, i);
        seg.diag_lo = static_cast<long long>(n) * mu_standard[static_cast<std::size_t>(i - 1)] + i - 2;
        seg.diag_hi = static_cast<long long>(n) * mu_standard[static_cast<std::size_t>(i)] + i - 2;
        segments.push_back(seg);
    }
    return segments;
}

BoundaryProfile boundary_profile(const CorePartition& core) {
    long long degree = core_degree(core);
    if (degree == 0) throw ZeroDegree("empty partition: supply an explicit scale");
    return boundary_profile(core, degree);
}

BoundaryProfile boundary_profile(const CorePartition& core, long long scale) {
    validate_core(core);
    if (scale <= 0) throw ZeroDegree("scale must be positive");
    const double s = static_cast<double>(scale);
    BoundaryProfile profile;
    profile.scale = scale;
    const std::size_t R = core.rows.size();
    profile.vertices.push_back({0.0, -static_cast<double>(R) / s});
    long long prev = 0;
    for (std::size_t r = R; r-- > 0;) {
        if (core.rows[r] != prev) {
            profile.vertices.push_back(
                {static_cast<double>(core.rows[r]) / s, -static_cast<double>(r + 1) / s});
            prev = core.rows[r];
        }
        profile.vertices.push_back(
            {static_cast<double>(core.rows[r]) / s, -static_cast<double>(r) / s});
    }
    return profile;
}

namespace {

// The profiles cross each anti-diagonal x + y = t exactly once; this returns
// x - y at the crossing, extending along the two implied rays.
double xi_at(const BoundaryProfile& p, double t) {
    const auto& v = p.vertices;
    auto level = [](const std::array<double, 2>& a) { return a[0] + a[1]; };
    if (v.empty()) return t < 0 ? -t : t;  // boundary of the empty shape
    if (t <= level(v.front())) return 2 * v.front()[0] - t;
    if (t >= level(v.back())) return t - 2 * v.back()[1];
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        double t0 = level(v[k]), t1 = level(v[k + 1]);
        if (t > t1) continue;
        if (t1 == t0) return v[k][0] - v[k][1];
        double share = (t - t0) / (t1 - t0);
        double x = v[k][0] + share * (v[k + 1][0] - v[k][0]);
        double y = v[k][1] + share * (v[k + 1][1] - v[k][1]);
        return x - y;
    }
    return v.back()[0] - v.back()[1];
}

}  // namespace

double profile_distance(const BoundaryProfile& a, const BoundaryProfile& b) {
    std::vector<double> levels;
    for (const auto& p : a.vertices) levels.push_back(p[0] + p[1]);
    for (const auto& p : b.vertices) levels.push_back(p[0] + p[1]);
    if (levels.empty()) return 0.0;
    double sup = 0.0;
    for (double t : levels)
        sup = std::max(sup, std::abs(xi_at(a, t) - xi_at(b, t)));
    // Points on a common anti-diagonal are sqrt(2)/2 apart per unit of x - y.
    return sup / std::sqrt(2.0);
}

LimitCurve limit_curve(int n) {
    if (n < 2) throw Error("limit curve needs modulus at least 2");
    LimitCurve curve;
    curve.n = n;
    curve.alpha = make_rational(6, static_cast<long>(n - 1) * n * (n + 1));
    auto triangle = [](int m) { return static_cast<long>(m) * (m + 1) / 2; };

    std::vector<std::pair<Rational, Rational>> exact;
    for (int k = 0; k < n; ++k)
        exact.emplace_back(rat_of(triangle(k)) * curve.alpha,
                           -rat_of(triangle(n - 1 - k)) * curve.alpha);
    for (const auto& [x, y] : exact)
        curve.profile.vertices.push_back({to_double(x), to_double(y)});
    curve.profile.scale = 1;

    Rational nn = rat_of(n);
    curve.area_scale_constant =
        nn * nn * (nn * nn - 1) * curve.alpha * curve.alpha / rat_of(12);

    // Shoelace area of the region bounded by the curve and the two axes.
    std::vector<std::pair<Rational, Rational>> polygon;
    polygon.emplace_back(Rational(0), Rational(0));
    polygon.insert(polygon.end(), exact.begin(), exact.end());
    Rational twice(0);
    for (std::size_t k = 0; k < polygon.size(); ++k) {
        const auto& [x0, y0] = polygon[k];
        const auto& [x1, y1] = polygon[(k + 1) % polygon.size()];
        twice += x0 * y1 - x1 * y0;
    }
    curve.enclosed_area = abs(twice) / 2;

    curve.direction_verified = direction_verified_for(n);
    return curve;
}

FirstRowStatistics first_row_statistics(int n, long long amount, FirstRowForm form,
                                        int mc_trials, std::uint64_t seed) {
    if (n < 2) throw Error("need modulus at least 2");
    if (amount < 0) throw Error("need a nonnegative degree or box count");
    FirstRowStatistics stats;
    stats.form = form;
    if (form == FirstRowForm::by_degree) {
        stats.asymptotic_constant = 3.0 / (n + 1);
        stats.predicted_value = stats.asymptotic_constant * static_cast<double>(amount);
    } else {
        stats.asymptotic_constant =
            std::sqrt(3.0) * (n - 1) / std::sqrt(static_cast<double>(n) * n - 1);
        stats.predicted_value =
            stats.asymptotic_constant * std::sqrt(static_cast<double>(amount));
    }
    stats.conditional_on_direction = !direction_verified_for(n);

    if (mc_trials > 0) {
        double total = 0.0;
        for (int trial = 0; trial < mc_trials; ++trial) {
            std::uint64_t trial_seed = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
            if (form == FirstRowForm::by_degree) {
                CorePartition core = random_core(n, static_cast<int>(amount), trial_seed);
                total += core.rows.empty() ? 0.0 : static_cast<double>(core.rows[0]);
            } else {
                AffineWeyl aw = affine_group_for(n);
                std::mt19937_64 rng(trial_seed);
                AffineElement x = aw.identity_element();
                CorePartition core;
                core.modulus = n;
                while (core_boxes(core) < amount) {
                    std::vector<int> moves = aw.grassmannian_up_moves(x);
                    int i = moves[rng() % moves.size()];
                    x = aw.left_mul_gen(i, x);
                    core = apply_generator(core, i).first;
                }
                total += core.rows.empty() ? 0.0 : static_cast<double>(core.rows[0]);
            }
        }
        stats.monte_carlo_estimate = total / mc_trials;
    }
    return stats;
}

CorePartition random_core(int n, int steps, std::uint64_t seed) {
    if (steps < 0) throw Error("negative step count");
    AffineWeyl aw = affine_group_for(n);
    Trajectory traj = simulate(aw, steps, WalkVariant::grassmannian, seed);
    CorePartition core;
    core.modulus = n;
    for (int i : traj.moves) core = apply_generator(core, i).first;
    return core;
}

}  // namespace coxwalk
