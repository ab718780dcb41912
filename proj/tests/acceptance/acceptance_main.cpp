// Acceptance gate: one line per criterion, PASS or FAIL, with wall time.
// Exit code is the number of failed criteria.
//
// Criterion 4 documents a genuine negative result: the delayed walk's
// endpoint law is inversion-symmetric, the free walk's is not.  The run
// prints the exact counterexample rather than papering over it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxwalk/json_io.hpp"
#include "coxwalk/ncore.hpp"
#include "coxwalk/shi.hpp"
#include "coxwalk/walker.hpp"
#include "coxwalk/wchain.hpp"

using namespace coxwalk;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int number;
    double limit_seconds;  // 0 = unbounded
    Clock::time_point start = Clock::now();

    explicit Criterion(int n, double limit = 0) : number(n), limit_seconds(limit) {}

    void report(bool ok, const std::string& text) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_seconds > 0 && elapsed >= limit_seconds) ok = false;
        if (!ok) ++failures;
        std::printf("criterion %d: %s  %s  (%.2fs%s)\n", number, ok ? "PASS" : "FAIL",
                    text.c_str(), elapsed,
                    limit_seconds > 0 ? (" / limit " + std::to_string((int)limit_seconds) + "s").c_str()
                                      : "");
        std::fflush(stdout);
    }
};

AffineWeyl affine_of(const std::string& tag) {
    return AffineWeyl(WeylGroup::build(RootSystem::build(tag)));
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    Criterion c(1, 1.0);
    auto zeta = stationary_distribution(build_chain(WeylGroup::build(RootSystem::build("A2"))));
    const int expect[] = {2, 1, 1, 2, 2, 1};
    bool ok = zeta.values.size() == 6;
    for (int i = 0; ok && i < 6; ++i) ok = zeta.values[i] == make_rational(expect[i], 9);
    c.report(ok, "exact stationary vector of the rank-two chain is (2/9,1/9,1/9,2/9,2/9,1/9)");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    Criterion c(2, 5.0);
    auto aw = affine_of("A2");
    auto hitting = region_hitting_probabilities(build_gamma(aw));
    std::multiset<Rational> got;
    for (const auto& [region, p] : hitting) got.insert(p);
    std::multiset<Rational> expect{Rational(1)};
    for (int k = 0; k < 3; ++k) expect.insert(make_rational(1, 3));
    for (int k = 0; k < 6; ++k) expect.insert(make_rational(1, 6));
    for (int k = 0; k < 3; ++k) expect.insert(make_rational(2, 9));
    for (int k = 0; k < 3; ++k) expect.insert(make_rational(1, 9));
    bool ok = hitting.size() == 16 && got == expect;
    c.report(ok, "the sixteen region-hitting probabilities are {1, 1/3 x3, 1/6 x6, 2/9 x3, 1/9 x3}");
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    Criterion c(3, 60.0);
    bool ok = true;
    std::string detail;
    for (const char* tag : {"A2", "B2", "A3"}) {
        auto aw = affine_of(tag);
        auto wg = aw.weyl_ptr();
        auto graph = build_gamma(aw);
        auto chambers = chamber_probabilities(stationary_distribution(build_chain(wg)));
        for (Index w = 0; w < wg->size(); ++w) {
            if (absorption_probability(graph, w) != chambers.values[w]) {
                ok = false;
                detail = std::string(" (mismatch at ") + tag + ")";
            }
        }
    }
    c.report(ok, "absorption probabilities equal the reversed stationary chamber values for "
                 "A2, B2, A3" + detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    Criterion c(4);
    bool delayed_ok = true;
    bool free_ok = true;
    std::string counterexample;

    for (const char* tag : {"A1", "A2", "B2"}) {
        auto aw = affine_of(tag);
        for (WalkVariant variant : {WalkVariant::delayed, WalkVariant::free}) {
            for (int n = 0; n <= 8; ++n) {
                auto dist = exact_distribution(aw, n, variant);
                for (const auto& [x, p] : dist.probabilities) {
                    AffineElement xinv = aw.inverse(x);
                    auto it = dist.probabilities.find(xinv);
                    Rational q = it == dist.probabilities.end() ? Rational(0) : it->second;
                    if (p == q) continue;
                    if (variant == WalkVariant::delayed) {
                        delayed_ok = false;
                    } else if (free_ok) {
                        free_ok = false;
                        std::ostringstream os;
                        os << tag << " free N=" << n << ": P(" << word_string(aw, x)
                           << ") = " << to_fraction_string(p) << " but P("
                           << word_string(aw, xinv) << ") = " << to_fraction_string(q);
                        counterexample = os.str();
                    }
                }
            }
        }
    }

    bool ok = delayed_ok && free_ok;
    std::string text = "endpoint law equals its inverse-image law for N <= 8 on A1, A2, B2, "
                       "both variants";
    c.report(ok, text);
    std::printf("    delayed variant: %s for all N <= 8 on all three types\n",
                delayed_ok ? "symmetric" : "ASYMMETRIC");
    std::printf("    free variant: asymmetric; first counterexample: %s\n",
                counterexample.empty() ? "(none found)" : counterexample.c_str());
    std::printf("    the free-walk half of this criterion states a false symmetry; the\n"
                "    counterexample above is exact and reproducible from the library\n");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    Criterion c(5);
    bool ok = true;
    long long checked = 0;
    for (const char* tag : {"A2", "A3", "B2"}) {
        auto aw = affine_of(tag);
        std::set<AffineElement> seen{aw.identity_element()};
        std::queue<AffineElement> frontier;
        frontier.push(aw.identity_element());
        while (!frontier.empty()) {
            AffineElement x = frontier.front();
            frontier.pop();
            bool finite_side = aw.weyl().theta_ascent(x.w);
            bool affine_side =
                aw.is_up_move(0, x) && aw.is_affine_grassmannian(aw.left_mul_gen(0, x));
            if (finite_side != affine_side) ok = false;
            ++checked;
            if (aw.length(x) >= 8) continue;
            for (int i : aw.grassmannian_up_moves(x)) {
                AffineElement y = aw.left_mul_gen(i, x);
                if (seen.insert(y).second) frontier.push(y);
            }
        }
    }
    std::ostringstream os;
    os << "theta-ascent of the finite part tracks the chamber-preserving affine move on "
       << checked << " elements of length <= 8 (A2, A3, B2)";
    c.report(ok && checked > 50, os.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    Criterion c(6, 300.0);
    bool ok = true;
    for (int rank = 2; rank <= 5; ++rank) {
        auto rs = RootSystem::build("A" + std::to_string(rank));
        auto dir = psi(rs);
        const IntVec& rho = rs->two_rho_coroot();
        for (int i = 1; i < rank; ++i)
            if (dir.coords[i] * rho[0] != dir.coords[0] * rho[i]) ok = false;
    }
    c.report(ok, "limiting direction is exactly proportional to the dominant weight-sum "
                 "covector for A2..A5");
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    Criterion c(7, 120.0);
    auto aw = affine_of("A2");
    auto wg = aw.weyl_ptr();
    auto chambers = chamber_probabilities(stationary_distribution(build_chain(wg)));
    const std::uint64_t trials = 20000;
    auto freq = empirical_chamber_frequencies(aw, 400, trials, 20260823, 4);

    bool bands_ok = true;
    double worst_sigmas = 0;
    for (Index w = 0; w < wg->size(); ++w) {
        double p = to_double(chambers.values[w]);
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
        double dev = std::abs(freq.frequency[w] - p) / sigma;
        worst_sigmas = std::max(worst_sigmas, dev);
        if (dev > 3) bands_ok = false;
    }

    auto zeta = stationary_distribution(build_chain(wg));
    auto dir = psi(*wg, zeta);
    auto emp = empirical_direction(aw, 400, trials, 20260823, 4);
    double dot = 0, nn = 0, ee = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RationalVec ei(2), ej(2);
            ei[i] = 1;
            ej[j] = 1;
            double g = to_double(aw.roots().coroot_inner(ei, ej));
            dot += dir.unit[i] * emp[j] * g;
            nn += dir.unit[i] * dir.unit[j] * g;
            ee += emp[i] * emp[j] * g;
        }
    double angle = std::acos(std::clamp(dot / std::sqrt(nn * ee), -1.0, 1.0)) * 180.0 / M_PI;
    bool angle_ok = angle < 2.0;

    std::ostringstream os;
    os << "20000 walks of 400 steps: chamber frequencies inside 3-sigma bands (worst "
       << std::round(worst_sigmas * 100) / 100 << " sigma), direction " << std::round(angle * 1000) / 1000
       << " degrees from the exact limit (bound 2)";
    c.report(bands_ok && angle_ok && freq.undecided < trials / 100, os.str());
}

// ---------------------------------------------------------------- criterion 8

// Independent certificate that a partition has no removable ribbon of size n.
bool hooks_avoid_multiples(const std::vector<long long>& rows, int n) {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (long long col = 0; col < rows[r]; ++col) {
            long long below = 0;
            for (std::size_t q = r + 1; q < rows.size(); ++q)
                if (rows[q] > col) ++below;
            if (((rows[r] - 1 - col) + below + 1) % n == 0) return false;
        }
    return true;
}

double crossing_abscissa(const BoundaryProfile& profile, double t) {
    const auto& v = profile.vertices;
    auto level = [](const std::array<double, 2>& p) { return p[0] + p[1]; };
    if (t <= level(v.front())) return 2 * v.front()[0] - t;
    if (t >= level(v.back())) return t - 2 * v.back()[1];
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        double t0 = level(v[k]), t1 = level(v[k + 1]);
        if (t0 <= t && t <= t1) {
            double w = t1 == t0 ? 0.0 : (t - t0) / (t1 - t0);
            return (1 - w) * (v[k][0] - v[k][1]) + w * (v[k + 1][0] - v[k + 1][1]);
        }
    }
    return 0;
}

void criterion_8() {
    Criterion c(8);
    bool ok = true;
    std::ostringstream os;

    // (a) bijection round-trip for every 3-core and 4-core of degree <= 10,
    // enumerated on the partition side by generator growth
    long long cores_checked = 0;
    for (int n : {3, 4}) {
        auto aw = affine_of("A" + std::to_string(n - 1));
        std::set<std::vector<long long>> layer{{}};
        std::set<std::vector<long long>> all_rows{{}};
        for (int depth = 1; depth <= 10; ++depth) {
            std::set<std::vector<long long>> next;
            for (const auto& rows : layer)
                for (int i = 0; i < n; ++i) {
                    auto [grown, grew] = apply_generator(CorePartition{rows, n}, i);
                    if (grew) next.insert(grown.rows);
                }
            for (const auto& rows : next)
                if (!all_rows.insert(rows).second) ok = false;  // layers must not overlap
            layer = std::move(next);
        }
        for (const auto& rows : all_rows) {
            CorePartition core{rows, n};
            if (!hooks_avoid_multiples(rows, n)) ok = false;
            AffineElement x = affine_from_core(aw, core);
            if (aw.length(x) != core_degree(core)) ok = false;
            if (core_from_affine(aw, x) != core) ok = false;
            ++cores_checked;
        }
    }

    // (b) coarse slopes of the core of t_mu against the closed formula, for
    // 100 random antidominant mu across moduli 2..6, measured away from the
    // window edges
    int slope_windows = 0;
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 5;
        std::vector<long long> base(n, 0);
        for (int i = 1; i < n; ++i)
            base[i] = base[i - 1] + static_cast<long long>(rng() % 5);
        long long total = 0;
        for (long long b : base) total += b;
        IntVec mu(n);
        for (int i = 0; i < n; ++i) mu[i] = n * base[i] - total;
        auto aw = affine_of("A" + std::to_string(n - 1));
        CorePartition core =
            core_from_affine(aw, aw.grassmannian_from_coweight(standard_to_coroot(mu)));
        BoundaryProfile profile = boundary_profile(core, 1);
        for (const SlopeSegment& seg : slope_profile(mu, n)) {
            // measure two units inside the window, over a whole number of
            // staircase periods (one period spans n diagonal units) so the
            // two-point slope is exact rather than phase-dependent
            long long span = (seg.diag_hi - 2) - (seg.diag_lo + 2);
            if (span < n) continue;
            double t1 = seg.diag_lo + 2;
            double t2 = t1 + static_cast<double>((span / n) * n);
            double xi1 = crossing_abscissa(profile, t1);
            double xi2 = crossing_abscissa(profile, t2);
            double slope = ((t2 - xi2) - (t1 - xi1)) / ((t2 + xi2) - (t1 + xi1));
            if (std::abs(slope - to_double(seg.slope)) > 1e-9) ok = false;
            ++slope_windows;
        }
    }

    // (c) scaled boundaries of degree-5000 random 4-cores against the limit
    // curve: at most 10 of 200 seeded trials may exceed 0.05
    BoundaryProfile limit = limit_curve(4).profile;
    int within = 0;
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        CorePartition core = random_core(4, 5000, 600000 + trial);
        double d = profile_distance(boundary_profile(core, 5000), limit);
        worst = std::max(worst, d);
        if (d < 0.05) ++within;
    }
    if (within < 190) ok = false;

    os << cores_checked << " cores of degree <= 10 round-trip; " << slope_windows
       << " slope windows match the formula; " << within
       << "/200 scaled degree-5000 boundaries within 0.05 of the limit curve (worst "
       << std::round(worst * 10000) / 10000 << ")";
    c.report(ok && cores_checked > 100 && slope_windows >= 100, os.str());
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
    Criterion c(9);
    auto a2 = conjecture_probes(RootSystem::build("A2"));
    auto a4 = conjecture_probes(RootSystem::build("A4"));

    bool complete = !a2.type_name.empty() && !a4.type_name.empty() &&
                    a2.ratios_over_longest.size() == 6 && a4.ratios_over_longest.size() == 120;
    c.report(complete, "observational probes completed for A2 and A4; values below are "
                       "reported, not asserted");
    std::printf("    A2: zeta(id)/zeta(w0) = %s, conjectured binomial product = %s, equal: %s\n",
                to_fraction_string(a2.identity_over_longest).c_str(),
                a2.binomial_product.get_str().c_str(),
                a2.identity_ratio_matches_product ? "yes" : "no");
    std::printf("    A4: chamber-probability spread max/min = %s, equals 96: %s\n",
                to_fraction_string(a4.uniform_spread).c_str(),
                a4.uniform_spread_is_96 ? "yes" : "no");
    if (a4.pathcount_computed)
        std::printf("    A4: spread under the word-count measure = %.4f, near 96: %s\n",
                    a4.pathcount_spread, a4.pathcount_spread_near_96 ? "yes" : "no");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
