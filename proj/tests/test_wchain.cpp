#include <doctest.h>

#include <bit>
#include <cmath>
#include <numeric>

#include "coxwalk/wchain.hpp"

using namespace coxwalk;

namespace {

std::shared_ptr<const WeylGroup> group_of(const char* tag) {
    return WeylGroup::build(RootSystem::build(tag));
}

// zeta P = zeta, checked entry by entry in exact arithmetic
void check_fixed_point(const TransitionMatrix& chain, const Distribution& zeta) {
    const Index n = static_cast<Index>(chain.size());
    RationalVec image(n);
    for (Index u = 0; u < n; ++u) {
        image[u] += zeta.values[u] * chain.diagonal(u);
        for (const auto& [v, p] : chain.row(u)) image[v] += zeta.values[u] * p;
    }
    for (Index v = 0; v < n; ++v) CHECK(image[v] == zeta.values[v]);
}

}  // namespace

TEST_SUITE("wchain") {

TEST_CASE("weight scheme names round trip") {
    for (WeightScheme s : {WeightScheme::uniform, WeightScheme::marks, WeightScheme::comarks})
        CHECK(parse_weight_scheme(weight_scheme_name(s)) == s);
    CHECK_THROWS_AS(parse_weight_scheme("bogus"), Error);
}

TEST_CASE("rows are stochastic with the leftover weight on the diagonal") {
    for (const char* tag : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(tag);
        auto wg = group_of(tag);
        auto chain = build_chain(wg);
        const Rational gen_weight = make_rational(1, wg->rank() + 1);
        for (Index u = 0; u < wg->size(); ++u) {
            Rational total = chain.diagonal(u);
            for (const auto& [v, p] : chain.row(u)) {
                CHECK(p > 0);
                CHECK(v != u);
                total += p;
                CHECK(chain.prob(u, v) == p);
            }
            CHECK(total == 1);
            // moves: one per left descent, plus the theta edge on an ascent
            int moves = std::popcount(wg->descent_mask(u)) + (wg->theta_ascent(u) ? 1 : 0);
            CHECK(chain.row(u).size() == static_cast<std::size_t>(moves));
            CHECK(chain.diagonal(u) ==
                  make_rational(wg->rank() + 1 - moves, wg->rank() + 1));
            for (const auto& [v, p] : chain.row(u)) CHECK(p == gen_weight);
        }
        CHECK(chain.prob(0, 0) == chain.diagonal(0));
    }
}

TEST_CASE("edges follow descents and the theta ascent") {
    auto wg = group_of("B2");
    auto chain = build_chain(wg);
    for (Index u = 0; u < wg->size(); ++u) {
        for (const auto& [v, p] : chain.row(u)) {
            bool is_descent_move = false;
            for (int i = 1; i <= wg->rank(); ++i)
                if (wg->is_left_descent(i, u) && wg->left_mul(i, u) == v)
                    is_descent_move = true;
            bool is_theta_move = wg->theta_ascent(u) && wg->theta_left_mul(u) == v;
            CHECK((is_descent_move || is_theta_move));
        }
    }
}

TEST_CASE("rank two stationary vector, frozen") {
    auto wg = group_of("A2");
    auto zeta = stationary_distribution(build_chain(wg));
    // group order: id, s1, s2, s1s2, s2s1, w0
    const int numerators[] = {2, 1, 1, 2, 2, 1};
    REQUIRE(zeta.values.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(zeta.values[i] == make_rational(numerators[i], 9));
}

TEST_CASE("stationary vectors are exact fixed points") {
    for (const char* tag : {"A2", "B2", "G2", "A3", "B4"}) {
        CAPTURE(tag);
        auto chain = build_chain(group_of(tag));
        auto zeta = stationary_distribution(chain);
        Rational total = std::accumulate(zeta.values.begin(), zeta.values.end(), Rational(0));
        CHECK(total == 1);
        for (const auto& v : zeta.values) CHECK(v > 0);
        check_fixed_point(chain, zeta);
    }
}

TEST_CASE("non-uniform weights still give a certified fixed point") {
    for (WeightScheme scheme : {WeightScheme::marks, WeightScheme::comarks}) {
        auto chain = build_chain(group_of("B2"), scheme);
        auto zeta = stationary_distribution(chain);
        Rational total = std::accumulate(zeta.values.begin(), zeta.values.end(), Rational(0));
        CHECK(total == 1);
        check_fixed_point(chain, zeta);
    }
    // all marks of the rank-two simply-laced system equal one, so the marks
    // chain coincides with the uniform one
    auto wg = group_of("A2");
    auto uniform = stationary_distribution(build_chain(wg, WeightScheme::uniform));
    auto marks = stationary_distribution(build_chain(wg, WeightScheme::marks));
    CHECK(uniform.values == marks.values);
    // B2 has a mark of two, and the stationary vector genuinely moves
    auto wgb = group_of("B2");
    CHECK(stationary_distribution(build_chain(wgb, WeightScheme::uniform)).values !=
          stationary_distribution(build_chain(wgb, WeightScheme::marks)).values);
}

TEST_CASE("chamber probabilities reverse the stationary vector through w0") {
    auto wg = group_of("A2");
    auto zeta = stationary_distribution(build_chain(wg));
    auto chambers = chamber_probabilities(zeta);
    Rational total = 0;
    for (Index w = 0; w < wg->size(); ++w) {
        CHECK(chambers.values[w] ==
              zeta.values[wg->multiply(wg->inverse(w), wg->longest_element())]);
        total += chambers.values[w];
    }
    CHECK(total == 1);
    // the dominant chamber gets the minimum 1/9, the antidominant the max 2/9
    CHECK(chambers.values[wg->identity()] == make_rational(1, 9));
    CHECK(chambers.values[wg->longest_element()] == make_rational(2, 9));
}

TEST_CASE("limiting direction in rank two, frozen") {
    auto wg = group_of("A2");
    auto zeta = stationary_distribution(build_chain(wg));
    auto dir = psi(*wg, zeta);
    CHECK(dir.coords == IntVec{1, 1});
    // unit vector has norm one under the invariant form
    const auto& rs = wg->roots();
    double norm2 = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RationalVec ei(2), ej(2);
            ei[i] = 1;
            ej[j] = 1;
            norm2 += dir.unit[i] * dir.unit[j] * to_double(rs.coroot_inner(ei, ej));
        }
    CHECK(norm2 == doctest::Approx(1.0));
}

TEST_CASE("limiting direction is the stationary average of theta crossings") {
    // psi = sum over theta-ascent states of zeta(w) w^{-1}(theta^vee), up to
    // positive scaling; recomputed here independently.
    auto wg = group_of("B2");
    auto zeta = stationary_distribution(build_chain(wg));
    auto dir = psi(*wg, zeta);
    const auto& rs = wg->roots();
    RationalVec raw(2);
    for (Index w = 0; w < wg->size(); ++w) {
        if (!wg->theta_ascent(w)) continue;
        IntVec pull = wg->apply_to_coroot(wg->inverse(w), rs.highest_coroot());
        for (int j = 0; j < 2; ++j) raw[j] += zeta.values[w] * make_rational(pull[j]);
    }
    // proportional: raw x dir = 0 and same sign
    CHECK(raw[0] * make_rational(dir.coords[1]) == raw[1] * make_rational(dir.coords[0]));
    CHECK(raw[0] * make_rational(dir.coords[0]) > 0);
}

TEST_CASE("limiting direction is dominant and primitive") {
    for (const char* tag : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        CAPTURE(tag);
        auto rs = RootSystem::build(tag);
        auto dir = psi(rs);
        long long g = 0;
        for (long long c : dir.coords) {
            CHECK(c > 0);
            g = std::gcd(g, c);
        }
        CHECK(g == 1);
        for (int i = 1; i <= rs->rank(); ++i)
            CHECK(rs->pair_with_simple_root(dir.coords, i) > 0);
    }
}

TEST_CASE("type A directions are proportional to the dominant weight sum") {
    for (const char* tag : {"A2", "A3", "A4"}) {
        CAPTURE(tag);
        auto rs = RootSystem::build(tag);
        auto dir = psi(rs);
        const IntVec& rho = rs->two_rho_coroot();
        for (std::size_t i = 1; i < dir.coords.size(); ++i)
            CHECK(dir.coords[i] * rho[0] == dir.coords[0] * rho[i]);
    }
    // outside type A the proportionality genuinely fails
    auto b2 = psi(RootSystem::build("B2"));
    CHECK(b2.coords == IntVec{8, 5});
    const IntVec& rho_b2 = RootSystem::build("B2")->two_rho_coroot();
    CHECK(b2.coords[1] * rho_b2[0] != b2.coords[0] * rho_b2[1]);
}

TEST_CASE("radial speeds, frozen and scale invariant") {
    auto a2 = RootSystem::build("A2");
    auto s = radial_speed(*a2, DirectionVector{{1, 1}, {}});
    CHECK(s.squared == make_rational(1, 8));
    CHECK(s.value == doctest::Approx(std::sqrt(0.125)));
    CHECK(radial_speed(*a2, DirectionVector{{3, 3}, {}}).squared == make_rational(1, 8));

    auto a1 = RootSystem::build("A1");
    CHECK(radial_speed(*a1, DirectionVector{{1}, {}}).squared == make_rational(1, 2));

    auto b2 = RootSystem::build("B2");
    CHECK(radial_speed(*b2, DirectionVector{{8, 5}, {}}).squared == make_rational(17, 169));

    CHECK_THROWS_AS(radial_speed(*a2, DirectionVector{{0, 0}, {}}), ZeroDirection);
}

TEST_CASE("ergodic edge rates") {
    auto wg = group_of("A2");
    auto chain = build_chain(wg);
    auto zeta = stationary_distribution(chain);
    // the identity's only move is the theta edge to w0, at rate zeta(id)/3
    Index w0 = wg->longest_element();
    CHECK(ergodic_edge_rate(chain, zeta, 0, w0) == make_rational(2, 27));
    CHECK_THROWS_AS(ergodic_edge_rate(chain, zeta, 0, 0), NoSuchEdge);
    CHECK_THROWS_AS(ergodic_edge_rate(chain, zeta, 0, 1), NoSuchEdge);
    CHECK_THROWS_AS(ergodic_edge_rate(chain, zeta, 99, 0), NoSuchEdge);
}

TEST_CASE("solver bound: large groups are refused before solving") {
    auto wg = group_of("A7");  // order 40320, over the 4096 solver bound
    auto chain = build_chain(wg);
    CHECK_THROWS_AS(stationary_distribution(chain), StateSpaceTooLarge);
}

TEST_CASE("hand-built disconnected chain is rejected") {
    auto wg = group_of("A1");
    TransitionMatrix chain(wg, WeightScheme::uniform,
                           {{}, {}},
                           {make_rational(1), make_rational(1)});
    CHECK_THROWS_AS(stationary_distribution(chain), NotIrreducible);
}

TEST_CASE("sparse chain export matches the rows") {
    auto chain = build_chain(group_of("B2"));
    auto sparse = chain.to_sparse_chain();
    REQUIRE(sparse.n == chain.size());
    for (Index u = 0; u < chain.size(); ++u) {
        Rational total = 0;
        for (const auto& [v, p] : sparse.entries[u]) {
            total += p;
            CHECK(chain.prob(u, v) == p);
        }
        CHECK(total == 1);
    }
}

TEST_CASE("conjecture probes on the rank-two chain") {
    auto report = conjecture_probes(RootSystem::build("A2"));
    CHECK(report.type_name == "A2");
    CHECK(report.identity_over_longest == 2);
    CHECK(report.binomial_product == 9);
    CHECK_FALSE(report.identity_ratio_matches_product);
    CHECK(report.argmax_is_identity);
    CHECK(report.ratios_all_integral);
    CHECK(report.psi_parallel_rho_covector);
    CHECK(report.uniform_spread == 2);
    CHECK_FALSE(report.uniform_spread_is_96);
    CHECK(report.pathcount_computed);
    CHECK(report.ratios_over_longest.size() == 6);
}

TEST_CASE("conjecture probes outside type A report the failures") {
    auto report = conjecture_probes(RootSystem::build("B3"));
    CHECK(report.type_name == "B3");
    CHECK_FALSE(report.ratios_all_integral);
    CHECK_FALSE(report.argmax_is_identity);
    CHECK_FALSE(report.psi_parallel_rho_covector);
    CHECK(report.binomial_product == 0);
    CHECK(report.uniform_spread > 1);
}

}  // TEST_SUITE
