#include "coxwalk/shi.hpp"

#include "coxwalk/errors.hpp"
#include "coxwalk/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace coxwalk {

namespace {

void check_rank(const AffineWeyl& aw, const char* what) {
    if (aw.rank() > 3)
        throw RankTooLarge(std::string(what) + " guarded to rank <= 3");
}

long long expected_region_count(const RootSystem& rs) {
    long long h = rs.coxeter_number();
    long long count = 1;
    for (int i = 0; i < rs.rank(); ++i) count *= h + 1;
    return count;
}

// Expected number of visits to every vertex before absorption, processing
// regions in order of increasing separation: a region change crosses exactly
// one arrangement hyperplane, so cross-region edges increase separation by
// one and the region blocks form a directed acyclic chain.
struct VisitAnalysis {
    std::vector<Rational> visits;             // per vertex; entry prob for absorbing ones
    std::map<ShiRegion, Rational> region_hit; // probability of ever entering
};

VisitAnalysis analyze_visits(const GammaGraph& graph) {
    const std::size_t n = graph.vertices.size();
    std::map<ShiRegion, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t v = 0; v < n; ++v)
        blocks[graph.vertices[v].region].push_back(v);

    std::vector<const std::pair<const ShiRegion, std::vector<std::uint32_t>>*> order;
    for (const auto& entry : blocks) order.push_back(&entry);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return a->first.separation() < b->first.separation();
    });

    VisitAnalysis out;
    out.visits.assign(n, Rational(0));
    std::vector<Rational> inflow(n, Rational(0));
    inflow[graph.source] = 1;

    for (const auto* entry : order) {
        const ShiRegion& region = entry->first;
        const std::vector<std::uint32_t>& members = entry->second;
        const std::size_t m = members.size();

        Rational hit(0);
        for (std::uint32_t v : members) hit += inflow[v];
        out.region_hit[region] = hit;

        if (region.is_chamber_translate()) {
            // Absorbing: the walk never leaves, so the entry probability is
            // all we need and within-region edges are not propagated.
            for (std::uint32_t v : members) out.visits[v] = inflow[v];
            continue;
        }

        std::map<std::uint32_t, std::size_t> local;
        for (std::size_t i = 0; i < m; ++i) local[members[i]] = i;

        // visits^T (I - M_RR) = inflow^T over the block.
        RationalMatrix system(m, m);
        for (std::size_t i = 0; i < m; ++i) system.at(i, i) = 1;
        RationalVec rhs(m);
        for (std::size_t j = 0; j < m; ++j) {
            rhs[j] = inflow[members[j]];
            for (const auto& [target, p] : graph.edges[members[j]]) {
                auto it = local.find(target);
                if (it != local.end()) system.at(it->second, j) -= p;
            }
        }
        RationalVec solved = system.solve(rhs);
        for (std::size_t i = 0; i < m; ++i) out.visits[members[i]] = solved[i];

        for (std::size_t i = 0; i < m; ++i)
            for (const auto& [target, p] : graph.edges[members[i]])
                if (!local.count(target)) inflow[target] += out.visits[members[i]] * p;
    }

    Rational absorbed(0);
    for (std::uint32_t v : graph.absorbing) absorbed += out.visits[v];
    if (absorbed != 1) throw Error("absorption probabilities do not sum to 1");
    return out;
}

}  // namespace

long long ShiRegion::separation() const {
    long long total = 0;
    for (std::int8_t s : sign) total += s != 0;
    return total;
}

bool ShiRegion::is_chamber_translate() const {
    return std::all_of(sign.begin(), sign.end(), [](std::int8_t s) { return s != 0; });
}

ShiRegion region_of(const AffineWeyl& aw, const AffineElement& x) {
    std::vector<long long> address = aw.alcove_address(x);
    ShiRegion region;
    region.sign.reserve(address.size());
    for (long long k : address)
        region.sign.push_back(static_cast<std::int8_t>(k > 0 ? 1 : (k < 0 ? -1 : 0)));
    return region;
}

Index chamber_translate_label(const ShiRegion& region, const WeylGroup& wg) {
    if (!region.is_chamber_translate())
        throw Error("region is not a chamber translate");
    const std::size_t words = (region.sign.size() + 63) / 64;
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t k = 0; k < region.sign.size(); ++k)
        if (region.sign[k] < 0) bits[k / 64] |= 1ull << (k % 64);
    auto found = wg.element_with_inversions(bits);
    if (!found)
        throw Error("negative support of region is not an inversion set");
    return *found;
}

std::vector<ShiRegion> enumerate_regions(const AffineWeyl& aw, int initial_length_bound) {
    check_rank(aw, "region enumeration");
    const RootSystem& rs = aw.roots();
    const long long expected = expected_region_count(rs);
    const long long start =
        initial_length_bound > 0 ? initial_length_bound : rs.coxeter_number();
    const long long cap = 8 * rs.coxeter_number() + 8;

    std::set<ShiRegion> regions;
    std::set<AffineElement> shell{aw.identity_element()};
    regions.insert(region_of(aw, aw.identity_element()));

    long long unchanged = 0;
    for (long long level = 1; level <= cap; ++level) {
        std::set<AffineElement> next;
        for (const AffineElement& x : shell)
            for (int i : aw.up_moves(x)) next.insert(aw.left_mul_gen(i, x));
        const std::size_t before = regions.size();
        for (const AffineElement& x : next) regions.insert(region_of(aw, x));
        shell.swap(next);

        if (level < start) continue;
        unchanged = regions.size() == before ? unchanged + 1 : 0;
        if (unchanged >= 2 && static_cast<long long>(regions.size()) == expected)
            return std::vector<ShiRegion>(regions.begin(), regions.end());
    }
    throw NonStabilizing("region count did not stabilize at " + std::to_string(expected) +
                         " within length " + std::to_string(cap));
}

std::size_t GammaGraph::vertex_index(const GammaVertex& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return i;
    throw NoSuchEdge("vertex not present in graph");
}

GammaGraph build_gamma(const AffineWeyl& aw) {
    check_rank(aw, "projected graph construction");

    GammaGraph graph;
    graph.group = aw.weyl_ptr();

    std::map<GammaVertex, std::uint32_t> index;
    std::vector<AffineElement> second;   // optional second witness per vertex
    std::vector<char> has_second;

    auto intern = [&](const AffineElement& x) {
        GammaVertex v{region_of(aw, x), x.w};
        auto it = index.find(v);
        if (it != index.end()) {
            std::uint32_t id = it->second;
            if (!has_second[id] && !(graph.witness[id] == x)) {
                second[id] = x;
                has_second[id] = 1;
            }
            return id;
        }
        std::uint32_t id = static_cast<std::uint32_t>(graph.vertices.size());
        index.emplace(v, id);
        graph.vertices.push_back(std::move(v));
        graph.witness.push_back(x);
        second.emplace_back();
        has_second.push_back(0);
        graph.edges.emplace_back();
        return id;
    };

    // Edge profile of one witness alcove, as target-vertex -> probability.
    auto profile_of = [&](const AffineElement& x, bool allow_new) {
        std::map<std::uint32_t, Rational> profile;
        std::vector<int> moves = aw.up_moves(x);
        Rational share = make_rational(1, static_cast<long>(moves.size()));
        for (int i : moves) {
            AffineElement y = aw.left_mul_gen(i, x);
            GammaVertex v{region_of(aw, y), y.w};
            std::uint32_t id;
            if (allow_new) {
                id = intern(y);
            } else {
                auto it = index.find(v);
                if (it == index.end())
                    throw ProfileMismatch("second witness reaches a vertex the first did not");
                id = it->second;
            }
            profile[id] += share;
        }
        return profile;
    };

    graph.source = intern(aw.identity_element());
    std::queue<std::uint32_t> frontier;
    frontier.push(graph.source);
    std::set<std::uint32_t> expanded;
    while (!frontier.empty()) {
        std::uint32_t v = frontier.front();
        frontier.pop();
        if (!expanded.insert(v).second) continue;
        // Copy: intern() may grow the witness vector and invalidate references.
        const AffineElement witness = graph.witness[v];
        std::map<std::uint32_t, Rational> profile = profile_of(witness, true);
        graph.edges[v].assign(profile.begin(), profile.end());
        for (const auto& [target, p] : graph.edges[v]) {
            const long long step = graph.vertices[target].region.separation() -
                                   graph.vertices[v].region.separation();
            if (!(graph.vertices[target].region == graph.vertices[v].region) && step != 1)
                throw Error("separation did not increase by one across a region change");
            if (!expanded.count(target)) frontier.push(target);
        }
    }

    // Re-derive each edge profile from an independent witness where one
    // exists; the projection is only well defined if they agree.
    for (std::uint32_t v = 0; v < graph.vertices.size(); ++v) {
        if (!has_second[v]) continue;
        std::map<std::uint32_t, Rational> check = profile_of(second[v], false);
        std::map<std::uint32_t, Rational> stored(graph.edges[v].begin(), graph.edges[v].end());
        if (check != stored)
            throw ProfileMismatch("edge profile depends on the witness alcove");
    }

    for (std::uint32_t v = 0; v < graph.vertices.size(); ++v)
        if (graph.vertices[v].region.is_chamber_translate()) graph.absorbing.push_back(v);
    return graph;
}

Rational absorption_probability(const GammaGraph& graph, Index w) {
    if (w >= graph.group->size()) throw Error("chamber label out of range");
    VisitAnalysis analysis = analyze_visits(graph);
    Rational total(0);
    for (std::uint32_t v : graph.absorbing)
        if (chamber_translate_label(graph.vertices[v].region, *graph.group) == w)
            total += analysis.visits[v];
    return total;
}

std::map<ShiRegion, Rational> region_hitting_probabilities(const GammaGraph& graph) {
    return analyze_visits(graph).region_hit;
}

}  // namespace coxwalk
