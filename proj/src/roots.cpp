#include "coxwalk/roots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "coxwalk/errors.hpp"
#include "coxwalk/linalg.hpp"

namespace coxwalk {

namespace {

constexpr unsigned long long kSaturate = 1'000'000'000'000'000ULL;

unsigned long long mul_sat(unsigned long long a, unsigned long long b) {
    if (b != 0 && a > kSaturate / b) return kSaturate;
    return a * b;
}

unsigned long long factorial_sat(int n) {
    unsigned long long v = 1;
    for (int k = 2; k <= n; ++k) v = mul_sat(v, static_cast<unsigned long long>(k));
    return v;
}

unsigned long long pow2_sat(int n) {
    unsigned long long v = 1;
    for (int k = 0; k < n; ++k) v = mul_sat(v, 2);
    return v;
}

std::size_t expected_positive_count(TypeTag t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    throw Error("unreachable family");
}

unsigned long long weyl_order_of(TypeTag t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return factorial_sat(n + 1);
        case Family::B:
        case Family::C: return mul_sat(pow2_sat(n), factorial_sat(n));
        case Family::D: return mul_sat(pow2_sat(n - 1), factorial_sat(n));
        case Family::E: return n == 6 ? 51840ULL : (n == 7 ? 2903040ULL : 696729600ULL);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    throw Error("unreachable family");
}

}  // namespace

std::string TypeTag::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

TypeTag parse_type(const std::string& tag) {
    std::size_t pos = 0;
    while (pos < tag.size() && std::isspace(static_cast<unsigned char>(tag[pos]))) ++pos;
    if (pos == tag.size()) throw UnsupportedType("empty type tag");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[pos])));
    ++pos;
    if (pos < tag.size() && (tag[pos] == '_' || tag[pos] == '-')) ++pos;
    std::size_t end = pos;
    while (end < tag.size() && std::isdigit(static_cast<unsigned char>(tag[end]))) ++end;
    std::size_t tail = end;
    while (tail < tag.size() && std::isspace(static_cast<unsigned char>(tag[tail]))) ++tail;
    if (pos == end || tail != tag.size())
        throw UnsupportedType("cannot parse type tag '" + tag + "'");
    if (end - pos > 4) throw UnsupportedType("rank out of range in '" + tag + "'");
    const int rank = std::stoi(tag.substr(pos, end - pos));
    if (fam < 'A' || fam > 'G')
        throw UnsupportedType("unknown family '" + std::string(1, fam) + "'");
    TypeTag t{static_cast<Family>(fam), rank};

    const bool ok = (t.family == Family::A && rank >= 1) ||
                    (t.family == Family::B && rank >= 2) ||
                    (t.family == Family::C && rank >= 3) ||
                    (t.family == Family::D && rank >= 4) ||
                    (t.family == Family::E && (rank == 6 || rank == 7 || rank == 8)) ||
                    (t.family == Family::F && rank == 4) ||
                    (t.family == Family::G && rank == 2);
    if (!ok) throw UnsupportedType("no irreducible system of type " + t.name());
    return t;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& tag) {
    return build(parse_type(tag));
}

std::shared_ptr<const RootSystem> RootSystem::build(TypeTag tag) {
    const unsigned long long order = weyl_order_of(tag);
    if (order > kWeylOrderCap)
        throw RankTooLarge("Weyl group of " + tag.name() + " has order " +
                           (order >= kSaturate ? std::string(">1e15")
                                               : std::to_string(order)) +
                           ", above the cap of " + std::to_string(kWeylOrderCap));

    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->type_ = tag;
    const int n = tag.rank;
    rs->rank_ = n;
    rs->weyl_order_ = order;

    // Cartan matrix, cartan_[i*n+j] = <alpha_i^vee, alpha_j> (0-based here)
    auto& C = rs->cartan_;
    C.assign(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](int i, int j, long long v) { C[static_cast<std::size_t>(i) * n + j] = v; };
    auto bond = [&](int i, int j) { set(i, j, -1); set(j, i, -1); };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    switch (tag.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:  // alpha_n short
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            set(n - 2, n - 1, -1);
            set(n - 1, n - 2, -2);
            break;
        case Family::C:  // alpha_n long
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            set(n - 2, n - 1, -2);
            set(n - 1, n - 2, -1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(0, 1);
            set(1, 2, -1);
            set(2, 1, -2);
            bond(2, 3);
            break;
        case Family::G:  // alpha_1 short
            set(0, 1, -3);
            set(1, 0, -1);
            break;
    }

    // Positive roots with their coroots, by reflection closure from the
    // simple pairs.  A vector is a positive root iff all coordinates are >= 0.
    std::map<IntVec, IntVec> closure;  // root coords -> coroot coords
    std::vector<IntVec> frontier;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        closure.emplace(e, e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& root : frontier) {
            const IntVec& coroot = closure.at(root);
            for (int i = 1; i <= n; ++i) {
                IntVec r2 = rs->reflect_root(i, root);
                if (std::any_of(r2.begin(), r2.end(), [](long long c) { return c < 0; }))
                    continue;
                if (closure.count(r2)) continue;
                closure.emplace(r2, rs->reflect_coroot(i, coroot));
                next.push_back(std::move(r2));
            }
        }
        frontier = std::move(next);
    }
    if (closure.size() != expected_positive_count(tag))
        throw Error("root closure for " + tag.name() + " produced " +
                    std::to_string(closure.size()) + " roots, expected " +
                    std::to_string(expected_positive_count(tag)));

    std::vector<std::pair<IntVec, IntVec>> pairs(closure.begin(), closure.end());
    auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        const long long ha = height(a.first), hb = height(b.first);
        if (ha != hb) return ha < hb;
        return a.first < b.first;
    });
    for (auto& [root, coroot] : pairs) {
        rs->positive_roots_.push_back(root);
        rs->positive_coroots_.push_back(coroot);
    }

    rs->highest_root_ = rs->positive_roots_.back();
    rs->highest_coroot_ = rs->positive_coroots_.back();
    if (pairs.size() >= 2 &&
        height(pairs[pairs.size() - 2].first) == height(rs->highest_root_))
        throw Error("highest root of " + tag.name() + " is not unique");

    rs->marks_.assign(rs->highest_root_.begin(), rs->highest_root_.end());
    rs->comarks_.assign(rs->highest_coroot_.begin(), rs->highest_coroot_.end());
    rs->coxeter_number_ =
        1 + std::accumulate(rs->marks_.begin(), rs->marks_.end(), 0LL);
    rs->dual_coxeter_number_ =
        1 + std::accumulate(rs->comarks_.begin(), rs->comarks_.end(), 0LL);

    rs->two_rho_.assign(static_cast<std::size_t>(n), 0);
    rs->two_rho_coroot_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < rs->positive_roots_.size(); ++k)
        for (int i = 0; i < n; ++i) {
            rs->two_rho_[static_cast<std::size_t>(i)] +=
                rs->positive_roots_[k][static_cast<std::size_t>(i)];
            rs->two_rho_coroot_[static_cast<std::size_t>(i)] +=
                rs->positive_coroots_[k][static_cast<std::size_t>(i)];
        }

    // Symmetrizer d_i = (alpha_i, alpha_i)/2, long roots at 1: propagate
    // d_j * C[j][i] = d_i * C[i][j] over the Dynkin graph, then rescale.
    auto& d = rs->symmetrizer_;
    d.assign(static_cast<std::size_t>(n), Rational(0));
    d[0] = 1;
    {
        std::vector<int> todo{0};
        while (!todo.empty()) {
            const int i = todo.back();
            todo.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || rs->cartan(i + 1, j + 1) == 0 || d[static_cast<std::size_t>(j)] != 0)
                    continue;
                d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] *
                                                 rat_of(rs->cartan(i + 1, j + 1)) /
                                                 rat_of(rs->cartan(j + 1, i + 1));
                todo.push_back(j);
            }
        }
    }
    Rational dmax = *std::max_element(d.begin(), d.end());
    for (auto& di : d) di /= dmax;

    rs->coroot_form_.assign(static_cast<std::size_t>(n),
                            RationalVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs->coroot_form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rat_of(rs->cartan(i + 1, j + 1)) / d[static_cast<std::size_t>(j)];

    // Fundamental coweights: row i of the inverse Cartan matrix.
    RationalMatrix cm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                rat_of(rs->cartan(i + 1, j + 1));
    RationalMatrix cinv = cm.inverse();
    rs->coweights_.assign(static_cast<std::size_t>(n),
                          RationalVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs->coweights_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                cinv.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));

    rs->alcove_center_.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs->alcove_center_[static_cast<std::size_t>(j)] +=
                rs->coweights_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
                rat_of(rs->marks_[static_cast<std::size_t>(i)]);
    for (auto& c : rs->alcove_center_) c /= Rational(n + 1);

    return rs;
}

IntVec RootSystem::simple_root(int i) const {
    IntVec e(static_cast<std::size_t>(rank_), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

IntVec RootSystem::simple_coroot(int i) const { return simple_root(i); }

long long RootSystem::pair(const IntVec& coroot_vec, const IntVec& root_vec) const {
    if (coroot_vec.size() != static_cast<std::size_t>(rank_) ||
        root_vec.size() != static_cast<std::size_t>(rank_))
        throw DimensionMismatch("pairing expects vectors of length rank");
    long long acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            acc += coroot_vec[static_cast<std::size_t>(i)] * cartan(i + 1, j + 1) *
                   root_vec[static_cast<std::size_t>(j)];
    return acc;
}

Rational RootSystem::pair(const RationalVec& coroot_vec, const IntVec& root_vec) const {
    if (coroot_vec.size() != static_cast<std::size_t>(rank_) ||
        root_vec.size() != static_cast<std::size_t>(rank_))
        throw DimensionMismatch("pairing expects vectors of length rank");
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            acc += coroot_vec[static_cast<std::size_t>(i)] *
                   rat_of(cartan(i + 1, j + 1) * root_vec[static_cast<std::size_t>(j)]);
    return acc;
}

long long RootSystem::pair_with_simple_root(const IntVec& coroot_vec, int i) const {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        acc += coroot_vec[static_cast<std::size_t>(j)] * cartan(j + 1, i);
    return acc;
}

long long RootSystem::pair_of_simple_coroot(int i, const IntVec& root_vec) const {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        acc += cartan(i, j + 1) * root_vec[static_cast<std::size_t>(j)];
    return acc;
}

Rational RootSystem::coroot_norm2(const IntVec& v) const {
    return coroot_norm2(to_rational_vec(v));
}

Rational RootSystem::coroot_norm2(const RationalVec& v) const { return coroot_inner(v, v); }

Rational RootSystem::coroot_inner(const RationalVec& a, const RationalVec& b) const {
    if (a.size() != static_cast<std::size_t>(rank_) || b.size() != static_cast<std::size_t>(rank_))
        throw DimensionMismatch("inner product expects vectors of length rank");
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            acc += a[static_cast<std::size_t>(i)] *
                   coroot_form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   b[static_cast<std::size_t>(j)];
    return acc;
}

IntVec RootSystem::reflect_root(int i, const IntVec& root_vec) const {
    IntVec out = root_vec;
    out[static_cast<std::size_t>(i - 1)] -= pair_of_simple_coroot(i, root_vec);
    return out;
}

IntVec RootSystem::reflect_coroot(int i, const IntVec& coroot_vec) const {
    IntVec out = coroot_vec;
    out[static_cast<std::size_t>(i - 1)] -= pair_with_simple_root(coroot_vec, i);
    return out;
}

RationalVec RootSystem::reflect_coroot(int i, const RationalVec& coroot_vec) const {
    Rational p = 0;
    for (int j = 0; j < rank_; ++j)
        p += coroot_vec[static_cast<std::size_t>(j)] * rat_of(cartan(j + 1, i));
    RationalVec out = coroot_vec;
    out[static_cast<std::size_t>(i - 1)] -= p;
    return out;
}

int RootSystem::root_sign(const IntVec& root_vec) const {
    bool pos = false, neg = false;
    for (long long c : root_vec) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) throw Error("mixed-sign vector is not a root");
    if (!pos && !neg) throw Error("zero vector is not a root");
    return pos ? 1 : -1;
}

std::optional<std::size_t> RootSystem::positive_root_index(const IntVec& root_vec) const {
    auto it = std::lower_bound(
        positive_roots_.begin(), positive_roots_.end(), root_vec,
        [](const IntVec& a, const IntVec& b) {
            const long long ha = std::accumulate(a.begin(), a.end(), 0LL);
            const long long hb = std::accumulate(b.begin(), b.end(), 0LL);
            if (ha != hb) return ha < hb;
            return a < b;
        });
    if (it == positive_roots_.end() || *it != root_vec) return std::nullopt;
    return static_cast<std::size_t>(it - positive_roots_.begin());
}

bool RootSystem::is_antidominant(const IntVec& coroot_vec) const {
    for (int i = 1; i <= rank_; ++i)
        if (pair_with_simple_root(coroot_vec, i) > 0) return false;
    return true;
}

bool RootSystem::is_regular(const IntVec& coroot_vec) const {
    for (const auto& root : positive_roots_)
        if (pair(coroot_vec, root) == 0) return false;
    return true;
}

}  // namespace coxwalk
