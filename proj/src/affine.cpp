#include "coxwalk/affine.hpp"

#include <algorithm>

#include "coxwalk/errors.hpp"

namespace coxwalk {

AffineWeyl::AffineWeyl(std::shared_ptr<const WeylGroup> wg) : wg_(std::move(wg)) {
    const RootSystem& rs = wg_->roots();
    const std::size_t npos = rs.positive_count();
    pair_table_.assign(npos, IntVec(static_cast<std::size_t>(rs.rank()), 0));
    for (std::size_t k = 0; k < npos; ++k)
        for (int i = 1; i <= rs.rank(); ++i)
            pair_table_[k][static_cast<std::size_t>(i - 1)] =
                rs.pair_of_simple_coroot(i, rs.positive_roots()[k]);
}

long long AffineWeyl::lambda_pair(const IntVec& lambda, std::size_t k) const {
    const IntVec& row = pair_table_[k];
    long long acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc += lambda[i] * row[i];
    return acc;
}

AffineElement AffineWeyl::identity_element() const {
    return AffineElement{0, IntVec(static_cast<std::size_t>(rank()), 0)};
}

AffineElement AffineWeyl::translation(const IntVec& lambda) const {
    if (lambda.size() != static_cast<std::size_t>(rank()))
        throw DimensionMismatch("translation vector length does not match rank");
    return AffineElement{0, lambda};
}

AffineElement AffineWeyl::left_mul_gen(int i, const AffineElement& x) const {
    if (i == 0) {
        // s_0 = r_theta t_{-theta^vee}
        AffineElement out;
        out.w = wg_->theta_left_mul(x.w);
        const IntVec shift = wg_->apply_to_coroot(wg_->inverse(x.w), roots().highest_coroot());
        out.lambda = x.lambda;
        for (std::size_t j = 0; j < out.lambda.size(); ++j) out.lambda[j] -= shift[j];
        return out;
    }
    if (i < 1 || i > rank()) throw Error("generator index out of range");
    return AffineElement{wg_->left_mul(i, x.w), x.lambda};
}

AffineElement AffineWeyl::multiply(const AffineElement& a, const AffineElement& b) const {
    // (u t_lambda)(v t_mu) = (u v) t_{v^{-1}(lambda) + mu}
    AffineElement out;
    out.w = wg_->multiply(a.w, b.w);
    out.lambda = wg_->apply_to_coroot(wg_->inverse(b.w), a.lambda);
    for (std::size_t j = 0; j < out.lambda.size(); ++j) out.lambda[j] += b.lambda[j];
    return out;
}

AffineElement AffineWeyl::inverse(const AffineElement& x) const {
    AffineElement out;
    out.w = wg_->inverse(x.w);
    out.lambda = wg_->apply_to_coroot(x.w, x.lambda);
    for (auto& c : out.lambda) c = -c;
    return out;
}

AffineElement AffineWeyl::from_word(const std::vector<int>& word) const {
    AffineElement x = identity_element();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mul_gen(*it, x);
    return x;
}

AffineRoot AffineWeyl::simple_affine_root(int i) const {
    if (i == 0) {
        IntVec a = roots().highest_root();
        for (auto& c : a) c = -c;
        return AffineRoot{std::move(a), 1};
    }
    if (i < 1 || i > rank()) throw Error("generator index out of range");
    return AffineRoot{roots().simple_root(i), 0};
}

bool AffineWeyl::is_positive(const AffineRoot& r) const {
    const int s = roots().root_sign(r.alpha);
    return s > 0 ? r.level >= 0 : r.level >= 1;
}

AffineRoot AffineWeyl::act(const AffineElement& x, const AffineRoot& r) const {
    // (w t_lambda)(alpha + n delta) = w(alpha) + (n - <lambda, alpha>) delta
    AffineRoot out;
    out.level = r.level - roots().pair(x.lambda, r.alpha);
    out.alpha = wg_->apply_to_root(x.w, r.alpha);
    return out;
}

long long AffineWeyl::length(const AffineElement& x) const {
    long long total = 0;
    const std::size_t npos = roots().positive_count();
    for (std::size_t k = 0; k < npos; ++k) {
        long long t = lambda_pair(x.lambda, k);
        if (wg_->inverts_positive_root(x.w, k)) t += 1;
        total += t < 0 ? -t : t;
    }
    return total;
}

bool AffineWeyl::is_up_move(int i, const AffineElement& x) const {
    // ell(s_i x) > ell(x)  iff  x^{-1}(alpha_i + chi(i==0) delta) is positive
    const Index winv = wg_->inverse(x.w);
    if (i == 0) {
        const IntVec gamma = wg_->apply_to_root(winv, roots().highest_root());
        const long long p = roots().pair(x.lambda, gamma);
        return roots().root_sign(gamma) < 0 ? p <= 1 : p <= 0;
    }
    if (i < 1 || i > rank()) throw Error("generator index out of range");
    const IntVec beta = wg_->apply_to_root(winv, roots().simple_root(i));
    const long long p = roots().pair(x.lambda, beta);
    return roots().root_sign(beta) > 0 ? p >= 0 : p >= 1;
}

std::vector<int> AffineWeyl::up_moves(const AffineElement& x) const {
    std::vector<int> out;
    for (int i = 0; i <= rank(); ++i)
        if (is_up_move(i, x)) out.push_back(i);
    return out;
}

bool AffineWeyl::is_affine_grassmannian(const AffineElement& x) const {
    if (!roots().is_antidominant(x.lambda)) return false;
    const std::size_t npos = roots().positive_count();
    for (std::size_t k = 0; k < npos; ++k)
        if (wg_->inverts_positive_root(x.w, k) && lambda_pair(x.lambda, k) >= 0)
            return false;
    return true;
}

std::vector<int> AffineWeyl::grassmannian_up_moves(const AffineElement& x) const {
    std::vector<int> out;
    for (int i = 0; i <= rank(); ++i)
        if (is_up_move(i, x) && is_affine_grassmannian(left_mul_gen(i, x))) out.push_back(i);
    return out;
}

IntVec AffineWeyl::grassmannian_coweight(const AffineElement& x) const {
    if (!is_affine_grassmannian(x))
        throw NotGrassmannian("element is not a minimal coset representative");
    return wg_->apply_to_coroot(x.w, x.lambda);
}

AffineElement AffineWeyl::grassmannian_from_coweight(const IntVec& mu) const {
    if (mu.size() != static_cast<std::size_t>(rank()))
        throw DimensionMismatch("coweight length does not match rank");
    auto [u, lambda] = wg_->fold_antidominant(mu);
    Index v = wg_->inverse(u);
    // shrink to the minimal-length representative: while some positive root
    // on a wall of lambda is inverted, cancel it with that wall reflection
    const std::size_t npos = roots().positive_count();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < npos; ++k) {
            if (lambda_pair(lambda, k) == 0 && wg_->inverts_positive_root(v, k)) {
                v = wg_->multiply(v, wg_->root_reflection(k));
                changed = true;
            }
        }
    }
    AffineElement x{v, lambda};
    if (!is_affine_grassmannian(x)) throw Error("coset representative reduction failed");
    return x;
}

std::optional<Index> AffineWeyl::chamber_of(const AffineElement& x) const {
    if (!roots().is_regular(x.lambda)) return std::nullopt;
    return wg_->fold_antidominant(x.lambda).first;
}

RationalVec AffineWeyl::centroid(const AffineElement& x) const {
    // x^{-1}(A0) = w^{-1}(A0) - lambda, so the barycenter moves the same way
    RationalVec c = wg_->apply_to_coroot(wg_->inverse(x.w), roots().alcove_center());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= rat_of(x.lambda[j]);
    return c;
}

std::vector<long long> AffineWeyl::alcove_address(const AffineElement& x) const {
    const std::size_t npos = roots().positive_count();
    std::vector<long long> out(npos, 0);
    for (std::size_t k = 0; k < npos; ++k) {
        long long j = -lambda_pair(x.lambda, k);
        if (wg_->inverts_positive_root(x.w, k)) j -= 1;
        out[k] = j;
    }
    return out;
}

}  // namespace coxwalk
