#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "coxwalk/weyl.hpp"

namespace coxwalk {

// Element of the affine Weyl group written as x = w * t_lambda with w in the
// finite group and lambda in the coroot lattice.
struct AffineElement {
    Index w = 0;
    IntVec lambda;
    friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

// alpha + level * delta, with alpha in root coordinates
struct AffineRoot {
    IntVec alpha;
    long long level = 0;
    friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

// Affine Weyl group operations: generators are 0 (the affine node) and
// 1..rank.  Everything here is exact integer arithmetic.
class AffineWeyl {
  public:
    explicit AffineWeyl(std::shared_ptr<const WeylGroup> wg);

    const WeylGroup& weyl() const { return *wg_; }
    std::shared_ptr<const WeylGroup> weyl_ptr() const { return wg_; }
    const RootSystem& roots() const { return wg_->roots(); }
    int rank() const { return wg_->rank(); }

    AffineElement identity_element() const;
    AffineElement translation(const IntVec& lambda) const;
    AffineElement left_mul_gen(int i, const AffineElement& x) const;  // s_i * x
    AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
    AffineElement inverse(const AffineElement& x) const;
    AffineElement from_word(const std::vector<int>& word) const;

    AffineRoot simple_affine_root(int i) const;  // alpha_i, or delta - theta for i = 0
    bool is_positive(const AffineRoot& r) const;
    AffineRoot act(const AffineElement& x, const AffineRoot& r) const;

    long long length(const AffineElement& x) const;
    bool is_up_move(int i, const AffineElement& x) const;  // ell(s_i x) > ell(x)
    std::vector<int> up_moves(const AffineElement& x) const;

    // minimal-length representative of its translation coset
    bool is_affine_grassmannian(const AffineElement& x) const;
    std::vector<int> grassmannian_up_moves(const AffineElement& x) const;
    // the coset dictionary: x = w t_lambda  <->  mu = w(lambda)
    IntVec grassmannian_coweight(const AffineElement& x) const;
    AffineElement grassmannian_from_coweight(const IntVec& mu) const;

    // chamber label u (u maps the translation part antidominant), defined
    // when the translation part avoids all root hyperplanes
    std::optional<Index> chamber_of(const AffineElement& x) const;

    // barycenter of the alcove of x, which is x^{-1} applied to the
    // fundamental alcove
    RationalVec centroid(const AffineElement& x) const;

    // For each positive root beta_k, the integer j with
    // <v, beta_k> in (j, j+1) on the alcove of x.
    std::vector<long long> alcove_address(const AffineElement& x) const;

  private:
    std::shared_ptr<const WeylGroup> wg_;
    // pair_table_[k][i] = <alpha_i^vee, beta_k>, so <lambda, beta_k> is a dot
    // product with lambda's coordinates
    std::vector<IntVec> pair_table_;

    long long lambda_pair(const IntVec& lambda, std::size_t k) const;
};

}  // namespace coxwalk
