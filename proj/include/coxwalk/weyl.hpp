#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "coxwalk/roots.hpp"

namespace coxwalk {

using Index = std::uint32_t;
using Word = std::vector<int>;  // generator indices; finite generators are 1..rank

// The finite Weyl group, fully enumerated.  Elements are dense indices sorted
// by (length, lexicographically smallest reduced word), so index 0 is the
// identity and the ordering is reproducible across runs and platforms.
class WeylGroup {
  public:
    static std::shared_ptr<const WeylGroup> build(std::shared_ptr<const RootSystem> rs);

    const RootSystem& roots() const { return *rs_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
    Index size() const { return static_cast<Index>(length_.size()); }
    int rank() const { return rs_->rank(); }

    Index identity() const { return 0; }
    Index longest_element() const { return w0_; }

    Index left_mul(int i, Index w) const {  // s_i * w
        return lmul_[static_cast<std::size_t>(i - 1)][w];
    }
    Index multiply(Index u, Index v) const;  // u * v
    Index inverse(Index w) const { return inverse_[w]; }
    // reflection in the k-th positive root (index into positive_roots())
    Index root_reflection(std::size_t k) const { return root_reflection_[k]; }
    Index theta_left_mul(Index w) const { return theta_mul_[w]; }  // r_theta * w

    int length(Index w) const { return length_[w]; }
    const Word& word(Index w) const { return words_[w]; }
    Index element_of(const Word& word) const;

    bool is_left_descent(int i, Index w) const {  // ell(s_i w) < ell(w)
        return (descent_mask_[w] >> (i - 1)) & 1u;
    }
    std::uint32_t descent_mask(Index w) const { return descent_mask_[w]; }
    bool theta_ascent(Index w) const {  // ell(r_theta w) > ell(w)
        return length_[theta_mul_[w]] > length_[w];
    }

    IntVec apply_to_coroot(Index w, const IntVec& v) const;
    RationalVec apply_to_coroot(Index w, const RationalVec& v) const;
    IntVec apply_to_root(Index w, const IntVec& v) const;

    // w(beta_k) < 0, beta_k the k-th positive root
    bool inverts_positive_root(Index w, std::size_t k) const {
        return (inv_bits_[w * inv_words_ + k / 64] >> (k % 64)) & 1ull;
    }
    std::vector<std::uint64_t> inversion_bits(Index w) const;
    std::optional<Index> element_with_inversions(const std::vector<std::uint64_t>& bits) const;

    // Applies simple reflections with strictly positive pairing until the
    // image is antidominant; returns (u, u(v)).  For regular v the chamber
    // label u is unique; otherwise it is one valid choice.
    std::pair<Index, IntVec> fold_antidominant(const IntVec& v) const;
    std::pair<Index, RationalVec> fold_antidominant(const RationalVec& v) const;

  private:
    WeylGroup() = default;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<std::vector<Index>> lmul_;  // [gen-1][w]
    std::vector<Index> inverse_;
    std::vector<Index> theta_mul_;
    std::vector<Index> root_reflection_;
    std::vector<std::uint16_t> length_;
    std::vector<Word> words_;
    std::vector<std::uint32_t> descent_mask_;
    std::vector<std::int16_t> act_coroot_;  // [w][i][j]: row i of the matrix of w
    std::vector<std::int16_t> act_root_;
    std::vector<std::uint64_t> inv_bits_;
    std::size_t inv_words_ = 1;
    std::map<std::vector<std::uint64_t>, Index> inv_lookup_;
    Index w0_ = 0;
};

}  // namespace coxwalk
