#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxwalk/rational.hpp"

namespace coxwalk {

// Integer coordinate vectors.  Root-space vectors are written in the simple
// root basis, coroot-space vectors in the simple coroot basis; the Cartan
// matrix mediates the pairing between the two.
using IntVec = std::vector<long long>;

enum class Family : char {
    A = 'A',
    B = 'B',
    C = 'C',
    D = 'D',
    E = 'E',
    F = 'F',
    G = 'G',
};

struct TypeTag {
    Family family;
    int rank;
    std::string name() const;
};

// Parses tags like "A2", "b3", "F4".  Throws UnsupportedType.
TypeTag parse_type(const std::string& tag);

// Crystallographic root system in the Bourbaki numbering, with every derived
// quantity the rest of the library needs precomputed en bloc.
class RootSystem {
  public:
    // Throws UnsupportedType for families/ranks outside the supported list
    // and RankTooLarge when the Weyl group would exceed the enumeration cap.
    static std::shared_ptr<const RootSystem> build(const std::string& tag);
    static std::shared_ptr<const RootSystem> build(TypeTag tag);

    static constexpr unsigned long long kWeylOrderCap = 60000;

    const TypeTag& type() const { return type_; }
    int rank() const { return rank_; }
    // cartan(i, j) = <alpha_i^vee, alpha_j>, 1-based generator indices
    long long cartan(int i, int j) const { return cartan_[(i - 1) * rank_ + (j - 1)]; }
    const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
    const std::vector<IntVec>& positive_coroots() const { return positive_coroots_; }
    std::size_t positive_count() const { return positive_roots_.size(); }
    const IntVec& highest_root() const { return highest_root_; }
    const IntVec& highest_coroot() const { return highest_coroot_; }
    const std::vector<long long>& marks() const { return marks_; }
    const std::vector<long long>& comarks() const { return comarks_; }
    long long coxeter_number() const { return coxeter_number_; }
    long long dual_coxeter_number() const { return dual_coxeter_number_; }
    unsigned long long weyl_order() const { return weyl_order_; }
    const IntVec& two_rho() const { return two_rho_; }              // root coords
    const IntVec& two_rho_coroot() const { return two_rho_coroot_; }  // coroot coords

    IntVec simple_root(int i) const;    // 1-based
    IntVec simple_coroot(int i) const;  // 1-based

    // <lambda, alpha> for lambda in coroot coords, alpha in root coords
    long long pair(const IntVec& coroot_vec, const IntVec& root_vec) const;
    Rational pair(const RationalVec& coroot_vec, const IntVec& root_vec) const;

    // pairing of a coroot vector against a single simple root / of a single
    // simple coroot against a root vector (cheap row/column forms)
    long long pair_with_simple_root(const IntVec& coroot_vec, int i) const;
    long long pair_of_simple_coroot(int i, const IntVec& root_vec) const;

    // symmetrized form on the coroot side, long roots normalized to norm^2 2
    Rational coroot_norm2(const IntVec& v) const;
    Rational coroot_norm2(const RationalVec& v) const;
    Rational coroot_inner(const RationalVec& a, const RationalVec& b) const;

    // simple reflections on coordinate vectors
    IntVec reflect_root(int i, const IntVec& root_vec) const;
    IntVec reflect_coroot(int i, const IntVec& coroot_vec) const;
    RationalVec reflect_coroot(int i, const RationalVec& coroot_vec) const;

    // +1 for positive roots, -1 for negative; throws Error on the zero vector
    // and on mixed-sign vectors (which are never roots)
    int root_sign(const IntVec& root_vec) const;
    std::optional<std::size_t> positive_root_index(const IntVec& root_vec) const;

    // fundamental coweights omega_i^vee (rows, coroot coords), and the
    // centroid of the fundamental alcove: average of 0 and omega_i^vee / a_i
    const std::vector<RationalVec>& coweights() const { return coweights_; }
    const RationalVec& alcove_center() const { return alcove_center_; }

    bool is_antidominant(const IntVec& coroot_vec) const;
    bool is_regular(const IntVec& coroot_vec) const;

  private:
    RootSystem() = default;

    TypeTag type_{};
    int rank_ = 0;
    std::vector<long long> cartan_;
    std::vector<IntVec> positive_roots_;
    std::vector<IntVec> positive_coroots_;
    IntVec highest_root_;
    IntVec highest_coroot_;
    std::vector<long long> marks_;
    std::vector<long long> comarks_;
    long long coxeter_number_ = 0;
    long long dual_coxeter_number_ = 0;
    unsigned long long weyl_order_ = 0;
    IntVec two_rho_;
    IntVec two_rho_coroot_;
    std::vector<Rational> symmetrizer_;         // d_i with long roots at 1
    std::vector<RationalVec> coroot_form_;      // (alpha_i^vee, alpha_j^vee)
    std::vector<RationalVec> coweights_;
    RationalVec alcove_center_;
};

}  // namespace coxwalk
