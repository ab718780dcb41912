#pragma once

#include <cstdint>
#include <vector>

#include "coxwalk/rational.hpp"

namespace coxwalk {

// Dense matrix over exact rationals.  Row-major, sized once at construction.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Solves A x = b by fraction-aware Gaussian elimination.  Throws
    // SingularSystem when no pivot can be found.
    RationalVec solve(const RationalVec& b) const;

    // Exact inverse (used for small systems such as the inverse Cartan matrix).
    RationalMatrix inverse() const;

  private:
    std::size_t rows_, cols_;
    RationalVec data_;
};

// Sparse row-stochastic system support: finds the unique solution of
//   x^T P = x^T,  sum(x) = 1
// for an irreducible aperiodic transition matrix P given as sparse rows.
// Small systems go through exact dense elimination; larger ones are solved
// per machine prime, combined by CRT, lifted by rational reconstruction, and
// the candidate is then certified exactly against the defining equations, so
// the result never depends on the reconstruction heuristics.
struct SparseChain {
    std::size_t n = 0;
    // entries[i] lists (j, p_ij) including the diagonal when nonzero
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> entries;
};

RationalVec solve_stationary(const SparseChain& chain);

// 64-bit primality test (deterministic Miller-Rabin), exposed for tests.
bool is_prime_u64(std::uint64_t n);

}  // namespace coxwalk
