#include "coxwalk/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "coxwalk/errors.hpp"

namespace coxwalk {

namespace {

// Forward elimination with partial (first-nonzero) pivoting over mpq.
// Mutates a working copy; returns the solution of A x = b.
RationalVec gauss_solve(RationalMatrix A, RationalVec b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw DimensionMismatch("gauss_solve: shape mismatch");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A.at(perm[piv], col) == 0) ++piv;
        if (piv == n) throw SingularSystem("gauss_solve: singular matrix");
        std::swap(perm[col], perm[piv]);
        const std::size_t pr = perm[col];
        const Rational inv_p = 1 / A.at(pr, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::size_t rr = perm[r];
            if (A.at(rr, col) == 0) continue;
            Rational f = A.at(rr, col) * inv_p;
            A.at(rr, col) = 0;
            for (std::size_t c = col + 1; c < n; ++c) {
                if (A.at(pr, c) != 0) A.at(rr, c) -= f * A.at(pr, c);
            }
            b[rr] -= f * b[pr];
        }
    }
    RationalVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[perm[i]];
        for (std::size_t c = i + 1; c < n; ++c) acc -= A.at(perm[i], c) * x[c];
        x[i] = acc / A.at(perm[i], i);
    }
    return x;
}

}  // namespace

RationalVec RationalMatrix::solve(const RationalVec& b) const { return gauss_solve(*this, b); }

RationalMatrix RationalMatrix::inverse() const {
    const std::size_t n = rows_;
    if (cols_ != n) throw DimensionMismatch("inverse: matrix not square");
    RationalMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        RationalVec e(n);
        e[k] = 1;
        RationalVec col = solve(e);
        for (std::size_t i = 0; i < n; ++i) out.at(i, k) = col[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// modular machinery

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit integers
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::vector<u64> primes_above(u64 start, std::size_t count) {
    std::vector<u64> out;
    u64 p = start | 1;
    while (out.size() < count) {
        if (is_prime_u64(p)) out.push_back(p);
        p += 2;
    }
    return out;
}

// Solves A x = b mod p with dense LU; returns false when A is singular mod p.
bool solve_mod_p(std::vector<u64> A, std::vector<u64> b, std::size_t n, u64 p,
                 std::vector<u64>& out) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[perm[piv] * n + col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(perm[col], perm[piv]);
        const std::size_t pr = perm[col];
        const u64 ip = invmod(A[pr * n + col], p);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::size_t rr = perm[r];
            const u64 a = A[rr * n + col];
            if (a == 0) continue;
            const u64 f = mulmod(a, ip, p);
            A[rr * n + col] = 0;
            const u64* src = &A[pr * n];
            u64* dst = &A[rr * n];
            for (std::size_t c = col + 1; c < n; ++c) {
                if (src[c]) dst[c] = (dst[c] + p - mulmod(f, src[c], p)) % p;
            }
            b[rr] = (b[rr] + p - mulmod(f, b[pr], p)) % p;
        }
    }
    out.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        u64 acc = b[perm[i]];
        for (std::size_t c = i + 1; c < n; ++c) {
            acc = (acc + p - mulmod(A[perm[i] * n + c], out[c], p)) % p;
        }
        out[i] = mulmod(acc, invmod(A[perm[i] * n + i], p), p);
    }
    return true;
}

// Wang-style rational reconstruction of x mod m with |num|, den <= sqrt(m/2).
bool rational_reconstruct(const BigInt& x, const BigInt& m, Rational& out) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
    BigInt r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    BigInt den = abs(t1);
    if (den > bound) return false;
    BigInt num = (t1 < 0) ? BigInt(-r1) : r1;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        num /= g;
        den /= g;
    }
    out = Rational(num) / Rational(den);
    out.canonicalize();
    return true;
}

// Builds the square system for the stationary vector: row 0 is the
// normalization sum(x) = 1, rows 1..n-1 come from (P^T - I) x = 0 with each
// row scaled by the common denominator so entries are integers.
struct StationarySystem {
    std::size_t n;
    std::vector<long long> A;  // n*n, row-major
    // rhs is e_0
};

StationarySystem build_system(const SparseChain& chain) {
    const std::size_t n = chain.n;
    StationarySystem sys;
    sys.n = n;
    sys.A.assign(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) sys.A[j] = 1;
    // common denominator over all entries
    BigInt lcm = 1;
    for (const auto& row : chain.entries) {
        for (const auto& [j, q] : row) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
            lcm = lcm / g * q.get_den();
        }
    }
    if (!lcm.fits_slong_p()) throw StateSpaceTooLarge("stationary system: denominator overflow");
    const long scale = lcm.get_si();  // plain long: gmpxx mixed ops need it
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, q] : chain.entries[i]) {
            if (j == 0) continue;  // row 0 replaced by normalization
            Rational v = q * scale;
            sys.A[j * n + i] += v.get_num().get_si();
        }
    }
    for (std::size_t k = 1; k < n; ++k) sys.A[k * n + k] -= scale;
    return sys;
}

bool certify_stationary(const SparseChain& chain, const RationalVec& x) {
    const std::size_t n = chain.n;
    Rational total = 0;
    for (const auto& v : x) {
        if (v <= 0) return false;
        total += v;
    }
    if (total != 1) return false;
    RationalVec acc(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, q] : chain.entries[i]) acc[j] += x[i] * q;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (acc[j] != x[j]) return false;
    }
    return true;
}

RationalVec stationary_dense(const SparseChain& chain) {
    const std::size_t n = chain.n;
    RationalMatrix A(n, n);
    for (std::size_t j = 0; j < n; ++j) A.at(0, j) = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, q] : chain.entries[i]) {
            if (j != 0) A.at(j, i) += q;
        }
    }
    for (std::size_t k = 1; k < n; ++k) A.at(k, k) -= 1;
    RationalVec b(n);
    b[0] = 1;
    return A.solve(b);
}

RationalVec stationary_modular(const SparseChain& chain) {
    const StationarySystem sys = build_system(chain);
    const std::size_t n = sys.n;
    const std::vector<u64> primes = primes_above((1ull << 62) + 1, 64);

    std::vector<BigInt> crt(n, BigInt(0));
    BigInt modulus = 1;
    std::vector<u64> Ap(n * n), bp(n), xp;
    std::size_t used = 0;
    for (u64 p : primes) {
        for (std::size_t k = 0; k < n * n; ++k) {
            long long v = sys.A[k] % static_cast<long long>(p);
            Ap[k] = v < 0 ? v + static_cast<long long>(p) : v;
        }
        std::fill(bp.begin(), bp.end(), 0);
        bp[0] = 1;
        if (!solve_mod_p(Ap, bp, n, p, xp)) continue;  // unlucky prime
        if (modulus == 1) {
            for (std::size_t i = 0; i < n; ++i) crt[i] = xp[i];
            modulus = p;
        } else {
            // combine: find y with y == crt mod modulus, y == xp mod p
            BigInt minv;
            BigInt mm = modulus % p;
            mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), BigInt(p).get_mpz_t());
            for (std::size_t i = 0; i < n; ++i) {
                BigInt diff = (BigInt(xp[i]) - crt[i]) % p;
                if (diff < 0) diff += p;
                BigInt t = diff * minv % p;
                crt[i] += modulus * t;
            }
            modulus *= p;
        }
        ++used;
        if (used < 2) continue;
        RationalVec candidate(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            ok = rational_reconstruct(crt[i], modulus, candidate[i]);
        }
        if (ok && certify_stationary(chain, candidate)) return candidate;
    }
    // modular route exhausted; fall back to the exact dense solve
    RationalVec x = stationary_dense(chain);
    if (!certify_stationary(chain, x)) throw SingularSystem("stationary vector fails certification");
    return x;
}

}  // namespace

RationalVec solve_stationary(const SparseChain& chain) {
    if (chain.n == 0) throw DimensionMismatch("solve_stationary: empty chain");
    RationalVec x = chain.n <= 160 ? stationary_dense(chain) : stationary_modular(chain);
    if (!certify_stationary(chain, x)) throw SingularSystem("stationary vector fails certification");
    return x;
}

}  // namespace coxwalk
