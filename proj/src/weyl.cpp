#include "coxwalk/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "coxwalk/errors.hpp"

namespace coxwalk {

namespace {

// sign of a root coordinate vector known to be all-nonnegative or
// all-nonpositive; 0 never happens for genuine roots
int quick_sign(const std::int64_t* v, int n) {
    for (int j = 0; j < n; ++j) {
        if (v[j] > 0) return 1;
        if (v[j] < 0) return -1;
    }
    return 0;
}

}  // namespace

std::shared_ptr<const WeylGroup> WeylGroup::build(std::shared_ptr<const RootSystem> rs) {
    auto wg = std::shared_ptr<WeylGroup>(new WeylGroup());
    wg->rs_ = rs;
    const int n = rs->rank();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    const std::size_t expected = static_cast<std::size_t>(rs->weyl_order());

    // Breadth-first enumeration keyed by the image of 2 rho^vee (a regular
    // vector, so the map w -> w(2 rho^vee) is injective).
    std::vector<IntVec> keys;
    std::map<IntVec, Index> key2idx;
    std::vector<std::uint16_t> len;
    std::vector<std::vector<Index>> lmul(static_cast<std::size_t>(n));
    std::vector<std::int16_t> mc;  // coroot-side matrices, row-major per element
    std::vector<std::int16_t> mr;  // root-side matrices

    keys.reserve(expected);
    len.reserve(expected);
    for (auto& t : lmul) t.reserve(expected);
    mc.reserve(expected * nn);
    mr.reserve(expected * nn);

    keys.push_back(rs->two_rho_coroot());
    key2idx.emplace(keys[0], 0);
    len.push_back(0);
    for (auto& t : lmul) t.push_back(0);
    mc.assign(nn, 0);
    mr.assign(nn, 0);
    for (int i = 0; i < n; ++i) {
        mc[static_cast<std::size_t>(i) * n + i] = 1;
        mr[static_cast<std::size_t>(i) * n + i] = 1;
    }

    auto reflect_columns = [&](std::vector<std::int16_t>& store, std::size_t src,
                               std::size_t dst, int i, bool coroot_side) {
        // new column c = s_i(old column c); only row i-1 changes
        const std::int16_t* m = store.data() + src * nn;
        std::int16_t* out = store.data() + dst * nn;
        std::copy(m, m + nn, out);
        for (int c = 0; c < n; ++c) {
            long long p = 0;
            for (int j = 0; j < n; ++j) {
                const long long cij = coroot_side ? rs->cartan(j + 1, i) : rs->cartan(i, j + 1);
                p += cij * m[static_cast<std::size_t>(j) * n + c];
            }
            const long long v = out[static_cast<std::size_t>(i - 1) * n + c] - p;
            if (v < -32768 || v > 32767) throw Error("Weyl matrix entry overflow");
            out[static_cast<std::size_t>(i - 1) * n + c] = static_cast<std::int16_t>(v);
        }
    };

    for (Index w = 0; w < keys.size(); ++w) {
        for (int i = 1; i <= n; ++i) {
            IntVec nk = rs->reflect_coroot(i, keys[w]);
            auto it = key2idx.find(nk);
            if (it != key2idx.end()) {
                lmul[static_cast<std::size_t>(i - 1)][w] = it->second;
                continue;
            }
            const Index nw = static_cast<Index>(keys.size());
            if (nw >= expected + 1) throw Error("Weyl enumeration exceeded expected order");
            key2idx.emplace(nk, nw);
            keys.push_back(std::move(nk));
            len.push_back(static_cast<std::uint16_t>(len[w] + 1));
            for (auto& t : lmul) t.push_back(0);
            lmul[static_cast<std::size_t>(i - 1)][w] = nw;
            lmul[static_cast<std::size_t>(i - 1)][nw] = w;
            mc.resize((static_cast<std::size_t>(nw) + 1) * nn);
            mr.resize((static_cast<std::size_t>(nw) + 1) * nn);
            reflect_columns(mc, w, nw, i, true);
            reflect_columns(mr, w, nw, i, false);
        }
    }
    const std::size_t count = keys.size();
    if (count != expected)
        throw Error("Weyl enumeration found " + std::to_string(count) +
                    " elements, expected " + std::to_string(expected));

    // canonical (lexicographically smallest) reduced words, via the greedy
    // smallest-left-descent recursion
    std::vector<Word> words(count);
    for (Index w = 0; w < count; ++w) {
        Word out;
        out.reserve(len[w]);
        Index x = w;
        while (len[x] > 0) {
            int pick = 0;
            for (int i = 1; i <= n; ++i) {
                if (len[lmul[static_cast<std::size_t>(i - 1)][x]] < len[x]) {
                    pick = i;
                    break;
                }
            }
            if (pick == 0) throw Error("descent search failed");
            out.push_back(pick);
            x = lmul[static_cast<std::size_t>(pick - 1)][x];
        }
        words[w] = std::move(out);
    }

    // sort by (length, word) and renumber
    std::vector<Index> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (len[a] != len[b]) return len[a] < len[b];
        return words[a] < words[b];
    });
    std::vector<Index> newidx(count);
    for (Index pos = 0; pos < count; ++pos) newidx[order[pos]] = pos;

    wg->length_.resize(count);
    wg->words_.resize(count);
    wg->lmul_.assign(static_cast<std::size_t>(n), std::vector<Index>(count));
    wg->act_coroot_.resize(count * nn);
    wg->act_root_.resize(count * nn);
    std::vector<IntVec> keys_new(count);
    for (Index old = 0; old < count; ++old) {
        const Index nw = newidx[old];
        wg->length_[nw] = len[old];
        wg->words_[nw] = words[old];
        keys_new[nw] = keys[old];
        for (int i = 0; i < n; ++i)
            wg->lmul_[static_cast<std::size_t>(i)][nw] =
                newidx[lmul[static_cast<std::size_t>(i)][old]];
        std::copy(mc.begin() + static_cast<std::ptrdiff_t>(old * nn),
                  mc.begin() + static_cast<std::ptrdiff_t>((old + 1) * nn),
                  wg->act_coroot_.begin() + static_cast<std::ptrdiff_t>(nw * nn));
        std::copy(mr.begin() + static_cast<std::ptrdiff_t>(old * nn),
                  mr.begin() + static_cast<std::ptrdiff_t>((old + 1) * nn),
                  wg->act_root_.begin() + static_cast<std::ptrdiff_t>(nw * nn));
    }
    key2idx.clear();
    for (Index w = 0; w < count; ++w) key2idx.emplace(keys_new[w], w);

    if (wg->length_[count - 1] == 0 ||
        (count >= 2 && wg->length_[count - 2] == wg->length_[count - 1]))
        if (count > 1) throw Error("longest element is not unique");
    wg->w0_ = static_cast<Index>(count - 1);

    wg->descent_mask_.assign(count, 0);
    for (Index w = 0; w < count; ++w)
        for (int i = 1; i <= n; ++i)
            if (wg->length_[wg->lmul_[static_cast<std::size_t>(i - 1)][w]] < wg->length_[w])
                wg->descent_mask_[w] |= (1u << (i - 1));

    wg->inverse_.assign(count, 0);
    for (Index w = 0; w < count; ++w) {
        Index x = 0;
        for (int i : wg->words_[w]) x = wg->lmul_[static_cast<std::size_t>(i - 1)][x];
        wg->inverse_[w] = x;
    }

    // inversion sets as bitsets over the positive-root list
    const std::size_t npos = rs->positive_count();
    wg->inv_words_ = (npos + 63) / 64;
    wg->inv_bits_.assign(count * wg->inv_words_, 0);
    std::vector<std::int64_t> img(static_cast<std::size_t>(n));
    for (Index w = 0; w < count; ++w) {
        const std::int16_t* m = wg->act_root_.data() + w * nn;
        for (std::size_t k = 0; k < npos; ++k) {
            const IntVec& beta = rs->positive_roots()[k];
            for (int r = 0; r < n; ++r) {
                std::int64_t acc = 0;
                for (int c = 0; c < n; ++c)
                    acc += static_cast<std::int64_t>(m[static_cast<std::size_t>(r) * n + c]) *
                           beta[static_cast<std::size_t>(c)];
                img[static_cast<std::size_t>(r)] = acc;
            }
            if (quick_sign(img.data(), n) < 0)
                wg->inv_bits_[w * wg->inv_words_ + k / 64] |= (1ull << (k % 64));
        }
    }
    for (Index w = 0; w < count; ++w) {
        std::vector<std::uint64_t> bits(wg->inv_bits_.begin() + static_cast<std::ptrdiff_t>(w * wg->inv_words_),
                                        wg->inv_bits_.begin() + static_cast<std::ptrdiff_t>((w + 1) * wg->inv_words_));
        wg->inv_lookup_.emplace(std::move(bits), w);
    }

    // reflections in each positive root, located through the key map
    wg->root_reflection_.assign(npos, 0);
    for (std::size_t k = 0; k < npos; ++k) {
        const long long p = rs->pair(rs->two_rho_coroot(), rs->positive_roots()[k]);
        IntVec key = rs->two_rho_coroot();
        for (int j = 0; j < n; ++j)
            key[static_cast<std::size_t>(j)] -= p * rs->positive_coroots()[k][static_cast<std::size_t>(j)];
        auto it = key2idx.find(key);
        if (it == key2idx.end()) throw Error("root reflection not found");
        wg->root_reflection_[k] = it->second;
    }

    wg->theta_mul_.assign(count, 0);
    for (Index w = 0; w < count; ++w) {
        const long long p = rs->pair(keys_new[w], rs->highest_root());
        IntVec key = keys_new[w];
        for (int j = 0; j < n; ++j)
            key[static_cast<std::size_t>(j)] -= p * rs->highest_coroot()[static_cast<std::size_t>(j)];
        auto it = key2idx.find(key);
        if (it == key2idx.end()) throw Error("theta reflection image not found");
        wg->theta_mul_[w] = it->second;
    }

    return wg;
}

Index WeylGroup::multiply(Index u, Index v) const {
    Index x = v;
    const Word& wu = words_[u];
    for (auto it = wu.rbegin(); it != wu.rend(); ++it)
        x = lmul_[static_cast<std::size_t>(*it - 1)][x];
    return x;
}

Index WeylGroup::element_of(const Word& word) const {
    Index x = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1 || *it > rank()) throw Error("generator index out of range");
        x = lmul_[static_cast<std::size_t>(*it - 1)][x];
    }
    return x;
}

IntVec WeylGroup::apply_to_coroot(Index w, const IntVec& v) const {
    const int n = rank();
    if (v.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("vector length does not match rank");
    const std::int16_t* m = act_coroot_.data() + static_cast<std::size_t>(w) * n * n;
    IntVec out(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        long long acc = 0;
        for (int c = 0; c < n; ++c)
            acc += static_cast<long long>(m[static_cast<std::size_t>(r) * n + c]) *
                   v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

RationalVec WeylGroup::apply_to_coroot(Index w, const RationalVec& v) const {
    const int n = rank();
    if (v.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("vector length does not match rank");
    const std::int16_t* m = act_coroot_.data() + static_cast<std::size_t>(w) * n * n;
    RationalVec out(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < n; ++r) {
        Rational acc = 0;
        for (int c = 0; c < n; ++c)
            acc += rat_of(m[static_cast<std::size_t>(r) * n + c]) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

IntVec WeylGroup::apply_to_root(Index w, const IntVec& v) const {
    const int n = rank();
    if (v.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("vector length does not match rank");
    const std::int16_t* m = act_root_.data() + static_cast<std::size_t>(w) * n * n;
    IntVec out(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        long long acc = 0;
        for (int c = 0; c < n; ++c)
            acc += static_cast<long long>(m[static_cast<std::size_t>(r) * n + c]) *
                   v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

std::vector<std::uint64_t> WeylGroup::inversion_bits(Index w) const {
    return std::vector<std::uint64_t>(
        inv_bits_.begin() + static_cast<std::ptrdiff_t>(w * inv_words_),
        inv_bits_.begin() + static_cast<std::ptrdiff_t>((w + 1) * inv_words_));
}

std::optional<Index> WeylGroup::element_with_inversions(
    const std::vector<std::uint64_t>& bits) const {
    auto it = inv_lookup_.find(bits);
    if (it == inv_lookup_.end()) return std::nullopt;
    return it->second;
}

std::pair<Index, IntVec> WeylGroup::fold_antidominant(const IntVec& v) const {
    const int n = rank();
    Index u = 0;
    IntVec cur = v;
    for (;;) {
        int pick = 0;
        for (int i = 1; i <= n; ++i) {
            if (rs_->pair_with_simple_root(cur, i) > 0) {
                pick = i;
                break;
            }
        }
        if (pick == 0) return {u, cur};
        cur = rs_->reflect_coroot(pick, cur);
        u = lmul_[static_cast<std::size_t>(pick - 1)][u];
    }
}

std::pair<Index, RationalVec> WeylGroup::fold_antidominant(const RationalVec& v) const {
    const int n = rank();
    Index u = 0;
    RationalVec cur = v;
    for (;;) {
        int pick = 0;
        for (int i = 1; i <= n; ++i) {
            Rational p = 0;
            for (int j = 0; j < n; ++j)
                p += cur[static_cast<std::size_t>(j)] * rat_of(rs_->cartan(j + 1, i));
            if (p > 0) {
                pick = i;
                break;
            }
        }
        if (pick == 0) return {u, cur};
        cur = rs_->reflect_coroot(pick, cur);
        u = lmul_[static_cast<std::size_t>(pick - 1)][u];
    }
}

}  // namespace coxwalk
