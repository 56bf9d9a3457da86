#include "hfold/fold.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hfold {

namespace {

// dst |= src shifted by `shift` bit positions (negative shifts right).
// Bits shifted past either end are discarded; callers guarantee genuine
// sums never leave the window, so nothing real is ever lost.
void or_shifted(std::uint64_t* dst, const std::uint64_t* src,
                std::size_t nwords, std::ptrdiff_t shift) {
    if (shift >= 0) {
        const std::size_t woff = static_cast<std::size_t>(shift) / 64;
        const unsigned boff = static_cast<unsigned>(shift % 64);
        if (woff >= nwords)
            return;
        if (boff == 0) {
            for (std::size_t w = nwords; w-- > woff;)
                dst[w] |= src[w - woff];
        } else {
            for (std::size_t w = nwords; w-- > woff;) {
                std::uint64_t v = src[w - woff] << boff;
                if (w - woff > 0)
                    v |= src[w - woff - 1] >> (64 - boff);
                dst[w] |= v;
            }
        }
    } else {
        const std::size_t offs = static_cast<std::size_t>(-shift);
        const std::size_t woff = offs / 64;
        const unsigned boff = static_cast<unsigned>(offs % 64);
        if (woff >= nwords)
            return;
        if (boff == 0) {
            for (std::size_t w = 0; w < nwords - woff; ++w)
                dst[w] |= src[w + woff];
        } else {
            for (std::size_t w = 0; w < nwords - woff; ++w) {
                std::uint64_t v = src[w + woff] >> boff;
                if (w + woff + 1 < nwords)
                    v |= src[w + woff + 1] << (64 - boff);
                dst[w] |= v;
            }
        }
    }
}

void append_bits(Sums& out, const std::uint64_t* row, std::size_t nwords, Int lo) {
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t word = row[w];
        while (word) {
            const int b = std::countr_zero(word);
            out.push_back(lo + static_cast<Int>(w * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
}

void validate_params(FoldParams p) {
    if (p.r < 1)
        throw OutOfRangeError("repetition cap r must be at least 1");
    if (p.h < 0)
        throw OutOfRangeError("fold count h must be nonnegative");
}

// Attainable extrema of the exact-count-c layer, via prefix/suffix sums of
// the sorted elements. c must satisfy 0 <= c <= k*r.
std::pair<Int, Int> layer_extrema(const std::vector<Int>& a, Int c, Int r) {
    const Int k = static_cast<Int>(a.size());
    const Int m = c / r;
    const Int e = c % r;
    Int lo = 0;
    for (Int i = 0; i < m; ++i)
        lo = checked_add(lo, checked_mul(r, a[static_cast<std::size_t>(i)]));
    if (e > 0)
        lo = checked_add(lo, checked_mul(e, a[static_cast<std::size_t>(m)]));
    Int hi = 0;
    for (Int i = k - m; i < k; ++i)
        hi = checked_add(hi, checked_mul(r, a[static_cast<std::size_t>(i)]));
    if (e > 0)
        hi = checked_add(hi, checked_mul(e, a[static_cast<std::size_t>(k - m - 1)]));
    return {lo, hi};
}

} // namespace

SumsetTable SumsetTable::build(const IntSet& a, Int max_count, Int r,
                               const FoldOptions& opt) {
    if (r < 1)
        throw OutOfRangeError("repetition cap r must be at least 1");
    if (max_count < 0)
        throw OutOfRangeError("max_count must be nonnegative");

    SumsetTable t;
    t.requested_ = max_count;
    t.r_ = r;
    const Int k = a.size();
    const Int kr = checked_mul(k, r);
    t.effective_ = std::min(max_count, kr);

    // Window: hull of the attainable extrema over every layer we will hold.
    // Intermediate states during the element sweep are genuine exact-count
    // sums, so they can never leave this window.
    Int lo = 0;
    Int hi = 0;
    for (Int c = 0; c <= t.effective_; ++c) {
        const auto [clo, chi] = layer_extrema(a.elements(), c, r);
        lo = std::min(lo, clo);
        hi = std::max(hi, chi);
    }

    const auto span = static_cast<unsigned __int128>(hi) - static_cast<unsigned __int128>(lo) + 1;
    const auto rows = static_cast<unsigned __int128>(t.effective_) + 1;
    bool dense = false;
    switch (opt.mode) {
    case FoldOptions::Mode::Dense:
        dense = true;
        break;
    case FoldOptions::Mode::Sparse:
        dense = false;
        break;
    case FoldOptions::Mode::Auto:
        dense = span * rows <= opt.dense_bits_budget;
        break;
    }
    t.dense_ = dense;

    if (dense) {
        t.lo_ = lo;
        t.width_ = static_cast<std::size_t>(span);
        t.words_ = (t.width_ + 63) / 64;
        t.bits_.assign(static_cast<std::size_t>(t.effective_ + 1) * t.words_, 0);
        t.row(0)[static_cast<std::size_t>(0 - lo) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(0 - lo) % 64);

        std::vector<std::uint64_t> prev;
        for (Int i = 0; i < k; ++i) {
            const Int av = a[static_cast<int>(i)];
            prev = t.bits_; // layers before this element joins
            for (Int c = t.effective_; c >= 1; --c) {
                const Int jmax = std::min(r, c);
                for (Int j = 1; j <= jmax; ++j) {
                    const std::ptrdiff_t shift =
                        static_cast<std::ptrdiff_t>(checked_mul(j, av));
                    or_shifted(t.row(c),
                               prev.data() + static_cast<std::size_t>(c - j) * t.words_,
                               t.words_, shift);
                }
            }
        }
        // Clear slack bits in the last word of each row; no genuine sum
        // lives there, but stray bits would corrupt cardinality counts.
        if (t.width_ % 64 != 0) {
            const std::uint64_t mask = (std::uint64_t{1} << (t.width_ % 64)) - 1;
            for (Int c = 0; c <= t.effective_; ++c)
                t.row(c)[t.words_ - 1] &= mask;
        }
    } else {
        t.layers_.assign(static_cast<std::size_t>(t.effective_ + 1), {});
        t.layers_[0] = {0};
        std::vector<Sums> prev;
        for (Int i = 0; i < k; ++i) {
            const Int av = a[static_cast<int>(i)];
            prev = t.layers_;
            for (Int c = t.effective_; c >= 1; --c) {
                Sums& out = t.layers_[static_cast<std::size_t>(c)];
                const Int jmax = std::min(r, c);
                for (Int j = 1; j <= jmax; ++j) {
                    const Int off = checked_mul(j, av);
                    for (Int s : prev[static_cast<std::size_t>(c - j)])
                        out.push_back(checked_add(s, off));
                }
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
            }
        }
    }
    return t;
}

const std::uint64_t* SumsetTable::row(Int c) const {
    return bits_.data() + static_cast<std::size_t>(c) * words_;
}

std::uint64_t* SumsetTable::row(Int c) {
    return bits_.data() + static_cast<std::size_t>(c) * words_;
}

void SumsetTable::check_count(Int c) const {
    if (c < 0 || c > requested_)
        throw OutOfRangeError("layer index outside the built range");
}

Sums SumsetTable::layer(Int c) const {
    check_count(c);
    if (c > effective_)
        return {};
    Sums out;
    if (dense_) {
        append_bits(out, row(c), words_, lo_);
    } else {
        out = layers_[static_cast<std::size_t>(c)];
    }
    return out;
}

Int SumsetTable::layer_cardinality(Int c) const {
    check_count(c);
    if (c > effective_)
        return 0;
    if (!dense_)
        return static_cast<Int>(layers_[static_cast<std::size_t>(c)].size());
    Int n = 0;
    const std::uint64_t* r0 = row(c);
    for (std::size_t w = 0; w < words_; ++w)
        n += std::popcount(r0[w]);
    return n;
}

Sums SumsetTable::layers_union(const std::vector<Int>& counts) const {
    for (Int c : counts)
        check_count(c);
    Sums out;
    if (dense_) {
        std::vector<std::uint64_t> acc(words_, 0);
        for (Int c : counts) {
            if (c > effective_)
                continue;
            const std::uint64_t* r0 = row(c);
            for (std::size_t w = 0; w < words_; ++w)
                acc[w] |= r0[w];
        }
        append_bits(out, acc.data(), words_, lo_);
    } else {
        for (Int c : counts) {
            if (c > effective_)
                continue;
            const Sums& l = layers_[static_cast<std::size_t>(c)];
            out.insert(out.end(), l.begin(), l.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

std::pair<Int, Int> fold_extrema(const IntSet& a, FoldParams p) {
    validate_params(p);
    const Int kr = checked_mul(a.size(), p.r);
    if (p.h > kr)
        throw OutOfRangeError("fold count exceeds k*r, sumset is empty");
    return layer_extrema(a.elements(), p.h, p.r);
}

Sums fold_sumset(const IntSet& a, FoldParams p, const FoldOptions& opt) {
    validate_params(p);
    if (p.h > checked_mul(a.size(), p.r))
        return {};
    if (p.h == 0)
        return {0};
    return SumsetTable::build(a, p.h, p.r, opt).layer(p.h);
}

Sums union_sumset(const IntSet& a, const HSpec& hs, Int r, const FoldOptions& opt) {
    if (r < 1)
        throw OutOfRangeError("repetition cap r must be at least 1");
    const Int kr = checked_mul(a.size(), r);
    std::vector<Int> usable;
    for (Int h : hs.values())
        if (h <= kr)
            usable.push_back(h);
    if (usable.empty())
        throw EmptyResultError("every fold count exceeds k*r");
    const auto table = SumsetTable::build(a, usable.back(), r, opt);
    return table.layers_union(usable);
}

Sums enumerate_fold_sumset(const IntSet& a, FoldParams p, std::uint64_t cap) {
    validate_params(p);
    const Int k = a.size();
    if (p.h > checked_mul(k, p.r))
        return {};
    if (p.h == 0)
        return {0};

    // Count the multiplicity vectors first, saturating well above the cap,
    // so a too-large request fails fast instead of grinding.
    const std::uint64_t sat = cap + 1;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(p.h) + 1, 0);
    ways[0] = 1;
    for (Int i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (Int c = 0; c <= p.h; ++c) {
            std::uint64_t total = 0;
            for (Int j = 0; j <= std::min(p.r, c); ++j) {
                total += ways[static_cast<std::size_t>(c - j)];
                if (total >= sat) {
                    total = sat;
                    break;
                }
            }
            next[static_cast<std::size_t>(c)] = total;
        }
        ways = std::move(next);
    }
    if (ways[static_cast<std::size_t>(p.h)] > cap)
        throw TooLargeError("enumeration would visit more than " +
                            std::to_string(cap) + " multiplicity vectors");

    Sums sums;
    const auto& elems = a.elements();
    // Depth-first over lambda_1..lambda_k with remaining-capacity pruning,
    // so every visited leaf is a valid vector.
    auto walk = [&](auto&& self, int i, Int rem, Int acc) -> void {
        if (i == k) {
            sums.push_back(acc);
            return;
        }
        const Int tail_cap = checked_mul(static_cast<Int>(k - i - 1), p.r);
        const Int lo = std::max<Int>(0, rem - tail_cap);
        const Int hi = std::min(p.r, rem);
        for (Int lam = lo; lam <= hi; ++lam) {
            self(self, i + 1, rem - lam,
                 checked_add(acc, checked_mul(lam, elems[static_cast<std::size_t>(i)])));
        }
    };
    walk(walk, 0, p.h, 0);

    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

} // namespace hfold
