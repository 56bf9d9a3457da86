#include "hfold/bounds.hpp"

#include <algorithm>

namespace hfold::bounds {

namespace {

std::string num(Int v) { return std::to_string(v); }

// The i-th summand of the single-sum union bound over a base of kk
// elements:
//   r(m_i - m_{i-1})(kk - m_i) + (e_i - e_{i-1})(kk - m_i - 1)
//   - max(e_i, e_{i-1})(m_i - m_{i-1}) + 1.
Int union_term(Int kk, const HSpec& hs, Int r, int i) {
    const Int mi = hs.m(i, r);
    const Int mp = hs.m(i - 1, r);
    const Int ei = hs.eps(i, r);
    const Int ep = hs.eps(i - 1, r);
    Int v = checked_mul(checked_mul(r, checked_sub(mi, mp)), checked_sub(kk, mi));
    v = checked_add(v, checked_mul(checked_sub(ei, ep), checked_sub(checked_sub(kk, mi), 1)));
    v = checked_sub(v, checked_mul(std::max(ei, ep), checked_sub(mi, mp)));
    return checked_add(v, 1);
}

void append_union_terms(BoundReport& rep, Int kk, const HSpec& hs, Int r, int upto) {
    for (int i = 1; i <= upto; ++i)
        rep.terms.push_back({"h=" + num(hs.h(i)), union_term(kk, hs, r, i)});
}

void finish(BoundReport& rep) {
    Int total = 0;
    for (const auto& t : rep.terms)
        total = checked_add(total, t.value);
    rep.value = total;
}

} // namespace

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::MainTheorem: return "MainTheorem";
    case Regime::SplitHigh: return "SplitHigh";
    case Regime::AllHigh: return "AllHigh";
    case Regime::ZeroMain: return "ZeroMain";
    case Regime::ZeroSplitHigh: return "ZeroSplitHigh";
    case Regime::ZeroAllHigh: return "ZeroAllHigh";
    case Regime::UnrestrictedHA: return "UnrestrictedHA";
    }
    return "?";
}

std::optional<Regime> regime_from_string(std::string_view s) {
    for (Regime r : {Regime::MainTheorem, Regime::SplitHigh, Regime::AllHigh,
                     Regime::ZeroMain, Regime::ZeroSplitHigh, Regime::ZeroAllHigh,
                     Regime::UnrestrictedHA})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

Int fold_lower_value(Int k, Int h, Int r) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    const Int m = h / r;
    Int v = checked_mul(checked_mul(m, r), checked_sub(k, m));
    const Int rest = checked_sub(h, checked_mul(m, r));
    v = checked_add(v, checked_mul(rest, checked_sub(k, checked_add(checked_mul(2, m), 1))));
    return checked_add(v, 1);
}

Int union_lower_value(Int k, const HSpec& hs, Int r) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    Int total = 0;
    for (int i = 1; i <= hs.t(); ++i)
        total = checked_add(total, union_term(k, hs, r, i));
    return total;
}

Int zero_prefix_value(Int h1, Int r) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    const Int m1 = h1 / r;
    const Int m = (h1 + r - 1) / r;
    Int v = checked_mul(checked_mul(m1, r), checked_add(checked_sub(m, m1), 1));
    v = checked_add(v, checked_mul(checked_sub(h1, checked_mul(m1, r)),
                                   checked_sub(m, checked_mul(2, m1))));
    return v;
}

Int generalized_union_lower(Int k, const HSpec& hs, Int r) {
    const int l = hs.pivot(r); // throws BadPivotError when r > max(H)
    Int total = checked_add(checked_mul(hs.h(l - 1), checked_sub(k, 1)),
                            static_cast<Int>(l - 1));
    for (int i = l; i <= hs.t(); ++i)
        total = checked_add(total, union_term(k, hs, r, i));
    return total;
}

Int generalized_union_lower_flat(Int k, const HSpec& hs, Int r) {
    return union_lower_value(k, hs, r);
}

Int generalized_fold_lower(Int k, Int h, Int r) {
    if (r < 1 || r > h)
        throw HypothesisError("needs 1 <= r <= h");
    if (h > checked_mul(k, r))
        throw HypothesisError("needs h <= k*r");
    return fold_lower_value(k, h, r);
}

Int classical_lower(ClassicalKind kind, Int k, Int h) {
    switch (kind) {
    case ClassicalKind::HFold:
        if (h < 1)
            throw HypothesisError("needs h >= 1");
        return checked_add(checked_sub(checked_mul(h, k), h), 1);
    case ClassicalKind::RestrictedHFold:
        if (h < 1 || h > k)
            throw HypothesisError("needs 1 <= h <= k");
        return checked_add(checked_sub(checked_mul(h, k), checked_mul(h, h)), 1);
    default:
        throw HypothesisError("this classical kind takes a full h-set");
    }
}

Int classical_lower(ClassicalKind kind, Int k, const HSpec& hs, bool contains_zero) {
    const Int t = hs.t();
    switch (kind) {
    case ClassicalKind::UnionFold:
        return checked_add(checked_mul(hs.max(), checked_sub(k, 1)), t);
    case ClassicalKind::RestrictedUnionFold: {
        if (contains_zero) {
            // h_1 + sum (h_i - h_{i-1})(k - h_i - 1) + t over the k-1
            // positive elements; needs max(H) <= k - 1.
            if (hs.max() > k - 1)
                throw HypothesisError("needs max(H) <= k - 1 when 0 is in A");
            Int total = checked_add(hs.min(), t);
            for (int i = 1; i <= hs.t(); ++i)
                total = checked_add(total,
                                    checked_mul(checked_sub(hs.h(i), hs.h(i - 1)),
                                                checked_sub(checked_sub(k, hs.h(i)), 1)));
            return total;
        }
        if (hs.max() > k)
            throw HypothesisError("needs max(H) <= k");
        Int total = t;
        for (int i = 1; i <= hs.t(); ++i)
            total = checked_add(total, checked_mul(checked_sub(hs.h(i), hs.h(i - 1)),
                                                   checked_sub(k, hs.h(i))));
        return total;
    }
    default:
        throw HypothesisError("this classical kind takes a single h");
    }
}

Int zero_union_lower(Int k, const HSpec& hs, Int r) {
    if (k < 4)
        throw HypothesisError("needs k >= 4");
    if (hs.t() < 2)
        throw HypothesisError("needs t >= 2");
    if (r < 1 || r > hs.max())
        throw HypothesisError("needs 1 <= r <= max(H)");
    if (hs.max() > checked_sub(checked_mul(checked_sub(k, 2), r), 1))
        throw HypothesisError("needs max(H) <= (k-2)r - 1");
    return checked_add(zero_prefix_value(hs.min(), r),
                       generalized_union_lower(k - 1, hs, r));
}

Int high_regime_lower(Regime kind, Int k, const HSpec& hs, Int r,
                      std::optional<int> t0) {
    if (kind != Regime::SplitHigh && kind != Regime::AllHigh &&
        kind != Regime::ZeroSplitHigh && kind != Regime::ZeroAllHigh)
        throw HypothesisError("not a high-window regime");
    const bool zero_kind =
        kind == Regime::ZeroSplitHigh || kind == Regime::ZeroAllHigh;
    const BoundReport rep = evaluate_regime(kind, k, hs, r, zero_kind);
    if (!rep.hypotheses_ok)
        throw HypothesisError(rep.violations.front());
    if (t0 && rep.split_index && *t0 != *rep.split_index)
        throw HypothesisError("t0 does not match the threshold index of H");
    return rep.value;
}

Regime select_regime(Int k, Int r, const HSpec& hs, bool contains_zero) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    if (k < 1)
        throw OutOfRangeError("k must be positive");
    // Fold counts past k*r (or (k-1)r with 0 present) give empty sumsets;
    // when even the smallest one does, no bound applies at all.
    const Int ceiling = contains_zero ? checked_mul(checked_sub(k, 1), r)
                                      : checked_mul(k, r);
    if (hs.min() > ceiling)
        throw UnclassifiableError("min(H) exceeds every nonempty fold count");
    if (r > hs.max())
        return Regime::UnrestrictedHA;
    const Int thr = contains_zero ? checked_mul(checked_sub(k, 2), r)
                                  : checked_mul(checked_sub(k, 1), r);
    if (hs.max() <= checked_sub(thr, 1))
        return contains_zero ? Regime::ZeroMain : Regime::MainTheorem;
    if (hs.min() >= thr)
        return contains_zero ? Regime::ZeroAllHigh : Regime::AllHigh;
    return contains_zero ? Regime::ZeroSplitHigh : Regime::SplitHigh;
}

BoundReport evaluate_regime(Regime regime, Int k, const HSpec& hs, Int r,
                            bool contains_zero) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    BoundReport rep;
    rep.regime = regime;
    auto need = [&rep](bool ok, std::string msg) {
        if (!ok) {
            rep.hypotheses_ok = false;
            rep.violations.push_back(std::move(msg));
        }
    };
    const int t = hs.t();
    const bool zero_kind = regime == Regime::ZeroMain ||
                           regime == Regime::ZeroSplitHigh ||
                           regime == Regime::ZeroAllHigh;
    if (zero_kind)
        need(contains_zero, "0 must be in A for this regime");
    else
        need(!contains_zero, "0 must not be in A for this regime");

    switch (regime) {
    case Regime::MainTheorem: {
        need(k >= 3, "k >= 3 required (k = " + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(r <= hs.max(), "r <= max(H) required (r = " + num(r) + ")");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, 1), r), 1),
             "max(H) <= (k-1)r - 1 required (max = " + num(hs.max()) + ")");
        append_union_terms(rep, k, hs, r, t);
        break;
    }
    case Regime::ZeroMain: {
        need(k >= 4, "k >= 4 required (k = " + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(r <= hs.max(), "r <= max(H) required (r = " + num(r) + ")");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, 2), r), 1),
             "max(H) <= (k-2)r - 1 required (max = " + num(hs.max()) + ")");
        rep.terms.push_back({"zero-prefix", zero_prefix_value(hs.min(), r)});
        append_union_terms(rep, k - 1, hs, r, t);
        break;
    }
    case Regime::SplitHigh:
    case Regime::ZeroSplitHigh: {
        const bool z = regime == Regime::ZeroSplitHigh;
        const Int thr = checked_mul(checked_sub(k, z ? 2 : 1), r);
        const int t0 = hs.first_at_least(thr);
        if (t0 < 2 || t0 > t)
            throw HypothesisError("h-set does not straddle the high threshold");
        rep.split_index = t0;
        need(k >= (z ? 4 : 3), (z ? "k >= 4" : "k >= 3") + std::string(" required (k = ") + num(k) + ")");
        need(hs.max() <= checked_mul(checked_sub(k, z ? 1 : 0), r),
             z ? "max(H) <= (k-1)r required (max = " + num(hs.max()) + ")"
               : "max(H) <= kr required (max = " + num(hs.max()) + ")");
        if (z)
            rep.terms.push_back({"zero-prefix", zero_prefix_value(hs.min(), r)});
        const HSpec low = hs.prefix(t0 - 1);
        append_union_terms(rep, z ? k - 1 : k, low, r, low.t());
        rep.terms.push_back({"high-tail", checked_add(checked_sub(static_cast<Int>(t), static_cast<Int>(t0)), 2)});
        break;
    }
    case Regime::AllHigh:
    case Regime::ZeroAllHigh: {
        const bool z = regime == Regime::ZeroAllHigh;
        const Int thr = checked_mul(checked_sub(k, z ? 2 : 1), r);
        need(k >= (z ? 4 : 3), (z ? "k >= 4" : "k >= 3") + std::string(" required (k = ") + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(hs.min() >= thr,
             z ? "min(H) >= (k-2)r required (min = " + num(hs.min()) + ")"
               : "min(H) >= (k-1)r required (min = " + num(hs.min()) + ")");
        need(hs.max() <= checked_mul(checked_sub(k, z ? 1 : 0), r),
             z ? "max(H) <= (k-1)r required (max = " + num(hs.max()) + ")"
               : "max(H) <= kr required (max = " + num(hs.max()) + ")");
        rep.terms.push_back({"h1-fold", fold_lower_value(k, hs.min(), r)});
        rep.terms.push_back({"max-chain", static_cast<Int>(t) - 1});
        break;
    }
    case Regime::UnrestrictedHA: {
        need(r > hs.max(), "r > max(H) required (r = " + num(r) + ")");
        rep.terms.push_back({"max-fold", checked_mul(hs.max(), checked_sub(k, 1))});
        rep.terms.push_back({"per-h", static_cast<Int>(t)});
        break;
    }
    }
    finish(rep);
    return rep;
}

BoundReport classify_regime(Int k, Int r, const HSpec& hs, bool contains_zero) {
    return evaluate_regime(select_regime(k, r, hs, contains_zero), k, hs, r,
                           contains_zero);
}

} // namespace hfold::bounds
