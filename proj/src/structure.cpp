#include "hfold/structure.hpp"

#include <algorithm>

namespace hfold::structure {

namespace {

std::string num(Int v) { return std::to_string(v); }

// Distinct-summand union bound for H^A (r = 1), both zero variants.
Int restricted_union_value(Int k, const HSpec& hs, bool zero) {
    Int total = static_cast<Int>(hs.t());
    if (zero)
        total = checked_add(total, hs.min());
    for (int i = 1; i <= hs.t(); ++i) {
        const Int gap = checked_sub(hs.h(i), hs.h(i - 1));
        const Int span = zero ? checked_sub(checked_sub(k, hs.h(i)), 1)
                              : checked_sub(k, hs.h(i));
        total = checked_add(total, checked_mul(gap, span));
    }
    return total;
}

} // namespace

APWitness ap_witness(const std::vector<Int>& sorted_vals) {
    APWitness w;
    if (sorted_vals.empty())
        return w;
    w.first = sorted_vals.front();
    w.is_ap = true;
    if (sorted_vals.size() == 1)
        return w;
    w.diff = sorted_vals[1] - sorted_vals[0];
    for (std::size_t i = 2; i < sorted_vals.size(); ++i) {
        if (sorted_vals[i] - sorted_vals[i - 1] != w.diff) {
            w.is_ap = false;
            w.diff = 0;
            return w;
        }
    }
    return w;
}

APWitness ap_witness(const IntSet& a) { return ap_witness(a.elements()); }

std::string_view to_string(ExtremalKind k) {
    switch (k) {
    case ExtremalKind::DirectTight: return "DirectTight";
    case ExtremalKind::FullRangeTight: return "FullRangeTight";
    case ExtremalKind::HighTight: return "HighTight";
    case ExtremalKind::ZeroDirectTight: return "ZeroDirectTight";
    case ExtremalKind::ZeroFullRangeTight: return "ZeroFullRangeTight";
    case ExtremalKind::ZeroHighTight: return "ZeroHighTight";
    case ExtremalKind::NonApGap: return "NonApGap";
    case ExtremalKind::NonApSmall: return "NonApSmall";
    }
    return "?";
}

ExtremalInstance build_extremal(ExtremalKind kind, Int k, Int r) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    std::vector<Int> base;
    auto interval_base = [&](Int lo) {
        base.clear();
        for (Int v = lo; v < lo + k; ++v)
            base.push_back(v);
    };
    const Int rk = checked_mul(r, k);
    ExtremalInstance inst;
    inst.kind = kind;
    inst.r = r;
    switch (kind) {
    case ExtremalKind::DirectTight: {
        if (k < 3)
            throw HypothesisError("needs k >= 3");
        interval_base(1);
        inst.hs = HSpec::interval(1, checked_sub(checked_mul(k - 1, r), 1));
        // rk(k+1)/2 - r - 2
        inst.expected_cardinality =
            checked_sub(checked_sub(checked_mul(rk, k + 1) / 2, r), 2);
        break;
    }
    case ExtremalKind::FullRangeTight: {
        if (k < 3)
            throw HypothesisError("needs k >= 3");
        interval_base(1);
        inst.hs = HSpec::interval(1, rk);
        inst.expected_cardinality = checked_mul(rk, k + 1) / 2;
        break;
    }
    case ExtremalKind::HighTight: {
        if (k < 3)
            throw HypothesisError("needs k >= 3");
        interval_base(1);
        inst.hs = HSpec::interval(checked_mul(k - 1, r), rk);
        inst.expected_cardinality = checked_add(rk, 1);
        break;
    }
    case ExtremalKind::ZeroDirectTight: {
        if (k < 4)
            throw HypothesisError("needs k >= 4");
        interval_base(0);
        inst.hs = HSpec::interval(1, checked_sub(checked_mul(k - 2, r), 1));
        // rk(k-1)/2 - r - 1
        inst.expected_cardinality =
            checked_sub(checked_sub(checked_mul(rk, k - 1) / 2, r), 1);
        break;
    }
    case ExtremalKind::ZeroFullRangeTight: {
        if (k < 4)
            throw HypothesisError("needs k >= 4");
        interval_base(0);
        inst.hs = HSpec::interval(1, checked_mul(k - 1, r));
        inst.expected_cardinality = checked_add(checked_mul(rk, k - 1) / 2, 1);
        break;
    }
    case ExtremalKind::ZeroHighTight: {
        if (k < 4)
            throw HypothesisError("needs k >= 4");
        interval_base(0);
        inst.hs = HSpec::interval(checked_mul(k - 2, r), checked_mul(k - 1, r));
        inst.expected_cardinality =
            checked_add(checked_mul(checked_sub(checked_mul(2, k), 3), r), 1);
        break;
    }
    case ExtremalKind::NonApGap:
    case ExtremalKind::NonApSmall:
        throw HypothesisError("this family has a dedicated builder");
    }
    inst.a = IntSet::from_sorted(std::move(base));
    return inst;
}

ExtremalInstance build_non_ap_gap(const IntSet& a, Int r, bool bottom_pair) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    if (a.size() < 3)
        throw HypothesisError("needs k >= 3");
    if (a.min() < 1)
        throw HypothesisError("base set must be positive");
    if (ap_witness(a).is_ap)
        throw HypothesisError("base set must not be an arithmetic progression");
    const Int rk = checked_mul(r, a.size());
    ExtremalInstance inst;
    inst.kind = ExtremalKind::NonApGap;
    inst.a = a;
    inst.r = r;
    inst.hs = bottom_pair ? HSpec::normalized({1, rk})
                          : HSpec::normalized({checked_sub(rk, 1), rk});
    inst.expected_cardinality = a.size() + 1;
    return inst;
}

ExtremalInstance build_non_ap_small(Int a1, Int a2, const HSpec& hs, bool with_zero) {
    if (a1 < 1 || a2 <= a1)
        throw HypothesisError("needs 0 < a1 < a2");
    if (hs.max() > 3)
        throw HypothesisError("h-set must be a subset of {1,2,3}");
    std::vector<Int> base{a1, a2, checked_add(a1, a2)};
    if (with_zero)
        base.insert(base.begin(), 0);
    ExtremalInstance inst;
    inst.kind = ExtremalKind::NonApSmall;
    inst.a = IntSet::from_sorted(std::move(base));
    inst.hs = hs;
    inst.r = 1;
    // No closed form is claimed for this family, so the reference value
    // comes from the brute-force oracle, not the engine under test.
    std::vector<Int> all;
    for (Int h : hs.values()) {
        const Sums part = enumerate_fold_sumset(inst.a, {h, 1});
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    inst.expected_cardinality = static_cast<Int>(all.size());
    return inst;
}

std::string_view to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::SingleFold: return "single-fold";
    case ClaimKind::UnionUnbounded: return "union-fold";
    case ClaimKind::UnionDistinct: return "restricted-union";
    case ClaimKind::Main: return "main";
    case ClaimKind::SplitHigh: return "split-high";
    case ClaimKind::TopSplit: return "top-split";
    case ClaimKind::AllHigh: return "all-high";
    case ClaimKind::ZeroMain: return "zero-main";
    case ClaimKind::ZeroSplitHigh: return "zero-split-high";
    case ClaimKind::ZeroTopSplit: return "zero-top-split";
    case ClaimKind::ZeroAllHigh: return "zero-all-high";
    }
    return "?";
}

std::optional<ClaimKind> claim_from_string(std::string_view s) {
    for (ClaimKind c :
         {ClaimKind::SingleFold, ClaimKind::UnionUnbounded, ClaimKind::UnionDistinct,
          ClaimKind::Main, ClaimKind::SplitHigh, ClaimKind::TopSplit,
          ClaimKind::AllHigh, ClaimKind::ZeroMain, ClaimKind::ZeroSplitHigh,
          ClaimKind::ZeroTopSplit, ClaimKind::ZeroAllHigh})
        if (to_string(c) == s)
            return c;
    return std::nullopt;
}

ClaimKind claim_for_regime(bounds::Regime regime, const HSpec& hs, Int k, Int r) {
    using bounds::Regime;
    switch (regime) {
    case Regime::MainTheorem: return ClaimKind::Main;
    case Regime::AllHigh: return ClaimKind::AllHigh;
    case Regime::ZeroMain: return ClaimKind::ZeroMain;
    case Regime::ZeroAllHigh: return ClaimKind::ZeroAllHigh;
    case Regime::UnrestrictedHA: return ClaimKind::UnionUnbounded;
    case Regime::SplitHigh: {
        const int t0 = hs.first_at_least(checked_mul(k - 1, r));
        return t0 == hs.t() ? ClaimKind::TopSplit : ClaimKind::SplitHigh;
    }
    case Regime::ZeroSplitHigh: {
        const int t0 = hs.first_at_least(checked_mul(k - 2, r));
        return t0 == hs.t() ? ClaimKind::ZeroTopSplit : ClaimKind::ZeroSplitHigh;
    }
    }
    return ClaimKind::Main;
}

InverseReport inverse_verdict(const IntSet& a, const HSpec& hs, Int r,
                              ClaimKind claim, const FoldOptions& opt) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    InverseReport rep;
    rep.claim = claim;
    auto need = [&rep](bool ok, std::string msg) {
        if (!ok) {
            rep.hypotheses_ok = false;
            rep.violations.push_back(std::move(msg));
        }
    };
    auto conclude = [&rep](bool ok, std::string msg) {
        if (!ok)
            rep.conclusion_failures.push_back(std::move(msg));
    };

    const Int k = a.size();
    const int t = hs.t();
    const bool zero_claim =
        claim == ClaimKind::ZeroMain || claim == ClaimKind::ZeroSplitHigh ||
        claim == ClaimKind::ZeroTopSplit || claim == ClaimKind::ZeroAllHigh;

    rep.full_a_ap = ap_witness(a);
    rep.h_ap = ap_witness(hs.values());
    std::optional<IntSet> aprime;
    if (zero_claim || (claim == ClaimKind::UnionDistinct && a.contains_zero())) {
        if (a.contains_zero() && a.size() >= 2)
            aprime = a.without_zero();
    }
    rep.a_ap = (zero_claim && aprime) ? ap_witness(*aprime) : rep.full_a_ap;

    // Hypotheses and the claim's equality expression.
    switch (claim) {
    case ClaimKind::SingleFold: {
        need(t == 1, "claim takes a single fold count (t = " + num(t) + ")");
        const Int h = hs.min();
        need(k >= 3, "k >= 3 required (k = " + num(k) + ")");
        need(h >= 2, "h >= 2 required (h = " + num(h) + ")");
        need(r <= h, "r <= h required (r = " + num(r) + ")");
        need(h <= checked_sub(checked_mul(k, r), 2),
             "h <= kr - 2 required (h = " + num(h) + ")");
        need(!(k == 4 && h == 2 && r == 1), "(k,h,r) = (4,2,1) is excluded");
        rep.bound = bounds::fold_lower_value(k, h, r);
        break;
    }
    case ClaimKind::UnionUnbounded: {
        need(a.min() >= 1, "A must consist of positive integers");
        need(k >= 2, "k >= 2 required (k = " + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(r >= hs.max(),
             "r >= max(H) required so H^(r)A = HA (r = " + num(r) + ")");
        rep.bound = checked_add(checked_mul(hs.max(), checked_sub(k, 1)),
                                static_cast<Int>(t));
        break;
    }
    case ClaimKind::UnionDistinct: {
        const bool zero = a.contains_zero();
        need(a.min() >= 0, "A must consist of nonnegative integers");
        need(r == 1, "r = 1 required (r = " + num(r) + ")");
        if (zero) {
            need(k >= 7, "k >= 7 required when 0 is in A (k = " + num(k) + ")");
            need(hs.max() <= checked_sub(k, 2),
                 "max(H) <= k - 2 required (max = " + num(hs.max()) + ")");
        } else {
            need(k >= 6, "k >= 6 required (k = " + num(k) + ")");
            need(hs.max() <= checked_sub(k, 1),
                 "max(H) <= k - 1 required (max = " + num(hs.max()) + ")");
        }
        rep.bound = restricted_union_value(k, hs, zero);
        break;
    }
    case ClaimKind::Main: {
        need(a.min() >= 1, "A must consist of positive integers");
        need(k >= 6, "k >= 6 required (k = " + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(r <= hs.max(), "r <= max(H) required (r = " + num(r) + ")");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, 1), r), 1),
             "max(H) <= (k-1)r - 1 required (max = " + num(hs.max()) + ")");
        rep.bound = bounds::union_lower_value(k, hs, r);
        break;
    }
    case ClaimKind::SplitHigh:
    case ClaimKind::ZeroSplitHigh: {
        const bool z = claim == ClaimKind::ZeroSplitHigh;
        const Int kk = z ? k - 1 : k;
        const Int thr = checked_mul(checked_sub(k, z ? 2 : 1), r);
        const int t0 = hs.first_at_least(thr);
        if (z)
            need(a.contains_zero() && a.min() == 0,
                 "A must be nonnegative with 0 in A");
        else
            need(a.min() >= 1, "A must consist of positive integers");
        need(k >= (z ? 7 : 6), (z ? "k >= 7" : "k >= 6") +
                                   std::string(" required (k = ") + num(k) + ")");
        need(t0 >= 2, "at least one fold count must sit below the threshold");
        need(t0 <= t - 1, "at least one fold count must sit above the threshold, "
                          "with the largest not alone (use the top-split claim)");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, z ? 1 : 0), r), 1),
             z ? "max(H) < (k-1)r required (max = " + num(hs.max()) + ")"
               : "max(H) < kr required (max = " + num(hs.max()) + ")");
        need(!(t0 == 2 && hs.min() == 1), "(t0, h1) = (2, 1) is excluded");
        if (t0 >= 2) {
            const HSpec low = hs.prefix(std::min(t0 - 1, t));
            need(r <= low.max(),
                 "r <= h_{t0-1} required for the prefix bound machinery");
            Int b = bounds::union_lower_value(kk, low, r);
            b = checked_add(b, static_cast<Int>(t - t0) + 2);
            if (z)
                b = checked_add(b, bounds::zero_prefix_value(hs.min(), r));
            rep.bound = b;
        }
        break;
    }
    case ClaimKind::TopSplit:
    case ClaimKind::ZeroTopSplit: {
        const bool z = claim == ClaimKind::ZeroTopSplit;
        const Int kk = z ? k - 1 : k;
        const Int thr = checked_mul(checked_sub(k, z ? 2 : 1), r);
        if (z)
            need(a.contains_zero() && a.min() == 0,
                 "A must be nonnegative with 0 in A");
        else
            need(a.min() >= 1, "A must consist of positive integers");
        need(k >= (z ? 7 : 6), (z ? "k >= 7" : "k >= 6") +
                                   std::string(" required (k = ") + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        if (t >= 2) {
            need(hs.h(t - 1) <= checked_sub(thr, 1),
                 "all but the largest fold count must sit below the threshold");
            need(hs.max() >= thr, "the largest fold count must sit at or above "
                                  "the threshold");
            need(!(t == 2 && hs.min() == 1), "(t, h1) = (2, 1) is excluded");
            const HSpec low = hs.without_max();
            need(r <= low.max(),
                 "r <= h_{t-1} required for the prefix bound machinery");
            Int b = bounds::union_lower_value(kk, low, r);
            b = checked_add(b, 2);
            if (z)
                b = checked_add(b, bounds::zero_prefix_value(hs.min(), r));
            rep.bound = b;
        }
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, z ? 1 : 0), r), 1),
             z ? "max(H) < (k-1)r required (max = " + num(hs.max()) + ")"
               : "max(H) < kr required (max = " + num(hs.max()) + ")");
        break;
    }
    case ClaimKind::AllHigh:
    case ClaimKind::ZeroAllHigh: {
        const bool z = claim == ClaimKind::ZeroAllHigh;
        const Int thr = checked_mul(checked_sub(k, z ? 2 : 1), r);
        if (z)
            need(a.contains_zero() && a.min() == 0,
                 "A must be nonnegative with 0 in A");
        else
            need(a.min() >= 1, "A must consist of positive integers");
        need(r >= 2, "r >= 2 required (r = " + num(r) + ")");
        need(k >= (z ? 7 : 6), (z ? "k >= 7" : "k >= 6") +
                                   std::string(" required (k = ") + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(hs.min() >= thr,
             z ? "min(H) > (k-2)r - 1 required (min = " + num(hs.min()) + ")"
               : "min(H) > (k-1)r - 1 required (min = " + num(hs.min()) + ")");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, z ? 1 : 0), r), 1),
             z ? "max(H) < (k-1)r required (max = " + num(hs.max()) + ")"
               : "max(H) < kr required (max = " + num(hs.max()) + ")");
        rep.bound = checked_add(bounds::fold_lower_value(k, hs.min(), r),
                                static_cast<Int>(t) - 1);
        break;
    }
    case ClaimKind::ZeroMain: {
        need(a.contains_zero() && a.min() == 0, "A must be nonnegative with 0 in A");
        need(k >= 7, "k >= 7 required (k = " + num(k) + ")");
        need(t >= 2, "t >= 2 required (t = " + num(t) + ")");
        need(r <= hs.max(), "r <= max(H) required (r = " + num(r) + ")");
        need(hs.max() <= checked_sub(checked_mul(checked_sub(k, 2), r), 1),
             "max(H) <= (k-2)r - 1 required (max = " + num(hs.max()) + ")");
        if (k >= 2)
            rep.bound = checked_add(bounds::zero_prefix_value(hs.min(), r),
                                    bounds::union_lower_value(k - 1, hs, r));
        break;
    }
    }

    try {
        rep.cardinality = static_cast<Int>(union_sumset(a, hs, r, opt).size());
    } catch (const EmptyResultError&) {
        rep.cardinality = 0;
    }
    rep.equality = rep.bound != 0 && rep.cardinality == rep.bound;

    if (!rep.hypotheses_ok || !rep.equality) {
        rep.conclusion_ok = false;
        return rep;
    }

    // Equality fired under the claim's hypotheses: judge the structure.
    const Int d = rep.h_ap.diff;
    switch (claim) {
    case ClaimKind::SingleFold:
        conclude(rep.a_ap.is_ap, "A is not an arithmetic progression");
        break;
    case ClaimKind::UnionUnbounded:
        conclude(rep.h_ap.is_ap, "H is not an arithmetic progression");
        conclude(rep.a_ap.is_ap, "A is not an arithmetic progression");
        if (rep.h_ap.is_ap && rep.a_ap.is_ap)
            conclude(rep.a_ap.diff == checked_mul(d, a.min()),
                     "diff(A) != d * min(A)");
        break;
    case ClaimKind::UnionDistinct:
        conclude(rep.h_ap.is_ap && (t == 1 || rep.h_ap.diff == 1),
                 "H is not the interval h1 + [0, t-1]");
        if (a.contains_zero())
            conclude(rep.full_a_ap.is_ap, "A is not of the form d * [0, k-1]");
        else
            conclude(rep.a_ap.is_ap && rep.a_ap.diff == rep.a_ap.first,
                     "A is not of the form d * [1, k]");
        break;
    case ClaimKind::Main:
    case ClaimKind::SplitHigh:
    case ClaimKind::TopSplit:
    case ClaimKind::AllHigh: {
        const Int cap = claim == ClaimKind::AllHigh ? r - 1 : r;
        conclude(rep.h_ap.is_ap, "H is not an arithmetic progression");
        if (rep.h_ap.is_ap) {
            conclude(d <= cap, "common difference of H exceeds " +
                                   std::string(claim == ClaimKind::AllHigh ? "r - 1" : "r"));
            conclude(rep.a_ap.is_ap, "A is not an arithmetic progression");
            if (rep.a_ap.is_ap)
                conclude(rep.a_ap.diff == checked_mul(d, a.min()),
                         "diff(A) != d * min(A)");
        }
        break;
    }
    case ClaimKind::ZeroMain:
    case ClaimKind::ZeroSplitHigh:
    case ClaimKind::ZeroTopSplit:
    case ClaimKind::ZeroAllHigh: {
        const Int cap = claim == ClaimKind::ZeroAllHigh ? r - 1 : r;
        conclude(rep.h_ap.is_ap, "H is not an arithmetic progression");
        conclude(aprime.has_value(), "A \\ {0} is empty");
        if (rep.h_ap.is_ap && aprime) {
            conclude(d <= cap, "common difference of H exceeds " +
                                   std::string(claim == ClaimKind::ZeroAllHigh ? "r - 1" : "r"));
            conclude(rep.a_ap.is_ap, "A \\ {0} is not an arithmetic progression");
            if (rep.a_ap.is_ap)
                conclude(rep.a_ap.diff == checked_mul(d, aprime->min()),
                         "diff(A \\ {0}) != d * min(A \\ {0})");
            // The refined conclusion when min(H) > 1; not claimed for the
            // all-high window.
            if (claim != ClaimKind::ZeroAllHigh && hs.min() > 1) {
                conclude(d == 1, "min(H) > 1 forces d = 1");
                conclude(rep.full_a_ap.is_ap && rep.full_a_ap.first == 0 &&
                             rep.full_a_ap.diff == aprime->min(),
                         "A is not min(A \\ {0}) * [0, k-1]");
            }
        }
        break;
    }
    }
    rep.conclusion_ok = rep.conclusion_failures.empty();
    return rep;
}

} // namespace hfold::structure
