#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hfold/bounds.hpp"
#include "hfold/fold.hpp"

using namespace hfold;
using namespace hfold::bounds;

namespace {

HSpec hs(std::vector<Int> v) { return HSpec::normalized(std::move(v)); }

// All t-subsets of [1, hi].
std::vector<std::vector<Int>> h_sets(Int hi, int t) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int next) -> void {
        if (static_cast<int>(cur.size()) == t) {
            out.push_back(cur);
            return;
        }
        for (Int v = next; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

TEST_CASE("frozen single-fold bound values") {
    CHECK(fold_lower_value(5, 3, 2) == 11);
    CHECK(fold_lower_value(5, 6, 2) == 13);
    CHECK(fold_lower_value(5, 8, 2) == 9);
    // tightness on the canonical interval base
    const IntSet a = normalize_set({1, 2, 3, 4, 5});
    CHECK(static_cast<Int>(fold_sumset(a, {3, 2}).size()) ==
          fold_lower_value(5, 3, 2));
}

TEST_CASE("frozen union bound values") {
    CHECK(union_lower_value(5, hs({2, 3}), 2) == 13);
    CHECK(union_lower_value(5, hs({1, 2}), 1) == 9);
    CHECK(union_lower_value(4, hs({1, 3}), 3) == 11);
    CHECK(union_lower_value(5, hs({3, 4, 5}), 2) == 18);
    CHECK(union_lower_value(6, hs({2, 3}), 2) == 16);
    CHECK(generalized_union_lower(5, hs({2, 3}), 2) == 13);
}

TEST_CASE("frozen zero-window values") {
    CHECK(zero_prefix_value(1, 2) == 1);
    CHECK(zero_prefix_value(5, 2) == 7);
    CHECK(zero_union_lower(5, hs({1, 2, 3, 4, 5}), 2) == 17);
    CHECK(zero_union_lower(6, hs({3, 4}), 2) == 19);
}

TEST_CASE("frozen high-window values") {
    CHECK(high_regime_lower(Regime::SplitHigh, 5, hs({2, 3, 9}), 2, 3) == 15);
    CHECK(high_regime_lower(Regime::AllHigh, 5, hs({8, 9, 10}), 2) == 11);
    CHECK(high_regime_lower(Regime::ZeroAllHigh, 5, hs({6, 7, 8}), 2) == 15);
    CHECK_THROWS_AS(high_regime_lower(Regime::SplitHigh, 5, hs({2, 3, 9}), 2, 2),
                    HypothesisError);
    CHECK_THROWS_AS(high_regime_lower(Regime::MainTheorem, 5, hs({2, 3}), 2),
                    HypothesisError);
}

TEST_CASE("pivot and flat forms agree whenever the pivot exists") {
    for (Int k = 3; k <= 8; ++k)
        for (int t = 1; t <= 3; ++t)
            for (const auto& v : h_sets(12, t)) {
                const HSpec h = hs(std::vector<Int>(v));
                for (Int r = 1; r <= h.max(); ++r) {
                    CAPTURE(k);
                    CAPTURE(r);
                    REQUIRE(generalized_union_lower(k, h, r) ==
                            generalized_union_lower_flat(k, h, r));
                }
            }
}

TEST_CASE("r = 1 reduces to the distinct-summand union bound") {
    for (Int k = 3; k <= 8; ++k)
        for (int t = 1; t <= 3; ++t)
            for (const auto& v : h_sets(k, t)) {
                const HSpec h = hs(std::vector<Int>(v));
                REQUIRE(union_lower_value(k, h, 1) ==
                        classical_lower(ClassicalKind::RestrictedUnionFold, k, h,
                                        false));
            }
}

TEST_CASE("r >= max(H) reduces to the unbounded union bound") {
    for (Int k = 3; k <= 8; ++k)
        for (int t = 1; t <= 3; ++t)
            for (const auto& v : h_sets(9, t)) {
                const HSpec h = hs(std::vector<Int>(v));
                for (Int r : {h.max(), h.max() + 1, h.max() + 5})
                    REQUIRE(union_lower_value(k, h, r) ==
                            classical_lower(ClassicalKind::UnionFold, k, h,
                                            false));
            }
}

TEST_CASE("singleton H reduces to the single-fold bound") {
    for (Int k = 3; k <= 8; ++k)
        for (Int h = 1; h <= 10; ++h)
            for (Int r = 1; r <= h; ++r)
                REQUIRE(union_lower_value(k, hs({h}), r) ==
                        fold_lower_value(k, h, r));
}

TEST_CASE("classical bound values") {
    CHECK(classical_lower(ClassicalKind::HFold, 5, 3) == 13);
    CHECK(classical_lower(ClassicalKind::RestrictedHFold, 5, 3) == 7);
    CHECK(classical_lower(ClassicalKind::UnionFold, 5, hs({2, 3}), false) == 14);
    CHECK(classical_lower(ClassicalKind::RestrictedUnionFold, 6, hs({1, 3}),
                          false) == 13);
    CHECK(classical_lower(ClassicalKind::RestrictedUnionFold, 7, hs({2, 3}),
                          true) == 15);
    CHECK_THROWS_AS(classical_lower(ClassicalKind::RestrictedHFold, 4, 5),
                    HypothesisError);
    CHECK_THROWS_AS(classical_lower(ClassicalKind::RestrictedUnionFold, 4,
                                    hs({2, 5}), false),
                    HypothesisError);
}

TEST_CASE("regime selection") {
    CHECK(select_regime(5, 2, hs({2, 3}), false) == Regime::MainTheorem);
    CHECK(select_regime(5, 2, hs({2, 3, 9}), false) == Regime::SplitHigh);
    CHECK(select_regime(5, 2, hs({8, 9, 10}), false) == Regime::AllHigh);
    CHECK(select_regime(5, 2, hs({1, 2, 3, 4, 5}), true) == Regime::ZeroMain);
    CHECK(select_regime(5, 2, hs({2, 3, 7}), true) == Regime::ZeroSplitHigh);
    CHECK(select_regime(5, 2, hs({6, 7}), true) == Regime::ZeroAllHigh);
    CHECK(select_regime(5, 3, hs({1, 2}), false) == Regime::UnrestrictedHA);
    CHECK_THROWS_AS(select_regime(5, 2, hs({11, 12}), false),
                    UnclassifiableError);
    CHECK_THROWS_AS(select_regime(5, 2, hs({9, 10}), true), UnclassifiableError);
}

TEST_CASE("boundary fold counts move between regimes") {
    // (k-1)r - 1 = 7 is the last main-window count at k = 5, r = 2
    CHECK(select_regime(5, 2, hs({6, 7}), false) == Regime::MainTheorem);
    CHECK(select_regime(5, 2, hs({7, 8}), false) == Regime::SplitHigh);
    CHECK(select_regime(5, 2, hs({8, 9}), false) == Regime::AllHigh);
    // zero case: (k-2)r - 1 = 5
    CHECK(select_regime(5, 2, hs({4, 5}), true) == Regime::ZeroMain);
    CHECK(select_regime(5, 2, hs({5, 6}), true) == Regime::ZeroSplitHigh);
}

TEST_CASE("evaluated reports expose a term breakdown that sums to the value") {
    const struct {
        Int k, r;
        std::vector<Int> h;
        bool zero;
    } rows[] = {
        {5, 2, {2, 3}, false},        {5, 2, {2, 3, 9}, false},
        {5, 2, {8, 9, 10}, false},    {5, 2, {1, 2, 3, 4, 5}, true},
        {5, 2, {2, 3, 7}, true},      {5, 2, {6, 7}, true},
        {5, 3, {1, 2}, false},        {7, 1, {2, 4}, false},
    };
    for (const auto& row : rows) {
        const auto rep = classify_regime(row.k, row.r, hs(std::vector<Int>(row.h)),
                                         row.zero);
        Int total = 0;
        for (const auto& term : rep.terms)
            total += term.value;
        CAPTURE(row.k);
        REQUIRE(total == rep.value);
        REQUIRE(rep.hypotheses_ok);
    }
}

TEST_CASE("unrestricted regime value is the unbounded union bound") {
    const auto rep = evaluate_regime(Regime::UnrestrictedHA, 5, hs({1, 2}), 3,
                                     false);
    CHECK(rep.value == 10);
    // tight on the interval base
    const IntSet a = normalize_set({1, 2, 3, 4, 5});
    CHECK(static_cast<Int>(union_sumset(a, hs({1, 2}), 3).size()) == 10);
}

TEST_CASE("strict forms reject broken hypotheses") {
    CHECK_THROWS_AS(generalized_union_lower(5, hs({1, 2}), 3), BadPivotError);
    CHECK_THROWS_AS(generalized_fold_lower(5, 2, 3), HypothesisError);
    CHECK_THROWS_AS(generalized_fold_lower(3, 10, 3), HypothesisError);
    CHECK(generalized_fold_lower(5, 3, 2) == 11);
    CHECK_THROWS_AS(zero_union_lower(3, hs({1, 2}), 1), HypothesisError);
    CHECK_THROWS_AS(zero_union_lower(6, hs({3}), 2), HypothesisError);
    CHECK_THROWS_AS(zero_union_lower(6, hs({3, 4}), 5), HypothesisError);
    CHECK_THROWS_AS(zero_union_lower(6, hs({3, 8}), 2), HypothesisError);
    CHECK_THROWS_AS(evaluate_regime(Regime::SplitHigh, 5, hs({1, 2}), 2, false),
                    HypothesisError);
}

TEST_CASE("hypothesis violations are recorded, not fatal, in reports") {
    // t = 1 in the main window: formula still evaluates, violation recorded
    const auto rep = classify_regime(5, 2, hs({3}), false);
    CHECK(rep.regime == Regime::MainTheorem);
    CHECK(!rep.hypotheses_ok);
    CHECK(rep.value == fold_lower_value(5, 3, 2));
    CHECK(!rep.violations.empty());
    // 0 in A outside any zero window
    const auto rep2 = evaluate_regime(Regime::MainTheorem, 5, hs({2, 3}), 2, true);
    CHECK(!rep2.hypotheses_ok);
}

TEST_CASE("main-window bound holds on interval bases, tight for interval H") {
    for (Int k = 4; k <= 6; ++k) {
        std::vector<Int> base;
        for (Int v = 1; v <= k; ++v)
            base.push_back(v);
        const IntSet a = IntSet::from_sorted(std::move(base));
        for (Int r = 1; r <= 3; ++r) {
            const Int cap = (k - 1) * r - 1;
            for (int t = 2; t <= 3; ++t)
                for (const auto& v : h_sets(cap, t)) {
                    const HSpec h = hs(std::vector<Int>(v));
                    if (h.max() < r)
                        continue;
                    const Int bound = union_lower_value(k, h, r);
                    const Int got =
                        static_cast<Int>(union_sumset(a, h, r).size());
                    CAPTURE(k);
                    CAPTURE(r);
                    REQUIRE(got >= bound);
                    // consecutive fold counts achieve the bound exactly
                    if (h.max() - h.min() == static_cast<Int>(t) - 1)
                        REQUIRE(got == bound);
                }
        }
    }
}
