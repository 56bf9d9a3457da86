#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfold/hspec.hpp"

namespace hfold::bounds {

// Which closed-form lower bound applies to |H^(r)A|, decided purely from
// (k, r, H, whether 0 is in A). The split regimes carry the index of the
// first fold count at or above the high threshold.
enum class Regime {
    MainTheorem,    // max(H) <= (k-1)r - 1, 0 not in A
    SplitHigh,      // H straddles (k-1)r - 1, 0 not in A
    AllHigh,        // min(H) >= (k-1)r, 0 not in A
    ZeroMain,       // max(H) <= (k-2)r - 1, 0 in A
    ZeroSplitHigh,  // H straddles (k-2)r - 1, 0 in A
    ZeroAllHigh,    // min(H) >= (k-2)r, 0 in A
    UnrestrictedHA, // r > max(H): H^(r)A degenerates to the unrestricted HA
};

std::string_view to_string(Regime r);
std::optional<Regime> regime_from_string(std::string_view s);

struct BoundTerm {
    std::string label;
    Int value = 0;
};

// A fully evaluated lower bound: the regime, the value, an additive
// breakdown (terms always sum to value), and an honest record of any
// hypothesis the instance fails. The value is still computed in that case;
// callers decide whether to trust it.
struct BoundReport {
    Regime regime = Regime::MainTheorem;
    std::optional<int> split_index; // t_0 for the split regimes
    Int value = 0;
    std::vector<BoundTerm> terms;
    bool hypotheses_ok = true;
    std::vector<std::string> violations;
};

// ---- formula values (no hypothesis gating) ----
// These evaluate the raw expressions wherever they are mathematically
// defined, so reports can always show a number next to a violation list.

// m-split expression m*r*(k-m) + (h-m*r)*(k-2m-1) + 1 with m = floor(h/r).
Int fold_lower_value(Int k, Int h, Int r);

// Single-sum form of the union bound. Total for every r >= 1: when
// r > max(H) it collapses to the unrestricted value max(H)*(k-1) + t.
Int union_lower_value(Int k, const HSpec& hs, Int r);

// Contribution of the zero element ahead of the positive part:
// m1*r*(m - m1 + 1) + (h1 - m1*r)*(m - 2*m1), m1 = floor(h1/r), m = ceil.
Int zero_prefix_value(Int h1, Int r);

// ---- strict operations ----

// Union bound in its two-term pivot form: requires r <= max(H) (else
// BadPivotError). Equal to union_lower_value whenever defined.
Int generalized_union_lower(Int k, const HSpec& hs, Int r);

// Same quantity as a single sum over i = 1..t; total, see union_lower_value.
Int generalized_union_lower_flat(Int k, const HSpec& hs, Int r);

// Single-fold bound; throws HypothesisError unless 1 <= r <= h <= k*r.
Int generalized_fold_lower(Int k, Int h, Int r);

// The limiting special cases this work interpolates between.
enum class ClassicalKind {
    HFold,               // |hA| >= h*k - h + 1
    RestrictedHFold,     // |h^A| >= h*k - h*h + 1, needs h <= k
    UnionFold,           // |HA| >= max(H)*(k-1) + t
    RestrictedUnionFold, // |H^A|, forms differ with 0 in A
};

Int classical_lower(ClassicalKind kind, Int k, Int h);
Int classical_lower(ClassicalKind kind, Int k, const HSpec& hs,
                    bool contains_zero = false);

// Main-regime bound when 0 is in A: zero prefix plus the union bound over
// the k-1 positive elements. Throws HypothesisError unless k >= 4, t >= 2
// and r <= max(H) <= (k-2)r - 1.
Int zero_union_lower(Int k, const HSpec& hs, Int r);

// Bounds for the straddling and all-high windows. `kind` must be one of
// SplitHigh, AllHigh, ZeroSplitHigh, ZeroAllHigh; the split kinds take the
// threshold index t_0 (computed from H when omitted).
Int high_regime_lower(Regime kind, Int k, const HSpec& hs, Int r,
                      std::optional<int> t0 = {});

// ---- classification ----

// Threshold placement only; throws UnclassifiableError when even min(H)
// exceeds every nonempty fold count.
Regime select_regime(Int k, Int r, const HSpec& hs, bool contains_zero);

// Evaluate one regime's bound with full hypothesis accounting.
BoundReport evaluate_regime(Regime regime, Int k, const HSpec& hs, Int r,
                            bool contains_zero);

// select_regime + evaluate_regime.
BoundReport classify_regime(Int k, Int r, const HSpec& hs, bool contains_zero);

} // namespace hfold::bounds
