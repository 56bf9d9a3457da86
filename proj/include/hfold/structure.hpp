#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfold/bounds.hpp"
#include "hfold/fold.hpp"
#include "hfold/hspec.hpp"
#include "hfold/int_set.hpp"

namespace hfold::structure {

// Arithmetic-progression witness. Sets of size 1 and 2 are progressions by
// convention (diff 0 for singletons, the gap otherwise).
struct APWitness {
    bool is_ap = false;
    Int first = 0;
    Int diff = 0;
};

APWitness ap_witness(const IntSet& a);
APWitness ap_witness(const std::vector<Int>& sorted_vals);

// The families that meet their lower bounds exactly, plus the two
// non-progression families used to probe inverse statements.
enum class ExtremalKind {
    DirectTight,       // A=[1,k], H=[1,(k-1)r-1]          -> rk(k+1)/2 - r - 2
    FullRangeTight,    // A=[1,k], H=[1,rk]                -> rk(k+1)/2
    HighTight,         // A=[1,k], H=[(k-1)r,kr]           -> kr + 1
    ZeroDirectTight,   // A=[0,k-1], H=[1,(k-2)r-1]        -> rk(k-1)/2 - r - 1
    ZeroFullRangeTight,// A=[0,k-1], H=[1,(k-1)r]          -> rk(k-1)/2 + 1
    ZeroHighTight,     // A=[0,k-1], H=[(k-2)r,(k-1)r]     -> (2k-3)r + 1
    NonApGap,          // non-AP A, H={1,rk} or {rk-1,rk}  -> k + 1
    NonApSmall,        // A={a1,a2,a1+a2} (+0), H in {1,2,3}, r=1
};

std::string_view to_string(ExtremalKind k);

struct ExtremalInstance {
    ExtremalKind kind;
    IntSet a;
    HSpec hs;
    Int r = 1;
    Int expected_cardinality = 0;
};

// The six closed-form families. Thresholds: k >= 3 for the positive kinds,
// k >= 4 for the zero kinds, and the h-window must be nonempty; throws
// HypothesisError otherwise. NonAp kinds have their own builders below.
ExtremalInstance build_extremal(ExtremalKind kind, Int k, Int r);

// Non-AP base with a gap H: H = {1, rk} (bottom_pair) or {rk-1, rk}.
// Requires a to not be an AP.
ExtremalInstance build_non_ap_gap(const IntSet& a, Int r, bool bottom_pair);

// A = {a1, a2, a1+a2} (optionally with 0), r = 1, H a subset of {1,2,3};
// the expected cardinality is computed by the enumeration oracle because
// no closed form is claimed for this family.
ExtremalInstance build_non_ap_small(Int a1, Int a2, const HSpec& hs, bool with_zero);

// Inverse statements: each says "equality at this bound forces this
// structure". The names follow the bound regime the claim belongs to.
enum class ClaimKind {
    SingleFold,     // |h^(r)A| = fold bound       -> A is an AP
    UnionUnbounded, // r >= max(H), |HA| = bound   -> H and A are APs, tied
    UnionDistinct,  // r = 1, |H^A| = bound        -> H an interval, A = min(A)*[1,k]
    Main,           // main window equality        -> H AP with d <= r, A AP with diff d*min(A)
    SplitHigh,      // straddle, several h high
    TopSplit,       // straddle, only h_t high
    AllHigh,        // all h high, d <= r-1
    ZeroMain,       // 0 in A variants of the above
    ZeroSplitHigh,
    ZeroTopSplit,
    ZeroAllHigh,
};

std::string_view to_string(ClaimKind k);
std::optional<ClaimKind> claim_from_string(std::string_view s);

// The claim a direct-bound regime naturally feeds, given H's shape.
ClaimKind claim_for_regime(bounds::Regime regime, const HSpec& hs, Int k, Int r);

// One inverse check, fully recorded: hypothesis accounting, the bound and
// the exact cardinality, whether equality holds, the progression structure
// found, and whether the claimed conclusion holds. Conclusions are judged
// only when the hypotheses hold and equality fires; otherwise the fields
// simply report what the sets look like.
struct InverseReport {
    ClaimKind claim = ClaimKind::Main;
    bool hypotheses_ok = true;
    std::vector<std::string> violations;
    Int bound = 0;
    Int cardinality = 0;
    bool equality = false;
    APWitness h_ap;      // over H
    APWitness a_ap;      // over A, or A \ {0} for the zero claims
    APWitness full_a_ap; // over A including 0 (equals a_ap for positive claims)
    bool conclusion_ok = false;
    std::vector<std::string> conclusion_failures;
};

InverseReport inverse_verdict(const IntSet& a, const HSpec& hs, Int r,
                              ClaimKind claim, const FoldOptions& opt = {});

} // namespace hfold::structure
