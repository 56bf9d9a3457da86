#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfold/bounds.hpp"
#include "hfold/fold.hpp"
#include "hfold/hspec.hpp"
#include "hfold/int_set.hpp"
#include "hfold/structure.hpp"

namespace hfold::verify {

// How the window that H-sets are drawn from is chosen per (k, r).
enum class HWindowMode {
    Explicit,      // [h_lo, h_hi] from the config
    FullRange,     // [1, kr]
    BelowMain,     // [1, (k-1)r - 1], the positive main window
    BelowZeroMain, // [1, (k-2)r - 1], the zero main window
};

std::string_view to_string(HWindowMode m);
std::optional<HWindowMode> h_window_mode_from_string(std::string_view s);

struct GridConfig {
    Int k_lo = 3, k_hi = 3;
    Int elem_lo = 1, elem_hi = 8; // A is drawn from [elem_lo, elem_hi]
    Int r_lo = 1, r_hi = 1;
    Int t_lo = 2, t_hi = 2;
    HWindowMode h_mode = HWindowMode::FullRange;
    Int h_lo = 1, h_hi = 1; // used only when h_mode == Explicit

    // Keep only instances whose direct-bound regime is listed; empty = all.
    std::vector<bounds::Regime> regime_filter;

    bool check_direct = true;
    std::vector<structure::ClaimKind> inverse_claims;

    bool require_zero = false;    // every A must contain 0
    bool dedupe_dilation = false; // emit only gcd-normalized A
    Int max_instances = 2'000'000;
    int workers = 1;
    Int sample = 0; // 0 = exhaustive; else this many raw draws
    std::uint64_t seed = 0;

    FoldOptions fold;
};

// Throws ConfigError when ranges are empty, the element window cannot hold
// k distinct values, require_zero points outside the window, or there is
// nothing to check.
void validate(const GridConfig& cfg);

struct Instance {
    Int ordinal = 0; // position in the kept stream
    IntSet a;
    HSpec hs;
    Int r = 1;
};

// Upper bound on the raw grid size (before dedupe/regime filtering), used
// for the cap check and for sampling. Throws CapExceededError when the
// count itself overflows.
Int count_instances(const GridConfig& cfg);

// Materializes the kept instances in lexicographic order over
// (r, k, A, H). Throws CapExceededError when the raw grid exceeds
// cfg.max_instances.
std::vector<Instance> enumerate_instances(const GridConfig& cfg);

enum class Verdict { Held, Tight, Violated, Inapplicable, Error };

std::string_view to_string(Verdict v);

struct InstanceRecord {
    Int ordinal = 0;
    IntSet a;
    HSpec hs;
    Int r = 1;
    std::string claim;  // "direct" or a claim name
    std::string regime; // regime name, or "-" when none applies
    Int formula = 0;    // the closed-form side (0 when not computable)
    Int enumerated = 0; // |H^(r)A| from the engine
    Verdict verdict = Verdict::Inapplicable;
    bool conclusion_violated = false; // inverse only: equality held, structure did not
    std::string detail;
};

// One direct-bound check: classify the regime, evaluate the formula, count
// the sumset, compare. Hypothesis failures yield verdict Inapplicable;
// engine overflow/capacity failures yield verdict Error. Never throws.
InstanceRecord check_direct(const Instance& inst, const FoldOptions& opt = {});

// One inverse-claim check via structure::inverse_verdict. Equality with a
// failed structural conclusion keeps verdict Tight and raises
// conclusion_violated. Never throws.
InstanceRecord check_inverse(const Instance& inst, structure::ClaimKind claim,
                             const FoldOptions& opt = {});

struct ClaimTally {
    Int checked = 0;
    Int inapplicable = 0;
    Int held = 0;
    Int tight = 0;
    Int violated = 0;
    Int conclusion_held = 0;
    Int conclusion_violated = 0;
    Int errors = 0;
};

struct VerifyReport {
    GridConfig config;
    Int instances_checked = 0;
    std::map<std::string, ClaimTally> tallies; // keyed by record claim name
    std::vector<InstanceRecord> counterexamples; // violations, incl. conclusion ones
    std::vector<InstanceRecord> error_records;
    std::int64_t wall_ms = 0; // excluded from the report body
    int workers_used = 1;     // excluded from the report body
};

// Runs every configured check over the instance grid, in parallel over
// contiguous chunks when cfg.workers > 1. The returned report's content
// (everything but wall_ms/workers_used) is independent of the worker
// count. Per-instance engine failures become error records, not throws.
// When all_records is non-null it receives every record in stream order.
VerifyReport run_campaign(const GridConfig& cfg,
                          std::vector<InstanceRecord>* all_records = nullptr);

} // namespace hfold::verify
