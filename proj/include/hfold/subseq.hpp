#pragma once

#include <optional>

#include "hfold/fold.hpp"
#include "hfold/hspec.hpp"
#include "hfold/int_set.hpp"

namespace hfold::subseq {

// The sequence made of k distinct terms, each repeated exactly r times.
struct RepSequence {
    IntSet base;
    Int r = 1;

    RepSequence(IntSet b, Int reps) : base(std::move(b)), r(reps) {
        if (r < 1)
            throw OutOfRangeError("repetition count must be positive");
    }

    Int length() const { return checked_mul(static_cast<Int>(base.size()), r); }
};

// Sums of subsets of A of size >= alpha. Equals [alpha, k]^(1)A.
// Throws BadAlphaError unless 1 <= alpha <= k.
Sums subset_sum_set(const IntSet& a, Int alpha = 1, const FoldOptions& opt = {});

// Sums of subsequences of length >= alpha of the repeated sequence.
// Equals [alpha, kr]^(r)A over the base set. Throws BadAlphaError unless
// 1 <= alpha <= kr.
Sums subsequence_sum_set(const RepSequence& s, Int alpha = 1,
                         const FoldOptions& opt = {});

// Least possible number of distinct subsequence sums over all nonempty
// subsequences: rk(k+1)/2 for positive bases (k >= 3), or 1 + rk(k-1)/2
// when 0 is a term (k >= 4). Throws HypothesisError below those sizes.
Int full_sum_lower(Int k, Int r, bool contains_zero);

// Least possible number of distinct sums of subsequences of length >= alpha:
//   positive base:  rk(k+1)/2 - rm(m+1)/2 + m(mr - alpha) + 1
//   base with 0:    rk(k-1)/2 - rm(m-1)/2 + (m-1)(mr - alpha) + 1
// where m is the unique integer with (m-1)r <= alpha < mr. Throws
// HypothesisError unless 1 <= alpha <= kr - 1 (so that m lands in [1, k]).
Int partial_sum_lower(Int k, Int r, Int alpha, bool contains_zero);

// Shape detector for the bases that meet the full-sum bound with equality:
// returns d when base = d * [1, k] (positive case) or d * [0, k-1] (zero
// case); nullopt when the base has neither shape.
std::optional<Int> dilated_interval_step(const IntSet& base);

// Same detector, gated by the sizes at which the equality characterization
// is actually claimed (k >= 6 positive, k >= 7 with zero). Throws
// HypothesisError below those sizes.
std::optional<Int> full_sum_extremal_step(const IntSet& base);

} // namespace hfold::subseq
