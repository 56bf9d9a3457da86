#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hfold/hspec.hpp"
#include "hfold/int_set.hpp"

namespace hfold {

// Computed sumsets travel as sorted vectors of distinct values. An empty
// vector is a legitimate result (every requested fold count exceeds k*r).
using Sums = std::vector<Int>;

// One generalized fold: exactly h summands from A, each element used at
// most r times.
struct FoldParams {
    Int h = 0;
    Int r = 1;
};

struct FoldOptions {
    enum class Mode { Auto, Dense, Sparse };
    Mode mode = Mode::Auto;

    // Auto stays dense while (max_count + 1) * window_width bits fit here.
    // The window is the hull of the attainable sums, so huge or widely
    // spread elements fall back to the sparse path automatically.
    std::uint64_t dense_bits_budget = std::uint64_t{1} << 27;

    // Cap on multiplicity vectors the brute-force oracle may visit.
    std::uint64_t enumeration_cap = 10'000'000;
};

// Layered reachability table: layer c holds every sum of exactly c summands
// from A, each element used at most r times. Layer 0 is {0}; layers above
// k*r are empty. Built once, then any subset of layers can be read or
// unioned without recomputation.
//
// Dense representation: one bit row per layer over the value window
// [min attainable, max attainable], advanced element by element with
// word-level shifted ORs. Sparse representation: a sorted vector per layer,
// same recurrence. Both are exact; Auto picks by window size.
class SumsetTable {
public:
    static SumsetTable build(const IntSet& a, Int max_count, Int r,
                             const FoldOptions& opt = {});

    Int max_count() const { return requested_; }
    Int rep_cap() const { return r_; }
    bool dense() const { return dense_; }

    // Sorted contents of layer c; {} for counts above k*r.
    Sums layer(Int c) const;
    Int layer_cardinality(Int c) const;

    // Union of the listed layers, sorted and deduplicated.
    Sums layers_union(const std::vector<Int>& counts) const;

private:
    Int requested_ = 0;  // highest count the caller asked for
    Int effective_ = 0;  // min(requested, k*r); layers beyond are empty
    Int r_ = 1;
    bool dense_ = true;

    // Dense rows: bit i of row c set  <=>  lo_ + i is a c-fold sum.
    Int lo_ = 0;
    std::size_t width_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;

    // Sparse rows.
    std::vector<Sums> layers_;

    const std::uint64_t* row(Int c) const;
    std::uint64_t* row(Int c);
    void check_count(Int c) const;
};

// Greedy attainable extrema of h^(r)A: h = m*r + e gives
//   min = r*(a_1 + ... + a_m) + e*a_{m+1}
//   max = e*a_{k-m} + r*(a_{k-m+1} + ... + a_k).
// Throws OutOfRangeError unless 0 <= h <= k*r.
std::pair<Int, Int> fold_extrema(const IntSet& a, FoldParams p);

// h^(r)A via the reachability table. h = 0 yields {0}; h > k*r yields {}.
Sums fold_sumset(const IntSet& a, FoldParams p, const FoldOptions& opt = {});

// H^(r)A: union of h^(r)A over h in H. Fold counts above k*r contribute
// nothing; if that empties the whole union, throws EmptyResultError.
Sums union_sumset(const IntSet& a, const HSpec& hs, Int r,
                  const FoldOptions& opt = {});

// Independent oracle: walks every multiplicity vector (lambda_1..lambda_k),
// 0 <= lambda_i <= r, sum lambda_i = h, and collects the sums. Exponential
// on purpose; throws TooLargeError when more than `cap` vectors would be
// visited. Shares no machinery with SumsetTable.
Sums enumerate_fold_sumset(const IntSet& a, FoldParams p,
                           std::uint64_t cap = 10'000'000);

} // namespace hfold
