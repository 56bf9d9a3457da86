#include "hfold/subseq.hpp"

#include "hfold/structure.hpp"

namespace hfold::subseq {

Sums subset_sum_set(const IntSet& a, Int alpha, const FoldOptions& opt) {
    const Int k = a.size();
    if (alpha < 1 || alpha > k)
        throw BadAlphaError("alpha must lie in [1, k] (alpha = " +
                            std::to_string(alpha) + ", k = " + std::to_string(k) +
                            ")");
    return union_sumset(a, HSpec::interval(alpha, k), 1, opt);
}

Sums subsequence_sum_set(const RepSequence& s, Int alpha, const FoldOptions& opt) {
    const Int len = s.length();
    if (alpha < 1 || alpha > len)
        throw BadAlphaError("alpha must lie in [1, kr] (alpha = " +
                            std::to_string(alpha) + ", kr = " +
                            std::to_string(len) + ")");
    return union_sumset(s.base, HSpec::interval(alpha, len), s.r, opt);
}

Int full_sum_lower(Int k, Int r, bool contains_zero) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    const Int rk = checked_mul(r, k);
    if (contains_zero) {
        if (k < 4)
            throw HypothesisError("needs k >= 4 when 0 is a term");
        return checked_add(checked_mul(rk, k - 1) / 2, 1);
    }
    if (k < 3)
        throw HypothesisError("needs k >= 3");
    return checked_mul(rk, k + 1) / 2;
}

Int partial_sum_lower(Int k, Int r, Int alpha, bool contains_zero) {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    const Int kr = checked_mul(k, r);
    if (alpha < 1 || alpha >= kr)
        throw HypothesisError(
            "alpha must lie in [1, kr-1] so the window index m is defined "
            "(alpha = " + std::to_string(alpha) + ")");
    const Int m = alpha / r + 1; // (m-1)r <= alpha < mr
    const Int slack = checked_sub(checked_mul(m, r), alpha);
    if (contains_zero) {
        Int v = checked_mul(checked_mul(r, k), k - 1) / 2;
        v = checked_sub(v, checked_mul(checked_mul(r, m), m - 1) / 2);
        v = checked_add(v, checked_mul(m - 1, slack));
        return checked_add(v, 1);
    }
    Int v = checked_mul(checked_mul(r, k), k + 1) / 2;
    v = checked_sub(v, checked_mul(checked_mul(r, m), m + 1) / 2);
    v = checked_add(v, checked_mul(m, slack));
    return checked_add(v, 1);
}

std::optional<Int> dilated_interval_step(const IntSet& base) {
    const auto w = structure::ap_witness(base);
    if (!w.is_ap)
        return std::nullopt;
    if (base.contains_zero()) {
        // d * [0, k-1] starts at 0; any positive gap is a valid step.
        if (w.first != 0 || base.size() < 2)
            return std::nullopt;
        return w.diff;
    }
    // d * [1, k] has first term equal to the step.
    if (w.first < 1)
        return std::nullopt;
    if (base.size() == 1)
        return w.first;
    return w.diff == w.first ? std::optional<Int>(w.diff) : std::nullopt;
}

std::optional<Int> full_sum_extremal_step(const IntSet& base) {
    const bool z = base.contains_zero();
    if (base.size() < (z ? 7 : 6))
        throw HypothesisError(z ? "characterization needs k >= 7 when 0 is a term"
                                : "characterization needs k >= 6");
    return dilated_interval_step(base);
}

} // namespace hfold::subseq
