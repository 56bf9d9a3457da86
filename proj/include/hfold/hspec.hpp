#pragma once

#include <vector>

#include "hfold/checked.hpp"

namespace hfold {

// The set of fold counts H = {h_1 < h_2 < ... < h_t}, all positive, with the
// conventional sentinel h_0 = 0. Every bound formula is phrased through the
// split h_i = m_i * r + eps_i with 0 <= eps_i <= r - 1, so those accessors
// live here next to the data.
class HSpec {
public:
    // Sorts and deduplicates. Rejects empty input and nonpositive entries.
    static HSpec normalized(std::vector<Int> raw);

    // The interval {lo, lo+1, ..., hi}; requires 1 <= lo <= hi.
    static HSpec interval(Int lo, Int hi);

    int t() const { return static_cast<int>(hs_.size()); }

    // 1-based accessor with the sentinel: h(0) == 0, h(1) == min, h(t) == max.
    Int h(int i) const;

    Int min() const { return hs_.front(); }
    Int max() const { return hs_.back(); }
    bool contains(Int v) const;
    const std::vector<Int>& values() const { return hs_; }

    Int m(int i, Int r) const { return h(i) / r; }
    Int eps(int i, Int r) const { return h(i) % r; }

    // The unique l with h_{l-1} < r <= h_l. Throws BadPivotError when
    // r > max(H); requires r >= 1.
    int pivot(Int r) const;

    // Least 1-based index i with h_i >= threshold, or t()+1 when none.
    int first_at_least(Int threshold) const;

    // {h_1, ..., h_n}; requires 1 <= n <= t.
    HSpec prefix(int n) const;

    // H \ {h_t}; requires t >= 2.
    HSpec without_max() const;

    friend bool operator==(const HSpec&, const HSpec&) = default;

private:
    std::vector<Int> hs_;
};

} // namespace hfold
