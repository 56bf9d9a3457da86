#include "hfold/hspec.hpp"

#include <algorithm>

namespace hfold {

HSpec HSpec::normalized(std::vector<Int> raw) {
    if (raw.empty())
        throw EmptyInputError("h-set must contain at least one fold count");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.front() < 1)
        throw OutOfRangeError("fold counts must be positive");
    HSpec hs;
    hs.hs_ = std::move(raw);
    return hs;
}

HSpec HSpec::interval(Int lo, Int hi) {
    if (lo < 1 || hi < lo)
        throw OutOfRangeError("interval needs 1 <= lo <= hi");
    std::vector<Int> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int v = lo; v <= hi; ++v)
        vals.push_back(v);
    HSpec hs;
    hs.hs_ = std::move(vals);
    return hs;
}

Int HSpec::h(int i) const {
    if (i < 0 || i > t())
        throw OutOfRangeError("h-set index out of range");
    return i == 0 ? 0 : hs_[static_cast<std::size_t>(i - 1)];
}

bool HSpec::contains(Int v) const {
    return std::binary_search(hs_.begin(), hs_.end(), v);
}

int HSpec::pivot(Int r) const {
    if (r < 1)
        throw OutOfRangeError("r must be positive");
    if (r > max())
        throw BadPivotError("no pivot: r exceeds max(H)");
    // h_0 = 0 < r always holds, so the pivot is the first h_i >= r.
    return first_at_least(r);
}

int HSpec::first_at_least(Int threshold) const {
    auto it = std::lower_bound(hs_.begin(), hs_.end(), threshold);
    return static_cast<int>(it - hs_.begin()) + 1;
}

HSpec HSpec::prefix(int n) const {
    if (n < 1 || n > t())
        throw OutOfRangeError("prefix length out of range");
    HSpec hs;
    hs.hs_.assign(hs_.begin(), hs_.begin() + n);
    return hs;
}

HSpec HSpec::without_max() const {
    if (t() < 2)
        throw OutOfRangeError("cannot drop the largest fold count of a singleton");
    return prefix(t() - 1);
}

} // namespace hfold
