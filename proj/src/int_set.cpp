#include "hfold/int_set.hpp"

#include <algorithm>
#include <cassert>

namespace hfold {

IntSet IntSet::normalized(std::vector<Int> raw) {
    if (raw.empty())
        throw EmptyInputError("set must contain at least one element");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    IntSet s;
    s.elems_ = std::move(raw);
    return s;
}

IntSet IntSet::from_sorted(std::vector<Int> elems) {
    if (elems.empty())
        throw EmptyInputError("set must contain at least one element");
    assert(std::is_sorted(elems.begin(), elems.end()));
    IntSet s;
    s.elems_ = std::move(elems);
    return s;
}

bool IntSet::contains(Int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

IntSet IntSet::dilated(Int c) const {
    if (c == 0)
        throw ZeroScaleError("dilation factor must be nonzero");
    std::vector<Int> out;
    out.reserve(elems_.size());
    for (Int v : elems_)
        out.push_back(checked_mul(c, v));
    if (c < 0)
        std::reverse(out.begin(), out.end());
    return from_sorted(std::move(out));
}

IntSet IntSet::without_zero() const {
    if (!contains_zero())
        return *this;
    if (size() == 1)
        throw EmptyInputError("removing 0 would empty the set");
    std::vector<Int> out;
    out.reserve(elems_.size() - 1);
    for (Int v : elems_)
        if (v != 0)
            out.push_back(v);
    return from_sorted(std::move(out));
}

IntSet normalize_set(std::vector<Int> raw) { return IntSet::normalized(std::move(raw)); }

IntSet dilate(const IntSet& a, Int c) { return a.dilated(c); }

} // namespace hfold
