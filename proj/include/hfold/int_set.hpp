#pragma once

#include <vector>

#include "hfold/checked.hpp"

namespace hfold {

// A finite nonempty set of distinct integers, stored sorted ascending.
// This is the input type for base sets A; computed sumsets travel as plain
// sorted vectors because they may legitimately be empty.
class IntSet {
public:
    // Sorts and deduplicates raw input. Throws EmptyInputError when empty.
    static IntSet normalized(std::vector<Int> raw);

    // Adopts an already strictly increasing vector (checked in debug only).
    static IntSet from_sorted(std::vector<Int> elems);

    int size() const { return static_cast<int>(elems_.size()); }
    Int operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
    Int min() const { return elems_.front(); }
    Int max() const { return elems_.back(); }
    bool contains(Int v) const;
    bool contains_zero() const { return contains(0); }

    const std::vector<Int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    // Elementwise c*A. Throws ZeroScaleError when c == 0; negative c is
    // allowed (the result is re-sorted).
    IntSet dilated(Int c) const;

    // A \ {0}. Identity when 0 is absent; throws EmptyInputError when
    // removing 0 would empty the set.
    IntSet without_zero() const;

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    std::vector<Int> elems_;
};

// Free-function spellings used throughout the library surface.
IntSet normalize_set(std::vector<Int> raw);
IntSet dilate(const IntSet& a, Int c);

} // namespace hfold
