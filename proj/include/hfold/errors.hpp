#pragma once

#include <stdexcept>
#include <string>

namespace hfold {

// Base of every error this library throws on purpose. Catching hfold::Error
// at the CLI boundary is enough to turn any domain failure into exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input set or h-set was empty where a nonempty one is required.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// A checked 64-bit operation would wrap. Results are exact or absent,
// never silently truncated.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Requested union is empty because every fold count exceeds k*r.
class EmptyResultError : public Error {
public:
    using Error::Error;
};

// Index or fold count outside the valid range for the operation.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration would visit more multiplicity vectors than the cap.
class TooLargeError : public Error {
public:
    using Error::Error;
};

// Dilation by zero would collapse the set.
class ZeroScaleError : public Error {
public:
    using Error::Error;
};

// r exceeds max(H), so no pivot index exists and the two-term bound form
// is undefined.
class BadPivotError : public Error {
public:
    using Error::Error;
};

// A strict bound evaluator was called outside its stated hypotheses.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// The h-set starts beyond every nonempty fold, so no bound regime applies.
class UnclassifiableError : public Error {
public:
    using Error::Error;
};

// Unknown inverse-claim name.
class UnknownClaimError : public Error {
public:
    using Error::Error;
};

// Subsequence-sum threshold alpha outside [1, k*r].
class BadAlphaError : public Error {
public:
    using Error::Error;
};

// Grid enumeration would exceed the configured instance budget.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// Malformed configuration (CLI flags, config file, or GridConfig fields).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace hfold
