#pragma once

#include <stdexcept>
#include <string>

namespace mockmod {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments or unsupported parameter combinations (bad prime,
// odd weight, malformed encodings, ...).  CLI maps these to exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// A p-adic result would carry less precision than the caller requires,
// or an operation exhausted the tracked precision entirely.  Never
// downgraded to a warning: congruence checks refuse to run rather than
// silently pass on under-precise data.  CLI maps these to exit code 3.
struct PrecisionError : Error {
    using Error::Error;
};

// A series operation would need coefficients outside the known window.
// CLI maps these to exit code 3 as well (the fix is a longer expansion).
struct WindowError : Error {
    using Error::Error;
};

// Cache file problems: bad magic, version mismatch, truncation, checksum.
struct CacheError : Error {
    using Error::Error;
};

} // namespace mockmod
