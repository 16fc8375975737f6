#pragma once

#include <stdexcept>
#include <string>

namespace micomp {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad flags, malformed config document, unknown method names).
class config_error : public error {
public:
    using error::error;
};

/// Unreadable, malformed or inconsistent input data.
class data_error : public error {
public:
    using error::error;
};

/// Statistically degenerate input (zero variance, zero scaling denominator, ...).
class degenerate_error : public error {
public:
    using error::error;
};

} // namespace micomp
