#pragma once

#include <stdexcept>
#include <string>

namespace synco {

/// A value violates one of its type invariants (bad data, d∘d ≠ 0, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was requested without the data it requires (a missing flag,
/// a degenerate pairing, an odd truncation length, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or degrees of arguments do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace synco
