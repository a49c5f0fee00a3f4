#pragma once

#include <stdexcept>
#include <string>

namespace specmom {

/// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An index (tuple or ordinal) does not belong to the group it was used with.
class InvalidIndexError : public Error {
public:
    using Error::Error;
};

/// Two values defined on different groups (or on different transform sides)
/// were combined.
class GroupMismatchError : public Error {
public:
    using Error::Error;
};

/// Operation only defined for a restricted family of groups (e.g. all-binary).
class UnsupportedOperationError : public Error {
public:
    using Error::Error;
};

/// A configurable size/enumeration guard was exceeded. The message names the
/// bound that tripped.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or textual value.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace specmom
