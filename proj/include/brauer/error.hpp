#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad permutation, non-subgroup, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// The request is meaningful but outside what the library implements.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A bounded search ran out of candidates.
class SearchExhaustedError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace brauer
