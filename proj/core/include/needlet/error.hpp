#pragma once

#include <stdexcept>
#include <string>

namespace needlet {

/// Raised when a numerical identity that must hold by construction is
/// violated (broken window profile, frame energy mismatch, ...). Input
/// validation failures use std::invalid_argument / std::domain_error instead.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace needlet

namespace needlet {

/// A file could not be read, written or parsed; the message names the path.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace needlet
