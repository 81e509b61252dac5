#pragma once

#include <stdexcept>

namespace indeperm {

// Pattern text did not match the dash-notation grammar.
class PatternParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested length exceeds the configured brute-force cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Remote sequence data could not be obtained.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequence data was obtained but is malformed.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indeperm
