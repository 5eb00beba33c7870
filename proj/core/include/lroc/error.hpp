#pragma once

#include <stdexcept>
#include <string>

namespace lroc {

// Malformed or inconsistent input data: CSV cells, model configs, samples.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller asked for something the tool does not offer (unknown example, method).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lroc
