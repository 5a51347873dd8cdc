#pragma once

#include <stdexcept>
#include <string>

namespace gessel {

// Raised for contract violations that callers are expected to report
// (unsupported formula, singular fit, chain limit, bad window).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gessel
