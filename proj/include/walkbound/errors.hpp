#pragma once

#include <stdexcept>
#include <string>

namespace walkbound {

// Input that could not be parsed (rationals, weight lists, table files).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured resource budget.  The message
// names the limit that was hit.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A bound was requested under a hypothesis the inputs do not satisfy.
struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace walkbound
