#pragma once

#include <stdexcept>
#include <string>

namespace sts {

// Thrown when an exact search passes its configured node limit.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A request the implementation cannot serve, e.g. a size pair outside
// the embedding toolbox or a gadget larger than the configured cap.
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

// A search that ran to completion without finding what was asked for.
class NotFound : public std::runtime_error {
 public:
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sts
