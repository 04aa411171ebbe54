#pragma once

#include <stdexcept>
#include <string>

namespace abicap {

/// Validation failure tied to a configuration key (e.g. "cl", "steps",
/// "condition.moreFP").
class FieldError : public std::invalid_argument {
 public:
  FieldError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace abicap
