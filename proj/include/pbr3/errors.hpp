#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbr3 {

// Base of every error raised by the library. The CLI maps the category onto
// its exit codes.
class Error : public std::runtime_error {
 public:
  enum class Category { Usage, Domain, Internal };

  Error(Category category, std::string kind, const std::string& message)
      : std::runtime_error(message), category_(category), kind_(std::move(kind)) {}

  Category category() const noexcept { return category_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  Category category_;
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(Category::Usage, "ParseError",
              message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

#define PBR3_DOMAIN_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& message)                     \
        : Error(Category::Domain, #Name, message) {}              \
  }

PBR3_DOMAIN_ERROR(NotInSubgroup);
PBR3_DOMAIN_ERROR(NotPure);
PBR3_DOMAIN_ERROR(IsotopicArcs);
PBR3_DOMAIN_ERROR(NotRecognized);
PBR3_DOMAIN_ERROR(DomainError);
PBR3_DOMAIN_ERROR(NotPseudoAnosov);
PBR3_DOMAIN_ERROR(Inconclusive);
PBR3_DOMAIN_ERROR(BoundExceeded);

#undef PBR3_DOMAIN_ERROR

// Raised when two independent computations disagree or a post-condition
// fails. Never expected in a correct build.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message)
      : Error(Category::Internal, "InvariantViolation", message) {}
};

}  // namespace pbr3
