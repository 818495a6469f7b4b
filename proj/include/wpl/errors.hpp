#pragma once

#include <stdexcept>
#include <string>

namespace wpl {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct NoSuchRoot : std::domain_error {
  explicit NoSuchRoot(const std::string& what) : std::domain_error(what) {}
};

struct FieldMismatch : std::invalid_argument {
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ArityError : std::invalid_argument {
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

struct GroupMismatch : std::invalid_argument {
  explicit GroupMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInfinite : std::domain_error {
  explicit NotInfinite(const std::string& what) : std::domain_error(what) {}
};

struct NotTubular : std::domain_error {
  explicit NotTubular(const std::string& what) : std::domain_error(what) {}
};

struct NotHomogeneous : std::domain_error {
  explicit NotHomogeneous(const std::string& what) : std::domain_error(what) {}
};

struct ZeroHasNoDegree : std::domain_error {
  explicit ZeroHasNoDegree(const std::string& what) : std::domain_error(what) {}
};

struct NotSurjective : std::domain_error {
  explicit NotSurjective(const std::string& what) : std::domain_error(what) {}
};

struct NotInSubgroup : std::domain_error {
  explicit NotInSubgroup(const std::string& what) : std::domain_error(what) {}
};

struct BadWindow : std::invalid_argument {
  explicit BadWindow(const std::string& what) : std::invalid_argument(what) {}
};

struct BadCharacteristic : std::domain_error {
  explicit BadCharacteristic(const std::string& what) : std::domain_error(what) {}
};

struct NotEquivariant : std::domain_error {
  explicit NotEquivariant(const std::string& what) : std::domain_error(what) {}
};

struct UnknownCheck : std::invalid_argument {
  explicit UnknownCheck(const std::string& what) : std::invalid_argument(what) {}
};

struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wpl
