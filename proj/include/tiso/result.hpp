#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace tiso {

/// Domain error kinds. Morphisms of the groupoid are partial, so most of these
/// mean "undefined here" rather than "something broke".
enum class Errc {
  kInvalidInput,
  kNotACorner,
  kNotSimple,
  kNotEligible,
  kNonCoprimeShape,
  kUndefined,
  kShapeUnsupported,
  kNotIsotropic,
  kDeletedNode,
  kNotTypeA,
  kInconsistent,
};

std::string_view errc_name(Errc code);

struct Error {
  Errc code;
  std::string message;
};

inline Error make_error(Errc code, std::string message) {
  return Error{code, std::move(message)};
}

class BadResultAccess : public std::logic_error {
 public:
  explicit BadResultAccess(const Error& error)
      : std::logic_error(std::string(errc_name(error.code)) + ": " +
                         error.message) {}
};

/// Either a value or an Error.
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : data_(std::move(value)) {}  // NOLINT: implicit by design
  Result(Error error) : data_(std::move(error)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw BadResultAccess(std::get<Error>(data_));
    return std::get<T>(data_);
  }
  T& value() & {
    if (!ok()) throw BadResultAccess(std::get<Error>(data_));
    return std::get<T>(data_);
  }
  // By value, so `for (x : f().value())` does not dangle.
  T value() && {
    if (!ok()) throw BadResultAccess(std::get<Error>(data_));
    return std::get<T>(std::move(data_));
  }

  const Error& error() const { return std::get<Error>(data_); }
  Errc code() const { return error().code; }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  T operator*() && { return std::move(*this).value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

 private:
  std::variant<T, Error> data_;
};

}  // namespace tiso
