#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qmf {

// Exact rational scalar. All core arithmetic runs on these; no floating
// point anywhere in the library.
using Rat = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after sign normalization). Throws
// std::invalid_argument on anything else, including q = 0.
Rat rat_from_string(const std::string& text);

// Lowest terms, integers without the "/1" suffix.
std::string rat_to_string(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

// A nonnegative norm value that may be the distinguished +infinity
// (non-semi-Lipschitz functions, unbounded reversal constants).
class NormValue {
 public:
  NormValue() : value_(Rat(0)) {}

  static NormValue infinite() { return NormValue(std::nullopt); }
  static NormValue of(Rat value) { return NormValue(std::optional<Rat>(std::move(value))); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  const Rat& value() const {
    if (!value_) throw std::logic_error("NormValue: value() on infinite");
    return *value_;
  }

  std::string str() const { return value_ ? rat_to_string(*value_) : "infinite"; }

  friend bool operator==(const NormValue& a, const NormValue& b) {
    if (a.value_.has_value() != b.value_.has_value()) return false;
    return !a.value_ || *a.value_ == *b.value_;
  }
  friend bool operator!=(const NormValue& a, const NormValue& b) { return !(a == b); }

 private:
  explicit NormValue(std::optional<Rat> value) : value_(std::move(value)) {}
  std::optional<Rat> value_;
};

}  // namespace qmf
