#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace assoc {

/// Integer extended with -inf and +inf, totally ordered.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  std::int64_t value() const {
    if (!is_finite()) throw std::logic_error("ExtInt::value on infinite value");
    return value_;
  }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// Adds a finite offset; infinities absorb it.
  friend constexpr ExtInt operator+(const ExtInt& a, std::int64_t k) {
    return a.is_finite() ? ExtInt(a.value_ + k) : a;
  }

  /// "inf", "-inf" or the decimal value.
  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      case Kind::Finite: break;
    }
    return std::to_string(value_);
  }

  static ExtInt parse(const std::string& s) {
    if (s == "inf" || s == "+inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an extended integer: " + s);
    return ExtInt(static_cast<std::int64_t>(v));
  }

 private:
  explicit constexpr ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::NegInf;
  std::int64_t value_ = 0;
};

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
inline ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

}  // namespace assoc
