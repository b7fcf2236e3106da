#ifndef ITN_RATIONAL_HPP_
#define ITN_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

namespace itn {

// Exact rational value; fraction numerals must not round.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static std::optional<Rational> parse(std::string_view s) {
    const auto to_int = [](std::string_view v,
                           std::int64_t& out) -> bool {
      if (v.empty()) return false;
      std::size_t i = 0;
      bool neg = false;
      if (v[0] == '-') {
        neg = true;
        i = 1;
        if (v.size() == 1) return false;
      }
      std::int64_t acc = 0;
      for (; i < v.size(); ++i) {
        if (v[i] < '0' || v[i] > '9') return false;
        acc = acc * 10 + (v[i] - '0');
      }
      out = neg ? -acc : acc;
      return true;
    };
    const std::size_t slash = s.find('/');
    std::int64_t n = 0, d = 1;
    if (slash == std::string_view::npos) {
      if (!to_int(s, n)) return std::nullopt;
    } else {
      if (!to_int(s.substr(0, slash), n)) return std::nullopt;
      if (!to_int(s.substr(slash + 1), d) || d == 0) return std::nullopt;
    }
    return Rational(n, d);
  }
};

}  // namespace itn

#endif  // ITN_RATIONAL_HPP_
