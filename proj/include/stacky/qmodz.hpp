#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "stacky/errors.hpp"

namespace stacky {

/// An element of Q/Z, kept as num/den with 0 <= num < den and gcd(num, den) = 1.
/// Roots of unity in C* are modelled this way: exp(2 pi i num/den).
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InvalidArgument("QmodZ denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Order in Q/Z, i.e. the reduced denominator.
  std::int64_t order() const { return den_; }

  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return QmodZ(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
  }
  friend QmodZ operator-(const QmodZ& a) { return QmodZ(-a.num_, a.den_); }
  friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return a + (-b); }
  friend QmodZ operator*(std::int64_t k, const QmodZ& a) { return QmodZ((k % a.den_) * a.num_, a.den_); }
  friend bool operator==(const QmodZ& a, const QmodZ& b) = default;
  friend auto operator<=>(const QmodZ& a, const QmodZ& b) {
    // compare as rationals in [0,1)
    const auto l = a.num_ * b.den_;
    const auto r = b.num_ * a.den_;
    if (l != r) return l <=> r;
    return a.den_ <=> b.den_;
  }

  std::string str() const { return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace stacky
