#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rackmr {

// Exact rational on 64-bit numerator/denominator, always normalized
// (den > 0, gcd(num, den) = 1). Arithmetic runs through 128-bit
// intermediates and throws std::overflow_error if a reduced result does
// not fit.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool integral() const { return den_ == 1; }
  std::int64_t as_int() const;
  double as_double() const;
  std::string str() const;  // "n" when integral, else "n/d"

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

 private:
  static Rat make(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rackmr
