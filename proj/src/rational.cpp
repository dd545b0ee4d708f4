#include "rackmr/rational.hpp"

#include <limits>

namespace rackmr {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) { *this = make(num, den); }

Rat Rat::make(__int128 num, __int128 den) {
  if (den == 0) {
    throw std::domain_error("Rat: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = num == 0 ? den : gcd128(num, den);
  num /= g;
  den /= g;
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
  if (num > kMax || num < kMin || den > kMax) {
    throw std::overflow_error("Rat: value exceeds 64 bits after reduction");
  }
  Rat r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rat::as_int() const {
  if (!integral()) {
    throw std::domain_error("Rat: " + str() + " is not an integer");
  }
  return num_;
}

double Rat::as_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::str() const {
  return integral() ? std::to_string(num_)
                    : std::to_string(num_) + "/" + std::to_string(den_);
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat::make(static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat::make(static_cast<__int128>(a.num_) * b.den_ -
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat::make(static_cast<__int128>(a.num_) * b.num_,
                   static_cast<__int128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) {
    throw std::domain_error("Rat: division by zero");
  }
  return Rat::make(static_cast<__int128>(a.num_) * b.den_,
                   static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace rackmr
