#ifndef HCREV_RATIONAL_HPP
#define HCREV_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace hcrev {

using int128 = __int128;

/// Exact rational number backed by 128-bit integers.
///
/// All objective values in this library (revenue, Dasgupta cost, ordering
/// costs, conditional expectations) are rationals whose denominators divide
/// 2 * 10^9, so a fixed-width numerator/denominator pair with gcd
/// normalization covers the whole working range with plenty of headroom.
/// Every operation checks for overflow and throws std::overflow_error
/// instead of wrapping; the library never silently loses exactness.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    static Rational fraction(int128 num, int128 den);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Parses an optionally signed decimal literal ("3", "0.25", "1e-3" is
    /// NOT accepted) with at most `max_frac_digits` fractional digits.
    /// Throws std::invalid_argument on malformed input or too many digits.
    static Rational parse_decimal(std::string_view text, int max_frac_digits = 9);

    /// Exact decimal rendering when the denominator is of the form 2^a 5^b
    /// (always the case for parsed weights and their integer combinations);
    /// falls back to "num/den" otherwise.
    std::string to_string() const;

    /// Fixed-point rendering with `digits` fractional digits, rounded half
    /// away from zero. Deterministic, used for CSV ratio columns.
    std::string to_fixed(int digits) const;

    double to_double() const;

  private:
    void normalize();
    int128 num_;
    int128 den_;  // > 0
};

}  // namespace hcrev

#endif
