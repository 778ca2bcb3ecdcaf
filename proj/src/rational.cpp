#include "hcrev/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hcrev {

namespace {

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational add overflow");
    return r;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational mul overflow");
    return r;
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string digits_of(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u != 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

}  // namespace

void Rational::normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::fraction(int128 num, int128 den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
}

Rational Rational::operator-() const { return fraction(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    int128 g = gcd128(den_, o.den_);
    int128 lhs = checked_mul(num_, o.den_ / g);
    int128 rhs = checked_mul(o.num_, den_ / g);
    return fraction(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    return fraction(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * fraction(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

Rational Rational::parse_decimal(std::string_view text, int max_frac_digits) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    int128 num = 0;
    int digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num = checked_mul(num, 10);
        num = checked_add(num, text[i] - '0');
        ++digits;
        ++i;
    }
    if (digits == 0) throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    int128 den = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int frac = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = checked_mul(num, 10);
            num = checked_add(num, text[i] - '0');
            den = checked_mul(den, 10);
            ++frac;
            ++i;
        }
        if (frac == 0) throw std::invalid_argument("dangling decimal point: '" + std::string(text) + "'");
        if (frac > max_frac_digits)
            throw std::invalid_argument("more than " + std::to_string(max_frac_digits) +
                                        " fractional digits: '" + std::string(text) + "'");
    }
    if (i != text.size()) throw std::invalid_argument("trailing garbage in number: '" + std::string(text) + "'");
    return fraction(neg ? -num : num, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return digits_of(num_);
    // A reduced denominator 2^a 5^b has an exact decimal expansion with
    // max(a, b) fractional digits.
    int128 d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return digits_of(num_) + "/" + digits_of(den_);
    int k = twos > fives ? twos : fives;
    int128 scale = 1;
    for (int i = 0; i < k; ++i) scale = checked_mul(scale, 10);
    int128 scaled = checked_mul(num_ < 0 ? -num_ : num_, scale / den_);
    std::string all = digits_of(scaled);
    if ((int)all.size() <= k) all.insert(0, k + 1 - all.size(), '0');
    std::string out = all.substr(0, all.size() - k) + "." + all.substr(all.size() - k);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return (num_ < 0 ? "-" : "") + out;
}

std::string Rational::to_fixed(int digits) const {
    int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);
    int128 n = num_ < 0 ? -num_ : num_;
    // Round half away from zero: floor((n*scale + den/2) / den).
    int128 scaled = (checked_mul(n, scale) + den_ / 2) / den_;
    std::string all = digits_of(scaled);
    if ((int)all.size() <= digits) all.insert(0, digits + 1 - all.size(), '0');
    std::string out = all.substr(0, all.size() - digits);
    if (digits > 0) out += "." + all.substr(all.size() - digits);
    return (num_ < 0 ? "-" : "") + out;
}

double Rational::to_double() const { return (double)num_ / (double)den_; }

}  // namespace hcrev
