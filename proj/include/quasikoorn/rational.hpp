#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quasikoorn {

/// Exact rational number with an arbitrary-precision numerator and a positive
/// denominator, always kept in lowest terms (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(mpq_class value);

    /// Parses "p/q", "p", optionally signed.  The unicode minus sign U+2212 is
    /// accepted in place of '-'.  Throws std::invalid_argument on bad input.
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    const mpq_class &value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &x);

/// Greatest integer <= x.  Throws std::overflow_error if it does not fit 64 bits.
std::int64_t rational_floor(const Rational &x);

/// Largest even integer <= x, i.e. 2*floor(x/2).
std::int64_t floor_even(const Rational &x);

/// Largest odd integer <= x, i.e. floor_even(x + 1) - 1.
std::int64_t floor_odd(const Rational &x);

bool is_even_integer(const Rational &x);
bool is_odd_integer(const Rational &x);

/// x^n for any integer n; throws std::domain_error for 0^n with n < 0.
Rational pow(const Rational &x, std::int64_t n);

} // namespace quasikoorn

template <>
struct std::hash<quasikoorn::Rational> {
    std::size_t operator()(const quasikoorn::Rational &x) const noexcept { return x.hash(); }
};
