#include "quasikoorn/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace quasikoorn {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, mpz_class &out)
{
    if (s.empty()) {
        return false;
    }
    std::size_t start = 0;
    if (s[0] == '+' || s[0] == '-') {
        start = 1;
    }
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    // mpz_set_str rejects a leading '+'
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

std::string normalize(std::string_view text)
{
    // trim and replace U+2212 (e2 88 92) by '-'
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!text.empty() && blank(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && blank(text.back())) {
        text.remove_suffix(1);
    }
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c == 0xe2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const std::string s = normalize(text);
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den(1);
    const std::string_view sv(s);
    const bool ok = slash == std::string::npos
                        ? parse_integer(sv, num)
                        : parse_integer(sv.substr(0, slash), num) && parse_integer(sv.substr(slash + 1), den);
    if (!ok) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational &Rational::operator+=(const Rational &o)
{
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::size_t Rational::hash() const
{
    const auto limb_hash = [](mpz_srcptr z) {
        std::size_t h = static_cast<std::size_t>(z->_mp_size);
        const int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
        for (int i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    const std::size_t a = limb_hash(value_.get_num_mpz_t());
    const std::size_t b = limb_hash(value_.get_den_mpz_t());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.str(); }

std::int64_t rational_floor(const Rational &x)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw std::overflow_error("floor does not fit in 64 bits: " + x.str());
    }
    return q.get_si();
}

std::int64_t floor_even(const Rational &x) { return 2 * rational_floor(x / Rational(2)); }

std::int64_t floor_odd(const Rational &x) { return floor_even(x + Rational(1)) - 1; }

bool is_even_integer(const Rational &x) { return x.is_integer() && mpz_even_p(x.value().get_num_mpz_t()); }

bool is_odd_integer(const Rational &x) { return x.is_integer() && mpz_odd_p(x.value().get_num_mpz_t()); }

Rational pow(const Rational &x, std::int64_t n)
{
    if (n == 0) {
        return Rational(1);
    }
    if (n < 0) {
        return pow(x.inverse(), -n);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(n));
    return Rational(num, den);
}

} // namespace quasikoorn
