#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace oddzeta {

/// Exact rational number: arbitrary-size signed numerator over a positive
/// denominator, always in lowest terms. Arithmetic is exact; equality is
/// canonical-form equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
    Rational(long numerator, long denominator);

    /// Parses "p/q" or a bare integer "p".
    static Rational from_string(std::string_view text);
    static Rational from_raw(mpq_class value);

    Rational operator-() const { return from_raw(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    bool operator==(const Rational& rhs) const { return value_ == rhs.value_; }
    std::strong_ordering operator<=>(const Rational& rhs) const {
        int c = cmp(value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    Rational abs() const { return from_raw(mpq_class(::abs(value_))); }
    Rational reciprocal() const;

    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    /// Serializes as "p/q".
    std::string to_string() const;

    /// Backing canonical GMP value.
    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

}  // namespace oddzeta
