#include "oddzeta/rational.hpp"

#include <stdexcept>

namespace oddzeta {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    if (sgn(v.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return from_raw(std::move(v));
}

Rational Rational::from_raw(mpq_class value) {
    value.canonicalize();
    Rational r;
    r.value_ = std::move(value);
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return from_raw(std::move(inv));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace oddzeta
