#pragma once

#include <mpfr.h>

#include <stdexcept>

namespace oddzeta {

/// Precision policy for BigReal arithmetic: `digits` requested decimal
/// digits plus `guard` internal extra digits. Every operation performed
/// under a context with P digits is accurate to well within 10 units in
/// the P-th significant decimal place.
class PrecisionContext {
public:
    explicit PrecisionContext(long digits, long guard = 10)
        : digits_(digits), guard_(guard) {
        if (digits < 1) throw std::invalid_argument("PrecisionContext: digits must be positive");
        if (guard < 0) throw std::invalid_argument("PrecisionContext: guard must be non-negative");
    }

    long digits() const { return digits_; }
    long guard() const { return guard_; }

    /// Working mantissa size in bits for (digits + guard) decimal digits.
    mpfr_prec_t bits() const {
        // log2(10) = 3.3219...; +8 bits of slack for rounding dust
        return static_cast<mpfr_prec_t>((digits_ + guard_) * 3.32192809488736235 + 8);
    }

    /// Context widened to at least `digits` decimal digits (same guard).
    PrecisionContext widened_to(long digits) const {
        return PrecisionContext(digits > digits_ ? digits : digits_, guard_);
    }

    bool operator==(const PrecisionContext&) const = default;

private:
    long digits_;
    long guard_;
};

}  // namespace oddzeta
