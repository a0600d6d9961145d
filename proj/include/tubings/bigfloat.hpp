#pragma once

#include <mpfr.h>

#include <string>

#include "tubings/rational.hpp"

namespace tubings {

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations compute at the precision of the left operand. Rounds
// to nearest everywhere.
class BigFloat {
public:
    explicit BigFloat(int precision_bits = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o) noexcept;
    ~BigFloat();

    static BigFloat from(const Int& z, int precision_bits);
    static BigFloat from(const Rat& r, int precision_bits);
    static BigFloat from(long v, int precision_bits);
    static BigFloat from(double v, int precision_bits);

    int precision() const { return prec_; }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    BigFloat abs() const;
    // this^e for a real exponent
    BigFloat pow(const BigFloat& e) const;
    static BigFloat gamma(const BigFloat& z);

    bool operator<(const BigFloat& o) const;
    bool operator>(const BigFloat& o) const { return o < *this; }
    bool is_zero() const;

    double to_double() const;
    // Shortest-ish decimal form, round-trip not required: "1.4676266e-1"
    std::string to_string(int significant_digits = 20) const;

    mpfr_t& raw() { return v_; }
    const mpfr_t& raw() const { return v_; }

private:
    mpfr_t v_;
    int prec_;
    friend void swap(BigFloat& a, BigFloat& b) noexcept;
};

void swap(BigFloat& a, BigFloat& b) noexcept;

} // namespace tubings
