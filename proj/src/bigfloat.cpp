#include "tubings/bigfloat.hpp"

#include <cstdlib>
#include <cstring>
#include <utility>

namespace tubings {

BigFloat::BigFloat(int precision_bits) : prec_(precision_bits) {
    mpfr_init2(v_, precision_bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(v_, o.prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
    swap(*this, o);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void swap(BigFloat& a, BigFloat& b) noexcept {
    mpfr_swap(a.v_, b.v_);
    std::swap(a.prec_, b.prec_);
}

BigFloat BigFloat::from(const Int& z, int precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const Rat& q, int precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(long v, int precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(double v, int precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

#define TUBINGS_BINOP(name, fn)                              \
    BigFloat BigFloat::operator name(const BigFloat& o) const { \
        BigFloat r(prec_);                                   \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                       \
        return r;                                            \
    }
TUBINGS_BINOP(+, mpfr_add)
TUBINGS_BINOP(-, mpfr_sub)
TUBINGS_BINOP(*, mpfr_mul)
TUBINGS_BINOP(/, mpfr_div)
#undef TUBINGS_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat r(prec_);
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::gamma(const BigFloat& z) {
    BigFloat r(z.prec_);
    mpfr_gamma(r.v_, z.v_, MPFR_RNDN);
    return r;
}

bool BigFloat::operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(int significant_digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", significant_digits, v_) < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace tubings
