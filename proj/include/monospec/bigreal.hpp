#ifndef MONOSPEC_BIGREAL_HPP
#define MONOSPEC_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "monospec/errors.hpp"

namespace monospec {

/// Arbitrary-precision real number backed by MPFR, with value semantics.
/// Binary operations produce results at the larger of the operand precisions;
/// rounding is always to nearest.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_nan(v_); }
    BigReal(long value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigReal(const std::string& decimal, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw domain_error("BigReal: unparsable decimal string '" + decimal + "'");
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Decimal string with enough digits to round-trip exactly at this precision.
    std::string to_string() const;
    /// Decimal string truncated/rounded to `digits` significant digits.
    std::string to_string(size_t digits) const;

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !mpfr_equal_p(a.v_, b.v_); }

    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    static mpfr_prec_t mx(const BigReal& a, const BigReal& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

#define MONOSPEC_BINOP(op, fn)                                         \
    friend BigReal operator op(const BigReal& a, const BigReal& b) {   \
        BigReal r(mx(a, b));                                           \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                               \
        return r;                                                      \
    }
    MONOSPEC_BINOP(+, mpfr_add)
    MONOSPEC_BINOP(-, mpfr_sub)
    MONOSPEC_BINOP(*, mpfr_mul)
    MONOSPEC_BINOP(/, mpfr_div)
#undef MONOSPEC_BINOP

public:
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator+(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigReal operator-(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigReal operator-(long a, const BigReal& b) {
        BigReal r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r;
    }
    friend BigReal operator*(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator/(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigReal operator/(long a, const BigReal& b) {
        BigReal r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r;
    }
    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

#define MONOSPEC_UNFN(name, fn)                     \
    friend BigReal name(const BigReal& a) {         \
        BigReal r(a.prec());                        \
        fn(r.v_, a.v_, MPFR_RNDN);                  \
        return r;                                   \
    }
    MONOSPEC_UNFN(sqrt, mpfr_sqrt)
    MONOSPEC_UNFN(exp, mpfr_exp)
    MONOSPEC_UNFN(log, mpfr_log)
    MONOSPEC_UNFN(sin, mpfr_sin)
    MONOSPEC_UNFN(cos, mpfr_cos)
    MONOSPEC_UNFN(abs, mpfr_abs)
    MONOSPEC_UNFN(gamma_fn, mpfr_gamma)
    MONOSPEC_UNFN(digamma_fn, mpfr_digamma)
    MONOSPEC_UNFN(sinh_fn, mpfr_sinh)
    MONOSPEC_UNFN(cosh_fn, mpfr_cosh)
    MONOSPEC_UNFN(asinh_fn, mpfr_asinh)
    MONOSPEC_UNFN(acos_fn, mpfr_acos)
#undef MONOSPEC_UNFN

    friend BigReal atan2(const BigReal& y, const BigReal& x) {
        BigReal r(mx(y, x));
        mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    /// Principal n-th root of a non-negative value.
    friend BigReal rootn(const BigReal& a, unsigned long n) {
        BigReal r(a.prec());
        mpfr_rootn_ui(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    friend BigReal floor(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend BigReal round_nearest(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_rint(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal ldexp2(const BigReal& a, long e) {   // a * 2^e
        BigReal r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend void swap(BigReal& a, BigReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

    static BigReal pi(mpfr_prec_t bits) {
        BigReal r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// Exact conversion from double (doubles embed exactly in MPFR).
    static BigReal from_double(double v, mpfr_prec_t bits) {
        BigReal r(bits);
        mpfr_set_d(r.v_, v, MPFR_RNDN);
        return r;
    }
    /// 10^e at the given precision.
    static BigReal pow10(long e, mpfr_prec_t bits) {
        BigReal r(bits);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

/// Complex number as a pair of BigReal.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
        return {s * a.re, s * a.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigReal abs(const BigComplex& a) {
        BigReal r(a.re.prec() > a.im.prec() ? a.re.prec() : a.im.prec());
        mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
        return r;
    }
    /// Principal square root (branch cut on the negative real axis).
    friend BigComplex sqrt(const BigComplex& a) {
        BigReal m = abs(a);
        if (m.is_zero()) return {m, m};
        BigReal u = sqrt((m + a.re) / 2);
        BigReal v = sqrt((m - a.re) / 2);
        if (a.im.sign() < 0) v = -v;
        return {u, v};
    }
};

} // namespace monospec

#endif
