#include "gkz/mp.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <ostream>

namespace gkz::mp {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Bits max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, kRnd);
}

Real::Real(long v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, kRnd);
}

Real::Real(const mpz_class& v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& v, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, kRnd);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::to_long_round() const { return mpfr_get_si(v_, MPFR_RNDN); }

long Real::exponent() const {
    if (mpfr_zero_p(v_)) return LONG_MIN / 2;
    return mpfr_get_exp(v_);
}

std::string Real::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
    mpfr_add(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
    mpfr_sub(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
    mpfr_mul(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
    mpfr_div(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator*=(long k) {
    mpfr_mul_si(v_, v_, k, kRnd);
    return *this;
}

Real& Real::operator/=(long k) {
    mpfr_div_si(v_, v_, k, kRnd);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), kRnd);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), kRnd);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), kRnd);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), kRnd);
    return r;
}

Real operator*(const Real& a, long k) {
    Real r(a);
    r *= k;
    return r;
}

Real operator/(const Real& a, long k) {
    Real r(a);
    r /= k;
    return r;
}

Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.get(), a.get(), kRnd);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.get(), b.get()) != 0;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

#define GKZ_UNARY(name, fn)                   \
    Real name(const Real& x) {                \
        Real r(x.precision());                \
        fn(r.get(), x.get(), kRnd);           \
        return r;                             \
    }

GKZ_UNARY(abs, mpfr_abs)
GKZ_UNARY(sqrt, mpfr_sqrt)
GKZ_UNARY(exp, mpfr_exp)
GKZ_UNARY(log, mpfr_log)
GKZ_UNARY(sin, mpfr_sin)
GKZ_UNARY(cos, mpfr_cos)
GKZ_UNARY(asin, mpfr_asin)
#undef GKZ_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(max_prec(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
    return r;
}

Real round(const Real& x) {
    Real r(x.precision());
    mpfr_round(r.get(), x.get());
    return r;
}

Real floor(const Real& x) {
    Real r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

Real pi(Bits bits) {
    Real r(bits);
    mpfr_const_pi(r.get(), kRnd);
    return r;
}

Real two_pow(long e, Bits bits) {
    Real r(bits);
    mpfr_set_ui_2exp(r.get(), 1, e, kRnd);
    return r;
}

Real with_precision(const Real& x, Bits bits) {
    Real r(bits);
    mpfr_set(r.get(), x.get(), kRnd);
    return r;
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
Complex operator*(const Complex& a, long k) { return {a.re * k, a.im * k}; }

Complex operator/(const Complex& a, const Complex& b) {
    const Real d = norm(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
Complex operator/(const Complex& a, long k) { return {a.re / k, a.im / k}; }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << ", " << z.im << ')';
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
    return r;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex sqrt(const Complex& z) {
    const Bits bits = z.precision();
    if (z.re.is_zero() && z.im.is_zero()) return Complex(bits);
    const Real m = abs(z);
    // sqrt((|z| + re)/2) is well conditioned for re >= 0, the other branch
    // for re < 0.
    if (z.re.sign() >= 0) {
        Real a = sqrt((m + z.re) / 2);
        Real b = z.im / (a * 2);
        return {std::move(a), std::move(b)};
    }
    Real b = sqrt((m - z.re) / 2);
    if (z.im.sign() < 0) b = -b;
    Real a = z.im / (b * 2);
    return {std::move(a), std::move(b)};
}

Complex exp(const Complex& z) {
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex exp_2pi_i(const Complex& z) {
    const Real two_pi = pi(z.precision()) * 2;
    const Real m = exp(-(two_pi * z.im));
    const Real t = two_pi * z.re;
    return {m * cos(t), m * sin(t)};
}

}  // namespace gkz::mp
