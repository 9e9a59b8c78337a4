#pragma once

// Thin RAII layer over MPFR. Every value carries its own precision in bits;
// binary operations produce a result at the larger operand precision and
// round to nearest.

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace gkz::mp {

using Bits = mpfr_prec_t;

class Real {
public:
    explicit Real(Bits bits = 64);
    Real(double v, Bits bits);
    Real(long v, Bits bits);
    Real(const mpz_class& v, Bits bits);
    Real(const mpq_class& v, Bits bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    Bits precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long_round() const;
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for 0.
    long exponent() const;
    std::string str(int digits = 20) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long k);
    Real& operator/=(long k);

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long k);
Real operator/(const Real& a, long k);
Real operator-(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real asin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real round(const Real& x);
Real floor(const Real& x);
Real pi(Bits bits);
/// 2^e at the given precision.
Real two_pow(long e, Bits bits);
/// x with precision changed to bits (rounded).
Real with_precision(const Real& x, Bits bits);

struct Complex {
    Real re;
    Real im;

    explicit Complex(Bits bits = 64) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Bits precision() const { return re.precision(); }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator*(const Complex& a, long k);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& s);
Complex operator/(const Complex& a, long k);
std::ostream& operator<<(std::ostream& os, const Complex& z);

Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Complex conj(const Complex& z);
/// Principal square root (branch cut on the negative real axis).
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
/// exp(2 pi i z).
Complex exp_2pi_i(const Complex& z);

}  // namespace gkz::mp
