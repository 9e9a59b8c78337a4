#include "gkz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gkz {

namespace {

using mp::Bits;
using mp::Complex;
using mp::Real;

constexpr Bits kGuard = 32;

Real real_of(const mpz_class& v, Bits bits) { return Real(v, bits); }

Real eval_monic_cubic(const Real& x, const Real& p, const Real& q, const Real& r) {
    return ((x + p) * x + q) * x + r;
}

Real newton_polish(Real x, const Real& p, const Real& q, const Real& r, int steps) {
    for (int i = 0; i < steps; ++i) {
        const Real f = eval_monic_cubic(x, p, q, r);
        const Real df = (x * 3 + p * 2) * x + q;
        if (df.is_zero()) break;
        x -= f / df;
    }
    return x;
}

Real agm(Real a, Real b) {
    const Bits bits = std::max(a.precision(), b.precision());
    const Real eps = mp::two_pow(-static_cast<long>(bits) + 2, bits);
    for (long i = 0; i < 8 * static_cast<long>(bits); ++i) {
        if (mp::abs(a - b) <= eps * mp::abs(a)) return (a + b) / 2;
        Real an = (a + b) / 2;
        b = mp::sqrt(a * b);
        a = std::move(an);
    }
    throw PrecisionExhausted("agm: no convergence");
}

// Limit of (a, b, c) -> ((a+b)/2, sqrt(ab), (c + sqrt(c^2 - a^2 + b^2))/2),
// then asin(a/c)/a.
Real agm_log(Real a, Real b, Real c) {
    const Bits bits = a.precision();
    const Real eps = mp::two_pow(-static_cast<long>(bits) + 2, bits);
    for (long i = 0; i < 8 * static_cast<long>(bits); ++i) {
        if (mp::abs(a - b) <= eps * mp::abs(a)) {
            Real ratio = a / c;
            if (ratio > Real(1L, bits)) ratio = Real(1L, bits);
            return mp::asin(ratio) / a;
        }
        Real disc = c * c - a * a + b * b;
        if (disc.sign() < 0) disc = Real(bits);
        Real cn = (c + mp::sqrt(disc)) / 2;
        Real an = (a + b) / 2;
        b = mp::sqrt(a * b);
        a = std::move(an);
        c = std::move(cn);
    }
    throw PrecisionExhausted("elliptic log: no convergence");
}

struct ReducedBasis {
    Complex w1;
    Complex w2;
};

ReducedBasis gauss_reduce(const PeriodLattice& lattice, Bits bits) {
    Complex w1(mp::with_precision(lattice.omega1, bits), Real(bits));
    Complex w2(mp::with_precision(lattice.omega2.re, bits), mp::with_precision(lattice.omega2.im, bits));
    for (int i = 0; i < 1000; ++i) {
        const Complex ratio = w2 / w1;
        const long m = mp::round(ratio.re).to_long_round();
        if (m != 0) w2 -= w1 * m;
        if (mp::norm(w2) < mp::norm(w1)) {
            std::swap(w1, w2);
        } else {
            break;
        }
    }
    if ((w2 / w1).im.sign() < 0) w2 = -w2;
    return {std::move(w1), std::move(w2)};
}

Complex one(Bits bits) { return Complex(Real(1L, bits), Real(bits)); }

}  // namespace

std::vector<Real> two_division_roots(const WeierstrassModel& e, Bits bits) {
    const Bits w = bits + kGuard;
    const Real p = real_of(e.b2(), w) / 4;
    const Real q = real_of(e.b4(), w) / 2;
    const Real r = real_of(e.b6(), w) / 4;
    Real bound = mp::abs(p);
    if (mp::abs(q) > bound) bound = mp::abs(q);
    if (mp::abs(r) > bound) bound = mp::abs(r);
    bound += Real(1L, w);

    Real lo = -bound, hi = bound;
    const long steps = static_cast<long>(w) + bound.exponent() + 8;
    for (long i = 0; i < steps; ++i) {
        Real mid = (lo + hi) / 2;
        if (eval_monic_cubic(mid, p, q, r).sign() < 0) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    Real root = newton_polish((lo + hi) / 2, p, q, r, 2);
    std::vector<Real> roots{root};
    if (e.discriminant() > 0) {
        // x^2 + s x + t is the cofactor of (x - root).
        const Real s = p + root;
        const Real t = q + root * s;
        const Real disc = mp::sqrt(mp::abs(s * s - t * 4));
        const Real big = s.sign() >= 0 ? (-s - disc) / 2 : (-s + disc) / 2;
        roots.push_back(newton_polish(big, p, q, r, 3));
        roots.push_back(newton_polish(t / big, p, q, r, 3));
    }
    std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a > b; });
    for (auto& x : roots) x = mp::with_precision(x, bits);
    return roots;
}

PeriodLattice period_lattice(const WeierstrassModel& e, Bits bits) {
    if (bits < 64) throw std::invalid_argument("period_lattice: precision below 64 bits");
    const Bits w = bits + kGuard;
    PeriodLattice lat;
    lat.precision = bits;
    lat.rectangular = e.discriminant() > 0;
    auto roots = two_division_roots(e, w);
    const Real pi = mp::pi(w);
    if (lat.rectangular) {
        const Real& e1 = roots[0];
        const Real& e2 = roots[1];
        const Real& e3 = roots[2];
        const Real s13 = mp::sqrt(e1 - e3);
        lat.omega1 = pi / agm(s13, mp::sqrt(e1 - e2));
        lat.omega2 = Complex(Real(w), pi / agm(s13, mp::sqrt(e2 - e3)));
    } else {
        const Real& e1 = roots[0];
        const Real b2 = real_of(e.b2(), w);
        const Real b4 = real_of(e.b4(), w);
        const Real beta = mp::sqrt(e1 * e1 * 3 + b2 * e1 / 2 + b4 / 2);
        const Real alpha = e1 * 3 + b2 / 4;
        const Real a = mp::sqrt(beta) * 2;
        lat.omega1 = pi * 2 / agm(a, mp::sqrt(alpha + beta * 2));
        lat.omega2 = Complex(-lat.omega1 / 2, pi / agm(a, mp::sqrt(beta * 2 - alpha)));
    }
    lat.omega1 = mp::with_precision(lat.omega1, bits);
    lat.omega2 = Complex(mp::with_precision(lat.omega2.re, bits), mp::with_precision(lat.omega2.im, bits));
    for (auto& x : roots) x = mp::with_precision(x, bits);
    lat.roots = std::move(roots);
    return lat;
}

std::int64_t truncation_bound(Bits bits, double im_min) {
    if (!(im_min > 0)) throw std::invalid_argument("truncation_bound: im_min must be positive");
    const double m = (static_cast<double>(bits) * std::log(2.0) + 40.0) / (2.0 * M_PI * im_min);
    return static_cast<std::int64_t>(std::ceil(m));
}

Complex phi_log(const std::vector<std::int64_t>& an, const Complex& tau, std::int64_t m) {
    if (m < 1 || static_cast<std::size_t>(m) >= an.size())
        throw std::invalid_argument("phi_log: " + std::to_string(m) + " terms requested, " +
                                    std::to_string(an.empty() ? 0 : an.size() - 1) + " available");
    if (tau.im.sign() <= 0) throw std::invalid_argument("phi_log: tau not in the upper half plane");
    const Bits out = tau.precision();
    const Bits w = out + kGuard + static_cast<Bits>(std::log2(static_cast<double>(m)) + 1);
    Complex tw(mp::with_precision(tau.re, w), mp::with_precision(tau.im, w));
    const Complex q = mp::exp_2pi_i(tw);
    const long stop = -static_cast<long>(w) - 8;

    mpfr_t qr, qi, sr, si, t1, t2;
    for (mpfr_ptr v : {qr, qi, sr, si, t1, t2}) mpfr_init2(v, w);
    mpfr_set(qr, q.re.get(), MPFR_RNDN);
    mpfr_set(qi, q.im.get(), MPFR_RNDN);
    mpfr_set_zero(sr, 1);
    mpfr_set_zero(si, 1);
    for (std::int64_t n = 1; n <= m; ++n) {
        if (mpfr_get_exp(qr) < stop && mpfr_get_exp(qi) < stop) break;
        const long a = static_cast<long>(an[n]);
        if (a != 0) {
            mpfr_mul_si(t1, qr, a, MPFR_RNDN);
            mpfr_div_si(t1, t1, static_cast<long>(n), MPFR_RNDN);
            mpfr_add(sr, sr, t1, MPFR_RNDN);
            mpfr_mul_si(t1, qi, a, MPFR_RNDN);
            mpfr_div_si(t1, t1, static_cast<long>(n), MPFR_RNDN);
            mpfr_add(si, si, t1, MPFR_RNDN);
        }
        mpfr_fmms(t1, qr, q.re.get(), qi, q.im.get(), MPFR_RNDN);
        mpfr_fmma(t2, qr, q.im.get(), qi, q.re.get(), MPFR_RNDN);
        mpfr_swap(qr, t1);
        mpfr_swap(qi, t2);
    }
    Complex z(out);
    mpfr_set(z.re.get(), sr, MPFR_RNDN);
    mpfr_set(z.im.get(), si, MPFR_RNDN);
    for (mpfr_ptr v : {qr, qi, sr, si, t1, t2}) mpfr_clear(v);
    return z;
}

std::pair<Real, Real> lattice_coordinates(const Complex& z, const PeriodLattice& lattice) {
    Real t = z.im / lattice.omega2.im;
    Real s = (z.re - t * lattice.omega2.re) / lattice.omega1;
    return {std::move(s), std::move(t)};
}

Complex reduce_mod_lattice(const Complex& z, const PeriodLattice& lattice) {
    auto [s, t] = lattice_coordinates(z, lattice);
    const Real fs = mp::floor(s);
    const Real ft = mp::floor(t);
    return {z.re - fs * lattice.omega1 - ft * lattice.omega2.re, z.im - ft * lattice.omega2.im};
}

Real lattice_distance(const Complex& z, const PeriodLattice& lattice) {
    auto [s, t] = lattice_coordinates(z, lattice);
    const Real ds = s - mp::round(s);
    const Real dt = t - mp::round(t);
    return mp::abs(Complex(ds * lattice.omega1 + dt * lattice.omega2.re, dt * lattice.omega2.im));
}

Real real_embedding_defect(const Complex& z, const PeriodLattice& lattice) {
    const Real period = lattice.rectangular ? lattice.omega2.im / 2 : lattice.omega2.im;
    const Real k = mp::round(z.im / period);
    return mp::abs(z.im - k * period);
}

std::pair<Complex, Complex> weierstrass_p(const Complex& z, const PeriodLattice& lattice) {
    const Bits out = std::max(z.precision(), lattice.precision);
    const Bits w = out + kGuard;
    const auto [w1, w2] = gauss_reduce(lattice, w);
    const Complex tau = w2 / w1;
    Complex zz(mp::with_precision(z.re, w), mp::with_precision(z.im, w));
    const long kt = mp::round((zz / w1).im / tau.im).to_long_round();
    zz -= w2 * kt;
    const long ks = mp::round((zz / w1).re).to_long_round();
    zz -= w1 * ks;

    const Complex q = mp::exp_2pi_i(tau);
    const Complex u = mp::exp_2pi_i(zz / w1);
    const Complex uinv = one(w) / u;
    const Complex unit = one(w);

    auto sq = [](const Complex& a) { return a * a; };
    Complex p = Complex(Real(1L, w) / 12, Real(w)) + u / sq(unit - u);
    Complex dp = u * (unit + u) / (sq(unit - u) * (unit - u));
    Complex qn = q;
    const Real eps = mp::two_pow(-static_cast<long>(w) - 8, w);
    Real scale = mp::abs(u);
    if (mp::abs(uinv) > scale) scale = mp::abs(uinv);
    for (int n = 1; n < 100000; ++n) {
        if (mp::abs(qn) * scale < eps) break;
        const Complex a = qn * u;
        const Complex b = qn * uinv;
        const Complex da = unit - a;
        const Complex db = unit - b;
        const Complex dq = unit - qn;
        p += a / sq(da) + b / sq(db) - qn * 2 / sq(dq);
        dp += a * (unit + a) / (sq(da) * da) - b * (unit + b) / (sq(db) * db);
        qn *= q;
    }
    const Complex k = Complex(Real(w), mp::pi(w) * 2) / w1;
    const Complex k2 = k * k;
    Complex pv = k2 * p;
    Complex dpv = k2 * k * dp;
    return {Complex(mp::with_precision(pv.re, out), mp::with_precision(pv.im, out)),
            Complex(mp::with_precision(dpv.re, out), mp::with_precision(dpv.im, out))};
}

std::pair<Complex, Complex> exp_map(const WeierstrassModel& e, const Complex& z, const PeriodLattice& lattice) {
    auto [p, dp] = weierstrass_p(z, lattice);
    const Bits bits = p.precision();
    Complex x = p - Complex(Real(e.b2(), bits) / 12, Real(bits));
    Complex y = (dp - x * Real(e.a1(), bits) - Complex(Real(e.a3(), bits), Real(bits))) / 2L;
    return {std::move(x), std::move(y)};
}

LogValue point_log(const WeierstrassModel& e, const RationalPoint& pt, const PeriodLattice& lattice) {
    if (pt.infinity) throw std::invalid_argument("point_log: point at infinity");
    if (!on_curve(e, pt)) throw CurveError("point_log: point " + pt.str() + " not on " + e.str());
    const Bits bits = lattice.precision;
    const Bits w = bits + kGuard;
    const Real x(pt.x, w);
    const mpq_class wexact = 2 * pt.y + e.a1() * pt.x + e.a3();
    const int wsign = sgn(wexact);
    const Real eps = mp::two_pow(-static_cast<long>(bits), w);

    auto roots = two_division_roots(e, w);
    const PeriodLattice lat = period_lattice(e, w);
    Complex z(w);
    int base_sign = -1;  // sign of p' at the unsigned log
    if (lat.rectangular) {
        const Real& e1 = roots[0];
        const Real& e2 = roots[1];
        const Real& e3 = roots[2];
        const Real a = mp::sqrt(e1 - e3);
        const Real b = mp::sqrt(e1 - e2);
        if (x >= e1 - eps) {
            const Real d = x - e3;
            z.re = agm_log(a, b, mp::sqrt(d));
        } else {
            // Egg component: translate by the 2-torsion point over e3.
            const Real d = x - e3;
            if (mp::abs(d) < eps) {
                z = Complex(Real(w), lat.omega2.im / 2);
            } else {
                const Real xt = e3 + (e3 - e1) * (e3 - e2) / d;
                z = Complex(agm_log(a, b, mp::sqrt(xt - e3)), lat.omega2.im / 2);
            }
            base_sign = 1;
        }
    } else {
        const Real& e1 = roots[0];
        const Real b2 = real_of(e.b2(), w);
        const Real b4 = real_of(e.b4(), w);
        const Real beta = mp::sqrt(e1 * e1 * 3 + b2 * e1 / 2 + b4 / 2);
        const Real alpha = e1 * 3 + b2 / 4;
        const Real d = x - e1;
        if (d < eps) {
            z.re = lat.omega1 / 2;
        } else {
            const Real sd = mp::sqrt(d);
            const Real a = mp::sqrt(beta) * 2;
            const Real b = mp::sqrt(alpha + beta * 2);
            const Real c = (d + beta) / sd;
            z.re = agm_log(a, b, c);
            if ((d - beta).sign() < 0) z.re = lat.omega1 / 2 - z.re;
        }
    }
    if (wsign != 0 && wsign != base_sign) z = -z;

    LogValue out;
    out.precision = bits;
    const Complex zr = reduce_mod_lattice(z, lat);
    out.z = Complex(mp::with_precision(zr.re, bits), mp::with_precision(zr.im, bits));
    const auto [xc, yc] = exp_map(e, zr, lat);
    Real scale = mp::abs(x);
    if (scale < Real(1L, w)) scale = Real(1L, w);
    (void)yc;
    out.residual = mp::with_precision(mp::abs(xc - Complex(x, Real(w))) / scale, bits);
    return out;
}

std::vector<Complex> division_candidates(const Complex& z, int u, const PeriodLattice& lattice) {
    if (u < 1) throw std::invalid_argument("division_candidates: u must be positive");
    std::vector<Complex> out;
    const Complex w1(lattice.omega1, Real(lattice.precision));
    for (int m = 0; m < u; ++m)
        for (int n = 0; n < u; ++n) out.push_back((z + w1 * static_cast<long>(m) + lattice.omega2 * static_cast<long>(n)) / static_cast<long>(u));
    return out;
}

Recognition recognize_multiple(const std::vector<Complex>& candidates, const Complex& zg,
                               const PeriodLattice& lattice) {
    const Bits bits = lattice.precision;
    const Real merge = mp::two_pow(-static_cast<long>(bits) / 2, bits);
    std::vector<const Complex*> distinct;
    for (const auto& c : candidates) {
        bool dup = false;
        for (const Complex* k : distinct)
            if (lattice_distance(c - *k, lattice) < merge) {
                dup = true;
                break;
            }
        if (!dup) distinct.push_back(&c);
    }
    if (distinct.empty()) throw std::invalid_argument("recognize_multiple: no candidates");

    const auto [gs, gt] = lattice_coordinates(zg, lattice);
    Real best(bits), second(bits);
    mpfr_set_inf(best.get(), 1);
    mpfr_set_inf(second.get(), 1);
    long best_beta = 0;
    const Complex* best_w = nullptr;
    for (const Complex* c : distinct) {
        const auto [ws, wt] = lattice_coordinates(*c, lattice);
        for (long beta = -kBetaSearchBound; beta <= kBetaSearchBound; ++beta) {
            Real ds = ws - gs * beta;
            ds -= mp::round(ds);
            Real dt = wt - gt * beta;
            dt -= mp::round(dt);
            const Real r = mp::abs(Complex(ds * lattice.omega1 + dt * lattice.omega2.re, dt * lattice.omega2.im));
            if (r < best) {
                second = best;
                best = r;
                best_beta = beta;
                best_w = c;
            } else if (r < second) {
                second = r;
            }
        }
    }
    const Real tol = mp::two_pow(-static_cast<long>(bits) / 3, bits);
    if (!(best < tol) || !(second > best * 64L)) {
        throw AmbiguousRecognition("recognize_multiple: best residual " + best.str(6) + ", runner-up " +
                                       second.str(6) + " at " + std::to_string(bits) + " bits",
                                   best.to_double(), second.to_double());
    }
    return {best_beta, best, second, *best_w};
}

Recognition recognize_multiple(const Complex& z, const Complex& zg, const PeriodLattice& lattice, int u) {
    return recognize_multiple(division_candidates(z, u, lattice), zg, lattice);
}

Real l_value_at_1(const std::vector<std::int64_t>& an, std::int64_t n, Bits bits, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("l_value_at_1: sign must be +1 or -1");
    const Bits w = bits + kGuard;
    const Real root_n = mp::sqrt(Real(static_cast<long>(n), w));
    const Real a = Real(11L, w) / 10;
    const Real eps = mp::two_pow(-static_cast<long>(w) - 8, w);
    auto partial = [&](const Real& scale) {
        const Real x = mp::exp(-(mp::pi(w) * 2 * scale) / root_n);
        Real xn = x;
        Real sum(w);
        for (std::size_t k = 1; k < an.size(); ++k) {
            if (xn < eps) return sum;
            if (an[k] != 0) sum += xn * static_cast<long>(an[k]) / static_cast<long>(k);
            xn *= x;
        }
        throw std::invalid_argument("l_value_at_1: coefficient sequence too short");
    };
    Real v = partial(a);
    if (sign > 0) {
        v += partial(Real(1L, w) / a);
    } else {
        v -= partial(Real(1L, w) / a);
    }
    return mp::with_precision(v, bits);
}

std::int64_t l_value_terms(std::int64_t n, Bits bits) {
    return truncation_bound(bits + kGuard + 8, 1.0 / (1.1 * std::sqrt(static_cast<double>(n))));
}

Real l_value_at_1(const WeierstrassModel& e, std::int64_t n, Bits bits, int sign) {
    return l_value_at_1(an_sequence(e, l_value_terms(n, bits)), n, bits, sign);
}

}  // namespace gkz
