#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "gkz/analytic.hpp"
#include "gkz/arith.hpp"
#include "gkz/forms.hpp"

using namespace gkz;

namespace {

const WeierstrassModel e43{0, 1, 1, 0, 0};
const WeierstrassModel e37{0, 0, 1, -1, 0};
const WeierstrassModel e11{0, -1, 1, -10, -20};
const WeierstrassModel e389{0, 1, 1, -2, 0};

RationalPoint pt(long x, long y) { return RationalPoint::affine(mpq_class(x), mpq_class(y)); }

double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
    return s * h / 3;
}

struct Cubic {
    double b2, b4, b6;
    double operator()(double x) const { return ((4 * x + b2) * x + 2 * b4) * x + b6; }
};

Cubic cubic_of(const WeierstrassModel& e) { return {e.b2().get_d(), e.b4().get_d(), e.b6().get_d()}; }

// Real roots, descending, by sign changes on a fine grid and bisection.
std::vector<double> real_roots(const Cubic& f) {
    std::vector<double> out;
    const double lim = 100;
    double prev = -lim;
    for (double x = -lim + 0.001; x <= lim; x += 0.001) {
        if ((f(prev) < 0) != (f(x) < 0)) {
            double lo = prev, hi = x;
            for (int i = 0; i < 80; ++i) {
                const double mid = (lo + hi) / 2;
                ((f(lo) < 0) == (f(mid) < 0) ? lo : hi) = mid;
            }
            out.push_back((lo + hi) / 2);
        }
        prev = x;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// 2 int_{e1}^oo dx / sqrt f(x), with x = e1 + tan(phi)^2.
double real_period(const WeierstrassModel& e) {
    const Cubic f = cubic_of(e);
    const double e1 = real_roots(f).front();
    const double p = f.b2 / 4 + e1, q = f.b4 / 2 + e1 * p;
    return 2 * simpson(
                   [&](double phi) {
                       if (phi >= M_PI / 2) return 1.0;
                       const double t = std::tan(phi), x = e1 + t * t;
                       return (1 + t * t) / std::sqrt(x * x + p * x + q);
                   },
                   0, M_PI / 2);
}

// 2 int_{e2}^{e1} dx / sqrt |f(x)|, with x = e2 + (e1 - e2) sin(theta)^2.
double imaginary_period(const WeierstrassModel& e) {
    const auto r = real_roots(cubic_of(e));
    return 2 * simpson([&](double th) { return 1 / std::sqrt(r[1] - r[2] + (r[0] - r[1]) * std::pow(std::sin(th), 2)); },
                       0, M_PI / 2);
}

double sub_abs(const mp::Complex& a, const mp::Complex& b) { return mp::abs(a - b).to_double(); }

}  // namespace

TEST_CASE("truncation bound") {
    CHECK(truncation_bound(128, 1.0) == 21);
    const auto m1 = truncation_bound(192, 0.1), m2 = truncation_bound(192, 0.05);
    CHECK(std::llabs(m2 - 2 * m1) <= 2);
}

TEST_CASE("two-division roots") {
    for (const auto* e : {&e43, &e37, &e11, &e389}) {
        const auto want = real_roots(cubic_of(*e));
        const auto got = two_division_roots(*e, 128);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_double() == doctest::Approx(want[i]).epsilon(1e-9));
    }
}

TEST_CASE("periods agree with quadrature") {
    for (const auto* e : {&e43, &e37, &e11, &e389}) {
        const PeriodLattice lat = period_lattice(*e, 128);
        CHECK(lat.rectangular == (e->discriminant() > 0));
        CHECK(lat.omega1.to_double() == doctest::Approx(real_period(*e)).epsilon(1e-8));
        if (lat.rectangular) {
            CHECK(lat.omega2.re.is_zero());
            CHECK(lat.omega2.im.to_double() == doctest::Approx(imaginary_period(*e)).epsilon(1e-8));
        } else {
            CHECK(lat.omega2.re.to_double() == doctest::Approx(-lat.omega1.to_double() / 2).epsilon(1e-12));
        }
    }
    CHECK_THROWS(period_lattice(e43, 32));
}

TEST_CASE("Weierstrass p satisfies its differential equation") {
    for (const auto* e : {&e43, &e37, &e389}) {
        const mp::Bits bits = 160;
        const PeriodLattice lat = period_lattice(*e, bits);
        const mp::Real g2 = mp::Real(e->c4(), bits) / 12L;
        const mp::Real g3 = mp::Real(e->c6(), bits) / 216L;
        for (int k = 1; k <= 5; ++k) {
            const mp::Complex z = (mp::Complex(lat.omega1, mp::Real(bits)) * static_cast<long>(k) + lat.omega2 * 2L) / 13L;
            const auto [p, dp] = weierstrass_p(z, lat);
            const mp::Complex lhs = dp * dp;
            const mp::Complex rhs = p * p * p * 4L - p * g2 - mp::Complex(g3, mp::Real(bits));
            CHECK(mp::abs(lhs - rhs).to_double() < 1e-35 * (1 + mp::abs(lhs).to_double()));
        }
    }
}

TEST_CASE("elliptic log inverts exp and is a homomorphism to 2^-96") {
    const mp::Bits bits = 192;
    const mp::Real tol = mp::two_pow(-96, bits);
    struct Case {
        const WeierstrassModel* e;
        RationalPoint g;
    };
    for (const Case& c : {Case{&e43, pt(0, 0)}, Case{&e37, pt(0, 0)}, Case{&e389, pt(-1, 1)}, Case{&e389, pt(0, 0)}}) {
        const PeriodLattice lat = period_lattice(*c.e, bits);
        std::vector<RationalPoint> pts;
        std::vector<mp::Complex> logs;
        for (long k : {1L, 2L, 3L, -1L, -4L, 5L, 7L}) {
            pts.push_back(scalar_mul(*c.e, k, c.g));
            const LogValue lv = point_log(*c.e, pts.back(), lat);
            CHECK(lv.residual < tol);
            const auto [x, y] = exp_map(*c.e, lv.z, lat);
            CHECK(mp::abs(x - mp::Complex(mp::Real(pts.back().x, bits), mp::Real(bits))).to_double() <
                  1e-40 * (1 + std::fabs(pts.back().x.get_d())));
            CHECK(mp::abs(y - mp::Complex(mp::Real(pts.back().y, bits), mp::Real(bits))).to_double() <
                  1e-40 * (1 + std::fabs(pts.back().y.get_d())));
            CHECK(real_embedding_defect(lv.z, lat) < tol);
            logs.push_back(lv.z);
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const RationalPoint s = add(*c.e, pts[i], pts[j]);
                if (s.infinity) {
                    CHECK(lattice_distance(logs[i] + logs[j], lat) < tol);
                    continue;
                }
                const LogValue ls = point_log(*c.e, s, lat);
                CHECK(lattice_distance(ls.z - logs[i] - logs[j], lat) < tol);
            }
    }
}

TEST_CASE("elliptic log of a 5-torsion point") {
    const PeriodLattice lat = period_lattice(e11, 192);
    const LogValue lv = point_log(e11, pt(5, 5), lat);
    CHECK(lattice_distance(lv.z * 5L, lat) < mp::two_pow(-96, 192));
    CHECK_FALSE(lattice_distance(lv.z, lat) < mp::Real(0.01, 192));
}

TEST_CASE("lattice reduction helpers") {
    const PeriodLattice lat = period_lattice(e43, 128);
    const mp::Complex w1(lat.omega1, mp::Real(128));
    const mp::Complex z = w1 * 3L - lat.omega2 * 2L + mp::Complex(mp::Real(0.25, 128), mp::Real(0.125, 128));
    const auto [s, t] = lattice_coordinates(z - w1 * 3L + lat.omega2 * 2L, lat);
    const mp::Complex back = w1 * s + lat.omega2 * t;
    CHECK(sub_abs(back, mp::Complex(mp::Real(0.25, 128), mp::Real(0.125, 128))) < 1e-30);
    const mp::Complex red = reduce_mod_lattice(z, lat);
    CHECK(lattice_distance(red - z, lat) < mp::Real(1e-30, 128));
    const auto [rs, rt] = lattice_coordinates(red, lat);
    CHECK(rs.to_double() >= 0);
    CHECK(rs.to_double() < 1);
    CHECK(rt.to_double() >= 0);
    CHECK(rt.to_double() < 1);
}

TEST_CASE("q-series log converges") {
    const mp::Bits bits = 192;
    const QuadForm f{43, 43, 11};
    const mp::Complex t = tau(f, bits);
    const std::int64_t m = truncation_bound(bits, std::sqrt(43.0) / 86.0);
    const auto an = an_sequence(e43, 2 * m + 1);
    const mp::Complex z1 = phi_log(an, t, m), z2 = phi_log(an, t, 2 * m);
    CHECK(mp::abs(z1 - z2) < mp::two_pow(-static_cast<long>(bits), bits));
    CHECK_THROWS(phi_log(an, t, static_cast<std::int64_t>(an.size())));
}

TEST_CASE("recognition of multiples") {
    const mp::Bits bits = 192;
    const PeriodLattice lat = period_lattice(e43, bits);
    const mp::Complex zg = point_log(e43, pt(0, 0), lat).z;

    const Recognition r = recognize_multiple(zg * 4L, zg, lat, 2);
    CHECK(r.beta == 2);
    CHECK(r.residual < mp::two_pow(-150, bits));

    const mp::Complex off(mp::two_pow(-static_cast<long>(bits) / 4, bits), mp::Real(bits));
    CHECK_THROWS_AS(recognize_multiple(zg * 4L + off, zg, lat, 2), AmbiguousRecognition);

    const std::vector<mp::Complex> three = division_candidates(zg, 3, lat);
    CHECK(three.size() == 9);
    for (const auto& c : three) CHECK(lattice_distance(c * 3L - zg, lat) < mp::two_pow(-150, bits));

    // The Heegner point of D = -43 on 43A1.
    const auto an = an_sequence(e43, truncation_bound(bits, std::sqrt(43.0) / 86.0));
    const mp::Complex z = phi_log(an, tau({43, 43, 11}, bits), static_cast<std::int64_t>(an.size()) - 1);
    CHECK(recognize_multiple(z, zg, lat, 2).beta == 2);
}

TEST_CASE("L(E,1) and the root number") {
    CHECK(mp::abs(l_value_at_1(e43, 43, 128, -1)).to_double() < 1e-20);
    CHECK(mp::abs(l_value_at_1(e37, 37, 128, -1)).to_double() < 1e-20);
    CHECK(mp::abs(l_value_at_1(e11, 11, 128, -1)).to_double() > 1e-3);
    // Independent series for root number +1: 2 sum a_n/n exp(-2 pi n / sqrt N).
    const auto an = an_sequence(e11, 200);
    double want = 0;
    for (std::size_t n = 1; n < an.size(); ++n)
        want += 2.0 * static_cast<double>(an[n]) / static_cast<double>(n) *
                std::exp(-2 * M_PI * static_cast<double>(n) / std::sqrt(11.0));
    CHECK(l_value_at_1(e11, 11, 128, 1).to_double() == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(0.2538418608559).epsilon(1e-10));
}
