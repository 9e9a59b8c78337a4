#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gkz/arith.hpp"
#include "gkz/curve.hpp"

using namespace gkz;

namespace {

const WeierstrassModel e43{0, 1, 1, 0, 0};
const WeierstrassModel e37{0, 0, 1, -1, 0};
const WeierstrassModel e11{0, -1, 1, -10, -20};
const WeierstrassModel e389{0, 1, 1, -2, 0};  // rank 2

RationalPoint pt(long x, long y) { return RationalPoint::affine(mpq_class(x), mpq_class(y)); }

// #E(F_p) by listing every (x, y), singular point included.
std::int64_t brute_count(const WeierstrassModel& e, std::int64_t p) {
    auto r = [p](const mpz_class& v) {
        mpz_class m = v % p;
        if (m < 0) m += p;
        return m.get_si();
    };
    const std::int64_t a1 = r(e.a1()), a2 = r(e.a2()), a3 = r(e.a3()), a4 = r(e.a4()), a6 = r(e.a6());
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = (y * y + a1 * x * y + a3 * y) % p;
            const std::int64_t rhs = (((x * x % p) * x) + a2 * x % p * x + a4 * x + a6) % p;
            if ((lhs - rhs) % p == 0) ++count;
        }
    return count;
}

// #E(F_p) from the number of roots y of y^2 + (a1 x + a3) y - f(x) for each x.
std::int64_t quadratic_count(const WeierstrassModel& e, std::int64_t p) {
    auto r = [p](const mpz_class& v) {
        mpz_class m = v % p;
        if (m < 0) m += p;
        return m.get_si();
    };
    const std::int64_t a1 = r(e.a1()), a2 = r(e.a2()), a3 = r(e.a3()), a4 = r(e.a4()), a6 = r(e.a6());
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t y = 0; y < p; ++y) square[static_cast<std::size_t>(y * y % p)] = true;
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = ((x * x % p) * x + a2 * x % p * x + a4 * x + a6) % p;
        const std::int64_t b = (a1 * x + a3) % p;
        const std::int64_t disc = (b * b + 4 * f) % p;
        count += disc == 0 ? 1 : (square[static_cast<std::size_t>(disc)] ? 2 : 0);
    }
    return count;
}

// q prod (1 - q^n)^2 (1 - q^{11n})^2.
std::vector<std::int64_t> eta_11(std::int64_t m) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m + 1), 0);
    c[0] = 1;
    auto times = [&](std::int64_t step) {
        for (std::int64_t i = m; i >= step; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - step)];
    };
    for (std::int64_t n = 1; n <= m; ++n) {
        times(n);
        times(n);
        if (11 * n <= m) {
            times(11 * n);
            times(11 * n);
        }
    }
    std::vector<std::int64_t> a(static_cast<std::size_t>(m + 1), 0);
    for (std::int64_t n = 1; n <= m; ++n) a[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)];
    return a;
}

}  // namespace

TEST_CASE("invariants of 43A1") {
    CHECK(e43.discriminant() == -43);
    CHECK(e37.discriminant() == 37);
    CHECK(e11.discriminant() == -161051);
    CHECK(e43.b2() == 4);
    CHECK(e43.c4() == 16);
}

TEST_CASE("group law: spec examples") {
    const RationalPoint g = pt(0, 0);
    CHECK(on_curve(e43, g));
    CHECK(add(e43, g, g) == pt(-1, -1));
    CHECK(scalar_mul(e43, 2, g) == pt(-1, -1));
    CHECK(add(e43, g, RationalPoint::at_infinity()) == g);
    CHECK(add(e43, g, negate(e43, g)).infinity);
    CHECK(negate(e43, g) == pt(0, -1));
    CHECK(scalar_mul(e43, 0, g).infinity);
    CHECK(scalar_mul(e43, 3, g) == add(e43, add(e43, g, g), g));
    CHECK(scalar_mul(e43, -5, g) == negate(e43, scalar_mul(e43, 5, g)));
    CHECK_FALSE(on_curve(e43, pt(0, 2)));
}

TEST_CASE("group law axioms on 500 random triples") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> k(-6, 6);
    struct Gens {
        const WeierstrassModel* e;
        std::vector<RationalPoint> gens;
    };
    const std::vector<Gens> curves{{&e43, {pt(0, 0)}}, {&e37, {pt(0, 0)}}, {&e389, {pt(-1, 1), pt(0, 0)}}};
    auto random_point = [&](const Gens& c) {
        RationalPoint p;
        for (const auto& g : c.gens) p = add(*c.e, p, scalar_mul(*c.e, k(rng), g));
        return p;
    };
    for (int i = 0; i < 500; ++i) {
        const Gens& c = curves[static_cast<std::size_t>(i) % curves.size()];
        const WeierstrassModel& e = *c.e;
        const RationalPoint p = random_point(c), q = random_point(c), r = random_point(c);
        const RationalPoint pq = add(e, p, q);
        REQUIRE(on_curve(e, pq));
        CHECK(pq == add(e, q, p));
        CHECK(add(e, pq, r) == add(e, p, add(e, q, r)));
        CHECK(add(e, p, RationalPoint::at_infinity()) == p);
        CHECK(add(e, p, negate(e, p)).infinity);
        CHECK(scalar_mul(e, 2, p) == add(e, p, p));
    }
}

TEST_CASE("point counts agree with enumeration") {
    CHECK(count_points(WeierstrassModel(0, 0, 1, 0, 0), 2) == 3);
    for (const auto* e : {&e43, &e37, &e11, &e389}) {
        for (std::int64_t p = 2; p < 200; ++p) {
            if (!is_prime(p)) continue;
            const auto rt = reduction_type(*e, p);
            if (rt.kind == ReductionKind::additive) continue;
            CHECK(ap(*e, p) == p + 1 - brute_count(*e, p));
            if (rt.kind == ReductionKind::good) CHECK(count_points(*e, p) == brute_count(*e, p));
        }
    }
}

TEST_CASE("point counts for large p agree with a character sum") {
    const WeierstrassModel e53{1, -1, 1, 0, 0}, e5077{0, 0, 1, -7, 6};
    for (const auto* e : {&e43, &e37, &e11, &e53, &e5077}) {
        for (std::int64_t p = 900; p < 20000; ++p) {
            if (!is_prime(p) || e->discriminant() % p == 0) continue;
            CHECK(count_points(*e, p) == quadratic_count(*e, p));
        }
        for (std::int64_t p : {1000003L, 2000003L, 2999999L}) {
            if (!is_prime(p)) continue;
            CHECK(count_points(*e, p) == quadratic_count(*e, p));
        }
    }
}

TEST_CASE("reduction types") {
    CHECK(reduction_type(e43, 2).kind == ReductionKind::good);
    CHECK(reduction_type(e43, 43).kind != ReductionKind::good);
    CHECK(reduction_type(e43, 43).kind != ReductionKind::additive);
    // Split multiplicative reduction leaves p points, nonsplit p + 2, singular point included.
    for (const auto& [e, p] : {std::pair{&e43, 43L}, {&e37, 37L}, {&e11, 11L}, {&e389, 389L}}) {
        const auto kind = reduction_type(*e, p).kind;
        const std::int64_t n = brute_count(*e, p);
        CHECK(kind == (n == p ? ReductionKind::split_multiplicative : ReductionKind::nonsplit_multiplicative));
    }
    CHECK(reduction_type(WeierstrassModel(0, 0, 1, 0, 0), 3).kind == ReductionKind::additive);
}

TEST_CASE("a_E(2) of table curves") {
    CHECK(ap(e43, 2) == -2);
    CHECK(ap(WeierstrassModel(1, 1, 1, -2, 0), 2) == -1);  // 79A1
}

TEST_CASE("Hasse bound for good p up to 10^4") {
    for (const auto* e : {&e43, &e37, &e11, &e389}) {
        const auto disc = abs(e->discriminant());
        for (std::int64_t p = 2; p <= 10000; ++p) {
            if (!is_prime(p) || disc % p == 0) continue;
            const double a = static_cast<double>(ap(*e, p));
            CHECK(a * a <= 4.0 * static_cast<double>(p));
        }
    }
}

TEST_CASE("newform coefficients of 11A1 match the eta product") {
    const auto want = eta_11(600);
    const auto got = an_sequence(e11, 600);
    REQUIRE(got.size() == want.size());
    for (std::size_t n = 1; n < want.size(); ++n) CHECK(got[n] == want[n]);
}

TEST_CASE("a_n multiplicativity on 100 coprime pairs") {
    const auto a43 = an_sequence(e43, 20000);
    const auto a37 = an_sequence(e37, 20000);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(2, 140);
    int pairs = 0;
    while (pairs < 100) {
        const std::int64_t m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1) continue;
        ++pairs;
        CHECK(a43[static_cast<std::size_t>(m * n)] == a43[static_cast<std::size_t>(m)] * a43[static_cast<std::size_t>(n)]);
        CHECK(a37[static_cast<std::size_t>(m * n)] == a37[static_cast<std::size_t>(m)] * a37[static_cast<std::size_t>(n)]);
    }
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const auto i = static_cast<std::size_t>(p);
        CHECK(a43[i * i] == a43[i] * a43[i] - p);
    }
    CHECK(a43[43 * 43] == a43[43] * a43[43]);
}

TEST_CASE("minimal models") {
    CHECK(minimal_model(e43) == e43);
    CHECK(minimal_model(WeierstrassModel(0, 4, 8, 0, 0)) == e43);  // 43A1 scaled by u = 2
    // 37A1 under (r, s, t) = (1, 1, 2)
    const WeierstrassModel moved(2, 2, 5, -3, -6);
    CHECK(moved.discriminant() == 37);
    CHECK(minimal_model(moved) == e37);
    CHECK(minimal_model(WeierstrassModel(0, 0, 0, -1 * 16, 0)) == minimal_model(WeierstrassModel(0, 0, 0, -1, 0)));
}

TEST_CASE("quadratic twist of 43A1 by -43") {
    const WeierstrassModel a = quadratic_twist(e43, -43);
    CHECK(minimal_model(a) == a);
    const auto n = conductor(a);
    REQUIRE(n.has_value());
    CHECK(*n == 1849);
    CHECK(ap(a, 2) == 2);
    CHECK(twisted_ap(e43, -43, 2) == 2);
    CHECK(twisted_ap(e43, -43, 11) == ap(e43, 11));
    CHECK(minimal_model(quadratic_twist(a, -43)) == e43);
    for (std::int64_t p = 2; p < 300; ++p) {
        if (!is_prime(p) || p == 43) continue;
        CHECK(twisted_ap(e43, -43, p) == ap(a, p));
    }
}

TEST_CASE("conductors") {
    CHECK(conductor(e43) == mpz_class(43));
    CHECK(conductor(e37) == mpz_class(37));
    CHECK(conductor(e11) == mpz_class(11));
    CHECK(conductor(e389) == mpz_class(389));
    CHECK(conductor(quadratic_twist(e37, -7)) == mpz_class(37 * 49));
    CHECK(conductor(quadratic_twist(e37, 5)) == mpz_class(37 * 25));
}

TEST_CASE("rational torsion") {
    CHECK(torsion_is_trivial(e43));
    CHECK(torsion_is_trivial(e37));
    CHECK_FALSE(torsion_is_trivial(e11));
    CHECK(scalar_mul(e11, 5, pt(5, 5)).infinity);
    CHECK_FALSE(torsion_is_trivial(WeierstrassModel(0, 0, 0, 0, 1)));
}

TEST_CASE("mod-2 table and the discriminant mod 8") {
    const auto rows = mod2_table();
    CHECK(rows.size() == 16);
    for (const auto& row : rows) {
        const WeierstrassModel e(row.a[0], row.a[1], row.a[2], row.a[3], row.a[4]);
        CHECK(row.a2_trace == 3 - brute_count(e, 2));
    }
    CHECK(rows.front().a == std::array<int, 5>{0, 0, 1, 0, 0});
    CHECK(rows.front().a2_trace == 0);
    CHECK(rows[8].a == std::array<int, 5>{1, 0, 0, 0, 1});
    CHECK(rows[8].a2_trace == -1);

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 300; ++i) {
        const std::array<long, 5> a{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
        const WeierstrassModel e(a[0], a[1], a[2], a[3], a[4]);
        std::array<int, 5> r{};
        for (int j = 0; j < 5; ++j) r[static_cast<std::size_t>(j)] = static_cast<int>(((a[static_cast<std::size_t>(j)] % 8) + 8) % 8);
        mpz_class d = e.discriminant() % 8;
        if (d < 0) d += 8;
        CHECK(discriminant_mod8(r) == d.get_si());
    }
    for (int a3 : {1, 3, 5, 7}) CHECK((5 * a3 * a3 * a3 * a3) % 8 == 5);

    const auto rep = disc_mod8_congruence();
    CHECK(rep.tuples == 32768);
    CHECK(rep.holds_a3_odd());
}
