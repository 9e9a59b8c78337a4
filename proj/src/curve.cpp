#include "gkz/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "gkz/arith.hpp"

namespace gkz {

namespace {

std::int64_t mod_z(const mpz_class& a, std::int64_t p) {
    return static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
}

bool divides(std::int64_t p, const mpz_class& a) {
    return mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Trial-division factorisation of a GMP integer; primes ascending.
std::vector<mpz_class> prime_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    constexpr unsigned long kTrialLimit = 10'000'000;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::runtime_error("prime_divisors: cofactor " + n.get_str() +
                                     " has no factor below the trial-division limit");
        out.push_back(n);
    }
    return out;
}

// chi[v] = (v / p) for v in [0, p).
std::vector<signed char> legendre_table(std::int64_t p) {
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y <= p / 2; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
    return chi;
}

constexpr std::int64_t kBsgsThreshold = 1000;

// Arithmetic on y^2 = x^3 + a x + b over F_p, p > 3 and p^2 < 2^63.
class ShortCurveFp {
public:
    struct Pt {
        std::int64_t x = 0, y = 0;
        bool inf = true;
    };

    ShortCurveFp(std::int64_t a, std::int64_t b, std::int64_t p) : a_(a), b_(b), p_(p) {}

    std::int64_t rhs(std::int64_t x) const { return ((x * x % p_ + a_) % p_ * x + b_) % p_; }

    Pt neg(const Pt& P) const { return P.inf ? P : Pt{P.x, (p_ - P.y) % p_, false}; }

    Pt add(const Pt& P, const Pt& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        std::int64_t lam;
        if (P.x == Q.x) {
            if ((P.y + Q.y) % p_ == 0) return {};
            lam = (3 * (P.x * P.x % p_) + a_) % p_ * inv(2 * P.y % p_) % p_;
        } else {
            lam = mod(Q.y - P.y, p_) * inv(mod(Q.x - P.x, p_)) % p_;
        }
        const std::int64_t x = mod(lam * lam - P.x - Q.x, p_);
        return {x, mod(lam * (P.x - x) - P.y, p_), false};
    }

    Pt mul(std::int64_t k, Pt P) const {
        if (k < 0) {
            k = -k;
            P = neg(P);
        }
        Pt acc;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc = add(acc, P);
            P = add(P, P);
        }
        return acc;
    }

    std::optional<Pt> lift_x(std::int64_t x) const {
        const auto y = sqrt_mod_prime(rhs(x), p_);
        if (!y) return std::nullopt;
        return Pt{x, *y, false};
    }

    // Some m in [lo, hi] with mP = 0, if one exists.
    std::optional<std::int64_t> annihilator(const Pt& P, std::int64_t lo, std::int64_t hi) const {
        const auto s = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(hi - lo + 1))));
        auto first_multiple = [&](std::int64_t t) -> std::optional<std::int64_t> {
            const std::int64_t m = (lo + t - 1) / t * t;
            if (m <= hi) return m;
            return std::nullopt;
        };
        std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> baby;
        Pt jP;
        for (std::int64_t j = 1; j <= s; ++j) {
            jP = add(jP, P);
            if (jP.inf) return first_multiple(j);
            const auto [it, fresh] = baby.emplace(jP.x, std::pair{j, jP.y});
            if (!fresh) return first_multiple(it->second.second == jP.y ? j - it->second.first : j + it->second.first);
        }
        const Pt step = mul(2 * s + 1, P);
        Pt r = mul(lo + s, P);
        for (std::int64_t c = lo + s; c - s <= hi; c += 2 * s + 1, r = add(r, step)) {
            std::optional<std::int64_t> m;
            if (r.inf) {
                m = c;
            } else if (auto it = baby.find(r.x); it != baby.end()) {
                m = it->second.second == r.y ? c - it->second.first : c + it->second.first;
            }
            if (m && *m >= lo && *m <= hi) return m;
        }
        return std::nullopt;
    }

    std::int64_t order(const Pt& P, std::int64_t multiple) const {
        std::int64_t ord = multiple;
        for (auto [q, k] : factorize(multiple).factors) {
            (void)k;
            while (ord % q == 0 && mul(ord / q, P).inf) ord /= q;
        }
        return ord;
    }

private:
    std::int64_t inv(std::int64_t v) const { return powmod(v, p_ - 2, p_); }

    std::int64_t a_, b_, p_;
};

// #E(F_p) for y^2 = x^3 + a x + b by Mestre's method: orders of random
// points on E and on its quadratic twist narrow the Hasse interval to
// a single value. Terminates for p > 229.
std::int64_t count_points_bsgs(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t g = 2;
    while (powmod(g, (p - 1) / 2, p) != p - 1) ++g;
    const std::int64_t g2 = g * g % p;
    const ShortCurveFp curves[2] = {ShortCurveFp(a, b, p), ShortCurveFp(a * g2 % p, b * g2 % p * g % p, p)};

    auto width = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * p)));
    while (width * width > 4 * p) --width;
    while ((width + 1) * (width + 1) <= 4 * p) ++width;
    const std::int64_t lo = p + 1 - width, hi = p + 1 + width;

    std::int64_t lcm[2] = {1, 1};
    std::mt19937_64 rng(static_cast<std::uint64_t>(p));
    std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
    for (int round = 0; round < 400; ++round) {
        const int which = round % 2;
        const ShortCurveFp& c = curves[which];
        std::optional<ShortCurveFp::Pt> pt;
        while (!pt) pt = c.lift_x(pick(rng));
        const auto m = c.annihilator(*pt, lo, hi);
        if (!m) throw std::logic_error("count_points: no annihilator in the Hasse interval mod " + std::to_string(p));
        lcm[which] = std::lcm(lcm[which], c.order(*pt, *m));
        const std::int64_t l = lcm[which];
        const std::int64_t first = (lo + l - 1) / l * l;
        if (first <= hi && first + l > hi) return which == 0 ? first : 2 * p + 2 - first;
    }
    throw std::logic_error("count_points: group order undetermined mod " + std::to_string(p));
}

struct ResidueModel {
    std::int64_t a1, a2, a3, a4, a6;
};

ResidueModel reduce_mod(const WeierstrassModel& e, std::int64_t p) {
    return {mod_z(e.a1(), p), mod_z(e.a2(), p), mod_z(e.a3(), p), mod_z(e.a4(), p),
            mod_z(e.a6(), p)};
}

// Brute-force affine count for tiny p (p = 2, 3), valid in any characteristic.
std::int64_t count_affine_small(const ResidueModel& m, std::int64_t p) {
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = y * y + m.a1 * x * y + m.a3 * y;
            const std::int64_t rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
            if (mod(lhs - rhs, p) == 0) ++n;
        }
    return n;
}

bool locally_minimal(const WeierstrassModel& e, std::int64_t p) {
    mpz_class p12 = pow_z(mpz_class(static_cast<long>(p)), 12);
    if (!mpz_divisible_p(e.discriminant().get_mpz_t(), p12.get_mpz_t())) return true;
    return minimal_model(e) == e;
}

}  // namespace

WeierstrassModel::WeierstrassModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4,
                                   mpz_class a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    const auto& [x1, x2, x3, x4, x6] = a_;
    b2_ = x1 * x1 + 4 * x2;
    b4_ = 2 * x4 + x1 * x3;
    b6_ = x3 * x3 + 4 * x6;
    b8_ = x1 * x1 * x6 + 4 * x2 * x6 - x1 * x3 * x4 + x2 * x3 * x3 - x4 * x4;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
    if (disc_ == 0) throw CurveError("singular Weierstrass model " + str());
}

WeierstrassModel::WeierstrassModel(long a1, long a2, long a3, long a4, long a6)
    : WeierstrassModel(mpz_class(a1), mpz_class(a2), mpz_class(a3), mpz_class(a4),
                       mpz_class(a6)) {}

std::optional<WeierstrassModel> WeierstrassModel::from_c4c6(const mpz_class& c4,
                                                            const mpz_class& c6) {
    const mpz_class d1728 = c4 * c4 * c4 - c6 * c6;
    if (d1728 == 0 || !mpz_divisible_ui_p(d1728.get_mpz_t(), 1728)) return std::nullopt;
    // b2 = -c6 (mod 12), taken in (-6, 6].
    long b2l = static_cast<long>(mpz_fdiv_ui(mpz_class(-c6).get_mpz_t(), 12));
    if (b2l > 6) b2l -= 12;
    const mpz_class b2(b2l);
    mpz_class t = b2 * b2 - c4;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 24)) return std::nullopt;
    const mpz_class b4 = t / 24;
    t = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 216)) return std::nullopt;
    const mpz_class b6 = t / 216;
    const long a1 = static_cast<long>(mpz_fdiv_ui(b2.get_mpz_t(), 2));
    const long a3 = static_cast<long>(mpz_fdiv_ui(b6.get_mpz_t(), 2));
    const mpz_class n2 = b2 - a1, n4 = b4 - a1 * a3, n6 = b6 - a3;
    if (!mpz_divisible_ui_p(n2.get_mpz_t(), 4) || !mpz_divisible_ui_p(n4.get_mpz_t(), 2) ||
        !mpz_divisible_ui_p(n6.get_mpz_t(), 4))
        return std::nullopt;
    WeierstrassModel m(mpz_class(a1), n2 / 4, mpz_class(a3), n4 / 2, n6 / 4);
    if (m.c4() != c4 || m.c6() != c6) return std::nullopt;
    return m;
}

std::string WeierstrassModel::str() const {
    std::ostringstream os;
    os << '[' << a_[0] << ',' << a_[1] << ',' << a_[2] << ',' << a_[3] << ',' << a_[4] << ']';
    return os.str();
}

std::string RationalPoint::str() const {
    if (infinity) return "O";
    return "(" + x.get_str() + "," + y.get_str() + ")";
}

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::split_multiplicative: return "split";
        case ReductionKind::nonsplit_multiplicative: return "nonsplit";
        case ReductionKind::additive: return "additive";
    }
    return "?";
}

bool on_curve(const WeierstrassModel& e, const RationalPoint& p) {
    if (p.infinity) return true;
    const mpq_class& x = p.x;
    const mpq_class& y = p.y;
    const mpq_class lhs = y * y + e.a1() * x * y + e.a3() * y;
    const mpq_class rhs = x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
    return lhs == rhs;
}

RationalPoint negate(const WeierstrassModel& e, const RationalPoint& p) {
    if (p.infinity) return p;
    return RationalPoint::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

namespace {

RationalPoint add_unchecked(const WeierstrassModel& e, const RationalPoint& p,
                            const RationalPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    mpq_class lambda, nu;
    if (p.x != q.x) {
        const mpq_class dx = q.x - p.x;
        lambda = (q.y - p.y) / dx;
        nu = (p.y * q.x - q.y * p.x) / dx;
    } else {
        const mpq_class den = p.y + q.y + e.a1() * q.x + e.a3();
        if (den == 0) return RationalPoint::at_infinity();
        const mpq_class& x = p.x;
        const mpq_class& y = p.y;
        lambda = (3 * x * x + 2 * e.a2() * x + e.a4() - e.a1() * y) / den;
        nu = (-x * x * x + e.a4() * x + 2 * e.a6() - e.a3() * y) / den;
    }
    mpq_class x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x - q.x;
    mpq_class y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return RationalPoint::affine(std::move(x3), std::move(y3));
}

}  // namespace

RationalPoint add(const WeierstrassModel& e, const RationalPoint& p, const RationalPoint& q) {
    if (!on_curve(e, p) || !on_curve(e, q))
        throw CurveError("add: point not on " + e.str());
    return add_unchecked(e, p, q);
}

RationalPoint scalar_mul(const WeierstrassModel& e, long k, const RationalPoint& p) {
    if (!on_curve(e, p)) throw CurveError("scalar_mul: point " + p.str() + " not on " + e.str());
    RationalPoint base = k < 0 ? negate(e, p) : p;
    unsigned long n = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    RationalPoint acc = RationalPoint::at_infinity();
    while (n) {
        if (n & 1) acc = add_unchecked(e, acc, base);
        n >>= 1;
        if (n) base = add_unchecked(e, base, base);
    }
    return acc;
}

std::int64_t count_points(const WeierstrassModel& e, std::int64_t p) {
    if (divides(p, e.discriminant()))
        throw CurveError("count_points: singular reduction at " + std::to_string(p));
    const ResidueModel m = reduce_mod(e, p);
    if (p <= 3) return 1 + count_affine_small(m, p);
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    if (p > kBsgsThreshold) {
        if (p > 3'000'000'000LL) throw std::invalid_argument("count_points: p too large");
        // y^2 = x^3 - 27 c4 x - 54 c6 is isomorphic to E over F_p
        return count_points_bsgs(mod(-27 * mod_z(e.c4(), p), p), mod(-54 * mod_z(e.c6(), p), p), p);
    }
    const std::int64_t b2 = mod_z(e.b2(), p), b4 = mod_z(e.b4(), p), b6 = mod_z(e.b6(), p);
    const auto chi = legendre_table(p);
    std::int64_t total = 1 + p;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = ((((4 * x + b2) % p) * x + 2 * b4) % p * x + b6) % p;
        total += chi[static_cast<std::size_t>(f)];
    }
    return total;
}

ReductionType reduction_type(const WeierstrassModel& e, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("reduction_type: p must be prime");
    if (!divides(p, e.discriminant())) return {p, ReductionKind::good};
    if (!locally_minimal(e, p))
        throw CurveError("reduction_type: model " + e.str() + " is not minimal at " +
                         std::to_string(p));
    if (divides(p, e.c4())) return {p, ReductionKind::additive};

    // Locate the node and test whether the tangent cone
    // T^2 + a1 T - (3 x0 + a2) splits over F_p.
    const ResidueModel m = reduce_mod(e, p);
    std::optional<std::int64_t> x0;
    if (p == 2) {
        for (std::int64_t x = 0; x < 2 && !x0; ++x)
            for (std::int64_t y = 0; y < 2; ++y) {
                const bool on = mod(y * y + m.a1 * x * y + m.a3 * y -
                                        (x * x * x + m.a2 * x * x + m.a4 * x + m.a6), 2) == 0;
                const bool dx = mod(m.a1 * y - (3 * x * x + 2 * m.a2 * x + m.a4), 2) == 0;
                const bool dy = mod(2 * y + m.a1 * x + m.a3, 2) == 0;
                if (on && dx && dy) {
                    x0 = x;
                    break;
                }
            }
    } else {
        const std::int64_t b2 = mod_z(e.b2(), p), b4 = mod_z(e.b4(), p), b6 = mod_z(e.b6(), p);
        for (std::int64_t x = 0; x < p; ++x) {
            const __int128 f = ((((__int128)4 * x + b2) % p * x + 2 * b4) % p * x + b6) % p;
            const __int128 df = (((__int128)12 * x + 2 * b2) % p * x + 2 * b4) % p;
            if (f == 0 && df == 0) {
                x0 = x;
                break;
            }
        }
    }
    if (!x0) throw std::logic_error("reduction_type: node not found");
    const std::int64_t c = mod(3 * *x0 + m.a2, p);
    bool split = false;
    for (std::int64_t t = 0; t < p && !split; ++t)
        split = mod(static_cast<std::int64_t>((__int128)t * t % p) + m.a1 * t - c, p) == 0;
    return {p, split ? ReductionKind::split_multiplicative : ReductionKind::nonsplit_multiplicative};
}

std::int64_t ap(const WeierstrassModel& e, std::int64_t p) {
    const ReductionType rt = reduction_type(e, p);
    switch (rt.kind) {
        case ReductionKind::good: {
            const std::int64_t a = p + 1 - count_points(e, p);
            if (static_cast<double>(a) * a > 4.0 * static_cast<double>(p))
                throw std::logic_error("ap: Hasse bound violated at " + std::to_string(p));
            return a;
        }
        case ReductionKind::split_multiplicative: return 1;
        case ReductionKind::nonsplit_multiplicative: return -1;
        case ReductionKind::additive: break;
    }
    throw CurveError("ap: additive reduction at " + std::to_string(p) + " on " + e.str());
}

std::vector<std::int64_t> an_sequence(const WeierstrassModel& e, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("an_sequence: M must be positive");
    const auto size = static_cast<std::size_t>(m) + 1;
    std::vector<std::int64_t> spf(size, 0);
    for (std::int64_t i = 2; i <= m; ++i) {
        if (spf[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i; j <= m; j += i)
            if (!spf[static_cast<std::size_t>(j)]) spf[static_cast<std::size_t>(j)] = i;
    }
    std::vector<std::int64_t> a(size, 0);
    a[1] = 1;
    for (std::int64_t n = 2; n <= m; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t rest = n, pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        auto& out = a[static_cast<std::size_t>(n)];
        if (rest != 1) {
            out = a[static_cast<std::size_t>(pk)] * a[static_cast<std::size_t>(rest)];
        } else if (pk == p) {
            out = ap(e, p);
        } else {
            const std::int64_t delta = divides(p, e.discriminant()) ? 0 : 1;
            out = a[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(pk / p)] -
                  delta * p * a[static_cast<std::size_t>(pk / p / p)];
        }
    }
    return a;
}

WeierstrassModel minimal_model(const WeierstrassModel& e) {
    mpz_class c4 = e.c4(), c6 = e.c6();
    mpz_class g = gcd(c4, c6);
    if (c4 == 0) g = c6;
    if (c6 == 0) g = c4;
    for (const mpz_class& p : prime_divisors(g)) {
        const mpz_class p4 = pow_z(p, 4), p6 = pow_z(p, 6);
        while (mpz_divisible_p(c4.get_mpz_t(), p4.get_mpz_t()) &&
               mpz_divisible_p(c6.get_mpz_t(), p6.get_mpz_t())) {
            const mpz_class n4 = c4 / p4, n6 = c6 / p6;
            if (!WeierstrassModel::from_c4c6(n4, n6)) break;
            c4 = n4;
            c6 = n6;
        }
    }
    auto m = WeierstrassModel::from_c4c6(c4, c6);
    if (!m) throw std::logic_error("minimal_model: invariants lost integrality");
    return *m;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& e, std::int64_t d) {
    if (!is_fundamental(d))
        throw std::invalid_argument("quadratic_twist: " + std::to_string(d) +
                                    " is not a fundamental discriminant");
    // y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6 has invariants (6^4 d^2 c4, 6^6 d^3 c6).
    const mpz_class dz(static_cast<long>(d));
    const WeierstrassModel shortm(mpz_class(0), mpz_class(0), mpz_class(0),
                                  -27 * dz * dz * e.c4(), -54 * dz * dz * dz * e.c6());
    return minimal_model(shortm);
}

std::optional<mpz_class> conductor(const WeierstrassModel& minimal) {
    mpz_class n = 1;
    for (const mpz_class& p : prime_divisors(minimal.discriminant())) {
        const bool additive = mpz_divisible_p(minimal.c4().get_mpz_t(), p.get_mpz_t()) != 0;
        if (!additive) {
            n *= p;
        } else if (p >= 5) {
            n *= p * p;
        } else {
            return std::nullopt;
        }
    }
    return n;
}

std::int64_t twisted_ap(const WeierstrassModel& e, std::int64_t d, std::int64_t p) {
    if (!is_fundamental(d))
        throw std::invalid_argument("twisted_ap: " + std::to_string(d) + " is not fundamental");
    if (d % p == 0 || divides(p, e.discriminant()))
        throw std::invalid_argument("twisted_ap: p = " + std::to_string(p) +
                                    " divides the twist discriminant or the level");
    return kronecker(d, p) * ap(e, p);
}

std::vector<Mod2Row> mod2_table() {
    std::vector<Mod2Row> rows;
    for (int bits = 0; bits < 32; ++bits) {
        const std::array<int, 5> a{(bits >> 4) & 1, (bits >> 3) & 1, (bits >> 2) & 1,
                                   (bits >> 1) & 1, bits & 1};
        if (discriminant_mod8(a) % 2 == 0) continue;
        const ResidueModel m{a[0], a[1], a[2], a[3], a[4]};
        const std::int64_t count = 1 + count_affine_small(m, 2);
        rows.push_back({a, static_cast<int>(3 - count)});
    }
    return rows;
}

int discriminant_mod8(const std::array<int, 5>& a) {
    const std::int64_t a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    const std::int64_t b2 = a1 * a1 + 4 * a2;
    const std::int64_t b4 = 2 * a4 + a1 * a3;
    const std::int64_t b6 = a3 * a3 + 4 * a6;
    const std::int64_t b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const std::int64_t d = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    return static_cast<int>(mod(d, 8));
}

int lemma_polynomial_mod8(const std::array<int, 5>& a) {
    auto pw = [](std::int64_t x, int k) {
        std::int64_t r = 1;
        while (k--) r *= x;
        return r;
    };
    const std::int64_t a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    const std::int64_t v = 7 * a6 * pw(a1, 6) + a4 * a3 * pw(a1, 5) + 7 * a3 * a3 * a2 * pw(a1, 4) +
                           4 * a6 * a2 * pw(a1, 4) + a4 * a4 * pw(a1, 4) + pw(a3, 3) * pw(a1, 3) +
                           4 * a6 * a3 * pw(a1, 3) + 2 * a4 * a3 * a3 * a1 * a1 +
                           4 * pw(a3, 3) * a2 * a1 + 5 * pw(a3, 4);
    return static_cast<int>(mod(v, 8));
}

DiscMod8Report disc_mod8_congruence() {
    DiscMod8Report rep;
    std::array<int, 5> a{};
    for (int i = 0; i < 8 * 8 * 8 * 8 * 8; ++i) {
        int t = i;
        for (int k = 4; k >= 0; --k) {
            a[static_cast<std::size_t>(k)] = t % 8;
            t /= 8;
        }
        ++rep.tuples;
        const bool a3_odd = a[2] == 1 || a[2] == 7;
        if (a3_odd) ++rep.tuples_a3_odd;
        if (discriminant_mod8(a) != lemma_polynomial_mod8(a)) {
            rep.mismatches.push_back(a);
            if (a3_odd) ++rep.mismatches_a3_odd;
        }
    }
    return rep;
}

bool torsion_is_trivial(const WeierstrassModel& e) {
    std::int64_t g = 0;
    int used = 0;
    for (std::int64_t p = 3; used < 5; p += 2) {
        if (!is_prime(p) || divides(p, e.discriminant())) continue;
        g = std::gcd(g, count_points(e, p));
        ++used;
    }
    if (g == 1) return true;

    // Lutz-Nagell on Y^2 = X^3 + A X + B with X = 36x + 3b2, Y = 108(2y + a1 x + a3).
    const mpz_class A = -27 * e.c4();
    const mpz_class B = -54 * e.c6();
    const mpz_class disc = abs(4 * A * A * A + 27 * B * B);
    std::vector<mpz_class> ys{0};
    {
        // Square divisors y^2 | disc.
        std::vector<mpz_class> sq{1};
        for (const mpz_class& p : prime_divisors(disc)) {
            unsigned long k = 0;
            mpz_class t = disc;
            while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
                t /= p;
                ++k;
            }
            const std::size_t base = sq.size();
            mpz_class pe = 1;
            for (unsigned long j = 1; j <= k / 2; ++j) {
                pe *= p;
                for (std::size_t i = 0; i < base; ++i) sq.push_back(sq[i] * pe);
            }
        }
        for (const auto& y : sq) {
            ys.push_back(y);
            ys.push_back(-y);
        }
    }
    for (const mpz_class& y : ys) {
        // Integer roots of X^3 + A X + (B - Y^2): bracket real roots numerically,
        // then confirm exactly.
        const mpz_class c0 = B - y * y;
        const double ad = A.get_d(), cd = c0.get_d();
        const double bound = 2.0 + std::max(std::sqrt(std::fabs(ad)), std::cbrt(std::fabs(cd))) * 2;
        auto f = [&](double x) { return x * x * x + ad * x + cd; };
        std::vector<double> guesses;
        const int steps = 4000;
        double prev_x = -bound, prev_f = f(prev_x);
        for (int i = 1; i <= steps; ++i) {
            const double x = -bound + 2 * bound * i / steps;
            const double fx = f(x);
            if ((prev_f <= 0 && fx >= 0) || (prev_f >= 0 && fx <= 0)) {
                double lo = prev_x, hi = x;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if ((f(lo) <= 0) == (f(mid) <= 0)) lo = mid; else hi = mid;
                }
                guesses.push_back(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = fx;
        }
        for (double gx : guesses) {
            for (long dx = -2; dx <= 2; ++dx) {
                const mpz_class X = mpz_class(static_cast<long>(std::llround(gx))) + dx;
                if (X * X * X + A * X + c0 != 0) continue;
                mpq_class x(X - 3 * e.b2(), 36), w(y, 108);
                x.canonicalize();
                w.canonicalize();
                RationalPoint pt = RationalPoint::affine(x, (w - e.a1() * x - e.a3()) / 2);
                if (!on_curve(e, pt)) continue;
                for (long k = 1; k <= 12; ++k)
                    if (scalar_mul(e, k, pt).infinity) return false;
            }
        }
    }
    return true;
}

}  // namespace gkz
