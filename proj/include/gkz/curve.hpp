#pragma once

// Exact elliptic curve arithmetic over Q and over small prime fields.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

/// Raised for malformed curve input: singular models, points off the curve,
/// additive reduction where a prime-conductor curve was promised.
class CurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with its standard
/// b- and c-invariants and discriminant. Immutable.
class WeierstrassModel {
public:
    WeierstrassModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);
    WeierstrassModel(long a1, long a2, long a3, long a4, long a6);

    /// The model with invariants (c4, c6) in the normalised form
    /// a1, a3 in {0,1}, a2 in {-1,0,1}, or nullopt if no integral model has
    /// these invariants.
    static std::optional<WeierstrassModel> from_c4c6(const mpz_class& c4, const mpz_class& c6);

    const mpz_class& a1() const { return a_[0]; }
    const mpz_class& a2() const { return a_[1]; }
    const mpz_class& a3() const { return a_[2]; }
    const mpz_class& a4() const { return a_[3]; }
    const mpz_class& a6() const { return a_[4]; }
    const std::array<mpz_class, 5>& ainvs() const { return a_; }

    const mpz_class& b2() const { return b2_; }
    const mpz_class& b4() const { return b4_; }
    const mpz_class& b6() const { return b6_; }
    const mpz_class& b8() const { return b8_; }
    const mpz_class& c4() const { return c4_; }
    const mpz_class& c6() const { return c6_; }
    const mpz_class& discriminant() const { return disc_; }

    std::string str() const;
    bool operator==(const WeierstrassModel& o) const { return a_ == o.a_; }

private:
    std::array<mpz_class, 5> a_;
    mpz_class b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

struct RationalPoint {
    bool infinity = true;
    mpq_class x;
    mpq_class y;

    static RationalPoint at_infinity() { return {}; }
    static RationalPoint affine(mpq_class x, mpq_class y) {
        return {false, std::move(x), std::move(y)};
    }
    bool operator==(const RationalPoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
    std::string str() const;
};

enum class ReductionKind { good, split_multiplicative, nonsplit_multiplicative, additive };

struct ReductionType {
    std::int64_t p = 0;
    ReductionKind kind = ReductionKind::good;
};

std::string to_string(ReductionKind k);

bool on_curve(const WeierstrassModel& e, const RationalPoint& p);
RationalPoint negate(const WeierstrassModel& e, const RationalPoint& p);
/// Chord-tangent addition; throws CurveError for points not on the model.
RationalPoint add(const WeierstrassModel& e, const RationalPoint& p, const RationalPoint& q);
/// k * P by double-and-add, k of any sign.
RationalPoint scalar_mul(const WeierstrassModel& e, long k, const RationalPoint& p);

/// Number of points on the reduction mod p, including infinity. The
/// reduction must be nonsingular.
std::int64_t count_points(const WeierstrassModel& e, std::int64_t p);

/// Reduction type at p; the node-tangent test decides split versus nonsplit.
/// Additive reduction is reported, not thrown.
ReductionType reduction_type(const WeierstrassModel& e, std::int64_t p);

/// a_p = p + 1 - #E(F_p) for good p, +-1 for multiplicative p. Throws
/// CurveError on additive reduction.
std::int64_t ap(const WeierstrassModel& e, std::int64_t p);

/// a_1 .. a_M of L(E, s); element i holds a_i, element 0 is unused (0).
std::vector<std::int64_t> an_sequence(const WeierstrassModel& e, std::int64_t m);

/// Global minimal model in normalised form (Laska-Kraus-Connell).
WeierstrassModel minimal_model(const WeierstrassModel& e);

/// Minimal model of the quadratic twist by the fundamental discriminant d.
WeierstrassModel quadratic_twist(const WeierstrassModel& e, std::int64_t d);

/// Conductor of a globally minimal model. Exact at primes >= 5 and at
/// primes of good or multiplicative reduction; nullopt when 2 or 3 has
/// additive reduction (that case needs Tate's algorithm).
std::optional<mpz_class> conductor(const WeierstrassModel& minimal);

/// chi(p) * a_p with chi the Kronecker character of d; cross-checked against
/// the twisted curve by the tests. Throws for p dividing d * disc.
std::int64_t twisted_ap(const WeierstrassModel& e, std::int64_t d, std::int64_t p);

struct Mod2Row {
    std::array<int, 5> a;  // a1, a2, a3, a4, a6 in F_2
    int a2_trace;          // 3 - #E(F_2)
};

/// Every nonsingular (a1..a6) in F_2^5 in lexicographic order.
std::vector<Mod2Row> mod2_table();

struct DiscMod8Report {
    std::size_t tuples = 0;
    std::vector<std::array<int, 5>> mismatches;  // all tuples in (Z/8)^5
    std::size_t mismatches_a3_odd = 0;            // restricted to a3 in {1, 7}
    std::size_t tuples_a3_odd = 0;
    bool holds_unrestricted() const { return mismatches.empty(); }
    bool holds_a3_odd() const { return mismatches_a3_odd == 0; }
};

/// Discriminant of the model with the given a-invariants, reduced mod 8.
int discriminant_mod8(const std::array<int, 5>& a);
/// The degree-10 polynomial the lemma states for the discriminant mod 8.
int lemma_polynomial_mod8(const std::array<int, 5>& a);
DiscMod8Report disc_mod8_congruence();

/// True iff E(Q)_tors is trivial. Expects a minimal model.
bool torsion_is_trivial(const WeierstrassModel& e);

}  // namespace gkz
