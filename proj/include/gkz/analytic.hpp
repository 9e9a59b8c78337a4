#pragma once

// Periods, elliptic logarithms, the q-series logarithm of the modular
// parametrization, L(E,1), and recognition of multiples of a generator log.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gkz/curve.hpp"
#include "gkz/mp.hpp"

namespace gkz {

class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No candidate, or no unique candidate, is an integral multiple of the
/// generator log at the current precision.
class AmbiguousRecognition : public std::runtime_error {
public:
    AmbiguousRecognition(const std::string& what, double best, double runner_up)
        : std::runtime_error(what), best_residual(best), runner_up_residual(runner_up) {}
    double best_residual;
    double runner_up_residual;
};

/// Z omega1 + Z omega2 with omega1 > 0 real and Im omega2 > 0. For
/// discriminant > 0 the lattice is rectangular and roots = {e1 > e2 > e3};
/// otherwise Re omega2 = -omega1/2 and roots = {e1}. The roots are those of
/// 4x^3 + b2 x^2 + 2 b4 x + b6 in the model's own x-coordinate.
struct PeriodLattice {
    mp::Real omega1;
    mp::Complex omega2;
    bool rectangular = false;
    std::vector<mp::Real> roots;
    mp::Bits precision = 0;
};

PeriodLattice period_lattice(const WeierstrassModel& e, mp::Bits bits);

/// Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, descending.
std::vector<mp::Real> two_division_roots(const WeierstrassModel& e, mp::Bits bits);

/// Number of q-series terms needed for a tail below 2^-(bits+16) when
/// every point has imaginary part at least im_min.
std::int64_t truncation_bound(mp::Bits bits, double im_min);

/// sum_{n<=m} (an[n]/n) exp(2 pi i n tau), computed with guard bits and
/// rounded to the precision of tau.
mp::Complex phi_log(const std::vector<std::int64_t>& an, const mp::Complex& tau, std::int64_t m);

struct LogValue {
    mp::Complex z;
    mp::Bits precision = 0;
    mp::Real residual;
};

/// Elliptic logarithm of an affine point, reduced to the fundamental
/// parallelogram. residual is |x(exp(z)) - x(P)| relative to max(1,|x|).
LogValue point_log(const WeierstrassModel& e, const RationalPoint& p, const PeriodLattice& lattice);

/// (s, t) with z = s omega1 + t omega2.
std::pair<mp::Real, mp::Real> lattice_coordinates(const mp::Complex& z, const PeriodLattice& lattice);
/// z reduced to [0,1) omega1 + [0,1) omega2.
mp::Complex reduce_mod_lattice(const mp::Complex& z, const PeriodLattice& lattice);
/// Distance from z to the nearest lattice point.
mp::Real lattice_distance(const mp::Complex& z, const PeriodLattice& lattice);

/// Weierstrass p(z) and p'(z) of the lattice.
std::pair<mp::Complex, mp::Complex> weierstrass_p(const mp::Complex& z, const PeriodLattice& lattice);

/// The point (x, y) on the model with elliptic log z.
std::pair<mp::Complex, mp::Complex> exp_map(const WeierstrassModel& e, const mp::Complex& z,
                                            const PeriodLattice& lattice);

/// Distance of Im(z) from the imaginary parts of real points of E:
/// multiples of Im(omega2)/2 for a rectangular lattice, of Im(omega2)
/// otherwise.
mp::Real real_embedding_defect(const mp::Complex& z, const PeriodLattice& lattice);

struct Recognition {
    long beta = 0;
    mp::Real residual;
    mp::Real runner_up;
    mp::Complex w;  // the accepted candidate
};

constexpr long kBetaSearchBound = 1000;

/// Finds the unique (candidate w, beta) with w = beta zg (mod lattice) for
/// |beta| <= kBetaSearchBound. Accepts iff the best residual is below
/// 2^(-bits/3) and the runner-up is more than 64 times larger; throws
/// AmbiguousRecognition otherwise. Candidates equal mod the lattice are
/// merged first.
Recognition recognize_multiple(const std::vector<mp::Complex>& candidates, const mp::Complex& zg,
                               const PeriodLattice& lattice);

/// Candidates (z + m omega1 + n omega2)/u for 0 <= m, n < u.
std::vector<mp::Complex> division_candidates(const mp::Complex& z, int u, const PeriodLattice& lattice);

Recognition recognize_multiple(const mp::Complex& z, const mp::Complex& zg, const PeriodLattice& lattice,
                               int u);

/// L(E,1) from the functional equation with root number `sign`:
/// sum a_n/n (exp(-2 pi n A/sqrt N) + sign exp(-2 pi n/(A sqrt N))), A = 11/10.
/// The value is independent of A only for the true sign, so with sign = -1
/// it vanishes exactly when the curve has root number -1.
mp::Real l_value_at_1(const std::vector<std::int64_t>& an, std::int64_t n, mp::Bits bits, int sign);
mp::Real l_value_at_1(const WeierstrassModel& e, std::int64_t n, mp::Bits bits, int sign);
/// Coefficients needed by l_value_at_1 at this precision.
std::int64_t l_value_terms(std::int64_t n, mp::Bits bits);

}  // namespace gkz
