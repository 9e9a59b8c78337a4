#pragma once

// Weighted and generalized Heegner traces and their coefficients beta_{D,r}
// with respect to a Mordell-Weil generator.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gkz/analytic.hpp"
#include "gkz/curve.hpp"
#include "gkz/forms.hpp"

namespace gkz {

/// Everything needed to evaluate traces on one curve at one precision.
/// Construction asserts: N prime, |disc| = N, generator on the model,
/// trivial torsion.
struct CurveContext {
    std::string label;
    WeierstrassModel model;
    std::int64_t level;
    RationalPoint generator;
    int manin = 1;
    mp::Bits precision;
    PeriodLattice lattice;
    LogValue zg;

    CurveContext(std::string label, WeierstrassModel model, std::int64_t level, RationalPoint generator,
                 mp::Bits bits, int manin = 1);

    /// a_0..a_M with M >= m (a_0 = 0). The shared cache only grows, so the
    /// returned sequence stays valid.
    std::shared_ptr<const std::vector<std::int64_t>> coefficients(std::int64_t m) const;

private:
    mutable std::mutex mutex_;
    mutable std::shared_ptr<const std::vector<std::int64_t>> an_;
};

/// Contexts for one curve, built lazily per precision.
class CurveContextCache {
public:
    CurveContextCache(std::string label, WeierstrassModel model, std::int64_t level, RationalPoint generator,
                      int manin = 1);
    const CurveContext& at(mp::Bits bits);
    const std::string& label() const { return label_; }
    const WeierstrassModel& model() const { return model_; }
    std::int64_t level() const { return level_; }

private:
    std::string label_;
    WeierstrassModel model_;
    std::int64_t level_;
    RationalPoint generator_;
    int manin_;
    std::map<mp::Bits, std::unique_ptr<CurveContext>> contexts_;
};

/// sum_j log phi(tau_j) over the Heegner forms of (D, r), before division
/// by u.
struct TraceLog {
    std::int64_t disc = 0;
    std::int64_t r = 0;
    int u = 1;
    std::size_t class_number = 0;
    mp::Complex sum;
};

TraceLog weighted_trace_log(const CurveContext& ctx, std::int64_t d, std::int64_t r,
                            SearchOrder order = SearchOrder::ascending);

/// One summand t_{D/e^2, r_e} of the generalized trace; r_e is nullopt when
/// no lift satisfies the Heegner condition and the term vanishes.
struct TraceTerm {
    std::int64_t e = 1;
    std::int64_t disc = 0;
    std::optional<std::int64_t> r;
};

/// Smallest s in [0, 2N) with e s = r (mod 2N) and s^2 = D/e^2 (mod 4N).
std::optional<std::int64_t> lift_residue(std::int64_t d, std::int64_t r, std::int64_t e, std::int64_t n);

/// The summands of y_{D,r}: every e with e^2 | D and D/e^2 a discriminant
/// whose order conductor is prime to N.
std::vector<TraceTerm> trace_terms(std::int64_t d, std::int64_t r, std::int64_t n);

struct BetaRecord {
    std::string label;
    std::int64_t disc = 0;
    std::int64_t r = 0;
    long beta = 0;
    double residual = 0;
    double runner_up = 0;
    mp::Bits precision_used = 0;
    bool verified_exactly = false;
    bool ok = false;
    std::string failure;
};

/// y_{D,r} at the context's precision. Throws AmbiguousRecognition when the
/// trace is not recognisable at this precision.
BetaRecord generalized_trace(const CurveContext& ctx, std::int64_t d, std::int64_t r,
                             SearchOrder order = SearchOrder::ascending);

constexpr mp::Bits kMaxPrecision = 768;

/// generalized_trace starting at `bits`, doubling on ambiguity until
/// kMaxPrecision has been tried. Never throws for numerical failure: the record is returned
/// with ok = false and the reason in `failure`.
BetaRecord compute_beta(CurveContextCache& curve, std::int64_t d, std::optional<std::int64_t> r = std::nullopt,
                        mp::Bits bits = 192, SearchOrder order = SearchOrder::ascending);

/// (a2 - (D/2)) beta_D: the predicted beta_{4D} at p = 2. D fundamental.
long gkz_predict(long beta_d, long a2, std::int64_t d);

}  // namespace gkz
