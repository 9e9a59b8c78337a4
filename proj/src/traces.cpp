#include "gkz/traces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkz/arith.hpp"

namespace gkz {

namespace {

mpz_class abs_z(const mpz_class& v) { return v < 0 ? mpz_class(-v) : v; }

std::int64_t initial_terms(std::int64_t n, mp::Bits bits) {
    return truncation_bound(bits, 1.0 / (4.0 * std::sqrt(static_cast<double>(n))));
}

}  // namespace

CurveContext::CurveContext(std::string label_, WeierstrassModel model_, std::int64_t level_,
                           RationalPoint generator_, mp::Bits bits, int manin_)
    : label(std::move(label_)),
      model(std::move(model_)),
      level(level_),
      generator(std::move(generator_)),
      manin(manin_),
      precision(bits) {
    if (!is_prime(level)) throw CurveError(label + ": conductor " + std::to_string(level) + " is not prime");
    if (abs_z(model.discriminant()) != level)
        throw CurveError(label + ": |disc| = " + abs_z(model.discriminant()).get_str() + " differs from N");
    if (generator.infinity || !on_curve(model, generator))
        throw CurveError(label + ": generator " + generator.str() + " is not on the curve");
    if (!torsion_is_trivial(model)) throw CurveError(label + ": nontrivial torsion");
    if (manin < 1) throw std::invalid_argument(label + ": Manin constant must be positive");
    lattice = period_lattice(model, bits);
    an_ = std::make_shared<const std::vector<std::int64_t>>(an_sequence(model, initial_terms(level, bits)));
    zg = point_log(model, generator, lattice);
}

std::shared_ptr<const std::vector<std::int64_t>> CurveContext::coefficients(std::int64_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (static_cast<std::size_t>(m) >= an_->size()) {
        const std::int64_t grown = std::max<std::int64_t>(m, 2 * static_cast<std::int64_t>(an_->size()));
        an_ = std::make_shared<const std::vector<std::int64_t>>(an_sequence(model, grown));
    }
    return an_;
}

CurveContextCache::CurveContextCache(std::string label, WeierstrassModel model, std::int64_t level,
                                     RationalPoint generator, int manin)
    : label_(std::move(label)),
      model_(std::move(model)),
      level_(level),
      generator_(std::move(generator)),
      manin_(manin) {}

const CurveContext& CurveContextCache::at(mp::Bits bits) {
    auto it = contexts_.find(bits);
    if (it == contexts_.end())
        it = contexts_.emplace(bits, std::make_unique<CurveContext>(label_, model_, level_, generator_, bits, manin_))
                 .first;
    return *it->second;
}

TraceLog weighted_trace_log(const CurveContext& ctx, std::int64_t d, std::int64_t r, SearchOrder order) {
    const HeegnerSystem sys = heegner_forms(d, r, ctx.level, order);
    const mp::Bits bits = ctx.precision;
    double im_min = HUGE_VAL;
    for (const auto& f : sys.forms)
        im_min = std::min(im_min, std::sqrt(static_cast<double>(-d)) / (2.0 * static_cast<double>(f.a)));
    const std::int64_t m = truncation_bound(bits, im_min);
    const auto an = ctx.coefficients(m);

    TraceLog out{d, sys.r, sys.u, sys.forms.size(), mp::Complex(bits)};
    for (const auto& f : sys.forms) out.sum += phi_log(*an, tau(f, bits), m);
    if (ctx.manin != 1) out.sum = out.sum * static_cast<long>(ctx.manin);
    return out;
}

std::optional<std::int64_t> lift_residue(std::int64_t d, std::int64_t r, std::int64_t e, std::int64_t n) {
    if (e <= 0 || d % (e * e) != 0) throw std::invalid_argument("lift_residue: e^2 does not divide D");
    const std::int64_t de = d / (e * e);
    for (std::int64_t s = 0; s < 2 * n; ++s)
        if (mod(e * s - r, 2 * n) == 0 && mod(s * s - de, 4 * n) == 0) return s;
    return std::nullopt;
}

std::vector<TraceTerm> trace_terms(std::int64_t d, std::int64_t r, std::int64_t n) {
    std::vector<TraceTerm> out;
    for (std::int64_t e : square_divisors(d)) {
        const std::int64_t de = d / (e * e);
        if (!is_discriminant(de)) continue;
        if (order_conductor(de) % n == 0) continue;
        out.push_back({e, de, lift_residue(d, r, e, n)});
    }
    return out;
}

BetaRecord generalized_trace(const CurveContext& ctx, std::int64_t d, std::int64_t r, SearchOrder order) {
    const mp::Bits bits = ctx.precision;
    const auto& lat = ctx.lattice;
    const mp::Real tol = mp::two_pow(-static_cast<long>(bits) / 3, bits);

    std::vector<mp::Complex> candidates{mp::Complex(bits)};
    for (const auto& term : trace_terms(d, r, ctx.level)) {
        if (!term.r) continue;
        const TraceLog t = weighted_trace_log(ctx, term.disc, *term.r, order);
        const mp::Real defect = real_embedding_defect(t.sum, lat);
        if (!(defect < tol))
            throw AmbiguousRecognition("trace of D = " + std::to_string(term.disc) + " is not real mod the lattice (" +
                                           defect.str(6) + ")",
                                       defect.to_double(), 0.0);
        std::vector<mp::Complex> next;
        const auto parts = division_candidates(t.sum, t.u, lat);
        for (const auto& c : candidates)
            for (const auto& p : parts) next.push_back(c + p);
        candidates = std::move(next);
    }

    const Recognition rec = recognize_multiple(candidates, ctx.zg.z, lat);
    BetaRecord out;
    out.label = ctx.label;
    out.disc = d;
    out.r = r;
    out.beta = rec.beta;
    out.residual = rec.residual.to_double();
    out.runner_up = rec.runner_up.to_double();
    out.precision_used = bits;
    out.ok = true;

    const RationalPoint p = scalar_mul(ctx.model, rec.beta, ctx.generator);
    if (p.infinity) {
        out.verified_exactly = lattice_distance(rec.w, lat) < tol;
    } else {
        const LogValue lv = point_log(ctx.model, p, lat);
        const auto [x, y] = exp_map(ctx.model, rec.w, lat);
        const mp::Real px(p.x, bits);
        mp::Real scale = mp::abs(px);
        if (scale < mp::Real(1L, bits)) scale = mp::Real(1L, bits);
        out.verified_exactly = lattice_distance(lv.z - rec.w, lat) < tol &&
                               mp::abs(x - mp::Complex(px, mp::Real(bits))) / scale < tol;
    }
    if (!out.verified_exactly) {
        out.ok = false;
        out.failure = "exact verification of beta = " + std::to_string(rec.beta) + " failed";
    }
    return out;
}

BetaRecord compute_beta(CurveContextCache& curve, std::int64_t d, std::optional<std::int64_t> r, mp::Bits bits,
                        SearchOrder order) {
    BetaRecord out;
    out.label = curve.label();
    out.disc = d;
    try {
        const std::int64_t rr = r ? *r : [&] {
            auto h = heegner_r(d, curve.level());
            if (!h) throw std::invalid_argument("D = " + std::to_string(d) + " fails the Heegner condition");
            return *h;
        }();
        out.r = rr;
        std::string last;
        for (;; bits *= 2) {
            try {
                return generalized_trace(curve.at(bits), d, rr, order);
            } catch (const AmbiguousRecognition& ex) {
                last = ex.what();
                out.residual = ex.best_residual;
                out.runner_up = ex.runner_up_residual;
                out.precision_used = bits;
            }
            if (bits >= kMaxPrecision) break;
        }
        out.failure = "ambiguous after escalation: " + last;
    } catch (const std::exception& ex) {
        out.failure = ex.what();
    }
    out.ok = false;
    return out;
}

long gkz_predict(long beta_d, long a2, std::int64_t d) {
    if (!is_fundamental(d)) throw std::invalid_argument("gkz_predict: " + std::to_string(d) + " is not fundamental");
    return (a2 - kronecker(d, 2)) * beta_d;
}

}  // namespace gkz
