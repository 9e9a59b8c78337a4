#include "gkz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gkz/arith.hpp"

namespace gkz {

namespace {

using nlohmann::json;

std::string class_label_of(std::string_view label) {
    std::size_t end = label.size();
    while (end > 0 && std::isdigit(static_cast<unsigned char>(label[end - 1]))) --end;
    // A bare conductor has no class letter; keep it intact.
    if (end == 0 || !std::isalpha(static_cast<unsigned char>(label[end - 1]))) return std::string(label);
    return std::string(label.substr(0, end));
}

bool is_even(long v) { return v % 2 == 0; }

mpz_class parse_integer(const std::string& tok, const std::string& source, std::size_t line,
                        const std::string& what) {
    static const std::regex re("[+-]?[0-9]+");
    if (!std::regex_match(tok, re)) throw IngestError(source, line, what + ": '" + tok + "' is not an integer");
    return mpz_class(tok[0] == '+' ? tok.substr(1) : tok);
}

mpq_class parse_rational(const std::string& tok, const std::string& source, std::size_t line,
                         const std::string& what) {
    static const std::regex re("[+-]?[0-9]+(/[0-9]+)?");
    if (!std::regex_match(tok, re)) throw IngestError(source, line, what + ": '" + tok + "' is not a rational");
    mpq_class q(tok[0] == '+' ? tok.substr(1) : tok);
    if (q.get_den() == 0) throw IngestError(source, line, what + ": zero denominator");
    q.canonicalize();
    return q;
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

json to_json(const BetaRecord& r) {
    return {{"label", r.label},
            {"D", r.disc},
            {"r", r.r},
            {"beta", r.beta},
            {"residual", r.residual},
            {"runner_up", r.runner_up},
            {"precision", r.precision_used},
            {"verified_exactly", r.verified_exactly},
            {"ok", r.ok},
            {"failure", r.failure}};
}

json to_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

const char* table_title(int which) {
    switch (which) {
        case 1: return "beta_{-N}, N = 3 (mod 4) prime, a_E(2) even";
        case 2: return "beta_{-N}, N = 3 (mod 4) prime, a_E(2) odd";
        default: return "beta_{-4} and beta_{-4N}, N = 1 (mod 4) prime";
    }
}

std::pair<const char*, const char*> table_columns(int which) {
    if (which == 3) return {"beta_-4", "beta_-4N"};
    return {"a_E(2)", "beta_-N"};
}

std::string row_status(const TableRow& row) {
    if (!row.failure.empty()) return "FAILED: " + row.failure;
    if (!row.paper) return "no-reference";
    return row.mismatch ? "MISMATCH" : "match";
}

}  // namespace

std::string CurveRecord::class_label() const { return class_label_of(label); }

std::vector<CurveRecord> parse_curves(std::istream& in, const std::string& source) {
    std::vector<CurveRecord> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 9 || tok.size() > 11)
            throw IngestError(source, lineno, "expected 9 to 11 fields, found " + std::to_string(tok.size()));

        CurveRecord rec;
        rec.line = lineno;
        rec.label = tok[0];
        const mpz_class n = parse_integer(tok[1], source, lineno, "N");
        if (n < 2 || !n.fits_slong_p()) throw IngestError(source, lineno, "N out of range");
        rec.level = n.get_si();
        if (!is_prime(rec.level)) throw IngestError(source, lineno, "N = " + tok[1] + " is not prime");
        std::array<mpz_class, 5> a;
        static const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
        for (int i = 0; i < 5; ++i) a[i] = parse_integer(tok[2 + i], source, lineno, names[i]);
        try {
            rec.model = WeierstrassModel(a[0], a[1], a[2], a[3], a[4]);
        } catch (const CurveError& ex) {
            throw IngestError(source, lineno, ex.what());
        }
        const mpz_class absdisc = abs(rec.model.discriminant());
        if (abs(minimal_model(rec.model).discriminant()) != absdisc)
            throw IngestError(source, lineno, "model " + rec.model.str() + " is not minimal");
        if (absdisc != n)
            throw IngestError(source, lineno, "|disc| = " + absdisc.get_str() + " differs from N = " + tok[1]);
        rec.generator = RationalPoint::affine(parse_rational(tok[7], source, lineno, "gen_x"),
                                              parse_rational(tok[8], source, lineno, "gen_y"));
        if (!on_curve(rec.model, rec.generator))
            throw IngestError(source, lineno, "generator " + rec.generator.str() + " is not on the curve");
        if (!torsion_is_trivial(rec.model)) throw IngestError(source, lineno, "nontrivial rational torsion");
        if (tok.size() >= 10) {
            const mpz_class s = parse_integer(tok[9], source, lineno, "sign_hint");
            if (s != 1 && s != -1) throw IngestError(source, lineno, "sign_hint must be +1 or -1");
            rec.sign_hint = static_cast<int>(s.get_si());
        }
        if (tok.size() == 11) {
            const mpz_class m = parse_integer(tok[10], source, lineno, "manin_override");
            if (m < 1 || m > 1000) throw IngestError(source, lineno, "manin_override must be a positive integer");
            rec.manin_override = static_cast<int>(m.get_si());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CurveRecord> ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError(path, 0, "cannot open file");
    return parse_curves(in, path);
}

const CurveRecord* find_curve(const std::vector<CurveRecord>& records, std::string_view label) {
    for (const auto& r : records)
        if (r.label == label) return &r;
    for (const auto& r : records)
        if (r.class_label() == label) return &r;
    return nullptr;
}

bool in_table(int which, std::int64_t level, long a2) {
    switch (which) {
        case 1: return level % 4 == 3 && is_even(a2);
        case 2: return level % 4 == 3 && !is_even(a2);
        case 3: return level % 4 == 1;
        default: throw std::invalid_argument("in_table: no table " + std::to_string(which));
    }
}

bool CurveBetas::ok() const {
    if (!failure.empty()) return false;
    for (const auto* r : {&minus_n, &minus_4n, &minus_4})
        if (*r && !(*r)->ok) return false;
    return true;
}

std::string CurveBetas::failures() const {
    std::string out = failure;
    for (const auto* r : {&minus_n, &minus_4n, &minus_4}) {
        if (!*r || (*r)->ok) continue;
        if (!out.empty()) out += "; ";
        out += "D = " + std::to_string((*r)->disc) + ": " + (*r)->failure;
    }
    return out;
}

CurveBetas compute_curve_betas(const CurveRecord& rec, mp::Bits bits) {
    CurveBetas out;
    out.label = rec.label;
    out.level = rec.level;
    try {
        out.a2 = static_cast<long>(ap(rec.model, 2));
        if (rec.sign_hint && *rec.sign_hint != -1) {
            out.failure = "sign hint +1; traces need root number -1";
            return out;
        }
        out.l_value = l_value_at_1(rec.model, rec.level, 128, -1).to_double();
        if (!(std::fabs(out.l_value) < kRootNumberTolerance)) {
            std::ostringstream msg;
            msg << "L(E,1) under root number -1 is " << out.l_value << ", not 0";
            out.failure = msg.str();
            return out;
        }
        CurveContextCache cache(rec.label, rec.model, rec.level, rec.generator, rec.manin_override.value_or(1));
        const std::int64_t n = rec.level;
        if (n % 4 == 3) {
            out.minus_n = compute_beta(cache, -n, std::nullopt, bits);
            out.minus_4n = compute_beta(cache, -4 * n, std::nullopt, bits);
        } else if (n % 4 == 1) {
            out.minus_4 = compute_beta(cache, -4, std::nullopt, bits);
            out.minus_4n = compute_beta(cache, -4 * n, std::nullopt, bits);
        }
    } catch (const std::exception& ex) {
        out.failure = ex.what();
    }
    return out;
}

std::vector<CurveBetas> compute_all_betas(const std::vector<CurveRecord>& records, mp::Bits bits, unsigned jobs) {
    std::vector<CurveBetas> out(records.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (!mpfr_buildopt_tls_p()) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(records.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < records.size();) out[i] = compute_curve_betas(records[i], bits);
        mpfr_free_cache();
    };
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

TableReport build_table(int which, const std::vector<CurveBetas>& betas) {
    TableReport rep;
    rep.which = which;
    for (const auto& cb : betas) {
        if (!in_table(which, cb.level, cb.a2)) continue;
        TableRow row;
        row.label = class_label_of(cb.label);
        row.level = cb.level;
        row.betas = cb;
        row.failure = cb.failures();
        if (which == 3) {
            if (cb.minus_4 && cb.minus_4->ok) row.first = cb.minus_4->beta;
            if (cb.minus_4n && cb.minus_4n->ok) row.second = cb.minus_4n->beta;
        } else {
            row.first = cb.a2;
            if (cb.minus_n && cb.minus_n->ok) row.second = cb.minus_n->beta;
        }
        if (row.failure.empty() && (!row.first || !row.second)) row.failure = "beta not computed";
        row.paper = find_reference(which, row.label);
        if (row.paper && row.first && row.second)
            row.mismatch = *row.first != row.paper->first || *row.second != row.paper->second;
        if (row.mismatch) ++rep.mismatches;
        if (!row.failure.empty()) ++rep.failures;
        if (row.second) ++(is_even(*row.second) ? rep.even : rep.odd);
        for (const auto* r : {&cb.minus_n, &cb.minus_4n, &cb.minus_4})
            if (*r) rep.precision = std::max(rep.precision, (*r)->precision_used);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

TableReport run_table(int which, const std::vector<CurveRecord>& records, mp::Bits bits,
                      std::optional<std::int64_t> max_n, unsigned jobs) {
    std::vector<CurveRecord> chosen;
    for (const auto& r : records) {
        if (max_n && r.level > *max_n) continue;
        if (!in_table(which, r.level, static_cast<long>(ap(r.model, 2)))) continue;
        chosen.push_back(r);
    }
    TableReport rep = build_table(which, compute_all_betas(chosen, bits, jobs));
    rep.precision = std::max(rep.precision, bits);
    return rep;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        default: return "skipped";
    }
}

std::size_t ConjectureReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
}

const std::vector<std::string>& conjecture_ids() {
    static const std::vector<std::string> ids{"c1", "c2", "c3", "c4", "lemma", "theorem", "recurrence"};
    return ids;
}

namespace {

std::optional<long> beta_of(const std::optional<BetaRecord>& r) {
    if (r && r->ok) return r->beta;
    return std::nullopt;
}

Verdict skipped(const CurveBetas& cb, const std::string& why) {
    return {cb.label, Status::skipped, why.empty() ? cb.failures() : why};
}

Verdict parity_verdict(const CurveBetas& cb, const std::optional<BetaRecord>& rec, const std::string& name) {
    const auto b = beta_of(rec);
    if (!b) return skipped(cb, rec ? rec->failure : cb.failures());
    return {cb.label, is_even(*b) ? Status::holds : Status::fails, name + " = " + std::to_string(*b)};
}

}  // namespace

ConjectureReport check_conjecture(std::string_view id, const std::vector<CurveRecord>& records,
                                  const std::vector<CurveBetas>& betas) {
    if (records.size() != betas.size()) throw std::invalid_argument("check_conjecture: size mismatch");
    ConjectureReport rep;
    rep.id = std::string(id);
    if (id == "c1") {
        rep.title = "C1: a_E(2) even and N = 3 (mod 4) => beta_{-N} even";
        for (const auto& cb : betas)
            if (cb.level % 4 == 3 && is_even(cb.a2)) rep.verdicts.push_back(parity_verdict(cb, cb.minus_n, "beta_-N"));
    } else if (id == "c2") {
        rep.title = "C2: N = 3 (mod 4) => beta_{-4N} even";
        long even = 0, odd = 0;
        for (const auto& cb : betas) {
            if (cb.level % 4 != 3) continue;
            rep.verdicts.push_back(parity_verdict(cb, cb.minus_4n, "beta_-4N"));
            if (!is_even(cb.a2))
                if (auto b = beta_of(cb.minus_n)) ++(is_even(*b) ? even : odd);
        }
        rep.stats["a2_odd_beta_-N_even"] = even;
        rep.stats["a2_odd_beta_-N_odd"] = odd;
    } else if (id == "c3") {
        rep.title = "C3 (partial): twist by -N, minimal model, conductor and a_A(2) parity";
        rep.notes.push_back("the Sha order of the twist is not computed");
        for (std::size_t i = 0; i < betas.size(); ++i) {
            const auto& cb = betas[i];
            if (cb.level % 4 != 3 || !is_even(cb.a2)) continue;
            const auto b = beta_of(cb.minus_n);
            if (!b) {
                rep.verdicts.push_back(skipped(cb, ""));
                continue;
            }
            if (*b == 0) {
                rep.verdicts.push_back(skipped(cb, "beta_-N = 0, outside the hypothesis"));
                continue;
            }
            const std::int64_t n = cb.level;
            const WeierstrassModel twist = quadratic_twist(records[i].model, -n);
            const auto cond = conductor(twist);
            const long a_twist = static_cast<long>(ap(twist, 2));
            const long eq10 = static_cast<long>(twisted_ap(records[i].model, -n, 2));
            const bool good = cond && *cond == mpz_class(n) * n && a_twist == eq10 && is_even(a_twist) == is_even(cb.a2);
            std::ostringstream d;
            d << "twist " << twist.str() << " conductor " << (cond ? cond->get_str() : "?") << " a_A(2) = " << a_twist
              << " chi(2) a_E(2) = " << eq10 << " a_E(2) = " << cb.a2;
            rep.verdicts.push_back({cb.label, good ? Status::holds : Status::fails, d.str()});
            if (class_label_of(cb.label) == "43A")
                rep.notes.push_back("43A: the BSD prediction |Sha(A)| = 4 for this twist is quoted, not computed");
        }
    } else if (id == "c4") {
        rep.title = "C4: N = 1 (mod 4) => beta_{-4N} = beta_{-4} (mod 2)";
        for (const auto& cb : betas) {
            if (cb.level % 4 != 1) continue;
            const auto b4 = beta_of(cb.minus_4), b4n = beta_of(cb.minus_4n);
            if (!b4 || !b4n) {
                rep.verdicts.push_back(skipped(cb, ""));
                continue;
            }
            rep.verdicts.push_back({cb.label, is_even(*b4) == is_even(*b4n) ? Status::holds : Status::fails,
                                    "beta_-4 = " + std::to_string(*b4) + ", beta_-4N = " + std::to_string(*b4n)});
        }
    } else if (id == "lemma") {
        rep.title = "Lemma: N = 7 (mod 8) => a_E(2) odd";
        const LemmaReport lr = lemma_report();
        rep.stats["mod2_table_matches"] = lr.table_matches;
        rep.stats["a1_parity_holds"] = lr.a1_parity_holds;
        rep.stats["disc_mod8_mismatches_all"] = static_cast<long>(lr.disc.mismatches.size());
        rep.stats["disc_mod8_mismatches_a3_odd"] = static_cast<long>(lr.disc.mismatches_a3_odd);
        rep.stats["chain_holds"] = lr.chain_holds;
        rep.notes = lr.chain;
        for (const auto& cb : betas)
            if (cb.level % 8 == 7)
                rep.verdicts.push_back({cb.label, is_even(cb.a2) ? Status::fails : Status::holds,
                                        "a_E(2) = " + std::to_string(cb.a2)});
        if (!lr.table_matches || !lr.a1_parity_holds || !lr.chain_holds)
            rep.verdicts.push_back({"(enumeration)", Status::fails, "mod-2 table or congruence chain failed"});
    } else if (id == "theorem") {
        rep.title = "Theorem: N = 7 (mod 8) => a_E(2) odd and beta_{-4N} even";
        for (const auto& cb : betas) {
            if (cb.level % 8 != 7) continue;
            const auto bn = beta_of(cb.minus_n), b4n = beta_of(cb.minus_4n);
            if (!b4n) {
                rep.verdicts.push_back(skipped(cb, ""));
                continue;
            }
            // a_E(2) odd and (-N/2) = 1 force the recurrence prediction to be even.
            const bool entailed = !is_even(cb.a2) && kronecker(-cb.level, 2) == 1 &&
                                  (!bn || is_even(gkz_predict(*bn, cb.a2, -cb.level)));
            const bool good = !is_even(cb.a2) && is_even(*b4n) && entailed;
            rep.verdicts.push_back({cb.label, good ? Status::holds : Status::fails,
                                    "a_E(2) = " + std::to_string(cb.a2) + ", beta_-4N = " + std::to_string(*b4n) +
                                        (entailed ? ", entailed by the recurrence" : ", not entailed")});
        }
    } else if (id == "recurrence") {
        rep.title = "Recurrence at p = 2: beta_{-4N} = (a_E(2) - (-N/2)) beta_{-N}";
        for (const auto& cb : betas) {
            if (cb.level % 4 != 3) continue;
            const auto bn = beta_of(cb.minus_n), b4n = beta_of(cb.minus_4n);
            if (!bn || !b4n) {
                rep.verdicts.push_back(skipped(cb, ""));
                continue;
            }
            const long predicted = gkz_predict(*bn, cb.a2, -cb.level);
            rep.verdicts.push_back({cb.label, predicted == *b4n ? Status::holds : Status::fails,
                                    "predicted " + std::to_string(predicted) + ", computed " + std::to_string(*b4n)});
        }
    } else {
        throw std::invalid_argument("unknown conjecture id '" + std::string(id) + "'");
    }
    rep.stats["holds"] = static_cast<long>(rep.count(Status::holds));
    rep.stats["fails"] = static_cast<long>(rep.count(Status::fails));
    rep.stats["skipped"] = static_cast<long>(rep.count(Status::skipped));
    return rep;
}

ConjectureReport check_conjecture(std::string_view id, const std::vector<CurveRecord>& records, mp::Bits bits,
                                  unsigned jobs) {
    if (id == "lemma") {
        std::vector<CurveBetas> light;
        for (const auto& r : records) {
            CurveBetas cb;
            cb.label = r.label;
            cb.level = r.level;
            cb.a2 = static_cast<long>(ap(r.model, 2));
            light.push_back(std::move(cb));
        }
        return check_conjecture(id, records, light);
    }
    return check_conjecture(id, records, compute_all_betas(records, bits, jobs));
}

std::vector<ConjectureReport> check_conjectures(const std::vector<CurveRecord>& records, mp::Bits bits,
                                                unsigned jobs) {
    const auto betas = compute_all_betas(records, bits, jobs);
    std::vector<ConjectureReport> out;
    for (const auto& id : conjecture_ids()) out.push_back(check_conjecture(id, records, betas));
    return out;
}

const std::vector<Mod2Row>& published_mod2_table() {
    static const std::vector<Mod2Row> rows{
        {{0, 0, 1, 0, 0}, 0},  {{0, 0, 1, 0, 1}, 0},  {{0, 0, 1, 1, 0}, -2}, {{0, 0, 1, 1, 1}, 2},
        {{0, 1, 1, 0, 0}, -2}, {{0, 1, 1, 0, 1}, 2},  {{0, 1, 1, 1, 0}, 0},  {{0, 1, 1, 1, 1}, 0},
        {{1, 0, 0, 0, 1}, -1}, {{1, 0, 0, 1, 0}, -1}, {{1, 0, 1, 0, 1}, 1},  {{1, 0, 1, 1, 1}, 1},
        {{1, 1, 0, 0, 1}, 1},  {{1, 1, 0, 1, 0}, 1},  {{1, 1, 1, 0, 0}, -1}, {{1, 1, 1, 1, 0}, -1},
    };
    return rows;
}

LemmaReport lemma_report() {
    LemmaReport rep;
    rep.table = mod2_table();
    const auto& pub = published_mod2_table();
    rep.table_matches = rep.table.size() == pub.size() &&
                        std::equal(rep.table.begin(), rep.table.end(), pub.begin(), [](const Mod2Row& a, const Mod2Row& b) {
                            return a.a == b.a && a.a2_trace == b.a2_trace;
                        });
    rep.a1_parity_holds = std::all_of(rep.table.begin(), rep.table.end(),
                                      [](const Mod2Row& r) { return r.a2_trace % 2 != 0 || r.a[0] == 0; });
    rep.disc = disc_mod8_congruence();

    bool disc5 = true, a3_forced = true;
    std::array<int, 5> a{};
    for (int i = 0; i < 8 * 8 * 8 * 8 * 8; ++i) {
        int t = i;
        for (int k = 4; k >= 0; --k) {
            a[static_cast<std::size_t>(k)] = t % 8;
            t /= 8;
        }
        if (a[0] % 2 != 0) continue;
        const int d = discriminant_mod8(a);
        if (a[2] % 2 != 0 && d != 5) disc5 = false;
        if (a[2] % 2 == 0 && d % 2 != 0) a3_forced = false;
    }
    rep.a1_even_a3_odd_disc_is_5 = disc5;
    rep.chain_holds = rep.a1_parity_holds && disc5 && a3_forced;
    auto verdict = [](bool b) { return std::string(b ? "holds" : "FAILS"); };
    rep.chain = {
        "a(2) even => a1 even (16-row table): " + verdict(rep.a1_parity_holds),
        "a1 even and disc odd => a3 odd (all (Z/8)^5 tuples): " + verdict(a3_forced),
        "a1 even and a3 odd => disc = 5 a3^4 = 5 (mod 8) (all (Z/8)^5 tuples): " + verdict(disc5),
        "disc = +-N prime and disc = 5 (mod 8) => N = 3 or 5 (mod 8), so N = 7 (mod 8) forces a(2) odd: " +
            verdict(rep.chain_holds),
        "degree-10 congruence, a3 odd: " + std::to_string(rep.disc.mismatches_a3_odd) + " of " +
            std::to_string(rep.disc.tuples_a3_odd) + " tuples differ (" + verdict(rep.disc.holds_a3_odd()) + ")",
        "degree-10 congruence, all tuples: " + std::to_string(rep.disc.mismatches.size()) + " of " +
            std::to_string(rep.disc.tuples) + " tuples differ (" +
            (rep.disc.holds_unrestricted() ? "holds" : "does not hold") + ")",
    };
    return rep;
}

Format parse_format(std::string_view s) {
    if (s == "tsv") return Format::tsv;
    if (s == "json") return Format::json;
    if (s == "paper") return Format::paper;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

std::string render(const BetaRecord& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json: os << to_json(r).dump(2) << '\n'; break;
        case Format::paper:
            if (r.ok) {
                os << r.label << ": beta_{" << r.disc << "," << r.r << "} = " << r.beta << '\n';
            } else {
                os << r.label << ": beta_{" << r.disc << "," << r.r << "} not computed (" << r.failure << ")\n";
            }
            break;
        case Format::tsv:
            os << "label\tD\tr\tbeta\tresidual\trunner_up\tprecision\tverified\tstatus\n"
               << r.label << '\t' << r.disc << '\t' << r.r << '\t' << (r.ok ? std::to_string(r.beta) : "-") << '\t'
               << r.residual << '\t' << r.runner_up << '\t' << r.precision_used << '\t'
               << (r.verified_exactly ? "yes" : "no") << '\t' << (r.ok ? "ok" : "FAILED: " + r.failure) << '\n';
            break;
    }
    return os.str();
}

std::string render(const TableReport& t, Format f) {
    std::ostringstream os;
    const auto [c1, c2] = table_columns(t.which);
    if (f == Format::json) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json betas = json::array();
            for (const auto* r : {&row.betas.minus_n, &row.betas.minus_4, &row.betas.minus_4n})
                if (*r) betas.push_back(to_json(**r));
            rows.push_back({{"label", row.label},
                            {"N", row.level},
                            {c1, to_json(row.first)},
                            {c2, to_json(row.second)},
                            {"paper", row.paper ? json{row.paper->first, row.paper->second} : json(nullptr)},
                            {"status", row_status(row)},
                            {"records", betas}});
        }
        os << json{{"table", t.which},     {"title", table_title(t.which)}, {"precision", t.precision},
                   {"rows", rows},         {"mismatches", t.mismatches},   {"failures", t.failures},
                   {"second_even", t.even}, {"second_odd", t.odd}}
                  .dump(2)
           << '\n';
        return os.str();
    }
    if (f == Format::paper) {
        os << "Table " << t.which << ": " << table_title(t.which) << '\n';
        os << std::left << std::setw(10) << "E" << std::right << std::setw(8) << c1 << std::setw(10) << c2 << '\n';
        for (const auto& row : t.rows) {
            os << std::left << std::setw(10) << row.label << std::right << std::setw(8) << opt_str(row.first)
               << std::setw(10) << opt_str(row.second);
            if (row.mismatch) os << "   * published " << row.paper->first << ' ' << row.paper->second;
            if (!row.failure.empty()) os << "   ! " << row.failure;
            os << '\n';
        }
        os << "(" << t.rows.size() << " rows, " << t.mismatches << " mismatches, " << t.failures << " failures; "
           << c2 << " even " << t.even << ", odd " << t.odd << ")\n";
        return os.str();
    }
    os << "label\tN\t" << c1 << '\t' << c2 << "\tpaper_" << c1 << "\tpaper_" << c2 << "\tstatus\n";
    for (const auto& row : t.rows) {
        os << row.label << '\t' << row.level << '\t' << opt_str(row.first) << '\t' << opt_str(row.second) << '\t'
           << (row.paper ? std::to_string(row.paper->first) : "-") << '\t'
           << (row.paper ? std::to_string(row.paper->second) : "-") << '\t' << row_status(row) << '\n';
    }
    os << "# table " << t.which << " rows=" << t.rows.size() << " mismatches=" << t.mismatches
       << " failures=" << t.failures << " even=" << t.even << " odd=" << t.odd << '\n';
    return os.str();
}

std::string render(const ConjectureReport& r, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        json v = json::array();
        for (const auto& x : r.verdicts) v.push_back({{"label", x.label}, {"status", to_string(x.status)}, {"detail", x.detail}});
        os << json{{"id", r.id}, {"title", r.title}, {"verdicts", v}, {"stats", r.stats}, {"notes", r.notes}}.dump(2)
           << '\n';
        return os.str();
    }
    if (f == Format::paper) {
        os << r.title << '\n';
        for (const auto& x : r.verdicts)
            os << "  " << std::left << std::setw(10) << x.label << std::setw(8) << to_string(x.status) << x.detail << '\n';
    } else {
        os << "label\tstatus\tdetail\n";
        for (const auto& x : r.verdicts) os << x.label << '\t' << to_string(x.status) << '\t' << x.detail << '\n';
    }
    os << "# " << r.id << ": " << r.title << '\n';
    for (const auto& [k, v] : r.stats) os << "# " << k << " = " << v << '\n';
    for (const auto& n : r.notes) os << "# " << n << '\n';
    return os.str();
}

std::string render(const LemmaReport& r, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        json rows = json::array();
        for (const auto& row : r.table) rows.push_back({{"a", row.a}, {"a2", row.a2_trace}});
        os << json{{"mod2_table", rows},
                   {"table_matches", r.table_matches},
                   {"a1_parity_holds", r.a1_parity_holds},
                   {"disc_mod8_tuples", r.disc.tuples},
                   {"disc_mod8_mismatches", r.disc.mismatches.size()},
                   {"disc_mod8_a3_odd_tuples", r.disc.tuples_a3_odd},
                   {"disc_mod8_a3_odd_mismatches", r.disc.mismatches_a3_odd},
                   {"chain_holds", r.chain_holds},
                   {"chain", r.chain}}
                  .dump(2)
           << '\n';
        return os.str();
    }
    os << (f == Format::tsv ? "a1\ta2\ta3\ta4\ta6\ta(2)\n" : "a1 a2 a3 a4 a6   a(2)\n");
    for (const auto& row : r.table) {
        for (int v : row.a) os << v << (f == Format::tsv ? "\t" : "  ");
        os << (f == Format::tsv ? "" : " ") << row.a2_trace << '\n';
    }
    os << "# mod-2 table matches the published rows: " << (r.table_matches ? "yes" : "NO") << '\n';
    for (const auto& c : r.chain) os << "# " << c << '\n';
    return os.str();
}

}  // namespace gkz
