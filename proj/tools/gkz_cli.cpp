#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gkz/harness.hpp"

namespace {

constexpr int kExitFailure = 2;
constexpr int kExitMismatch = 3;

std::vector<gkz::CurveRecord> load(const std::string& path, std::optional<std::int64_t> max_n) {
    auto records = gkz::ingest(path);
    if (max_n) std::erase_if(records, [&](const gkz::CurveRecord& r) { return r.level > *max_n; });
    return records;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegner traces and the coefficients beta_{D,r} for prime-conductor elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();

    long precision = 192;
    std::string format = "tsv";
    std::string output;
    unsigned jobs = 0;
    app.add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64L, 4096L));
    app.add_option("--format", format, "tsv, json or paper")->check(CLI::IsMember({"tsv", "json", "paper"}));
    app.add_option("--output", output, "write the report here instead of stdout");
    app.add_option("--jobs", jobs, "worker threads (0: all cores)");

    std::string input = GKZ_DEFAULT_CURVES;
    std::optional<std::int64_t> max_n;

    auto* beta = app.add_subcommand("beta", "beta_{D,r} for one curve");
    std::string label;
    std::int64_t disc = 0;
    std::optional<std::int64_t> r;
    beta->add_option("--curve", label, "curve or class label, e.g. 43A1")->required();
    beta->add_option("--disc", disc, "negative discriminant D")->required();
    beta->add_option("--r", r, "square root of D mod 4N (default: smallest)");
    beta->add_option("--input", input, "curve file");

    auto* table = app.add_subcommand("table", "reproduce a published table");
    int which = 1;
    table->add_option("--which", which, "table number")->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--input", input, "curve file");
    table->add_option("--max-n", max_n, "largest conductor");

    auto* conj = app.add_subcommand("conjecture", "check a conjecture, the lemma or the theorem");
    std::string id;
    conj->add_option("--id", id, "conjecture id")->required()->check(CLI::IsMember(gkz::conjecture_ids()));
    conj->add_option("--input", input, "curve file");
    conj->add_option("--max-n", max_n, "largest conductor");

    auto* lemma = app.add_subcommand("lemma-table", "mod-2 table and discriminant congruences");

    CLI11_PARSE(app, argc, argv);

    const auto fmt = gkz::parse_format(format);
    const auto bits = static_cast<gkz::mp::Bits>(precision);
    std::string text;
    int status = 0;
    try {
        if (*beta) {
            const auto records = gkz::ingest(input);
            const auto* rec = gkz::find_curve(records, label);
            if (!rec) throw std::invalid_argument("curve " + label + " not in " + input);
            gkz::CurveContextCache cache(rec->label, rec->model, rec->level, rec->generator,
                                         rec->manin_override.value_or(1));
            const auto b = gkz::compute_beta(cache, disc, r, bits);
            text = gkz::render(b, fmt);
            if (!b.ok) status = kExitFailure;
        } else if (*table) {
            const auto report = gkz::run_table(which, load(input, max_n), bits, std::nullopt, jobs);
            text = gkz::render(report, fmt);
            if (report.mismatches > 0) status = kExitMismatch;
            else if (report.failures > 0) status = kExitFailure;
        } else if (*conj) {
            const auto records = load(input, max_n);
            gkz::ConjectureReport report;
            if (id == "lemma") {
                report = gkz::check_conjecture(id, records, bits, jobs);
            } else {
                const auto betas = gkz::compute_all_betas(records, bits, jobs);
                report = gkz::check_conjecture(id, records, betas);
                for (const auto& cb : betas)
                    if (!cb.ok()) status = kExitFailure;
            }
            text = gkz::render(report, fmt);
            if (!report.passed()) status = kExitMismatch;
        } else if (*lemma) {
            const auto report = gkz::lemma_report();
            text = gkz::render(report, fmt);
            if (!report.table_matches || !report.a1_parity_holds || !report.chain_holds ||
                !report.disc.holds_a3_odd())
                status = kExitMismatch;
        }
    } catch (const std::exception& ex) {
        std::cerr << "gkz: " << ex.what() << '\n';
        return kExitFailure;
    }

    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "gkz: cannot write " << output << '\n';
            return kExitFailure;
        }
        out << text;
    }
    return status;
}
