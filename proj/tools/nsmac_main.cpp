// Command-line front end: compute family members, run verification suites,
// print the E_mu table, and inspect diagram/filling statistics.

#include "nsmac/hecke.hpp"
#include "nsmac/macdonald.hpp"
#include "nsmac/parse.hpp"
#include "nsmac/render.hpp"
#include "nsmac/symmetric.hpp"
#include "nsmac/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nsmac::Composition;
using nsmac::Mode;
using nsmac::Partition;
using nsmac::XMonomial;
using nsmac::XPolynomial;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct ComputeSpec {
    std::string family;
    std::string shape;
    int m = 0;  // 0 = default for the family
    std::string format = "text";
    Mode mode = Mode::fast;
    int jobs = 1;
};

struct Computed {
    XPolynomial poly;
    std::optional<XMonomial> head;
    nlohmann::json meta;  // family plus shape fields
};

Computed run_compute(const ComputeSpec& req) {
    const bool checked = req.mode == Mode::checked;
    auto head_for = [](const std::vector<int>& parts, const XPolynomial& f) {
        std::optional<XMonomial> head;
        if (static_cast<int>(parts.size()) == f.vars() && !f.coeff(parts).is_zero())
            head = parts;
        return head;
    };

    if (req.family == "E" || req.family == "Eint" || req.family == "Einv" ||
        req.family == "key") {
        Composition mu = Composition::parse(req.shape);
        XPolynomial f(mu.n());
        if (req.family == "E") {
            f = nsmac::E_combinatorial(mu, req.jobs);
            if (checked && !(f == nsmac::E_recurrence(mu)))
                throw std::logic_error("combinatorial and recurrence routes disagree");
        } else if (req.family == "Eint") {
            f = nsmac::E_integral(mu, req.mode, req.jobs);
        } else if (req.family == "Einv") {
            f = nsmac::E_inverted(mu, req.mode, req.jobs);
        } else {
            f = nsmac::key_polynomial(mu);
        }
        nlohmann::json meta{{"family", req.family}, {"mu", mu.parts}, {"n", mu.n()}};
        return Computed{f, head_for(mu.parts, f), std::move(meta)};
    }

    if (req.family == "D") {
        Composition mu = Composition::parse(req.shape);
        int m = req.m > 0 ? req.m : mu.n();
        XPolynomial f = nsmac::D_mu(mu, m);
        if (checked) {
            std::vector<int> sorted = mu.parts;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            if (!(f == nsmac::D_mu(Composition(sorted), m)))
                throw std::logic_error("D_mu differs from its sorted rearrangement");
        }
        nlohmann::json meta{{"family", "D"}, {"mu", mu.parts}, {"m", m}};
        return Computed{f, std::nullopt, std::move(meta)};
    }

    Partition lam = Partition::parse(req.shape);
    int m = req.m > 0 ? req.m : lam.len();
    nlohmann::json meta{{"family", req.family}, {"lambda", lam.parts}, {"m", m}};
    if (req.family == "J") {
        XPolynomial f = nsmac::J_lambda(lam, m);
        if (checked) {
            Composition inc = nsmac::increasing_rearrangement(lam);
            if (!(f == nsmac::J_via_stable_limit(lam, inc, m, Mode::fast)))
                throw std::logic_error("J routes disagree");
        }
        return Computed{f, std::nullopt, std::move(meta)};
    }
    if (req.family == "P") {
        XPolynomial f = nsmac::P_lambda_truncated(
            lam, nsmac::increasing_rearrangement(lam), m, req.mode);
        if (checked && m == lam.len() && !(f == nsmac::P_lambda_symmetrized(lam, Mode::fast)))
            throw std::logic_error("P routes disagree");
        std::optional<XMonomial> head;
        if (lam.len() <= m) {
            XMonomial e = lam.parts;
            e.resize(m, 0);
            if (!f.coeff(e).is_zero()) head = e;
        }
        return Computed{f, head, std::move(meta)};
    }
    if (req.family == "schur") {
        XPolynomial f = nsmac::schur_via_keys(lam, m);
        if (checked && !(f == nsmac::schur_oracle(lam, m)))
            throw std::logic_error("schur routes disagree");
        std::optional<XMonomial> head;
        if (lam.len() <= m) {
            XMonomial e = lam.parts;
            e.resize(m, 0);
            if (!f.coeff(e).is_zero()) head = e;
        }
        return Computed{f, head, std::move(meta)};
    }
    throw CLI::ValidationError("family", "unknown family: " + req.family);
}

void print_polynomial(const Computed& c, const std::string& format,
                      const std::string& command) {
    if (format == "json") {
        nlohmann::json out = c.meta;
        out["schema"] = "nsmac/1";
        out["command"] = command;
        out["terms"] = nsmac::xpoly_json(c.poly);
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << nsmac::xpoly_latex(c.poly, c.head) << "\n";
    } else {
        std::cout << nsmac::xpoly_text(c.poly, c.head) << "\n";
    }
}

// Table order: total degree, then orbits by their partition (lex
// ascending), then lex descending inside each orbit.
std::vector<Composition> table_order(int n, int max_degree) {
    std::vector<Composition> mus;
    std::vector<int> parts(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            parts[pos] = left;
            mus.push_back(Composition(parts));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    for (int d = 0; d <= max_degree; ++d) rec(rec, 0, d);
    auto orbit_key = [](const Composition& mu) {
        std::vector<int> k = mu.parts;
        std::sort(k.begin(), k.end(), std::greater<>());
        return k;
    };
    std::stable_sort(mus.begin(), mus.end(), [&](const Composition& a, const Composition& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        auto ka = orbit_key(a), kb = orbit_key(b);
        if (ka != kb) return ka < kb;
        return a.parts > b.parts;
    });
    return mus;
}

int run_table(int n, int max_degree, const std::string& format, Mode mode, int jobs) {
    nsmac::RecurrenceEngine engine(n);
    nlohmann::json entries = nlohmann::json::array();
    for (const Composition& mu : table_order(n, max_degree)) {
        XPolynomial f = nsmac::E_combinatorial(mu, jobs);
        if (mode == Mode::checked && !(f == engine.E(mu)))
            throw std::logic_error("combinatorial and recurrence routes disagree at mu=(" +
                                   mu.str() + ")");
        std::optional<XMonomial> head;
        if (!f.coeff(mu.parts).is_zero()) head = mu.parts;
        if (format == "json") {
            entries.push_back({{"mu", mu.parts}, {"terms", nsmac::xpoly_json(f)}});
        } else if (format == "latex") {
            std::cout << "E_{(" << mu.str() << ")} &= " << nsmac::xpoly_latex(f, head)
                      << " \\\\\n";
        } else {
            std::cout << "E_(" << mu.str() << ") = " << nsmac::xpoly_text(f, head) << "\n";
        }
    }
    if (format == "json") {
        nlohmann::json out{{"schema", "nsmac/1"},
                           {"command", "table"},
                           {"n", n},
                           {"max_degree", max_degree},
                           {"entries", std::move(entries)}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const nsmac::verify::Options& opt,
               const std::string& format) {
    std::vector<nsmac::verify::CheckResult> results = nsmac::verify::run_suite(suite, opt);
    int passed = 0;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        passed += r.pass;
        if (format == "json") {
            checks.push_back({{"name", r.name},
                              {"pass", r.pass},
                              {"detail", r.detail},
                              {"ms", r.ms}});
        } else {
            std::printf("[%s] %s (%.1f ms)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.ms);
            if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
        }
    }
    bool all = passed == static_cast<int>(results.size());
    if (format == "json") {
        nlohmann::json out{{"schema", "nsmac/1"}, {"command", "verify"},
                           {"suite", suite},     {"passed", passed},
                           {"total", results.size()}, {"checks", std::move(checks)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%d/%zu checks passed\n", passed, results.size());
    }
    return all ? 0 : kExitVerifyFailure;
}

int run_stats(const std::string& mu_text, const std::string& rows_text,
              const std::string& format) {
    Composition mu = Composition::parse(mu_text);
    nsmac::DiagramInfo d = nsmac::make_diagram(mu);

    if (rows_text.empty()) {
        auto triples = nsmac::enumerate_triples(mu);
        long long type1 = 0;
        for (const auto& tr : triples) type1 += tr.kind == nsmac::Triple::Kind::I;
        mpz_class fillings = nsmac::count_non_attacking(mu);
        // Keep JSON numeric while the count is exactly representable.
        nlohmann::json fillings_json = fillings.fits_slong_p()
            ? nlohmann::json(static_cast<long long>(fillings.get_si()))
            : nlohmann::json(fillings.get_str());
        if (format == "json") {
            nlohmann::json boxes = nlohmann::json::array();
            for (size_t k = 0; k < d.boxes.size(); ++k)
                boxes.push_back({{"col", d.boxes[k].col},
                                 {"row", d.boxes[k].row},
                                 {"arm", d.arm[k]},
                                 {"leg", d.leg[k]}});
            nlohmann::json out{{"schema", "nsmac/1"},
                               {"command", "stats"},
                               {"mu", mu.parts},
                               {"size", mu.sum()},
                               {"boxes", std::move(boxes)},
                               {"arm_sum", d.arm_sum},
                               {"weak_order_pairs", d.weak_order_pairs},
                               {"triples_type_I", type1},
                               {"triples_type_II", static_cast<long long>(triples.size()) - type1},
                               {"non_attacking_fillings", std::move(fillings_json)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::printf("mu = (%s), |mu| = %d, %zu boxes\n", mu.str().c_str(), mu.sum(),
                        d.boxes.size());
            for (size_t k = 0; k < d.boxes.size(); ++k)
                std::printf("box (%d,%d): l=%d a=%d\n", d.boxes[k].col, d.boxes[k].row,
                            d.leg[k], d.arm[k]);
            std::printf("arm sum = %lld, weak order pairs = %d\n", d.arm_sum,
                        d.weak_order_pairs);
            std::printf("triples: %zu (type I %lld, type II %lld)\n", triples.size(), type1,
                        static_cast<long long>(triples.size()) - type1);
            std::printf("non-attacking fillings: %s\n", fillings.get_str().c_str());
        }
        return 0;
    }

    nlohmann::json rows = nlohmann::json::parse(rows_text);
    nsmac::Filling f = nsmac::filling_from_json({{"mu", mu.parts}, {"rows", rows}});
    for (int v : f.values)
        if (v < 1 || v > mu.n())
            throw std::invalid_argument("filling value outside 1..n");
    nsmac::AugmentedStats s = nsmac::augmented_stats(d, f.values);
    nsmac::PlainStats p = nsmac::plain_stats(d, f.values);
    bool non_attacking = nsmac::is_non_attacking_augmented(d, f.values);
    long long inv_triples = nsmac::count_inversion_triples(d, f.values);
    long long coinv_triples = nsmac::count_coinversion_triples(d, f.values);
    if (format == "json") {
        nlohmann::json descents = nlohmann::json::array();
        for (const auto& u : s.descents) descents.push_back({{"col", u.col}, {"row", u.row}});
        nlohmann::json out{{"schema", "nsmac/1"},
                           {"command", "stats"},
                           {"mu", mu.parts},
                           {"rows", rows},
                           {"non_attacking", non_attacking},
                           {"descents", std::move(descents)},
                           {"maj", s.maj},
                           {"inv_pairs", s.inv_pairs},
                           {"inv", s.inv},
                           {"coinv", s.coinv},
                           {"maj_prime", s.maj_prime},
                           {"coinv_prime", s.coinv_prime},
                           {"inversion_triples", inv_triples},
                           {"coinversion_triples", coinv_triples},
                           {"plain_maj", p.maj},
                           {"plain_inv", p.inv}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("mu = (%s), %s filling\n", mu.str().c_str(),
                    non_attacking ? "non-attacking" : "attacking");
        std::printf("descents:");
        for (const auto& u : s.descents) std::printf(" (%d,%d)", u.col, u.row);
        std::printf("\nmaj = %lld, |Inv| = %lld, inv = %lld, coinv = %lld\n", s.maj,
                    s.inv_pairs, s.inv, s.coinv);
        std::printf("maj' = %lld, coinv' = %lld\n", s.maj_prime, s.coinv_prime);
        std::printf("inversion triples = %lld, co-inversion triples = %lld\n", inv_triples,
                    coinv_triples);
        std::printf("unaugmented: maj = %lld, inv = %lld\n", p.maj, p.inv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-symmetric Macdonald polynomials: exact computation and verification"};
    app.require_subcommand(1);

    ComputeSpec req;
    std::string mu_text, lambda_text, rows_text;
    std::string suite = "all";
    std::string format = "text";
    std::string mode_text = "fast";
    int n = 3, max_degree = 3, jobs = 1;
    unsigned long seed = 42;

    auto* compute = app.add_subcommand("compute", "Compute one family member");
    compute->add_option("family", req.family, "E | Eint | Einv | key | D | J | P | schur")
        ->required()
        ->check(CLI::IsMember({"E", "Eint", "Einv", "key", "D", "J", "P", "schur"}));
    compute->add_option("shape", req.shape, "composition or partition, e.g. 0,1,0");
    compute->add_option("--mu", mu_text, "composition (alternative to the positional)");
    compute->add_option("--lambda", lambda_text, "partition (alternative to the positional)");
    compute->add_option("--m", req.m, "number of variables for D/J/P/schur");
    compute->add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    compute->add_option("--mode", mode_text, "fast | checked")
        ->check(CLI::IsMember({"fast", "checked"}));
    compute->add_option("--jobs", jobs, "worker threads for filling enumeration")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'");
    verify->add_option("--n", n, "number of variables")->check(CLI::PositiveNumber);
    verify->add_option("--max-degree", max_degree, "degree bound |mu|")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "Print every E_mu up to a degree bound");
    table->add_option("--n", n, "number of variables")->check(CLI::PositiveNumber);
    table->add_option("--max-degree", max_degree, "degree bound |mu|")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    table->add_option("--mode", mode_text, "fast | checked")
        ->check(CLI::IsMember({"fast", "checked"}));
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("stats", "Diagram summary or filling statistics");
    stats->add_option("--mu", mu_text, "composition")->required();
    stats->add_option("--rows", rows_text,
                      "filling rows as JSON, bottom row first, e.g. [[1,2],[2]]");
    stats->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            if (req.shape.empty()) req.shape = !mu_text.empty() ? mu_text : lambda_text;
            if (req.shape.empty()) {
                std::cerr << "compute needs a shape (positional, --mu, or --lambda)\n";
                return kExitUsage;
            }
            req.format = format;
            req.mode = mode_text == "checked" ? Mode::checked : Mode::fast;
            req.jobs = jobs;
            print_polynomial(run_compute(req), format, "compute");
            return 0;
        }
        if (verify->parsed()) {
            nsmac::verify::Options opt;
            opt.n = n;
            opt.max_degree = max_degree;
            opt.seed = seed;
            opt.jobs = jobs;
            return run_verify(suite, opt, format);
        }
        if (table->parsed())
            return run_table(n, max_degree, format,
                             mode_text == "checked" ? Mode::checked : Mode::fast, jobs);
        if (stats->parsed()) return run_stats(mu_text, rows_text, format);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return 0;
}
