// Command-line front end: every computation exposed with deterministic,
// machine-readable output.
//
// Exit codes: 0 success, 2 validation or input error, 3 a verification
// subcommand returned a false verdict, 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqcoh/acceptance.hpp"
#include "eqcoh/canonical.hpp"
#include "eqcoh/errors.hpp"
#include "eqcoh/gkm.hpp"
#include "eqcoh/polynomial.hpp"
#include "eqcoh/serialization.hpp"
#include "eqcoh/structconst.hpp"

namespace {

using namespace eqcoh;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerdictFalse = 3;
constexpr int kExitInvariant = 4;

WeightVector make_weights(const std::vector<long>& entries, const std::string& flag) {
    try {
        return WeightVector(entries);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

WeightVector weights_or_ones(const std::vector<long>& entries, std::size_t count,
                             const std::string& flag) {
    if (entries.empty()) return WeightVector::ones(count);
    WeightVector w = make_weights(entries, flag);
    if (w.size() != count) {
        throw std::invalid_argument(flag + ": expected " + std::to_string(count) +
                                    " entries, got " + std::to_string(w.size()));
    }
    return w;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
    std::vector<long> lambda, mu;
    long n = -1;
    long i = -1, j = -1, k = -1;
    std::string format = "text";
    std::string ring = "integers";
    std::string input;
    long max_n = 8;
    long trials = 500;
    long kappa_trials = 300;
    unsigned seed = 20240817;
    bool timings = false;
};

std::size_t resolve_n(const Options& opt) {
    if (opt.n >= 0) {
        if (!opt.lambda.empty() && opt.lambda.size() != static_cast<std::size_t>(opt.n) + 1)
            throw std::invalid_argument("--lambda: length must be n+1");
        return static_cast<std::size_t>(opt.n);
    }
    if (!opt.lambda.empty()) return opt.lambda.size() - 1;
    throw std::invalid_argument("--n: required when --lambda is not given");
}

std::size_t require_index(long value, std::size_t n, const std::string& flag) {
    if (value < 0 || static_cast<std::size_t>(value) > n)
        throw std::invalid_argument(flag + ": must lie between 0 and n");
    return static_cast<std::size_t>(value);
}

int run_schubert(const Options& opt) {
    const std::size_t n = resolve_n(opt);
    const std::size_t i = require_index(opt.i, n, "--i");
    const LocalizedClass cls = schubert_class(i, n);
    if (opt.format == "json") {
        Json j;
        j["i"] = i;
        j["n"] = n;
        j["class"] = class_to_json(cls);
        emit_json(j);
    } else {
        for (std::size_t k = 0; k <= n; ++k)
            std::cout << 'x' << k << ": " << cls[k].to_string() << '\n';
    }
    return kExitOk;
}

int run_kappa(const Options& opt) {
    const WeightVector lambda = make_weights(opt.lambda, "--lambda");
    const std::size_t n = lambda.n();
    if (opt.i >= 0) {
        const std::size_t i = require_index(opt.i, n, "--i");
        const Integer kappa = kawasaki_constant(i, lambda);
        if (opt.format == "json") {
            Json j;
            j["i"] = i;
            j["lambda"] = lambda.entries();
            j["kappa"] = kappa.get_str();
            emit_json(j);
        } else {
            std::cout << kappa.get_str() << '\n';
        }
    } else {
        Json values = Json::array();
        for (std::size_t i = 0; i <= n; ++i)
            values.push_back(kawasaki_constant(i, lambda).get_str());
        if (opt.format == "json") {
            Json j;
            j["lambda"] = lambda.entries();
            j["kappa"] = std::move(values);
            emit_json(j);
        } else {
            for (std::size_t i = 0; i <= n; ++i)
                std::cout << "kappa_" << i << " = " << values[i].get<std::string>() << '\n';
        }
    }
    return kExitOk;
}

int run_weighted_class(const Options& opt) {
    const WeightVector lambda = make_weights(opt.lambda, "--lambda");
    const std::size_t n = lambda.n();
    const std::size_t i = require_index(opt.i, n, "--i");
    const LocalizedClass cls = weighted_canonical_class(i, lambda);
    const Integer kappa = kawasaki_constant(i, lambda);
    if (opt.format == "json") {
        Json j;
        j["i"] = i;
        j["lambda"] = lambda.entries();
        j["kappa"] = kappa.get_str();
        j["class"] = class_to_json(cls);
        emit_json(j);
    } else {
        std::cout << "kappa = " << kappa.get_str() << '\n';
        for (std::size_t k = 0; k <= n; ++k)
            std::cout << 'x' << k << ": " << cls[k].to_string() << '\n';
    }
    return kExitOk;
}

int run_edge_weights(const Options& opt) {
    const std::size_t n = resolve_n(opt);
    const WeightVector lambda = weights_or_ones(opt.lambda, n + 1, "--lambda");
    const ActionVector mu = weights_or_ones(opt.mu, n + 1, "--mu");
    if (opt.format == "json") {
        Json weights = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                Json w;
                w["i"] = i;
                w["j"] = j;
                w["weight"] = edge_weight(i, j, lambda, mu).to_string();
                weights.push_back(std::move(w));
            }
        }
        Json out;
        out["n"] = n;
        out["lambda"] = lambda.entries();
        out["mu"] = mu.entries();
        out["weights"] = std::move(weights);
        emit_json(out);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                std::cout << "w(" << i << ',' << j << ") = "
                          << edge_weight(i, j, lambda, mu).to_string() << '\n';
    }
    return kExitOk;
}

int run_check_gkm(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in)
        throw std::invalid_argument("--input: cannot read file '" + opt.input + "'");
    Json parsed;
    try {
        in >> parsed;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("--input: not valid JSON: " + std::string(e.what()));
    }
    const LocalizedClass cls = class_from_json(parsed);
    const std::size_t n = cls.n();
    const WeightVector lambda = weights_or_ones(opt.lambda, n + 1, "--lambda");
    const ActionVector mu = weights_or_ones(opt.mu, n + 1, "--mu");
    const Ring ring = opt.ring == "rationals" ? Ring::rationals : Ring::integers;
    const GkmGraph graph(lambda, mu);
    const MembershipVerdict verdict = is_gkm_member(cls, graph, ring);

    const bool formal_only = ring == Ring::integers && !mu.is_unit();
    const char* note = "integer-mode verdict for mu != (1,...,1) is a formal divisibility "
                       "check, not a cohomology computation";
    if (opt.format == "json") {
        Json j;
        j["member"] = verdict.member;
        j["ring"] = opt.ring;
        j["lambda"] = lambda.entries();
        j["mu"] = mu.entries();
        if (!verdict.member) {
            j["reason"] = verdict.reason;
            if (verdict.failing_edge)
                j["failing_edge"] = {verdict.failing_edge->first, verdict.failing_edge->second};
        }
        if (formal_only) j["note"] = note;
        emit_json(j);
    } else {
        std::cout << "member: " << (verdict.member ? "true" : "false") << '\n';
        if (!verdict.member) std::cout << "reason: " << verdict.reason << '\n';
        if (formal_only) std::cout << "note: " << note << '\n';
    }
    return verdict.member ? kExitOk : kExitVerdictFalse;
}

Json row_json(std::size_t i, std::size_t j, std::size_t n, const StructureTable& table) {
    Json row = Json::object();
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial c = table.entry(i, j, k);
        if (!c.is_zero()) row["c^" + std::to_string(k)] = c.to_string();
    }
    Json out;
    out["i"] = i;
    out["j"] = j;
    out["n"] = n;
    out["row"] = std::move(row);
    return out;
}

int run_structconst(const Options& opt) {
    const std::size_t n = resolve_n(opt);
    const StructureTable table = StructureTable::build(n);

    if (opt.i >= 0 || opt.j >= 0) {
        const std::size_t i = require_index(opt.i, n, "--i");
        const std::size_t j = require_index(opt.j, n, "--j");
        if (opt.k >= 0) {
            const std::size_t k = require_index(opt.k, n, "--k");
            const Polynomial c = table.entry(i, j, k);
            if (opt.format == "json") {
                Json out;
                out["i"] = i;
                out["j"] = j;
                out["k"] = k;
                out["n"] = n;
                out["value"] = c.to_string();
                emit_json(out);
            } else {
                std::cout << c.to_string() << '\n';
            }
        } else if (opt.format == "json") {
            emit_json(row_json(i, j, n, table));
        } else {
            for (std::size_t k = 0; k <= n; ++k) {
                Polynomial c = table.entry(i, j, k);
                if (!c.is_zero())
                    std::cout << "c^" << k << " = " << c.to_string() << '\n';
            }
        }
        return kExitOk;
    }

    if (opt.format == "json")
        emit_json(table_json(table));
    else if (opt.format == "csv")
        std::cout << table_csv(table);
    else if (opt.format == "latex")
        std::cout << table_latex(table);
    else
        for (const auto& item : table.items())
            std::cout << "c_{" << item.i << ',' << item.j << "}^{" << item.k
                      << "} = " << item.value.to_string() << '\n';
    return kExitOk;
}

int run_weighted_structconst(const Options& opt) {
    const WeightVector lambda = make_weights(opt.lambda, "--lambda");
    const std::size_t n = lambda.n();
    const std::size_t i = require_index(opt.i, n, "--i");
    const std::size_t j = require_index(opt.j, n, "--j");
    const WeightedStructRow row = weighted_struct_row(i, j, lambda, n);

    auto entry_json = [&](std::size_t k) {
        Json e;
        e["k"] = k;
        e["image"] = row.image[k].to_string();
        e["native"] = row.native[k].to_string();
        e["image_integral"] = row.image[k].is_integral();
        e["native_integral"] = row.native[k].is_integral();
        return e;
    };

    if (opt.k >= 0) {
        const std::size_t k = require_index(opt.k, n, "--k");
        if (opt.format == "json") {
            Json out = entry_json(k);
            out["i"] = row.i;
            out["j"] = row.j;
            out["lambda"] = lambda.entries();
            emit_json(out);
        } else {
            std::cout << "image:  " << row.image[k].to_string() << '\n'
                      << "native: " << row.native[k].to_string() << '\n';
        }
        return kExitOk;
    }
    if (opt.format == "json") {
        Json entries = Json::array();
        for (std::size_t k = 0; k <= n; ++k)
            if (!row.image[k].is_zero()) entries.push_back(entry_json(k));
        Json out;
        out["i"] = row.i;
        out["j"] = row.j;
        out["lambda"] = lambda.entries();
        out["entries"] = std::move(entries);
        emit_json(out);
    } else {
        for (std::size_t k = 0; k <= n; ++k) {
            if (row.image[k].is_zero()) continue;
            std::cout << "c^" << k << ": image = " << row.image[k].to_string()
                      << ", native = " << row.native[k].to_string() << '\n';
        }
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    AcceptanceOptions a;
    a.max_n = static_cast<std::size_t>(opt.max_n);
    a.schubert_max_n = a.max_n + 2;
    a.weighted_class_max_n = std::min<std::size_t>(4, a.max_n);
    a.weighted_struct_max_n = std::min<std::size_t>(5, a.max_n);
    a.property_trials = static_cast<int>(opt.trials);
    a.kappa_trials = static_cast<int>(opt.kappa_trials);
    a.seed = opt.seed;
    a.show_timings = opt.timings;
    const auto results = run_acceptance(a, std::cout);
    for (const auto& r : results)
        if (!r.passed) return kExitVerdictFalse;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant cohomology of ordinary and weighted projective space"};
    app.require_subcommand(1);

    Options opt;

    auto add_lambda = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--lambda", opt.lambda,
                                  "comma-separated positive weights (length n+1)")
                      ->delimiter(',');
        if (required) o->required();
    };
    auto add_mu = [&](CLI::App* cmd) {
        cmd->add_option("--mu", opt.mu, "comma-separated action exponents, default all 1")
            ->delimiter(',');
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(allowed));
    };

    CLI::App* schubert = app.add_subcommand("schubert", "Schubert class of P^n");
    schubert->add_option("--i", opt.i, "degree")->required();
    schubert->add_option("--n", opt.n, "dimension");
    add_format(schubert, {"text", "json"});

    CLI::App* kappa = app.add_subcommand("kappa", "Kawasaki constants");
    add_lambda(kappa, true);
    kappa->add_option("--i", opt.i, "degree (all degrees when omitted)");
    add_format(kappa, {"text", "json"});

    CLI::App* wclass = app.add_subcommand("weighted-class",
                                          "kappa-scaled canonical class, certified integral");
    add_lambda(wclass, true);
    wclass->add_option("--i", opt.i, "degree")->required();
    add_format(wclass, {"text", "json"});

    CLI::App* edges = app.add_subcommand("edge-weights", "weights of the orbit graph");
    add_lambda(edges, false);
    add_mu(edges);
    edges->add_option("--n", opt.n, "dimension (when --lambda is omitted)");
    add_format(edges, {"text", "json"});

    CLI::App* check = app.add_subcommand("check-gkm",
                                         "membership test for a localized class file");
    check->add_option("--input", opt.input, "class JSON file")->required();
    add_lambda(check, false);
    add_mu(check);
    check->add_option("--ring", opt.ring, "coefficient ring")
        ->check(CLI::IsMember({"integers", "rationals"}));
    add_format(check, {"text", "json"});

    CLI::App* sc = app.add_subcommand("structconst", "structure constants of P^n");
    sc->add_option("--n", opt.n, "dimension")->required();
    sc->add_option("--i", opt.i, "first degree");
    sc->add_option("--j", opt.j, "second degree");
    sc->add_option("--k", opt.k, "target degree");
    add_format(sc, {"text", "json", "csv", "latex"});

    CLI::App* wsc = app.add_subcommand("weighted-structconst",
                                       "weighted structure constants");
    add_lambda(wsc, true);
    wsc->add_option("--i", opt.i, "first degree")->required();
    wsc->add_option("--j", opt.j, "second degree")->required();
    wsc->add_option("--k", opt.k, "target degree");
    add_format(wsc, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--max-n", opt.max_n, "largest projective space dimension")
        ->check(CLI::Range(1L, 12L));
    verify->add_option("--trials", opt.trials, "property-test trials");
    verify->add_option("--kappa-trials", opt.kappa_trials, "random weight vectors");
    verify->add_option("--seed", opt.seed, "random seed");
    verify->add_flag("--timings", opt.timings, "append per-criterion wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (schubert->parsed()) return run_schubert(opt);
        if (kappa->parsed()) return run_kappa(opt);
        if (wclass->parsed()) return run_weighted_class(opt);
        if (edges->parsed()) return run_edge_weights(opt);
        if (check->parsed()) return run_check_gkm(opt);
        if (sc->parsed()) return run_structconst(opt);
        if (wsc->parsed()) return run_weighted_structconst(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const eqcoh::InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
