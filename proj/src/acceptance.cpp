#include "eqcoh/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "eqcoh/canonical.hpp"
#include "eqcoh/errors.hpp"
#include "eqcoh/gkm.hpp"
#include "eqcoh/polynomial.hpp"
#include "eqcoh/structconst.hpp"

namespace eqcoh {

namespace {

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
};

Polynomial random_polynomial(Rng& rng, std::size_t num_vars, int max_degree,
                             int max_terms) {
    Polynomial p(num_vars);
    const int terms = rng.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(num_vars, 0);
        const int degree = rng.uniform(0, max_degree);
        for (int d = 0; d < degree; ++d)
            m[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(num_vars) - 1))] += 1;
        int c = rng.uniform(-9, 9);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    return p;
}

WeightVector random_weights(Rng& rng, std::size_t count, int max_entry) {
    std::vector<long> entries(count);
    for (long& w : entries) w = rng.uniform(1, max_entry);
    return WeightVector(std::move(entries));
}

// Enumerates every vector of the given length with entries in 1..max_entry.
bool next_vector(std::vector<long>& v, long max_entry) {
    for (std::size_t idx = v.size(); idx-- > 0;) {
        if (v[idx] < max_entry) {
            ++v[idx];
            std::fill(v.begin() + static_cast<long>(idx) + 1, v.end(), 1L);
            return true;
        }
    }
    return false;
}

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome criterion_oracle_equivalence(const AcceptanceOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    long checked = 0;
    for (std::size_t n = 1; n <= opt.max_n; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j) {
                std::vector<Polynomial> oracle = struct_consts_oracle(i, j, n);
                for (std::size_t k = 0; k <= n; ++k) {
                    if (struct_const_closed(i, j, k, n) != oracle[k]) {
                        std::ostringstream msg;
                        msg << "mismatch at n=" << n << " (i,j,k)=(" << i << ',' << j
                            << ',' << k << ')';
                        return {false, msg.str()};
                    }
                    ++checked;
                }
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream msg;
    msg << checked << " entries compared, n <= " << opt.max_n;
    if (secs >= 60.0) {
        msg << "; exceeded the 60 s budget (" << std::fixed << std::setprecision(1) << secs
            << " s)";
        return {false, msg.str()};
    }
    return {true, msg.str()};
}

Outcome criterion_expansion_identity(const AcceptanceOptions& opt) {
    long checked = 0;
    for (std::size_t n = 1; n <= opt.max_n; ++n) {
        StructureTable table = StructureTable::build(n);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j) {
                ExpansionVerdict v = verify_expansion(i, j, table);
                if (!v) {
                    std::ostringstream msg;
                    msg << "p_" << i << " * p_" << j << " expansion fails at x_"
                        << *v.failing_point << " for n=" << n;
                    return {false, msg.str()};
                }
                ++checked;
            }
        }
    }
    std::ostringstream msg;
    msg << checked << " products expanded and re-localized exactly, n <= " << opt.max_n;
    return {true, msg.str()};
}

Outcome criterion_named_values(const AcceptanceOptions& opt) {
    {
        const std::size_t n = 2;
        Polynomial expect = LinearForm::difference(n + 1, 0, 1).to_polynomial();
        if (struct_const_closed(1, 1, 1, n) != expect)
            return {false, "c_11^1 on P^2 is not t0 - t1"};
        if (struct_const_closed(1, 1, 2, n) != Polynomial::constant(n + 1, Rational(1)))
            return {false, "c_11^2 on P^2 is not 1"};
    }
    {
        const std::size_t n = 4;
        Polynomial expect(n + 1);
        expect += Polynomial::variable(n + 1, 0);
        expect += Polynomial::variable(n + 1, 1);
        expect -= Polynomial::variable(n + 1, 2);
        expect -= Polynomial::variable(n + 1, 3);
        Polynomial c = struct_const_closed(2, 2, 3, n);
        if (c != expect) return {false, "c_22^3 on P^4 is not t0 + t1 - t2 - t3"};

        Polynomial alpha_expect(n);
        alpha_expect += Polynomial::variable(n, 0);
        alpha_expect += Rational(2) * Polynomial::variable(n, 1);
        alpha_expect += Polynomial::variable(n, 2);
        auto alpha = to_alpha_basis(c);
        if (!alpha || *alpha != alpha_expect)
            return {false, "alpha form of c_22^3 on P^4 is not a0 + 2*a1 + a2"};
        if (struct_const_closed(2, 2, 4, n) != Polynomial::constant(n + 1, Rational(1)))
            return {false, "c_22^4 on P^4 is not 1"};
    }
    long checked = 4;
    for (std::size_t n = 2; n <= opt.max_n; ++n) {
        for (std::size_t j = 1; j < n; ++j) {
            if (struct_const_closed(1, j, j, n) !=
                LinearForm::difference(n + 1, 0, j).to_polynomial()) {
                std::ostringstream msg;
                msg << "c_1" << j << "^" << j << " on P^" << n << " is not t0 - t" << j;
                return {false, msg.str()};
            }
            if (struct_const_closed(1, j, j + 1, n) !=
                Polynomial::constant(n + 1, Rational(1))) {
                std::ostringstream msg;
                msg << "c_1" << j << "^" << j + 1 << " on P^" << n << " is not 1";
                return {false, msg.str()};
            }
            checked += 2;
        }
    }
    std::ostringstream msg;
    msg << checked << " pinned values matched";
    return {true, msg.str()};
}

Outcome criterion_positivity(const AcceptanceOptions& opt) {
    long checked = 0;
    for (std::size_t n = 1; n <= opt.max_n; ++n) {
        StructureTable table = StructureTable::build(n);
        for (const auto& item : table.items()) {
            PositivityCertificate cert;
            try {
                cert = positivity_certificate(item.value);
            } catch (const std::domain_error&) {
                std::ostringstream msg;
                msg << "c_" << item.i << item.j << "^" << item.k << " on P^" << n
                    << " is not translation invariant";
                return {false, msg.str()};
            }
            if (!cert.nonnegative) {
                std::ostringstream msg;
                msg << "c_" << item.i << item.j << "^" << item.k << " on P^" << n
                    << " has a negative alpha coefficient: "
                    << cert.alpha_form.to_string("a");
                return {false, msg.str()};
            }
            ++checked;
        }
    }
    std::ostringstream msg;
    msg << checked << " structure constants certified nonnegative in alpha coordinates";
    return {true, msg.str()};
}

Outcome criterion_kawasaki(const AcceptanceOptions& opt) {
    const auto start = std::chrono::steady_clock::now();

    const WeightVector named({1, 2, 3});
    const long expect[3] = {1, 6, 6};
    for (std::size_t i = 0; i < 3; ++i) {
        if (kawasaki_constant(i, named) != expect[i]) {
            std::ostringstream msg;
            msg << "kappa_" << i << "(1,2,3) != " << expect[i];
            return {false, msg.str()};
        }
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        const WeightVector unit = WeightVector::ones(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            if (kawasaki_constant(i, unit) != 1)
                return {false, "kappa of the unit weight vector is not 1"};
    }

    Rng rng(opt.seed);
    for (int trial = 0; trial < opt.kappa_trials; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        const WeightVector lambda = random_weights(rng, n + 1, 30);
        for (std::size_t i = 1; i <= n; ++i) {
            const Integer kappa = kawasaki_constant(i, lambda);
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = j + 1; k <= n; ++k) {
                    if (kappa % lcm(Integer(lambda[j]), Integer(lambda[k])) != 0) {
                        std::ostringstream msg;
                        msg << "lcm(lambda_" << j << ", lambda_" << k
                            << ") does not divide kappa_" << i << " for lambda="
                            << lambda.to_string();
                        return {false, msg.str()};
                    }
                }
            }
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream msg;
    msg << "named values plus pairwise-lcm divisibility over " << opt.kappa_trials
        << " random weight vectors";
    if (secs >= 30.0) {
        msg << "; exceeded the 30 s budget";
        return {false, msg.str()};
    }
    return {true, msg.str()};
}

Outcome criterion_weighted_classes(const AcceptanceOptions& opt) {
    std::vector<WeightVector> sample;
    for (std::size_t n = 1; n <= opt.weighted_class_max_n; ++n) {
        std::vector<long> v(n + 1, 1);
        do {
            sample.emplace_back(v);
        } while (next_vector(v, 4));
    }
    Rng rng(opt.seed + 1);
    for (int extra = 0; extra < 300; ++extra) {
        const std::size_t n =
            static_cast<std::size_t>(rng.uniform(1, static_cast<int>(opt.weighted_class_max_n)));
        sample.push_back(random_weights(rng, n + 1, 10));
    }

    long instances = 0;
    long integrality_failures = 0;
    long other_failures = 0;
    std::string first_integrality, first_other;

    for (const WeightVector& lambda : sample) {
        const std::size_t n = lambda.n();
        const GkmGraph graph(lambda, WeightVector::ones(n + 1));
        for (std::size_t i = 0; i <= n; ++i) {
            ++instances;
            LocalizedClass cls = LocalizedClass::zero(n);
            try {
                cls = weighted_canonical_class(i, lambda);
            } catch (const InvariantViolation&) {
                ++integrality_failures;
                if (first_integrality.empty()) {
                    std::ostringstream msg;
                    LocalizedClass raw = weighted_canonical_class_rational(i, lambda);
                    std::size_t bad = 0;
                    for (std::size_t k = 0; k <= n; ++k)
                        if (!raw[k].is_integral()) { bad = k; break; }
                    msg << "lambda=" << lambda.to_string() << " i=" << i
                        << " (part at x_" << bad << " is " << raw[bad].to_string() << ')';
                    first_integrality = msg.str();
                }
                continue;
            }

            const Integer kappa = kawasaki_constant(i, lambda);
            std::string problem;

            AxiomVerdict axioms = verify_canonical_axioms(cls, i, graph);
            Integer weight_product(1);
            for (std::size_t j = 0; j < i; ++j)
                weight_product *= lcm(Integer(lambda[j]), Integer(lambda[i]));
            if (!axioms.all())
                problem = "canonical-class axioms fail";
            else if (kappa % weight_product != 0 ||
                     *axioms.multiplier != kappa / weight_product)
                problem = "axiom multiplier differs from kappa / prod lcm(lambda_j, lambda_i)";

            if (problem.empty() && !is_gkm_member(cls, graph, Ring::integers))
                problem = "integer-mode membership fails";

            if (problem.empty()) {
                const LocalizedClass schubert = schubert_class(i, n);
                for (std::size_t k = 0; k <= n && problem.empty(); ++k)
                    if (scale_vars(cls[k], lambda) != Rational(kappa) * schubert[k])
                        problem = "pullback t -> lambda*t is not kappa * p_i";
            }

            if (!problem.empty()) {
                ++other_failures;
                if (first_other.empty()) {
                    std::ostringstream msg;
                    msg << "lambda=" << lambda.to_string() << " i=" << i << ": " << problem;
                    first_other = msg.str();
                }
            }
        }
    }

    std::ostringstream msg;
    msg << instances << " (lambda, i) instances over " << sample.size()
        << " weight vectors";
    if (integrality_failures == 0 && other_failures == 0) return {true, msg.str()};
    if (integrality_failures > 0)
        msg << "; " << integrality_failures
            << " kappa-scaled classes are not integral, first: " << first_integrality;
    if (other_failures > 0)
        msg << "; " << other_failures << " other failures, first: " << first_other;
    return {false, msg.str()};
}

Outcome criterion_weighted_struct_consts(const AcceptanceOptions& opt) {
    std::vector<WeightVector> sample;
    for (std::size_t n = 1; n <= std::min<std::size_t>(2, opt.weighted_struct_max_n); ++n) {
        std::vector<long> v(n + 1, 1);
        do {
            sample.emplace_back(v);
        } while (next_vector(v, 6));
    }
    for (std::size_t n = 3; n <= opt.weighted_struct_max_n; ++n) {
        std::vector<long> v(n + 1, 1);
        do {
            sample.emplace_back(v);
        } while (next_vector(v, 2));
    }
    Rng rng(opt.seed + 2);
    for (int extra = 0; extra < 150; ++extra) {
        const std::size_t lo = std::min<std::size_t>(3, opt.weighted_struct_max_n);
        const std::size_t n = static_cast<std::size_t>(
            rng.uniform(static_cast<int>(lo), static_cast<int>(opt.weighted_struct_max_n)));
        sample.push_back(random_weights(rng, n + 1, 6));
    }

    long rows = 0;
    for (const WeightVector& lambda : sample) {
        const std::size_t n = lambda.n();
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j) {
                try {
                    weighted_struct_row(i, j, lambda, n);
                } catch (const InvariantViolation& e) {
                    std::ostringstream msg;
                    msg << "lambda=" << lambda.to_string() << " (i,j)=(" << i << ',' << j
                        << "): " << e.what();
                    return {false, msg.str()};
                }
                ++rows;
            }
        }
    }
    std::ostringstream msg;
    msg << rows << " rows verified in both coordinate systems over " << sample.size()
        << " weight vectors";
    return {true, msg.str()};
}

Outcome criterion_operator_properties(const AcceptanceOptions& opt) {
    Rng rng(opt.seed + 3);

    for (int trial = 0; trial < opt.property_trials; ++trial) {
        const std::size_t nv = static_cast<std::size_t>(rng.uniform(2, 6));
        const std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nv) - 2));
        Polynomial p = random_polynomial(rng, nv, 5, 8);
        if (!divided_difference(divided_difference(p, j), j).is_zero())
            return {false, "divided difference is not square-zero"};
        if (swap_vars(swap_vars(p, j), j) != p)
            return {false, "variable swap is not an involution"};
        Polynomial q = random_polynomial(rng, nv, 5, 8);
        Polynomial lhs = divided_difference(p * q, j);
        Polynomial rhs = divided_difference(p, j) * q + swap_vars(p, j) * divided_difference(q, j);
        if (lhs != rhs) return {false, "twisted Leibniz rule fails"};
    }

    for (int trial = 0; trial < opt.property_trials; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const GkmGraph graph = GkmGraph::unit(n);
        LocalizedClass a = LocalizedClass::zero(n);
        LocalizedClass b = LocalizedClass::zero(n);
        for (std::size_t m = 0; m <= n; ++m) {
            a += random_polynomial(rng, n + 1, 2, 3) * schubert_class(m, n);
            b += random_polynomial(rng, n + 1, 2, 3) * schubert_class(m, n);
        }
        if (!is_gkm_member(a * b, graph, Ring::integers))
            return {false, "membership is not closed under products"};
        if (!is_gkm_member(a + b, graph, Ring::integers))
            return {false, "membership is not closed under sums"};
    }

    std::ostringstream msg;
    msg << opt.property_trials << " trials per property";
    return {true, msg.str()};
}

Outcome criterion_schubert_lemma(const AcceptanceOptions& opt) {
    long checked = 0;
    for (std::size_t n = 0; n <= opt.schubert_max_n; ++n) {
        const GkmGraph graph = GkmGraph::unit(n);
        for (std::size_t i = 0; i <= n; ++i) {
            const LocalizedClass p = schubert_class(i, n);
            if (!p.is_homogeneous(static_cast<int>(i))) {
                std::ostringstream msg;
                msg << "schubert class i=" << i << ", n=" << n << " is not homogeneous";
                return {false, msg.str()};
            }
            for (std::size_t k = 0; k < i; ++k) {
                if (!p[k].is_zero()) {
                    std::ostringstream msg;
                    msg << "schubert class i=" << i << ", n=" << n
                        << " does not vanish at x_" << k;
                    return {false, msg.str()};
                }
            }
            if (!is_gkm_member(p, graph, Ring::integers)) {
                std::ostringstream msg;
                msg << "schubert class i=" << i << ", n=" << n
                    << " fails integer membership";
                return {false, msg.str()};
            }
            ++checked;
        }
    }
    std::ostringstream msg;
    msg << checked << " classes checked, n <= " << opt.schubert_max_n;
    return {true, msg.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream& log) {
    struct Entry {
        const char* name;
        Outcome (*run)(const AcceptanceOptions&);
    };
    const Entry entries[] = {
        {"oracle equivalence of closed form and localization solve",
         criterion_oracle_equivalence},
        {"expansion identity p_i p_j = sum c_ij^k p_k", criterion_expansion_identity},
        {"named structure constants and degree-one products", criterion_named_values},
        {"positivity in simple-root coordinates", criterion_positivity},
        {"Kawasaki constants and lcm divisibility", criterion_kawasaki},
        {"weighted canonical classes", criterion_weighted_classes},
        {"weighted structure constants in both coordinate systems",
         criterion_weighted_struct_consts},
        {"operator and closure properties", criterion_operator_properties},
        {"Schubert classes satisfy the membership conditions", criterion_schubert_lemma},
    };

    std::vector<CriterionResult> results;
    int index = 0;
    for (const Entry& entry : entries) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = entry.run(options);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        CriterionResult r;
        r.index = index;
        r.name = entry.name;
        r.passed = outcome.passed;
        r.detail = outcome.detail;
        r.seconds = secs;
        log << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << r.name;
        if (!r.detail.empty()) log << ": " << r.detail;
        if (options.show_timings)
            log << "  [" << std::fixed << std::setprecision(1) << secs << "s]";
        log << '\n' << std::flush;
        results.push_back(std::move(r));
    }

    int failed = 0;
    for (const CriterionResult& r : results)
        if (!r.passed) ++failed;
    log << "summary: " << (results.size() - static_cast<std::size_t>(failed)) << '/'
        << results.size() << " criteria passed\n";
    return results;
}

}  // namespace eqcoh
