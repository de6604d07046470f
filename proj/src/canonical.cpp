#include "eqcoh/canonical.hpp"

#include <sstream>
#include <stdexcept>

#include "eqcoh/errors.hpp"

namespace eqcoh {

LocalizedClass schubert_class(std::size_t i, std::size_t n) {
    if (i > n) throw std::out_of_range("schubert_class: require 0 <= i <= n");
    std::vector<Polynomial> parts;
    parts.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial p(n + 1);
        if (k >= i) {
            p = Polynomial::constant(n + 1, Rational(1));
            for (std::size_t j = 0; j < i; ++j)
                p *= LinearForm::difference(n + 1, j, k).to_polynomial();
        }
        parts.push_back(std::move(p));
    }
    return LocalizedClass(std::move(parts));
}

Integer kawasaki_constant(std::size_t i, const WeightVector& lambda) {
    const std::size_t points = lambda.size();
    if (i >= points)
        throw std::out_of_range("kawasaki_constant: require 0 <= i <= n");

    // Walk all (i+1)-element subsets of {0, ..., n} in lexicographic order.
    std::vector<std::size_t> subset(i + 1);
    for (std::size_t m = 0; m <= i; ++m) subset[m] = m;

    Integer acc(1);
    while (true) {
        Integer prod(1), g(0);
        for (std::size_t idx : subset) {
            prod *= Integer(lambda[idx]);
            g = gcd(g, Integer(lambda[idx]));
        }
        acc = lcm(acc, prod / g);

        std::size_t m = i + 1;
        while (m > 0 && subset[m - 1] == points - (i + 1) + (m - 1)) --m;
        if (m == 0) break;
        ++subset[m - 1];
        for (std::size_t v = m; v <= i; ++v) subset[v] = subset[v - 1] + 1;
    }
    return acc;
}

LocalizedClass weighted_canonical_class_rational(std::size_t i, const WeightVector& lambda) {
    const std::size_t n = lambda.n();
    if (i > n)
        throw std::out_of_range("weighted_canonical_class: require 0 <= i <= n");
    const Rational kappa(kawasaki_constant(i, lambda));

    std::vector<Polynomial> parts;
    parts.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial p(n + 1);
        if (k >= i) {
            p = Polynomial::constant(n + 1, kappa);
            for (std::size_t j = 0; j < i; ++j) {
                Polynomial factor(n + 1);
                factor.add_term(
                    [&] { Monomial m(n + 1, 0); m[j] = 1; return m; }(),
                    make_rational(1, lambda[j]));
                factor.add_term(
                    [&] { Monomial m(n + 1, 0); m[k] = 1; return m; }(),
                    make_rational(-1, lambda[k]));
                p *= factor;
            }
        }
        parts.push_back(std::move(p));
    }
    return LocalizedClass(std::move(parts));
}

LocalizedClass weighted_canonical_class(std::size_t i, const WeightVector& lambda) {
    LocalizedClass c = weighted_canonical_class_rational(i, lambda);
    for (std::size_t k = 0; k <= c.n(); ++k) {
        if (c[k].is_integral()) continue;
        std::ostringstream msg;
        msg << "weighted_canonical_class: kappa-scaled class for lambda="
            << lambda.to_string() << ", i=" << i
            << " has a non-integral coefficient at fixed point x_" << k << ": "
            << c[k].to_string();
        throw InvariantViolation(msg.str());
    }
    return c;
}

AxiomVerdict verify_canonical_axioms(const LocalizedClass& c, std::size_t i,
                                     const GkmGraph& g) {
    if (c.num_points() != g.num_points())
        throw std::invalid_argument("verify_canonical_axioms: dimension mismatch");
    if (i >= c.num_points())
        throw std::out_of_range("verify_canonical_axioms: degree index out of range");

    AxiomVerdict verdict;
    verdict.homogeneous = c.is_homogeneous(static_cast<int>(i));

    verdict.vanishes_below = true;
    for (std::size_t j = 0; j < i; ++j)
        if (!c[j].is_zero()) verdict.vanishes_below = false;

    // parts[i] must be a nonzero integer multiple of the product of the
    // weights on the edges arriving from x_0, ..., x_{i-1}.
    Polynomial rest = c[i];
    bool divisible = !rest.is_zero();
    for (std::size_t j = 0; j < i && divisible; ++j) {
        auto q = exact_div_linear(rest, g.weight(j, i), Ring::rationals);
        if (!q) {
            divisible = false;
            break;
        }
        rest = std::move(*q);
    }
    if (divisible && rest.is_constant() && !rest.is_zero()) {
        Rational c0 = rest.constant_term();
        if (is_integer(c0)) {
            verdict.top_is_weight_multiple = true;
            verdict.multiplier = c0.get_num();
        }
    }
    return verdict;
}

}  // namespace eqcoh
