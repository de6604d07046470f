#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcoh/polynomial.hpp"
#include "eqcoh/weights.hpp"

namespace eqcoh {

// Weight of the one-dimensional orbit joining the fixed points x_i and x_j
// (i < j): (m/lambda_i) mu_i t_i - (m/lambda_j) mu_j t_j with
// m = lcm(lambda_i, lambda_j).
LinearForm edge_weight(std::size_t i, std::size_t j, const WeightVector& lambda,
                       const ActionVector& mu);

// Complete graph on the fixed points x_0, ..., x_n of a weighted projective
// space, with the linear-form weight attached to every edge.
class GkmGraph {
public:
    GkmGraph(WeightVector lambda, ActionVector mu);
    static GkmGraph unit(std::size_t n);  // lambda = mu = (1,...,1)

    std::size_t n() const { return lambda_.n(); }
    std::size_t num_points() const { return lambda_.size(); }
    const WeightVector& lambda() const { return lambda_; }
    const ActionVector& mu() const { return mu_; }

    // Requires i < j <= n.
    const LinearForm& weight(std::size_t i, std::size_t j) const;

private:
    WeightVector lambda_;
    ActionVector mu_;
    std::vector<LinearForm> weights_;  // row-major upper triangle
};

// Tuple of n+1 polynomials (p(x_0), ..., p(x_n)), the restriction of an
// equivariant class to the fixed points.  All parts live in n+1 variables.
class LocalizedClass {
public:
    explicit LocalizedClass(std::vector<Polynomial> parts);
    static LocalizedClass zero(std::size_t n);
    static LocalizedClass one(std::size_t n);

    std::size_t n() const { return parts_.size() - 1; }
    std::size_t num_points() const { return parts_.size(); }
    const Polynomial& operator[](std::size_t k) const { return parts_[k]; }
    const std::vector<Polynomial>& parts() const { return parts_; }

    bool is_zero() const;
    bool is_integral() const;
    // Every nonzero part homogeneous of degree d.
    bool is_homogeneous(int d) const;

    LocalizedClass& operator+=(const LocalizedClass& b);
    LocalizedClass& operator-=(const LocalizedClass& b);
    LocalizedClass& operator*=(const LocalizedClass& b);
    LocalizedClass& operator*=(const Polynomial& p);  // diagonal module action
    LocalizedClass& operator*=(const Rational& c);

    friend LocalizedClass operator+(LocalizedClass a, const LocalizedClass& b) { return a += b; }
    friend LocalizedClass operator-(LocalizedClass a, const LocalizedClass& b) { return a -= b; }
    friend LocalizedClass operator*(LocalizedClass a, const LocalizedClass& b) { return a *= b; }
    friend LocalizedClass operator*(LocalizedClass a, const Polynomial& p) { return a *= p; }
    friend LocalizedClass operator*(const Polynomial& p, LocalizedClass a) { return a *= p; }
    friend LocalizedClass operator*(LocalizedClass a, const Rational& c) { return a *= c; }
    friend LocalizedClass operator*(const Rational& c, LocalizedClass a) { return a *= c; }

    friend bool operator==(const LocalizedClass&, const LocalizedClass&) = default;

private:
    std::vector<Polynomial> parts_;
};

struct EdgeWitness {
    std::size_t i, j;
    Polynomial quotient;  // (parts[i] - parts[j]) / weight(i, j)
};

struct MembershipVerdict {
    bool member = false;
    std::string reason;  // empty when member
    std::optional<std::pair<std::size_t, std::size_t>> failing_edge;
    std::vector<EdgeWitness> witnesses;  // filled on success

    explicit operator bool() const { return member; }
};

// Tests whether parts[i] - parts[j] is divisible by the edge weight for
// every pair i < j, in the chosen coefficient ring.  In integer mode every
// part must itself be integral.
MembershipVerdict is_gkm_member(const LocalizedClass& c, const GkmGraph& g, Ring ring);

}  // namespace eqcoh
