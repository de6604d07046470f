#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqcoh/numeric.hpp"
#include "eqcoh/weights.hpp"

namespace eqcoh {

// Exponent vector of a monomial; one entry per variable t_0, ..., t_n.
using Monomial = std::vector<int>;

// Graded lexicographic order with t_0 > t_1 > ... > t_n, largest first.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial with exact rational coefficients in a
// fixed set of variables t_0, ..., t_{num_vars-1}.  Canonical form: no
// stored term has coefficient zero, terms sorted graded-lexicographically.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    Polynomial() : num_vars_(0) {}
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Rational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial monomial(std::size_t num_vars, Monomial exps, const Rational& c);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // True iff every coefficient has denominator 1.
    bool is_integral() const;

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    // Zero counts as homogeneous of every degree.
    bool is_homogeneous(int d) const;

    Rational coeff(const Monomial& exps) const;
    Rational constant_term() const;

    // Inserts c * t^exps, merging with an existing term and dropping zeros.
    void add_term(const Monomial& exps, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Formal partial derivative with respect to variable `var`.
    Polynomial derivative(std::size_t var) const;

    // Deterministic text form, e.g. "2*t0*t1 - t1*t2 + t2^2".  The prefix
    // names the variables ("t" for t0,t1,... or "a" for alpha coordinates).
    std::string to_string(std::string_view var_prefix = "t") const;

private:
    void check_same_vars(const Polynomial& q) const;

    TermMap terms_;
    std::size_t num_vars_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Exchanges t_j and t_{j+1}; requires j + 1 < num_vars.
Polynomial swap_vars(const Polynomial& p, std::size_t j);

// (swap_vars(p, j) - p) / (t_j - t_{j+1}).  The division is always exact;
// a failure is an internal invariant violation, not a user error.
Polynomial divided_difference(const Polynomial& p, std::size_t j);

// Homogeneous integer linear form a_0 t_0 + ... + a_n t_n.
class LinearForm {
public:
    explicit LinearForm(std::vector<Integer> coeffs);
    // t_i - t_j
    static LinearForm difference(std::size_t num_vars, std::size_t i, std::size_t j);

    std::size_t num_vars() const { return coeffs_.size(); }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    // Index of the first nonzero coefficient; throws on the zero form.
    std::size_t leading_index() const;
    // gcd of the nonzero coefficients; 0 for the zero form.
    Integer content() const;
    LinearForm primitive_part() const;

    Polynomial to_polynomial() const;
    std::string to_string(std::string_view var_prefix = "t") const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<Integer> coeffs_;
};

enum class Ring { integers, rationals };

// Exact division of p by the linear form l.  Over the rationals, returns q
// with p = q*l when p lies in the ideal <l>, otherwise nullopt.  Over the
// integers, additionally requires q to have integer coefficients.
std::optional<Polynomial> exact_div_linear(const Polynomial& p, const LinearForm& l,
                                           Ring ring);

// Substitutes t_i -> lambda_i * t_i; a ring homomorphism.
Polynomial scale_vars(const Polynomial& p, const WeightVector& lambda);

// Substitutes t_i -> s_i * t_i for arbitrary rational s_i.
Polynomial scale_vars(const Polynomial& p, const std::vector<Rational>& s);

// True iff p is unchanged by t_i -> t_i + c for every i (equivalently, the
// sum of all partial derivatives vanishes).
bool is_translation_invariant(const Polynomial& p);

// Rewrites a translation-invariant p in the n variables a_i = t_i - t_{i+1}
// via t_i -> a_i + ... + a_{n-1}, t_n -> 0.  Returns nullopt when p is not
// translation invariant (no alpha representation exists).
std::optional<Polynomial> to_alpha_basis(const Polynomial& p);

// Inverse substitution a_i -> t_i - t_{i+1}; output has one more variable.
Polynomial from_alpha_basis(const Polynomial& q);

bool has_nonnegative_coefficients(const Polynomial& p);

}  // namespace eqcoh
