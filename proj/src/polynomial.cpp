#include "eqcoh/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "eqcoh/errors.hpp"

namespace eqcoh {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars)
        throw std::out_of_range("Polynomial::variable: index out of range");
    Monomial m(num_vars, 0);
    m[index] = 1;
    return monomial(num_vars, m, Rational(1));
}

Polynomial Polynomial::monomial(std::size_t num_vars, Monomial exps, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(exps, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && degree() == 0;
}

bool Polynomial::is_integral() const {
    for (const auto& [mono, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    const Monomial& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [mono, c] : terms_)
        if (std::accumulate(mono.begin(), mono.end(), 0) != d) return false;
    return true;
}

Rational Polynomial::coeff(const Monomial& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coeff(Monomial(num_vars_, 0));
}

void Polynomial::add_term(const Monomial& exps, const Rational& c) {
    if (exps.size() != num_vars_)
        throw std::invalid_argument("Polynomial::add_term: exponent vector has wrong length");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Polynomial::add_term: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& q) const {
    if (num_vars_ != q.num_vars_)
        throw std::invalid_argument("Polynomial: operands have different numbers of variables");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_vars(q);
    for (const auto& [mono, c] : q.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_vars(q);
    for (const auto& [mono, c] : q.terms_) add_term(mono, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r(a.num_vars_);
    Monomial m(a.num_vars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t v = 0; v < a.num_vars_; ++v) m[v] = ma[v] + mb[v];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    *this = *this * q;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= num_vars_)
        throw std::out_of_range("Polynomial::derivative: variable index out of range");
    Polynomial r(num_vars_);
    for (const auto& [mono, c] : terms_) {
        if (mono[var] == 0) continue;
        Monomial m = mono;
        m[var] -= 1;
        r.add_term(m, c * Rational(mono[var]));
    }
    return r;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& mono,
                     std::string_view var_prefix, bool coeff_is_one) {
    bool first = coeff_is_one;
    for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << var_prefix << v;
        if (mono[v] > 1) out << '^' << mono[v];
    }
}

}  // namespace

std::string Polynomial::to_string(std::string_view var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant = std::accumulate(mono.begin(), mono.end(), 0) == 0;
        if (constant) {
            out << a.get_str();
        } else if (a == 1) {
            append_monomial(out, mono, var_prefix, true);
        } else {
            out << a.get_str();
            append_monomial(out, mono, var_prefix, false);
        }
    }
    return out.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(p.num_vars(), Rational(1));
    for (unsigned m = 0; m < e; ++m) r *= p;
    return r;
}

Polynomial swap_vars(const Polynomial& p, std::size_t j) {
    if (j + 1 >= p.num_vars())
        throw std::out_of_range("swap_vars: index out of range");
    Polynomial r(p.num_vars());
    for (const auto& [mono, c] : p.terms()) {
        Monomial m = mono;
        std::swap(m[j], m[j + 1]);
        r.add_term(m, c);
    }
    return r;
}

Polynomial divided_difference(const Polynomial& p, std::size_t j) {
    if (j + 1 >= p.num_vars())
        throw std::out_of_range("divided_difference: index out of range");
    Polynomial diff = swap_vars(p, j) - p;
    if (diff.is_zero()) return Polynomial(p.num_vars());
    auto q = exact_div_linear(diff, LinearForm::difference(p.num_vars(), j, j + 1),
                              Ring::rationals);
    if (!q)
        throw InvariantViolation("divided_difference: swapped difference is not "
                                 "divisible by t_j - t_{j+1}");
    return *q;
}

LinearForm::LinearForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("LinearForm: needs at least one variable");
}

LinearForm LinearForm::difference(std::size_t num_vars, std::size_t i, std::size_t j) {
    if (i >= num_vars || j >= num_vars || i == j)
        throw std::out_of_range("LinearForm::difference: bad variable indices");
    std::vector<Integer> c(num_vars, Integer(0));
    c[i] = 1;
    c[j] = -1;
    return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
    for (const Integer& a : coeffs_)
        if (a != 0) return false;
    return true;
}

std::size_t LinearForm::leading_index() const {
    for (std::size_t v = 0; v < coeffs_.size(); ++v)
        if (coeffs_[v] != 0) return v;
    throw std::invalid_argument("LinearForm::leading_index: zero form");
}

Integer LinearForm::content() const {
    Integer g(0);
    for (const Integer& a : coeffs_)
        if (a != 0) g = gcd(g, a);
    return g;
}

LinearForm LinearForm::primitive_part() const {
    Integer g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Integer> c = coeffs_;
    for (Integer& a : c) a /= g;
    return LinearForm(std::move(c));
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(coeffs_.size());
    for (std::size_t v = 0; v < coeffs_.size(); ++v) {
        if (coeffs_[v] == 0) continue;
        Monomial m(coeffs_.size(), 0);
        m[v] = 1;
        p.add_term(m, Rational(coeffs_[v]));
    }
    return p;
}

std::string LinearForm::to_string(std::string_view var_prefix) const {
    return to_polynomial().to_string(var_prefix);
}

std::optional<Polynomial> exact_div_linear(const Polynomial& p, const LinearForm& l,
                                           Ring ring) {
    if (l.is_zero())
        throw std::invalid_argument("exact_div_linear: division by the zero form");
    if (p.num_vars() != l.num_vars())
        throw std::invalid_argument("exact_div_linear: operands have different "
                                    "numbers of variables");
    const std::size_t v = l.leading_index();
    const Rational lead(l[v]);

    Polynomial quotient(p.num_vars());
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const auto& [mono, c] = *rem.terms().begin();
        if (mono[v] == 0) return std::nullopt;  // remainder can no longer vanish
        Monomial m = mono;
        m[v] -= 1;
        Rational q = c / lead;
        quotient.add_term(m, q);
        for (std::size_t w = 0; w < l.num_vars(); ++w) {
            if (l[w] == 0) continue;
            Monomial mw = m;
            mw[w] += 1;
            rem.add_term(mw, -q * Rational(l[w]));
        }
    }
    if (ring == Ring::integers && !quotient.is_integral()) return std::nullopt;
    return quotient;
}

Polynomial scale_vars(const Polynomial& p, const WeightVector& lambda) {
    std::vector<Rational> s;
    s.reserve(lambda.size());
    for (std::size_t v = 0; v < lambda.size(); ++v) s.emplace_back(lambda[v]);
    return scale_vars(p, s);
}

Polynomial scale_vars(const Polynomial& p, const std::vector<Rational>& s) {
    if (s.size() != p.num_vars())
        throw std::invalid_argument("scale_vars: scale vector has wrong length");
    Polynomial r(p.num_vars());
    for (const auto& [mono, c] : p.terms()) {
        Rational factor(1);
        for (std::size_t v = 0; v < s.size(); ++v)
            if (mono[v] > 0) factor *= qpow(s[v], static_cast<unsigned long>(mono[v]));
        r.add_term(mono, c * factor);
    }
    return r;
}

bool is_translation_invariant(const Polynomial& p) {
    Polynomial sum(p.num_vars());
    for (std::size_t v = 0; v < p.num_vars(); ++v) sum += p.derivative(v);
    return sum.is_zero();
}

std::optional<Polynomial> to_alpha_basis(const Polynomial& p) {
    if (!is_translation_invariant(p)) return std::nullopt;
    const std::size_t nt = p.num_vars();
    const std::size_t na = nt - 1;

    // t_i -> a_i + a_{i+1} + ... + a_{na-1}, t_{nt-1} -> 0.
    std::vector<Polynomial> subs;
    subs.reserve(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        Polynomial s(na);
        for (std::size_t m = i; m < na; ++m) s += Polynomial::variable(na, m);
        subs.push_back(std::move(s));
    }

    Polynomial result(na);
    for (const auto& [mono, c] : p.terms()) {
        Polynomial term = Polynomial::constant(na, c);
        bool dead = false;
        for (std::size_t v = 0; v < nt && !dead; ++v) {
            if (mono[v] == 0) continue;
            if (subs[v].is_zero()) {
                dead = true;
                break;
            }
            term *= pow(subs[v], static_cast<unsigned>(mono[v]));
        }
        if (!dead) result += term;
    }
    return result;
}

Polynomial from_alpha_basis(const Polynomial& q) {
    const std::size_t na = q.num_vars();
    const std::size_t nt = na + 1;
    std::vector<Polynomial> subs;
    subs.reserve(na);
    for (std::size_t i = 0; i < na; ++i)
        subs.push_back(LinearForm::difference(nt, i, i + 1).to_polynomial());

    Polynomial result(nt);
    for (const auto& [mono, c] : q.terms()) {
        Polynomial term = Polynomial::constant(nt, c);
        for (std::size_t v = 0; v < na; ++v)
            if (mono[v] > 0) term *= pow(subs[v], static_cast<unsigned>(mono[v]));
        result += term;
    }
    return result;
}

bool has_nonnegative_coefficients(const Polynomial& p) {
    for (const auto& [mono, c] : p.terms())
        if (c < 0) return false;
    return true;
}

}  // namespace eqcoh
