#include "eqcoh/gkm.hpp"

#include <sstream>
#include <stdexcept>

namespace eqcoh {

LinearForm edge_weight(std::size_t i, std::size_t j, const WeightVector& lambda,
                       const ActionVector& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("edge_weight: lambda and mu have different lengths");
    if (i >= j || j >= lambda.size())
        throw std::out_of_range("edge_weight: require 0 <= i < j <= n");
    Integer li(lambda[i]), lj(lambda[j]);
    Integer m = lcm(li, lj);
    std::vector<Integer> coeffs(lambda.size(), Integer(0));
    coeffs[i] = (m / li) * Integer(mu[i]);
    coeffs[j] = -(m / lj) * Integer(mu[j]);
    return LinearForm(std::move(coeffs));
}

namespace {

std::size_t edge_index(std::size_t i, std::size_t j, std::size_t points) {
    // upper triangle, rows i = 0..points-2
    return i * (2 * points - i - 1) / 2 + (j - i - 1);
}

}  // namespace

GkmGraph::GkmGraph(WeightVector lambda, ActionVector mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (lambda_.size() != mu_.size())
        throw std::invalid_argument("GkmGraph: lambda and mu have different lengths");
    const std::size_t points = lambda_.size();
    weights_.reserve(points * (points - 1) / 2);
    for (std::size_t i = 0; i + 1 < points; ++i)
        for (std::size_t j = i + 1; j < points; ++j)
            weights_.push_back(edge_weight(i, j, lambda_, mu_));
}

GkmGraph GkmGraph::unit(std::size_t n) {
    return GkmGraph(WeightVector::ones(n + 1), WeightVector::ones(n + 1));
}

const LinearForm& GkmGraph::weight(std::size_t i, std::size_t j) const {
    if (i >= j || j >= num_points())
        throw std::out_of_range("GkmGraph::weight: require 0 <= i < j <= n");
    return weights_[edge_index(i, j, num_points())];
}

LocalizedClass::LocalizedClass(std::vector<Polynomial> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("LocalizedClass: needs at least one part");
    for (const Polynomial& p : parts_)
        if (p.num_vars() != parts_.size())
            throw std::invalid_argument("LocalizedClass: every part must have n+1 variables");
}

LocalizedClass LocalizedClass::zero(std::size_t n) {
    return LocalizedClass(std::vector<Polynomial>(n + 1, Polynomial(n + 1)));
}

LocalizedClass LocalizedClass::one(std::size_t n) {
    return LocalizedClass(std::vector<Polynomial>(
        n + 1, Polynomial::constant(n + 1, Rational(1))));
}

bool LocalizedClass::is_zero() const {
    for (const Polynomial& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

bool LocalizedClass::is_integral() const {
    for (const Polynomial& p : parts_)
        if (!p.is_integral()) return false;
    return true;
}

bool LocalizedClass::is_homogeneous(int d) const {
    for (const Polynomial& p : parts_)
        if (!p.is_homogeneous(d)) return false;
    return true;
}

namespace {

void check_same_dim(const LocalizedClass& a, const LocalizedClass& b) {
    if (a.num_points() != b.num_points())
        throw std::invalid_argument("LocalizedClass: dimension mismatch");
}

}  // namespace

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& b) {
    check_same_dim(*this, b);
    for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] += b.parts_[k];
    return *this;
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& b) {
    check_same_dim(*this, b);
    for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] -= b.parts_[k];
    return *this;
}

LocalizedClass& LocalizedClass::operator*=(const LocalizedClass& b) {
    check_same_dim(*this, b);
    for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] *= b.parts_[k];
    return *this;
}

LocalizedClass& LocalizedClass::operator*=(const Polynomial& p) {
    for (Polynomial& part : parts_) part *= p;
    return *this;
}

LocalizedClass& LocalizedClass::operator*=(const Rational& c) {
    for (Polynomial& part : parts_) part *= c;
    return *this;
}

MembershipVerdict is_gkm_member(const LocalizedClass& c, const GkmGraph& g, Ring ring) {
    if (c.num_points() != g.num_points())
        throw std::invalid_argument("is_gkm_member: class and graph dimensions differ");

    MembershipVerdict verdict;
    if (ring == Ring::integers) {
        for (std::size_t k = 0; k < c.num_points(); ++k) {
            if (!c[k].is_integral()) {
                std::ostringstream msg;
                msg << "non-integral part at fixed point x_" << k;
                verdict.reason = msg.str();
                return verdict;
            }
        }
    }

    for (std::size_t i = 0; i + 1 < c.num_points(); ++i) {
        for (std::size_t j = i + 1; j < c.num_points(); ++j) {
            Polynomial diff = c[i] - c[j];
            auto q = exact_div_linear(diff, g.weight(i, j), ring);
            if (!q) {
                std::ostringstream msg;
                msg << "difference p(x_" << i << ") - p(x_" << j
                    << ") is not divisible by " << g.weight(i, j).to_string();
                verdict.reason = msg.str();
                verdict.failing_edge = {i, j};
                return verdict;
            }
            verdict.witnesses.push_back({i, j, std::move(*q)});
        }
    }
    verdict.member = true;
    return verdict;
}

}  // namespace eqcoh
