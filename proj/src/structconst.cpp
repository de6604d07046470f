#include "eqcoh/structconst.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "eqcoh/errors.hpp"

namespace eqcoh {

namespace {

void check_indices(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    if (i > n || j > n || k > n)
        throw std::out_of_range("structure constants: index exceeds n");
}

}  // namespace

Polynomial struct_const_closed(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    check_indices(i, j, k, n);
    if (i > j) std::swap(i, j);
    if (k < j || k > std::min(i + j, n)) return Polynomial(n + 1);

    Polynomial c = schubert_class(i, n)[j];  // p_i(x_j)
    for (std::size_t m = j; m < k; ++m) c = divided_difference(c, m);
    return c;
}

std::vector<Polynomial> struct_consts_oracle(std::size_t i, std::size_t j, std::size_t n) {
    check_indices(i, j, 0, n);
    if (i > j) std::swap(i, j);

    std::vector<LocalizedClass> p;
    p.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m) p.push_back(schubert_class(m, n));

    std::vector<Polynomial> row;
    row.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial numerator = p[i][k] * p[j][k];
        for (std::size_t m = 0; m < k; ++m) numerator -= row[m] * p[m][k];
        // divide by p_k(x_k) = prod_{m<k} (t_m - t_k), factor by factor
        Polynomial c = std::move(numerator);
        for (std::size_t m = 0; m < k && !c.is_zero(); ++m) {
            auto q = exact_div_linear(c, LinearForm::difference(n + 1, m, k),
                                      Ring::rationals);
            if (!q) {
                std::ostringstream msg;
                msg << "struct_consts_oracle: localization at x_" << k
                    << " is not divisible by t" << m << " - t" << k
                    << " for (i,j)=(" << i << "," << j << "), n=" << n;
                throw InvariantViolation(msg.str());
            }
            c = std::move(*q);
        }
        row.push_back(std::move(c));
    }
    return row;
}

StructureTable StructureTable::build(std::size_t n) {
    StructureTable table(n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            Polynomial c = schubert_class(i, n)[j];
            for (std::size_t k = j; k <= std::min(i + j, n); ++k) {
                if (k > j) c = divided_difference(c, k - 1);
                if (!c.is_zero()) table.items_.push_back({i, j, k, c});
            }
        }
    }
    return table;
}

Polynomial StructureTable::entry(std::size_t i, std::size_t j, std::size_t k) const {
    check_indices(i, j, k, n_);
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(items_.begin(), items_.end(), std::array<std::size_t, 3>{i, j, k},
                               [](const Item& item, const std::array<std::size_t, 3>& key) {
                                   return std::tie(item.i, item.j, item.k) <
                                          std::tie(key[0], key[1], key[2]);
                               });
    if (it != items_.end() && it->i == i && it->j == j && it->k == k) return it->value;
    return Polynomial(n_ + 1);
}

ExpansionVerdict verify_expansion(std::size_t i, std::size_t j, const StructureTable& table) {
    const std::size_t n = table.n();
    check_indices(i, j, 0, n);

    LocalizedClass lhs = schubert_class(i, n) * schubert_class(j, n);
    LocalizedClass rhs = LocalizedClass::zero(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial c = table.entry(i, j, k);
        if (!c.is_zero()) rhs += c * schubert_class(k, n);
    }

    ExpansionVerdict verdict;
    for (std::size_t m = 0; m <= n; ++m) {
        if (lhs[m] != rhs[m]) {
            verdict.failing_point = m;
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

PositivityCertificate positivity_certificate(const Polynomial& c) {
    auto alpha = to_alpha_basis(c);
    if (!alpha)
        throw std::domain_error("positivity_certificate: polynomial is not translation "
                                "invariant, no alpha representation exists");
    PositivityCertificate cert;
    cert.alpha_form = std::move(*alpha);
    cert.nonnegative = has_nonnegative_coefficients(cert.alpha_form);
    return cert;
}

WeightedStructRow weighted_struct_row(std::size_t i, std::size_t j,
                                      const WeightVector& lambda, std::size_t n) {
    check_indices(i, j, 0, n);
    if (lambda.size() != n + 1)
        throw std::invalid_argument("weighted_struct_row: lambda has wrong length");
    if (i > j) std::swap(i, j);

    std::vector<Rational> kappa;
    kappa.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        kappa.emplace_back(kawasaki_constant(m, lambda));

    std::vector<Rational> inverse_scale;
    inverse_scale.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m) inverse_scale.push_back(make_rational(1, lambda[m]));

    WeightedStructRow row{i, j, {}, {}};
    for (std::size_t k = 0; k <= n; ++k) {
        Polynomial image = struct_const_closed(i, j, k, n) * (kappa[i] * kappa[j] / kappa[k]);
        row.native.push_back(scale_vars(image, inverse_scale));
        row.image.push_back(std::move(image));
    }

    // (kappa_i p_i)(kappa_j p_j) = sum_k image^k (kappa_k p_k)
    {
        LocalizedClass lhs = (kappa[i] * schubert_class(i, n)) *
                             (kappa[j] * schubert_class(j, n));
        LocalizedClass rhs = LocalizedClass::zero(n);
        for (std::size_t k = 0; k <= n; ++k)
            if (!row.image[k].is_zero())
                rhs += row.image[k] * (kappa[k] * schubert_class(k, n));
        if (!(lhs == rhs))
            throw InvariantViolation("weighted_struct_row: image-coordinate expansion "
                                     "identity failed");
    }

    // p^w_i p^w_j = sum_k native^k p^w_k over the scaled classes themselves
    {
        std::vector<LocalizedClass> w;
        w.reserve(n + 1);
        for (std::size_t m = 0; m <= n; ++m)
            w.push_back(weighted_canonical_class_rational(m, lambda));
        LocalizedClass lhs = w[i] * w[j];
        LocalizedClass rhs = LocalizedClass::zero(n);
        for (std::size_t k = 0; k <= n; ++k)
            if (!row.native[k].is_zero()) rhs += row.native[k] * w[k];
        if (!(lhs == rhs))
            throw InvariantViolation("weighted_struct_row: native-coordinate expansion "
                                     "identity failed");
    }

    return row;
}

WeightedStructConst weighted_struct_const(std::size_t i, std::size_t j, std::size_t k,
                                          const WeightVector& lambda, std::size_t n) {
    check_indices(i, j, k, n);
    WeightedStructRow row = weighted_struct_row(i, j, lambda, n);
    WeightedStructConst result;
    result.image_form = row.image[k];
    result.native_form = row.native[k];
    result.image_integral = result.image_form.is_integral();
    result.native_integral = result.native_form.is_integral();
    return result;
}

}  // namespace eqcoh
