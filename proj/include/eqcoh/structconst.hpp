#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqcoh/canonical.hpp"
#include "eqcoh/gkm.hpp"
#include "eqcoh/polynomial.hpp"

namespace eqcoh {

// Coefficient of p_k in the expansion of p_i * p_j over P^n via the closed
// divided-difference formula: p_i(x_j) hit by d_j, d_{j+1}, ..., d_{k-1} in
// that order.  Zero outside the band j <= k <= min(i+j, n) (after swapping
// so that i <= j).
Polynomial struct_const_closed(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

// Independent route: solves the triangular system obtained by localizing
// p_i * p_j at x_0, x_1, ..., x_n in order,
//   c^k = [p_i(x_k) p_j(x_k) - sum_{m<k} c^m p_m(x_k)] / p_k(x_k),
// every division exact.  Never touches divided differences.  Returns the
// full coefficient vector indexed by k = 0..n.
std::vector<Polynomial> struct_consts_oracle(std::size_t i, std::size_t j, std::size_t n);

// All structure constants of P^n, stored for i <= j only; lookups with i > j
// swap transparently and out-of-band lookups return zero.
class StructureTable {
public:
    static StructureTable build(std::size_t n);  // closed-form route

    std::size_t n() const { return n_; }
    Polynomial entry(std::size_t i, std::size_t j, std::size_t k) const;

    struct Item {
        std::size_t i, j, k;
        Polynomial value;
    };
    const std::vector<Item>& items() const { return items_; }

private:
    explicit StructureTable(std::size_t n) : n_(n) {}

    std::size_t n_;
    std::vector<Item> items_;  // i <= j, j <= k <= min(i+j, n), sorted by (i, j, k)
};

struct ExpansionVerdict {
    bool ok = false;
    std::optional<std::size_t> failing_point;

    explicit operator bool() const { return ok; }
};

// Checks sum_k table(i,j,k) * p_k == p_i * p_j at every fixed point.
ExpansionVerdict verify_expansion(std::size_t i, std::size_t j, const StructureTable& table);

struct PositivityCertificate {
    Polynomial alpha_form;  // input rewritten in a_m = t_m - t_{m+1}
    bool nonnegative = false;
};

// Rewrites a structure constant in the simple-root coordinates and reports
// whether every coefficient is >= 0.  Throws std::domain_error if the input
// is not translation invariant (no alpha representation).
PositivityCertificate positivity_certificate(const Polynomial& c);

struct WeightedStructConst {
    Polynomial image_form;   // (kappa_i kappa_j / kappa_k) * c_ij^k
    Polynomial native_form;  // image form with t_m -> t_m / lambda_m
    bool image_integral = false;
    bool native_integral = false;
};

struct WeightedStructRow {
    std::size_t i, j;
    std::vector<Polynomial> image;   // indexed by k = 0..n
    std::vector<Polynomial> native;
};

// Full row of weighted structure constants, verified exactly against both
// expansion identities: the image-coordinate identity over the scaled
// Schubert classes kappa_m * p_m, and the native identity over the scaled
// classes of the weighted space.  Throws InvariantViolation if either check
// fails.
WeightedStructRow weighted_struct_row(std::size_t i, std::size_t j,
                                      const WeightVector& lambda, std::size_t n);

WeightedStructConst weighted_struct_const(std::size_t i, std::size_t j, std::size_t k,
                                          const WeightVector& lambda, std::size_t n);

}  // namespace eqcoh
