#pragma once

#include <cstddef>
#include <optional>

#include "eqcoh/gkm.hpp"
#include "eqcoh/numeric.hpp"
#include "eqcoh/polynomial.hpp"
#include "eqcoh/weights.hpp"

namespace eqcoh {

// Degree-i Schubert class of ordinary projective space P^n:
// parts[k] = prod_{j<i} (t_j - t_k) for k >= i, zero below.
LocalizedClass schubert_class(std::size_t i, std::size_t n);

// lcm over all (i+1)-element index subsets {j_0 < ... < j_i} of
// lambda_{j_0}...lambda_{j_i} / gcd(lambda_{j_0}, ..., lambda_{j_i}).
Integer kawasaki_constant(std::size_t i, const WeightVector& lambda);

// Scaled class with parts[k] = kappa_i * prod_{j<i} (t_j/lambda_j - t_k/lambda_k)
// for k >= i, computed over the rationals.  No integrality check.
LocalizedClass weighted_canonical_class_rational(std::size_t i, const WeightVector& lambda);

// Same construction, certified integral.  Throws InvariantViolation when any
// coefficient fails to be an integer; see the caveat in the README.
LocalizedClass weighted_canonical_class(std::size_t i, const WeightVector& lambda);

struct AxiomVerdict {
    bool homogeneous = false;       // every nonzero part homogeneous of degree i
    bool vanishes_below = false;    // parts[j] = 0 for j < i
    bool top_is_weight_multiple = false;  // parts[i] = c * prod_{j<i} weight(j, i), c nonzero integer
    std::optional<Integer> multiplier;    // c, present iff the third axiom holds

    bool all() const { return homogeneous && vanishes_below && top_is_weight_multiple; }
};

// Checks the three defining properties of a degree-i canonical class against
// the edge weights of g.
AxiomVerdict verify_canonical_axioms(const LocalizedClass& c, std::size_t i,
                                     const GkmGraph& g);

}  // namespace eqcoh
