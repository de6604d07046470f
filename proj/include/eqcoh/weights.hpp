#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace eqcoh {

// Vector of positive integers (w_0, ..., w_n).  Used both for the weights
// defining a weighted projective space and for the exponents of the torus
// action; a single entry (n = 0) is allowed and describes a point.
class WeightVector {
public:
    explicit WeightVector(std::vector<long> entries);
    static WeightVector ones(std::size_t count);

    std::size_t size() const { return entries_.size(); }
    std::size_t n() const { return entries_.size() - 1; }
    long operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<long>& entries() const { return entries_; }

    bool is_unit() const;  // every entry equal to 1
    std::string to_string() const;  // "(1,2,3)"

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<long> entries_;
};

using ActionVector = WeightVector;

}  // namespace eqcoh
