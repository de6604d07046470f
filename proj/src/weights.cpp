#include "eqcoh/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace eqcoh {

WeightVector::WeightVector(std::vector<long> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("WeightVector: needs at least one entry");
    for (long w : entries_)
        if (w < 1) throw std::invalid_argument("WeightVector: entries must be positive");
}

WeightVector WeightVector::ones(std::size_t count) {
    return WeightVector(std::vector<long>(count, 1));
}

bool WeightVector::is_unit() const {
    for (long w : entries_)
        if (w != 1) return false;
    return true;
}

std::string WeightVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

}  // namespace eqcoh
