#include "pascalrank/selection.hpp"

#include <stdexcept>
#include <utility>

namespace pascalrank {

namespace {

void check_strictly_increasing(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] <= v[i - 1]) {
            throw std::invalid_argument("selection is not strictly increasing at position " +
                                        std::to_string(i) + ": " + std::to_string(v[i]) +
                                        " follows " + std::to_string(v[i - 1]));
        }
    }
}

} // namespace

Selection::Selection(std::vector<std::uint64_t> indices) : indices_(std::move(indices)) {
    check_strictly_increasing(indices_);
}

Selection::Selection(std::initializer_list<std::uint64_t> indices)
    : Selection(std::vector<std::uint64_t>(indices)) {}

Selection Selection::at_positions(const std::vector<std::size_t>& positions) const {
    std::vector<std::uint64_t> picked;
    picked.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= indices_.size()) {
            throw std::invalid_argument("selection position " + std::to_string(positions[i]) +
                                        " out of range for length " +
                                        std::to_string(indices_.size()));
        }
        if (i > 0 && positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("positions are not strictly increasing at index " +
                                        std::to_string(i));
        }
        picked.push_back(indices_[positions[i]]);
    }
    return Selection(std::move(picked));
}

std::string Selection::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(indices_[i]);
    }
    out += "]";
    return out;
}

} // namespace pascalrank
