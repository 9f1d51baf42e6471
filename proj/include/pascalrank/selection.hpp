#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pascalrank {

/// A strictly increasing sequence of non-negative integers picking rows or
/// columns of the infinite Pascal matrix. The empty selection is legal.
class Selection {
public:
    Selection() = default;

    /// Throws std::invalid_argument naming the first offending position if
    /// the sequence is not strictly increasing. Input is never repaired.
    explicit Selection(std::vector<std::uint64_t> indices);
    Selection(std::initializer_list<std::uint64_t> indices);

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return indices_[i]; }
    std::uint64_t front() const { return indices_.front(); }
    std::uint64_t back() const { return indices_.back(); }

    const std::vector<std::uint64_t>& values() const { return indices_; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    /// The sub-selection at the given positions. Positions must be strictly
    /// increasing and in range.
    Selection at_positions(const std::vector<std::size_t>& positions) const;

    bool operator==(const Selection&) const = default;

    /// "[2, 7, 11]"
    std::string to_string() const;

private:
    std::vector<std::uint64_t> indices_;
};

} // namespace pascalrank
