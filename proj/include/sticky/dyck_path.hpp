#pragma once

#include "sticky/errors.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sticky {

class InvalidDyckPath : public Error {
public:
    using Error::Error;
};

/// A Dyck path stored as a bit-word (true = up step). Every prefix has at
/// least as many up steps as down steps and the totals are equal.
class DyckPath {
public:
    DyckPath() = default;

    /// Throws InvalidDyckPath on a negative height or a nonzero final height.
    explicit DyckPath(std::vector<bool> steps);

    /// Parses a word over {u, d}.
    static DyckPath parse(std::string_view word);

    /// Half the length.
    std::size_t order() const { return steps_.size() / 2; }
    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    bool is_up(std::size_t i) const { return steps_[i]; }
    const std::vector<bool>& steps() const { return steps_; }

    std::string to_string() const;

    /// Number of leading up steps.
    std::size_t initial_rise() const;
    /// Number of trailing down steps.
    std::size_t final_descent() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) {
        return a.steps_ <=> b.steps_;
    }

private:
    std::vector<bool> steps_;
};

/// All Dyck paths of length 2n, in lexicographic order with u < d.
std::vector<DyckPath> enumerate_dyck_paths(std::size_t n);

} // namespace sticky
