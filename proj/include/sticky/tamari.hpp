#pragma once

#include "sticky/dyck_path.hpp"
#include "sticky/sticky_tree.hpp"

#include <string>
#include <vector>

namespace sticky {

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class NotAnInterval : public Error {
public:
    using Error::Error;
};

/// For each up step, the length of the Dyck factor strictly between it and
/// its matching down step.
std::vector<std::size_t> match_lengths(const DyckPath& path);

/// D below E in the Tamari order: componentwise match lengths. Throws
/// LengthMismatch when the paths differ in length.
bool tamari_leq(const DyckPath& d, const DyckPath& e);

/// Word of length n-1 over {N, E}: N when up step i is followed by a down
/// step. Throws InvalidDyckPath for the empty path.
std::string path_type(const DyckPath& path);

class TamariInterval {
public:
    /// Throws NotAnInterval unless lower is below upper.
    TamariInterval(DyckPath lower, DyckPath upper);

    const DyckPath& lower() const { return lower_; }
    const DyckPath& upper() const { return upper_; }
    std::size_t order() const { return upper_.order(); }

    friend bool operator==(const TamariInterval&, const TamariInterval&) = default;
    friend auto operator<=>(const TamariInterval& a, const TamariInterval& b) {
        if (auto c = a.upper_ <=> b.upper_; c != 0) {
            return c;
        }
        return a.lower_ <=> b.lower_;
    }

private:
    DyckPath lower_;
    DyckPath upper_;
};

bool is_synchronized(const TamariInterval& interval);

/// Upper path is the contour of the shape; lower path is u d^c(v) over the
/// non-root nodes in prefix order. Throws std::invalid_argument when the
/// tree has no edge.
TamariInterval sticky_to_interval(const StickyTree& tree);

/// Inverse of sticky_to_interval.
StickyTree interval_to_sticky(const TamariInterval& interval);

/// All intervals of order n, sorted by upper then lower path.
std::vector<TamariInterval> enumerate_intervals(std::size_t n);

} // namespace sticky
