#include "sticky/dyck_path.hpp"

#include <functional>

namespace sticky {

DyckPath::DyckPath(std::vector<bool> steps)
    : steps_(std::move(steps)) {
    long height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        height += steps_[i] ? 1 : -1;
        if (height < 0) {
            throw InvalidDyckPath("Dyck path goes below zero at step " + std::to_string(i));
        }
    }
    if (height != 0) {
        throw InvalidDyckPath("Dyck path ends at height " + std::to_string(height));
    }
}

DyckPath DyckPath::parse(std::string_view word) {
    std::vector<bool> steps;
    steps.reserve(word.size());
    for (char c : word) {
        if (c == 'u' || c == 'U') {
            steps.push_back(true);
        } else if (c == 'd' || c == 'D') {
            steps.push_back(false);
        } else {
            throw InvalidDyckPath(std::string("unexpected character '") + c + "' in Dyck word");
        }
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (bool up : steps_) {
        out.push_back(up ? 'u' : 'd');
    }
    return out;
}

std::size_t DyckPath::initial_rise() const {
    std::size_t k = 0;
    while (k < steps_.size() && steps_[k]) {
        ++k;
    }
    return k;
}

std::size_t DyckPath::final_descent() const {
    std::size_t k = 0;
    while (k < steps_.size() && !steps_[steps_.size() - 1 - k]) {
        ++k;
    }
    return k;
}

std::vector<DyckPath> enumerate_dyck_paths(std::size_t n) {
    std::vector<DyckPath> out;
    std::vector<bool> word;
    word.reserve(2 * n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t ups, std::size_t downs) {
        if (ups == n && downs == n) {
            out.emplace_back(word);
            return;
        }
        if (ups < n) {
            word.push_back(true);
            rec(ups + 1, downs);
            word.pop_back();
        }
        if (downs < ups) {
            word.push_back(false);
            rec(ups, downs + 1);
            word.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

} // namespace sticky
