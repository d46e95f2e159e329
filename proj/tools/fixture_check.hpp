#pragma once

#include "sticky/serialize.hpp"

#include <string>
#include <vector>

namespace sticky::cli {

/// A fixture names a transformation, an input and the expected output. The
/// forward check applies the transformation; the round trip applies its
/// inverse to the expected output and compares with the input.
struct FixtureResult {
    std::string name;
    bool forward = false;
    bool round_trip = false;
    std::string detail;

    bool ok() const { return forward && round_trip; }
};

FixtureResult check_fixture(const json& fixture);

/// Every *.json file in `dir`, in file-name order.
std::vector<FixtureResult> check_fixture_dir(const std::string& dir);

} // namespace sticky::cli
