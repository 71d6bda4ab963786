#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zm/rational.hpp"

namespace zm {

struct VerifyOptions {
    int n = -1;      // run a single level
    int max_n = -1;  // cap the level sweep (suite default when < 0)
    std::optional<GaussianRational> z;
    std::optional<GaussianRational> zp;
    std::optional<Rational> theta;
    std::optional<Rational> t;
    bool parallel = true;
};

struct VerifyCase {
    std::string identity;  // short name, e.g. "normalization"
    std::string anchor;    // the formula being checked, in plain notation
    int n = 0;
    std::string params;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    double elapsed_ms = 0;

    bool all_pass() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"

/// Runs one named identity suite ("all" folds every suite). Throws
/// CapacityError / PoleError for out-of-range requests; a failing identity is
/// reported, not thrown.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

std::string report_to_json(const VerifyReport& report);

}  // namespace zm
