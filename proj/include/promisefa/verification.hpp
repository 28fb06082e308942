#pragma once

#include <optional>
#include <string>
#include <vector>

namespace promisefa {

struct TheoremParams {
    std::optional<std::string> family;  // overrides the default family where a suite takes one
    std::optional<int> n;
    std::optional<int> l;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<int> r1;
    std::optional<int> r2;
    std::optional<int> max_len;
    std::optional<int> max_states;
    std::optional<double> eps;
    std::optional<double> tolerance;  // certainty tolerance, default 1e-9
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // lhs/rhs/tolerance or a counterexample word
};

struct VerificationReport {
    std::string id;
    std::vector<CheckLine> checks;

    bool pass() const;
};

/// Runs the verification suite for one of the ids T3, T5, T6, T8, PL1, PL2,
/// T9, T10, T11, T12, T14, T17, T18, T19-construct, T20-construct. Missing
/// parameters fall back to per-suite defaults.
VerificationReport verify_theorem(const std::string& id, const TheoremParams& params);

/// The full id list, in the order above.
const std::vector<std::string>& theorem_ids();

}  // namespace promisefa
