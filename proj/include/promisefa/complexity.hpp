#pragma once

#include <optional>
#include <string>
#include <vector>

#include "promisefa/classical.hpp"
#include "promisefa/promise.hpp"

namespace promisefa {

struct SrResult {
    int size = 0;
    PvDfa witness;
};

/// Minimal recognizing pvDFA: product of the components, then Moore
/// minimization. Exact. Requires the Regular flavor.
SrResult compute_sr(const PromiseProblem& p);

struct SsResult {
    bool found = false;
    int size = 0;
    std::optional<PvDfa> witness;
    int searched_up_to = 0;  // largest state count tried
    int verify_len = 0;      // word-length bound (predicate flavor only)
    bool exact = false;      // true for Regular flavor (product-based check)
};

/// Smallest pvDFA solving the problem, by canonical enumeration of reachable
/// transition tables with the classification derived by constraint
/// propagation. Exact for Regular flavor; length-bounded certificate for
/// Predicate flavor. max_states is capped at 12 (unary) / 6 (larger
/// alphabets); beyond that throws SearchBudgetExceeded.
SsResult compute_ss_bruteforce(const PromiseProblem& p, int max_states, int verify_len);

/// Cyclic pvDFA with pq/2 states recognizing ((a^p)*, (a^q)* a); requires
/// gcd(p, q) = 2. Already minimal.
PvDfa build_pq_cycle_pvdfa(int p, int q);

/// p-state cycle DFA solving the unary threshold problem of make_ap(p);
/// requires p prime, p > 6.
Dfa build_ap_solver_dfa(int p);

struct BoundCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    bool tight = false;  // lhs == rhs
};

struct ComplexityReport {
    std::string problem;
    int s_yes = 0;
    int s_no = 0;
    bool yes_nonempty = false;
    bool no_nonempty = false;
    int sr = 0;
    std::optional<int> ss;
    int ss_max_states = 0;
    int ss_verify_len = 0;
    std::vector<BoundCheck> checks;
    PvDfa sr_witness;
    std::optional<PvDfa> ss_witness;

    bool all_hold() const;
};

/// Computes s_yes, s_no, sr and (budgeted) ss for a Regular-flavor problem
/// and checks the size bounds relating them.
ComplexityReport verify_bounds(const PromiseProblem& p);

}  // namespace promisefa
