#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "promisefa/classical.hpp"

namespace promisefa {

enum class Membership { Yes, No, OutsidePromise };

const char* to_string(Membership m);

/// Both components given as DFAs; membership is exact.
struct RegularProblem {
    Dfa yes;
    Dfa no;
};

/// Components given as membership oracles; verification is bounded by
/// `bound` (words longer than it cannot be classified).
struct PredicateProblem {
    std::function<bool(std::string_view)> yes;
    std::function<bool(std::string_view)> no;
    int bound = 16;
    int disjointness_checked_len = 0;  // enumeration length used at construction
};

struct PromiseProblem {
    std::string name;
    std::string alphabet;
    std::variant<RegularProblem, PredicateProblem> flavor;

    bool is_regular() const { return std::holds_alternative<RegularProblem>(flavor); }
    const RegularProblem& regular() const;
    const PredicateProblem& predicate() const;
};

/// Checks disjointness exactly (product emptiness) and returns the problem.
PromiseProblem make_regular_problem(std::string name, Dfa yes, Dfa no);

/// Checks disjointness for every word up to disjoint_check_len.
PromiseProblem make_predicate_problem(std::string name, std::string alphabet,
                                      std::function<bool(std::string_view)> yes,
                                      std::function<bool(std::string_view)> no, int bound,
                                      int disjoint_check_len);

Membership classify_word(const PromiseProblem& p, std::string_view word);

PromiseProblem complement_pp(const PromiseProblem& p);
PromiseProblem intersect_pp(const PromiseProblem& a, const PromiseProblem& b);
/// Throws UnionUndefinedError when the combined yes-sides meet the combined
/// no-sides (exact for two Regular problems, bounded otherwise).
PromiseProblem union_pp(const PromiseProblem& a, const PromiseProblem& b);

struct SubproblemResult {
    bool holds = false;
    bool exact = false;  // true when decided by DFA inclusion, not enumeration
    int bound = 0;       // enumeration length when exact == false
    std::optional<std::string> witness;
};

/// Tests A_yes <= B_yes and A_no <= B_no; exact for Regular x Regular.
SubproblemResult is_subproblem(const PromiseProblem& a, const PromiseProblem& b, int bound);

// ---- the concrete problem families ----

/// Unary: yes = { a^n : n = 0 mod N }, no = { a^n : n = l mod N }, 0 < l < N.
PromiseProblem make_anl(int n, int l);

/// Unary: yes = { a^n : n = r1 mod N }, no = { a^n : n = r2 mod N }, r1 != r2 mod N.
PromiseProblem make_anr1r2(int n, int r1, int r2);

/// Over {a,b}: yes = { w : #a = #b }, no = { w : #b = #a + l }.
PromiseProblem make_al(int l);

/// Over {a,b}: yes = { a^i b^i }, no = { a^i b^(i+l) }.
PromiseProblem make_bl(int l);

/// Over {a,b}: yes = { a^n b^n }, no = { a^n b^m : n != m }.
PromiseProblem make_c();

/// Over {a,b,#}: words (a^n b^m #)^t with t >= rounds(n, m, eps);
/// yes iff n = m, no iff n != m.
PromiseProblem make_ployeq(double eps);

/// Unary: yes/no residues of the p-cycle where cos^2(l pi/p) clears 2/3 resp. 1/3.
PromiseProblem make_ap(int p);

/// As make_ap with thresholds 1-eps and eps; requires p >= pi/arccos(sqrt(1-eps)).
PromiseProblem make_ap_eps(int p, double eps);

/// Unary: yes = (a^p)*, no = (a^q)* a, gcd(p, q) = 2.
PromiseProblem make_pq_family(int p, int q);

/// The two halves of { a^n b^n } split by parity of n, with the complementary
/// no-sides (odd: yes = both counts odd; even: yes = both counts even).
PromiseProblem make_parity_eq(bool odd);

/// Round count T = ceil(2 l^2 ln(1/eps)) with l = max(n, m).
int ployeq_rounds(int n, int m, double eps);

/// Decomposes a word as (a^n b^m #)^t with identical blocks, n,m >= 1, t >= 1.
struct PloyeqShape {
    int reps_a = 0;   // n
    int reps_b = 0;   // m
    int blocks = 0;   // t
};
std::optional<PloyeqShape> parse_ployeq_word(std::string_view word);

/// Accepting residues for make_ap / make_ap_eps, i.e. the l with
/// cos^2(l pi / p) >= threshold_hi (yes) resp. <= threshold_lo (no).
std::pair<std::set<int>, std::set<int>> ap_residues(int p, double eps);

}  // namespace promisefa
