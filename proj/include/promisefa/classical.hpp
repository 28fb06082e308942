#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "promisefa/errors.hpp"
#include "promisefa/rational.hpp"

namespace promisefa {

enum class Verdict { Accept, Reject, Neutral };

const char* to_string(Verdict v);

/// Complete deterministic finite automaton. States are indices 0..num_states-1;
/// transitions[symbol][state] is the successor state.
struct Dfa {
    std::string alphabet;  // sorted, unique single-char symbols
    int num_states = 0;
    int initial = 0;
    std::map<char, std::vector<int>> transitions;
    std::set<int> accepting;

    bool operator==(const Dfa&) const = default;
};

/// DFA with an additional disjoint set of rejecting states; states outside
/// accepting u rejecting are neutral.
struct PvDfa {
    std::string alphabet;
    int num_states = 0;
    int initial = 0;
    std::map<char, std::vector<int>> transitions;
    std::set<int> accepting;
    std::set<int> rejecting;

    bool operator==(const PvDfa&) const = default;
};

/// Probabilistic finite automaton: row-stochastic matrix per symbol, initial
/// distribution, acceptance by final mass on accepting states. Entries are
/// exact rationals; when exact == false, row-sum validation uses a 1e-9
/// tolerance (for machines deserialized from floats) instead of equality.
struct Pfa {
    std::string alphabet;
    int num_states = 0;
    std::vector<Rational> initial;  // row vector, sums to 1
    std::map<char, std::vector<std::vector<Rational>>> transitions;
    std::set<int> accepting;
    bool exact = true;
};

void validate(const Dfa& m);
void validate(const PvDfa& m);
void validate(const Pfa& m);

int run(const Dfa& m, std::string_view word);
int run(const PvDfa& m, std::string_view word);
bool accepts(const Dfa& m, std::string_view word);
Verdict classify(const PvDfa& m, std::string_view word);

/// Swaps accepting and rejecting sets.
PvDfa complement(const PvDfa& m);

/// Builds the product recognizer for (L(yes), L(no)). The languages must be
/// disjoint; otherwise throws OverlappingComponentsError with a witness word.
/// Only reachable product states are materialized.
PvDfa recognizer_from_components(const Dfa& yes, const Dfa& no);

/// Splits a pvDFA into the two DFAs recognizing its yes- and no-components.
std::pair<Dfa, Dfa> component_dfas(const PvDfa& m);

PvDfa intersect_recognizers(const PvDfa& a, const PvDfa& b);

/// Product union machine; throws UnionUndefinedError (with witness) when the
/// recognized yes-sides meet the recognized no-sides.
PvDfa union_recognizers(const PvDfa& a, const PvDfa& b);

struct PumpSplit {
    std::string x, y, z;
};

/// Splits word = xyz with |xy| <= num_states, |y| >= 1 and run(x) == run(xy),
/// via the first repeated state in the run trace. Requires |word| >= num_states.
PumpSplit pump_decompose(const PvDfa& m, std::string_view word);

Rational pfa_accept_prob(const Pfa& m, std::string_view word);

/// Minimal complete DFA for L(m), in canonical breadth-first state order.
Dfa minimize_dfa(const Dfa& m);

/// Minimal pvDFA recognizing the same promise problem, by Moore partition
/// refinement over the three-valued state classification.
PvDfa minimize_pvdfa(const PvDfa& m);

struct InclusionResult {
    bool included = false;
    std::optional<std::string> witness;  // shortest word in L(a) \ L(b)
};

InclusionResult dfa_language_included(const Dfa& a, const Dfa& b);

// ---- construction helpers ----

/// Views a DFA as a pvDFA with rejecting = states \ accepting.
PvDfa as_pvdfa(const Dfa& m);

/// Unary cycle over {'a'}: state i steps to (i+1) mod n.
Dfa make_cycle_dfa(int n, std::set<int> accepting);
PvDfa make_cycle_pvdfa(int n, std::set<int> accepting, std::set<int> rejecting);

/// Embeds a DFA as a 0/1-matrix PFA with a point-mass initial distribution.
Pfa dfa_to_pfa(const Dfa& m);

std::string merge_alphabets(const std::string& a, const std::string& b);

/// Extends the machine to a larger alphabet; new symbols route every state to
/// a fresh neutral (resp. non-accepting) sink.
Dfa lift_to_alphabet(const Dfa& m, const std::string& alphabet);
PvDfa lift_to_alphabet(const PvDfa& m, const std::string& alphabet);

/// Shortest word accepted by both DFAs (same alphabet), if any.
std::optional<std::string> shortest_common_word(const Dfa& a, const Dfa& b);

/// Shortest accepted word, if the language is nonempty.
std::optional<std::string> shortest_accepted_word(const Dfa& m);

/// Reachable product DFA; a product state accepts according to combine(a_acc, b_acc).
Dfa dfa_product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool));

}  // namespace promisefa
