#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promisefa/classical.hpp"
#include "promisefa/rational.hpp"

namespace promisefa {

/// Bilinear machine over exact rationals: word function
/// f(x) = pi * M(x_1) ... M(x_n) * eta.
struct Blm {
    std::string alphabet;
    int num_states = 0;
    std::vector<Rational> pi;                                   // 1 x n
    std::map<char, std::vector<std::vector<Rational>>> matrices;  // n x n per symbol
    std::vector<Rational> eta;                                  // n x 1
};

void validate(const Blm& m);

Rational blm_word_fn(const Blm& m, std::string_view word);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<std::string> witness;  // shortest word where the functions differ
};

/// Exact equivalence of word functions, by forward basis closure over the
/// block-diagonal difference system; the basis never exceeds n1+n2 vectors.
EquivalenceResult blm_equivalent(const Blm& a, const Blm& b);

/// Encodes a pvDFA as a 0/1 BLM whose word function is 1 on the yes-component,
/// 2 on the no-component and 0 elsewhere.
Blm pvdfa_to_blm(const PvDfa& m);

/// True iff the two machines recognize the identical promise problem.
EquivalenceResult pvdfa_equivalent(const PvDfa& a, const PvDfa& b);

enum class Order { Equal, Less, Greater, Incomparable };

const char* to_string(Order o);

struct CompareResult {
    Order relation = Order::Incomparable;
    // Shortest words separating the yes-components / no-components, when they differ.
    std::optional<std::string> witness_yes;
    std::optional<std::string> witness_no;
};

/// Orders two pvDFA by component-language inclusion (Equal / Less / Greater /
/// Incomparable).
CompareResult pvdfa_compare(const PvDfa& a, const PvDfa& b);

/// True iff every reachable state of the minimized machine is classified,
/// i.e. the machine is essentially a DFA.
bool is_maximally_powerful(const PvDfa& m);

}  // namespace promisefa
