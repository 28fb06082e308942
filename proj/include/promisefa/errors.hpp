#pragma once

#include <stdexcept>
#include <string>

namespace promisefa {

// Base class for all library errors; CLI maps these to exit code 2
// (input/usage) or 1 (check failure) depending on context.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSymbolError : Error {
    explicit UnknownSymbolError(char symbol)
        : Error(std::string("unknown symbol '") + symbol + "'"), symbol(symbol) {}
    char symbol;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct WordTooShortError : Error {
    using Error::Error;
};

// Raised when a recognizer is requested for components whose languages
// intersect; carries a word in the intersection.
struct OverlappingComponentsError : Error {
    explicit OverlappingComponentsError(std::string witness_word)
        : Error("component languages overlap at \"" + witness_word + "\""),
          witness(std::move(witness_word)) {}
    std::string witness;
};

// Raised when (A_yes u B_yes) meets (A_no u B_no); carries a word in the
// forbidden intersection.
struct UnionUndefinedError : Error {
    explicit UnionUndefinedError(std::string witness_word)
        : Error("union undefined, components overlap at \"" + witness_word + "\""),
          witness(std::move(witness_word)) {}
    std::string witness;
};

struct AlphabetMismatchError : Error {
    using Error::Error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct NonTerminatingError : Error {
    using Error::Error;
};

struct BeyondEnumerationBoundError : Error {
    BeyondEnumerationBoundError(std::string word, int bound)
        : Error("word \"" + word + "\" exceeds the enumeration bound " + std::to_string(bound)) {}
};

struct NotRegularFlavorError : Error {
    using Error::Error;
};

struct UnknownTheoremIdError : Error {
    explicit UnknownTheoremIdError(const std::string& id)
        : Error("unknown theorem id \"" + id + "\"") {}
};

struct SearchBudgetExceededError : Error {
    using Error::Error;
};

// Malformed machine/problem description (JSON or in-memory); message names
// the first violated invariant.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace promisefa
