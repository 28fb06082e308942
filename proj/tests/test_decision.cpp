#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "promisefa/decision.hpp"
#include "promisefa/words.hpp"

using namespace promisefa;

namespace {

Blm random_blm(std::mt19937_64& rng, int n) {
    Blm m;
    m.alphabet = "ab";
    m.num_states = n;
    auto entry = [&] {
        int num = static_cast<int>(rng() % 5) - 2;
        int den = 1 + static_cast<int>(rng() % 3);
        return Rational(num, den);
    };
    for (int i = 0; i < n; ++i) m.pi.push_back(entry());
    for (int i = 0; i < n; ++i) m.eta.push_back(entry());
    for (char c : m.alphabet) {
        auto& mat = m.matrices[c];
        mat.assign(n, std::vector<Rational>(n));
        for (auto& row : mat)
            for (auto& x : row) x = entry();
    }
    return m;
}

// Conjugates by a permutation; the word function is unchanged.
Blm permuted(const Blm& m, const std::vector<int>& perm) {
    Blm out = m;
    int n = m.num_states;
    for (int i = 0; i < n; ++i) {
        out.pi[perm[i]] = m.pi[i];
        out.eta[perm[i]] = m.eta[i];
    }
    for (char c : m.alphabet)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.matrices[c][perm[i]][perm[j]] = m.matrices.at(c)[i][j];
    return out;
}

PvDfa parity_pvdfa(std::set<int> acc, std::set<int> rej) {
    PvDfa m;
    m.alphabet = "ab";
    m.num_states = 4;
    m.transitions['a'] = {2, 3, 0, 1};
    m.transitions['b'] = {1, 0, 3, 2};
    m.accepting = std::move(acc);
    m.rejecting = std::move(rej);
    return m;
}

}  // namespace

TEST_CASE("blm word function on a hand-checked machine") {
    Blm m;
    m.alphabet = "a";
    m.num_states = 2;
    m.pi = {Rational(1), Rational(0)};
    m.eta = {Rational(0), Rational(1)};
    m.matrices['a'] = {{Rational(1, 2), Rational(1, 2)}, {Rational(0), Rational(1)}};
    validate(m);
    CHECK(blm_word_fn(m, "") == Rational(0));
    CHECK(blm_word_fn(m, "a") == Rational(1, 2));
    CHECK(blm_word_fn(m, "aa") == Rational(3, 4));
    CHECK(blm_word_fn(m, "aaa") == Rational(7, 8));
}

TEST_CASE("permuted machines are equivalent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Blm a = random_blm(rng, 4);
        Blm b = permuted(a, {2, 0, 3, 1});
        EquivalenceResult r = blm_equivalent(a, b);
        CHECK(r.equivalent);
        CHECK(!r.witness.has_value());
    }
}

TEST_CASE("blm_equivalent matches exhaustive comparison on random pairs") {
    std::mt19937_64 rng(20240817);
    int inequivalent = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n1 = 1 + static_cast<int>(rng() % 4);
        int n2 = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(4, 8 - n1));
        Blm a = random_blm(rng, n1);
        Blm b = trial % 5 == 0 && n1 == n2 ? permuted(a, [&] {
            std::vector<int> p(n1);
            for (int i = 0; i < n1; ++i) p[i] = i;
            std::shuffle(p.begin(), p.end(), rng);
            return p;
        }())
                                           : random_blm(rng, n2);
        EquivalenceResult r = blm_equivalent(a, b);
        std::optional<std::string> first_diff;
        for_each_word("ab", n1 + n2 - 1, [&](const std::string& w) {
            if (blm_word_fn(a, w) != blm_word_fn(b, w)) {
                first_diff = w;
                return false;
            }
            return true;
        });
        CHECK(r.equivalent == !first_diff.has_value());
        if (!r.equivalent) {
            ++inequivalent;
            REQUIRE(r.witness.has_value());
            CHECK(*r.witness == *first_diff);
            CHECK(blm_word_fn(a, *r.witness) != blm_word_fn(b, *r.witness));
        }
    }
    CHECK(inequivalent > 10);
}

TEST_CASE("pvdfa_equivalent and its witnesses") {
    PvDfa m = parity_pvdfa({0}, {1, 2});
    CHECK(pvdfa_equivalent(m, minimize_pvdfa(m)).equivalent);

    PvDfa flipped = m;
    flipped.accepting = {3};
    EquivalenceResult r = pvdfa_equivalent(m, flipped);
    CHECK(!r.equivalent);
    REQUIRE(r.witness.has_value());
    CHECK(classify(m, *r.witness) != classify(flipped, *r.witness));
}

TEST_CASE("pvdfa_equivalent lifts mismatched alphabets") {
    PvDfa unary = make_cycle_pvdfa(2, {0}, {1});
    PvDfa binary = lift_to_alphabet(unary, "ab");
    EquivalenceResult r = pvdfa_equivalent(unary, binary);
    CHECK(r.equivalent);
}

TEST_CASE("pvdfa_compare orders components") {
    PvDfa narrow = parity_pvdfa({0}, {3});
    PvDfa wide = parity_pvdfa({0}, {1, 2, 3});
    CompareResult r = pvdfa_compare(narrow, wide);
    CHECK(r.relation == Order::Less);
    CompareResult rev = pvdfa_compare(wide, narrow);
    CHECK(rev.relation == Order::Greater);
    CHECK(pvdfa_compare(narrow, narrow).relation == Order::Equal);
    PvDfa other = parity_pvdfa({3}, {1, 2});
    CompareResult inc = pvdfa_compare(narrow, other);
    CHECK(inc.relation == Order::Incomparable);
    REQUIRE(inc.witness_yes.has_value());
}

TEST_CASE("is_maximally_powerful") {
    CHECK(is_maximally_powerful(as_pvdfa(make_cycle_dfa(3, {0}))));
    CHECK(!is_maximally_powerful(make_cycle_pvdfa(3, {0}, {1})));
    // unreachable neutral states do not matter
    PvDfa m = as_pvdfa(make_cycle_dfa(2, {0}));
    m.num_states = 3;
    m.transitions['a'] = {1, 0, 2};
    CHECK(is_maximally_powerful(m));
}
