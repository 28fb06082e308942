#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "promisefa/classical.hpp"
#include "promisefa/words.hpp"

using namespace promisefa;

namespace {

Dfa even_a_dfa() {
    Dfa m;
    m.alphabet = "ab";
    m.num_states = 2;
    m.transitions['a'] = {1, 0};
    m.transitions['b'] = {0, 1};
    m.accepting = {0};
    return m;
}

PvDfa parity_both(std::set<int> acc, std::set<int> rej) {
    // state encodes (#a mod 2, #b mod 2) as 2*pa + pb
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

TEST_CASE("dfa run and accepts") {
    Dfa m = even_a_dfa();
    validate(m);
    CHECK(accepts(m, ""));
    CHECK(!accepts(m, "a"));
    CHECK(accepts(m, "aba"));
    CHECK(accepts(m, "bbbb"));
    CHECK(run(m, "aab") == 0);
    CHECK_THROWS_AS(run(m, "ac"), UnknownSymbolError);
}

TEST_CASE("pvdfa classify and complement") {
    PvDfa m = make_cycle_pvdfa(3, {0}, {1});
    CHECK(classify(m, "") == Verdict::Accept);
    CHECK(classify(m, "a") == Verdict::Reject);
    CHECK(classify(m, "aa") == Verdict::Neutral);
    PvDfa c = complement(m);
    for_each_word("a", 9, [&](const std::string& w) {
        Verdict v = classify(m, w);
        Verdict cv = classify(c, w);
        if (v == Verdict::Accept) CHECK(cv == Verdict::Reject);
        if (v == Verdict::Reject) CHECK(cv == Verdict::Accept);
        if (v == Verdict::Neutral) CHECK(cv == Verdict::Neutral);
        return true;
    });
    CHECK(complement(complement(m)) == m);
}

TEST_CASE("recognizer_from_components matches the set semantics") {
    Dfa yes = make_cycle_dfa(4, {0});
    Dfa no = make_cycle_dfa(6, {1});
    PvDfa r = recognizer_from_components(yes, no);
    validate(r);
    for_each_word("a", 30, [&](const std::string& w) {
        Verdict v = classify(r, w);
        if (accepts(yes, w))
            CHECK(v == Verdict::Accept);
        else if (accepts(no, w))
            CHECK(v == Verdict::Reject);
        else
            CHECK(v == Verdict::Neutral);
        return true;
    });
}

TEST_CASE("recognizer_from_components rejects overlapping components") {
    Dfa yes = make_cycle_dfa(2, {0});
    Dfa no = make_cycle_dfa(3, {0});
    CHECK_THROWS_AS(recognizer_from_components(yes, no), OverlappingComponentsError);
}

TEST_CASE("component_dfas round-trips the recognized problem") {
    PvDfa m = parity_both({0}, {1, 2});
    auto [yes, no] = component_dfas(m);
    PvDfa back = recognizer_from_components(yes, no);
    for_each_word("ab", 8, [&](const std::string& w) {
        CHECK(classify(back, w) == classify(m, w));
        return true;
    });
}

TEST_CASE("intersection and union products") {
    PvDfa a = parity_both({0}, {3});
    PvDfa b = lift_to_alphabet(make_cycle_pvdfa(3, {0}, {2}), "ab");
    PvDfa meet = intersect_recognizers(a, b);
    PvDfa c = parity_both({0}, {1, 2});
    PvDfa join = union_recognizers(a, c);
    for_each_word("ab", 7, [&](const std::string& w) {
        Verdict va = classify(a, w);
        Verdict vb = classify(b, w);
        Verdict vc = classify(c, w);
        Verdict vm = classify(meet, w);
        Verdict vj = classify(join, w);
        CHECK((vm == Verdict::Accept) == (va == Verdict::Accept && vb == Verdict::Accept));
        CHECK((vm == Verdict::Reject) == (va == Verdict::Reject && vb == Verdict::Reject));
        CHECK((vj == Verdict::Accept) == (va == Verdict::Accept || vc == Verdict::Accept));
        CHECK((vj == Verdict::Reject) == (va == Verdict::Reject || vc == Verdict::Reject));
        return true;
    });
}

TEST_CASE("union of a machine with its complement is undefined") {
    PvDfa m = make_cycle_pvdfa(3, {0}, {1});
    try {
        union_recognizers(m, complement(m));
        CHECK(false);
    } catch (const UnionUndefinedError& e) {
        CHECK(std::string(e.what()).find("overlap") != std::string::npos);
    }
}

TEST_CASE("pump_decompose satisfies the split conditions") {
    PvDfa m = parity_both({0}, {1, 2});
    for_each_word("ab", 7, [&](const std::string& w) {
        if (static_cast<int>(w.size()) < m.num_states) return true;
        PumpSplit s = pump_decompose(m, w);
        CHECK(s.x + s.y + s.z == w);
        CHECK(!s.y.empty());
        CHECK(static_cast<int>((s.x + s.y).size()) <= m.num_states);
        CHECK(run(m, s.x) == run(m, s.x + s.y));
        for (int t = 0; t <= 4; ++t) {
            std::string pumped = s.x;
            for (int i = 0; i < t; ++i) pumped += s.y;
            pumped += s.z;
            CHECK(classify(m, pumped) == classify(m, w));
        }
        return true;
    });
    CHECK_THROWS_AS(pump_decompose(m, "ab"), WordTooShortError);
}

TEST_CASE("minimize_dfa is language-preserving and minimal") {
    // 6-state machine for "number of a's is even", with redundant states
    Dfa m;
    m.alphabet = "ab";
    m.num_states = 6;
    m.transitions['a'] = {1, 0, 3, 2, 5, 4};
    m.transitions['b'] = {2, 3, 4, 5, 0, 1};
    m.accepting = {0, 2, 4};
    Dfa mini = minimize_dfa(m);
    CHECK(mini.num_states == 2);
    for_each_word("ab", 8, [&](const std::string& w) {
        CHECK(accepts(mini, w) == accepts(m, w));
        return true;
    });
    CHECK(minimize_dfa(mini) == mini);
}

TEST_CASE("minimize_pvdfa collapses equivalent states") {
    Dfa yes = make_cycle_dfa(4, {0});
    Dfa no = make_cycle_dfa(6, {1});
    PvDfa r = recognizer_from_components(yes, no);
    PvDfa mini = minimize_pvdfa(r);
    CHECK(mini.num_states == 12);
    for_each_word("a", 30, [&](const std::string& w) {
        CHECK(classify(mini, w) == classify(r, w));
        return true;
    });
}

TEST_CASE("dfa_language_included finds shortest counterexamples") {
    Dfa even = even_a_dfa();
    Dfa all;
    all.alphabet = "ab";
    all.num_states = 1;
    all.transitions['a'] = {0};
    all.transitions['b'] = {0};
    all.accepting = {0};
    InclusionResult inc = dfa_language_included(even, all);
    CHECK(inc.included);
    InclusionResult rev = dfa_language_included(all, even);
    CHECK(!rev.included);
    REQUIRE(rev.witness.has_value());
    CHECK(*rev.witness == "a");
}

TEST_CASE("lift_to_alphabet adds a sink for new symbols") {
    Dfa m = make_cycle_dfa(2, {0});
    Dfa lifted = lift_to_alphabet(m, "ab");
    CHECK(lifted.alphabet == "ab");
    CHECK(accepts(lifted, "aa"));
    CHECK(!accepts(lifted, "ab"));
    CHECK(!accepts(lifted, "ba"));
}

TEST_CASE("pfa embedding preserves acceptance") {
    Dfa m = even_a_dfa();
    Pfa p = dfa_to_pfa(m);
    validate(p);
    for_each_word("ab", 6, [&](const std::string& w) {
        Rational prob = pfa_accept_prob(p, w);
        CHECK(prob == (accepts(m, w) ? Rational(1) : Rational(0)));
        return true;
    });
}

TEST_CASE("pfa with rational mixing") {
    // fair coin on each 'a': two states, accept in state 0
    Pfa p;
    p.alphabet = "a";
    p.num_states = 2;
    p.initial = {Rational(1), Rational(0)};
    p.transitions['a'] = {{Rational(1, 2), Rational(1, 2)},
                          {Rational(1, 2), Rational(1, 2)}};
    p.accepting = {0};
    validate(p);
    CHECK(pfa_accept_prob(p, "") == Rational(1));
    CHECK(pfa_accept_prob(p, "a") == Rational(1, 2));
    CHECK(pfa_accept_prob(p, "aaa") == Rational(1, 2));
}

TEST_CASE("shortest word helpers") {
    Dfa four = make_cycle_dfa(4, {0});
    Dfa six = make_cycle_dfa(6, {0});
    auto common = shortest_common_word(four, six);
    REQUIRE(common.has_value());
    CHECK(common->size() == 0);
    Dfa six2 = make_cycle_dfa(6, {2});
    auto c2 = shortest_common_word(four, six2);
    REQUIRE(c2.has_value());
    CHECK(c2->size() == 8);  // smallest n with n%4 == 0 and n%6 == 2
    auto none = shortest_common_word(make_cycle_dfa(2, {0}), make_cycle_dfa(2, {1}));
    CHECK(!none.has_value());
    auto w = shortest_accepted_word(make_cycle_dfa(6, {1}));
    REQUIRE(w.has_value());
    CHECK(*w == "a");
}

TEST_CASE("random minimization agrees with bounded language check") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        Dfa m;
        m.alphabet = "ab";
        m.num_states = 1 + static_cast<int>(rng() % 5);
        for (char c : m.alphabet) {
            auto& row = m.transitions[c];
            for (int s = 0; s < m.num_states; ++s)
                row.push_back(static_cast<int>(rng() % m.num_states));
        }
        for (int s = 0; s < m.num_states; ++s)
            if (rng() % 2) m.accepting.insert(s);
        Dfa mini = minimize_dfa(m);
        CHECK(mini.num_states <= m.num_states);
        bool same = true;
        for_each_word("ab", 9, [&](const std::string& w) {
            if (accepts(mini, w) != accepts(m, w)) same = false;
            return same;
        });
        CHECK(same);
    }
}
