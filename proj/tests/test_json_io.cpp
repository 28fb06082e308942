#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "promisefa/complexity.hpp"
#include "promisefa/json_io.hpp"
#include "promisefa/words.hpp"

using namespace promisefa;
using nlohmann::json;

TEST_CASE("dfa round-trip") {
    Dfa m = make_cycle_dfa(5, {0, 2});
    Machine back = machine_from_json(to_json(m));
    REQUIRE(std::holds_alternative<Dfa>(back));
    CHECK(std::get<Dfa>(back) == m);
}

TEST_CASE("pvdfa round-trip") {
    PvDfa m = build_pq_cycle_pvdfa(4, 6);
    Machine back = machine_from_json(to_json(m));
    REQUIRE(std::holds_alternative<PvDfa>(back));
    CHECK(std::get<PvDfa>(back) == m);
}

TEST_CASE("pfa round-trip keeps exact rationals") {
    Pfa p;
    p.alphabet = "a";
    p.num_states = 2;
    p.initial = {Rational(2, 3), Rational(1, 3)};
    p.transitions['a'] = {{Rational(1, 2), Rational(1, 2)}, {Rational(0), Rational(1)}};
    p.accepting = {1};
    Machine back = machine_from_json(to_json(p));
    REQUIRE(std::holds_alternative<Pfa>(back));
    const Pfa& q = std::get<Pfa>(back);
    CHECK(q.initial == p.initial);
    CHECK(q.transitions == p.transitions);
    CHECK(pfa_accept_prob(q, "aa") == pfa_accept_prob(p, "aa"));
}

TEST_CASE("quantum machine round-trips preserve behavior") {
    Mo1Qfa ap = build_ap(7);
    Machine back = machine_from_json(to_json(ap));
    REQUIRE(std::holds_alternative<Mo1Qfa>(back));
    const Mo1Qfa& ap2 = std::get<Mo1Qfa>(back);
    for (int k = 0; k <= 20; ++k) {
        std::string w(static_cast<size_t>(k), 'a');
        CHECK(std::abs(mo1qfa_accept_prob(ap2, w) - mo1qfa_accept_prob(ap, w)) < 1e-12);
    }

    PvMo1Qfa ml = build_ml(1);
    Machine back2 = machine_from_json(to_json(ml));
    REQUIRE(std::holds_alternative<PvMo1Qfa>(back2));
    const PvMo1Qfa& ml2 = std::get<PvMo1Qfa>(back2);
    for_each_word("ab", 5, [&](const std::string& w) {
        auto [pa1, pr1] = pvmo1qfa_probs(ml, w);
        auto [pa2, pr2] = pvmo1qfa_probs(ml2, w);
        CHECK(std::abs(pa1 - pa2) < 1e-12);
        CHECK(std::abs(pr1 - pr2) < 1e-12);
        return true;
    });
}

TEST_CASE("qcfa1 round-trip preserves exact probabilities") {
    Qcfa1 m = build_ployeq_qcfa(1.0 / 3.0);
    Machine back = machine_from_json(to_json(m));
    REQUIRE(std::holds_alternative<Qcfa1>(back));
    const Qcfa1& m2 = std::get<Qcfa1>(back);
    for (const std::string& w : {std::string("ab#"), std::string("aab#aab#")}) {
        auto [pa1, pr1] = qcfa_exact_probs(m, w);
        auto [pa2, pr2] = qcfa_exact_probs(m2, w);
        CHECK(std::abs(pa1 - pa2) < 1e-12);
        CHECK(std::abs(pr1 - pr2) < 1e-12);
    }
}

TEST_CASE("file save and load") {
    Machine m = build_pq_cycle_pvdfa(4, 6);
    std::string path = "roundtrip_machine.json";
    save_machine(m, path);
    Machine back = load_machine(path);
    CHECK(std::get<PvDfa>(back) == std::get<PvDfa>(m));
}

TEST_CASE("validation failures carry a message") {
    CHECK_THROWS_AS(machine_from_json(json{{"kind", "hybrid"}}), ValidationError);
    json broken = to_json(make_cycle_dfa(3, {0}));
    broken["initial"] = 9;
    CHECK_THROWS_AS(machine_from_json(broken), ValidationError);
    json missing = to_json(make_cycle_dfa(3, {0}));
    missing.erase("transitions");
    CHECK_THROWS_AS(machine_from_json(missing), ValidationError);
}

TEST_CASE("family descriptors") {
    PromiseProblem p = family_from_descriptor(json{{"family", "ANl"},
                                                   {"params", {{"N", 5}, {"l", 2}}}});
    CHECK(classify_word(p, "aa") == Membership::No);
    PromiseProblem pq = make_family("PQ", json{{"p", 4}, {"q", 6}});
    CHECK(classify_word(pq, "aaaa") == Membership::Yes);
    CHECK_THROWS_AS(make_family("nope", json::object()), ValidationError);

    json serialized = problem_to_json(pq);
    CHECK(serialized.contains("yes"));
    CHECK(serialized.contains("no"));
    Machine yes = machine_from_json(serialized["yes"]);
    CHECK(accepts(std::get<Dfa>(yes), "aaaa"));

    PromiseProblem back = problem_from_json(serialized);
    for (int k = 0; k <= 24; ++k) {
        std::string w(static_cast<size_t>(k), 'a');
        CHECK(classify_word(back, w) == classify_word(pq, w));
    }
    PromiseProblem by_descriptor =
        problem_from_json(json{{"family", "PQ"}, {"params", {{"p", 4}, {"q", 6}}}});
    CHECK(classify_word(by_descriptor, "aaaaaaa") == Membership::No);
}
