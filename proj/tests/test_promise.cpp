#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "promisefa/promise.hpp"
#include "promisefa/words.hpp"

using namespace promisefa;

namespace {

std::string reps(char c, int n) { return std::string(static_cast<size_t>(n), c); }

std::string ab_word(int n, int m) { return reps('a', n) + reps('b', m); }

}  // namespace

TEST_CASE("make_anl classification") {
    PromiseProblem p = make_anl(5, 2);
    CHECK(classify_word(p, "") == Membership::Yes);
    CHECK(classify_word(p, reps('a', 10)) == Membership::Yes);
    CHECK(classify_word(p, reps('a', 2)) == Membership::No);
    CHECK(classify_word(p, reps('a', 7)) == Membership::No);
    CHECK(classify_word(p, reps('a', 3)) == Membership::OutsidePromise);
    CHECK_THROWS_AS(make_anl(5, 0), InvalidParameterError);
    CHECK_THROWS_AS(make_anl(5, 5), InvalidParameterError);
}

TEST_CASE("make_anr1r2 classification") {
    PromiseProblem p = make_anr1r2(7, 1, 3);
    CHECK(classify_word(p, "a") == Membership::Yes);
    CHECK(classify_word(p, reps('a', 8)) == Membership::Yes);
    CHECK(classify_word(p, reps('a', 3)) == Membership::No);
    CHECK(classify_word(p, reps('a', 2)) == Membership::OutsidePromise);
    CHECK_THROWS_AS(make_anr1r2(7, 3, 3), InvalidParameterError);
}

TEST_CASE("count-based and block-based families over {a,b}") {
    PromiseProblem al = make_al(1);
    CHECK(classify_word(al, "") == Membership::Yes);
    CHECK(classify_word(al, "ba") == Membership::Yes);
    CHECK(classify_word(al, "b") == Membership::No);
    CHECK(classify_word(al, "abb") == Membership::No);
    CHECK(classify_word(al, "a") == Membership::OutsidePromise);

    PromiseProblem bl = make_bl(1);
    CHECK(classify_word(bl, "aabb") == Membership::Yes);
    CHECK(classify_word(bl, "aabbb") == Membership::No);
    CHECK(classify_word(bl, "ba") == Membership::OutsidePromise);
    CHECK(classify_word(bl, "aab") == Membership::OutsidePromise);

    PromiseProblem c = make_c();
    CHECK(classify_word(c, "") == Membership::Yes);
    CHECK(classify_word(c, "aabb") == Membership::Yes);
    CHECK(classify_word(c, "aab") == Membership::No);
    CHECK(classify_word(c, "abab") == Membership::OutsidePromise);
}

TEST_CASE("bl is a subproblem of al and of c") {
    SubproblemResult r = is_subproblem(make_bl(1), make_al(1), 12);
    CHECK(r.holds);
    SubproblemResult r2 = is_subproblem(make_bl(2), make_c(), 12);
    CHECK(r2.holds);
    SubproblemResult r3 = is_subproblem(make_al(1), make_bl(1), 12);
    CHECK(!r3.holds);
    REQUIRE(r3.witness.has_value());
    CHECK(*r3.witness == "ba");
}

TEST_CASE("parity split of c and its union") {
    PromiseProblem odd = make_parity_eq(true);
    PromiseProblem even = make_parity_eq(false);
    CHECK(classify_word(odd, "ab") == Membership::Yes);
    CHECK(classify_word(odd, "aabb") == Membership::OutsidePromise);
    CHECK(classify_word(even, "aabb") == Membership::Yes);
    CHECK(classify_word(even, "ab") == Membership::OutsidePromise);
    CHECK(classify_word(odd, "aab") == Membership::No);
    CHECK(classify_word(even, "abb") == Membership::No);

    PromiseProblem joined = union_pp(odd, even);
    PromiseProblem c = make_c();
    for_each_word("ab", 10, [&](const std::string& w) {
        CHECK(classify_word(joined, w) == classify_word(c, w));
        return true;
    });
}

TEST_CASE("set operations on regular problems") {
    PromiseProblem a = make_anl(4, 1);
    PromiseProblem comp = complement_pp(a);
    CHECK(classify_word(comp, "") == Membership::No);
    CHECK(classify_word(comp, "a") == Membership::Yes);

    PromiseProblem b = make_anl(6, 2);
    PromiseProblem meet = intersect_pp(a, b);
    for_each_word("a", 30, [&](const std::string& w) {
        bool yes = classify_word(a, w) == Membership::Yes && classify_word(b, w) == Membership::Yes;
        bool no = classify_word(a, w) == Membership::No && classify_word(b, w) == Membership::No;
        Membership m = classify_word(meet, w);
        CHECK((m == Membership::Yes) == yes);
        CHECK((m == Membership::No) == no);
        return true;
    });
    CHECK_THROWS_AS(union_pp(a, complement_pp(a)), UnionUndefinedError);
}

TEST_CASE("ployeq family shape and rounds") {
    auto shape = parse_ployeq_word("aab#aab#aab#");
    REQUIRE(shape.has_value());
    CHECK(shape->reps_a == 2);
    CHECK(shape->reps_b == 1);
    CHECK(shape->blocks == 3);
    CHECK(!parse_ployeq_word("aab#ab#").has_value());
    CHECK(!parse_ployeq_word("aab").has_value());
    CHECK(!parse_ployeq_word("#").has_value());

    int t = ployeq_rounds(2, 1, 1.0 / 3.0);
    CHECK(t == static_cast<int>(std::ceil(2 * 4 * std::log(3.0))));
    PromiseProblem p = make_ployeq(1.0 / 3.0);
    std::string yes_word;
    for (int i = 0; i < ployeq_rounds(2, 2, 1.0 / 3.0); ++i) yes_word += "aabb#";
    CHECK(classify_word(p, yes_word) == Membership::Yes);
    std::string no_word;
    for (int i = 0; i < ployeq_rounds(2, 1, 1.0 / 3.0); ++i) no_word += "aab#";
    CHECK(classify_word(p, no_word) == Membership::No);
    CHECK(classify_word(p, "aabb#") == Membership::OutsidePromise);  // too few rounds
}

TEST_CASE("ap residues at eps = 1/3") {
    auto [yes, no] = ap_residues(7, 1.0 / 3.0);
    CHECK(yes == std::set<int>{0, 1, 6});
    CHECK(no == std::set<int>{3, 4});
    PromiseProblem p = make_ap(7);
    CHECK(classify_word(p, reps('a', 8)) == Membership::Yes);
    CHECK(classify_word(p, reps('a', 10)) == Membership::No);
    CHECK(classify_word(p, reps('a', 2)) == Membership::OutsidePromise);
    CHECK_THROWS_AS(make_ap(5), InvalidParameterError);
}

TEST_CASE("ap_eps threshold guard") {
    PromiseProblem p = make_ap_eps(12, 0.2);
    CHECK(classify_word(p, "") == Membership::Yes);
    CHECK_THROWS_AS(make_ap_eps(3, 0.25), InvalidParameterError);
}

TEST_CASE("pq family") {
    PromiseProblem p = make_pq_family(4, 6);
    CHECK(classify_word(p, "") == Membership::Yes);
    CHECK(classify_word(p, reps('a', 8)) == Membership::Yes);
    CHECK(classify_word(p, reps('a', 7)) == Membership::No);
    CHECK(classify_word(p, reps('a', 13)) == Membership::No);
    CHECK(classify_word(p, reps('a', 2)) == Membership::OutsidePromise);
    CHECK_THROWS_AS(make_pq_family(4, 8), InvalidParameterError);
}

TEST_CASE("make_regular_problem rejects overlap with a witness") {
    Dfa yes = make_cycle_dfa(2, {0});
    Dfa no = make_cycle_dfa(3, {0});
    CHECK_THROWS_AS(make_regular_problem("x", yes, no), OverlappingComponentsError);
}

TEST_CASE("predicate problems refuse words beyond their bound") {
    PromiseProblem c = make_c();
    std::string long_word = reps('a', 40) + reps('b', 40);
    CHECK_THROWS_AS(classify_word(c, long_word), BeyondEnumerationBoundError);
    CHECK(classify_word(c, ab_word(16, 16)) == Membership::Yes);
}
