#include "promisefa/promise.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numbers>
#include <numeric>

#include "promisefa/words.hpp"

namespace promisefa {
namespace {

bool combine_and(bool x, bool y) { return x && y; }
bool combine_or(bool x, bool y) { return x || y; }

void check_symbols(const std::string& alphabet, std::string_view word) {
    for (char c : word)
        if (alphabet.find(c) == std::string::npos) throw UnknownSymbolError(c);
}

// Membership oracles for one side of a problem, usable uniformly for both
// flavors; regular components are lifted to the merged alphabet first.
std::function<bool(std::string_view)> yes_oracle(const PromiseProblem& p,
                                                 const std::string& alphabet) {
    if (p.is_regular()) {
        Dfa d = lift_to_alphabet(p.regular().yes, alphabet);
        return [d = std::move(d)](std::string_view w) { return accepts(d, w); };
    }
    return p.predicate().yes;
}

std::function<bool(std::string_view)> no_oracle(const PromiseProblem& p,
                                                const std::string& alphabet) {
    if (p.is_regular()) {
        Dfa d = lift_to_alphabet(p.regular().no, alphabet);
        return [d = std::move(d)](std::string_view w) { return accepts(d, w); };
    }
    return p.predicate().no;
}

int predicate_bound(const PromiseProblem& p, int fallback) {
    return p.is_regular() ? fallback : p.predicate().bound;
}

// Shape a^n b^m; fails on any other arrangement.
std::optional<std::pair<int, int>> parse_ab_block(std::string_view w) {
    size_t i = 0;
    while (i < w.size() && w[i] == 'a') ++i;
    size_t j = i;
    while (j < w.size() && w[j] == 'b') ++j;
    if (j != w.size()) return std::nullopt;
    return std::make_pair(static_cast<int>(i), static_cast<int>(j - i));
}

std::pair<long long, long long> count_ab(std::string_view w) {
    long long na = std::count(w.begin(), w.end(), 'a');
    long long nb = std::count(w.begin(), w.end(), 'b');
    return {na, nb};
}

}  // namespace

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "Yes";
        case Membership::No: return "No";
        default: return "OutsidePromise";
    }
}

const RegularProblem& PromiseProblem::regular() const {
    if (!is_regular()) throw NotRegularFlavorError(name);
    return std::get<RegularProblem>(flavor);
}

const PredicateProblem& PromiseProblem::predicate() const {
    return std::get<PredicateProblem>(flavor);
}

PromiseProblem make_regular_problem(std::string name, Dfa yes, Dfa no) {
    validate(yes);
    validate(no);
    std::string alphabet = merge_alphabets(yes.alphabet, no.alphabet);
    yes = lift_to_alphabet(yes, alphabet);
    no = lift_to_alphabet(no, alphabet);
    if (auto w = shortest_common_word(yes, no)) throw OverlappingComponentsError(*w);
    PromiseProblem p;
    p.name = std::move(name);
    p.alphabet = std::move(alphabet);
    p.flavor = RegularProblem{std::move(yes), std::move(no)};
    return p;
}

PromiseProblem make_predicate_problem(std::string name, std::string alphabet,
                                      std::function<bool(std::string_view)> yes,
                                      std::function<bool(std::string_view)> no, int bound,
                                      int disjoint_check_len) {
    for_each_word(alphabet, disjoint_check_len, [&](const std::string& w) {
        if (yes(w) && no(w)) throw OverlappingComponentsError(w);
        return true;
    });
    PromiseProblem p;
    p.name = std::move(name);
    p.alphabet = std::move(alphabet);
    p.flavor = PredicateProblem{std::move(yes), std::move(no), bound, disjoint_check_len};
    return p;
}

Membership classify_word(const PromiseProblem& p, std::string_view word) {
    check_symbols(p.alphabet, word);
    if (p.is_regular()) {
        if (accepts(p.regular().yes, word)) return Membership::Yes;
        if (accepts(p.regular().no, word)) return Membership::No;
        return Membership::OutsidePromise;
    }
    const PredicateProblem& pr = p.predicate();
    if (static_cast<int>(word.size()) > pr.bound)
        throw BeyondEnumerationBoundError(std::string(word), pr.bound);
    if (pr.yes(word)) return Membership::Yes;
    if (pr.no(word)) return Membership::No;
    return Membership::OutsidePromise;
}

PromiseProblem complement_pp(const PromiseProblem& p) {
    PromiseProblem out = p;
    out.name = "complement(" + p.name + ")";
    if (p.is_regular()) {
        out.flavor = RegularProblem{p.regular().no, p.regular().yes};
    } else {
        const PredicateProblem& pr = p.predicate();
        out.flavor = PredicateProblem{pr.no, pr.yes, pr.bound, pr.disjointness_checked_len};
    }
    return out;
}

PromiseProblem intersect_pp(const PromiseProblem& a, const PromiseProblem& b) {
    std::string alphabet = merge_alphabets(a.alphabet, b.alphabet);
    PromiseProblem out;
    out.name = "intersect(" + a.name + "," + b.name + ")";
    out.alphabet = alphabet;
    if (a.is_regular() && b.is_regular()) {
        out.flavor = RegularProblem{dfa_product(a.regular().yes, b.regular().yes, combine_and),
                                    dfa_product(a.regular().no, b.regular().no, combine_and)};
        return out;
    }
    auto ay = yes_oracle(a, alphabet), an = no_oracle(a, alphabet);
    auto by = yes_oracle(b, alphabet), bn = no_oracle(b, alphabet);
    int bound = std::min(predicate_bound(a, INT_MAX), predicate_bound(b, INT_MAX));
    // disjointness is inherited: the intersection's yes-side sits inside a's
    // yes-side and its no-side inside a's no-side
    out.flavor = PredicateProblem{
        [ay, by](std::string_view w) { return ay(w) && by(w); },
        [an, bn](std::string_view w) { return an(w) && bn(w); }, bound, 0};
    return out;
}

PromiseProblem union_pp(const PromiseProblem& a, const PromiseProblem& b) {
    std::string alphabet = merge_alphabets(a.alphabet, b.alphabet);
    PromiseProblem out;
    out.name = "union(" + a.name + "," + b.name + ")";
    out.alphabet = alphabet;
    if (a.is_regular() && b.is_regular()) {
        Dfa yes = dfa_product(a.regular().yes, b.regular().yes, combine_or);
        Dfa no = dfa_product(a.regular().no, b.regular().no, combine_or);
        if (auto w = shortest_common_word(yes, no)) throw UnionUndefinedError(*w);
        out.flavor = RegularProblem{std::move(yes), std::move(no)};
        return out;
    }
    auto ay = yes_oracle(a, alphabet), an = no_oracle(a, alphabet);
    auto by = yes_oracle(b, alphabet), bn = no_oracle(b, alphabet);
    auto yes = [ay, by](std::string_view w) { return ay(w) || by(w); };
    auto no = [an, bn](std::string_view w) { return an(w) || bn(w); };
    int bound = std::min(predicate_bound(a, INT_MAX), predicate_bound(b, INT_MAX));
    int check = std::min(bound, 12);
    for_each_word(alphabet, check, [&](const std::string& w) {
        if (yes(w) && no(w)) throw UnionUndefinedError(w);
        return true;
    });
    out.flavor = PredicateProblem{std::move(yes), std::move(no), bound, check};
    return out;
}

SubproblemResult is_subproblem(const PromiseProblem& a, const PromiseProblem& b, int bound) {
    std::string alphabet = merge_alphabets(a.alphabet, b.alphabet);
    SubproblemResult r;
    if (a.is_regular() && b.is_regular()) {
        r.exact = true;
        auto yes = dfa_language_included(a.regular().yes, b.regular().yes);
        if (!yes.included) {
            r.witness = yes.witness;
            return r;
        }
        auto no = dfa_language_included(a.regular().no, b.regular().no);
        if (!no.included) {
            r.witness = no.witness;
            return r;
        }
        r.holds = true;
        return r;
    }
    auto ay = yes_oracle(a, alphabet), an = no_oracle(a, alphabet);
    auto by = yes_oracle(b, alphabet), bn = no_oracle(b, alphabet);
    r.bound = std::min({bound, predicate_bound(a, INT_MAX), predicate_bound(b, INT_MAX)});
    r.holds = true;
    for_each_word(alphabet, r.bound, [&](const std::string& w) {
        if ((ay(w) && !by(w)) || (an(w) && !bn(w))) {
            r.holds = false;
            r.witness = w;
            return false;
        }
        return true;
    });
    return r;
}

PromiseProblem make_anl(int n, int l) {
    if (n < 2) throw InvalidParameterError("N must be at least 2");
    if (l <= 0 || l >= n) throw InvalidParameterError("l must satisfy 0 < l < N");
    return make_regular_problem("ANl(" + std::to_string(n) + "," + std::to_string(l) + ")",
                                make_cycle_dfa(n, {0}), make_cycle_dfa(n, {l}));
}

PromiseProblem make_anr1r2(int n, int r1, int r2) {
    if (n < 2) throw InvalidParameterError("N must be at least 2");
    if (r1 < 0 || r1 >= n || r2 < 0 || r2 >= n)
        throw InvalidParameterError("residues must lie in [0, N)");
    if (r1 == r2) throw InvalidParameterError("residues must differ");
    return make_regular_problem("ANr1r2(" + std::to_string(n) + "," + std::to_string(r1) + "," +
                                    std::to_string(r2) + ")",
                                make_cycle_dfa(n, {r1}), make_cycle_dfa(n, {r2}));
}

PromiseProblem make_al(int l) {
    if (l <= 0) throw InvalidParameterError("l must be positive");
    auto yes = [](std::string_view w) {
        auto [na, nb] = count_ab(w);
        return na == nb;
    };
    auto no = [l](std::string_view w) {
        auto [na, nb] = count_ab(w);
        return nb == na + l;
    };
    return make_predicate_problem("Al(" + std::to_string(l) + ")", "ab", yes, no, 32, 12);
}

PromiseProblem make_bl(int l) {
    if (l <= 0) throw InvalidParameterError("l must be positive");
    auto yes = [](std::string_view w) {
        auto s = parse_ab_block(w);
        return s && s->first == s->second;
    };
    auto no = [l](std::string_view w) {
        auto s = parse_ab_block(w);
        return s && s->second == s->first + l;
    };
    return make_predicate_problem("Bl(" + std::to_string(l) + ")", "ab", yes, no, 32, 12);
}

PromiseProblem make_c() {
    auto yes = [](std::string_view w) {
        auto s = parse_ab_block(w);
        return s && s->first == s->second;
    };
    auto no = [](std::string_view w) {
        auto s = parse_ab_block(w);
        return s && s->first != s->second;
    };
    return make_predicate_problem("C", "ab", yes, no, 32, 12);
}

PromiseProblem make_parity_eq(bool odd) {
    auto yes = [odd](std::string_view w) {
        auto s = parse_ab_block(w);
        return s && s->first == s->second && (s->first % 2 == 1) == odd;
    };
    auto no = [odd](std::string_view w) {
        auto s = parse_ab_block(w);
        if (!s || s->first == s->second) return false;
        // at least one exponent of the parity opposite to the yes-side
        bool has_opposite = (s->first % 2 == 1) != odd || (s->second % 2 == 1) != odd;
        return has_opposite;
    };
    return make_predicate_problem(odd ? "parity-eq(odd)" : "parity-eq(even)", "ab", yes, no, 32,
                                  12);
}

int ployeq_rounds(int n, int m, double eps) {
    if (n <= 0 || m <= 0) throw InvalidParameterError("block exponents must be positive");
    if (eps <= 0 || eps >= 1) throw InvalidParameterError("epsilon must lie in (0, 1)");
    double l = static_cast<double>(std::max(n, m));
    return static_cast<int>(std::ceil(2.0 * l * l * std::log(1.0 / eps)));
}

std::optional<PloyeqShape> parse_ployeq_word(std::string_view word) {
    if (word.empty() || word.back() != '#') return std::nullopt;
    size_t block_len = word.find('#');
    if (block_len == std::string_view::npos || word.size() % (block_len + 1) != 0)
        return std::nullopt;
    std::string_view block = word.substr(0, block_len);
    auto s = parse_ab_block(block);
    if (!s || s->first == 0 || s->second == 0) return std::nullopt;
    int t = static_cast<int>(word.size() / (block_len + 1));
    for (int i = 0; i < t; ++i)
        if (word.substr(i * (block_len + 1), block_len) != block ||
            word[i * (block_len + 1) + block_len] != '#')
            return std::nullopt;
    return PloyeqShape{s->first, s->second, t};
}

PromiseProblem make_ployeq(double eps) {
    if (eps <= 0 || eps > 1.0 / 3.0)
        throw InvalidParameterError("epsilon must lie in (0, 1/3]");
    auto shaped = [eps](std::string_view w, bool equal) {
        auto s = parse_ployeq_word(w);
        if (!s) return false;
        if ((s->reps_a == s->reps_b) != equal) return false;
        return s->blocks >= ployeq_rounds(s->reps_a, s->reps_b, eps);
    };
    auto yes = [shaped](std::string_view w) { return shaped(w, true); };
    auto no = [shaped](std::string_view w) { return shaped(w, false); };
    // yes and no are mutually exclusive on parsed shapes, so no enumeration
    // is needed to establish disjointness
    return make_predicate_problem("PloyEQ", "ab#", yes, no, 4096, 0);
}

std::pair<std::set<int>, std::set<int>> ap_residues(int p, double eps) {
    double hi = 1.0 - eps, lo = eps;
    std::set<int> yes, no;
    for (int l = 0; l < p; ++l) {
        double c = std::cos(l * std::numbers::pi / p);
        double c2 = c * c;
        if (std::abs(c2 - hi) < 1e-12 || std::abs(c2 - lo) < 1e-12)
            throw InvalidParameterError("acceptance probability sits on a decision threshold");
        if (c2 > hi) yes.insert(l);
        if (c2 < lo) no.insert(l);
    }
    return {std::move(yes), std::move(no)};
}

PromiseProblem make_ap(int p) {
    if (p < 6) throw InvalidParameterError("p must be at least 6");
    auto [yes, no] = ap_residues(p, 1.0 / 3.0);
    return make_regular_problem("Ap(" + std::to_string(p) + ")", make_cycle_dfa(p, yes),
                                make_cycle_dfa(p, no));
}

PromiseProblem make_ap_eps(int p, double eps) {
    if (eps <= 0 || eps >= 1) throw InvalidParameterError("epsilon must lie in (0, 1)");
    if (p < std::numbers::pi / std::acos(std::sqrt(1.0 - eps)))
        throw InvalidParameterError("p must be at least pi / arccos(sqrt(1 - epsilon))");
    auto [yes, no] = ap_residues(p, eps);
    return make_regular_problem("ApEps(" + std::to_string(p) + ")", make_cycle_dfa(p, yes),
                                make_cycle_dfa(p, no));
}

PromiseProblem make_pq_family(int p, int q) {
    if (p <= 2 || q <= 2) throw InvalidParameterError("p and q must exceed 2");
    if (std::gcd(p, q) != 2) throw InvalidParameterError("gcd(p, q) must equal 2");
    return make_regular_problem("PQ(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                make_cycle_dfa(p, {0}), make_cycle_dfa(q, {1}));
}

}  // namespace promisefa
