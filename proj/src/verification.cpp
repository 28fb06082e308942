#include "promisefa/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "promisefa/complexity.hpp"
#include "promisefa/decision.hpp"
#include "promisefa/json_io.hpp"
#include "promisefa/quantum.hpp"
#include "promisefa/words.hpp"

namespace promisefa {
namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string quote_word(const std::string& w) { return "\"" + w + "\""; }

void add(VerificationReport& r, std::string name, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// Parity-tracking pvDFA over {a,b}: state index 2*(#a mod 2) + (#b mod 2).
PvDfa parity_pvdfa(std::set<int> accepting, std::set<int> rejecting) {
    PvDfa m;
    m.alphabet = "ab";
    m.num_states = 4;
    m.initial = 0;
    m.transitions['a'] = {2, 3, 0, 1};
    m.transitions['b'] = {1, 0, 3, 2};
    m.accepting = std::move(accepting);
    m.rejecting = std::move(rejecting);
    return m;
}

std::vector<PvDfa> recognizer_pool() {
    std::vector<PvDfa> pool;
    pool.push_back(make_cycle_pvdfa(2, {0}, {1}));
    pool.push_back(make_cycle_pvdfa(3, {0}, {1}));
    pool.push_back(make_cycle_pvdfa(4, {0}, {1}));
    pool.push_back(make_cycle_pvdfa(5, {0}, {2}));
    pool.push_back(make_cycle_pvdfa(7, {0}, {3}));
    pool.push_back(build_pq_cycle_pvdfa(4, 6));
    pool.push_back(parity_pvdfa({3}, {1, 2}));
    pool.push_back(parity_pvdfa({0}, {1, 2}));
    pool.push_back(parity_pvdfa({0, 3}, {1, 2}));
    return pool;
}

Verdict set_level_intersection(Verdict a, Verdict b) {
    if (a == Verdict::Accept && b == Verdict::Accept) return Verdict::Accept;
    if (a == Verdict::Reject && b == Verdict::Reject) return Verdict::Reject;
    return Verdict::Neutral;
}

Verdict set_level_union(Verdict a, Verdict b) {
    if (a == Verdict::Accept || b == Verdict::Accept) return Verdict::Accept;
    if (a == Verdict::Reject || b == Verdict::Reject) return Verdict::Reject;
    return Verdict::Neutral;
}

void suite_t3(VerificationReport& r, const TheoremParams&) {
    bool round_trip = true;
    std::string bad;
    for (const PvDfa& m : recognizer_pool()) {
        auto [yes, no] = component_dfas(m);
        PvDfa rebuilt = recognizer_from_components(yes, no);
        if (!pvdfa_equivalent(m, rebuilt).equivalent) {
            round_trip = false;
            bad = "machine with " + std::to_string(m.num_states) + " states";
            break;
        }
    }
    add(r, "rebuilding a recognizer from its component DFAs preserves the problem", round_trip,
        bad);

    bool raised = false;
    std::string witness;
    try {
        recognizer_from_components(make_cycle_dfa(2, {0}), make_cycle_dfa(3, {0}));
    } catch (const OverlappingComponentsError& e) {
        raised = true;
        witness = e.witness;
    }
    add(r, "overlapping components are refused with a witness", raised && witness.empty(),
        "witness " + quote_word(witness));
}

void suite_t5(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(8);
    bool involution = true, flips = true;
    std::string bad;
    for (const PvDfa& m : recognizer_pool()) {
        if (!(complement(complement(m)) == m)) involution = false;
        PvDfa c = complement(m);
        for_each_word(m.alphabet, max_len, [&](const std::string& w) {
            Verdict v = classify(m, w), vc = classify(c, w);
            bool ok = (v == Verdict::Accept && vc == Verdict::Reject) ||
                      (v == Verdict::Reject && vc == Verdict::Accept) ||
                      (v == Verdict::Neutral && vc == Verdict::Neutral);
            if (!ok) {
                flips = false;
                bad = quote_word(w);
            }
            return ok;
        });
    }
    add(r, "complement is an involution", involution);
    add(r, "complement swaps Accept and Reject and fixes Neutral, words <= " +
               std::to_string(max_len),
        flips, bad);
}

void suite_t6(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(8);
    auto pool = recognizer_pool();
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < pool.size() && ok; ++i)
        for (size_t j = 0; j < pool.size() && ok; ++j) {
            PvDfa prod = intersect_recognizers(pool[i], pool[j]);
            PvDfa a = lift_to_alphabet(pool[i], prod.alphabet);
            PvDfa b = lift_to_alphabet(pool[j], prod.alphabet);
            for_each_word(prod.alphabet, max_len, [&](const std::string& w) {
                if (classify(prod, w) != set_level_intersection(classify(a, w), classify(b, w))) {
                    ok = false;
                    bad = quote_word(w);
                }
                return ok;
            });
        }
    add(r, "intersection product matches the set-level verdicts, words <= " +
               std::to_string(max_len),
        ok, bad);
}

void suite_t8(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(8);
    auto pool = recognizer_pool();
    bool ok = true, witness_ok = true;
    int defined = 0, refused = 0;
    std::string bad;
    for (size_t i = 0; i < pool.size() && ok && witness_ok; ++i)
        for (size_t j = 0; j < pool.size() && ok && witness_ok; ++j) {
            try {
                PvDfa prod = union_recognizers(pool[i], pool[j]);
                ++defined;
                PvDfa a = lift_to_alphabet(pool[i], prod.alphabet);
                PvDfa b = lift_to_alphabet(pool[j], prod.alphabet);
                for_each_word(prod.alphabet, max_len, [&](const std::string& w) {
                    if (classify(prod, w) != set_level_union(classify(a, w), classify(b, w))) {
                        ok = false;
                        bad = quote_word(w);
                    }
                    return ok;
                });
            } catch (const UnionUndefinedError& e) {
                ++refused;
                std::string alphabet = merge_alphabets(pool[i].alphabet, pool[j].alphabet);
                PvDfa a = lift_to_alphabet(pool[i], alphabet);
                PvDfa b = lift_to_alphabet(pool[j], alphabet);
                bool in_yes = classify(a, e.witness) == Verdict::Accept ||
                              classify(b, e.witness) == Verdict::Accept;
                bool in_no = classify(a, e.witness) == Verdict::Reject ||
                             classify(b, e.witness) == Verdict::Reject;
                if (!(in_yes && in_no)) {
                    witness_ok = false;
                    bad = quote_word(e.witness);
                }
            }
        }
    add(r, "defined unions match the set-level verdicts, words <= " + std::to_string(max_len), ok,
        bad + " (" + std::to_string(defined) + " pairs defined)");
    add(r, "refused unions carry a word in the forbidden intersection", witness_ok,
        bad + " (" + std::to_string(refused) + " pairs refused)");

    bool self_refused = false;
    try {
        union_recognizers(pool[0], complement(pool[0]));
    } catch (const UnionUndefinedError&) {
        self_refused = true;
    }
    add(r, "union with the complement is undefined", self_refused);
}

void suite_pl1(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(10);
    bool ok = true;
    std::string bad;
    long long words = 0;
    for (const PvDfa& m : recognizer_pool()) {
        for_each_word(m.alphabet, max_len, [&](const std::string& w) {
            if (static_cast<int>(w.size()) < m.num_states) return true;
            Verdict v = classify(m, w);
            if (v == Verdict::Neutral) return true;
            ++words;
            PumpSplit s = pump_decompose(m, w);
            if (s.y.empty() || s.x.size() + s.y.size() > static_cast<size_t>(m.num_states)) {
                ok = false;
                bad = quote_word(w);
                return false;
            }
            for (int t = 0; t <= 5; ++t) {
                std::string pumped = s.x;
                for (int i = 0; i < t; ++i) pumped += s.y;
                pumped += s.z;
                if (classify(m, pumped) != v) {
                    ok = false;
                    bad = quote_word(w) + " pumped t=" + std::to_string(t);
                    return false;
                }
            }
            return true;
        });
        if (!ok) break;
    }
    add(r, "pumped words stay in the same component for every recognized word", ok,
        bad.empty() ? std::to_string(words) + " words checked" : bad);
}

void suite_pl2(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(16);
    struct Case {
        PromiseProblem problem;
        PvDfa solver;
    };
    std::vector<Case> cases;
    cases.push_back({make_anl(4, 1), *compute_ss_bruteforce(make_anl(4, 1), 3, 16).witness});
    cases.push_back({make_ap(7), as_pvdfa(build_ap_solver_dfa(7))});
    cases.push_back({make_pq_family(4, 6), build_pq_cycle_pvdfa(4, 6)});

    bool ok = true;
    std::string bad;
    long long words = 0;
    for (const Case& c : cases) {
        for_each_word(c.problem.alphabet, max_len, [&](const std::string& w) {
            if (static_cast<int>(w.size()) < c.solver.num_states) return true;
            Membership m = classify_word(c.problem, w);
            if (m == Membership::OutsidePromise) return true;
            ++words;
            PumpSplit s = pump_decompose(c.solver, w);
            Membership opposite = m == Membership::Yes ? Membership::No : Membership::Yes;
            for (int t = 0; t <= 5; ++t) {
                std::string pumped = s.x;
                for (int i = 0; i < t; ++i) pumped += s.y;
                pumped += s.z;
                if (classify_word(c.problem, pumped) == opposite) {
                    ok = false;
                    bad = quote_word(w) + " pumped t=" + std::to_string(t);
                    return false;
                }
            }
            return true;
        });
        if (!ok) break;
    }
    add(r, "pumped promise words never land in the opposite component", ok,
        bad.empty() ? std::to_string(words) + " words checked" : bad);

    SsResult ss = compute_ss_bruteforce(make_c(), 3, 12);
    add(r, "no pvDFA with up to 3 states solves the equal-blocks problem (words <= 12)",
        !ss.found);
}

void check_report_bounds(VerificationReport& r, const ComplexityReport& c) {
    for (const BoundCheck& b : c.checks)
        add(r, c.problem + ": " + b.name, b.holds,
            std::to_string(b.lhs) + " vs " + std::to_string(b.rhs) + (b.tight ? " (tight)" : ""));
}

void suite_t9(VerificationReport& r, const TheoremParams& params) {
    if (params.family) {
        nlohmann::json args = nlohmann::json::object();
        if (params.n) args["N"] = *params.n;
        if (params.l) args["l"] = *params.l;
        if (params.p) args["p"] = *params.p;
        if (params.q) args["q"] = *params.q;
        if (params.r1) args["r1"] = *params.r1;
        if (params.r2) args["r2"] = *params.r2;
        if (params.eps) args["eps"] = *params.eps;
        check_report_bounds(r, verify_bounds(make_family(*params.family, args)));
        return;
    }
    if (params.n || params.l) {
        check_report_bounds(r, verify_bounds(make_anl(params.n.value_or(5),
                                                      params.l.value_or(2))));
        return;
    }
    check_report_bounds(r, verify_bounds(make_anl(5, 2)));
    check_report_bounds(r, verify_bounds(make_pq_family(4, 6)));
    check_report_bounds(r, verify_bounds(make_ap(7)));
}

void suite_t10(VerificationReport& r, const TheoremParams& params) {
    std::vector<std::pair<int, int>> cases;
    if (params.n || params.l)
        cases.emplace_back(params.n.value_or(5), params.l.value_or(2));
    else
        cases = {{5, 2}, {7, 3}};
    for (auto [n, l] : cases) {
        SrResult sr = compute_sr(make_anl(n, l));
        add(r, "sr of the residue family with N=" + std::to_string(n) + " equals N",
            sr.size == n, "sr = " + std::to_string(sr.size));
    }
}

void suite_t11(VerificationReport& r, const TheoremParams& params) {
    int p = params.p.value_or(4), q = params.q.value_or(6);
    PromiseProblem problem = make_pq_family(p, q);
    SrResult sr = compute_sr(problem);
    add(r, "sr equals pq/2", sr.size == p * q / 2, "sr = " + std::to_string(sr.size));
    ComplexityReport c = verify_bounds(problem);
    add(r, "component sizes are p and q", c.s_yes == p && c.s_no == q,
        std::to_string(c.s_yes) + ", " + std::to_string(c.s_no));
    PvDfa cycle = build_pq_cycle_pvdfa(p, q);
    add(r, "the pq/2-state cycle machine is already minimal",
        minimize_pvdfa(cycle).num_states == cycle.num_states,
        std::to_string(cycle.num_states) + " states");
}

void suite_t12(VerificationReport& r, const TheoremParams& params) {
    int n = params.n.value_or(4), l = params.l.value_or(1);
    int k = params.max_states.value_or(3), len = params.max_len.value_or(16);
    PromiseProblem problem = make_anl(n, l);
    SsResult ss = compute_ss_bruteforce(problem, k, len);
    ComplexityReport c = verify_bounds(problem);
    add(r, "brute-force search finds a solving machine", ss.found,
        ss.found ? "ss = " + std::to_string(ss.size) : "not found up to " + std::to_string(k));
    if (ss.found)
        add(r, "ss <= min(s_yes, s_no)", ss.size <= std::min(c.s_yes, c.s_no),
            std::to_string(ss.size) + " vs " + std::to_string(std::min(c.s_yes, c.s_no)));
    if (n == 4 && l == 1)
        add(r, "the even/odd split is solved by a two-state machine", ss.found && ss.size == 2,
            ss.found ? "ss = " + std::to_string(ss.size) : "not found");
}

void suite_t14(VerificationReport& r, const TheoremParams& params) {
    int l = params.l.value_or(1);
    int max_len = params.max_len.value_or(14);
    double tol = params.tolerance.value_or(1e-9);
    PvMo1Qfa m = build_ml(l);

    Eigen::MatrixXcd prod = m.unitaries.at('a') * m.unitaries.at('b');
    add(r, "the two letter unitaries are mutually inverse",
        (prod - Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-12);
    Eigen::MatrixXcd ends = m.unitaries.at(kRightMarker) * m.unitaries.at(kLeftMarker);
    add(r, "the end-marker unitaries are mutually inverse",
        (ends - Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-12);

    bool accept_iff = true, reject_if = true, reject_only_if = true, others_bounded = true;
    std::string bad_accept, bad_reject, bad_reject_only, bad_other;
    for_each_word("ab", max_len, [&](const std::string& w) {
        long long na = std::count(w.begin(), w.end(), 'a');
        long long nb = std::count(w.begin(), w.end(), 'b');
        auto [pa, pr] = pvmo1qfa_probs(m, w);
        bool yes = na == nb, no = nb == na + l;
        if ((pa >= 1 - tol) != yes) {
            accept_iff = false;
            bad_accept = quote_word(w) + " p_accept = " + fmt(pa);
        }
        if (no && pr < 1 - tol) {
            reject_if = false;
            bad_reject = quote_word(w) + " p_reject = " + fmt(pr);
        }
        if (!no && pr >= 1 - tol && reject_only_if) {
            reject_only_if = false;
            bad_reject_only = quote_word(w) + " p_reject = " + fmt(pr);
        }
        if (!yes && !no && std::max(pa, pr) > 1 - 1e-6 && others_bounded) {
            others_bounded = false;
            bad_other = quote_word(w) + " max prob = " + fmt(std::max(pa, pr));
        }
        return accept_iff && reject_if;
    });
    std::string scope = ", words <= " + std::to_string(max_len);
    add(r, "accepts with certainty exactly when #a = #b" + scope, accept_iff, bad_accept);
    add(r, "rejects with certainty when #b = #a + l" + scope, reject_if, bad_reject);
    add(r, "rejects with certainty only when #b = #a + l" + scope, reject_only_if,
        bad_reject_only);
    add(r, "all other words stay below certainty by at least 1e-6" + scope, others_bounded,
        bad_other);
}

void suite_t17(VerificationReport& r, const TheoremParams& params) {
    int max_len = params.max_len.value_or(12);
    auto pool = recognizer_pool();

    bool equiv_ok = true, perturb_ok = true;
    std::string bad;
    for (const PvDfa& m : pool) {
        PvDfa minimal = minimize_pvdfa(m);
        if (!pvdfa_equivalent(m, minimal).equivalent) {
            equiv_ok = false;
            bad = std::to_string(m.num_states) + "-state machine vs its minimization";
            break;
        }
        PvDfa perturbed = minimal;
        if (perturbed.accepting.count(0)) {
            perturbed.accepting.erase(0);
        } else {
            perturbed.rejecting.erase(0);
            perturbed.accepting.insert(0);
        }
        EquivalenceResult e = pvdfa_equivalent(minimal, perturbed);
        bool witness_real =
            !e.equivalent && e.witness &&
            classify(minimal, *e.witness) != classify(perturbed, *e.witness);
        if (!witness_real) {
            perturb_ok = false;
            bad = "perturbed " + std::to_string(m.num_states) + "-state machine";
            break;
        }
    }
    add(r, "every machine is equivalent to its minimization", equiv_ok, bad);
    add(r, "perturbed machines are inequivalent with a verified witness", perturb_ok, bad);

    bool compare_ok = true;
    for (size_t i = 0; i < pool.size() && compare_ok; ++i)
        for (size_t j = 0; j < pool.size() && compare_ok; ++j) {
            CompareResult got = pvdfa_compare(pool[i], pool[j]);
            std::string alphabet = merge_alphabets(pool[i].alphabet, pool[j].alphabet);
            PvDfa a = lift_to_alphabet(pool[i], alphabet);
            PvDfa b = lift_to_alphabet(pool[j], alphabet);
            bool ab = true, ba = true;
            for_each_word(alphabet, max_len, [&](const std::string& w) {
                Verdict va = classify(a, w), vb = classify(b, w);
                if (va != Verdict::Neutral && va != vb) ab = false;
                if (vb != Verdict::Neutral && vb != va) ba = false;
                return ab || ba;
            });
            Order expected = ab && ba   ? Order::Equal
                             : ab       ? Order::Less
                             : ba       ? Order::Greater
                                        : Order::Incomparable;
            if (got.relation != expected) {
                compare_ok = false;
                bad = std::string("pair ") + std::to_string(i) + "," + std::to_string(j) +
                      ": got " + to_string(got.relation) + ", expected " + to_string(expected);
            }
        }
    add(r, "ordering verdicts agree with word-level comparison, words <= " +
               std::to_string(max_len),
        compare_ok, bad);
}

void suite_t18(VerificationReport& r, const TheoremParams& params) {
    double eps = params.eps.value_or(1.0 / 3.0);
    double tol = params.tolerance.value_or(1e-9);
    Qcfa1 m = build_ployeq_qcfa(eps);
    double theta = std::numbers::sqrt2 * std::numbers::pi;

    bool yes_ok = true, no_ok = true, closed_ok = true;
    std::string bad_yes, bad_no, bad_closed;
    for (int n = 1; n <= 4; ++n)
        for (int mm = 1; mm <= 4; ++mm) {
            int t = ployeq_rounds(n, mm, eps);
            std::string block = std::string(n, 'a') + std::string(mm, 'b') + "#";
            std::string word;
            for (int i = 0; i < t; ++i) word += block;
            auto [pa, pr] = qcfa_exact_probs(m, word);
            double c = std::cos((mm - n) * theta);
            double closed_accept = std::pow(c * c, t);
            if (std::abs(pa - closed_accept) > tol) {
                closed_ok = false;
                bad_closed = "(n,m,t) = (" + std::to_string(n) + "," + std::to_string(mm) + "," +
                             std::to_string(t) + "), enumerated " + fmt(pa) + " vs closed form " +
                             fmt(closed_accept);
            }
            if (n == mm) {
                if (std::abs(pa - 1.0) > tol) {
                    yes_ok = false;
                    bad_yes = "(n,t) = (" + std::to_string(n) + "," + std::to_string(t) +
                              "), p_accept = " + fmt(pa);
                }
            } else if (pr < 1 - eps - tol) {
                no_ok = false;
                bad_no = "(n,m,t) = (" + std::to_string(n) + "," + std::to_string(mm) + "," +
                         std::to_string(t) + "), p_reject = " + fmt(pr);
            }
        }
    add(r, "yes-instances are accepted with certainty", yes_ok, bad_yes);
    add(r, "no-instances are rejected with probability at least 1 - eps", no_ok, bad_no);
    add(r, "branch enumeration matches the closed-form accept probability", closed_ok,
        bad_closed);

    bool per_round = true;
    std::string bad_round;
    for (int d = 1; d <= 10; ++d) {
        double s = std::sin(d * theta);
        if (!(s * s > 1.0 / (2.0 * d * d + 1))) {
            per_round = false;
            bad_round = "d = " + std::to_string(d);
        }
    }
    add(r, "per-round rejection bound sin^2(d sqrt(2) pi) > 1/(2d^2+1), d = 1..10", per_round,
        bad_round);
}

void suite_t19(VerificationReport& r, const TheoremParams& params) {
    int p = params.p.value_or(7);
    double tol = params.tolerance.value_or(1e-9);
    Mo1Qfa m = build_ap(p);
    PromiseProblem problem = make_ap(p);

    bool formula_ok = true, error_ok = true;
    std::string bad_formula, bad_error;
    for (int k = 0; k <= 4 * p; ++k) {
        std::string word(k, 'a');
        double prob = mo1qfa_accept_prob(m, word);
        double expected = std::pow(std::cos(k * std::numbers::pi / p), 2);
        if (std::abs(prob - expected) > tol) {
            formula_ok = false;
            bad_formula = "k = " + std::to_string(k) + ", " + fmt(prob) + " vs " + fmt(expected);
        }
        Membership mem = classify_word(problem, word);
        if ((mem == Membership::Yes && prob < 2.0 / 3.0) ||
            (mem == Membership::No && prob > 1.0 / 3.0)) {
            error_ok = false;
            bad_error = "k = " + std::to_string(k) + ", p_accept = " + fmt(prob);
        }
    }
    add(r, "accept probability of a^k equals cos^2(k pi / p), k <= 4p", formula_ok, bad_formula);
    add(r, "error at most 1/3 on every promise word, k <= 4p", error_ok, bad_error);

    int k = (p + 1) / 2;
    double prob = mo1qfa_accept_prob(m, std::string(k, 'a'));
    add(r, "the halfway word a^ceil(p/2) is accepted with probability at most 1/3",
        prob <= 1.0 / 3.0 + tol, "p_accept = " + fmt(prob));
}

void suite_t20(VerificationReport& r, const TheoremParams& params) {
    int p = params.p.value_or(7);
    int r1 = params.r1.value_or(1), r2 = params.r2.value_or(3);
    Dfa solver = build_ap_solver_dfa(p);
    PromiseProblem problem = make_ap(p);

    bool solves = true;
    std::string bad;
    for (int k = 0; k <= 4 * p; ++k) {
        std::string word(k, 'a');
        Membership mem = classify_word(problem, word);
        if (mem == Membership::OutsidePromise) continue;
        bool acc = accepts(solver, word);
        if (acc != (mem == Membership::Yes)) {
            solves = false;
            bad = "k = " + std::to_string(k);
        }
    }
    add(r, "the p-state cycle DFA solves the threshold problem, k <= 4p", solves, bad);
    add(r, "the solver has exactly p states", solver.num_states == p,
        std::to_string(solver.num_states) + " states");

    SubproblemResult sub = is_subproblem(make_anr1r2(p, r1, r2), problem, 30);
    add(r, "the two-residue problem is a subproblem of the threshold problem", sub.holds,
        sub.exact ? "exact inclusion check" : "checked up to length " + std::to_string(sub.bound));
}

}  // namespace

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"T3",  "T5",  "T6",  "T8",  "PL1",
                                                 "PL2", "T9",  "T10", "T11", "T12",
                                                 "T14", "T17", "T18", "T19-construct",
                                                 "T20-construct"};
    return ids;
}

VerificationReport verify_theorem(const std::string& id, const TheoremParams& params) {
    VerificationReport r;
    r.id = id;
    if (id == "T3")
        suite_t3(r, params);
    else if (id == "T5")
        suite_t5(r, params);
    else if (id == "T6")
        suite_t6(r, params);
    else if (id == "T8")
        suite_t8(r, params);
    else if (id == "PL1")
        suite_pl1(r, params);
    else if (id == "PL2")
        suite_pl2(r, params);
    else if (id == "T9")
        suite_t9(r, params);
    else if (id == "T10")
        suite_t10(r, params);
    else if (id == "T11")
        suite_t11(r, params);
    else if (id == "T12")
        suite_t12(r, params);
    else if (id == "T14")
        suite_t14(r, params);
    else if (id == "T17")
        suite_t17(r, params);
    else if (id == "T18")
        suite_t18(r, params);
    else if (id == "T19-construct")
        suite_t19(r, params);
    else if (id == "T20-construct")
        suite_t20(r, params);
    else
        throw UnknownTheoremIdError(id);
    return r;
}

}  // namespace promisefa
