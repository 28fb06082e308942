#include "promisefa/complexity.hpp"

#include <algorithm>
#include <numeric>

#include "promisefa/words.hpp"

namespace promisefa {
namespace {

// Enumerates all transition tables on exactly n states over the alphabet, in
// canonical first-visit order: filling cells row by row, a cell may point at
// most one past the highest state index referenced so far, and every state
// must end up referenced. fn receives transitions[symbol][state]; returning
// false stops the enumeration.
template <class Fn>
bool enumerate_tables(const std::string& alphabet, int n, Fn&& fn) {
    int k = static_cast<int>(alphabet.size());
    std::vector<int> cells(static_cast<size_t>(n) * k, 0);
    bool keep_going = true;
    auto rec = [&](auto&& self, int idx, int max_used) -> void {
        if (!keep_going) return;
        if (idx == n * k) {
            if (max_used != n - 1) return;
            std::map<char, std::vector<int>> table;
            for (int s = 0; s < k; ++s) {
                auto& col = table[alphabet[s]];
                col.resize(n);
                for (int q = 0; q < n; ++q) col[q] = cells[static_cast<size_t>(q) * k + s];
            }
            if (!fn(table)) keep_going = false;
            return;
        }
        // states must be introduced in order; also give up when the remaining
        // cells cannot reference all states
        int remaining = n * k - idx;
        if (n - 1 - max_used > remaining) return;
        int state = idx / k;
        if (state > max_used) return;  // current row's state was never reached
        int hi = std::min(n - 1, max_used + 1);
        for (int t = 0; t <= hi; ++t) {
            cells[idx] = t;
            self(self, idx + 1, std::max(max_used, t));
            if (!keep_going) return;
        }
    };
    rec(rec, 0, 0);
    return keep_going;
}

// Collects, for a candidate transition table, which states must accept and
// which must reject. Returns false on a direct conflict.
struct Requirements {
    std::set<int> must_accept;
    std::set<int> must_reject;
    bool consistent() const {
        return std::none_of(must_accept.begin(), must_accept.end(),
                            [&](int s) { return must_reject.count(s); });
    }
};

// Exact requirements for a Regular problem: explore the product of the
// candidate with both component DFAs; any reachable triple whose component
// state accepts pins down the candidate state's classification.
Requirements regular_requirements(const std::map<char, std::vector<int>>& table, int n,
                                  const Dfa& yes, const Dfa& no) {
    Requirements req;
    int ny = yes.num_states, nn = no.num_states;
    std::vector<char> seen(static_cast<size_t>(n) * ny * nn, 0);
    auto idx = [&](int s, int y, int z) { return (static_cast<size_t>(s) * ny + y) * nn + z; };
    std::vector<std::tuple<int, int, int>> stack{{0, yes.initial, no.initial}};
    seen[idx(0, yes.initial, no.initial)] = 1;
    while (!stack.empty()) {
        auto [s, y, z] = stack.back();
        stack.pop_back();
        if (yes.accepting.count(y)) req.must_accept.insert(s);
        if (no.accepting.count(z)) req.must_reject.insert(s);
        for (char c : yes.alphabet) {
            int s2 = table.at(c)[s], y2 = yes.transitions.at(c)[y], z2 = no.transitions.at(c)[z];
            if (!seen[idx(s2, y2, z2)]) {
                seen[idx(s2, y2, z2)] = 1;
                stack.emplace_back(s2, y2, z2);
            }
        }
    }
    return req;
}

Requirements bounded_requirements(const std::map<char, std::vector<int>>& table,
                                  const PromiseProblem& p, int verify_len) {
    Requirements req;
    for_each_word(p.alphabet, verify_len, [&](const std::string& w) {
        Membership m = classify_word(p, w);
        if (m == Membership::OutsidePromise) return true;
        int s = 0;
        for (char c : w) s = table.at(c)[s];
        if (m == Membership::Yes)
            req.must_accept.insert(s);
        else
            req.must_reject.insert(s);
        // stop as soon as some state is pinned both ways
        return !(req.must_accept.count(s) && req.must_reject.count(s));
    });
    return req;
}

}  // namespace

SrResult compute_sr(const PromiseProblem& p) {
    const RegularProblem& r = p.regular();
    PvDfa machine =
        recognizer_from_components(minimize_dfa(r.yes), minimize_dfa(r.no));
    PvDfa minimal = minimize_pvdfa(machine);
    return {minimal.num_states, std::move(minimal)};
}

SsResult compute_ss_bruteforce(const PromiseProblem& p, int max_states, int verify_len) {
    int cap = p.alphabet.size() == 1 ? 12 : 6;
    if (max_states > cap)
        throw SearchBudgetExceededError("state budget exceeds the enumeration cap of " +
                                        std::to_string(cap));
    if (max_states < 1) throw InvalidParameterError("max_states must be positive");

    SsResult result;
    result.searched_up_to = max_states;
    result.verify_len = verify_len;
    result.exact = p.is_regular();
    std::optional<std::pair<Dfa, Dfa>> components;
    if (p.is_regular()) components = {minimize_dfa(p.regular().yes), minimize_dfa(p.regular().no)};

    for (int n = 1; n <= max_states && !result.found; ++n) {
        enumerate_tables(p.alphabet, n, [&](const std::map<char, std::vector<int>>& table) {
            Requirements req = components
                                   ? regular_requirements(table, n, components->first,
                                                          components->second)
                                   : bounded_requirements(table, p, verify_len);
            if (!req.consistent()) return true;
            result.found = true;
            result.size = n;
            result.witness = PvDfa{p.alphabet, n,    0, table, std::move(req.must_accept),
                                   std::move(req.must_reject)};
            return false;
        });
    }
    return result;
}

PvDfa build_pq_cycle_pvdfa(int p, int q) {
    if (p <= 2 || q <= 2) throw InvalidParameterError("p and q must exceed 2");
    if (std::gcd(p, q) != 2) throw InvalidParameterError("gcd(p, q) must equal 2");
    int n = p * q / 2;  // lcm(p, q)
    std::set<int> accepting, rejecting;
    for (int k = 0; k < n; ++k) {
        if (k % p == 0) accepting.insert(k);
        if (k % q == 1) rejecting.insert(k);
    }
    return make_cycle_pvdfa(n, std::move(accepting), std::move(rejecting));
}

Dfa build_ap_solver_dfa(int p) {
    if (p <= 6) throw InvalidParameterError("p must exceed 6");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidParameterError("p must be prime");
    auto [yes, no] = ap_residues(p, 1.0 / 3.0);
    (void)no;
    return make_cycle_dfa(p, std::move(yes));
}

bool ComplexityReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

ComplexityReport verify_bounds(const PromiseProblem& p) {
    const RegularProblem& r = p.regular();
    ComplexityReport report;
    report.problem = p.name;
    Dfa min_yes = minimize_dfa(r.yes), min_no = minimize_dfa(r.no);
    report.s_yes = min_yes.num_states;
    report.s_no = min_no.num_states;
    report.yes_nonempty = shortest_accepted_word(min_yes).has_value();
    report.no_nonempty = shortest_accepted_word(min_no).has_value();

    SrResult sr = compute_sr(p);
    report.sr = sr.size;
    report.sr_witness = std::move(sr.witness);

    long long lower = std::max(report.s_yes, report.s_no);
    report.checks.push_back({"max(s_yes, s_no) <= sr", lower, report.sr, lower <= report.sr,
                             lower == report.sr});
    if (report.yes_nonempty && report.no_nonempty) {
        long long upper = static_cast<long long>(report.s_yes) * report.s_no - 1;
        report.checks.push_back(
            {"sr <= s_yes * s_no - 1", report.sr, upper, report.sr <= upper, report.sr == upper});
    }

    int cap = p.alphabet.size() == 1 ? 12 : 6;
    report.ss_max_states = std::min(std::min(report.s_yes, report.s_no), cap);
    report.ss_verify_len = p.alphabet.size() == 1 ? 2 * report.sr + 2 : 16;
    try {
        SsResult ss =
            compute_ss_bruteforce(p, report.ss_max_states, report.ss_verify_len);
        if (ss.found) {
            report.ss = ss.size;
            report.ss_witness = std::move(ss.witness);
            long long bound = std::min(report.s_yes, report.s_no);
            report.checks.push_back({"ss <= min(s_yes, s_no)", *report.ss, bound,
                                     *report.ss <= bound, *report.ss == bound});
        }
    } catch (const SearchBudgetExceededError&) {
        // ss stays unreported
    }
    return report;
}

}  // namespace promisefa
