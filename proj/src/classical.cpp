#include "promisefa/classical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace promisefa {
namespace {

using TransitionTable = std::map<char, std::vector<int>>;

void check_table(const std::string& alphabet, int num_states, int initial,
                 const TransitionTable& transitions) {
    if (num_states <= 0) throw ValidationError("machine must have at least one state");
    if (initial < 0 || initial >= num_states) throw ValidationError("initial state out of range");
    if (alphabet.empty()) throw ValidationError("alphabet must be nonempty");
    for (size_t i = 1; i < alphabet.size(); ++i)
        if (alphabet[i] <= alphabet[i - 1])
            throw ValidationError("alphabet must be sorted and duplicate-free");
    for (char c : alphabet) {
        auto it = transitions.find(c);
        if (it == transitions.end())
            throw ValidationError(std::string("missing transitions for symbol '") + c + "'");
        if (static_cast<int>(it->second.size()) != num_states)
            throw ValidationError(std::string("transition row for '") + c +
                                  "' must have one entry per state");
        for (int t : it->second)
            if (t < 0 || t >= num_states)
                throw ValidationError(std::string("transition target out of range for '") + c + "'");
    }
    if (transitions.size() != alphabet.size())
        throw ValidationError("transitions keyed by a symbol outside the alphabet");
}

void check_state_set(const std::set<int>& s, int num_states, const char* what) {
    for (int q : s)
        if (q < 0 || q >= num_states)
            throw ValidationError(std::string(what) + " state out of range");
}

int step(const TransitionTable& transitions, const std::string& alphabet, int state, char symbol) {
    auto it = transitions.find(symbol);
    if (it == transitions.end() || alphabet.find(symbol) == std::string::npos)
        throw UnknownSymbolError(symbol);
    return it->second[state];
}

int run_table(const TransitionTable& transitions, const std::string& alphabet, int initial,
              std::string_view word) {
    int s = initial;
    for (char c : word) s = step(transitions, alphabet, s, c);
    return s;
}

// Reachable part of the pairwise product, pairs discovered in breadth-first
// order with symbols in alphabet order.
struct Product {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
    TransitionTable transitions;
};

Product build_product(const std::string& alphabet, const TransitionTable& ta, int ia,
                      const TransitionTable& tb, int ib) {
    Product p;
    for (char c : alphabet) p.transitions[c] = {};
    std::deque<int> queue;
    auto intern = [&](int sa, int sb) {
        auto [it, inserted] = p.index.try_emplace({sa, sb}, static_cast<int>(p.pairs.size()));
        if (inserted) {
            p.pairs.emplace_back(sa, sb);
            for (char c : alphabet) p.transitions[c].push_back(-1);
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(ia, ib);
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        auto [sa, sb] = p.pairs[idx];
        for (char c : alphabet)
            p.transitions[c][idx] = intern(ta.at(c)[sa], tb.at(c)[sb]);
    }
    return p;
}

// Shortest word (breadth-first, lexicographic tie-break) reaching a product
// pair satisfying hit, starting from the initial pair.
std::optional<std::string> product_search(const std::string& alphabet, const TransitionTable& ta,
                                          int ia, const TransitionTable& tb, int ib,
                                          const std::function<bool(int, int)>& hit) {
    std::map<std::pair<int, int>, std::pair<int, char>> parent;  // pair -> (pred index, symbol)
    std::vector<std::pair<int, int>> order;
    std::map<std::pair<int, int>, int> seen;
    std::deque<int> queue;
    auto visit = [&](int sa, int sb, int pred, char sym) -> std::optional<int> {
        std::pair<int, int> key{sa, sb};
        if (seen.count(key)) return std::nullopt;
        seen[key] = static_cast<int>(order.size());
        order.push_back(key);
        parent[key] = {pred, sym};
        queue.push_back(seen[key]);
        return seen[key];
    };
    visit(ia, ib, -1, '\0');
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        auto [sa, sb] = order[idx];
        if (hit(sa, sb)) {
            std::string word;
            std::pair<int, int> key{sa, sb};
            while (parent[key].first >= 0) {
                word.push_back(parent[key].second);
                key = order[parent[key].first];
            }
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (char c : alphabet) visit(ta.at(c)[sa], tb.at(c)[sb], idx, c);
    }
    return std::nullopt;
}

// Moore minimization: restrict to reachable states, refine by (output,
// successor-class) signatures, renumber the quotient in breadth-first order.
struct MooreMachine {
    std::string alphabet;
    int num_states = 0;
    int initial = 0;
    TransitionTable transitions;
    std::vector<int> outputs;
};

MooreMachine minimize_moore(const MooreMachine& m) {
    // reachable restriction
    std::vector<int> old_of;
    std::vector<int> new_of(m.num_states, -1);
    std::deque<int> queue;
    auto reach = [&](int s) {
        if (new_of[s] >= 0) return;
        new_of[s] = static_cast<int>(old_of.size());
        old_of.push_back(s);
        queue.push_back(s);
    };
    reach(m.initial);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (char c : m.alphabet) reach(m.transitions.at(c)[s]);
    }
    int n = static_cast<int>(old_of.size());

    std::vector<int> cls(n);
    {
        std::map<int, int> out_class;
        for (int i = 0; i < n; ++i)
            cls[i] = out_class.try_emplace(m.outputs[old_of[i]], static_cast<int>(out_class.size()))
                         .first->second;
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_class;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig{cls[i]};
            for (char c : m.alphabet) sig.push_back(cls[new_of[m.transitions.at(c)[old_of[i]]]]);
            next[i] = sig_class.try_emplace(sig, static_cast<int>(sig_class.size())).first->second;
        }
        bool stable = static_cast<int>(sig_class.size()) ==
                      *std::max_element(cls.begin(), cls.end()) + 1;
        cls = std::move(next);
        if (stable) break;
    }

    // canonical breadth-first numbering of classes
    int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> repr(num_classes, -1);
    for (int i = n - 1; i >= 0; --i) repr[cls[i]] = i;
    std::vector<int> canon(num_classes, -1);
    std::vector<int> class_order;
    std::deque<int> cq;
    auto visit_class = [&](int c) {
        if (canon[c] >= 0) return;
        canon[c] = static_cast<int>(class_order.size());
        class_order.push_back(c);
        cq.push_back(c);
    };
    visit_class(cls[new_of[m.initial]]);
    while (!cq.empty()) {
        int c = cq.front();
        cq.pop_front();
        int s = repr[c];
        for (char a : m.alphabet) visit_class(cls[new_of[m.transitions.at(a)[old_of[s]]]]);
    }
    int reach_classes = static_cast<int>(class_order.size());

    MooreMachine out;
    out.alphabet = m.alphabet;
    out.num_states = reach_classes;
    out.initial = 0;
    out.outputs.resize(reach_classes);
    for (char a : m.alphabet) out.transitions[a].assign(reach_classes, 0);
    for (int k = 0; k < reach_classes; ++k) {
        int s = repr[class_order[k]];
        out.outputs[k] = m.outputs[old_of[s]];
        for (char a : m.alphabet)
            out.transitions[a][k] = canon[cls[new_of[m.transitions.at(a)[old_of[s]]]]];
    }
    return out;
}

int pvdfa_output(const PvDfa& m, int s) {
    if (m.accepting.count(s)) return 1;
    if (m.rejecting.count(s)) return 2;
    return 0;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "Accept";
        case Verdict::Reject: return "Reject";
        default: return "Neutral";
    }
}

void validate(const Dfa& m) {
    check_table(m.alphabet, m.num_states, m.initial, m.transitions);
    check_state_set(m.accepting, m.num_states, "accepting");
}

void validate(const PvDfa& m) {
    check_table(m.alphabet, m.num_states, m.initial, m.transitions);
    check_state_set(m.accepting, m.num_states, "accepting");
    check_state_set(m.rejecting, m.num_states, "rejecting");
    for (int q : m.accepting)
        if (m.rejecting.count(q))
            throw ValidationError("accepting and rejecting sets intersect");
}

void validate(const Pfa& m) {
    if (m.num_states <= 0) throw ValidationError("machine must have at least one state");
    if (m.alphabet.empty()) throw ValidationError("alphabet must be nonempty");
    check_state_set(m.accepting, m.num_states, "accepting");
    auto check_row = [&](const std::vector<Rational>& row, const char* what) {
        if (static_cast<int>(row.size()) != m.num_states)
            throw ValidationError(std::string(what) + " has wrong dimension");
        Rational sum = 0;
        for (const Rational& e : row) {
            if (e < 0 || e > 1)
                throw ValidationError(std::string(what) + " entry outside [0,1]");
            sum += e;
        }
        if (m.exact) {
            if (sum != 1) throw ValidationError(std::string(what) + " does not sum to 1");
        } else {
            double err = static_cast<double>(sum - Rational(1));
            if (err > 1e-9 || err < -1e-9)
                throw ValidationError(std::string(what) + " does not sum to 1 within 1e-9");
        }
    };
    check_row(m.initial, "initial distribution");
    if (m.transitions.size() != m.alphabet.size())
        throw ValidationError("transition matrices must match the alphabet");
    for (char c : m.alphabet) {
        auto it = m.transitions.find(c);
        if (it == m.transitions.end())
            throw ValidationError(std::string("missing matrix for symbol '") + c + "'");
        if (static_cast<int>(it->second.size()) != m.num_states)
            throw ValidationError(std::string("matrix for '") + c + "' has wrong row count");
        for (const auto& row : it->second) check_row(row, "stochastic matrix row");
    }
}

int run(const Dfa& m, std::string_view word) {
    return run_table(m.transitions, m.alphabet, m.initial, word);
}

int run(const PvDfa& m, std::string_view word) {
    return run_table(m.transitions, m.alphabet, m.initial, word);
}

bool accepts(const Dfa& m, std::string_view word) { return m.accepting.count(run(m, word)) > 0; }

Verdict classify(const PvDfa& m, std::string_view word) {
    int s = run(m, word);
    if (m.accepting.count(s)) return Verdict::Accept;
    if (m.rejecting.count(s)) return Verdict::Reject;
    return Verdict::Neutral;
}

PvDfa complement(const PvDfa& m) {
    PvDfa out = m;
    std::swap(out.accepting, out.rejecting);
    return out;
}

PvDfa recognizer_from_components(const Dfa& yes, const Dfa& no) {
    std::string alphabet = merge_alphabets(yes.alphabet, no.alphabet);
    Dfa a = lift_to_alphabet(yes, alphabet);
    Dfa b = lift_to_alphabet(no, alphabet);
    auto overlap = product_search(alphabet, a.transitions, a.initial, b.transitions, b.initial,
                                  [&](int sa, int sb) {
                                      return a.accepting.count(sa) && b.accepting.count(sb);
                                  });
    if (overlap) throw OverlappingComponentsError(*overlap);

    Product p = build_product(alphabet, a.transitions, a.initial, b.transitions, b.initial);
    PvDfa out;
    out.alphabet = alphabet;
    out.num_states = static_cast<int>(p.pairs.size());
    out.initial = 0;
    out.transitions = std::move(p.transitions);
    for (int i = 0; i < out.num_states; ++i) {
        auto [sa, sb] = p.pairs[i];
        bool ya = a.accepting.count(sa) > 0, nb = b.accepting.count(sb) > 0;
        if (ya && !nb) out.accepting.insert(i);
        if (!ya && nb) out.rejecting.insert(i);
    }
    return out;
}

std::pair<Dfa, Dfa> component_dfas(const PvDfa& m) {
    Dfa yes{m.alphabet, m.num_states, m.initial, m.transitions, m.accepting};
    Dfa no{m.alphabet, m.num_states, m.initial, m.transitions, m.rejecting};
    return {std::move(yes), std::move(no)};
}

PvDfa intersect_recognizers(const PvDfa& a_in, const PvDfa& b_in) {
    std::string alphabet = merge_alphabets(a_in.alphabet, b_in.alphabet);
    PvDfa a = lift_to_alphabet(a_in, alphabet);
    PvDfa b = lift_to_alphabet(b_in, alphabet);
    Product p = build_product(alphabet, a.transitions, a.initial, b.transitions, b.initial);
    PvDfa out;
    out.alphabet = alphabet;
    out.num_states = static_cast<int>(p.pairs.size());
    out.initial = 0;
    out.transitions = std::move(p.transitions);
    for (int i = 0; i < out.num_states; ++i) {
        auto [sa, sb] = p.pairs[i];
        if (a.accepting.count(sa) && b.accepting.count(sb)) out.accepting.insert(i);
        if (a.rejecting.count(sa) && b.rejecting.count(sb)) out.rejecting.insert(i);
    }
    return out;
}

PvDfa union_recognizers(const PvDfa& a_in, const PvDfa& b_in) {
    std::string alphabet = merge_alphabets(a_in.alphabet, b_in.alphabet);
    PvDfa a = lift_to_alphabet(a_in, alphabet);
    PvDfa b = lift_to_alphabet(b_in, alphabet);
    auto forbidden = product_search(
        alphabet, a.transitions, a.initial, b.transitions, b.initial, [&](int sa, int sb) {
            bool in_yes = a.accepting.count(sa) || b.accepting.count(sb);
            bool in_no = a.rejecting.count(sa) || b.rejecting.count(sb);
            return in_yes && in_no;
        });
    if (forbidden) throw UnionUndefinedError(*forbidden);

    Product p = build_product(alphabet, a.transitions, a.initial, b.transitions, b.initial);
    PvDfa out;
    out.alphabet = alphabet;
    out.num_states = static_cast<int>(p.pairs.size());
    out.initial = 0;
    out.transitions = std::move(p.transitions);
    for (int i = 0; i < out.num_states; ++i) {
        auto [sa, sb] = p.pairs[i];
        if (a.accepting.count(sa) || b.accepting.count(sb)) out.accepting.insert(i);
        if (a.rejecting.count(sa) || b.rejecting.count(sb)) out.rejecting.insert(i);
    }
    return out;
}

PumpSplit pump_decompose(const PvDfa& m, std::string_view word) {
    if (static_cast<int>(word.size()) < m.num_states)
        throw WordTooShortError("word shorter than the state count");
    std::vector<int> trace{m.initial};
    std::map<int, int> first_seen{{m.initial, 0}};
    int i = -1, j = -1;
    for (size_t k = 0; k < word.size(); ++k) {
        int s = step(m.transitions, m.alphabet, trace.back(), word[k]);
        trace.push_back(s);
        auto it = first_seen.find(s);
        if (it != first_seen.end()) {
            i = it->second;
            j = static_cast<int>(k) + 1;
            break;
        }
        first_seen[s] = static_cast<int>(k) + 1;
    }
    // pigeonhole: a repeat occurs within the first num_states+1 trace entries
    return PumpSplit{std::string(word.substr(0, i)), std::string(word.substr(i, j - i)),
                     std::string(word.substr(j))};
}

Rational pfa_accept_prob(const Pfa& m, std::string_view word) {
    std::vector<Rational> v = m.initial;
    for (char c : word) {
        auto it = m.transitions.find(c);
        if (it == m.transitions.end()) throw UnknownSymbolError(c);
        std::vector<Rational> next(m.num_states, Rational(0));
        for (int s = 0; s < m.num_states; ++s) {
            if (v[s] == 0) continue;
            for (int t = 0; t < m.num_states; ++t) next[t] += v[s] * it->second[s][t];
        }
        v = std::move(next);
    }
    Rational p = 0;
    for (int s : m.accepting) p += v[s];
    return p;
}

Dfa minimize_dfa(const Dfa& m) {
    MooreMachine in{m.alphabet, m.num_states, m.initial, m.transitions, {}};
    in.outputs.resize(m.num_states, 0);
    for (int s : m.accepting) in.outputs[s] = 1;
    MooreMachine out = minimize_moore(in);
    Dfa r{out.alphabet, out.num_states, out.initial, std::move(out.transitions), {}};
    for (int s = 0; s < r.num_states; ++s)
        if (out.outputs[s] == 1) r.accepting.insert(s);
    return r;
}

PvDfa minimize_pvdfa(const PvDfa& m) {
    MooreMachine in{m.alphabet, m.num_states, m.initial, m.transitions, {}};
    in.outputs.resize(m.num_states, 0);
    for (int s = 0; s < m.num_states; ++s) in.outputs[s] = pvdfa_output(m, s);
    MooreMachine out = minimize_moore(in);
    PvDfa r{out.alphabet, out.num_states, out.initial, std::move(out.transitions), {}, {}};
    for (int s = 0; s < r.num_states; ++s) {
        if (out.outputs[s] == 1) r.accepting.insert(s);
        if (out.outputs[s] == 2) r.rejecting.insert(s);
    }
    return r;
}

InclusionResult dfa_language_included(const Dfa& a_in, const Dfa& b_in) {
    std::string alphabet = merge_alphabets(a_in.alphabet, b_in.alphabet);
    Dfa a = lift_to_alphabet(a_in, alphabet);
    Dfa b = lift_to_alphabet(b_in, alphabet);
    auto witness = product_search(alphabet, a.transitions, a.initial, b.transitions, b.initial,
                                  [&](int sa, int sb) {
                                      return a.accepting.count(sa) && !b.accepting.count(sb);
                                  });
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

PvDfa as_pvdfa(const Dfa& m) {
    PvDfa out{m.alphabet, m.num_states, m.initial, m.transitions, m.accepting, {}};
    for (int s = 0; s < m.num_states; ++s)
        if (!m.accepting.count(s)) out.rejecting.insert(s);
    return out;
}

Dfa make_cycle_dfa(int n, std::set<int> accepting) {
    if (n <= 0) throw InvalidParameterError("cycle length must be positive");
    Dfa m;
    m.alphabet = "a";
    m.num_states = n;
    m.initial = 0;
    m.transitions['a'].resize(n);
    for (int i = 0; i < n; ++i) m.transitions['a'][i] = (i + 1) % n;
    m.accepting = std::move(accepting);
    validate(m);
    return m;
}

PvDfa make_cycle_pvdfa(int n, std::set<int> accepting, std::set<int> rejecting) {
    Dfa base = make_cycle_dfa(n, std::move(accepting));
    PvDfa m{base.alphabet, base.num_states, base.initial, std::move(base.transitions),
            std::move(base.accepting), std::move(rejecting)};
    validate(m);
    return m;
}

Pfa dfa_to_pfa(const Dfa& m) {
    Pfa out;
    out.alphabet = m.alphabet;
    out.num_states = m.num_states;
    out.initial.assign(m.num_states, Rational(0));
    out.initial[m.initial] = 1;
    out.accepting = m.accepting;
    for (char c : m.alphabet) {
        auto& mat = out.transitions[c];
        mat.assign(m.num_states, std::vector<Rational>(m.num_states, Rational(0)));
        for (int s = 0; s < m.num_states; ++s) mat[s][m.transitions.at(c)[s]] = 1;
    }
    return out;
}

std::string merge_alphabets(const std::string& a, const std::string& b) {
    std::set<char> chars(a.begin(), a.end());
    chars.insert(b.begin(), b.end());
    return std::string(chars.begin(), chars.end());
}

namespace {
template <typename M>
M lift_impl(const M& m, const std::string& alphabet) {
    for (char c : m.alphabet)
        if (alphabet.find(c) == std::string::npos)
            throw AlphabetMismatchError("target alphabet must contain the machine's alphabet");
    if (alphabet == m.alphabet) return m;
    M out = m;
    out.alphabet = alphabet;
    int sink = m.num_states;
    out.num_states = m.num_states + 1;
    for (char c : alphabet) {
        auto it = m.transitions.find(c);
        if (it != m.transitions.end()) {
            out.transitions[c] = it->second;
            out.transitions[c].push_back(sink);
        } else {
            out.transitions[c].assign(out.num_states, sink);
        }
    }
    return out;
}
}  // namespace

Dfa lift_to_alphabet(const Dfa& m, const std::string& alphabet) { return lift_impl(m, alphabet); }

PvDfa lift_to_alphabet(const PvDfa& m, const std::string& alphabet) {
    return lift_impl(m, alphabet);
}

std::optional<std::string> shortest_common_word(const Dfa& a, const Dfa& b) {
    std::string alphabet = merge_alphabets(a.alphabet, b.alphabet);
    Dfa la = lift_to_alphabet(a, alphabet);
    Dfa lb = lift_to_alphabet(b, alphabet);
    return product_search(alphabet, la.transitions, la.initial, lb.transitions, lb.initial,
                          [&](int sa, int sb) {
                              return la.accepting.count(sa) && lb.accepting.count(sb);
                          });
}

std::optional<std::string> shortest_accepted_word(const Dfa& m) {
    return product_search(m.alphabet, m.transitions, m.initial, m.transitions, m.initial,
                          [&](int sa, int) { return m.accepting.count(sa) > 0; });
}

Dfa dfa_product(const Dfa& a_in, const Dfa& b_in, bool (*combine)(bool, bool)) {
    std::string alphabet = merge_alphabets(a_in.alphabet, b_in.alphabet);
    Dfa a = lift_to_alphabet(a_in, alphabet);
    Dfa b = lift_to_alphabet(b_in, alphabet);
    Product p = build_product(alphabet, a.transitions, a.initial, b.transitions, b.initial);
    Dfa out;
    out.alphabet = alphabet;
    out.num_states = static_cast<int>(p.pairs.size());
    out.initial = 0;
    out.transitions = std::move(p.transitions);
    for (int i = 0; i < out.num_states; ++i) {
        auto [sa, sb] = p.pairs[i];
        if (combine(a.accepting.count(sa) > 0, b.accepting.count(sb) > 0)) out.accepting.insert(i);
    }
    return out;
}

}  // namespace promisefa
