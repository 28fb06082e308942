#include "promisefa/decision.hpp"

#include <algorithm>
#include <deque>

namespace promisefa {
namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

Vec row_times_matrix(const Vec& v, const Mat& m) {
    Vec out(m[0].size(), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Row basis in echelon form; insert() reduces the vector and returns true if
// it enlarged the span.
class RowBasis {
  public:
    bool insert(Vec v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            Rational f = v[pivot] / row[pivot];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (nz == v.end()) return false;
        rows_.emplace_back(static_cast<size_t>(nz - v.begin()), std::move(v));
        return true;
    }
    size_t size() const { return rows_.size(); }

  private:
    std::vector<std::pair<size_t, Vec>> rows_;
};

}  // namespace

void validate(const Blm& m) {
    if (m.num_states <= 0) throw ValidationError("machine must have at least one state");
    if (m.alphabet.empty()) throw ValidationError("alphabet must be nonempty");
    size_t n = static_cast<size_t>(m.num_states);
    if (m.pi.size() != n) throw ValidationError("pi has wrong dimension");
    if (m.eta.size() != n) throw ValidationError("eta has wrong dimension");
    if (m.matrices.size() != m.alphabet.size())
        throw ValidationError("matrices must match the alphabet");
    for (char c : m.alphabet) {
        auto it = m.matrices.find(c);
        if (it == m.matrices.end())
            throw ValidationError(std::string("missing matrix for symbol '") + c + "'");
        if (it->second.size() != n) throw ValidationError("matrix has wrong row count");
        for (const auto& row : it->second)
            if (row.size() != n) throw ValidationError("matrix has wrong column count");
    }
}

Rational blm_word_fn(const Blm& m, std::string_view word) {
    Vec v = m.pi;
    for (char c : word) {
        auto it = m.matrices.find(c);
        if (it == m.matrices.end()) throw UnknownSymbolError(c);
        v = row_times_matrix(v, it->second);
    }
    return dot(v, m.eta);
}

EquivalenceResult blm_equivalent(const Blm& a, const Blm& b) {
    if (a.alphabet != b.alphabet)
        throw AlphabetMismatchError("BLM equivalence requires identical alphabets");
    size_t na = static_cast<size_t>(a.num_states), nb = static_cast<size_t>(b.num_states);

    // difference vector over the block-diagonal system
    Vec eta(na + nb);
    for (size_t i = 0; i < na; ++i) eta[i] = a.eta[i];
    for (size_t i = 0; i < nb; ++i) eta[na + i] = -b.eta[i];
    auto advance = [&](const Vec& v, char c) {
        Vec left(v.begin(), v.begin() + na);
        Vec right(v.begin() + na, v.end());
        Vec la = row_times_matrix(left, a.matrices.at(c));
        Vec lb = row_times_matrix(right, b.matrices.at(c));
        la.insert(la.end(), lb.begin(), lb.end());
        return la;
    };

    Vec start(na + nb);
    for (size_t i = 0; i < na; ++i) start[i] = a.pi[i];
    for (size_t i = 0; i < nb; ++i) start[na + i] = b.pi[i];

    // Breadth-first closure with lexicographic symbol order: checking every
    // generated vector (not only the independent ones) yields a shortest
    // distinguishing word.
    if (dot(start, eta) != 0) return {false, std::string()};
    RowBasis basis;
    basis.insert(start);
    std::deque<std::pair<Vec, std::string>> queue{{std::move(start), ""}};
    while (!queue.empty()) {
        auto [v, word] = std::move(queue.front());
        queue.pop_front();
        for (char c : a.alphabet) {
            Vec next = advance(v, c);
            std::string next_word = word + c;
            if (dot(next, eta) != 0) return {false, std::move(next_word)};
            if (basis.insert(next)) queue.emplace_back(std::move(next), std::move(next_word));
        }
    }
    return {true, std::nullopt};
}

Blm pvdfa_to_blm(const PvDfa& m) {
    Blm out;
    out.alphabet = m.alphabet;
    out.num_states = m.num_states;
    out.pi.assign(m.num_states, Rational(0));
    out.pi[m.initial] = 1;
    out.eta.assign(m.num_states, Rational(0));
    for (int s : m.accepting) out.eta[s] = 1;
    for (int s : m.rejecting) out.eta[s] = 2;
    for (char c : m.alphabet) {
        auto& mat = out.matrices[c];
        mat.assign(m.num_states, std::vector<Rational>(m.num_states, Rational(0)));
        for (int s = 0; s < m.num_states; ++s) mat[s][m.transitions.at(c)[s]] = 1;
    }
    return out;
}

EquivalenceResult pvdfa_equivalent(const PvDfa& a, const PvDfa& b) {
    std::string alphabet = merge_alphabets(a.alphabet, b.alphabet);
    return blm_equivalent(pvdfa_to_blm(lift_to_alphabet(a, alphabet)),
                          pvdfa_to_blm(lift_to_alphabet(b, alphabet)));
}

const char* to_string(Order o) {
    switch (o) {
        case Order::Equal: return "Equal";
        case Order::Less: return "Less";
        case Order::Greater: return "Greater";
        default: return "Incomparable";
    }
}

CompareResult pvdfa_compare(const PvDfa& a, const PvDfa& b) {
    auto [ay, an] = component_dfas(a);
    auto [by, bn] = component_dfas(b);
    auto y_ab = dfa_language_included(ay, by);
    auto n_ab = dfa_language_included(an, bn);
    auto y_ba = dfa_language_included(by, ay);
    auto n_ba = dfa_language_included(bn, an);

    CompareResult r;
    if (!y_ab.included)
        r.witness_yes = y_ab.witness;
    else if (!y_ba.included)
        r.witness_yes = y_ba.witness;
    if (!n_ab.included)
        r.witness_no = n_ab.witness;
    else if (!n_ba.included)
        r.witness_no = n_ba.witness;

    if (y_ab.included && n_ab.included && y_ba.included && n_ba.included)
        r.relation = Order::Equal;
    else if (y_ab.included && n_ab.included)
        r.relation = Order::Less;
    else if (y_ba.included && n_ba.included)
        r.relation = Order::Greater;
    else
        r.relation = Order::Incomparable;
    return r;
}

bool is_maximally_powerful(const PvDfa& m) {
    PvDfa min = minimize_pvdfa(m);
    return static_cast<int>(min.accepting.size() + min.rejecting.size()) == min.num_states;
}

}  // namespace promisefa
