#include "promisefa/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace promisefa {
namespace {

constexpr double kTol = 1e-9;

double sqnorm(const Eigen::VectorXcd& v) { return v.squaredNorm(); }

void check_marker_free(const std::string& alphabet) {
    if (alphabet.empty()) throw ValidationError("alphabet must be nonempty");
    if (alphabet.find(kLeftMarker) != std::string::npos ||
        alphabet.find(kRightMarker) != std::string::npos)
        throw ValidationError("alphabet must not contain the end-markers");
}

void check_unitary_table(const std::map<char, Eigen::MatrixXcd>& unitaries,
                         const std::string& alphabet, int dimension) {
    std::string required = alphabet + kLeftMarker + kRightMarker;
    for (char c : required) {
        auto it = unitaries.find(c);
        if (it == unitaries.end())
            throw ValidationError(std::string("missing unitary for symbol '") + c + "'");
        if (it->second.rows() != dimension || it->second.cols() != dimension)
            throw ValidationError(std::string("unitary for '") + c + "' has wrong dimension");
        if (!check_unitary(it->second))
            throw ValidationError(std::string("matrix for '") + c + "' is not unitary");
    }
}

void check_basis_set(const std::set<int>& s, int dimension, const char* what) {
    for (int q : s)
        if (q < 0 || q >= dimension)
            throw ValidationError(std::string(what) + " set contains an invalid basis index");
}

template <class Machine>
Eigen::VectorXcd final_state(const Machine& m, std::string_view word) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m.dimension);
    v(0) = 1.0;
    v = m.unitaries.at(kLeftMarker) * v;
    for (char c : word) {
        auto it = m.unitaries.find(c);
        if (it == m.unitaries.end() || m.alphabet.find(c) == std::string::npos)
            throw UnknownSymbolError(c);
        v = it->second * v;
    }
    return m.unitaries.at(kRightMarker) * v;
}

double basis_mass(const Eigen::VectorXcd& v, const std::set<int>& basis) {
    double p = 0;
    for (int q : basis) p += std::norm(v(q));
    return std::clamp(p, 0.0, 1.0);
}

Eigen::MatrixXcd rotation(double theta) {
    Eigen::MatrixXcd u(2, 2);
    u << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return u;
}

// One live branch of a 1QCFA run: classical state plus unnormalized amplitude
// vector; the branch probability is the squared norm.
struct Branch {
    int classical;
    Eigen::VectorXcd amp;
};

const std::vector<Eigen::MatrixXcd>* branch_measurement(const Qcfa1& m, int s, char c) {
    auto it = m.measurements.find({s, c});
    if (it == m.measurements.end() || it->second.empty()) return nullptr;
    return &it->second;
}

int classical_next(const Qcfa1& m, int s, char c, int outcome) {
    auto it = m.classical_step.find({s, c, outcome});
    if (it == m.classical_step.end())
        throw NonTerminatingError(std::string("no classical transition for state ") +
                                  std::to_string(s) + " on '" + c + "' outcome " +
                                  std::to_string(outcome));
    return it->second;
}

}  // namespace

bool check_unitary(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols()) throw NonSquareError("unitarity check requires a square matrix");
    Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.norm() <= kTol;
}

void validate(const Mo1Qfa& m) {
    if (m.dimension <= 0) throw ValidationError("dimension must be positive");
    check_marker_free(m.alphabet);
    check_unitary_table(m.unitaries, m.alphabet, m.dimension);
    check_basis_set(m.accepting, m.dimension, "accepting");
}

void validate(const PvMo1Qfa& m) {
    if (m.dimension <= 0) throw ValidationError("dimension must be positive");
    check_marker_free(m.alphabet);
    check_unitary_table(m.unitaries, m.alphabet, m.dimension);
    check_basis_set(m.accepting, m.dimension, "accepting");
    check_basis_set(m.rejecting, m.dimension, "rejecting");
    for (int q : m.accepting)
        if (m.rejecting.count(q))
            throw ValidationError("accepting and rejecting basis sets must be disjoint");
}

void validate(const Qcfa1& m) {
    if (m.dimension <= 0) throw ValidationError("dimension must be positive");
    if (m.num_classical <= 0) throw ValidationError("classical state count must be positive");
    check_marker_free(m.alphabet);
    if (m.initial_classical < 0 || m.initial_classical >= m.num_classical)
        throw ValidationError("initial classical state out of range");
    for (int s : m.accepting)
        if (m.rejecting.count(s))
            throw ValidationError("accepting and rejecting classical sets must be disjoint");
    for (const auto& [key, u] : m.unitaries) {
        if (u.rows() != m.dimension || u.cols() != m.dimension)
            throw ValidationError("unitary has wrong dimension");
        if (!check_unitary(u)) throw ValidationError("quantum transition is not unitary");
    }
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.dimension, m.dimension);
    for (const auto& [key, projectors] : m.measurements) {
        if (projectors.empty()) continue;
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(m.dimension, m.dimension);
        for (size_t i = 0; i < projectors.size(); ++i) {
            const auto& p = projectors[i];
            if (p.rows() != m.dimension || p.cols() != m.dimension)
                throw ValidationError("projector has wrong dimension");
            sum += p;
            for (size_t j = 0; j < projectors.size(); ++j) {
                Eigen::MatrixXcd prod = p * projectors[j];
                Eigen::MatrixXcd expected =
                    i == j ? p : Eigen::MatrixXcd::Zero(m.dimension, m.dimension);
                if ((prod - expected).norm() > kTol)
                    throw ValidationError("projectors are not pairwise orthogonal idempotents");
            }
        }
        if ((sum - id).norm() > kTol)
            throw ValidationError("measurement projectors do not sum to the identity");
    }
}

double mo1qfa_accept_prob(const Mo1Qfa& m, std::string_view word) {
    return basis_mass(final_state(m, word), m.accepting);
}

std::pair<double, double> pvmo1qfa_probs(const PvMo1Qfa& m, std::string_view word) {
    Eigen::VectorXcd v = final_state(m, word);
    return {basis_mass(v, m.accepting), basis_mass(v, m.rejecting)};
}

PvMo1Qfa build_ml(int l) {
    if (l <= 0) throw InvalidParameterError("l must be positive");
    double theta = std::numbers::sqrt2 * std::numbers::pi;
    double p = std::cos(l * theta);
    if (p > 0)
        throw InvalidParameterError("cos(l sqrt(2) pi) must be non-positive for l = " +
                                    std::to_string(l));
    double alpha = std::sqrt(-p / (1 - p));
    double beta = std::sqrt(1 / (1 - p));

    PvMo1Qfa m;
    m.dimension = 3;
    m.alphabet = "ab";
    m.accepting = {0};
    m.rejecting = {1, 2};
    Eigen::MatrixXcd start(3, 3), ua(3, 3), ub(3, 3);
    start << alpha, -beta, 0, beta, alpha, 0, 0, 0, 1;
    ua << 1, 0, 0, 0, std::cos(theta), std::sin(theta), 0, -std::sin(theta), std::cos(theta);
    ub << 1, 0, 0, 0, std::cos(theta), -std::sin(theta), 0, std::sin(theta), std::cos(theta);
    m.unitaries[kLeftMarker] = start;
    m.unitaries['a'] = ua;
    m.unitaries['b'] = ub;
    m.unitaries[kRightMarker] = start.adjoint();
    validate(m);
    return m;
}

Mo1Qfa build_ap(int p) {
    if (p < 6) throw InvalidParameterError("p must be at least 6");
    Mo1Qfa m;
    m.dimension = 2;
    m.alphabet = "a";
    m.accepting = {0};
    m.unitaries[kLeftMarker] = Eigen::MatrixXcd::Identity(2, 2);
    m.unitaries[kRightMarker] = Eigen::MatrixXcd::Identity(2, 2);
    m.unitaries['a'] = rotation(std::numbers::pi / p);
    validate(m);
    return m;
}

Mo1Qfa build_ap_eps(int p, double eps) {
    if (eps <= 0 || eps >= 1) throw InvalidParameterError("epsilon must lie in (0, 1)");
    if (p < std::numbers::pi / std::acos(std::sqrt(1.0 - eps)))
        throw InvalidParameterError("p must be at least pi / arccos(sqrt(1 - epsilon))");
    Mo1Qfa m = build_ap(std::max(p, 6));
    m.unitaries['a'] = rotation(std::numbers::pi / p);
    return m;
}

Qcfa1 build_ployeq_qcfa(double eps) {
    if (eps <= 0 || eps > 1.0 / 3.0)
        throw InvalidParameterError("epsilon must lie in (0, 1/3]");
    double theta = std::numbers::sqrt2 * std::numbers::pi;
    Qcfa1 m;
    m.dimension = 2;
    m.alphabet = "ab#";
    m.num_classical = 3;  // 0 = running, 1 = accept, 2 = reject
    m.initial_classical = 0;
    m.accepting = {1};
    m.rejecting = {2};
    m.unitaries[{0, 'a'}] = rotation(theta);
    m.unitaries[{0, 'b'}] = rotation(-theta);
    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2), p1 = Eigen::MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    m.measurements[{0, '#'}] = {p0, p1};
    m.classical_step[{0, kLeftMarker, 0}] = 0;
    m.classical_step[{0, 'a', 0}] = 0;
    m.classical_step[{0, 'b', 0}] = 0;
    m.classical_step[{0, '#', 0}] = 0;
    m.classical_step[{0, '#', 1}] = 2;
    m.classical_step[{0, kRightMarker, 0}] = 1;
    validate(m);
    return m;
}

std::pair<double, double> qcfa_exact_probs(const Qcfa1& m, std::string_view word) {
    for (char c : word)
        if (m.alphabet.find(c) == std::string::npos) throw UnknownSymbolError(c);
    std::string tape;
    tape.reserve(word.size() + 2);
    tape += kLeftMarker;
    tape += word;
    tape += kRightMarker;

    Eigen::VectorXcd init = Eigen::VectorXcd::Zero(m.dimension);
    init(0) = 1.0;
    std::vector<Branch> live{{m.initial_classical, std::move(init)}};
    double p_accept = 0, p_reject = 0;
    auto settle = [&](Branch b, std::vector<Branch>& out) {
        double mass = sqnorm(b.amp);
        if (mass < 1e-300) return;
        if (m.accepting.count(b.classical))
            p_accept += mass;
        else if (m.rejecting.count(b.classical))
            p_reject += mass;
        else
            out.push_back(std::move(b));
    };

    for (char c : tape) {
        std::vector<Branch> next;
        for (Branch& b : live) {
            if (auto it = m.unitaries.find({b.classical, c}); it != m.unitaries.end())
                b.amp = it->second * b.amp;
            if (const auto* projectors = branch_measurement(m, b.classical, c)) {
                for (size_t k = 0; k < projectors->size(); ++k) {
                    Branch child{classical_next(m, b.classical, c, static_cast<int>(k)),
                                 (*projectors)[k] * b.amp};
                    settle(std::move(child), next);
                }
            } else {
                b.classical = classical_next(m, b.classical, c, 0);
                settle(std::move(b), next);
            }
        }
        live = std::move(next);
    }
    if (!live.empty())
        throw NonTerminatingError("run did not halt in an accepting or rejecting state");
    return {std::clamp(p_accept, 0.0, 1.0), std::clamp(p_reject, 0.0, 1.0)};
}

Verdict qcfa_sample(const Qcfa1& m, std::string_view word, std::uint64_t seed) {
    for (char c : word)
        if (m.alphabet.find(c) == std::string::npos) throw UnknownSymbolError(c);
    std::string tape;
    tape.reserve(word.size() + 2);
    tape += kLeftMarker;
    tape += word;
    tape += kRightMarker;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(m.dimension);
    amp(0) = 1.0;
    int classical = m.initial_classical;

    for (char c : tape) {
        if (m.accepting.count(classical) || m.rejecting.count(classical)) break;
        if (auto it = m.unitaries.find({classical, c}); it != m.unitaries.end())
            amp = it->second * amp;
        int outcome = 0;
        if (const auto* projectors = branch_measurement(m, classical, c)) {
            double r = unit(rng) * sqnorm(amp);
            double acc = 0;
            outcome = static_cast<int>(projectors->size()) - 1;
            for (size_t k = 0; k < projectors->size(); ++k) {
                acc += sqnorm((*projectors)[k] * amp);
                if (r <= acc) {
                    outcome = static_cast<int>(k);
                    break;
                }
            }
            amp = (*projectors)[outcome] * amp;
            amp.normalize();
        }
        classical = classical_next(m, classical, c, outcome);
    }
    if (m.accepting.count(classical)) return Verdict::Accept;
    if (m.rejecting.count(classical)) return Verdict::Reject;
    throw NonTerminatingError("run did not halt in an accepting or rejecting state");
}

}  // namespace promisefa
