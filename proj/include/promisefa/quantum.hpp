#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "promisefa/classical.hpp"

namespace promisefa {

// End-markers are injected by the simulators; input words never contain them.
inline constexpr char kLeftMarker = '^';
inline constexpr char kRightMarker = '$';

/// Measure-once one-way QFA: one unitary per symbol (and per end-marker), a
/// single projective measurement onto the accepting basis states at the end.
/// The initial state is always |0>.
struct Mo1Qfa {
    int dimension = 0;
    std::string alphabet;
    std::map<char, Eigen::MatrixXcd> unitaries;  // keyed by symbols plus '^' and '$'
    std::set<int> accepting;
};

/// MO-1QFA with an additional disjoint rejecting basis set; the final
/// measurement has three outcomes (accept / reject / neither).
struct PvMo1Qfa {
    int dimension = 0;
    std::string alphabet;
    std::map<char, Eigen::MatrixXcd> unitaries;
    std::set<int> accepting;
    std::set<int> rejecting;
};

/// One-way automaton with quantum and classical states. Per (classical state,
/// symbol): an optional unitary, an optional projective measurement (empty or
/// absent list means identity with fixed outcome 0), and a classical update
/// keyed by the measurement outcome. Classical states in accepting/rejecting
/// halt the run.
struct Qcfa1 {
    int dimension = 0;
    std::string alphabet;
    int num_classical = 0;
    int initial_classical = 0;
    std::set<int> accepting;  // classical halting states
    std::set<int> rejecting;
    std::map<std::pair<int, char>, Eigen::MatrixXcd> unitaries;
    std::map<std::pair<int, char>, std::vector<Eigen::MatrixXcd>> measurements;
    std::map<std::tuple<int, char, int>, int> classical_step;
};

/// True iff ||U+U - I||_F <= 1e-9. Throws NonSquare for non-square input.
bool check_unitary(const Eigen::MatrixXcd& u);

void validate(const Mo1Qfa& m);
void validate(const PvMo1Qfa& m);
void validate(const Qcfa1& m);

/// ||P_acc U_$ U_sn ... U_s1 U_^ |0>||^2, clamped to [0, 1].
double mo1qfa_accept_prob(const Mo1Qfa& m, std::string_view word);

/// Accept and reject probabilities from the same final vector.
std::pair<double, double> pvmo1qfa_probs(const PvMo1Qfa& m, std::string_view word);

/// 3-dimensional pvMO-1QFA distinguishing #a = #b (accept with certainty)
/// from #b = #a + l. Requires cos(l sqrt(2) pi) <= 0 so the entries are real.
PvMo1Qfa build_ml(int l);

/// 2-dimensional MO-1QFA for the unary threshold family: U_a rotates by
/// pi / p, acceptance by |0>. Requires p >= 6.
Mo1Qfa build_ap(int p);

/// As build_ap with error bound eps; requires p >= pi / arccos(sqrt(1-eps)).
Mo1Qfa build_ap_eps(int p, double eps);

/// 2-dimensional 1QCFA over {a, b, #}: rotations by sqrt(2) pi per letter, a
/// standard-basis measurement at every '#' (outcome |1> halts and rejects),
/// acceptance at the right end-marker. Requires 0 < eps <= 1/3.
Qcfa1 build_ployeq_qcfa(double eps);

/// Exact accept/reject probabilities by enumerating the measurement branching
/// tree with unnormalized amplitude vectors.
std::pair<double, double> qcfa_exact_probs(const Qcfa1& m, std::string_view word);

/// Single stochastic run; deterministic for a fixed seed.
Verdict qcfa_sample(const Qcfa1& m, std::string_view word, std::uint64_t seed);

}  // namespace promisefa
