#include "promisefa/json_io.hpp"

#include <fstream>

namespace promisefa {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
    return *it;
}

std::string get_alphabet(const json& j) {
    const json& a = field(j, "alphabet");
    if (!a.is_array()) fail("\"alphabet\" must be an array of single-character strings");
    std::string out;
    for (const json& s : a) {
        if (!s.is_string() || s.get<std::string>().size() != 1)
            fail("alphabet symbols must be single-character strings");
        out += s.get<std::string>()[0];
    }
    return out;
}

json alphabet_to_json(const std::string& alphabet) {
    json a = json::array();
    for (char c : alphabet) a.push_back(std::string(1, c));
    return a;
}

json tables_to_json(const std::map<char, std::vector<int>>& tables) {
    json out = json::object();
    for (const auto& [c, row] : tables) out[std::string(1, c)] = row;
    return out;
}

std::set<int> get_state_set(const json& j, const char* name, bool required) {
    std::set<int> out;
    auto it = j.find(name);
    if (it == j.end()) {
        if (required) fail(std::string("missing field \"") + name + "\"");
        return out;
    }
    if (!it->is_array()) fail(std::string("\"") + name + "\" must be an array of state indices");
    for (const json& s : *it) {
        if (!s.is_number_integer()) fail(std::string("\"") + name + "\" entries must be integers");
        out.insert(s.get<int>());
    }
    return out;
}

std::map<char, std::vector<int>> get_tables(const json& j, const std::string& alphabet) {
    const json& t = field(j, "transitions");
    if (!t.is_object()) fail("\"transitions\" must map symbols to arrays");
    std::map<char, std::vector<int>> out;
    for (const auto& [key, value] : t.items()) {
        if (key.size() != 1 || alphabet.find(key[0]) == std::string::npos)
            fail("transition key \"" + key + "\" is not an alphabet symbol");
        if (!value.is_array()) fail("transition row for \"" + key + "\" must be an array");
        out[key[0]] = value.get<std::vector<int>>();
    }
    return out;
}

Rational get_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    fail("rational entries must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& r) { return rational_to_string(r); }

std::complex<double> get_complex(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    fail("complex entries must be numbers or [re, im] pairs");
}

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

Eigen::MatrixXcd get_matrix(const json& v) {
    if (!v.is_array() || v.empty()) fail("matrices must be non-empty arrays of rows");
    size_t rows = v.size(), cols = v[0].size();
    Eigen::MatrixXcd m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols) fail("matrix rows must have equal lengths");
        for (size_t k = 0; k < cols; ++k) m(i, k) = get_complex(v[i][k]);
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

std::map<char, Eigen::MatrixXcd> get_unitaries(const json& j) {
    const json& u = field(j, "unitaries");
    if (!u.is_object()) fail("\"unitaries\" must map symbols to matrices");
    std::map<char, Eigen::MatrixXcd> out;
    for (const auto& [key, value] : u.items()) {
        if (key.size() != 1) fail("unitary key \"" + key + "\" must be a single symbol");
        out[key[0]] = get_matrix(value);
    }
    return out;
}

json unitaries_to_json(const std::map<char, Eigen::MatrixXcd>& unitaries) {
    json out = json::object();
    for (const auto& [c, u] : unitaries) out[std::string(1, c)] = matrix_to_json(u);
    return out;
}

Dfa dfa_from_json(const json& j) {
    Dfa m;
    m.alphabet = get_alphabet(j);
    m.num_states = field(j, "states").get<int>();
    m.initial = field(j, "initial").get<int>();
    m.transitions = get_tables(j, m.alphabet);
    m.accepting = get_state_set(j, "accepting", true);
    validate(m);
    return m;
}

PvDfa pvdfa_from_json(const json& j) {
    PvDfa m;
    m.alphabet = get_alphabet(j);
    m.num_states = field(j, "states").get<int>();
    m.initial = field(j, "initial").get<int>();
    m.transitions = get_tables(j, m.alphabet);
    m.accepting = get_state_set(j, "accepting", true);
    m.rejecting = get_state_set(j, "rejecting", true);
    validate(m);
    return m;
}

Pfa pfa_from_json(const json& j) {
    Pfa m;
    m.alphabet = get_alphabet(j);
    m.num_states = field(j, "states").get<int>();
    const json& init = field(j, "initial");
    if (!init.is_array()) fail("pfa \"initial\" must be an array of rationals");
    for (const json& v : init) m.initial.push_back(get_rational(v));
    const json& t = field(j, "transitions");
    if (!t.is_object()) fail("\"transitions\" must map symbols to matrices");
    for (const auto& [key, value] : t.items()) {
        if (key.size() != 1 || m.alphabet.find(key[0]) == std::string::npos)
            fail("transition key \"" + key + "\" is not an alphabet symbol");
        if (!value.is_array()) fail("stochastic matrix must be an array of rows");
        auto& mat = m.transitions[key[0]];
        for (const json& row : value) {
            if (!row.is_array()) fail("stochastic matrix rows must be arrays");
            std::vector<Rational> r;
            for (const json& v : row) r.push_back(get_rational(v));
            mat.push_back(std::move(r));
        }
    }
    m.accepting = get_state_set(j, "accepting", true);
    validate(m);
    return m;
}

Mo1Qfa mo1qfa_from_json(const json& j) {
    Mo1Qfa m;
    m.alphabet = get_alphabet(j);
    m.dimension = field(j, "dimension").get<int>();
    m.unitaries = get_unitaries(j);
    m.accepting = get_state_set(j, "accepting", true);
    validate(m);
    return m;
}

PvMo1Qfa pvmo1qfa_from_json(const json& j) {
    PvMo1Qfa m;
    m.alphabet = get_alphabet(j);
    m.dimension = field(j, "dimension").get<int>();
    m.unitaries = get_unitaries(j);
    m.accepting = get_state_set(j, "accepting", true);
    m.rejecting = get_state_set(j, "rejecting", true);
    validate(m);
    return m;
}

// key "s,c" or "s,c,outcome"
std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> parts(1);
    for (char c : key) {
        if (c == ',')
            parts.emplace_back();
        else
            parts.back() += c;
    }
    return parts;
}

Qcfa1 qcfa_from_json(const json& j) {
    Qcfa1 m;
    m.alphabet = get_alphabet(j);
    m.dimension = field(j, "dimension").get<int>();
    m.num_classical = field(j, "classical_states").get<int>();
    m.initial_classical = field(j, "initial").get<int>();
    m.accepting = get_state_set(j, "accepting", true);
    m.rejecting = get_state_set(j, "rejecting", true);
    for (const auto& [key, value] : field(j, "unitaries").items()) {
        auto parts = split_key(key);
        if (parts.size() != 2 || parts[1].size() != 1)
            fail("unitary key \"" + key + "\" must look like \"state,symbol\"");
        m.unitaries[{std::stoi(parts[0]), parts[1][0]}] = get_matrix(value);
    }
    if (auto it = j.find("measurements"); it != j.end()) {
        for (const auto& [key, value] : it->items()) {
            auto parts = split_key(key);
            if (parts.size() != 2 || parts[1].size() != 1)
                fail("measurement key \"" + key + "\" must look like \"state,symbol\"");
            std::vector<Eigen::MatrixXcd> projectors;
            if (!(value.is_string() && value.get<std::string>() == "identity")) {
                if (!value.is_array()) fail("measurements must be projector lists or \"identity\"");
                for (const json& p : value) projectors.push_back(get_matrix(p));
            }
            m.measurements[{std::stoi(parts[0]), parts[1][0]}] = std::move(projectors);
        }
    }
    for (const auto& [key, value] : field(j, "classical_transitions").items()) {
        auto parts = split_key(key);
        if (parts.size() != 3 || parts[1].size() != 1)
            fail("classical transition key \"" + key + "\" must look like \"state,symbol,outcome\"");
        m.classical_step[{std::stoi(parts[0]), parts[1][0], std::stoi(parts[2])}] =
            value.get<int>();
    }
    validate(m);
    return m;
}

}  // namespace

json to_json(const Dfa& m) {
    return {{"kind", "dfa"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"states", m.num_states},
            {"initial", m.initial},
            {"transitions", tables_to_json(m.transitions)},
            {"accepting", m.accepting}};
}

json to_json(const PvDfa& m) {
    return {{"kind", "pvdfa"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"states", m.num_states},
            {"initial", m.initial},
            {"transitions", tables_to_json(m.transitions)},
            {"accepting", m.accepting},
            {"rejecting", m.rejecting}};
}

json to_json(const Pfa& m) {
    json init = json::array();
    for (const Rational& r : m.initial) init.push_back(rational_to_json(r));
    json trans = json::object();
    for (const auto& [c, mat] : m.transitions) {
        json rows = json::array();
        for (const auto& row : mat) {
            json out_row = json::array();
            for (const Rational& r : row) out_row.push_back(rational_to_json(r));
            rows.push_back(out_row);
        }
        trans[std::string(1, c)] = rows;
    }
    return {{"kind", "pfa"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"states", m.num_states},
            {"initial", init},
            {"transitions", trans},
            {"accepting", m.accepting}};
}

json to_json(const Mo1Qfa& m) {
    return {{"kind", "mo1qfa"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"dimension", m.dimension},
            {"unitaries", unitaries_to_json(m.unitaries)},
            {"accepting", m.accepting}};
}

json to_json(const PvMo1Qfa& m) {
    return {{"kind", "pvmo1qfa"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"dimension", m.dimension},
            {"unitaries", unitaries_to_json(m.unitaries)},
            {"accepting", m.accepting},
            {"rejecting", m.rejecting}};
}

json to_json(const Qcfa1& m) {
    json unitaries = json::object();
    for (const auto& [key, u] : m.unitaries)
        unitaries[std::to_string(key.first) + "," + key.second] = matrix_to_json(u);
    json measurements = json::object();
    for (const auto& [key, projectors] : m.measurements) {
        std::string name = std::to_string(key.first) + "," + key.second;
        if (projectors.empty()) {
            measurements[name] = "identity";
        } else {
            json list = json::array();
            for (const auto& p : projectors) list.push_back(matrix_to_json(p));
            measurements[name] = list;
        }
    }
    json classical = json::object();
    for (const auto& [key, next] : m.classical_step)
        classical[std::to_string(std::get<0>(key)) + "," + std::get<1>(key) + "," +
                  std::to_string(std::get<2>(key))] = next;
    return {{"kind", "qcfa1"},
            {"alphabet", alphabet_to_json(m.alphabet)},
            {"dimension", m.dimension},
            {"classical_states", m.num_classical},
            {"initial", m.initial_classical},
            {"unitaries", unitaries},
            {"measurements", measurements},
            {"classical_transitions", classical},
            {"accepting", m.accepting},
            {"rejecting", m.rejecting}};
}

json to_json(const Machine& m) {
    return std::visit([](const auto& v) { return to_json(v); }, m);
}

Machine machine_from_json(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "dfa") return dfa_from_json(j);
    if (kind == "pvdfa") return pvdfa_from_json(j);
    if (kind == "pfa") return pfa_from_json(j);
    if (kind == "mo1qfa") return mo1qfa_from_json(j);
    if (kind == "pvmo1qfa") return pvmo1qfa_from_json(j);
    if (kind == "qcfa1") return qcfa_from_json(j);
    fail("unknown machine kind \"" + kind + "\"");
}

Machine load_machine(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail("cannot parse \"" + path + "\": " + e.what());
    }
    return machine_from_json(j);
}

void save_machine(const Machine& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot open \"" + path + "\" for writing");
    out << to_json(m).dump(2) << "\n";
}

PromiseProblem make_family(const std::string& name, const json& params) {
    auto get_int = [&](const char* key) {
        if (!params.contains(key))
            fail("family \"" + name + "\" requires parameter \"" + key + "\"");
        return params[key].get<int>();
    };
    auto get_double = [&](const char* key, double fallback) {
        return params.contains(key) ? params[key].get<double>() : fallback;
    };
    if (name == "ANl") return make_anl(get_int("N"), get_int("l"));
    if (name == "ANr1r2") return make_anr1r2(get_int("N"), get_int("r1"), get_int("r2"));
    if (name == "Al") return make_al(get_int("l"));
    if (name == "Bl") return make_bl(get_int("l"));
    if (name == "C") return make_c();
    if (name == "PloyEQ") return make_ployeq(get_double("eps", 1.0 / 3.0));
    if (name == "Ap") return make_ap(get_int("p"));
    if (name == "ApEps") return make_ap_eps(get_int("p"), get_double("eps", 1.0 / 3.0));
    if (name == "PQ") return make_pq_family(get_int("p"), get_int("q"));
    if (name == "ParityEq") return make_parity_eq(get_int("odd") != 0);
    fail("unknown family \"" + name + "\"");
}

PromiseProblem family_from_descriptor(const json& j) {
    return make_family(field(j, "family").get<std::string>(),
                       j.contains("params") ? j["params"] : json::object());
}

json problem_to_json(const PromiseProblem& p) {
    const RegularProblem& r = p.regular();
    return {{"name", p.name},
            {"alphabet", alphabet_to_json(p.alphabet)},
            {"yes", to_json(r.yes)},
            {"no", to_json(r.no)}};
}

PromiseProblem problem_from_json(const json& j) {
    if (j.contains("family")) return family_from_descriptor(j);
    Machine yes = machine_from_json(field(j, "yes"));
    Machine no = machine_from_json(field(j, "no"));
    if (!std::holds_alternative<Dfa>(yes) || !std::holds_alternative<Dfa>(no))
        fail("problem components must be dfa machines");
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "problem";
    return make_regular_problem(name, std::get<Dfa>(yes), std::get<Dfa>(no));
}

PromiseProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in \"" + path + "\": " + e.what());
    }
    return problem_from_json(j);
}

}  // namespace promisefa
