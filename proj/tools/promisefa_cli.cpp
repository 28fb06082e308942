#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "promisefa/complexity.hpp"
#include "promisefa/decision.hpp"
#include "promisefa/json_io.hpp"
#include "promisefa/quantum.hpp"
#include "promisefa/verification.hpp"

namespace {

using namespace promisefa;
using nlohmann::json;

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Output {
    std::string format = "table";
    std::string path;

    void emit(const json& j, const std::string& table) const {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw ValidationError("cannot open \"" + path + "\" for writing");
            out = &file;
        }
        if (format == "json")
            *out << j.dump(2) << "\n";
        else
            *out << table;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write the report to a file instead of stdout");
}

// Run-length shorthand for command-line words: "a3b2" means aaabb.
std::string expand_word(const std::string& word) {
    std::string out;
    for (size_t i = 0; i < word.size();) {
        char c = word[i++];
        if (std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("repeat count without a preceding symbol in \"" + word + "\"");
        size_t start = i;
        while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
        long reps = i > start ? std::stol(word.substr(start, i - start)) : 1;
        out.append(static_cast<size_t>(reps), c);
    }
    return out;
}

std::vector<std::string> gather_words(const std::string& word, const std::string& word_file) {
    std::vector<std::string> words;
    if (!word_file.empty()) {
        std::ifstream in(word_file);
        if (!in) throw ValidationError("cannot open word file \"" + word_file + "\"");
        std::string line;
        while (std::getline(in, line)) words.push_back(line);
    } else {
        words.push_back(expand_word(word));
    }
    return words;
}

struct FamilyFlags {
    std::string name;
    std::optional<int> n, l, p, q, r1, r2, odd;
    std::optional<double> eps;

    json params() const {
        json out = json::object();
        if (n) out["N"] = *n;
        if (l) out["l"] = *l;
        if (p) out["p"] = *p;
        if (q) out["q"] = *q;
        if (r1) out["r1"] = *r1;
        if (r2) out["r2"] = *r2;
        if (odd) out["odd"] = *odd;
        if (eps) out["eps"] = *eps;
        return out;
    }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool required) {
    auto* name = cmd->add_option("--name,--family", f.name, "Family name");
    if (required) name->required();
    cmd->add_option("--N", f.n, "Cycle length N");
    cmd->add_option("--l", f.l, "Offset / count parameter l");
    cmd->add_option("--p", f.p, "Parameter p");
    cmd->add_option("--q", f.q, "Parameter q");
    cmd->add_option("--r1", f.r1, "First residue");
    cmd->add_option("--r2", f.r2, "Second residue");
    cmd->add_option("--odd", f.odd, "1 for the odd half, 0 for the even half");
    cmd->add_option("--eps", f.eps, "Error bound epsilon");
}

int cmd_run(const std::string& machine_path, const std::string& word,
            const std::string& word_file, const Output& out) {
    Machine m = load_machine(machine_path);
    json rows = json::array();
    std::string table;
    for (const std::string& w : gather_words(word, word_file)) {
        std::string verdict;
        if (auto* dfa = std::get_if<Dfa>(&m))
            verdict = accepts(*dfa, w) ? "Accept" : "Reject";
        else if (auto* pv = std::get_if<PvDfa>(&m))
            verdict = to_string(classify(*pv, w));
        else
            throw ValidationError("run expects a dfa or pvdfa machine");
        rows.push_back({{"word", w}, {"verdict", verdict}});
        table += out.format == "csv" ? w + "," + verdict + "\n" : w + "\t" + verdict + "\n";
    }
    out.emit(rows, table);
    return 0;
}

int cmd_prob(const std::string& machine_path, const std::string& word,
             const std::string& word_file, const Output& out) {
    Machine m = load_machine(machine_path);
    json rows = json::array();
    std::string table;
    for (const std::string& w : gather_words(word, word_file)) {
        json row{{"word", w}};
        std::string line = w;
        if (auto* pfa = std::get_if<Pfa>(&m)) {
            std::string p = rational_to_string(pfa_accept_prob(*pfa, w));
            row["accept"] = p;
            line += out.format == "csv" ? "," + p : "\taccept " + p;
        } else if (auto* qfa = std::get_if<Mo1Qfa>(&m)) {
            double p = mo1qfa_accept_prob(*qfa, w);
            row["accept"] = p;
            line += out.format == "csv" ? "," + fmt(p) : "\taccept " + fmt(p);
        } else if (auto* pv = std::get_if<PvMo1Qfa>(&m)) {
            auto [pa, pr] = pvmo1qfa_probs(*pv, w);
            row["accept"] = pa;
            row["reject"] = pr;
            line += out.format == "csv" ? "," + fmt(pa) + "," + fmt(pr)
                                        : "\taccept " + fmt(pa) + "\treject " + fmt(pr);
        } else if (auto* qc = std::get_if<Qcfa1>(&m)) {
            auto [pa, pr] = qcfa_exact_probs(*qc, w);
            row["accept"] = pa;
            row["reject"] = pr;
            line += out.format == "csv" ? "," + fmt(pa) + "," + fmt(pr)
                                        : "\taccept " + fmt(pa) + "\treject " + fmt(pr);
        } else {
            throw ValidationError("prob expects a pfa, mo1qfa, pvmo1qfa or qcfa1 machine");
        }
        rows.push_back(std::move(row));
        table += line + "\n";
    }
    out.emit(rows, table);
    return 0;
}

int cmd_family(const FamilyFlags& flags, const std::string& classify_word_arg,
               const Output& out) {
    PromiseProblem problem = make_family(flags.name, flags.params());
    if (!classify_word_arg.empty()) {
        std::string w = expand_word(classify_word_arg);
        Membership m = classify_word(problem, w);
        out.emit(json{{"word", w}, {"membership", to_string(m)}},
                 std::string(to_string(m)) + "\n");
        return 0;
    }
    if (problem.is_regular()) {
        out.emit(problem_to_json(problem), problem_to_json(problem).dump(2) + "\n");
        return 0;
    }
    json info{{"name", problem.name},
              {"alphabet", problem.alphabet},
              {"flavor", "predicate"},
              {"bound", problem.predicate().bound}};
    out.emit(info, info.dump(2) + "\n");
    return 0;
}

int cmd_construct(const FamilyFlags& flags, const Output& out) {
    Machine m;
    if (flags.name == "Ml")
        m = build_ml(flags.l.value_or(1));
    else if (flags.name == "Ap")
        m = build_ap(flags.p.value_or(7));
    else if (flags.name == "ApEps")
        m = build_ap_eps(flags.p.value_or(7), flags.eps.value_or(1.0 / 3.0));
    else if (flags.name == "PloyEQqcfa")
        m = build_ployeq_qcfa(flags.eps.value_or(1.0 / 3.0));
    else if (flags.name == "PQcycle")
        m = build_pq_cycle_pvdfa(flags.p.value_or(4), flags.q.value_or(6));
    else if (flags.name == "ApSolver")
        m = build_ap_solver_dfa(flags.p.value_or(7));
    else
        throw ValidationError("unknown constructor \"" + flags.name +
                              "\"; known: Ml, Ap, ApEps, PloyEQqcfa, PQcycle, ApSolver");
    json j = to_json(m);
    out.emit(j, j.dump(2) + "\n");
    return 0;
}

int cmd_minimize(const std::string& machine_path, const Output& out) {
    Machine m = load_machine(machine_path);
    json j;
    if (auto* dfa = std::get_if<Dfa>(&m))
        j = to_json(minimize_dfa(*dfa));
    else if (auto* pv = std::get_if<PvDfa>(&m))
        j = to_json(minimize_pvdfa(*pv));
    else
        throw ValidationError("minimize expects a dfa or pvdfa machine");
    out.emit(j, j.dump(2) + "\n");
    return 0;
}

PvDfa load_pvdfa(const std::string& path) {
    Machine m = load_machine(path);
    if (auto* pv = std::get_if<PvDfa>(&m)) return *pv;
    if (auto* dfa = std::get_if<Dfa>(&m)) return as_pvdfa(*dfa);
    throw ValidationError("expected a dfa or pvdfa machine in \"" + path + "\"");
}

int cmd_compare(const std::string& a_path, const std::string& b_path, const Output& out) {
    CompareResult r = pvdfa_compare(load_pvdfa(a_path), load_pvdfa(b_path));
    json j{{"relation", to_string(r.relation)},
           {"witness_yes", r.witness_yes ? json(*r.witness_yes) : json()},
           {"witness_no", r.witness_no ? json(*r.witness_no) : json()}};
    out.emit(j, j.dump(2) + "\n");
    return 0;
}

int cmd_complexity(const FamilyFlags& flags, const std::string& problem_path,
                   const Output& out) {
    PromiseProblem problem = problem_path.empty()
                                 ? make_family(flags.name, flags.params())
                                 : load_problem(problem_path);
    ComplexityReport r = verify_bounds(problem);
    json checks = json::array();
    for (const BoundCheck& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds},
             {"tight", c.tight}});
    json j{{"problem", r.problem},
           {"s_yes", r.s_yes},
           {"s_no", r.s_no},
           {"sr", r.sr},
           {"ss", r.ss ? json(*r.ss) : json()},
           {"ss_max_states", r.ss_max_states},
           {"bounds", checks},
           {"sr_witness", to_json(r.sr_witness)}};
    if (r.ss_witness) j["ss_witness"] = to_json(*r.ss_witness);

    std::string table;
    if (out.format == "csv") {
        table = "problem,s_yes,s_no,sr,ss,bounds_ok\n" + r.problem + "," +
                std::to_string(r.s_yes) + "," + std::to_string(r.s_no) + "," +
                std::to_string(r.sr) + "," + (r.ss ? std::to_string(*r.ss) : "") + "," +
                (r.all_hold() ? "yes" : "no") + "\n";
    } else {
        table = r.problem + ": s_yes=" + std::to_string(r.s_yes) +
                " s_no=" + std::to_string(r.s_no) + " sr=" + std::to_string(r.sr) +
                " ss=" + (r.ss ? std::to_string(*r.ss) : "unknown") + "\n";
        for (const BoundCheck& c : r.checks)
            table += std::string(c.holds ? "  ok   " : "  FAIL ") + c.name + " (" +
                     std::to_string(c.lhs) + " vs " + std::to_string(c.rhs) + ")" +
                     (c.tight ? " tight" : "") + "\n";
    }
    out.emit(j, table);
    return r.all_hold() ? 0 : 1;
}

int cmd_verify(const std::string& id, const TheoremParams& params, const Output& out) {
    VerificationReport r = verify_theorem(id, params);
    json checks = json::array();
    std::string table = r.id + "\n";
    for (const CheckLine& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        table += std::string(c.pass ? "  PASS " : "  FAIL ") + c.name;
        if (!c.detail.empty()) table += " [" + c.detail + "]";
        table += "\n";
    }
    table += r.pass() ? "PASS\n" : "FAIL\n";
    out.emit(json{{"id", r.id}, {"pass", r.pass()}, {"checks", checks}}, table);
    return r.pass() ? 0 : 1;
}

int cmd_sample(const std::string& machine_path, const std::string& word,
               std::uint64_t seed, int samples, const Output& out) {
    Machine m = load_machine(machine_path);
    auto* qc = std::get_if<Qcfa1>(&m);
    if (!qc) throw ValidationError("sample expects a qcfa1 machine");
    int accepted = 0;
    std::string last;
    for (int i = 0; i < samples; ++i) {
        Verdict v = qcfa_sample(*qc, word, seed + static_cast<std::uint64_t>(i));
        if (v == Verdict::Accept) ++accepted;
        last = to_string(v);
    }
    if (samples == 1) {
        out.emit(json{{"word", word}, {"verdict", last}}, last + "\n");
    } else {
        double freq = static_cast<double>(accepted) / samples;
        out.emit(json{{"word", word}, {"samples", samples}, {"accept_frequency", freq}},
                 "accept frequency " + fmt(freq) + " over " + std::to_string(samples) +
                     " samples\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for classical and quantum finite automata over promise problems"};
    app.require_subcommand(1);

    std::string machine_path, word, word_file, a_path, b_path, classify_arg, theorem_id;
    std::uint64_t seed = 0;
    int samples = 1;
    Output out;
    FamilyFlags family, construct_flags, complexity_flags;
    TheoremParams tparams;

    auto* run = app.add_subcommand("run", "Classify words with a dfa or pvdfa");
    run->add_option("--machine", machine_path, "Machine JSON file")->required();
    run->add_option("--word", word, "Input word");
    run->add_option("--word-file", word_file, "File with one word per line");
    add_output_flags(run, out);

    auto* prob = app.add_subcommand("prob", "Acceptance probabilities of a stochastic machine");
    prob->add_option("--machine", machine_path, "Machine JSON file")->required();
    prob->add_option("--word", word, "Input word");
    prob->add_option("--word-file", word_file, "File with one word per line");
    add_output_flags(prob, out);

    auto* fam = app.add_subcommand("family", "Build a problem family, classify or serialize");
    add_family_flags(fam, family, true);
    fam->add_option("--classify", classify_arg, "Word to classify against the family");
    add_output_flags(fam, out);

    auto* cons = app.add_subcommand("construct", "Emit one of the built-in machines as JSON");
    add_family_flags(cons, construct_flags, true);
    add_output_flags(cons, out);

    auto* mini = app.add_subcommand("minimize", "Minimize a dfa or pvdfa");
    mini->add_option("--machine", machine_path, "Machine JSON file")->required();
    add_output_flags(mini, out);

    auto* comp = app.add_subcommand("compare", "Order two pvdfa by component inclusion");
    comp->add_option("--a", a_path, "First machine")->required();
    comp->add_option("--b", b_path, "Second machine")->required();
    add_output_flags(comp, out);

    std::string problem_path;
    auto* cplx = app.add_subcommand("complexity", "State-complexity report for a family");
    add_family_flags(cplx, complexity_flags, false);
    cplx->add_option("--problem", problem_path, "Problem JSON file (pair of DFAs or descriptor)");
    add_output_flags(cplx, out);

    auto* verify = app.add_subcommand("verify-theorem", "Run a verification suite");
    verify->add_option("id", theorem_id, "Suite id (T3, T5, ..., T20-construct)")->required();
    verify->add_option("--family", tparams.family, "Family name for suites taking a problem");
    verify->add_option("--tolerance", tparams.tolerance, "Certainty tolerance (default 1e-9)");
    verify->add_option("--N", tparams.n, "Cycle length N");
    verify->add_option("--l", tparams.l, "Parameter l");
    verify->add_option("--p", tparams.p, "Parameter p");
    verify->add_option("--q", tparams.q, "Parameter q");
    verify->add_option("--r1", tparams.r1, "First residue");
    verify->add_option("--r2", tparams.r2, "Second residue");
    verify->add_option("--max-len", tparams.max_len, "Word-length bound");
    verify->add_option("--max-states", tparams.max_states, "State budget for searches");
    verify->add_option("--eps", tparams.eps, "Error bound epsilon");
    add_output_flags(verify, out);

    auto* sample = app.add_subcommand("sample", "Monte-Carlo runs of a qcfa1");
    sample->add_option("--machine", machine_path, "Machine JSON file")->required();
    sample->add_option("--word", word, "Input word")->required();
    sample->add_option("--seed", seed, "Base PRNG seed")->capture_default_str();
    sample->add_option("--samples", samples, "Number of runs")->capture_default_str();
    add_output_flags(sample, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(machine_path, word, word_file, out);
        if (prob->parsed()) return cmd_prob(machine_path, word, word_file, out);
        if (fam->parsed()) return cmd_family(family, classify_arg, out);
        if (cons->parsed()) return cmd_construct(construct_flags, out);
        if (mini->parsed()) return cmd_minimize(machine_path, out);
        if (comp->parsed()) return cmd_compare(a_path, b_path, out);
        if (cplx->parsed()) {
            if (problem_path.empty() && complexity_flags.name.empty())
                throw ValidationError("complexity needs --name or --problem");
            return cmd_complexity(complexity_flags, problem_path, out);
        }
        if (verify->parsed()) return cmd_verify(theorem_id, tparams, out);
        if (sample->parsed()) return cmd_sample(machine_path, word, seed, samples, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
