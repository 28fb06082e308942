#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "promisefa/classical.hpp"
#include "promisefa/promise.hpp"
#include "promisefa/quantum.hpp"

namespace promisefa {

using Machine = std::variant<Dfa, PvDfa, Pfa, Mo1Qfa, PvMo1Qfa, Qcfa1>;

nlohmann::json to_json(const Dfa& m);
nlohmann::json to_json(const PvDfa& m);
nlohmann::json to_json(const Pfa& m);
nlohmann::json to_json(const Mo1Qfa& m);
nlohmann::json to_json(const PvMo1Qfa& m);
nlohmann::json to_json(const Qcfa1& m);
nlohmann::json to_json(const Machine& m);

/// Parses any machine kind from the shared JSON format; validates all
/// invariants and throws ValidationError naming the first violation.
Machine machine_from_json(const nlohmann::json& j);

Machine load_machine(const std::string& path);
void save_machine(const Machine& m, const std::string& path);

/// Builds a family problem from a descriptor { "family": name, "params":
/// {...} }. Known families: ANl, ANr1r2, Al, Bl, C, PloyEQ, Ap, ApEps, PQ,
/// ParityEq.
PromiseProblem family_from_descriptor(const nlohmann::json& j);
PromiseProblem make_family(const std::string& name, const nlohmann::json& params);

/// Serializes a Regular-flavor problem as a pair of DFAs.
nlohmann::json problem_to_json(const PromiseProblem& p);

/// Accepts either the pair-of-DFAs form or a family descriptor.
PromiseProblem problem_from_json(const nlohmann::json& j);
PromiseProblem load_problem(const std::string& path);

}  // namespace promisefa
