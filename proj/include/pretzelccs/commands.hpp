#pragma once

#include <string>

#include <json.hpp>

#include "pretzelccs/obstruction.hpp"

namespace pretzel {

// Exit codes shared by the CLI and the command layer.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitViolation = 3;

struct CommandResult {
    int code = kExitOk;
    std::string output;  // complete stdout payload, newline-terminated
};

nlohmann::json knot_json(const PretzelKnot& k);
PretzelKnot knot_from_json(const nlohmann::json& j);
nlohmann::json invariants_json(const InvariantSet& inv);
nlohmann::json verdict_json(const Verdict& v);
std::string sigma_table_csv(const std::vector<SigmaRow>& rows);
nlohmann::json sigma_table_json(const PretzelKnot& k, const std::vector<SigmaRow>& rows);

CommandResult cmd_invariants(const std::string& knot_text);
CommandResult cmd_sigtable(const std::string& knot_text, unsigned pmax, const std::string& format,
                           unsigned jobs);
CommandResult cmd_check(const std::string& knot_text);

struct SurveyConfig {
    unsigned genus_min = 2;
    unsigned genus_max = 2;
    unsigned max_sum = 4;
    long max_twist = -1;         // < 0: unbounded
    std::string format = "json";  // "json" or "csv"
    unsigned jobs = 1;
    std::string out_path;  // empty: stdout only

    void validate() const;
};

// Decides every canonical knot with positive twist sum in the range and
// renders the verdicts; writes to out_path when set.
CommandResult cmd_survey(const SurveyConfig& config);

CommandResult cmd_verify(unsigned genus, unsigned max_sum, unsigned jobs);

// Recomputes the golden tables shipped in data/ and the desk-scale
// verdict ranges; exits nonzero on any mismatch.
CommandResult cmd_reproduce_paper(const std::string& data_dir, unsigned jobs);

}  // namespace pretzel
