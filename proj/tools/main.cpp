#include <CLI11.hpp>

#include <iostream>

#include "pretzelccs/commands.hpp"

namespace {

int emit(const pretzel::CommandResult& result) {
    if (result.code == pretzel::kExitOk)
        std::cout << result.output;
    else
        std::cerr << result.output;
    return result.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants, certified signatures, and chirally cosmetic surgery "
                 "obstructions for alternating odd pretzel knots K(k1,...,k_{2g+1})"};
    app.require_subcommand(1);

    std::string knot_text;
    std::string format = "csv";
    std::string out_path;
    std::string data_dir = "data";
    unsigned pmax = 52;
    unsigned genus = 0;
    unsigned max_sum = 6;
    long max_twist = -1;
    unsigned jobs = 1;

    auto* invariants = app.add_subcommand("invariants", "Conway coefficients, v3, and routes as JSON");
    invariants->add_option("knot", knot_text, "knot, e.g. \"K(1,0,0,0,0)\"")->required();

    auto* sigtable = app.add_subcommand("sigtable", "exact sigma(K,p)/p table");
    sigtable->add_option("knot", knot_text)->required();
    sigtable->add_option("--pmax", pmax, "largest p (default 52)");
    sigtable->add_option("--format", format, "json|csv (default csv)");
    sigtable->add_option("--jobs", jobs, "worker threads");

    auto* check = app.add_subcommand("check", "obstruction verdict for one knot as JSON");
    check->add_option("knot", knot_text)->required();

    auto* survey = app.add_subcommand("survey", "decide a whole genus/twist range");
    unsigned genus_min = 2, genus_max = 0;
    survey->add_option("--genus", genus_min, "genus (or lower genus of a range)")->required();
    survey->add_option("--genus-max", genus_max, "upper genus (default: same as --genus)");
    survey->add_option("--max-sum", max_sum, "largest twist sum")->required();
    survey->add_option("--max-twist", max_twist, "per-strand twist bound (default: none)");
    survey->add_option("--format", format, "json|csv (default csv)");
    survey->add_option("--jobs", jobs, "worker threads");
    survey->add_option("--out", out_path, "write the report to a file");

    auto* verify = app.add_subcommand("verify", "assert the no-surgery verdicts over a range");
    verify->add_option("--genus", genus, "2 or 3 (default: both at desk scale)");
    verify->add_option("--max-sum", max_sum, "largest twist sum (default 6)");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* reproduce = app.add_subcommand("reproduce-paper",
                                         "recompute and diff the golden tables in data/");
    reproduce->add_option("--data", data_dir, "directory with the golden CSV files");
    reproduce->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : pretzel::kExitParse;
    }

    try {
        if (invariants->parsed()) return emit(pretzel::cmd_invariants(knot_text));
        if (sigtable->parsed()) {
            if (!sigtable->count("--format")) format = "csv";
            return emit(pretzel::cmd_sigtable(knot_text, pmax, format, jobs));
        }
        if (check->parsed()) return emit(pretzel::cmd_check(knot_text));
        if (survey->parsed()) {
            pretzel::SurveyConfig config;
            config.genus_min = genus_min;
            config.genus_max = genus_max == 0 ? genus_min : genus_max;
            config.max_sum = max_sum;
            config.max_twist = max_twist;
            config.format = survey->count("--format") ? format : "csv";
            config.jobs = jobs;
            config.out_path = out_path;
            return emit(pretzel::cmd_survey(config));
        }
        if (verify->parsed()) return emit(pretzel::cmd_verify(genus, max_sum, jobs));
        if (reproduce->parsed()) return emit(pretzel::cmd_reproduce_paper(data_dir, jobs));
    } catch (const pretzel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
