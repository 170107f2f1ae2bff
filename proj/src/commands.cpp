#include "pretzelccs/commands.hpp"

#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace pretzel {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();  // beyond int64: exact decimal string
}

CommandResult run_guarded(const std::function<CommandResult()>& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return {kExitParse, std::string("error: ") + e.what() + "\n"};
    } catch (const BadLength& e) {
        return {kExitParse, std::string("error: ") + e.what() + "\n"};
    } catch (const NegativeTwist& e) {
        return {kExitParse, std::string("error: ") + e.what() + "\n"};
    } catch (const TheoremViolation& e) {
        return {kExitViolation, std::string("violation: ") + e.what() + "\n"};
    } catch (const GoldenMismatch& e) {
        return {kExitViolation, std::string("golden mismatch: ") + e.what() + "\n"};
    }
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

json knot_json(const PretzelKnot& k) {
    json j;
    j["twists"] = k.twists();
    return j;
}

PretzelKnot knot_from_json(const json& j) {
    if (!j.contains("twists") || !j["twists"].is_array())
        throw ParseError("knot JSON must carry a \"twists\" array");
    std::vector<long> twists;
    for (const auto& t : j["twists"]) {
        if (!t.is_number_integer()) throw ParseError("twist entries must be integers");
        twists.push_back(t.get<long>());
    }
    return PretzelKnot(std::move(twists));
}

json invariants_json(const InvariantSet& inv) {
    json j;
    j["knot"] = inv.knot.to_string();
    j["twists"] = inv.knot.twists();
    j["genus"] = inv.knot.genus();
    json conway = json::array();
    for (int i = 0; i <= inv.conway.poly().degree(); ++i)
        conway.push_back(json_int(inv.conway.poly().coeff(static_cast<std::size_t>(i))));
    if (inv.conway.poly().degree() < 0) conway.push_back(1);
    j["conway"] = std::move(conway);
    j["a2"] = json_int(inv.a2);
    if (inv.a4) j["a4"] = json_int(*inv.a4);
    if (inv.a6) j["a6"] = json_int(*inv.a6);
    j["v3"] = json_int(inv.v3);
    j["mirror"] = {{"v3", json_int(inv.mirror_v3())}};
    j["routes"] = inv.routes;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["knot"] = v.knot.to_string();
    j["genus"] = v.knot.genus();
    j["outcome"] = outcome_name(v.outcome);
    json reasons = json::array();
    for (const Reason& r : v.reasons) reasons.push_back({{"criterion", r.criterion}, {"detail", r.detail}});
    j["reasons"] = std::move(reasons);
    json survivors = json::array();
    for (const Survivor& s : v.survivors)
        survivors.push_back({{"p", json_int(s.p)}, {"q_plus_qprime", to_fraction_string(s.q_plus_qprime)}});
    j["survivors"] = std::move(survivors);
    return j;
}

std::string sigma_table_csv(const std::vector<SigmaRow>& rows) {
    std::ostringstream os;
    os << "p,sigma,sigma_over_p,coincidence\n";
    for (const SigmaRow& r : rows)
        os << r.p.get_str() << "," << r.sigma.get_str() << "," << to_fraction_string(r.ratio)
           << "," << (r.coincidence ? "true" : "false") << "\n";
    return os.str();
}

json sigma_table_json(const PretzelKnot& k, const std::vector<SigmaRow>& rows) {
    json j;
    j["knot"] = k.to_string();
    json arr = json::array();
    for (const SigmaRow& r : rows)
        arr.push_back({{"p", json_int(r.p)},
                       {"sigma", json_int(r.sigma)},
                       {"sigma_over_p", to_fraction_string(r.ratio)},
                       {"coincidence", r.coincidence}});
    j["rows"] = std::move(arr);
    return j;
}

CommandResult cmd_invariants(const std::string& knot_text) {
    return run_guarded([&] {
        PretzelKnot k = parse_knot(knot_text);
        return CommandResult{kExitOk, render(invariants_json(full_invariants(k)))};
    });
}

CommandResult cmd_sigtable(const std::string& knot_text, unsigned pmax, const std::string& format,
                           unsigned jobs) {
    return run_guarded([&] {
        if (format != "csv" && format != "json")
            throw ParseError("format must be json or csv, got \"" + format + "\"");
        PretzelKnot k = parse_knot(knot_text);
        if (pmax < 1) throw ParseError("--pmax must be >= 1");
        auto rows = sigma_ratio_table(k, pmax, jobs);
        std::string out = format == "csv" ? sigma_table_csv(rows)
                                          : render(sigma_table_json(k, rows));
        return CommandResult{kExitOk, std::move(out)};
    });
}

CommandResult cmd_check(const std::string& knot_text) {
    return run_guarded([&] {
        PretzelKnot k = parse_knot(knot_text);
        return CommandResult{kExitOk, render(verdict_json(decide(k)))};
    });
}

void SurveyConfig::validate() const {
    if (genus_min < 1 || genus_max < genus_min) throw ParseError("bad genus range");
    if (format != "json" && format != "csv")
        throw ParseError("format must be json or csv, got \"" + format + "\"");
    if (max_sum < 1) throw ParseError("--max-sum must be >= 1");
}

CommandResult cmd_survey(const SurveyConfig& config) {
    return run_guarded([&] {
        config.validate();
        std::vector<PretzelKnot> knots;
        for (unsigned g = config.genus_min; g <= config.genus_max; ++g) {
            auto part = enumerate_canonical(g, 1, config.max_sum, config.max_twist);
            knots.insert(knots.end(), part.begin(), part.end());
        }
        std::vector<Verdict> verdicts;
        verdicts.reserve(knots.size());
        for (const PretzelKnot& k : knots)
            verdicts.push_back(Verdict{k, Outcome::Inconclusive, {}, {}});
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&](unsigned t, unsigned step) {
            try {
                for (std::size_t i = t; i < knots.size(); i += step) verdicts[i] = decide(knots[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        if (config.jobs <= 1) {
            worker(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < config.jobs; ++t) pool.emplace_back(worker, t, config.jobs);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);

        std::string out;
        if (config.format == "json") {
            json arr = json::array();
            for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
            out = render(arr);
        } else {
            std::ostringstream os;
            os << "knot,genus,twist_sum,crossing_number,outcome,criterion\n";
            for (const Verdict& v : verdicts)
                os << v.knot.to_string() << "," << v.knot.genus() << ","
                   << v.knot.twist_sum().get_str() << "," << crossing_number(v.knot).get_str()
                   << "," << outcome_name(v.outcome) << ","
                   << (v.reasons.empty() ? "" : v.reasons.front().criterion) << "\n";
            out = os.str();
        }
        if (!config.out_path.empty()) {
            std::ofstream f(config.out_path);
            if (!f) throw Error("cannot write " + config.out_path);
            f << out;
            return CommandResult{kExitOk, "surveyed " + std::to_string(knots.size()) +
                                              " knots -> " + config.out_path + "\n"};
        }
        return CommandResult{kExitOk, std::move(out)};
    });
}

CommandResult cmd_verify(unsigned genus, unsigned max_sum, unsigned jobs) {
    return run_guarded([&] {
        VerifyConfig config;
        config.jobs = jobs;
        if (genus == 2)
            config.genus2_max_sum = max_sum;
        else if (genus == 3)
            config.genus3_max_sum = max_sum;
        else if (genus != 0)
            throw ParseError("verify supports --genus 2 or 3 (0 = both defaults)");
        VerifyReport report = verify_theorems(config);
        std::ostringstream os;
        for (const std::string& line : report.lines) os << line << "\n";
        os << "verified " << report.knots_checked << " knots: no violations\n";
        return CommandResult{kExitOk, os.str()};
    });
}

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GoldenMismatch("cannot open golden file " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

CommandResult cmd_reproduce_paper(const std::string& data_dir, unsigned jobs) {
    return run_guarded([&] {
        std::ostringstream os;

        // Genus-2 and genus-3 desk ranges.
        for (unsigned genus : {2u, 3u}) {
            unsigned max_sum = genus == 2 ? 6 : 5;
            auto knots = enumerate_canonical(genus, 1, max_sum);
            for (const PretzelKnot& k : knots) {
                Verdict v = decide(k);
                if (v.outcome != Outcome::NoCCS)
                    throw TheoremViolation("expected NoCCS for " + k.to_string() + ", got " +
                                           outcome_name(v.outcome));
            }
            PretzelKnot zero(std::vector<long>(2 * genus + 1, 0));
            if (decide(zero).outcome != Outcome::KnownChiral)
                throw TheoremViolation("expected KnownChiral for " + zero.to_string());
            os << "ok: genus " << genus << " range (0 < sum <= " << max_sum << ", "
               << knots.size() << " knots NoCCS, all-zero KnownChiral)\n";
        }

        // Golden F table for the nine genus-3 knots.  Knot names contain
        // commas, so the F value is everything after the last comma.
        auto f_rows = read_csv(data_dir + "/f_ratio_genus3.csv");
        if (f_rows.size() != 10)
            throw GoldenMismatch("f_ratio_genus3.csv: expected header + 9 rows");
        for (std::size_t i = 1; i < f_rows.size(); ++i) {
            const auto& row = f_rows[i];
            if (row.size() < 2) throw GoldenMismatch("f_ratio_genus3.csv: bad row");
            std::string knot_text;
            for (std::size_t c = 0; c + 1 < row.size(); ++c)
                knot_text += (c ? "," : "") + row[c];
            PretzelKnot k = parse_knot(knot_text);
            std::string got = to_fraction_string(strong_ratio(k).value);
            if (got != row.back())
                throw GoldenMismatch("F(" + k.to_string() + ") = " + got + ", golden says " +
                                     row.back());
        }
        os << "ok: F table (9 genus-3 knots)\n";

        // Golden sigma/p table for K(1,0,0,0,0,0,0), p = 1..52.
        PretzelKnot k1(std::vector<long>{1, 0, 0, 0, 0, 0, 0});
        auto sigma_rows = read_csv(data_dir + "/sigma_over_p.csv");
        if (sigma_rows.size() != 53)
            throw GoldenMismatch("sigma_over_p.csv: expected header + 52 rows");
        auto table = sigma_ratio_table(k1, 52, jobs);
        for (std::size_t i = 1; i < sigma_rows.size(); ++i) {
            const auto& row = sigma_rows[i];
            if (row.size() != 4) throw GoldenMismatch("sigma_over_p.csv: bad row");
            const SigmaRow& got = table[i - 1];
            if (got.p.get_str() != row[0] || got.sigma.get_str() != row[1] ||
                to_fraction_string(got.ratio) != row[2] ||
                (got.coincidence ? "true" : "false") != row[3])
                throw GoldenMismatch("sigma/p at p=" + row[0] + ": computed " +
                                     got.sigma.get_str() + "," + to_fraction_string(got.ratio) +
                                     " vs golden " + row[1] + "," + row[2]);
        }
        os << "ok: sigma/p table (52 rows, no coincidences)\n";

        // Slope-sum endgame at p = 5.
        Rat endgame = cass_slope_sum(k1, 5);
        if (endgame != make_rat(Int(-5), Int(9)))
            throw GoldenMismatch("q+q' at p=5 = " + to_string(endgame) + ", expected -5/9");
        Verdict v1 = decide(k1);
        bool integrality_reason = false;
        for (const Reason& r : v1.reasons)
            if (r.criterion == "slope-sum-integrality") integrality_reason = true;
        if (v1.outcome != Outcome::NoCCS || !integrality_reason)
            throw TheoremViolation(k1.to_string() +
                                   " must be NoCCS through slope-sum integrality");
        os << "ok: endgame q+q' = -5/9 at p=5 rules out " << k1.to_string() << "\n";

        // Note on the two circulating readings of the genus-3 a4 closed
        // form: the all-seven-strand symmetric functions match the
        // determinant; the first-five-strand variant does not.
        PretzelKnot probe(std::vector<long>{1, 1, 1, 1, 1, 1, 0});
        Int det_a4 = conway_polynomial(probe).a2j(2);
        Int closed_a4 = a2_a4_a6_closed_genus3(probe).a4;
        std::vector<long> first_five(probe.twists().begin(), probe.twists().begin() + 5);
        std::vector<Int> s5 = elementary_symmetric_all(first_five);
        Int variant_a4 = 5 + 4 * s5[1] + 3 * s5[2] + 2 * s5[3] + s5[4];
        if (closed_a4 != det_a4)
            throw GoldenMismatch("genus-3 a4 closed form disagrees with the determinant on " +
                                 probe.to_string());
        os << "note: genus-3 a4 closed form uses all seven strands; on " << probe.to_string()
           << " the determinant gives " << det_a4.get_str() << ", the five-strand variant gives "
           << variant_a4.get_str() << (variant_a4 == det_a4 ? " (agrees)" : " (disagrees)")
           << "\n";

        os << "reproduction OK\n";
        return CommandResult{kExitOk, os.str()};
    });
}

}  // namespace pretzel
