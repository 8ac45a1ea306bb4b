#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dumont/config.hpp"
#include "dumont/grammar.hpp"
#include "dumont/identities.hpp"
#include "dumont/numcheck.hpp"
#include "dumont/permstats.hpp"
#include "dumont/series.hpp"
#include "dumont/triangle.hpp"

namespace {

using dumont::RunConfig;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

// Grammar literals get a ring built from the identifiers in order of first
// appearance, so "w->w*x; x->y*z; ..." works without declaring variables.
dumont::Grammar grammar_from_spec(const std::string& spec) {
    if (spec == "schett") return dumont::Grammar::schett();
    if (spec == "extended") return dumont::Grammar::schett_extended();
    if (spec == "eulerian") return dumont::Grammar::eulerian();
    std::vector<std::string> names;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty() && !std::isdigit(static_cast<unsigned char>(cur[0])) &&
            std::find(names.begin(), names.end(), cur) == names.end())
            names.push_back(cur);
        cur.clear();
    };
    for (char ch : spec) {
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') cur += ch;
        else flush();
    }
    flush();
    if (names.empty()) throw std::invalid_argument("no variables found in grammar literal");
    return dumont::Grammar::parse(dumont::make_ring(names), spec);
}

std::string triangle_pretty(const dumont::Triangle& tr) {
    std::ostringstream os;
    os << "triangle " << tr.name << " (" << tr.provenance << "), n <= " << tr.nmax << "\n";
    for (int n = 0; n <= tr.nmax; ++n) {
        int imax = -1, jmax = -1;
        for (const auto& [k, v] : tr.entries)
            if (k[0] == n) {
                imax = std::max(imax, k[1]);
                jmax = std::max(jmax, k[2]);
            }
        if (imax < 0) continue;
        os << "n=" << n << "\n";
        for (int i = 0; i <= imax; ++i) {
            os << "  i=" << i << ":";
            for (int j = 0; j <= jmax; ++j) os << " " << tr.entry(n, i, j).get_str();
            os << "\n";
        }
    }
    return os.str();
}

int cmd_expand(const std::string& gspec, const std::string& op, const std::string& start, int n,
               bool all_levels, const std::string& format, const std::string& out) {
    dumont::Grammar g = grammar_from_spec(gspec);
    dumont::ExactPolynomial seed = dumont::ExactPolynomial::parse(g.ring(), start);
    dumont::OperatorSpec spec{dumont::operator_kind_from_string(op), g, seed};
    auto levels = dumont::iterate_levels(spec, n);
    if (format == "json") {
        nlohmann::json j{{"grammar", g.to_string()}, {"op", op}, {"start", start}, {"n", n}};
        if (all_levels) {
            nlohmann::json ls = nlohmann::json::array();
            for (const auto& p : levels) ls.push_back(p.to_string());
            j["levels"] = ls;
        } else {
            j["polynomial"] = levels.back().to_string();
        }
        emit(j.dump(2), out);
    } else {
        std::ostringstream os;
        if (all_levels)
            for (std::size_t k = 0; k < levels.size(); ++k)
                os << op << "^" << k << ": " << levels[k].to_string() << "\n";
        else
            os << levels.back().to_string() << "\n";
        emit(os.str(), out);
    }
    return 0;
}

int cmd_triangle(const std::string& name, const std::string& method, int nmax,
                 const std::string& format, const std::string& out) {
    auto arr = dumont::array_name_from_string(name);
    dumont::Triangle tr;
    if (method == "grammar") {
        tr = dumont::extract(arr, nmax);
    } else if (method == "recurrence") {
        tr = dumont::recur(arr, nmax);
    } else if (method == "both") {
        tr = dumont::extract(arr, nmax);
        dumont::Triangle other = dumont::recur(arr, nmax);
        if (!tr.same_entries(other)) {
            std::cerr << "grammar and recurrence triangles disagree for '" << name << "'\n";
            return 1;
        }
        tr.provenance = "both";
    } else {
        throw CLI::ValidationError("--method must be grammar, recurrence or both");
    }
    if (format == "json") emit(tr.to_json().dump(2), out);
    else if (format == "csv") emit(tr.to_csv(), out);
    else emit(triangle_pretty(tr), out);
    return 0;
}

int cmd_stats(const std::string& statistic, int n, bool force, const RunConfig& cfg,
              const std::string& format, const std::string& out) {
    int cap = cfg.sn_max;
    if (statistic == "descents-b") cap = cfg.bn_max;
    if (statistic == "matchings-odd-smaller") cap = cfg.matching_max;
    if (n > cap && !force)
        throw CLI::ValidationError("--n exceeds the enumeration bound (" + std::to_string(cap) +
                                   ") for " + statistic + "; pass --force to run anyway");

    if (statistic == "cycle-peaks-xy") {
        auto t = dumont::cycle_peaks_xy(n);
        if (format == "json") {
            nlohmann::json counts = nlohmann::json::object();
            for (const auto& [k, v] : t.counts)
                counts[std::to_string(k.first) + "," + std::to_string(k.second)] = v.get_str();
            emit(nlohmann::json{{"statistic", t.statistic}, {"n", n}, {"counts", counts}}.dump(2),
                 out);
        } else {
            std::ostringstream os;
            if (format == "csv") os << "x,y,count\n";
            for (const auto& [k, v] : t.counts)
                os << k.first << "," << k.second << "," << v.get_str() << "\n";
            emit(os.str(), out);
        }
        return 0;
    }

    dumont::DistributionTable t;
    if (statistic == "interior-peaks") t = dumont::interior_peaks(n);
    else if (statistic == "left-peaks") t = dumont::left_peaks(n);
    else if (statistic == "descents") t = dumont::descents(n);
    else if (statistic == "descents-b") t = dumont::descents_type_b(n);
    else if (statistic == "alternating-runs") t = dumont::alternating_runs(n);
    else if (statistic == "updown-runs") t = dumont::up_down_runs(n);
    else if (statistic == "longest-alt-subseq") t = dumont::longest_alt_subseq(n);
    else if (statistic == "matchings-odd-smaller") t = dumont::matchings_odd_smaller(n);
    else throw CLI::ValidationError("unknown statistic: " + statistic);

    if (format == "json") {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [k, v] : t.counts) counts[std::to_string(k)] = v.get_str();
        emit(nlohmann::json{{"statistic", t.statistic}, {"n", n}, {"counts", counts}}.dump(2),
             out);
    } else {
        std::ostringstream os;
        if (format == "csv") os << "k,count\n";
        for (const auto& [k, v] : t.counts) os << k << "," << v.get_str() << "\n";
        emit(os.str(), out);
    }
    return 0;
}

int cmd_series(const std::string& function, int order, const std::string& ring,
               const std::string& format, const std::string& out) {
    dumont::JacobiSeries js =
        ring == "two-param" ? dumont::jacobi_two_param(order) : dumont::jacobi_classical(order);
    const dumont::FormalPowerSeries& f =
        function == "sn" ? js.sn : function == "cn" ? js.cn : js.dn;
    if (function != "sn" && function != "cn" && function != "dn")
        throw CLI::ValidationError("--function must be sn, cn or dn");
    if (format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int m = 0; m <= order; ++m) coeffs.push_back(f.coeff(m).to_string());
        emit(nlohmann::json{{"function", function},
                            {"ring", ring},
                            {"order", order},
                            {"coeffs", coeffs},
                            {"scaling", "coeffs[m] holds m! times the u^m coefficient"}}
                 .dump(2),
             out);
    } else {
        std::ostringstream os;
        for (int m = 0; m <= order; ++m)
            os << m << ": " << f.coeff(m).to_string() << "\n";
        emit(os.str(), out);
    }
    return 0;
}

int cmd_verify(const std::string& id, std::optional<int> nmax, const RunConfig& cfg, bool list,
               const std::string& format, const std::string& out) {
    if (list) {
        std::ostringstream os;
        for (const auto& i : dumont::identity_ids()) os << i << "\n";
        emit(os.str(), out);
        return 0;
    }
    dumont::IdentityContext ctx(cfg);
    std::vector<dumont::VerificationReport> reports;

    auto run_case = [&](const std::string& case_id) {
        auto task = std::async(std::launch::async, [&]() -> std::vector<dumont::VerificationReport> {
            if (case_id == "cross-method")
                return {dumont::check_cross_method(ctx, nmax.value_or(12))};
            return dumont::run_identity(case_id, ctx, nmax);
        });
        auto budget = std::chrono::duration<double>(cfg.case_timeout_seconds);
        if (task.wait_for(budget) != std::future_status::ready) {
            std::cerr << "case '" << case_id << "' exceeded the per-case timeout ("
                      << cfg.case_timeout_seconds << " s)\n";
            std::exit(1);
        }
        for (auto& r : task.get()) reports.push_back(std::move(r));
    };

    if (id == "all")
        for (const auto& case_id : dumont::identity_ids()) run_case(case_id);
    else
        run_case(id);

    bool ok = dumont::all_pass(reports);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        emit(arr.dump(2), out);
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.range << "]";
            if (!r.note.empty()) os << "  (" << r.note << ")";
            if (!r.pass) os << "\n     counterexample: " << r.counterexample;
            os << "\n";
        }
        os << (ok ? "all checks passed\n" : "verification FAILED\n");
        emit(os.str(), out);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dumont differential system toolkit: grammar expansion, coefficient "
                 "triangles, permutation statistics, Jacobi series and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    RunConfig cfg;
    std::string config_path, format = "pretty", out_path;
    int threads = 0;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--format", format, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "enumeration worker threads (default: DUMONT_THREADS)");

    auto* expand = app.add_subcommand("expand", "iterate a grammar derivative on a seed");
    std::string gspec = "schett", op = "D", start = "x";
    int n = 1;
    bool all_levels = false;
    expand->add_option("--grammar", gspec, "schett, extended, eulerian or a rule literal");
    expand->add_option("--op", op, "operator: D, xD or Dx");
    expand->add_option("--start", start, "seed polynomial");
    expand->add_option("--n", n, "number of applications")->check(CLI::NonNegativeNumber);
    expand->add_flag("--all-levels", all_levels, "print every level 0..n");

    auto* triangle = app.add_subcommand("triangle", "build a coefficient triangle");
    std::string tname = "t", method = "both";
    int tnmax = 8;
    triangle->add_option("--name", tname, "one of s, a, b, c, d, t, r")->required();
    triangle->add_option("--method", method, "grammar, recurrence or both");
    triangle->add_option("--nmax", tnmax, "maximum level")->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("stats", "enumerate a permutation statistic");
    std::string statistic;
    int sn = 6;
    bool force = false;
    stats->add_option("--statistic", statistic,
                      "interior-peaks, left-peaks, descents, descents-b, cycle-peaks-xy, "
                      "alternating-runs, updown-runs, longest-alt-subseq, matchings-odd-smaller")
        ->required();
    stats->add_option("--n", sn, "domain size")->check(CLI::PositiveNumber);
    stats->add_flag("--force", force, "allow n beyond the default enumeration bound");

    auto* series = app.add_subcommand("series", "Maclaurin series of sn/cn/dn");
    std::string function = "sn", ring = "classical";
    int order = 12;
    series->add_option("--function", function, "sn, cn or dn");
    series->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
    series->add_option("--ring", ring, "classical or two-param")
        ->check(CLI::IsMember({"classical", "two-param"}));

    auto* verify = app.add_subcommand("verify", "run identity and closed-form checks");
    std::string vid = "all";
    int vnmax = -1;
    bool list = false;
    verify->add_option("--id", vid, "case id or 'all'");
    verify->add_option("--nmax", vnmax, "range override (capped per enumeration domain)");
    verify->add_option("--order", cfg.egf_order, "EGF truncation order for numeric checks");
    verify->add_option("--samples", cfg.samples, "samples per closed-form check");
    verify->add_option("--tol", cfg.tol, "relative tolerance for numeric checks");
    verify->add_option("--seed", cfg.seed, "sample RNG seed");
    verify->add_option("--rk-steps", cfg.rk_steps, "integrator steps");
    verify->add_flag("--list", list, "list the available case ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) cfg = dumont::load_config_file(config_path, cfg);
        if (threads > 0) setenv("DUMONT_THREADS", std::to_string(threads).c_str(), 1);
        cfg.validate();

        if (app.got_subcommand(expand))
            return cmd_expand(gspec, op, start, n, all_levels, format, out_path);
        if (app.got_subcommand(triangle))
            return cmd_triangle(tname, method, tnmax, format, out_path);
        if (app.got_subcommand(stats)) return cmd_stats(statistic, sn, force, cfg, format, out_path);
        if (app.got_subcommand(series)) return cmd_series(function, order, ring, format, out_path);
        if (app.got_subcommand(verify))
            return cmd_verify(vid, vnmax < 0 ? std::nullopt : std::optional<int>(vnmax), cfg,
                              list, format, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
