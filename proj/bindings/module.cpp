#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dumont/config.hpp"
#include "dumont/grammar.hpp"
#include "dumont/identities.hpp"
#include "dumont/numcheck.hpp"
#include "dumont/permstats.hpp"
#include "dumont/series.hpp"
#include "dumont/triangle.hpp"

namespace py = pybind11;

namespace {

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
    return dumont::Grammar::parse(dumont::make_ring(names), spec);
}

py::list expand(const std::string& grammar, const std::string& op, const std::string& start,
                int n) {
    dumont::Grammar g = grammar_from_spec(grammar);
    dumont::OperatorSpec spec{dumont::operator_kind_from_string(op), g,
                              dumont::ExactPolynomial::parse(g.ring(), start)};
    py::list out;
    for (const auto& level : dumont::iterate_levels(spec, n)) out.append(level.to_string());
    return out;
}

py::dict triangle(const std::string& name, const std::string& method, int nmax) {
    auto arr = dumont::array_name_from_string(name);
    dumont::Triangle tr;
    if (method == "grammar") tr = dumont::extract(arr, nmax);
    else if (method == "recurrence") tr = dumont::recur(arr, nmax);
    else if (method == "both") {
        tr = dumont::extract(arr, nmax);
        if (!tr.same_entries(dumont::recur(arr, nmax)))
            throw std::runtime_error("grammar and recurrence triangles disagree");
        tr.provenance = "both";
    } else {
        throw std::invalid_argument("method must be grammar, recurrence or both");
    }
    py::list entries;
    for (const auto& [k, v] : tr.entries)
        entries.append(py::make_tuple(k[0], k[1], k[2], v.get_str()));
    py::dict d;
    d["name"] = tr.name;
    d["nmax"] = tr.nmax;
    d["provenance"] = tr.provenance;
    d["entries"] = entries;
    return d;
}

py::dict stats(const std::string& statistic, int n) {
    py::dict counts;
    if (statistic == "cycle-peaks-xy") {
        for (const auto& [k, v] : dumont::cycle_peaks_xy(n).counts)
            counts[py::make_tuple(k.first, k.second)] = v.get_str();
    } else {
        dumont::DistributionTable t;
        if (statistic == "interior-peaks") t = dumont::interior_peaks(n);
        else if (statistic == "left-peaks") t = dumont::left_peaks(n);
        else if (statistic == "descents") t = dumont::descents(n);
        else if (statistic == "descents-b") t = dumont::descents_type_b(n);
        else if (statistic == "alternating-runs") t = dumont::alternating_runs(n);
        else if (statistic == "updown-runs") t = dumont::up_down_runs(n);
        else if (statistic == "longest-alt-subseq") t = dumont::longest_alt_subseq(n);
        else if (statistic == "matchings-odd-smaller") t = dumont::matchings_odd_smaller(n);
        else throw std::invalid_argument("unknown statistic: " + statistic);
        for (const auto& [k, v] : t.counts) counts[py::int_(k)] = v.get_str();
    }
    py::dict d;
    d["statistic"] = statistic;
    d["n"] = n;
    d["counts"] = counts;
    return d;
}

py::dict series(const std::string& function, int order, const std::string& ring) {
    dumont::JacobiSeries js =
        ring == "two-param" ? dumont::jacobi_two_param(order) : dumont::jacobi_classical(order);
    const dumont::FormalPowerSeries* f = nullptr;
    if (function == "sn") f = &js.sn;
    else if (function == "cn") f = &js.cn;
    else if (function == "dn") f = &js.dn;
    else throw std::invalid_argument("function must be sn, cn or dn");
    py::list coeffs;
    for (int m = 0; m <= order; ++m) coeffs.append(f->coeff(m).to_string());
    py::dict d;
    d["function"] = function;
    d["ring"] = ring;
    d["order"] = order;
    d["coeffs"] = coeffs;
    return d;
}

py::dict report_to_dict(const dumont::VerificationReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["range"] = r.range;
    d["status"] = r.pass ? "pass" : "fail";
    if (!r.counterexample.empty()) d["counterexample"] = r.counterexample;
    if (!r.note.empty()) d["note"] = r.note;
    d["elapsed_seconds"] = r.elapsed_seconds;
    if (r.samples >= 0) d["samples"] = r.samples;
    if (r.worst_rel_err >= 0) d["worst_rel_err"] = r.worst_rel_err;
    return d;
}

py::list verify(const std::string& id, std::optional<int> nmax, int samples, double tol,
                std::uint64_t seed, int order, int rk_steps) {
    dumont::RunConfig cfg;
    cfg.samples = samples;
    cfg.tol = tol;
    cfg.seed = seed;
    cfg.egf_order = order;
    cfg.rk_steps = rk_steps;
    cfg.validate();
    dumont::IdentityContext ctx(cfg);
    py::list out;
    if (id == "all") {
        for (auto& r : dumont::run_all_identities(ctx, nmax)) out.append(report_to_dict(r));
    } else if (id == "cross-method") {
        out.append(report_to_dict(dumont::check_cross_method(ctx, nmax.value_or(12))));
    } else {
        for (auto& r : dumont::run_identity(id, ctx, nmax)) out.append(report_to_dict(r));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dumont differential system toolkit: grammar derivatives, coefficient "
              "triangles, permutation statistics, Jacobi series and identity checks";

    m.def("expand", &expand, py::arg("grammar"), py::arg("op"), py::arg("start"), py::arg("n"),
          "Iterate a grammar derivative; returns the levels 0..n as strings.");
    m.def("triangle", &triangle, py::arg("name"), py::arg("method") = "both",
          py::arg("nmax") = 8, "Build a coefficient triangle.");
    m.def("stats", &stats, py::arg("statistic"), py::arg("n"),
          "Exact distribution of a permutation/matching statistic.");
    m.def("series", &series, py::arg("function"), py::arg("order") = 12,
          py::arg("ring") = "classical",
          "Factorial-scaled Maclaurin coefficients of sn/cn/dn.");
    m.def("verify", &verify, py::arg("id") = "all", py::arg("nmax") = std::nullopt,
          py::arg("samples") = 8, py::arg("tol") = 1e-8, py::arg("seed") = 42,
          py::arg("order") = 12, py::arg("rk_steps") = 512,
          "Run one identity/closed-form check (or all of them).");
    m.def("verify_ids", []() { return dumont::identity_ids(); },
          "All case ids known to verify().");
}
