#include "drg/cli.hpp"

#include "drg/errors.hpp"
#include "drg/graph.hpp"
#include "drg/harmonic.hpp"
#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"
#include "drg/oracle.hpp"
#include "drg/potentials.hpp"
#include "drg/rng.hpp"
#include "drg/spectral.hpp"
#include "drg/walk_stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace drg {

namespace {

using ordered_json = nlohmann::ordered_json;

// Flag combinations that parse but make no sense together; exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string array_text;
    std::string family_text;
    std::string gamma = "unknown";
    std::string kind;
    std::string mode;
    std::string distances;
    std::string values;
    bool csv = false;
    bool edges = false;
    std::uint64_t seed = 42;
    long long samples = 100000;
    double eps = 0.25;
    std::string laziness = "0";
    double s_point = 1.0;
    bool s_given = false;
    int gf_shell = 1;
    int series = 0;
    int alpha = 1;
    int r_shell = 0;
    int q = 2;
    int d_clique = 1;
};

GammaStatus gamma_of(const std::string& s) {
    if (s == "in") return GammaStatus::in_gamma;
    if (s == "out") return GammaStatus::not_in_gamma;
    return GammaStatus::unknown;
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "unresolved";
    }
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

std::vector<BigRational> parse_rationals(const std::string& text, const char* what) {
    std::vector<BigRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + item + "' is not a rational");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

ordered_json big_json(const BigInt& v) {
    static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
    static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

ordered_json header_json(const IntersectionArray& arr) {
    ordered_json j;
    j["array"] = arr.to_string();
    j["n"] = big_json(arr.vertex_count());
    j["k"] = arr.degree();
    j["D"] = arr.diameter();
    return j;
}

void put_rat(ordered_json& j, const std::string& key, const BigRational& x) {
    j[key] = rat_str(x);
    j[key + "_decimal"] = rat_double(x);
}

void put_rats(ordered_json& j, const std::string& key, const std::vector<BigRational>& xs) {
    ordered_json a = ordered_json::array(), d = ordered_json::array();
    for (const auto& x : xs) {
        a.push_back(rat_str(x));
        d.push_back(rat_double(x));
    }
    j[key] = a;
    j[key + "_decimal"] = d;
}

ordered_json interval_json(const RatInterval& iv) {
    ordered_json j;
    if (iv.is_point()) {
        j["exact"] = rat_str(iv.lo);
    } else {
        j["lo"] = rat_str(iv.lo);
        j["hi"] = rat_str(iv.hi);
    }
    j["decimal"] = iv.mid();
    return j;
}

ordered_json constant_json(const RegularityConstant& c) {
    ordered_json j;
    j["value"] = c.render();
    j["decimal"] = c.value();
    j["form"] = c.is_rational() ? "rational" : "surd";
    j["gamma"] = c.gamma == GammaStatus::in_gamma      ? "in"
                 : c.gamma == GammaStatus::not_in_gamma ? "out"
                                                        : "unknown";
    j["conservative"] = c.conservative;
    return j;
}

ordered_json brackets_json(const std::vector<BracketResult>& brs) {
    ordered_json a = ordered_json::array();
    for (const auto& b : brs) {
        ordered_json j;
        j["name"] = b.name;
        j["verdict"] = verdict_str(b.verdict);
        if (!b.detail.empty()) j["detail"] = b.detail;
        a.push_back(j);
    }
    return a;
}

ordered_json summary_json(const SimSummary& s) {
    ordered_json j;
    j["samples"] = s.samples;
    j["mean"] = s.mean;
    j["var"] = s.variance;
    j["stderr"] = s.std_error;
    return j;
}

void put_summary_flat(ordered_json& j, const SimSummary& s) {
    j["mean"] = s.mean;
    j["var"] = s.variance;
    j["stderr"] = s.std_error;
}

// Resistances are indexed by distance 1..D in output; the zero at distance 0
// carries no information.
std::vector<BigRational> drop_leading(const std::vector<BigRational>& xs) {
    return std::vector<BigRational>(xs.begin() + 1, xs.end());
}

IntersectionArray resolve_array(const Options& opt) {
    if (!opt.array_text.empty()) return IntersectionArray::parse(opt.array_text);
    return generate_family(FamilySpec::parse(opt.family_text));
}

std::optional<RegularityConstant> try_constant(const IntersectionArray& arr, GammaStatus gamma,
                                               std::string* reason) {
    try {
        return constant_C(arr, gamma);
    } catch (const ValidationError& e) {
        if (reason) *reason = e.what();
        return std::nullopt;
    }
}

// ---- verbs ----------------------------------------------------------------

int verb_info(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    if (opt.edges) {
        if (opt.family_text.empty())
            throw ValidationError("edge export needs --family with an explicit model");
        ExplicitGraph g = build_family(FamilySpec::parse(opt.family_text));
        for (const auto& [u, v] : edge_list(g)) out << u << " " << v << "\n";
        return 0;
    }
    ordered_json j = header_json(arr);
    ordered_json b = ordered_json::array(), c = ordered_json::array(), a = ordered_json::array();
    for (int i = 0; i < arr.diameter(); ++i) b.push_back(arr.b(i));
    for (int i = 1; i <= arr.diameter(); ++i) c.push_back(arr.c(i));
    for (int i = 0; i <= arr.diameter(); ++i) a.push_back(arr.a(i));
    j["b"] = b;
    j["c"] = c;
    j["a"] = a;
    ordered_json shells = ordered_json::array();
    for (const auto& ki : arr.shell_sizes()) shells.push_back(big_json(ki));
    j["shells"] = shells;
    j["edges"] = big_json(arr.edge_count());
    j["bipartite"] = arr.bipartite();
    if (!arr.warnings().empty()) j["warnings"] = arr.warnings();
    out << j.dump(2) << "\n";
    return 0;
}

int verb_potentials(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    PotentialTable pot = biggs_potentials(arr);
    if (opt.csv) {
        out << "i,phi,Phi,resistance\n";
        for (int i = 0; i <= arr.diameter(); ++i) {
            out << i << ",";
            if (i < arr.diameter()) out << decimal12(rat_double(pot.phi[i]));
            out << "," << decimal12(rat_double(pot.Phi[i])) << ","
                << decimal12(rat_double(pot.resistance[i])) << "\n";
        }
        return 0;
    }
    ordered_json j = header_json(arr);
    put_rats(j, "phi", pot.phi);
    put_rats(j, "Phi", pot.Phi);
    put_rats(j, "resistance", drop_leading(pot.resistance));
    out << j.dump(2) << "\n";
    return 0;
}

int verb_resistance(const IntersectionArray& arr, std::ostream& out) {
    PotentialTable pot = biggs_potentials(arr);
    ordered_json j = header_json(arr);
    put_rats(j, "resistance", drop_leading(pot.resistance));
    ordered_json ratio;
    const BigRational r = pot.resistance[arr.diameter()] / pot.resistance[1];
    put_rat(ratio, "d_D_over_d_1", r);
    j["spread"] = ratio;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_hitting(const IntersectionArray& arr, std::ostream& out) {
    HittingTable ht = hitting_moments(arr);
    ordered_json j = header_json(arr);
    put_rats(j, "H", drop_leading(ht.H));
    out << j.dump(2) << "\n";
    return 0;
}

int verb_moments(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    HittingTable ht = hitting_moments(arr);
    std::string reason;
    auto c = try_constant(arr, gamma_of(opt.gamma), &reason);
    ordered_json j = header_json(arr);
    put_rats(j, "H", drop_leading(ht.H));
    put_rats(j, "M2", drop_leading(ht.M2));
    put_rats(j, "Var", drop_leading(ht.Var));
    if (c) j["C"] = constant_json(*c);
    else j["C_unavailable"] = reason;
    j["brackets"] = brackets_json(check_moment_brackets(arr, ht, c));
    out << j.dump(2) << "\n";
    return 0;
}

int verb_cover(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    std::string reason;
    auto c = try_constant(arr, gamma_of(opt.gamma), &reason);
    CoverBounds cb = cover_bounds(arr, c);
    ordered_json j = header_json(arr);
    j["harmonic_number"] = cb.harmonic_number;
    if (cb.harmonic_exact) j["harmonic_number_exact"] = rat_str(*cb.harmonic_exact);
    j["matthews_lower"] = cb.matthews_lower;
    j["matthews_upper"] = cb.matthews_upper;
    if (cb.matthews_lower_exact) j["matthews_lower_exact"] = rat_str(*cb.matthews_lower_exact);
    if (cb.matthews_upper_exact) j["matthews_upper_exact"] = rat_str(*cb.matthews_upper_exact);
    j["closed_lower"] = cb.closed_lower;
    if (cb.closed_upper) j["closed_upper"] = *cb.closed_upper;
    if (c) j["C"] = constant_json(*c);
    else j["C_unavailable"] = reason;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_mixing(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    std::string reason;
    auto c = try_constant(arr, gamma_of(opt.gamma), &reason);
    MixingParams mp = f_and_mixing(arr, c);
    ordered_json j = header_json(arr);
    put_rat(j, "F", mp.F);
    put_rat(j, "tau0", mp.tau0);
    put_rat(j, "F_lower", mp.f_lower);
    if (mp.f_upper) j["F_upper"] = interval_json(*mp.f_upper);
    j["F_bracket"] = verdict_str(mp.f_bracket);
    if (mp.tau1_bound) j["tau1_bound"] = interval_json(*mp.tau1_bound);
    if (mp.tau2_bound) j["tau2_bound"] = interval_json(*mp.tau2_bound);
    if (!c) j["C_unavailable"] = reason;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_visits(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    if (opt.distances.empty())
        throw UsageError("visits needs --distances d_vu,d_wu,d_vw");
    std::vector<int> d = parse_ints(opt.distances, "--distances");
    if (d.size() != 3) throw UsageError("visits needs exactly three distances");
    VisitStats vs = visit_statistics(arr, d[0], d[1], d[2], gamma_of(opt.gamma));
    ordered_json j = header_json(arr);
    j["d_vu"] = d[0];
    j["d_wu"] = d[1];
    j["d_vw"] = d[2];
    put_rat(j, "p_visit", vs.p_visit);
    put_rat(j, "mean_visits", vs.mean_visits);
    put_rat(j, "var_visits", vs.var_visits);
    j["brackets"] = brackets_json(vs.brackets);
    if (d[0] >= 1) {
        try {
            DistinctVisits dv = expected_distinct_visits(arr, d[0], gamma_of(opt.gamma));
            put_rat(j, "expected_distinct", dv.value);
            j["distinct_brackets"] = brackets_json(dv.brackets);
        } catch (const NumericalError& e) {
            j["expected_distinct_unavailable"] = e.what();
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int verb_genfun(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    if (!opt.s_given) throw UsageError("genfun needs --s (evaluation point)");
    SpectralData sd = decompose(arr);
    ordered_json j = header_json(arr);
    j["i"] = opt.gf_shell;
    j["s"] = opt.s_point;
    j["value"] = generating_function(arr, sd, opt.gf_shell, opt.s_point);
    if (opt.series > 0) j["series"] = gf_series(arr, sd, opt.gf_shell, opt.series - 1);
    out << j.dump(2) << "\n";
    return 0;
}

int verb_spectrum(const IntersectionArray& arr, std::ostream& out) {
    SpectralData sd = decompose(arr);
    ordered_json j = header_json(arr);
    j["eigenvalues"] = sd.eigenvalues;
    j["multiplicities"] = sd.multiplicities;
    j["u"] = sd.u;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_tvcurve(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    ProjectedChain chain = projected_chain(arr, parse_rational(opt.laziness));
    MixingResult mr = mixing_time(chain, opt.eps);
    if (opt.csv) {
        out << "t,d\n";
        for (std::size_t t = 0; t < mr.curve.size(); ++t)
            out << t << "," << decimal12(rat_double(mr.curve[t])) << "\n";
        return 0;
    }
    ordered_json j = header_json(arr);
    j["eps"] = opt.eps;
    j["laziness"] = rat_str(chain.laziness);
    j["t_mix"] = mr.t_mix;
    j["capped"] = mr.capped;
    ordered_json curve = ordered_json::array();
    for (std::size_t t = 0; t < mr.curve.size(); ++t) {
        ordered_json row;
        row["t"] = t;
        row["d"] = rat_str(mr.curve[t]);
        row["d_decimal"] = rat_double(mr.curve[t]);
        curve.push_back(row);
    }
    j["curve"] = curve;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_greens(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    GreensValue gv = greens_function(arr, opt.alpha, opt.r_shell);
    ordered_json j = header_json(arr);
    j["alpha"] = opt.alpha;
    j["r"] = opt.r_shell;
    put_rat(j, "value", gv.value);
    put_rat(j, "shell_total", gv.shell_total);
    put_rat(j, "delta", gv.delta);
    out << j.dump(2) << "\n";
    return 0;
}

int verb_measure(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    ordered_json j = header_json(arr);
    j["kind"] = opt.kind;
    BigRational m;
    if (opt.kind == "two") {
        std::vector<int> d = parse_ints(opt.distances, "--distances");
        if (d.size() != 3) throw UsageError("two-point measure needs --distances h,d_uz,d_vz");
        m = two_point_measure(arr, d[0], d[1], d[2]);
        j["h"] = d[0];
        j["d_uz"] = d[1];
        j["d_vz"] = d[2];
    } else if (opt.kind == "three") {
        std::vector<int> d = parse_ints(opt.distances, "--distances");
        if (d.size() != 6)
            throw UsageError(
                "three-point measure needs --distances d_uv,d_uw,d_vw,d_uz,d_vz,d_wz");
        m = three_point_measure(arr, {d[0], d[1], d[2]}, {d[3], d[4], d[5]});
        j["pairwise"] = std::vector<int>{d[0], d[1], d[2]};
        j["query"] = std::vector<int>{d[3], d[4], d[5]};
    } else if (opt.kind == "clique") {
        std::vector<int> d = parse_ints(opt.distances, "--distances");
        if (static_cast<int>(d.size()) != opt.q)
            throw UsageError("clique measure needs --distances with q entries (z to each point)");
        std::vector<int> rest(d.begin() + 1, d.end());
        m = clique_measure(arr, opt.q, opt.d_clique, d[0], rest);
        j["q"] = opt.q;
        j["d"] = opt.d_clique;
        j["d_uz"] = d[0];
        j["d_rest"] = rest;
    } else {
        throw UsageError("measure --kind must be two, three, or clique");
    }
    put_rat(j, "measure", m);
    j["note"] = "formal value: the distance pattern is triangle-checked, not realizability-checked";
    out << j.dump(2) << "\n";
    return 0;
}

int verb_harnack(const IntersectionArray& arr, const Options& opt, std::ostream& out) {
    ordered_json j = header_json(arr);
    j["kind"] = opt.kind;
    HarnackResult hr;
    if (opt.kind == "two") {
        std::vector<int> d = parse_ints(opt.distances, "--distances");
        std::vector<BigRational> vals = parse_rationals(opt.values, "--values");
        if (d.size() != 3 || vals.size() != 2)
            throw UsageError("two-point bound needs --distances h,d_uz,d_vz and --values h(u),h(v)");
        hr = harnack_two_point(arr, gamma_of(opt.gamma), d[0], vals[0], vals[1], d[1], d[2]);
        j["h"] = d[0];
        j["d_uz"] = d[1];
        j["d_vz"] = d[2];
    } else if (opt.kind == "clique") {
        std::vector<int> d = parse_ints(opt.distances, "--distances");
        std::vector<BigRational> vals = parse_rationals(opt.values, "--values");
        if (static_cast<int>(d.size()) != opt.q || static_cast<int>(vals.size()) != opt.q)
            throw UsageError("clique bound needs q query distances and q boundary values");
        hr = harnack_clique(arr, gamma_of(opt.gamma), opt.q, opt.d_clique, vals, d);
        j["q"] = opt.q;
        j["d"] = opt.d_clique;
    } else {
        throw UsageError("harnack --kind must be two or clique");
    }
    put_rat(j, "deviation", hr.deviation);
    put_rat(j, "phi_bound", hr.phi_bound);
    j["bound"] = interval_json(hr.bound);
    j["holds"] = verdict_str(hr.holds);
    j["printed_constant"] = hr.printed_constant;
    j["halved"] = hr.halved;
    out << j.dump(2) << "\n";
    return 0;
}

int verb_simulate(const Options& opt, std::ostream& out) {
    if (opt.mode != "hitting" && opt.mode != "cover" && opt.mode != "visits")
        throw UsageError("simulate --mode must be hitting, cover, or visits");
    IntersectionArray arr = resolve_array(opt);
    ordered_json j = header_json(arr);
    j["mode"] = opt.mode;
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    j["rng"] = kRngAlgorithm;

    bool buildable = false;
    FamilySpec spec;
    if (!opt.family_text.empty()) {
        spec = FamilySpec::parse(opt.family_text);
        buildable = family_buildable(spec.name);
    }

    if (opt.mode == "hitting") {
        std::vector<int> d = opt.distances.empty() ? std::vector<int>{arr.diameter()}
                                                   : parse_ints(opt.distances, "--distances");
        if (d.size() != 1) throw UsageError("hitting simulation takes one distance");
        HittingTable ht = hitting_moments(arr);
        if (d[0] < 1 || d[0] > arr.diameter())
            throw ValidationError("start distance must lie in [1, D]");
        j["distance"] = d[0];
        put_rat(j, "exact_mean", ht.H[d[0]]);
        SimSummary s;
        if (buildable) {
            ExplicitGraph g = build_family(spec);
            std::vector<int> dist = bfs_distances(g, 0);
            int start = -1;
            for (int v = 0; v < g.n && start < 0; ++v)
                if (dist[v] == d[0]) start = v;
            j["model"] = "explicit";
            s = simulate_hitting(g, start, 0, opt.samples, opt.seed);
        } else {
            j["model"] = "projected";
            s = simulate_projected_hitting(arr, d[0], opt.samples, opt.seed);
        }
        put_summary_flat(j, s);
        double se = std::max(s.std_error, 1e-12);
        j["z"] = (s.mean - rat_double(ht.H[d[0]])) / se;
        out << j.dump(2) << "\n";
        return 0;
    }

    if (!buildable)
        throw ValidationError("mode '" + opt.mode +
                              "' needs a family with an explicit model (hitting works from the "
                              "array alone)");
    ExplicitGraph g = build_family(spec);

    if (opt.mode == "cover") {
        SimSummary s = simulate_cover(g, 0, opt.samples, opt.seed);
        put_summary_flat(j, s);
        std::string reason;
        auto c = try_constant(arr, gamma_of(opt.gamma), &reason);
        CoverBounds cb = cover_bounds(arr, c);
        j["matthews_lower"] = cb.matthews_lower;
        j["matthews_upper"] = cb.matthews_upper;
        out << j.dump(2) << "\n";
        return 0;
    }

    // visits: find a concrete triple realizing the distance pattern.
    if (opt.distances.empty())
        throw UsageError("visits simulation needs --distances d_vu,d_wu,d_vw");
    std::vector<int> d = parse_ints(opt.distances, "--distances");
    if (d.size() != 3) throw UsageError("visits simulation needs exactly three distances");
    const int u = 0;
    std::vector<int> du = bfs_distances(g, u);
    int v = -1, w = -1;
    for (int cand_v = 0; cand_v < g.n && v < 0; ++cand_v) {
        if (du[cand_v] != d[0]) continue;
        std::vector<int> dv = bfs_distances(g, cand_v);
        for (int cand_w = 0; cand_w < g.n; ++cand_w)
            if (du[cand_w] == d[1] && dv[cand_w] == d[2]) {
                v = cand_v;
                w = cand_w;
                break;
            }
    }
    if (v < 0)
        throw ValidationError("no vertex triple in this graph realizes the distance pattern");
    j["vertices"] = std::vector<int>{v, w, u};
    VisitSimulation sim = simulate_visits(g, v, w, u, opt.samples, opt.seed);
    VisitStats exact = visit_statistics(arr, d[0], d[1], d[2], gamma_of(opt.gamma));
    j["indicator"] = summary_json(sim.indicator);
    put_rat(j, "indicator_exact", exact.p_visit);
    j["count"] = summary_json(sim.count);
    put_rat(j, "count_exact", exact.mean_visits);
    j["distinct"] = summary_json(sim.distinct);
    if (d[0] >= 1) {
        try {
            put_rat(j, "distinct_exact", expected_distinct_visits(arr, d[0]).value);
        } catch (const NumericalError& e) {
            j["distinct_exact_unavailable"] = e.what();
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

// ---- verify ---------------------------------------------------------------

struct CheckLog {
    ordered_json rows = ordered_json::array();
    bool any_fail = false;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        ordered_json r;
        r["name"] = name;
        r["status"] = ok ? "pass" : "fail";
        if (!detail.empty()) r["detail"] = detail;
        rows.push_back(r);
        any_fail = any_fail || !ok;
    }
    void skip(const std::string& name, const std::string& why) {
        ordered_json r;
        r["name"] = name;
        r["status"] = "skip";
        r["detail"] = why;
        rows.push_back(r);
    }
};

// Bin a vertex-indexed distribution by distance from vertex 0.
std::vector<BigRational> bin_by_shell(const std::vector<BigRational>& mu,
                                      const std::vector<int>& dist, int D) {
    std::vector<BigRational> out(D + 1, BigRational(0));
    for (std::size_t v = 0; v < mu.size(); ++v) out[dist[v]] += mu[v];
    return out;
}

int verb_verify(const Options& opt, std::ostream& out) {
    IntersectionArray arr = resolve_array(opt);
    const GammaStatus gamma = gamma_of(opt.gamma);
    const int D = arr.diameter();
    CheckLog log;

    // Array-side checks. The dual-route agreements are asserted inside the
    // library ops themselves; reaching the next line means they held.
    PotentialTable pot = biggs_potentials(arr);
    log.add("potentials-dual-route", true);
    HittingTable ht = hitting_moments(arr);
    log.add("hitting-dual-route", true);

    RegularityReport reg = check_regularity(arr, gamma);
    log.add("resistance-spread-extremal", reg.ratio_extremal_ok,
            reg.ratio_extremal_equality ? "equality case" : "");
    log.add("potential-tail-dominance", reg.tail_ok, reg.tail_equality ? "equality case" : "");
    log.add("potential-tail-strict", reg.scaled_tail_ok);
    if (reg.C)
        log.add("resistance-spread-degree-bound", reg.ratio_c_bound != Verdict::fails);
    else
        log.skip("resistance-spread-degree-bound", reg.c_unavailable_reason);

    std::string c_reason;
    auto c = try_constant(arr, gamma, &c_reason);
    bool brackets_ok = true;
    std::string bracket_detail;
    for (const auto& b : check_moment_brackets(arr, ht, c))
        if (b.verdict == Verdict::fails) {
            brackets_ok = false;
            bracket_detail = b.name + ": " + b.detail;
            break;
        }
    log.add("moment-brackets", brackets_ok, bracket_detail);

    MixingParams mp = f_and_mixing(arr, c);
    log.add("mean-hitting-sum-bracket", mp.f_bracket != Verdict::fails);

    SpectralData sd = decompose(arr);
    {
        BigInt msum = 0;
        for (long long m : sd.multiplicities) msum += m;
        bool ok = msum == arr.vertex_count() && sd.multiplicities[0] == 1;
        double tr1 = 0, tr2 = 0;
        for (std::size_t r = 0; r < sd.eigenvalues.size(); ++r) {
            tr1 += static_cast<double>(sd.multiplicities[r]) * sd.eigenvalues[r];
            tr2 += static_cast<double>(sd.multiplicities[r]) * sd.eigenvalues[r] *
                   sd.eigenvalues[r];
        }
        double nk = rat_double(BigRational(arr.vertex_count())) * static_cast<double>(arr.degree());
        double scale = std::max(1.0, nk);
        ok = ok && std::fabs(tr1) < 1e-6 * scale && std::fabs(tr2 - nk) < 1e-6 * scale;
        log.add("spectral-trace-identities", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= D && ok; ++i) {
            double g1 = generating_function(arr, sd, i, 1.0);
            if (g1 != 1.0) {
                ok = false;
                detail = "GF_" + std::to_string(i) + "(1) = " + std::to_string(g1);
            }
            const double h = 1e-7;
            double der = (generating_function(arr, sd, i, 1.0 + h / 2) -
                          generating_function(arr, sd, i, 1.0 - h / 2)) /
                         h;
            if (std::fabs(der - rat_double(ht.H[i])) > 1e-3) {
                ok = false;
                detail = "GF_" + std::to_string(i) + "'(1) = " + std::to_string(der) +
                         " vs H = " + std::to_string(rat_double(ht.H[i]));
            }
        }
        log.add("generating-function-normalization-and-derivative", ok, detail);
    }
    {
        ProjectedChain chain = projected_chain(arr);
        auto pi = stationary(chain);
        bool ok = step(chain, pi) == pi;
        log.add("stationary-fixed-point", ok);
    }

    // Oracle checks need explicit coordinates.
    bool buildable = false;
    FamilySpec spec;
    if (!opt.family_text.empty()) {
        spec = FamilySpec::parse(opt.family_text);
        buildable = family_buildable(spec.name);
    }
    const char* no_model = "no explicit model for this graph source";
    if (!buildable) {
        for (const char* name :
             {"explicit-array-roundtrip", "oracle-hitting-moments", "oracle-resistance",
              "oracle-two-point-measure", "oracle-greens", "projection-identity",
              "two-point-harmonicity", "simulation-hitting"})
            log.skip(name, no_model);
    } else {
        ExplicitGraph g = build_family(spec);
        std::vector<int> dist = bfs_distances(g, 0);
        log.add("explicit-array-roundtrip", extract_array(g).to_string() == arr.to_string());

        if (g.n > 300) {
            for (const char* name : {"oracle-hitting-moments", "oracle-two-point-measure",
                                     "oracle-greens"})
                log.skip(name, "explicit model too large for exact elimination here");
        } else {
            HittingMomentsOracle om = exact_hitting_moments(g, 0);
            bool ok = true;
            std::string detail;
            for (int v = 0; v < g.n && ok; ++v)
                if (om.H[v] != ht.H[dist[v]] || om.M2[v] != ht.M2[dist[v]]) {
                    ok = false;
                    detail = "vertex " + std::to_string(v);
                }
            log.add("oracle-hitting-moments", ok, detail);

            ok = true;
            for (int h = 1; h <= D && ok; ++h) {
                int v = -1;
                for (int x = 0; x < g.n; ++x)
                    if (dist[x] == h) {
                        v = x;
                        break;
                    }
                auto mvals = absorbing_values(g, {{0, BigRational(1)}, {v, BigRational(0)}});
                std::vector<int> dv = bfs_distances(g, v);
                for (int z = 0; z < g.n && ok; ++z)
                    ok = mvals[z] == two_point_measure(arr, h, dist[z], dv[z]);
            }
            log.add("oracle-two-point-measure", ok);

            ok = true;
            for (int alpha = 1; alpha <= D && ok; ++alpha) {
                std::vector<int> sphere;
                for (int x = 0; x < g.n; ++x)
                    if (dist[x] == alpha) sphere.push_back(x);
                auto visits = expected_visits(g, sphere, 0);
                for (int r = 0; r < alpha && ok; ++r) {
                    GreensValue gv = greens_function(arr, alpha, r);
                    BigRational total(0);
                    for (int x = 0; x < g.n && ok; ++x)
                        if (dist[x] == r) {
                            ok = visits[x] == gv.value;
                            total += visits[x];
                        }
                    ok = ok && total == gv.shell_total;
                }
            }
            log.add("oracle-greens", ok);
        }

        if (g.n > 2000) {
            log.skip("oracle-resistance", "explicit model too large for the dense solve here");
        } else {
            bool ok = true;
            std::string detail;
            for (int h = 1; h <= D && ok; ++h) {
                int v = -1;
                for (int x = 0; x < g.n; ++x)
                    if (dist[x] == h) {
                        v = x;
                        break;
                    }
                double lap = exact_resistance(g, 0, v);
                double exact = rat_double(pot.resistance[h]);
                if (std::fabs(lap - exact) >= 1e-10) {
                    ok = false;
                    detail = "distance " + std::to_string(h);
                }
            }
            log.add("oracle-resistance", ok, detail);
        }

        {
            bool ok = true;
            for (const BigRational& beta :
                 {BigRational(0), BigRational(1, 2)}) {
                ProjectedChain chain = projected_chain(arr, beta);
                for (int t = 0; t <= 20 && ok; ++t) {
                    auto full = bin_by_shell(graph_evolve(g, 0, t, beta), dist, D);
                    ok = full == evolve(chain, t);
                }
            }
            log.add("projection-identity", ok);
        }
        {
            // Assembled two-point hitting function: harmonic off the poles.
            bool ok = true;
            int v = -1;
            for (int x = 0; x < g.n; ++x)
                if (dist[x] == D) {
                    v = x;
                    break;
                }
            std::vector<int> dv = bfs_distances(g, v);
            for (int z = 0; z < g.n && ok; ++z) {
                if (z == 0 || z == v) continue;
                BigRational acc(0);
                for (int y : g.adj[z])
                    acc += two_point_potential(arr, dist[y], dv[y]);
                ok = acc == BigRational(g.degree_of(z)) *
                                two_point_potential(arr, dist[z], dv[z]);
            }
            log.add("two-point-harmonicity", ok);
        }
        {
            long long samples = std::min<long long>(opt.samples, 20000);
            samples = std::max<long long>(samples, 100);
            int v = -1;
            for (int x = 0; x < g.n; ++x)
                if (dist[x] == 1) {
                    v = x;
                    break;
                }
            SimSummary s = simulate_hitting(g, v, 0, samples, opt.seed);
            double exact = rat_double(ht.H[1]);
            double z = (s.mean - exact) / std::max(s.std_error, 1e-12);
            log.add("simulation-hitting", std::fabs(z) <= 4.0,
                    "z = " + std::to_string(z) + " at " + std::to_string(samples) + " samples");
        }
    }

    ordered_json j = header_json(arr);
    j["seed"] = opt.seed;
    j["rng"] = kRngAlgorithm;
    j["checks"] = log.rows;
    j["pass"] = !log.any_fail;
    j["note"] =
        "limit statements (cover-time fluctuation laws, cutoff asymptotics) are properties of "
        "growing graph sequences; this report substitutes finite-size checks: exact mixing "
        "curves, Matthews brackets, and seeded simulation agreement";
    out << j.dump(2) << "\n";
    return log.any_fail ? 4 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"random-walk functionals of distance-regular graphs"};
    app.name("drg-walk");
    app.require_subcommand(1);

    Options opt;
    auto add_source = [&](CLI::App* sub) {
        auto* src = sub->add_option_group("source", "graph source");
        src->add_option("--array", opt.array_text,
                        "intersection array \"b0,..,b_{D-1};c1,..,cD\"");
        src->add_option("--family", opt.family_text,
                        "family name[:params], e.g. petersen, hamming:3,2");
        src->require_option(1);
    };
    auto add_gamma = [&](CLI::App* sub) {
        sub->add_option("--gamma", opt.gamma, "exceptional-family status")
            ->check(CLI::IsMember({"in", "out", "unknown"}));
    };

    CLI::App* info = app.add_subcommand("info", "array parameters and counts");
    add_source(info);
    info->add_flag("--edges", opt.edges, "print the explicit edge list as text");

    CLI::App* potentials = app.add_subcommand("potentials", "shell potentials and resistances");
    add_source(potentials);
    potentials->add_flag("--csv", opt.csv, "CSV output");

    CLI::App* resistance = app.add_subcommand("resistance", "spherical effective resistances");
    add_source(resistance);

    CLI::App* hitting = app.add_subcommand("hitting", "mean hitting times by shell");
    add_source(hitting);

    CLI::App* moments = app.add_subcommand("moments", "hitting-time moments and brackets");
    add_source(moments);
    add_gamma(moments);

    CLI::App* cover = app.add_subcommand("cover", "cover-time bounds");
    add_source(cover);
    add_gamma(cover);

    CLI::App* mixing = app.add_subcommand("mixing", "mean-hitting sum and mixing bounds");
    add_source(mixing);
    add_gamma(mixing);

    CLI::App* visits = app.add_subcommand("visits", "visit statistics for a distance triple");
    add_source(visits);
    add_gamma(visits);
    visits->add_option("--distances", opt.distances, "d_vu,d_wu,d_vw");

    CLI::App* genfun = app.add_subcommand("genfun", "first-arrival generating function");
    add_source(genfun);
    genfun->add_option("--i", opt.gf_shell, "start shell");
    genfun->add_option("--s", opt.s_point, "evaluation point in (-1, 1]")
        ->each([&](const std::string&) { opt.s_given = true; });
    genfun->add_option("--series", opt.series, "also emit this many series coefficients");

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
    add_source(spectrum);

    CLI::App* tvcurve = app.add_subcommand("tvcurve", "total-variation mixing curve");
    add_source(tvcurve);
    tvcurve->add_option("--eps", opt.eps, "mixing threshold in (0, 1)");
    tvcurve->add_option("--laziness", opt.laziness, "stand-still probability (rational)");
    tvcurve->add_flag("--csv", opt.csv, "CSV output");

    CLI::App* greens = app.add_subcommand("greens", "expected visits before a spherical boundary");
    add_source(greens);
    greens->add_option("--alpha", opt.alpha, "absorbing radius")->required();
    greens->add_option("--r", opt.r_shell, "queried shell");

    CLI::App* measure = app.add_subcommand("measure", "harmonic measure of a boundary");
    add_source(measure);
    measure->add_option("--kind", opt.kind, "two | three | clique")->required();
    measure->add_option("--distances", opt.distances, "see --help-all for the per-kind layout");
    measure->add_option("--q", opt.q, "clique size");
    measure->add_option("--d", opt.d_clique, "clique spacing");

    CLI::App* harnack = app.add_subcommand("harnack", "pointwise deviation bound check");
    add_source(harnack);
    add_gamma(harnack);
    harnack->add_option("--kind", opt.kind, "two | clique")->required();
    harnack->add_option("--distances", opt.distances, "query distances");
    harnack->add_option("--values", opt.values, "boundary values (rationals)");
    harnack->add_option("--q", opt.q, "clique size");
    harnack->add_option("--d", opt.d_clique, "clique spacing");

    CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against oracles");
    add_source(verify);
    add_gamma(verify);
    verify->add_option("--seed", opt.seed, "simulation seed");
    verify->add_option("--samples", opt.samples, "simulation sample count");

    CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo walks");
    add_source(simulate);
    add_gamma(simulate);
    simulate->add_option("--mode", opt.mode, "hitting | cover | visits")->required();
    simulate->add_option("--distances", opt.distances, "mode-specific distances");
    simulate->add_option("--samples", opt.samples, "sample count (>= 100)");
    simulate->add_option("--seed", opt.seed, "RNG seed");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("drg-walk");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) return verb_simulate(opt, out);
        if (verify->parsed()) return verb_verify(opt, out);

        IntersectionArray arr = resolve_array(opt);
        if (info->parsed()) return verb_info(arr, opt, out);
        if (potentials->parsed()) return verb_potentials(arr, opt, out);
        if (resistance->parsed()) return verb_resistance(arr, out);
        if (hitting->parsed()) return verb_hitting(arr, out);
        if (moments->parsed()) return verb_moments(arr, opt, out);
        if (cover->parsed()) return verb_cover(arr, opt, out);
        if (mixing->parsed()) return verb_mixing(arr, opt, out);
        if (visits->parsed()) return verb_visits(arr, opt, out);
        if (genfun->parsed()) return verb_genfun(arr, opt, out);
        if (spectrum->parsed()) return verb_spectrum(arr, out);
        if (tvcurve->parsed()) return verb_tvcurve(arr, opt, out);
        if (greens->parsed()) return verb_greens(arr, opt, out);
        if (measure->parsed()) return verb_measure(arr, opt, out);
        if (harnack->parsed()) return verb_harnack(arr, opt, out);
        err << "error: unknown verb\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace drg
