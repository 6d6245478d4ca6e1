#include "drg/walk_stats.hpp"

#include "drg/errors.hpp"
#include "drg/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace drg {

BigRational HittingTable::hplus(int i) const {
    if (i == 0) return BigRational(n);
    return H.at(i);
}

HittingTable hitting_moments(const IntersectionArray& arr) {
    const int D = arr.diameter();
    const long long k = arr.degree();
    const auto& ks = arr.shell_sizes();

    HittingTable t;
    t.n = arr.vertex_count();

    // Tail shell counts T_j = k_j + .. + k_D.
    std::vector<BigInt> tail(D + 2, BigInt(0));
    for (int j = D; j >= 1; --j) tail[j] = tail[j + 1] + ks[j];

    t.H.resize(D + 1);
    t.H[0] = 0;
    for (int i = 1; i <= D; ++i)
        t.H[i] = t.H[i - 1] + BigRational(BigInt(k) * tail[i], arr.shell_boundary(i));

    // Same value as the potential partial sums; both routes must agree.
    PotentialTable pt = biggs_potentials(arr);
    for (int i = 0; i <= D; ++i)
        if (t.H[i] != pt.Phi[i])
            throw NumericalError("hitting-time routes disagree at shell " + std::to_string(i));

    // Second moments: M2_i = -H_i + 2k sum_j (1/e_j) sum_{r>=j} k_r H_r.
    std::vector<BigRational> weighted_tail(D + 2, BigRational(0));
    for (int j = D; j >= 1; --j)
        weighted_tail[j] = weighted_tail[j + 1] + BigRational(ks[j]) * t.H[j];

    t.M2.resize(D + 1);
    t.Var.resize(D + 1);
    t.M2[0] = 0;
    t.Var[0] = 0;
    BigRational acc = 0;
    for (int i = 1; i <= D; ++i) {
        acc += weighted_tail[i] / BigRational(arr.shell_boundary(i));
        t.M2[i] = -t.H[i] + 2 * BigRational(k) * acc;
        t.Var[i] = t.M2[i] - t.H[i] * t.H[i];
    }
    return t;
}

namespace {

BracketResult make_check(std::string name, Verdict v, const BigRational& value,
                         const RatInterval& bound, bool upper) {
    BracketResult r;
    r.name = std::move(name);
    r.verdict = v;
    if (v != Verdict::holds)
        r.detail = rat_str(value) + (upper ? " > " : " < ") + "bound near " + decimal12(bound.mid());
    return r;
}

BracketResult check_upper(std::string name, const BigRational& value, const RatInterval& bound) {
    return make_check(std::move(name), le_interval(value, bound), value, bound, true);
}

BracketResult check_lower(std::string name, const BigRational& value, const RatInterval& bound) {
    return make_check(std::move(name), ge_interval(value, bound), value, bound, false);
}

} // namespace

std::vector<BracketResult> check_moment_brackets(const IntersectionArray& arr,
                                                 const HittingTable& ht,
                                                 const std::optional<RegularityConstant>& C) {
    const int D = arr.diameter();
    const BigRational nm1 = BigRational(arr.vertex_count()) - 1;

    std::vector<BracketResult> out;
    for (int i = 1; i <= D; ++i) {
        std::string suffix = "[i=" + std::to_string(i) + "]";
        out.push_back(check_lower("first_moment_lower" + suffix, ht.H[i],
                                  RatInterval::point(nm1)));
        if (!C) continue;
        RatInterval c = C->enclosure();
        RatInterval one_plus = BigRational(1) + c;
        out.push_back(check_upper("first_moment_upper" + suffix, ht.H[i], one_plus * nm1));
        out.push_back(check_upper("second_moment_upper" + suffix, ht.M2[i],
                                  BigRational(2) * (one_plus * one_plus) * (nm1 * nm1) - nm1));
        out.push_back(check_lower("second_moment_lower" + suffix, ht.M2[i],
                                  BigRational(2) * RatInterval::point(nm1 * nm1) - one_plus * nm1));
        RatInterval var_up = (BigRational(1) + BigRational(4) * c + BigRational(2) * (c * c)) *
                                 (nm1 * nm1) -
                             RatInterval::point(nm1);
        out.push_back(check_upper("variance_upper" + suffix, ht.Var[i], var_up));
        RatInterval one_minus = BigRational(1) - c;
        RatInterval var_lo = (one_minus * one_minus) * (nm1 * nm1) - one_plus * nm1;
        out.push_back(check_lower("variance_lower" + suffix, ht.Var[i], var_lo));
    }
    return out;
}

CoverBounds cover_bounds(const IntersectionArray& arr,
                         const std::optional<RegularityConstant>& C) {
    const int D = arr.diameter();
    HittingTable ht = hitting_moments(arr);

    CoverBounds cb;
    const BigInt& n = arr.vertex_count();
    double nd = n.convert_to<double>();

    if (n <= 4096) {
        // Exact partial-fraction sum; denominators stay in the hundreds of
        // digits at this cap.
        BigRational h = 0;
        for (BigInt j = 1; j < n; ++j) h += BigRational(1, j);
        cb.harmonic_exact = h;
        cb.matthews_lower_exact = ht.H[1] * h;
        cb.matthews_upper_exact = ht.H[D] * h;
        cb.harmonic_number = rat_double(h);
    } else if (n <= 10000000) {
        double h = 0;
        for (long long j = n.convert_to<long long>() - 1; j >= 1; --j) h += 1.0 / j;
        cb.harmonic_number = h;
    } else {
        double x = nd - 1;
        cb.harmonic_number = std::log(x) + 0.57721566490153286 + 0.5 / x;
    }
    cb.matthews_lower = rat_double(ht.H[1]) * cb.harmonic_number;
    cb.matthews_upper = rat_double(ht.H[D]) * cb.harmonic_number;
    cb.closed_lower = (nd - 1) * std::log(nd);
    if (C)
        cb.closed_upper = (1.0 + C->value()) * (nd - 1) * (1.0 + std::log(nd - 1));
    return cb;
}

MixingParams f_and_mixing(const IntersectionArray& arr,
                          const std::optional<RegularityConstant>& C) {
    const int D = arr.diameter();
    HittingTable ht = hitting_moments(arr);
    const auto& ks = arr.shell_sizes();

    MixingParams mp;
    mp.F = 0;
    for (int j = 1; j <= D; ++j) mp.F += BigRational(ks[j]) * ht.H[j];
    const BigRational n(arr.vertex_count());
    mp.tau0 = mp.F / n;
    const BigRational nm1 = n - 1;
    mp.f_lower = nm1 * nm1;
    if (C) {
        RatInterval one_plus = BigRational(1) + C->enclosure();
        mp.f_upper = one_plus * (nm1 * nm1);
        Verdict lo = ge_interval(mp.F, RatInterval::point(mp.f_lower));
        Verdict hi = le_interval(mp.F, *mp.f_upper);
        mp.f_bracket = (lo == Verdict::holds && hi == Verdict::holds) ? Verdict::holds
                       : (lo == Verdict::fails || hi == Verdict::fails) ? Verdict::fails
                                                                        : Verdict::unresolved;
        mp.tau1_bound = (BigRational(66) * one_plus * (nm1 * nm1)) / n;
        mp.tau2_bound = (one_plus * (nm1 * nm1)) / n;
    } else {
        mp.f_bracket = ge_interval(mp.F, RatInterval::point(mp.f_lower));
    }
    return mp;
}

long long IntersectionNumbers::at(int h, int i, int j) const {
    if (h < 0 || i < 0 || j < 0 || h > D || i > D || j > D)
        throw ValidationError("intersection number index out of range");
    size_t s = static_cast<size_t>(D) + 1;
    return p[(static_cast<size_t>(h) * s + i) * s + j];
}

IntersectionNumbers intersection_numbers(const IntersectionArray& arr) {
    const int D = arr.diameter();
    const size_t s = static_cast<size_t>(D) + 1;
    if (arr.vertex_count() > (BigInt(1) << 50))
        throw ValidationError("vertex count too large to round intersection numbers exactly");

    // Eigenvalues of the collapsed adjacency operator.
    std::vector<double> diag(s), off(D);
    for (int i = 0; i <= D; ++i) diag[i] = static_cast<double>(arr.a(i));
    for (int i = 0; i < D; ++i)
        off[i] = std::sqrt(static_cast<double>(arr.b(i)) * static_cast<double>(arr.c(i + 1)));
    std::vector<double> lam = linalg::tridiag_eigenvalues(diag, off);

    // Distance-polynomial values v_h(lambda) by the three-term recurrence;
    // table[r][h] = v_h(lam[r]).
    std::vector<std::vector<double>> table(s, std::vector<double>(s));
    for (size_t r = 0; r < s; ++r) {
        double x = lam[r];
        table[r][0] = 1.0;
        if (D >= 1) table[r][1] = x;
        for (int h = 1; h < D; ++h)
            table[r][h + 1] = ((x - arr.a(h)) * table[r][h] -
                               arr.b(h - 1) * table[r][h - 1]) /
                              arr.c(h + 1);
    }

    // One matrix, (D+1)^2 right-hand sides: products expand in the distance
    // polynomial basis with the intersection numbers as coefficients.
    IntersectionNumbers out;
    out.D = D;
    out.p.assign(s * s * s, 0);
    double worst = 0;
    for (int i = 0; i <= D; ++i) {
        for (int j = 0; j <= D; ++j) {
            std::vector<std::vector<double>> m(s, std::vector<double>(s));
            std::vector<double> rhs(s);
            for (size_t r = 0; r < s; ++r) {
                for (size_t h = 0; h < s; ++h) m[r][h] = table[r][h];
                rhs[r] = table[r][i] * table[r][j];
            }
            std::vector<double> sol = linalg::solve_double(std::move(m), std::move(rhs));
            for (size_t h = 0; h < s; ++h) {
                double rounded = std::round(sol[h]);
                worst = std::max(worst, std::abs(sol[h] - rounded));
                out.p[(h * s + i) * s + j] = static_cast<long long>(rounded);
            }
        }
    }
    out.max_residual = worst;
    if (worst >= 1e-6)
        throw NumericalError("intersection numbers fail to round to integers (residual " +
                             decimal12(worst) + ")");

    // Structural anchors of the table.
    for (int h = 0; h <= D; ++h) {
        for (int j = 0; j <= D; ++j)
            if (out.at(h, 0, j) != (j == h ? 1 : 0))
                throw NumericalError("intersection number p[h][0][j] anchor failed");
        BigInt total = 0;
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j) total += out.at(h, i, j);
        if (total != arr.vertex_count())
            throw NumericalError("intersection numbers at h=" + std::to_string(h) +
                                 " do not sum to n");
    }
    return out;
}

namespace {

void append_feeling_brackets(std::vector<BracketResult>& out, const IntersectionArray& arr,
                             GammaStatus gamma, const BigRational* p_visit,
                             const BigRational* mean_visits, const BigRational* var_visits,
                             const BigRational* distinct) {
    std::optional<RegularityConstant> C;
    try {
        C = constant_C(arr, gamma);
    } catch (const ValidationError&) {
        return; // no constant, no brackets
    }
    RatInterval c = C->enclosure();
    const BigRational n(arr.vertex_count());
    const BigRational nm1 = n - 1;
    const BigRational half(1, 2);

    if (p_visit) {
        out.push_back(check_lower("visit_probability_lower", *p_visit, half - c / BigRational(2)));
        out.push_back(check_upper("visit_probability_upper", *p_visit, half + c / BigRational(2)));
    }
    if (mean_visits) {
        RatInterval lo = (BigRational(1) - c) * (nm1 / n);
        RatInterval hi = (BigRational(1) + BigRational(2) * c) * (nm1 / n);
        out.push_back(check_lower("mean_visits_lower", *mean_visits, lo));
        out.push_back(check_upper("mean_visits_upper", *mean_visits, hi));
    }
    if (var_visits) {
        BigRational sq = (nm1 * nm1) / (n * n);
        RatInterval one_minus = BigRational(1) - c;
        RatInterval one_plus2 = BigRational(1) + BigRational(2) * c;
        out.push_back(check_lower("visit_variance_lower", *var_visits,
                                  BigRational(2) * (one_minus * one_minus) * sq));
        out.push_back(check_upper("visit_variance_upper", *var_visits,
                                  BigRational(2) * (one_plus2 * one_plus2) * sq));
    }
    if (distinct) {
        out.push_back(check_lower("distinct_visits_lower", *distinct,
                                  nm1 * (half - c / BigRational(2))));
        out.push_back(check_upper("distinct_visits_upper", *distinct,
                                  nm1 * (half + c / BigRational(2))));
    }
}

} // namespace

VisitStats visit_statistics(const IntersectionArray& arr, int d_vu, int d_wu, int d_vw,
                            GammaStatus gamma) {
    const int D = arr.diameter();
    auto in_range = [D](int d) { return d >= 0 && d <= D; };
    if (!in_range(d_vu) || !in_range(d_wu) || !in_range(d_vw))
        throw ValidationError("visit distances must lie in [0, D]");
    if (d_wu < 1) throw ValidationError("w must differ from u (d_wu >= 1)");
    if (d_vu > d_wu + d_vw || d_wu > d_vu + d_vw || d_vw > d_vu + d_wu)
        throw ValidationError("visit distances violate the triangle inequality");

    HittingTable ht = hitting_moments(arr);
    const BigRational n(arr.vertex_count());
    BigRational hvu = ht.hplus(d_vu), hwu = ht.hplus(d_wu), hvw = ht.hplus(d_vw);

    VisitStats vs;
    BigRational num = hvu + hwu - hvw;
    vs.p_visit = num / (2 * hwu);
    vs.mean_visits = num / n;
    vs.var_visits = num * (3 * hwu - hvu + hvw - n) / (n * n);

    bool distinct_triple = d_vu >= 1 && d_wu >= 1 && d_vw >= 1;
    if (distinct_triple)
        append_feeling_brackets(vs.brackets, arr, gamma, &vs.p_visit, &vs.mean_visits,
                                &vs.var_visits, nullptr);
    return vs;
}

DistinctVisits expected_distinct_visits(const IntersectionArray& arr, int h, GammaStatus gamma) {
    const int D = arr.diameter();
    if (h < 1 || h > D) throw ValidationError("start distance must lie in [1, D]");

    IntersectionNumbers p = intersection_numbers(arr);
    HittingTable ht = hitting_moments(arr);
    BigRational hvu = ht.hplus(h);

    // Sum the visit probability over all vertices w != u, grouped by the
    // distance pair (i, j) = (d(w,u), d(w,v)); i = 0 is the target itself.
    DistinctVisits dv;
    dv.value = 0;
    for (int i = 1; i <= D; ++i) {
        for (int j = 0; j <= D; ++j) {
            long long count = p.at(h, i, j);
            if (count == 0) continue;
            BigRational prob = (hvu + ht.hplus(i) - ht.hplus(j)) / (2 * ht.hplus(i));
            dv.value += BigRational(count) * prob;
        }
    }
    append_feeling_brackets(dv.brackets, arr, gamma, nullptr, nullptr, nullptr, &dv.value);
    return dv;
}

} // namespace drg
