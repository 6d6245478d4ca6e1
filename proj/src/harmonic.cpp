#include "drg/harmonic.hpp"

#include "drg/errors.hpp"

#include <cstdlib>
#include <string>

namespace drg {

namespace {

void check_shell(const IntersectionArray& arr, int d, const char* what) {
    if (d < 0 || d > arr.diameter())
        throw ValidationError(std::string(what) + " distance " + std::to_string(d) +
                              " outside [0, " + std::to_string(arr.diameter()) + "]");
}

void check_triangle(int ab, int az, int bz) {
    if (std::abs(az - bz) > ab || ab > az + bz)
        throw ValidationError("distance pattern violates the triangle inequality: d(a,b)=" +
                              std::to_string(ab) + ", d(a,z)=" + std::to_string(az) +
                              ", d(b,z)=" + std::to_string(bz));
}

BigRational rat_abs(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

// Exact interval enclosing the one-step gradient factor of a harmonic
// function, per unit of boundary spread. Flat 2/k applies only to diameter
// > 2 arrays confirmed outside the exceptional family; otherwise the
// degree-adjusted constant takes over.
std::pair<RatInterval, bool> gradient_factor(const IntersectionArray& arr, GammaStatus gamma) {
    const int D = arr.diameter();
    const BigRational k(arr.degree());
    if (D == 1)
        return {RatInterval::point(BigRational(0)), false};
    if (D == 2) {
        RegularityConstant c = constant_C(arr, gamma);
        return {c.enclosure(), false};
    }
    if (gamma == GammaStatus::not_in_gamma)
        return {RatInterval::point(BigRational(2) / k), true};
    return {RatInterval::point(BigRational(3) / k), false};
}

} // namespace

BigRational two_point_measure(const IntersectionArray& arr, int h, int d_uz, int d_vz) {
    if (h < 1 || h > arr.diameter())
        throw ValidationError("pole separation h must lie in [1, D]");
    check_shell(arr, d_uz, "query");
    check_shell(arr, d_vz, "query");
    check_triangle(h, d_uz, d_vz);
    PotentialTable pot = biggs_potentials(arr);
    return BigRational(1, 2) +
           (pot.Phi[d_vz] - pot.Phi[d_uz]) / (BigRational(2) * pot.Phi[h]);
}

BigRational two_point_potential(const IntersectionArray& arr, int d_uz, int d_vz) {
    check_shell(arr, d_uz, "query");
    check_shell(arr, d_vz, "query");
    PotentialTable pot = biggs_potentials(arr);
    return pot.Phi[d_uz] - pot.Phi[d_vz];
}

BigRational three_point_measure(const IntersectionArray& arr, const std::array<int, 3>& pairwise,
                                const std::array<int, 3>& query) {
    const int d_uv = pairwise[0], d_uw = pairwise[1], d_vw = pairwise[2];
    const int d_uz = query[0], d_vz = query[1], d_wz = query[2];
    for (int d : pairwise) {
        if (d < 1) throw ValidationError("boundary points must be pairwise distinct");
        check_shell(arr, d, "boundary");
    }
    for (int d : query) check_shell(arr, d, "query");
    check_triangle(d_uv, d_uw, d_vw);  // boundary triple itself
    check_triangle(d_uv, d_uz, d_vz);
    check_triangle(d_uw, d_uz, d_wz);
    check_triangle(d_vw, d_vz, d_wz);

    PotentialTable pot = biggs_potentials(arr);
    const BigRational p1 = pot.Phi[d_uv];  // u-v
    const BigRational p2 = pot.Phi[d_uw];  // u-w
    const BigRational p3 = pot.Phi[d_vw];  // v-w

    // Expand the measure in the potential basis {1, Phi_d(u,.), Phi_d(v,.),
    // Phi_d(w,.)} with coefficients summing to zero (no interior source) and
    // boundary values 1, 0, 0. Solving the 3x3 system gives a single quotient.
    const BigRational den = BigRational(2) * (p1 * p2 + p1 * p3 + p2 * p3) -
                            (p1 * p1 + p2 * p2 + p3 * p3);
    if (den == 0)
        throw NumericalError("degenerate boundary triple: resistance triangle has no interior");
    const BigRational num = p3 * (p1 + p2 - p3) - BigRational(2) * p3 * pot.Phi[d_uz] +
                            (p2 + p3 - p1) * pot.Phi[d_vz] +
                            (p1 + p3 - p2) * pot.Phi[d_wz];
    return num / den;
}

BigRational clique_measure(const IntersectionArray& arr, int q, int d, int d_uz,
                           const std::vector<int>& d_rest) {
    if (q < 2) throw ValidationError("clique boundary needs at least two points");
    if (d < 1 || d > arr.diameter())
        throw ValidationError("clique spacing d must lie in [1, D]");
    if (static_cast<int>(d_rest.size()) != q - 1)
        throw ValidationError("expected " + std::to_string(q - 1) +
                              " distances to the remaining boundary points, got " +
                              std::to_string(d_rest.size()));
    check_shell(arr, d_uz, "query");
    for (int dj : d_rest) {
        check_shell(arr, dj, "query");
        check_triangle(d, d_uz, dj);
    }
    for (std::size_t i = 0; i < d_rest.size(); ++i)
        for (std::size_t j = i + 1; j < d_rest.size(); ++j)
            check_triangle(d, d_rest[i], d_rest[j]);

    PotentialTable pot = biggs_potentials(arr);
    BigRational sum_rest(0);
    for (int dj : d_rest) sum_rest += pot.Phi[dj];
    return BigRational(1, q) + (sum_rest - BigRational(q - 1) * pot.Phi[d_uz]) /
                                   (BigRational(q) * pot.Phi[d]);
}

GreensValue greens_function(const IntersectionArray& arr, int alpha, int r) {
    const int D = arr.diameter();
    if (alpha < 1 || alpha > D)
        throw ValidationError("absorbing radius alpha must lie in [1, D]");
    if (r < 0 || r >= alpha)
        throw ValidationError("queried shell r must lie in [0, alpha)");

    const BigRational k(arr.degree());

    // Per-vertex value: inward/outward ratio products accumulated from the
    // queried shell toward the absorbing sphere.
    BigRational s(0), prod(1);
    for (int l = r + 1; l <= alpha - 1; ++l) {
        prod *= BigRational(arr.c(l)) / BigRational(arr.b(l));
        s += prod;
    }
    GreensValue g;
    g.value = k * (BigRational(1) + s) /
              (BigRational(arr.b(r)) * BigRational(arr.shell_sizes()[r]));

    // Whole-shell total through the escape weight of the birth-death chain on
    // shells: the chance of drifting to the sphere before returning inward.
    BigRational num(0), p(1);
    for (int t = 1; t <= alpha - r - 1; ++t) {
        p *= BigRational(arr.c(r + t)) / BigRational(arr.b(r + t));
        num += p;
    }
    g.delta = num / (BigRational(1) + num);
    g.shell_total = k / (BigRational(arr.b(r)) * (BigRational(1) - g.delta));
    return g;
}

BigRational greens_function_ratio_flipped(const IntersectionArray& arr, int alpha, int r) {
    const int D = arr.diameter();
    if (alpha < 1 || alpha > D)
        throw ValidationError("absorbing radius alpha must lie in [1, D]");
    if (r < 0 || r >= alpha)
        throw ValidationError("queried shell r must lie in [0, alpha)");
    BigRational s(0), prod(1);
    for (int l = r + 1; l <= alpha - 1; ++l) {
        prod *= BigRational(arr.b(l)) / BigRational(arr.c(l));
        s += prod;
    }
    return BigRational(arr.degree()) * (BigRational(1) + s) /
           (BigRational(arr.b(r)) * BigRational(arr.shell_sizes()[r]));
}

HarnackResult harnack_two_point(const IntersectionArray& arr, GammaStatus gamma, int h,
                                const BigRational& hu, const BigRational& hv, int d_uz,
                                int d_vz) {
    if (d_uz < 1 || d_vz < 1)
        throw ValidationError("pointwise bound applies at interior points only (distances >= 1)");
    BigRational m = two_point_measure(arr, h, d_uz, d_vz);  // validates the rest

    HarnackResult res;
    const BigRational value = hu * m + hv * (BigRational(1) - m);
    res.deviation = rat_abs(value - (hu + hv) / BigRational(2));

    auto [factor, printed] = gradient_factor(arr, gamma);
    res.printed_constant = printed;
    BigRational phi_ratio(0);
    if (arr.diameter() >= 2) {
        PotentialTable pot = biggs_potentials(arr);
        phi_ratio = pot.phi[1] / pot.phi[0];
    }
    if (d_uz >= 2 && d_vz >= 2) {
        factor = factor / BigRational(2);
        phi_ratio /= BigRational(2);
        res.halved = true;
    }
    res.phi_bound = phi_ratio * rat_abs(hu - hv);
    res.bound = factor * rat_abs(hu - hv);
    res.holds = le_interval(res.deviation, res.bound);
    return res;
}

HarnackResult harnack_clique(const IntersectionArray& arr, GammaStatus gamma, int q, int d,
                             const std::vector<BigRational>& values,
                             const std::vector<int>& query) {
    if (static_cast<int>(values.size()) != q || static_cast<int>(query.size()) != q)
        throw ValidationError("need exactly q boundary values and q query distances");
    bool all_far = true;
    for (int dj : query) {
        if (dj < 1)
            throw ValidationError("pointwise bound applies at interior points only (distances >= 1)");
        all_far = all_far && dj >= 2;
    }

    BigRational value(0), avg(0), sum_abs(0);
    for (int j = 0; j < q; ++j) {
        std::vector<int> rest;
        rest.reserve(q - 1);
        for (int i = 0; i < q; ++i)
            if (i != j) rest.push_back(query[i]);
        value += values[j] * clique_measure(arr, q, d, query[j], rest);
        avg += values[j];
        sum_abs += rat_abs(values[j]);
    }
    avg /= BigRational(q);

    HarnackResult res;
    res.deviation = rat_abs(value - avg);
    auto [factor, printed] = gradient_factor(arr, gamma);
    res.printed_constant = printed;
    BigRational phi_ratio(0);
    if (arr.diameter() >= 2) {
        PotentialTable pot = biggs_potentials(arr);
        phi_ratio = pot.phi[1] / pot.phi[0];
    }
    if (all_far) {
        factor = factor / BigRational(2);
        phi_ratio /= BigRational(2);
        res.halved = true;
    }
    const BigRational spread = BigRational(2) * BigRational(q - 1, q) * sum_abs;
    res.phi_bound = phi_ratio * spread;
    res.bound = factor * spread;
    res.holds = le_interval(res.deviation, res.bound);
    return res;
}

} // namespace drg
