#include "drg/potentials.hpp"

#include "drg/errors.hpp"

#include <algorithm>

namespace drg {

PotentialTable biggs_potentials(const IntersectionArray& arr) {
    const int D = arr.diameter();
    const long long k = arr.degree();
    const BigRational n(arr.vertex_count());

    PotentialTable t;
    t.phi.resize(D);
    t.phi[0] = n - 1;
    for (int i = 1; i < D; ++i)
        t.phi[i] = (BigRational(arr.c(i)) * t.phi[i - 1] - k) / arr.b(i);

    // Independent closed form: phi_i = k * sum over l of the downhill path
    // weight b_{i+1}..b_{l-1} / c_{i+1}..c_l. Exact agreement is required.
    for (int i = 0; i < D; ++i) {
        BigRational sum = 0;
        BigRational weight = 1;
        for (int l = i + 1; l <= D; ++l) {
            weight /= arr.c(l);
            sum += weight;
            weight *= arr.b(l);
        }
        BigRational closed = BigRational(k) * sum;
        if (closed != t.phi[i])
            throw NumericalError("potential recursion and closed form disagree at i=" +
                                 std::to_string(i));
    }

    for (int i = 0; i < D; ++i)
        if (t.phi[i] <= 0)
            throw ValidationError("potential phi_" + std::to_string(i) +
                                  " is not positive; array belongs to no graph");
    if (k >= 3)
        for (int i = 1; i < D; ++i)
            if (t.phi[i] >= t.phi[i - 1])
                throw ValidationError("potentials fail to decrease at i=" + std::to_string(i) +
                                      " despite degree >= 3; array belongs to no graph");

    t.Phi.resize(D + 1);
    t.Phi[0] = 0;
    for (int i = 0; i < D; ++i) t.Phi[i + 1] = t.Phi[i] + t.phi[i];

    const BigRational nk = n * k;
    t.resistance.resize(D + 1);
    for (int j = 0; j <= D; ++j) t.resistance[j] = 2 * t.Phi[j] / nk;
    return t;
}

RatInterval RegularityConstant::enclosure() const {
    if (form == Form::rational) return RatInterval::point(exact);
    // (1 + sqrt 2) / (2 sqrt k)
    RatInterval s2 = sqrt_enclosure(2);
    RatInterval sk = sqrt_enclosure(k);
    BigRational lo = (1 + s2.lo) / (2 * sk.hi);
    BigRational hi = (1 + s2.hi) / (2 * sk.lo);
    return {lo, hi};
}

double RegularityConstant::value() const {
    if (form == Form::rational) return rat_double(exact);
    return enclosure().mid();
}

std::string RegularityConstant::render() const {
    if (form == Form::rational) return rat_str(exact);
    return decimal12(value());
}

RegularityConstant constant_C(const IntersectionArray& arr, GammaStatus gamma) {
    const int D = arr.diameter();
    const long long k = arr.degree();

    RegularityConstant c;
    c.gamma = gamma;
    c.k = k;

    if (D == 1) {
        // Complete graph: every hitting time is exactly n-1.
        c.form = RegularityConstant::Form::rational;
        c.exact = 0;
        return c;
    }
    if (k <= 2)
        throw ValidationError("regularity constant needs degree >= 3 (cycles are excluded)");

    if (D == 2) {
        // max(16/(5k), (1+sqrt2)/(2 sqrt k)), resolved exactly by comparing
        // squares: the rational term wins iff (1024-75k)^2 >= 5000 k^2 with
        // 1024 - 75k >= 0.
        BigRational rational_term(16, 5 * k);
        BigInt lhs = 1024 - 75 * BigInt(k);
        bool rational_wins = lhs >= 0 && lhs * lhs >= 5000 * BigInt(k) * k;
        if (rational_wins) {
            c.form = RegularityConstant::Form::rational;
            c.exact = rational_term;
        } else {
            c.form = RegularityConstant::Form::surd;
        }
        return c;
    }

    // D > 2: min(94/101, t/k) with t = 4 outside the short list of tight
    // families and t = 6 inside it. Unknown membership takes the larger
    // in-family value and is flagged conservative.
    long long t = (gamma == GammaStatus::not_in_gamma) ? 4 : 6;
    c.conservative = (gamma == GammaStatus::unknown);
    BigRational branch(t, k);
    BigRational cap(94, 101);
    c.form = RegularityConstant::Form::rational;
    c.exact = std::min(branch, cap);
    return c;
}

RegularityReport check_regularity(const IntersectionArray& arr, GammaStatus gamma) {
    const int D = arr.diameter();
    PotentialTable pt = biggs_potentials(arr);

    RegularityReport r;
    try {
        r.C = constant_C(arr, gamma);
    } catch (const ValidationError& e) {
        r.c_unavailable_reason = e.what();
    }

    r.resistance_ratio = pt.Phi[D] / pt.Phi[1];
    BigRational extremal = BigRational(1) + BigRational(94, 101);
    r.ratio_extremal_ok = r.resistance_ratio <= extremal;
    r.ratio_extremal_equality = r.resistance_ratio == extremal;
    if (r.C) r.ratio_c_bound = le_interval(r.resistance_ratio, BigRational(1) + r.C->enclosure());

    if (D >= 2) {
        BigRational tail = 0;
        for (int i = 2; i < D; ++i) tail += pt.phi[i];
        r.tail_slack = pt.phi[1] - tail;
        r.tail_ok = r.tail_slack >= 0;
        r.tail_equality = r.tail_slack == 0;
    } else {
        r.tail_slack = 0;
        r.tail_ok = true;
    }

    r.scaled_tail_ok = true;
    r.scaled_tail_slacks.resize(D);
    r.max_tail_ratio = 0;
    for (int m = 0; m < D; ++m) {
        BigRational tail = 0;
        for (int i = m + 1; i < D; ++i) tail += pt.phi[i];
        r.scaled_tail_slacks[m] = BigRational(3 * (m + 1)) * pt.phi[m] - tail;
        if (r.scaled_tail_slacks[m] <= 0) r.scaled_tail_ok = false;
        if (m < D - 1) r.max_tail_ratio = std::max(r.max_tail_ratio, BigRational(tail / pt.phi[m]));
    }
    return r;
}

} // namespace drg
