#pragma once

// Vertex potentials of the distance shells, spherical effective resistances,
// and the degree-based regularity constant with the bound checks built on it.
// Everything array-side here is exact rational; the one irrational constant
// shape is carried as an exact enclosure so comparisons never fall back to
// floating point.

#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drg {

struct PotentialTable {
    std::vector<BigRational> phi;         // phi_0..phi_{D-1}
    std::vector<BigRational> Phi;         // Phi_0..Phi_D with Phi_0 = 0
    std::vector<BigRational> resistance;  // resistance[j] between shells 0 and j; [0] = 0
};

// Computes phi by the downhill recursion and independently by the closed-form
// sum, requiring exact agreement. A formally valid array whose potentials
// come out non-positive, or non-decreasing at degree >= 3, is reported as
// infeasible: no graph realizes it.
PotentialTable biggs_potentials(const IntersectionArray& arr);

enum class GammaStatus { in_gamma, not_in_gamma, unknown };

// Uniform bound C with hitting-time spread H_max <= (1+C)(n-1). Rational in
// every case except diameter 2 at degree >= 8, where it is (1+sqrt2)/(2 sqrt k).
struct RegularityConstant {
    enum class Form { rational, surd };
    Form form = Form::rational;
    BigRational exact;           // meaningful when form == rational
    long long k = 0;             // meaningful when form == surd
    GammaStatus gamma = GammaStatus::unknown;
    bool conservative = false;   // gamma unknown: the larger branch value used

    RatInterval enclosure() const;
    double value() const;
    std::string render() const;  // "p/q", or 12 significant digits for the surd
    bool is_rational() const { return form == Form::rational; }
};

// Requires degree >= 3 unless D = 1 (where C = 0 exactly).
RegularityConstant constant_C(const IntersectionArray& arr,
                              GammaStatus gamma = GammaStatus::unknown);

struct RegularityReport {
    std::optional<RegularityConstant> C;     // absent when undefined (k = 2, D >= 2)
    std::string c_unavailable_reason;

    BigRational resistance_ratio;            // d_D / d_1
    bool ratio_extremal_ok = false;          // <= 1 + 94/101
    bool ratio_extremal_equality = false;
    Verdict ratio_c_bound = Verdict::unresolved;   // <= 1 + C, when C available

    BigRational tail_slack;                    // phi_1 - (phi_2 + .. + phi_{D-1}), D >= 2
    bool tail_ok = false;
    bool tail_equality = false;

    std::vector<BigRational> scaled_tail_slacks;     // (3m+3) phi_m - (phi_{m+1}+..+phi_{D-1})
    bool scaled_tail_ok = false;

    BigRational max_tail_ratio;              // max over m of tail_m / phi_m
};

RegularityReport check_regularity(const IntersectionArray& arr,
                                  GammaStatus gamma = GammaStatus::unknown);

} // namespace drg
