#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drg/errors.hpp"
#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"
#include "drg/potentials.hpp"

#include <string>
#include <vector>

using namespace drg;

namespace {

IntersectionArray fam(const std::string& s) { return generate_family(FamilySpec::parse(s)); }

} // namespace

TEST_CASE("petersen potentials, partial sums, and resistances") {
    PotentialTable t = biggs_potentials(fam("petersen"));
    REQUIRE(t.phi.size() == 2);
    CHECK(t.phi[0] == BigRational(9));
    CHECK(t.phi[1] == BigRational(3));
    REQUIRE(t.Phi.size() == 3);
    CHECK(t.Phi[0] == BigRational(0));
    CHECK(t.Phi[1] == BigRational(9));
    CHECK(t.Phi[2] == BigRational(12));
    CHECK(t.resistance[0] == BigRational(0));
    CHECK(t.resistance[1] == BigRational(3, 5));
    CHECK(t.resistance[2] == BigRational(4, 5));
}

TEST_CASE("cube potentials reproduce the classic resistances") {
    // hamming(3,2) is the 3-cube: 7/12 across an edge, 5/6 between antipodes
    PotentialTable t = biggs_potentials(fam("hamming:3,2"));
    CHECK(t.phi[0] == BigRational(7));
    CHECK(t.phi[1] == BigRational(2));
    CHECK(t.phi[2] == BigRational(1));
    CHECK(t.resistance[1] == BigRational(7, 12));
    CHECK(t.resistance[2] == BigRational(3, 4));
    CHECK(t.resistance[3] == BigRational(5, 6));
}

TEST_CASE("dodecahedron potentials") {
    PotentialTable t = biggs_potentials(fam("dodecahedron"));
    std::vector<BigRational> want = {BigRational(19), BigRational(8), BigRational(5),
                                     BigRational(2), BigRational(1)};
    CHECK(t.phi == want);
    CHECK(t.Phi[5] == BigRational(35));
    CHECK(t.resistance[1] == BigRational(19, 30));
    CHECK(t.resistance[5] == BigRational(7, 6));
}

TEST_CASE("biggs-smith potentials and the extremal resistance ratio") {
    PotentialTable t = biggs_potentials(fam("biggs-smith"));
    std::vector<BigRational> want = {BigRational(101), BigRational(49), BigRational(23),
                                     BigRational(10),  BigRational(7),  BigRational(4),
                                     BigRational(1)};
    CHECK(t.phi == want);
    CHECK(t.Phi[7] == BigRational(195));
    CHECK(t.resistance[7] / t.resistance[1] == BigRational(1) + BigRational(94, 101));
}

TEST_CASE("cycle potentials follow the arithmetic progression") {
    for (int n = 4; n <= 9; ++n) {
        CAPTURE(n);
        IntersectionArray arr = fam("cycle:" + std::to_string(n));
        PotentialTable t = biggs_potentials(arr);
        for (int i = 0; i < arr.diameter(); ++i)
            CHECK(t.phi[i] == BigRational(n - 1 - 2 * i));
        // resistance at distance j is the parallel pair j and n-j
        for (int j = 1; j <= arr.diameter(); ++j)
            CHECK(t.resistance[j] == BigRational(BigInt(j) * (n - j), n));
    }
}

TEST_CASE("last potential equals k over c_D across families") {
    const char* specs[] = {"petersen",    "dodecahedron", "biggs-smith", "complete:6",
                           "cycle:7",     "hamming:4,3",  "johnson:8,3", "odd:5"};
    for (const char* s : specs) {
        CAPTURE(s);
        IntersectionArray arr = fam(s);
        PotentialTable t = biggs_potentials(arr);
        int D = arr.diameter();
        CHECK(t.phi[D - 1] == BigRational(arr.degree(), arr.c(D)));
        // potentials decrease strictly at degree >= 3, weakly otherwise
        for (int i = 1; i < D; ++i) {
            if (arr.degree() >= 3)
                CHECK(t.phi[i] < t.phi[i - 1]);
            else
                CHECK(t.phi[i] <= t.phi[i - 1]);
        }
    }
}

TEST_CASE("regularity constant branches") {
    // diameter 1: constant is exactly zero
    RegularityConstant c1 = constant_C(fam("complete:8"));
    CHECK(c1.is_rational());
    CHECK(c1.exact == BigRational(0));

    // cycles have degree 2 and no constant
    CHECK_THROWS_AS(constant_C(fam("cycle:8")), ValidationError);

    // diameter 2, small degree: the rational branch wins
    RegularityConstant pet = constant_C(fam("petersen"));
    CHECK(pet.is_rational());
    CHECK(pet.exact == BigRational(16, 15));
    CHECK(pet.render() == "16/15");

    // diameter 2, degree 7 sits just inside the rational branch
    RegularityConstant k7 = constant_C(IntersectionArray::parse("7,4;1,2"));
    CHECK(k7.is_rational());
    CHECK(k7.exact == BigRational(16, 35));

    // degree 8 crosses over to the surd branch
    RegularityConstant k8 = constant_C(IntersectionArray::parse("8,5;1,5"));
    CHECK_FALSE(k8.is_rational());
    CHECK(k8.value() == doctest::Approx(0.426776695297).epsilon(1e-11));
    RatInterval enc = k8.enclosure();
    CHECK(enc.lo < enc.hi);
    CHECK(rat_double(enc.hi - enc.lo) < 1e-40);
    // the enclosure really brackets (1+sqrt2)/(2 sqrt 8)
    CHECK(rat_double(enc.lo) < 0.4267766952966369);
    CHECK(rat_double(enc.hi) > 0.4267766952966368);

    // diameter > 2: min(94/101, t/k) with t depending on family membership
    RegularityConstant out = constant_C(fam("hamming:7,2"), GammaStatus::not_in_gamma);
    CHECK(out.exact == BigRational(4, 7));
    CHECK_FALSE(out.conservative);
    RegularityConstant in = constant_C(fam("hamming:7,2"), GammaStatus::in_gamma);
    CHECK(in.exact == BigRational(6, 7));
    CHECK_FALSE(in.conservative);
    RegularityConstant unk = constant_C(fam("hamming:7,2"));
    CHECK(unk.exact == BigRational(6, 7));
    CHECK(unk.conservative);

    // low degree lets the 94/101 cap take over
    RegularityConstant cap = constant_C(fam("dodecahedron"), GammaStatus::not_in_gamma);
    CHECK(cap.exact == BigRational(94, 101));
}

TEST_CASE("regularity report flags the known equality cases") {
    RegularityReport dod = check_regularity(fam("dodecahedron"), GammaStatus::not_in_gamma);
    CHECK(dod.tail_ok);
    CHECK(dod.tail_equality); // phi_1 = phi_2 + phi_3 + phi_4 = 8
    CHECK(dod.tail_slack == BigRational(0));
    CHECK(dod.ratio_extremal_ok);
    CHECK_FALSE(dod.ratio_extremal_equality);
    CHECK(dod.scaled_tail_ok);

    RegularityReport bs = check_regularity(fam("biggs-smith"), GammaStatus::not_in_gamma);
    CHECK(bs.ratio_extremal_ok);
    CHECK(bs.ratio_extremal_equality); // d_D/d_1 = 1 + 94/101 exactly
    CHECK(bs.resistance_ratio == BigRational(195, 101));
    CHECK(bs.tail_ok);
    CHECK_FALSE(bs.tail_equality);
    CHECK(bs.scaled_tail_ok);

    RegularityReport pet = check_regularity(fam("petersen"));
    CHECK(pet.ratio_extremal_ok);
    CHECK(pet.ratio_c_bound == Verdict::holds); // 4/3 <= 1 + 16/15
    CHECK(pet.tail_ok);
    CHECK(pet.scaled_tail_ok);

    // degree 2: no constant, and the spread bound itself needs degree >= 3.
    // On C_9 the resistances grow like j(n-j), so the spread is 20/8 = 5/2,
    // well past the cubic-and-up ceiling; the tail inequalities still hold.
    RegularityReport cyc = check_regularity(fam("cycle:9"));
    CHECK_FALSE(cyc.C.has_value());
    CHECK_FALSE(cyc.c_unavailable_reason.empty());
    CHECK(cyc.resistance_ratio == BigRational(5, 2));
    CHECK_FALSE(cyc.ratio_extremal_ok);
    CHECK(cyc.tail_ok);
    CHECK(cyc.tail_equality); // 6 = 4 + 2, another equality case outside degree 3
    CHECK(cyc.scaled_tail_ok);
}

TEST_CASE("tail dominance holds across the parameter sweep") {
    std::vector<std::string> sweep = {"dodecahedron", "biggs-smith", "petersen"};
    for (int n = 3; n <= 12; ++n) sweep.push_back("complete:" + std::to_string(n));
    for (int m = 1; m <= 5; ++m)
        for (int q = 2; q <= 4; ++q) sweep.push_back("hamming:" + std::to_string(m) + "," +
                                                     std::to_string(q));
    for (int m = 4; m <= 10; ++m)
        for (int q = 2; 2 * q <= m && q <= 5; ++q)
            sweep.push_back("johnson:" + std::to_string(m) + "," + std::to_string(q));
    for (int m = 2; m <= 6; ++m) sweep.push_back("odd:" + std::to_string(m));

    for (const auto& s : sweep) {
        CAPTURE(s);
        RegularityReport r = check_regularity(fam(s));
        CHECK(r.ratio_extremal_ok);
        CHECK(r.tail_ok);
        CHECK(r.scaled_tail_ok);
        if (r.C) CHECK(r.ratio_c_bound != Verdict::fails);
    }
}
