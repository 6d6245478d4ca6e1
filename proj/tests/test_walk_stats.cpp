#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drg/errors.hpp"
#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"
#include "drg/potentials.hpp"
#include "drg/walk_stats.hpp"

#include <optional>
#include <string>
#include <vector>

using namespace drg;

namespace {

IntersectionArray fam(const std::string& s) { return generate_family(FamilySpec::parse(s)); }

std::optional<RegularityConstant> maybe_c(const IntersectionArray& arr,
                                          GammaStatus gamma = GammaStatus::unknown) {
    try {
        return constant_C(arr, gamma);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

const BracketResult& find_bracket(const std::vector<BracketResult>& brs, const std::string& name) {
    for (const auto& b : brs)
        if (b.name == name) return b;
    REQUIRE_MESSAGE(false, "bracket not found: " << name);
    static BracketResult dummy;
    return dummy;
}

} // namespace

TEST_CASE("petersen hitting moments") {
    HittingTable t = hitting_moments(fam("petersen"));
    CHECK(t.n == 10);
    CHECK(t.H[0] == BigRational(0));
    CHECK(t.H[1] == BigRational(9));
    CHECK(t.H[2] == BigRational(12));
    CHECK(t.M2[1] == BigRational(189));
    CHECK(t.M2[2] == BigRational(258));
    CHECK(t.Var[1] == BigRational(108));
    CHECK(t.Var[2] == BigRational(114));
    CHECK(t.hplus(0) == BigRational(10));
    CHECK(t.hplus(2) == BigRational(12));
}

TEST_CASE("complete graph moments in closed form") {
    // from any vertex of K_n: H = n-1, M2 = (n-1)(2n-3), Var = (n-1)(n-2)
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        HittingTable t = hitting_moments(fam("complete:" + std::to_string(n)));
        CHECK(t.H[1] == BigRational(n - 1));
        CHECK(t.M2[1] == BigRational(BigInt(n - 1) * (2 * n - 3)));
        CHECK(t.Var[1] == BigRational(BigInt(n - 1) * (n - 2)));
    }
}

TEST_CASE("cycle hitting times follow j(n-j)") {
    for (int n = 4; n <= 9; ++n) {
        CAPTURE(n);
        IntersectionArray arr = fam("cycle:" + std::to_string(n));
        HittingTable t = hitting_moments(arr);
        for (int j = 0; j <= arr.diameter(); ++j)
            CHECK(t.H[j] == BigRational(BigInt(j) * (n - j)));
    }
}

TEST_CASE("hitting times equal the potential partial sums") {
    const char* specs[] = {"petersen", "dodecahedron", "biggs-smith", "hamming:4,3",
                           "johnson:8,3"};
    for (const char* s : specs) {
        CAPTURE(s);
        IntersectionArray arr = fam(s);
        HittingTable t = hitting_moments(arr);
        PotentialTable p = biggs_potentials(arr);
        for (int j = 0; j <= arr.diameter(); ++j) CHECK(t.H[j] == p.Phi[j]);
    }
}

TEST_CASE("dodecahedron and biggs-smith landmark values") {
    HittingTable dod = hitting_moments(fam("dodecahedron"));
    CHECK(dod.H[5] == BigRational(35));

    HittingTable bs = hitting_moments(fam("biggs-smith"));
    CHECK(bs.H[7] == BigRational(195));
    CHECK(bs.M2[7] == BigRational(71895));
}

TEST_CASE("moment brackets hold on petersen and fail where documented") {
    IntersectionArray pet = fam("petersen");
    HittingTable t = hitting_moments(pet);
    auto brs = check_moment_brackets(pet, t, maybe_c(pet));
    for (const auto& b : brs) {
        CAPTURE(b.name);
        CHECK(b.verdict == Verdict::holds);
    }

    // a complete graph has C = 0, so every moment bracket degenerates to the
    // exact closed forms and holds with equality
    IntersectionArray k5 = fam("complete:5");
    HittingTable tk = hitting_moments(k5);
    auto brk = check_moment_brackets(k5, tk, maybe_c(k5));
    for (const auto& b : brk) {
        CAPTURE(b.name);
        CHECK(b.verdict == Verdict::holds);
    }
    CHECK(tk.Var[1] == BigRational(12));
    CHECK(tk.M2[1] == BigRational(28));

    // without a constant only the unconditional lower bound is reported
    IntersectionArray cyc = fam("cycle:7");
    auto brc = check_moment_brackets(cyc, hitting_moments(cyc), maybe_c(cyc));
    for (const auto& b : brc) CHECK(b.name.rfind("first_moment_lower", 0) == 0);
}

TEST_CASE("petersen cover bounds") {
    IntersectionArray pet = fam("petersen");
    CoverBounds cb = cover_bounds(pet, maybe_c(pet));
    REQUIRE(cb.harmonic_exact.has_value());
    CHECK(*cb.harmonic_exact == BigRational(7129, 2520));
    CHECK(*cb.matthews_lower_exact == BigRational(9) * BigRational(7129, 2520));
    CHECK(*cb.matthews_upper_exact == BigRational(12) * BigRational(7129, 2520));
    CHECK(cb.matthews_lower == doctest::Approx(25.4607).epsilon(1e-4));
    CHECK(cb.matthews_upper == doctest::Approx(33.9476).epsilon(1e-4));
    CHECK(cb.closed_lower == doctest::Approx(9.0 * std::log(10.0)));
    REQUIRE(cb.closed_upper.has_value());
    CHECK(*cb.closed_upper ==
          doctest::Approx((1.0 + 16.0 / 15.0) * 9.0 * (1.0 + std::log(9.0))));
    CHECK(cb.matthews_lower <= cb.matthews_upper);
}

TEST_CASE("matthews bracket degenerates on the single edge") {
    // K_2: lower and upper both equal 1, and the cover time is exactly 1
    IntersectionArray k2 = fam("complete:2");
    CoverBounds cb = cover_bounds(k2, maybe_c(k2));
    REQUIRE(cb.matthews_lower_exact.has_value());
    CHECK(*cb.matthews_lower_exact == BigRational(1));
    CHECK(*cb.matthews_upper_exact == BigRational(1));
}

TEST_CASE("mean hitting sum and its bracket") {
    IntersectionArray pet = fam("petersen");
    MixingParams mp = f_and_mixing(pet, maybe_c(pet));
    CHECK(mp.F == BigRational(99)); // 3*9 + 6*12
    CHECK(mp.tau0 == BigRational(99, 10));
    CHECK(mp.f_lower == BigRational(81));
    REQUIRE(mp.f_upper.has_value());
    CHECK(mp.f_upper->is_point());
    CHECK(mp.f_upper->lo == BigRational(31, 15) * BigRational(81));
    CHECK(mp.f_bracket == Verdict::holds);
    REQUIRE(mp.tau1_bound.has_value());
    CHECK(mp.tau1_bound->lo == BigRational(66) * BigRational(31, 15) * BigRational(81) / 10);
    REQUIRE(mp.tau2_bound.has_value());
    CHECK(mp.tau2_bound->lo == BigRational(31, 15) * BigRational(81) / 10);

    // degree 2 leaves only the unconditional lower bound
    IntersectionArray cyc = fam("cycle:8");
    MixingParams mc = f_and_mixing(cyc, maybe_c(cyc));
    CHECK_FALSE(mc.f_upper.has_value());
    CHECK(mc.f_bracket == Verdict::holds);
    CHECK_FALSE(mc.tau1_bound.has_value());
}

TEST_CASE("F bracket across the sweep") {
    std::vector<std::string> sweep = {"dodecahedron", "biggs-smith", "petersen"};
    for (int n = 3; n <= 12; ++n) sweep.push_back("complete:" + std::to_string(n));
    for (int m = 1; m <= 5; ++m)
        for (int q = 2; q <= 4; ++q)
            sweep.push_back("hamming:" + std::to_string(m) + "," + std::to_string(q));
    for (int m = 4; m <= 10; ++m)
        for (int q = 2; 2 * q <= m && q <= 5; ++q)
            sweep.push_back("johnson:" + std::to_string(m) + "," + std::to_string(q));
    for (int m = 2; m <= 6; ++m) sweep.push_back("odd:" + std::to_string(m));

    for (const auto& s : sweep) {
        CAPTURE(s);
        IntersectionArray arr = fam(s);
        MixingParams mp = f_and_mixing(arr, maybe_c(arr));
        CHECK(mp.f_bracket != Verdict::fails);
    }
}

TEST_CASE("petersen intersection numbers") {
    IntersectionNumbers p = intersection_numbers(fam("petersen"));
    CHECK(p.max_residual < 1e-6);
    CHECK(p.at(1, 1, 1) == 0);
    CHECK(p.at(2, 1, 1) == 1);
    CHECK(p.at(0, 1, 1) == 3);
    CHECK(p.at(1, 2, 2) == 4);
    CHECK(p.at(0, 0, 0) == 1);
    CHECK(p.at(2, 1, 2) == 2);

    // row sums recover the shell sizes: sum_j p[h][i][j] = k_i
    IntersectionArray arr = fam("petersen");
    for (int h = 0; h <= 2; ++h)
        for (int i = 0; i <= 2; ++i) {
            BigInt total = 0;
            for (int j = 0; j <= 2; ++j) total += p.at(h, i, j);
            CHECK(total == arr.shell_sizes()[i]);
        }

    // triple-counting identities: p[h][i][j] = p[h][j][i] and
    // k_h p[h][i][j] = k_i p[i][h][j]
    const auto& ks = arr.shell_sizes();
    for (int h = 0; h <= 2; ++h)
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                CHECK(p.at(h, i, j) == p.at(h, j, i));
                CHECK(ks[h] * p.at(h, i, j) == ks[i] * p.at(i, h, j));
            }
}

TEST_CASE("intersection numbers on a bipartite array") {
    IntersectionNumbers p = intersection_numbers(fam("hamming:3,2"));
    // in the cube, antipodal pairs see a perfect pairing of shells
    CHECK(p.at(3, 1, 2) == 3);
    CHECK(p.at(3, 2, 1) == 3);
    CHECK(p.at(3, 3, 0) == 1);
    CHECK(p.at(3, 1, 1) == 0);
}

TEST_CASE("visit statistics on petersen triples") {
    IntersectionArray pet = fam("petersen");

    VisitStats vs = visit_statistics(pet, 1, 2, 1);
    CHECK(vs.p_visit == BigRational(1, 2));
    CHECK(vs.mean_visits == BigRational(6, 5));
    CHECK(vs.var_visits == BigRational(78, 25));

    // w = v: chance the walk returns to its start before hitting u
    VisitStats ret = visit_statistics(pet, 1, 1, 0);
    CHECK(ret.p_visit == BigRational(4, 9));

    // brackets are attached only for genuinely distinct triples
    CHECK_FALSE(vs.brackets.empty());
    CHECK(ret.brackets.empty());
    for (const auto& b : vs.brackets) {
        CAPTURE(b.name);
        CHECK(b.verdict == Verdict::holds);
    }
}

TEST_CASE("visit statistics validate their distance pattern") {
    IntersectionArray pet = fam("petersen");
    CHECK_THROWS_AS(visit_statistics(pet, 1, 0, 1), ValidationError);  // w = u
    CHECK_THROWS_AS(visit_statistics(pet, 1, 2, 3), ValidationError);  // out of range
    CHECK_THROWS_AS(visit_statistics(pet, 2, 1, 0), ValidationError);  // triangle violated
    CHECK_NOTHROW(visit_statistics(pet, 2, 1, 2));
}

TEST_CASE("expected distinct visits") {
    IntersectionArray pet = fam("petersen");
    DistinctVisits dv = expected_distinct_visits(pet, 1);
    CHECK(dv.value == BigRational(65, 18));

    // K_4 genuinely violates the distinct-visit bracket: the walk from a
    // neighbor sees 4/3 vertices on average, below (n-1)/2 = 3/2 at C = 0
    IntersectionArray k4 = fam("complete:4");
    DistinctVisits k4dv = expected_distinct_visits(k4, 1);
    CHECK(k4dv.value == BigRational(4, 3));
    bool lower_failed = false;
    for (const auto& b : k4dv.brackets)
        if (b.name == "distinct_visits_lower") lower_failed = (b.verdict == Verdict::fails);
    CHECK(lower_failed);

    CHECK_THROWS_AS(expected_distinct_visits(pet, 0), ValidationError);
    CHECK_THROWS_AS(expected_distinct_visits(pet, 3), ValidationError);
}

TEST_CASE("distinct visits stay below the vertex count on the sweep") {
    const char* specs[] = {"petersen", "dodecahedron", "hamming:3,2", "johnson:6,2", "odd:4"};
    for (const char* s : specs) {
        CAPTURE(s);
        IntersectionArray arr = fam(s);
        for (int h = 1; h <= arr.diameter(); ++h) {
            DistinctVisits dv = expected_distinct_visits(arr, h);
            CHECK(dv.value > 0);
            CHECK(dv.value < BigRational(arr.vertex_count()));
        }
    }
}
