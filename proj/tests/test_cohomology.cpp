#include "support.hpp"

using namespace testing;

namespace {

long ipow(long b, int e) {
    long out = 1;
    while (e-- > 0) out *= b;
    return out;
}

std::vector<long> trimmed(const BandComplex& c) {
    return {c.cohomology.begin(), c.cohomology.end()};
}

}  // namespace

TEST_CASE("de Rham band complex matches the Fourier-mode count") {
    const BandComplex t1 = de_rham_complex(T1, 1);
    CHECK(t1.dims[0] == 3);
    CHECK(t1.dims[1] == 3);
    CHECK(t1.ranks[0] == 2);
    CHECK(t1.cohomology[0] == 1);
    CHECK(t1.cohomology[1] == 1);

    // Mode k != 0 acts by e(k) ^ on the exterior algebra, exact with rank C(n-1, p).
    for (int n = 1; n <= 3; ++n)
        for (int N : {1, 2}) {
            const BandComplex c = de_rham_complex(Chart::torus(n), N);
            CHECK(c.composes_to_zero);
            const long modes = ipow(2 * N + 1, n);
            for (int p = 0; p <= n; ++p) {
                CHECK(c.dims[p] == binomial(n, p) * modes);
                CHECK(c.ranks[p] == binomial(n - 1, p) * (modes - 1));
                CHECK(c.cohomology[p] == binomial(n, p));
            }
        }
}

TEST_CASE("pair complexes on tori") {
    const BandComplex zero_band = pair_complex(V(T2, "d/dx[1]"), 0);
    for (int r : zero_band.ranks) CHECK(r == 0);
    CHECK(trimmed(zero_band) == std::vector<long>{1, 3, 3, 1, 0});

    CHECK(trimmed(pair_complex(V(T2, "d/dx[1]"), 2)) == std::vector<long>{1, 3, 3, 1, 0});
    CHECK(trimmed(pair_complex(V(T3, "d/dx[1]"), 1)) == std::vector<long>{1, 4, 6, 4, 1, 0});
    CHECK(trimmed(pair_complex(V(T2, "d/dx[1] + 2*d/dx[2]"), 1)) == std::vector<long>{1, 3, 3, 1, 0});
    for (int n = 1; n <= 3; ++n) {
        const DimTable t = make_table(pair_complex(VectorField::coordinate(Chart::torus(n), 0), 1), torus_pair_prediction(n));
        CHECK(t.pass());
    }
    CHECK_THROWS_AS(pair_complex(V(T2, "e(1,0)*d/dx[1]"), 1), UnsupportedScenario);
}

TEST_CASE("eta complexes") {
    CHECK(trimmed(eta_complex(F(T2, "dx[1] - dx[2]"), 1)) == std::vector<long>{1, 3, 3, 1, 0});
    CHECK_THROWS_AS(eta_complex(F(T2, "sin(x[1])*dx[2]"), 1), UnsupportedScenario);
}

TEST_CASE("relative complexes") {
    const ChartMap id = ChartMap::identity(T2);
    const VectorField dx = V(T2, "d/dx[1]");
    CHECK(trimmed(relative_complex(id, dx, 1)) == trimmed(pair_complex(dx, 1)));
    const ChartMap gl = ChartMap::torus_linear(T2, T2, {{2, 1}, {1, 1}});
    CHECK(trimmed(relative_complex(gl, dx, 1)) == std::vector<long>{1, 3, 3, 1, 0});
    const ChartMap doubling = ChartMap::torus_linear(T1, T1, {{2}});
    CHECK(trimmed(relative_complex(doubling, V(T1, "d/dx[1]"), 2)) == std::vector<long>{1, 2, 1, 0});
    const ChartMap embed = ChartMap::torus_linear(T1, T2, {{1}, {2}});
    CHECK(trimmed(relative_complex(embed, V(T1, "d/dx[1]"), 1)) == std::vector<long>{1, 3, 2, 0});
    CHECK(trimmed(primed_relative_complex(gl.inverse(), Form(T2, 1), 1)) == std::vector<long>{1, 3, 3, 1, 0});
    CHECK_THROWS_AS(primed_relative_complex(id, F(T2, "sin(x[1])*dx[2]"), 1), UnsupportedScenario);
}

TEST_CASE("Dolbeault pair complexes on the complex torus") {
    const VectorField dz = VectorField::holomorphic(CT1, {ScalarExpr::constant(CT1, GaussQ(1))});
    for (int N : {1, 2}) {
        const BandComplex p0 = dolbeault_pair_complex(dz, 0, N);
        const BandComplex p1 = dolbeault_pair_complex(dz, 1, N);
        CHECK(p0.composes_to_zero);
        CHECK(trimmed(p0) == std::vector<long>{1, 2, 1, 0});
        CHECK(trimmed(p1) == std::vector<long>{1, 2, 1, 0});
    }
}

TEST_CASE("harmonic kernels") {
    const HarmonicKernel k = harmonic_kernel(V(T1, "d/dx[1]"), 0, 1);
    CHECK(k.band_dim == 3);
    CHECK(k.laplacian_kernel == 3);
    for (const char* src : {"(e(1) | 0)", "(e(-1) | 0)", "(1 | 0)"})
        CHECK(laplacian_tilde(V(T1, "d/dx[1]"), P(T1, src, 0)).is_zero());
    // Only (1, 0) is also d~-closed: the joint kernel is smaller.
    CHECK(k.joint_kernel == 1);
    CHECK_FALSE(k.equal());
    REQUIRE(k.witness);
    CHECK_FALSE(d_tilde(V(T1, "d/dx[1]"), *k.witness).is_zero());

    // U = d/dy on T^2: Delta + L_U^2 has eigenvalue k1^2 on e(k1,k2).
    const HarmonicKernel y = harmonic_kernel(V(T2, "d/dx[2]"), 0, 1);
    CHECK(y.laplacian_kernel == 3);
    CHECK(laplacian_tilde(V(T2, "d/dx[2]"), P(T2, "(e(1,0) | 0)", 0)) == P(T2, "(e(1,0) | 0)", 0));

    const HarmonicKernel nonresonant = harmonic_kernel(V(T2, "1/2*d/dx[1]"), 1, 2);
    CHECK(nonresonant.equal());
    CHECK(skew_harmonic_kernel(V(T1, "d/dx[1]"), 0, 1).equal());

    CHECK(lichnerowicz_kernel(F(T2, "dx[1]"), 1, 1) == 0);
    CHECK(lichnerowicz_kernel(F(T2, "3/5*dx[1] + 4/5*dx[2]"), 0, 2) == 0);
}

TEST_CASE("scenario reports") {
    Scenario s;
    s.kind = "identities";
    s.dim = 2;
    const Report r = run(s);
    CHECK_FALSE(r.failed());
    for (const auto& c : r.checks) CHECK(c.verdict == Verdict::pass);
    CHECK(to_json(r).dump() == to_json(run(s)).dump());

    Scenario c;
    c.kind = "cohomology";
    c.dim = 3;
    c.max_freq = 1;
    const Report cr = run(c);
    CHECK_FALSE(cr.failed());
    bool found = false;
    for (const auto& t : cr.tables)
        if (t.name.rfind("d~_X", 0) == 0 && t.dims == std::vector<long>{1, 4, 6, 4, 1, 0}) found = t.verdict == Verdict::pass;
    CHECK(found);

    Scenario e = c;
    e.dim = 2;
    e.eta = "sin(x[1])*dx[2]";
    const Report er = run(e);
    CHECK_FALSE(er.failed());
    bool unsupported = false;
    for (const auto& ch : er.checks) unsupported = unsupported || ch.verdict == Verdict::unsupported;
    CHECK(unsupported);

    const auto j = to_json(cr);
    for (const char* key : {"version", "scenario", "checks", "tables", "elapsed_ms"}) CHECK(j.contains(key));
    CHECK(j["elapsed_ms"] == 0);

    Scenario bad;
    bad.kind = "nonsense";
    CHECK_THROWS_AS(run(bad), ConfigError);
    Scenario bad_field = c;
    bad_field.field = "d/dq[1]";
    CHECK_THROWS_AS(run(bad_field), ConfigError);
    Scenario bad_map;
    bad_map.kind = "relative";
    bad_map.map = "[[1,2]";
    CHECK_THROWS_AS(run(bad_map), ConfigError);
}
