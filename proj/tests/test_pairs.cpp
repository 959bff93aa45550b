#include "support.hpp"

using namespace testing;

TEST_CASE("pair construction checks degrees") {
    CHECK_THROWS_AS(PairForm(F(T2, "dx[1]"), F(T2, "dx[2]")), std::invalid_argument);
    CHECK_THROWS_AS(PairForm(F(T2, "dx[1]"), F(T1, "1", 0)), ChartMismatch);
    CHECK(PairForm(T2, 4).is_zero());
}

TEST_CASE("pair wedge") {
    const PairForm a = P(R2, "(dx[1] + x[2]*dx[2] | x[1])");
    const ScalarExpr f = S(R2, "x[1]*x[2] + 2");
    CHECK(pair_wedge(PairForm::from_first(Form::function(f)), a) == PairForm(f * a.first(), f * a.second()));
    // (phi ^ phi', (-1)^p phi ^ psi' + psi ^ phi') with p = 1, psi' = 0.
    CHECK(pair_wedge(P(R2, "(dx[1] | 1)"), P(R2, "(dx[2] | 0)", 1)) == P(R2, "(dx[1]^dx[2] | dx[2])"));
    CHECK(pair_wedge(P(R2, "(dx[1] | 0)", 1), P(R2, "(dx[1] | 0)", 1)).is_zero());
}

TEST_CASE("d~_X") {
    const ScalarExpr f = S(T2, "sin(x[1]) + e(1,2)");
    const VectorField X = V(T2, "d/dx[1] + 3*d/dx[2]");
    CHECK(d_tilde(X, PairForm::from_first(Form::function(f))) == PairForm(ext_d(Form::function(f)), Form::function(X.apply(f))));
    const VectorField dx = V(T2, "d/dx[1]");
    CHECK(d_tilde(dx, P(T2, "(sin(x[1])*dx[2] | 0)", 1)) == P(T2, "(cos(x[1])*dx[1]^dx[2] | cos(x[1])*dx[2])"));
    CHECK(d_tilde(dx, P(T2, "(dx[1] | 0)", 1)).is_zero());
}

TEST_CASE("i~_X and L~_X") {
    CHECK(i_tilde(V(R2, "d/dx[1]"), P(R2, "(dx[1]^dx[2] | dx[1])")) == P(R2, "(dx[2] | -1)"));
    CHECK(i_tilde(V(R2, "x[1]*d/dx[2]"), P(R2, "(x[1]^2 | 0)", 0)).is_zero());
    CHECK(i_tilde(V(R2, "d/dx[2]"), P(R2, "(dx[1] | 0)", 1)).is_zero());

    CHECK(lie_tilde(V(T1, "d/dx[1]"), P(T1, "(sin(x[1]) | 0)", 0)) == P(T1, "(cos(x[1]) | 0)", 0));
    CHECK(lie_tilde(V(T2, "2*d/dx[1] - d/dx[2]"), P(T2, "(3*dx[1]^dx[2] | dx[1] - 1/2*dx[2])")).is_zero());
    CHECK(lie_tilde(V(R1, "x[1]*d/dx[1]"), P(R1, "(dx[1] | 1)")) == P(R1, "(dx[1] | 0)"));
}

TEST_CASE("d~_eta") {
    const Form closed = F(T2, "2*dx[1] - dx[2]");
    const PairForm a = P(T2, "(sin(x[2])*dx[1] | cos(x[1]))");
    CHECK(d_eta(closed, a) == PairForm(ext_d(a.first()), -ext_d(a.second())));
    CHECK(d_eta(F(R2, "x[1]*dx[2]"), P(R2, "(0 | 1)", 1)) == P(R2, "(-dx[1]^dx[2] | 0)", 2));
    const Form f = F(R2, "x[1]^2*x[2]");
    CHECK(d_eta(F(R2, "x[1]*dx[2]"), PairForm::from_first(f)) == PairForm::from_first(ext_d(f)));
    CHECK_THROWS_AS(d_eta(F(R2, "dx[1]^dx[2]"), a), std::invalid_argument);
}

TEST_CASE("pair pullback") {
    const PairForm a = P(T2, "(sin(x[2])*dx[1] | cos(x[1]))");
    CHECK(pair_pullback(ChartMap::identity(T2), a) == a);
    const ChartMap doubling = ChartMap::torus_linear(T1, T1, {{2}});
    CHECK(pair_pullback(doubling, P(T1, "(dx[1] | 1)")) == P(T1, "(2*dx[1] | 1)"));
    // doubling relates X = d/dx to 2 d/dy; both sides computed separately.
    const PairForm b = P(T1, "(sin(x[1])*dx[1] | 0)", 1);
    const PairForm lhs = d_tilde(V(T1, "d/dx[1]"), pair_pullback(doubling, b));
    const PairForm rhs = pair_pullback(doubling, d_tilde(V(T1, "2*d/dx[1]"), b));
    CHECK(lhs == rhs);
    CHECK(lhs == P(T1, "(0 | 4*cos(2*x[1])*dx[1])", 2));
}

TEST_CASE("class maps") {
    const VectorField dx = V(T2, "d/dx[1]");
    CHECK(class_embed(dx, F(T2, "dx[1]")) == P(T2, "(dx[1] | 1)"));
    CHECK(class_embed(V(T2, "e(1,0)*d/dx[2]"), Form(T2, 2)).is_zero());
    CHECK_THROWS_AS(class_embed(dx, F(T2, "sin(x[2])*dx[1]")), PreconditionError);
    CHECK_THROWS_AS(class_project(dx, P(T2, "(sin(x[2])*dx[1] | 0)", 1)), PreconditionError);

    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const Chart& c = t % 2 ? T2 : R2;
        const VectorField X = gen::field(rng, c);
        const int p = rng.uniform(1, c.dim() + 1);
        const Form phi = gen::closed_form(rng, c, p), h = gen::closed_form(rng, c, p - 1);
        const auto [s1, s2] = class_split(X, class_reverse(X, phi, h));
        CHECK(s1 == phi);
        CHECK(s2 == h);
    }
}

TEST_CASE("transfer") {
    const PairForm a = P(T2, "(sin(x[2])*dx[1] | cos(x[1]))");
    CHECK(transfer(V(T2, "d/dx[1]"), V(T2, "d/dx[1]"), a) == a);
    CHECK(transfer(V(T2, "d/dx[1]"), V(T2, "d/dx[2]"), P(T2, "(dx[1] | 0)", 1)) == P(T2, "(dx[1] | -1)"));
}

TEST_CASE("delta~_U and Delta~_U") {
    const VectorField dx = V(T2, "d/dx[1]");
    CHECK(delta_tilde(dx, P(T2, "(sin(x[1]) | 0)", 0)).is_zero());
    CHECK(delta_tilde(dx, P(T2, "(sin(x[1])*dx[1] | cos(x[1]))")) == P(T2, "(-cos(x[1]) - sin(x[1]) | 0)", 0));
    const PairForm constant = P(T2, "(3*dx[1] - dx[2] | 2)");
    CHECK(delta_tilde(V(T2, "d/dx[1] + d/dx[2]"), constant) == PairForm(codiff(constant.first()), -codiff(constant.second())));
    CHECK(laplacian_tilde(V(T2, "d/dx[2]"), P(T2, "(sin(x[1]) | 0)", 0)) == P(T2, "(sin(x[1]) | 0)", 0));
    CHECK(laplacian_tilde(dx, P(T2, "(sin(x[1]) | 0)", 0)).is_zero());
    CHECK(laplacian_tilde(V(T2, "2*d/dx[1] - d/dx[2]"), constant).is_zero());
    CHECK_THROWS_AS(delta_tilde(V(R2, "d/dx[1]"), P(R2, "(dx[1] | 1)")), ChartMismatch);
    CHECK_THROWS_AS(delta_tilde(V(T2, "e(1,0)*d/dx[1]"), constant), PreconditionError);
}

TEST_CASE("pair inner product") {
    CHECK(pair_inner(P(T2, "(dx[1] | 0)", 1), P(T2, "(dx[1] | 0)", 1)) == GaussQ(1));
    CHECK(pair_inner(P(T2, "(0 | 1)", 1), P(T2, "(0 | 1)", 1)) == GaussQ(1));
    CHECK(pair_inner(P(T2, "(dx[1] | 0)", 1), P(T2, "(dx[2] | 0)", 1)).is_zero());
    CHECK(pair_inner(P(T2, "(e(1,0) | 0)", 0), P(T2, "(i*e(1,0) | 0)", 0)) == GaussQ(0, -1));
}

TEST_CASE("relative pairs") {
    const ChartMap doubling = ChartMap::torus_linear(T1, T1, {{2}});
    const VectorField dx = V(T1, "d/dx[1]");
    auto rel = [&](const std::string& a, const std::string& b, int p) {
        return RelPairForm(doubling, F(T1, a, p), F(T1, b, p - 1));
    };
    CHECK(d_rel(dx, rel("sin(x[1])*dx[1]", "0", 1)) == rel("0", "4*cos(2*x[1])*dx[1]", 2));
    CHECK(d_rel(dx, rel("dx[1]", "0", 1)).is_zero());
    CHECK(wedge_rel(rel("dx[1]", "0", 1), rel("dx[1]", "1", 1)) == rel("0", "-2*dx[1]", 2));
    const RelPairForm g = rel("sin(x[1])", "0", 0);
    const RelPairForm b = rel("cos(x[1])*dx[1]", "e(1)", 1);
    CHECK(wedge_rel(g, b) == RelPairForm(doubling, g.first().component(0) * b.first(), doubling.pull(g.first().component(0)) * b.second()));

    CHECK(closed_pair(dx, doubling, F(T1, "dx[1]")) == rel("dx[1]", "2", 1));
    CHECK(closed_pair(dx, doubling, Form(T1, 1)).is_zero());
    const Form primitive = F(T1, "sin(x[1])");
    CHECK_NOTHROW(closed_pair(dx, doubling, ext_d(primitive), primitive));
    CHECK_THROWS_AS(closed_pair(dx, doubling, F(T1, "sin(x[1])")), PreconditionError);

    CHECK_THROWS_AS(RelPairForm(doubling, F(T2, "dx[1]"), F(T1, "1", 0)), ChartMismatch);
}

TEST_CASE("relative eta differential and structural maps") {
    const ChartMap id = ChartMap::identity(R2);
    const RelPairForm a(id, Form(R2, 1), F(R2, "1", 0), true);
    CHECK(d_eta_rel(F(R2, "x[1]*dx[2]"), a) == RelPairForm(id, F(R2, "-dx[1]^dx[2]"), Form(R2, 1), true));
    const RelPairForm b(id, F(R2, "x[2]*dx[1]"), F(R2, "x[1]^2", 0), true);
    CHECK(d_eta_rel(F(R2, "dx[1]"), b) == RelPairForm(id, ext_d(b.first()), -ext_d(b.second()), true));
    const RelPairForm closed_second(id, F(R2, "x[2]*dx[1]"), F(R2, "3", 0), true);
    CHECK(d_eta_rel(F(R2, "x[1]*dx[2]"), closed_second).second().is_zero());

    const ChartMap doubling = ChartMap::torus_linear(T1, T1, {{2}});
    CHECK(rel_alpha(doubling, F(T1, "dx[1]")) == RelPairForm(doubling, Form(T1, 2), F(T1, "dx[1]")));
    const RelPairForm r(doubling, F(T1, "sin(x[1])*dx[1]"), F(T1, "3", 0));
    CHECK(rel_beta(r) == r.first());
    const RelPairForm kernel(doubling, Form(T1, 1), F(T1, "e(2)", 0));
    CHECK(rel_beta(kernel).is_zero());
    CHECK(kernel == rel_alpha(doubling, kernel.second()));
}

TEST_CASE("del and dbar") {
    const auto zb = BigradedForm(F(C1, "zb[1]", 0), {0, 0});
    CHECK(split_d(zb).first.is_zero());
    CHECK(split_d(zb).second.form() == F(C1, "dzb[1]"));
    const auto zzb = BigradedForm(F(C1, "z[1]*zb[1]", 0), {0, 0});
    CHECK(split_d(zzb).first.form() == F(C1, "zb[1]*dz[1]"));
    CHECK(split_d(zzb).second.form() == F(C1, "z[1]*dzb[1]"));
    const auto dz = BigradedForm(F(C1, "dz[1]"), {1, 0});
    CHECK(split_d(dz).first.is_zero());
    CHECK(split_d(dz).second.is_zero());
    CHECK_THROWS_AS(BigradedForm(F(C1, "dz[1] + dzb[1]"), {1, 0}), std::invalid_argument);
    // z = x + i y: d(z zb) = 2x dx + 2y dy in real coordinates.
    CHECK(to_real(ext_d(zzb.form())) == F(R2, "2*x[1]*dx[1] + 2*x[2]*dx[2]"));
}

TEST_CASE("dbar_X") {
    const VectorField dz = VectorField::holomorphic(C1, {S(C1, "1")});
    auto pair = [](const std::string& a, Bidegree bd, const std::string& b) {
        return PairBigradedForm(BigradedForm(F(C1, a, bd.p + bd.q), bd), BigradedForm(F(C1, b, bd.p + bd.q - 1), {bd.p, bd.q - 1}));
    };
    CHECK(dbar_X(dz, pair("z[1]", {0, 0}, "0")).as_pair() == P(C1, "(0 | 1)", 1));
    CHECK(dbar_X(dz, pair("dz[1]", {1, 0}, "0")).is_zero());
    CHECK(dbar_X(dz, pair("zb[1]*dz[1]", {1, 0}, "0")).as_pair() == P(C1, "(dzb[1]^dz[1] | 0)", 2));
    CHECK_THROWS_AS(VectorField::holomorphic(C1, {S(C1, "zb[1]")}), PreconditionError);
    CHECK_THROWS_AS(dbar_X(V(C1, "d/dzb[1]"), pair("z[1]", {0, 0}, "0")), PreconditionError);
}

TEST_CASE("dbar_{X,f}") {
    const ChartMap square = ChartMap::polynomial(C1, C1, {S(C1, "z[1]^2")});
    const VectorField dw = VectorField::holomorphic(C1, {S(C1, "1")});
    const RelPairForm a(square, F(C1, "dz[1]"), Form(C1, 0));
    CHECK(dbar_X_rel(dw, a) == RelPairForm(square, Form(C1, 2), F(C1, "2*dz[1]")));
    const ChartMap conj = ChartMap::polynomial(R2, R2, {S(R2, "x[1]"), S(R2, "-x[2]")});
    CHECK_THROWS(dbar_X_rel(dw, RelPairForm(conj, F(R2, "dx[1]"), Form(R2, 0))));

    Rng rng(23);
    GenLimits lim;
    lim.complex_coefficients = true;
    for (int t = 0; t < 30; ++t) {
        const PairBigradedForm p = gen::bigraded_pair(rng, C1, {0, 1}, lim);
        const RelPairForm r = dbar_X_rel(dw, RelPairForm(ChartMap::identity(C1), p.first().form(), p.second().form()));
        CHECK(PairForm(r.first(), r.second()) == dbar_X(dw, p).as_pair());
    }
}

TEST_CASE("Lie derivative is del-exact on closed forms") {
    const VectorField zdz = VectorField::holomorphic(C1, {S(C1, "z[1]")});
    const LieExactness w = lie_exactness_check(zdz, BigradedForm(F(C1, "dz[1]^dzb[1]"), {1, 1}));
    CHECK(w.contraction == F(C1, "z[1]*dzb[1]"));
    CHECK(w.del_contraction == F(C1, "dz[1]^dzb[1]"));
    CHECK(w.lie == w.del_contraction);
    CHECK(w.dbar_contraction.is_zero());
    CHECK(w.holds());

    const VectorField dz = VectorField::holomorphic(CT1, {ScalarExpr::constant(CT1, GaussQ(1, 1))});
    const LieExactness c = lie_exactness_check(dz, BigradedForm(F(CT1, "dz[1]^dzb[1]"), {1, 1}));
    CHECK(c.lie.is_zero());
    CHECK(c.del_contraction.is_zero());
    CHECK(c.dbar_contraction.is_zero());

    const VectorField hol = VectorField::holomorphic(C1, {S(C1, "z[1]^2 + 3")});
    const LieExactness h = lie_exactness_check(hol, BigradedForm(F(C1, "dz[1]"), {1, 0}));
    CHECK(h.contraction == F(C1, "z[1]^2 + 3", 0));
    CHECK(h.dbar_contraction.is_zero());
    CHECK(h.holds());
    CHECK_THROWS_AS(lie_exactness_check(hol, BigradedForm(F(C1, "zb[1]*dz[1]"), {1, 0})), PreconditionError);
}

TEST_CASE("Liouville data") {
    for (int n : {1, 2}) {
        const LiouvilleData L = standard_liouville(n);
        CHECK(interior(L.xi, L.omega) == L.theta);
        CHECK(ext_d(L.theta) == L.omega);
        CHECK(lie(L.xi, L.omega) == L.omega);
    }
    const LiouvilleData L = standard_liouville(1);
    CHECK(L.omega == F(R2, "dx[1]^dx[2]"));
    CHECK(L.theta == F(R2, "x[1]*dx[2]"));
}
