#include <doctest.h>

#include <dencoh/generators.hpp>
#include <dencoh/rota.hpp>

using namespace dencoh;

namespace {

/* Explicit degree-(1,n) derived bracket, written out term by term as an
** independent route to compare with the ambient computation:
**   ⟦P,Q⟧ = (Q⊗id)∘Δ^l∘P − (−1)^n (id⊗Q)∘Δ^r∘P
**         + (−1)^n Σ_{i=1}^n (−1)^i (id^{i−1} ⊗ ((id⊗P)∘Δ^r + (P⊗id)∘Δ^l) ⊗ id^{n−i}) ∘ Q
**         + (−1)^n (id⊗Q)∘(P⊗id)∘Δ − (Q⊗id)∘(id⊗P)∘Δ */
RBOCochain explicit_bracket_deg1(const AssocBicomodule& mod, const RBOCochain& p,
                                 const RBOCochain& q) {
    REQUIRE(p.degree == 1);
    int d = mod.base.dim, m = mod.dim_m, n = q.degree;
    LinearMap id_d = LinearMap::identity(d);
    LinearMap id_m = LinearMap::identity(m);
    LinearMap dstar = compose(tensor(id_m, p.map), mod.delta_r) +
                      compose(tensor(p.map, id_m), mod.delta_l);
    LinearMap out = compose(compose(tensor(q.map, id_m), mod.delta_l), p.map);
    out = out + compose(compose(tensor(id_m, q.map), mod.delta_r), p.map)
                    .scaled(Rational(-parity_sign(n)));
    for (int i = 1; i <= n; ++i)
        out = out + compose(pad(dstar, i - 1, n - i, m), q.map)
                        .scaled(Rational(parity_sign(n) * parity_sign(i)));
    out = out + compose(tensor(id_m, q.map), compose(tensor(p.map, id_d), mod.base.delta))
                    .scaled(Rational(parity_sign(n)));
    out = out - compose(tensor(q.map, id_m), compose(tensor(id_d, p.map), mod.base.delta));
    return {n + 1, out};
}

} // namespace

TEST_CASE("divided-power fixture is a Rota-Baxter operator") {
    RelRBO r = divided_power_rbo(4);
    CHECK(check_rbo(r));

    SUBCASE("against the term-by-term summation oracle") {
        // (R⊗R)Δ(c_n) = Σ_{i+j=n, i,j≥1} 1/(i·j) c_{i−1}⊗c_{j−1};
        // (id⊗R)Δ R(c_n) + (R⊗id)Δ R(c_n) expands to the same table
        int d = 4;
        LinearMap lhs = compose(tensor(r.T, r.T), r.mod.base.delta);
        for (int n = 0; n < d; ++n)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Rational want;
                    if (i + j + 2 == n && i + 1 >= 1 && j + 1 >= 1)
                        want = Rational(1, (i + 1) * (j + 1));
                    CHECK(lhs.mat.at(i * d + j, n) == want);
                }
    }
    SUBCASE("T = 0 is trivially Rota-Baxter") {
        CHECK(check_rbo(zero_rbo(r.mod)));
    }
    SUBCASE("perturbing one coefficient breaks it") {
        RelRBO bad = r;
        bad.T.mat.add_at(0, 1, Rational(1, 5));
        CHECK(!check_rbo(bad));
    }
}

TEST_CASE("induced dendriform coalgebra") {
    RelRBO r = divided_power_rbo(4);
    DendCoalgebra ind = induced_dendriform(r);
    SUBCASE("passes the dendriform identities") {
        CHECK(check_dend_violation(ind) == 0);
    }
    SUBCASE("structure constants: Δ_≺(c_n) = Σ_{j≥1} (1/j) c_i⊗c_{j−1}") {
        int d = 4;
        for (int n = 0; n < d; ++n)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Rational want;
                    if (i + j + 1 == n)
                        want = Rational(1, j + 1); // c_i ⊗ c_j from (id⊗R)(c_i⊗c_{j+1})
                    CHECK(ind.prec.mat.at(i * d + j, n) == want);
                }
    }
    SUBCASE("(T⊗T)∘Δ = (Δ_≺+Δ_≻)∘T") {
        LinearMap lhs = compose(tensor(r.T, r.T), r.mod.base.delta);
        CHECK(lhs == compose(ind.prec + ind.succ, r.T));
    }
    SUBCASE("total of the induced structure is coassociative") {
        CHECK(check_coassociative(total(ind)));
    }
    SUBCASE("zero operator induces the zero structure") {
        DendCoalgebra z = induced_dendriform(zero_rbo(r.mod));
        CHECK(z.prec.is_zero());
        CHECK(z.succ.is_zero());
    }
    SUBCASE("non-operators are rejected") {
        RelRBO bad = r;
        bad.T.mat.add_at(1, 2, Rational(3));
        CHECK_THROWS_AS(induced_dendriform(bad), std::invalid_argument);
    }
}

TEST_CASE("Maurer-Cartan check on the ambient space") {
    CHECK(check_maurer_cartan(self_bicomodule(zero_coalgebra(2))));
    CHECK(check_maurer_cartan(self_bicomodule(divided_power_coalgebra(3))));
    AssocBicomodule bad = self_bicomodule(divided_power_coalgebra(3));
    bad.delta_r.mat.add_at(0, 0, Rational(1));
    CHECK(!check_maurer_cartan(bad));
}

TEST_CASE("derived bracket") {
    Rng rng(601);
    SUBCASE("⟦T,T⟧ = 0 iff the operator identity holds") {
        std::vector<RelRBO> fixtures;
        fixtures.push_back(divided_power_rbo(3));
        fixtures.push_back(divided_power_rbo(4));
        fixtures.push_back(zero_rbo(self_bicomodule(divided_power_coalgebra(3))));
        for (int t = 0; t < 4; ++t) { // random T, almost surely not Rota-Baxter
            AssocBicomodule mod = self_bicomodule(divided_power_coalgebra(3));
            fixtures.push_back({mod, random_linear_map(rng, 3, 3)});
        }
        RelRBO mut = divided_power_rbo(4);
        mut.T.mat.add_at(2, 3, Rational(1, 7));
        fixtures.push_back(mut);
        for (const auto& r : fixtures) {
            RBOCochain t1 = rbo_cochain_of(r);
            CHECK(derived_bracket(r.mod, t1, t1).map.is_zero() == check_rbo(r));
        }
    }
    SUBCASE("⟦0,Q⟧ = 0") {
        AssocBicomodule mod = self_bicomodule(divided_power_coalgebra(3));
        RBOCochain zero{1, LinearMap::zero(3, 3)};
        for (int n = 1; n <= 2; ++n)
            CHECK(derived_bracket(mod, zero, random_rbo_cochain(rng, mod, n)).map.is_zero());
    }
    SUBCASE("ambient computation matches the explicit degree-1 formula") {
        std::vector<AssocBicomodule> mods = {
            self_bicomodule(divided_power_coalgebra(3)),
            self_bicomodule(grouplike_coalgebra(2)),
            {divided_power_coalgebra(2), 3, LinearMap::zero(6, 3), LinearMap::zero(6, 3)},
        };
        for (const auto& mod : mods)
            for (int n = 1; n <= 2; ++n)
                for (int t = 0; t < 4; ++t) {
                    RBOCochain p = random_rbo_cochain(rng, mod, 1);
                    RBOCochain q = random_rbo_cochain(rng, mod, n);
                    RBOCochain ambient = derived_bracket(mod, p, q);
                    RBOCochain direct = explicit_bracket_deg1(mod, p, q);
                    CHECK(ambient.map == direct.map);
                }
    }
}

TEST_CASE("induced coalgebra on M and bicomodule on C") {
    RelRBO r = divided_power_rbo(4);
    AssocCoalgebra m_coalg = induced_coalgebra_on_M(r);
    CHECK(check_coassociative(m_coalg));
    AssocBicomodule c_bicom = induced_bicomodule_on_C(r);
    CHECK(check_bicomodule(c_bicom));
    // Δ_* is the total coproduct of the induced dendriform structure
    DendCoalgebra ind = induced_dendriform(r);
    CHECK(m_coalg.delta == total(ind).delta);

    RelRBO z = zero_rbo(r.mod);
    CHECK(induced_coalgebra_on_M(z).delta.is_zero());
    AssocBicomodule zb = induced_bicomodule_on_C(z);
    CHECK(zb.delta_l.is_zero());
    CHECK(zb.delta_r.is_zero());
}

TEST_CASE("operator coboundary") {
    Rng rng(602);
    RelRBO r = divided_power_rbo(3);
    SUBCASE("squares to zero") {
        for (int n = 1; n <= 3; ++n)
            for (int t = 0; t < 4; ++t) {
                RBOCochain f = random_rbo_cochain(rng, r.mod, n);
                CHECK(rbo_coboundary(r, rbo_coboundary(r, f)).map.is_zero());
            }
    }
    SUBCASE("d_T f = (−1)^n δ(f): the dual-path oracle") {
        for (int n = 1; n <= 3; ++n)
            for (int t = 0; t < 4; ++t) {
                RBOCochain f = random_rbo_cochain(rng, r.mod, n);
                RBOCochain lhs = d_T(r, f);
                RBOCochain rhs = rbo_coboundary(r, f);
                CHECK(lhs.map == rhs.map.scaled(Rational(parity_sign(n))));
            }
    }
    SUBCASE("zero operator: the complex has zero differential, dims m^n·d") {
        RelRBO z = zero_rbo(self_bicomodule(divided_power_coalgebra(2)));
        auto dims = rbo_cohomology_dims(z, 3);
        CHECK(dims == std::vector<long long>{2 * 2, 4 * 2, 8 * 2});
    }
}

TEST_CASE("comparison maps into the dendriform complex") {
    Rng rng(603);
    RelRBO r = divided_power_rbo(4);
    SUBCASE("Θ_1(T) is the induced multiplication") {
        DendCochain t1 = theta(r.mod, rbo_cochain_of(r));
        DendCoalgebra ind = induced_dendriform(r);
        CHECK(t1.comps[0] == ind.prec);
        CHECK(t1.comps[1] == ind.succ);
    }
    SUBCASE("Θ_n(0) = 0") {
        RBOCochain zero{2, LinearMap::zero(16, 4)};
        CHECK(theta(r.mod, zero).is_zero());
    }
    SUBCASE("Θ intertwines the brackets: Θ_{1+n}⟦P,Q⟧ = [Θ_1 P, Θ_n Q]") {
        std::vector<AssocBicomodule> mods = {r.mod, self_bicomodule(grouplike_coalgebra(2))};
        for (const auto& mod : mods)
            for (int n = 1; n <= 2; ++n)
                for (int t = 0; t < 4; ++t) {
                    RBOCochain p = random_rbo_cochain(rng, mod, 1);
                    RBOCochain q = random_rbo_cochain(rng, mod, n);
                    DendCochain lhs = theta(mod, derived_bracket(mod, p, q));
                    LabeledElem rhs = bracket<LabeledCoEndOps>(
                        cochain_to_elem(mod.dim_m, theta(mod, p)),
                        cochain_to_elem(mod.dim_m, theta(mod, q)));
                    CHECK(cochain_to_elem(mod.dim_m, lhs) == rhs);
                }
    }
    SUBCASE("chain map up to the bracket-forced sign: δ∘Θ_n = (−1)^n Θ_{n+1}∘d_T") {
        DendBicomodule self = dend_self_bicomodule(induced_dendriform(r));
        for (int n = 1; n <= 2; ++n)
            for (int t = 0; t < 3; ++t) {
                RBOCochain f = random_rbo_cochain(rng, r.mod, n);
                DendCochain lhs = dend_coboundary(self, theta(r.mod, f));
                DendCochain rhs = theta(r.mod, d_T(r, f)).scaled(Rational(parity_sign(n)));
                for (int k = 0; k <= n + 1; ++k)
                    CHECK(lhs.comps[k] == rhs.comps[k]);
            }
    }
}
