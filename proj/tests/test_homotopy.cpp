#include <doctest.h>

#include <dencoh/diass.hpp>
#include <dencoh/generators.hpp>
#include <dencoh/homotopy.hpp>
#include <dencoh/rota.hpp>

using namespace dencoh;

namespace {

std::vector<DendCoalgebra> dend_corpus() {
    return {
        split_dendriform(divided_power_coalgebra(2)),
        split_dendriform(grouplike_coalgebra(2), false),
        induced_dendriform(divided_power_rbo(3)),
        zero_dend_coalgebra(2),
    };
}

bool line_status(const HomotopyReport& rep, int n, Label theta, CheckStatus want) {
    for (const auto& l : rep.lines)
        if (l.n == n && l.label == theta)
            return l.status == want;
    return false;
}

/* The dg fixture with its cooperations pushed into labels: Δ_{2,[1]} = Δ_2,
** Δ_{2,[2]} = 0. Used where a graded labeled family with nontrivial degrees
** is needed regardless of validity. */
DendInfCoalgebra dg_to_dendinf() {
    AInfCoalgebra a = dg_fixture(2);
    DendInfCoalgebra out{a.space, 2, false, {}};
    out.ops.push_back({a.ops[0]});
    out.ops.push_back({a.ops[1], graded_zero(a.space, 1, 2, 0)});
    return out;
}

} // namespace

TEST_CASE("graded space bookkeeping") {
    GradedSpace s{{{-1, 2}, {0, 1}, {2, 3}}};
    CHECK(s.shape_ok());
    CHECK(s.total_dim() == 6);
    CHECK(s.degree_of(0) == -1);
    CHECK(s.degree_of(2) == 0);
    CHECK(s.degree_of(5) == 2);
    CHECK(s.tuple_degree(2 * 6 + 4, 2) == 0 + 2);
    GradedSpace bad{{{0, 1}, {0, 2}}};
    CHECK(!bad.shape_ok());
}

TEST_CASE("graded map block validation") {
    GradedSpace s{{{0, 1}, {1, 1}}};
    GradedMap f = graded_zero(s, 1, 1, -1);
    f.map.mat.add_at(0, 1, Rational(1)); // degree 1 → degree 0: shift −1 ✓
    CHECK(f.shape_ok(s));
    f.map.mat.add_at(1, 0, Rational(1)); // degree 0 → degree 1: wrong block
    CHECK(!f.shape_ok(s));
}

TEST_CASE("graded pad inserts the Koszul sign") {
    // f of odd shift against an odd-degree passed-over factor flips sign
    GradedSpace s{{{0, 1}, {1, 1}}};
    GradedMap f = graded_zero(s, 1, 1, -1);
    f.map.mat.add_at(0, 1, Rational(1)); // f(a) = b
    GradedMap padded = graded_pad(s, f, 1, 0);
    // basis: index 0 = b (deg 0), 1 = a (deg 1); columns are pairs (x, y)
    CHECK(padded.map.mat.at(0 * 2 + 0, 0 * 2 + 1) == Rational(1));  // b⊗a ↦ +b⊗b
    CHECK(padded.map.mat.at(1 * 2 + 0, 1 * 2 + 1) == Rational(-1)); // a⊗a ↦ −a⊗b
}

TEST_CASE("A-infinity checks") {
    SUBCASE("zero ops pass") {
        AInfCoalgebra z = embed_ainf(zero_coalgebra(2), 3);
        CHECK(check_ainf(z, 3).fully_verified());
    }
    SUBCASE("degree-0 coalgebras reduce to coassociativity") {
        std::vector<AssocCoalgebra> cs = {divided_power_coalgebra(3), grouplike_coalgebra(2)};
        AssocCoalgebra broken = divided_power_coalgebra(3);
        broken.delta.mat.add_at(0, 0, Rational(1));
        cs.push_back(broken);
        for (const auto& c : cs) {
            HomotopyReport rep = check_ainf(embed_ainf(c, 3), 3);
            CHECK(line_status(rep, 3, 0,
                              check_coassociative(c) ? CheckStatus::passed
                                                     : CheckStatus::failed));
            CHECK(line_status(rep, 1, 0, CheckStatus::passed));
            CHECK(line_status(rep, 2, 0, CheckStatus::passed));
        }
    }
    SUBCASE("graded dg fixture passes (Koszul signs matter)") {
        CHECK(check_ainf(dg_fixture(3), 3).fully_verified());
    }
    SUBCASE("sign-flip mutation fails at n = 3") {
        AInfCoalgebra m = embed_ainf(divided_power_coalgebra(2), 3);
        m.ops[1].map.mat.set_at(1, 1, Rational(-1)); // flip one Δ_2 coefficient
        HomotopyReport rep = check_ainf(m, 3);
        CHECK(line_status(rep, 1, 0, CheckStatus::passed));
        CHECK(line_status(rep, 2, 0, CheckStatus::passed));
        CHECK(line_status(rep, 3, 0, CheckStatus::failed));
    }
    SUBCASE("identities beyond the truncation report as unchecked") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(2), 2);
        HomotopyReport rep = check_ainf(c, 4);
        CHECK(line_status(rep, 3, 0, CheckStatus::truncated));
        CHECK(line_status(rep, 4, 0, CheckStatus::truncated));
        CHECK(rep.ok());
        CHECK(!rep.fully_verified());
    }
}

TEST_CASE("Rota-Baxter operators on A-infinity structures") {
    SUBCASE("zero operator passes") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(3), 3);
        RBOInf zero{graded_zero(c.space, 1, 1, 0)};
        CHECK(check_rbo_inf(c, zero).fully_verified());
    }
    SUBCASE("degree-0 reduction to the coalgebra operator identity") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(4), 2);
        RBOInf r = divided_power_rbo_inf(c, 4);
        CHECK(check_rbo_inf(c, r).fully_verified());
        RBOInf bad = r;
        bad.R.map.mat.add_at(0, 1, Rational(1, 5));
        RelRBO ungraded = divided_power_rbo(4);
        ungraded.T.mat.add_at(0, 1, Rational(1, 5));
        CHECK(check_rbo_inf(c, bad).ok() == check_rbo(ungraded));
        CHECK(!check_rbo_inf(c, bad).ok());
    }
    SUBCASE("identity operator fails once Δ_2 is nonzero") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(3), 2);
        RBOInf id{{1, 1, 0, LinearMap::identity(3)}};
        HomotopyReport rep = check_rbo_inf(c, id);
        CHECK(line_status(rep, 1, 0, CheckStatus::passed));
        CHECK(line_status(rep, 2, 0, CheckStatus::failed));
    }
    SUBCASE("graded fixture passes") {
        auto [c, r] = graded_rbo_fixture(3, 3);
        CHECK(check_ainf(c, 3).fully_verified());
        CHECK(check_rbo_inf(c, r).fully_verified());
    }
}

TEST_CASE("homotopy dendriform checks") {
    SUBCASE("embedded corpus structures: n = 3 lines are the three identities") {
        for (const auto& base : dend_corpus()) {
            std::vector<DendCoalgebra> variants = {base};
            DendCoalgebra mut = base;
            mut.prec.mat.add_at(0, base.dim - 1, Rational(1));
            variants.push_back(mut);
            for (const auto& c : variants) {
                HomotopyReport rep = check_dendinf(embed_dendinf(c, 3), 3);
                int d = c.dim;
                LinearMap sum = c.prec + c.succ;
                bool c1 =
                    (compose(pad(c.prec, 0, 1, d), c.prec) - compose(pad(sum, 1, 0, d), c.prec))
                        .is_zero();
                bool c2 =
                    (compose(pad(c.succ, 0, 1, d), c.prec) - compose(pad(c.prec, 1, 0, d), c.succ))
                        .is_zero();
                bool c3 =
                    (compose(pad(sum, 0, 1, d), c.succ) - compose(pad(c.succ, 1, 0, d), c.succ))
                        .is_zero();
                CHECK(line_status(rep, 3, 1, c1 ? CheckStatus::passed : CheckStatus::failed));
                CHECK(line_status(rep, 3, 2, c2 ? CheckStatus::passed : CheckStatus::failed));
                CHECK(line_status(rep, 3, 3, c3 ? CheckStatus::passed : CheckStatus::failed));
            }
        }
    }
    SUBCASE("all-zero structure passes") {
        CHECK(check_dendinf(embed_dendinf(zero_dend_coalgebra(2), 4), 4).fully_verified());
    }
}

TEST_CASE("desuspension") {
    SUBCASE("round trip restores the structure") {
        DendInfCoalgebra c = embed_dendinf(induced_dendriform(divided_power_rbo(3)), 3);
        DendInfCoalgebra back = shift_from_dendinf1(shift_to_dendinf1(c));
        REQUIRE(back.max_arity == c.max_arity);
        for (int k = 1; k <= c.max_arity; ++k)
            for (int r = 1; r <= k; ++r)
                CHECK(back.ops[k - 1][r - 1].map == c.ops[k - 1][r - 1].map);
        CHECK(back.space.support == c.space.support);
    }
    SUBCASE("shifted structure passes iff the original passes") {
        for (const auto& base : dend_corpus()) {
            std::vector<DendCoalgebra> variants = {base};
            DendCoalgebra mut = base;
            mut.succ.mat.add_at(1, 0, Rational(1, 2));
            variants.push_back(mut);
            for (const auto& v : variants) {
                DendInfCoalgebra c = embed_dendinf(v, 3);
                DendInfCoalgebra s = shift_to_dendinf1(c);
                CHECK(s.shape_ok());
                HomotopyReport orig = check_dendinf(c, 3);
                HomotopyReport shifted = check_dendinf(s, 3);
                REQUIRE(orig.lines.size() == shifted.lines.size());
                for (size_t i = 0; i < orig.lines.size(); ++i)
                    CHECK(orig.lines[i].status == shifted.lines[i].status);
            }
        }
    }
}

TEST_CASE("label sums split into higher coassociativity") {
    SUBCASE("degree-0 split equals the total coproduct") {
        DendCoalgebra base = induced_dendriform(divided_power_rbo(3));
        AInfCoalgebra a = split(embed_dendinf(base, 3), 3);
        CHECK(a.ops[1].map == total(base).delta);
        CHECK(check_ainf(a, 3).fully_verified());
    }
    SUBCASE("zero splits to zero") {
        AInfCoalgebra a = split(embed_dendinf(zero_dend_coalgebra(2), 3), 3);
        for (const auto& op : a.ops)
            CHECK(op.is_zero());
    }
    SUBCASE("invalid input rejected") {
        DendCoalgebra bad = split_dendriform(divided_power_coalgebra(2));
        bad.prec.mat.add_at(0, 0, Rational(1));
        CHECK_THROWS_AS(split(embed_dendinf(bad, 3), 3), std::invalid_argument);
    }
}

TEST_CASE("induced homotopy dendriform structures") {
    SUBCASE("zero operator induces zero cooperations in arity 2") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(3), 3);
        RBOInf zero{graded_zero(c.space, 1, 1, 0)};
        DendInfCoalgebra ind = induce_dendinf(c, zero, 3);
        CHECK(ind.ops[1][0].is_zero());
        CHECK(ind.ops[1][1].is_zero());
    }
    SUBCASE("matches the coalgebra-level induction on the divided-power fixture") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(4), 3);
        RBOInf r = divided_power_rbo_inf(c, 4);
        DendInfCoalgebra ind = induce_dendinf(c, r, 3);
        DendCoalgebra want = induced_dendriform(divided_power_rbo(4));
        CHECK(ind.ops[1][0].map == want.prec);
        CHECK(ind.ops[1][1].map == want.succ);
        CHECK(check_dendinf(ind, 3).fully_verified());
    }
    SUBCASE("split after induce is A-infinity at n <= 4") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(4), 4);
        RBOInf r = divided_power_rbo_inf(c, 4);
        AInfCoalgebra back = split(induce_dendinf(c, r, 4), 4);
        CHECK(check_ainf(back, 4).fully_verified());
    }
    SUBCASE("the graded fixture also goes through") {
        auto [c, r] = graded_rbo_fixture(3, 3);
        DendInfCoalgebra ind = induce_dendinf(c, r, 3);
        CHECK(check_dendinf(ind, 3).fully_verified());
        CHECK(check_ainf(split(ind, 3), 3).fully_verified());
    }
    SUBCASE("non-operators are rejected") {
        AInfCoalgebra c = embed_ainf(divided_power_coalgebra(3), 2);
        RBOInf id{{1, 1, 0, LinearMap::identity(3)}};
        CHECK_THROWS_AS(induce_dendinf(c, id, 2), std::invalid_argument);
    }
}

TEST_CASE("free diassociative algebra") {
    SUBCASE("bar identities on short words") {
        Rng rng(801);
        for (int t = 0; t < 10; ++t) {
            auto word = [&](int len) {
                DiassWord w;
                for (int i = 0; i < len; ++i)
                    w.letters.push_back(rng.uniform_int(0, 2));
                w.mark = rng.uniform_int(0, len - 1);
                return w;
            };
            DiassWord a = word(rng.uniform_int(1, 3));
            DiassWord b = word(rng.uniform_int(1, 3));
            DiassWord c = word(rng.uniform_int(1, 3));
            CHECK(diass_left(a, diass_left(b, c)) == diass_left(diass_left(a, b), c));
            CHECK(diass_left(a, diass_left(b, c)) == diass_left(a, diass_right(b, c)));
            CHECK(diass_left(diass_right(a, b), c) == diass_right(a, diass_left(b, c)));
            CHECK(diass_right(diass_left(a, b), c) == diass_right(a, diass_right(b, c)));
            CHECK(diass_right(diass_right(a, b), c) == diass_right(a, diass_right(b, c)));
        }
    }
    SUBCASE("marked insertions") {
        DiassWord p1 = pi_map(1, {4, 7});
        CHECK(p1.mark == 0);
        CHECK(p1.letters == std::vector<int>{4, 7});
        DiassWord p2 = pi_map(2, {4, 7});
        CHECK(p2.mark == 1);
        CHECK_THROWS_AS(pi_map(3, {4, 7}), std::out_of_range);
    }
    SUBCASE("the extension is a graded derivation") {
        // D̃(x ⊣ y) = D̃(x) ⊣ y + (−1)^{|x|} x ⊣ D̃(y), same for ⊢
        DendInfCoalgebra c = shift_to_dendinf1(dg_to_dendinf());
        Rng rng(802);
        int bound = 12;
        auto elem_product = [&](const DiassElem& u, const DiassElem& v, bool left) {
            DiassElem out;
            for (const auto& [wu, cu] : u.terms)
                for (const auto& [wv, cv] : v.terms)
                    out.add_term(left ? diass_left(wu, wv) : diass_right(wu, wv), cu * cv,
                                 bound);
            return out;
        };
        for (int t = 0; t < 6; ++t) {
            DiassWord x, y;
            int lx = rng.uniform_int(1, 2), ly = rng.uniform_int(1, 2);
            long long degx = 0;
            for (int i = 0; i < lx; ++i) {
                x.letters.push_back(rng.uniform_int(0, 1));
                degx += c.space.degree_of(x.letters.back());
            }
            x.mark = rng.uniform_int(0, lx - 1);
            for (int i = 0; i < ly; ++i)
                y.letters.push_back(rng.uniform_int(0, 1));
            y.mark = rng.uniform_int(0, ly - 1);
            for (bool left : {true, false}) {
                for (int k = 1; k <= c.max_arity; ++k) {
                    DiassWord xy = left ? diass_left(x, y) : diass_right(x, y);
                    DiassElem lhs = extend_derivation(c, k, xy, bound);
                    DiassElem ex, ey;
                    ex.add_term(x, Rational(1), bound);
                    ey.add_term(y, Rational(1), bound);
                    DiassElem rhs =
                        elem_product(extend_derivation(c, k, x, bound), ey, left);
                    DiassElem second =
                        elem_product(ex, extend_derivation(c, k, y, bound), left);
                    for (const auto& [w2, c2] : second.terms)
                        rhs.add_term(w2, Rational(parity_sign(degx)) * c2, bound);
                    CHECK(lhs.terms == rhs.terms);
                }
            }
        }
    }
}

TEST_CASE("square-zero derivations match the labeled identities") {
    SUBCASE("valid structures: D∘D vanishes and the slices match") {
        for (const auto& base : dend_corpus()) {
            DendInfCoalgebra c = shift_to_dendinf1(embed_dendinf(base, 3));
            DiassReport rep = check_d_squared(c, 4, 3);
            CHECK(rep.dd_zero());
            CHECK(rep.lemma_ok());
            CHECK(check_dendinf(c, 3).ok());
        }
    }
    SUBCASE("broken structures: verdicts still agree, slices still match") {
        DendCoalgebra bad = split_dendriform(divided_power_coalgebra(2));
        bad.succ.mat.add_at(2, 1, Rational(1));
        DendInfCoalgebra c = shift_to_dendinf1(embed_dendinf(bad, 3));
        DiassReport rep = check_d_squared(c, 4, 3);
        CHECK(!rep.dd_zero());
        CHECK(rep.lemma_ok()); // the component correspondence is structural
        CHECK(!check_dendinf(c, 3).ok());
    }
    SUBCASE("tight truncation reports overflow and unchecked lines") {
        DendInfCoalgebra c = shift_to_dendinf1(embed_dendinf(
            induced_dendriform(divided_power_rbo(3)), 3));
        DiassReport rep = check_d_squared(c, 2, 3);
        bool saw_truncated = false;
        for (const auto& l : rep.lines)
            saw_truncated = saw_truncated || l.dd_status == CheckStatus::truncated;
        CHECK(saw_truncated);
        CHECK(rep.overflow);
    }
}
