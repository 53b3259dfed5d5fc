#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coalg.hpp"
#include "dendalg.hpp"
#include "dendcoalg.hpp"
#include "homotopy.hpp"
#include "linalg.hpp"
#include "operad.hpp"
#include "rota.hpp"

namespace dencoh {

/* Seeded randomness for property checks. Every randomized test and every CLI
** report draws from one of these, so runs are reproducible bit for bit. */
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(gen);
    }

    /* Small rationals: numerator in [−3,3], denominator in {1,2,3}. */
    Rational small_rational() {
        return Rational(uniform_int(-3, 3), uniform_int(1, 3));
    }
};

inline LinearMap random_linear_map(Rng& rng, int cod, int dom) {
    LinearMap f(cod, dom);
    for (int r = 0; r < cod; ++r)
        for (int c = 0; c < dom; ++c)
            f.mat.add_at(r, c, rng.small_rational());
    return f;
}

/* ---- coalgebra corpus -------------------------------------------------- */

inline AssocCoalgebra zero_coalgebra(int d) {
    return {d, LinearMap::zero(d * d, d)};
}

/* Δ(e_i) = e_i ⊗ e_i. */
inline AssocCoalgebra grouplike_coalgebra(int d) {
    LinearMap delta(d * d, d);
    for (int i = 0; i < d; ++i)
        delta.mat.add_at(i * d + i, i, Rational(1));
    return {d, delta};
}

/* Δ(c_n) = Σ_{i+j=n} c_i ⊗ c_j on c_0 … c_{d−1}. */
inline AssocCoalgebra divided_power_coalgebra(int d) {
    LinearMap delta(d * d, d);
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= n; ++i)
            delta.mat.add_at(i * d + (n - i), n, Rational(1));
    return {d, delta};
}

inline AssocCoalgebra direct_sum(const AssocCoalgebra& a, const AssocCoalgebra& b) {
    int d = a.dim + b.dim;
    LinearMap delta(d * d, d);
    for (int r = 0; r < a.delta.cod_dim(); ++r)
        for (const auto& [c, v] : a.delta.mat.row(r))
            delta.mat.add_at((r / a.dim) * d + r % a.dim, c, v);
    for (int r = 0; r < b.delta.cod_dim(); ++r)
        for (const auto& [c, v] : b.delta.mat.row(r))
            delta.mat.add_at((a.dim + r / b.dim) * d + (a.dim + r % b.dim), a.dim + c, v);
    return {d, delta};
}

/* ---- dendriform corpus ------------------------------------------------- */

inline DendCoalgebra zero_dend_coalgebra(int d) {
    return {d, LinearMap::zero(d * d, d), LinearMap::zero(d * d, d)};
}

/* An associative coalgebra split as (Δ, 0) or (0, Δ). */
inline DendCoalgebra split_dendriform(const AssocCoalgebra& c, bool into_prec = true) {
    LinearMap zero = LinearMap::zero(c.dim * c.dim, c.dim);
    if (into_prec)
        return {c.dim, c.delta, zero};
    return {c.dim, zero, c.delta};
}

inline DendBicomodule zero_coaction_bicomodule(const DendCoalgebra& c, int m) {
    return {c, m, LinearMap::zero(c.dim * m, m), LinearMap::zero(c.dim * m, m),
            LinearMap::zero(m * c.dim, m), LinearMap::zero(m * c.dim, m)};
}

/* Two copies of the self bicomodule: M = C ⊕ C with the diagonal coactions.
** The simplest valid bicomodule with M ≠ C. */
inline DendBicomodule double_self_bicomodule(const DendCoalgebra& c) {
    int d = c.dim, m = 2 * d;
    auto left = [&](const LinearMap& f) {
        // Δ^l(copy k of e_b) = Σ e_x ⊗ (copy k of e_y) from f entries ((x,y), b)
        LinearMap out(d * m, m);
        for (int row = 0; row < f.cod_dim(); ++row)
            for (const auto& [col, v] : f.mat.row(row))
                for (int k = 0; k < 2; ++k)
                    out.mat.add_at((row / d) * m + (k * d + row % d), k * d + col, v);
        return out;
    };
    auto right = [&](const LinearMap& f) {
        LinearMap out(m * d, m);
        for (int row = 0; row < f.cod_dim(); ++row)
            for (const auto& [col, v] : f.mat.row(row))
                for (int k = 0; k < 2; ++k)
                    out.mat.add_at((k * d + row / d) * d + row % d, k * d + col, v);
        return out;
    };
    return {c, m, left(c.prec), left(c.succ), right(c.prec), right(c.succ)};
}

/* ---- dendriform algebra corpus ------------------------------------------ */

/* Basis x, x², …, x^d with a ≺ b = a·R(b) and a ≻ b = R(a)·b, where
** R(x^k) = x^{k+1}/(k+1) and monomials above degree d are truncated to zero.
** R is a Rota-Baxter operator on the truncated polynomial algebra, so the
** two products are dendriform. */
inline DendAlgebra truncated_poly_dend_algebra(int d) {
    LinearMap prec(d, d * d), succ(d, d * d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            if (i + j + 1 > d)
                continue;
            int col = (i - 1) * d + (j - 1);
            prec.mat.add_at(i + j, col, Rational(1, j + 1)); // x^{i+j+1}/(j+1)
            succ.mat.add_at(i + j, col, Rational(1, i + 1));
        }
    return {d, prec, succ};
}

/* Truncated polynomial multiplication split as (ab, 0). */
inline DendAlgebra split_truncated_poly_algebra(int d) {
    LinearMap prec(d, d * d), succ(d, d * d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (i + j <= d)
                prec.mat.add_at(i + j - 1, (i - 1) * d + (j - 1), Rational(1));
    return {d, prec, succ};
}

inline DendAlgebra zero_dend_algebra(int d) {
    return {d, LinearMap::zero(d, d * d), LinearMap::zero(d, d * d)};
}

/* ---- Rota-Baxter corpus -------------------------------------------------- */

/* The divided-power fixture: C = span(c_0..c_{d−1}) with its self bicomodule
** and R(c_k) = (1/k) c_{k−1}, R(c_0) = 0. */
inline RelRBO divided_power_rbo(int d) {
    AssocBicomodule mod = self_bicomodule(divided_power_coalgebra(d));
    LinearMap t(d, d);
    for (int k = 1; k < d; ++k)
        t.mat.add_at(k - 1, k, Rational(1, k));
    return {mod, t};
}

inline RelRBO zero_rbo(const AssocBicomodule& mod) {
    return {mod, LinearMap::zero(mod.dim_m, mod.base.dim)};
}

inline RBOCochain random_rbo_cochain(Rng& rng, const AssocBicomodule& mod, int degree) {
    return {degree,
            random_linear_map(rng, static_cast<int>(ipow(mod.dim_m, degree)), mod.base.dim)};
}

/* ---- homotopy corpus ----------------------------------------------------- */

/* Everything in degree 0; higher cooperations vanish up to max_arity. */
inline GradedSpace degree_zero_space(int d) { return {{{0, d}}}; }

inline AInfCoalgebra embed_ainf(const AssocCoalgebra& c, int max_arity) {
    AInfCoalgebra out{degree_zero_space(c.dim), max_arity, {}};
    for (int k = 1; k <= max_arity; ++k) {
        GradedMap op = graded_zero(out.space, 1, k, k - 2);
        if (k == 2)
            op.map = c.delta;
        out.ops.push_back(op);
    }
    return out;
}

inline DendInfCoalgebra embed_dendinf(const DendCoalgebra& c, int max_arity) {
    DendInfCoalgebra out{degree_zero_space(c.dim), max_arity, false, {}};
    for (int k = 1; k <= max_arity; ++k) {
        out.ops.emplace_back();
        for (int r = 1; r <= k; ++r) {
            GradedMap op = graded_zero(out.space, 1, k, k - 2);
            if (k == 2)
                op.map = (r == 1) ? c.prec : c.succ;
            out.ops[k - 1].push_back(op);
        }
    }
    return out;
}

/* Two-element dg-coalgebra with a genuinely graded differential:
** basis b in degree 0 and a in degree 1, Δ_1(a) = b, Δ_2(b) = b⊗b,
** Δ_2(a) = a⊗b. Exercises the Koszul signs nontrivially. */
inline AInfCoalgebra dg_fixture(int max_arity) {
    GradedSpace space{{{0, 1}, {1, 1}}};
    AInfCoalgebra out{space, max_arity, {}};
    for (int k = 1; k <= max_arity; ++k)
        out.ops.push_back(graded_zero(space, 1, k, k - 2));
    out.ops[0].map.mat.add_at(0, 1, Rational(1)); // Δ_1(a) = b
    if (max_arity >= 2) {
        out.ops[1].map.mat.add_at(0, 0, Rational(1)); // Δ_2(b) = b⊗b
        out.ops[1].map.mat.add_at(2, 1, Rational(1)); // Δ_2(a) = a⊗b
    }
    return out;
}

/* Divided-power block in degree 0 with its 1/k operator, plus a spectator
** line in degree 1 scaled by 2; the cooperation lives on the block only. */
inline std::pair<AInfCoalgebra, RBOInf> graded_rbo_fixture(int d, int max_arity) {
    GradedSpace space{{{0, d}, {1, 1}}};
    int dim = d + 1;
    AInfCoalgebra c{space, max_arity, {}};
    for (int k = 1; k <= max_arity; ++k)
        c.ops.push_back(graded_zero(space, 1, k, k - 2));
    if (max_arity >= 2)
        for (int n = 0; n < d; ++n)
            for (int i = 0; i <= n; ++i)
                c.ops[1].map.mat.add_at(i * dim + (n - i), n, Rational(1));
    RBOInf r{graded_zero(space, 1, 1, 0)};
    for (int k = 1; k < d; ++k)
        r.R.map.mat.add_at(k - 1, k, Rational(1, k));
    r.R.map.mat.add_at(d, d, Rational(2));
    return {c, r};
}

inline RBOInf divided_power_rbo_inf(const AInfCoalgebra& c, int d) {
    RBOInf r{graded_zero(c.space, 1, 1, 0)};
    for (int k = 1; k < d; ++k)
        r.R.map.mat.add_at(k - 1, k, Rational(1, k));
    return r;
}

/* ---- random cochains and operad elements ------------------------------- */

inline CoHochCochain random_cohoch_cochain(Rng& rng, const AssocBicomodule& m, int degree) {
    return {degree, random_linear_map(rng, static_cast<int>(ipow(m.base.dim, degree)), m.dim_m)};
}

inline DendCochain random_dend_cochain(Rng& rng, const DendBicomodule& m, int degree) {
    DendCochain s{degree, {}};
    for (int k = 0; k < degree; ++k)
        s.comps.push_back(
            random_linear_map(rng, static_cast<int>(ipow(m.base.dim, degree)), m.dim_m));
    return s;
}

inline CoEndElem random_coend_elem(Rng& rng, int dim, int arity) {
    return {dim, arity, random_linear_map(rng, static_cast<int>(ipow(dim, arity)), dim)};
}

inline LabeledElem random_labeled_coelem(Rng& rng, int dim, int arity) {
    LabeledElem e{dim, arity, {}};
    for (int k = 0; k < arity; ++k)
        e.comps.push_back(random_linear_map(rng, static_cast<int>(ipow(dim, arity)), dim));
    return e;
}

inline LabeledElem random_labeled_algelem(Rng& rng, int dim, int arity) {
    LabeledElem e{dim, arity, {}};
    for (int k = 0; k < arity; ++k)
        e.comps.push_back(random_linear_map(rng, dim, static_cast<int>(ipow(dim, arity))));
    return e;
}

} // namespace dencoh
