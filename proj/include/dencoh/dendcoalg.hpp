#pragma once

#include <stdexcept>
#include <vector>

#include "coalg.hpp"
#include "labels.hpp"
#include "linalg.hpp"
#include "operad.hpp"

namespace dencoh {

/* Dendriform coalgebra: two coproducts Δ_≺, Δ_≻ : C → C⊗C subject to the
** three splitting identities (c1)–(c3); their sum is then coassociative. */
struct DendCoalgebra {
    int dim = 0;
    LinearMap prec; // Δ_≺, d² × d
    LinearMap succ; // Δ_≻, d² × d

    bool shape_ok() const {
        return prec.cod_dim() == dim * dim && prec.dom_dim() == dim &&
               succ.cod_dim() == dim * dim && succ.dom_dim() == dim;
    }
};

/* 0 when (c1)–(c3) hold, else the index of the first violated identity. */
inline int check_dend_violation(const DendCoalgebra& c) {
    if (!c.shape_ok())
        throw std::invalid_argument("dendriform coalgebra shape mismatch");
    int d = c.dim;
    LinearMap sum = c.prec + c.succ;
    // (c1) (Δ_≺⊗id)∘Δ_≺ = (id⊗(Δ_≺+Δ_≻))∘Δ_≺
    if (!(compose(pad(c.prec, 0, 1, d), c.prec) - compose(pad(sum, 1, 0, d), c.prec)).is_zero())
        return 1;
    // (c2) (Δ_≻⊗id)∘Δ_≺ = (id⊗Δ_≺)∘Δ_≻
    if (!(compose(pad(c.succ, 0, 1, d), c.prec) - compose(pad(c.prec, 1, 0, d), c.succ)).is_zero())
        return 2;
    // (c3) ((Δ_≺+Δ_≻)⊗id)∘Δ_≻ = (id⊗Δ_≻)∘Δ_≻
    if (!(compose(pad(sum, 0, 1, d), c.succ) - compose(pad(c.succ, 1, 0, d), c.succ)).is_zero())
        return 3;
    return 0;
}

inline bool check_dendriform(const DendCoalgebra& c) { return check_dend_violation(c) == 0; }

/* All violated identity indices, for reporting. */
inline std::vector<int> dend_violation_list(const DendCoalgebra& c) {
    if (!c.shape_ok())
        throw std::invalid_argument("dendriform coalgebra shape mismatch");
    int d = c.dim;
    LinearMap sum = c.prec + c.succ;
    std::vector<int> out;
    if (!(compose(pad(c.prec, 0, 1, d), c.prec) - compose(pad(sum, 1, 0, d), c.prec)).is_zero())
        out.push_back(1);
    if (!(compose(pad(c.succ, 0, 1, d), c.prec) - compose(pad(c.prec, 1, 0, d), c.succ)).is_zero())
        out.push_back(2);
    if (!(compose(pad(sum, 0, 1, d), c.succ) - compose(pad(c.succ, 1, 0, d), c.succ)).is_zero())
        out.push_back(3);
    return out;
}

inline AssocCoalgebra total(const DendCoalgebra& c) { return {c.dim, c.prec + c.succ}; }

/* The arity-2 element of the labeled operad with Δ([1]) = Δ_≺, Δ([2]) = Δ_≻;
** it is a multiplication precisely when (c1)–(c3) hold. */
inline LabeledElem dend_multiplication(const DendCoalgebra& c) {
    return {c.dim, 2, {c.prec, c.succ}};
}

/* Dendriform bicomodule: four coactions subject to (r1)–(r9). */
struct DendBicomodule {
    DendCoalgebra base;
    int dim_m = 0;
    LinearMap l_prec, l_succ; // M → C⊗M, d·m × m
    LinearMap r_prec, r_succ; // M → M⊗C, m·d × m

    bool shape_ok() const {
        auto l_ok = [&](const LinearMap& f) {
            return f.cod_dim() == base.dim * dim_m && f.dom_dim() == dim_m;
        };
        auto r_ok = [&](const LinearMap& f) {
            return f.cod_dim() == dim_m * base.dim && f.dom_dim() == dim_m;
        };
        return base.shape_ok() && l_ok(l_prec) && l_ok(l_succ) && r_ok(r_prec) && r_ok(r_succ);
    }
};

inline DendBicomodule dend_self_bicomodule(const DendCoalgebra& c) {
    return {c, c.dim, c.prec, c.succ, c.prec, c.succ};
}

/* All violated identity indices among (r1)–(r9). */
inline std::vector<int> dend_bicomodule_violation_list(const DendBicomodule& m) {
    if (!m.shape_ok())
        throw std::invalid_argument("dendriform bicomodule shape mismatch");
    int d = m.base.dim;
    LinearMap id_d = LinearMap::identity(d);
    LinearMap id_m = LinearMap::identity(m.dim_m);
    const LinearMap& cp = m.base.prec;
    const LinearMap& cs = m.base.succ;
    LinearMap csum = cp + cs;
    LinearMap lsum = m.l_prec + m.l_succ;
    LinearMap rsum = m.r_prec + m.r_succ;

    std::vector<std::pair<LinearMap, LinearMap>> sides = {
        {compose(tensor(cp, id_m), m.l_prec), compose(tensor(id_d, lsum), m.l_prec)},
        {compose(tensor(cs, id_m), m.l_prec), compose(tensor(id_d, m.l_prec), m.l_succ)},
        {compose(tensor(csum, id_m), m.l_succ), compose(tensor(id_d, m.l_succ), m.l_succ)},
        {compose(tensor(m.l_prec, id_d), m.r_prec), compose(tensor(id_d, rsum), m.l_prec)},
        {compose(tensor(m.l_succ, id_d), m.r_prec), compose(tensor(id_d, m.r_prec), m.l_succ)},
        {compose(tensor(lsum, id_d), m.r_succ), compose(tensor(id_d, m.r_succ), m.l_succ)},
        {compose(tensor(m.r_prec, id_d), m.r_prec), compose(tensor(id_m, csum), m.r_prec)},
        {compose(tensor(m.r_succ, id_d), m.r_prec), compose(tensor(id_m, cp), m.r_succ)},
        {compose(tensor(rsum, id_d), m.r_succ), compose(tensor(id_m, cs), m.r_succ)},
    };
    std::vector<int> out;
    for (size_t i = 0; i < sides.size(); ++i)
        if (!(sides[i].first - sides[i].second).is_zero())
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

/* 0 when (r1)–(r9) hold, else the index of the first violated identity. */
inline int check_dend_bicomodule_violation(const DendBicomodule& m) {
    auto list = dend_bicomodule_violation_list(m);
    return list.empty() ? 0 : list.front();
}

inline bool check_dend_bicomodule(const DendBicomodule& m) {
    return check_dend_bicomodule_violation(m) == 0;
}

/* M is also a bicomodule over the total associative coalgebra. */
inline AssocBicomodule total_bicomodule(const DendBicomodule& m) {
    return {total(m.base), m.dim_m, m.l_prec + m.l_succ, m.r_prec + m.r_succ};
}

/* Degree-n cochain with coefficients in a bicomodule M: one map M → C^{⊗n}
** per label in C_n; evaluation at a label sum is the linear extension. */
struct DendCochain {
    int degree = 1;
    std::vector<LinearMap> comps; // size degree, each d^n × m

    bool shape_ok(const DendBicomodule& m) const {
        if (degree < 1 || static_cast<int>(comps.size()) != degree)
            return false;
        for (const auto& c : comps)
            if (c.cod_dim() != ipow(m.base.dim, degree) || c.dom_dim() != m.dim_m)
                return false;
        return true;
    }

    LinearMap eval(const LabelSum& s) const {
        LinearMap acc = LinearMap::zero(comps[0].cod_dim(), comps[0].dom_dim());
        for (const auto& [label, coeff] : s.terms()) {
            if (label < 1 || label > degree)
                throw std::out_of_range("cochain label out of range");
            acc = acc + comps[label - 1].scaled(coeff);
        }
        return acc;
    }

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero())
                return false;
        return true;
    }

    DendCochain operator+(const DendCochain& o) const {
        DendCochain out{degree, {}};
        for (int k = 0; k < degree; ++k)
            out.comps.push_back(comps[k] + o.comps[k]);
        return out;
    }
    DendCochain operator-(const DendCochain& o) const {
        DendCochain out{degree, {}};
        for (int k = 0; k < degree; ++k)
            out.comps.push_back(comps[k] - o.comps[k]);
        return out;
    }
    DendCochain scaled(const Rational& s) const {
        DendCochain out{degree, {}};
        for (const auto& c : comps)
            out.comps.push_back(c.scaled(s));
        return out;
    }
};

inline DendCochain zero_dend_cochain(const DendBicomodule& m, int degree) {
    DendCochain out{degree, {}};
    out.comps.assign(degree,
                     LinearMap::zero(static_cast<int>(ipow(m.base.dim, degree)), m.dim_m));
    return out;
}

/* The degree-1 cochain sending [1] to the identity (self coefficients). */
inline DendCochain identity_cochain(int dim) {
    return {1, {LinearMap::identity(dim)}};
}

/* (Δ_≺, Δ_≻) as a degree-2 cochain with self coefficients. */
inline DendCochain multiplication_cochain(const DendCoalgebra& c) {
    return {2, {c.prec, c.succ}};
}

/* The dendriform coboundary. For σ of degree n and [r] ∈ C_{n+1}:
**
**   (δσ)([r]) = (id ⊗ σ(inner labels)) ∘ Δ^l(outer label)      (pattern (2; 1, n))
**             + Σ_{i=1}^n (−1)^i (id^{⊗(i−1)} ⊗ Δ(inner) ⊗ id^{⊗(n−i)}) ∘ σ(outer)
**                                                              (pattern (n; 1,…,2@i,…,1))
**             + (−1)^{n+1} (σ(inner labels) ⊗ id) ∘ Δ^r(outer) (pattern (2; n, 1))
**
** with the label-1 coaction ≺ and label-2 coaction ≻ throughout. */
inline DendCochain dend_coboundary(const DendBicomodule& m, const DendCochain& s) {
    if (s.degree < 1)
        throw std::invalid_argument("coboundary needs degree >= 1");
    if (!s.shape_ok(m))
        throw std::invalid_argument("cochain shape mismatch");
    int d = m.base.dim;
    int n = s.degree;
    LinearMap id_d = LinearMap::identity(d);
    LabeledElem mult = dend_multiplication(m.base);
    DendCochain out{n + 1, {}};
    for (int r = 1; r <= n + 1; ++r) {
        const LinearMap& coact_l = outer_label(2, n, 2, r) == 1 ? m.l_prec : m.l_succ;
        LinearMap term = compose(tensor(id_d, s.eval(inner_label_sum(2, n, 2, r))), coact_l);
        for (int i = 1; i <= n; ++i) {
            LinearMap delta_i = mult.eval(inner_label_sum(n, 2, i, r));
            const LinearMap& sigma_i = s.comps[outer_label(n, 2, i, r) - 1];
            term = term +
                   compose(pad(delta_i, i - 1, n - i, d), sigma_i).scaled(Rational(parity_sign(i)));
        }
        const LinearMap& coact_r = outer_label(2, n, 1, r) == 1 ? m.r_prec : m.r_succ;
        term = term + compose(tensor(s.eval(inner_label_sum(2, n, 1, r)), id_d), coact_r)
                          .scaled(Rational(parity_sign(n + 1)));
        out.comps.push_back(term);
    }
    return out;
}

/* Coordinates: components in label order, each flattened row-major;
** index = (label−1)·d^n·m + row·m + col. */
inline std::vector<Rational> dend_coords(const DendBicomodule& m, const DendCochain& s) {
    long long block = ipow(m.base.dim, s.degree) * m.dim_m;
    std::vector<Rational> v(static_cast<size_t>(s.degree) * block);
    for (int k = 0; k < s.degree; ++k)
        for (int r = 0; r < s.comps[k].cod_dim(); ++r)
            for (const auto& [c, val] : s.comps[k].mat.row(r))
                v[static_cast<size_t>(k) * block + static_cast<size_t>(r) * m.dim_m + c] = val;
    return v;
}

inline SparseMatrix dend_coboundary_matrix(const DendBicomodule& m, int degree) {
    int d = m.base.dim, mdim = m.dim_m;
    long long cod = ipow(d, degree);
    long long block = cod * mdim;
    long long rows_dim = (degree + 1) * ipow(d, degree + 1) * mdim;
    SparseMatrix out(static_cast<int>(rows_dim), static_cast<int>(degree * block));
    long long out_block = ipow(d, degree + 1) * mdim;
    for (int k = 0; k < degree; ++k)
        for (int r = 0; r < static_cast<int>(cod); ++r)
            for (int c = 0; c < mdim; ++c) {
                DendCochain basis = zero_dend_cochain(m, degree);
                basis.comps[k].mat.add_at(r, c, Rational(1));
                DendCochain image = dend_coboundary(m, basis);
                long long col = k * block + static_cast<long long>(r) * mdim + c;
                for (int kk = 0; kk <= degree; ++kk)
                    for (int rr = 0; rr < image.comps[kk].cod_dim(); ++rr)
                        for (const auto& [cc, val] : image.comps[kk].mat.row(rr))
                            out.add_at(static_cast<int>(kk * out_block +
                                                        static_cast<long long>(rr) * mdim + cc),
                                       static_cast<int>(col), val);
            }
    return out;
}

inline CohomologyTable dend_cohomology(const DendBicomodule& m, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be >= 1");
    CohomologyTable table;
    int prev_rank = 0;
    for (int n = 1; n <= max_degree; ++n) {
        SparseMatrix delta = dend_coboundary_matrix(m, n);
        CohomologyRow row;
        row.degree = n;
        row.dim_cochain = delta.cols();
        row.rank_delta = rank(delta);
        row.dim_kernel = row.dim_cochain - row.rank_delta;
        row.dim_h = row.dim_kernel - prev_rank;
        prev_rank = row.rank_delta;
        table.push_back(row);
    }
    return table;
}

inline std::vector<long long> dend_cohomology_dims(const DendBicomodule& m, int max_degree) {
    std::vector<long long> dims;
    for (const auto& row : dend_cohomology(m, max_degree))
        dims.push_back(row.dim_h);
    return dims;
}

/* Semidirect product on C ⊕ M: the C block keeps its coproducts, an M basis
** vector splits into its left coaction (landing in C⊗M) plus its right
** coaction (landing in M⊗C). Basis order is C first, then M. */
inline DendCoalgebra semidirect(const DendCoalgebra& c, const DendBicomodule& m) {
    if (check_dend_bicomodule_violation(m) != 0)
        throw std::invalid_argument("semidirect: invalid bicomodule");
    int d = c.dim, mm = m.dim_m, a = d + mm;
    auto build = [&](const LinearMap& cpart, const LinearMap& lpart, const LinearMap& rpart) {
        LinearMap out(a * a, a);
        for (int row = 0; row < cpart.cod_dim(); ++row)
            for (const auto& [col, v] : cpart.mat.row(row)) {
                int x = row / d, y = row % d;
                out.mat.add_at(x * a + y, col, v);
            }
        for (int row = 0; row < lpart.cod_dim(); ++row)
            for (const auto& [col, v] : lpart.mat.row(row)) {
                int x = row / mm, y = row % mm; // C ⊗ M
                out.mat.add_at(x * a + (d + y), d + col, v);
            }
        for (int row = 0; row < rpart.cod_dim(); ++row)
            for (const auto& [col, v] : rpart.mat.row(row)) {
                int x = row / d, y = row % d; // M ⊗ C
                out.mat.add_at((d + x) * a + y, d + col, v);
            }
        return out;
    };
    return {a, build(c.prec, m.l_prec, m.r_prec), build(c.succ, m.l_succ, m.r_succ)};
}

/* S(σ) = σ([1]) + … + σ([n]) : the comparison cochain over the total
** associative structure. */
inline CoHochCochain s_map(const DendCochain& s) {
    LinearMap acc = s.comps[0];
    for (int k = 1; k < s.degree; ++k)
        acc = acc + s.comps[k];
    return {s.degree, acc};
}

/* Self-coefficient cochains are labeled operad elements and vice versa. */
inline LabeledElem cochain_to_elem(int dim, const DendCochain& s) {
    return {dim, s.degree, s.comps};
}

inline DendCochain elem_to_cochain(const LabeledElem& e) {
    return {e.arity, e.comps};
}

} // namespace dencoh
