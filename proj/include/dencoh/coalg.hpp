#pragma once

#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "operad.hpp"

namespace dencoh {

/* Associative coalgebra by structure constants: Δ : C → C⊗C with
** (Δ⊗id)∘Δ = (id⊗Δ)∘Δ. No counit — none of the constructions here need one,
** and a counit axiom would exclude the nilpotent test structures. */
struct AssocCoalgebra {
    int dim = 0;
    LinearMap delta; // d² × d

    bool shape_ok() const { return delta.cod_dim() == dim * dim && delta.dom_dim() == dim; }
};

inline bool check_coassociative(const AssocCoalgebra& c) {
    if (!c.shape_ok())
        throw std::invalid_argument("coalgebra shape mismatch");
    int d = c.dim;
    LinearMap lhs = compose(pad(c.delta, 0, 1, d), c.delta);
    LinearMap rhs = compose(pad(c.delta, 1, 0, d), c.delta);
    return (lhs - rhs).is_zero();
}

/* Bicomodule (M, Δ^l, Δ^r) over an associative coalgebra, Δ^l : M → C⊗M and
** Δ^r : M → M⊗C. Flattening puts the left tensor factor most significant, so
** Δ^l is a (d·m × m) matrix and Δ^r an (m·d × m) one. */
struct AssocBicomodule {
    AssocCoalgebra base;
    int dim_m = 0;
    LinearMap delta_l; // d·m × m
    LinearMap delta_r; // m·d × m

    bool shape_ok() const {
        return base.shape_ok() && delta_l.cod_dim() == base.dim * dim_m &&
               delta_l.dom_dim() == dim_m && delta_r.cod_dim() == dim_m * base.dim &&
               delta_r.dom_dim() == dim_m;
    }
};

inline AssocBicomodule self_bicomodule(const AssocCoalgebra& c) {
    return {c, c.dim, c.delta, c.delta};
}

/* Indices of the violated coaction identities (named "b1".."b3" in reports):
** b1: (Δ⊗id)∘Δ^l = (id⊗Δ^l)∘Δ^l
** b2: (Δ^l⊗id)∘Δ^r = (id⊗Δ^r)∘Δ^l
** b3: (Δ^r⊗id)∘Δ^r = (id⊗Δ)∘Δ^r */
inline std::vector<int> bicomodule_violation_list(const AssocBicomodule& m) {
    if (!m.shape_ok())
        throw std::invalid_argument("bicomodule shape mismatch");
    int d = m.base.dim, mm = m.dim_m;
    const LinearMap& dl = m.delta_l;
    const LinearMap& dr = m.delta_r;
    LinearMap id_m = LinearMap::identity(mm);
    LinearMap id_d = LinearMap::identity(d);
    std::vector<int> out;
    if (!(compose(tensor(m.base.delta, id_m), dl) - compose(tensor(id_d, dl), dl)).is_zero())
        out.push_back(1);
    if (!(compose(tensor(dl, id_d), dr) - compose(tensor(id_d, dr), dl)).is_zero())
        out.push_back(2);
    if (!(compose(tensor(dr, id_d), dr) - compose(tensor(id_m, m.base.delta), dr)).is_zero())
        out.push_back(3);
    return out;
}

inline int check_bicomodule_violation(const AssocBicomodule& m) {
    auto list = bicomodule_violation_list(m);
    return list.empty() ? 0 : list.front();
}

inline bool check_bicomodule(const AssocBicomodule& m) { return check_bicomodule_violation(m) == 0; }

/* Degree-n element of Hom(M, C^{⊗n}); the degree-0 group is zero. */
struct CoHochCochain {
    int degree = 1;
    LinearMap map; // d^n × m

    bool shape_ok(const AssocBicomodule& m) const {
        return degree >= 1 && map.cod_dim() == ipow(m.base.dim, degree) &&
               map.dom_dim() == m.dim_m;
    }
};

/* δσ = (id⊗σ)∘Δ^l + Σ_{i=1}^n (−1)^i (id^{⊗(i−1)} ⊗ Δ ⊗ id^{⊗(n−i)})∘σ
**    + (−1)^{n+1} (σ⊗id)∘Δ^r */
inline CoHochCochain cohoch_coboundary(const AssocBicomodule& m, const CoHochCochain& s) {
    if (s.degree < 1)
        throw std::invalid_argument("coboundary needs degree >= 1");
    if (!s.shape_ok(m))
        throw std::invalid_argument("cochain shape mismatch");
    int d = m.base.dim;
    int n = s.degree;
    LinearMap out = compose(tensor(LinearMap::identity(d), s.map), m.delta_l);
    for (int i = 1; i <= n; ++i) {
        LinearMap term = compose(pad(m.base.delta, i - 1, n - i, d), s.map);
        out = out + term.scaled(Rational(parity_sign(i)));
    }
    out = out + compose(tensor(s.map, LinearMap::identity(d)), m.delta_r)
                    .scaled(Rational(parity_sign(n + 1)));
    return {n + 1, out};
}

/* Cochain coordinates: Hom(M, C^{⊗n}) flattened row-major, index = row·m + col. */
inline std::vector<Rational> cohoch_coords(const AssocBicomodule& m, const CoHochCochain& s) {
    int mdim = m.dim_m;
    std::vector<Rational> v(static_cast<size_t>(s.map.cod_dim()) * mdim);
    for (int r = 0; r < s.map.cod_dim(); ++r)
        for (const auto& [c, val] : s.map.mat.row(r))
            v[static_cast<size_t>(r) * mdim + c] = val;
    return v;
}

/* Matrix of δ^n : C^n → C^{n+1} in the coordinates above, built by applying
** the coboundary to each basis cochain. */
inline SparseMatrix cohoch_coboundary_matrix(const AssocBicomodule& m, int degree) {
    int d = m.base.dim, mdim = m.dim_m;
    long long rows_dim = ipow(d, degree + 1) * mdim;
    long long cols_dim = ipow(d, degree) * mdim;
    SparseMatrix out(static_cast<int>(rows_dim), static_cast<int>(cols_dim));
    for (int r = 0; r < static_cast<int>(ipow(d, degree)); ++r)
        for (int c = 0; c < mdim; ++c) {
            CoHochCochain basis{degree, LinearMap(static_cast<int>(ipow(d, degree)), mdim)};
            basis.map.mat.add_at(r, c, Rational(1));
            CoHochCochain image = cohoch_coboundary(m, basis);
            int col = r * mdim + c;
            for (int rr = 0; rr < image.map.cod_dim(); ++rr)
                for (const auto& [cc, val] : image.map.mat.row(rr))
                    out.add_at(rr * mdim + cc, col, val);
        }
    return out;
}

struct CohomologyRow {
    int degree = 0;
    long long dim_cochain = 0;
    int rank_delta = 0;   // rank of δ at this degree
    long long dim_kernel = 0;
    long long dim_h = 0;
};

using CohomologyTable = std::vector<CohomologyRow>;

/* dim H^n = dim ker δ^n − rank δ^{n−1}, with rank δ^0 = 0 since the degree-0
** cochain group is zero. */
inline CohomologyTable cohoch_cohomology(const AssocBicomodule& m, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be >= 1");
    CohomologyTable table;
    int prev_rank = 0;
    for (int n = 1; n <= max_degree; ++n) {
        SparseMatrix delta = cohoch_coboundary_matrix(m, n);
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

inline std::vector<long long> cohoch_cohomology_dims(const AssocBicomodule& m, int max_degree) {
    std::vector<long long> dims;
    for (const auto& row : cohoch_cohomology(m, max_degree))
        dims.push_back(row.dim_h);
    return dims;
}

/* The coendomorphism operad element of a coalgebra's coproduct, and of an
** arbitrary Hom(C, C^{⊗n}); the generic operad machinery acts on these. */
inline CoEndElem coend_elem(int dim, int arity, LinearMap map) {
    return {dim, arity, std::move(map)};
}

inline CoEndElem coend_multiplication(const AssocCoalgebra& c) {
    return {c.dim, 2, c.delta};
}

} // namespace dencoh
