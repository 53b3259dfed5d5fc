#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dencoh {

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

/* Index bookkeeping for the basis of C^{⊗n} when dim C = d. Components are
** 1-based basis indices; the flat index is lexicographic with the leftmost
** tensor factor most significant:
**
**     flat = Σ_{k=1..n} (i_k − 1) · d^{n−k},   flat ∈ [0, d^n).
**
** This one convention is shared by every module; all Kronecker products,
** paddings and coaction embeddings below are consistent with it. */
struct TensorIndex {
    int dim = 1;
    int arity = 0;
    std::vector<int> components; // size arity, entries in 1..dim

    long long flat() const {
        long long f = 0;
        for (int k = 0; k < arity; ++k) {
            if (components[k] < 1 || components[k] > dim)
                throw std::out_of_range("tensor index component out of range");
            f = f * dim + (components[k] - 1);
        }
        return f;
    }

    static TensorIndex from_flat(int dim, int arity, long long flat) {
        TensorIndex t;
        t.dim = dim;
        t.arity = arity;
        t.components.assign(arity, 1);
        for (int k = arity - 1; k >= 0; --k) {
            t.components[k] = static_cast<int>(flat % dim) + 1;
            flat /= dim;
        }
        if (flat != 0)
            throw std::out_of_range("flat index out of range");
        return t;
    }
};

using SparseRow = std::vector<std::pair<int, Rational>>; // sorted by column, nonzero entries

/* Sparse matrix over Q. Rows hold sorted (col, value) pairs; stored values are
** never zero. Shapes with zero rows or columns are legal (they show up as
** Hom(M, C^0) and friends). */
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix shape");
    }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.data_[i].emplace_back(i, Rational(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseRow& row(int r) const { return data_[r]; }

    void add_at(int r, int c, const Rational& v) {
        check_index(r, c);
        if (v.is_zero())
            return;
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second += v;
            if (it->second.is_zero())
                row.erase(it);
        } else {
            row.insert(it, {c, v});
        }
    }

    void set_at(int r, int c, const Rational& v) {
        check_index(r, c);
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            if (v.is_zero())
                row.erase(it);
            else
                it->second = v;
        } else if (!v.is_zero()) {
            row.insert(it, {c, v});
        }
    }

    Rational at(int r, int c) const {
        check_index(r, c);
        const auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c)
            return it->second;
        return Rational();
    }

    bool is_zero() const {
        for (const auto& row : data_)
            if (!row.empty())
                return false;
        return true;
    }

    long long nnz() const {
        long long n = 0;
        for (const auto& row : data_)
            n += static_cast<long long>(row.size());
        return n;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    SparseMatrix operator+(const SparseMatrix& o) const { return combined(o, false); }
    SparseMatrix operator-(const SparseMatrix& o) const { return combined(o, true); }

    SparseMatrix scaled(const Rational& s) const {
        SparseMatrix r(rows_, cols_);
        if (s.is_zero())
            return r;
        for (int i = 0; i < rows_; ++i) {
            r.data_[i].reserve(data_[i].size());
            for (const auto& [c, v] : data_[i])
                r.data_[i].emplace_back(c, v * s);
        }
        return r;
    }

    SparseMatrix operator-() const { return scaled(Rational(-1)); }

    /* this · other, with this as the left factor. */
    SparseMatrix mul(const SparseMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        SparseMatrix r(rows_, o.cols_);
        std::vector<Rational> acc(o.cols_);
        std::vector<char> seen(o.cols_, 0);
        std::vector<int> touched;
        for (int i = 0; i < rows_; ++i) {
            touched.clear();
            for (const auto& [k, a] : data_[i]) {
                for (const auto& [j, b] : o.data_[k]) {
                    if (!seen[j]) {
                        seen[j] = 1;
                        touched.push_back(j);
                    }
                    acc[j] += a * b;
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int j : touched) {
                if (!acc[j].is_zero())
                    r.data_[i].emplace_back(j, acc[j]);
                acc[j] = Rational();
                seen[j] = 0;
            }
        }
        return r;
    }

    /* Kronecker product consistent with TensorIndex flattening: this is the
    ** left (most significant) factor. */
    SparseMatrix kron(const SparseMatrix& o) const {
        SparseMatrix r(rows_ * o.rows_, cols_ * o.cols_);
        for (int ia = 0; ia < rows_; ++ia) {
            for (const auto& [ja, a] : data_[ia]) {
                for (int ib = 0; ib < o.rows_; ++ib) {
                    auto& out = r.data_[ia * o.rows_ + ib];
                    for (const auto& [jb, b] : o.data_[ib])
                        out.emplace_back(ja * o.cols_ + jb, a * b);
                }
            }
        }
        for (auto& row : r.data_)
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        return r;
    }

    SparseMatrix transpose() const {
        SparseMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i])
                r.data_[j].emplace_back(i, v);
        return r;
    }

  private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of bounds");
    }

    SparseMatrix combined(const SparseMatrix& o, bool subtract) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        SparseMatrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            const auto& a = data_[i];
            const auto& b = o.data_[i];
            auto& out = r.data_[i];
            size_t x = 0, y = 0;
            while (x < a.size() || y < b.size()) {
                if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                    out.push_back(a[x++]);
                } else if (x == a.size() || b[y].first < a[x].first) {
                    out.emplace_back(b[y].first, subtract ? -b[y].second : b[y].second);
                    ++y;
                } else {
                    Rational v = subtract ? a[x].second - b[y].second : a[x].second + b[y].second;
                    if (!v.is_zero())
                        out.emplace_back(a[x].first, v);
                    ++x, ++y;
                }
            }
        }
        return r;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseRow> data_;
};

/* Row echelon data from exact Gaussian elimination. `rows` is the reduced
** echelon form (unit pivots, pivot columns cleared above and below); when a
** right-hand side was supplied, `rhs` carries it through the same row
** operations and `consistent` reports solvability. */
struct EchelonForm {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    bool consistent = true;
};

namespace detail {

inline SparseRow axpy(const SparseRow& r, const Rational& coeff, const SparseRow& p) {
    // r + coeff·p, sorted merge
    SparseRow out;
    out.reserve(r.size() + p.size());
    size_t x = 0, y = 0;
    while (x < r.size() || y < p.size()) {
        if (y == p.size() || (x < r.size() && r[x].first < p[y].first)) {
            out.push_back(r[x++]);
        } else if (x == r.size() || p[y].first < r[x].first) {
            out.emplace_back(p[y].first, coeff * p[y].second);
            ++y;
        } else {
            Rational v = r[x].second + coeff * p[y].second;
            if (!v.is_zero())
                out.emplace_back(r[x].first, v);
            ++x, ++y;
        }
    }
    return out;
}

inline EchelonForm echelon_sparse(const SparseMatrix& m, const std::vector<Rational>* b) {
    std::vector<SparseRow> work(m.rows());
    std::vector<Rational> rhs;
    for (int i = 0; i < m.rows(); ++i)
        work[i] = m.row(i);
    if (b)
        rhs = *b;

    EchelonForm ef;
    std::vector<SparseRow> done;
    std::vector<Rational> done_rhs;
    std::vector<size_t> live; // indices into work of rows not yet used as pivots
    for (size_t i = 0; i < work.size(); ++i)
        live.push_back(i);

    for (int c = 0; c < m.cols(); ++c) {
        // candidate pivot: live row leading at column c with fewest nonzeros
        size_t best = live.size();
        for (size_t k = 0; k < live.size(); ++k) {
            const auto& r = work[live[k]];
            if (!r.empty() && r.front().first == c)
                if (best == live.size() || r.size() < work[live[best]].size())
                    best = k;
        }
        if (best == live.size())
            continue;
        size_t pi = live[best];
        live.erase(live.begin() + best);
        // normalize pivot row
        Rational inv = Rational(1) / work[pi].front().second;
        for (auto& [col, v] : work[pi])
            v *= inv;
        if (b)
            rhs[pi] *= inv;
        // clear column c from remaining live rows (their leading col is >= c)
        for (size_t k : live) {
            auto& r = work[k];
            if (!r.empty() && r.front().first == c) {
                Rational coeff = -r.front().second;
                r = axpy(r, coeff, work[pi]);
                if (b)
                    rhs[k] += coeff * rhs[pi];
            }
        }
        // clear column c from earlier pivot rows (full reduction)
        for (size_t q = 0; q < done.size(); ++q) {
            auto& r = done[q];
            auto it = std::lower_bound(r.begin(), r.end(), c,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != r.end() && it->first == c) {
                Rational coeff = -it->second;
                r = axpy(r, coeff, work[pi]);
                if (b)
                    done_rhs[q] += coeff * rhs[pi];
            }
        }
        done.push_back(std::move(work[pi]));
        if (b)
            done_rhs.push_back(rhs[pi]);
        ef.pivot_cols.push_back(c);
    }

    ef.rank = static_cast<int>(ef.pivot_cols.size());
    ef.rows = std::move(done);
    if (b) {
        ef.rhs = std::move(done_rhs);
        for (size_t k : live)
            if (!rhs[k].is_zero() && work[k].empty())
                ef.consistent = false;
    }
    return ef;
}

/* Dense elimination for narrow matrices; same contract as echelon_sparse.
** Cochain blocks below 64 columns eliminate faster this way. */
inline EchelonForm echelon_dense(const SparseMatrix& m, const std::vector<Rational>* b) {
    int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> work(nr, std::vector<Rational>(nc));
    std::vector<Rational> rhs;
    for (int i = 0; i < nr; ++i)
        for (const auto& [j, v] : m.row(i))
            work[i][j] = v;
    if (b)
        rhs = *b;

    EchelonForm ef;
    int pr = 0; // next pivot row slot
    for (int c = 0; c < nc && pr < nr; ++c) {
        int sel = -1;
        for (int i = pr; i < nr; ++i)
            if (!work[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(work[pr], work[sel]);
        if (b)
            std::swap(rhs[pr], rhs[sel]);
        Rational inv = Rational(1) / work[pr][c];
        for (int j = c; j < nc; ++j)
            work[pr][j] *= inv;
        if (b)
            rhs[pr] *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == pr || work[i][c].is_zero())
                continue;
            Rational coeff = -work[i][c];
            for (int j = c; j < nc; ++j)
                work[i][j] += coeff * work[pr][j];
            if (b)
                rhs[i] += coeff * rhs[pr];
        }
        ef.pivot_cols.push_back(c);
        ++pr;
    }

    ef.rank = pr;
    ef.rows.resize(pr);
    for (int i = 0; i < pr; ++i)
        for (int j = 0; j < nc; ++j)
            if (!work[i][j].is_zero())
                ef.rows[i].emplace_back(j, work[i][j]);
    if (b) {
        ef.rhs.assign(rhs.begin(), rhs.begin() + pr);
        for (int i = pr; i < nr; ++i)
            if (!rhs[i].is_zero())
                ef.consistent = false;
    }
    return ef;
}

} // namespace detail

inline EchelonForm echelon(const SparseMatrix& m, const std::vector<Rational>* b = nullptr) {
    if (m.cols() < 64)
        return detail::echelon_dense(m, b);
    return detail::echelon_sparse(m, b);
}

inline int rank(const SparseMatrix& m) { return echelon(m).rank; }

/* Basis of ker M: one vector per free column, the free coordinate set to 1.
** Every returned v satisfies Mv = 0 exactly. */
inline std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    EchelonForm ef = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ef.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (int p = 0; p < ef.rank; ++p) {
            const auto& row = ef.rows[p];
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == f)
                v[ef.pivot_cols[p]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/* One solution of Mx = b (free variables zero), or nullopt. */
inline std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                                  const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    EchelonForm ef = echelon(m, &b);
    if (!ef.consistent)
        return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (int p = 0; p < ef.rank; ++p)
        x[ef.pivot_cols[p]] = ef.rhs[p];
    // reduced form has pivot columns cleared, but pivot rows may still carry
    // free columns; with free variables at zero those terms drop out
    return x;
}

inline std::vector<Rational> matvec(const SparseMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("matvec: vector length mismatch");
    std::vector<Rational> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, a] : m.row(i))
            out[i] += a * v[j];
    return out;
}

/* A linear map C^dom → C^cod stored as its (cod × dom) matrix. All the
** structure maps Δ, Δ^l, Δ^r, σ, T, Φ_i live here. */
struct LinearMap {
    SparseMatrix mat;

    LinearMap() = default;
    explicit LinearMap(SparseMatrix m) : mat(std::move(m)) {}
    LinearMap(int cod, int dom) : mat(cod, dom) {}

    static LinearMap identity(int n) { return LinearMap(SparseMatrix::identity(n)); }
    static LinearMap zero(int cod, int dom) { return LinearMap(SparseMatrix(cod, dom)); }

    int dom_dim() const { return mat.cols(); }
    int cod_dim() const { return mat.rows(); }
    bool is_zero() const { return mat.is_zero(); }
    bool operator==(const LinearMap& o) const { return mat == o.mat; }

    LinearMap operator+(const LinearMap& o) const { return LinearMap(mat + o.mat); }
    LinearMap operator-(const LinearMap& o) const { return LinearMap(mat - o.mat); }
    LinearMap operator-() const { return LinearMap(-mat); }
    LinearMap scaled(const Rational& s) const { return LinearMap(mat.scaled(s)); }
    LinearMap transpose() const { return LinearMap(mat.transpose()); }
};

/* f ∘ g; realizes every "∘" in the structure identities. */
inline LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (g.cod_dim() != f.dom_dim())
        throw std::invalid_argument("compose: inner dimensions disagree");
    return LinearMap(f.mat.mul(g.mat));
}

/* f ⊗ g under the global flattening: (f⊗g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j). */
inline LinearMap tensor(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.mat.kron(g.mat));
}

/* id_{d^left} ⊗ f ⊗ id_{d^right}. */
inline LinearMap pad(const LinearMap& f, int left, int right, int d) {
    SparseMatrix result = f.mat;
    if (right > 0)
        result = result.kron(SparseMatrix::identity(static_cast<int>(ipow(d, right))));
    if (left > 0)
        result = SparseMatrix::identity(static_cast<int>(ipow(d, left))).kron(result);
    return LinearMap(result);
}

} // namespace dencoh
