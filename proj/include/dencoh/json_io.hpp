#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalg.hpp"
#include "deform.hpp"
#include "dendalg.hpp"
#include "dendcoalg.hpp"
#include "homotopy.hpp"
#include "rota.hpp"

namespace dencoh {

using json = nlohmann::json;

/* Anything wrong with the input files themselves (as opposed to violated
** structure identities) is an InputError; the CLI maps it to exit code 2. */
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/* Coefficients are strings "p/q" (or "p") or plain integers; floats are
** rejected — the toolkit is exact. */
inline Rational coeff_from_json(const json& v) {
    try {
        if (v.is_string())
            return Rational::parse(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("coefficient must be an integer or a \"p/q\" string: " + v.dump());
}

inline json coeff_to_json(const Rational& r) { return r.str(); }

namespace detail {

inline const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

inline int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer())
        throw InputError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

inline void check_index(long long v, long long bound, const char* what) {
    if (v < 0 || v >= bound)
        throw InputError(std::string(what) + " index out of range: " + std::to_string(v));
}

/* Entry lists of the shape [i1, i2, …, ik, coeff]. */
inline std::vector<std::pair<std::vector<long long>, Rational>> tuples_from_json(const json& arr,
                                                                                 size_t indices) {
    if (!arr.is_array())
        throw InputError("expected an array of entries");
    std::vector<std::pair<std::vector<long long>, Rational>> out;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != indices + 1)
            throw InputError("entry must be [indices..., coeff]: " + e.dump());
        std::vector<long long> idx;
        for (size_t k = 0; k < indices; ++k) {
            if (!e[k].is_number_integer())
                throw InputError("index must be an integer: " + e.dump());
            idx.push_back(e[k].get<long long>());
        }
        out.push_back({idx, coeff_from_json(e[indices])});
    }
    return out;
}

} // namespace detail

/* --- coproduct-style maps: entries [from, to1, to2, q], X → Y⊗Z ----------- */

inline LinearMap coaction_from_json(const json& arr, int dom, int rows1, int rows2,
                                    const char* what) {
    LinearMap f(rows1 * rows2, dom);
    for (const auto& [idx, c] : detail::tuples_from_json(arr, 3)) {
        detail::check_index(idx[0], dom, what);
        detail::check_index(idx[1], rows1, what);
        detail::check_index(idx[2], rows2, what);
        f.mat.add_at(static_cast<int>(idx[1] * rows2 + idx[2]), static_cast<int>(idx[0]), c);
    }
    return f;
}

inline json coaction_to_json(const LinearMap& f, int rows2) {
    json out = json::array();
    // canonical order: (from, to1, to2)
    std::vector<std::tuple<long long, long long, long long, Rational>> entries;
    for (int row = 0; row < f.cod_dim(); ++row)
        for (const auto& [col, v] : f.mat.row(row))
            entries.push_back({col, row / rows2, row % rows2, v});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    for (const auto& [from, to1, to2, v] : entries)
        out.push_back({from, to1, to2, coeff_to_json(v)});
    return out;
}

/* --- product-style maps: entries [a, b, to, q], A⊗A → A ------------------- */

inline LinearMap product_from_json(const json& arr, int d, const char* what) {
    LinearMap f(d, d * d);
    for (const auto& [idx, c] : detail::tuples_from_json(arr, 3)) {
        detail::check_index(idx[0], d, what);
        detail::check_index(idx[1], d, what);
        detail::check_index(idx[2], d, what);
        f.mat.add_at(static_cast<int>(idx[2]), static_cast<int>(idx[0] * d + idx[1]), c);
    }
    return f;
}

inline json product_to_json(const LinearMap& f, int d) {
    std::vector<std::tuple<long long, long long, long long, Rational>> entries;
    for (int row = 0; row < f.cod_dim(); ++row)
        for (const auto& [col, v] : f.mat.row(row))
            entries.push_back({col / d, col % d, row, v});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    json out = json::array();
    for (const auto& [a, b, to, v] : entries)
        out.push_back({a, b, to, coeff_to_json(v)});
    return out;
}

/* --- plain matrices: entries [row, col, q] -------------------------------- */

inline LinearMap matrix_from_json(const json& arr, int cod, int dom, const char* what) {
    LinearMap f(cod, dom);
    for (const auto& [idx, c] : detail::tuples_from_json(arr, 2)) {
        detail::check_index(idx[0], cod, what);
        detail::check_index(idx[1], dom, what);
        f.mat.add_at(static_cast<int>(idx[0]), static_cast<int>(idx[1]), c);
    }
    return f;
}

inline json matrix_to_json(const LinearMap& f) {
    json out = json::array();
    for (int row = 0; row < f.cod_dim(); ++row)
        for (const auto& [col, v] : f.mat.row(row))
            out.push_back({row, col, coeff_to_json(v)});
    return out;
}

/* --- structures ------------------------------------------------------------ */

inline AssocCoalgebra coalgebra_from_json(const json& j) {
    int d = detail::int_field(j, "dim");
    if (d < 1)
        throw InputError("dim must be positive");
    return {d, coaction_from_json(detail::field(j, "delta"), d, d, d, "delta")};
}

inline json to_json(const AssocCoalgebra& c) {
    return {{"kind", "coalgebra"}, {"dim", c.dim}, {"delta", coaction_to_json(c.delta, c.dim)}};
}

inline AssocBicomodule bicomodule_from_json(const json& j, const AssocCoalgebra& base) {
    int m = detail::int_field(j, "dim_m");
    if (m < 0)
        throw InputError("dim_m must be nonnegative");
    int d = base.dim;
    return {base, m,
            coaction_from_json(detail::field(j, "delta_l"), m, d, m, "delta_l"),
            coaction_from_json(detail::field(j, "delta_r"), m, m, d, "delta_r")};
}

inline json to_json(const AssocBicomodule& b) {
    return {{"kind", "bicomodule"},
            {"base", to_json(b.base)},
            {"dim_m", b.dim_m},
            {"delta_l", coaction_to_json(b.delta_l, b.dim_m)},
            {"delta_r", coaction_to_json(b.delta_r, b.base.dim)}};
}

inline DendCoalgebra dend_coalgebra_from_json(const json& j) {
    int d = detail::int_field(j, "dim");
    if (d < 1)
        throw InputError("dim must be positive");
    return {d, coaction_from_json(detail::field(j, "prec"), d, d, d, "prec"),
            coaction_from_json(detail::field(j, "succ"), d, d, d, "succ")};
}

inline json to_json(const DendCoalgebra& c) {
    return {{"kind", "dendriform_coalgebra"},
            {"dim", c.dim},
            {"prec", coaction_to_json(c.prec, c.dim)},
            {"succ", coaction_to_json(c.succ, c.dim)}};
}

inline DendBicomodule dend_bicomodule_from_json(const json& j) {
    DendCoalgebra base = dend_coalgebra_from_json(detail::field(j, "base"));
    int m = detail::int_field(j, "dim_m");
    if (m < 0)
        throw InputError("dim_m must be nonnegative");
    int d = base.dim;
    return {base,
            m,
            coaction_from_json(detail::field(j, "l_prec"), m, d, m, "l_prec"),
            coaction_from_json(detail::field(j, "l_succ"), m, d, m, "l_succ"),
            coaction_from_json(detail::field(j, "r_prec"), m, m, d, "r_prec"),
            coaction_from_json(detail::field(j, "r_succ"), m, m, d, "r_succ")};
}

inline json to_json(const DendBicomodule& b) {
    json base = to_json(b.base);
    base.erase("kind");
    return {{"kind", "dendriform_bicomodule"},
            {"base", base},
            {"dim_m", b.dim_m},
            {"l_prec", coaction_to_json(b.l_prec, b.dim_m)},
            {"l_succ", coaction_to_json(b.l_succ, b.dim_m)},
            {"r_prec", coaction_to_json(b.r_prec, b.base.dim)},
            {"r_succ", coaction_to_json(b.r_succ, b.base.dim)}};
}

inline DendAlgebra dend_algebra_from_json(const json& j) {
    int d = detail::int_field(j, "dim");
    if (d < 1)
        throw InputError("dim must be positive");
    return {d, product_from_json(detail::field(j, "prec"), d, "prec"),
            product_from_json(detail::field(j, "succ"), d, "succ")};
}

inline json to_json(const DendAlgebra& a) {
    return {{"kind", "dendriform_algebra"},
            {"dim", a.dim},
            {"prec", product_to_json(a.prec, a.dim)},
            {"succ", product_to_json(a.succ, a.dim)}};
}

inline RelRBO rbo_from_json(const json& j) {
    AssocCoalgebra base = coalgebra_from_json(detail::field(j, "coalgebra"));
    const json& bic = detail::field(j, "bicomodule");
    AssocBicomodule mod =
        (bic.is_string() && bic.get<std::string>() == "self")
            ? self_bicomodule(base)
            : bicomodule_from_json(bic, base);
    // T entries are [from, to, q] with from a C index and to an M index
    LinearMap t(mod.dim_m, base.dim);
    for (const auto& [idx, c] : detail::tuples_from_json(detail::field(j, "T"), 2)) {
        detail::check_index(idx[0], base.dim, "T");
        detail::check_index(idx[1], mod.dim_m, "T");
        t.mat.add_at(static_cast<int>(idx[1]), static_cast<int>(idx[0]), c);
    }
    return {mod, t};
}

inline json to_json(const RelRBO& r, bool self) {
    json t = json::array();
    std::vector<std::tuple<long long, long long, Rational>> entries;
    for (int row = 0; row < r.T.cod_dim(); ++row)
        for (const auto& [col, v] : r.T.mat.row(row))
            entries.push_back({col, row, v});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [from, to, v] : entries)
        t.push_back({from, to, coeff_to_json(v)});
    json out = {{"kind", "rbo"}, {"coalgebra", to_json(r.mod.base)}, {"T", t}};
    if (self) {
        out["bicomodule"] = "self";
    } else {
        json b = to_json(r.mod);
        b.erase("kind");
        b.erase("base");
        out["bicomodule"] = b;
    }
    return out;
}

inline TruncDeformation deformation_from_json(const json& j) {
    DendCoalgebra base = dend_coalgebra_from_json(detail::field(j, "base"));
    int order = detail::int_field(j, "order");
    const json& terms = detail::field(j, "terms");
    if (order < 0 || !terms.is_array() || static_cast<int>(terms.size()) != order)
        throw InputError("terms must list exactly `order` entries");
    TruncDeformation d{base, order, {}};
    for (const auto& t : terms) {
        LabeledElem e{base.dim, 2, {}};
        e.comps.push_back(
            coaction_from_json(detail::field(t, "prec"), base.dim, base.dim, base.dim, "prec"));
        e.comps.push_back(
            coaction_from_json(detail::field(t, "succ"), base.dim, base.dim, base.dim, "succ"));
        d.terms.push_back(e);
    }
    return d;
}

inline json to_json(const TruncDeformation& d) {
    json base = to_json(d.base);
    base.erase("kind");
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"prec", coaction_to_json(t.comps[0], d.base.dim)},
                         {"succ", coaction_to_json(t.comps[1], d.base.dim)}});
    return {{"kind", "deformation"}, {"base", base}, {"order", d.order}, {"terms", terms}};
}

inline FormalIso formal_iso_from_json(const json& j, int dim) {
    int order = detail::int_field(j, "order");
    const json& terms = detail::field(j, "terms");
    if (order < 0 || !terms.is_array() || static_cast<int>(terms.size()) != order)
        throw InputError("terms must list exactly `order` entries");
    FormalIso phi{order, {}};
    for (const auto& t : terms)
        phi.terms.push_back(matrix_from_json(t, dim, dim, "iso term"));
    return phi;
}

inline json to_json(const FormalIso& phi) {
    json terms = json::array();
    for (const auto& t : phi.terms)
        terms.push_back(matrix_to_json(t));
    return {{"kind", "formal_iso"}, {"order", phi.order}, {"terms", terms}};
}

/* --- graded structures ------------------------------------------------------ */

inline GradedSpace graded_space_from_json(const json& j) {
    const json& sup = detail::field(j, "support");
    if (!sup.is_array() || sup.empty())
        throw InputError("support must be a nonempty array of [degree, dim]");
    GradedSpace s;
    for (const auto& e : sup) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("support entry must be [degree, dim]");
        s.support.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    if (!s.shape_ok())
        throw InputError("support must be sorted by degree with positive dims");
    return s;
}

inline json to_json(const GradedSpace& s) {
    json sup = json::array();
    for (const auto& [deg, dim] : s.support)
        sup.push_back({deg, dim});
    return {{"kind", "graded_space"}, {"support", sup}};
}

/* Graded maps serialize as {"shift", "src_arity", "dst_arity", "blocks"}
** with blocks = [[source_degree, [[row, col, q], ...]], ...]; row and col are
** global flat indices into the tensor-power bases. */
inline GradedMap graded_map_from_json(const json& j, const GradedSpace& space) {
    GradedMap f;
    f.shift = detail::int_field(j, "shift");
    f.src_arity = detail::int_field(j, "src_arity");
    f.dst_arity = detail::int_field(j, "dst_arity");
    if (f.src_arity < 1 || f.dst_arity < 1)
        throw InputError("arities must be positive");
    int dim = space.total_dim();
    f.map = LinearMap(static_cast<int>(ipow(dim, f.dst_arity)),
                      static_cast<int>(ipow(dim, f.src_arity)));
    const json& blocks = detail::field(j, "blocks");
    if (!blocks.is_array())
        throw InputError("blocks must be an array");
    for (const auto& b : blocks) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer())
            throw InputError("block must be [degree, entries]");
        long long deg = b[0].get<long long>();
        for (const auto& [idx, c] : detail::tuples_from_json(b[1], 2)) {
            detail::check_index(idx[0], f.map.cod_dim(), "graded map row");
            detail::check_index(idx[1], f.map.dom_dim(), "graded map col");
            if (space.tuple_degree(idx[1], f.src_arity) != deg)
                throw InputError("entry listed under the wrong source-degree block");
            f.map.mat.add_at(static_cast<int>(idx[0]), static_cast<int>(idx[1]), c);
        }
    }
    if (!f.shape_ok(space))
        throw InputError("graded map entries violate the declared degree shift");
    return f;
}

inline json graded_map_to_json(const GradedMap& f, const GradedSpace& space) {
    std::map<long long, json> blocks;
    for (int row = 0; row < f.map.cod_dim(); ++row)
        for (const auto& [col, v] : f.map.mat.row(row)) {
            long long deg = space.tuple_degree(col, f.src_arity);
            if (!blocks.count(deg))
                blocks[deg] = json::array();
            blocks[deg].push_back({row, col, coeff_to_json(v)});
        }
    json arr = json::array();
    for (auto& [deg, entries] : blocks) {
        std::sort(entries.begin(), entries.end(), [](const json& a, const json& b) {
            return std::tie(a[1], a[0]) < std::tie(b[1], b[0]);
        });
        arr.push_back({deg, entries});
    }
    return {{"shift", f.shift},
            {"src_arity", f.src_arity},
            {"dst_arity", f.dst_arity},
            {"blocks", arr}};
}

inline AInfCoalgebra ainf_from_json(const json& j) {
    GradedSpace space = graded_space_from_json(detail::field(j, "space"));
    int k_max = detail::int_field(j, "max_arity");
    if (k_max < 1)
        throw InputError("max_arity must be positive");
    AInfCoalgebra c{space, k_max, {}};
    for (int k = 1; k <= k_max; ++k)
        c.ops.push_back(graded_zero(space, 1, k, k - 2));
    for (const auto& op : detail::field(j, "ops")) {
        int k = detail::int_field(op, "arity");
        if (k < 1 || k > k_max)
            throw InputError("op arity out of range");
        c.ops[k - 1] = graded_map_from_json(detail::field(op, "map"), space);
        if (c.ops[k - 1].src_arity != 1 || c.ops[k - 1].dst_arity != k ||
            c.ops[k - 1].shift != k - 2)
            throw InputError("op of arity " + std::to_string(k) + " has wrong shape or shift");
    }
    return c;
}

inline json to_json(const AInfCoalgebra& c) {
    json space = to_json(c.space);
    space.erase("kind");
    json ops = json::array();
    for (int k = 1; k <= c.max_arity; ++k)
        if (!c.ops[k - 1].is_zero())
            ops.push_back({{"arity", k}, {"map", graded_map_to_json(c.ops[k - 1], c.space)}});
    return {{"kind", "ainf_coalgebra"},
            {"space", space},
            {"max_arity", c.max_arity},
            {"ops", ops}};
}

inline DendInfCoalgebra dendinf_from_json(const json& j) {
    GradedSpace space = graded_space_from_json(detail::field(j, "space"));
    int k_max = detail::int_field(j, "max_arity");
    if (k_max < 1)
        throw InputError("max_arity must be positive");
    DendInfCoalgebra c{space, k_max, false, {}};
    if (j.contains("desuspended"))
        c.desuspended = j["desuspended"].get<bool>();
    for (int k = 1; k <= k_max; ++k) {
        c.ops.emplace_back();
        for (int r = 1; r <= k; ++r)
            c.ops[k - 1].push_back(graded_zero(space, 1, k, c.desuspended ? -1 : k - 2));
    }
    for (const auto& op : detail::field(j, "ops")) {
        int k = detail::int_field(op, "arity");
        int r = detail::int_field(op, "label");
        if (k < 1 || k > k_max || r < 1 || r > k)
            throw InputError("op arity or label out of range");
        c.ops[k - 1][r - 1] = graded_map_from_json(detail::field(op, "map"), space);
        if (c.ops[k - 1][r - 1].src_arity != 1 || c.ops[k - 1][r - 1].dst_arity != k ||
            c.ops[k - 1][r - 1].shift != (c.desuspended ? -1 : k - 2))
            throw InputError("op of arity " + std::to_string(k) + " has wrong shape or shift");
    }
    return c;
}

inline json to_json(const DendInfCoalgebra& c) {
    json space = to_json(c.space);
    space.erase("kind");
    json ops = json::array();
    for (int k = 1; k <= c.max_arity; ++k)
        for (int r = 1; r <= k; ++r)
            if (!c.ops[k - 1][r - 1].is_zero())
                ops.push_back({{"arity", k},
                               {"label", r},
                               {"map", graded_map_to_json(c.ops[k - 1][r - 1], c.space)}});
    return {{"kind", "dendinf_coalgebra"},
            {"space", space},
            {"max_arity", c.max_arity},
            {"desuspended", c.desuspended},
            {"ops", ops}};
}

inline RBOInf rbo_inf_from_json(const json& j, const GradedSpace& space) {
    RBOInf r{graded_map_from_json(j, space)};
    if (r.R.src_arity != 1 || r.R.dst_arity != 1 || r.R.shift != 0)
        throw InputError("operator must be an arity-1 map of degree 0");
    return r;
}

/* --- files ------------------------------------------------------------------ */

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw InputError("top-level JSON must be an object: " + path);
    return j;
}

inline std::string kind_of(const json& j) {
    auto it = j.find("kind");
    if (it == j.end() || !it->is_string())
        throw InputError("missing or invalid \"kind\" field");
    return it->get<std::string>();
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace dencoh
