// Batch front end: load JSON structure files, run the exact checks, compute
// cohomology dimension tables, emit machine-readable reports on stdout.
// Exit codes: 0 all checks pass, 1 identity violation, 2 malformed input.

#include <CLI11.hpp>

#include <dencoh/diass.hpp>
#include <dencoh/generators.hpp>
#include <dencoh/json_io.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace dencoh;

namespace {

constexpr const char* kTruncated = "not checked (truncation)";

struct Options {
    std::uint64_t seed = 12345;
    int max_degree = 3;
    int max_arity = 3;
    int trunc = 4;
    std::string module_file;
    std::string out_file;
    bool compare_hochschild = false;
    bool compare_cohomology = false;
};

int emit(const json& report, int code) {
    std::cout << report.dump(2) << "\n";
    return code;
}

/* FNV-1a over the raw input bytes; reports carry it so identical runs are
** checkable against identical inputs. */
std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json digests(const std::vector<std::string>& paths) {
    json out = json::array();
    for (const auto& p : paths)
        out.push_back({{"file", p}, {"fnv1a", file_digest(p)}});
    return out;
}

json check_entry(const std::string& name, bool ok) {
    return {{"name", name}, {"ok", ok}};
}

/* Structure checks by kind; fills `checks` and the list of violated names. */
void run_structure_checks(const json& input, json& checks, std::vector<std::string>& violated) {
    auto push = [&](const std::string& name, bool ok) {
        checks.push_back(check_entry(name, ok));
        if (!ok)
            violated.push_back(name);
    };
    std::string kind = kind_of(input);
    if (kind == "coalgebra") {
        push("coassoc", check_coassociative(coalgebra_from_json(input)));
    } else if (kind == "bicomodule") {
        AssocCoalgebra base = coalgebra_from_json(detail::field(input, "base"));
        push("coassoc", check_coassociative(base));
        auto bad = bicomodule_violation_list(bicomodule_from_json(input, base));
        for (int i = 1; i <= 3; ++i)
            push("b" + std::to_string(i),
                 std::find(bad.begin(), bad.end(), i) == bad.end());
    } else if (kind == "dendriform_coalgebra") {
        auto bad = dend_violation_list(dend_coalgebra_from_json(input));
        for (int i = 1; i <= 3; ++i)
            push("c" + std::to_string(i),
                 std::find(bad.begin(), bad.end(), i) == bad.end());
    } else if (kind == "dendriform_bicomodule") {
        DendBicomodule m = dend_bicomodule_from_json(input);
        auto base_bad = dend_violation_list(m.base);
        for (int i = 1; i <= 3; ++i)
            push("c" + std::to_string(i),
                 std::find(base_bad.begin(), base_bad.end(), i) == base_bad.end());
        auto bad = dend_bicomodule_violation_list(m);
        for (int i = 1; i <= 9; ++i)
            push("r" + std::to_string(i),
                 std::find(bad.begin(), bad.end(), i) == bad.end());
    } else if (kind == "dendriform_algebra") {
        auto bad = dendalg_violation_list(dend_algebra_from_json(input));
        for (int i = 1; i <= 3; ++i)
            push("a" + std::to_string(i),
                 std::find(bad.begin(), bad.end(), i) == bad.end());
    } else if (kind == "rbo") {
        RelRBO r = rbo_from_json(input);
        push("coassoc", check_coassociative(r.mod.base));
        auto bad = bicomodule_violation_list(r.mod);
        for (int i = 1; i <= 3; ++i)
            push("b" + std::to_string(i),
                 std::find(bad.begin(), bad.end(), i) == bad.end());
        push("rbo", check_rbo(r));
    } else if (kind == "deformation") {
        TruncDeformation d = deformation_from_json(input);
        auto base_bad = dend_violation_list(d.base);
        for (int i = 1; i <= 3; ++i)
            push("c" + std::to_string(i),
                 std::find(base_bad.begin(), base_bad.end(), i) == base_bad.end());
        if (base_bad.empty()) {
            auto v = check_deformation_violation(d);
            push(v ? "order " + std::to_string(v->order) : "deformation equations", !v);
        }
    } else if (kind == "formal_iso") {
        formal_iso_from_json(input, detail::int_field(input, "dim"));
        push("formal_iso", true);
    } else if (kind == "graded_space") {
        graded_space_from_json(input);
        push("graded_space", true);
    } else if (kind == "graded_map") {
        GradedSpace s = graded_space_from_json(detail::field(input, "space"));
        graded_map_from_json(input, s);
        push("graded_map", true);
    } else if (kind == "ainf_coalgebra") {
        AInfCoalgebra c = ainf_from_json(input);
        HomotopyReport rep = check_ainf(c, c.max_arity);
        for (const auto& line : rep.lines)
            push("arity " + std::to_string(line.n), line.status != CheckStatus::failed);
    } else if (kind == "dendinf_coalgebra") {
        DendInfCoalgebra c = dendinf_from_json(input);
        HomotopyReport rep = check_dendinf(c, c.max_arity);
        for (const auto& line : rep.lines)
            push("arity " + std::to_string(line.n) + " label " + std::to_string(line.label),
                 line.status != CheckStatus::failed);
    } else {
        throw InputError("unknown kind: " + kind);
    }
}

int cmd_check(const std::string& file) {
    json input = load_json_file(file);
    json report = {{"command", "check"},
                   {"file", file},
                   {"kind", kind_of(input)},
                   {"inputs", digests({file})}};
    json checks = json::array();
    std::vector<std::string> violated;
    run_structure_checks(input, checks, violated);
    report["checks"] = checks;
    report["violated"] = violated;
    report["ok"] = violated.empty();
    return emit(report, violated.empty() ? 0 : 1);
}

json table_json(const CohomologyTable& table) {
    json rows = json::array();
    for (const auto& r : table)
        rows.push_back({{"degree", r.degree},
                        {"dim_cochain", r.dim_cochain},
                        {"rank_delta", r.rank_delta},
                        {"dim_kernel", r.dim_kernel},
                        {"dim_h", r.dim_h}});
    return rows;
}

bool rank_nullity_ok(const CohomologyTable& table) {
    for (const auto& r : table)
        if (r.rank_delta + r.dim_kernel != r.dim_cochain)
            return false;
    return true;
}

int cmd_cohomology(const std::string& file, const Options& opt) {
    json input = load_json_file(file);
    std::string kind = kind_of(input);
    json report = {{"command", "cohomology"},
                   {"file", file},
                   {"kind", kind},
                   {"max_degree", opt.max_degree},
                   {"seed", opt.seed},
                   {"inputs", digests(opt.module_file.empty()
                                          ? std::vector<std::string>{file}
                                          : std::vector<std::string>{file, opt.module_file})}};
    if (kind == "dendriform_coalgebra") {
        DendCoalgebra c = dend_coalgebra_from_json(input);
        DendBicomodule m = dend_self_bicomodule(c);
        if (!opt.module_file.empty()) {
            json mj = load_json_file(opt.module_file);
            if (kind_of(mj) != "dendriform_bicomodule")
                throw InputError("--module expects a dendriform_bicomodule file");
            m = dend_bicomodule_from_json(mj);
            bool base_matches =
                m.base.dim == c.dim && m.base.prec == c.prec && m.base.succ == c.succ;
            if (!base_matches || !dend_bicomodule_violation_list(m).empty()) {
                report["error"] = "invalid bicomodule for this structure";
                return emit(report, 1);
            }
        }
        CohomologyTable table = dend_cohomology(m, opt.max_degree);
        report["rows"] = table_json(table);
        report["rank_nullity_ok"] = rank_nullity_ok(table);
        if (opt.compare_hochschild) {
            AssocBicomodule tm = total_bicomodule(m);
            CohomologyTable htable = cohoch_cohomology(tm, opt.max_degree);
            bool chain = true;
            Rng rng(opt.seed);
            for (int n = 1; n <= opt.max_degree && chain; ++n)
                for (int t = 0; t < 5 && chain; ++t) {
                    DendCochain s = random_dend_cochain(rng, m, n);
                    chain = (cohoch_coboundary(tm, s_map(s)).map ==
                             s_map(dend_coboundary(m, s)).map);
                }
            report["compare_hochschild"] = {{"rows", table_json(htable)},
                                            {"s_chain_map_ok", chain}};
            if (!chain)
                return emit(report, 1);
        }
        return emit(report, rank_nullity_ok(table) ? 0 : 1);
    }
    if (kind == "coalgebra") {
        AssocCoalgebra c = coalgebra_from_json(input);
        AssocBicomodule m = self_bicomodule(c);
        if (!opt.module_file.empty()) {
            json mj = load_json_file(opt.module_file);
            if (kind_of(mj) != "bicomodule")
                throw InputError("--module expects a bicomodule file");
            m = bicomodule_from_json(mj, coalgebra_from_json(detail::field(mj, "base")));
            bool base_matches = m.base.dim == c.dim && m.base.delta == c.delta;
            if (!base_matches || !bicomodule_violation_list(m).empty()) {
                report["error"] = "invalid bicomodule for this structure";
                return emit(report, 1);
            }
        }
        CohomologyTable table = cohoch_cohomology(m, opt.max_degree);
        report["rows"] = table_json(table);
        report["rank_nullity_ok"] = rank_nullity_ok(table);
        return emit(report, rank_nullity_ok(table) ? 0 : 1);
    }
    throw InputError("cohomology expects a coalgebra or dendriform_coalgebra file");
}

int cmd_rbo(const std::string& sub, const std::string& file, const Options& opt) {
    json input = load_json_file(file);
    if (kind_of(input) != "rbo")
        throw InputError("rbo commands expect an rbo file");
    RelRBO r = rbo_from_json(input);
    json report = {{"command", "rbo " + sub},
                   {"file", file},
                   {"seed", opt.seed},
                   {"inputs", digests({file})}};

    json checks = json::array();
    std::vector<std::string> violated;
    run_structure_checks(input, checks, violated);
    report["checks"] = checks;
    report["violated"] = violated;
    if (!violated.empty()) {
        report["ok"] = false;
        return emit(report, 1);
    }

    if (sub == "check") {
        report["ok"] = true;
        return emit(report, 0);
    }
    if (sub == "induce") {
        DendCoalgebra ind = induced_dendriform(r);
        json out = to_json(ind);
        report["induced"] = out;
        bool valid = dend_violation_list(ind).empty();
        report["induced_valid"] = valid;
        if (!opt.out_file.empty())
            save_json_file(opt.out_file, out);
        report["ok"] = valid;
        return emit(report, valid ? 0 : 1);
    }
    if (sub == "cohomology") {
        CohomologyTable table = rbo_cohomology(r, opt.max_degree);
        report["rows"] = table_json(table);
        report["rank_nullity_ok"] = rank_nullity_ok(table);
        // Θ comparison verdicts on seeded random cochains
        Rng rng(opt.seed);
        bool brkt_pre = true, chain = true;
        DendBicomodule self = dend_self_bicomodule(induced_dendriform(r));
        for (int n = 1; n <= 2; ++n)
            for (int t = 0; t < 4; ++t) {
                RBOCochain p = random_rbo_cochain(rng, r.mod, 1);
                RBOCochain q = random_rbo_cochain(rng, r.mod, n);
                LabeledElem lhs =
                    cochain_to_elem(r.mod.dim_m, theta(r.mod, derived_bracket(r.mod, p, q)));
                LabeledElem rhs =
                    bracket<LabeledCoEndOps>(cochain_to_elem(r.mod.dim_m, theta(r.mod, p)),
                                             cochain_to_elem(r.mod.dim_m, theta(r.mod, q)));
                brkt_pre = brkt_pre && (lhs == rhs);
                RBOCochain f = random_rbo_cochain(rng, r.mod, n);
                DendCochain cl = dend_coboundary(self, theta(r.mod, f));
                DendCochain cr = theta(r.mod, d_T(r, f)).scaled(Rational(parity_sign(n)));
                for (int k = 0; k <= n + 1; ++k)
                    chain = chain && (cl.comps[k] == cr.comps[k]);
            }
        report["theta"] = {{"bracket_compat_ok", brkt_pre},
                           {"chain_map_ok", chain},
                           {"chain_map_sign", "(-1)^n"}};
        bool ok = rank_nullity_ok(table) && brkt_pre && chain;
        report["ok"] = ok;
        return emit(report, ok ? 0 : 1);
    }
    throw InputError("unknown rbo subcommand: " + sub);
}

int cmd_deform(const std::string& sub, const std::vector<std::string>& files,
               const Options& opt) {
    json input = load_json_file(files.at(0));
    if (kind_of(input) != "deformation")
        throw InputError("deform commands expect a deformation file");
    TruncDeformation d = deformation_from_json(input);
    json report = {{"command", "deform " + sub},
                   {"file", files.at(0)},
                   {"seed", opt.seed},
                   {"inputs", digests(files)}};

    auto base_bad = dend_violation_list(d.base);
    if (!base_bad.empty()) {
        report["violated"] = "c" + std::to_string(base_bad.front());
        report["ok"] = false;
        return emit(report, 1);
    }
    auto violation = check_deformation_violation(d);

    if (sub == "check") {
        if (violation) {
            report["violated"] = "order " + std::to_string(violation->order);
            report["violated_label"] = violation->label;
            report["ok"] = false;
            return emit(report, 1);
        }
        report["ok"] = true;
        return emit(report, 0);
    }
    if (violation) {
        report["violated"] = "order " + std::to_string(violation->order);
        report["ok"] = false;
        return emit(report, 1);
    }
    DendBicomodule self = dend_self_bicomodule(d.base);
    if (sub == "infinitesimal") {
        DendCochain inf = infinitesimal(d);
        report["infinitesimal"] = {{"prec", coaction_to_json(inf.comps[0], d.base.dim)},
                                   {"succ", coaction_to_json(inf.comps[1], d.base.dim)}};
        bool cocycle = dend_coboundary(self, inf).is_zero();
        report["cocycle_ok"] = cocycle;
        if (files.size() > 1) {
            json ij = load_json_file(files[1]);
            if (kind_of(ij) != "formal_iso")
                throw InputError("second file must be a formal_iso");
            FormalIso phi = formal_iso_from_json(ij, d.base.dim);
            if (phi.order < 1)
                throw InputError("formal_iso needs order >= 1");
            DendCochain want = dend_coboundary(self, DendCochain{1, {phi.terms[0]}});
            report["iso_coboundary_residual_zero"] = (inf - want).is_zero();
        }
        report["ok"] = cocycle;
        return emit(report, cocycle ? 0 : 1);
    }
    if (sub == "obstruct") {
        DendCochain ob = obstruction(d);
        json comps = json::array();
        for (const auto& c : ob.comps)
            comps.push_back(coaction_to_json(c, d.base.dim));
        report["obstruction"] = comps;
        report["obstruction_zero"] = ob.is_zero();
        bool cocycle = dend_coboundary(self, ob).is_zero();
        report["cocycle_ok"] = cocycle;
        report["ok"] = cocycle;
        return emit(report, cocycle ? 0 : 1);
    }
    if (sub == "extend") {
        auto ext = extend(d);
        report["extends"] = ext.has_value();
        if (ext) {
            json out = to_json(*ext);
            report["deformation"] = out;
            report["extended_valid"] = check_deformation(*ext);
            if (!opt.out_file.empty())
                save_json_file(opt.out_file, out);
        } else {
            report["note"] = "obstruction class is nonzero in H^3";
        }
        report["ok"] = true;
        return emit(report, 0);
    }
    throw InputError("unknown deform subcommand: " + sub);
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed:
            return "passed";
        case CheckStatus::failed:
            return "failed";
        default:
            return kTruncated;
    }
}

int cmd_homotopy(const std::string& sub, const std::vector<std::string>& files,
                 const Options& opt) {
    json report = {{"command", "homotopy " + sub},
                   {"file", files.at(0)},
                   {"seed", opt.seed},
                   {"inputs", digests(files)}};
    json input = load_json_file(files.at(0));
    if (sub == "check-ainf") {
        AInfCoalgebra c = ainf_from_json(input);
        HomotopyReport rep = check_ainf(c, opt.max_arity);
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"n", l.n}, {"status", status_str(l.status)}});
        report["lines"] = lines;
        report["ok"] = rep.ok();
        return emit(report, rep.ok() ? 0 : 1);
    }
    if (sub == "check-dendinf") {
        DendInfCoalgebra c = dendinf_from_json(input);
        HomotopyReport rep = check_dendinf(c, opt.max_arity);
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"n", l.n}, {"label", l.label}, {"status", status_str(l.status)}});
        report["lines"] = lines;
        report["ok"] = rep.ok();
        return emit(report, rep.ok() ? 0 : 1);
    }
    if (sub == "split") {
        DendInfCoalgebra c = dendinf_from_json(input);
        if (c.desuspended)
            throw InputError("split expects the unshifted form");
        HomotopyReport rep = check_dendinf(c, opt.max_arity);
        if (!rep.ok()) {
            report["ok"] = false;
            report["error"] = "structure fails its defining identities";
            return emit(report, 1);
        }
        AInfCoalgebra a = split(c, 0);
        json out = to_json(a);
        report["split"] = out;
        HomotopyReport check = check_ainf(a, opt.max_arity);
        report["split_valid"] = check.ok();
        if (!opt.out_file.empty())
            save_json_file(opt.out_file, out);
        report["ok"] = check.ok();
        return emit(report, check.ok() ? 0 : 1);
    }
    if (sub == "induce") {
        if (files.size() < 2)
            throw InputError("homotopy induce needs an ainf file and an operator file");
        AInfCoalgebra c = ainf_from_json(input);
        json oj = load_json_file(files[1]);
        if (kind_of(oj) != "graded_map")
            throw InputError("operator file must be a graded_map");
        if (oj.contains("space") &&
            graded_space_from_json(oj["space"]).support != c.space.support)
            throw InputError("operator and structure live on different graded spaces");
        RBOInf r = rbo_inf_from_json(oj, c.space);
        HomotopyReport ainf_rep = check_ainf(c, opt.max_arity);
        HomotopyReport rbo_rep = check_rbo_inf(c, r);
        report["ainf_ok"] = ainf_rep.ok();
        report["operator_ok"] = rbo_rep.ok();
        if (!ainf_rep.ok() || !rbo_rep.ok()) {
            report["ok"] = false;
            return emit(report, 1);
        }
        DendInfCoalgebra ind = induce_dendinf(c, r, 0);
        json out = to_json(ind);
        report["induced"] = out;
        bool valid = check_dendinf(ind, opt.max_arity).ok();
        report["induced_valid"] = valid;
        if (!opt.out_file.empty())
            save_json_file(opt.out_file, out);
        report["ok"] = valid;
        return emit(report, valid ? 0 : 1);
    }
    if (sub == "diass") {
        DendInfCoalgebra c = dendinf_from_json(input);
        if (!c.desuspended)
            c = shift_to_dendinf1(c);
        DiassReport rep = check_d_squared(c, opt.trunc, opt.max_arity);
        json lines = json::array();
        bool truncated_required = false;
        for (const auto& l : rep.lines) {
            lines.push_back({{"n", l.n},
                             {"theta", l.theta},
                             {"dd", status_str(l.dd_status)},
                             {"matches_identity", l.matches_identity}});
            truncated_required = truncated_required || l.dd_status == CheckStatus::truncated;
        }
        report["lines"] = lines;
        report["overflow"] = rep.overflow;
        report["dd_zero"] = rep.dd_zero();
        report["lemma_ok"] = rep.lemma_ok();
        if (truncated_required)
            report["note"] = "identities beyond the truncation bound were not checked";
        bool ok = rep.dd_zero() && rep.lemma_ok() && !truncated_required;
        report["ok"] = ok;
        return emit(report, ok ? 0 : 1);
    }
    throw InputError("unknown homotopy subcommand: " + sub);
}

int cmd_dual(const std::string& file, const Options& opt) {
    json input = load_json_file(file);
    if (kind_of(input) != "dendriform_algebra")
        throw InputError("dual expects a dendriform_algebra file");
    DendAlgebra a = dend_algebra_from_json(input);
    json report = {{"command", "dual"},
                   {"file", file},
                   {"seed", opt.seed},
                   {"inputs", digests({file})}};
    auto bad = dendalg_violation_list(a);
    if (!bad.empty()) {
        report["violated"] = "a" + std::to_string(bad.front());
        report["ok"] = false;
        return emit(report, 1);
    }
    DendCoalgebra dual = dualize(a);
    json out = to_json(dual);
    report["dual"] = out;
    bool valid = dend_violation_list(dual).empty();
    report["dual_valid"] = valid;
    if (!opt.out_file.empty())
        save_json_file(opt.out_file, out);
    if (opt.compare_cohomology) {
        auto alg_dims = alg_cohomology_dims(a, opt.max_degree);
        auto co_dims = dend_cohomology_dims(dend_self_bicomodule(dual), opt.max_degree);
        report["algebra_dims"] = alg_dims;
        report["coalgebra_dims"] = co_dims;
        report["dims_equal"] = (alg_dims == co_dims);
        bool ok = valid && alg_dims == co_dims;
        report["ok"] = ok;
        return emit(report, ok ? 0 : 1);
    }
    report["ok"] = valid;
    return emit(report, valid ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for dendriform coalgebras: structure checks, cohomology, "
                 "Rota-Baxter operators, deformations, homotopy structures"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized property checks");

    std::string file, sub;
    std::vector<std::string> files;

    auto* check = app.add_subcommand("check", "run the structure's defining identity checks");
    check->add_option("file", file)->required();

    auto* coh = app.add_subcommand("cohomology", "cochain, rank and cohomology dimensions");
    coh->add_option("file", file)->required();
    coh->add_option("--max-degree", opt.max_degree);
    coh->add_option("--module", opt.module_file, "bicomodule coefficients (default: self)");
    coh->add_flag("--compare-hochschild", opt.compare_hochschild);

    auto* rbo = app.add_subcommand("rbo", "Rota-Baxter operator commands");
    rbo->add_option("sub", sub)->required()->check(
        CLI::IsMember({"check", "induce", "cohomology"}));
    rbo->add_option("file", file)->required();
    rbo->add_option("--max-degree", opt.max_degree);
    rbo->add_option("--out", opt.out_file);

    auto* def = app.add_subcommand("deform", "formal deformation commands");
    def->add_option("sub", sub)->required()->check(
        CLI::IsMember({"check", "infinitesimal", "obstruct", "extend"}));
    def->add_option("files", files)->required()->expected(1, 2);
    def->add_option("--out", opt.out_file);

    auto* hom = app.add_subcommand("homotopy", "graded homotopy-structure commands");
    hom->add_option("sub", sub)->required()->check(
        CLI::IsMember({"check-ainf", "check-dendinf", "split", "induce", "diass"}));
    hom->add_option("files", files)->required()->expected(1, 2);
    hom->add_option("--max-arity", opt.max_arity);
    hom->add_option("--trunc", opt.trunc);
    hom->add_option("--out", opt.out_file);

    auto* dual = app.add_subcommand("dual", "dualize a dendriform algebra");
    dual->add_option("file", file)->required();
    dual->add_option("--max-degree", opt.max_degree);
    dual->add_flag("--compare-cohomology", opt.compare_cohomology);
    dual->add_option("--out", opt.out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.max_degree < 1)
            throw InputError("--max-degree must be at least 1");
        if (opt.max_arity < 1)
            throw InputError("--max-arity must be at least 1");
        if (opt.trunc < 1)
            throw InputError("--trunc must be at least 1");
        if (check->parsed())
            return cmd_check(file);
        if (coh->parsed())
            return cmd_cohomology(file, opt);
        if (rbo->parsed())
            return cmd_rbo(sub, file, opt);
        if (def->parsed())
            return cmd_deform(sub, files, opt);
        if (hom->parsed())
            return cmd_homotopy(sub, files, opt);
        if (dual->parsed())
            return cmd_dual(file, opt);
    } catch (const InputError& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return 2;
}
