// Command-line front end: exact cohomology and module-structure checks for
// the semidirect-product superalgebras, with machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supalg/barcomplex.hpp"
#include "supalg/extring.hpp"
#include "supalg/invariants.hpp"
#include "supalg/report.hpp"
#include "supalg/sympow.hpp"

using namespace supalg;

namespace {

const char* kToolVersion = "supercoho 1.0";

struct CommonOpts {
    std::string field_spec = "3";
    int r = 0, s = 0;
    std::string mu_list;
    std::string format = "json";
    std::string out_path;
    std::string cache_dir;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_rs = true) {
    cmd->add_option("--field", o.field_spec, "coefficient field, \"p\" or \"p^m\"");
    if (with_rs) {
        cmd->add_option("--r", o.r, "height of the truncated polynomial part");
        cmd->add_option("--s", o.s, "number of cyclic factors");
        cmd->add_option("--mu", o.mu_list, "comma-separated action parameters, one per cyclic factor");
    }
    cmd->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--cache-dir", o.cache_dir, "resolution cache directory (default: $SUPALG_CACHE_DIR)");
    cmd->add_flag("--timings", o.timings, "include wall-clock timings (breaks byte-determinism)");
}

std::vector<std::uint8_t> parse_mus(const GaloisField& F, const std::string& list, int s) {
    std::vector<std::uint8_t> mus;
    std::string cur;
    for (char c : list + ",") {
        if (c == ',') {
            if (!cur.empty()) mus.push_back(F.parse_element(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    if (static_cast<int>(mus.size()) != s)
        throw InvalidInput("expected " + std::to_string(s) + " mu parameters, got " + std::to_string(mus.size()));
    if (s > 0 && !fp_linear_independent(F, mus))
        throw NotFaithful("mu parameters are linearly dependent over F_p");
    return mus;
}

std::string cache_dir_of(const CommonOpts& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    const char* env = std::getenv("SUPALG_CACHE_DIR");
    return env ? env : "";
}

Json mu_json(const GaloisField& F, const std::vector<std::uint8_t>& mus) {
    Json arr = Json::array();
    for (auto m : mus) arr.push_back(F.coeffs(m));
    return arr;
}

void emit(const Json& report, const CommonOpts& o) {
    std::string text = render_report(report, o.format);
    if (o.out_path.empty())
        std::cout << text;
    else {
        std::ofstream f(o.out_path);
        f << text;
    }
}

Json matrix_json(const GaloisField& F, const Matrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(F.coeffs(M.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json relations_json(const std::vector<RelationVerdict>& rels) {
    Json arr = Json::array();
    for (auto& r : rels) {
        Json e;
        e["name"] = r.name;
        e["holds"] = r.holds;
        if (!r.holds) e["witness"] = r.witness;
        arr.push_back(e);
    }
    return arr;
}

int run_cohomology(const CommonOpts& o, int maxdeg_opt) {
    auto F = GaloisField::parse(o.field_spec);
    auto mus = parse_mus(*F, o.mu_list, o.s);
    if (o.r + o.s < 1) throw InvalidInput("need r + s >= 1");
    int p = F->p();
    long N = p - 1;
    for (int k = 0; k < o.r + o.s - 1; ++k) N *= p;
    int maxdeg = maxdeg_opt > 0 ? maxdeg_opt : std::max<long>({N + 2, p + 1, 8});
    if (maxdeg < std::max<long>(N + 2, p + 1))
        throw InvalidInput("maxdeg must be at least " + std::to_string(std::max<long>(N + 2, p + 1)));

    auto t0 = std::chrono::steady_clock::now();
    auto alg = PresentedSuperalgebra::make_semidirect(F, o.r, o.s, mus);
    ExtContext ctx(alg, maxdeg, cache_dir_of(o));

    Json rep;
    rep["command"] = "cohomology";
    rep["version"] = kToolVersion;
    rep["config"] = {{"field", F->spec()}, {"modulus", F->modulus_string()}, {"r", o.r}, {"s", o.s},
                     {"mu", mu_json(*F, mus)},  {"maxdeg", maxdeg}};
    rep["algebra"] = alg->descriptor();
    Json dims = Json::array();
    Json poincare = Json::array();
    for (int n = 0; n <= maxdeg; ++n) {
        auto d = ctx.dims(n);
        dims.push_back({{"n", n}, {"even", d.first}, {"odd", d.second}});
        poincare.push_back(d.first + d.second);
    }
    rep["dims"] = dims;
    rep["poincare"] = poincare;

    bool pass = true;
    if (o.r + o.s == 1) {
        auto pres = verify_rank_one_ring(ctx, maxdeg);
        rep["presentation"] = {{"dims_match", pres.dims_match},
                               {"parity_split_match", pres.parity_split_match},
                               {"kappa_found", pres.kappa_found}};
        rep["generators"] = {{"zeta", pres.zeta_class}, {"x", pres.x_class},
                             {"kappa", pres.kappa},     {"lambda", pres.lambda_classes}};
        rep["relations"] = relations_json(pres.relations);
        auto dual = verify_duality_quotient(ctx, pres);
        rep["duality"] = {{"quotient_dims", dual.quotient_dims},
                          {"top_is_zeta_power", dual.top_is_zeta_power},
                          {"pairing_perfect", dual.pairing_perfect},
                          {"lambda_pairing_nonzero", dual.lambda_pairing_nonzero}};
        pass = pres.ok() && dual.ok();
    } else {
        auto mt = verify_zeta_annihilation(ctx);
        rep["zeta_power"] = mt.N;
        rep["relations"] = relations_json(mt.relations);
        rep["kernel_dim"] = mt.kernel_dim;
        pass = mt.ok();
    }
    rep["verdict"] = pass ? "pass" : "fail";
    if (o.timings)
        rep["timings"] = {{"total_seconds",
                           std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(rep, o);
    return pass ? 0 : 1;
}

int run_sympowers(const CommonOpts& o, int max_n) {
    auto F = GaloisField::parse(o.field_spec);
    auto mus = parse_mus(*F, o.mu_list, o.s);
    if (o.r + o.s < 1) throw InvalidInput("need r + s >= 1");
    int p = F->p();
    long shift = 1;
    for (int k = 0; k < o.r + o.s; ++k) shift *= p;
    if (max_n <= 0) max_n = static_cast<int>(2 * shift);
    auto kH = PresentedSuperalgebra::make_kH(F, o.r, o.s, true);

    bool pass = true;
    Json table = Json::array();
    for (int n = 0; n <= max_n; ++n) {
        SymPower S = sym_power(kH, n, mus);
        bool proj = S.module.is_projective_over_local();
        bool proj_want = (n % shift) == shift - 1;
        bool uniserial = S.module.is_uniserial();
        Json row;
        row["n"] = n;
        row["dim"] = S.module.dim();
        row["projective"] = proj;
        row["projective_predicted"] = proj_want;
        row["uniserial"] = uniserial;
        if (n >= shift) {
            bool per = false;
            try {
                auto cert = periodicity_decomposition(kH, n, mus);
                per = cert.direct_sum_ok && cert.free_part_projective;
                row["certificate"] = {{"shift", cert.shift},
                                      {"dims", {cert.emb_free.cols(), cert.emb_tail.cols()}},
                                      {"free_embedding", matrix_json(*F, cert.emb_free)},
                                      {"tail_embedding", matrix_json(*F, cert.emb_tail)}};
            } catch (const DecompositionFailed&) {
                per = false;
            }
            row["periodicity"] = per;
            pass = pass && per;
        }
        if (1 <= n && n <= p - 1) pass = pass && uniserial;
        pass = pass && (proj == proj_want);
        table.push_back(row);
    }
    Json steinberg = Json::array();
    for (int i = 1; i <= o.r + o.s; ++i) {
        bool okI = steinberg_check(kH, i, mus);
        steinberg.push_back({{"i", i}, {"holds", okI}});
        pass = pass && okI;
    }

    Json rep;
    rep["command"] = "sympowers";
    rep["version"] = kToolVersion;
    rep["config"] = {{"field", F->spec()}, {"modulus", F->modulus_string()}, {"r", o.r}, {"s", o.s},
                     {"mu", mu_json(*F, mus)},  {"max_n", max_n}};
    rep["algebra"] = kH->descriptor();
    rep["table"] = table;
    rep["steinberg"] = steinberg;
    rep["verdict"] = pass ? "pass" : "fail";
    emit(rep, o);
    return pass ? 0 : 1;
}

int run_invariants(const CommonOpts& o, int maxdeg) {
    auto F = GaloisField::parse(o.field_spec);
    auto mus = parse_mus(*F, o.mu_list, o.s);
    if (o.r + o.s < 1) throw InvalidInput("need r + s >= 1");
    long shift = 1;
    for (int k = 0; k < o.r + o.s; ++k) shift *= F->p();
    if (maxdeg <= 0) maxdeg = static_cast<int>(2 * shift);
    auto kH = PresentedSuperalgebra::make_kH(F, o.r, o.s, false);

    Json table = Json::array();
    bool pass = true;
    for (int n = 0; n <= maxdeg; ++n) {
        auto repn = invariant_basis(kH, n, mus);
        Json basis = Json::array();
        for (auto& b : repn.basis) basis.push_back(b);
        table.push_back({{"degree", n},
                         {"dim", repn.dim},
                         {"predicted", repn.predicted_dim},
                         {"basis", basis}});
        pass = pass && repn.dim == repn.predicted_dim;
    }
    bool gens_ok = verify_invariant_generators(kH, maxdeg, mus);
    pass = pass && gens_ok;

    Json rep;
    rep["command"] = "invariants";
    rep["version"] = kToolVersion;
    rep["config"] = {{"field", F->spec()}, {"modulus", F->modulus_string()}, {"r", o.r}, {"s", o.s},
                     {"mu", mu_json(*F, mus)},  {"maxdeg", maxdeg}};
    rep["algebra"] = kH->descriptor();
    rep["table"] = table;
    rep["generators_span"] = gens_ok;
    rep["verdict"] = pass ? "pass" : "fail";
    emit(rep, o);
    return pass ? 0 : 1;
}

int run_rankvariety(const CommonOpts& o, int i, const std::string& sample_spec) {
    auto F = GaloisField::parse(o.field_spec);
    auto mus = parse_mus(*F, o.mu_list, o.s);
    auto sample = sample_spec.empty() ? F : GaloisField::parse(sample_spec);
    std::vector<std::uint8_t> mus_in_sample;
    if (sample->same(*F))
        mus_in_sample = mus;
    else {
        if (sample->p() != F->p()) throw InvalidInput("sample field has different characteristic");
        for (auto m : mus) {
            auto c = F->coeffs(m);
            for (size_t k = 1; k < c.size(); ++k)
                if (c[k]) throw InvalidInput("mu parameters must lie in the prime field to change sample field");
            mus_in_sample.push_back(sample->from_int(c.empty() ? 0 : c[0]));
        }
    }
    auto scan = rank_variety_scan(sample, F->p(), o.r, o.s, mus_in_sample, i);

    Json rep;
    rep["command"] = "rankvariety";
    rep["version"] = kToolVersion;
    rep["config"] = {{"field", F->spec()},   {"modulus", F->modulus_string()},
                     {"r", o.r},             {"s", o.s},
                     {"mu", mu_json(*F, mus)}, {"i", i},
                     {"sample_field", sample->spec()}};
    Json table = Json::array();
    Matrix R = rank_variety_matrix(sample, o.r, o.s, mus_in_sample);
    auto predicted_free = [&](const ShiftedPoint& pt) {
        for (int l = 0; l < i; ++l) {
            std::uint8_t acc = 0;
            for (int jj = 0; jj < o.r + o.s; ++jj)
                acc = sample->add(acc, sample->mul(R.at(l, jj), pt.coords[jj]));
            if (acc) return true;  // off the predicted locus
        }
        return false;
    };
    auto point_json = [&](const ShiftedPoint& pt, bool free) {
        Json coords = Json::array();
        for (auto c : pt.coords) coords.push_back(sample->to_string(c));
        return Json{{"point", coords}, {"free", free}, {"predicted_free", predicted_free(pt)}};
    };
    for (auto& pt : scan.nonfree_points) table.push_back(point_json(pt, false));
    for (auto& pt : scan.free_points) table.push_back(point_json(pt, true));
    rep["table"] = table;
    rep["nonfree_count"] = scan.nonfree_points.size();
    rep["predicted_rank"] = scan.predicted_rank;
    rep["codimension_ok"] = scan.predicted_rank == i;
    rep["matches_predicted"] = scan.matches_predicted;
    bool pass = scan.matches_predicted && scan.predicted_rank == i;
    rep["verdict"] = pass ? "pass" : "fail";
    emit(rep, o);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology checks for semidirect-product superalgebras"};
    app.require_subcommand(1);

    CommonOpts oc, os, oi, orv;
    int maxdeg_c = 0, max_n = 0, maxdeg_i = 0, rv_i = 1;
    std::string sample_spec;

    auto* c = app.add_subcommand("cohomology", "Ext ring dims, presentation and vanishing relations");
    add_common(c, oc);
    c->add_option("--maxdeg", maxdeg_c, "cohomological degree cap");

    auto* sp = app.add_subcommand("sympowers", "periodicity, projectivity, uniseriality, Steinberg factorization");
    add_common(sp, os);
    sp->add_option("--max-n", max_n, "largest symmetric power degree");

    auto* iv = app.add_subcommand("invariants", "invariant dimensions and generator check, degree by degree");
    add_common(iv, oi);
    iv->add_option("--maxdeg", maxdeg_i, "largest polynomial degree");

    auto* rv = app.add_subcommand("rankvariety", "exhaustive free / non-free point scan");
    add_common(rv, orv);
    rv->add_option("--i", rv_i, "which symmetric power, S^{p^i - 1}");
    rv->add_option("--sample-field", sample_spec, "field whose rational points are scanned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c->parsed()) return run_cohomology(oc, maxdeg_c);
        if (sp->parsed()) return run_sympowers(os, max_n);
        if (iv->parsed()) return run_invariants(oi, maxdeg_i);
        if (rv->parsed()) return run_rankvariety(orv, rv_i, sample_spec);
    } catch (const InvalidInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NotFaithful& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
