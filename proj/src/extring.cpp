#include "supalg/extring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "supalg/errors.hpp"
#include "supalg/sympow.hpp"

namespace supalg {

// ------------------------------------------------------------- ExtContext

ExtContext::ExtContext(AlgebraPtr alg, int maxdeg, const std::string& cache_dir)
    : alg_(alg), res_(cached_resolution(alg, maxdeg, cache_dir)) {}

ExtClass ExtContext::dual_class(int n, int j) const {
    ExtClass c = zero_class(n);
    c.f[j] = 1;
    c.par = res_.gen_parity(n)[j];
    return c;
}

ExtClass ExtContext::zeta() const {
    auto [e, o] = dims(1);
    (void)e;
    if (o != 1) throw RelationFailed("H^{1,1} is not one-dimensional for " + alg_->descriptor());
    for (int j = 0; j < b(1); ++j)
        if (res_.gen_parity(1)[j] == 1) return dual_class(1, j);
    throw RelationFailed("no odd degree-one generator");
}

ExtClass ExtContext::add(const ExtClass& a, const ExtClass& b) const {
    assert(a.n == b.n);
    ExtClass c = a;
    axpy(alg_->F(), c.f, 1, b.f);
    if (a.par != b.par) c.par = a.is_zero() ? b.par : a.par;
    return c;
}

ExtClass ExtContext::scale(const ExtClass& a, std::uint8_t c) const {
    ExtClass out = a;
    for (auto& x : out.f) x = alg_->F().mul(x, c);
    return out;
}

bool ExtContext::collinear_nonzero(const ExtClass& a, const ExtClass& b) const {
    if (a.is_zero() || b.is_zero() || a.n != b.n) return false;
    int piv = -1;
    for (size_t k = 0; k < b.f.size(); ++k)
        if (b.f[k]) {
            piv = static_cast<int>(k);
            break;
        }
    if (a.f[piv] == 0) return false;
    std::uint8_t ratio = alg_->F().div(a.f[piv], b.f[piv]);
    for (size_t k = 0; k < b.f.size(); ++k)
        if (a.f[k] != alg_->F().mul(ratio, b.f[k])) return false;
    return true;
}

const std::vector<Vec>& ExtContext::chain_stage(const ExtClass& a, int t) {
    Key key{a.n, a.f};
    auto& stages = chain_memo_[key];
    const int D = alg_->dim();
    if (stages.empty()) {
        // stage 0: F_{a.n} -> F_0 = A, e_j -> f[j] . 1
        std::vector<Vec> s0;
        for (int j = 0; j < b(a.n); ++j) {
            Vec col(static_cast<size_t>(D), 0);
            col[0] = a.f[j];
            s0.push_back(std::move(col));
        }
        stages.push_back(std::move(s0));
    }
    while (static_cast<int>(stages.size()) <= t) {
        int tt = static_cast<int>(stages.size());
        int src_deg = a.n + tt;
        if (src_deg > maxdeg()) throw InvalidInput("chain map exceeds resolution depth");
        std::vector<Vec> st;
        for (int j = 0; j < b(src_deg); ++j) {
            Vec rhs(static_cast<size_t>(b(tt - 1)) * D, 0);
            for (int i = 0; i < b(src_deg - 1); ++i)
                res_.axpy_elem(rhs, res_.diff(src_deg, i, j), stages[tt - 1][i], b(tt - 1));
            st.push_back(res_.solve(tt, rhs));
        }
        stages.push_back(std::move(st));
    }
    return stages[t];
}

Matrix ExtContext::mult_table(const ExtClass& a, int n) {
    const auto& st = chain_stage(a, n);
    const int D = alg_->dim();
    Matrix T(alg_->field(), b(n), b(n + a.n));
    for (int l = 0; l < b(n + a.n); ++l)
        for (int i = 0; i < b(n); ++i) T.at(i, l) = st[l][static_cast<size_t>(i) * D];
    return T;
}

ExtClass ExtContext::cup(const ExtClass& a, const ExtClass& c) {
    const GaloisField& F = alg_->F();
    if (a.n == 0) return scale(c, a.f[0]);
    if (c.n == 0) return scale(a, c.f[0]);
    if (a.n + c.n > maxdeg()) throw InvalidInput("cup product exceeds resolution depth");
    const auto& st = chain_stage(a, c.n);
    const int D = alg_->dim();
    ExtClass out = zero_class(a.n + c.n);
    out.par = (a.par + c.par) % 2;
    for (int l = 0; l < b(a.n + c.n); ++l) {
        std::uint8_t acc = 0;
        for (int i = 0; i < b(c.n); ++i)
            if (c.f[i]) acc = F.add(acc, F.mul(c.f[i], st[l][static_cast<size_t>(i) * D]));
        out.f[l] = acc;
    }
    return out;
}

ExtClass ExtContext::cup_pow(const ExtClass& a, int e) {
    ExtClass r = unit();
    for (int k = 0; k < e; ++k) r = cup(a, r);
    return r;
}

// -------------------------------------------------------------- inflation

Inflation::Inflation(ExtContext& big, ExtContext& quotient, AlgebraMap pi)
    : big_(big), quo_(quotient), pi_(std::move(pi)) {
    pi_.verify();
}

const std::vector<Vec>& Inflation::stage(int t) {
    const int DB = quo_.A().dim();
    if (stages_.empty()) {
        Vec col(static_cast<size_t>(DB), 0);
        col[0] = 1;
        stages_.push_back({col});
    }
    while (static_cast<int>(stages_.size()) <= t) {
        int tt = static_cast<int>(stages_.size());
        if (tt > big_.maxdeg() || tt > quo_.maxdeg()) throw InvalidInput("inflation exceeds resolution depth");
        std::vector<Vec> st;
        for (int j = 0; j < big_.b(tt); ++j) {
            Vec rhs(static_cast<size_t>(quo_.b(tt - 1)) * DB, 0);
            for (int i = 0; i < big_.b(tt - 1); ++i) {
                AlgElem img = pi_.apply(big_.res().diff(tt, i, j));
                quo_.res().axpy_elem(rhs, img, stages_[tt - 1][i], quo_.b(tt - 1));
            }
            st.push_back(quo_.res().solve(tt, rhs));
        }
        stages_.push_back(std::move(st));
    }
    return stages_[t];
}

ExtClass Inflation::apply(const ExtClass& c) {
    const auto& st = stage(c.n);
    const int DB = quo_.A().dim();
    const GaloisField& F = big_.A().F();
    ExtClass out = big_.zero_class(c.n);
    out.par = c.par;
    for (int j = 0; j < big_.b(c.n); ++j) {
        std::uint8_t acc = 0;
        for (int i = 0; i < quo_.b(c.n); ++i)
            if (c.f[i]) acc = F.add(acc, F.mul(c.f[i], st[j][static_cast<size_t>(i) * DB]));
        out.f[j] = acc;
    }
    return out;
}

AlgebraMap projection_to_kH(AlgebraPtr big, AlgebraPtr kH) {
    AlgebraMap pi;
    pi.src = big;
    pi.dst = kH;
    pi.name = "to_kH";
    for (int g = 0; g < big->ngens(); ++g) {
        const std::string& nm = big->gens()[g].name;
        bool found = false;
        for (int h = 0; h < kH->ngens(); ++h)
            if (kH->gens()[h].name == nm) {
                pi.gen_images.push_back(kH->gen_elem(h));
                found = true;
                break;
            }
        if (!found) pi.gen_images.push_back(kH->zero_elem());
    }
    pi.verify();
    return pi;
}

AlgebraMap projection_to_single(AlgebraPtr big, AlgebraPtr single, const std::string& kept) {
    AlgebraMap pi;
    pi.src = big;
    pi.dst = single;
    pi.name = "to_" + kept;
    for (int g = 0; g < big->ngens(); ++g)
        pi.gen_images.push_back(big->gens()[g].name == kept ? single->gen_elem(0) : single->zero_elem());
    pi.verify();
    return pi;
}

// ------------------------------------------------- rank-one presentation

std::vector<std::pair<int, int>> rank_one_presentation_dims(int p, int maxdeg) {
    // monomial basis kappa^a (x+zeta^2)^b q with q among zeta^i (0<=i<=p)
    // and lambda_i (1<=i<=p-1); kappa has bidegree (p,1), the parameter
    // (x+zeta^2) has (2,0)
    std::vector<std::pair<int, int>> dims(maxdeg + 1, {0, 0});
    std::vector<std::pair<int, int>> qlist;  // (degree, parity)
    for (int i = 0; i <= p; ++i) qlist.push_back({i, i % 2});
    for (int i = 1; i <= p - 1; ++i) qlist.push_back({i, (1 + i) % 2});
    for (int a = 0; a * p <= maxdeg; ++a)
        for (int bb = 0; a * p + 2 * bb <= maxdeg; ++bb)
            for (auto [dq, pq] : qlist) {
                int n = a * p + 2 * bb + dq;
                if (n > maxdeg) continue;
                int par = (a + pq) % 2;
                (par ? dims[n].second : dims[n].first) += 1;
            }
    return dims;
}

bool RingPresentationReport::ok() const {
    if (!dims_match || !parity_split_match || !kappa_found) return false;
    for (auto& r : relations)
        if (!r.holds) return false;
    return true;
}

namespace {

std::string vec_string(const GaloisField& F, const Vec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + F.to_string(v[i]);
    return s + "]";
}

}  // namespace

RingPresentationReport verify_rank_one_ring(ExtContext& ctx, int maxdeg) {
    const PresentedSuperalgebra& A = ctx.A();
    const GaloisField& F = A.F();
    int p = F.p();
    if (A.param_r() + A.param_s() != 1) throw InvalidInput("rank-one verification needs r + s = 1");
    if (maxdeg > ctx.maxdeg()) throw InvalidInput("context not deep enough");

    RingPresentationReport rep;
    rep.algebra = A.descriptor();
    rep.p = p;
    rep.maxdeg = maxdeg;

    rep.dims_match = true;
    for (int n = 0; n <= maxdeg; ++n) {
        auto d = ctx.dims(n);
        rep.dims.push_back(d);
        rep.poincare.push_back(d.first + d.second);
        if (d.first + d.second != n + 1) rep.dims_match = false;
    }
    rep.parity_split_match = rep.dims == rank_one_presentation_dims(p, maxdeg);

    auto record = [&](const std::string& name, bool holds, const std::string& wit = "") {
        rep.relations.push_back({name, holds, holds ? "" : wit});
    };

    ExtClass zeta = ctx.zeta();
    rep.zeta_class = zeta.f;

    // lambda_1 and x are inflated from the one-generator quotient
    const std::string gen_name = A.gens()[2].name;
    auto single = PresentedSuperalgebra::make_truncated_single(A.field(), gen_name);
    ExtContext ctx_single(single, std::max(2, maxdeg));
    Inflation infl(ctx, ctx_single, projection_to_single(ctx.algebra(), single, gen_name));
    ExtClass lambda1 = infl.apply(ctx_single.dual_class(1, 0));
    ExtClass x = infl.apply(ctx_single.dual_class(2, 0));
    rep.x_class = x.f;
    record("x_nonzero", !x.is_zero());
    record("lambda1_nonzero", !lambda1.is_zero());
    // inflated degree-one classes vanish on the odd generator dual to u
    {
        bool support_ok = true;
        for (int j = 0; j < ctx.b(1); ++j)
            if (ctx.res().gen_parity(1)[j] == 1 && lambda1.f[j]) support_ok = false;
        record("inflation_lands_even_in_degree_one", support_ok);
    }

    std::vector<ExtClass> lambda(p, ctx.zero_class(0));  // index 1..p-1
    lambda[1] = lambda1;

    // products of already-named generators, used to find each next lambda
    auto decomposable_span = [&](int deg, int par, int upto_lambda) {
        EchelonBasis span(A.field(), ctx.b(deg));
        // zeta^a x^b lambda_j^e with a + 2b + e*j = deg
        for (int e = 0; e <= 1; ++e)
            for (int j = (e ? 1 : 0); j <= (e ? upto_lambda : 0); ++j)
                for (int bb = 0; 2 * bb + (e ? j : 0) <= deg; ++bb) {
                    int a = deg - 2 * bb - (e ? j : 0);
                    if (a < 0) continue;
                    int mpar = (a + (e ? (1 + j) % 2 : 0)) % 2;
                    if (mpar != par) continue;
                    ExtClass prod = ctx.cup_pow(zeta, a);
                    prod = ctx.cup(ctx.cup_pow(x, bb), prod);
                    if (e) prod = ctx.cup(lambda[j], prod);
                    if (!prod.is_zero()) span.insert(Vec(prod.f));
                }
        return span;
    };

    for (int i = 2; i <= p - 1; ++i) {
        int par = (1 + i) % 2;
        auto span = decomposable_span(i, par, i - 1);
        int hdim = par ? ctx.dims(i).second : ctx.dims(i).first;
        if (hdim - span.size() != 1) {
            record("lambda" + std::to_string(i) + "_identified", false,
                   "complement dimension " + std::to_string(hdim - span.size()));
            continue;
        }
        for (int j = 0; j < ctx.b(i); ++j) {
            if (ctx.res().gen_parity(i)[j] != par) continue;
            ExtClass cand = ctx.dual_class(i, j);
            if (!span.contains(Vec(cand.f))) {
                lambda[i] = cand;
                break;
            }
        }
        record("lambda" + std::to_string(i) + "_identified", !lambda[i].is_zero());
    }
    for (int i = 1; i <= p - 1; ++i) rep.lambda_classes.push_back(lambda[i].f);

    // relations
    for (int i = 1; i <= p - 1; ++i) {
        ExtClass prod = ctx.cup(lambda[i], zeta);
        record("lambda" + std::to_string(i) + "*zeta=0", prod.is_zero(), vec_string(F, prod.f));
    }
    ExtClass xz_p2 = ctx.cup(x, ctx.cup_pow(zeta, p - 2));
    ExtClass xz_p1 = ctx.cup(x, ctx.cup_pow(zeta, p - 1));
    record("x*zeta^(p-2)!=0", !xz_p2.is_zero());
    record("x*zeta^(p-1)=0", xz_p1.is_zero(), vec_string(F, xz_p1.f));
    for (int i = 1; i <= p - 1; ++i)
        for (int j = i; j <= p - 1; ++j) {
            ExtClass prod = ctx.cup(lambda[i], lambda[j]);
            std::string nm = "lambda" + std::to_string(i) + "*lambda" + std::to_string(j);
            if (i + j != p)
                record(nm + "=0", prod.is_zero(), vec_string(F, prod.f));
            else
                record(nm + "~x*zeta^(p-2)", ctx.collinear_nonzero(prod, xz_p2), vec_string(F, prod.f));
        }

    // kappa: search H^{p,1} for a class making (kappa, x + zeta^2) regular
    // up to the cap
    {
        std::vector<int> odd_gens;
        for (int j = 0; j < ctx.b(p); ++j)
            if (ctx.res().gen_parity(p)[j] == 1) odd_gens.push_back(j);
        int d = static_cast<int>(odd_gens.size());
        ExtClass y = ctx.add(x, ctx.cup_pow(zeta, 2));  // the even parameter
        std::vector<Matrix> Ty;                          // mult by y at degree n
        for (int n = 0; n + 2 <= maxdeg; ++n) Ty.push_back(ctx.mult_table(y, n));
        std::vector<std::vector<Matrix>> Tk(d);  // per basis class of H^{p,1}
        for (int kidx = 0; kidx < d; ++kidx)
            for (int n = 0; n + p <= maxdeg; ++n)
                Tk[kidx].push_back(ctx.mult_table(ctx.dual_class(p, odd_gens[kidx]), n));

        int q = F.q();
        long total = 1;
        for (int k = 0; k < d; ++k) total *= q;
        rep.kappa_found = false;
        for (long code = 1; code < total && !rep.kappa_found; ++code) {
            Vec c(d, 0);
            long rest = code;
            for (int k = 0; k < d; ++k) {
                c[k] = static_cast<std::uint8_t>(rest % q);
                rest /= q;
            }
            int first = -1;
            for (int k = 0; k < d; ++k)
                if (c[k]) {
                    first = k;
                    break;
                }
            if (c[first] != 1) continue;  // one representative per scalar line
            // candidate multiplication tables
            auto Tcand = [&](int n) {
                Matrix T = Tk[0][n].scale(c[0]);
                for (int k = 1; k < d; ++k) T = T.add(Tk[k][n].scale(c[k]));
                return T;
            };
            bool good = true;
            for (int n = 0; n + p <= maxdeg && good; ++n)
                if (Tcand(n).rank() != ctx.b(n)) good = false;  // kappa regular
            // x + zeta^2 regular on the quotient by kappa
            for (int n = 0; n + 2 <= maxdeg && good; ++n) {
                EchelonBasis ideal_top(A.field(), ctx.b(n + 2));
                if (n + 2 >= p) {
                    Matrix I = Tcand(n + 2 - p);
                    for (int i = 0; i < I.rows(); ++i) ideal_top.insert(Vec(I.row(i), I.row(i) + I.cols()));
                }
                Matrix red(A.field(), ctx.b(n), ctx.b(n + 2));
                for (int i = 0; i < ctx.b(n); ++i) {
                    Vec row(Ty[n].row(i), Ty[n].row(i) + Ty[n].cols());
                    ideal_top.reduce(row);
                    for (int j = 0; j < ctx.b(n + 2); ++j) red.at(i, j) = row[j];
                }
                Matrix ker = red.transpose().nullspace_rows();
                if (ker.rows() == 0) continue;
                EchelonBasis ideal_here(A.field(), ctx.b(n));
                if (n >= p) {
                    Matrix I = Tcand(n - p);
                    for (int i = 0; i < I.rows(); ++i) ideal_here.insert(Vec(I.row(i), I.row(i) + I.cols()));
                }
                for (int i = 0; i < ker.rows() && good; ++i)
                    if (!ideal_here.contains(Vec(ker.row(i), ker.row(i) + ker.cols()))) good = false;
            }
            if (good) {
                rep.kappa_found = true;
                rep.kappa.assign(static_cast<size_t>(ctx.b(p)), 0);
                for (int k = 0; k < d; ++k) rep.kappa[odd_gens[k]] = c[k];
            }
        }
        record("kappa_regular_sequence", rep.kappa_found);
    }
    return rep;
}

// ------------------------------------------------------ duality quotient

DualityReport verify_duality_quotient(ExtContext& ctx, const RingPresentationReport& pres) {
    const GaloisField& F = ctx.A().F();
    int p = pres.p;
    DualityReport rep;
    if (!pres.kappa_found) return rep;

    ExtClass kappa{p, 1, pres.kappa};
    ExtClass x{2, 0, pres.x_class};
    ExtClass zeta{1, 1, pres.zeta_class};
    ExtClass y = ctx.add(x, ctx.cup_pow(zeta, 2));

    // ideal (kappa, y) degree by degree
    std::vector<EchelonBasis> ideal;
    for (int m = 0; m <= p; ++m) {
        EchelonBasis I(ctx.algebra()->field(), ctx.b(m));
        if (m >= p) {
            Matrix T = ctx.mult_table(kappa, m - p);
            for (int i = 0; i < T.rows(); ++i) I.insert(Vec(T.row(i), T.row(i) + T.cols()));
        }
        if (m >= 2) {
            Matrix T = ctx.mult_table(y, m - 2);
            for (int i = 0; i < T.rows(); ++i) I.insert(Vec(T.row(i), T.row(i) + T.cols()));
        }
        ideal.push_back(std::move(I));
        rep.quotient_dims.push_back(ctx.b(m) - ideal[m].size());
    }
    rep.dims_ok = true;
    for (int m = 0; m <= p; ++m) {
        int want = (m == 0 || m == p) ? 1 : 2;
        if (rep.quotient_dims[m] != want) rep.dims_ok = false;
    }

    ExtClass ztop = ctx.cup_pow(zeta, p);
    Vec ztop_red = ztop.f;
    ideal[p].reduce(ztop_red);
    rep.top_is_zeta_power = false;
    int top_coord = -1;
    for (size_t k = 0; k < ztop_red.size(); ++k)
        if (ztop_red[k]) {
            rep.top_is_zeta_power = true;
            top_coord = static_cast<int>(k);
            break;
        }
    if (!rep.top_is_zeta_power) return rep;

    // coset representatives: duals extending the ideal echelon
    auto reps_of = [&](int m) {
        std::vector<ExtClass> reps;
        EchelonBasis probe(ctx.algebra()->field(), ctx.b(m));
        for (int i = 0; i < ideal[m].size(); ++i) probe.insert(Vec(ideal[m].row(i)));
        for (int j = 0; j < ctx.b(m); ++j) {
            Vec e(static_cast<size_t>(ctx.b(m)), 0);
            e[j] = 1;
            if (probe.insert(std::move(e))) reps.push_back(ctx.dual_class(m, j));
        }
        return reps;
    };

    rep.pairing_perfect = true;
    for (int i = 0; i <= p; ++i) {
        auto ri = reps_of(i);
        auto rj = reps_of(p - i);
        if (ri.size() != rj.size()) {
            rep.pairing_perfect = false;
            continue;
        }
        Matrix P(ctx.algebra()->field(), static_cast<int>(ri.size()), static_cast<int>(rj.size()));
        for (size_t a = 0; a < ri.size(); ++a)
            for (size_t bq = 0; bq < rj.size(); ++bq) {
                ExtClass prod = ctx.cup(ri[a], rj[bq]);
                Vec red = prod.f;
                ideal[p].reduce(red);
                P.at(static_cast<int>(a), static_cast<int>(bq)) = F.div(red[top_coord], ztop_red[top_coord]);
            }
        if (P.rank() != static_cast<int>(ri.size())) rep.pairing_perfect = false;
    }

    rep.lambda_pairing_nonzero = true;
    for (int i = 1; i <= p - 1; ++i) {
        ExtClass li{i, (1 + i) % 2, pres.lambda_classes[i - 1]};
        ExtClass lj{p - i, (1 + p - i) % 2, pres.lambda_classes[p - i - 1]};
        Vec red = ctx.cup(li, lj).f;
        ideal[p].reduce(red);
        bool nz = false;
        for (auto cc : red) nz = nz || cc;
        if (!nz) rep.lambda_pairing_nonzero = false;
    }
    return rep;
}

// ---------------------------------------------------- general vanishing

bool MainRelationsReport::ok() const {
    for (auto& r : relations)
        if (!r.holds) return false;
    return kernel_dim >= 1;
}

MainRelationsReport verify_zeta_annihilation(ExtContext& ctx) {
    const PresentedSuperalgebra& A = ctx.A();
    const GaloisField& F = A.F();
    int p = F.p();
    int r = A.param_r(), s = A.param_s();
    long N = p - 1;
    for (int k = 0; k < r + s - 1; ++k) N *= p;

    MainRelationsReport rep;
    rep.algebra = A.descriptor();
    rep.N = static_cast<int>(N);
    if (ctx.maxdeg() < N + 2 || ctx.maxdeg() < p + 1)
        throw InvalidInput("context depth below N + 2");

    ExtClass zeta = ctx.zeta();
    ExtClass zN = ctx.cup_pow(zeta, static_cast<int>(N));

    std::vector<ExtClass> two_classes;
    std::vector<std::string> names;
    for (int g = 2; g < A.ngens(); ++g) {
        const std::string nm = A.gens()[g].name;
        auto single = PresentedSuperalgebra::make_truncated_single(A.field(), nm);
        ExtContext ctx_single(single, 2);
        Inflation infl(ctx, ctx_single, projection_to_single(ctx.algebra(), single, nm));
        two_classes.push_back(infl.apply(ctx_single.dual_class(2, 0)));
        names.push_back(nm);
    }

    auto record = [&](const std::string& name, bool holds, const std::string& wit = "") {
        rep.relations.push_back({name, holds, holds ? "" : wit});
    };

    for (size_t k = 0; k < two_classes.size(); ++k) {
        record("infl(" + names[k] + ")_nonzero", !two_classes[k].is_zero());
        ExtClass prod = ctx.cup(two_classes[k], zN);
        record(names[k] + "_class*zeta^N=0", prod.is_zero(), vec_string(F, prod.f));
    }
    ExtClass zslack = ctx.cup_pow(zeta, static_cast<int>(N) + 2);
    record("zeta^(N+2)!=0", !zslack.is_zero());

    // kernel of multiplication by zeta^{p-1} on the span of the inflated
    // degree-two classes, in degree p + 1
    ExtClass zp1 = ctx.cup_pow(zeta, p - 1);
    Matrix rows(ctx.algebra()->field(), static_cast<int>(two_classes.size()), ctx.b(p + 1));
    for (size_t k = 0; k < two_classes.size(); ++k) {
        ExtClass prod = ctx.cup(two_classes[k], zp1);
        for (int j = 0; j < ctx.b(p + 1); ++j) rows.at(static_cast<int>(k), j) = prod.f[j];
    }
    rep.kernel_dim = static_cast<int>(two_classes.size()) - rows.rank();
    record("degree_(p+1)_kernel", rep.kernel_dim >= 1,
           "kernel dimension " + std::to_string(rep.kernel_dim));
    return rep;
}

// ------------------------------------------- Ext with module coefficients

namespace {

// differential of Hom(F_., M) from degree n to n + 1
Matrix coeff_differential(const ExtContext& ctx, const SuperModule& M, int n) {
    const MinimalResolution& R = ctx.res();
    int dm = M.dim();
    Matrix D(ctx.algebra()->field(), dm * R.rank(n + 1), dm * R.rank(n));
    for (int l = 0; l < R.rank(n + 1); ++l)
        for (int j = 0; j < R.rank(n); ++j) {
            Matrix blk = M.action_of(R.diff(n + 1, j, l));
            for (int w = 0; w < dm; ++w)
                for (int v = 0; v < dm; ++v) D.at(l * dm + w, j * dm + v) = blk.at(w, v);
        }
    return D;
}

}  // namespace

ExtCoeffs ext_with_coefficients(ExtContext& ctx, const SuperModule& M, int maxdeg) {
    if (ctx.maxdeg() < maxdeg + 1) throw InvalidInput("context depth below maxdeg + 1");
    ExtCoeffs out;
    int dm = M.dim();
    std::vector<int> ranks;  // rank of delta^n for n = 0..maxdeg
    for (int n = 0; n <= maxdeg; ++n) ranks.push_back(coeff_differential(ctx, M, n).rank());
    for (int n = 0; n <= maxdeg; ++n) {
        int dimC = dm * ctx.b(n);
        out.dims.push_back(dimC - ranks[n] - (n ? ranks[n - 1] : 0));
    }
    return out;
}

Matrix annihilator_in_span(ExtContext& ctx, const std::vector<ExtClass>& classes, const SuperModule& M,
                           int maxdeg) {
    const GaloisField& F = ctx.A().F();
    int dm = M.dim();
    int nc = static_cast<int>(classes.size());
    for (auto& c : classes)
        if (c.n != 2) throw InvalidInput("annihilator test expects degree-two classes");
    if (ctx.maxdeg() < maxdeg + 2) throw InvalidInput("context depth below maxdeg + 2");

    std::vector<Vec> condition_rows;
    for (int n = 0; n <= maxdeg; ++n) {
        Matrix Dn = coeff_differential(ctx, M, n);
        Matrix cocycles = Dn.nullspace_rows();
        // coboundaries of degree n and n + 2
        EchelonBasis cob_n(ctx.algebra()->field(), dm * ctx.b(n));
        if (n > 0) {
            Matrix Dp = coeff_differential(ctx, M, n - 1);
            for (int j = 0; j < Dp.cols(); ++j) {
                Vec col(Dp.rows(), 0);
                for (int i = 0; i < Dp.rows(); ++i) col[i] = Dp.at(i, j);
                cob_n.insert(std::move(col));
            }
        }
        EchelonBasis cob_top(ctx.algebra()->field(), dm * ctx.b(n + 2));
        {
            Matrix Dt = coeff_differential(ctx, M, n + 1);
            for (int j = 0; j < Dt.cols(); ++j) {
                Vec col(Dt.rows(), 0);
                for (int i = 0; i < Dt.rows(); ++i) col[i] = Dt.at(i, j);
                cob_top.insert(std::move(col));
            }
        }
        // representatives of H^n: cocycles extending the coboundary echelon
        std::vector<Vec> reps;
        for (int i = 0; i < cocycles.rows(); ++i) {
            Vec v(cocycles.row(i), cocycles.row(i) + cocycles.cols());
            Vec w = v;
            cob_n.reduce(w);
            bool nz = false;
            for (auto cc : w) nz = nz || cc;
            if (nz) {
                cob_n.insert(Vec(w));
                reps.push_back(std::move(v));
            }
        }
        if (reps.empty()) continue;
        for (auto& psi : reps) {
            // column e: residue of (psi . e) modulo coboundaries
            std::vector<Vec> cols;
            for (auto& e : classes) {
                const auto& st = ctx.chain_stage(e, n);
                Vec w(static_cast<size_t>(dm) * ctx.b(n + 2), 0);
                const int D = ctx.A().dim();
                for (int l = 0; l < ctx.b(n + 2); ++l) {
                    for (int j = 0; j < ctx.b(n); ++j) {
                        AlgElem alpha(st[l].begin() + static_cast<size_t>(j) * D,
                                      st[l].begin() + static_cast<size_t>(j + 1) * D);
                        bool nzc = false;
                        for (auto cc : alpha) nzc = nzc || cc;
                        if (!nzc) continue;
                        Matrix act = M.action_of(alpha);
                        Vec part(dm, 0);
                        for (int v = 0; v < dm; ++v) part[v] = psi[static_cast<size_t>(j) * dm + v];
                        Vec img = act.apply(part);
                        for (int v = 0; v < dm; ++v)
                            w[static_cast<size_t>(l) * dm + v] =
                                F.add(w[static_cast<size_t>(l) * dm + v], img[v]);
                    }
                }
                cob_top.reduce(w);
                cols.push_back(w);
            }
            size_t len = cols[0].size();
            for (size_t coord = 0; coord < len; ++coord) {
                Vec row(nc, 0);
                bool nz = false;
                for (int e = 0; e < nc; ++e) {
                    row[e] = cols[e][coord];
                    nz = nz || row[e];
                }
                if (nz) condition_rows.push_back(std::move(row));
            }
        }
    }
    Matrix cond(ctx.algebra()->field(), static_cast<int>(condition_rows.size()), nc);
    for (size_t i = 0; i < condition_rows.size(); ++i)
        for (int j = 0; j < nc; ++j) cond.at(static_cast<int>(i), j) = condition_rows[i][j];
    return cond.nullspace_rows();
}

bool AnnihilatorReport::ok() const {
    if (free_case) return ext_vanishes;
    return annihilator_dim == i && support_pattern_ok;
}

AnnihilatorReport verify_sympower_annihilators(FieldPtr F, int r, int s, const std::vector<std::uint8_t>& mus,
                                               int i, int maxdeg, const std::string& cache_dir) {
    int p = F->p();
    AnnihilatorReport rep;
    rep.i = i;
    auto kH = PresentedSuperalgebra::make_kH(F, r, s, false);
    ExtContext ctx(kH, maxdeg + 2, cache_dir);
    long pi = 1;
    for (int k = 0; k < i; ++k) pi *= p;
    SymPower S = sym_power(kH, static_cast<int>(pi) - 1, mus);

    if (i == r + s) {
        rep.free_case = true;
        ExtCoeffs ec = ext_with_coefficients(ctx, S.module, maxdeg);
        rep.ext_vanishes = true;
        for (int n = 1; n <= maxdeg; ++n)
            if (ec.dims[n] != 0) rep.ext_vanishes = false;
        return rep;
    }

    std::vector<ExtClass> classes;
    for (int g = 0; g < kH->ngens(); ++g) {
        const std::string nm = kH->gens()[g].name;
        auto single = PresentedSuperalgebra::make_truncated_single(F, nm);
        ExtContext ctx_single(single, 2);
        Inflation infl(ctx, ctx_single, projection_to_single(kH, single, nm));
        classes.push_back(infl.apply(ctx_single.dual_class(2, 0)));
    }
    Matrix ann = annihilator_in_span(ctx, classes, S.module, maxdeg);
    rep.annihilator_dim = ann.rows();
    if (i == 1 && ann.rows() == 1) {
        rep.line.assign(ann.row(0), ann.row(0) + ann.cols());
        // predicted support: the x_1 slot and every z_j with nonzero mu
        std::vector<bool> want(r + s, false);
        if (r >= 1) want[0] = true;
        for (int j = 0; j < s; ++j) want[r + j] = mus[j] != 0;
        rep.support_pattern_ok = true;
        for (int k = 0; k < r + s; ++k)
            if ((rep.line[k] != 0) != want[k]) rep.support_pattern_ok = false;
    } else if (i > 1) {
        rep.support_pattern_ok = rep.annihilator_dim == i;
    }
    return rep;
}

}  // namespace supalg
