#include "supalg/resolution.hpp"

#include <cassert>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "supalg/errors.hpp"

namespace supalg {

const char* const kResolutionCacheVersion = "supalg-res-1";

MinimalResolution::MinimalResolution(AlgebraPtr alg) : alg_(std::move(alg)) {}

int MinimalResolution::coord_parity(int n, int flat) const {
    int D = alg_->dim();
    return (parities_[n][flat / D] + alg_->monomial_parity(flat % D)) % 2;
}

void MinimalResolution::axpy_elem(Vec& y, const AlgElem& a, const Vec& x, int blocks) const {
    const int D = alg_->dim();
    const GaloisField& F = alg_->F();
    for (int m = 0; m < D; ++m) {
        if (a[m] == 0) continue;
        for (int b = 0; b < blocks; ++b) {
            const std::uint8_t* xb = x.data() + static_cast<size_t>(b) * D;
            std::uint8_t* yb = y.data() + static_cast<size_t>(b) * D;
            for (int j = 0; j < D; ++j) {
                if (xb[j] == 0) continue;
                std::uint8_t c = F.mul(a[m], xb[j]);
                const std::uint8_t* prod = alg_->mono_product(m, j);
                for (int k = 0; k < D; ++k)
                    if (prod[k]) yb[k] = F.add(yb[k], F.mul(c, prod[k]));
            }
        }
    }
}

Vec MinimalResolution::column_of_diff(int n, int j, int m) const {
    // image of the basis vector m . e_j under d_n (n >= 1)
    const int D = alg_->dim();
    Vec out(static_cast<size_t>(ranks_[n - 1]) * D, 0);
    const GaloisField& F = alg_->F();
    for (int i = 0; i < ranks_[n - 1]; ++i) {
        const AlgElem& a = diffs_[n][i][j];
        // m * a
        for (int k = 0; k < D; ++k) {
            if (a[k] == 0) continue;
            const std::uint8_t* prod = alg_->mono_product(m, k);
            for (int l = 0; l < D; ++l)
                if (prod[l]) out[static_cast<size_t>(i) * D + l] =
                    F.add(out[static_cast<size_t>(i) * D + l], F.mul(a[k], prod[l]));
        }
    }
    return out;
}

Vec MinimalResolution::apply_diff(int n, const Vec& x) const {
    const int D = alg_->dim();
    Vec out(static_cast<size_t>(ranks_[n - 1]) * D, 0);
    const GaloisField& F = alg_->F();
    for (int j = 0; j < ranks_[n]; ++j) {
        // out += d(e_j) acted by the block of x: d(m e_j) = m d(e_j)
        for (int m = 0; m < D; ++m) {
            std::uint8_t c = x[static_cast<size_t>(j) * D + m];
            if (c == 0) continue;
            Vec col = column_of_diff(n, j, m);
            axpy(F, out, c, col);
        }
    }
    return out;
}

void MinimalResolution::build_solver(int n) {
    assert(static_cast<int>(solvers_.size()) == n);
    Solver sv;
    const int D = alg_->dim();
    int tgt_flat = n == 0 ? 1 : ranks_[n - 1] * D;
    int src_flat = ranks_[n] * D;
    auto tpar = [&](int flat) { return n == 0 ? 0 : coord_parity(n - 1, flat); };
    for (int par = 0; par < 2; ++par) {
        sv.tgt_pos[par].assign(tgt_flat, -1);
        sv.src_pos[par].assign(src_flat, -1);
    }
    for (int f = 0; f < tgt_flat; ++f) {
        int par = tpar(f);
        sv.tgt_pos[par][f] = static_cast<int>(sv.tgt_coords[par].size());
        sv.tgt_coords[par].push_back(f);
    }
    for (int f = 0; f < src_flat; ++f) {
        int par = coord_parity(n, f);
        sv.src_pos[par][f] = static_cast<int>(sv.src_coords[par].size());
        sv.src_coords[par].push_back(f);
    }
    for (int par = 0; par < 2; ++par)
        sv.ech[par] = std::make_unique<EchelonBasis>(alg_->field(), static_cast<int>(sv.tgt_coords[par].size()),
                                                     static_cast<int>(sv.src_coords[par].size()));
    // insert the columns in deterministic order: even sources first, then odd
    for (int par = 0; par < 2; ++par) {
        for (size_t slot = 0; slot < sv.src_coords[par].size(); ++slot) {
            int flat = sv.src_coords[par][slot];
            int j = flat / D, m = flat % D;
            Vec col;
            if (n == 0)
                col = Vec{static_cast<std::uint8_t>(m == 0 ? 1 : 0)};  // augmentation
            else
                col = column_of_diff(n, j, m);
            // pack into the parity block (the off-parity part must vanish)
            Vec packed(sv.tgt_coords[par].size(), 0);
            for (int f = 0; f < tgt_flat; ++f) {
                if (col[f] == 0) continue;
                int tp = tpar(f);
                if (tp != par) throw LiftingFailed("differential is not parity homogeneous");
                packed[sv.tgt_pos[par][f]] = col[f];
            }
            Vec companion(sv.src_coords[par].size(), 0);
            companion[slot] = 1;
            Vec ker;
            if (!sv.ech[par]->insert(std::move(packed), std::move(companion), &ker)) sv.kernel[par].push_back(std::move(ker));
        }
    }
    solvers_.push_back(std::move(sv));
}

void MinimalResolution::step() {
    // installs F_{n+1} where n = solvers_.size() - 1
    int n = static_cast<int>(solvers_.size()) - 1;
    Solver& sv = solvers_[n];
    const int D = alg_->dim();
    int src_flat = ranks_[n] * D;
    const GaloisField& F = alg_->F();

    // echelonized kernel per parity
    EchelonBasis kech[2] = {EchelonBasis(alg_->field(), src_flat), EchelonBasis(alg_->field(), src_flat)};
    for (int par = 0; par < 2; ++par)
        for (auto& kv : sv.kernel[par]) {
            Vec full(src_flat, 0);
            for (size_t slot = 0; slot < kv.size(); ++slot)
                if (kv[slot]) full[sv.src_coords[par][slot]] = kv[slot];
            kech[par].insert(std::move(full));
        }

    // J . K = span of g . v over generators g and kernel basis vectors v
    // (exact because the kernel is a submodule), gathered by target parity
    EchelonBasis jk[2] = {EchelonBasis(alg_->field(), src_flat), EchelonBasis(alg_->field(), src_flat)};
    for (int g = 0; g < alg_->ngens(); ++g) {
        int gp = alg_->gens()[g].parity;
        AlgElem ge = alg_->gen_elem(g);
        for (int par = 0; par < 2; ++par)
            for (int i = 0; i < kech[par].size(); ++i) {
                Vec out(src_flat, 0);
                axpy_elem(out, ge, kech[par].row(i), ranks_[n]);
                jk[(par + gp) % 2].insert(std::move(out));
            }
    }

    // minimal generators: kernel vectors extending J.K, even parity first
    std::vector<Vec> gens;
    std::vector<std::uint8_t> gpar;
    for (int par = 0; par < 2; ++par) {
        EchelonBasis combined(alg_->field(), src_flat);
        for (int i = 0; i < jk[par].size(); ++i) combined.insert(Vec(jk[par].row(i)));
        for (int i = 0; i < kech[par].size(); ++i) {
            Vec v(kech[par].row(i));
            combined.reduce(v);
            int piv = -1;
            for (int f = 0; f < src_flat; ++f)
                if (v[f]) {
                    piv = f;
                    break;
                }
            if (piv < 0) continue;
            std::uint8_t inv = F.inv(v[piv]);
            if (inv != 1) {
                const std::uint8_t* mi = F.mul_row(inv);
                for (auto& x : v) x = mi[x];
            }
            combined.insert(Vec(v));
            gens.push_back(std::move(v));
            gpar.push_back(static_cast<std::uint8_t>(par));
        }
    }

    int b = static_cast<int>(gens.size());
    ranks_.push_back(b);
    parities_.push_back(gpar);
    std::vector<std::vector<AlgElem>> d(ranks_[n], std::vector<AlgElem>(b, alg_->zero_elem()));
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < ranks_[n]; ++i)
            for (int m = 0; m < D; ++m) d[i][j][m] = gens[j][static_cast<size_t>(i) * D + m];
    diffs_.push_back(std::move(d));
    maxdeg_ = n + 1;
}

MinimalResolution MinimalResolution::build(AlgebraPtr alg, int maxdeg) {
    if (!alg->is_local()) throw NotLocal(alg->descriptor());
    MinimalResolution R(alg);
    R.ranks_ = {1};
    R.parities_ = {{0}};
    R.diffs_.resize(1);  // diffs_[0] unused
    R.maxdeg_ = 0;
    R.extend(maxdeg);
    return R;
}

void MinimalResolution::extend(int maxdeg) {
    while (maxdeg_ < maxdeg) {
        int n = maxdeg_;
        if (static_cast<int>(solvers_.size()) <= n) build_solver(n);
        step();
    }
    // make sure solvers exist for every computed differential, so lifting works
    while (static_cast<int>(solvers_.size()) <= maxdeg_) build_solver(static_cast<int>(solvers_.size()));
}

std::pair<int, int> MinimalResolution::dims_by_parity(int n) const {
    int e = 0, o = 0;
    for (auto p : parities_[n]) (p ? o : e) += 1;
    return {e, o};
}

Vec MinimalResolution::solve(int n, const Vec& t) const {
    if (n < 1 || n > maxdeg_ || n >= static_cast<int>(solvers_.size()))
        throw InvalidInput("solve: degree out of range");
    const Solver& sv = solvers_[n];
    const int D = alg_->dim();
    Vec x(static_cast<size_t>(ranks_[n]) * D, 0);
    for (int par = 0; par < 2; ++par) {
        Vec packed(sv.tgt_coords[par].size(), 0);
        bool any = false;
        for (size_t slot = 0; slot < sv.tgt_coords[par].size(); ++slot) {
            packed[slot] = t[sv.tgt_coords[par][slot]];
            any = any || packed[slot];
        }
        if (!any) continue;
        Vec comb(sv.src_coords[par].size(), 0);
        sv.ech[par]->reduce(packed, &comb);
        for (auto c : packed)
            if (c) throw LiftingFailed("target vector is not in the image of the differential");
        // invariant: d(comb) = reduced - original, so x uses -comb
        for (size_t slot = 0; slot < comb.size(); ++slot)
            if (comb[slot]) x[sv.src_coords[par][slot]] = alg_->F().neg(comb[slot]);
    }
    return x;
}

bool MinimalResolution::verify_minimal() const {
    for (int n = 1; n <= maxdeg_; ++n)
        for (auto& row : diffs_[n])
            for (auto& e : row)
                if (e[0] != 0) return false;  // constant term would deny minimality
    return true;
}

bool MinimalResolution::verify_d2_zero() const {
    // left modules: d(a e_k) = a d(e_k), so the composite entry multiplies
    // the inner differential entry on the left of the outer one
    for (int n = 2; n <= maxdeg_; ++n) {
        for (int i = 0; i < ranks_[n - 2]; ++i)
            for (int j = 0; j < ranks_[n]; ++j) {
                AlgElem acc = alg_->zero_elem();
                for (int k = 0; k < ranks_[n - 1]; ++k) {
                    AlgElem t = alg_->mul(diffs_[n][k][j], diffs_[n - 1][i][k]);
                    axpy(alg_->F(), acc, 1, t);
                }
                for (auto c : acc)
                    if (c) return false;
            }
    }
    return true;
}

bool MinimalResolution::verify_parity() const {
    for (int n = 1; n <= maxdeg_; ++n)
        for (int j = 0; j < ranks_[n]; ++j)
            for (int i = 0; i < ranks_[n - 1]; ++i) {
                const AlgElem& e = diffs_[n][i][j];
                int want = (parities_[n][j] + parities_[n - 1][i]) % 2;
                for (int m = 0; m < alg_->dim(); ++m)
                    if (e[m] && alg_->monomial_parity(m) != want) return false;
            }
    return true;
}

bool MinimalResolution::verify_exactness() const {
    // dim ker(d_n) = dim im(d_{n+1}) on the underlying vector spaces
    const int D = alg_->dim();
    for (int n = 0; n + 1 <= maxdeg_ && n + 1 < static_cast<int>(solvers_.size()); ++n) {
        long ker_n = 0;
        for (int par = 0; par < 2; ++par) ker_n += static_cast<long>(solvers_[n].kernel[par].size());
        long rank_next = 0;
        for (int par = 0; par < 2; ++par) rank_next += solvers_[n + 1].ech[par]->size();
        long expect_rank = static_cast<long>(ranks_[n + 1]) * D -
                           (static_cast<long>(solvers_[n + 1].kernel[0].size()) + solvers_[n + 1].kernel[1].size());
        if (rank_next != expect_rank) return false;
        if (ker_n != rank_next) return false;
    }
    return true;
}

// ------------------------------------------------------------ serialization

std::string MinimalResolution::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = kResolutionCacheVersion;
    j["field"] = alg_->F().spec();
    j["modulus"] = alg_->F().modulus_string();
    j["algebra"] = alg_->descriptor();
    j["maxdeg"] = maxdeg_;
    j["ranks"] = ranks_;
    j["parities"] = parities_;
    nlohmann::ordered_json dl = nlohmann::ordered_json::array();
    for (int n = 1; n <= maxdeg_; ++n) {
        nlohmann::ordered_json dn = nlohmann::ordered_json::array();
        for (int i = 0; i < ranks_[n - 1]; ++i)
            for (int jj = 0; jj < ranks_[n]; ++jj) {
                const AlgElem& e = diffs_[n][i][jj];
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (int m = 0; m < alg_->dim(); ++m)
                    if (e[m]) terms.push_back({m, e[m]});
                if (!terms.empty()) dn.push_back({i, jj, terms});
            }
        dl.push_back(dn);
    }
    j["diffs"] = dl;
    return j.dump();
}

MinimalResolution MinimalResolution::from_json(AlgebraPtr alg, const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("version").get<std::string>() != kResolutionCacheVersion) throw InvalidInput("cache version mismatch");
    if (j.at("algebra").get<std::string>() != alg->descriptor()) throw InvalidInput("cache algebra mismatch");
    MinimalResolution R(alg);
    R.maxdeg_ = j.at("maxdeg").get<int>();
    R.ranks_ = j.at("ranks").get<std::vector<int>>();
    R.parities_ = j.at("parities").get<std::vector<std::vector<std::uint8_t>>>();
    R.diffs_.resize(R.maxdeg_ + 1);
    for (int n = 1; n <= R.maxdeg_; ++n) {
        R.diffs_[n].assign(R.ranks_[n - 1], std::vector<AlgElem>(R.ranks_[n], alg->zero_elem()));
        for (auto& entry : j.at("diffs")[n - 1]) {
            int i = entry[0].get<int>();
            int jj = entry[1].get<int>();
            for (auto& t : entry[2]) R.diffs_[n][i][jj][t[0].get<int>()] = t[1].get<std::uint8_t>();
        }
    }
    for (int n = 0; n <= R.maxdeg_; ++n) R.build_solver(n);
    return R;
}

MinimalResolution cached_resolution(AlgebraPtr alg, int maxdeg, const std::string& cache_dir) {
    if (cache_dir.empty()) return MinimalResolution::build(alg, maxdeg);
    std::hash<std::string> h;
    std::string key = std::to_string(h(std::string(kResolutionCacheVersion) + "|" + alg->descriptor() + "|" +
                                       alg->F().modulus_string()));
    std::filesystem::path path = std::filesystem::path(cache_dir) / ("res-" + key + ".json");
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            MinimalResolution R = MinimalResolution::from_json(alg, ss.str());
            if (R.maxdeg() >= maxdeg) return R;
            R.extend(maxdeg);
            std::ofstream out(path);
            out << R.to_json();
            return R;
        } catch (const std::exception&) {
            // stale cache, fall through and rebuild
        }
    }
    MinimalResolution R = MinimalResolution::build(alg, maxdeg);
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(path);
    out << R.to_json();
    return R;
}

}  // namespace supalg
