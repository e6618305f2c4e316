#include "supalg/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "supalg/errors.hpp"

namespace supalg {

// ---------------------------------------------------------------- basis ---

std::vector<std::uint8_t> PresentedSuperalgebra::exponents(int mono) const {
    std::vector<std::uint8_t> e(gens_.size());
    for (size_t g = 0; g < gens_.size(); ++g) {
        e[g] = static_cast<std::uint8_t>(mono % radix_[g]);
        mono /= radix_[g];
    }
    return e;
}

int PresentedSuperalgebra::monomial_index(const std::vector<std::uint8_t>& exps) const {
    int idx = 0;
    for (int g = static_cast<int>(gens_.size()) - 1; g >= 0; --g) idx = idx * radix_[g] + exps[g];
    return idx;
}

Word PresentedSuperalgebra::monomial_word(int mono) const {
    Word w;
    auto e = exponents(mono);
    for (size_t g = 0; g < gens_.size(); ++g)
        for (int k = 0; k < e[g]; ++k) w.push_back(static_cast<std::uint8_t>(g));
    return w;
}

std::string PresentedSuperalgebra::monomial_string(int mono) const {
    auto e = exponents(mono);
    std::string s;
    for (size_t g = 0; g < gens_.size(); ++g) {
        if (e[g] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens_[g].name;
        if (e[g] > 1) s += "^" + std::to_string(int(e[g]));
    }
    return s.empty() ? "1" : s;
}

std::string PresentedSuperalgebra::element_string(const AlgElem& a) const {
    std::string s;
    for (int m = 0; m < dim_; ++m) {
        if (a[m] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string c = field_->to_string(a[m]);
        if (c != "1" || m == 0) s += (m == 0 ? c : c + "*");
        if (m != 0) s += monomial_string(m);
    }
    return s.empty() ? "0" : s;
}

AlgElem PresentedSuperalgebra::one_elem() const {
    AlgElem a = zero_elem();
    a[0] = 1;
    return a;
}

AlgElem PresentedSuperalgebra::gen_elem(int g) const {
    std::vector<std::uint8_t> e(gens_.size(), 0);
    e[g] = 1;
    AlgElem a = zero_elem();
    a[monomial_index(e)] = 1;
    return a;
}

int PresentedSuperalgebra::gen_index(const std::string& name) const {
    for (size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return static_cast<int>(g);
    throw UnknownGenerator(name);
}

// ------------------------------------------------------------- rewriting ---

std::optional<std::vector<std::pair<std::uint8_t, Word>>> PresentedSuperalgebra::step_at(const Word& w,
                                                                                         int pos) const {
    int n = static_cast<int>(w.size());
    if (pos < 0 || pos >= n) return std::nullopt;
    int g = w[pos];
    int cap = gens_[g].cap;
    // nilpotency: cap consecutive copies of g starting here kill the word
    if (pos + cap <= n) {
        bool run = true;
        for (int k = 1; k < cap; ++k)
            if (w[pos + k] != g) {
                run = false;
                break;
            }
        if (run) return std::vector<std::pair<std::uint8_t, Word>>{};
    }
    if (pos + 1 < n && w[pos] > w[pos + 1]) {
        const auto& rule = swap_rules_[static_cast<size_t>(w[pos]) * gens_.size() + w[pos + 1]];
        std::vector<std::pair<std::uint8_t, Word>> out;
        out.reserve(rule.size());
        for (const auto& [c, frag] : rule) {
            Word nw;
            nw.reserve(w.size() + frag.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), frag.begin(), frag.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            out.emplace_back(c, std::move(nw));
        }
        return out;
    }
    return std::nullopt;
}

AlgElem PresentedSuperalgebra::normal_form_word(const Word& w0) const {
    AlgElem out = zero_elem();
    std::map<Word, std::uint8_t> work;
    work[w0] = 1;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        std::uint8_t c = it->second;
        work.erase(it);
        if (c == 0) continue;
        int n = static_cast<int>(w.size());
        int pos = -1;
        for (int i = 0; i < n; ++i) {
            int g = w[i];
            int cap = gens_[g].cap;
            bool run = i + cap <= n;
            for (int k = 1; run && k < cap; ++k) run = w[i + k] == g;
            if (run || (i + 1 < n && w[i] > w[i + 1])) {
                pos = i;
                break;
            }
        }
        if (pos < 0) {
            std::vector<std::uint8_t> e(gens_.size(), 0);
            for (auto g : w) ++e[g];
            int idx = monomial_index(e);
            out[idx] = field_->add(out[idx], c);
            continue;
        }
        auto repl = step_at(w, pos);
        for (auto& [rc, rw] : *repl) {
            std::uint8_t nc = field_->mul(c, rc);
            if (!nc) continue;
            auto& slot = work[rw];
            slot = field_->add(slot, nc);
        }
    }
    return out;
}

AlgElem PresentedSuperalgebra::normal_form(const std::vector<std::string>& word) const {
    Word w;
    for (auto& nm : word) w.push_back(static_cast<std::uint8_t>(gen_index(nm)));
    return normal_form_word(w);
}

AlgElem PresentedSuperalgebra::mul(const AlgElem& a, const AlgElem& b) const {
    AlgElem out = zero_elem();
    const GaloisField& F = *field_;
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            std::uint8_t c = F.mul(a[i], b[j]);
            const std::uint8_t* prod = mono_product(i, j);
            axpy(F, out, c, Vec(prod, prod + dim_));
        }
    }
    return out;
}

Matrix PresentedSuperalgebra::left_mult_matrix(const AlgElem& a) const {
    Matrix L(field_, dim_, dim_);
    const GaloisField& F = *field_;
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            const std::uint8_t* prod = mono_product(i, j);
            for (int k = 0; k < dim_; ++k)
                if (prod[k]) L.at(k, j) = F.add(L.at(k, j), F.mul(a[i], prod[k]));
        }
    }
    return L;
}

int PresentedSuperalgebra::parity_of(const AlgElem& a) const {
    int par = -1;
    for (int m = 0; m < dim_; ++m) {
        if (a[m] == 0) continue;
        if (par < 0)
            par = parity_[m];
        else if (par != parity_[m])
            return -1;
    }
    return par;
}

// ------------------------------------------------------------ finalize ---

void PresentedSuperalgebra::finalize() {
    radix_.clear();
    for (auto& g : gens_) radix_.push_back(g.cap);
    dim_ = 1;
    for (auto r : radix_) dim_ *= r;

    parity_.resize(dim_);
    length_.resize(dim_);
    for (int m = 0; m < dim_; ++m) {
        auto e = exponents(m);
        int par = 0, len = 0;
        for (size_t g = 0; g < gens_.size(); ++g) {
            par += e[g] * gens_[g].parity;
            len += e[g];
        }
        parity_[m] = static_cast<std::uint8_t>(par % 2);
        length_[m] = len;
    }

    mult_table_.assign(static_cast<size_t>(dim_) * dim_ * dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        Word wi = monomial_word(i);
        for (int j = 0; j < dim_; ++j) {
            Word w = wi;
            Word wj = monomial_word(j);
            w.insert(w.end(), wj.begin(), wj.end());
            AlgElem prod = normal_form_word(w);
            std::copy(prod.begin(), prod.end(), mult_table_.begin() + (static_cast<size_t>(i) * dim_ + j) * dim_);
        }
    }

    // defining relations, for module validation and algebra-map checks
    relations_.clear();
    int k = ngens();
    for (int g = 0; g < k; ++g) {
        for (int h = 0; h < g; ++h) {
            const auto& rule = swap_rules_[static_cast<size_t>(g) * k + h];
            Word lhs{static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(h)};
            relations_.push_back({lhs, normal_form_word(lhs)});
            (void)rule;
        }
        Word cap(static_cast<size_t>(gens_[g].cap), static_cast<std::uint8_t>(g));
        relations_.push_back({cap, zero_elem()});
    }

    // radical filtration: J^{k+1} = sum_g g . J^k, valid because J^k is a
    // left submodule and every monomial of positive length starts with a
    // generator
    jdims_.clear();
    jbases_.clear();
    jdims_.push_back(dim_);
    jbases_.push_back(Matrix::identity(field_, dim_));
    EchelonBasis cur(field_, dim_);
    for (int m = 1; m < dim_; ++m) {
        Vec v(dim_, 0);
        v[m] = 1;
        cur.insert(std::move(v));
    }
    auto snapshot = [&](const EchelonBasis& eb) {
        Matrix b(field_, eb.size(), dim_);
        for (int i = 0; i < eb.size(); ++i)
            for (int j = 0; j < dim_; ++j) b.at(i, j) = eb.row(i)[j];
        return b;
    };
    jdims_.push_back(cur.size());
    jbases_.push_back(snapshot(cur));
    local_ = false;
    for (int step = 0; step <= dim_ + 1; ++step) {
        if (cur.size() == 0) {
            local_ = true;
            break;
        }
        EchelonBasis next(field_, dim_);
        for (int g = 0; g < k; ++g) {
            std::vector<std::uint8_t> eg(gens_.size(), 0);
            eg[g] = 1;
            int gm = monomial_index(eg);
            for (int i = 0; i < cur.size(); ++i) {
                Vec out(dim_, 0);
                const Vec& x = cur.row(i);
                for (int j = 0; j < dim_; ++j) {
                    if (x[j] == 0) continue;
                    const std::uint8_t* prod = mono_product(gm, j);
                    axpy(*field_, out, x[j], Vec(prod, prod + dim_));
                }
                next.insert(std::move(out));
            }
        }
        cur = next;
        jdims_.push_back(cur.size());
        jbases_.push_back(snapshot(cur));
        if (cur.size() == 0) {
            local_ = true;
            break;
        }
    }
    while (jdims_.size() >= 2 && jdims_.back() == 0 && jdims_[jdims_.size() - 2] == 0) {
        jdims_.pop_back();
        jbases_.pop_back();
    }

    // grading: accept the constructor's candidate only if every rule balances
    grading_.reset();
    if (grading_candidate_) {
        const auto& w = *grading_candidate_;
        auto weight_word = [&](const Word& word) {
            long t = 0;
            for (auto g : word) t += w[g];
            return t;
        };
        bool ok = true;
        for (int g = 0; g < k && ok; ++g)
            for (int h = 0; h < g && ok; ++h) {
                const auto& rule = swap_rules_[static_cast<size_t>(g) * k + h];
                long lw = w[g] + w[h];
                for (auto& [c, frag] : rule) {
                    (void)c;
                    if (weight_word(frag) != lw) ok = false;
                }
            }
        if (ok) grading_ = w;
    }
}

const Matrix& PresentedSuperalgebra::radical_power_basis(int kk) const {
    if (kk < 0 || kk >= static_cast<int>(jbases_.size()))
        throw InvalidInput("radical power out of computed range");
    return jbases_[kk];
}

const std::vector<CoproductTerm>& PresentedSuperalgebra::coproduct(int g) const {
    if (coproduct_.empty()) throw NoCoproduct();
    return coproduct_[g];
}

// ------------------------------------------------------------- checks ---

bool PresentedSuperalgebra::check_confluence() const {
    int k = ngens();
    for (int g = 0; g < k; ++g)
        for (int h = 0; h < k; ++h)
            for (int l = 0; l < k; ++l) {
                Word w{static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(h), static_cast<std::uint8_t>(l)};
                for (int pos = 0; pos < 2; ++pos) {
                    auto st = step_at(w, pos);
                    if (!st) continue;
                    AlgElem alt = zero_elem();
                    for (auto& [c, nw] : *st) {
                        AlgElem nf = normal_form_word(nw);
                        axpy(*field_, alt, c, nf);
                    }
                    if (alt != normal_form_word(w)) return false;
                }
            }
    return true;
}

bool PresentedSuperalgebra::check_associativity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const std::uint8_t* pij = mono_product(i, j);
            AlgElem ij(pij, pij + dim_);
            for (int l = 0; l < dim_; ++l) {
                const std::uint8_t* pjl = mono_product(j, l);
                AlgElem jl(pjl, pjl + dim_);
                AlgElem el = zero_elem();
                el[l] = 1;
                AlgElem ei = zero_elem();
                ei[i] = 1;
                if (mul(ij, el) != mul(ei, jl)) return false;
            }
        }
    return true;
}

bool PresentedSuperalgebra::check_parity_multiplicative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            int want = (parity_[i] + parity_[j]) % 2;
            const std::uint8_t* prod = mono_product(i, j);
            for (int m = 0; m < dim_; ++m)
                if (prod[m] && parity_[m] != want) return false;
        }
    return true;
}

// ------------------------------------------------------------ coproduct ---

Vec PresentedSuperalgebra::coproduct_of_monomial(int mono) const {
    if (coproduct_.empty()) throw NoCoproduct();
    const GaloisField& F = *field_;
    size_t d2 = static_cast<size_t>(dim_) * dim_;
    Vec acc(d2, 0);
    acc[0] = 1;  // Delta(1) = 1 (x) 1
    for (auto g : monomial_word(mono)) {
        Vec next(d2, 0);
        for (size_t idx = 0; idx < d2; ++idx) {
            if (acc[idx] == 0) continue;
            int i = static_cast<int>(idx) / dim_, j = static_cast<int>(idx) % dim_;
            for (const auto& t : coproduct_[g]) {
                std::uint8_t c = F.mul(acc[idx], t.coeff);
                // (i (x) j) * (left (x) right), all factors even here
                const std::uint8_t* pl = mono_product(i, t.left);
                const std::uint8_t* pr = mono_product(j, t.right);
                for (int a = 0; a < dim_; ++a) {
                    if (!pl[a]) continue;
                    std::uint8_t ca = F.mul(c, pl[a]);
                    for (int b = 0; b < dim_; ++b)
                        if (pr[b])
                            next[static_cast<size_t>(a) * dim_ + b] =
                                F.add(next[static_cast<size_t>(a) * dim_ + b], F.mul(ca, pr[b]));
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool PresentedSuperalgebra::check_coproduct_counit() const {
    if (coproduct_.empty()) throw NoCoproduct();
    // counit = coefficient at the identity monomial
    for (int g = 0; g < ngens(); ++g) {
        AlgElem left = zero_elem(), right = zero_elem();
        for (const auto& t : coproduct_[g]) {
            if (t.left == 0) right[t.right] = field_->add(right[t.right], t.coeff);
            if (t.right == 0) left[t.left] = field_->add(left[t.left], t.coeff);
        }
        if (left != gen_elem(g) || right != gen_elem(g)) return false;
    }
    return true;
}

bool PresentedSuperalgebra::check_coproduct_coassociative() const {
    if (coproduct_.empty()) throw NoCoproduct();
    const GaloisField& F = *field_;
    size_t d3 = static_cast<size_t>(dim_) * dim_ * dim_;
    for (int g = 0; g < ngens(); ++g) {
        Vec lhs(d3, 0), rhs(d3, 0);
        for (const auto& t : coproduct_[g]) {
            // (Delta (x) 1): expand the left slot
            Vec dl = coproduct_of_monomial(t.left);
            for (size_t idx = 0; idx < dl.size(); ++idx)
                if (dl[idx]) {
                    size_t pos = idx * dim_ + t.right;
                    lhs[pos] = F.add(lhs[pos], F.mul(t.coeff, dl[idx]));
                }
            // (1 (x) Delta): expand the right slot
            Vec dr = coproduct_of_monomial(t.right);
            for (size_t idx = 0; idx < dr.size(); ++idx)
                if (dr[idx]) {
                    size_t pos = (static_cast<size_t>(t.left) * dim_) * dim_ + idx;
                    rhs[pos] = F.add(rhs[pos], F.mul(t.coeff, dr[idx]));
                }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool PresentedSuperalgebra::check_coproduct_algebra_map() const {
    if (coproduct_.empty()) throw NoCoproduct();
    const GaloisField& F = *field_;
    size_t d2 = static_cast<size_t>(dim_) * dim_;
    std::vector<Vec> dmono;
    for (int m = 0; m < dim_; ++m) dmono.push_back(coproduct_of_monomial(m));
    for (int m1 = 0; m1 < dim_; ++m1)
        for (int m2 = 0; m2 < dim_; ++m2) {
            // Delta(m1 m2)
            Vec want(d2, 0);
            const std::uint8_t* prod = mono_product(m1, m2);
            for (int k = 0; k < dim_; ++k)
                if (prod[k]) axpy(F, want, prod[k], dmono[k]);
            // Delta(m1) Delta(m2)
            Vec got(d2, 0);
            for (size_t ia = 0; ia < d2; ++ia) {
                if (dmono[m1][ia] == 0) continue;
                int a1 = static_cast<int>(ia) / dim_, a2 = static_cast<int>(ia) % dim_;
                for (size_t ib = 0; ib < d2; ++ib) {
                    if (dmono[m2][ib] == 0) continue;
                    std::uint8_t c = F.mul(dmono[m1][ia], dmono[m2][ib]);
                    int b1 = static_cast<int>(ib) / dim_, b2 = static_cast<int>(ib) % dim_;
                    const std::uint8_t* pl = mono_product(a1, b1);
                    const std::uint8_t* pr = mono_product(a2, b2);
                    for (int x = 0; x < dim_; ++x) {
                        if (!pl[x]) continue;
                        std::uint8_t cx = F.mul(c, pl[x]);
                        for (int y = 0; y < dim_; ++y)
                            if (pr[y])
                                got[static_cast<size_t>(x) * dim_ + y] =
                                    F.add(got[static_cast<size_t>(x) * dim_ + y], F.mul(cx, pr[y]));
                    }
                }
            }
            if (want != got) return false;
        }
    return true;
}

// --------------------------------------------------------- constructors ---

AlgebraPtr PresentedSuperalgebra::make_exterior2(FieldPtr F) {
    auto A = std::shared_ptr<PresentedSuperalgebra>(new PresentedSuperalgebra());
    A->field_ = F;
    A->kind_ = "exterior2";
    A->gens_ = {{"u", 1, 2}, {"v", 1, 2}};
    A->swap_rules_.assign(4, {});
    // vu = -uv
    A->swap_rules_[1 * 2 + 0] = {{F->neg(1), Word{0, 1}}};
    A->grading_candidate_ = std::vector<long>{1, 1};
    A->finalize();
    return A;
}

AlgebraPtr PresentedSuperalgebra::make_kH(FieldPtr F, int r, int s, bool with_coproduct) {
    if (r < 0 || s < 0 || r + s < 1) throw InvalidInput("kH requires r + s >= 1");
    int p = F->p();
    auto A = std::shared_ptr<PresentedSuperalgebra>(new PresentedSuperalgebra());
    A->field_ = F;
    A->kind_ = "kH";
    A->r_ = r;
    A->s_ = s;
    std::vector<long> wts;
    for (int i = 1; i <= r; ++i) {
        A->gens_.push_back({"s" + std::to_string(i), 0, p});
        long w = 1;
        for (int k = 1; k < i; ++k) w *= p;
        wts.push_back(w);
    }
    for (int i = 1; i <= s; ++i) {
        A->gens_.push_back({"t" + std::to_string(i), 0, p});
        wts.push_back(1);
    }
    int n = A->ngens();
    A->swap_rules_.assign(static_cast<size_t>(n) * n, {});
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < g; ++h)
            A->swap_rules_[static_cast<size_t>(g) * n + h] = {
                {1, Word{static_cast<std::uint8_t>(h), static_cast<std::uint8_t>(g)}}};
    A->grading_candidate_ = wts;
    A->finalize();

    if (with_coproduct) {
        A->coproduct_.resize(n);
        WittPolynomials W;
        if (r > 0) W = witt_sum_polys(p, r);
        for (int i = 0; i < r; ++i) {
            std::vector<CoproductTerm> terms;
            for (auto& [e, c] : W.mod_p[i].terms) {
                std::vector<std::uint8_t> le(A->gens_.size(), 0), re(A->gens_.size(), 0);
                bool dead = false;
                for (int j = 0; j < r; ++j) {
                    if (e[j] >= p || e[r + j] >= p) {
                        dead = true;
                        break;
                    }
                    le[j] = static_cast<std::uint8_t>(e[j]);
                    re[j] = static_cast<std::uint8_t>(e[r + j]);
                }
                if (dead) continue;
                terms.push_back({static_cast<std::uint16_t>(A->monomial_index(le)),
                                 static_cast<std::uint16_t>(A->monomial_index(re)), c});
            }
            A->coproduct_[i] = std::move(terms);
        }
        for (int j = 0; j < s; ++j) {
            int g = r + j;
            std::vector<std::uint8_t> eg(A->gens_.size(), 0);
            eg[g] = 1;
            auto t = static_cast<std::uint16_t>(A->monomial_index(eg));
            A->coproduct_[g] = {{t, 0, 1}, {0, t, 1}, {t, t, 1}};
        }
    }
    return A;
}

AlgebraPtr PresentedSuperalgebra::make_semidirect(FieldPtr F, int r, int s,
                                                  const std::vector<std::uint8_t>& mus) {
    if (r < 0 || s < 0 || r + s < 1) throw InvalidInput("semidirect product requires r + s >= 1");
    if (static_cast<int>(mus.size()) != s) throw InvalidInput("need one mu per cyclic factor");
    if (s > 0 && !fp_linear_independent(*F, mus))
        throw NotFaithful("the action parameters are F_p-linearly dependent");
    int p = F->p();
    auto A = std::shared_ptr<PresentedSuperalgebra>(new PresentedSuperalgebra());
    A->field_ = F;
    A->kind_ = "semidirect";
    A->r_ = r;
    A->s_ = s;
    A->mus_ = mus;
    A->gens_ = {{"u", 1, 2}, {"v", 1, 2}};
    for (int i = 1; i <= r; ++i) A->gens_.push_back({"s" + std::to_string(i), 0, p});
    for (int i = 1; i <= s; ++i) A->gens_.push_back({"t" + std::to_string(i), 0, p});
    int n = A->ngens();
    const int U = 0, V = 1;
    auto S = [&](int i) { return 2 + i; };          // s_{i+1}
    auto T = [&](int j) { return 2 + r + j; };      // t_{j+1}
    A->swap_rules_.assign(static_cast<size_t>(n) * n, {});
    auto& R = A->swap_rules_;
    auto word_of = [](std::initializer_list<int> gs) {
        Word w;
        for (int g : gs) w.push_back(static_cast<std::uint8_t>(g));
        return w;
    };
    R[V * n + U] = {{F->neg(1), word_of({U, V})}};
    for (int i = 0; i < r; ++i) {
        // s_{i+1} u = u s_{i+1} + s_1^{p-1}...s_i^{p-1} v
        Word corr{V};
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < p - 1; ++k) corr.push_back(static_cast<std::uint8_t>(S(j)));
        R[S(i) * n + U] = {{1, word_of({U, S(i)})}, {1, corr}};
        R[S(i) * n + V] = {{1, word_of({V, S(i)})}};
        for (int j = 0; j < i; ++j) R[S(i) * n + S(j)] = {{1, word_of({S(j), S(i)})}};
    }
    for (int j = 0; j < s; ++j) {
        // t_{j+1} u = u t_{j+1} + mu_j v (1 + t_{j+1})
        R[T(j) * n + U] = {{1, word_of({U, T(j)})}, {mus[j], word_of({V})}, {mus[j], word_of({V, T(j)})}};
        R[T(j) * n + V] = {{1, word_of({V, T(j)})}};
        for (int i = 0; i < r; ++i) R[T(j) * n + S(i)] = {{1, word_of({S(i), T(j)})}};
        for (int i = 0; i < j; ++i) R[T(j) * n + T(i)] = {{1, word_of({T(i), T(j)})}};
    }
    if (s == 0) {
        std::vector<long> wts{1, 2};
        long w = 1;
        for (int i = 0; i < r; ++i) {
            wts.push_back(w);
            w *= p;
        }
        A->grading_candidate_ = wts;
    }
    A->finalize();
    return A;
}

AlgebraPtr PresentedSuperalgebra::make_semidirect_grouplike(FieldPtr F, int s,
                                                            const std::vector<std::uint8_t>& mus) {
    auto A = make_semidirect(F, 0, s, mus);
    const_cast<PresentedSuperalgebra&>(*A).kind_ = "semidirect_grouplike";
    return A;
}

AlgebraPtr PresentedSuperalgebra::make_exterior_times_truncated(FieldPtr F, int r, int s) {
    if (r < 0 || s < 0) throw InvalidInput("negative parameters");
    int p = F->p();
    auto A = std::shared_ptr<PresentedSuperalgebra>(new PresentedSuperalgebra());
    A->field_ = F;
    A->kind_ = "exterior_times_truncated";
    A->r_ = r;
    A->s_ = s;
    A->gens_ = {{"u", 1, 2}};
    std::vector<long> wts{1};
    for (int i = 1; i <= r; ++i) {
        A->gens_.push_back({"s" + std::to_string(i), 0, p});
        long w = 1;
        for (int k = 1; k < i; ++k) w *= p;
        wts.push_back(w);
    }
    for (int i = 1; i <= s; ++i) {
        A->gens_.push_back({"t" + std::to_string(i), 0, p});
        wts.push_back(1);
    }
    int n = A->ngens();
    A->swap_rules_.assign(static_cast<size_t>(n) * n, {});
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < g; ++h)
            A->swap_rules_[static_cast<size_t>(g) * n + h] = {
                {1, Word{static_cast<std::uint8_t>(h), static_cast<std::uint8_t>(g)}}};
    A->grading_candidate_ = wts;
    A->finalize();
    return A;
}

AlgebraPtr PresentedSuperalgebra::make_truncated_single(FieldPtr F, const std::string& name) {
    auto A = std::shared_ptr<PresentedSuperalgebra>(new PresentedSuperalgebra());
    A->field_ = F;
    A->kind_ = "truncated_single";
    A->gens_ = {{name, 0, F->p()}};
    A->swap_rules_.assign(1, {});
    A->grading_candidate_ = std::vector<long>{1};
    A->finalize();
    return A;
}

std::string PresentedSuperalgebra::descriptor() const {
    std::ostringstream os;
    os << kind_ << "|F=" << field_->spec() << "|r=" << r_ << "|s=" << s_ << "|mu=[";
    for (size_t i = 0; i < mus_.size(); ++i) {
        if (i) os << ";";
        auto c = field_->coeffs(mus_[i]);
        os << "[";
        for (size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << int(c[j]);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------- algebra map ---

void AlgebraMap::verify() const {
    if (!src->field()->same(*dst->field())) throw NotAlgebraMap("fields differ");
    if (gen_images.size() != static_cast<size_t>(src->ngens())) throw NotAlgebraMap("wrong number of images");
    for (const auto& rel : src->relations()) {
        AlgElem lhs = dst->one_elem();
        for (auto g : rel.lhs) lhs = dst->mul(lhs, gen_images[g]);
        AlgElem rhs = apply(rel.rhs);
        if (lhs != rhs)
            throw NotAlgebraMap("relation not preserved: " + src->element_string(rel.rhs));
    }
}

const std::vector<AlgElem>& AlgebraMap::monomial_images() const {
    if (mono_cache_.empty()) {
        mono_cache_.resize(src->dim());
        for (int m = 0; m < src->dim(); ++m) {
            AlgElem img = dst->one_elem();
            for (auto g : src->monomial_word(m)) img = dst->mul(img, gen_images[g]);
            mono_cache_[m] = std::move(img);
        }
    }
    return mono_cache_;
}

AlgElem AlgebraMap::apply(const AlgElem& a) const {
    const auto& images = monomial_images();
    AlgElem out = dst->zero_elem();
    for (int m = 0; m < src->dim(); ++m)
        if (a[m]) axpy(dst->F(), out, a[m], images[m]);
    return out;
}

}  // namespace supalg
