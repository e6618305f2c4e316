#ifndef SUPALG_ALGEBRA_HPP
#define SUPALG_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supalg/field.hpp"
#include "supalg/matrix.hpp"
#include "supalg/witt.hpp"

namespace supalg {

/// A word in the generators, one entry per letter.
using Word = std::vector<std::uint8_t>;

/// Element of a presented algebra: dense coefficient vector over the PBW
/// monomial basis.
using AlgElem = Vec;

struct Generator {
    std::string name;
    int parity;  // 0 even, 1 odd
    int cap;     // g^cap = 0
};

/// Entry of the coproduct table: coefficient c on (basis monomial i) tensor
/// (basis monomial j).
struct CoproductTerm {
    std::uint16_t left, right;
    std::uint8_t coeff;
};

class PresentedSuperalgebra;
using AlgebraPtr = std::shared_ptr<const PresentedSuperalgebra>;

/// Finite-dimensional Z/2-graded algebra given by generators with nilpotency
/// exponents and straightening rules g*h -> sum of words (for g later than h
/// in the PBW order).  Every relation moves letters toward the fixed order
/// u < v < s_1 < ... < s_r < t_1 < ... < t_s, which makes the rule set a
/// terminating rewriting system; confluence is checked, not assumed.
///
/// Instances are immutable once constructed and safe to share.
class PresentedSuperalgebra : public std::enable_shared_from_this<PresentedSuperalgebra> {
  public:
    // ----- constructors for the algebras of interest -----

    /// Exterior algebra on two odd primitive generators u, v.
    static AlgebraPtr make_exterior2(FieldPtr F);

    /// Truncated polynomial algebra k[s_1..s_r, t_1..t_s]/(p-th powers),
    /// the group algebra of a product of a Frobenius kernel of height r and
    /// s cyclic factors.  With the coproduct table: s_i are comultiplied via
    /// Witt addition polynomials, t_i group-like shifted by 1.
    static AlgebraPtr make_kH(FieldPtr F, int r, int s, bool with_coproduct);

    /// Semidirect product algebra on u, v (odd) and s_1..s_r, t_1..t_s
    /// (even) with the standard faithful action, parameters mus for the
    /// cyclic factors.  Requires the mus to be F_p-linearly independent.
    static AlgebraPtr make_semidirect(FieldPtr F, int r, int s, const std::vector<std::uint8_t>& mus);

    /// The same algebra presented through group-like generators g_i = 1 + t_i
    /// (r = 0 case); kept as its own kind for reporting.
    static AlgebraPtr make_semidirect_grouplike(FieldPtr F, int s, const std::vector<std::uint8_t>& mus);

    /// Direct product of one odd exterior generator with the truncated
    /// polynomial algebra: everything commutes.
    static AlgebraPtr make_exterior_times_truncated(FieldPtr F, int r, int s);

    /// Quotient of kH keeping a single generator: k[g]/(g^p).  Used as the
    /// target of the coordinate projections that name degree-two classes.
    static AlgebraPtr make_truncated_single(FieldPtr F, const std::string& name);

    // ----- basic data -----

    const GaloisField& F() const { return *field_; }
    FieldPtr field() const { return field_; }
    const std::vector<Generator>& gens() const { return gens_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    int dim() const { return dim_; }
    const std::string& kind() const { return kind_; }
    int param_r() const { return r_; }
    int param_s() const { return s_; }
    const std::vector<std::uint8_t>& mus() const { return mus_; }

    /// Canonical text form: kind/field/(r,s)/mu coefficient vectors.
    std::string descriptor() const;

    int gen_index(const std::string& name) const;

    // ----- PBW basis -----

    /// exponent vector of basis monomial i (length ngens)
    std::vector<std::uint8_t> exponents(int mono) const;
    int monomial_index(const std::vector<std::uint8_t>& exps) const;
    Word monomial_word(int mono) const;
    int monomial_parity(int mono) const { return parity_[mono]; }
    int monomial_length(int mono) const { return length_[mono]; }
    std::string monomial_string(int mono) const;
    std::string element_string(const AlgElem& a) const;

    AlgElem zero_elem() const { return AlgElem(dim_, 0); }
    AlgElem one_elem() const;
    AlgElem gen_elem(int g) const;

    // ----- arithmetic -----

    /// Fully rewrites a word (given by generator names) into the PBW basis.
    AlgElem normal_form(const std::vector<std::string>& word) const;
    AlgElem normal_form_word(const Word& w) const;

    AlgElem mul(const AlgElem& a, const AlgElem& b) const;
    /// product of two basis monomials, from the precomputed table
    const std::uint8_t* mono_product(int i, int j) const { return &mult_table_[(static_cast<size_t>(i) * dim_ + j) * dim_]; }

    Matrix left_mult_matrix(const AlgElem& a) const;

    /// parity of a (asserts homogeneity), -1 for the zero element
    int parity_of(const AlgElem& a) const;

    // ----- structure -----

    /// The defining relations as (word, normal form of the word) pairs;
    /// includes the nilpotency relations.  Substituting generator matrices
    /// into these is how modules are validated.
    struct Relation {
        Word lhs;
        AlgElem rhs;
    };
    const std::vector<Relation>& relations() const { return relations_; }

    /// dims of J^0 = A, J, J^2, ... down to 0
    const std::vector<int>& radical_dims() const { return jdims_; }
    bool is_local() const { return local_; }
    /// row basis of J^k as a subspace of the algebra
    const Matrix& radical_power_basis(int k) const;

    bool has_coproduct() const { return !coproduct_.empty(); }
    const std::vector<CoproductTerm>& coproduct(int g) const;

    /// positive generator weights making every relation homogeneous, when
    /// such weights exist (used to block-split the bar complex)
    const std::optional<std::vector<long>>& grading() const { return grading_; }

    // ----- verification -----

    /// Local confluence on all generator triples: rewriting g h k starting
    /// at either admissible position reaches the same normal form.
    bool check_confluence() const;
    /// Full associativity of the multiplication table.
    bool check_associativity() const;
    /// parity(m1 m2) = parity(m1) + parity(m2) on all pairs
    bool check_parity_multiplicative() const;

    /// Single rewriting step applied at word position pos (if one applies);
    /// used by the confluence test.
    std::optional<std::vector<std::pair<std::uint8_t, Word>>> step_at(const Word& w, int pos) const;

    // coproduct laws (throw NoCoproduct when the table is absent)
    bool check_coproduct_counit() const;
    bool check_coproduct_coassociative() const;
    /// Delta(m1 m2) = Delta(m1) Delta(m2) on all pairs of basis monomials
    bool check_coproduct_algebra_map() const;
    /// Delta extended multiplicatively to a basis monomial, as a dense
    /// vector on the tensor-square basis (i, j) -> i * dim + j.
    Vec coproduct_of_monomial(int mono) const;

  private:
    PresentedSuperalgebra() = default;
    void finalize();  // basis, tables, radical filtration, grading check

    FieldPtr field_;
    std::string kind_;
    int r_ = 0, s_ = 0;
    std::vector<std::uint8_t> mus_;
    std::vector<Generator> gens_;
    int dim_ = 0;

    // swap_rules_[g * ngens + h] for g > h
    std::vector<std::vector<std::pair<std::uint8_t, Word>>> swap_rules_;
    std::vector<Relation> relations_;

    std::vector<int> radix_;          // cap per generator
    std::vector<std::uint8_t> parity_;
    std::vector<int> length_;
    std::vector<std::uint8_t> mult_table_;  // dim*dim*dim
    std::vector<std::vector<CoproductTerm>> coproduct_;
    std::vector<int> jdims_;
    std::vector<Matrix> jbases_;
    bool local_ = false;
    std::optional<std::vector<long>> grading_;
    std::optional<std::vector<long>> grading_candidate_;
};

/// Algebra surjection determined by generator images; verified on relations.
struct AlgebraMap {
    AlgebraPtr src;
    AlgebraPtr dst;
    std::vector<AlgElem> gen_images;
    std::string name;

    /// throws NotAlgebraMap unless every relation is preserved
    void verify() const;
    AlgElem apply(const AlgElem& a) const;
    /// images of all source basis monomials
    const std::vector<AlgElem>& monomial_images() const;

  private:
    mutable std::vector<AlgElem> mono_cache_;
};

}  // namespace supalg

#endif
