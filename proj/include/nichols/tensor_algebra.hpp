#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/classify.hpp"
#include "nichols/thread_pool.hpp"

namespace nichols {

using Word = std::vector<int>;  // letters 0-based

/// Element of the tensor algebra T(V): exact linear combination of words.
class TensorElement {
public:
  TensorElement() = default;
  explicit TensorElement(Int theta) : theta_(theta) {}
  static TensorElement generator(Int theta, int letter);
  static TensorElement basis_word(Int theta, Word w);

  Int theta() const { return theta_; }
  const std::map<Word, ScalarSum>& terms() const { return terms_; }
  void add_term(const Word& w, const ScalarSum& c);
  bool is_zero() const;  // exact

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement concat(const TensorElement& o) const;  // product in T(V)
  TensorElement scaled(const ScalarSum& c) const;
  TensorElement pow_concat(Int n) const;

  /// Content vector when all words agree on it; Arg error otherwise.
  IntVec degree() const;

  std::string str(Int ambient) const;

private:
  Int theta_ = 0;
  std::map<Word, ScalarSum> terms_;
};

/// sigma_k on T^n(V): swaps positions k, k+1 (0-based k) with the braiding
/// coefficient; diagonal type keeps single terms single.
TensorElement braid_generator_action(const BraidingMatrix& b, Int k, const Word& w);
TensorElement apply_braid_generator(const BraidingMatrix& b, Int k, const TensorElement& x);

/// Lexicographically smallest reduced word of a permutation (one-line form,
/// 0-based); operators compose word[0] last-to-act... word[i] applied after
/// word[i+1], matching op(w) = sigma_{w0} o sigma_{w1} o ... o sigma_{wm}.
std::vector<Int> matsumoto_lift(const std::vector<Int>& perm);
/// Every reduced word (test oracle for Matsumoto independence).
std::vector<std::vector<Int>> all_reduced_words(const std::vector<Int>& perm);
std::vector<std::vector<Int>> all_permutations(Int n);
TensorElement apply_braid_word(const BraidingMatrix& b, const std::vector<Int>& word, const TensorElement& x);

/// Quantum symmetrizer on the degree-n component, evaluated through the
/// coset factorization S_n = C_n ... C_2 with C_k = 1 + sigma_{k-1} +
/// sigma_{k-2}sigma_{k-1} + ... + sigma_1...sigma_{k-1}.
TensorElement symmetrize(const BraidingMatrix& b, const TensorElement& x);

/// All words with the given content, lexicographically ordered.
std::vector<Word> words_with_content(const IntVec& content);

/// Coefficient field order used when no specialization is supplied.
Int coefficient_order(const BraidingMatrix& b);

/// Matrix of the symmetrizer on one content block, rows/columns in
/// lexicographic word order, over Q(zeta_L).
std::vector<std::vector<CycNumber>> symmetrizer_matrix(const BraidingMatrix& b, const IntVec& content,
                                                       const SpecializationMap* spec);

Int rank_cyc(std::vector<std::vector<CycNumber>> m);  // fraction-free elimination

struct HilbertTable {
  std::map<IntVec, Int> dims;
  std::string str() const;
  bool operator==(const HilbertTable& o) const { return dims == o.dims; }
};

constexpr Int kDefaultDegreeCap = 8;
constexpr Int kDefaultBlockCap = 5000;

/// dim B^d(V) = rank of the symmetrizer block, for all degrees up to the
/// total-degree bound. Generic parameters require a specialization.
HilbertTable graded_dims(const BraidingMatrix& b, Int max_total, const SpecializationMap* spec = nullptr,
                         Int block_cap = kDefaultBlockCap, const ThreadPool* pool = nullptr);

/// [x, y]_c = xy - chi(deg x, deg y) yx on homogeneous elements.
TensorElement braided_commutator(const BraidingMatrix& b, const TensorElement& x, const TensorElement& y);

struct RootDatum {
  IntVec alpha;
  UnityScalar q_alpha;
  std::optional<Int> order;  // empty = infinite
};
RootDatum root_exponent(const BraidingMatrix& b, const IntVec& alpha);

/// Iterated braided-commutator tree attached to a positive root of a
/// classical family (family coordinates, 0-based letters).
struct RootVectorExpr {
  int leaf = -1;
  std::unique_ptr<RootVectorExpr> left, right;
  IntVec degree;
  std::string str() const;
};
RootVectorExpr root_vector_expr(SuperFamily f, Int theta, const IntVec& alpha);

/// Expansion in the input braiding's coordinates; relabel[k] maps family
/// position k to the input vertex.
TensorElement expand_root_vector(const BraidingMatrix& b, const RootVectorExpr& e,
                                 const std::vector<Int>& relabel);

struct Relation {
  std::string tag;
  IntVec degree;                         // input coordinates
  std::optional<TensorElement> element;  // present iff degree within cap
};

/// The defining relations whose hypotheses hold for b; the classification
/// must consist of type A-D components. Minimal mode reduces the power
/// relations per matched diagram.
std::vector<Relation> relations_for(const BraidingMatrix& b, const ClassifyResult& cls, bool minimal,
                                    Int degree_cap = kDefaultDegreeCap);

struct VerifyOutcome {
  bool annihilated = false;
  TensorElement witness;  // symmetrizer image when nonzero
};

/// True iff the quantum symmetrizer kills the element (exact; symbolic when
/// generics are present and no specialization is given).
VerifyOutcome verify_relation(const BraidingMatrix& b, const TensorElement& r,
                              const SpecializationMap* spec = nullptr, Int degree_cap = kDefaultDegreeCap);

}  // namespace nichols
