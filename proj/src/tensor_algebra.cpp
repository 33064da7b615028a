#include "nichols/tensor_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nichols {

// ---------------------------------------------------------------- TensorElement

TensorElement TensorElement::generator(Int theta, int letter) {
  return basis_word(theta, Word{letter});
}

TensorElement TensorElement::basis_word(Int theta, Word w) {
  TensorElement x(theta);
  x.terms_[std::move(w)] = ScalarSum(Rational(1));
  return x;
}

void TensorElement::add_term(const Word& w, const ScalarSum& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_structurally_zero()) terms_[w] = c;
    return;
  }
  it->second += c;
  if (it->second.is_structurally_zero()) terms_.erase(it);
}

bool TensorElement::is_zero() const {
  for (const auto& [w, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  if (r.theta_ == 0) r.theta_ = o.theta_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r = *this;
  if (r.theta_ == 0) r.theta_ = o.theta_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

TensorElement TensorElement::concat(const TensorElement& o) const {
  TensorElement r(theta_ ? theta_ : o.theta_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

TensorElement TensorElement::scaled(const ScalarSum& c) const {
  TensorElement r(theta_);
  for (const auto& [w, coeff] : terms_) {
    ScalarSum s = coeff * c;
    if (!s.is_structurally_zero()) r.terms_[w] = s;
  }
  return r;
}

TensorElement TensorElement::pow_concat(Int n) const {
  TensorElement r = basis_word(theta_, {});
  for (Int i = 0; i < n; ++i) r = r.concat(*this);
  return r;
}

IntVec TensorElement::degree() const {
  if (terms_.empty()) throw Error(ErrKind::Arg, "degree of the zero element");
  IntVec d(theta_, 0);
  for (int l : terms_.begin()->first) d[l] += 1;
  for (const auto& [w, c] : terms_) {
    IntVec d2(theta_, 0);
    for (int l : w) d2[l] += 1;
    if (d2 != d) throw Error(ErrKind::Arg, "element is not homogeneous");
  }
  return d;
}

std::string TensorElement::str(Int ambient) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    std::string word = "(";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) word += " ";
      word += std::to_string(w[i] + 1);
    }
    word += ")";
    if (!s.empty()) s += " + ";
    s += "[" + c.str(ambient) + "]*" + word;
  }
  return s;
}

// ---------------------------------------------------------------- braid action

TensorElement braid_generator_action(const BraidingMatrix& b, Int k, const Word& w) {
  if (k < 0 || k + 1 >= static_cast<Int>(w.size()))
    throw Error(ErrKind::Arg, "braid generator position out of range");
  Word out = w;
  std::swap(out[k], out[k + 1]);
  TensorElement r(b.theta);
  r.add_term(out, ScalarSum(b.q(w[k], w[k + 1])));
  return r;
}

TensorElement apply_braid_generator(const BraidingMatrix& b, Int k, const TensorElement& x) {
  TensorElement r(x.theta() ? x.theta() : b.theta);
  for (const auto& [w, c] : x.terms()) {
    if (k < 0 || k + 1 >= static_cast<Int>(w.size()))
      throw Error(ErrKind::Arg, "braid generator position out of range");
    Word out = w;
    std::swap(out[k], out[k + 1]);
    ScalarSum coeff = c;
    coeff.scale(b.q(w[k], w[k + 1]));
    r.add_term(out, coeff);
  }
  return r;
}

// ------------------------------------------------------------------- matsumoto

namespace {

Int inversions(const std::vector<Int>& p) {
  Int count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

// left descents: k with l(s_k p) < l(p), i.e. value k+1 sits left of value k
std::vector<Int> left_descents(const std::vector<Int>& p) {
  std::vector<Int> pos(p.size());
  for (size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<Int>(i);
  std::vector<Int> out;
  for (Int k = 0; k + 1 < static_cast<Int>(p.size()); ++k)
    if (pos[k] > pos[k + 1]) out.push_back(k);
  return out;
}

std::vector<Int> swap_values(std::vector<Int> p, Int k) {
  for (auto& v : p)
    if (v == k)
      v = k + 1;
    else if (v == k + 1)
      v = k;
  return p;
}

void reduced_words_rec(const std::vector<Int>& p, std::vector<Int>& prefix,
                       std::vector<std::vector<Int>>& out) {
  auto desc = left_descents(p);
  if (desc.empty()) {
    out.push_back(prefix);
    return;
  }
  for (Int k : desc) {
    prefix.push_back(k);
    reduced_words_rec(swap_values(p, k), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Int> matsumoto_lift(const std::vector<Int>& perm) {
  std::vector<Int> p = perm;
  std::vector<Int> word;
  while (true) {
    auto desc = left_descents(p);
    if (desc.empty()) break;
    word.push_back(desc.front());
    p = swap_values(p, desc.front());
  }
  return word;
}

std::vector<std::vector<Int>> all_reduced_words(const std::vector<Int>& perm) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> prefix;
  reduced_words_rec(perm, prefix, out);
  return out;
}

std::vector<std::vector<Int>> all_permutations(Int n) {
  std::vector<Int> p(n);
  for (Int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<Int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TensorElement apply_braid_word(const BraidingMatrix& b, const std::vector<Int>& word,
                               const TensorElement& x) {
  TensorElement r = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_braid_generator(b, *it, r);
  return r;
}

// ----------------------------------------------------------------- symmetrizer

TensorElement symmetrize(const BraidingMatrix& b, const TensorElement& x) {
  if (x.terms().empty()) return x;
  size_t n = x.terms().begin()->first.size();
  TensorElement cur = x;
  for (size_t k = 2; k <= n; ++k) {
    TensorElement out = cur;
    TensorElement acc = cur;
    for (Int j = static_cast<Int>(k) - 2; j >= 0; --j) {
      acc = apply_braid_generator(b, j, acc);
      out = out + acc;
    }
    cur = std::move(out);
  }
  return cur;
}

std::vector<Word> words_with_content(const IntVec& content) {
  Word base;
  for (size_t l = 0; l < content.size(); ++l)
    for (Int k = 0; k < content[l]; ++k) base.push_back(static_cast<int>(l));
  std::vector<Word> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Int coefficient_order(const BraidingMatrix& b) {
  Int L = 1;
  for (const auto& s : b.entries) L = lcm_int(L, s.torsion_order());
  return L;
}

std::vector<std::vector<CycNumber>> symmetrizer_matrix(const BraidingMatrix& b, const IntVec& content,
                                                       const SpecializationMap* spec) {
  SpecializationMap local;
  if (!spec) {
    if (b.has_generics())
      throw Error(ErrKind::Arg, "generic parameters present: supply a specialization");
    local.target_order = coefficient_order(b);
    spec = &local;
  }
  auto words = words_with_content(content);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  size_t m = words.size();
  auto field = CycField::get(spec->target_order);
  std::vector<std::vector<CycNumber>> mat(m, std::vector<CycNumber>(m, CycNumber::zero(field)));
  for (size_t col = 0; col < m; ++col) {
    TensorElement image = symmetrize(b, TensorElement::basis_word(b.theta, words[col]));
    for (const auto& [w, c] : image.terms()) mat[index.at(w)][col] = c.specialize(*spec);
  }
  return mat;
}

Int rank_cyc(std::vector<std::vector<CycNumber>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  CycNumber prev(Rational(1));
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    CycNumber inv_prev = prev.inverse();
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) * inv_prev;
      m[i][c] = CycNumber(Rational(0));
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<Int>(r);
}

std::string HilbertTable::str() const {
  std::vector<std::pair<IntVec, Int>> rows(dims.begin(), dims.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    Int ta = total_degree(a.first), tb = total_degree(b.first);
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  std::ostringstream out;
  for (const auto& [d, dim] : rows) out << vec_str(d) << " : " << dim << "\n";
  return out.str();
}

namespace {

void enumerate_contents(Int theta, Int max_total, IntVec& cur, Int pos, Int used,
                        std::vector<IntVec>& out) {
  if (pos == theta) {
    if (used >= 1) out.push_back(cur);
    return;
  }
  for (Int k = 0; used + k <= max_total; ++k) {
    cur[pos] = k;
    enumerate_contents(theta, max_total, cur, pos + 1, used + k, out);
  }
  cur[pos] = 0;
}

Int multinomial(const IntVec& content) {
  Int total = total_degree(content);
  Int result = 1;
  Int used = 0;
  for (Int c : content)
    for (Int k = 1; k <= c; ++k) {
      ++used;
      result = result * used / k;  // binomial running product stays integral
    }
  (void)total;
  return result;
}

}  // namespace

HilbertTable graded_dims(const BraidingMatrix& b, Int max_total, const SpecializationMap* spec,
                         Int block_cap, const ThreadPool* pool) {
  if (b.has_generics() && !spec)
    throw Error(ErrKind::Arg, "generic parameters present: supply a specialization");
  if (spec) b.check_constraints(*spec);
  std::vector<IntVec> contents;
  IntVec cur(b.theta, 0);
  enumerate_contents(b.theta, max_total, cur, 0, 0, contents);
  for (const auto& d : contents)
    if (multinomial(d) > block_cap)
      throw Error(ErrKind::Cap, "content block of dimension " + std::to_string(multinomial(d)) +
                                    " exceeds the cap " + std::to_string(block_cap));
  std::vector<Int> ranks(contents.size(), 0);
  auto work = [&](size_t i) { ranks[i] = rank_cyc(symmetrizer_matrix(b, contents[i], spec)); };
  if (pool)
    pool->parallel_for(contents.size(), work);
  else
    for (size_t i = 0; i < contents.size(); ++i) work(i);
  HilbertTable table;
  table.dims[IntVec(b.theta, 0)] = 1;
  for (size_t i = 0; i < contents.size(); ++i) table.dims[contents[i]] = ranks[i];
  return table;
}

// ------------------------------------------------------------------ hyperletters

TensorElement braided_commutator(const BraidingMatrix& b, const TensorElement& x,
                                 const TensorElement& y) {
  IntVec dx = x.degree(), dy = y.degree();
  return x.concat(y) - y.concat(x).scaled(ScalarSum(b.chi(dx, dy)));
}

RootDatum root_exponent(const BraidingMatrix& b, const IntVec& alpha) {
  RootDatum d;
  d.alpha = alpha;
  d.q_alpha = b.chi(alpha, alpha);
  d.order = d.q_alpha.multiplicative_order();
  return d;
}

std::string RootVectorExpr::str() const {
  if (leaf >= 0) return "x" + std::to_string(leaf + 1);
  return "[" + left->str() + "," + right->str() + "]";
}

namespace {

RootVectorExpr make_leaf(Int theta, int letter) {
  RootVectorExpr e;
  e.leaf = letter;
  e.degree.assign(theta, 0);
  e.degree[letter] = 1;
  return e;
}

RootVectorExpr make_bracket(RootVectorExpr l, RootVectorExpr r) {
  RootVectorExpr e;
  e.degree = vec_add(l.degree, r.degree);
  e.left = std::make_unique<RootVectorExpr>(std::move(l));
  e.right = std::make_unique<RootVectorExpr>(std::move(r));
  return e;
}

// all 1-based index arithmetic below mirrors the displayed recursions
RootVectorExpr u_expr(SuperFamily f, Int theta, Int i, Int j);

RootVectorExpr u_expr(SuperFamily f, Int theta, Int i, Int j) {
  if (i == j) return make_leaf(theta, static_cast<int>(i - 1));
  if (f == SuperFamily::D && i == theta - 2 && j == theta) {
    // x_{u_{theta-2,theta}} = [[x_{theta-2}, x_theta], x_{theta-1}]
    return make_bracket(
        make_bracket(make_leaf(theta, static_cast<int>(theta - 3)), make_leaf(theta, static_cast<int>(theta - 1))),
        make_leaf(theta, static_cast<int>(theta - 2)));
  }
  return make_bracket(make_leaf(theta, static_cast<int>(i - 1)), u_expr(f, theta, i + 1, j));
}

RootVectorExpr v_expr(SuperFamily f, Int theta, Int i, Int j) {
  if (j == theta) return make_bracket(u_expr(f, theta, i, theta), make_leaf(theta, static_cast<int>(theta - 1)));
  return make_bracket(v_expr(f, theta, i, j + 1), make_leaf(theta, static_cast<int>(j - 1)));
}

RootVectorExpr w_expr(SuperFamily f, Int theta, Int i, Int j) {
  if (j == theta - 1)
    return make_bracket(u_expr(f, theta, i, theta), make_leaf(theta, static_cast<int>(theta - 2)));
  return make_bracket(w_expr(f, theta, i, j + 1), make_leaf(theta, static_cast<int>(j - 1)));
}

RootVectorExpr wtilde_expr(SuperFamily f, Int theta, Int i) {
  return make_bracket(u_expr(f, theta, i, theta - 1), u_expr(f, theta, i, theta));
}

RootVectorExpr utilde_expr(SuperFamily f, Int theta, Int i) {
  if (i == theta - 2)
    return make_bracket(make_leaf(theta, static_cast<int>(theta - 3)), make_leaf(theta, static_cast<int>(theta - 1)));
  return make_bracket(make_leaf(theta, static_cast<int>(i - 1)), utilde_expr(f, theta, i + 1));
}

RootVectorExpr z_expr(SuperFamily f, Int theta, Int i, Int j) {
  if (j == theta - 2)
    return make_bracket(u_expr(f, theta, i, theta), make_leaf(theta, static_cast<int>(theta - 3)));
  return make_bracket(z_expr(f, theta, i, j + 1), make_leaf(theta, static_cast<int>(j - 1)));
}

RootVectorExpr ztilde_expr(SuperFamily f, Int theta, Int i) {
  return make_bracket(u_expr(f, theta, i, theta - 1), utilde_expr(f, theta, i));
}

// degree vectors (1-based helpers)
IntVec deg_u(Int theta, Int i, Int j) {
  IntVec v(theta, 0);
  for (Int t = i; t <= j; ++t) v[t - 1] = 1;
  return v;
}

}  // namespace

RootVectorExpr root_vector_expr(SuperFamily f, Int theta, const IntVec& alpha) {
  // identify alpha against the family's symbol patterns
  for (Int i = 1; i <= theta; ++i)
    for (Int j = i; j <= theta; ++j) {
      if (f == SuperFamily::D && i == theta - 1 && j == theta) continue;  // handled below
      if (alpha == deg_u(theta, i, j)) return u_expr(f, theta, i, j);
    }
  if (f == SuperFamily::B) {
    for (Int i = 1; i < theta; ++i)
      for (Int j = i + 1; j <= theta; ++j)
        if (alpha == vec_add(deg_u(theta, i, theta), deg_u(theta, j, theta))) return v_expr(f, theta, i, j);
  }
  if (f == SuperFamily::C) {
    for (Int i = 1; i < theta - 1; ++i)
      for (Int j = i + 1; j <= theta - 1; ++j)
        if (alpha == vec_add(deg_u(theta, i, theta), deg_u(theta, j, theta - 1)))
          return w_expr(f, theta, i, j);
    for (Int i = 1; i <= theta - 1; ++i)
      if (alpha == vec_add(deg_u(theta, i, theta - 1), deg_u(theta, i, theta))) return wtilde_expr(f, theta, i);
  }
  if (f == SuperFamily::D) {
    if (alpha == deg_u(theta, theta - 1, theta)) {
      // the conditional tip-pair root alpha_{theta-1} + alpha_theta
      return make_bracket(make_leaf(theta, static_cast<int>(theta - 2)),
                          make_leaf(theta, static_cast<int>(theta - 1)));
    }
    for (Int i = 1; i <= theta - 2; ++i) {
      IntVec v = deg_u(theta, i, theta - 2);
      v[theta - 1] += 1;
      if (alpha == v) return utilde_expr(f, theta, i);
    }
    for (Int i = 1; i < theta - 2; ++i)
      for (Int j = i + 1; j <= theta - 2; ++j)
        if (alpha == vec_add(deg_u(theta, i, theta), deg_u(theta, j, theta - 2))) return z_expr(f, theta, i, j);
    for (Int i = 1; i <= theta - 2; ++i)
      if (alpha == vec_add(deg_u(theta, i, theta), deg_u(theta, i, theta - 2))) return ztilde_expr(f, theta, i);
  }
  throw Error(ErrKind::Arg, "not a positive root of the family: " + vec_str(alpha));
}

TensorElement expand_root_vector(const BraidingMatrix& b, const RootVectorExpr& e,
                                 const std::vector<Int>& relabel) {
  if (e.leaf >= 0) return TensorElement::generator(b.theta, static_cast<int>(relabel[e.leaf]));
  return braided_commutator(b, expand_root_vector(b, *e.left, relabel),
                            expand_root_vector(b, *e.right, relabel));
}

// -------------------------------------------------------------------- relations

namespace {

TensorElement ad_power(const BraidingMatrix& b, Int i, Int j, Int times) {
  TensorElement xi = TensorElement::generator(b.theta, static_cast<int>(i));
  TensorElement acc = TensorElement::generator(b.theta, static_cast<int>(j));
  for (Int k = 0; k < times; ++k) acc = braided_commutator(b, xi, acc);
  return acc;
}

IntVec map_degree(const IntVec& family_deg, const std::vector<Int>& relabel, Int theta) {
  IntVec out(theta, 0);
  for (size_t k = 0; k < family_deg.size(); ++k) out[relabel[k]] = family_deg[k];
  return out;
}

bool primitive_cube(const UnityScalar& s) {
  auto ord = s.multiplicative_order();
  return ord && *ord == 3;
}

}  // namespace

std::vector<Relation> relations_for(const BraidingMatrix& b, const ClassifyResult& cls, bool minimal,
                                    Int degree_cap) {
  for (const auto& comp : cls.components) {
    if (!comp.descriptor)
      throw Error(ErrKind::Arg, "relations need every component classified (found one outside the families)");
    SuperFamily f = comp.descriptor->family;
    if (f != SuperFamily::A && f != SuperFamily::B && f != SuperFamily::C && f != SuperFamily::D)
      throw Error(ErrKind::Arg, "presentation relations cover type A-D components only");
  }
  std::vector<Relation> out;
  auto push = [&](std::string tag, const IntVec& deg, const std::function<TensorElement()>& make) {
    Relation r;
    r.tag = std::move(tag);
    r.degree = deg;
    if (total_degree(deg) <= degree_cap) r.element = make();
    out.push_back(std::move(r));
  };

  // quantum Serre relations, all ordered pairs including across components
  for (Int i = 0; i < b.theta; ++i)
    for (Int j = 0; j < b.theta; ++j) {
      if (i == j) continue;
      auto a = cartan_entry(b, i, j);
      if (!a) throw Error(ErrKind::Arg, "undefined Cartan entry at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
      Int power = 1 - *a;
      if (b.q(i, i).pow(power).is_one()) continue;
      IntVec deg(b.theta, 0);
      deg[i] = power;
      deg[j] += 1;
      push("serre(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", deg,
           [&, i, j, power] { return ad_power(b, i, j, power); });
    }

  // the odd-vertex relation between two disconnected neighbors
  for (Int k = 0; k < b.theta; ++k) {
    if (!(b.q(k, k) == minus_one())) continue;
    for (Int j = 0; j < b.theta; ++j)
      for (Int l = 0; l < b.theta; ++l) {
        if (j == k || l == k || j == l) continue;
        auto akj = cartan_entry(b, k, j), akl = cartan_entry(b, k, l);
        if (!akj || !akl || *akj != -1 || *akl != -1) continue;
        if (!(b.edge(k, j) * b.edge(k, l)).is_one()) continue;
        if (!b.edge(j, l).is_one()) continue;
        IntVec deg(b.theta, 0);
        deg[j] = 1;
        deg[k] = 2;
        deg[l] = 1;
        push("A(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")",
             deg, [&, j, k, l] {
               TensorElement inner = braided_commutator(
                   b, TensorElement::generator(b.theta, static_cast<int>(j)),
                   braided_commutator(b, TensorElement::generator(b.theta, static_cast<int>(k)),
                                      TensorElement::generator(b.theta, static_cast<int>(l))));
               return braided_commutator(b, inner, TensorElement::generator(b.theta, static_cast<int>(k)));
             });
      }
  }

  // per-component special relations and power root vectors
  for (const auto& comp : cls.components) {
    const auto& desc = *comp.descriptor;
    SuperFamily f = desc.family;
    Int n = desc.theta;
    std::vector<Int> relabel;  // family position -> input vertex
    for (Int k = 0; k < n; ++k) relabel.push_back(comp.vertices[desc.relabeling[k]]);
    auto fq = [&](Int fi, Int fj) { return b.q(relabel[fi - 1], relabel[fj - 1]); };  // 1-based

    if (f == SuperFamily::B && n >= 2) {
      UnityScalar qnn = fq(n, n);
      bool hyp = primitive_cube(qnn) && fq(n - 1, n - 1) == minus_one();
      if (hyp) {
        auto bracket_of = [&](const RootVectorExpr& x, const RootVectorExpr& y) {
          return braided_commutator(b, expand_root_vector(b, x, relabel), expand_root_vector(b, y, relabel));
        };
        {
          RootVectorExpr u = root_vector_expr(f, n, deg_u(n, n - 1, n));
          RootVectorExpr v = root_vector_expr(f, n, vec_add(deg_u(n, n - 1, n), deg_u(n, n, n)));
          IntVec deg = map_degree(vec_add(u.degree, v.degree), relabel, b.theta);
          push("B1", deg, [&] { return bracket_of(u, v); });
        }
        if (n >= 3) {
          RootVectorExpr v = root_vector_expr(f, n, vec_add(deg_u(n, n - 2, n), deg_u(n, n, n)));
          RootVectorExpr u = root_vector_expr(f, n, deg_u(n, n - 1, n));
          IntVec deg = map_degree(vec_add(v.degree, u.degree), relabel, b.theta);
          push("B2", deg, [&] { return bracket_of(v, u); });
        }
      }
    }

    if (f == SuperFamily::C && n >= 3) {
      UnityScalar qa = fq(n - 2, n - 2), qb = fq(n - 1, n - 1);
      if (qa == minus_one() && qb == minus_one()) {
        RootVectorExpr wt = wtilde_expr(f, n, n - 2);
        IntVec fam_deg = wt.degree;
        fam_deg[n - 2] += 1;
        push("C1", map_degree(fam_deg, relabel, b.theta), [&] {
          return braided_commutator(b, expand_root_vector(b, wt, relabel),
                                    TensorElement::generator(b.theta, static_cast<int>(relabel[n - 2])));
        });
      }
      if (n >= 4 && !(qa == qb) && qb == minus_one()) {
        RootVectorExpr w = w_expr(f, n, n - 3, n - 2);
        IntVec fam_deg = w.degree;
        fam_deg[n - 2] += 1;
        push("C2", map_degree(fam_deg, relabel, b.theta), [&] {
          return braided_commutator(b, expand_root_vector(b, w, relabel),
                                    TensorElement::generator(b.theta, static_cast<int>(relabel[n - 2])));
        });
      }
      if (primitive_cube(qb)) {
        RootVectorExpr w = w_expr(f, n, n - 2, n - 1);
        IntVec fam_deg = w.degree;
        fam_deg[n - 2] += 1;
        push("C3", map_degree(fam_deg, relabel, b.theta), [&] {
          return braided_commutator(b, expand_root_vector(b, w, relabel),
                                    TensorElement::generator(b.theta, static_cast<int>(relabel[n - 2])));
        });
      }
    }

    if (f == SuperFamily::D && n >= 3 && fq(n - 1, n - 1) == minus_one() && fq(n, n) == minus_one()) {
      IntVec fam_deg(n, 0);
      fam_deg[n - 3] = 1;
      fam_deg[n - 2] = 1;
      fam_deg[n - 1] = 1;
      push("D", map_degree(fam_deg, relabel, b.theta), [&] {
        TensorElement lhs = braided_commutator(
            b,
            braided_commutator(b, TensorElement::generator(b.theta, static_cast<int>(relabel[n - 3])),
                               TensorElement::generator(b.theta, static_cast<int>(relabel[n - 2]))),
            TensorElement::generator(b.theta, static_cast<int>(relabel[n - 1])));
        RootVectorExpr u = u_expr(f, n, n - 2, n);
        TensorElement rhs = expand_root_vector(b, u, relabel);
        ScalarSum coeff(fq(n - 2, n - 1) * fq(n - 1, n - 2) * fq(n - 1, n));
        return lhs + rhs.scaled(coeff);
      });
    }

    // power root vectors
    ParityFunction p0 = parity_from_diagonal(restrict_to(b, comp.vertices), desc.relabeling);
    SuperRootSet roots = build_classical(f, n, p0);
    for (const auto& alpha : roots.positive) {
      IntVec in_deg = map_degree(alpha, relabel, b.theta);
      RootDatum datum = root_exponent(b, in_deg);
      if (!datum.order || *datum.order < 2) continue;
      Int N = *datum.order;
      if (minimal) {
        if (desc.display == "B-1") {
          bool keep = alpha == deg_u(n, 1, 1) || alpha == deg_u(n, 2, 2) ||
                      alpha == vec_add(deg_u(n, 1, 2), deg_u(n, 2, 2));
          if (!keep) continue;
        } else {
          bool simple = total_degree(alpha) == 1;
          bool minus = datum.q_alpha == minus_one();
          // keep q_alpha != -1 roots, plus the simple vertices with q_ii = -1
          if (minus && !simple) continue;
        }
      }
      push("power(" + vec_str(in_deg) + "; N=" + std::to_string(N) + ")",
           [&] {
             IntVec d = in_deg;
             for (auto& x : d) x *= N;
             return d;
           }(),
           [&] {
             RootVectorExpr e = root_vector_expr(f, n, alpha);
             return expand_root_vector(b, e, relabel).pow_concat(N);
           });
    }
  }
  return out;
}

VerifyOutcome verify_relation(const BraidingMatrix& b, const TensorElement& r,
                              const SpecializationMap* spec, Int degree_cap) {
  IntVec deg = r.degree();
  if (total_degree(deg) > degree_cap)
    throw Error(ErrKind::Cap, "relation degree " + std::to_string(total_degree(deg)) +
                                  " exceeds the cap " + std::to_string(degree_cap));
  if (spec) b.check_constraints(*spec);
  TensorElement image = symmetrize(b, r);
  VerifyOutcome out;
  if (!spec) {
    out.annihilated = image.is_zero();
    if (!out.annihilated) out.witness = image;
    return out;
  }
  TensorElement witness(b.theta);
  bool zero = true;
  for (const auto& [w, c] : image.terms()) {
    CycNumber v = c.specialize(*spec);
    if (!v.is_zero()) {
      zero = false;
      witness.add_term(w, c);
    }
  }
  out.annihilated = zero;
  if (!zero) out.witness = witness;
  return out;
}

}  // namespace nichols
