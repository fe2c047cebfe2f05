#include "hhops/lie.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hhops/errors.hpp"

namespace hhops {

// ---------------------------------------------------------------- symbols

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char ch : name) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  // "s<digits>" always lexes as a degeneracy operator.
  return !(name[0] == 's' && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])));
}

}  // namespace

GeneratorSymbol::GeneratorSymbol(std::string name_, int reduced_degree_, int home_dim_)
    : name(std::move(name_)), reduced_degree(reduced_degree_), home_dim(home_dim_) {
  if (!valid_name(name)) throw NamingError("invalid generator name '" + name + "'");
  if (reduced_degree < 1) throw DomainError("generator '" + name + "': reduced degree must be >= 1");
  if (home_dim < 0) throw DomainError("generator '" + name + "': negative home dimension");
}

DegeneracyWord compose_degeneracy(int j, const DegeneracyWord& I) {
  if (j < 0) throw DomainError("degeneracy index must be non-negative");
  const auto& asc = I.elements();
  std::vector<int> out;
  out.reserve(asc.size() + 1);
  // Walk the descending form s_{i_k}...s_{i_1}: pushing s_j to the right past
  // s_i with j <= i turns s_i into s_{i+1}.
  auto it = asc.rbegin();
  for (; it != asc.rend() && *it >= j; ++it) out.push_back(*it + 1);
  out.push_back(j);
  for (; it != asc.rend(); ++it) out.push_back(*it);
  return DegeneracyWord(std::move(out));
}

// ---------------------------------------------------------------- monomials

struct LieMonomial::Node {
  std::optional<Letter> letter;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int degree = 0;
  int weight = 1;
};

LieMonomial LieMonomial::leaf(Letter letter) {
  auto node = std::make_shared<Node>();
  node->degree = letter.degree();
  node->weight = 1;
  node->letter = std::move(letter);
  return LieMonomial(std::move(node));
}

LieMonomial LieMonomial::bracket(const LieMonomial& a, const LieMonomial& b) {
  return bracket_with_degree(a, b, a.degree() + b.degree());
}

LieMonomial LieMonomial::bracket_with_degree(const LieMonomial& a, const LieMonomial& b, int degree) {
  auto node = std::make_shared<Node>();
  node->left = a.node_;
  node->right = b.node_;
  node->degree = degree;
  node->weight = a.weight() + b.weight();
  return LieMonomial(std::move(node));
}

bool LieMonomial::is_leaf() const noexcept { return node_->letter.has_value(); }

const Letter& LieMonomial::letter() const {
  if (!is_leaf()) throw std::logic_error("LieMonomial::letter on a bracket");
  return *node_->letter;
}

LieMonomial LieMonomial::left() const {
  if (is_leaf()) throw std::logic_error("LieMonomial::left on a leaf");
  return LieMonomial(node_->left);
}

LieMonomial LieMonomial::right() const {
  if (is_leaf()) throw std::logic_error("LieMonomial::right on a leaf");
  return LieMonomial(node_->right);
}

int LieMonomial::degree() const noexcept { return node_->degree; }
int LieMonomial::weight() const noexcept { return node_->weight; }

bool LieMonomial::well_graded() const {
  if (is_leaf()) return degree() == letter().degree();
  LieMonomial l = left(), r = right();
  return degree() == l.degree() + r.degree() && l.well_graded() && r.well_graded();
}

void LieMonomial::collect_letters(std::vector<Letter>& out) const {
  if (is_leaf()) {
    out.push_back(letter());
    return;
  }
  left().collect_letters(out);
  right().collect_letters(out);
}

std::strong_ordering operator<=>(const LieMonomial& a, const LieMonomial& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf()) return a.letter() <=> b.letter();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  if (auto c = a.right() <=> b.right(); c != 0) return c;
  return a.degree() <=> b.degree();
}

// ---------------------------------------------------------------- elements

LieElement LieElement::of(const LieMonomial& m, const Rational& c, BracketConvention convention) {
  LieElement e(convention);
  e.add_term(m, c);
  return e;
}

LieElement LieElement::of(const Letter& letter, const Rational& c, BracketConvention convention) {
  return of(LieMonomial::leaf(letter), c, convention);
}

LieElement LieElement::of(const GeneratorSymbol& g, const Rational& c, BracketConvention convention) {
  return of(Letter{g, {}}, c, convention);
}

Rational LieElement::coefficient(const LieMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const LieMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();  // mpq_class(num, den) does not reduce
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<int> LieElement::degrees() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.degree());
  return out;
}

std::set<int> LieElement::levels() const {
  std::set<int> out;
  for (const auto& l : letters()) out.insert(l.level());
  return out;
}

std::set<Letter> LieElement::letters() const {
  std::vector<Letter> all;
  for (const auto& [m, c] : terms_) m.collect_letters(all);
  return std::set<Letter>(all.begin(), all.end());
}

std::optional<int> LieElement::homogeneous_degree() const {
  auto ds = degrees();
  if (ds.empty()) return std::nullopt;
  if (ds.size() > 1) throw MalformedElement("element is not homogeneous");
  return *ds.begin();
}

void LieElement::adopt_convention(const LieElement& other) {
  if (other.terms_.empty()) return;
  if (terms_.empty()) {
    convention_ = other.convention_;
    return;
  }
  if (convention_ != other.convention_) throw DomainError("mixing bracket conventions");
}

LieElement& LieElement::operator+=(const LieElement& other) {
  adopt_convention(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  adopt_convention(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational factor = c;
  factor.canonicalize();
  for (auto& [m, coeff] : terms_) coeff *= factor;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  if (a.terms_ != b.terms_) return false;
  return a.terms_.empty() || a.convention_ == b.convention_;
}

// ---------------------------------------------------------------- normal form

namespace {

using Word = std::vector<int>;
using Poly = std::map<Word, Rational>;

void add_into(Poly& p, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Letters of one normalization call, indexed in Letter order so that word
// comparison is the lexicographic order on letters.
struct Alphabet {
  std::vector<Letter> letters;
  std::map<Letter, int> index;

  explicit Alphabet(const std::set<Letter>& set) : letters(set.begin(), set.end()) {
    for (std::size_t i = 0; i < letters.size(); ++i) index.emplace(letters[i], static_cast<int>(i));
  }
  int degree(const Word& w) const {
    int d = 0;
    for (int x : w) d += letters[x].degree();
    return d;
  }
};

// Embedding of the free Lie algebra into the tensor algebra.
class Expander {
 public:
  Expander(const Alphabet& alphabet, BracketConvention convention)
      : alphabet_(alphabet), convention_(convention) {}

  const Poly& expand(const LieMonomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Poly out;
    if (m.is_leaf()) {
      out.emplace(Word{alphabet_.index.at(m.letter())}, Rational(1));
    } else {
      LieMonomial a = m.left(), b = m.right();
      const Poly& pa = expand(a);
      const Poly& pb = expand(b);
      int da = a.degree(), db = b.degree();
      Rational s = (convention_ == BracketConvention::whitehead) ? Rational(sign_power(da)) : Rational(1);
      Rational swap = -s * sign_power(static_cast<long>(da) * db);
      for (const auto& [u, cu] : pa)
        for (const auto& [v, cv] : pb) {
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          Word vu = v;
          vu.insert(vu.end(), u.begin(), u.end());
          add_into(out, uv, s * cu * cv);
          add_into(out, vu, swap * cu * cv);
        }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

 private:
  const Alphabet& alphabet_;
  BracketConvention convention_;
  std::map<LieMonomial, Poly> memo_;
};

// Strictly smaller than each proper suffix.
bool is_lyndon(const Word& w, std::size_t from, std::size_t to) {
  if (to <= from) return false;
  for (std::size_t i = from + 1; i < to; ++i) {
    if (!std::lexicographical_compare(w.begin() + from, w.begin() + to, w.begin() + i, w.begin() + to))
      return false;
  }
  return true;
}

LieMonomial standard_bracketing(const Word& w, std::size_t from, std::size_t to, const Alphabet& a) {
  if (to - from == 1) return LieMonomial::leaf(a.letters[w[from]]);
  // Right factor: the longest proper Lyndon suffix.
  std::size_t split = from + 1;
  while (!is_lyndon(w, split, to)) ++split;
  return LieMonomial::bracket(standard_bracketing(w, from, split, a), standard_bracketing(w, split, to, a));
}

// Hall monomial whose tensor expansion has w as its least word.
LieMonomial basis_monomial(const Word& w, const Alphabet& a) {
  if (is_lyndon(w, 0, w.size())) return standard_bracketing(w, 0, w.size(), a);
  std::size_t half = w.size() / 2;
  if (w.size() % 2 == 0 && std::equal(w.begin(), w.begin() + half, w.begin() + half) &&
      is_lyndon(w, 0, half)) {
    Word u(w.begin(), w.begin() + half);
    if (a.degree(u) % 2 != 0) {
      LieMonomial pu = standard_bracketing(u, 0, half, a);
      return LieMonomial::bracket(pu, pu);
    }
  }
  throw std::logic_error("normalize: least word is not a Hall leading word (input not a Lie element?)");
}

}  // namespace

LieElement normalize(const LieElement& e) {
  if (e.is_zero()) return LieElement(e.convention());
  for (const auto& [m, c] : e.terms())
    if (!m.well_graded()) throw MalformedElement("bracket with non-additive declared degree: " + to_string(m));
  Alphabet alphabet(e.letters());
  Expander expander(alphabet, e.convention());
  Poly poly;
  for (const auto& [m, c] : e.terms())
    for (const auto& [w, cw] : expander.expand(m)) add_into(poly, w, c * cw);

  LieElement out(e.convention());
  while (!poly.empty()) {
    const Word w = poly.begin()->first;
    const Rational c = poly.begin()->second;
    LieMonomial b = basis_monomial(w, alphabet);
    const Poly& pb = expander.expand(b);
    auto lead = pb.find(w);
    if (lead == pb.end()) throw std::logic_error("normalize: basis monomial lost its leading word");
    Rational lambda = c / lead->second;
    out.add_term(b, lambda);
    for (const auto& [u, cu] : pb) add_into(poly, u, -lambda * cu);
  }
  return out;
}

LieElement bracket_raw(const LieElement& a, const LieElement& b) {
  if (!a.is_zero() && !b.is_zero() && a.convention() != b.convention())
    throw DomainError("bracket of elements with different conventions");
  BracketConvention conv = a.is_zero() ? b.convention() : a.convention();
  LieElement out(conv);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(LieMonomial::bracket(ma, mb), ca * cb);
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) { return normalize(bracket_raw(a, b)); }

bool equivalent(const LieElement& a, const LieElement& b) {
  LieElement diff = a;
  diff -= b;
  return normalize(diff).is_zero();
}

// ---------------------------------------------------------------- Hall basis

std::vector<LieMonomial> hall_basis_letters(std::span<const Letter> letters, int target_degree,
                                            int max_weight, std::size_t max_count) {
  if (target_degree < 1 || max_weight < 1) return {};
  std::set<Letter> unique(letters.begin(), letters.end());
  Alphabet alphabet(unique);

  // Lyndon words by degree via standard factorization w = uv: u < v Lyndon and
  // either u is a letter or the right standard factor of u is >= v.
  struct Entry {
    Word word;
    std::size_t split;  // length of the left standard factor, 0 for letters
  };
  std::vector<std::vector<Entry>> by_degree(target_degree + 1);
  std::size_t produced = 0;
  for (int d = 1; d <= target_degree; ++d) {
    auto& bucket = by_degree[d];
    for (std::size_t i = 0; i < alphabet.letters.size(); ++i)
      if (alphabet.letters[i].degree() == d) bucket.push_back({Word{static_cast<int>(i)}, 0});
    for (int d1 = 1; d1 < d; ++d1) {
      for (const auto& u : by_degree[d1]) {
        for (const auto& v : by_degree[d - d1]) {
          if (static_cast<int>(u.word.size() + v.word.size()) > max_weight) continue;
          if (!(u.word < v.word)) continue;
          if (u.split != 0) {
            Word right(u.word.begin() + static_cast<std::ptrdiff_t>(u.split), u.word.end());
            if (right < v.word) continue;
          }
          Word w = u.word;
          w.insert(w.end(), v.word.begin(), v.word.end());
          bucket.push_back({std::move(w), u.word.size()});
          if (++produced > max_count) throw BoundError("Hall enumeration exceeded its configured bound");
        }
      }
    }
  }

  std::vector<LieMonomial> out;
  for (const auto& e : by_degree[target_degree])
    if (static_cast<int>(e.word.size()) <= max_weight)
      out.push_back(standard_bracketing(e.word, 0, e.word.size(), alphabet));
  if (target_degree % 2 == 0 && (target_degree / 2) % 2 == 1)
    for (const auto& e : by_degree[target_degree / 2])
      if (2 * static_cast<int>(e.word.size()) <= max_weight) {
        LieMonomial pu = standard_bracketing(e.word, 0, e.word.size(), alphabet);
        out.push_back(LieMonomial::bracket(pu, pu));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LieMonomial> hall_basis(std::span<const GeneratorSymbol> generators, int target_degree,
                                    int max_weight) {
  std::vector<Letter> letters;
  for (const auto& g : generators) letters.push_back(Letter{g, {}});
  return hall_basis_letters(letters, target_degree, max_weight);
}

// ---------------------------------------------------------------- maps

namespace {

LieElement map_monomial(const LieMonomial& m, const std::function<LieElement(const Letter&)>& image) {
  if (m.is_leaf()) return image(m.letter());
  return bracket_raw(map_monomial(m.left(), image), map_monomial(m.right(), image));
}

}  // namespace

LieElement map_letters(const LieElement& e, const std::function<LieElement(const Letter&)>& image,
                       bool normalize_result) {
  LieElement out(e.convention());
  for (const auto& [m, c] : e.terms()) out += c * map_monomial(m, image);
  return normalize_result ? normalize(out) : out;
}

LieElement apply_degeneracy(int j, const LieElement& e) {
  return map_letters(
      e,
      [&](const Letter& l) {
        if (j > l.level()) throw DomainError("degeneracy index out of range");
        return LieElement::of(Letter{l.generator, compose_degeneracy(j, l.word)}, 1, e.convention());
      },
      true);
}

LieElement apply_degeneracy_word(const DegeneracyWord& I, const LieElement& e) {
  if (I.empty()) return e;
  return map_letters(
      e,
      [&](const Letter& l) {
        DegeneracyWord w = l.word;
        int level = l.level();
        for (int j : I) {
          if (j > level) throw DomainError("degeneracy index out of range");
          w = compose_degeneracy(j, w);
          ++level;
        }
        return LieElement::of(Letter{l.generator, std::move(w)}, 1, e.convention());
      },
      false);
}

namespace {

const LieElement& lookup(const LieAssignment& assignment, const GeneratorSymbol& g) {
  auto it = assignment.find(g.name);
  if (it == assignment.end()) throw UnboundGenerator("no image for generator '" + g.name + "'");
  return it->second;
}

}  // namespace

LieElement apply_lie_map(const LieAssignment& assignment, const LieElement& e, bool normalize_result) {
  return map_letters(
      e,
      [&](const Letter& l) {
        const LieElement& value = lookup(assignment, l.generator);
        auto d = value.homogeneous_degree();
        if (d && *d != l.degree())
          throw MalformedMap("image of '" + l.generator.name + "' has degree " + std::to_string(*d) +
                             ", expected " + std::to_string(l.degree()));
        return apply_degeneracy_word(l.word, value);
      },
      normalize_result);
}

namespace {

LieElement derive(const LieMonomial& m, const LieAssignment& assignment, BracketConvention conv) {
  if (m.is_leaf()) {
    const Letter& l = m.letter();
    const LieElement& value = lookup(assignment, l.generator);
    auto d = value.homogeneous_degree();
    if (d && *d != l.degree() - 1)
      throw MalformedMap("derivation image of '" + l.generator.name + "' has degree " +
                         std::to_string(*d) + ", expected " + std::to_string(l.degree() - 1));
    return apply_degeneracy_word(l.word, value);
  }
  LieMonomial a = m.left(), b = m.right();
  LieElement ea = LieElement::of(a, 1, conv), eb = LieElement::of(b, 1, conv);
  Rational first = (conv == BracketConvention::dgl) ? Rational(1) : Rational(-1);
  LieElement out(conv);
  out += first * bracket_raw(derive(a, assignment, conv), eb);
  out += Rational(sign_power(a.degree())) * bracket_raw(ea, derive(b, assignment, conv));
  return out;
}

}  // namespace

LieElement apply_derivation(const LieAssignment& assignment, const LieElement& e, bool normalize_result) {
  LieElement out(e.convention());
  for (const auto& [m, c] : e.terms()) out += c * derive(m, assignment, e.convention());
  return normalize_result ? normalize(out) : out;
}

GeneratorTable make_generator_table(std::span<const GeneratorSymbol> generators) {
  GeneratorTable table;
  for (const auto& g : generators)
    if (!table.emplace(g.name, g).second) throw NamingError("duplicate generator '" + g.name + "'");
  return table;
}

}  // namespace hhops
