#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hhops/combinatorics.hpp"
#include "hhops/scalar.hpp"

namespace hhops {

// Which sign rules brackets obey.
//   whitehead: [a,b] = (-1)^{(a+1)(b+1)}[b,a] in reduced degrees (topological convention)
//   dgl:       [a,b] = -(-1)^{ab}[b,a] (Samelson/Quillen convention, used for DG Lie models)
enum class BracketConvention { whitehead, dgl };

struct GeneratorSymbol {
  std::string name;
  int reduced_degree = 1;
  int home_dim = 0;

  GeneratorSymbol() = default;
  GeneratorSymbol(std::string name, int reduced_degree, int home_dim = 0);

  // Sphere dimension of the class, reduced_degree + 1.
  int sphere_dim() const noexcept { return reduced_degree + 1; }

  friend auto operator<=>(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    if (auto c = a.reduced_degree <=> b.reduced_degree; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.home_dim <=> b.home_dim;
  }
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

// Canonical (ascending) form of s_I = s_{i_k}...s_{i_1}.
using DegeneracyWord = IndexSet;

// Word of s_j ∘ s_I, re-canonicalized with s_i s_j = s_{j+1} s_i (i <= j).
DegeneracyWord compose_degeneracy(int j, const DegeneracyWord& I);

// A degeneracy-decorated generator s_I g.
struct Letter {
  GeneratorSymbol generator;
  DegeneracyWord word;

  int degree() const noexcept { return generator.reduced_degree; }
  int level() const noexcept { return generator.home_dim + static_cast<int>(word.size()); }

  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return a.word <=> b.word;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Iterated bracket of letters; immutable and cheap to copy.
class LieMonomial {
 public:
  static LieMonomial leaf(Letter letter);
  static LieMonomial bracket(const LieMonomial& a, const LieMonomial& b);
  // Bracket carrying an externally declared degree (deserialized data);
  // normalize rejects it unless the declaration is additive.
  static LieMonomial bracket_with_degree(const LieMonomial& a, const LieMonomial& b, int degree);

  bool is_leaf() const noexcept;
  const Letter& letter() const;  // leaf only
  LieMonomial left() const;      // bracket only
  LieMonomial right() const;     // bracket only
  int degree() const noexcept;
  int weight() const noexcept;
  // Declared degrees additive all the way down.
  bool well_graded() const;
  void collect_letters(std::vector<Letter>& out) const;

  // Weight first, then recursive structure (leaf < bracket, letters by Letter order).
  friend std::strong_ordering operator<=>(const LieMonomial& a, const LieMonomial& b);
  friend bool operator==(const LieMonomial& a, const LieMonomial& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit LieMonomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Finite rational combination of monomials. Not normalized unless produced by
// normalize() or an operation documented as normalizing.
class LieElement {
 public:
  using Terms = std::map<LieMonomial, Rational>;

  explicit LieElement(BracketConvention convention = BracketConvention::whitehead)
      : convention_(convention) {}
  static LieElement of(const LieMonomial& m, const Rational& c = 1,
                       BracketConvention convention = BracketConvention::whitehead);
  static LieElement of(const Letter& letter, const Rational& c = 1,
                       BracketConvention convention = BracketConvention::whitehead);
  static LieElement of(const GeneratorSymbol& g, const Rational& c = 1,
                       BracketConvention convention = BracketConvention::whitehead);

  const Terms& terms() const noexcept { return terms_; }
  BracketConvention convention() const noexcept { return convention_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const LieMonomial& m) const;

  void add_term(const LieMonomial& m, const Rational& c);

  // Distinct degrees / levels / letters occurring in the element.
  std::set<int> degrees() const;
  std::set<int> levels() const;
  std::set<Letter> letters() const;
  // The unique degree; nullopt for zero; throws MalformedElement when mixed.
  std::optional<int> homogeneous_degree() const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }

  // Stored terms equal (and conventions equal unless both are zero).
  friend bool operator==(const LieElement& a, const LieElement& b);

 private:
  void adopt_convention(const LieElement& other);
  BracketConvention convention_;
  Terms terms_;
};

// Canonical Hall-basis (super-Lyndon) representative. Zero iff the input is
// zero in the free graded Lie algebra. Throws MalformedElement on monomials
// whose declared degrees are not additive.
LieElement normalize(const LieElement& e);

// Bilinear bracket without normalization.
LieElement bracket_raw(const LieElement& a, const LieElement& b);
// Bilinear bracket, then normalize.
LieElement bracket(const LieElement& a, const LieElement& b);

// normalize(a - b) == 0.
bool equivalent(const LieElement& a, const LieElement& b);

// Hall monomials of exactly the target degree and weight <= max_weight on
// plain generators (empty degeneracy words), ordered by (weight, structure).
std::vector<LieMonomial> hall_basis(std::span<const GeneratorSymbol> generators, int target_degree,
                                    int max_weight);
// Same over arbitrary letters. max_count bounds the enumeration (BoundError).
std::vector<LieMonomial> hall_basis_letters(std::span<const Letter> letters, int target_degree,
                                            int max_weight, std::size_t max_count = 2'000'000);

// Generator name -> image.
using LieAssignment = std::map<std::string, LieElement>;

// Replaces each letter by an element (bracket structure preserved). The
// result uses the convention of e.
LieElement map_letters(const LieElement& e, const std::function<LieElement(const Letter&)>& image,
                       bool normalize_result = true);

// s_j applied letterwise.
LieElement apply_degeneracy(int j, const LieElement& e);
// s_I applied letterwise (s_{i_1} first).
LieElement apply_degeneracy_word(const DegeneracyWord& I, const LieElement& e);

// Lie map determined on generators; degeneracy words pass through.
// Throws UnboundGenerator / MalformedMap.
LieElement apply_lie_map(const LieAssignment& assignment, const LieElement& e,
                         bool normalize_result = true);

// Degree -1 derivation determined on generators. In the dgl convention
// d[x,y] = [dx,y] + (-1)^{|x|}[x,dy]; in the whitehead convention the
// transported rule d[x,y] = -[dx,y] + (-1)^{|x|}[x,dy].
LieElement apply_derivation(const LieAssignment& assignment, const LieElement& e,
                            bool normalize_result = true);

// Text form in the element grammar, e.g. "[s0 ip, s1 iq] - [s1 ip, s0 iq]".
std::string to_string(const Letter& letter);
std::string to_string(const LieMonomial& m);
std::string to_string(const LieElement& e);
// LaTeX fragment: one signed term per aligned row.
std::string to_latex(const LieElement& e);

using GeneratorTable = std::map<std::string, GeneratorSymbol>;
GeneratorTable make_generator_table(std::span<const GeneratorSymbol> generators);

// Parses the element grammar
//   element  := ['+'|'-'] term (('+'|'-') term)* | '0'
//   term     := [rational '*'] monomial
//   monomial := ('s' INT)* NAME | '[' element ',' element ']'
// Throws ParseError with offset, UnboundGenerator for unknown names, and
// MalformedElement for brackets of inhomogeneous elements.
LieElement parse_element(const std::string& text, const GeneratorTable& generators,
                         BracketConvention convention = BracketConvention::whitehead);

// JSON term list [{"coeff": "p/q", "monomial": "...", "degree": d}, ...].
std::string to_term_list_json(const LieElement& e);
LieElement parse_term_list_json(const std::string& json, const GeneratorTable& generators,
                                BracketConvention convention = BracketConvention::whitehead);

}  // namespace hhops

namespace hhops {

// Free DG Lie algebra in the dgl convention: generators plus d on generators.
struct FreeDgl {
  std::vector<GeneratorSymbol> generators;
  LieAssignment differential;

  LieElement d(const LieElement& e) const { return apply_derivation(differential, e); }
  GeneratorTable table() const { return make_generator_table(generators); }
  LieElement parse(const std::string& text) const {
    return parse_element(text, table(), BracketConvention::dgl);
  }
};

}  // namespace hhops
