#include "hhops/simplicial.hpp"

#include <algorithm>
#include <map>

#include "hhops/errors.hpp"

namespace hhops {

namespace {

bool word_fits(const Letter& l) {
  return l.word.empty() || l.word.elements().back() < l.level();
}

void require_level(const LieElement& e, int s, const char* where) {
  for (const auto& l : e.letters())
    if (l.level() != s || !word_fits(l))
      throw DomainError(std::string(where) + ": letter " + to_string(l) + " is not at level " +
                        std::to_string(s));
}

}  // namespace

SimplicialLieObject::SimplicialLieObject(std::string label, std::vector<CwGenerator> basis,
                                         std::optional<int> truncation, int zero_faces_added)
    : label_(std::move(label)),
      basis_(std::move(basis)),
      truncation_(truncation),
      zero_faces_added_(zero_faces_added) {
  if (zero_faces_added_ < 0) throw DomainError("negative shift count");
  if (truncation_ && *truncation_ < 0) throw DomainError("negative truncation");
  std::map<std::string, const GeneratorSymbol*> names;
  for (const auto& cw : basis_)
    if (!names.emplace(cw.generator.name, &cw.generator).second)
      throw NamingError("duplicate generator '" + cw.generator.name + "'");
  for (const auto& cw : basis_) {
    const auto& g = cw.generator;
    if (cw.attaching.is_zero()) continue;
    if (g.home_dim == 0) throw MalformedElement("generator '" + g.name + "' at level 0 cannot have an attaching element");
    if (cw.attaching.convention() != BracketConvention::whitehead)
      throw MalformedElement("attaching element of '" + g.name + "' must use the whitehead convention");
    auto d = cw.attaching.homogeneous_degree();
    if (d && *d != g.reduced_degree)
      throw MalformedElement("attaching element of '" + g.name + "' has degree " + std::to_string(*d) +
                             ", expected " + std::to_string(g.reduced_degree));
    for (const auto& l : cw.attaching.letters()) {
      auto it = names.find(l.generator.name);
      if (it == names.end() || !(*it->second == l.generator))
        throw UnboundGenerator("attaching element of '" + g.name + "' uses unknown generator '" +
                               l.generator.name + "'");
      if (l.level() != g.home_dim - 1 || !word_fits(l))
        throw MalformedElement("attaching element of '" + g.name + "' is not at level " +
                               std::to_string(g.home_dim - 1));
    }
  }
}

bool SimplicialLieObject::has_generator(const std::string& name) const {
  return std::any_of(basis_.begin(), basis_.end(), [&](const auto& cw) { return cw.generator.name == name; });
}

const CwGenerator& SimplicialLieObject::generator(const std::string& name) const {
  for (const auto& cw : basis_)
    if (cw.generator.name == name) return cw;
  throw UnboundGenerator("no generator '" + name + "' in " + label_);
}

GeneratorTable SimplicialLieObject::generator_table() const {
  auto gens = generators();
  return make_generator_table(gens);
}

std::vector<GeneratorSymbol> SimplicialLieObject::generators() const {
  std::vector<GeneratorSymbol> out;
  for (const auto& cw : basis_) out.push_back(cw.generator);
  return out;
}

std::vector<Letter> level_generators(const SimplicialLieObject& X, int s) {
  if (s < 0) throw DomainError("negative level");
  if (X.truncation() && s > *X.truncation())
    throw DomainError("level " + std::to_string(s) + " beyond truncation " + std::to_string(*X.truncation()));
  std::vector<Letter> out;
  for (const auto& cw : X.cw_basis()) {
    const int home = cw.generator.home_dim;
    if (home > s) continue;
    if (cw.s0_image_only) {
      std::vector<int> word(s - home);
      for (int i = 0; i < s - home; ++i) word[i] = i;
      out.push_back(Letter{cw.generator, DegeneracyWord(std::move(word))});
      continue;
    }
    for (const auto& part : enumerate_index_partitions(s, s - home))
      out.push_back(Letter{cw.generator, part.first()});
  }
  return out;
}

LieElement face_of_letter(const SimplicialLieObject& X, int i, const Letter& letter) {
  const auto& asc = letter.word.elements();
  std::vector<int> kept;  // descending
  int f = i;
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) {
    int j = *it;
    if (f < j) {
      kept.push_back(j - 1);
    } else if (f == j || f == j + 1) {
      // d_j s_j = d_{j+1} s_j = id
      for (++it; it != asc.rend(); ++it) kept.push_back(*it);
      return LieElement::of(Letter{letter.generator, DegeneracyWord(kept)});
    } else {
      kept.push_back(j);
      --f;
    }
  }
  if (f != 0) return LieElement();
  const CwGenerator& cw = X.generator(letter.generator.name);
  return apply_degeneracy_word(DegeneracyWord(kept), cw.attaching);
}

LieElement face(const SimplicialLieObject& X, int s, int i, const LieElement& e) {
  if (i < 0 || i > s + X.zero_faces_added())
    throw DomainError("face index " + std::to_string(i) + " out of range at level " + std::to_string(s));
  require_level(e, s, "face");
  if (i > s) return LieElement(e.convention());
  return map_letters(e, [&](const Letter& l) { return face_of_letter(X, i, l); }, true);
}

LieElement degeneracy(const SimplicialLieObject& X, int s, int j, const LieElement& e) {
  if (j < 0 || j > s) throw DomainError("degeneracy index " + std::to_string(j) + " out of range at level " + std::to_string(s));
  if (X.truncation() && s + 1 > *X.truncation()) throw DomainError("degeneracy leaves the truncation");
  require_level(e, s, "degeneracy");
  return apply_degeneracy(j, e);
}

bool is_moore_chain(const SimplicialLieObject& X, int s, const LieElement& e) {
  for (int i = 1; i <= s; ++i)
    if (!face(X, s, i, e).is_zero()) return false;
  return true;
}

bool is_moore_cycle(const SimplicialLieObject& X, int s, const LieElement& e) {
  return is_moore_chain(X, s, e) && face(X, s, 0, e).is_zero();
}

SimplicialLieObject shift_T(const SimplicialLieObject& X, int n) {
  if (n < 0) throw DomainError("shift count must be non-negative");
  return SimplicialLieObject(X.label(), X.cw_basis(), X.truncation(), X.zero_faces_added() + n);
}

SimplicialLieObject wedge(const SimplicialLieObject& X, const SimplicialLieObject& Y) {
  if (X.truncation() && Y.truncation() && *X.truncation() != *Y.truncation())
    throw DomainError("wedge of objects with different truncations");
  if (X.zero_faces_added() != Y.zero_faces_added()) throw DomainError("wedge of objects with different shifts");
  std::vector<CwGenerator> basis = X.cw_basis();
  basis.insert(basis.end(), Y.cw_basis().begin(), Y.cw_basis().end());
  std::string label = X.label().empty() ? Y.label() : Y.label().empty() ? X.label() : X.label() + " v " + Y.label();
  return SimplicialLieObject(std::move(label), std::move(basis),
                             X.truncation() ? X.truncation() : Y.truncation(), X.zero_faces_added());
}

SimplicialLieObject constant_prolongation(std::vector<CwGenerator> generators, int from_level, std::string label) {
  if (from_level < 0) throw DomainError("negative level");
  for (auto& cw : generators) {
    cw.generator.home_dim = from_level;
    cw.s0_image_only = true;
  }
  return SimplicialLieObject(std::move(label), std::move(generators));
}

SimplicialLieObject suspension_resolution(std::span<const GeneratorSymbol> generators, int m, std::string label) {
  if (m < 1) throw DomainError("suspension_resolution: m must be >= 1");
  std::vector<CwGenerator> basis;
  for (const auto& g : generators) basis.push_back(CwGenerator{GeneratorSymbol(g.name, g.reduced_degree, m), LieElement()});
  return SimplicialLieObject(std::move(label), std::move(basis));
}

SimplicialLieObject splice(const SimplicialLieObject& Z, const SimplicialLieObject& W, const LieAssignment& fhat,
                           int m, SpliceOptions options) {
  if (m < 1) throw MalformedSplice("junction level must be >= 1");
  if (W.zero_faces_added() != 0)
    throw MalformedSplice("W is shifted: junction arity is ambiguous (right zero-padding vs shifted faces)");
  std::vector<CwGenerator> basis;
  for (const auto& cw : W.cw_basis())
    if (cw.generator.home_dim < m) basis.push_back(cw);
  for (const auto& cw : Z.cw_basis()) {
    const auto& g = cw.generator;
    if (g.home_dim < m)
      throw MalformedSplice("Z generator '" + g.name + "' sits below the junction level");
    if (g.home_dim > m) {
      basis.push_back(cw);
      continue;
    }
    auto it = fhat.find(g.name);
    if (it == fhat.end()) throw MalformedSplice("f-hat has no value on junction generator '" + g.name + "'");
    const LieElement& value = it->second;
    auto d = value.homogeneous_degree();
    if (d && *d != g.reduced_degree)
      throw MalformedSplice("f-hat(" + g.name + ") has degree " + std::to_string(*d) + ", expected " +
                            std::to_string(g.reduced_degree));
    for (const auto& l : value.letters()) {
      if (l.level() != m) throw MalformedSplice("f-hat(" + g.name + ") is not a level-" + std::to_string(m) + " element");
      if (!W.has_generator(l.generator.name) || !(W.generator(l.generator.name).generator == l.generator))
        throw MalformedSplice("f-hat(" + g.name + ") uses '" + l.generator.name + "', which is not in W");
    }
    if (options.require_moore_chain && !is_moore_chain(W, m, value))
      throw MalformedSplice("f-hat(" + g.name + ") is not a Moore chain in W");
    CwGenerator junction = cw;
    junction.attaching = face(W, m, 0, value);
    basis.push_back(std::move(junction));
  }
  return SimplicialLieObject(Z.label() + " splice " + W.label(), std::move(basis), Z.truncation(),
                             Z.zero_faces_added());
}

IdentityReport verify_simplicial_identities(const SimplicialLieObject& X, int max_level, int max_degree) {
  IdentityReport report;
  int top = X.truncation() ? std::min(max_level, *X.truncation()) : max_level;
  const int pad = X.zero_faces_added();
  for (int s = 2; s <= top; ++s) {
    for (const auto& letter : level_generators(X, s)) {
      if (letter.degree() > max_degree) continue;
      LieElement x = LieElement::of(letter);
      std::vector<LieElement> faces;
      for (int j = 0; j <= s + pad; ++j) faces.push_back(face(X, s, j, x));
      for (int j = 1; j <= s + pad; ++j)
        for (int i = 0; i < j; ++i) {
          LieElement lhs = face(X, s - 1, i, faces[j]);
          LieElement rhs = face(X, s - 1, j - 1, faces[i]);
          ++report.checked;
          LieElement diff = normalize(lhs - rhs);
          if (!diff.is_zero()) report.violations.push_back({s, i, j, letter, diff});
        }
    }
  }
  return report;
}

}  // namespace hhops
