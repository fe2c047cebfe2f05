#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhops/lie.hpp"

namespace hhops {

// One CW basis element: g sits at level g.home_dim with d_0 g = attaching
// and d_i g = 0 for i >= 1.
struct CwGenerator {
  GeneratorSymbol generator;
  LieElement attaching;  // level home_dim - 1; zero when home_dim == 0
  // Attaching element encodes a rational multiple of a non-Lie class (1/2[i2,i2]).
  bool rationalized = false;
  // Only s_0-iterates of this generator exist (constant prolongation).
  bool s0_image_only = false;
};

// Simplicial object in free graded Lie algebras (Whitehead convention)
// presented by a CW basis. Level s is spanned by s_I g with |I| = s - home(g).
class SimplicialLieObject {
 public:
  SimplicialLieObject() = default;
  SimplicialLieObject(std::string label, std::vector<CwGenerator> basis,
                      std::optional<int> truncation = std::nullopt, int zero_faces_added = 0);

  const std::string& label() const noexcept { return label_; }
  const std::vector<CwGenerator>& cw_basis() const noexcept { return basis_; }
  std::optional<int> truncation() const noexcept { return truncation_; }
  int zero_faces_added() const noexcept { return zero_faces_added_; }

  bool has_generator(const std::string& name) const;
  const CwGenerator& generator(const std::string& name) const;  // UnboundGenerator
  GeneratorTable generator_table() const;
  std::vector<GeneratorSymbol> generators() const;

 private:
  std::string label_;
  std::vector<CwGenerator> basis_;
  std::optional<int> truncation_;
  int zero_faces_added_ = 0;
};

// All s_I g at level s, in basis order then lexicographic word order.
std::vector<Letter> level_generators(const SimplicialLieObject& X, int s);

// d_i on a level-s element, normalized. Face indices in (s, s + zero_faces_added]
// give 0; anything else out of range is a DomainError.
LieElement face(const SimplicialLieObject& X, int s, int i, const LieElement& e);
// d_i on a single level-s letter, unnormalized.
LieElement face_of_letter(const SimplicialLieObject& X, int i, const Letter& letter);

// s_j on a level-s element (0 <= j <= s), normalized.
LieElement degeneracy(const SimplicialLieObject& X, int s, int j, const LieElement& e);

bool is_moore_chain(const SimplicialLieObject& X, int s, const LieElement& e);
bool is_moore_cycle(const SimplicialLieObject& X, int s, const LieElement& e);

SimplicialLieObject shift_T(const SimplicialLieObject& X, int n);
SimplicialLieObject wedge(const SimplicialLieObject& X, const SimplicialLieObject& Y);

// Generators placed at home n; only their s_0-iterates exist above n.
SimplicialLieObject constant_prolongation(std::vector<CwGenerator> generators, int from_level,
                                          std::string label = "const");

// One generator per input at home m with zero attaching element.
SimplicialLieObject suspension_resolution(std::span<const GeneratorSymbol> generators, int m,
                                          std::string label = "susp");

struct SpliceOptions {
  // Reject f̂ values that are not Moore chains in W.
  bool require_moore_chain = true;
};

// Z ∝ W along fhat at junction level m: W's generators of home < m, Z's
// generators (all of home >= m), and d_0 g = d_0^W(fhat(g)) for home(g) = m.
SimplicialLieObject splice(const SimplicialLieObject& Z, const SimplicialLieObject& W,
                           const LieAssignment& fhat, int m, SpliceOptions options = {});

struct IdentityViolation {
  int level = 0;
  int i = 0;
  int j = 0;
  Letter witness;
  LieElement difference;  // d_i d_j x - d_{j-1} d_i x, normalized
};

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<IdentityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// d_i d_j = d_{j-1} d_i (i < j) on every level generator with level in
// [2, max_level] and degree <= max_degree.
IdentityReport verify_simplicial_identities(const SimplicialLieObject& X, int max_level, int max_degree);

// Resolution spec files:
//   {"label", "truncation"?, "zero_faces_added"?,
//    "generators": [{"name", "reduced_degree", "home_dim", "attaching", "rationalized"?, "s0_image_only"?}]}
SimplicialLieObject parse_resolution_spec(const std::string& json_text);
std::string to_resolution_spec(const SimplicialLieObject& X);  // canonical, 2-space indent, trailing newline
SimplicialLieObject load_resolution_spec(const std::string& path);

}  // namespace hhops
