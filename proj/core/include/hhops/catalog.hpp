#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhops/lie.hpp"
#include "hhops/simplicial.hpp"

namespace hhops {

// An object together with a distinguished element at one level.
struct Representative {
  SimplicialLieObject object;
  LieElement element;  // raw construction, in display order
  int level = 0;
};

// W = (S^p ⊗ S^k) ∨ (S^q ⊗ S^l) and Σ_{(I,J), |I|=k} sgn<I,J> [s_I ip, s_J iq]
// at level k+l. p, q are sphere dimensions (>= 2); ip sits at home l, iq at home k.
Representative omega_hat(int p, int q, int k, int l);

// ip, iq of reduced degree 3 at home 3, no attaching maps.
SimplicialLieObject two_generator_object();

// ∂(witness) = sign * lhs at level 5 -> 4 in two_generator_object().
struct BoundaryIdentity {
  std::string lhs;
  std::string witness;
  int sign = 1;
};
std::vector<BoundaryIdentity> two_generator_identities();

// Weight-3 representative over (S^p ∨ S^q ∨ S^r) ⊗ S^1 at level 3, obtained by
// composing the (1,1) and (2,1) wedge representatives.
Representative omega_triple(int p, int q, int r);

// Generator of W(S) for a subset of 1-based positions: {1,2} -> "i_1_2".
std::string subset_generator_name(const std::vector<int>& subset);

// Attaching element of the generator for `subset` (ascending, 1-based, size >= 2)
// in W(S) for reduced degrees p_1..p_n.
LieElement phi_S(const DegreeVector& degrees, const std::vector<int>& subset);

// One generator per non-empty subset of size m (home m-1, degree Σp) with
// attaching element phi_S.
SimplicialLieObject higher_wp_resolution(const DegreeVector& degrees);

struct FatWedgeSummand {
  std::vector<int> subcollection;  // 1-based positions
  int sphere_dim = 0;              // N_{S'} - 1
};

struct FatWedgeSummary {
  std::vector<int> sphere_dims;
  int k = 0;
  std::vector<FatWedgeSummand> summands;
};

// Subcollections of m-k+1 spheres, each contributing S^{N_{S'}-1}.
FatWedgeSummary fat_wedge_summands(const std::vector<int>& sphere_dims, int k);

// Attaching element of i_{n+2} in the CP^n resolution (level n-1).
// gamma(1) = 1/2[i2, i2].
LieElement cpn_gamma(int n);

// Generators i_{k+2} (degree k+1, home k) for 0 <= k < n.
SimplicialLieObject cpn_resolution(int n);

// (-1)^{floor(k/2)} (k+1)!
Integer comparison_coefficient(int k);

struct ComparisonMap {
  SimplicialLieObject source;  // W((S^2)^{n+1})
  SimplicialLieObject target;  // cpn_resolution(n+1)
  LieAssignment assignment;    // i_τ -> comparison_coefficient(|τ|-1) * i_{|τ|+1}
};
ComparisonMap cpn_comparison_map(int n);

struct ChainMapViolation {
  std::string generator;
  LieElement lhs;  // d0^V f(g)
  LieElement rhs;  // f d0^W(g)
};

struct ChainMapReport {
  std::size_t checked = 0;
  std::vector<ChainMapViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// d0^V(f(g)) = f(d0^W(g)) for every CW generator of W with 1 <= home <= up_to_level.
ChainMapReport verify_chain_map(const LieAssignment& f, const SimplicialLieObject& W,
                                const SimplicialLieObject& V, int up_to_level);

// ---------------------------------------------------------------- Lie-Massey

// Defining system for <x_1, ..., x_n>; index tuples are ascending and 1-based.
struct DefiningSystem {
  FreeDgl dgl;
  std::vector<LieElement> inputs;                     // x_1..x_n
  std::map<std::vector<int>, LieElement> entries;     // x_I for 2 <= |I| < n

  const LieElement& x(const std::vector<int>& I) const;  // inputs for |I| = 1
};

// Σ over (J,K) splitting I with j_1 < k_1 of (-1)^{ε(J,K)+|x_J|+1} [x_J, x_K].
LieElement lie_massey_obstruction(const DefiningSystem& system, const std::vector<int>& I);

struct SystemDefect {
  std::vector<int> index;
  LieElement expected;  // x̃_I
  LieElement actual;    // d(x_I)
};

struct DefiningSystemReport {
  std::vector<SystemDefect> defects;
  bool inputs_are_cycles = true;
  LieElement value{BracketConvention::dgl};  // x̃ for the full tuple, normalized
  bool value_is_cycle = false;
  std::optional<LieElement> bounding_witness;  // set when the value bounds
  bool valid() const noexcept { return defects.empty() && inputs_are_cycles; }
};

DefiningSystemReport verify_defining_system(const DefiningSystem& system);

// Differential of the degree-7 generator w = (y^2 + yx^2)^:
//   table:  z + 1/2[y,y] + [yx,x] + 1/2[x2,y]
//   halved: z + 1/2[y,y] + 1/2[yx,x] + 1/2[x2,y]  (the other reading of the table)
enum class BmfVariant { table, halved };

// Free DGL of the Buijs–Moreno-Fernández example: x(1), y(3), x2(3), x3(5),
// yx(5), z(6), y2(7), w(7) with d(ab^) = 1/2[a,b].
FreeDgl bmf_fixture(BmfVariant variant = BmfVariant::table, bool include_degree_seven = true);

// alpha = 2[yx, x] + [x2, y] (degree 6).
LieElement bmf_alpha(const FreeDgl& dgl);

// <y, x, x> with x12 = x13 = 2 yx and x23 = 2 x2.
DefiningSystem bmf_defining_system(bool include_degree_seven = false);

// Odd-degree triple <x_p, x_q, x_r> with d(x_ij) = [x_i, x_j]; p, q, r odd reduced degrees.
DefiningSystem odd_triple_system(int p, int q, int r);

// Simplicial counterpart: i_p, i_q, i_r at home 0, i_ij at home 1 with
// d0 = [i_i, i_j], and [s0 i_p, i_qr] + [i_pq, s0 i_r] + [i_pr, s0 i_q] at level 1.
Representative odd_triple_simplicial_value(int p, int q, int r);

}  // namespace hhops
