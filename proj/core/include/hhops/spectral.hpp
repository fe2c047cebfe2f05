#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhops/lie.hpp"
#include "hhops/linalg.hpp"
#include "hhops/simplicial.hpp"

namespace hhops {

// s: simplicial filtration; t: internal reduced degree.
struct Bidegree {
  int s = 0;
  int t = 1;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct SliceBounds {
  std::size_t max_dim = 4000;             // basis size of one slice
  std::size_t max_enumeration = 2'000'000;  // Lyndon words considered
};

// Some index lies in every degeneracy word of the monomial.
bool is_degenerate(const LieMonomial& m);

// Non-degenerate Hall monomials at level s in degree t (empty beyond truncation).
std::vector<LieMonomial> slice_basis(const SimplicialLieObject& X, int s, int t, const SliceBounds& bounds = {});

struct ChainSlice {
  Bidegree bidegree;
  std::vector<LieMonomial> basis;
  std::vector<LieMonomial> target_basis;  // basis of (s-1, t)
  RationalMatrix boundary;                // target_basis.size() x basis.size()
};

// ∂_s = Σ_{i=0}^{s} (-1)^i d_i modulo degenerate elements.
ChainSlice chain_slice(const SimplicialLieObject& X, int s, int t, const SliceBounds& bounds = {});

// ∂ of a level-s element in the full (unnormalized) complex, normalized.
LieElement total_boundary(const SimplicialLieObject& X, int s, const LieElement& e);

// Coordinates of a normalized element; degenerate monomials are dropped.
// DomainError when a non-degenerate monomial is outside the basis.
RationalVector slice_coordinates(const LieElement& normalized, const std::vector<LieMonomial>& basis);
LieElement from_coordinates(const RationalVector& x, const std::vector<LieMonomial>& basis);

struct HomologyReport {
  Bidegree bidegree;
  std::size_t dimension = 0;       // dim C_s
  std::size_t kernel_dim = 0;      // dim ker ∂_s
  std::size_t image_dim = 0;       // rank ∂_{s+1}
  std::size_t rational_rank = 0;   // kernel_dim - image_dim
  std::optional<std::vector<Integer>> torsion;  // elementary divisors > 1 (Lie lattice only)
  std::vector<LieMonomial> basis;
  std::vector<RationalVector> cycle_basis;
  std::vector<RationalVector> boundary_image;
};

// E^2_{s,t} of the Lie part. Integral mode reports invariant factors > 1 of
// the incoming boundary on the Hall-monomial lattice.
HomologyReport e2_report(const SimplicialLieObject& X, int s, int t, bool integral = false,
                         const SliceBounds& bounds = {});

// Bidegrees ordered by (t, s); computed on up to `threads` workers.
std::vector<HomologyReport> e2_table(const SimplicialLieObject& X, int s_lo, int s_hi, int t_lo, int t_hi,
                                     bool integral = false, const SliceBounds& bounds = {}, unsigned threads = 0);

// Level-(s+1) preimage of e under ∂ modulo degenerates, or nullopt.
std::optional<LieElement> is_boundary(const SimplicialLieObject& X, int s, int t, const LieElement& e,
                                      const SliceBounds& bounds = {});

using Grouping = std::map<std::string, std::string>;  // generator name -> group label

// Mixed monomials involve generators of at least two groups.
bool is_cross_term(const LieMonomial& m, const Grouping& grouping);

struct CrossTermSplit {
  std::vector<LieMonomial> pure;
  std::vector<LieMonomial> cross;
  bool boundary_closed = true;  // ∂ maps cross-terms into cross-terms at this slice
};

CrossTermSplit cross_term_basis(const SimplicialLieObject& X, const Grouping& grouping, int s, int t,
                                const SliceBounds& bounds = {});

// Homology of the cross-term subcomplex at (s,t).
HomologyReport cross_term_e2(const SimplicialLieObject& X, const Grouping& grouping, int s, int t,
                             const SliceBounds& bounds = {});

// Homology of a free DG Lie algebra in one degree.
struct DglSlice {
  int degree = 1;
  std::vector<LieMonomial> basis;
  std::vector<LieMonomial> target_basis;
  RationalMatrix differential;  // target_basis.size() x basis.size()
};
DglSlice dgl_slice(const FreeDgl& dgl, int degree);
std::size_t dgl_homology_rank(const FreeDgl& dgl, int degree);
// Some y with d(y) = e (e homogeneous), or nullopt.
std::optional<LieElement> dgl_boundary_witness(const FreeDgl& dgl, const LieElement& e);

}  // namespace hhops
