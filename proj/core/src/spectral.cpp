#include "hhops/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "hhops/errors.hpp"

namespace hhops {

bool is_degenerate(const LieMonomial& m) {
  std::vector<Letter> letters;
  m.collect_letters(letters);
  IndexSet common = letters.front().word;
  for (std::size_t i = 1; i < letters.size() && !common.empty(); ++i)
    common = common.set_intersection(letters[i].word);
  return !common.empty();
}

std::vector<LieMonomial> slice_basis(const SimplicialLieObject& X, int s, int t, const SliceBounds& bounds) {
  if (s < 0 || t < 1) return {};
  if (X.truncation() && s > *X.truncation()) return {};
  std::vector<Letter> letters;
  int min_degree = t + 1;
  for (auto& l : level_generators(X, s))
    if (l.degree() <= t) {
      min_degree = std::min(min_degree, l.degree());
      letters.push_back(std::move(l));
    }
  if (letters.empty()) return {};
  std::vector<LieMonomial> out;
  for (auto& m : hall_basis_letters(letters, t, t / min_degree, bounds.max_enumeration))
    if (!is_degenerate(m)) out.push_back(std::move(m));
  if (out.size() > bounds.max_dim)
    throw BoundError("slice (" + std::to_string(s) + "," + std::to_string(t) + ") has dimension " +
                     std::to_string(out.size()) + " > max-dim " + std::to_string(bounds.max_dim));
  return out;
}

LieElement total_boundary(const SimplicialLieObject& X, int s, const LieElement& e) {
  LieElement out(e.convention());
  if (s == 0) return out;
  for (int i = 0; i <= s; ++i) out += Rational(sign_power(i)) * face(X, s, i, e);
  return out;
}

RationalVector slice_coordinates(const LieElement& normalized, const std::vector<LieMonomial>& basis) {
  RationalVector x(basis.size());
  for (const auto& [m, c] : normalized.terms()) {
    if (is_degenerate(m)) continue;
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m))
      throw DomainError("monomial " + to_string(m) + " is not in the slice basis");
    x[static_cast<std::size_t>(it - basis.begin())] += c;
  }
  return x;
}

LieElement from_coordinates(const RationalVector& x, const std::vector<LieMonomial>& basis) {
  LieElement out;
  for (std::size_t i = 0; i < x.size(); ++i) out.add_term(basis[i], x[i]);
  return out;
}

ChainSlice chain_slice(const SimplicialLieObject& X, int s, int t, const SliceBounds& bounds) {
  ChainSlice slice;
  slice.bidegree = {s, t};
  slice.basis = slice_basis(X, s, t, bounds);
  if (s >= 1) slice.target_basis = slice_basis(X, s - 1, t, bounds);
  slice.boundary = RationalMatrix(slice.target_basis.size(), slice.basis.size());
  if (slice.target_basis.empty()) return slice;
  for (std::size_t c = 0; c < slice.basis.size(); ++c) {
    LieElement db = total_boundary(X, s, LieElement::of(slice.basis[c]));
    RationalVector col = slice_coordinates(db, slice.target_basis);
    for (std::size_t r = 0; r < col.size(); ++r) slice.boundary(r, c) = col[r];
  }
  return slice;
}

namespace {

HomologyReport homology_from(const Bidegree& b, std::vector<LieMonomial> basis, const RationalMatrix& outgoing,
                             const RationalMatrix& incoming, bool integral) {
  HomologyReport r;
  r.bidegree = b;
  r.dimension = basis.size();
  r.basis = std::move(basis);
  if (outgoing.rows() == 0) {
    for (std::size_t i = 0; i < r.dimension; ++i) {
      RationalVector v(r.dimension);
      v[i] = 1;
      r.cycle_basis.push_back(std::move(v));
    }
  } else {
    r.cycle_basis = kernel_basis(outgoing);
  }
  if (incoming.cols() > 0) r.boundary_image = image_basis(incoming);
  r.kernel_dim = r.cycle_basis.size();
  r.image_dim = r.boundary_image.size();
  r.rational_rank = r.kernel_dim - r.image_dim;
  if (integral) {
    std::vector<Integer> torsion;
    if (incoming.cols() > 0) {
      auto z = to_integer_matrix(incoming);
      if (!z) throw DomainError("boundary matrix is not integral on the Hall-monomial lattice");
      for (auto& d : invariant_factors(*z))
        if (d > 1) torsion.push_back(d);
    }
    r.torsion = std::move(torsion);
  }
  return r;
}

RationalMatrix restrict(const RationalMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

struct CrossIndex {
  std::vector<std::size_t> cross, pure;
};

CrossIndex split_indices(const std::vector<LieMonomial>& basis, const Grouping& grouping) {
  CrossIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i)
    (is_cross_term(basis[i], grouping) ? idx.cross : idx.pure).push_back(i);
  return idx;
}

bool closed_on_cross(const ChainSlice& slice, const Grouping& grouping) {
  CrossIndex src = split_indices(slice.basis, grouping);
  CrossIndex dst = split_indices(slice.target_basis, grouping);
  for (auto c : src.cross)
    for (auto r : dst.pure)
      if (slice.boundary(r, c) != 0) return false;
  return true;
}

}  // namespace

HomologyReport e2_report(const SimplicialLieObject& X, int s, int t, bool integral, const SliceBounds& bounds) {
  if (s < 0 || t < 1) throw DomainError("bidegree needs s >= 0 and t >= 1");
  ChainSlice here = chain_slice(X, s, t, bounds);
  ChainSlice above = chain_slice(X, s + 1, t, bounds);
  return homology_from({s, t}, std::move(here.basis), here.boundary, above.boundary, integral);
}

std::vector<HomologyReport> e2_table(const SimplicialLieObject& X, int s_lo, int s_hi, int t_lo, int t_hi,
                                     bool integral, const SliceBounds& bounds, unsigned threads) {
  std::vector<Bidegree> cells;
  for (int t = std::max(t_lo, 1); t <= t_hi; ++t)
    for (int s = std::max(s_lo, 0); s <= s_hi; ++s) cells.push_back({s, t});
  std::vector<HomologyReport> out(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i] = e2_report(X, cells[i].s, cells[i].t, integral, bounds);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return out;
}

std::optional<LieElement> is_boundary(const SimplicialLieObject& X, int s, int t, const LieElement& e,
                                      const SliceBounds& bounds) {
  LieElement n = normalize(e);
  auto here = slice_basis(X, s, t, bounds);
  for (const auto& [m, c] : n.terms())
    if (m.degree() != t) throw DomainError("element is not of degree " + std::to_string(t));
  RationalVector target = slice_coordinates(n, here);
  if (std::all_of(target.begin(), target.end(), [](const Rational& q) { return q == 0; })) return LieElement();
  ChainSlice above = chain_slice(X, s + 1, t, bounds);
  if (above.basis.empty()) return std::nullopt;
  auto x = solve(above.boundary, target);
  if (!x) return std::nullopt;
  return from_coordinates(*x, above.basis);
}

bool is_cross_term(const LieMonomial& m, const Grouping& grouping) {
  std::vector<Letter> letters;
  m.collect_letters(letters);
  std::string first;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto it = grouping.find(letters[i].generator.name);
    if (it == grouping.end()) throw DomainError("grouping has no label for '" + letters[i].generator.name + "'");
    if (i == 0) first = it->second;
    else if (it->second != first) return true;
  }
  return false;
}

CrossTermSplit cross_term_basis(const SimplicialLieObject& X, const Grouping& grouping, int s, int t,
                                const SliceBounds& bounds) {
  ChainSlice slice = chain_slice(X, s, t, bounds);
  CrossTermSplit out;
  for (const auto& m : slice.basis) (is_cross_term(m, grouping) ? out.cross : out.pure).push_back(m);
  out.boundary_closed = closed_on_cross(slice, grouping);
  return out;
}

HomologyReport cross_term_e2(const SimplicialLieObject& X, const Grouping& grouping, int s, int t,
                             const SliceBounds& bounds) {
  ChainSlice here = chain_slice(X, s, t, bounds);
  ChainSlice above = chain_slice(X, s + 1, t, bounds);
  if (!closed_on_cross(here, grouping) || !closed_on_cross(above, grouping))
    throw DomainError("cross-term span is not closed under the boundary");
  CrossIndex h = split_indices(here.basis, grouping);
  CrossIndex lo = split_indices(here.target_basis, grouping);
  CrossIndex hi = split_indices(above.basis, grouping);
  std::vector<LieMonomial> basis;
  for (auto i : h.cross) basis.push_back(here.basis[i]);
  return homology_from({s, t}, std::move(basis), restrict(here.boundary, lo.cross, h.cross),
                       restrict(above.boundary, h.cross, hi.cross), false);
}

DglSlice dgl_slice(const FreeDgl& dgl, int degree) {
  DglSlice slice;
  slice.degree = degree;
  slice.basis = hall_basis(dgl.generators, degree, degree);
  if (degree > 1) slice.target_basis = hall_basis(dgl.generators, degree - 1, degree - 1);
  slice.differential = RationalMatrix(slice.target_basis.size(), slice.basis.size());
  if (slice.target_basis.empty()) return slice;
  for (std::size_t c = 0; c < slice.basis.size(); ++c) {
    LieElement d = dgl.d(LieElement::of(slice.basis[c], 1, BracketConvention::dgl));
    RationalVector col = slice_coordinates(d, slice.target_basis);
    for (std::size_t r = 0; r < col.size(); ++r) slice.differential(r, c) = col[r];
  }
  return slice;
}

std::size_t dgl_homology_rank(const FreeDgl& dgl, int degree) {
  DglSlice here = dgl_slice(dgl, degree);
  DglSlice above = dgl_slice(dgl, degree + 1);
  std::size_t kernel = here.basis.size() - rank(here.differential);
  return kernel - rank(above.differential);
}

std::optional<LieElement> dgl_boundary_witness(const FreeDgl& dgl, const LieElement& e) {
  LieElement n = normalize(e);
  if (n.is_zero()) return LieElement(BracketConvention::dgl);
  int degree = *n.homogeneous_degree();
  DglSlice above = dgl_slice(dgl, degree + 1);
  RationalVector target = slice_coordinates(n, above.target_basis);
  auto x = solve(above.differential, target);
  if (!x) return std::nullopt;
  LieElement out(BracketConvention::dgl);
  for (std::size_t i = 0; i < x->size(); ++i) out.add_term(above.basis[i], (*x)[i]);
  return out;
}

}  // namespace hhops
