#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hhops {

// Strictly ascending set of non-negative integers.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  explicit IndexSet(std::vector<int> elements);  // sorts; rejects duplicates and negatives

  const std::vector<int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int i) const;
  int operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  IndexSet set_union(const IndexSet& other) const;
  IndexSet set_difference(const IndexSet& other) const;
  IndexSet set_intersection(const IndexSet& other) const;

  // "0,2,3"
  std::string to_string() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> elements_;
};

// Ordered tuple of pairwise-disjoint ascending blocks.
class ShufflePartition {
 public:
  explicit ShufflePartition(std::vector<IndexSet> blocks);

  const std::vector<IndexSet>& blocks() const noexcept { return blocks_; }
  const IndexSet& first() const { return blocks_.at(0); }
  const IndexSet& second() const { return blocks_.at(1); }
  // Concatenation of the blocks, i.e. the shuffle permutation in one-line form.
  std::vector<int> concatenation() const;
  // Sign of the permutation sorting the concatenation.
  int sign() const noexcept { return sign_; }

  friend bool operator==(const ShufflePartition& a, const ShufflePartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<IndexSet> blocks_;
  int sign_ = 1;
};

// Positive reduced degrees p_i.
class DegreeVector {
 public:
  DegreeVector() = default;
  DegreeVector(std::initializer_list<int> degrees);
  explicit DegreeVector(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int sum() const;

 private:
  std::vector<int> degrees_;
};

// All (k, n-k)-shuffles of {1..n}, lexicographic in the first block.
std::vector<ShufflePartition> enumerate_shuffles(int n, int k);

// As enumerate_shuffles, but for n == 2k only those with 1 in the first block.
std::vector<ShufflePartition> enumerate_restricted_shuffles(int n, int k);

// All (I, J) with |I| = k partitioning {0..n-1}; lexicographic in I.
std::vector<ShufflePartition> enumerate_index_partitions(int n, int k);

// Order-preserving shift {1..n} -> {0..n-1} of every block.
ShufflePartition to_multi_index(const ShufflePartition& shuffle);

// Sign of the permutation sorting values (all distinct).
int permutation_sign(const std::vector<int>& values);

// sgn<I, J>: the overlap I ∩ J is removed first.
int shuffle_sign(const IndexSet& I, const IndexSet& J);

// gsn: product over inverted pairs (a before b, a > b) of (-1)^{p_a p_b + 1}.
// Block entries index degrees either 1-based (ground {1..n}) or 0-based
// (ground {0..n-1}); the base is inferred from the union of the blocks.
int koszul_sign(const DegreeVector& degrees, const ShufflePartition& blocks);

// Every element incremented; 0 prepended when requested.
IndexSet hat_shift(const IndexSet& K, bool prepend_zero);

}  // namespace hhops
