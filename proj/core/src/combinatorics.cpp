#include "hhops/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hhops/errors.hpp"
#include "hhops/scalar.hpp"

namespace hhops {

IndexSet::IndexSet(std::initializer_list<int> elements) : IndexSet(std::vector<int>(elements)) {}

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw DomainError("IndexSet: duplicate element");
  if (!elements_.empty() && elements_.front() < 0) throw DomainError("IndexSet: negative element");
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::set_difference(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::set_intersection(const IndexSet& other) const {
  std::vector<int> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  return os.str();
}

int permutation_sign(const std::vector<int>& values) {
  int inversions = 0;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a] > values[b]) ++inversions;
  return sign_power(inversions);
}

ShufflePartition::ShufflePartition(std::vector<IndexSet> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all = concatenation();
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("ShufflePartition: blocks overlap");
  sign_ = permutation_sign(all);
}

std::vector<int> ShufflePartition::concatenation() const {
  std::vector<int> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  return all;
}

DegreeVector::DegreeVector(std::initializer_list<int> degrees)
    : DegreeVector(std::vector<int>(degrees)) {}

DegreeVector::DegreeVector(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int p : degrees_)
    if (p < 1) throw DomainError("DegreeVector: entries must be >= 1");
}

int DegreeVector::sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

namespace {

// k-subsets of {base..base+n-1} in lexicographic order, each with its complement.
std::vector<ShufflePartition> subsets_with_complement(int n, int k, int base) {
  if (n < 0 || k < 0 || k > n) throw DomainError("shuffle enumeration: need 0 <= k <= n");
  std::vector<ShufflePartition> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> first, second;
    std::size_t c = 0;
    for (int i = 0; i < n; ++i) {
      if (c < pick.size() && pick[c] == i) {
        first.push_back(i + base);
        ++c;
      } else {
        second.push_back(i + base);
      }
    }
    out.emplace_back(std::vector<IndexSet>{IndexSet(std::move(first)), IndexSet(std::move(second))});
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<ShufflePartition> enumerate_shuffles(int n, int k) {
  if (n < 1) throw DomainError("enumerate_shuffles: n must be positive");
  return subsets_with_complement(n, k, 1);
}

std::vector<ShufflePartition> enumerate_restricted_shuffles(int n, int k) {
  auto all = enumerate_shuffles(n, k);
  if (n != 2 * k) return all;
  std::vector<ShufflePartition> out;
  for (auto& s : all)
    if (s.first().contains(1)) out.push_back(std::move(s));
  return out;
}

std::vector<ShufflePartition> enumerate_index_partitions(int n, int k) {
  return subsets_with_complement(n, k, 0);
}

ShufflePartition to_multi_index(const ShufflePartition& shuffle) {
  std::vector<IndexSet> blocks;
  for (const auto& b : shuffle.blocks()) {
    std::vector<int> shifted;
    for (int i : b) {
      if (i < 1) throw DomainError("to_multi_index: expected a shuffle of {1..n}");
      shifted.push_back(i - 1);
    }
    blocks.emplace_back(std::move(shifted));
  }
  return ShufflePartition(std::move(blocks));
}

int shuffle_sign(const IndexSet& I, const IndexSet& J) {
  IndexSet i_only = I.set_difference(J);
  IndexSet j_only = J.set_difference(I);
  std::vector<int> all(i_only.begin(), i_only.end());
  all.insert(all.end(), j_only.begin(), j_only.end());
  return permutation_sign(all);
}

int koszul_sign(const DegreeVector& degrees, const ShufflePartition& blocks) {
  std::vector<int> order = blocks.concatenation();
  const int n = static_cast<int>(degrees.size());
  if (static_cast<int>(order.size()) != n)
    throw DomainError("koszul_sign: blocks do not partition the degree range");
  int base = 0;
  if (n > 0) {
    int lo = *std::min_element(order.begin(), order.end());
    int hi = *std::max_element(order.begin(), order.end());
    if (lo == 1 && hi == n) base = 1;
    else if (lo == 0 && hi == n - 1) base = 0;
    else throw DomainError("koszul_sign: index outside degree range");
  }
  long exponent = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (order[a] > order[b])
        exponent += static_cast<long>(degrees[order[a] - base]) * degrees[order[b] - base] + 1;
  return sign_power(exponent);
}

IndexSet hat_shift(const IndexSet& K, bool prepend_zero) {
  std::vector<int> out;
  if (prepend_zero) out.push_back(0);
  for (int i : K) out.push_back(i + 1);
  return IndexSet(std::move(out));
}

}  // namespace hhops
