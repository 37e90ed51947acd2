#pragma once

// Order patterns and the enumeration-order relations on finite listing
// prefixes.
//
// Every relation here is evaluated on equal-length finite prefixes. Truth on
// a prefix is necessary, not sufficient, for the relation between the
// infinite listings the prefixes come from.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace eolab {

using Natural = std::uint64_t;

// An injective, nonempty finite sequence of naturals: the first n values
// of a listing.
class ListingPrefix {
 public:
  explicit ListingPrefix(std::vector<Natural> elements);
  ListingPrefix(std::initializer_list<Natural> elements)
      : ListingPrefix(std::vector<Natural>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  Natural operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Natural> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool operator==(const ListingPrefix&) const = default;

 private:
  std::vector<Natural> elements_;
};

// The relative-order fingerprint of an injective sequence: ranks[i] is the
// number of entries smaller than entry i. Always a permutation of 0..n-1.
class OrderPattern {
 public:
  using Rank = std::uint32_t;

  // Throws InvalidArgument unless ranks is a nonempty permutation of 0..n-1.
  explicit OrderPattern(std::vector<Rank> ranks);
  OrderPattern(std::initializer_list<Rank> ranks)
      : OrderPattern(std::vector<Rank>(ranks)) {}

  static OrderPattern identity(std::size_t n);
  static OrderPattern reversal(std::size_t n);

  std::size_t size() const noexcept { return ranks_.size(); }
  Rank operator[](std::size_t i) const { return ranks_[i]; }
  std::span<const Rank> ranks() const noexcept { return ranks_; }
  auto begin() const noexcept { return ranks_.begin(); }
  auto end() const noexcept { return ranks_.end(); }

  // Lexicographic on ranks.
  auto operator<=>(const OrderPattern&) const = default;

  // Digits concatenated, e.g. "102"; ranks >= 10 are comma separated.
  std::string label() const;

 private:
  std::vector<Rank> ranks_;
};

struct IndexPair {
  std::size_t i;
  std::size_t j;

  auto operator<=>(const IndexPair&) const = default;
};

// A set of index pairs (i, j), i < j < n, kept sorted lexicographically.
class PairSet {
 public:
  explicit PairSet(std::size_t n) : n_(n) {}
  PairSet(std::size_t n, std::vector<IndexPair> pairs);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  std::span<const IndexPair> pairs() const noexcept { return pairs_; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  bool contains(IndexPair p) const;
  bool is_subset_of(const PairSet& other) const;

  bool operator==(const PairSet&) const = default;

 private:
  std::size_t n_;
  std::vector<IndexPair> pairs_;
};

// Throws DuplicateElement naming the first repeated value and both positions.
OrderPattern pattern_of(std::span<const Natural> sequence);
OrderPattern pattern_of(const ListingPrefix& prefix);

PairSet ascents(const OrderPattern& p);
PairSet inversions(const OrderPattern& p);

// p <=eo q on prefixes: every ascent of p is an ascent of q. Reflexive.
// Decided by inversion-set containment, inversions(q) within inversions(p).
// Throws LengthMismatch.
bool eo_leq(const OrderPattern& p, const OrderPattern& q);

// eo_leq(p, q) and p != q.
bool eo_less(const OrderPattern& p, const OrderPattern& q);

// Least (i, j) in lexicographic order that is an ascent of p and an
// inversion of q, i.e. the smallest witness against eo_leq(p, q).
std::optional<IndexPair> first_eo_violation(const OrderPattern& p,
                                            const OrderPattern& q);

// Pairwise biconditional on order, which for patterns is equality.
bool uniform(const OrderPattern& p, const OrderPattern& q);

bool eo_equiv(const OrderPattern& p, const OrderPattern& q);

// The unique arrangement of support whose pattern is p. Throws
// InvalidArgument when |support| != |p|.
ListingPrefix apply_pattern(const OrderPattern& p,
                            const std::set<Natural>& support);

// Pattern of the first k entries. Throws InvalidArgument unless
// 1 <= k <= |p|.
OrderPattern prefix_restrict(const OrderPattern& p, std::size_t k);

std::size_t inversion_count(const OrderPattern& p);

}  // namespace eolab
