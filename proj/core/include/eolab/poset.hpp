#pragma once

// The poset of all length-n order patterns under eo_leq (the weak order,
// oriented with the reversal at the bottom and the identity at the top).
//
// This is a finite-prefix analogue of the class ordering of r.e. sets; it
// makes no claim about infinite sets, and every export says so.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eolab/pattern.hpp"

namespace eolab {

inline constexpr std::size_t kPosetHardCap = 8;

// Label attached to every poset export.
inline constexpr std::string_view kPosetAnalogueNote =
    "finite-prefix analogue: order patterns of length n under eo_leq; "
    "not a statement about infinite r.e. sets";

// All n! patterns in lexicographic order. Throws InvalidArgument unless
// 1 <= n <= kPosetHardCap.
std::vector<OrderPattern> all_patterns(std::size_t n);

// Position of p in all_patterns(p.size()).
std::size_t lexicographic_rank(const OrderPattern& p);

// Bit (j*(j-1)/2 + i) is set for every inversion (i, j). Requires n <= 11.
std::uint64_t inversion_mask(const OrderPattern& p);

class PatternPoset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<OrderPattern>& nodes() const noexcept { return nodes_; }
  const OrderPattern& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t index_of(const OrderPattern& p) const;

  // Relation lookup by node index: nodes[a] <=eo nodes[b].
  bool leq(std::size_t a, std::size_t b) const;

  // Cover edges (lower, upper), sorted.
  const std::vector<Edge>& hasse() const noexcept { return hasse_; }

  std::size_t related_pairs() const noexcept { return related_pairs_; }
  std::size_t maximum() const noexcept { return maximum_; }
  std::size_t minimum() const noexcept { return minimum_; }

 private:
  friend PatternPoset build_poset(std::size_t n, unsigned threads);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<OrderPattern> nodes_;
  std::vector<std::uint64_t> relation_;  // row-major bit matrix
  std::vector<Edge> hasse_;
  std::size_t related_pairs_ = 0;
  std::size_t maximum_ = 0;
  std::size_t minimum_ = 0;
};

// threads == 0 uses the hardware concurrency. The result does not depend on
// the thread count.
PatternPoset build_poset(std::size_t n, unsigned threads = 0);

struct Chain {
  std::vector<OrderPattern> patterns;
};

struct Antichain {
  std::vector<OrderPattern> patterns;
};

// Maximal chain from reversal(n) to identity(n), n(n-1)/2 + 1 patterns. Each
// step is a cover: it swaps ranks k and k+1 for the least k whose k+1 is
// listed before k, removing exactly the one inversion between them.
Chain max_chain(std::size_t n);

// Pairwise incomparable patterns of length n, found greedily: for each start
// node in lexicographic order, add every later-visited node (lexicographic
// order) that is incomparable with all chosen so far. Returned sorted.
// Throws NotFound when no start reaches the requested size, InvalidArgument
// when size < 2 or n is out of range.
Antichain sample_antichain(std::size_t n, std::size_t size);

bool is_chain(const Chain& chain);
bool is_antichain(const Antichain& antichain);

enum class ExportFormat { dot, json };

// Byte-stable for a fixed poset.
std::string export_poset(const PatternPoset& poset, ExportFormat format);

}  // namespace eolab
