#include "eolab/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "eolab/error.hpp"

namespace eolab {

namespace {

void check_injective(std::span<const Natural> sequence) {
  if (sequence.empty()) {
    throw InvalidArgument("empty sequence: prefixes must have length >= 1");
  }
  std::unordered_map<Natural, std::size_t> seen;
  seen.reserve(sequence.size());
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    auto [it, inserted] = seen.emplace(sequence[pos], pos);
    if (!inserted) {
      throw DuplicateElement(sequence[pos], it->second, pos);
    }
  }
}

void check_same_length(const OrderPattern& p, const OrderPattern& q) {
  if (p.size() != q.size()) {
    throw LengthMismatch(p.size(), q.size());
  }
}

}  // namespace

ListingPrefix::ListingPrefix(std::vector<Natural> elements)
    : elements_(std::move(elements)) {
  check_injective(elements_);
}

OrderPattern::OrderPattern(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) {
    throw InvalidArgument("empty pattern: patterns must have length >= 1");
  }
  std::vector<bool> seen(ranks_.size(), false);
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    const Rank r = ranks_[i];
    if (r >= ranks_.size() || seen[r]) {
      throw InvalidArgument("not a permutation of 0.." +
                            std::to_string(ranks_.size() - 1) +
                            ": bad rank " + std::to_string(r) +
                            " at position " + std::to_string(i));
    }
    seen[r] = true;
  }
}

OrderPattern OrderPattern::identity(std::size_t n) {
  std::vector<Rank> ranks(n);
  std::iota(ranks.begin(), ranks.end(), Rank{0});
  return OrderPattern(std::move(ranks));
}

OrderPattern OrderPattern::reversal(std::size_t n) {
  std::vector<Rank> ranks(n);
  std::iota(ranks.rbegin(), ranks.rend(), Rank{0});
  return OrderPattern(std::move(ranks));
}

std::string OrderPattern::label() const {
  std::ostringstream os;
  const bool wide = ranks_.size() > 10;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (wide && i > 0) os << ',';
    os << ranks_[i];
  }
  return os.str();
}

PairSet::PairSet(std::size_t n, std::vector<IndexPair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_) {
    if (!(i < j && j < n_)) {
      throw InvalidArgument("pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") violates i < j < " +
                            std::to_string(n_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool PairSet::contains(IndexPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool PairSet::is_subset_of(const PairSet& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(),
                       pairs_.begin(), pairs_.end());
}

OrderPattern pattern_of(std::span<const Natural> sequence) {
  check_injective(sequence);
  std::vector<std::size_t> order(sequence.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sequence[a] < sequence[b];
  });
  std::vector<OrderPattern::Rank> ranks(sequence.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<OrderPattern::Rank>(r);
  }
  return OrderPattern(std::move(ranks));
}

OrderPattern pattern_of(const ListingPrefix& prefix) {
  return pattern_of(prefix.elements());
}

PairSet ascents(const OrderPattern& p) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] < p[j]) pairs.push_back({i, j});
    }
  }
  return PairSet(p.size(), std::move(pairs));
}

PairSet inversions(const OrderPattern& p) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) pairs.push_back({i, j});
    }
  }
  return PairSet(p.size(), std::move(pairs));
}

bool eo_leq(const OrderPattern& p, const OrderPattern& q) {
  check_same_length(p, q);
  // Every inversion of q must also be an inversion of p.
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q[i] > q[j] && p[i] < p[j]) return false;
    }
  }
  return true;
}

bool eo_less(const OrderPattern& p, const OrderPattern& q) {
  return eo_leq(p, q) && p != q;
}

std::optional<IndexPair> first_eo_violation(const OrderPattern& p,
                                            const OrderPattern& q) {
  check_same_length(p, q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] < p[j] && q[i] > q[j]) return IndexPair{i, j};
    }
  }
  return std::nullopt;
}

bool uniform(const OrderPattern& p, const OrderPattern& q) {
  check_same_length(p, q);
  return p == q;
}

bool eo_equiv(const OrderPattern& p, const OrderPattern& q) {
  return eo_leq(p, q) && eo_leq(q, p);
}

ListingPrefix apply_pattern(const OrderPattern& p,
                            const std::set<Natural>& support) {
  if (support.size() != p.size()) {
    throw InvalidArgument("support has " + std::to_string(support.size()) +
                          " elements, pattern has length " +
                          std::to_string(p.size()));
  }
  const std::vector<Natural> sorted(support.begin(), support.end());
  std::vector<Natural> out;
  out.reserve(p.size());
  for (const auto rank : p) out.push_back(sorted[rank]);
  return ListingPrefix(std::move(out));
}

OrderPattern prefix_restrict(const OrderPattern& p, std::size_t k) {
  if (k < 1 || k > p.size()) {
    throw InvalidArgument("prefix length " + std::to_string(k) +
                          " outside 1.." + std::to_string(p.size()));
  }
  std::vector<Natural> head(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  return pattern_of(head);
}

std::size_t inversion_count(const OrderPattern& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

}  // namespace eolab
