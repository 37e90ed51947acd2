#include "eolab/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "eolab/error.hpp"

namespace eolab {

namespace {

void check_poset_n(std::size_t n) {
  if (n < 1 || n > kPosetHardCap) {
    throw InvalidArgument("n = " + std::to_string(n) + " outside 1.." +
                          std::to_string(kPosetHardCap));
  }
}

// Runs body(row) for every row in [0, rows), statically partitioned.
template <typename Body>
void parallel_rows(std::size_t rows, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
  if (threads <= 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([=, &body] {
      for (std::size_t r = t; r < rows; r += threads) body(r);
    });
  }
}

}  // namespace

std::vector<OrderPattern> all_patterns(std::size_t n) {
  check_poset_n(n);
  std::vector<OrderPattern::Rank> ranks(n);
  std::iota(ranks.begin(), ranks.end(), OrderPattern::Rank{0});
  std::vector<OrderPattern> out;
  do {
    out.emplace_back(ranks);
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

std::size_t lexicographic_rank(const OrderPattern& p) {
  // Lehmer code read as a factorial-base number.
  const std::size_t n = p.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) ++smaller_after;
    }
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

std::uint64_t inversion_mask(const OrderPattern& p) {
  if (p.size() > 11) {
    throw InvalidArgument("inversion_mask needs length <= 11");
  }
  std::uint64_t mask = 0;
  for (std::size_t j = 1; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p[i] > p[j]) mask |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
    }
  }
  return mask;
}

std::size_t PatternPoset::index_of(const OrderPattern& p) const {
  if (p.size() != n_) throw LengthMismatch(p.size(), n_);
  return lexicographic_rank(p);
}

bool PatternPoset::leq(std::size_t a, std::size_t b) const {
  const std::uint64_t word = relation_[a * words_ + b / 64];
  return (word >> (b % 64)) & 1u;
}

PatternPoset build_poset(std::size_t n, unsigned threads) {
  PatternPoset poset;
  poset.n_ = n;
  poset.nodes_ = all_patterns(n);
  const std::size_t count = poset.nodes_.size();
  const std::size_t words = (count + 63) / 64;
  poset.words_ = words;
  poset.relation_.assign(count * words, 0);

  std::vector<std::uint64_t> masks(count);
  for (std::size_t a = 0; a < count; ++a) masks[a] = inversion_mask(poset.nodes_[a]);

  // a <=eo b iff inversions(b) is contained in inversions(a).
  std::vector<std::size_t> row_related(count, 0);
  parallel_rows(count, threads, [&](std::size_t a) {
    std::uint64_t* row = &poset.relation_[a * words];
    const std::uint64_t mine = masks[a];
    std::size_t related = 0;
    for (std::size_t b = 0; b < count; ++b) {
      if ((masks[b] & ~mine) == 0) {
        row[b / 64] |= std::uint64_t{1} << (b % 64);
        ++related;
      }
    }
    row_related[a] = related;
  });
  poset.related_pairs_ =
      std::accumulate(row_related.begin(), row_related.end(), std::size_t{0});

  // Transitive reduction: the covers of a are its strict upper bounds minus
  // everything strictly above some strict upper bound.
  std::vector<std::vector<std::size_t>> covers(count);
  parallel_rows(count, threads, [&](std::size_t a) {
    const std::uint64_t* row = &poset.relation_[a * words];
    std::vector<std::uint64_t> above(words, 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (b == a) continue;
        const std::uint64_t* up = &poset.relation_[b * words];
        for (std::size_t x = 0; x < words; ++x) {
          std::uint64_t strictly_up = up[x];
          if (x == b / 64) strictly_up &= ~(std::uint64_t{1} << (b % 64));
          above[x] |= strictly_up;
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (b != a && !((above[b / 64] >> (b % 64)) & 1u)) covers[a].push_back(b);
      }
    }
  });
  for (std::size_t a = 0; a < count; ++a) {
    for (const std::size_t b : covers[a]) poset.hasse_.emplace_back(a, b);
  }

  poset.maximum_ = poset.index_of(OrderPattern::identity(n));
  poset.minimum_ = poset.index_of(OrderPattern::reversal(n));
  for (std::size_t a = 0; a < count; ++a) {
    if (!poset.leq(a, poset.maximum_) || !poset.leq(poset.minimum_, a)) {
      throw Error("poset extremes check failed at " + poset.nodes_[a].label());
    }
  }
  return poset;
}

Chain max_chain(std::size_t n) {
  check_poset_n(n);
  Chain chain;
  std::vector<OrderPattern::Rank> ranks(n);
  std::iota(ranks.rbegin(), ranks.rend(), OrderPattern::Rank{0});
  chain.patterns.emplace_back(ranks);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[ranks[i]] = i;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < n && position[k] < position[k + 1]) ++k;
    if (k + 1 >= n) break;
    std::swap(ranks[position[k]], ranks[position[k + 1]]);
    std::swap(position[k], position[k + 1]);
    chain.patterns.emplace_back(ranks);
  }
  return chain;
}

Antichain sample_antichain(std::size_t n, std::size_t size) {
  check_poset_n(n);
  if (size < 2) {
    throw InvalidArgument("antichain size must be >= 2, got " + std::to_string(size));
  }
  const auto nodes = all_patterns(n);
  auto incomparable = [&](std::size_t a, std::size_t b) {
    return !eo_leq(nodes[a], nodes[b]) && !eo_leq(nodes[b], nodes[a]);
  };
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    std::vector<std::size_t> chosen{start};
    for (std::size_t v = 0; v < nodes.size() && chosen.size() < size; ++v) {
      if (v == start) continue;
      if (std::all_of(chosen.begin(), chosen.end(),
                      [&](std::size_t c) { return incomparable(c, v); })) {
        chosen.push_back(v);
      }
    }
    if (chosen.size() == size) {
      std::sort(chosen.begin(), chosen.end());
      Antichain out;
      for (const std::size_t c : chosen) out.patterns.push_back(nodes[c]);
      return out;
    }
  }
  throw NotFound("no antichain of size " + std::to_string(size) +
                 " found among length-" + std::to_string(n) + " patterns");
}

bool is_chain(const Chain& chain) {
  for (std::size_t t = 1; t < chain.patterns.size(); ++t) {
    if (!eo_less(chain.patterns[t - 1], chain.patterns[t])) return false;
  }
  return true;
}

bool is_antichain(const Antichain& antichain) {
  const auto& ps = antichain.patterns;
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (ps[a] == ps[b] || eo_leq(ps[a], ps[b]) || eo_leq(ps[b], ps[a])) return false;
    }
  }
  return true;
}

std::string export_poset(const PatternPoset& poset, ExportFormat format) {
  if (format == ExportFormat::json) {
    nlohmann::json doc;
    doc["n"] = poset.n();
    doc["note"] = kPosetAnalogueNote;
    auto& nodes = doc["nodes"] = nlohmann::json::array();
    for (const auto& p : poset.nodes()) {
      nodes.push_back(std::vector<OrderPattern::Rank>(p.begin(), p.end()));
    }
    auto& hasse = doc["hasse"] = nlohmann::json::array();
    for (const auto& [from, to] : poset.hasse()) hasse.push_back({from, to});
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "// " << kPosetAnalogueNote << "\n";
  os << "digraph eo_poset_" << poset.n() << " {\n";
  os << "  rankdir=BT;\n";
  for (const auto& p : poset.nodes()) os << "  \"" << p.label() << "\";\n";
  for (const auto& [from, to] : poset.hasse()) {
    os << "  \"" << poset.node(from).label() << "\" -> \"" << poset.node(to).label()
       << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace eolab
