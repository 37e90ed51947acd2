#pragma once

// Brute-force ground truth. Everything here works on raw rank vectors with
// the literal form of each definition and shares no relation code with the
// pattern, poset or search modules it is used to check.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eolab/pattern.hpp"
#include "eolab/program.hpp"
#include "eolab/search.hpp"

namespace eolab::oracle {

inline constexpr std::size_t kPreorderCap = 5;
inline constexpr std::size_t kPairSuiteCap = 6;
inline constexpr std::size_t kHasseCap = 5;
inline constexpr std::size_t kWitnessMaxK = 6;
inline constexpr std::size_t kWitnessMaxWindow = 3;

struct Counterexample {
  std::string what;
  std::vector<std::vector<Natural>> inputs;
  std::string expected;
  std::string actual;
};

struct OracleReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::size_t checked = 0;
  std::vector<Counterexample> failures;
  // Auxiliary tallies (e.g. "related" pair counts, "edges").
  std::map<std::string, std::size_t> stats;

  bool passed() const noexcept { return failures.empty(); }
};

// All permutations of 0..n-1, generated recursively in lexicographic order.
std::vector<std::vector<Natural>> permutations(std::size_t n);

// The literal quantifier: for all i < j, f(i) < f(j) implies g(i) < g(j).
bool def7_leq(const std::vector<Natural>& f, const std::vector<Natural>& g);

// For all i, j: f(i) < f(j) iff g(i) < g(j).
bool biconditional_uniform(const std::vector<Natural>& f, const std::vector<Natural>& g);

// Reflexivity (n!), transitivity (n!^3) and antisymmetry (n!^2). n <= 5.
OracleReport check_preorder_laws(std::size_t n);

// Literal check versus inversion-set containment from the pattern module,
// over all n!^2 pairs. n <= 6.
OracleReport check_inversion_equiv(std::size_t n);

// Two-sided literal check versus eo_equiv, uniform and pattern equality,
// over all n!^2 pairs. n <= 6.
OracleReport check_theorem10(std::size_t n);

// For every pattern p of 0..n-1, apply_pattern(p, support) is uniform with
// p and arranges exactly support. |support| = n <= 6.
OracleReport check_theorem3_finite(std::size_t n, const std::vector<Natural>& support);

// Poset cover edges versus transitive reduction by explicit intermediate
// search, plus the (n-1)*n!/2 edge count. n <= 5.
OracleReport check_hasse(std::size_t n);

// Unpruned walk over every (A choices, B choices) in [0, w)^k x [0, w)^k,
// lexicographically. Invalid sequences (choice beyond the buffer) are
// skipped. nodes_explored counts joint sequences whose A side is valid.
// k <= 6, w <= 3.
WitnessReport brute_force_witness(const std::vector<Natural>& native_a,
                                  const std::vector<Natural>& native_b, std::size_t k,
                                  std::size_t window, Relation relation);
WitnessReport brute_force_witness(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                  std::size_t k, std::size_t window, Relation relation,
                                  std::size_t round_cap = 1000);

}  // namespace eolab::oracle
