#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsurf/rational.hpp"

namespace gsurf {

// Hard ceiling for dense multiplication tables (memory grows as order^2).
inline constexpr int kMaxDenseOrder = 8192;
// Full associativity verification of a user table is O(N^3); above this we
// verify only the permutation/identity/inverse axioms and flag the table.
inline constexpr int kAssocVerifyMax = 256;
// Default cap for generator-closure enumeration.
inline constexpr int kDefaultClosureCap = 5040;

/// Finite nonabelian group on dense element indices 0..n-1.
/// Identity is always index 0; immutable after construction.
struct Group {
  int n = 0;
  std::string name;
  std::vector<int32_t> mul;   // row-major n*n: mul[a*n+b] = a*b
  std::vector<int32_t> inv;   // two-sided inverses
  std::vector<std::string> names;
  std::vector<int32_t> center;    // sorted
  std::vector<char> central;      // central[x] != 0 iff x in center
  std::vector<int32_t> class_of;  // element -> conjugacy class index
  std::vector<std::vector<int32_t>> classes;  // ordered by minimal element
  bool associativity_verified = true;

  int32_t op(int32_t a, int32_t b) const { return mul[(size_t)a * n + b]; }
  int32_t inverse(int32_t a) const { return inv[a]; }
  // g^{-1} x g
  int32_t conj(int32_t x, int32_t g) const { return op(op(inv[g], x), g); }
  bool commutes(int32_t a, int32_t b) const { return op(a, b) == op(b, a); }
  bool is_central(int32_t x) const { return central[x] != 0; }
  int class_count() const { return (int)classes.size(); }
  int center_size() const { return (int)center.size(); }
  int noncentral_count() const { return n - center_size(); }
  int order_of(int32_t x) const;
  std::vector<int32_t> centralizer(int32_t x) const;
  int centralizer_size(int32_t x) const;
  const std::vector<int32_t>& conjugacy_class(int32_t x) const {
    return classes[class_of[x]];
  }
};

// ---- constructors ----------------------------------------------------------

/// Validate a full multiplication table and normalize so the identity is
/// element 0. Rejects non-groups and abelian tables. Associativity is fully
/// verified only for N <= kAssocVerifyMax; larger tables get
/// associativity_verified == false.
Group from_cayley_table(const std::vector<std::vector<int32_t>>& table,
                        const std::vector<std::string>& names = {},
                        const std::string& group_name = "");

/// JSON document {"order": N, "table": [[...]], "names": [...]}.
Group from_cayley_table_file(const std::string& path);

/// Closure of explicit permutations (0-based images). Throws CapExceeded if
/// the generated group outgrows `cap`.
Group from_permutations(const std::vector<std::vector<int32_t>>& gens,
                        int cap = kDefaultClosureCap,
                        const std::string& group_name = "");

/// Generators in cycle notation, e.g. "(1 2 3 4 5 6 7)" and "(2 3 5)(4 7 6)".
Group from_permutation_generators(const std::vector<std::string>& cycles,
                                  int cap = kDefaultClosureCap,
                                  const std::string& group_name = "");

/// Text file with one cycle-notation generator per line ('#' comments allowed).
Group from_generator_file(const std::string& path,
                          int cap = kDefaultClosureCap);

// ---- builtin families ------------------------------------------------------

Group symmetric_group(int n);      // n >= 3, n <= 7 (dense-table cap)
Group alternating_group(int n);    // n >= 4, n <= 7
Group dihedral_group(int order);   // order = 2n >= 6, even
Group quaternion_group8();
Group extraspecial_group(int p);   // p odd prime; order p^3, exponent p
Group direct_product(const Group& a, const Group& b);

/// Builtin spec strings: "symmetric:5", "alternating:7", "dihedral:10",
/// "quaternion8", "extraspecial:3", "product:<spec>,<spec>".
Group builtin_group(const std::string& spec);

// ---- permutation utilities (shared with tests/tools) -----------------------

std::vector<int32_t> parse_cycle_notation(const std::string& text,
                                          int min_degree = 0);
std::string cycle_notation_name(const std::vector<int32_t>& perm);

// ---- derived structure -----------------------------------------------------

/// Subgroup generated by all commutators [x,y] = x^-1 y^-1 x y, sorted.
std::vector<int32_t> commutator_subgroup(const Group& g);

struct CommutingProbability {
  Rational by_classes;  // class_count / |G|
  Rational by_pairs;    // |{(x,y) : xy = yx}| / |G|^2
};

/// Both routes must agree (their equality is a theorem); disagreement throws
/// IdentityViolation.
CommutingProbability commuting_probability(const Group& g);

/// Same computation on a raw table; abelian input is allowed here (the one
/// operation where the nonabelian precondition is deliberately bypassed).
CommutingProbability commuting_probability_of_table(
    const std::vector<std::vector<int32_t>>& table);

// ---- homomorphisms ---------------------------------------------------------

/// Validated group homomorphism. Construction checks the homomorphism
/// property on all pairs and injectivity on the commutator subgroup of the
/// source (the condition under which the induced face map exists).
struct Homomorphism {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<int32_t> map;

  int32_t operator()(int32_t x) const { return map[x]; }
};

Homomorphism make_homomorphism(const Group& source, const Group& target,
                               std::vector<int32_t> map);

}  // namespace gsurf
