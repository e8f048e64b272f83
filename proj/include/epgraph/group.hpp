#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epgraph/index_set.hpp"

namespace epg {

// Largest group any builder or closure will materialize unless the caller
// raises the cap. Tables are dense (n^2 indices), so this is a memory guard,
// not a correctness limit.
inline constexpr int kDefaultOrderCap = 10000;

class FiniteGroup;

// A subset of a group closed under multiplication and inverse. `generator`
// is set only when the subgroup was produced as <x>.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  IndexSet members;
  std::optional<int> generator;

  int size() const { return members.size(); }
};

// Finite group on elements 0..n-1 with a dense multiplication table.
// The identity is always element 0 (construction normalizes this), which
// keeps proper-graph slicing a plain index shift. Immutable once built.
class FiniteGroup {
 public:
  // Validates the group axioms (Latin square, associativity, identity,
  // inverses) and relabels so the identity sits at index 0.
  // Throws NotAGroup with a reason on the first violated axiom.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string label);

  // Breadth-first closure of a permutation generating set. Element indices
  // follow discovery order with the identity first. Throws OrderCapExceeded
  // if the closure grows past `order_cap`.
  static FiniteGroup from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                                 std::string label,
                                                 int order_cap = kDefaultOrderCap);

  // Family builders. Presentations:
  //   cyclic(n):    Z_n, addition mod n
  //   dihedral(2n): <r,s | r^n = s^2 = e, srs = r^-1>
  //   dicyclic(4m): <a,b | a^(2m) = e, b^2 = a^m, b^-1 a b = a^-1>
  //   symmetric(d): all permutations of {0..d-1} in lexicographic order
  //   elementary_abelian(p,k): Z_p^k with base-p digit indexing
  // Out-of-range parameters throw UnsupportedSpec; an order above the cap
  // throws OrderCapExceeded.
  static FiniteGroup cyclic(int n, int order_cap = kDefaultOrderCap);
  static FiniteGroup dihedral(int order, int order_cap = kDefaultOrderCap);
  static FiniteGroup dicyclic(int order, int order_cap = kDefaultOrderCap);
  static FiniteGroup symmetric(int degree, int order_cap = kDefaultOrderCap);
  static FiniteGroup elementary_abelian(int p, int k, int order_cap = kDefaultOrderCap);

  // Componentwise product on index pairs, flattened row-major
  // ((a,b) -> a*|B| + b), so the identity pair lands on index 0.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    int order_cap = kDefaultOrderCap);

  int order() const { return n_; }
  const std::string& label() const { return label_; }

  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return 0; }

  // x^k for k >= 0.
  int power(int x, long long k) const;

  // Least k >= 1 with x^k = e; cached at construction.
  int element_order(int x) const { return element_order_[x]; }

  std::vector<std::vector<int>> to_table() const;

 private:
  FiniteGroup() = default;

  // Trusts the table (builders are associative by construction); computes
  // inverses and element orders.
  static FiniteGroup from_trusted_table(std::vector<int32_t> table, int n, std::string label);

  void finish_construction();

  int n_ = 0;
  std::vector<int32_t> table_;
  std::vector<int32_t> inverse_;
  std::vector<int32_t> element_order_;
  std::string label_;
};

int element_order(const FiniteGroup& g, int x);

// <x>: powers of x, tagged with x as generator.
Subgroup cyclic_subgroup(const FiniteGroup& g, int x);

// Closure of a seed set under multiplication; generator tag only for a
// single seed.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds);

// The set M(G) of cyclic subgroups <x> contained in no strictly larger <y>,
// deduplicated and returned in canonical order (lexicographic member sets).
// A cyclic group yields exactly [G].
std::vector<Subgroup> maximal_cyclic_subgroups(const FiniteGroup& g);

// lcm of all element orders.
long long exponent(const FiniteGroup& g);

// Elements commuting with everything.
Subgroup center(const FiniteGroup& g);

bool is_cyclic(const FiniteGroup& g);
bool is_cyclic(const Subgroup& s);

// True iff for every prime p | |G| the p-power-order elements are closed
// under multiplication (i.e. form the unique Sylow p-subgroup).
bool is_nilpotent(const FiniteGroup& g);

// |P| = 2^a with a >= 3, non-cyclic, exactly one element of order 2.
// Throws NotAPGroup when |P| is not a power of 2.
bool is_generalized_quaternion(const FiniteGroup& p);

bool is_abelian(const FiniteGroup& g);

// Prime factorization of n as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> factorize(int n);

}  // namespace epg
