#include "epgraph/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "epgraph/errors.hpp"

namespace epg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void FiniteGroup::finish_construction() {
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  element_order_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int k = 1;
    int acc = x;
    while (acc != 0) {
      acc = mul(acc, x);
      ++k;
    }
    element_order_[x] = k;
  }
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<int32_t> table, int n, std::string label) {
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.finish_construction();
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string label) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
    }
  }

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[table[a][b]]) throw NotAGroup("row " + std::to_string(a) + " repeats an entry");
      seen[table[a][b]] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[table[b][a]]) throw NotAGroup("column " + std::to_string(a) + " repeats an entry");
      seen[table[b][a]] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroup("no identity element");

  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) {
      has_inverse = table[a][b] == identity && table[b][a] == identity;
    }
    if (!has_inverse) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  // Relabel so the identity is element 0: swap labels 0 <-> identity.
  auto relabel = [&](int x) {
    if (x == identity) return 0;
    if (x == 0) return identity;
    return x;
  };
  std::vector<int32_t> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<size_t>(relabel(a)) * n + relabel(b)] =
          static_cast<int32_t>(relabel(table[a][b]));
    }
  }
  return from_trusted_table(std::move(flat), n, std::move(label));
}

FiniteGroup FiniteGroup::from_permutation_generators(
    const std::vector<std::vector<int>>& generators, std::string label, int order_cap) {
  size_t domain = 0;
  for (const auto& g : generators) domain = std::max(domain, g.size());
  if (domain == 0) domain = 1;

  auto check_bijection = [&](const std::vector<int>& p) {
    std::vector<char> hit(domain, 0);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(domain) || hit[v]) return false;
      hit[v] = 1;
    }
    return p.size() == domain;
  };

  std::vector<std::vector<int>> gens = generators;
  for (auto& g : gens) {
    if (g.size() < domain) throw NotAGroup("generators act on different domains");
    if (!check_bijection(g)) throw NotAGroup("generator is not a bijection");
  }

  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };

  std::vector<int> identity(domain);
  std::iota(identity.begin(), identity.end(), 0);

  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> elems;
  std::queue<int> todo;

  auto discover = [&](const std::vector<int>& p) {
    auto [it, inserted] = index_of.emplace(p, static_cast<int>(elems.size()));
    if (inserted) {
      if (static_cast<int>(elems.size()) >= order_cap) {
        throw OrderCapExceeded("permutation closure exceeds order cap " +
                               std::to_string(order_cap));
      }
      elems.push_back(p);
      todo.push(it->second);
    }
    return it->second;
  };

  discover(identity);
  for (const auto& g : gens) discover(g);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      discover(compose(elems[cur], g));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int32_t> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<size_t>(a) * n + b] =
          static_cast<int32_t>(index_of.at(compose(elems[a], elems[b])));
    }
  }
  return from_trusted_table(std::move(flat), n, std::move(label));
}

FiniteGroup FiniteGroup::cyclic(int n, int order_cap) {
  if (n < 1) throw UnsupportedSpec("cyclic group needs n >= 1");
  if (n > order_cap) throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap");
  std::vector<int32_t> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) flat[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return from_trusted_table(std::move(flat), n, "Z(" + std::to_string(n) + ")");
}

FiniteGroup FiniteGroup::dihedral(int order, int order_cap) {
  if (order < 2 || order % 2 != 0) throw UnsupportedSpec("dihedral order must be even and >= 2");
  if (order > order_cap) throw OrderCapExceeded("order " + std::to_string(order) + " exceeds cap");
  const int n = order / 2;
  // Element i + j*n is r^i s^j; s r^k = r^-k s gives
  // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l).
  auto idx = [&](int i, int j) { return ((i % n) + n) % n + j * n; };
  std::vector<int32_t> flat(static_cast<size_t>(order) * order);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? i + k : i - k;
          flat[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] =
              static_cast<int32_t>(idx(rot, (j + l) % 2));
        }
      }
    }
  }
  return from_trusted_table(std::move(flat), order, "D(" + std::to_string(order) + ")");
}

FiniteGroup FiniteGroup::dicyclic(int order, int order_cap) {
  if (order < 4 || order % 4 != 0) {
    throw UnsupportedSpec("dicyclic order must be a positive multiple of 4");
  }
  if (order > order_cap) throw OrderCapExceeded("order " + std::to_string(order) + " exceeds cap");
  const int m = order / 4;
  const int two_m = 2 * m;
  // Element i + j*2m is a^i b^j; b a^k = a^-k b and b^2 = a^m give
  //   (a^i)(a^k b^l)     = a^(i+k) b^l
  //   (a^i b)(a^k)       = a^(i-k) b
  //   (a^i b)(a^k b)     = a^(i-k+m)
  auto idx = [&](int i, int j) { return ((i % two_m) + two_m) % two_m + j * two_m; };
  std::vector<int32_t> flat(static_cast<size_t>(order) * order);
  for (int i = 0; i < two_m; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < two_m; ++k) {
        for (int l = 0; l < 2; ++l) {
          int target;
          if (j == 0) {
            target = idx(i + k, l);
          } else if (l == 0) {
            target = idx(i - k, 1);
          } else {
            target = idx(i - k + m, 0);
          }
          flat[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] = static_cast<int32_t>(target);
        }
      }
    }
  }
  return from_trusted_table(std::move(flat), order, "Dic(" + std::to_string(order) + ")");
}

FiniteGroup FiniteGroup::symmetric(int degree, int order_cap) {
  if (degree < 1 || degree > 7) throw UnsupportedSpec("symmetric group supported for 1 <= d <= 7");
  long long fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  if (fact > order_cap) throw OrderCapExceeded("order " + std::to_string(fact) + " exceeds cap");

  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < perms.size(); ++i) index_of.emplace(perms[i], static_cast<int>(i));

  const int n = static_cast<int>(perms.size());
  std::vector<int> scratch(degree);
  std::vector<int32_t> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < degree; ++i) scratch[i] = perms[a][perms[b][i]];
      flat[static_cast<size_t>(a) * n + b] = static_cast<int32_t>(index_of.at(scratch));
    }
  }
  return from_trusted_table(std::move(flat), n, "S(" + std::to_string(degree) + ")");
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k, int order_cap) {
  if (!is_prime(p)) throw UnsupportedSpec("elementary abelian base must be prime");
  if (k < 1) throw UnsupportedSpec("elementary abelian rank must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > order_cap) throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap");
  }
  const int order = static_cast<int>(n);
  // Index = base-p digits, componentwise addition mod p.
  std::vector<int32_t> flat(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int sum = 0;
      int pw = 1;
      int ra = a;
      int rb = b;
      for (int i = 0; i < k; ++i) {
        sum += ((ra + rb) % p) * pw;
        ra /= p;
        rb /= p;
        pw *= p;
      }
      flat[static_cast<size_t>(a) * order + b] = static_cast<int32_t>(sum);
    }
  }
  return from_trusted_table(std::move(flat), order,
                            "E(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap) {
  long long n = static_cast<long long>(a.order()) * b.order();
  if (n > order_cap) throw OrderCapExceeded("product order " + std::to_string(n) + " exceeds cap");
  const int order = static_cast<int>(n);
  const int nb = b.order();
  std::vector<int32_t> flat(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int xa = x / nb;
    const int xb = x % nb;
    for (int y = 0; y < order; ++y) {
      flat[static_cast<size_t>(x) * order + y] =
          static_cast<int32_t>(a.mul(xa, y / nb) * nb + b.mul(xb, y % nb));
    }
  }
  return from_trusted_table(std::move(flat), order, a.label() + "x" + b.label());
}

int FiniteGroup::power(int x, long long k) const {
  int acc = 0;
  int base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<std::vector<int>> FiniteGroup::to_table() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  }
  return out;
}

int element_order(const FiniteGroup& g, int x) { return g.element_order(x); }

Subgroup cyclic_subgroup(const FiniteGroup& g, int x) {
  Subgroup s{&g, IndexSet(g.order()), x};
  int acc = 0;
  do {
    s.members.insert(acc);
    acc = g.mul(acc, x);
  } while (acc != 0);
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
  IndexSet members(g.order());
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!members.contains(x)) {
      members.insert(x);
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seeds) add(s);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  }
  Subgroup s{&g, members, std::nullopt};
  if (seeds.size() == 1) s.generator = seeds[0];
  return s;
}

std::vector<Subgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
  // All distinct <x>, first-found generator kept.
  std::map<IndexSet, int> distinct;
  for (int x = 0; x < g.order(); ++x) {
    Subgroup s = cyclic_subgroup(g, x);
    distinct.emplace(s.members, x);
  }
  std::vector<std::pair<IndexSet, int>> cyclics(distinct.begin(), distinct.end());

  std::vector<Subgroup> out;
  for (size_t i = 0; i < cyclics.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cyclics.size() && maximal; ++j) {
      if (i != j && cyclics[i].first.is_subset_of(cyclics[j].first)) maximal = false;
    }
    if (maximal) out.push_back(Subgroup{&g, cyclics[i].first, cyclics[i].second});
  }
  // std::map iteration already gives canonical (lexicographic) order.
  return out;
}

long long exponent(const FiniteGroup& g) {
  long long l = 1;
  for (int x = 0; x < g.order(); ++x) l = std::lcm(l, static_cast<long long>(g.element_order(x)));
  return l;
}

Subgroup center(const FiniteGroup& g) {
  IndexSet members(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) members.insert(x);
  }
  return Subgroup{&g, members, std::nullopt};
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

bool is_cyclic(const Subgroup& s) {
  const int size = s.size();
  for (int x : s.members.to_vector()) {
    if (s.parent->element_order(x) == size) return true;
  }
  return false;
}

bool is_nilpotent(const FiniteGroup& g) {
  for (auto [p, e] : factorize(g.order())) {
    (void)e;
    std::vector<int> p_elems;
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) p_elems.push_back(x);
    }
    IndexSet p_set = IndexSet::of(g.order(), p_elems);
    for (int a : p_elems) {
      for (int b : p_elems) {
        if (!p_set.contains(g.mul(a, b))) return false;
      }
    }
  }
  return true;
}

bool is_generalized_quaternion(const FiniteGroup& p) {
  int n = p.order();
  int alpha = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++alpha;
  }
  if (n != 1) throw NotAPGroup("group of order " + std::to_string(p.order()) + " is not a 2-group");
  if (alpha < 3 || is_cyclic(p)) return false;
  int involutions = 0;
  for (int x = 0; x < p.order(); ++x) {
    if (p.element_order(x) == 2) ++involutions;
  }
  return involutions == 1;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace epg
