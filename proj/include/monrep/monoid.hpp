// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_MONOID_HPP
#define MONREP_MONOID_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace monrep {

//! A finite monoid given by its full multiplication table.  Elements are the
//! indices 0..size-1.  For generated monoids the identity is element 0 and
//! the remaining elements appear in breadth-first discovery order over the
//! generator list; for table input the order is the caller's.
struct Monoid {
  std::size_t size = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table;  // row-major: table[a * size + b] = a * b
  std::vector<std::string> labels;   // optional, aligned with elements

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[static_cast<std::size_t>(a) * size + b];
  }

  std::string label(std::uint32_t a) const {
    return a < labels.size() && !labels[a].empty() ? labels[a]
                                                   : std::to_string(a);
  }
};

using MonoidPtr = std::shared_ptr<Monoid const>;

namespace detail {

//! Wrap a table known to be associative with identity `id` (tables produced
//! by closures or by composing genuinely associative operations).
inline Monoid monoid_unchecked(std::size_t size, std::uint32_t id,
                               std::vector<std::uint32_t> table,
                               std::vector<std::string> labels) {
  Monoid m;
  m.size = size;
  m.identity = id;
  m.table = std::move(table);
  m.labels = std::move(labels);
  return m;
}

}  // namespace detail

//! Validate a square table: locate the two-sided identity and check full
//! associativity.  Throws NoIdentityError or NotAssociativeError (with a
//! witness triple).
inline Monoid monoid_from_table(std::vector<std::vector<std::uint32_t>> const& t,
                                std::vector<std::string> labels = {}) {
  std::size_t const n = t.size();
  if (n == 0) throw ParseError("empty multiplication table");
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (auto const& row : t) {
    if (row.size() != n) throw ParseError("multiplication table is not square");
    for (auto v : row) {
      if (v >= n) {
        throw ParseError("table entry " + std::to_string(v)
                         + " is out of range");
      }
      flat.push_back(v);
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw ParseError("label count does not match the table size");
  }
  std::uint32_t id = static_cast<std::uint32_t>(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      ok = flat[e * n + x] == x && flat[x * n + e] == x;
    }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == n) throw NoIdentityError();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t const ab = flat[a * n + b];
      for (std::uint32_t c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          throw NotAssociativeError(a, b, c);
        }
      }
    }
  }
  return detail::monoid_unchecked(n, id, std::move(flat), std::move(labels));
}

namespace detail {

//! Breadth-first closure of generators starting from the identity, with the
//! multiplication table built by element lookup.  Element order: identity,
//! then discovery order (each element times each generator, in input order).
template <typename Elem, typename Mul, typename LabelFn>
Monoid monoid_from_closure(Elem const& identity, std::vector<Elem> const& gens,
                           Mul&& mul, LabelFn&& label_fn, std::size_t cap) {
  std::vector<Elem> elems;
  std::map<Elem, std::uint32_t> index;
  elems.push_back(identity);
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : gens) {
      Elem w = mul(elems[i], g);
      if (index.contains(w)) continue;
      if (elems.size() >= cap) throw SizeLimitError(cap);
      index.emplace(w, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(w));
    }
  }
  std::size_t const n = elems.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(mul(elems[a], elems[b]));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = label_fn(elems[i]);
  return monoid_unchecked(n, 0, std::move(table), std::move(labels));
}

}  // namespace detail

constexpr std::size_t default_size_cap = 4096;

//! Compose total maps on {0..degree-1}: (a * b)(x) = a(b(x)).
inline std::vector<std::uint32_t> compose_maps(
    std::vector<std::uint32_t> const& a, std::vector<std::uint32_t> const& b) {
  std::vector<std::uint32_t> r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

//! Label such as "231" with 1-based images; empty above degree 9.
inline std::string transformation_label(std::vector<std::uint32_t> const& t) {
  if (t.size() > 9) return {};
  std::string s;
  for (auto v : t) s += static_cast<char>('1' + v);
  return s;
}

//! The transformation monoid generated by total maps under composition.
inline Monoid monoid_from_transformations(
    std::size_t degree, std::vector<std::vector<std::uint32_t>> const& gens,
    std::size_t cap = default_size_cap) {
  if (degree == 0) throw ParseError("transformation degree must be positive");
  for (auto const& g : gens) {
    if (g.size() != degree) {
      throw ParseError("generator degree does not match the declared degree");
    }
    for (auto v : g) {
      if (v >= degree) throw ParseError("transformation image out of range");
    }
  }
  std::vector<std::uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  return detail::monoid_from_closure(
      id, gens, compose_maps,
      [](std::vector<std::uint32_t> const& t) { return transformation_label(t); },
      cap);
}

//! A subgroup of the unit group, stored as sorted ambient element indices
//! with the aligned inverse of each member.  Always contains the identity.
struct Subgroup {
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> inverses;

  std::size_t size() const { return elements.size(); }

  bool contains(std::uint32_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }

  std::uint32_t inverse(std::uint32_t x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) {
      throw Error("element " + std::to_string(x) + " is not in the subgroup");
    }
    return inverses[static_cast<std::size_t>(it - elements.begin())];
  }
};

//! The group of units: elements with a two-sided inverse.
inline Subgroup unit_group(Monoid const& m) {
  Subgroup g;
  for (std::uint32_t x = 0; x < m.size; ++x) {
    for (std::uint32_t y = 0; y < m.size; ++y) {
      if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) {
        g.elements.push_back(x);
        g.inverses.push_back(y);
        break;
      }
    }
  }
  return g;  // elements are found in ascending order, so already sorted
}

//! Close a seed set under products and verify the result is a group of
//! units.  An empty seed yields the trivial subgroup.
inline Subgroup subgroup_closure(Monoid const& m,
                                 std::vector<std::uint32_t> seed) {
  for (auto s : seed) {
    if (s >= m.size) throw ParseError("seed element out of range");
  }
  if (seed.empty()) seed.push_back(m.identity);
  std::set<std::uint32_t> members(seed.begin(), seed.end());
  std::vector<std::uint32_t> queue(members.begin(), members.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto s : seed) {
      std::uint32_t const w = m.mul(queue[i], s);
      if (members.insert(w).second) queue.push_back(w);
    }
  }
  if (!members.contains(m.identity)) {
    throw NotAGroupError("the closure does not contain the identity");
  }
  Subgroup g;
  g.elements.assign(members.begin(), members.end());
  g.inverses.resize(g.elements.size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    std::uint32_t const x = g.elements[i];
    bool found = false;
    for (auto y : g.elements) {
      if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) {
        g.inverses[i] = y;
        found = true;
        break;
      }
    }
    if (!found) {
      throw NotAGroupError("element " + m.label(x) + " has no inverse in the closure");
    }
  }
  return g;
}

//! A submonoid with its reindexed multiplication table.  `elements` is the
//! sorted list of ambient indices and `to_local` inverts it (sentinel
//! UINT32_MAX outside the submonoid).
struct SubmonoidEmbedding {
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> to_local;
  Monoid local;

  std::size_t size() const { return elements.size(); }

  bool contains(std::uint32_t x) const {
    return to_local[x] != UINT32_MAX;
  }
};

namespace detail {

inline SubmonoidEmbedding embed_closed_subset(Monoid const& m,
                                              std::set<std::uint32_t> members) {
  SubmonoidEmbedding e;
  e.elements.assign(members.begin(), members.end());
  e.to_local.assign(m.size, UINT32_MAX);
  for (std::size_t i = 0; i < e.elements.size(); ++i) {
    e.to_local[e.elements[i]] = static_cast<std::uint32_t>(i);
  }
  std::size_t const n = e.elements.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = e.to_local[m.mul(e.elements[a], e.elements[b])];
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = m.label(e.elements[i]);
  e.local = monoid_unchecked(n, e.to_local[m.identity], std::move(table),
                             std::move(labels));
  return e;
}

}  // namespace detail

//! The submonoid generated by a seed set (the identity is always included).
inline SubmonoidEmbedding submonoid_closure(Monoid const& m,
                                            std::vector<std::uint32_t> const& seed) {
  for (auto s : seed) {
    if (s >= m.size) throw ParseError("seed element out of range");
  }
  std::set<std::uint32_t> members(seed.begin(), seed.end());
  members.insert(m.identity);
  std::vector<std::uint32_t> queue(members.begin(), members.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto s : seed) {
      std::uint32_t const w = m.mul(queue[i], s);
      if (members.insert(w).second) queue.push_back(w);
    }
  }
  return detail::embed_closed_subset(m, std::move(members));
}

//! View a subgroup as a submonoid with its own local table.
inline SubmonoidEmbedding submonoid_from_subgroup(Monoid const& m,
                                                  Subgroup const& k) {
  return detail::embed_closed_subset(
      m, std::set<std::uint32_t>(k.elements.begin(), k.elements.end()));
}

//! Partition of the monoid into K-double cosets K*m*K, discovered by orbit
//! search.  Classes are numbered by their minimal element, in increasing
//! order, and the representative of each class is that minimal element.
struct DoubleCosetPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> representatives;
  std::vector<std::vector<std::uint32_t>> members;
  std::size_t class_count = 0;
};

inline DoubleCosetPartition double_cosets(Monoid const& m, Subgroup const& k) {
  DoubleCosetPartition p;
  p.class_of.assign(m.size, UINT32_MAX);
  for (std::uint32_t start = 0; start < m.size; ++start) {
    if (p.class_of[start] != UINT32_MAX) continue;
    std::uint32_t const cls = static_cast<std::uint32_t>(p.class_count++);
    p.representatives.push_back(start);
    p.members.emplace_back();
    std::vector<std::uint32_t> queue{start};
    p.class_of[start] = cls;
    while (!queue.empty()) {
      std::uint32_t const x = queue.back();
      queue.pop_back();
      p.members[cls].push_back(x);
      for (auto g : k.elements) {
        for (std::uint32_t const w : {m.mul(g, x), m.mul(x, g)}) {
          if (p.class_of[w] == UINT32_MAX) {
            p.class_of[w] = cls;
            queue.push_back(w);
          }
        }
      }
    }
    std::sort(p.members[cls].begin(), p.members[cls].end());
  }
  return p;
}

//! A generating set together with a breadth-first derivation of every
//! element as parent * generator.  parent/via are UINT32_MAX at the identity.
struct GeneratingData {
  std::vector<std::uint32_t> generators;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::vector<std::uint32_t> order;
};

namespace detail {

inline std::size_t closure_count(Monoid const& m,
                                 std::vector<std::uint32_t> const& gens) {
  std::vector<bool> seen(m.size, false);
  std::vector<std::uint32_t> queue{m.identity};
  seen[m.identity] = true;
  std::size_t count = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      std::uint32_t const w = m.mul(queue[i], g);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace detail

//! Greedy small generating set: repeatedly add the element whose inclusion
//! grows the closure the most (ties to the smallest index), then record a
//! breadth-first derivation of every element over that set.
inline GeneratingData generating_set(Monoid const& m) {
  GeneratingData gd;
  std::size_t covered = detail::closure_count(m, gd.generators);
  while (covered < m.size) {
    std::vector<bool> in_closure(m.size, false);
    {
      std::vector<std::uint32_t> queue{m.identity};
      in_closure[m.identity] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gd.generators) {
          std::uint32_t const w = m.mul(queue[i], g);
          if (!in_closure[w]) {
            in_closure[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    std::uint32_t best = UINT32_MAX;
    std::size_t best_count = covered;
    for (std::uint32_t cand = 0; cand < m.size; ++cand) {
      if (in_closure[cand]) continue;
      gd.generators.push_back(cand);
      std::size_t const c = detail::closure_count(m, gd.generators);
      gd.generators.pop_back();
      if (c > best_count) {
        best_count = c;
        best = cand;
      }
    }
    gd.generators.push_back(best);
    covered = best_count;
  }
  gd.parent.assign(m.size, UINT32_MAX);
  gd.via.assign(m.size, UINT32_MAX);
  std::vector<bool> seen(m.size, false);
  seen[m.identity] = true;
  gd.order.push_back(m.identity);
  for (std::size_t i = 0; i < gd.order.size(); ++i) {
    std::uint32_t const x = gd.order[i];
    for (std::size_t gi = 0; gi < gd.generators.size(); ++gi) {
      std::uint32_t const w = m.mul(x, gd.generators[gi]);
      if (!seen[w]) {
        seen[w] = true;
        gd.parent[w] = x;
        gd.via[w] = static_cast<std::uint32_t>(gi);
        gd.order.push_back(w);
      }
    }
  }
  return gd;
}

//! Eventual cycle of the powers m, m^2, ...: returns (tail, period), the
//! least pair with m^(tail + period) = m^tail and tail >= 1.
inline std::pair<std::uint32_t, std::uint32_t> element_cycle(Monoid const& m,
                                                             std::uint32_t x) {
  std::map<std::uint32_t, std::uint32_t> seen_at;
  std::uint32_t power = x;
  std::uint32_t k = 1;
  for (;;) {
    auto [it, fresh] = seen_at.emplace(power, k);
    if (!fresh) return {it->second, k - it->second};
    power = m.mul(power, x);
    ++k;
  }
}

//! Every subgroup of G, found by closing known subgroups with one extra
//! element until no new subgroup appears.  Sorted by (order, elements).
inline std::vector<Subgroup> all_subgroups(Monoid const& m, Subgroup const& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier;
  Subgroup const trivial = subgroup_closure(m, {});
  seen.insert(trivial.elements);
  out.push_back(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (auto const& h : frontier) {
      for (auto x : g.elements) {
        if (h.contains(x)) continue;
        std::vector<std::uint32_t> seed = h.elements;
        seed.push_back(x);
        Subgroup s = subgroup_closure(m, std::move(seed));
        if (seen.insert(s.elements).second) {
          out.push_back(s);
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

//! One representative per conjugacy class of subgroups of G, each class
//! keyed by the minimal sorted conjugate element list.
inline std::vector<Subgroup> subgroups_up_to_conjugacy(Monoid const& m,
                                                       Subgroup const& g) {
  std::vector<Subgroup> const all = all_subgroups(m, g);
  std::set<std::vector<std::uint32_t>> canonical_seen;
  std::vector<Subgroup> out;
  for (auto const& h : all) {
    std::vector<std::uint32_t> canonical = h.elements;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
      std::uint32_t const c = g.elements[i];
      std::uint32_t const cinv = g.inverses[i];
      std::vector<std::uint32_t> conj;
      conj.reserve(h.size());
      for (auto x : h.elements) conj.push_back(m.mul(m.mul(c, x), cinv));
      std::sort(conj.begin(), conj.end());
      if (conj < canonical) canonical = std::move(conj);
    }
    if (canonical_seen.insert(canonical).second) out.push_back(h);
  }
  return out;
}

}  // namespace monrep

#endif  // MONREP_MONOID_HPP
