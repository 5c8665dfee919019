// Copyright 2026 The pairmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pairmatch/disjoint_pairs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edge_mask.hpp"

namespace pairmatch {

using detail::EdgeMask;

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

bool is_disjoint_pair(const Graph& g, const DisjointPair& pair) {
  return is_matching(g, pair.h.edges()) && is_matching(g, pair.h_prime.edges()) &&
         edge_intersection(pair.h.edges(), pair.h_prime.edges()).empty();
}

namespace {

// Vertices by decreasing degree; each vertex's undecided edges are branched
// together so vertex capacities fill up early.
std::vector<std::size_t> branching_order(const Graph& g) {
  std::vector<Vertex> vertices(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vertices.begin(), vertices.end(), Vertex{0});
  std::stable_sort(vertices.begin(), vertices.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<char> taken(g.edge_count(), 0);
  std::vector<std::size_t> order;
  order.reserve(g.edge_count());
  for (const auto v : vertices) {
    for (const auto w : g.neighbors(v)) {
      const auto index = *g.edge_index(make_edge(v, w));
      if (!taken[index]) {
        taken[index] = 1;
        order.push_back(index);
      }
    }
  }
  return order;
}

enum Slot : std::uint8_t { kNone = 0, kH = 1, kHPrime = 2 };

/// Shared state of the two branch-and-bound passes. Edges are renumbered by
/// branching order; `used_` tracks which vertices each matching covers.
class PairSearch {
 public:
  PairSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const std::size_t m = g.edge_count();
    order_ = branching_order(g);
    for (auto index : order_) edges_.push_back(g.edge(index));
    const auto n = static_cast<std::size_t>(g.vertex_count());
    used_[kH].assign(n, 0);
    used_[kHPrime].assign(n, 0);
    slots_.assign(m, kNone);
    touch_h_.assign(n, 0);
    touch_hp_.assign(n, 0);
    touch_any_.assign(n, 0);
    nu_ = static_cast<int>(max_matching(g).size());
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

  /// Largest |H|+|H'|; `slots` receives the witness assignment.
  int maximize_total(std::vector<std::uint8_t>& slots) {
    best_ = seed_incumbent(slots);
    best_slots_ = slots;
    total_search(0, 0);
    slots = best_slots_;
    return best_;
  }

  /// Largest max(|H|,|H'|) among assignments with total `target`, starting
  /// from the incumbent `slots` (which must attain the target).
  int maximize_side(int target, std::vector<std::uint8_t>& slots) {
    target_ = target;
    best_slots_ = slots;
    best_ = std::max(count_slot(slots, kH), count_slot(slots, kHPrime));
    side_search(0, 0, 0);
    slots = best_slots_;
    return best_;
  }

  DisjointPair to_pair(const std::vector<std::uint8_t>& slots) const {
    std::vector<Edge> h;
    std::vector<Edge> hp;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i] == kH) h.push_back(edges_[i]);
      if (slots[i] == kHPrime) hp.push_back(edges_[i]);
    }
    if (h.size() < hp.size()) std::swap(h, hp);
    return {Matching(g_, std::move(h)), Matching(g_, std::move(hp))};
  }

 private:
  static int count_slot(const std::vector<std::uint8_t>& slots, std::uint8_t s) {
    return static_cast<int>(std::count(slots.begin(), slots.end(), s));
  }

  bool fits(std::size_t i, int slot) const {
    const auto& used = used_[slot];
    return !used[static_cast<std::size_t>(edges_[i].u)] && !used[static_cast<std::size_t>(edges_[i].v)];
  }

  void set(std::size_t i, int slot, char value) {
    used_[slot][static_cast<std::size_t>(edges_[i].u)] = value;
    used_[slot][static_cast<std::size_t>(edges_[i].v)] = value;
    slots_[i] = static_cast<std::uint8_t>(value ? slot : kNone);
  }

  struct Room {
    int h = 0;
    int hp = 0;
    int any = 0;
  };

  // Upper bounds on how many of edges i.. can still join H, H' or either.
  // Besides counting edges that fit, every vertex takes at most one more
  // edge per matching, which caps each count at half the vertex capacity.
  Room room_from(std::size_t i) {
    Room r;
    std::fill(touch_h_.begin(), touch_h_.end(), 0);
    std::fill(touch_hp_.begin(), touch_hp_.end(), 0);
    std::fill(touch_any_.begin(), touch_any_.end(), 0);
    for (; i < edges_.size(); ++i) {
      const bool a = fits(i, kH);
      const bool b = fits(i, kHPrime);
      r.h += a;
      r.hp += b;
      r.any += a || b;
      for (const auto v : {static_cast<std::size_t>(edges_[i].u), static_cast<std::size_t>(edges_[i].v)}) {
        touch_h_[v] |= static_cast<char>(a);
        touch_hp_[v] |= static_cast<char>(b);
        touch_any_[v] += static_cast<int>(a || b);
      }
    }
    int cap_h = 0;
    int cap_hp = 0;
    int cap_any = 0;
    for (std::size_t v = 0; v < touch_h_.size(); ++v) {
      cap_h += touch_h_[v];
      cap_hp += touch_hp_[v];
      cap_any += std::min(touch_h_[v] + touch_hp_[v], touch_any_[v]);
    }
    r.h = std::min(r.h, cap_h / 2);
    r.hp = std::min(r.hp, cap_hp / 2);
    r.any = std::min({r.any, r.h + r.hp, cap_any / 2});
    return r;
  }

  bool tick() {
    if (exceeded_) return false;
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    return true;
  }

  // Maximum matching plus a greedy second matching on the remaining edges.
  int seed_incumbent(std::vector<std::uint8_t>& slots) {
    slots.assign(edges_.size(), kNone);
    const auto m = max_matching(g_);
    std::vector<char> used(static_cast<std::size_t>(g_.vertex_count()), 0);
    int total = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (m.contains(edges_[i])) {
        slots[i] = kH;
        ++total;
      }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto u = static_cast<std::size_t>(edges_[i].u);
      const auto v = static_cast<std::size_t>(edges_[i].v);
      if (slots[i] == kNone && !used[u] && !used[v]) {
        slots[i] = kHPrime;
        used[u] = used[v] = 1;
        ++total;
      }
    }
    // Respect the symmetry cut: edge 0 is never alone in H'.
    if (!slots.empty() && slots[0] == kHPrime) {
      for (auto& s : slots) s = s == kH ? kHPrime : s == kHPrime ? kH : kNone;
    }
    return total;
  }

  void total_search(std::size_t i, int total) {
    if (best_ == 2 * nu_ || !tick()) return;
    if (total + room_from(i).any <= best_) return;
    if (i == edges_.size()) {
      best_ = total;
      best_slots_ = slots_;
      return;
    }
    if (fits(i, kH)) {
      set(i, kH, 1);
      total_search(i + 1, total + 1);
      set(i, kH, 0);
    }
    if (i != 0 && fits(i, kHPrime)) {
      set(i, kHPrime, 1);
      total_search(i + 1, total + 1);
      set(i, kHPrime, 0);
    }
    total_search(i + 1, total);
  }

  void side_search(std::size_t i, int h, int hp) {
    if (best_ == nu_ || !tick()) return;
    const Room r = room_from(i);
    if (h + hp + r.any < target_) return;
    if (std::max(h + r.h, hp + r.hp) <= best_) return;
    if (i == edges_.size()) {
      best_ = std::max(h, hp);
      best_slots_ = slots_;
      return;
    }
    if (fits(i, kH)) {
      set(i, kH, 1);
      side_search(i + 1, h + 1, hp);
      set(i, kH, 0);
    }
    if (i != 0 && fits(i, kHPrime)) {
      set(i, kHPrime, 1);
      side_search(i + 1, h, hp + 1);
      set(i, kHPrime, 0);
    }
    side_search(i + 1, h, hp);
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<std::size_t> order_;
  std::vector<Edge> edges_;
  std::vector<char> used_[3];
  std::vector<char> touch_h_;
  std::vector<char> touch_hp_;
  std::vector<int> touch_any_;  // undecided edges at v that fit somewhere
  std::vector<std::uint8_t> slots_;
  std::vector<std::uint8_t> best_slots_;
  int nu_ = 0;
  int best_ = 0;
  int target_ = 0;
};

void check_enumeration_ceiling(const Graph& g, const EnumerationLimits& limits, const char* what) {
  const std::size_t ceiling = limits.edge_ceiling;
  if (ceiling > 64) throw CeilingExceeded("edge ceiling above 64 is not supported");
  if (g.edge_count() > ceiling) {
    throw CeilingExceeded(std::string(what) + " supports at most " + std::to_string(ceiling) +
                          " edges, got " + std::to_string(g.edge_count()));
  }
}

/// Depth-first enumeration of M2(G) as (H, H') mask pairs.
void for_each_m2_mask(const Graph& g, const EnumerationLimits& limits,
                      const std::function<void(EdgeMask, EdgeMask)>& visit) {
  check_enumeration_ceiling(g, limits, "M2 enumeration");
  const auto solved = solve_pair(g, {limits.node_budget});
  if (!solved.solved()) throw BudgetExceeded("node budget exhausted while computing lambda2/alpha2");
  const int want_h = solved.result->alpha2;
  const int want_hp = solved.result->lambda2 - want_h;

  const std::size_t m = g.edge_count();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> used_h(n, 0);
  std::vector<char> used_hp(n, 0);
  std::uint64_t nodes = solved.nodes;
  EdgeMask hmask = 0;
  EdgeMask pmask = 0;

  auto free_in = [&](const std::vector<char>& used, const Edge& e) {
    return !used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)];
  };

  auto rec = [&](auto&& self, std::size_t i, int h, int hp) -> void {
    if (++nodes > limits.node_budget) throw BudgetExceeded("node budget exhausted during M2 enumeration");
    if (h == want_h && hp == want_hp) {
      visit(hmask, pmask);
      return;
    }
    int room_h = 0;
    int room_hp = 0;
    for (std::size_t k = i; k < m; ++k) {
      room_h += free_in(used_h, g.edge(k));
      room_hp += free_in(used_hp, g.edge(k));
    }
    if (h + room_h < want_h || hp + room_hp < want_hp) return;

    const Edge& e = g.edge(i);
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    const EdgeMask bit = EdgeMask{1} << i;
    self(self, i + 1, h, hp);
    if (h < want_h && free_in(used_h, e)) {
      used_h[u] = used_h[v] = 1;
      hmask |= bit;
      self(self, i + 1, h + 1, hp);
      hmask &= ~bit;
      used_h[u] = used_h[v] = 0;
    }
    if (hp < want_hp && free_in(used_hp, e)) {
      used_hp[u] = used_hp[v] = 1;
      pmask |= bit;
      self(self, i + 1, h, hp + 1);
      pmask &= ~bit;
      used_hp[u] = used_hp[v] = 0;
    }
  };
  rec(rec, 0, 0, 0);
}

struct MaskTriple {
  EdgeMask h;
  EdgeMask hp;
  EdgeMask m;
};

bool lex_less(const MaskTriple& a, const MaskTriple& b) {
  if (a.h != b.h) return detail::lex_less(a.h, b.h);
  if (a.hp != b.hp) return detail::lex_less(a.hp, b.hp);
  return detail::lex_less(a.m, b.m);
}

std::vector<MaskTriple> best_triples(const Graph& g, const EnumerationLimits& limits) {
  check_enumeration_ceiling(g, limits, "canonical triple search");
  std::vector<std::pair<EdgeMask, EdgeMask>> pairs;
  for_each_m2_mask(g, limits, [&](EdgeMask h, EdgeMask hp) { pairs.emplace_back(h, hp); });
  std::vector<EdgeMask> maxima;
  for_each_matching_of_size(g, max_matching(g).size(), [&](EdgeMask m) { maxima.push_back(m); });

  std::pair<int, int> best{-1, -1};
  std::vector<MaskTriple> ties;
  for (const auto& [h, hp] : pairs) {
    for (const EdgeMask m : maxima) {
      const std::pair<int, int> key{detail::count(m & h), detail::count(m & hp)};
      if (key > best) {
        best = key;
        ties.clear();
      }
      if (key == best) ties.push_back({h, hp, m});
    }
  }
  std::sort(ties.begin(), ties.end(), [](const MaskTriple& a, const MaskTriple& b) { return lex_less(a, b); });
  return ties;
}

CanonicalTriple to_triple(const Graph& g, const MaskTriple& t) {
  return {detail::to_matching(g, t.h), detail::to_matching(g, t.hp), detail::to_matching(g, t.m)};
}

}  // namespace

PairSolve solve_pair(const Graph& g, const PairSolveOptions& options) {
  PairSearch search(g, options.node_budget);
  std::vector<std::uint8_t> slots;
  const int lambda2 = search.maximize_total(slots);
  if (!search.exceeded()) {
    const int alpha2 = search.maximize_side(lambda2, slots);
    if (!search.exceeded()) {
      return {SolveStatus::solved, DisjointPairResult{lambda2, alpha2, search.to_pair(slots)}, search.nodes()};
    }
  }
  return {SolveStatus::budget_exceeded, std::nullopt, search.nodes()};
}

DisjointPairResult solve_pair_bruteforce(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kPairOracleEdgeCeiling) {
    throw CeilingExceeded("brute-force pair oracle supports at most " +
                          std::to_string(kPairOracleEdgeCeiling) + " edges, got " + std::to_string(m));
  }
  // Compact vertex numbering so each edge subset's cover fits in 32 bits.
  std::vector<int> compact(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<std::uint32_t> edge_cover(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex x : {g.edge(i).u, g.edge(i).v}) {
      auto& c = compact[static_cast<std::size_t>(x)];
      if (c < 0) c = next++;
      edge_cover[i] |= std::uint32_t{1} << c;
    }
  }
  const EdgeMask full = (EdgeMask{1} << m) - 1;
  std::vector<char> valid(full + 1, 0);
  std::vector<std::uint32_t> cover(full + 1, 0);
  valid[0] = 1;
  for (EdgeMask s = 1; s <= full; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    const EdgeMask rest = s & (s - 1);
    valid[s] = valid[rest] && !(cover[rest] & edge_cover[low]);
    cover[s] = cover[rest] | edge_cover[low];
  }

  int best_total = -1;
  int best_side = -1;
  EdgeMask best_h = 0;
  EdgeMask best_hp = 0;
  for (EdgeMask h = 0; h <= full; ++h) {
    if (!valid[h]) continue;
    const EdgeMask rest = full & ~h;
    // every submask of the complement, including the empty one
    for (EdgeMask hp = rest;; hp = (hp - 1) & rest) {
      if (valid[hp]) {
        const int a = detail::count(h);
        const int b = detail::count(hp);
        if (a + b > best_total || (a + b == best_total && std::max(a, b) > best_side)) {
          best_total = a + b;
          best_side = std::max(a, b);
          best_h = a >= b ? h : hp;
          best_hp = a >= b ? hp : h;
        }
      }
      if (hp == 0) break;
    }
  }
  return {best_total, best_side, {detail::to_matching(g, best_h), detail::to_matching(g, best_hp)}};
}

void for_each_m2(const Graph& g, const std::function<void(const DisjointPair&)>& visit,
                 const EnumerationLimits& limits) {
  for_each_m2_mask(g, limits, [&](EdgeMask h, EdgeMask hp) {
    visit(DisjointPair{detail::to_matching(g, h), detail::to_matching(g, hp)});
  });
}

std::vector<DisjointPair> enumerate_m2(const Graph& g, const EnumerationLimits& limits) {
  std::vector<DisjointPair> out;
  for_each_m2(g, [&](const DisjointPair& p) { out.push_back(p); }, limits);
  return out;
}

CanonicalTriple canonical_triple(const Graph& g, const EnumerationLimits& limits) {
  return to_triple(g, best_triples(g, limits).front());
}

std::vector<CanonicalTriple> maximizing_triples(const Graph& g, const EnumerationLimits& limits) {
  std::vector<CanonicalTriple> out;
  for (const auto& t : best_triples(g, limits)) out.push_back(to_triple(g, t));
  return out;
}

}  // namespace pairmatch
