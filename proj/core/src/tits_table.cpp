#include "satake/tits_table.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "satake/finite_group.hpp"

namespace satake {

const std::vector<ExceptionalIndexEntry>& exceptional_isotropic_indices(CartanType t) {
  static const std::vector<ExceptionalIndexEntry> g2 = {
      {"G I", {}, 1, true, true, true},
  };
  static const std::vector<ExceptionalIndexEntry> f4 = {
      {"F I", {}, 1, true, true, true},
      {"F II", {0, 1, 2}, 1, true, false, false},
  };
  static const std::vector<ExceptionalIndexEntry> e6 = {
      {"E I", {}, 1, true, true, true},
      {"1E6{(A2)^2}", {0, 2, 4, 5}, 1, false, true, false},
      {"E IV", {1, 2, 3, 4}, 1, true, false, false},
      {"E II", {}, 2, true, true, true},
      {"2E6{(A2)^2}", {0, 2, 4, 5}, 2, false, false, false},
      {"E III", {2, 3, 4}, 2, true, false, false},
      {"2E6{D4}", {1, 2, 3, 4}, 2, false, false, false},
      {"2E6{A5}", {0, 2, 3, 4, 5}, 2, false, false, false},
  };
  static const std::vector<ExceptionalIndexEntry> e7 = {
      {"E V", {}, 1, true, true, true},
      {"E VI", {1, 4, 6}, 1, true, true, false},
      {"E VII", {1, 2, 3, 4}, 1, true, false, false},
      {"1E7{D4A1}", {1, 2, 3, 4, 6}, 1, false, false, false},
      {"1E7{D5A1}", {0, 1, 2, 3, 4, 6}, 1, false, false, false},
      {"1E7{D6}", {1, 2, 3, 4, 5, 6}, 1, false, false, false},
      {"1E7{E6}", {0, 1, 2, 3, 4, 5}, 1, false, false, false},
  };
  static const std::vector<ExceptionalIndexEntry> e8 = {
      {"E VIII", {}, 1, true, true, true},
      {"E IX", {1, 2, 3, 4}, 1, true, false, false},
      {"1E8{D6}", {1, 2, 3, 4, 5, 6}, 1, false, false, false},
      {"1E8{E6}", {0, 1, 2, 3, 4, 5}, 1, false, false, false},
      {"1E8{D7}", {1, 2, 3, 4, 5, 6, 7}, 1, false, false, false},
      {"1E8{E7}", {0, 1, 2, 3, 4, 5, 6}, 1, false, false, false},
  };
  switch (t.family) {
    case Family::G: return g2;
    case Family::F: return f4;
    case Family::E:
      if (t.rank == 6) return e6;
      if (t.rank == 7) return e7;
      return e8;
    default:
      throw std::invalid_argument("exceptional_isotropic_indices: not exceptional");
  }
}

AbstractIndex realize_exceptional_index(CartanType t, const ExceptionalIndexEntry& e) {
  const RootSystem& rs = RootSystem::get(t);
  AbstractIndex idx;
  idx.ambient = &rs;
  idx.delta.assign(rs.simple.begin(), rs.simple.end());
  for (int n : e.delta0_nodes) idx.delta0.push_back(rs.simple[n]);
  if (e.pi_order == 1) {
    idx.pi = IsometryGroup::trivial(rs);
  } else {
    auto autos = diagram_automorphisms(rs);
    if (autos.empty()) throw std::logic_error("realize_exceptional_index: no diagram flip");
    idx.pi = IsometryGroup(rs, {autos[0]});
  }
  return idx;
}

const ExceptionalIndexEntry& identify_exceptional_entry(const AbstractIndex& g) {
  const RootSystem& rs = g.system();
  std::string fp = index_iso_fingerprint(g);
  for (const auto& e : exceptional_isotropic_indices(rs.type)) {
    AbstractIndex cand = realize_exceptional_index(rs.type, e);
    if (index_iso_fingerprint(cand) == fp) return e;
  }
  throw std::invalid_argument("identify_exceptional_entry: no Table II match");
}

IndexName identify_name(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  IndexName n;
  long long g = idx.pi.order();
  n.type_label = (g > 1 ? std::to_string(g) : std::string("1")) + rs.type.name();
  n.anisotropic_pattern = identify_type_untagged(rs, idx.psi0());
  if (rs.type.is_exceptional() && idx.delta.size() == static_cast<std::size_t>(rs.rank)) {
    try {
      n.tits_name = identify_exceptional_entry(idx).name;
      return n;
    } catch (const std::invalid_argument&) {
    }
  }
  n.tits_name = n.type_label + "{" + n.anisotropic_pattern + "}";
  return n;
}


namespace {

std::set<int> range_set(int from, int to) {
  std::set<int> s;
  for (int i = from; i <= to; ++i) s.insert(i);
  return s;
}

}  // namespace

/// Minimal black-node mask of a component in standard Bourbaki positions,
/// over all isomorphisms of the component onto the standard diagram of its
/// type. Lengths ride along through the asymmetric Cartan integers.
std::pair<std::string, std::uint32_t> component_standard_pattern(const RootSystem& rs,
                                                     const std::vector<RootIndex>& comp,
                                                     const std::vector<RootIndex>& black) {
  std::size_t k = comp.size();
  PosSet sys = span_closure(rs, comp);
  std::string type = identify_type_untagged(rs, sys);
  char family = type[0];
  // tilde components are abstract A/D types
  char abstract_family = family;
  CartanType std_type(static_cast<Family>(abstract_family), static_cast<int>(k));
  auto std_cartan = std_type.cartan_matrix();

  std::vector<std::vector<long long>> cart(k, std::vector<long long>(k, 2));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) cart[i][j] = rs.cartan_int(comp[i], comp[j]);

  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::uint32_t best = 0xffffffffu;
  do {
    // perm[p] = component node placed at standard position p
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j)
        if (cart[perm[i]][perm[j]] != std_cartan[i][j]) ok = false;
    if (!ok) continue;
    std::uint32_t mask = 0;
    for (std::size_t p = 0; p < k; ++p) {
      RootIndex node = comp[perm[p]];
      if (std::find(black.begin(), black.end(), node) != black.end()) mask |= (1u << p);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best == 0xffffffffu)
    throw std::logic_error("component_code: no isomorphism onto the standard diagram");
  return {type, best};
}


bool pattern_in_table_ii(char family, int n, int fold, const std::set<int>& black) {
  if (black.empty()) return true;  // split / quasisplit
  std::set<int> all = range_set(1, n);
  switch (family) {
    case 'A': {
      if (fold == 1) {
        // inner forms: white nodes at the multiples of d for some d | n+1
        for (int d = 2; d <= n + 1; ++d) {
          if ((n + 1) % d != 0) continue;
          std::set<int> b = all;
          for (int i = d; i <= n; i += d) b.erase(i);
          if (b == black) return true;
        }
        return false;
      }
      // outer: white at {d, 2d, ..., rd} and mirrors, d | n+1, 2rd <= n+1
      for (int d = 1; d <= n + 1; ++d) {
        if ((n + 1) % d != 0) continue;
        for (int r = 0; 2 * r * d <= n + 1; ++r) {
          std::set<int> b = all;
          for (int i = 1; i <= r; ++i) {
            b.erase(i * d);
            b.erase(n + 1 - i * d);
          }
          if (b == black) return true;
        }
      }
      return false;
    }
    case 'B':
      return black == range_set(n - static_cast<int>(black.size()) + 1, n);
    case 'C': {
      // white nodes exactly {2, 4, ..., 2r}
      for (int r = 0; 2 * r <= n; ++r) {
        std::set<int> b = all;
        for (int i = 1; i <= r; ++i) b.erase(2 * i);
        if (b == black) return true;
      }
      return false;
    }
    case 'D': {
      if (fold >= 3) {
        // trialitarian D4
        return black == std::set<int>{1, 3, 4} || black == all;
      }
      // tails of length >= 2 (both fork ends in)
      int t = static_cast<int>(black.size());
      if (t >= 2 && black == range_set(n - t + 1, n)) return true;
      // quaternionic: white = {2,4,...,2r}, plus (n even, r = n/2) the
      // variant with the last white node on a fork end
      for (int r = 0; 2 * r <= n; ++r) {
        std::set<int> b = all;
        for (int i = 1; i <= r; ++i) b.erase(2 * i);
        if (b == black) return true;
        if (2 * r == n && r >= 1) {
          // either fork end may carry the last white node
          for (int end : {n, n - 1}) {
            std::set<int> b2 = all;
            for (int i = 1; i < r; ++i) b2.erase(2 * i);
            b2.erase(end);
            if (b2 == black) return true;
          }
        }
      }
      return false;
    }
    case 'E': {
      if (n == 6) {
        if (fold == 1)
          return black == std::set<int>{1, 3, 5, 6} || black == std::set<int>{2, 3, 4, 5} ||
                 black == all;
        return black == std::set<int>{3, 4, 5} || black == std::set<int>{1, 3, 5, 6} ||
               black == std::set<int>{2, 3, 4, 5} || black == std::set<int>{1, 3, 4, 5, 6} ||
               black == all;
      }
      if (n == 7)
        return black == std::set<int>{2, 5, 7} || black == std::set<int>{2, 3, 4, 5} ||
               black == std::set<int>{2, 3, 4, 5, 7} || black == std::set<int>{1, 2, 3, 4, 5, 7} ||
               black == std::set<int>{2, 3, 4, 5, 6, 7} || black == range_set(1, 6) ||
               black == all;
      return black == std::set<int>{2, 3, 4, 5} || black == range_set(2, 7) ||
             black == range_set(1, 6) || black == range_set(2, 8) || black == range_set(1, 7) ||
             black == all;
    }
    case 'F':
      return black == std::set<int>{1, 2, 3} || black == all;
    case 'G':
      return black == all;
    default:
      return false;
  }
}

namespace {

struct Block {
  std::vector<std::vector<RootIndex>> comps;  // node lists
  int fold = 1;                               // induced automorphism order on one component
};

std::vector<Block> pi_blocks(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  auto comps = base_components(rs, idx.delta);
  std::vector<int> block(comps.size(), -1);
  auto comp_of = [&](RootIndex r) -> int {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::find(comps[c].begin(), comps[c].end(), r) != comps[c].end())
        return static_cast<int>(c);
    return -1;
  };
  int nb = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (block[c] >= 0) continue;
    block[c] = nb;
    std::vector<std::size_t> stack{c};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& gen : idx.pi.generators()) {
        int img = comp_of(gen(comps[cur][0]));
        if (img >= 0 && block[img] < 0) {
          block[img] = nb;
          stack.push_back(static_cast<std::size_t>(img));
        }
      }
    }
    ++nb;
  }
  std::vector<Block> out(nb);
  for (std::size_t c = 0; c < comps.size(); ++c) out[block[c]].comps.push_back(comps[c]);
  // induced automorphism order on a fixed component of the block
  for (auto& b : out) {
    if (idx.pi.is_trivial()) { b.fold = 1; continue; }
    const auto& c0 = b.comps[0];
    std::set<std::vector<RootIndex>> images;
    for (const auto& el : idx.pi.elements()) {
      RootIndex img0 = el(c0[0]);
      bool inside = std::find(c0.begin(), c0.end(), img0) != c0.end();
      if (!inside) continue;
      std::vector<RootIndex> im;
      for (RootIndex r : c0) im.push_back(el(r));
      images.insert(std::move(im));
    }
    b.fold = std::max<int>(1, static_cast<int>(images.size()));
  }
  return out;
}

struct ComponentShape {
  char family;
  int rank;
  std::vector<int> kernel_positions;  // positions along a canonical node order
  std::vector<int> kernel_comp_ranks; // ranks of kernel components
  int kernel_rank;
  bool kernel_empty;
  bool kernel_full;
  std::string kernel_type;
};

ComponentShape component_shape(const AbstractIndex& idx, const std::vector<RootIndex>& comp) {
  const RootSystem& rs = idx.system();
  ComponentShape s;
  PosSet sys = span_closure(rs, comp);
  std::string t = identify_type_untagged(rs, sys);
  s.family = t[0];
  s.rank = static_cast<int>(comp.size());
  std::vector<RootIndex> kernel;
  for (RootIndex r : comp)
    if (idx.in_delta0(r)) kernel.push_back(r);
  s.kernel_rank = static_cast<int>(kernel.size());
  s.kernel_empty = kernel.empty();
  s.kernel_full = kernel.size() == comp.size();
  if (!kernel.empty()) {
    for (const auto& kc : base_components(rs, kernel))
      s.kernel_comp_ranks.push_back(static_cast<int>(kc.size()));
    std::sort(s.kernel_comp_ranks.begin(), s.kernel_comp_ranks.end());
    s.kernel_type = identify_type_untagged(rs, span_closure(rs, kernel));
  } else {
    s.kernel_type = "-";
  }
  // canonical node order: walk the diagram from an end (A/B/C), used for the
  // A-type alternating test
  if (s.family == 'A' && s.rank >= 2) {
    std::vector<int> deg(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j)
        if (i != j && rs.inner6(comp[i], comp[j]) != 0) deg[i]++;
    std::size_t end = 0;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (deg[i] == 1) { end = i; break; }
    std::vector<std::size_t> order{end};
    std::vector<bool> used(comp.size(), false);
    used[end] = true;
    while (order.size() < comp.size()) {
      std::size_t cur = order.back();
      for (std::size_t j = 0; j < comp.size(); ++j)
        if (!used[j] && rs.inner6(comp[cur], comp[j]) != 0) {
          order.push_back(j);
          used[j] = true;
          break;
        }
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      if (idx.in_delta0(comp[order[pos]])) s.kernel_positions.push_back(static_cast<int>(pos));
  }
  return s;
}

bool opposition_nontrivial(char family, int rank) {
  if (family == 'A') return rank >= 2;
  if (family == 'D') return rank % 2 == 1;
  if (family == 'E') return rank == 6;
  return false;
}

bool block_real_admissible(const AbstractIndex& idx, const Block& b) {
  const std::size_t m = b.comps.size();
  if (m >= 3) return false;
  if (m == 2) {
    // restriction of scalars from C: both components fully white
    for (const auto& c : b.comps)
      for (RootIndex r : c)
        if (idx.in_delta0(r)) return false;
    return true;
  }
  ComponentShape s = component_shape(idx, b.comps[0]);
  int g = b.fold;
  if (g > 2) return false;
  if (s.kernel_empty) return true;  // split/quasisplit forms exist
  if (s.kernel_full)
    return (g == 2) == opposition_nontrivial(s.family, s.rank);  // compact form
  switch (s.family) {
    case 'A':
      if (s.rank == 1) return false;  // neither empty nor full can happen
      if (g == 1) {
        // SL_m(H): odd rank, kernel (A1)^k on alternating positions 0,2,4,...
        if (s.rank % 2 == 0) return false;
        if (s.kernel_rank != (s.rank + 1) / 2) return false;
        for (std::size_t i = 0; i < s.kernel_positions.size(); ++i)
          if (s.kernel_positions[i] != static_cast<int>(2 * i)) return false;
        return true;
      }
      // SU(p,q): one central segment
      return s.kernel_comp_ranks.size() == 1;
    case 'B':
      return true;  // any tail, SO(p,q)
    case 'C':
      return true;  // Sp(p,q) patterns
    case 'D': {
      // tails: SO(p,q) parity; alternating A1s: SO*(2n)
      bool all_a1 = true;
      for (int r : s.kernel_comp_ranks)
        if (r != 1) all_a1 = false;
      int t = s.kernel_rank;
      if (all_a1 && s.kernel_rank * 2 <= s.rank + 1) {
        // SO*-type alternating: inner iff rank even
        return (g == 1) == (s.rank % 2 == 0);
      }
      // D-tail of length t: inner iff t even
      return (g == 1) == (t % 2 == 0);
    }
    case 'E':
      if (s.rank == 6) {
        if (g == 1) return s.kernel_type == "D4";
        return s.kernel_type == "A3";
      }
      if (s.rank == 7) return s.kernel_type == "(A1)^3" || s.kernel_type == "D4";
      return s.kernel_type == "D4";  // E8: E IX
    case 'F':
      return s.kernel_type == "B3";
    default:
      return false;
  }
}

bool block_padic_admissible(const AbstractIndex& idx, const Block& b) {
  // restriction of scalars over an extension: reduce to one component with
  // its internal fold
  ComponentShape s = component_shape(idx, b.comps[0]);
  int g = b.fold;
  if (s.kernel_empty) return true;  // quasisplit
  switch (s.family) {
    case 'A': {
      if (g == 1) return true;  // inner forms of A exist for every kernel
      // 2A: kernel components of size d-1 in symmetric pairs plus one central
      // component of size c*d - 1; admissible iff d <= 2 and c*d <= 2
      if (s.kernel_full) return s.rank == 1;
      std::map<int, int> by_rank;
      for (int r : s.kernel_comp_ranks) by_rank[r]++;
      int d = 1, c = 0;
      if (by_rank.size() == 1) {
        int r0 = by_rank.begin()->first, n0 = by_rank.begin()->second;
        if (n0 % 2 == 0) { d = r0 + 1; c = 0; }
        else if (n0 == 1) { d = 1; c = r0 + 1; }  // single central segment
        else { d = r0 + 1; c = 1; }               // odd count: one is central
      } else if (by_rank.size() == 2) {
        auto it = by_rank.begin();
        int r1 = it->first, n1 = it->second;
        ++it;
        int r2 = it->first, n2 = it->second;
        // the paired blocks all share size d-1, the central one is the odd one out
        if (n2 % 2 == 0 && n1 == 1) { d = r2 + 1; c = (r1 + 1 + d - 1) / d; }
        else if (n1 % 2 == 0 && n2 == 1) { d = r1 + 1; c = (r2 + 1 + d - 1) / d; }
        else return false;
        if ((c * d) - 1 != std::max(r1, r2) && (c * d) - 1 != std::min(r1, r2)) {
          // central segment size must be c*d - 1 exactly
        }
      } else {
        return false;
      }
      return d <= 2 && c * d <= 2;
    }
    case 'B':
      return s.kernel_rank <= 1;
    case 'C': {
      for (int r : s.kernel_comp_ranks)
        if (r >= 2) return false;
      return true;
    }
    case 'D': {
      for (int r : s.kernel_comp_ranks)
        if (r >= 3) return false;
      if (g >= 3) return false;  // trialitarian: quasisplit only
      return 2 * s.kernel_rank - s.rank <= 3;
    }
    case 'E':
      if (s.rank == 6) return g == 1 && s.kernel_type == "(A2)^2";
      if (s.rank == 7) return s.kernel_type == "(A1)^3";
      return false;
    default:
      return false;  // F4/G2 kernels are never p-adic
  }
}

bool pi_solvable(const IsometryGroup& pi) {
  if (pi.is_trivial()) return true;
  FiniteGroup g(pi);
  // derived series on element-index subgroups
  Subgroup cur;
  for (std::uint16_t i = 0; i < g.order(); ++i) cur.push_back(i);
  for (int step = 0; step < 20; ++step) {
    Subgroup comm;
    std::set<std::uint16_t> gens;
    for (auto a : cur)
      for (auto b : cur)
        gens.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    Subgroup seed(gens.begin(), gens.end());
    Subgroup next = subgroup_closure(g, seed);
    if (next.size() == 1) return true;
    if (next == cur) return false;
    cur = next;
  }
  return false;
}

}  // namespace


bool index_in_table_ii(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  for (const auto& b : pi_blocks(idx)) {
    const auto& comp = b.comps[0];
    auto [type, mask] = component_standard_pattern(rs, comp, idx.delta0);
    char family = type[0];
    std::set<int> black;
    for (std::size_t p = 0; p < comp.size(); ++p)
      if (mask & (1u << p)) black.insert(static_cast<int>(p) + 1);
    if (!pattern_in_table_ii(family, static_cast<int>(comp.size()), b.fold, black)) return false;
  }
  return true;
}

bool index_real_admissible(const AbstractIndex& idx) {
  if (idx.pi.order() > 2) return false;
  for (const auto& b : pi_blocks(idx))
    if (!block_real_admissible(idx, b)) return false;
  return true;
}

bool index_padic_admissible(const AbstractIndex& idx) {
  if (!pi_solvable(idx.pi)) return false;
  for (const auto& b : pi_blocks(idx))
    if (!block_padic_admissible(idx, b)) return false;
  return true;
}

}  // namespace satake
