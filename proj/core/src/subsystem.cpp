#include "satake/subsystem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>
#include <stdexcept>

#include "satake/finite_group.hpp"

namespace satake {

namespace {

struct SumEntry {
  RootIndex pos;     // positive half of the sum root
  long long mag;     // |c^{mn}|
};

/// For each ordered root pair, the roots forced into a p-closed set together
/// with the structure-constant magnitude, plus the mutual reflection image.
/// Built once per root system.
struct ClosureTables {
  std::vector<std::vector<std::vector<SumEntry>>> sums;  // [a][b] over all roots
  explicit ClosureTables(const RootSystem& rs) {
    std::size_t n = rs.size();
    sums.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      sums[a].assign(n, {});
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || rs.neg[a] == b) continue;
        auto& slot = sums[a][b];
        for (auto [m, nn, mag] :
             rs.structure_constant_magnitudes(static_cast<RootIndex>(a), static_cast<RootIndex>(b))) {
          RootCoord c{};
          for (int i = 0; i < rs.rank; ++i)
            c[i] = static_cast<std::int8_t>(m * rs.roots[a][i] + nn * rs.roots[b][i]);
          slot.push_back(SumEntry{rs.pos_half(rs.index_of(c)), mag});
        }
        // mutual reflection keeps the set a subsystem regardless of p
        RootIndex refl = rs.reflection_perm(static_cast<RootIndex>(a))[b];
        slot.push_back(SumEntry{rs.pos_half(refl), 0});  // mag 0 = unconditional
      }
    }
  }
};

const ClosureTables& closure_tables(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<ClosureTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(rs.type.family), rs.type.rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<ClosureTables>(rs)).first;
  return *it->second;
}

}  // namespace

PosSet p_closure_set(const RootSystem& rs, const PosSet& seed, long long p) {
  const auto& tables = closure_tables(rs);
  PosSet s = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<RootIndex> members = rs.set_to_roots(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        RootIndex a = members[i], b = members[j];
        if (a == b || rs.neg[a] == b) continue;
        for (const SumEntry& e : tables.sums[a][b]) {
          if (e.mag != 0 && p != 0 && e.mag % p == 0) continue;
          if (!s.test(e.pos)) { s.set(e.pos); changed = true; }
        }
      }
    }
  }
  return s;
}

PosSet p_closure(const RootSystem& rs, const std::vector<RootIndex>& seed, long long p) {
  PosSet s;
  for (RootIndex r : seed) s.set(rs.pos_half(r));
  return p_closure_set(rs, s, p);
}

bool is_p_closed(const RootSystem& rs, const PosSet& psi, long long p) {
  return p_closure_set(rs, psi, p) == psi;
}

PosSet perp_set(const RootSystem& rs, const PosSet& psi) {
  PosSet out;
  for (std::size_t b = 0; b < rs.n_positive; ++b) {
    bool orth = true;
    for (std::size_t a = 0; a < rs.n_positive && orth; ++a)
      if (psi.test(a) && rs.inner6(static_cast<RootIndex>(b), static_cast<RootIndex>(a)) != 0)
        orth = false;
    if (orth) out.set(b);
  }
  return out;
}

bool is_parabolic_subsystem(const RootSystem& rs, const PosSet& psi) {
  if (psi.none()) return true;
  // one RREF of the span, then membership elimination per outside root
  QMat basis;
  for (std::size_t i = 0; i < rs.n_positive; ++i)
    if (psi.test(i)) {
      basis.push_back(rs.coords_q(static_cast<RootIndex>(i)));
      if (basis.size() == static_cast<std::size_t>(rs.rank)) break;
    }
  row_reduce(basis);
  std::vector<int> pivot(basis.size(), -1);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < rs.rank; ++c)
      if (!basis[r][c].is_zero()) { pivot[r] = c; break; }
  // the first `rank` members need not span psi; rebuild against all members
  for (std::size_t i = 0; i < rs.n_positive; ++i) {
    if (!psi.test(i)) continue;
    QVec v = rs.coords_q(static_cast<RootIndex>(i));
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (!v[pivot[r]].is_zero()) {
        Rational f = v[pivot[r]];
        for (int c = 0; c < rs.rank; ++c) v[c] -= f * basis[r][c];
      }
    if (!is_zero(v)) {
      basis.push_back(rs.coords_q(static_cast<RootIndex>(i)));
      row_reduce(basis);
      pivot.assign(basis.size(), -1);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < rs.rank; ++c)
          if (!basis[r][c].is_zero()) { pivot[r] = c; break; }
    }
  }
  for (std::size_t i = 0; i < rs.n_positive; ++i) {
    if (psi.test(i)) continue;
    QVec v = rs.coords_q(static_cast<RootIndex>(i));
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (!v[pivot[r]].is_zero()) {
        Rational f = v[pivot[r]];
        for (int c = 0; c < rs.rank; ++c) v[c] -= f * basis[r][c];
      }
    if (is_zero(v)) return false;
  }
  return true;
}

bool contained_in_d4(const RootSystem& rs, const PosSet& psi) {
  auto is_d4 = [&](const PosSet& s) {
    return s.count() == 12 && identify_type_untagged(rs, s) == "D4";
  };
  PosSet base = p_closure_set(rs, psi, 0);
  if (is_d4(base)) return true;
  if (base.count() > 12) return false;
  std::vector<RootIndex> outside;
  for (std::size_t i = 0; i < rs.n_positive; ++i)
    if (!base.test(i)) outside.push_back(static_cast<RootIndex>(i));
  for (RootIndex b : outside) {
    PosSet s1 = base;
    s1.set(b);
    s1 = p_closure_set(rs, s1, 0);
    if (is_d4(s1)) return true;
    if (s1.count() >= 12) continue;
    for (RootIndex c : outside) {
      if (c <= b || s1.test(c)) continue;
      PosSet s2 = s1;
      s2.set(c);
      s2 = p_closure_set(rs, s2, 0);
      if (is_d4(s2)) return true;
    }
  }
  return false;
}

std::vector<std::vector<RootIndex>> base_components(const RootSystem& rs,
                                                    const std::vector<RootIndex>& base) {
  std::size_t k = base.size();
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < k; ++j) {
        if (comp[j] >= 0) continue;
        if (!rs.inner_roots(base[cur], base[j]).is_zero()) {
          comp[j] = nc;
          stack.push_back(j);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<RootIndex>> out(nc);
  for (std::size_t i = 0; i < k; ++i) out[comp[i]].push_back(base[i]);
  return out;
}

namespace {

struct ComponentType {
  char family;
  int rank;
  bool tilde;

  bool operator<(const ComponentType& o) const {
    if (rank != o.rank) return rank > o.rank;  // big first
    if (tilde != o.tilde) return !tilde;       // untilde first
    return family < o.family;
  }
  bool operator==(const ComponentType& o) const = default;

  std::string str() const {
    std::string s(1, family);
    s += std::to_string(rank);
    if (tilde) s += "~";
    return s;
  }
};

ComponentType classify_component(const RootSystem& rs, const std::vector<RootIndex>& comp) {
  int k = static_cast<int>(comp.size());
  bool all_short = true;
  for (RootIndex r : comp)
    if (rs.is_long(r)) all_short = false;
  bool tilde = all_short && !rs.type.is_simply_laced();

  if (k == 1) return {'A', 1, tilde};

  int max_bond = 0;
  std::vector<int> degree(k, 0);
  std::vector<std::vector<int>> bond(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      long long m = rs.cartan_int(comp[i], comp[j]) * rs.cartan_int(comp[j], comp[i]);
      bond[i][j] = static_cast<int>(m);
      if (m > 0) degree[i]++;
      max_bond = std::max<int>(max_bond, static_cast<int>(m));
    }

  if (max_bond == 3) return {'G', 2, false};
  if (max_bond == 2) {
    if (k == 2) return {'B', 2, false};
    // inside F4 the relative length of the component's own roots decides B vs C
    Rational mx(0), mn(1000);
    for (RootIndex r : comp) {
      Rational n2 = rs.norm2(r);
      if (mx < n2) mx = n2;
      if (n2 < mn) mn = n2;
    }
    int n_short = 0;
    for (RootIndex r : comp)
      if (rs.norm2(r) == mn) ++n_short;
    if (k == 4 && n_short == 2) return {'F', 4, false};
    return {n_short == 1 ? 'B' : 'C', k, false};
  }
  int branch = -1;
  for (int i = 0; i < k; ++i)
    if (degree[i] >= 3) branch = i;
  if (branch < 0) return {'A', k, tilde};
  std::vector<int> arms;
  for (int j = 0; j < k; ++j) {
    if (bond[branch][j] == 0) continue;
    int len = 1, prev = branch, cur = j;
    for (;;) {
      int next = -1;
      for (int t = 0; t < k; ++t)
        if (t != prev && bond[cur][t] > 0) next = t;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {'D', k, tilde};
  return {'E', k, tilde};
}

std::string format_components(std::vector<ComponentType> types) {
  if (types.empty()) return "-";
  std::sort(types.begin(), types.end());
  std::string out;
  std::size_t i = 0;
  while (i < types.size()) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    std::size_t mult = j - i;
    if (mult == 1) out += types[i].str();
    else out += "(" + types[i].str() + ")^" + std::to_string(mult);
    i = j;
  }
  return out;
}

bool needs_tag(const RootSystem& rs, const std::string& type) {
  if (rs.type == CartanType(Family::E, 7))
    return type == "A5" || type == "(A1)^3" || type == "(A1)^4" || type == "A3(A1)^2";
  if (rs.type == CartanType(Family::E, 8))
    return type == "A7" || type == "(A3)^2" || type == "(A1)^4";
  return false;
}

}  // namespace

std::string identify_type_untagged(const RootSystem& rs, const PosSet& psi) {
  if (psi.none()) return "-";
  auto base = induced_base(rs, psi);
  std::vector<ComponentType> types;
  for (const auto& comp : base_components(rs, base)) types.push_back(classify_component(rs, comp));
  return format_components(std::move(types));
}

std::string identify_type(const RootSystem& rs, const PosSet& psi) {
  std::string base = identify_type_untagged(rs, psi);
  if (base == "-" || !needs_tag(rs, base)) return base;
  if (rs.type == CartanType(Family::E, 7) && base == "A5") {
    // ' is the member of A5A2 (perp A2), '' the Levi with an A1 perp
    return base + (identify_type_untagged(rs, perp_set(rs, psi)) == "A2" ? "'" : "''");
  }
  if (rs.type == CartanType(Family::E, 7) && base == "A3(A1)^2") {
    // the class the appendix exhibits has perp of type A1; its companion
    // class has perp (A1)^3
    return base + (perp_set(rs, psi).count() <= 1 ? "'" : "''");
  }
  // (A1)^k, A7, (A3)^2: '' is the span-parabolic (Levi) class
  return base + (is_parabolic_subsystem(rs, psi) ? "''" : "'");
}

ClassKey class_key(const RootSystem& rs, const PosSet& psi) {
  ClassKey k;
  k.type = identify_type(rs, psi);
  k.size = psi.count();
  k.parabolic = is_parabolic_subsystem(rs, psi);
  k.perp_type = identify_type_untagged(rs, perp_set(rs, psi));
  std::vector<RootIndex> members;
  for (std::size_t a = 0; a < rs.n_positive; ++a)
    if (psi.test(a)) members.push_back(static_cast<RootIndex>(a));
  k.profile.reserve(rs.n_positive);
  for (std::size_t b = 0; b < rs.n_positive; ++b) {
    // histogram over |6(b,a)| values, packed into one word
    std::uint64_t h = psi.test(b) ? 0x9e3779b97f4a7c15ull : 0;
    int counts[16] = {0};
    for (RootIndex a : members) {
      int v = rs.inner6(static_cast<RootIndex>(b), a);
      counts[v < 0 ? -v : v]++;
    }
    for (int v = 0; v < 16; ++v) {
      h ^= static_cast<std::uint64_t>(counts[v] + 1);
      h *= 1099511628211ull;
    }
    k.profile.push_back(h);
  }
  std::sort(k.profile.begin(), k.profile.end());
  return k;
}

bool conjugate_subsystems(const RootSystem& rs, const PosSet& a, const PosSet& b) {
  if (a == b) return true;
  if (a.count() != b.count()) return false;
  if (rs.rank <= 4) {
    SubsystemOrbit orbit(rs, a, weyl_generators(rs));
    return orbit.find(b).has_value();
  }
  if (!(class_key(rs, a) == class_key(rs, b))) return false;
  SubsystemOrbit orbit(rs, a, weyl_generators(rs));
  return orbit.find(b).has_value();
}

namespace {

/// Class registry: exact canonical forms at rank <= 4 (cheap orbits, and
/// triality splits classes there that no isometry invariant separates);
/// invariant keys at rank >= 5, where W-classes and Iso-classes coincide for
/// negation-closed sets.
struct ClassRegistry {
  const RootSystem& rs;
  bool exact;
  std::vector<Isometry> wgens;
  std::unordered_set<PosSet> raw_seen;
  std::unordered_set<PosSet> canon_seen;
  std::set<ClassKey> key_seen;
  std::vector<PosSet> reps;

  explicit ClassRegistry(const RootSystem& r)
      : rs(r), exact(r.rank <= 4), wgens(weyl_generators(r)) {}

  bool add(const PosSet& s) {
    if (!raw_seen.insert(s).second) return false;
    if (exact) {
      PosSet canon = s.none() ? s : SubsystemOrbit(rs, s, wgens, false).canonical();
      if (!canon_seen.insert(canon).second) return false;
      reps.push_back(canon);
      return true;
    }
    ClassKey k = class_key(rs, s);
    if (!key_seen.insert(k).second) return false;
    reps.push_back(s);
    return true;
  }
};

std::vector<PosSet> enumerate_classes(const RootSystem& rs, long long p) {
  ClassRegistry reg(rs);
  reg.add(PosSet{});

  if (rs.type.family == Family::G || rs.type.family == Family::F || rs.rank <= 4) {
    // exhaustive over seeds of at most rank positive roots
    std::vector<RootIndex> pick;
    auto rec = [&](auto&& self, std::size_t from, int depth) -> void {
      if (!pick.empty()) reg.add(p_closure(rs, pick, p));
      if (depth == rs.rank) return;
      for (std::size_t i = from; i < rs.n_positive; ++i) {
        pick.push_back(static_cast<RootIndex>(i));
        self(self, i + 1, depth + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, 0);
    return reg.reps;
  }

  // simply laced: p-closed = closed; Borel-de Siebenthal recursion with both
  // the extended-diagram deletions (maximal rank) and the Levi deletions.
  std::vector<PosSet> queue{rs.full_set()};
  std::set<ClassKey> visited;
  while (!queue.empty()) {
    PosSet cur = queue.back();
    queue.pop_back();
    if (!visited.insert(class_key(rs, cur)).second) continue;
    reg.add(cur);
    if (cur.none()) continue;

    auto base = induced_base(rs, cur);
    auto comps = base_components(rs, base);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      PosSet comp_set = span_closure(rs, comps[ci]);
      RootIndex high = kNoRoot;
      int best_h = -1;
      for (std::size_t i = 0; i < rs.n_positive; ++i) {
        if (!comp_set.test(i)) continue;
        int h = rs.height(static_cast<RootIndex>(i));
        if (h > best_h) { best_h = h; high = static_cast<RootIndex>(i); }
      }
      auto push_child = [&](const std::vector<RootIndex>& gen_component) {
        std::vector<RootIndex> gen = gen_component;
        for (std::size_t cj = 0; cj < comps.size(); ++cj)
          if (cj != ci)
            for (RootIndex r : comps[cj]) gen.push_back(r);
        PosSet sub = span_closure(rs, gen);
        if (sub != cur) queue.push_back(sub);
      };
      // extended deletions
      for (std::size_t drop = 0; drop < comps[ci].size(); ++drop) {
        std::vector<RootIndex> gen;
        for (std::size_t i = 0; i < comps[ci].size(); ++i)
          if (i != drop) gen.push_back(comps[ci][i]);
        gen.push_back(rs.neg[high]);
        push_child(gen);
      }
      // Levi deletions
      for (std::size_t drop = 0; drop < comps[ci].size(); ++drop) {
        std::vector<RootIndex> gen;
        for (std::size_t i = 0; i < comps[ci].size(); ++i)
          if (i != drop) gen.push_back(comps[ci][i]);
        push_child(gen);
      }
    }
  }
  return reg.reps;
}

}  // namespace

std::vector<PosSet> p_closed_class_reps(const RootSystem& rs, long long p) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, long long>, std::vector<PosSet>> cache;
  long long p_eff = rs.type.is_simply_laced() ? 0 : (p >= 5 ? 0 : p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({static_cast<char>(rs.type.family), rs.type.rank, p_eff});
    if (it != cache.end()) return it->second;
  }
  std::vector<PosSet> reps = enumerate_classes(rs, p_eff);
  std::lock_guard<std::mutex> lock(mu);
  return cache[{static_cast<char>(rs.type.family), rs.type.rank, p_eff}] = reps;
}

std::vector<PosSet> maximal_p_closed_subsystems(const RootSystem& rs, long long p) {
  std::vector<PosSet> out;
  PosSet full = rs.full_set();
  for (const PosSet& s : p_closed_class_reps(rs, p)) {
    if (s == full) continue;
    if (!is_p_closed(rs, s, p)) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < rs.n_positive && maximal; ++b) {
      if (s.test(b)) continue;
      PosSet ext = s;
      ext.set(b);
      if (p_closure_set(rs, ext, p) != full) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<AlmostPrimitiveEntry> almost_primitive(const RootSystem& rs, long long p) {
  std::vector<AlmostPrimitiveEntry> out;
  PosSet full = rs.full_set();
  for (const PosSet& s : p_closed_class_reps(rs, p)) {
    if (s == full) continue;
    if (!is_p_closed(rs, s, p)) continue;

    // For simply-laced Phi a nonempty almost primitive has empty perp: the
    // orthogonal union psi.perp is closed, proper (Phi irreducible), stable
    // under the normalizer and strictly bigger. Cuts the expensive orbit
    // computations down to the handful of real candidates.
    if (rs.type.is_simply_laced() && !s.none() && perp_set(rs, s).any()) continue;

    std::vector<Isometry> gens;
    if (s.none()) {
      gens = iso_generators(rs);
    } else {
      SubsystemOrbit orbit(rs, s, iso_generators(rs));
      gens = orbit.stabilizer_generators();
    }
    std::vector<int> orbit_id(rs.n_positive, -1);
    bool ok = true;
    for (std::size_t b = 0; b < rs.n_positive && ok; ++b) {
      if (s.test(b) || orbit_id[b] >= 0) continue;
      std::vector<RootIndex> orb{static_cast<RootIndex>(b)};
      orbit_id[b] = static_cast<int>(b);
      for (std::size_t head = 0; head < orb.size(); ++head) {
        for (const auto& g : gens) {
          RootIndex img = rs.pos_half(g(orb[head]));
          if (orbit_id[img] < 0 && !s.test(img)) {
            orbit_id[img] = static_cast<int>(b);
            orb.push_back(img);
          }
        }
      }
      PosSet ext = s;
      for (RootIndex r : orb) ext.set(r);
      if (p_closure_set(rs, ext, p) != full) ok = false;
    }
    if (!ok) continue;

    AlmostPrimitiveEntry e;
    e.rep = s;
    e.type = identify_type(rs, s);
    if (s.none()) {
      e.stab_label = "W(" + rs.type.name() + ")";
      e.stab_order = rs.type.weyl_order();
    } else {
      auto delta = induced_base(rs, s);
      IsometryGroup stab = stab_of_base(rs, delta);
      e.stab_order = stab.order();
      e.stab_label = group_label(stab);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const AlmostPrimitiveEntry& a, const AlmostPrimitiveEntry& b) {
              bool ae = a.rep.none(), be = b.rep.none();
              if (ae != be) return be;
              if (a.rep.count() != b.rep.count()) return a.rep.count() > b.rep.count();
              return a.type < b.type;
            });
  return out;
}

}  // namespace satake
