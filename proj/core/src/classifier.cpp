#include "satake/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

}  // namespace

std::string index_code(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  if (idx.delta.empty()) return "T" + std::to_string(idx.central_rank()) + "_" +
                                std::to_string(idx.split_central_rank());
  auto comps = base_components(rs, idx.delta);
  // group into pi-blocks via component reachability
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
      for (const auto& g : idx.pi.generators()) {
        int img = comp_of(g(comps[cur][0]));
        if (img >= 0 && block[img] < 0) {
          block[img] = nb;
          stack.push_back(static_cast<std::size_t>(img));
        }
      }
    }
    ++nb;
  }
  std::vector<std::string> parts;
  for (int b = 0; b < nb; ++b) {
    std::vector<std::string> sub;
    std::size_t nodes = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (block[c] != b) continue;
      auto [type, mask] = component_standard_pattern(rs, comps[c], idx.delta0);
      std::string pat;
      for (std::size_t p = 0; p < comps[c].size(); ++p)
        pat += (mask & (1u << p)) ? '*' : 'o';
      sub.push_back(type + "[" + pat + "]");
      nodes += comps[c].size();
    }
    std::sort(sub.begin(), sub.end());
    // fold order of the block: induced images of the block's node set
    long long g_ord = 1;
    if (!idx.pi.is_trivial()) {
      std::vector<RootIndex> bn;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (block[c] == b)
          for (RootIndex r : comps[c]) bn.push_back(r);
      std::set<std::vector<RootIndex>> imgs;
      for (const auto& el : idx.pi.elements()) {
        std::vector<RootIndex> im;
        for (RootIndex r : bn) im.push_back(el(r));
        imgs.insert(std::move(im));
      }
      g_ord = static_cast<long long>(imgs.size());
    }
    std::string blk;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (i) blk += "x";
      blk += sub[i];
    }
    if (g_ord > 1) blk = std::to_string(g_ord) + "(" + blk + ")";
    parts.push_back(std::move(blk));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "x";
    out += parts[i];
  }
  if (idx.central_rank() > 0)
    out += "xT" + std::to_string(idx.central_rank()) + "_" +
           std::to_string(idx.split_central_rank());
  return out;
}

std::vector<PiClass> subgroup_classes(const IsometryGroup& g) {
  std::vector<PiClass> out;
  if (g.is_trivial()) {
    out.push_back({IsometryGroup::trivial(g.system()), "1"});
    return out;
  }
  FiniteGroup fg(g);
  for (const Subgroup& h : subgroup_conjugacy_classes(fg)) {
    std::vector<Isometry> members;
    for (auto e : h) members.push_back(fg.element(e));
    IsometryGroup grp(g.system(), members);
    std::string label = subgroup_label(fg, h);
    grp.set_label(label);
    out.push_back({std::move(grp), std::move(label)});
  }
  return out;
}

IsometryGroup stab_sigma(const RootSystem& rs, const std::vector<RootIndex>& delta,
                         const PosSet& sigma_position) {
  IsometryGroup s = iso_stab_of_base(rs, delta);
  std::vector<Isometry> keep;
  for (const auto& g : s.elements())
    if (g.apply(sigma_position) == sigma_position && !g.is_identity()) keep.push_back(g);
  return IsometryGroup(rs, std::move(keep));
}

std::vector<PosSet> containing_almost_primitive_positions(const RootSystem& rs,
                                                          const PosSet& psi, long long p) {
  std::vector<PosSet> out;
  auto wgens = weyl_generators(rs);
  for (const auto& entry : almost_primitive(rs, p)) {
    if (entry.rep.none() || entry.rep.count() <= psi.count()) continue;
    SubsystemOrbit orbit(rs, entry.rep, wgens, false);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const PosSet& pos = orbit.state(i);
      if ((psi & ~pos).none() && pos != psi) out.push_back(pos);
    }
  }
  return out;
}

namespace {

struct BlockContext {
  const RootSystem* rs;
  PosSet psi;
  std::vector<RootIndex> delta;
  IsometryGroup stab_iso;
  IsometryGroup stab_w;
  std::vector<PosSet> positions;               // containing a.p. positions
  std::vector<std::vector<Isometry>> position_stabs;  // elements of Stab_S per position
};

BlockContext make_block_context(const RootSystem& rs, const PosSet& psi, long long p) {
  BlockContext ctx;
  ctx.rs = &rs;
  ctx.psi = psi;
  ctx.delta = induced_base(rs, psi);
  ctx.stab_iso = iso_stab_of_base(rs, ctx.delta);
  ctx.stab_w = stab_of_base(rs, ctx.delta);
  ctx.positions = containing_almost_primitive_positions(rs, psi, p);
  for (const PosSet& pos : ctx.positions) {
    std::vector<Isometry> keep;
    for (const auto& g : ctx.stab_iso.elements())
      if (g.apply(pos) == pos) keep.push_back(g);
    ctx.position_stabs.push_back(std::move(keep));
  }
  return ctx;
}

bool pi_fixed_central_trivial(const RootSystem& rs, const std::vector<RootIndex>& delta,
                              const IsometryGroup& pi) {
  // V = (span Delta)^perp; require V^Pi = 0
  QMat m;
  for (RootIndex r : delta) {
    QVec c = rs.coords_q(r);
    QVec row(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      Rational acc(0);
      for (int j = 0; j < rs.rank; ++j) acc += rs.form[i][j] * c[j];
      row[i] = acc;
    }
    m.push_back(std::move(row));
  }
  std::vector<QVec> v = kernel_basis(m);
  if (v.empty()) return true;
  return fixed_space(pi, v).empty();
}

bool pi_contained_in_some_position_stab(const BlockContext& ctx, const IsometryGroup& pi) {
  for (const auto& stab_elems : ctx.position_stabs) {
    bool inside = true;
    for (const auto& g : pi.generators()) {
      if (std::find(stab_elems.begin(), stab_elems.end(), g) == stab_elems.end()) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

}  // namespace

std::vector<PiClass> maximal_pi_classes(const RootSystem& rs, const PosSet& psi, long long p) {
  BlockContext ctx = make_block_context(rs, psi, p);
  std::vector<PiClass> out;
  if (ctx.stab_iso.is_trivial()) {
    if (!ctx.positions.empty()) return out;
    PiClass pc{IsometryGroup::trivial(rs), "1"};
    if (pi_fixed_central_trivial(rs, ctx.delta, pc.group)) out.push_back(std::move(pc));
    return out;
  }
  FiniteGroup fg(ctx.stab_iso);
  std::vector<Subgroup> stabs;
  for (const auto& elems : ctx.position_stabs) {
    Subgroup sg;
    for (const auto& e : elems) sg.push_back(fg.index_of(e));
    std::sort(sg.begin(), sg.end());
    stabs.push_back(std::move(sg));
  }
  for (const Subgroup& h : subgroup_conjugacy_classes(fg)) {
    // Pi^g stabilizes a position iff Pi stabilizes another position, and the
    // position list is complete, so testing the representative suffices.
    bool excluded = false;
    for (const Subgroup& sg : stabs) {
      bool inside = true;
      for (auto e : h)
        if (!subgroup_contains(sg, e)) { inside = false; break; }
      if (inside) { excluded = true; break; }
    }
    if (excluded) continue;
    std::vector<Isometry> members;
    for (auto e : h) members.push_back(fg.element(e));
    IsometryGroup grp(rs, members);
    if (!pi_fixed_central_trivial(rs, ctx.delta, grp)) continue;
    std::string label = subgroup_label(fg, h);
    grp.set_label(label);
    out.push_back({std::move(grp), label});
  }
  return out;
}

bool pi_class_is_maximal_table3(const RootSystem& rs, const PosSet& psi,
                                const IsometryGroup& pi, long long p) {
  BlockContext ctx = make_block_context(rs, psi, p);
  // pi is given as a concrete subgroup of Stab_Iso(Delta') for a conjugate
  // base; align it with the context representative if needed
  if (pi_contained_in_some_position_stab(ctx, pi)) return false;
  return pi_fixed_central_trivial(rs, ctx.delta, pi);
}

std::vector<HCandidate> candidate_h_indices(const RootSystem& rs,
                                            const std::vector<RootIndex>& delta,
                                            const IsometryGroup& stab_w_group,
                                            const PiClass& pi_class) {
  std::vector<Isometry> sw = stab_w_group.elements();

  auto canonical_pair = [&](const std::vector<RootIndex>& d0, const IsometryGroup& pi) {
    std::vector<std::vector<RootIndex>> best;
    for (const auto& s : sw) {
      std::vector<RootIndex> d0i;
      for (RootIndex r : d0) d0i.push_back(s(r));
      std::sort(d0i.begin(), d0i.end());
      std::vector<std::vector<RootIndex>> elems;
      Isometry si = s.inverse();
      for (const auto& x : pi.elements()) elems.push_back((s * x * si).perm());
      std::sort(elems.begin(), elems.end());
      std::vector<std::vector<RootIndex>> cand;
      cand.push_back(std::move(d0i));
      for (auto& e : elems) cand.push_back(std::move(e));
      if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
  };

  // The pair (Delta0, Pi') must range over the whole Stab_Iso-class of Pi;
  // conjugating by Stab_W preserves the W-class of the triple, so coset
  // representatives of Stab_W in Stab_Iso are enough (at most two: the
  // ambient outer automorphism only exists for E6).
  std::vector<IsometryGroup> pi_variants{pi_class.group};
  if (rs.type == CartanType(Family::E, 6)) {
    for (const auto& rho : diagram_automorphisms(rs)) {
      // rho need not stabilize delta; conjugate only when it does
      bool stab = true;
      for (RootIndex r : delta) {
        bool found = false;
        for (RootIndex q : delta)
          if (rho(r) == q) { found = true; break; }
        if (!found) { stab = false; break; }
      }
      if (!stab) continue;
      std::vector<Isometry> conj;
      Isometry ri = rho.inverse();
      for (const auto& x : pi_class.group.generators()) conj.push_back(rho * x * ri);
      pi_variants.emplace_back(rs, std::move(conj));
    }
  }

  std::set<std::vector<std::vector<RootIndex>>> seen_pairs;
  std::vector<HCandidate> out;
  for (const auto& pi : pi_variants) {
    AbstractIndex probe{&rs, delta, {}, pi};
    auto orbits = probe.distinguished_orbits();
    std::size_t n = orbits.size();
    for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<RootIndex> d0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i))
          for (RootIndex r : orbits[i]) d0.push_back(r);
      std::sort(d0.begin(), d0.end());
      AbstractIndex h{&rs, delta, d0, pi};
      if (h.is_anisotropic()) continue;
      if (!index_in_table_ii(h)) continue;
      if (!validate_index(h).valid) continue;
      auto key = canonical_pair(d0, pi);
      if (!seen_pairs.insert(key).second) continue;
      out.push_back({h, index_code(h)});
    }
  }
  std::sort(out.begin(), out.end(), [](const HCandidate& a, const HCandidate& b) {
    if (a.h.delta0.size() != b.h.delta0.size()) return a.h.delta0.size() < b.h.delta0.size();
    return a.h_code < b.h_code;
  });
  return out;
}

namespace {

/// Does omega contain a subsystem of the given W-class? Orbit scan of the
/// class representative filtered by containment.
bool contains_subsystem_of_class(const RootSystem& rs, const PosSet& omega,
                                 const PosSet& class_rep) {
  if (class_rep.none()) return true;
  if (class_rep.count() > omega.count()) return false;
  SubsystemOrbit orbit(rs, class_rep, weyl_generators(rs), false);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    if ((orbit.state(i) & ~omega).none()) return true;
  return false;
}

struct GFilterData {
  PosSet psi0;
  PosSet phi_a;
  PosSet in_phi_a;
  PosSet phi_ebar_a;
  bool pi_in_w;
};

/// Per-ambient cache of the standard Levi subsystems <J> for J a subset of
/// the fundamental base, with their class keys.
struct LeviCache {
  std::vector<PosSet> sys;
  std::vector<ClassKey> key;
  std::vector<std::size_t> base_rank;
};

const LeviCache& levi_cache(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<LeviCache>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto k = std::make_pair(static_cast<char>(rs.type.family), rs.type.rank);
  auto it = cache.find(k);
  if (it == cache.end()) {
    auto lc = std::make_unique<LeviCache>();
    std::size_t n = 1u << rs.rank;
    lc->sys.resize(n);
    lc->key.resize(n);
    lc->base_rank.resize(n);
    for (std::uint32_t mask = 0; mask < n; ++mask) {
      std::vector<RootIndex> j;
      for (int i = 0; i < rs.rank; ++i)
        if (mask & (1u << i)) j.push_back(rs.simple[i]);
      lc->sys[mask] = span_closure(rs, j);
      lc->key[mask] = class_key(rs, lc->sys[mask]);
      lc->base_rank[mask] = j.size();
    }
    it = cache.emplace(k, std::move(lc)).first;
  }
  return *it->second;
}

std::vector<std::string> g_candidates(const RootSystem& rs, const AbstractIndex& h,
                                      const GFilterData& d) {
  std::vector<std::string> out;
  const LeviCache& lc = levi_cache(rs);
  ClassKey phi_a_key = class_key(rs, d.phi_a);
  std::size_t phi_a_rank = induced_base(rs, d.phi_a).size();

  for (const auto& entry : exceptional_isotropic_indices(rs.type)) {
    // (A.2) parity: Pi <= W forces inner G, otherwise outer
    if (d.pi_in_w != (entry.pi_order == 1)) continue;
    AbstractIndex g = realize_exceptional_index(rs.type, entry);
    PosSet lambda0_sys = g.psi0();

    // (A.3): a Xi-stable J between Lambda0 and Lambda with <J> of class phi_a
    std::vector<PosSet> witnesses;
    std::uint32_t l0_mask = 0;
    for (int n0 : entry.delta0_nodes) l0_mask |= (1u << n0);
    for (std::uint32_t mask = 0; mask < (1u << rs.rank); ++mask) {
      if ((mask & l0_mask) != l0_mask) continue;
      if (lc.base_rank[mask] != phi_a_rank) continue;
      if (!(lc.key[mask] == phi_a_key)) continue;
      // Xi-stability of the node set
      bool stable = true;
      for (const auto& xi : g.pi.generators()) {
        for (int i = 0; i < rs.rank && stable; ++i) {
          if (!(mask & (1u << i))) continue;
          RootIndex img = xi(rs.simple[i]);
          bool found = false;
          for (int j = 0; j < rs.rank; ++j)
            if ((mask & (1u << j)) && rs.simple[j] == img) { found = true; break; }
          if (!found) stable = false;
        }
        if (!stable) break;
      }
      if (!stable) continue;
      witnesses.push_back(lc.sys[mask]);
    }
    if (witnesses.empty()) continue;

    // (A.4): Lambda0 must host the independent part
    if (d.in_phi_a.any()) {
      if (!contains_subsystem_of_class(rs, lambda0_sys, d.in_phi_a)) continue;
      PosSet target = d.in_phi_a | d.phi_ebar_a;
      if (target != d.in_phi_a) {
        bool ok = false;
        SubsystemOrbit orbit(rs, target, weyl_generators(rs), false);
        for (const PosSet& j : witnesses) {
          for (std::size_t i = 0; i < orbit.size() && !ok; ++i) {
            const PosSet& pos = orbit.state(i);
            if ((pos & ~j).any()) continue;
            PosSet inside;
            auto base = induced_base(rs, pos);
            for (const auto& comp : base_components(rs, base)) {
              PosSet cs = span_closure(rs, comp);
              if ((cs & ~lambda0_sys).none()) inside |= cs;
            }
            if (conjugate_subsystems(rs, inside, d.in_phi_a) &&
                conjugate_subsystems(rs, pos & ~inside, d.phi_ebar_a))
              ok = true;
          }
          if (ok) break;
        }
        if (!ok) continue;
      }
    }
    out.push_back(entry.name);
  }
  return out;
}

int block_rank_in_tables(CartanType t, const std::string& type) {
  static const std::map<std::string, std::vector<std::string>> order = {
      {"G2", {"A2", "A1A1~", "A2~"}},
      {"F4", {"B4", "A2A2~", "C3A1", "D4", "C4", "D4~"}},
      {"E6", {"(A2)^3", "D5", "A5A1", "D4"}},
      {"E7", {"A5A2", "D6A1", "D4(A1)^3", "A7", "E6", "(A1)^7"}},
      {"E8", {"(A4)^2", "A8", "E6A2", "D8", "(A2)^4", "E7A1", "(D4)^2", "(A1)^8"}},
  };
  const auto& v = order.at(t.name());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == type) return static_cast<int>(i);
  return 1000;
}

}  // namespace

std::vector<ClassificationRow> classify(CartanType t, long long p) {
  if (!t.is_exceptional()) throw std::invalid_argument("classify: exceptional types only");
  const RootSystem& rs = RootSystem::get(t);
  std::vector<ClassificationRow> rows;

  auto blocks = almost_primitive(rs, p);
  std::stable_sort(blocks.begin(), blocks.end(),
                   [&](const AlmostPrimitiveEntry& a, const AlmostPrimitiveEntry& b) {
                     return block_rank_in_tables(t, a.type) < block_rank_in_tables(t, b.type);
                   });
  for (const auto& entry : blocks) {
    if (entry.rep.none()) continue;  // isotropic maximal rows need Psi nonempty
    BlockContext ctx = make_block_context(rs, entry.rep, p);
    auto pis = maximal_pi_classes(rs, entry.rep, p);
    std::sort(pis.begin(), pis.end(), [](const PiClass& a, const PiClass& b) {
      if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
      return a.label < b.label;
    });
    for (const auto& pic : pis) {
      for (const auto& cand : candidate_h_indices(rs, ctx.delta, ctx.stab_w, pic)) {
        ClassificationRow row;
        row.delta_class = entry.type;
        row.stab_w = entry.stab_label;
        row.stab_w_order = entry.stab_order;
        row.pi_label = pic.label;
        row.h = cand.h;
        row.h_code = cand.h_code;
        AnisotropicData ad = anisotropic_data(cand.h);
        row.psi0 = identify_type(rs, ad.psi0);
        row.phi_a = identify_type(rs, ad.phi_a);
        GFilterData d;
        d.psi0 = ad.psi0;
        d.phi_a = ad.phi_a;
        d.in_phi_a = ad.in_phi_a;
        d.phi_ebar_a = ad.phi_ebar_a;
        d.pi_in_w = true;
        for (const auto& g : cand.h.pi.generators())
          if (!is_in_weyl(rs, g)) { d.pi_in_w = false; break; }
        row.g_names = g_candidates(rs, cand.h, d);
        row.p_set = {p};
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<ClassificationRow> classify_all(CartanType t) {
  std::vector<ClassificationRow> merged;
  for (long long p : {0LL, 2LL, 3LL}) {
    for (auto& row : classify(t, p)) {
      bool found = false;
      for (auto& m : merged) {
        if (m.delta_class == row.delta_class && m.pi_label == row.pi_label &&
            m.h_code == row.h_code && m.g_names == row.g_names) {
          m.p_set.insert(p);
          found = true;
          break;
        }
      }
      if (!found) merged.push_back(std::move(row));
    }
  }
  return merged;
}

}  // namespace satake
