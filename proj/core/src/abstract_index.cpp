#include "satake/abstract_index.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

std::vector<QVec> orthocomplement(const RootSystem& rs, const std::vector<QVec>& vecs) {
  if (vecs.empty()) {
    std::vector<QVec> all;
    for (int i = 0; i < rs.rank; ++i) {
      QVec e = qvec_zero(rs.rank);
      e[i] = Rational(1);
      all.push_back(std::move(e));
    }
    return all;
  }
  QMat m;
  for (const auto& v : vecs) {
    QVec row(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      Rational acc(0);
      for (int j = 0; j < rs.rank; ++j) acc += rs.form[i][j] * v[j];
      row[i] = acc;
    }
    m.push_back(std::move(row));
  }
  return kernel_basis(m);
}

QVec project_onto(const RootSystem& rs, const std::vector<QVec>& basis, const QVec& v) {
  // orthogonal projection onto span(basis) w.r.t. the ambient form
  if (basis.empty()) return qvec_zero(rs.rank);
  std::size_t k = basis.size();
  QMat gram = qmat_zero(k, k);
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = rs.inner(basis[i], basis[j]);
    rhs[i] = rs.inner(basis[i], v);
  }
  QVec c = solve(gram, rhs);
  QVec out = qvec_zero(rs.rank);
  for (std::size_t i = 0; i < k; ++i) out = out + (c[i] * basis[i]);
  return out;
}

}  // namespace

bool AbstractIndex::in_delta0(RootIndex r) const {
  return std::find(delta0.begin(), delta0.end(), r) != delta0.end();
}

PosSet AbstractIndex::psi() const { return span_closure(*ambient, delta); }
PosSet AbstractIndex::psi0() const { return span_closure(*ambient, delta0); }

std::vector<std::vector<RootIndex>> AbstractIndex::distinguished_orbits() const {
  std::vector<std::vector<RootIndex>> out;
  std::set<RootIndex> remaining;
  for (RootIndex r : delta)
    if (!in_delta0(r)) remaining.insert(r);
  while (!remaining.empty()) {
    std::vector<RootIndex> orbit{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : pi.generators()) {
        RootIndex img = g(orbit[head]);
        auto it = remaining.find(img);
        if (it != remaining.end()) {
          orbit.push_back(img);
          remaining.erase(it);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVec> AbstractIndex::e_s_basis() const {
  const RootSystem& rs = *ambient;
  std::vector<QVec> d0;
  for (RootIndex r : delta0) d0.push_back(rs.coords_q(r));
  std::vector<QVec> perp = orthocomplement(rs, d0);
  return fixed_space(pi, perp);
}

std::vector<QVec> AbstractIndex::e_a_basis() const {
  return orthocomplement(*ambient, e_s_basis());
}

int AbstractIndex::central_rank() const {
  return ambient->rank - static_cast<int>(delta.size());
}

int AbstractIndex::split_central_rank() const {
  const RootSystem& rs = *ambient;
  std::vector<QVec> dl;
  for (RootIndex r : delta) dl.push_back(rs.coords_q(r));
  std::vector<QVec> ebar = orthocomplement(rs, dl);
  auto es = e_s_basis();
  return static_cast<int>(intersect_spans(ebar, es, rs.rank).size());
}

bool AbstractIndex::is_anisotropic() const {
  if (delta.size() != delta0.size()) return false;
  return split_central_rank() == 0;
}

int AbstractIndex::rank() const { return ambient->rank; }

int AbstractIndex::relative_rank() const { return static_cast<int>(e_s_basis().size()); }

std::vector<QVec> fixed_space(const IsometryGroup& pi, const std::vector<QVec>& subspace) {
  if (subspace.empty()) return {};
  if (pi.is_trivial()) return subspace;
  const RootSystem& rs = pi.system();
  // stability check on generators
  for (const auto& g : pi.generators())
    for (const auto& v : subspace)
      if (!in_span(subspace, g.apply(v)))
        throw std::invalid_argument("fixed_space: group does not stabilize the subspace");

  // Sum over the whole group of (sigma - id), restricted to the subspace:
  // rows index E, columns index subspace coordinates.
  QMat total = qmat_zero(rs.rank, rs.rank);
  for (const auto& sigma : pi.elements()) {
    QMat m = sigma.matrix();
    for (int i = 0; i < rs.rank; ++i) {
      for (int j = 0; j < rs.rank; ++j) total[i][j] += m[i][j];
      total[i][i] -= Rational(1);
    }
  }
  QMat restricted = qmat_zero(rs.rank, subspace.size());
  for (std::size_t j = 0; j < subspace.size(); ++j) {
    QVec img = mat_vec(total, subspace[j]);
    for (int i = 0; i < rs.rank; ++i) restricted[i][j] = img[i];
  }
  std::vector<QVec> coeffs = kernel_basis(restricted);
  std::vector<QVec> out;
  for (const auto& c : coeffs) {
    QVec v = qvec_zero(rs.rank);
    for (std::size_t j = 0; j < subspace.size(); ++j) v = v + (c[j] * subspace[j]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

bool structure_ok(const AbstractIndex& idx, std::string& detail) {
  const RootSystem& rs = idx.system();
  // delta0 subset of delta
  for (RootIndex r : idx.delta0)
    if (std::find(idx.delta.begin(), idx.delta.end(), r) == idx.delta.end()) {
      detail = "delta0 not a subset of delta";
      return false;
    }
  // base: pairwise Cartan integers nonpositive
  for (RootIndex a : idx.delta)
    for (RootIndex b : idx.delta) {
      if (a == b) continue;
      Rational c = Rational(2) * rs.inner_roots(a, b) / rs.norm2(b);
      if (!c.is_integer() || c.sign() > 0) {
        detail = "delta is not a base";
        return false;
      }
    }
  // linear independence
  QMat m;
  for (RootIndex r : idx.delta) m.push_back(rs.coords_q(r));
  if (!idx.delta.empty() && rank(m) != idx.delta.size()) {
    detail = "delta is not linearly independent";
    return false;
  }
  // pi stability
  auto stable = [&](const std::vector<RootIndex>& set) {
    for (const auto& g : idx.pi.generators())
      for (RootIndex r : set)
        if (std::find(set.begin(), set.end(), g(r)) == set.end()) return false;
    return true;
  };
  if (!stable(idx.delta)) { detail = "pi does not stabilize delta"; return false; }
  if (!stable(idx.delta0)) { detail = "pi does not stabilize delta0"; return false; }
  return true;
}

bool axiom_i_ok(const AbstractIndex& idx, std::string& detail) {
  const RootSystem& rs = idx.system();
  auto es = idx.e_s_basis();
  auto orbits = idx.distinguished_orbits();
  if (orbits.empty()) return true;

  std::vector<QVec> proj;
  for (const auto& orbit : orbits) {
    QVec p = project_onto(rs, es, rs.coords_q(orbit[0]));
    // projection must be constant on the orbit and non-zero
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      QVec q = project_onto(rs, es, rs.coords_q(orbit[i]));
      if (!(is_zero(p - q))) {
        detail = "projections differ within a distinguished orbit";
        return false;
      }
    }
    if (is_zero(p)) { detail = "distinguished orbit projects to zero"; return false; }
    proj.push_back(std::move(p));
  }

  // merge proportional pairs (the non-reduced BC situation: ratios 2 or 1/2)
  std::vector<QVec> rays;
  for (const auto& p : proj) {
    bool merged = false;
    for (const auto& r : rays) {
      // p = t r?
      Rational t(0);
      bool prop = true;
      for (int i = 0; i < rs.rank && prop; ++i) {
        if (r[i].is_zero()) { if (!p[i].is_zero()) prop = false; }
        else {
          Rational ti = p[i] / r[i];
          if (t.is_zero()) t = ti;
          else if (!(t == ti)) prop = false;
        }
      }
      if (prop && t.sign() > 0) {
        if (!(t == Rational(1) || t == Rational(2) || t == Rational(1, 2))) {
          detail = "proportional projections with a non-BC ratio";
          return false;
        }
        merged = true;
        break;
      }
    }
    if (!merged) rays.push_back(p);
  }

  // pairwise Cartan-like integers nonpositive, Gram positive definite
  std::size_t k = rays.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      Rational c = Rational(2) * rs.inner(rays[i], rays[j]) / rs.inner(rays[j], rays[j]);
      if (!c.is_integer() || c.sign() > 0) {
        detail = "relative Cartan integers are not nonpositive integers";
        return false;
      }
    }
  QMat gram = qmat_zero(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = rs.inner(rays[i], rays[j]);
  // positive definiteness by symmetric elimination
  for (std::size_t t = 0; t < k; ++t) {
    if (gram[t][t].sign() <= 0) { detail = "relative Gram matrix not positive definite"; return false; }
    for (std::size_t i = t + 1; i < k; ++i) {
      Rational f = gram[i][t] / gram[t][t];
      for (std::size_t j = t; j < k; ++j) gram[i][j] -= f * gram[t][j];
    }
  }
  return true;
}

bool axiom_ii_ok(const AbstractIndex& idx, std::string& detail) {
  if (idx.delta.empty()) return true;
  const RootSystem& rs = idx.system();
  std::vector<RootIndex> minus;
  for (RootIndex r : idx.delta) minus.push_back(rs.neg[r]);
  Isometry w0 = to_base_in_subsystem(rs, idx.delta, minus);
  // nu(d) = -w0(d) permutes delta
  auto nu = [&](RootIndex r) { return rs.neg[w0(r)]; };
  for (RootIndex r : idx.delta) {
    RootIndex img = nu(r);
    if (std::find(idx.delta.begin(), idx.delta.end(), img) == idx.delta.end()) {
      detail = "-w0 does not stabilize delta";
      return false;
    }
  }
  for (RootIndex r : idx.delta0) {
    if (!idx.in_delta0(nu(r))) { detail = "-w0 does not stabilize delta0"; return false; }
  }
  for (const auto& g : idx.pi.generators())
    for (RootIndex r : idx.delta)
      if (nu(g(r)) != g(nu(r))) {
        detail = "-w0 does not commute with pi";
        return false;
      }
  return true;
}

}  // namespace

IndexValidation validate_index(const AbstractIndex& idx) {
  IndexValidation v;
  std::string detail;
  if (!structure_ok(idx, detail)) return {false, "structure", detail};
  if (!axiom_i_ok(idx, detail)) return {false, "axiom (i)", detail};
  if (!axiom_ii_ok(idx, detail)) return {false, "axiom (ii)", detail};
  for (const auto& orbit : idx.distinguished_orbits()) {
    AbstractIndex child = idx;
    std::vector<RootIndex> nd;
    for (RootIndex r : idx.delta)
      if (std::find(orbit.begin(), orbit.end(), r) == orbit.end()) nd.push_back(r);
    child.delta = std::move(nd);
    IndexValidation cv = validate_index(child);
    if (!cv.valid) return {false, "axiom (iii)", cv.violation + ": " + cv.detail};
  }
  return v;
}

DerivedStructure derived_structure(const AbstractIndex& idx) {
  DerivedStructure d;
  d.e_s = idx.e_s_basis();
  d.e_a = idx.e_a_basis();
  d.anisotropic_kernel = AbstractIndex{idx.ambient, idx.delta0, idx.delta0, idx.pi};
  d.minimal_subindex = AbstractIndex{idx.ambient, idx.delta0, idx.delta0, idx.pi};
  d.rank = idx.rank();
  d.relative_rank = idx.relative_rank();
  d.split = idx.is_split();
  d.quasisplit = idx.is_quasisplit();
  d.isotropic = idx.is_isotropic();
  d.inner = idx.is_inner();
  return d;
}

std::vector<AbstractIndex> subindices(const AbstractIndex& idx) {
  auto orbits = idx.distinguished_orbits();
  std::vector<AbstractIndex> out;
  std::size_t n = orbits.size();
  for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
    AbstractIndex sub = idx;
    sub.delta = idx.delta0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i))
        for (RootIndex r : orbits[i]) sub.delta.push_back(r);
    std::sort(sub.delta.begin(), sub.delta.end());
    out.push_back(std::move(sub));
  }
  return out;
}

namespace {

/// Canonical form of a component pattern: the minimal black-node bitmask over
/// all isomorphisms of the component diagram with itself.
std::uint32_t canonical_pattern(const RootSystem& rs, const std::vector<RootIndex>& comp,
                                const std::vector<RootIndex>& black) {
  std::size_t k = comp.size();
  std::vector<std::vector<int>> bond(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j)
        bond[i][j] = static_cast<int>(rs.cartan_int(comp[i], comp[j]) * rs.cartan_int(comp[j], comp[i]));
  std::vector<int> norm(k);
  for (std::size_t i = 0; i < k; ++i)
    norm[i] = rs.inner6(comp[i], comp[i]);
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::uint32_t best = 0xffffffff;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (norm[perm[i]] != norm[i]) ok = false;
      for (std::size_t j = 0; j < k && ok; ++j)
        if (bond[perm[i]][perm[j]] != bond[i][j]) ok = false;
    }
    if (!ok) continue;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
      RootIndex node = comp[perm[i]];
      if (std::find(black.begin(), black.end(), node) != black.end()) mask |= (1u << i);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string index_iso_fingerprint(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  auto comps = base_components(rs, idx.delta);
  // group components into pi-blocks
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
  // per block: component type, multiplicity, canonical pattern list, order of
  // the induced action on the block's nodes
  std::vector<std::string> blocks;
  for (int b = 0; b < nb; ++b) {
    std::vector<std::string> parts;
    std::vector<RootIndex> nodes;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (block[c] != b) continue;
      PosSet comp_sys = span_closure(rs, comps[c]);
      std::string t = identify_type_untagged(rs, comp_sys);
      std::uint32_t pat = canonical_pattern(rs, comps[c], idx.delta0);
      parts.push_back(t + ":" + std::to_string(pat));
      for (RootIndex r : comps[c]) nodes.push_back(r);
    }
    std::sort(parts.begin(), parts.end());
    // induced permutation group order on the nodes of this block
    std::vector<Isometry> induced;
    long long g_order = 1;
    if (!idx.pi.is_trivial()) {
      std::set<std::vector<RootIndex>> images;
      for (const auto& el : idx.pi.elements()) {
        std::vector<RootIndex> img;
        for (RootIndex r : nodes) img.push_back(el(r));
        images.insert(std::move(img));
      }
      g_order = static_cast<long long>(images.size());
    }
    std::string s = "[";
    for (const auto& p : parts) s += p + ",";
    s += "|g=" + std::to_string(g_order) + "]";
    blocks.push_back(std::move(s));
  }
  std::sort(blocks.begin(), blocks.end());
  std::string out;
  for (const auto& b : blocks) out += b;
  out += "T(" + std::to_string(idx.split_central_rank()) + "," +
         std::to_string(idx.central_rank()) + ")";
  return out;
}

bool is_isomorphic(const AbstractIndex& a, const AbstractIndex& b) {
  return index_iso_fingerprint(a) == index_iso_fingerprint(b);
}

std::optional<Isometry> conjugate_in(const RootSystem& rs, const AbstractIndex& a,
                                     const AbstractIndex& b) {
  PosSet pa = a.psi(), pb = b.psi();
  if (pa.count() != pb.count()) return std::nullopt;
  SubsystemOrbit orbit(rs, pa, weyl_generators(rs), false);
  auto hit = orbit.find(pb);
  if (!hit) return std::nullopt;
  Isometry u = orbit.transversal(*hit);

  std::vector<RootIndex> b_delta_sorted = b.delta;
  std::sort(b_delta_sorted.begin(), b_delta_sorted.end());
  std::vector<RootIndex> b_delta0_sorted = b.delta0;
  std::sort(b_delta0_sorted.begin(), b_delta0_sorted.end());

  std::vector<RootIndex> ua;
  for (RootIndex r : a.delta) ua.push_back(u(r));
  Isometry v = to_base_in_subsystem(rs, b.delta, ua);
  Isometry base_map = v * u;  // maps a.delta onto b.delta as sets

  IsometryGroup stab = b.delta.empty() ? IsometryGroup::trivial(rs) : stab_of_base(rs, b.delta);
  std::vector<Isometry> stab_elems = stab.elements();
  stab_elems.push_back(Isometry::identity(rs));
  for (const auto& d : stab_elems) {
    Isometry w = d * base_map;
    if (!is_in_weyl(rs, w)) continue;
    std::vector<RootIndex> img0;
    for (RootIndex r : a.delta0) img0.push_back(w(r));
    std::sort(img0.begin(), img0.end());
    if (img0 != b_delta0_sorted) continue;
    // conjugated pi must equal b.pi as a set
    bool pi_ok = true;
    Isometry wi = w.inverse();
    for (const auto& g : a.pi.elements()) {
      if (!b.pi.contains(w * g * wi)) { pi_ok = false; break; }
    }
    if (pi_ok && a.pi.order() == b.pi.order()) return w;
  }
  return std::nullopt;
}

}  // namespace satake
