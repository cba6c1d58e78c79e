#include "satake/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace satake {

namespace {

// Strictly dominant vector for an ordered base: (v, b_j) = 1 for all j plus
// zero component orthogonal to the span (irrelevant for the walk).
QVec interior_point(const RootSystem& rs, const std::vector<RootIndex>& base) {
  QMat m;
  QVec rhs;
  for (RootIndex b : base) {
    QVec row(rs.rank);
    QVec bc = rs.coords_q(b);
    for (int i = 0; i < rs.rank; ++i) {
      Rational acc(0);
      for (int j = 0; j < rs.rank; ++j) acc += rs.form[i][j] * bc[j];
      row[i] = acc;
    }
    m.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  return solve(m, rhs);
}

bool is_base_of_system(const RootSystem& rs, const std::vector<RootIndex>& base) {
  if (base.size() != static_cast<std::size_t>(rs.rank)) return false;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j) continue;
      Rational c = Rational(2) * rs.inner_roots(base[i], base[j]) / rs.norm2(base[j]);
      if (!c.is_integer() || c.sign() > 0) return false;
    }
  return true;
}

}  // namespace

ChamberWalk to_base(const RootSystem& rs, const std::vector<RootIndex>& image_base) {
  if (!is_base_of_system(rs, image_base))
    throw std::invalid_argument("to_base: input is not a base of Phi");
  QVec v = interior_point(rs, image_base);
  ChamberWalk out;
  out.w = Isometry::identity(rs);
  std::size_t guard = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i) {
      Rational d = rs.inner(v, rs.coords_q(rs.simple[i]));
      if (d.sign() < 0) { neg = i; break; }
    }
    if (neg < 0) break;
    v = rs.reflect(rs.simple[neg], v);
    out.w = Isometry::reflection(rs, rs.simple[neg]) * out.w;
    out.word.push_back(neg);
    if (++guard > 10000) throw std::logic_error("to_base: walk did not terminate");
  }
  // sanity: w maps the image base onto the fundamental base
  std::vector<RootIndex> img;
  for (RootIndex b : image_base) img.push_back(out.w(b));
  std::sort(img.begin(), img.end());
  std::vector<RootIndex> fnd(rs.simple.begin(), rs.simple.end());
  std::sort(fnd.begin(), fnd.end());
  if (img != fnd) throw std::invalid_argument("to_base: input is not a base of Phi");
  return out;
}

Isometry to_base_in_subsystem(const RootSystem& rs, const std::vector<RootIndex>& delta,
                              const std::vector<RootIndex>& image) {
  // Gram-interior point of the image base inside span(delta).
  // v = sum c_k image_k with (v, image_j) = 1.
  std::size_t k = image.size();
  QMat gram = qmat_zero(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = rs.inner_roots(image[i], image[j]);
  QVec rhs(k, Rational(1));
  QVec c = solve(gram, rhs);
  QVec v = qvec_zero(rs.rank);
  for (std::size_t i = 0; i < k; ++i) v = v + (c[i] * rs.coords_q(image[i]));

  Isometry u = Isometry::identity(rs);
  std::size_t guard = 0;
  for (;;) {
    int neg = -1;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      if (rs.inner(v, rs.coords_q(delta[i])).sign() < 0) { neg = static_cast<int>(i); break; }
    }
    if (neg < 0) break;
    v = rs.reflect(delta[neg], v);
    u = Isometry::reflection(rs, delta[neg]) * u;
    if (++guard > 100000) throw std::logic_error("to_base_in_subsystem: walk did not terminate");
  }
  return u;
}

bool is_in_weyl(const RootSystem& rs, const Isometry& sigma) {
  std::vector<RootIndex> image;
  for (RootIndex s : rs.simple) image.push_back(sigma(s));
  ChamberWalk walk = to_base(rs, image);
  Isometry tau = walk.w * sigma;
  for (RootIndex s : rs.simple)
    if (tau(s) != s) return false;
  return true;
}

bool pos_set_less(const PosSet& a, const PosSet& b) {
  // compare sorted index sequences lexicographically
  PosSet diff = a ^ b;
  if (diff.none()) return false;
  std::size_t i = 0;
  while (!diff.test(i)) ++i;
  return a.test(i);
}

SubsystemOrbit::SubsystemOrbit(const RootSystem& rs, const PosSet& start,
                               const std::vector<Isometry>& gens, bool collect_stabilizer)
    : rs_(&rs), gens_(&gens) {
  states_.push_back(start);
  parent_.emplace_back(0, -1);
  index_[start] = 0;
  std::unordered_set<Isometry, IsometryHash> stab_seen;

  // precompute positive-half permutations per generator
  std::vector<std::vector<RootIndex>> pperm;
  for (const auto& g : gens) {
    std::vector<RootIndex> p(rs.n_positive);
    for (std::size_t i = 0; i < rs.n_positive; ++i)
      p[i] = rs.pos_half(g(static_cast<RootIndex>(i)));
    pperm.push_back(std::move(p));
  }

  // with stabilizer collection on, keep transversal elements incrementally
  // (one permutation product per state instead of a parent walk per edge)
  std::vector<Isometry> trans;
  if (collect_stabilizer) trans.push_back(Isometry::identity(rs));

  for (std::size_t head = 0; head < states_.size(); ++head) {
    const PosSet cur = states_[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      PosSet img;
      for (std::size_t i = 0; i < rs.n_positive; ++i)
        if (cur.test(i)) img.set(pperm[gi][i]);
      auto it = index_.find(img);
      if (it == index_.end()) {
        std::uint32_t id = static_cast<std::uint32_t>(states_.size());
        states_.push_back(img);
        parent_.emplace_back(static_cast<std::uint32_t>(head), static_cast<std::int32_t>(gi));
        index_.emplace(img, id);
        if (collect_stabilizer) trans.push_back(gens[gi] * trans[head]);
      } else if (collect_stabilizer) {
        // Schreier generator u_t^{-1} g u_s stabilizes the start set
        Isometry sg = trans[it->second].inverse() * gens[gi] * trans[head];
        if (!sg.is_identity() && stab_seen.insert(sg).second) stab_gens_.push_back(sg);
      }
    }
  }
  canonical_id_ = 0;
  for (std::size_t i = 1; i < states_.size(); ++i)
    if (pos_set_less(states_[i], states_[canonical_id_])) canonical_id_ = i;
}

std::optional<std::size_t> SubsystemOrbit::find(const PosSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Isometry SubsystemOrbit::transversal(std::size_t i) const {
  // Edges from the start are g1, ..., gk; the transversal element is
  // gk ∘ ... ∘ g1, and the walk visits gk first.
  Isometry g = Isometry::identity(*rs_);
  std::size_t cur = i;
  while (parent_[cur].second >= 0) {
    g = g * (*gens_)[parent_[cur].second];
    cur = parent_[cur].first;
  }
  return g;
}

OrbitResult orbit_of_subsystem(const RootSystem& rs, const PosSet& psi, bool with_outer) {
  std::vector<Isometry> gens = with_outer ? iso_generators(rs) : weyl_generators(rs);
  SubsystemOrbit orbit(rs, psi, gens);
  IsometryGroup stab(rs, orbit.stabilizer_generators());
  return OrbitResult{orbit.canonical(), orbit.size(), std::move(stab)};
}

namespace {

IsometryGroup stab_of_base_impl(const RootSystem& rs, const std::vector<RootIndex>& delta,
                                bool with_outer) {
  // setwise stabilizer of <delta>, then correct each Schreier generator back
  // to the base with the unique W_Psi element.
  PosSet psi = span_closure(rs, delta);
  std::vector<Isometry> gens = with_outer ? iso_generators(rs) : weyl_generators(rs);
  SubsystemOrbit orbit(rs, psi, gens);

  std::vector<RootIndex> dsorted(delta.begin(), delta.end());
  std::sort(dsorted.begin(), dsorted.end());

  std::vector<Isometry> corrected;
  std::unordered_set<Isometry, IsometryHash> seen;
  for (const auto& g : orbit.stabilizer_generators()) {
    std::vector<RootIndex> img;
    for (RootIndex d : delta) img.push_back(g(d));
    Isometry u = to_base_in_subsystem(rs, delta, img);
    Isometry h = u * g;
    std::vector<RootIndex> chk;
    for (RootIndex d : delta) chk.push_back(h(d));
    std::sort(chk.begin(), chk.end());
    if (chk != dsorted) throw std::logic_error("stab_of_base: correction failed");
    if (!h.is_identity() && seen.insert(h).second) corrected.push_back(std::move(h));
  }
  return IsometryGroup(rs, std::move(corrected));
}

}  // namespace

IsometryGroup stab_of_base(const RootSystem& rs, const std::vector<RootIndex>& delta) {
  return stab_of_base_impl(rs, delta, false);
}

IsometryGroup iso_stab_of_base(const RootSystem& rs, const std::vector<RootIndex>& delta) {
  return stab_of_base_impl(rs, delta, true);
}

long long weyl_order(CartanType t) { return t.weyl_order(); }

std::vector<RootIndex> induced_base(const RootSystem& rs, const PosSet& psi) {
  std::vector<RootIndex> pos;
  for (std::size_t i = 0; i < rs.n_positive; ++i)
    if (psi.test(i)) pos.push_back(static_cast<RootIndex>(i));
  std::vector<RootIndex> base;
  for (RootIndex b : pos) {
    bool decomposable = false;
    for (RootIndex x : pos) {
      if (x == b) continue;
      RootCoord c;
      for (int i = 0; i < rs.rank; ++i)
        c[i] = static_cast<std::int8_t>(rs.roots[b][i] - rs.roots[x][i]);
      for (int i = rs.rank; i < 8; ++i) c[i] = 0;
      RootIndex r = rs.index_of(c);
      if (r != kNoRoot && rs.is_positive(r) && psi.test(r)) { decomposable = true; break; }
    }
    if (!decomposable) base.push_back(b);
  }
  return base;
}

PosSet span_closure(const RootSystem& rs, const std::vector<RootIndex>& gens) {
  PosSet s;
  for (RootIndex g : gens) s.set(rs.pos_half(g));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<RootIndex> members = rs.set_to_roots(s);
    for (RootIndex a : members) {
      const auto& perm = rs.reflection_perm(a);
      for (RootIndex b : members) {
        RootIndex img = perm[b];
        RootIndex ph = rs.pos_half(img);
        if (!s.test(ph)) { s.set(ph); changed = true; }
      }
    }
  }
  return s;
}

}  // namespace satake
