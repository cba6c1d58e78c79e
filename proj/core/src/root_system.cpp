#include "satake/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

int coord_height(const RootCoord& c, int rank) {
  int h = 0;
  for (int i = 0; i < rank; ++i) h += c[i];
  return h;
}

bool coord_positive(const RootCoord& c, int rank) {
  for (int i = 0; i < rank; ++i) {
    if (c[i] > 0) return true;
    if (c[i] < 0) return false;
  }
  return false;
}

struct RootOrder {
  int rank;
  bool operator()(const RootCoord& a, const RootCoord& b) const {
    bool pa = coord_positive(a, rank), pb = coord_positive(b, rank);
    if (pa != pb) return pa;  // positives first
    int ha = coord_height(a, rank), hb = coord_height(b, rank);
    int ka = pa ? ha : -ha, kb = pb ? hb : -hb;
    if (ka != kb) return ka < kb;
    for (int i = 0; i < 8; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

}  // namespace

RootSystem::RootSystem(CartanType t) : type(t), rank(t.rank) {
  auto a = t.cartan_matrix();
  QVec d = t.root_half_norms();
  form = qmat_zero(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) form[i][j] = d[i] * Rational(a[i][j]);

  // Closure of the simple roots under simple reflections. Everything stays
  // integral: s_i(b) = b - <b, a_i> a_i.
  std::set<RootCoord> seen;
  std::vector<RootCoord> queue;
  for (int i = 0; i < rank; ++i) {
    RootCoord c{};
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  auto cartan_of = [&](const RootCoord& b, int i) {
    // <b, a_i> = sum_j b_j A[i][j]... careful: <b, a_i> = 2(b,a_i)/(a_i,a_i)
    // = sum_j b_j * 2(a_j,a_i)/(a_i,a_i) = sum_j b_j A[i][j].
    long long acc = 0;
    for (int j = 0; j < rank; ++j) acc += static_cast<long long>(b[j]) * a[i][j];
    return acc;
  };
  while (!queue.empty()) {
    RootCoord b = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long long k = cartan_of(b, i);
      RootCoord img = b;
      img[i] = static_cast<std::int8_t>(img[i] - k);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  roots.assign(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), RootOrder{rank});
  n_positive = roots.size() / 2;

  neg.resize(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RootCoord m = roots[i];
    for (int j = 0; j < rank; ++j) m[j] = static_cast<std::int8_t>(-m[j]);
    neg[i] = index_of(m);
  }

  simple.resize(rank);
  for (int i = 0; i < rank; ++i) {
    RootCoord c{};
    c[i] = 1;
    simple[i] = index_of(c);
  }

  // highest root = unique positive root of maximal height
  highest_root = static_cast<RootIndex>(n_positive - 1);
  Rational long_norm(0);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rational n2 = norm2(static_cast<RootIndex>(i));
    if (long_norm < n2) long_norm = n2;
  }
  highest_short_root = highest_root;
  if (!t.is_simply_laced()) {
    for (std::size_t i = n_positive; i-- > 0;) {
      if (norm2(static_cast<RootIndex>(i)) < long_norm) {
        highest_short_root = static_cast<RootIndex>(i);
        break;
      }
    }
  }

  inner6_.assign(roots.size(), std::vector<std::int8_t>(roots.size()));
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a; b < roots.size(); ++b) {
      Rational v = Rational(6) * inner_roots(static_cast<RootIndex>(a), static_cast<RootIndex>(b));
      inner6_[a][b] = inner6_[b][a] = static_cast<std::int8_t>(v.as_integer());
    }

  refl_cache_.resize(roots.size());
  refl_pos_cache_.resize(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a) {
    auto& slot = refl_cache_[a];
    slot.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
      slot[i] = reflect_root(static_cast<RootIndex>(a), static_cast<RootIndex>(i));
    auto& pslot = refl_pos_cache_[a];
    pslot.resize(n_positive);
    for (std::size_t i = 0; i < n_positive; ++i) pslot[i] = pos_half(slot[i]);
  }
}

const RootSystem& RootSystem::get(CartanType t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(t.family), t.rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<RootSystem>(new RootSystem(t))).first;
  return *it->second;
}

RootIndex RootSystem::index_of(const RootCoord& c) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), c, RootOrder{rank});
  if (it == roots.end() || *it != c) return kNoRoot;
  return static_cast<RootIndex>(it - roots.begin());
}

int RootSystem::height(RootIndex r) const { return coord_height(roots[r], rank); }

Rational RootSystem::inner(const QVec& v, const QVec& w) const {
  if (v.size() != static_cast<std::size_t>(rank) || w.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("inner: dimension mismatch");
  Rational acc(0);
  for (int i = 0; i < rank; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < rank; ++j) acc += v[i] * form[i][j] * w[j];
  }
  return acc;
}

Rational RootSystem::inner_roots(RootIndex a, RootIndex b) const {
  Rational acc(0);
  const RootCoord& x = roots[a];
  const RootCoord& y = roots[b];
  for (int i = 0; i < rank; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank; ++j)
      if (y[j]) acc += Rational(x[i]) * form[i][j] * Rational(y[j]);
  }
  return acc;
}

bool RootSystem::is_long(RootIndex r) const {
  static const Rational two(2);
  return norm2(r) == two;
}

long long RootSystem::cartan_int(RootIndex a, RootIndex b) const {
  return (Rational(2) * inner_roots(b, a) / norm2(a)).as_integer();
}

QVec RootSystem::coords_q(RootIndex r) const {
  QVec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = Rational(roots[r][i]);
  return v;
}

QVec RootSystem::reflect(RootIndex a, const QVec& v) const {
  QVec av = coords_q(a);
  Rational c = Rational(2) * inner(v, av) / norm2(a);
  return v - (c * av);
}

RootIndex RootSystem::reflect_root(RootIndex a, RootIndex b) const {
  long long k = cartan_int(a, b);
  RootCoord img = roots[b];
  for (int i = 0; i < rank; ++i)
    img[i] = static_cast<std::int8_t>(img[i] - k * roots[a][i]);
  RootIndex r = index_of(img);
  if (r == kNoRoot) throw std::logic_error("reflect_root: image is not a root");
  return r;
}

std::pair<int, int> RootSystem::root_string(RootIndex a, RootIndex b) const {
  if (b == a || b == neg[a]) throw std::invalid_argument("root_string: b = ±a");
  auto shift = [&](int k) {
    RootCoord c = roots[b];
    for (int i = 0; i < rank; ++i)
      c[i] = static_cast<std::int8_t>(c[i] + k * roots[a][i]);
    return index_of(c) != kNoRoot;
  };
  int down = 0, up = 0;
  while (shift(-(down + 1))) ++down;
  while (shift(up + 1)) ++up;
  return {down, up};
}

long long chevalley_n_magnitude(const RootSystem& rs, RootIndex a, RootIndex b) {
  // |N_{a,b}| = (down-string of b through a) + 1 when a + b is a root.
  RootCoord c;
  for (int i = 0; i < rs.rank; ++i)
    c[i] = static_cast<std::int8_t>(rs.roots[a][i] + rs.roots[b][i]);
  for (int i = rs.rank; i < 8; ++i) c[i] = 0;
  if (rs.index_of(c) == kNoRoot) return 0;
  auto [down, up] = rs.root_string(a, b);
  (void)up;
  return down + 1;
}

std::vector<std::tuple<int, int, long long>> RootSystem::structure_constant_magnitudes(
    RootIndex a, RootIndex b) const {
  std::vector<std::tuple<int, int, long long>> out;
  if (b == a || b == neg[a]) return out;
  auto root_at = [&](int m, int n) -> RootIndex {
    RootCoord c;
    for (int i = 0; i < rank; ++i)
      c[i] = static_cast<std::int8_t>(m * roots[a][i] + n * roots[b][i]);
    for (int i = rank; i < 8; ++i) c[i] = 0;
    return index_of(c);
  };
  auto N = [&](RootIndex x, RootIndex y) { return chevalley_n_magnitude(*this, x, y); };

  // Magnitudes follow the Chevalley commutator formula constants
  // (Carter, Simple Groups of Lie Type, Thm 5.2.2):
  //   C_{i1} = M_{a,b,i} = (1/i!) N(a,b) N(a,a+b) ... N(a,(i-1)a+b)
  //   C_{1j} = M_{b,a,j}
  //   C_{32} = (2/3) M_{a+b,a,2},  C_{23} = (1/3) M_{a+b,b,2} ... only the
  // G2-shaped (3,2)/(2,3) pairs occur at rank <= 8, and both come out as 2.
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}}) {
    RootIndex r = root_at(m, n);
    if (r == kNoRoot) continue;
    long long mag = 0;
    if (m == 1 && n == 1) {
      mag = N(a, b);
    } else if (n == 1 || m == 1) {
      RootIndex base = (n == 1) ? a : b;
      RootIndex other = (n == 1) ? b : a;
      int steps = (n == 1) ? m : n;
      long long prod = 1;
      RootIndex cur = other;
      bool ok = true;
      for (int k = 0; k < steps; ++k) {
        long long f = N(base, cur);
        if (f == 0) { ok = false; break; }
        prod *= f;
        if (k + 1 < steps) {
          RootCoord cc;
          for (int i = 0; i < rank; ++i)
            cc[i] = static_cast<std::int8_t>(roots[base][i] + roots[cur][i]);
          for (int i = rank; i < 8; ++i) cc[i] = 0;
          cur = index_of(cc);
        }
      }
      long long fact = 1;
      for (int k = 2; k <= steps; ++k) fact *= k;
      mag = ok ? prod / fact : 0;
    } else {
      // (3,2) or (2,3): 3a+2b = (a+b) + (2a+b) chains; the exact constant is
      // C32 = (2/3) M_{a+b,a,2} with magnitude 2 in G2.
      RootIndex ab = root_at(1, 1);
      RootIndex base = (m == 3) ? a : b;
      if (ab != kNoRoot) {
        long long n1 = N(ab, base);
        RootCoord cc;
        for (int i = 0; i < rank; ++i)
          cc[i] = static_cast<std::int8_t>(roots[ab][i] + roots[base][i]);
        for (int i = rank; i < 8; ++i) cc[i] = 0;
        RootIndex two_ab = index_of(cc);
        long long n2 = (two_ab == kNoRoot) ? 0 : N(ab, two_ab);
        mag = (n1 * n2) / 3;
      }
    }
    if (mag != 0) out.emplace_back(m, n, mag);
  }
  return out;
}

const std::vector<RootIndex>& RootSystem::reflection_perm(RootIndex a) const {
  return refl_cache_[a];
}

const std::vector<RootIndex>& RootSystem::reflection_pos_perm(RootIndex a) const {
  return refl_pos_cache_[a];
}

PosSet RootSystem::full_set() const {
  PosSet s;
  for (std::size_t i = 0; i < n_positive; ++i) s.set(i);
  return s;
}

std::vector<RootIndex> RootSystem::set_to_roots(const PosSet& s) const {
  std::vector<RootIndex> out;
  for (std::size_t i = 0; i < n_positive; ++i) {
    if (s.test(i)) {
      out.push_back(static_cast<RootIndex>(i));
      out.push_back(neg[i]);
    }
  }
  return out;
}

}  // namespace satake
