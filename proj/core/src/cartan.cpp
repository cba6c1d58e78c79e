#include "satake/cartan.hpp"

#include <stdexcept>

namespace satake {

CartanType::CartanType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw std::invalid_argument("CartanType: invalid rank for family " + name());
}

bool CartanType::is_exceptional() const {
  return family == Family::E || family == Family::F || family == Family::G;
}

bool CartanType::is_simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("CartanType::parse: " + s);
  char f = s[0];
  if (f < 'A' || f > 'G') throw std::invalid_argument("CartanType::parse: " + s);
  int r = std::stoi(s.substr(1));
  return CartanType(static_cast<Family>(f), r);
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  int n = rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short: <a_{n-1}, a_n> = -1 but <a_n, a_{n-1}> = -2? Convention:
      // A[i][j] = 2(a_i,a_j)/(a_i,a_i). For B_n: (a_{n-1},a_n) = -1,
      // half-norms 1 and 1/2, so A[n-2][n-1] = -1, A[n-1][n-2] = -2.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_n long.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      // 1-2=>3-4, alpha_1, alpha_2 long. A[i][j] = 2(a_i,a_j)/(a_i,a_i), so the
      // -2 sits on the short row: A[2][1] = 2(-1)/1.
      link(0, 1); link(2, 3);
      a[1][2] = -1; a[2][1] = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long: <a1,a2> = -1... A[0][1] = 2(a1,a2)/(a1,a1).
      // (a1,a1) = 2/3, (a2,a2) = 2, (a1,a2) = -1: A[0][1] = -3, A[1][0] = -1.
      a[0][1] = -3; a[1][0] = -1;
      break;
  }
  return a;
}

QVec CartanType::root_half_norms() const {
  int n = rank;
  QVec d(n, Rational(1));
  switch (family) {
    case Family::B:
      d[n - 1] = Rational(1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
      break;
    case Family::F:
      d[2] = d[3] = Rational(1, 2);
      break;
    case Family::G:
      d[0] = Rational(1, 3);
      break;
    default:
      break;
  }
  return d;
}

std::vector<long long> CartanType::degrees() const {
  int n = rank;
  std::vector<long long> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  return d;
}

long long CartanType::weyl_order() const {
  long long o = 1;
  for (long long x : degrees()) o *= x;
  return o;
}

}  // namespace satake
