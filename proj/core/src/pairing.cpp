#include "floppy/pairing.hpp"

#include <algorithm>
#include <stdexcept>

namespace floppy {

PairingMatrix build_matrix(const std::vector<RegionProfile>& profiles,
                           const std::map<std::pair<std::string, std::string>, SharedCorners>& shared,
                           long long k, Side side) {
  PairingMatrix m;
  m.side = side;
  std::map<std::string, const RegionProfile*> by_id;
  for (const auto& p : profiles) {
    if (p.side != side || !p.relevant) continue;
    m.order.push_back(p.face);
    by_id[p.face] = &p;
  }
  std::sort(m.order.begin(), m.order.end(), region_id_less);
  std::size_t n = m.order.size();
  m.entries2.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const RegionProfile& p = *by_id.at(m.order[i]);
    if (p.simple_corners % 2 != 0)
      throw std::runtime_error("pairing: odd simple-corner count on '" + p.face + "'");
    m.entries2[i][i] = p.self_pairing_twice();
  }
  for (const auto& [key, sc] : shared) {
    auto it_a = std::find(m.order.begin(), m.order.end(), key.first);
    auto it_b = std::find(m.order.begin(), m.order.end(), key.second);
    if (it_a == m.order.end() || it_b == m.order.end()) continue;  // non-relevant or other side
    std::size_t a = static_cast<std::size_t>(it_a - m.order.begin());
    std::size_t b = static_cast<std::size_t>(it_b - m.order.begin());
    long long v = (k % 2 != 0) ? sc.plain + sc.crossing : sc.plain - sc.crossing;
    m.entries2[a][b] = v;
    m.entries2[b][a] = v;
  }
  return m;
}

PairingMatrix build_side_matrix(const CurveDiagram& d, long long k, Side side) {
  auto profiles = region_profiles(d, k);
  auto shared = shared_corner_table(d, side);
  if (k % 2 == 0 && !d.w && !shared.empty())
    throw std::runtime_error("pairing: even k with shared corners requires w data");
  return build_matrix(profiles, shared, k, side);
}

namespace {

using RMat = std::vector<std::vector<Rat>>;

void symmetric_swap(RMat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

InertiaResult inertia_of(const IMat& m) {
  std::size_t n = m.size();
  RMat a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::runtime_error("inertia: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Rat(m[i][j]);
      if (m[i][j] != m[j][i]) throw std::runtime_error("inertia: matrix not symmetric");
    }
  }
  InertiaResult res;
  std::size_t t = 0;
  while (t < n) {
    std::size_t pivot = n;
    for (std::size_t i = t; i < n; ++i)
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < n) {
      symmetric_swap(a, t, pivot);
      Rat piv = a[t][t];
      (piv > 0 ? res.sigma_plus : res.sigma_minus)++;
      for (std::size_t r = t + 1; r < n; ++r) {
        if (a[r][t] == 0) continue;
        Rat f = a[r][t] / piv;
        for (std::size_t c = t; c < n; ++c) a[r][c] -= f * a[t][c];
        for (std::size_t c = t; c < n; ++c) a[c][r] = a[r][c];
      }
      ++t;
      continue;
    }
    // zero diagonal throughout: hunt the first off-diagonal entry, lex order
    std::size_t bi = n, bj = n;
    for (std::size_t i = t; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i][j] != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n) {
      res.eta += static_cast<long long>(n - t);
      break;
    }
    symmetric_swap(a, t, bi);
    symmetric_swap(a, t + 1, bj);
    Rat h = a[t][t + 1];  // block [[0,h],[h,0]]: one of each sign
    res.sigma_plus++;
    res.sigma_minus++;
    for (std::size_t r = t + 2; r < n; ++r) {
      Rat x = a[r][t], y = a[r][t + 1];
      if (x == 0 && y == 0) continue;
      for (std::size_t c = t; c < n; ++c) a[r][c] -= (y / h) * a[t][c] + (x / h) * a[t + 1][c];
      for (std::size_t c = t; c < n; ++c) a[c][r] = a[r][c];
    }
    t += 2;
  }
  return res;
}

InertiaResult inertia(const PairingMatrix& m) { return inertia_of(m.entries2); }

std::vector<std::vector<Int>> kernel_basis(const IMat& m) {
  std::size_t n = m.size();
  IMat w = m;
  IMat u(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto combine_cols = [&](std::size_t c1, std::size_t c2, const Int& s, const Int& t,
                          const Int& p, const Int& q) {
    // (c1, c2) <- (s*c1 + t*c2, p*c1 + q*c2), applied to both w and u
    for (std::size_t r = 0; r < n; ++r) {
      Int a = w[r][c1], b = w[r][c2];
      w[r][c1] = s * a + t * b;
      w[r][c2] = p * a + q * b;
      a = u[r][c1];
      b = u[r][c2];
      u[r][c1] = s * a + t * b;
      u[r][c2] = p * a + q * b;
    }
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(w[r][c1], w[r][c2]);
      std::swap(u[r][c1], u[r][c2]);
    }
  };

  std::size_t rank = 0;
  for (std::size_t row = 0; row < n && rank < n; ++row) {
    std::size_t lead = n;
    for (std::size_t c = rank; c < n; ++c)
      if (w[row][c] != 0) {
        lead = c;
        break;
      }
    if (lead == n) continue;
    for (std::size_t c = lead + 1; c < n; ++c) {
      if (w[row][c] == 0) continue;
      Int a = w[row][lead], b = w[row][c];
      Int s, t, g;
      {
        Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
        while (r != 0) {
          Int q = old_r / r;
          Int tmp = old_r - q * r;
          old_r = r;
          r = tmp;
          tmp = old_s - q * ss;
          old_s = ss;
          ss = tmp;
          tmp = old_t - q * tt;
          old_t = tt;
          tt = tmp;
        }
        if (old_r < 0) {
          old_r = -old_r;
          old_s = -old_s;
          old_t = -old_t;
        }
        g = old_r;
        s = old_s;
        t = old_t;
      }
      combine_cols(lead, c, s, t, -b / g, a / g);
    }
    swap_cols(rank, lead);
    // clear the pivot row in later reductions is unnecessary for kernel extraction
    ++rank;
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = rank; c < n; ++c) {
    std::vector<Int> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = u[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Int>> odd_kernel_witness(const IMat& m) {
  std::size_t n = m.size();
  if (n == 0) return std::vector<Int>{};
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;

  // solve sum x_i (v_i mod 2) = all-ones over GF(2)
  std::size_t d = basis.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(d + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = basis[c][r] % 2 != 0 ? 1 : 0;
    a[r][d] = 1;
  }
  std::vector<std::size_t> pivot_col(n, d + 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < n; ++c) {
    std::size_t sel = n;
    for (std::size_t r = rank; r < n; ++r)
      if (a[r][c]) {
        sel = r;
        break;
      }
    if (sel == n) continue;
    std::swap(a[rank], a[sel]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && a[r][c])
        for (std::size_t cc = 0; cc <= d; ++cc) a[r][cc] ^= a[rank][cc];
    pivot_col[rank] = c;
    ++rank;
  }
  for (std::size_t r = rank; r < n; ++r)
    if (a[r][d]) return std::nullopt;

  std::vector<int> x(d, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][d];
  std::vector<Int> witness(n, 0);
  for (std::size_t c = 0; c < d; ++c)
    if (x[c])
      for (std::size_t r = 0; r < n; ++r) witness[r] += basis[c][r];
  return witness;
}

std::optional<std::vector<Int>> odd_kernel_witness(const PairingMatrix& m) {
  return odd_kernel_witness(m.entries2);
}

Int det_abs(const IMat& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (a[t][t] == 0) {
      std::size_t sel = n;
      for (std::size_t r = t + 1; r < n; ++r)
        if (a[r][t] != 0) {
          sel = r;
          break;
        }
      if (sel == n) return 0;
      std::swap(a[t], a[sel]);  // sign irrelevant for |det|
    }
    for (std::size_t r = t + 1; r < n; ++r)
      for (std::size_t c = t + 1; c < n; ++c)
        a[r][c] = (a[r][c] * a[t][t] - a[r][t] * a[t][c]) / prev;
    prev = a[t][t];
  }
  Int det = a[n - 1][n - 1];
  return det < 0 ? Int(-det) : det;
}

bool det_power_square(const IMat& m, long long exponent) {
  Int d = det_abs(m);
  if (d == 0) return true;
  long long v2 = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++v2;
  }
  if (v2 < exponent || (v2 - exponent) % 2 != 0) return false;
  Int root = boost::multiprecision::sqrt(d);
  return root * root == d;
}

bool det_power_square(const PairingMatrix& m, long long exponent) {
  return det_power_square(m.entries2, exponent);
}

}  // namespace floppy
