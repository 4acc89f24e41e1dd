#include "oracles.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

namespace irrlat::oracles {

namespace {

ZMatrix minor_matrix(const ZMatrix& m, std::size_t drop_row,
                     const std::vector<std::size_t>& cols) {
  ZMatrix r(m.rows() - 1, cols.size());
  std::size_t ri = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) r(ri, j) = m(i, cols[j]);
    ++ri;
  }
  return r;
}

}  // namespace

Int cofactor_determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("oracle: square matrix required");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  std::vector<std::size_t> rest;
  for (std::size_t j = 1; j < n; ++j) rest.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, 0) == 0) continue;
    Int sub = cofactor_determinant(minor_matrix(m, i, rest));
    if (i % 2 == 0)
      det += m(i, 0) * sub;
    else
      det -= m(i, 0) * sub;
  }
  return det;
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace

Int gcd_of_minors(const ZMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) return 0;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  combinations(m.rows(), k, row_sets);
  combinations(m.cols(), k, col_sets);
  Int g = 0;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      ZMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Int d = abs(cofactor_determinant(sub));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

long coset_count(const ZMatrix& coords) {
  const std::size_t r = coords.rows();
  if (r != coords.cols() || r == 0 || r > 3)
    throw std::logic_error("oracle: coset_count needs square coords, rank 1..3");

  long c[3][3] = {};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i][j] = coords(i, j).get_si();

  long det;
  long adj[3][3] = {};  // adj[i][j] so that (C * adj) = det * I
  if (r == 1) {
    det = c[0][0];
    adj[0][0] = 1;
  } else if (r == 2) {
    det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    adj[0][0] = c[1][1];
    adj[0][1] = -c[0][1];
    adj[1][0] = -c[1][0];
    adj[1][1] = c[0][0];
  } else {
    auto m2 = [&](int a, int b, int x, int y) {
      return c[a][x] * c[b][y] - c[a][y] * c[b][x];
    };
    det = c[0][0] * m2(1, 2, 1, 2) - c[0][1] * m2(1, 2, 0, 2) +
          c[0][2] * m2(1, 2, 0, 1);
    // adj = transpose of the cofactor matrix
    adj[0][0] = m2(1, 2, 1, 2);
    adj[1][0] = -m2(1, 2, 0, 2);
    adj[2][0] = m2(1, 2, 0, 1);
    adj[0][1] = -m2(0, 2, 1, 2);
    adj[1][1] = m2(0, 2, 0, 2);
    adj[2][1] = -m2(0, 2, 0, 1);
    adj[0][2] = m2(0, 1, 1, 2);
    adj[1][2] = -m2(0, 1, 0, 2);
    adj[2][2] = m2(0, 1, 0, 1);
  }
  if (det == 0) throw std::logic_error("oracle: coset_count needs nonzero det");
  const long d = det < 0 ? -det : det;

  // u ~ v  iff  (u - v) * adj == 0 mod det; the box [0, d)^r hits every
  // class because d * e_i = +-(e_i * adj) * C lies in the row span.
  std::set<std::array<long, 3>> signatures;
  std::array<long, 3> u = {0, 0, 0};
  while (true) {
    std::array<long, 3> sig = {0, 0, 0};
    for (std::size_t j = 0; j < r; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < r; ++i) s += u[i] * adj[i][j];
      s %= d;
      if (s < 0) s += d;
      sig[j] = s;
    }
    signatures.insert(sig);
    std::size_t pos = 0;
    while (pos < r) {
      if (++u[pos] < d) break;
      u[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }
  return static_cast<long>(signatures.size());
}

}  // namespace irrlat::oracles
