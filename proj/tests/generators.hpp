#pragma once

// Deterministic random instances for the property sweeps.

#include <random>

#include <irrlat/lattice.hpp>

namespace irrlat::testgen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline ZMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                             long lo, long hi) {
  ZMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline ZMatrix random_symmetric(Rng& rng, std::size_t n, long lo, long hi) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = uniform(rng, lo, hi);
      m(j, i) = m(i, j);
    }
  return m;
}

inline lattice::IntegralLattice random_nondegenerate_lattice(Rng& rng,
                                                             std::size_t n,
                                                             long lo, long hi) {
  while (true) {
    ZMatrix g = random_symmetric(rng, n, lo, hi);
    if (determinant(g) != 0) return lattice::IntegralLattice(std::move(g));
  }
}

inline ZMatrix random_full_rank_square(Rng& rng, std::size_t n, long lo,
                                       long hi) {
  while (true) {
    ZMatrix m = random_matrix(rng, n, n, lo, hi);
    if (determinant(m) != 0) return m;
  }
}

// random primitive sublattice of rank r with nondegenerate induced form,
// obtained as the double orthogonal complement of a random embedding
inline lattice::SublatticeEmbedding random_primitive_nondegenerate(
    Rng& rng, const lattice::IntegralLattice& l, std::size_t r) {
  while (true) {
    ZMatrix raw = random_matrix(rng, r, l.rank(), -3, 3);
    if (rank(raw) != r) continue;
    lattice::SublatticeEmbedding rough(l, raw);
    if (discriminant(induced_gram(rough)) == 0) continue;
    auto sat = orthogonal_complement(orthogonal_complement(rough));
    if (sat.rank() != r) continue;
    if (discriminant(induced_gram(sat)) == 0) continue;
    return sat;
  }
}

}  // namespace irrlat::testgen
