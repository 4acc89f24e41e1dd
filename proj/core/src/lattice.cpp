#include <irrlat/lattice.hpp>

#include <algorithm>
#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat::lattice {

IntegralLattice::IntegralLattice(ZMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw invariant_error("IntegralLattice: Gram matrix must be square");
  if (!gram_.is_symmetric())
    throw invariant_error("IntegralLattice: Gram matrix must be symmetric");
}

IntegralLattice IntegralLattice::rank0() { return IntegralLattice(); }

SublatticeEmbedding::SublatticeEmbedding(IntegralLattice ambient, ZMatrix coords)
    : ambient_(std::move(ambient)), coords_(std::move(coords)) {
  if (coords_.rows() == 0 && coords_.cols() == 0)
    coords_ = ZMatrix(0, ambient_.rank());
  if (coords_.cols() != ambient_.rank())
    throw invariant_error(
        "SublatticeEmbedding: coords columns must match ambient rank");
  if (irrlat::rank(coords_) != coords_.rows())
    throw invariant_error(
        "SublatticeEmbedding: generator rows must be linearly independent");
}

std::vector<Int> SNFDecomposition::elementary_divisors() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

Int discriminant(const IntegralLattice& l) { return determinant(l.gram()); }

IntegralLattice rescale(const IntegralLattice& l, const Int& e) {
  if (e < 1) throw invariant_error("rescale: factor must be >= 1");
  return IntegralLattice(e * l.gram());
}

// Pivot rule: smallest nonzero absolute value, ties broken by lowest row
// then lowest column index, so decompositions are reproducible.
SNFDecomposition smith_normal_form(const ZMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  ZMatrix a = input;
  ZMatrix u = ZMatrix::identity(m);
  ZMatrix v = ZMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  while (t < steps) {
    // row-major scan keeps the first minimum, which is the tie-break order
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 &&
            (pi == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;  // remaining submatrix is zero

    if (pi != t) {
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }

    bool dirty = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a(i, t) == 0) continue;
      Int q = a(i, t) / a(t, t);
      if (q != 0) {
        Int neg = -q;
        a.add_row_multiple(i, t, neg);
        u.add_row_multiple(i, t, neg);
      }
      if (a(i, t) != 0) dirty = true;  // remainder smaller than the pivot
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a(t, j) == 0) continue;
      Int q = a(t, j) / a(t, t);
      if (q != 0) {
        Int neg = -q;
        a.add_col_multiple(j, t, neg);
        v.add_col_multiple(j, t, neg);
      }
      if (a(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // enforce the divisibility chain before moving on
    bool fixed = false;
    for (std::size_t i = t + 1; i < m && !fixed; ++i)
      for (std::size_t j = t + 1; j < n && !fixed; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.add_row_multiple(t, i, Int(1));
          u.add_row_multiple(t, i, Int(1));
          fixed = true;
        }
    if (fixed) continue;

    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  return SNFDecomposition{std::move(u), std::move(v), std::move(a)};
}

std::optional<Int> sublattice_index(const SublatticeEmbedding& emb) {
  if (emb.rank() != emb.ambient().rank()) return std::nullopt;
  Int det = determinant(emb.coords());
  return abs(det);
}

IntegralLattice induced_gram(const SublatticeEmbedding& emb) {
  ZMatrix g = emb.coords() * emb.ambient().gram() * emb.coords().transposed();
  return IntegralLattice(std::move(g));
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& emb) {
  const IntegralLattice& l = emb.ambient();
  const std::size_t n = l.rank();
  // x is orthogonal to E iff (coords * gram) x^T = 0; the kernel basis is
  // read off the unimodular column transform, which makes it saturated.
  ZMatrix b = emb.coords() * l.gram();
  SNFDecomposition snf = smith_normal_form(b);
  const std::size_t s = snf.elementary_divisors().size();
  ZMatrix k(n - s, n);
  for (std::size_t c = s; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(c - s, i) = snf.v(i, c);
  return SublatticeEmbedding(l, std::move(k));
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  return IntegralLattice(block_diagonal(a.gram(), b.gram()));
}

FeasibilityCertificate glue_index_identity(const IntegralLattice& l,
                                           const SublatticeEmbedding& k,
                                           const SublatticeEmbedding& e) {
  if (!(k.ambient() == l) || !(e.ambient() == l))
    throw invariant_error("glue_index_identity: embeddings must share the ambient lattice");
  if (k.rank() + e.rank() != l.rank())
    return FeasibilityCertificate::hypothesis_failure(
        "rank(K) + rank(E) must equal rank(L)");
  ZMatrix pairing = k.coords() * l.gram() * e.coords().transposed();
  if (!pairing.is_zero())
    return FeasibilityCertificate::hypothesis_failure(
        "K and E are not mutually orthogonal in L");
  Int index = abs(determinant(vstack(k.coords(), e.coords())));
  if (index == 0)
    return FeasibilityCertificate::hypothesis_failure(
        "K + E is not of full rank in L (infinite index)");

  Int disc_k = discriminant(induced_gram(k));
  Int disc_e = discriminant(induced_gram(e));
  Int disc_l = discriminant(l);
  Int lhs = abs(disc_k * disc_e);
  Int rhs = index * index * abs(disc_l);

  std::vector<Check> checks;
  checks.push_back(Check{"glue-index-identity", Rat(lhs), "=", Rat(rhs), lhs == rhs});
  std::vector<std::string> notes = {
      "identity compared as |disc(K)*disc(E)| = [L:K+E]^2 * |disc(L)|",
      "disc(K) = " + to_decimal(disc_k),
      "disc(E) = " + to_decimal(disc_e),
      "disc(L) = " + to_decimal(disc_l),
      "[L:K+E] = " + to_decimal(index),
  };
  return FeasibilityCertificate::from_checks(std::move(checks), std::move(notes));
}

}  // namespace irrlat::lattice
