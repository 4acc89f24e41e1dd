#pragma once

#include <optional>
#include <vector>

#include <irrlat/certificate.hpp>
#include <irrlat/matrix.hpp>

namespace irrlat::lattice {

// Free Z-module of finite rank with an integer-valued symmetric bilinear
// form, stored as a Gram matrix.
class IntegralLattice {
 public:
  explicit IntegralLattice(ZMatrix gram);
  static IntegralLattice rank0();

  std::size_t rank() const { return gram_.rows(); }
  const ZMatrix& gram() const { return gram_; }

  bool operator==(const IntegralLattice&) const = default;

 private:
  IntegralLattice() = default;
  ZMatrix gram_;
};

// Sublattice E of an ambient lattice L. Rows of coords are the coordinates
// of a basis of E in the fixed basis of L; they must be linearly
// independent over the rationals.
class SublatticeEmbedding {
 public:
  SublatticeEmbedding(IntegralLattice ambient, ZMatrix coords);

  const IntegralLattice& ambient() const { return ambient_; }
  const ZMatrix& coords() const { return coords_; }
  std::size_t rank() const { return coords_.rows(); }

 private:
  IntegralLattice ambient_;
  ZMatrix coords_;
};

// u*m*v = d with u, v unimodular; d diagonal, non-negative, divisibility
// chain d1 | d2 | ... with zeros trailing.
struct SNFDecomposition {
  ZMatrix u, v, d;

  std::vector<Int> elementary_divisors() const;  // nonzero diagonal entries
};

// det of the Gram matrix; 1 for the rank-0 lattice
Int discriminant(const IntegralLattice& l);

// same module, form multiplied by e >= 1
IntegralLattice rescale(const IntegralLattice& l, const Int& e);

SNFDecomposition smith_normal_form(const ZMatrix& m);

// [L:E] for a full-rank sublattice, nullopt when rank(E) < rank(L)
std::optional<Int> sublattice_index(const SublatticeEmbedding& emb);

// coords * gram(L) * coords^T as a lattice in its own right
IntegralLattice induced_gram(const SublatticeEmbedding& emb);

// saturated basis of {x in L : <x, e> = 0 for every generator e of E}
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& emb);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

// checks |disc(K) * disc(E)| = [L : K+E]^2 * |disc(L)| for mutually
// orthogonal K, E with rank(K) + rank(E) = rank(L)
FeasibilityCertificate glue_index_identity(const IntegralLattice& l,
                                           const SublatticeEmbedding& k,
                                           const SublatticeEmbedding& e);

}  // namespace irrlat::lattice
