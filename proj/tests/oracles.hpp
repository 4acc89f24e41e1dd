#pragma once

// Independent oracles for the derived expected values. These deliberately
// avoid the library's computation paths: determinants by Laplace
// expansion, divisor products by gcds of minors, indices by explicit
// coset enumeration.

#include <irrlat/matrix.hpp>

namespace irrlat::oracles {

// Laplace cofactor expansion; exponential, fine for rank <= 6.
Int cofactor_determinant(const ZMatrix& m);

// gcd of the absolute values of all k x k minors; 0 if all vanish.
Int gcd_of_minors(const ZMatrix& m, std::size_t k);

// |Z^r / rowspan(coords)| counted by enumerating canonical residue
// signatures over the box [0, |det|)^r. Requires square coords with
// nonzero determinant, r <= 3 and small entries.
long coset_count(const ZMatrix& coords);

}  // namespace irrlat::oracles
