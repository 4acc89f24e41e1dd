#pragma once

#include <json.hpp>

#include <irrlat/bounds.hpp>
#include <irrlat/certificate.hpp>
#include <irrlat/invariants.hpp>
#include <irrlat/k3.hpp>
#include <irrlat/lattice.hpp>

// JSON wire formats. Integer values are serialized as decimal strings so
// they survive readers that coerce numbers to 64-bit floats; small
// structural fields (rank, power-expression exponents) stay plain numbers.

namespace irrlat::io {

using Json = nlohmann::ordered_json;

Json to_json(const Int& v);
Json to_json(const Rat& v);
// accepts a decimal string or an integral JSON number
Int int_from_json(const Json& j);

// {"rank": r, "gram": [["..."], ...]}
Json to_json(const lattice::IntegralLattice& l);
lattice::IntegralLattice lattice_from_json(const Json& j);

// {"ambient": <lattice>, "coords": [["..."], ...]}
Json to_json(const lattice::SublatticeEmbedding& e);
lattice::SublatticeEmbedding embedding_from_json(const Json& j);

// bare integer matrix [[...], ...]; rows must all have expected_cols entries
ZMatrix matrix_from_json(const Json& j, std::size_t expected_cols);

// {"base": "...", "num": p, "den": q}
Json to_json(const PowerExpr& p);
Json to_json(const CheckValue& v);
// {"verdict": ..., "checks": [{"statement", "lhs", "rel", "rhs", "pass"}], "notes": [...]}
Json to_json(const FeasibilityCertificate& c);
// {"value": ..., "witnesses": [...], "paper_statement": ..., "notes": [...]}
Json to_json(const bounds::BoundReport& r);
Json to_json(const k3::Window& w);
Json to_json(const invariants::ELWindow& w);

}  // namespace irrlat::io
