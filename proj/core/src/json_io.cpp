#include <irrlat/json_io.hpp>

#include <cstdint>

#include <irrlat/errors.hpp>

namespace irrlat::io {

Json to_json(const Int& v) { return to_decimal(v); }

Json to_json(const Rat& v) { return to_decimal(v); }

Int int_from_json(const Json& j) {
  if (j.is_string()) return int_from_decimal(j.get<std::string>());
  if (j.is_number_unsigned())
    return Int(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer())
    return Int(std::to_string(j.get<std::int64_t>()), 10);
  throw parse_error("expected an integer (decimal string or JSON integer), got: " +
                    j.dump());
}

ZMatrix matrix_from_json(const Json& j, std::size_t expected_cols) {
  if (!j.is_array()) throw parse_error("expected an array of matrix rows");
  ZMatrix m(j.size(), expected_cols);
  std::size_t i = 0;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != expected_cols)
      throw parse_error("matrix row has wrong length");
    std::size_t c = 0;
    for (const auto& entry : row) m(i, c++) = int_from_json(entry);
    ++i;
  }
  return m;
}

Json to_json(const lattice::IntegralLattice& l) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < l.rank(); ++j)
      row.push_back(to_decimal(l.gram()(i, j)));
    gram.push_back(std::move(row));
  }
  return Json{{"rank", l.rank()}, {"gram", std::move(gram)}};
}

lattice::IntegralLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
    throw parse_error("lattice: expected {\"rank\": r, \"gram\": [[...]]}");
  if (!j["rank"].is_number_integer() && !j["rank"].is_number_unsigned())
    throw parse_error("lattice: rank must be a JSON integer");
  const auto rank = j["rank"].get<std::int64_t>();
  if (rank < 0) throw parse_error("lattice: rank must be non-negative");
  ZMatrix gram = matrix_from_json(j["gram"], static_cast<std::size_t>(rank));
  if (gram.rows() != static_cast<std::size_t>(rank))
    throw parse_error("lattice: gram dimensions do not match rank");
  return lattice::IntegralLattice(std::move(gram));
}

Json to_json(const lattice::SublatticeEmbedding& e) {
  Json coords = Json::array();
  for (std::size_t i = 0; i < e.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < e.coords().cols(); ++j)
      row.push_back(to_decimal(e.coords()(i, j)));
    coords.push_back(std::move(row));
  }
  return Json{{"ambient", to_json(e.ambient())}, {"coords", std::move(coords)}};
}

lattice::SublatticeEmbedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("coords"))
    throw parse_error(
        "embedding: expected {\"ambient\": <lattice>, \"coords\": [[...]]}");
  lattice::IntegralLattice ambient = lattice_from_json(j["ambient"]);
  ZMatrix coords = matrix_from_json(j["coords"], ambient.rank());
  return lattice::SublatticeEmbedding(std::move(ambient), std::move(coords));
}

Json to_json(const PowerExpr& p) {
  return Json{{"base", to_decimal(p.base)}, {"num", p.num}, {"den", p.den}};
}

Json to_json(const CheckValue& v) {
  if (const Rat* r = std::get_if<Rat>(&v)) return to_decimal(*r);
  return to_json(std::get<PowerExpr>(v));
}

Json to_json(const FeasibilityCertificate& c) {
  Json checks = Json::array();
  for (const Check& check : c.checks) {
    checks.push_back(Json{{"statement", check.statement},
                          {"lhs", to_json(check.lhs)},
                          {"rel", check.rel},
                          {"rhs", to_json(check.rhs)},
                          {"pass", check.pass}});
  }
  return Json{{"verdict", to_string(c.verdict)},
              {"checks", std::move(checks)},
              {"notes", c.notes}};
}

Json to_json(const bounds::BoundReport& r) {
  Json witnesses = Json::array();
  if (const auto* ws = std::get_if<std::vector<bounds::ConstraintWitness>>(&r.witnesses)) {
    for (const auto& w : *ws)
      witnesses.push_back(Json{{"n", to_decimal(w.n)},
                               {"g", to_decimal(w.g)},
                               {"k", to_decimal(w.k)}});
  } else {
    for (const auto& step : std::get<std::vector<bounds::DivisorStep>>(r.witnesses)) {
      Json s{{"n", step.level}, {"d", to_decimal(step.d)}};
      if (step.e) s["e"] = to_decimal(*step.e);
      witnesses.push_back(std::move(s));
    }
  }
  return Json{{"value", to_decimal(r.value)},
              {"witnesses", std::move(witnesses)},
              {"paper_statement", r.statement},
              {"notes", r.notes}};
}

Json to_json(const k3::Window& w) {
  return Json{{"lo", to_json(w.lo)}, {"hi", to_json(w.hi)}};
}

Json to_json(const invariants::ELWindow& w) {
  return Json{{"window", Json::array({to_decimal(w.lo), to_decimal(w.hi)})},
              {"lo", to_decimal(w.lo)},
              {"hi", to_decimal(w.hi)},
              {"lo_radicand", to_decimal(w.lo_radicand)},
              {"hi_radicand", to_decimal(w.hi_radicand)}};
}

}  // namespace irrlat::io
