#include "eqschubert/json_io.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    out.push_back({{"coeff", t.coeff.get_str()}, {"exps", t.mono.exponents()}});
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("coeff") || !item.contains("exps")) {
      throw InvalidArgument("polynomial term needs \"coeff\" and \"exps\"");
    }
    const auto& coeff = item["coeff"];
    const auto& exps = item["exps"];
    if (!coeff.is_string() || !exps.is_array() || exps.size() != nvars) {
      throw InvalidArgument("polynomial term has a malformed coeff or exps of the wrong length");
    }
    Integer c;
    if (c.set_str(coeff.get<std::string>(), 10) != 0) {
      throw InvalidArgument("bad coefficient: " + coeff.get<std::string>());
    }
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!exps[v].is_number_unsigned() || exps[v].get<unsigned>() > Monomial::kMaxExponent) {
        throw InvalidArgument("exponents must be integers in 0..255");
      }
      m.raise(v + 1, exps[v].get<unsigned>());
    }
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

Json to_json(const Cell& cell) { return {{"r", cell.r}, {"c", cell.c}}; }

Json to_json(const PathTuple& tuple) {
  Json out = Json::array();
  for (const auto& path : tuple.paths) {
    Json cells = Json::array();
    for (const auto& cell : path.cells) cells.push_back(to_json(cell));
    out.push_back(std::move(cells));
  }
  return out;
}

Json to_json(const EqClass& a) {
  Json restrictions = Json::object();
  const auto& indices = a.indices();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    restrictions[indices[k].to_string()] = to_json(a.restrictions()[k]);
  }
  return {{"d", a.d()}, {"n", a.n()}, {"restrictions", restrictions}};
}

EqClass eqclass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("restrictions")) {
    throw InvalidArgument("class JSON needs \"d\", \"n\" and \"restrictions\"");
  }
  if (!j["d"].is_number_unsigned() || !j["n"].is_number_unsigned()) {
    throw InvalidArgument("\"d\" and \"n\" must be non-negative integers");
  }
  const auto d = j["d"].get<std::size_t>();
  const auto n = j["n"].get<std::size_t>();
  const auto& r = j["restrictions"];
  if (!r.is_object()) throw InvalidArgument("\"restrictions\" must be an object");
  EqClass out(d, n);
  for (const auto& v : out.indices()) {
    auto it = r.find(v.to_string());
    if (it == r.end()) throw InvalidArgument("missing restriction at " + v.to_string());
    out.set(v, polynomial_from_json(*it, n));
  }
  if (r.size() != out.indices().size()) {
    for (const auto& [key, value] : r.items()) GIndex::parse(key, d, n);
    throw InvalidArgument("duplicate fixed point in \"restrictions\"");
  }
  return out;
}

Json to_json(const std::vector<StructConstEntry>& table) {
  Json out = Json::array();
  for (const auto& e : table) {
    out.push_back({{"u", e.u.to_string()},
                   {"v", e.v.to_string()},
                   {"w", e.w.to_string()},
                   {"c", to_json(e.c)}});
  }
  return out;
}

std::vector<StructConstEntry> table_from_json(const Json& j, std::size_t d, std::size_t n) {
  if (!j.is_array()) throw InvalidArgument("table JSON must be an array");
  std::vector<StructConstEntry> out;
  for (const auto& item : j) {
    for (const char* key : {"u", "v", "w"}) {
      if (!item.contains(key) || !item[key].is_string()) {
        throw InvalidArgument(std::string("table entry needs string \"") + key + "\"");
      }
    }
    if (!item.contains("c")) throw InvalidArgument("table entry needs \"c\"");
    out.push_back({GIndex::parse(item["u"].get<std::string>(), d, n),
                   GIndex::parse(item["v"].get<std::string>(), d, n),
                   GIndex::parse(item["w"].get<std::string>(), d, n),
                   polynomial_from_json(item["c"], n)});
  }
  return out;
}

}  // namespace eqschubert
