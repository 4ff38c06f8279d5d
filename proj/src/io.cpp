#include "hlkit/io.hpp"

#include <limits>

#include "hlkit/errors.hpp"

namespace hlkit {

namespace {

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw ParseError("integer expected in JSON");
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  p.for_each_term([&](int e, const Integer& c) { j[std::to_string(e)] = integer_to_json(c); });
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
  std::map<int, Integer> terms;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || k.empty()) throw ParseError("bad exponent key '" + k + "'");
    terms[e] += integer_from_json(v);
  }
  return LaurentPoly::from_terms(terms);
}

Json expansion_to_json(const BasisExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [p, c] : e.coeffs()) coeffs.push_back({{"partition", p.parts()}, {"poly", laurent_to_json(c)}});
  return {{"basis", basis_label(e.basis())}, {"coeffs", coeffs}};
}

BasisExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs")) throw ParseError("expansion needs basis and coeffs");
  BasisExpansion e(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& item : j.at("coeffs")) {
    try {
      e.add(Partition(item.at("partition").get<std::vector<int>>()), laurent_from_json(item.at("poly")));
    } catch (const NotAPartition& ex) {
      throw ParseError(ex.what());
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(ex.what());
    }
  }
  return e;
}

Json xpoly_to_json(const XPoly& p, const std::vector<std::string>& names) {
  const std::vector<std::string> vars = names.size() >= p.nvars() ? names : default_names(p.nvars());
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"poly", laurent_to_json(c)}});
  return {{"vars", std::vector<std::string>(vars.begin(), vars.begin() + static_cast<long>(p.nvars()))},
          {"terms", terms},
          {"text", p.to_string(vars)}};
}

XPoly xpoly_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("vars").size();
    XPoly p(n);
    for (const auto& item : j.at("terms"))
      p.add_term(item.at("exponent").get<std::vector<int>>(), laurent_from_json(item.at("poly")));
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  } catch (const LengthMismatch& ex) {
    throw ParseError(ex.what());
  }
}

Json tableau_to_json(const Tableau& t) { return Json(t.rows()); }

Json chain_to_json(const PlanePartitionLayers& pp) {
  Json j = Json::array();
  for (const auto& p : pp.chain) j.push_back(p.parts());
  return j;
}

Json report_to_json(const IdentityReport& r) {
  Json j = {{"identity", r.identity},
            {"holds", r.holds},
            {"lhs", xpoly_to_json(r.lhs, r.names)},
            {"rhs", xpoly_to_json(r.rhs, r.names)}};
  if (!r.holds && r.lhs.nvars() == r.rhs.nvars()) j["difference"] = xpoly_to_json(r.lhs - r.rhs, r.names);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace hlkit
