#include "chordexp/json_io.hpp"

namespace chordexp {

namespace {

int index_key(const std::string& key) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || v < 0) throw std::invalid_argument("expected a nonnegative integer key, got \"" + key + "\"");
  return v;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

}  // namespace

Json to_json(const ChordDiagram& c) { return Json{{"n", c.size()}, {"pairing", c.pairing()}}; }

Json to_json(const ChordDiagram& c, const DiagramStats& s) {
  Json j = to_json(c);
  j["sigma"] = s.sigma;
  j["terminal"] = s.terminal;
  j["b"] = s.b;
  j["delta"] = s.delta;
  j["delta_bar"] = s.delta_bar;
  j["monomial"] = to_json(s.monomial);
  return j;
}

Json to_json(const FMonomial& m) {
  Json j = Json::object();
  const auto& e = m.exponents();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) j[std::to_string(k)] = e[k];
  }
  return j;
}

Json to_json(const FPolynomial& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) j.push_back(Json{{"m", to_json(m)}, {"c", to_string(c)}});
  return j;
}

Json to_json(const XSeries& s) {
  Json coeffs = Json::object();
  for (int n = 0; n <= s.order(); ++n) {
    if (!s.coefficient(n).is_zero()) coeffs[std::to_string(n)] = to_json(s.coefficient(n));
  }
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

Json to_json(const LabeledTree& t) {
  if (t.is_leaf()) return Json{{"leaf", t.label()}};
  return Json{{"left", to_json(t.left())}, {"right", to_json(t.right())}};
}

Json to_json(const CheckReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"where", v.where}, {"detail", v.detail}});
  return Json{{"name", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"violations", violations}, {"notes", r.notes}};
}

Json to_json(const GevreyReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.ratios.size(); ++i) {
    rows.push_back(Json{{"n", i + 1},
                        {"abs_gamma", to_string(r.magnitudes[i])},
                        {"ratio", to_string(r.ratios[i])},
                        {"ratio_decimal", r.ratios[i].get_d()},
                        {"bound", to_string(r.bound[i])}});
  }
  return Json{{"C", to_string(r.c_bound)},
              {"k", r.k},
              {"order", r.order},
              {"growth_K", r.growth},
              {"ratio_bound_holds", r.ratio_bound_holds},
              {"count_bound_holds", r.count_bound_holds},
              {"counts_checked", r.counts_checked},
              {"passed", r.passed()},
              {"rows", rows}};
}

Json to_json(const FourTermQuad& q) {
  Json members = Json::array();
  for (std::size_t s = 0; s < 4; ++s) {
    Json m = to_json(q.members[s]);
    m["word"] = q.members[s].word();
    m["moving_chord"] = q.moving_chord[s];
    members.push_back(m);
  }
  return Json{{"members", members}};
}

ChordDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairing") || !j["pairing"].is_array()) {
    throw std::invalid_argument("diagram JSON needs a \"pairing\" array");
  }
  std::vector<int> pairing;
  for (const auto& v : j["pairing"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("pairing entries must be integers");
    pairing.push_back(v.get<int>());
  }
  ChordDiagram c(std::move(pairing));
  if (j.contains("n") && j["n"] != c.size()) throw std::invalid_argument("\"n\" does not match the pairing length");
  return c;
}

LabeledTree tree_from_json(const Json& j) {
  if (j.is_object() && j.contains("leaf")) {
    if (!j["leaf"].is_number_integer()) throw std::invalid_argument("leaf label must be an integer");
    return LabeledTree::leaf(j["leaf"].get<int>());
  }
  if (j.is_object() && j.contains("left") && j.contains("right")) {
    return LabeledTree::join(tree_from_json(j["left"]), tree_from_json(j["right"]));
  }
  throw std::invalid_argument("tree JSON must be {\"leaf\": k} or {\"left\": ..., \"right\": ...}");
}

FPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  FPolynomial p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("m") || !term.contains("c")) throw std::invalid_argument("term needs \"m\" and \"c\"");
    FMonomial m;
    for (const auto& [key, e] : term["m"].items()) {
      if (!e.is_number_unsigned()) throw std::invalid_argument("exponents must be nonnegative integers");
      m *= FMonomial::variable(index_key(key), e.get<unsigned>());
    }
    p.add_term(m, rational_from_json(term["c"]));
  }
  return p;
}

SymbolValues symbol_values_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("symbol values must be a JSON object");
  SymbolValues v;
  for (const auto& [key, value] : j.items()) v[index_key(key)] = rational_from_json(value);
  return v;
}

}  // namespace chordexp
