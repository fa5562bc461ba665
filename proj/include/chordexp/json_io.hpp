#pragma once

#include "chordexp/analysis.hpp"
#include "chordexp/chord_diagram.hpp"
#include "chordexp/report.hpp"
#include "chordexp/series.hpp"
#include "chordexp/tree.hpp"

#include <json.hpp>

namespace chordexp {

using Json = nlohmann::ordered_json;

// {"n": 3, "pairing": [...]}
Json to_json(const ChordDiagram& c);
// Diagram fields plus sigma, terminal, b, delta, delta_bar, monomial.
Json to_json(const ChordDiagram& c, const DiagramStats& s);
// {"0": e0, "3": e3}
Json to_json(const FMonomial& m);
// [{"m": {...}, "c": "p/q"}, ...]
Json to_json(const FPolynomial& p);
// {"order": N, "coeffs": {"1": [...], ...}}; zero coefficients omitted.
Json to_json(const XSeries& s);
// {"leaf": k} or {"left": ..., "right": ...}
Json to_json(const LabeledTree& t);
Json to_json(const CheckReport& r);
Json to_json(const GevreyReport& r);
Json to_json(const FourTermQuad& q);

// All throw std::invalid_argument on malformed input.
ChordDiagram diagram_from_json(const Json& j);
LabeledTree tree_from_json(const Json& j);
FPolynomial polynomial_from_json(const Json& j);
// {"0": "1", "1": "1/2"}; values may be strings or integers.
SymbolValues symbol_values_from_json(const Json& j);

}  // namespace chordexp
