#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "powerspec/closedforms.hpp"
#include "powerspec/factorization.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/polynomial.hpp"
#include "powerspec/scan.hpp"
#include "powerspec/section4.hpp"
#include "powerspec/verify.hpp"

namespace powerspec {

using Json = nlohmann::json;

/// {"coeffs": ["-6", "11", "-6", "1"]}, ascending, decimal strings.
Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"factors": [{"coeffs": [...], "mult": k}, ...]}
Json factorization_to_json(const SpectrumFactorization& f);
SpectrumFactorization factorization_from_json(const Json& j);

/// Header "factor,multiplicity"; linear factors print their root,
/// others their polynomial.
std::string factorization_to_csv(const SpectrumFactorization& f);

/// Nodes grouped into clusters by class label and coloured per class.
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

/// {"order": n, "vertices": [{"id", "name", "class", "neighbors"}], "edges": m}
Json graph_to_json(const Graph& g);

Json report_to_json(const ClosedFormReport& r);
Json report_to_json(const VerificationReport& r);
Json report_to_json(const StructureReport& r);
Json report_to_json(const Section4Report& r);
Json rows_to_json(const std::vector<ConjectureRow>& rows);
std::string rows_to_csv(const std::vector<ConjectureRow>& rows);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace powerspec
