#pragma once

// Text and JSON renderings. Indices are 1-based in every rendering.

#include <string>

#include "json.hpp"
#include "monomial/census.hpp"
#include "monomial/classify.hpp"
#include "monomial/duality.hpp"
#include "monomial/oracle.hpp"

namespace monomial {

nlohmann::json to_json(const LevelMatrix& m);
nlohmann::json to_json(const WeylElement& w);
nlohmann::json to_json(const OrderCheck& c);
nlohmann::json to_json(const EichlerShape& s);
nlohmann::json to_json(const GorensteinCheck& c);

/// Stable field names: n, input, is_order, canonical, is_gorenstein, eichler,
/// is_hereditary, is_bass, bass_reason, witnesses.
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const CensusClass& c);
nlohmann::json to_json(const BassOracleVerdict& v);

std::string describe(const OrderViolation& v);
std::string describe(const EichlerShape& s);
std::string render_text(const ClassificationReport& r);

}  // namespace monomial
