#pragma once

#include <string>

#include "incrtree/constants.hpp"
#include "incrtree/decay.hpp"
#include "incrtree/normality.hpp"
#include "incrtree/oracle.hpp"
#include "incrtree/stats.hpp"

namespace incrtree {

// JSON object serializations of the report structs (stable field order, so
// identical inputs give byte-identical output). The CLI composes these into
// its envelope; schema_version lives there.
std::string to_json_string(const TheoremConstants& c);
std::string to_json_string(const GportConstants& c);
std::string to_json_string(const SampleStats& s);
std::string to_json_string(const NormalityReport& r);
std::string to_json_string(const ChiSquareReport& r);
std::string to_json_string(const ModelProbabilityReport& r);
std::string to_json_string(const MeanFormulaReport& r);
std::string to_json_string(const DecayReport& r);
std::string to_json_string(const ExactDistribution& d);

// CSV with header "value,probability_num,probability_den".
std::string to_csv(const ExactDistribution& d);

}  // namespace incrtree
