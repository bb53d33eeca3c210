#ifndef QOSC_REPORT_HPP
#define QOSC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/classifier.hpp"
#include "qosc/matrixrep.hpp"
#include "qosc/params.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// %.17g: 17 significant digits, enough for every double to parse back bit-exactly.
std::string format_double(double value);

/// Serializes like Json::dump but with format_double for all floats.
std::string dump_json(const Json& value, int indent = 2);

/// Splits a CSV or comma list; trims spaces.
std::vector<std::string> split_list(const std::string& text, char sep = ',');

/// Parses a real number, accepting "p/q" fractions ("-5/3"). Throws InvalidInput.
double parse_real(const std::string& text);

Json to_json(const AlgebraParams& params);
Json to_json(const RepLabel& label);
Json to_json(const RepClass& rep);
Json to_json(const ThresholdSet& t);
Json to_json(const CasimirValues& c);
Json to_json(const Spectrum& s);
Json to_json(const ResidualReport& r);
Json to_json(const OperatorQuad& quad);
Json to_json(const Tolerances& tol);

/// Common envelope: schema id, versions, command name, echo of inputs.
Json report_envelope(const std::string& command, Json input, const Tolerances& tol);

/// "Fock+Unbounded", or "none" for the empty set.
std::string family_set_label(const std::vector<RepClass>& classes);

} // namespace qosc

#endif // QOSC_REPORT_HPP
