#ifndef SSTAR_REPORT_IO_HPP
#define SSTAR_REPORT_IO_HPP

#include "sstar/analysis.hpp"
#include "sstar/condition.hpp"
#include "sstar/star.hpp"

#include <json.hpp>

#include <string>

namespace sstar {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest of raw input bytes, 16 hex characters.
std::string fnv1a64_hex(const std::string& bytes);

nlohmann::json point_json(const Point& p);
nlohmann::json value_json(const OutputValue& v);

nlohmann::json condition_report_json(const ConditionReport& r);
std::string condition_report_text(const ConditionReport& r);

nlohmann::json star_report_json(const StarReport& r);
std::string star_report_text(const StarReport& r);
std::string star_dim_line(const StarDimEntry& e);

nlohmann::json validity_report_json(const ValidityReport& r);
std::string validity_report_text(const ValidityReport& r);

nlohmann::json generators_json(const std::vector<InformationGenerator>& gens);
std::string generators_text(const std::vector<InformationGenerator>& gens);

nlohmann::json split_report_json(const SplitMergeReport& r);
std::string split_report_text(const SplitMergeReport& r);

/// Self-contained machine report: tool version, input digest, subcommand, body.
nlohmann::json report_envelope(const std::string& subcommand, const std::string& input_digest,
                               nlohmann::json body);

/// Canonical machine serialization (sorted keys, fixed indentation).
std::string render_machine(const nlohmann::json& report);

} // namespace sstar

#endif
