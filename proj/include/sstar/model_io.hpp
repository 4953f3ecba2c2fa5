#ifndef SSTAR_MODEL_IO_HPP
#define SSTAR_MODEL_IO_HPP

#include "sstar/condition.hpp"
#include "sstar/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sstar {

/// Optional per-file check settings carried alongside the model description.
struct CheckOptions {
    std::optional<Reading> reading;
    std::optional<SubsetPolicy> policy;
    std::optional<std::vector<std::int64_t>> schedule;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> sample_budget;
};

struct ModelSpecDocument {
    DiscreteDomain domain;
    Model model;
    CheckOptions check;
};

/// Parse a model description file. Diagnostics name the offending JSON path;
/// non-canonical rationals are rejected with a fix-it hint; unknown fields are
/// rejected. Throws Error(parse_error).
ModelSpecDocument parse_model_document(const std::string& text);

/// Canonical serialization; parse/serialize/parse is the identity on valid documents.
std::string serialize_model_document(const ModelSpecDocument& doc);

/// Exact rational from a canonical "p" or "p/q" string.
Rational parse_rational(const std::string& text, const std::string& path);
std::string rational_str(const Rational& r);

} // namespace sstar

#endif
