#pragma once

#include "phylotrop/cools.hpp"
#include "phylotrop/dissimilarity.hpp"
#include "phylotrop/tropical.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace phylotrop {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

/// "json", "csv" or "text"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

class UnsupportedFormat : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of the plucker subcommand.
struct PluckerReport {
  int n = 0;
  int m = 0;
  Sign sign = Sign::Negated;
  std::size_t relations = 0;
  std::vector<PluckerViolation> violations;
};

/// Outcome of the validate subcommand.
struct ValidationReport {
  int n = 0;
  Rational total_weight;
  bool phylogenetic = false;
  bool ultrametric = false;
  std::optional<Rational> depth;
  std::string reason;  // why the tree is not ultrametric, if it is not
  bool ok() const { return phylogenetic || ultrametric; }
};

/// Outcome of the realize subcommand; `tree` is empty on failure.
struct RealizationReport {
  int n = 0;
  std::optional<std::string> newick;
  std::optional<Rational> depth;
  std::optional<UltrametricWitness> witness;
  std::string reason;
};

Json to_json(const VerificationReport& report);
Json to_json(const DissimilarityVector& dv);
Json to_json(const PluckerViolation& violation);
Json to_json(const PluckerReport& report);
Json to_json(const ValidationReport& report);
Json to_json(const RealizationReport& report);
Json to_json(const DistanceMatrix& dm);

/// Reads {"n": int, "d": [[rational-as-string]]}; integer entries are also
/// accepted. Throws std::invalid_argument on malformed input.
DistanceMatrix distance_matrix_from_json(const Json& doc);

/// Deterministic serialization, one trailing newline. Throws
/// UnsupportedFormat for combinations without a defined layout.
std::string format_report(const VerificationReport& report, Format format);
std::string format_report(const DissimilarityVector& dv, Format format);
std::string format_report(const PluckerReport& report, Format format);
std::string format_report(const ValidationReport& report, Format format);
std::string format_report(const RealizationReport& report, Format format);

}  // namespace phylotrop
