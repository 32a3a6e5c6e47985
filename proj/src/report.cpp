#include "phylotrop/report.hpp"

#include <sstream>

namespace phylotrop {

namespace {

std::string join_labels(std::span<const int> labels, char sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string verdict_word(bool ok) { return ok ? "OK" : "FAIL"; }

std::string sign_name(Sign sign) { return sign == Sign::Negated ? "negated" : "as-given"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = to_string(r.d);
  j["D"] = to_string(r.total_weight);
  j["valuation"] = to_string(r.valuation);
  j["verdict"] = r.verdict;
  j["height_sum_ok"] = r.height_sum_ok;
  j["claims"] = {{"c1", r.claims.c1}, {"c2", r.claims.c2}, {"c3", r.claims.c3}, {"c4", r.claims.c4}};
  j["seed"] = r.seed;
  j["resamples"] = r.resamples;
  return j;
}

Json to_json(const DissimilarityVector& dv) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < dv.values.size(); ++i)
    entries.push_back({{"sigma", join_labels(dv.subsets[i], '|')}, {"value", to_string(dv.values[i])}});
  Json j;
  j["n"] = dv.n;
  j["m"] = dv.m;
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const PluckerViolation& v) {
  Json j;
  j["S"] = v.relation.s;
  j["quad"] = v.relation.quad;
  j["terms"] = {to_string(v.terms[0]), to_string(v.terms[1]), to_string(v.terms[2])};
  j["argmin_count"] = v.argmin_count;
  return j;
}

Json to_json(const PluckerReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["sign"] = sign_name(r.sign);
  j["relations"] = r.relations;
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["n"] = r.n;
  j["total_weight"] = to_string(r.total_weight);
  j["phylogenetic"] = r.phylogenetic;
  j["ultrametric"] = r.ultrametric;
  j["d"] = r.depth ? Json(to_string(*r.depth)) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const RealizationReport& r) {
  Json j;
  j["n"] = r.n;
  j["ok"] = r.newick.has_value();
  if (r.newick) {
    j["newick"] = *r.newick;
    j["d"] = to_string(*r.depth);
  } else {
    j["reason"] = r.reason;
    if (r.witness) j["witness"] = {r.witness->x, r.witness->y, r.witness->z};
  }
  return j;
}

Json to_json(const DistanceMatrix& dm) {
  Json rows = Json::array();
  for (int i = 1; i <= dm.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= dm.size(); ++j) row.push_back(to_string(dm(i, j)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = dm.size();
  j["d"] = std::move(rows);
  return j;
}

DistanceMatrix distance_matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("d"))
    throw std::invalid_argument("distance matrix JSON needs keys \"n\" and \"d\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0)
    throw std::invalid_argument("\"n\" must be a nonnegative integer");
  const auto n = doc["n"].get<std::size_t>();
  const Json& d = doc["d"];
  if (!d.is_array() || d.size() != n) throw std::invalid_argument("\"d\" must be an n-by-n array");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : d) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("\"d\" must be an n-by-n array");
    std::vector<Rational> values;
    for (const auto& cell : row) {
      if (cell.is_string())
        values.push_back(parse_rational(cell.get<std::string>()));
      else if (cell.is_number_integer())
        values.emplace_back(cell.get<long>());
      else
        throw std::invalid_argument("distance entries must be rational strings or integers");
    }
    rows.push_back(std::move(values));
  }
  return DistanceMatrix(std::move(rows));
}

std::string format_report(const VerificationReport& r, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(r));
    case Format::Text: {
      std::ostringstream out;
      out << "n=" << r.n << " d=" << to_string(r.d) << " D=" << to_string(r.total_weight)
          << " val(det M)=" << to_string(r.valuation) << " height_sum=" << (r.height_sum_ok ? "ok" : "bad")
          << " claims=" << (r.claims.c1 ? '1' : '-') << (r.claims.c2 ? '2' : '-') << (r.claims.c3 ? '3' : '-')
          << (r.claims.c4 ? '4' : '-') << " seed=" << r.seed << " resamples=" << r.resamples << ' '
          << verdict_word(r.verdict && r.height_sum_ok && r.claims.all()) << '\n';
      return out.str();
    }
    case Format::Csv:
      break;
  }
  throw UnsupportedFormat("verification reports have no CSV layout");
}

std::string format_report(const DissimilarityVector& dv, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(dv));
    case Format::Csv: {
      std::string out = "sigma,value\n";
      for (std::size_t i = 0; i < dv.values.size(); ++i)
        out += join_labels(dv.subsets[i], '|') + "," + to_string(dv.values[i]) + "\n";
      return out;
    }
    case Format::Text: {
      std::string out;
      for (std::size_t i = 0; i < dv.values.size(); ++i)
        out += "d{" + join_labels(dv.subsets[i], ',') + "} = " + to_string(dv.values[i]) + "\n";
      return out;
    }
  }
  throw UnsupportedFormat("unsupported format");
}

std::string format_report(const PluckerReport& r, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(r));
    case Format::Csv: {
      std::string out = "S,quad,term1,term2,term3,argmin_count\n";
      for (const auto& v : r.violations)
        out += join_labels(v.relation.s, '|') + "," + join_labels(v.relation.quad, '|') + "," +
               to_string(v.terms[0]) + "," + to_string(v.terms[1]) + "," + to_string(v.terms[2]) + "," +
               std::to_string(v.argmin_count) + "\n";
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      out << "m=" << r.m << " n=" << r.n << " sign=" << sign_name(r.sign) << " relations=" << r.relations
          << " violations=" << r.violations.size() << ' ' << verdict_word(r.violations.empty()) << '\n';
      return out.str();
    }
  }
  throw UnsupportedFormat("unsupported format");
}

std::string format_report(const ValidationReport& r, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(r));
    case Format::Text: {
      std::ostringstream out;
      out << "n=" << r.n << " total_weight=" << to_string(r.total_weight)
          << " phylogenetic=" << (r.phylogenetic ? "yes" : "no") << " ultrametric=";
      if (r.ultrametric)
        out << "yes d=" << to_string(*r.depth);
      else
        out << "no (" << r.reason << ")";
      out << ' ' << verdict_word(r.ok()) << '\n';
      return out.str();
    }
    case Format::Csv:
      break;
  }
  throw UnsupportedFormat("validation reports have no CSV layout");
}

std::string format_report(const RealizationReport& r, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(r));
    case Format::Text:
      if (r.newick) return *r.newick + "\n";
      return "not realizable: " + r.reason + " FAIL\n";
    case Format::Csv:
      break;
  }
  throw UnsupportedFormat("realization reports have no CSV layout");
}

}  // namespace phylotrop
