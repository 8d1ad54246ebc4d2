#include "tpv/report.hpp"

#include <sstream>

#include <json.hpp>

#include "tpv/errors.hpp"

namespace tpv {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Violated:
      return "violated";
    case Verdict::NotApplicable:
      return "not-applicable";
    case Verdict::SkippedResource:
      return "skipped-resource";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "verified") return Verdict::Verified;
  if (s == "violated") return Verdict::Violated;
  if (s == "not-applicable") return Verdict::NotApplicable;
  if (s == "skipped-resource") return Verdict::SkippedResource;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

namespace {

int rank(Verdict v) {
  switch (v) {
    case Verdict::NotApplicable:
      return 0;
    case Verdict::Verified:
      return 1;
    case Verdict::SkippedResource:
      return 2;
    case Verdict::Violated:
      return 3;
  }
  return 0;
}

json count_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt count_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("report count is not an integer");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class Map, class F>
std::string join_pairs(const Map& m, F value, const char* sep) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += sep;
    out += k + "=" + value(v);
  }
  return out;
}

}  // namespace

Verdict combine(Verdict a, Verdict b) { return rank(a) >= rank(b) ? a : b; }

void VerificationReport::check() const {
  if (verdict == Verdict::Violated && !witness) throw InternalError("violated report '" + lemma_id + "' lacks a witness");
}

std::string to_json(const VerificationReport& r, bool stable) {
  r.check();
  json j = json::object();
  j["schema"] = kReportSchema;
  j["lemma_id"] = r.lemma_id;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = count_to_json(v);
  j["counts"] = counts;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["elapsed_ms"] = stable ? 0 : r.elapsed_ms;
  if (r.seed) j["seed"] = *r.seed;
  return j.dump();
}

VerificationReport report_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("report JSON is not an object");
  if (j.value("schema", -1) != kReportSchema) throw InvalidArgument("unsupported report schema");
  VerificationReport r;
  try {
    r.lemma_id = j.at("lemma_id").get<std::string>();
    r.params = j.value("params", std::map<std::string, std::string>{});
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
    if (j.contains("counts")) {
      for (const auto& [k, v] : j["counts"].items()) r.counts[k] = count_from_json(v);
    }
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
    r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report field: ") + e.what());
  }
  return r;
}

std::vector<VerificationReport> reports_from_ndjson(const std::string& text) {
  std::vector<VerificationReport> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(report_from_json(line));
  }
  return out;
}

std::string csv_header() { return "lemma_id,params,verdict,counts,elapsed_ms,seed"; }

std::string to_csv_row(const VerificationReport& r, bool stable) {
  std::ostringstream os;
  os << csv_escape(r.lemma_id) << ',' << csv_escape(join_pairs(r.params, [](const std::string& v) { return v; }, ";"))
     << ',' << to_string(r.verdict) << ','
     << csv_escape(join_pairs(r.counts, [](const BigInt& v) { return v.str(); }, ";")) << ','
     << (stable ? 0 : r.elapsed_ms) << ',' << (r.seed ? std::to_string(*r.seed) : "");
  return os.str();
}

std::string to_markdown(const std::vector<VerificationReport>& reports, bool stable) {
  std::ostringstream os;
  os << "| lemma | params | verdict | counts | ms |\n|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    os << "| " << r.lemma_id << " | " << join_pairs(r.params, [](const std::string& v) { return v; }, ", ") << " | "
       << to_string(r.verdict) << " | " << join_pairs(r.counts, [](const BigInt& v) { return v.str(); }, ", ")
       << " | " << (stable ? 0 : r.elapsed_ms) << " |\n";
  }
  return os.str();
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated) return 1;
    skipped = skipped || r.verdict == Verdict::SkippedResource;
  }
  return skipped ? 2 : 0;
}

}  // namespace tpv
