#include "cimetrics/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace cimetrics {

namespace {

// Shortest decimal form that parses back to the same double ("full
// precision" without the noise of a fixed %.17g).
std::string round_trip_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string six_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_citation(std::string_view token, std::size_t line_no,
                            const std::string& record_id) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw DataError("line " + std::to_string(line_no) + ", record '" + record_id +
                    "': citation '" + std::string(token) + "' is not a non-negative integer");
  }
  if (value < 0) {
    throw DataError("line " + std::to_string(line_no) + ", record '" + record_id +
                    "': citation counts must be non-negative");
  }
  return value;
}

// Header detection only: any list of decimal numbers counts as data, so a
// row like "R1,1.5" still reaches citation validation (and fails there)
// instead of being skipped as a header.
bool looks_like_citation_list(std::string_view field) {
  if (trim(field).empty()) return true;  // empty list is a valid record
  for (std::string_view rest = field;;) {
    const std::size_t semi = rest.find(';');
    const std::string_view tok = trim(rest.substr(0, semi));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return false;
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return true;
}

void check_unique_ids(const std::vector<ResearcherProfile>& profiles) {
  std::unordered_set<std::string> seen;
  for (const auto& p : profiles) {
    if (!seen.insert(p.id()).second) {
      throw DataError("duplicate profile id '" + p.id() + "'");
    }
  }
}

}  // namespace

std::vector<ResearcherProfile> parse_profiles_csv(std::istream& in) {
  std::vector<ResearcherProfile> profiles;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;

    const std::size_t comma = stripped.find(',');
    if (comma == std::string_view::npos) {
      throw DataError("line " + std::to_string(line_no) +
                      ": expected 'id,citations' with a ';'-separated citation list");
    }
    const std::string id(trim(stripped.substr(0, comma)));
    const std::string_view rest = trim(stripped.substr(comma + 1));

    if (first_record && !looks_like_citation_list(rest)) {
      first_record = false;  // header row
      continue;
    }
    first_record = false;

    if (id.empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty profile id");
    }

    std::vector<std::int64_t> citations;
    if (!rest.empty()) {
      for (std::string_view remaining = rest;;) {
        const std::size_t semi = remaining.find(';');
        citations.push_back(parse_citation(trim(remaining.substr(0, semi)), line_no, id));
        if (semi == std::string_view::npos) break;
        remaining = remaining.substr(semi + 1);
      }
    }
    profiles.emplace_back(id, std::move(citations));
  }

  check_unique_ids(profiles);
  return profiles;
}

std::vector<ResearcherProfile> parse_profiles_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_array()) {
    throw DataError("JSON input must be an array of {id, citations} objects");
  }

  std::vector<ResearcherProfile> profiles;
  profiles.reserve(doc.size());
  std::size_t index = 0;
  for (const auto& record : doc) {
    ++index;
    if (!record.is_object() || !record.contains("id") || !record.contains("citations")) {
      throw DataError("JSON record " + std::to_string(index) +
                      ": expected an object with 'id' and 'citations'");
    }
    if (!record["id"].is_string() || record["id"].get<std::string>().empty()) {
      throw DataError("JSON record " + std::to_string(index) +
                      ": 'id' must be a non-empty string");
    }
    const std::string id = record["id"].get<std::string>();
    if (!record["citations"].is_array()) {
      throw DataError("JSON record '" + id + "': 'citations' must be an array");
    }
    std::vector<std::int64_t> citations;
    citations.reserve(record["citations"].size());
    for (const auto& c : record["citations"]) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw DataError("JSON record '" + id +
                        "': citations must be non-negative integers");
      }
      citations.push_back(c.get<std::int64_t>());
    }
    profiles.emplace_back(id, std::move(citations));
  }

  check_unique_ids(profiles);
  return profiles;
}

std::vector<ResearcherProfile> load_profiles(const std::filesystem::path& path,
                                             std::optional<ProfileFormat> format) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open input file '" + path.string() + "'");
  }
  const ProfileFormat fmt = format.value_or(
      path.extension() == ".json" ? ProfileFormat::Json : ProfileFormat::Csv);
  return fmt == ProfileFormat::Json ? parse_profiles_json(in) : parse_profiles_csv(in);
}

std::string emit_profiles(std::span<const ResearcherProfile> profiles, ProfileFormat format) {
  if (format == ProfileFormat::Csv) {
    std::string out = "id,citations\n";
    for (const auto& p : profiles) {
      out += p.id();
      out += ',';
      const auto& cites = p.citations();
      for (std::size_t i = 0; i < cites.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(cites[i]);
      }
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : profiles) {
    nlohmann::ordered_json record;
    record["id"] = p.id();
    record["citations"] = p.citations();
    arr.push_back(std::move(record));
  }
  return arr.dump(2) + "\n";
}

std::string report_csv_header() {
  return "id,distortion,h,sharp_c_h,g,n_papers,total_citations,a_index,r_index,"
         "r_m,r_g,r_n,euclidean,ci_h,ci_g,ci_n";
}

std::string report_csv_row(const IndexReport& r) {
  std::string out;
  out += r.id;
  out += ',' + r.distortion.to_string();
  out += ',' + std::to_string(r.h);
  out += ',' + std::to_string(r.sharp_c_h);
  out += ',' + std::to_string(r.g);
  out += ',' + std::to_string(r.n_papers);
  out += ',' + std::to_string(r.total_citations);
  for (const double v : {r.a_index, r.r_index, r.r_m, r.r_g, r.r_n, r.euclidean,
                         r.ci_h, r.ci_g, r.ci_n}) {
    out += ',' + round_trip_double(v);
  }
  return out;
}

std::string report_table_row(const IndexReport& r) {
  std::string out;
  out += "id=" + r.id;
  out += " distortion=" + r.distortion.to_string();
  out += " h=" + std::to_string(r.h);
  out += " sharp_c_h=" + std::to_string(r.sharp_c_h);
  out += " g=" + std::to_string(r.g);
  out += " n_papers=" + std::to_string(r.n_papers);
  out += " total_citations=" + std::to_string(r.total_citations);
  out += " a_index=" + six_digits(r.a_index);
  out += " r_index=" + six_digits(r.r_index);
  out += " r_m=" + six_digits(r.r_m);
  out += " r_g=" + six_digits(r.r_g);
  out += " r_n=" + six_digits(r.r_n);
  out += " euclidean=" + six_digits(r.euclidean);
  out += " ci_h=" + six_digits(r.ci_h);
  out += " ci_g=" + six_digits(r.ci_g);
  out += " ci_n=" + six_digits(r.ci_n);
  return out;
}

namespace {

nlohmann::ordered_json report_to_json(const IndexReport& r) {
  nlohmann::ordered_json obj;
  obj["id"] = r.id;
  obj["distortion"] = r.distortion.to_string();
  obj["h"] = r.h;
  obj["sharp_c_h"] = r.sharp_c_h;
  obj["g"] = r.g;
  obj["n_papers"] = r.n_papers;
  obj["total_citations"] = r.total_citations;
  obj["a_index"] = r.a_index;
  obj["r_index"] = r.r_index;
  obj["r_m"] = r.r_m;
  obj["r_g"] = r.r_g;
  obj["r_n"] = r.r_n;
  obj["euclidean"] = r.euclidean;
  obj["ci_h"] = r.ci_h;
  obj["ci_g"] = r.ci_g;
  obj["ci_n"] = r.ci_n;
  return obj;
}

}  // namespace

std::string emit_report(const IndexReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table:
      return report_table_row(r) + "\n";
    case ReportFormat::Csv:
      return report_csv_header() + "\n" + report_csv_row(r) + "\n";
    case ReportFormat::Json:
      return report_to_json(r).dump(2) + "\n";
  }
  return {};
}

std::string emit_reports(std::span<const IndexReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: {
      std::string out;
      for (const auto& r : reports) out += report_table_row(r) + "\n";
      return out;
    }
    case ReportFormat::Csv: {
      std::string out = report_csv_header() + "\n";
      for (const auto& r : reports) out += report_csv_row(r) + "\n";
      return out;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      return arr.dump(2) + "\n";
    }
  }
  return {};
}

CurvePair emit_curves(const DistortionSpec& spec, std::size_t ranks, std::size_t grid) {
  if (grid < 2) {
    throw std::invalid_argument("emit_curves: grid must be at least 2");
  }
  if (ranks < 1) {
    throw std::invalid_argument("emit_curves: ranks must be at least 1");
  }

  CurvePair out;
  out.curve.kind = CurveKind::DistortionCurve;
  out.curve.points.reserve(grid + 1);
  for (std::size_t i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid);
    out.curve.points.emplace_back(x, evaluate(spec, x));
  }

  out.bars.kind = CurveKind::WeightBars;
  const WeightVector weights = make_weights(spec, ranks);
  out.bars.points.reserve(ranks);
  for (std::size_t j = 0; j < ranks; ++j) {
    out.bars.points.emplace_back(static_cast<double>(j + 1), weights[j]);
  }
  return out;
}

std::string curves_to_csv(const CurvePair& curves) {
  std::string out = "kind,x,y\n";
  for (const auto& [x, y] : curves.curve.points) {
    out += "curve," + round_trip_double(x) + ',' + round_trip_double(y) + '\n';
  }
  for (const auto& [x, y] : curves.bars.points) {
    out += "bars," + round_trip_double(x) + ',' + round_trip_double(y) + '\n';
  }
  return out;
}

}  // namespace cimetrics
