#include "ramsey/formats.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

namespace {

Json spec_json(const ColoringSpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["t"] = s.t;
  j["m"] = s.m;
  j["ell"] = s.ell;
  j["N"] = s.n;
  j["seed"] = s.seed;
  if (s.kind == ColoringKind::kProduct) {
    j["factors"] = Json::array();
    for (const auto& f : s.factors) j["factors"].push_back(spec_json(f));
  }
  return j;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

std::uint64_t unsigned_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InputError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

ColoringSpec spec_from(const Json& j) {
  if (!j.is_object()) throw InputError("colouring spec must be a JSON object");
  ColoringSpec s;
  s.kind = parse_coloring_kind(field<std::string>(j, "kind"));
  s.t = field<int>(j, "t");
  s.m = j.contains("m") ? field<int>(j, "m") : 0;
  s.ell = field<int>(j, "ell");
  s.n = unsigned_field(j, "N");
  s.seed = j.contains("seed") ? unsigned_field(j, "seed") : 0;
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) throw InputError("'factors' must be an array");
    for (const auto& f : j["factors"]) s.factors.push_back(spec_from(f));
  }
  s.validate();
  return s;
}

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json body_json(const Certificate& c) {
  Json j;
  j["spec"] = spec_json(c.spec);
  j["seed"] = c.seed;
  j["t"] = c.t;
  j["verified"] = c.verified;
  j["exhaustive"] = c.exhaustive;
  if (c.witness) {
    j["witness"] = {{"color", c.witness->color}, {"vertices", c.witness->vertices}};
  } else {
    j["witness"] = nullptr;
  }
  if (c.expectation) {
    const auto& e = *c.expectation;
    j["expectation"] = {{"model", e.model},
                        {"p_ind_exact", e.p_ind_exact},
                        {"per_set_mono_exact", e.per_set_mono_exact},
                        {"expected_count_exact", e.expected_count_exact},
                        {"expected_count_display", e.expected_count_display},
                        {"expected_count", e.expected_count},
                        {"expected_below_one", e.expected_below_one},
                        {"census", e.census}};
  } else {
    j["expectation"] = nullptr;
  }
  if (c.certified_bound) {
    j["certified_bound"] = *c.certified_bound;
  } else {
    j["certified_bound"] = nullptr;
  }
  return j;
}

}  // namespace

std::string spec_to_json(const ColoringSpec& spec) { return spec_json(spec).dump(2) + "\n"; }

ColoringSpec spec_from_json(const std::string& text) { return spec_from(parse(text, "spec")); }

std::string certificate_body_json(const Certificate& cert) { return body_json(cert).dump(2) + "\n"; }

std::string certificate_to_json(const Certificate& cert) {
  Json j = body_json(cert);
  j["search_stats"] = {{"nodes", cert.stats.nodes},
                       {"tries", cert.stats.tries},
                       {"wall_ms", cert.stats.wall_ms}};
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  const Json j = parse(text, "certificate");
  if (!j.is_object()) throw InputError("certificate must be a JSON object");
  Certificate c;
  if (!j.contains("spec")) throw InputError("missing field 'spec'");
  c.spec = spec_from(j.at("spec"));
  c.seed = unsigned_field(j, "seed");
  c.t = field<int>(j, "t");
  c.verified = field<bool>(j, "verified");
  c.exhaustive = field<bool>(j, "exhaustive");
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    c.witness = MonoWitness{field<int>(w, "color"), field<std::vector<Vertex>>(w, "vertices")};
  }
  if (j.contains("expectation") && !j.at("expectation").is_null()) {
    const Json& e = j.at("expectation");
    CertificateExpectation ex;
    ex.model = field<std::string>(e, "model");
    ex.p_ind_exact = field<std::string>(e, "p_ind_exact");
    ex.per_set_mono_exact = field<std::string>(e, "per_set_mono_exact");
    ex.expected_count_exact = field<std::string>(e, "expected_count_exact");
    ex.expected_count_display = field<std::string>(e, "expected_count_display");
    ex.expected_count = field<std::string>(e, "expected_count");
    ex.expected_below_one = field<bool>(e, "expected_below_one");
    ex.census = field<std::string>(e, "census");
    // Reject malformed rationals early.
    parse_fraction(ex.p_ind_exact);
    parse_fraction(ex.expected_count_exact);
    c.expectation = ex;
  }
  if (j.contains("certified_bound") && !j.at("certified_bound").is_null()) {
    c.certified_bound = unsigned_field(j, "certified_bound");
  }
  if (j.contains("search_stats")) {
    const Json& s = j.at("search_stats");
    c.stats.nodes = unsigned_field(s, "nodes");
    c.stats.tries = field<int>(s, "tries");
    c.stats.wall_ms = field<double>(s, "wall_ms");
  }
  return c;
}

std::string census_to_csv(const IndependentSetCensus& census) {
  std::ostringstream out;
  out << "# census n=" << census.vertex_count << " max_size=" << census.max_size << '\n';
  out << "k,count\n";
  for (std::size_t k = 0; k < census.counts.size(); ++k) out << k << ',' << census.counts[k] << '\n';
  return out.str();
}

IndependentSetCensus census_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  IndependentSetCensus census;
  unsigned long long n = 0;
  int max_size = -1;
  if (!std::getline(in, line) ||
      std::sscanf(line.c_str(), "# census n=%llu max_size=%d", &n, &max_size) != 2) {
    throw InputError("census CSV: missing '# census' line");
  }
  if (!std::getline(in, line) || line != "k,count") {
    throw InputError("census CSV: missing 'k,count' header");
  }
  census.vertex_count = n;
  census.max_size = max_size;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    unsigned long long k = 0, count = 0;
    if (std::sscanf(line.c_str(), "%llu,%llu", &k, &count) != 2 || k != census.counts.size()) {
      throw InputError("census CSV: malformed row '" + line + "'");
    }
    census.counts.push_back(count);
  }
  if (max_size < 0 || census.counts.size() != static_cast<std::size_t>(max_size) + 1) {
    throw InputError("census CSV: row count does not match max_size");
  }
  return census;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace ramsey
