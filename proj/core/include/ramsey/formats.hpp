#pragma once

#include <string>

#include "ramsey/certificate.hpp"
#include "ramsey/census.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

// Coloring spec JSON: {"kind","t","m","ell","N","seed"[,"factors":[...]]}.
std::string spec_to_json(const ColoringSpec& spec);
ColoringSpec spec_from_json(const std::string& text);

// Certificate JSON. certificate_to_json(certificate_from_json(s)) == s for
// any s this library wrote.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

/// The certificate JSON without its search_stats block: the part that must
/// reproduce exactly across runs, machines and thread counts.
std::string certificate_body_json(const Certificate& cert);

/// Census CSV: a `# census n=<vertices> max_size=<k>` line, header
/// `k,count`, then one row per k = 0..max_size.
std::string census_to_csv(const IndependentSetCensus& census);
IndependentSetCensus census_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ramsey
