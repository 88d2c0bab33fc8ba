#include "ramsey/certificate.hpp"

#include <chrono>

#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"

namespace ramsey {

CertificateExpectation to_certificate_expectation(const ExpectationReport& report) {
  CertificateExpectation e;
  e.model = report.m > 0 ? "blowup" : "uniform";
  e.p_ind_exact = to_fraction_string(report.p_ind);
  e.per_set_mono_exact = to_fraction_string(report.per_set_mono);
  e.expected_count_exact = to_fraction_string(report.expected_count);
  e.expected_count_display = report.display_fraction();
  e.expected_count = to_decimal_string(report.expected_count, 12);
  e.expected_below_one = report.expected_count < 1;
  e.census = report.census_fingerprint;
  return e;
}

namespace {

IndependentSetCensus default_census(int t) {
  return count_independent_sets(build_g0(t), t);
}

std::optional<CertificateExpectation> expectation_for(const ColoringSpec& spec, int t,
                                                      const VerifyOptions& options) {
  switch (spec.kind) {
    case ColoringKind::kBlowup: {
      IndependentSetCensus census;
      if (spec.m > 0) census = options.census ? options.census(t) : default_census(t);
      auto e = to_certificate_expectation(expected_mono_count(t, spec.m, spec.n, census));
      e.model = "blowup";
      return e;
    }
    case ColoringKind::kErdos: {
      auto e = to_certificate_expectation(expected_uniform_count(t, spec.ell, spec.n));
      e.model = "uniform";
      return e;
    }
    case ColoringKind::kProduct:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Certificate verify_coloring(const ColoringSpec& spec, const VerifyOptions& options,
                            std::optional<int> target) {
  spec.validate();
  const int t = target.value_or(spec.t);
  if (t < 2) throw InputError("clique target t must be at least 2");
  if (spec.kind == ColoringKind::kBlowup && t != spec.t) {
    throw InputError("blowup colourings are verified against their own t");
  }
  if (spec.n < static_cast<std::uint64_t>(t)) {
    throw InputError("target exceeds vertex count (t=" + std::to_string(t) +
                     ", N=" + std::to_string(spec.n) + ")");
  }
  if (options.max_tries < 1) throw InputError("max_tries must be at least 1");

  Certificate cert;
  cert.spec = spec;
  cert.t = t;
  cert.expectation = expectation_for(spec, t, options);

  const auto start = std::chrono::steady_clock::now();
  for (int attempt = 0; attempt < options.max_tries; ++attempt) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(attempt);
    const EdgeColoring coloring = build_coloring(spec.with_seed(seed));
    MonoSearchResult found = find_mono_clique(coloring, t, options.search);
    cert.seed = seed;
    cert.exhaustive = found.exhaustive;
    cert.witness = found.witness;
    cert.stats.nodes += found.nodes;
    cert.stats.tries = attempt + 1;
    cert.verified = !found.witness && found.exhaustive;
    if (cert.verified) break;
    if (options.on_failure) options.on_failure(seed, found);
  }
  cert.stats.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (cert.verified) cert.certified_bound = spec.n + 1;
  return cert;
}

RecheckResult recheck_certificate(const Certificate& cert, const VerifyOptions& options) {
  RecheckResult out;
  if (cert.verified && cert.witness) {
    out.reason = "certificate claims verification but carries a witness";
    return out;
  }
  if (cert.verified && !cert.exhaustive) {
    out.reason = "certificate claims verification from a non-exhaustive search";
    return out;
  }
  if (cert.verified != cert.certified_bound.has_value() ||
      (cert.certified_bound && *cert.certified_bound != cert.spec.n + 1)) {
    out.reason = "certified bound inconsistent with verification status";
    return out;
  }
  if (cert.seed < cert.spec.seed) {
    out.reason = "seed precedes the spec's first seed";
    return out;
  }
  if (cert.witness) {
    const EdgeColoring coloring = build_coloring(cert.spec.with_seed(cert.seed));
    if (!is_mono_witness(coloring, *cert.witness, cert.t)) {
      out.reason = "witness is not a monochromatic clique of order t";
      return out;
    }
  }

  ColoringSpec single = cert.spec.with_seed(cert.seed);
  VerifyOptions once = options;
  once.max_tries = 1;
  once.on_failure = nullptr;
  Certificate again = verify_coloring(single, once, cert.t);
  again.spec = cert.spec;  // restore the requested first seed
  out.regenerated = again;
  if (certificate_body_json(again) != certificate_body_json(cert)) {
    out.reason = "regenerated certificate differs from the recorded one";
    return out;
  }
  out.reproduces = true;
  return out;
}

}  // namespace ramsey
