#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/mono_search.hpp"

namespace ramsey {

/// Expectation arithmetic as carried in a certificate. Exact values are
/// "p/q" strings so that the JSON round-trips byte for byte.
struct CertificateExpectation {
  std::string model;                 // "blowup" or "uniform"
  std::string p_ind_exact;           // "23/128"
  std::string per_set_mono_exact;
  std::string expected_count_exact;  // lowest terms
  std::string expected_count_display;  // natural denominator, e.g. "2898/4096"
  std::string expected_count;        // decimal
  bool expected_below_one = false;
  std::string census;                // census fingerprint, empty if unused

  friend bool operator==(const CertificateExpectation&, const CertificateExpectation&) = default;
};

CertificateExpectation to_certificate_expectation(const ExpectationReport& report);

struct SearchStats {
  std::uint64_t nodes = 0;
  int tries = 0;
  double wall_ms = 0.0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Witness that r(t; ell) >= N + 1, or a record of a failed attempt.
/// verified <=> no witness and the search was exhaustive.
struct Certificate {
  ColoringSpec spec;   // as requested (spec.seed is the first seed tried)
  std::uint64_t seed = 0;  // seed of the colouring actually searched
  int t = 0;
  bool verified = false;
  bool exhaustive = false;
  std::optional<MonoWitness> witness;
  std::optional<CertificateExpectation> expectation;
  /// N + 1 when verified.
  std::optional<std::uint64_t> certified_bound;
  SearchStats stats;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using CensusProvider = std::function<IndependentSetCensus(int t)>;

struct VerifyOptions {
  int max_tries = 1;
  MonoSearchOptions search;
  /// Supplies the G0(t) census for blowup expectations; defaults to computing it.
  CensusProvider census;
  /// Called after each failed attempt with (seed, witness-or-null).
  std::function<void(std::uint64_t, const MonoSearchResult&)> on_failure;
};

/// Tries seeds spec.seed, spec.seed + 1, ... up to max_tries. Each attempt
/// regenerates the colouring and runs an exhaustive monochromatic K_t search.
/// t defaults to spec.t; blowup colourings only support t = spec.t.
Certificate verify_coloring(const ColoringSpec& spec, const VerifyOptions& options = {},
                            std::optional<int> t = std::nullopt);

struct RecheckResult {
  bool reproduces = false;
  std::string reason;
  Certificate regenerated;
};

/// Re-derives a certificate from its spec and seed and compares everything
/// but the search statistics. Inconsistent certificates (e.g. verified with
/// a witness) are rejected before any search.
RecheckResult recheck_certificate(const Certificate& cert, const VerifyOptions& options = {});

}  // namespace ramsey
