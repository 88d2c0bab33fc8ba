#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/census.hpp"

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, q >= 1.
std::string to_fraction_string(const Rational& r);
/// Parses "p/q" or "p". Throws InputError.
Rational parse_fraction(const std::string& text);
/// Fixed-point decimal with `digits` fractional digits, rounded half up.
std::string to_decimal_string(const Rational& r, int digits = 12);
double to_double(const Rational& r);
/// log2 of a positive rational, accurate for values far outside double range.
double log2_of(const Rational& r);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Number of surjections from a t-set onto a k-set, by inclusion-exclusion.
BigInt surjection_count(int t, int k);

/// Pr over a uniform map f: [t] -> V(G) that f([t]) is independent, where the
/// census lists independent sets of G by size. Exact.
Rational exact_independence_probability(const IndependentSetCensus& census, int t);

/// Union-bound estimate of the same probability: (nonempty census total) *
/// (t / 2^(t-1))^t. Vacuous (> 1) for small t.
Rational union_upper_bound_p_ind(const IndependentSetCensus& census, int t);

/// Expected number of monochromatic K_t in a random colouring on N vertices.
struct ExpectationReport {
  int t = 0;
  int m = 0;
  int ell = 0;
  std::uint64_t n = 0;
  Rational p_ind;         // Pr one blowup maps a t-set into an independent set
  Rational per_set_mono;  // Pr a fixed t-set is monochromatic
  Rational expected_count;
  /// expected_count written over the natural denominator
  /// 2^(C(t,2)-1) * den(p_ind)^m, e.g. 2898/4096 for (t,m,N) = (4,1,9).
  BigInt display_numerator;
  BigInt display_denominator;
  std::string census_fingerprint;

  std::string display_fraction() const;
};

/// Blowup colouring with m blowup colours and two leftover colours:
/// C(N,t) * 2^(1-C(t,2)) * p_ind^m. Colours 1..m never hold a K_t in G0's
/// blowups, so only the leftover colours contribute.
ExpectationReport expected_mono_count(int t, int m, std::uint64_t n,
                                      const IndependentSetCensus& census);

/// Uniform ell-colouring: C(N,t) * ell^(1-C(t,2)).
ExpectationReport expected_uniform_count(int t, int ell, std::uint64_t n);

struct CertifiedN {
  std::optional<std::uint64_t> n;  // empty when even N = t has expectation >= 1
  ExpectationReport report;        // at n, or at N = t when n is empty
  ExpectationReport next_report;   // at n + 1 (or N = t)
};

/// Largest N >= t with expected_count(N) < 1. Implies r(t; m+2) >= N + 1.
CertifiedN certify_max_n(int t, int m, const IndependentSetCensus& census);

enum class BoundSource { kErdos, kLefmann, kConlonFerber, kThisConstruction };

std::string to_string(BoundSource s);

/// One row of the growth-rate table: r(t; ell) >= (2^rate)^(t - o(t)).
struct BoundTableRow {
  int ell = 0;
  BoundSource source = BoundSource::kErdos;
  /// Exact rate when it is rational and fully known.
  std::optional<Rational> rate;
  /// Symbolic numerator/denominator for the CSV (e.g. "log2(3)" / "2", "28+24C" / "24").
  std::string rate_num;
  std::string rate_den;
  /// Numeric rate when known (Erdos rates are irrational for most ell).
  std::optional<double> rate_value;
  /// 2^rate to three decimals, empty when the rate carries an unknown constant.
  std::string base_2pow;
  std::string note;
};

std::vector<BoundTableRow> asymptotic_bound_table(int ell_min, int ell_max);

/// CSV with header `ell,source,rate_num,rate_den,base_2pow,note`.
std::string bound_table_csv(const std::vector<BoundTableRow>& rows);

}  // namespace ramsey
