#include "ramsey/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace mp = boost::multiprecision;

std::string to_fraction_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) != std::string::npos ||
        s == "-") {
      throw InputError("malformed rational '" + text + "'");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InputError("rational '" + text + "' has non-positive denominator");
  return Rational(num, den);
}

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string whole = BigInt(scaled / scale).str();
  std::string frac = BigInt(scaled % scale).str();
  if (static_cast<int>(frac.size()) < digits) {
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  }
  std::string out = (negative && scaled != 0 ? "-" : "") + whole;
  if (digits > 0) out += "." + frac;
  return out;
}

namespace {

Rational rational_pow(const Rational& r, unsigned e) {
  return Rational(mp::pow(BigInt(mp::numerator(r)), e), mp::pow(BigInt(mp::denominator(r)), e));
}

double log2_big(const BigInt& x) {
  const unsigned bits = mp::msb(x) + 1;
  if (bits <= 900) return std::log2(x.convert_to<double>());
  const unsigned shift = bits - 64;
  BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

double log2_of(const Rational& r) {
  if (r <= 0) return -std::numeric_limits<double>::infinity();
  return log2_big(mp::numerator(r)) - log2_big(mp::denominator(r));
}

double to_double(const Rational& r) {
  if (r <= 0) return r == 0 ? 0.0 : -to_double(-r);
  const double l = log2_of(r);
  if (std::abs(l) < 1000) return r.convert_to<double>();
  return std::exp2(l);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

BigInt surjection_count(int t, int k) {
  if (t < 0 || k < 0 || k > t) {
    if (k > t && t >= 0) return 0;
    throw InputError("surjection_count needs 0 <= k <= t");
  }
  BigInt total = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j)) *
                  mp::pow(BigInt(k - j), static_cast<unsigned>(t));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational exact_independence_probability(const IndependentSetCensus& census, int t) {
  if (t < 1) throw InputError("independence probability needs t >= 1");
  if (census.max_size < t) {
    throw InputError("census cap " + std::to_string(census.max_size) +
                     " is below t=" + std::to_string(t));
  }
  if (census.vertex_count == 0) throw InputError("census of an empty graph");
  BigInt favourable = 0;
  for (int k = 1; k <= t; ++k) {
    favourable += BigInt(census.count(k)) * surjection_count(t, k);
  }
  const BigInt all = mp::pow(BigInt(census.vertex_count), static_cast<unsigned>(t));
  return Rational(favourable, all);
}

Rational union_upper_bound_p_ind(const IndependentSetCensus& census, int t) {
  if (t < 2) throw InputError("union-bound estimate needs t >= 2");
  if (census.max_size < t) {
    throw InputError("census cap " + std::to_string(census.max_size) +
                     " is below t=" + std::to_string(t));
  }
  BigInt total = 0;
  for (int k = 1; k <= t; ++k) total += census.count(k);
  const Rational per_set(BigInt(t), BigInt(1) << (t - 1));
  return Rational(total) * rational_pow(per_set, static_cast<unsigned>(t));
}

std::string ExpectationReport::display_fraction() const {
  return display_numerator.str() + "/" + display_denominator.str();
}

namespace {

std::uint64_t pairs_in(int t) {
  return static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t - 1) / 2;
}

void check_clique_target(int t, std::uint64_t n) {
  if (t < 2) throw InputError("clique target t must be at least 2");
  if (n < static_cast<std::uint64_t>(t)) {
    throw InputError("target exceeds vertex count (t=" + std::to_string(t) +
                     ", N=" + std::to_string(n) + ")");
  }
}

}  // namespace

ExpectationReport expected_mono_count(int t, int m, std::uint64_t n,
                                      const IndependentSetCensus& census) {
  check_clique_target(t, n);
  if (m < 0) throw InputError("number of blowup colours must be non-negative");
  ExpectationReport r;
  r.t = t;
  r.m = m;
  r.ell = m + 2;
  r.n = n;
  r.p_ind = m == 0 ? Rational(1) : exact_independence_probability(census, t);
  const BigInt leftover_den = BigInt(1) << (pairs_in(t) - 1);
  r.per_set_mono = Rational(BigInt(1), leftover_den) * rational_pow(r.p_ind, static_cast<unsigned>(m));
  const BigInt sets = binomial(n, static_cast<std::uint64_t>(t));
  r.expected_count = Rational(sets) * r.per_set_mono;
  r.display_numerator = sets * mp::pow(BigInt(mp::numerator(r.p_ind)), static_cast<unsigned>(m));
  r.display_denominator =
      leftover_den * mp::pow(BigInt(mp::denominator(r.p_ind)), static_cast<unsigned>(m));
  r.census_fingerprint = m == 0 ? "" : census.fingerprint();
  return r;
}

ExpectationReport expected_uniform_count(int t, int ell, std::uint64_t n) {
  check_clique_target(t, n);
  if (ell < 2) throw InputError("a colouring needs at least two colours");
  ExpectationReport r;
  r.t = t;
  r.m = 0;
  r.ell = ell;
  r.n = n;
  r.p_ind = 1;
  const BigInt den = mp::pow(BigInt(ell), static_cast<unsigned>(pairs_in(t) - 1));
  r.per_set_mono = Rational(BigInt(1), den);
  const BigInt sets = binomial(n, static_cast<std::uint64_t>(t));
  r.expected_count = Rational(sets) * r.per_set_mono;
  r.display_numerator = sets;
  r.display_denominator = den;
  return r;
}

CertifiedN certify_max_n(int t, int m, const IndependentSetCensus& census) {
  const auto t64 = static_cast<std::uint64_t>(t);
  auto at = [&](std::uint64_t n) { return expected_mono_count(t, m, n, census); };
  CertifiedN out;
  ExpectationReport first = at(t64);
  if (first.expected_count >= 1) {
    out.report = first;
    out.next_report = first;
    return out;
  }
  // Expectation is increasing in N: double until it reaches 1, then bisect.
  std::uint64_t good = t64;
  std::uint64_t bad = 0;
  for (std::uint64_t probe = std::max<std::uint64_t>(2 * t64, t64 + 1);;) {
    if (at(probe).expected_count >= 1) {
      bad = probe;
      break;
    }
    good = probe;
    if (probe > (std::uint64_t{1} << 62)) {
      throw InputError("certified N exceeds 2^62; parameters out of range");
    }
    probe *= 2;
  }
  while (bad - good > 1) {
    const std::uint64_t mid = good + (bad - good) / 2;
    if (at(mid).expected_count < 1) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  out.n = good;
  out.report = at(good);
  out.next_report = at(good + 1);
  return out;
}

std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::kErdos:
      return "erdos";
    case BoundSource::kLefmann:
      return "lefmann";
    case BoundSource::kConlonFerber:
      return "conlon_ferber";
    case BoundSource::kThisConstruction:
      return "this_paper";
  }
  return "unknown";
}

namespace {

std::string base_of(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::exp2(rate));
  return buf;
}

BoundTableRow make_row(int ell, BoundSource source) {
  BoundTableRow row;
  row.ell = ell;
  row.source = source;
  return row;
}

void set_rational(BoundTableRow& row, const Rational& rate) {
  row.rate = rate;
  row.rate_num = mp::numerator(rate).str();
  row.rate_den = mp::denominator(rate).str();
  row.rate_value = to_double(rate);
  row.base_2pow = base_of(*row.rate_value);
}

}  // namespace

std::vector<BoundTableRow> asymptotic_bound_table(int ell_min, int ell_max) {
  if (ell_min < 2 || ell_max < ell_min) {
    throw InputError("bound table needs 2 <= ell_min <= ell_max");
  }
  std::vector<BoundTableRow> rows;
  for (int ell = ell_min; ell <= ell_max; ++ell) {
    BoundTableRow erdos = make_row(ell, BoundSource::kErdos);
    if ((ell & (ell - 1)) == 0) {
      set_rational(erdos, Rational(std::countr_zero(static_cast<unsigned>(ell)), 2));
    } else {
      erdos.rate_num = "log2(" + std::to_string(ell) + ")";
      erdos.rate_den = "2";
      erdos.rate_value = 0.5 * std::log2(static_cast<double>(ell));
      erdos.base_2pow = base_of(*erdos.rate_value);
    }
    rows.push_back(erdos);

    BoundTableRow lefmann = make_row(ell, BoundSource::kLefmann);
    set_rational(lefmann, Rational(ell, 4));
    rows.push_back(lefmann);

    BoundTableRow cf = make_row(ell, BoundSource::kConlonFerber);
    cf.rate_num = std::to_string(7 * ell) + "+24C";
    cf.rate_den = "24";
    cf.note = "C depends on ell mod 3 and is unspecified";
    rows.push_back(cf);

    BoundTableRow blowup = make_row(ell, BoundSource::kThisConstruction);
    set_rational(blowup, Rational(3 * ell - 2, 8));
    if (ell == 2) blowup.note = "erdos (coincides)";
    if (ell == 3) blowup.note = "conlon_ferber (coincides)";
    rows.push_back(blowup);
  }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundTableRow>& rows) {
  std::ostringstream out;
  out << "ell,source,rate_num,rate_den,base_2pow,note\n";
  for (const auto& r : rows) {
    out << r.ell << ',' << to_string(r.source) << ',' << r.rate_num << ',' << r.rate_den << ','
        << r.base_2pow << ',' << r.note << '\n';
  }
  return out.str();
}

}  // namespace ramsey
