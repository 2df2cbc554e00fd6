#include "pbr3/dynamics.hpp"

#include <cmath>
#include <limits>

#include "pbr3/errors.hpp"
#include "pbr3/oracle.hpp"

namespace pbr3 {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// num / den as a double without overflowing on huge operands.
double ratio(const BigInt& num, const BigInt& den) {
  const unsigned bits = 64;
  const BigInt scaled = (num << bits) / den;
  return std::ldexp(scaled.convert_to<double>(), -static_cast<int>(bits));
}

bool compatible(const NTType& nt, const GrowthClass& growth) {
  if (std::holds_alternative<Periodic>(nt)) return std::holds_alternative<Bounded>(growth);
  if (std::holds_alternative<Reducible>(nt)) return !std::holds_alternative<Exponential>(growth);
  return std::holds_alternative<Exponential>(growth);
}

}  // namespace

GrowthSeries growth_series(const BraidWord& phi, const ArcClass& a, const ArcClass& b,
                           std::int64_t iterations, std::stop_token stop) {
  if (iterations < 1) throw DomainError("growth series needs N >= 1");
  GrowthSeries series;
  series.phi = as_pure(phi);
  series.a = a;
  series.b = b;
  series.current = b.double_curve;
  extend(series, iterations, stop);
  return series;
}

void extend(GrowthSeries& series, std::int64_t more, std::stop_token stop) {
  const CompiledWord phi = compile(series.phi);
  for (std::int64_t k = 0; k < more; ++k) {
    if (stop.stop_requested()) return;
    series.current = act(phi, series.current);
    series.computed += 1;
    const ArcClass image{series.current, std::nullopt};
    if (arcs_equal(series.a, image)) {
      series.skipped.push_back(series.computed);
    } else {
      series.samples.push_back({series.computed, interior_intersection(series.a, image)});
    }
  }
}

std::string growth_name(const GrowthClass& growth) {
  if (std::holds_alternative<Bounded>(growth)) return "bounded";
  if (std::holds_alternative<Linear>(growth)) return "linear";
  return "exponential";
}

GrowthClass classify_growth(const GrowthSeries& series) {
  const auto& s = series.samples;
  if (s.size() < 8) {
    throw Inconclusive("only " + std::to_string(s.size()) + " usable samples");
  }
  const std::size_t last = s.size() - 1;
  if (s[last].interior == s[last - 1].interior && s[last].interior == s[last - 2].interior &&
      s[last].interior == s[last - 3].interior) {
    return Bounded{};
  }

  // Collinearity of the last six points (n, I), allowing gaps in n.
  bool collinear = true;
  for (std::size_t k = last - 4; k <= last - 1; ++k) {
    const BigInt lhs = (s[k].interior - s[k - 1].interior) * (s[k + 1].n - s[k].n);
    const BigInt rhs = (s[k + 1].interior - s[k].interior) * (s[k].n - s[k - 1].n);
    if (lhs != rhs) collinear = false;
  }
  if (collinear) {
    BigInt num = s[last].interior - s[last - 1].interior;
    BigInt den = s[last].n - s[last - 1].n;
    if (num != 0) {
      const BigInt g = boost::multiprecision::gcd(abs_value(num), den);
      return Linear{num / g, den / g};
    }
  }

  if (s[last].n - s[last - 1].n != 1 || s[last - 1].n - s[last - 2].n != 1) {
    throw Inconclusive("last samples are not consecutive iterations");
  }
  if (s[last - 1].interior == 0 || s[last - 2].interior == 0) {
    throw Inconclusive("ratio undefined on a zero sample");
  }
  Exponential out;
  out.num = s[last].interior;
  out.den = s[last - 1].interior;
  out.lambda = ratio(out.num, out.den);
  out.error = std::abs(out.lambda - ratio(s[last - 1].interior, s[last - 2].interior));
  if (!(out.lambda > 1.0)) {
    throw Inconclusive("series neither settles nor grows");
  }
  return out;
}

Dilatation dilatation_oracle(const BraidWord& phi) {
  Dilatation out;
  out.matrix = oracle::burau_minus_one(phi);
  out.trace = out.matrix.trace();
  if (out.matrix.det() != 1) {
    throw InvariantViolation("Burau matrix " + out.matrix.str() + " is not in SL2(Z)");
  }
  const BigInt t = abs_value(out.trace);
  if (t <= 2) {
    throw NotPseudoAnosov("|trace| = " + t.str() + " <= 2 for " + phi.str());
  }
  // lambda = (t + sqrt(t^2 - 4)) / 2; each floating operation is correctly
  // rounded, so widening by a few ulps encloses the true value.
  const double td = t.convert_to<double>();
  const double lambda = (td + std::sqrt((td - 2.0) * (td + 2.0))) / 2.0;
  if (!std::isfinite(lambda)) throw DomainError("trace too large for a floating estimate");
  const double slack = 8 * std::numeric_limits<double>::epsilon() * lambda;
  out.lambda = lambda;
  out.lower = lambda - slack;
  out.upper = lambda + slack;
  return out;
}

bool penner_check(double lambda) {
  if (!(lambda > 0)) return false;
  const double lhs = std::nextafter(std::log(lambda), std::numeric_limits<double>::infinity());
  const double rhs =
      std::nextafter(std::log(2.0) / 12.0, -std::numeric_limits<double>::infinity());
  return lhs >= rhs;
}

CrossValidation crossvalidate_nt(const BraidWord& phi, std::int64_t iterations) {
  if (iterations < 8) throw DomainError("cross-validation needs N >= 8");
  CrossValidation out;
  out.nt = nt_classify(phi);
  const ArcClass g0 = standard_arc(0);
  const ArcClass g1 = standard_arc(1);
  const std::pair<const char*, const ArcClass*> pairs[] = {{"gamma0,gamma0", &g0},
                                                           {"gamma0,gamma1", &g1}};
  bool any_conclusive = false;
  bool all_compatible = true;
  for (const auto& [label, target] : pairs) {
    PairReport report;
    report.label = label;
    report.series = growth_series(phi, g0, *target, iterations);
    try {
      report.growth = classify_growth(report.series);
      report.compatible = compatible(out.nt, *report.growth);
      any_conclusive = true;
      all_compatible = all_compatible && report.compatible;
      if (const auto* e = std::get_if<Exponential>(&*report.growth); e && !out.lambda) {
        out.lambda = e->lambda;
        out.penner_ok = penner_check(e->lambda);
      }
    } catch (const Inconclusive& error) {
      report.note = error.what();
    }
    out.pairs.push_back(std::move(report));
  }
  out.ok = any_conclusive && all_compatible;
  return out;
}

}  // namespace pbr3
