#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "pbr3/bigint.hpp"
#include "pbr3/braid.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/mat2.hpp"

namespace pbr3 {

struct GrowthSample {
  std::int64_t n = 0;
  BigInt interior;  // I(a, phi^n b)
};

// I_n = I(a, phi^n b) for n = 1..computed. Iterations where phi^n b is
// isotopic to a are listed in `skipped`. `current` holds phi^computed b so
// a series can be extended later.
struct GrowthSeries {
  BraidWord phi;
  ArcClass a;
  ArcClass b;
  std::vector<GrowthSample> samples;
  std::vector<std::int64_t> skipped;
  std::int64_t computed = 0;
  LaminationCoords current;
};

// Stops early (with a shorter series) when `stop` is requested.
GrowthSeries growth_series(const BraidWord& phi, const ArcClass& a, const ArcClass& b,
                           std::int64_t iterations, std::stop_token stop = {});

void extend(GrowthSeries& series, std::int64_t more, std::stop_token stop = {});

struct Bounded {};

struct Linear {
  BigInt slope_num;
  BigInt slope_den;  // > 0
};

struct Exponential {
  BigInt num;  // I_N
  BigInt den;  // I_{N-1}
  double lambda = 0;
  double error = 0;  // |I_N/I_{N-1} - I_{N-1}/I_{N-2}|
};

using GrowthClass = std::variant<Bounded, Linear, Exponential>;

std::string growth_name(const GrowthClass& growth);

// Bounded if the last 4 samples agree; Linear if the last 6 are collinear
// with nonzero slope; otherwise Exponential from the last ratio. Needs at
// least 8 samples (Inconclusive otherwise).
GrowthClass classify_growth(const GrowthSeries& series);

struct Dilatation {
  Mat2 matrix;
  BigInt trace;
  double lambda = 0;
  double lower = 0;  // outward-rounded enclosure of the spectral radius
  double upper = 0;
};

// Spectral radius of the Burau matrix at t = -1. NotPseudoAnosov when
// |trace| <= 2.
Dilatation dilatation_oracle(const BraidWord& phi);

// log(lambda) >= log(2) / 12, with both sides rounded outward.
bool penner_check(double lambda);

struct PairReport {
  std::string label;  // "gamma0,gamma0" or "gamma0,gamma1"
  GrowthSeries series;
  std::optional<GrowthClass> growth;  // empty when inconclusive
  std::string note;
  bool compatible = true;
};

struct CrossValidation {
  NTType nt;
  std::vector<PairReport> pairs;
  bool ok = false;
  std::optional<double> lambda;
  std::optional<bool> penner_ok;
};

// Compares nt_classify(phi) with the measured growth on (gamma0, gamma0) and
// (gamma0, gamma1): Periodic <-> Bounded, Reducible <-> Linear or Bounded,
// PseudoAnosov <-> Exponential. Inconclusive pairs are reported but not
// counted; at least one pair must be conclusive.
CrossValidation crossvalidate_nt(const BraidWord& phi, std::int64_t iterations);

}  // namespace pbr3
