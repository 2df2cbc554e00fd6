#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbr3/braid.hpp"
#include "pbr3/dynamics.hpp"
#include "pbr3/errors.hpp"
#include "pbr3/floer.hpp"
#include "pbr3/ktheory.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/oracle.hpp"
#include "pbr3/orbit.hpp"
#include "serialize.hpp"

using namespace pbr3;
using io::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

enum class Format { Json, Csv, Jsonl };

struct Options {
  std::string format = "json";
  std::string word;  // positional
  std::string phi;
  std::string a = "id";
  std::string b = "id";
  std::string base = "id";
  std::int64_t n = 12;
  int radius = 2;
  int bound = default_orbit_bound;
};

Format format_of(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "jsonl") return Format::Jsonl;
  return Format::Json;
}

// Subcommands taking a single braid accept it positionally or as --phi.
BraidWord subject(const Options& opt) {
  if (!opt.word.empty() && !opt.phi.empty()) {
    throw ParseError(0, "give the word either positionally or with --phi, not both");
  }
  return parse_word(opt.word.empty() ? opt.phi : opt.word);
}

std::string format_ratio(double r) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", r);
  return buffer;
}

std::string csv_field(const ordered_json& value) {
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// One header row of top-level keys and one row of values; nested values are
// written as compact JSON.
void write_flat_csv(const ordered_json& doc) {
  std::string header, row;
  for (const auto& [key, value] : doc.items()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += csv_field(value);
  }
  std::cout << header << '\n' << row << '\n';
}

void emit(const ordered_json& doc, Format format) {
  if (format == Format::Csv) {
    write_flat_csv(doc);
  } else {
    std::cout << doc.dump(format == Format::Jsonl ? -1 : 2) << '\n';
  }
}

ordered_json document() {
  ordered_json doc;
  doc["schema"] = 1;
  return doc;
}

int cmd_normalize(const Options& opt) {
  const BraidWord w = subject(opt);
  ordered_json doc = document();
  doc["input"] = w.str();
  const CentralDecomposition d = decompose(w);
  doc["f2"] = d.f2.str();
  doc["center"] = d.center;
  doc["artin"] = to_artin(w).str();
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_membership(const Options& opt) {
  const BraidWord w = subject(opt);
  ordered_json doc = document();
  doc["in_pbr3c"] = in_pbr3c(w);
  doc["lk"] = io::linking(linking_vector(w));
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_rewrite(const Options& opt) {
  const BraidWord w = subject(opt);
  const TorelliWord t = rewrite_in_t(w);
  if (!same_element(expand(t), w)) {
    throw InvariantViolation("expansion of " + t.str() + " differs from " + w.str());
  }
  ordered_json doc = document();
  doc["torelli"] = t.str();
  ordered_json letters = ordered_json::array();
  for (const auto& letter : t.letters) letters.push_back({letter.index, letter.exponent});
  doc["letters"] = letters;
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_classify(const Options& opt) {
  ordered_json doc = document();
  doc.update(io::nt(nt_classify(subject(opt))));
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_kaction(const Options& opt) {
  const KMatrix m = k_rep(subject(opt));
  ordered_json doc = document();
  doc["matrix"] = io::matrix(m);
  doc["det"] = m.det();
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_intersect(const Options& opt) {
  const ArcClass a = arc_from_word(parse_word(opt.a));
  const ArcClass b = arc_from_word(parse_word(opt.b));
  const BigInt closed = intersect_closed(a.double_curve, b.double_curve);
  const BigInt check = oracle::intersection_of_coords(a.double_curve, b.double_curve);
  ordered_json doc = document();
  doc["a"] = io::arc(a);
  doc["b"] = io::arc(b);
  doc["closed"] = io::big(closed);
  doc["oracle"] = io::big(check);
  doc["interior"] =
      arcs_equal(a, b) ? ordered_json(nullptr) : io::big(interior_intersection(a, b));
  if (closed != check) {
    std::cerr << "error: intersection algorithms disagree (" << closed << " vs " << check
              << ")\n";
    emit(doc, format_of(opt.format));
    return kExitInternal;
  }
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_hfrank(const Options& opt) {
  const SphereObject a{arc_from_word(parse_word(opt.a)), 0};
  const SphereObject b{arc_from_word(parse_word(opt.b)), 0};
  const RankReport report = rank_query(a, b);
  ordered_json doc = document();
  doc["rank"] = io::big(report.rank);
  doc["interior"] = report.interior ? io::big(*report.interior) : ordered_json(nullptr);
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_orbit(const Options& opt) {
  const OrbitCensus census = orbit_census(parse_word(opt.base), opt.radius, opt.bound);
  const Format format = format_of(opt.format);
  if (format == Format::Csv) {
    std::cout << "index,a,b,word,witness\n";
    for (std::size_t k = 0; k < census.arcs.size(); ++k) {
      const auto& entry = census.arcs[k];
      std::cout << k << ',' << entry.arc.double_curve.a << ',' << entry.arc.double_curve.b << ','
                << entry.word.str() << ',' << entry.arc.witness->str() << '\n';
    }
    return 0;
  }
  ordered_json doc = document();
  doc["base"] = census.base.str();
  doc["radius"] = census.radius;
  doc["words"] = census.words;
  doc["count"] = census.arcs.size();
  ordered_json arcs = ordered_json::array();
  for (const auto& entry : census.arcs) arcs.push_back(io::arc(entry.arc));
  doc["arcs"] = arcs;
  emit(doc, format);
  return 0;
}

struct Row {
  std::int64_t n;
  BigInt interior;
  BigInt rank;
  std::optional<double> ratio;
};

std::vector<Row> rows_of(const GrowthSeries& series) {
  std::vector<Row> rows;
  for (std::size_t k = 0; k < series.samples.size(); ++k) {
    const auto& s = series.samples[k];
    Row row{s.n, s.interior, 4 + 4 * s.interior, std::nullopt};
    if (k > 0 && series.samples[k - 1].n == s.n - 1 && series.samples[k - 1].interior != 0) {
      const BigInt& prev = series.samples[k - 1].interior;
      row.ratio = static_cast<double>(s.interior.convert_to<long double>() /
                                      prev.convert_to<long double>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_growth(const Options& opt) {
  if (opt.phi.empty() && opt.word.empty()) throw ParseError(0, "growth needs --phi");
  const BraidWord phi = subject(opt);
  const GrowthSeries series = growth_series(phi, arc_from_word(parse_word(opt.a)),
                                            arc_from_word(parse_word(opt.b)), opt.n);
  const std::vector<Row> rows = rows_of(series);
  const Format format = format_of(opt.format);
  if (format == Format::Csv) {
    std::cout << "n,I,rank,ratio\n";
    for (const Row& row : rows) {
      std::cout << row.n << ',' << row.interior << ',' << row.rank << ','
                << (row.ratio ? format_ratio(*row.ratio) : "") << '\n';
    }
    return 0;
  }
  auto row_json = [](const Row& row) {
    ordered_json out;
    out["n"] = row.n;
    out["I"] = io::big(row.interior);
    out["rank"] = io::big(row.rank);
    out["ratio"] = row.ratio ? ordered_json(*row.ratio) : ordered_json(nullptr);
    return out;
  };
  if (format == Format::Jsonl) {
    for (const Row& row : rows) {
      ordered_json line = document();
      line.update(row_json(row));
      std::cout << line.dump() << '\n';
    }
    for (std::int64_t n : series.skipped) {
      ordered_json line = document();
      line["n"] = n;
      line["skipped"] = true;
      std::cout << line.dump() << '\n';
    }
    return 0;
  }
  ordered_json doc = document();
  doc["phi"] = series.phi.str();
  ordered_json samples = ordered_json::array();
  for (const Row& row : rows) samples.push_back(row_json(row));
  doc["samples"] = samples;
  doc["skipped"] = series.skipped;
  try {
    doc["growth"] = io::growth(classify_growth(series));
  } catch (const Inconclusive& e) {
    doc["growth"] = {{"class", "inconclusive"}, {"reason", e.what()}};
  }
  emit(doc, format);
  return 0;
}

int cmd_dilatation(const Options& opt) {
  const Dilatation d = dilatation_oracle(subject(opt));
  ordered_json doc = document();
  doc["matrix"] = io::matrix(d.matrix);
  doc["trace"] = io::big(d.trace);
  doc["lambda"] = d.lambda;
  doc["lower"] = d.lower;
  doc["upper"] = d.upper;
  doc["penner_ok"] = penner_check(d.lambda);
  emit(doc, format_of(opt.format));
  return 0;
}

int cmd_crossvalidate(const Options& opt) {
  const CrossValidation report = crossvalidate_nt(subject(opt), opt.n);
  ordered_json doc = document();
  doc["nt"] = io::nt(report.nt);
  ordered_json pairs = ordered_json::array();
  for (const auto& pair : report.pairs) {
    ordered_json entry;
    entry["pair"] = pair.label;
    if (pair.growth) {
      entry["growth"] = io::growth(*pair.growth);
      entry["compatible"] = pair.compatible;
    } else {
      entry["growth"] = {{"class", "inconclusive"}, {"reason", pair.note}};
    }
    if (!report.ok) {
      ordered_json series = ordered_json::array();
      for (const auto& s : pair.series.samples) series.push_back({s.n, io::big(s.interior)});
      entry["series"] = series;
    }
    pairs.push_back(entry);
  }
  doc["growth"] = pairs;
  doc["lambda"] = report.lambda ? ordered_json(*report.lambda) : ordered_json(nullptr);
  doc["penner_ok"] = report.penner_ok ? ordered_json(*report.penner_ok) : ordered_json(nullptr);
  doc["status"] = report.ok ? "OK" : "Mismatch";
  emit(doc, format_of(opt.format));
  if (!report.ok) {
    std::cerr << "error: classification and measured growth disagree\n";
    return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the pure braid group on three strands"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "jsonl"}));
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", opt.word, "Braid word, e.g. \"R2^-3 R3 R2^3\"");
    sub->add_option("--phi", opt.phi, "Braid word (alternative to the positional word)");
  };
  auto add_arcs = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "First arc, as a word applied to gamma0");
    sub->add_option("--b", opt.b, "Second arc, as a word applied to gamma0");
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Entry> commands;
  auto command = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_format(sub);
    commands.push_back({sub, run});
    return sub;
  };

  add_word(command("normalize", "Central decomposition f2 * D^k", cmd_normalize));
  add_word(command("membership", "Membership in the twist subgroup", cmd_membership));
  add_word(command("rewrite", "Rewrite in the free generators t_i", cmd_rewrite));
  add_word(command("classify", "Nielsen-Thurston type", cmd_classify));
  add_word(command("kaction", "Action on numerical K-theory", cmd_kaction));
  add_arcs(command("intersect", "Intersection numbers of two arcs", cmd_intersect));
  add_arcs(command("hfrank", "Floer rank of two matching spheres", cmd_hfrank));
  CLI::App* orbit = command("orbit", "Orbit census of an arc", cmd_orbit);
  orbit->add_option("--base", opt.base, "Base arc, as a word applied to gamma0");
  orbit->add_option("--radius", opt.radius, "Maximal word length");
  orbit->add_option("--bound", opt.bound, "Largest radius accepted");
  CLI::App* growth = command("growth", "Intersection growth under iteration", cmd_growth);
  add_word(growth);
  add_arcs(growth);
  growth->add_option("--n", opt.n, "Number of iterations")->check(CLI::PositiveNumber);
  add_word(command("dilatation", "Dilatation from the Burau matrix at t = -1", cmd_dilatation));
  CLI::App* cross =
      command("crossvalidate", "Compare the NT type with measured growth", cmd_crossvalidate);
  add_word(cross);
  cross->add_option("--n", opt.n, "Number of iterations")->check(CLI::Range(8, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const Entry& entry : commands) {
      if (entry.app->parsed()) return entry.run(opt);
    }
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    switch (e.category()) {
      case Error::Category::Usage: return kExitUsage;
      case Error::Category::Domain: return kExitDomain;
      case Error::Category::Internal: return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInternal;
}
