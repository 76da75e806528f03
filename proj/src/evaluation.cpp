#include "lexsense/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

namespace {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

std::string cell_text(const std::optional<double>& value) {
  return value ? format_percent(*value) : "NA";
}

}  // namespace

std::vector<GoldAnnotation> read_gold(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string source = path.string();
  std::vector<GoldAnnotation> gold;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty()) continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 6) throw ParseError(source, line_no, "expected 6 tab-separated columns");
    GoldAnnotation g;
    g.document = detail::trim(cols[0]);
    const auto paragraph = detail::parse_int<std::size_t>(detail::trim(cols[1]));
    const auto token = detail::parse_int<std::size_t>(detail::trim(cols[2]));
    g.lemma = detail::trim(cols[3]);
    const auto pos = parse_pos(detail::trim(cols[4]));
    g.synset = detail::trim(cols[5]);
    if (g.document.empty() || !paragraph || !token || g.lemma.empty() || !pos || g.synset.empty()) {
      throw ParseError(source, line_no, "malformed gold annotation");
    }
    g.paragraph = *paragraph;
    g.token = *token;
    g.pos = *pos;
    if (!seen.emplace(g.document, g.paragraph, g.token).second) {
      throw ParseError(source, line_no, "duplicate gold position");
    }
    gold.push_back(std::move(g));
  }
  return gold;
}

std::optional<double> AccuracyCell::accuracy() const {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

std::string RunConfig::subset_label() const {
  return format_number(fraction * 100.0) + "%:" + std::to_string(seed);
}

EvaluationReport accuracy(std::span<const NamedDocument> docs, const ResultsByDocument& results,
                          std::span<const GoldAnnotation> gold, RunConfig config) {
  std::unordered_map<std::string, const Document*> doc_by_id;
  for (const auto& d : docs) doc_by_id.emplace(d.id, &d.tokens);

  std::map<std::string, std::map<std::size_t, const DisambiguationResult*>> result_at;
  for (const auto& [doc, list] : results) {
    auto& slot = result_at[doc];
    for (const auto& r : list) slot[r.token.token_index] = &r;
  }

  EvaluationReport report;
  report.config = config;
  for (const auto& g : gold) {
    const auto doc = doc_by_id.find(g.document);
    if (doc == doc_by_id.end()) {
      throw ConsistencyError("gold refers to unknown document '" + g.document + "'");
    }
    const auto& tokens = *doc->second;
    if (g.token >= tokens.size() || tokens[g.token].paragraph_index != g.paragraph) {
      throw ConsistencyError("gold position " + g.document + ":" + std::to_string(g.paragraph) + ":" +
                             std::to_string(g.token) + " does not exist");
    }

    const DisambiguationResult* r = nullptr;
    if (const auto by_doc = result_at.find(g.document); by_doc != result_at.end()) {
      if (const auto it = by_doc->second.find(g.token); it != by_doc->second.end()) r = it->second;
    }
    const bool matched = r != nullptr && r->token.lemma == g.lemma && r->token.pos == g.pos;

    report.lemma_pos.emplace(g.lemma, g.pos);
    for (AccuracyCell* cell : {&report.per_lemma[g.lemma], &report.per_pos[g.pos], &report.overall}) {
      if (!matched) {
        ++cell->missed;
        continue;
      }
      ++cell->total;
      if (r->chosen && *r->chosen == g.synset) ++cell->correct;
    }
  }
  return report;
}

double CoverageCounts::global_coverage() const {
  const auto all = total();
  return all == 0 ? 0.0 : 100.0 * static_cast<double>(polysemous + monosemous) / static_cast<double>(all);
}

double CoverageCounts::polysemous_coverage() const {
  const auto known = polysemous + monosemous;
  return known == 0 ? 0.0 : 100.0 * static_cast<double>(polysemous) / static_cast<double>(known);
}

CoverageReport coverage(std::span<const NamedDocument> docs, const SemanticNetwork& net) {
  CoverageReport report;
  std::set<std::pair<std::string, Pos>> seen_types;
  auto bump = [](CoverageCounts& c, std::size_t senses) {
    if (senses >= 2) {
      ++c.polysemous;
    } else if (senses == 1) {
      ++c.monosemous;
    } else {
      ++c.unrecognized;
    }
  };
  for (const auto& doc : docs) {
    for (const auto& tok : doc.tokens) {
      if (!tok.pos) continue;
      const auto senses = net.sense_count(tok.lemma, *tok.pos);
      auto& row = report.per_pos[*tok.pos];
      bump(row.tokens, senses);
      bump(report.overall.tokens, senses);
      if (seen_types.emplace(tok.lemma, *tok.pos).second) {
        bump(row.types, senses);
        bump(report.overall.types, senses);
      }
    }
  }
  return report;
}

std::string render_coverage_tsv(const CoverageReport& report) {
  std::ostringstream out;
  out << "pos\tpoly_tokens\tpoly_types\tmono_tokens\tmono_types\tunrecognized_tokens\t"
         "unrecognized_types\ttotal_tokens\ttotal_types\tglobal_coverage_tokens\t"
         "global_coverage_types\tpolysemous_coverage_tokens\tpolysemous_coverage_types\n";
  auto row = [&](std::string_view name, const CoverageRow& r) {
    out << name << '\t' << r.tokens.polysemous << '\t' << r.types.polysemous << '\t'
        << r.tokens.monosemous << '\t' << r.types.monosemous << '\t' << r.tokens.unrecognized << '\t'
        << r.types.unrecognized << '\t' << r.tokens.total() << '\t' << r.types.total() << '\t'
        << format_percent(r.tokens.global_coverage()) << '\t'
        << format_percent(r.types.global_coverage()) << '\t'
        << format_percent(r.tokens.polysemous_coverage()) << '\t'
        << format_percent(r.types.polysemous_coverage()) << '\n';
  };
  for (const auto pos : kAllPos) {
    const auto it = report.per_pos.find(pos);
    row(to_string(pos), it == report.per_pos.end() ? CoverageRow{} : it->second);
  }
  row("total", report.overall);
  return out.str();
}

Aggregate aggregate(std::span<const double> values) {
  if (values.empty()) throw DomainError("aggregate of an empty list");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / n;
  double squares = 0.0;
  for (const double v : values) squares += (v - mean) * (v - mean);
  return Aggregate{mean, std::sqrt(squares / n)};
}

std::string format_percent(double value) {
  // The nudge keeps decimal halves such as 88.635 (stored just below) rounding up.
  const double rounded = std::floor(value * 100.0 + 0.5 + 1e-7) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

GridSummary summarize_grid(const std::vector<std::vector<std::optional<double>>>& grid) {
  GridSummary summary;
  std::size_t width = 0;
  for (const auto& row : grid) width = std::max(width, row.size());
  auto of = [](const std::vector<double>& v) -> std::optional<Aggregate> {
    if (v.empty()) return std::nullopt;
    return aggregate(v);
  };
  std::vector<double> row_means;
  for (const auto& row : grid) {
    std::vector<double> present;
    for (const auto& cell : row) {
      if (cell) present.push_back(*cell);
    }
    summary.rows.push_back(of(present));
    if (summary.rows.back()) row_means.push_back(summary.rows.back()->mean);
  }
  std::vector<double> column_means;
  for (std::size_t c = 0; c < width; ++c) {
    std::vector<double> present;
    for (const auto& row : grid) {
      if (c < row.size() && row[c]) present.push_back(*row[c]);
    }
    summary.columns.push_back(of(present));
    if (summary.columns.back()) column_means.push_back(summary.columns.back()->mean);
  }
  summary.of_column_means = of(column_means);
  summary.of_row_means = of(row_means);
  return summary;
}

std::vector<SubsetSpec> parse_subset_spec(std::string_view spec) {
  std::vector<SubsetSpec> out;
  for (const auto item : detail::split(detail::trim(spec), ',')) {
    const auto parts = detail::split(detail::trim(item), ':');
    if (parts.size() != 2) {
      throw InvalidArgument("subset '" + std::string(item) + "' is not of the form fraction:seed");
    }
    const std::string fraction_text(detail::trim(parts[0]));
    char* end = nullptr;
    const double fraction = std::strtod(fraction_text.c_str(), &end);
    const auto seed = detail::parse_int<std::uint64_t>(detail::trim(parts[1]));
    if (fraction_text.empty() || end != fraction_text.c_str() + fraction_text.size() || !seed ||
        !(fraction > 0.0 && fraction <= 1.0)) {
      throw InvalidArgument("bad subset '" + std::string(item) + "' (fraction in (0,1], integer seed)");
    }
    out.push_back(SubsetSpec{fraction, *seed});
  }
  return out;
}

std::vector<std::size_t> parse_k_list(std::string_view spec) {
  std::vector<std::size_t> out;
  for (const auto item : detail::split(detail::trim(spec), ',')) {
    const auto k = detail::parse_int<std::size_t>(detail::trim(item));
    if (!k || *k == 0) throw InvalidArgument("bad k value '" + std::string(item) + "'");
    out.push_back(*k);
  }
  return out;
}

std::vector<EvaluationReport> sweep(const SweepGrid& grid, const SweepInputs& inputs) {
  if (inputs.network == nullptr) throw InvalidArgument("sweep needs a semantic network");
  const LeskScorer lesk(*inputs.network, inputs.tokenizer, inputs.lesk, inputs.relation_pairs);
  std::set<std::string> targets;
  for (const auto& g : inputs.gold) targets.insert(g.lemma);

  const std::size_t per_scorer = grid.subsets.size() * grid.ks.size();
  std::vector<EvaluationReport> reports(grid.scorers.size() * per_scorer);
  for (std::size_t si = 0; si < grid.subsets.size(); ++si) {
    const auto& subset = grid.subsets[si];
    const auto sample = sample_distinct(inputs.triples, subset.fraction, subset.seed);
    const auto index = TripleIndex::build(sample, inputs.lexicon);
    for (std::size_t sc = 0; sc < grid.scorers.size(); ++sc) {
      for (std::size_t ki = 0; ki < grid.ks.size(); ++ki) {
        auto options = inputs.disambiguator;
        options.scorer = grid.scorers[sc];
        options.k = grid.ks[ki];
        const Disambiguator wsd(index, lesk, options);
        ResultsByDocument results;
        for (const auto& doc : inputs.documents) {
          results[doc.id] = wsd.disambiguate_document(doc.tokens, &targets);
        }
        const RunConfig config{options.scorer, options.k, subset.fraction, subset.seed};
        reports[sc * per_scorer + si * grid.ks.size() + ki] =
            accuracy(inputs.documents, results, inputs.gold, config);
      }
    }
  }
  return reports;
}

std::string render_report_tsv(const EvaluationReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  const std::string prefix = std::string(to_string(c.scorer)) + '\t' + std::to_string(c.k) + '\t' +
                             c.subset_label() + '\t';
  out << "scorer\tk\tsubset\tlevel\tkey\tpos\tcorrect\ttotal\tmissed\taccuracy\tflag\n";
  auto row = [&](std::string_view level, std::string_view key, std::string_view pos, const AccuracyCell& cell) {
    out << prefix << level << '\t' << key << '\t' << pos << '\t' << cell.correct << '\t' << cell.total
        << '\t' << cell.missed << '\t' << cell_text(cell.accuracy()) << '\t'
        << (cell.pos_error() ? "pos-error" : "-") << '\n';
  };
  for (const auto& [lemma, cell] : report.per_lemma) {
    row("lemma", lemma, to_string(report.lemma_pos.at(lemma)), cell);
  }
  for (const auto& [pos, cell] : report.per_pos) row("pos", to_string(pos), to_string(pos), cell);
  row("overall", "all", "-", report.overall);
  return out.str();
}

std::string render_aggregate_tsv(const SweepGrid& grid, const std::vector<EvaluationReport>& reports) {
  const std::size_t per_scorer = grid.subsets.size() * grid.ks.size();
  if (reports.size() != grid.scorers.size() * per_scorer) {
    throw InvalidArgument("report count does not match the sweep grid");
  }
  std::ostringstream out;
  out << "scorer\tpos\tsubset";
  for (const auto k : grid.ks) out << "\tk=" << k;
  out << "\tmean\tstd\n";

  std::set<Pos> poses;
  for (const auto& r : reports) {
    for (const auto& [pos, cell] : r.per_pos) poses.insert(pos);
  }
  auto fmt = [](const std::optional<Aggregate>& a, bool spread) {
    return a ? format_percent(spread ? a->stddev : a->mean) : std::string("NA");
  };

  for (std::size_t sc = 0; sc < grid.scorers.size(); ++sc) {
    const std::string scorer(to_string(grid.scorers[sc]));
    std::vector<std::optional<Pos>> rows_of(poses.begin(), poses.end());
    rows_of.push_back(std::nullopt);  // overall
    for (const auto& pos : rows_of) {
      const std::string pos_name = pos ? std::string(to_string(*pos)) : "all";
      std::vector<std::vector<std::optional<double>>> grid_values;
      for (std::size_t si = 0; si < grid.subsets.size(); ++si) {
        auto& row = grid_values.emplace_back();
        for (std::size_t ki = 0; ki < grid.ks.size(); ++ki) {
          const auto& r = reports[sc * per_scorer + si * grid.ks.size() + ki];
          if (!pos) {
            row.push_back(r.overall.accuracy());
          } else {
            const auto it = r.per_pos.find(*pos);
            row.push_back(it == r.per_pos.end() ? std::nullopt : it->second.accuracy());
          }
        }
      }
      const auto summary = summarize_grid(grid_values);
      for (std::size_t si = 0; si < grid.subsets.size(); ++si) {
        const RunConfig label{grid.scorers[sc], 0, grid.subsets[si].fraction, grid.subsets[si].seed};
        out << scorer << '\t' << pos_name << '\t' << label.subset_label();
        for (const auto& v : grid_values[si]) out << '\t' << cell_text(v);
        out << '\t' << fmt(summary.rows[si], false) << '\t' << fmt(summary.rows[si], true) << '\n';
      }
      out << scorer << '\t' << pos_name << "\tmean";
      for (const auto& col : summary.columns) out << '\t' << fmt(col, false);
      out << '\t' << fmt(summary.of_column_means, false) << '\t' << fmt(summary.of_column_means, true) << '\n';
      out << scorer << '\t' << pos_name << "\tstd";
      for (const auto& col : summary.columns) out << '\t' << fmt(col, true);
      out << '\t' << fmt(summary.of_row_means, true) << "\t-\n";
    }
  }
  return out.str();
}

std::vector<std::filesystem::path> write_sweep(const std::filesystem::path& dir, const SweepGrid& grid,
                                               const std::vector<EvaluationReport>& reports) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + path.string());
    os << text;
    if (!os.flush()) throw IoError("write failed for " + path.string());
    written.push_back(path);
  };
  for (const auto& r : reports) {
    const auto& c = r.config;
    const std::string name = "report_" + std::string(to_string(c.scorer)) + "_k" + std::to_string(c.k) +
                             "_" + format_number(c.fraction) + "_" + std::to_string(c.seed) + ".tsv";
    write(dir / name, render_report_tsv(r));
  }
  write(dir / "aggregate.tsv", render_aggregate_tsv(grid, reports));
  return written;
}

}  // namespace lexsense
