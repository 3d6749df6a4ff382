#include "simrouge/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "simrouge/errors.hpp"

namespace simrouge {

namespace {

using json = nlohmann::ordered_json;

std::string fixed(double x, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, round_to(x, places));
  return buf;
}

// Shortest text that reads back as the same double.
std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : fixed(x, 6);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = line.find(sep, start);
    out.push_back(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("<sweep>", line, "bad number '" + std::string(s) + "'");
  }
  return value;
}

SimilarityScore rounded(const SimilarityScore& s) {
  return {round_to(s.recall, 4), round_to(s.precision, 4), round_to(s.f, 4)};
}

}  // namespace

double round_to(double x, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(x * scale) / scale;
}

ComparisonReport rounded(const ComparisonReport& report) {
  auto out = report;
  for (auto& row : out.rows) {
    for (auto& m : row.matches) m.score = rounded(m.score);
  }
  return out;
}

SweepRow rounded(const SweepRow& row) {
  auto out = row;
  out.recall = round_to(row.recall, 4);
  out.precision = round_to(row.precision, 4);
  out.f = round_to(row.f, 4);
  return out;
}

std::string reports_to_json(const std::vector<ComparisonReport>& reports) {
  json doc = json::object();
  for (const auto& report : reports) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json matches = json::array();
      for (const auto& m : row.matches) {
        matches.push_back({{"cand_index", m.cand_index},
                           {"r", round_to(m.score.recall, 4)},
                           {"p", round_to(m.score.precision, 4)},
                           {"f", round_to(m.score.f, 4)},
                           {"flagged", m.flagged}});
      }
      rows.push_back({{"ref_index", row.ref_index}, {"matches", matches}, {"flagged_cands", row.flagged_cands}});
    }
    doc[std::string(method_name(report.method))] = rows;
  }
  return doc.dump(2) + "\n";
}

std::vector<ComparisonReport> reports_from_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    std::vector<ComparisonReport> out;
    for (const auto& [name, rows] : doc.items()) {
      ComparisonReport report;
      report.method = parse_method(name);
      for (const auto& r : rows) {
        RefMatches row;
        row.ref_index = r.at("ref_index").get<std::size_t>();
        for (const auto& m : r.at("matches")) {
          row.matches.push_back({m.at("cand_index").get<std::size_t>(),
                                 {m.at("r").get<double>(), m.at("p").get<double>(), m.at("f").get<double>()},
                                 m.at("flagged").get<bool>()});
        }
        row.flagged_cands = r.at("flagged_cands").get<std::vector<std::size_t>>();
        report.rows.push_back(std::move(row));
      }
      out.push_back(std::move(report));
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const ConfigError& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string reports_to_tsv(const std::vector<ComparisonReport>& reports) {
  std::ostringstream out;
  out << "method\tref_index\trank\tcand_index\tr\tp\tf\tflagged\n";
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      for (std::size_t k = 0; k < row.matches.size(); ++k) {
        const auto& m = row.matches[k];
        out << method_name(report.method) << '\t' << row.ref_index << '\t' << k + 1 << '\t' << m.cand_index << '\t'
            << fixed(m.score.recall, 4) << '\t' << fixed(m.score.precision, 4) << '\t' << fixed(m.score.f, 4) << '\t'
            << (m.flagged ? 1 : 0) << '\n';
      }
    }
  }
  return out.str();
}

std::string reports_to_text(const std::vector<ComparisonReport>& reports, const std::vector<MethodConfig>& cfgs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& report = reports[k];
    out << method_name(report.method);
    if (k < cfgs.size()) {
      out << " (" << setting_label(cfgs[k].preprocess.setting()) << ", threshold " << fixed(cfgs[k].threshold, 2)
          << ")";
    }
    out << '\n';
    for (const auto& row : report.rows) {
      out << "  ref " << row.ref_index << ':';
      if (row.matches.empty()) out << " no candidates";
      out << '\n';
      for (const auto& m : row.matches) {
        out << "    cand " << m.cand_index << "  R " << fixed(m.score.recall, 2) << "  P " << fixed(m.score.precision, 2)
            << "  F " << fixed(m.score.f, 2) << (m.flagged ? "  *" : "") << '\n';
      }
    }
  }
  return out.str();
}

std::string sweep_to_tsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "threshold\tTP\tFP\tTN\tFN\tR\tP\tF\n";
  for (const auto& r : rows) {
    out << shortest(r.threshold) << '\t' << r.counts.tp << '\t' << r.counts.fp << '\t' << r.counts.tn << '\t'
        << r.counts.fn << '\t' << fixed(r.recall, 4) << '\t' << fixed(r.precision, 4) << '\t' << fixed(r.f, 4)
        << '\n';
  }
  return out.str();
}

std::vector<SweepRow> sweep_from_tsv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.starts_with("threshold")) continue;
    const auto cols = split(line, '\t');
    if (cols.size() != 8) throw ParseError("<sweep>", lineno, "expected 8 columns");
    SweepRow r;
    r.threshold = parse_number<double>(cols[0], lineno);
    r.counts = {parse_number<std::size_t>(cols[1], lineno), parse_number<std::size_t>(cols[2], lineno),
                parse_number<std::size_t>(cols[3], lineno), parse_number<std::size_t>(cols[4], lineno)};
    r.recall = parse_number<double>(cols[5], lineno);
    r.precision = parse_number<double>(cols[6], lineno);
    r.f = parse_number<double>(cols[7], lineno);
    rows.push_back(r);
  }
  return rows;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  json doc = json::array();
  for (const auto& r : rows) {
    doc.push_back({{"threshold", r.threshold},
                   {"tp", r.counts.tp},
                   {"fp", r.counts.fp},
                   {"tn", r.counts.tn},
                   {"fn", r.counts.fn},
                   {"r", round_to(r.recall, 4)},
                   {"p", round_to(r.precision, 4)},
                   {"f", round_to(r.f, 4)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace simrouge
