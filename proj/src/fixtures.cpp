#include "pretzel/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pretzel/error.hpp"

namespace pretzel {

std::vector<FixtureCase> parse_fixtures(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("fixture file must hold a JSON list");
  std::vector<FixtureCase> out;
  for (const auto& entry : doc) {
    try {
      FixtureCase c;
      if (entry.contains("family")) {
        const auto& f = entry.at("family");
        const int k = f.at(0).get<int>();
        const long r = f.at(1).get<long>();
        c.knot = alternating_family(k, r);
        c.label = c.knot.name();
      } else {
        c.label = entry.at("knot").get<std::string>();
        c.knot = parse_knot(c.label);
      }
      c.source = entry.value("source", "");
      for (const auto& [key, value] : entry.at("expected").items()) {
        if (key == "index")
          c.index = value.get<std::size_t>();
        else if (key == "alexander")
          c.alexander = value.get<std::vector<long>>();
        else
          c.expected[key] = value.get<std::string>();
      }
      if (entry.contains("rewritings"))
        for (const auto& [side, words] : entry.at("rewritings").items())
          c.rewritings[side] = words.get<std::vector<std::string>>();
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("bad fixture entry " + entry.dump() + ": " + e.what());
    }
  }
  return out;
}

std::vector<FixtureCase> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

std::vector<std::string> compare(const FixtureCase& fixture, const KnotReport& report) {
  std::vector<std::string> out;
  auto check = [&](const std::string& field, const std::string& got) {
    auto it = fixture.expected.find(field);
    if (it != fixture.expected.end() && it->second != got)
      out.push_back(field + ": expected " + it->second + ", got " + got);
  };
  check("ffp", to_string(report.ffp));
  check("rtfn", to_string(report.rtfn));
  check("biorder", to_string(report.biorder));
  check("sigma2_lo", to_string(report.sigma2_lo));
  if (fixture.index) {
    const std::string got = report.index ? std::to_string(*report.index) : "none";
    if (got != std::to_string(*fixture.index))
      out.push_back("index: expected " + std::to_string(*fixture.index) + ", got " + got);
  }
  if (fixture.alexander) {
    std::vector<Integer> coeffs(fixture.alexander->begin(), fixture.alexander->end());
    const IntPolynomial want(coeffs);
    if (!report.analyzed || !associated(want, report.alexander))
      out.push_back("alexander: expected " + to_string(want) + ", got " + to_string(report.alexander));
  }
  for (const auto& [side, words] : fixture.rewritings) {
    const auto& rep = side == "H" ? report.h : report.k;
    std::vector<std::string> got = rep ? rep->rewritten : std::vector<std::string>{};
    if (got != words) {
      std::string g;
      for (const auto& w : got) g += (g.empty() ? "" : ", ") + w;
      std::string e;
      for (const auto& w : words) e += (e.empty() ? "" : ", ") + w;
      out.push_back("rewriting " + side + ": expected [" + e + "], got [" + g + "]");
    }
  }
  return out;
}

std::vector<FixtureResult> run_fixtures(const std::vector<FixtureCase>& cases, const AnalysisOptions& options,
                                        const std::vector<std::string>& only) {
  std::vector<const FixtureCase*> selected;
  for (const auto& c : cases)
    if (only.empty() || std::find(only.begin(), only.end(), c.source) != only.end()) selected.push_back(&c);
  std::vector<PretzelKnot> knots;
  for (const auto* c : selected) knots.push_back(c->knot);
  std::vector<KnotReport> reports = analyze_all(knots, options);
  std::vector<FixtureResult> out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    FixtureResult r;
    r.fixture = selected[i];
    r.report = std::move(reports[i]);
    r.mismatches = compare(*selected[i], r.report);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pretzel
