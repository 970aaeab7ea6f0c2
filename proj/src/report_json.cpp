#include "pretzel/report_json.hpp"

namespace pretzel {

using nlohmann::ordered_json;

ordered_json to_json(const FFVerdict& v) {
  ordered_json j;
  j["outcome"] = to_string(v.outcome);
  ordered_json pre = ordered_json::object();
  if (v.preprocessing.substitution) {
    const auto& s = *v.preprocessing.substitution;
    pre["substitution"] = {{"target", s.target}, {"by", s.by}, {"power", s.power}, {"left", s.left}};
  }
  if (!v.preprocessing.nielsen.empty()) {
    ordered_json moves = ordered_json::array();
    for (NielsenMove m : v.preprocessing.nielsen) moves.push_back(to_string(m));
    pre["nielsen"] = moves;
  }
  j["preprocessing"] = pre;
  if (v.positive) j["removed"] = v.positive->removed;
  if (v.negative) {
    const auto& n = *v.negative;
    ordered_json neg;
    neg["kind"] = to_string(n.kind);
    ordered_json path = ordered_json::array();
    for (NielsenMove m : n.path) path.push_back(to_string(m));
    neg["path"] = path;
    neg["element"] = n.element;
    if (n.word) neg["word"] = to_string(*n.word);
    neg["support"] = n.support;
    j["obstruction"] = neg;
  }
  const auto& c = v.consumed;
  j["consumed"] = {{"candidates", c.candidates},         {"fold_checks", c.fold_checks},
                   {"ball_pairs", c.ball_pairs},         {"elements_tested", c.elements_tested},
                   {"substitutions", c.substitutions},   {"nielsen_retries", c.nielsen_retries}};
  return j;
}

namespace {

ordered_json side_json(const SideReport& s) {
  ordered_json j;
  j["side"] = s.side;
  j["index"] = s.index;
  j["rank"] = s.rank;
  j["generators"] = s.ambient_words;
  j["rewritten"] = s.rewritten;
  j["verdict"] = to_json(s.verdict);
  if (!s.removed.empty()) {
    ordered_json removed = ordered_json::array();
    for (std::size_t i = 0; i < s.removed.size(); ++i)
      removed.push_back({{"name", s.removed[i]}, {"definition", s.removed_definitions[i]}});
    j["removed_generators"] = removed;
  }
  if (s.substitution) j["substitution"] = *s.substitution;
  if (s.obstruction) j["obstruction_word"] = *s.obstruction;
  j["replayed"] = s.replayed;
  return j;
}

}  // namespace

ordered_json to_json(const KnotReport& r, bool with_timing) {
  ordered_json j;
  j["knot"] = r.knot.name();
  j["params"] = r.knot.params;
  j["family"] = r.knot.family == KnotFamily::GenusOneTriple          ? "genus-one"
                : r.knot.family == KnotFamily::AlternatingSignFamily ? "alternating-sign"
                                                                     : "unsupported";
  if (r.knot.family == KnotFamily::GenusOneTriple) j["pqr"] = {r.knot.p, r.knot.q, r.knot.r};
  if (r.knot.family == KnotFamily::AlternatingSignFamily) j["k"] = r.knot.k;
  j["mirrored"] = r.knot.mirrored;
  j["two_bridge"] = r.knot.two_bridge;
  j["analyzed"] = r.analyzed;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.analyzed) {
    j["N"] = r.n.get_str();
    ordered_json coeffs = ordered_json::array();
    for (const Integer& c : r.alexander.coefficients()) coeffs.push_back(c.get_str());
    j["alexander"] = coeffs;
    j["alexander_text"] = to_string(r.alexander);
    j["rhf"] = r.rhf;
  }
  if (r.index) j["index"] = *r.index;
  if (r.h) j["ffp_H"] = side_json(*r.h);
  if (r.k) j["ffp_K"] = side_json(*r.k);
  j["ffp"] = to_string(r.ffp);
  j["ffp_reason"] = r.ffp_reason;
  j["rtfn"] = to_string(r.rtfn);
  j["rtfn_reason"] = r.rtfn_reason;
  j["biorder"] = to_string(r.biorder);
  j["biorder_reason"] = r.biorder_reason;
  j["sigma2_lo"] = to_string(r.sigma2_lo);
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  return j;
}

}  // namespace pretzel
