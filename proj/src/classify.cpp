#include "pretzel/classify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "pretzel/error.hpp"
#include "pretzel/subgroup_graph.hpp"

namespace pretzel {

std::string to_string(FFP v) {
  switch (v) {
    case FFP::Satisfied: return "Satisfied";
    case FFP::NotSatisfied: return "NotSatisfied";
    case FFP::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(RTFN v) {
  switch (v) {
    case RTFN::Proved: return "Proved";
    case RTFN::Disproved: return "Disproved";
    case RTFN::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(BiOrder v) {
  switch (v) {
    case BiOrder::BiOrderable: return "BiOrderable";
    case BiOrder::NotBiOrderable: return "NotBiOrderable";
    case BiOrder::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Tristate v) {
  switch (v) {
    case Tristate::Yes: return "Yes";
    case Tristate::No: return "No";
    case Tristate::Unknown: return "Unknown";
  }
  return "Unknown";
}

Tristate sigma2_lo(const PretzelKnot& knot) {
  if (knot.family != KnotFamily::GenusOneTriple || knot.two_bridge) return Tristate::Unknown;
  if (knot.p >= -1 || knot.q < 1) return Tristate::Unknown;
  return -knot.p <= knot.q ? Tristate::Yes : Tristate::No;
}

namespace {

std::vector<std::string> print_all(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(to_string(w));
  return out;
}

SideReport run_side(const std::string& side, const Alphabet& ambient, const std::vector<Word>& words,
                    std::size_t expected_index, const AnalysisOptions& options) {
  SideReport out;
  out.side = side;
  out.ambient_words = print_all(words);
  AmbientDecision d = decide_ambient(ambient, words, options.budget);
  const SchreierSystem& sys = *d.system;
  out.verdict = d.verdict;
  out.index = sys.index();
  out.rank = sys.rank();

  // The leading coefficient is the index, and the folded graph of the
  // Schreier generators must agree with the coset count.
  if (out.index != expected_index)
    throw InternalError(side + " quotient has order " + std::to_string(out.index) + ", expected " +
                        std::to_string(expected_index));
  const auto graph_index = SubgroupGraph::from_generators(ambient, sys.definitions()).index();
  if (!graph_index || *graph_index != expected_index)
    throw InternalError(side + " Schreier generators do not fold to the expected index");

  out.rewritten = print_all(d.initial_rewritten);
  if (d.verdict.preprocessing.substitution)
    out.substitution = d.verdict.preprocessing.substitution->describe(ambient);
  if (d.verdict.positive)
    for (std::size_t x : d.verdict.positive->removed) {
      out.removed.push_back(sys.alphabet().name(x));
      out.removed_definitions.push_back(to_string(sys.definition(x)));
    }
  if (d.verdict.negative && d.verdict.negative->word) out.obstruction = to_string(*d.verdict.negative->word);
  if (options.replay) {
    out.replayed = replay_verdict(ambient, words, d.verdict);
    if (!out.replayed) throw InternalError(side + " certificate failed to replay");
  }
  return out;
}

std::size_t to_index(const Integer& n) {
  const Integer a = abs(n);
  if (!a.fits_ulong_p()) throw DomainError("quotient too large");
  return a.get_ui();
}

}  // namespace

KnotReport analyze(const PretzelKnot& knot, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  KnotReport rep;
  rep.knot = knot;
  rep.sigma2_lo = sigma2_lo(knot);
  auto finish = [&]() {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  if (knot.family == KnotFamily::Unsupported) {
    rep.note = "only genus-one triples and P(3,-3,...,3,-3,2r+1) are analyzed";
    return finish();
  }
  if (knot.two_bridge && knot.family == KnotFamily::GenusOneTriple) {
    rep.note = "two-bridge knot (a parameter is +-1); the standard surface analysis does not apply";
    return finish();
  }
  rep.analyzed = true;
  rep.n = leading_coefficient(knot);
  rep.alexander = alexander(knot);
  rep.rhf = rep.n != 0;
  const bool genus_one = knot.family == KnotFamily::GenusOneTriple;

  if (!rep.rhf) {
    rep.ffp_reason = "N = 0: infinite index, the free factor question does not arise";
    rep.rtfn = RTFN::Disproved;
    rep.rtfn_reason = "trivial Alexander polynomial";
    rep.biorder_reason = "N = 0";
    return finish();
  }
  rep.index = to_index(rep.n);

  if (genus_one && *rep.index == 1) {
    rep.ffp = FFP::NotSatisfied;
    rep.ffp_reason = "|N| = 1: a genus one fibered knot would be a trefoil or figure eight";
    FFVerdict v;
    v.outcome = FFOutcome::NotFreeFactor;
    v.negative = NegativeWitness{NegativeWitness::Kind::UnitDeterminant, {}, 0, std::nullopt, {}};
    SideReport side;
    side.side = "H";
    side.verdict = v;
    side.index = 1;
    const BoundaryWords words = boundary_generators(knot);
    side.ambient_words = print_all(words.h);
    side.replayed = replay_verdict(words.ambient, words.h, v);
    rep.h = side;
    rep.rtfn_reason = "free factor property fails; no conclusion";
    rep.biorder = rep.n > 0 ? BiOrder::NotBiOrderable : BiOrder::Unknown;
    rep.biorder_reason = rep.n > 0 ? "N > 0: the Alexander polynomial has no positive real root" : "rtfn undecided";
    return finish();
  }

  const BoundaryWords words = boundary_generators(knot);
  rep.h = run_side("H", words.ambient, words.h, *rep.index, options);
  rep.k = run_side("K", words.ambient, words.k, *rep.index, options);
  const FFOutcome oh = rep.h->verdict.outcome, ok = rep.k->verdict.outcome;
  if (oh == FFOutcome::FreeFactor && ok == FFOutcome::FreeFactor) {
    rep.ffp = FFP::Satisfied;
    rep.ffp_reason = "H and K extend to free bases";
  } else if (oh == FFOutcome::NotFreeFactor || ok == FFOutcome::NotFreeFactor) {
    rep.ffp = FFP::NotSatisfied;
    rep.ffp_reason = std::string(oh == FFOutcome::NotFreeFactor ? "H" : "K") + " is not a free factor";
  } else if (genus_one && knot.p >= 1) {
    rep.ffp = FFP::Satisfied;
    rep.ffp_reason = "all parameters positive: alternating, hence pseudo-alternating";
  } else {
    rep.ffp_reason = "search budgets exhausted";
  }

  const bool prime_power = is_prime_power(abs(rep.n));
  if (rep.ffp == FFP::Satisfied && prime_power) {
    rep.rtfn = RTFN::Proved;
    rep.rtfn_reason = "free factor property and prime power leading coefficient";
  } else if (rep.ffp == FFP::Satisfied) {
    rep.rtfn_reason = "leading coefficient is not a prime power";
  } else {
    rep.rtfn_reason = "free factor property not established";
  }

  if (genus_one) {
    if (rep.n > 0) {
      rep.biorder = BiOrder::NotBiOrderable;
      rep.biorder_reason = "N > 0: the Alexander polynomial has no positive real root";
    } else if (rep.rtfn == RTFN::Proved) {
      rep.biorder = BiOrder::BiOrderable;
      rep.biorder_reason = "N < 0: both roots real and positive";
    } else {
      rep.biorder_reason = "rtfn undecided";
    }
  } else if (rep.rtfn == RTFN::Proved) {
    rep.biorder = BiOrder::BiOrderable;
    rep.biorder_reason = "roots 2 and 1/2 are real and positive";
  } else {
    rep.biorder_reason = "rtfn undecided";
  }
  return finish();
}

std::string chart_class(const KnotReport& report) {
  if (!report.analyzed) return "unknown";
  if (report.n == 0) return "trivial-Δ";
  switch (report.ffp) {
    case FFP::Satisfied: return "satisfies";
    case FFP::NotSatisfied: return "fails";
    case FFP::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<PretzelKnot> sweep_knots(long p, long qmax, long rmax, std::size_t cell_cap) {
  std::vector<PretzelKnot> out;
  for (long q = 1; q <= qmax; ++q)
    for (long r = q; r <= rmax; ++r) {
      if (out.size() >= cell_cap) throw DomainError("sweep exceeds " + std::to_string(cell_cap) + " cells");
      // Laid out as (p, q, r) even when p > q, so cells stay on the grid.
      PretzelKnot knot;
      knot.params = {2 * p + 1, 2 * q + 1, 2 * r + 1};
      knot.family = KnotFamily::GenusOneTriple;
      knot.p = p;
      knot.q = q;
      knot.r = r;
      knot.two_bridge = p == 0 || p == -1;
      out.push_back(std::move(knot));
    }
  return out;
}

std::vector<KnotReport> analyze_all(const std::vector<PretzelKnot>& knots, const AnalysisOptions& options) {
  std::vector<KnotReport> out(knots.size());
  std::vector<std::string> errors(knots.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(knots.size());
  if (options.budget.execution == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = analyze(knots[i], options);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = analyze(knots[i], options);
    } catch (const std::exception& e) {
      errors[i] = knots[i].name() + ": " + e.what();
    }
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw InternalError(e);
  return out;
}

std::string sweep_csv(const std::vector<KnotReport>& reports) {
  std::ostringstream os;
  os << "knot,p,q,r,N,index,ffp,rtfn,biorder,sigma2_lo\n";
  for (const KnotReport& r : reports) {
    os << '"' << r.knot.name() << "\"," << r.knot.p << ',' << r.knot.q << ',' << r.knot.r << ','
       << (r.analyzed ? r.n.get_str() : "") << ',' << (r.index ? std::to_string(*r.index) : "") << ','
       << to_string(r.ffp) << ',' << to_string(r.rtfn) << ',' << to_string(r.biorder) << ','
       << to_string(r.sigma2_lo) << '\n';
  }
  return os.str();
}

std::string chart_csv(const std::vector<KnotReport>& reports) {
  std::ostringstream os;
  os << "q,r,N,ffp_class\n";
  for (const KnotReport& r : reports)
    os << r.knot.q << ',' << r.knot.r << ',' << (r.analyzed ? r.n.get_str() : "") << ',' << chart_class(r) << '\n';
  return os.str();
}

std::string chart_markdown(const std::vector<KnotReport>& reports) {
  std::map<long, std::map<long, const KnotReport*>> grid;
  long rmin = 0, rmax = 0;
  bool first = true;
  for (const KnotReport& r : reports) {
    grid[r.knot.q][r.knot.r] = &r;
    rmin = first ? r.knot.r : std::min(rmin, r.knot.r);
    rmax = first ? r.knot.r : std::max(rmax, r.knot.r);
    first = false;
  }
  std::ostringstream os;
  os << "| q \\ r |";
  for (long r = rmin; r <= rmax; ++r) os << ' ' << r << " |";
  os << "\n|---|";
  for (long r = rmin; r <= rmax; ++r) os << "---|";
  os << '\n';
  auto mark = [](const std::string& cls) {
    if (cls == "satisfies") return "S";
    if (cls == "fails") return "F";
    if (cls == "trivial-Δ") return "0";
    return "?";
  };
  for (const auto& [q, row] : grid) {
    os << "| " << q << " |";
    for (long r = rmin; r <= rmax; ++r) {
      auto it = row.find(r);
      if (it == row.end()) {
        os << "   |";
        continue;
      }
      const KnotReport& rep = *it->second;
      os << ' ' << (rep.analyzed ? rep.n.get_str() : "") << ' ' << mark(chart_class(rep)) << " |";
    }
    os << '\n';
  }
  os << "\nS satisfies the free factor property, F fails it, 0 has trivial Alexander polynomial, ? undecided.\n";
  return os.str();
}

}  // namespace pretzel
