#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/freefactor.hpp"
#include "pretzel/knot.hpp"

namespace pretzel {

enum class FFP { Satisfied, NotSatisfied, Unknown };
enum class RTFN { Proved, Disproved, Unknown };
enum class BiOrder { BiOrderable, NotBiOrderable, Unknown };
enum class Tristate { Yes, No, Unknown };

std::string to_string(FFP v);
std::string to_string(RTFN v);
std::string to_string(BiOrder v);
std::string to_string(Tristate v);

/// One side (H or K) of the free factor computation, with printable
/// certificate details.
struct SideReport {
  std::string side;  ///< "H" or "K"
  FFVerdict verdict;
  std::size_t index = 0;
  std::size_t rank = 0;
  std::vector<std::string> ambient_words;
  std::vector<std::string> rewritten;  ///< in the Schreier basis before any substitution
  std::vector<std::string> removed;              ///< names of dropped Schreier generators
  std::vector<std::string> removed_definitions;  ///< their ambient words
  std::optional<std::string> substitution;
  std::optional<std::string> obstruction;  ///< printed witness element
  bool replayed = false;
};

struct KnotReport {
  PretzelKnot knot;
  bool analyzed = false;
  std::string note;  ///< why analysis was declined, if it was
  Integer n = 0;     ///< det S+
  IntPolynomial alexander;
  bool rhf = false;
  std::optional<std::size_t> index;  ///< |X : H[X,X]|
  std::optional<SideReport> h;
  std::optional<SideReport> k;
  FFP ffp = FFP::Unknown;
  std::string ffp_reason;
  RTFN rtfn = RTFN::Unknown;
  std::string rtfn_reason;
  BiOrder biorder = BiOrder::Unknown;
  std::string biorder_reason;
  Tristate sigma2_lo = Tristate::Unknown;
  double seconds = 0;
};

struct AnalysisOptions {
  Budget budget;
  /// Replay every certificate and fail with InternalError if one does not hold.
  bool replay = true;
};

/// Full analysis. Knots outside the analyzed families come back with
/// analyzed = false and a note rather than an exception.
KnotReport analyze(const PretzelKnot& knot, const AnalysisOptions& options = {});

/// Orderability of the double branched cover: defined for triples with p < -1.
Tristate sigma2_lo(const PretzelKnot& knot);

/// Grid cell class as printed in charts.
std::string chart_class(const KnotReport& report);

/// Knots P(2p+1, 2q+1, 2r+1) for 1 <= q <= min(qmax, r) and r <= rmax, in
/// (q, r) order. Throws DomainError past `cell_cap` cells.
std::vector<PretzelKnot> sweep_knots(long p, long qmax, long rmax, std::size_t cell_cap = 5000);

/// Analyzes many knots, in parallel when the budget allows; results are in
/// input order regardless of scheduling.
std::vector<KnotReport> analyze_all(const std::vector<PretzelKnot>& knots, const AnalysisOptions& options);

std::string sweep_csv(const std::vector<KnotReport>& reports);
std::string chart_csv(const std::vector<KnotReport>& reports);
std::string chart_markdown(const std::vector<KnotReport>& reports);

}  // namespace pretzel
