#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rackmr/assignment.hpp"
#include "rackmr/rational.hpp"

namespace rackmr {

// Key-value-pair unit counts split by switch level. Exact rationals; for
// parameters meeting the divisibility conditions every value is an
// integer.
struct CostBreakdown {
  Scheme scheme = Scheme::Uncoded;
  Rat intra;
  Rat cross;
  Rat total() const { return intra + cross; }
};

// Unchecked formula evaluators. These exist separately from the checked
// cost_* entry points because the published-table audit has to evaluate
// the formulas even on rows whose parameters fail the scheme's own
// divisibility conditions.
CostBreakdown uncoded_cost_formula(int K, int P, int Q, int N);
CostBreakdown coded_cost_formula(int K, int P, int Q, int N, int r);
CostBreakdown hybrid_cost_formula(int K, int P, int Q, int N, int r);

// Checked variants: validate the stated conditions, then evaluate.
CostBreakdown cost_uncoded(int K, int P, int Q, int N);
CostBreakdown cost_coded(int K, int P, int Q, int N, int r);
CostBreakdown cost_hybrid(int K, int P, int Q, int N, int r);

// Corollary-style comparison of coded vs hybrid. The exact ratios do not
// depend on Q and N (they cancel). The cross lower bound is meaningful
// only when positive; the intra ratio is defined only while the coded
// scheme has intra-rack traffic at all (r + 1 <= K/P).
struct RatioBounds {
  double cross_lower_bound = 0;  // on L_cro(coded) / L_cro(hybrid)
  double intra_upper_bound = 0;  // on L_int(hybrid) / L_int(coded)
  Rat cross_exact;
  Rat intra_exact;
  bool intra_defined = false;
};

RatioBounds ratio_bounds(int K, int P, int r);

struct MeterPair {
  std::int64_t intra = 0;
  std::int64_t cross = 0;
};

struct CompareRow {
  Scheme scheme = Scheme::Uncoded;
  CostBreakdown cost;
  bool shuffle_valid = false;                  // all run conditions hold
  std::vector<std::string> failed_conditions;  // empty when shuffle_valid
  std::optional<MeterPair> meter;
  // |L_int - meter_int| + |L_cro - meter_cro|; unset without a meter
  std::optional<Rat> delta() const;
};

// One row per scheme in fixed order (uncoded, coded, hybrid).
std::vector<CompareRow> compare(const ClusterTopology& topo, int Q, int N, int r);

}  // namespace rackmr
