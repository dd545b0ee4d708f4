#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rackmr/analysis.hpp"

namespace rackmr {

// Reference copies of the benchmark tables this tool reproduces. Cost
// cells are stored in raw key-value-pair units (the source prints them
// divided by 1000). Several printed cells contradict the closed-form
// costs; audit_published_cost_table() reports exactly which.

struct PublishedCostRow {
  int K, P, Q, N, r;
  std::int64_t unc_cross, cod_cross, hyb_cross;
  std::int64_t unc_intra, cod_intra, hyb_intra;
};

extern const std::array<PublishedCostRow, 9> kPublishedCostTable;

struct CellCheck {
  int row = 0;  // 1-based row in kPublishedCostTable
  Scheme scheme = Scheme::Uncoded;
  bool is_intra = false;
  std::int64_t published = 0;
  Rat formula;
  bool consistent = false;
};

// Every cell of the published cost table against the formulas.
std::vector<CellCheck> audit_published_cost_table();

struct PublishedLocalityRow {
  int K, P, rf, N;
  double ran_node_pct, opt_node_pct;
  double ran_rack_pct, opt_rack_pct;
};

extern const std::array<PublishedLocalityRow, 10> kPublishedLocalityTable;

}  // namespace rackmr
