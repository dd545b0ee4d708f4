#include "rackmr/published_tables.hpp"

namespace rackmr {

const std::array<PublishedCostRow, 9> kPublishedCostTable = {{
    {9, 3, 18, 72, 2, 864, 486, 216, 288, 18, 864},
    {16, 4, 16, 240, 2, 2880, 1632, 960, 720, 48, 2880},
    {16, 4, 16, 1680, 3, 20160, 6976, 2240, 5040, 304, 20160},
    {15, 3, 15, 210, 2, 2100, 1275, 525, 840, 90, 2520},
    {20, 4, 20, 380, 2, 5700, 3300, 1900, 1520, 120, 608},
    {25, 5, 25, 600, 2, 12000, 6750, 4500, 2400, 1500, 12000},
    {25, 5, 25, 6900, 3, 138000, 50600, 23000, 27600, 100, 13800},
    {30, 5, 30, 870, 2, 16560, 11880, 7830, 3450, 300, 17250},
    {30, 6, 30, 870, 2, 21750, 12000, 8700, 3480, 180, 20880},
}};

std::vector<CellCheck> audit_published_cost_table() {
  std::vector<CellCheck> cells;
  for (std::size_t i = 0; i < kPublishedCostTable.size(); ++i) {
    const PublishedCostRow& row = kPublishedCostTable[i];
    const CostBreakdown unc = uncoded_cost_formula(row.K, row.P, row.Q, row.N);
    const CostBreakdown cod = coded_cost_formula(row.K, row.P, row.Q, row.N, row.r);
    const CostBreakdown hyb = hybrid_cost_formula(row.K, row.P, row.Q, row.N, row.r);

    const auto push = [&](Scheme scheme, bool is_intra, std::int64_t published,
                          const Rat& formula) {
      CellCheck c;
      c.row = static_cast<int>(i) + 1;
      c.scheme = scheme;
      c.is_intra = is_intra;
      c.published = published;
      c.formula = formula;
      c.consistent = formula == Rat(published);
      cells.push_back(c);
    };
    push(Scheme::Uncoded, false, row.unc_cross, unc.cross);
    push(Scheme::Coded, false, row.cod_cross, cod.cross);
    push(Scheme::Hybrid, false, row.hyb_cross, hyb.cross);
    push(Scheme::Uncoded, true, row.unc_intra, unc.intra);
    push(Scheme::Coded, true, row.cod_intra, cod.intra);
    push(Scheme::Hybrid, true, row.hyb_intra, hyb.intra);
  }
  return cells;
}

const std::array<PublishedLocalityRow, 10> kPublishedLocalityTable = {{
    {8, 2, 2, 160, 25.0, 60.0, 80.0, 80.0},
    {8, 2, 3, 100, 39.0, 76.0, 95.0, 95.0},
    {9, 3, 2, 144, 17.0, 64.0, 57.0, 86.0},
    {9, 3, 3, 90, 33.0, 87.0, 77.0, 98.0},
    {10, 5, 2, 100, 19.0, 80.0, 41.0, 92.5},
    {16, 4, 2, 192, 10.0, 64.0, 45.0, 90.0},
    {16, 4, 3, 192, 19.0, 84.0, 63.0, 99.0},
    {18, 3, 2, 180, 11.0, 60.0, 57.0, 83.0},
    {20, 5, 2, 200, 13.0, 66.0, 38.0, 90.0},
    {21, 3, 2, 84, 12.0, 63.0, 56.0, 81.0},
}};

}  // namespace rackmr
