#include "rackmr/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "rackmr/combinatorics.hpp"

namespace rackmr {

CostBreakdown uncoded_cost_formula(int K, int P, int Q, int N) {
  const Rat qn = Rat(Q) * Rat(N);
  CostBreakdown c;
  c.scheme = Scheme::Uncoded;
  c.intra = qn * (Rat(1, P) - Rat(1, K));
  c.cross = qn * (Rat(1) - Rat(1, P));
  return c;
}

CostBreakdown coded_cost_formula(int K, int P, int Q, int N, int r) {
  const Rat total = Rat(Q) * Rat(N, r) * (Rat(1) - Rat(r, K));
  const Rat intra_share =
      Rat(binomial(K / P, r + 1), binomial(K, r + 1)) * Rat(P);
  CostBreakdown c;
  c.scheme = Scheme::Coded;
  c.intra = total * intra_share;
  c.cross = total - c.intra;
  return c;
}

CostBreakdown hybrid_cost_formula(int K, int P, int Q, int N, int r) {
  const Rat qn = Rat(Q) * Rat(N);
  CostBreakdown c;
  c.scheme = Scheme::Hybrid;
  c.cross = Rat(Q) * Rat(N, r) * (Rat(1) - Rat(r, P));
  c.intra = qn * (Rat(1) - Rat(P, K));
  return c;
}

namespace {

void require_topology(int K, int P) {
  if (K < 2) throw std::invalid_argument("cost: K must be at least 2");
  if (P < 1) throw std::invalid_argument("cost: P must be positive");
  if (K % P != 0) throw std::invalid_argument("cost: P does not divide K");
}

}  // namespace

CostBreakdown cost_uncoded(int K, int P, int Q, int N) {
  require_topology(K, P);
  if (N < 1 || N % K != 0) throw std::invalid_argument("cost: K does not divide N");
  if (Q < 1 || Q % K != 0) throw std::invalid_argument("cost: K does not divide Q");
  return uncoded_cost_formula(K, P, Q, N);
}

CostBreakdown cost_coded(int K, int P, int Q, int N, int r) {
  require_topology(K, P);
  if (r < 1 || r >= K) throw std::invalid_argument("cost: r must satisfy 1 <= r < K");
  if (N < 1 || N % binomial(K, r) != 0) {
    throw std::invalid_argument("cost: C(K,r) does not divide N");
  }
  if (Q < 1 || Q % K != 0) throw std::invalid_argument("cost: K does not divide Q");
  return coded_cost_formula(K, P, Q, N, r);
}

CostBreakdown cost_hybrid(int K, int P, int Q, int N, int r) {
  require_topology(K, P);
  if (r < 1 || r > P) throw std::invalid_argument("cost: r must satisfy 1 <= r <= P");
  const int per_rack = K / P;
  if (N < 1 || N % per_rack != 0) {
    throw std::invalid_argument("cost: K/P does not divide N");
  }
  if ((N / per_rack) % binomial(P, r) != 0) {
    throw std::invalid_argument("cost: C(P,r) does not divide NP/K");
  }
  if (Q < 1 || Q % P != 0) throw std::invalid_argument("cost: P does not divide Q");
  return hybrid_cost_formula(K, P, Q, N, r);
}

RatioBounds ratio_bounds(int K, int P, int r) {
  require_topology(K, P);
  if (r < 1 || r >= P) {
    throw std::invalid_argument("ratio_bounds: r must satisfy 1 <= r < P");
  }
  if (P >= K) {
    throw std::invalid_argument("ratio_bounds: P must be less than K");
  }

  RatioBounds b;
  const double e_pow = std::exp(static_cast<double>(r + 1));
  const double p_pow = std::pow(static_cast<double>(P), r);
  const double front = (1.0 - static_cast<double>(r) / K) /
                       (1.0 - static_cast<double>(r) / P);
  b.cross_lower_bound = front * (1.0 - e_pow / p_pow);
  b.intra_upper_bound = static_cast<double>(r) *
                        (static_cast<double>(K - P) / (K - r)) * e_pow * p_pow;

  // Exact ratios from the cost formulas; Q and N cancel, so evaluate at
  // Q = N = 1.
  const CostBreakdown cod = coded_cost_formula(K, P, 1, 1, r);
  const CostBreakdown hyb = hybrid_cost_formula(K, P, 1, 1, r);
  b.cross_exact = cod.cross / hyb.cross;
  if (cod.intra.num() != 0) {
    b.intra_defined = true;
    b.intra_exact = hyb.intra / cod.intra;
  }
  return b;
}

std::optional<Rat> CompareRow::delta() const {
  if (!meter.has_value()) return std::nullopt;
  const Rat di = cost.intra - Rat(meter->intra);
  const Rat dc = cost.cross - Rat(meter->cross);
  const auto abs = [](const Rat& x) { return x.num() < 0 ? Rat(0) - x : x; };
  return abs(di) + abs(dc);
}

std::vector<CompareRow> compare(const ClusterTopology& topo, int Q, int N, int r) {
  const int K = topo.servers();
  const int P = topo.racks();
  std::vector<CompareRow> rows(3);

  rows[0].scheme = Scheme::Uncoded;
  rows[0].cost = uncoded_cost_formula(K, P, Q, N);
  rows[1].scheme = Scheme::Coded;
  rows[1].cost = coded_cost_formula(K, P, Q, N, r);
  rows[2].scheme = Scheme::Hybrid;
  rows[2].cost = hybrid_cost_formula(K, P, Q, N, r);

  for (auto& row : rows) {
    JobParams params;
    params.subfiles = N;
    params.keys = Q;
    params.replication = row.scheme == Scheme::Uncoded ? 1 : r;
    params.scheme = row.scheme;
    row.failed_conditions = violated_conditions(topo, params, ValidationScope::Shuffle);
    row.shuffle_valid = row.failed_conditions.empty();
  }
  return rows;
}

}  // namespace rackmr
