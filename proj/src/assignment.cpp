#include "rackmr/assignment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rackmr/combinatorics.hpp"
#include "rackmr/rng.hpp"

namespace rackmr {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Uncoded: return "uncoded";
    case Scheme::Coded: return "coded";
    case Scheme::Hybrid: return "hybrid";
  }
  return "?";
}

std::vector<std::string> violated_conditions(const ClusterTopology& topo,
                                             const JobParams& params,
                                             ValidationScope scope) {
  std::vector<std::string> bad;
  const int K = topo.servers();
  const int P = topo.racks();
  const int N = params.subfiles;
  const int Q = params.keys;
  const int r = params.replication;

  if (N < 1) bad.push_back("N must be positive");
  if (r < 1) bad.push_back("r must be positive");
  const bool shuffle = scope == ValidationScope::Shuffle;
  if (shuffle) {
    if (Q < 1) {
      bad.push_back("Q must be positive");
    } else if (Q % K != 0) {
      bad.push_back("K does not divide Q");
    }
  } else if (Q > 0 && Q % K != 0) {
    bad.push_back("K does not divide Q");
  }
  if (N < 1 || r < 1) return bad;

  switch (params.scheme) {
    case Scheme::Uncoded:
      if (r != 1) bad.push_back("uncoded scheme requires r = 1");
      if (N % K != 0) bad.push_back("K does not divide N");
      break;
    case Scheme::Coded: {
      if (r > K) {
        bad.push_back("r exceeds K");
        break;
      }
      const std::int64_t subsets = binomial(K, r);
      if (N % subsets != 0) {
        bad.push_back("C(K,r) does not divide N");
      } else if (shuffle) {
        const std::int64_t j = N / subsets;
        if (j % r != 0) bad.push_back("r does not divide J");
      }
      break;
    }
    case Scheme::Hybrid: {
      if (r > P) {
        bad.push_back("r exceeds P");
        break;
      }
      const int per_rack = topo.servers_per_rack();
      if (N % per_rack != 0) {
        bad.push_back("K/P does not divide N");
        break;
      }
      const std::int64_t layer_size = N / per_rack;  // NP/K
      const std::int64_t subsets = binomial(P, r);
      if (layer_size % subsets != 0) {
        bad.push_back("C(P,r) does not divide NP/K");
      } else if (shuffle) {
        const std::int64_t m = layer_size / subsets;
        if (m % r != 0) bad.push_back("r does not divide M");
      }
      break;
    }
  }
  return bad;
}

void require_valid(const ClusterTopology& topo, const JobParams& params,
                   ValidationScope scope) {
  const auto bad = violated_conditions(topo, params, scope);
  if (!bad.empty()) {
    throw std::invalid_argument(std::string(scheme_name(params.scheme)) +
                                " parameters: " + bad.front());
  }
}

bool MapAssignment::maps(int flat, int subfile) const {
  const auto& m = mappers.at(static_cast<std::size_t>(subfile - 1));
  return std::binary_search(m.begin(), m.end(), flat);
}

int MapAssignment::reduce_owner(int key) const {
  for (std::size_t s = 0; s < reduce_keys.size(); ++s) {
    const auto& ks = reduce_keys[s];
    if (std::binary_search(ks.begin(), ks.end(), key)) {
      return static_cast<int>(s) + 1;
    }
  }
  throw std::out_of_range("assignment: key " + std::to_string(key) +
                          " reduced by no server");
}

std::vector<int> MapAssignment::subfiles_of(int flat) const {
  std::vector<int> mine;
  for (std::size_t f = 0; f < mappers.size(); ++f) {
    if (std::binary_search(mappers[f].begin(), mappers[f].end(), flat)) {
      mine.push_back(static_cast<int>(f) + 1);
    }
  }
  return mine;
}

namespace {

std::vector<std::vector<int>> reduce_blocks(const ClusterTopology& topo, int keys) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(topo.servers()));
  if (keys <= 0) return blocks;
  const int per_server = keys / topo.servers();
  for (int s = 1; s <= topo.servers(); ++s) {
    auto& b = blocks[static_cast<std::size_t>(s - 1)];
    b.resize(static_cast<std::size_t>(per_server));
    std::iota(b.begin(), b.end(), (s - 1) * per_server + 1);
  }
  return blocks;
}

}  // namespace

LayerGrouping LayerGrouping::canonical(const ClusterTopology& topo) {
  LayerGrouping g;
  g.slot.assign(static_cast<std::size_t>(topo.racks()),
                std::vector<int>(static_cast<std::size_t>(topo.servers_per_rack())));
  for (auto& per_rack : g.slot) {
    std::iota(per_rack.begin(), per_rack.end(), 1);
  }
  return g;
}

bool LayerGrouping::valid(const ClusterTopology& topo) const {
  if (static_cast<int>(slot.size()) != topo.racks()) return false;
  const int layers = topo.servers_per_rack();
  for (const auto& per_rack : slot) {
    if (static_cast<int>(per_rack.size()) != layers) return false;
    std::vector<bool> seen(static_cast<std::size_t>(layers), false);
    for (int s : per_rack) {
      if (s < 1 || s > layers || seen[static_cast<std::size_t>(s - 1)]) return false;
      seen[static_cast<std::size_t>(s - 1)] = true;
    }
  }
  return true;
}

int LayerGrouping::flat_of(const ClusterTopology& topo, int rack, int layer) const {
  return topo.flat_index(rack, slot.at(static_cast<std::size_t>(rack - 1))
                                   .at(static_cast<std::size_t>(layer - 1)));
}

int LayerGrouping::layer_of_flat(const ClusterTopology& topo, int flat) const {
  const ServerRef s = topo.server(flat);
  const auto& per_rack = slot.at(static_cast<std::size_t>(s.rack - 1));
  for (std::size_t i = 0; i < per_rack.size(); ++i) {
    if (per_rack[i] == s.slot) return static_cast<int>(i) + 1;
  }
  throw std::logic_error("grouping: slot not present");
}

LayerGrouping random_grouping(const ClusterTopology& topo, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LayerGrouping g = LayerGrouping::canonical(topo);
  for (auto& per_rack : g.slot) {
    shuffle_in_place(per_rack, rng);
  }
  return g;
}

MapAssignment assign_uncoded(const ClusterTopology& topo, const JobParams& params) {
  require_valid(topo, params, ValidationScope::Assignment);
  const int N = params.subfiles;
  const int per_server = N / topo.servers();

  MapAssignment a;
  a.scheme = Scheme::Uncoded;
  a.subfiles = N;
  a.keys = params.keys;
  a.replication = 1;
  a.mappers.resize(static_cast<std::size_t>(N));
  for (int f = 1; f <= N; ++f) {
    a.mappers[static_cast<std::size_t>(f - 1)] = {(f - 1) / per_server + 1};
  }
  a.reduce_keys = reduce_blocks(topo, params.keys);
  return a;
}

MapAssignment assign_coded(const ClusterTopology& topo, const JobParams& params) {
  require_valid(topo, params, ValidationScope::Assignment);
  const int N = params.subfiles;
  const int r = params.replication;
  const std::int64_t j = N / binomial(topo.servers(), r);

  MapAssignment a;
  a.scheme = Scheme::Coded;
  a.subfiles = N;
  a.keys = params.keys;
  a.replication = r;
  a.mappers.resize(static_cast<std::size_t>(N));
  std::int64_t next = 0;  // subfiles handed out so far
  for_each_combination(topo.servers(), r, [&](std::span<const int> subset) {
    for (std::int64_t i = 0; i < j; ++i, ++next) {
      a.mappers[static_cast<std::size_t>(next)].assign(subset.begin(), subset.end());
    }
  });
  a.reduce_keys = reduce_blocks(topo, params.keys);
  return a;
}

HybridAssignment assign_hybrid(const ClusterTopology& topo, const JobParams& params) {
  std::vector<int> identity(static_cast<std::size_t>(params.subfiles));
  std::iota(identity.begin(), identity.end(), 1);
  return assign_hybrid(topo, params, identity, LayerGrouping::canonical(topo));
}

HybridAssignment assign_hybrid(const ClusterTopology& topo, const JobParams& params,
                               const std::vector<int>& slot_subfile,
                               const LayerGrouping& grouping) {
  require_valid(topo, params, ValidationScope::Assignment);
  const int N = params.subfiles;
  const int P = topo.racks();
  const int r = params.replication;
  const int layers = topo.servers_per_rack();
  const int layer_size = N / layers;  // NP/K
  const int M = static_cast<int>(layer_size / binomial(P, r));

  if (static_cast<int>(slot_subfile.size()) != N) {
    throw std::invalid_argument("hybrid: permutation is not a bijection on [1,N]");
  }
  {
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    for (int f : slot_subfile) {
      if (f < 1 || f > N || seen[static_cast<std::size_t>(f - 1)]) {
        throw std::invalid_argument("hybrid: permutation is not a bijection on [1,N]");
      }
      seen[static_cast<std::size_t>(f - 1)] = true;
    }
  }
  if (!grouping.valid(topo)) {
    throw std::invalid_argument("hybrid: invalid layer grouping");
  }

  HybridAssignment a;
  a.scheme = Scheme::Hybrid;
  a.subfiles = N;
  a.keys = params.keys;
  a.replication = r;
  a.grouping = grouping;
  a.slot_subfile = slot_subfile;
  a.common_count = M;
  a.mappers.resize(static_cast<std::size_t>(N));
  a.layer_of.resize(static_cast<std::size_t>(N));
  a.subset_of.resize(static_cast<std::size_t>(N));
  a.within_of.resize(static_cast<std::size_t>(N));

  int pos = 0;  // structural position, 0-based
  for (int layer = 1; layer <= layers; ++layer) {
    for_each_combination(P, r, [&](std::span<const int> rack_subset) {
      for (int w = 1; w <= M; ++w, ++pos) {
        const int f = slot_subfile[static_cast<std::size_t>(pos)];
        auto& mapped = a.mappers[static_cast<std::size_t>(f - 1)];
        mapped.clear();
        for (int rack : rack_subset) {
          mapped.push_back(grouping.flat_of(topo, rack, layer));
        }
        std::sort(mapped.begin(), mapped.end());
        a.layer_of[static_cast<std::size_t>(f - 1)] = layer;
        a.subset_of[static_cast<std::size_t>(f - 1)].assign(rack_subset.begin(),
                                                            rack_subset.end());
        a.within_of[static_cast<std::size_t>(f - 1)] = w;
      }
    });
  }
  a.reduce_keys = reduce_blocks(topo, params.keys);
  return a;
}

int HybridAssignment::layer_subfile_count() const {
  const int layers =
      grouping.slot.empty() ? 1 : static_cast<int>(grouping.slot.front().size());
  return subfiles / layers;
}

std::vector<int> HybridAssignment::block_subfiles(int layer,
                                                  std::span<const int> rack_subset,
                                                  const ClusterTopology& topo) const {
  const int layers = topo.servers_per_rack();
  const int layer_size = subfiles / layers;
  const std::int64_t rank = combination_rank(rack_subset, topo.racks());
  const int base = (layer - 1) * layer_size +
                   static_cast<int>((rank - 1) * common_count);
  std::vector<int> block(static_cast<std::size_t>(common_count));
  for (int w = 0; w < common_count; ++w) {
    block[static_cast<std::size_t>(w)] = slot_subfile[static_cast<std::size_t>(base + w)];
  }
  return block;
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

void check_common(const ClusterTopology& topo, const MapAssignment& a,
                  const JobParams& params, ValidationReport& report) {
  const int K = topo.servers();
  const int N = params.subfiles;

  {
    CheckResult c{"subfile replication", true, ""};
    if (static_cast<int>(a.mappers.size()) != N) {
      c.pass = false;
      c.detail = "mapper table has " + std::to_string(a.mappers.size()) +
                 " subfiles, expected " + std::to_string(N);
    } else {
      for (int f = 1; f <= N && c.pass; ++f) {
        const auto& m = a.mappers[static_cast<std::size_t>(f - 1)];
        if (static_cast<int>(m.size()) != a.replication) {
          c.pass = false;
          c.detail = "subfile " + std::to_string(f) + " mapped by " +
                     std::to_string(m.size()) + " servers, expected " +
                     std::to_string(a.replication);
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"mapper servers distinct and in range", true, ""};
    for (int f = 1; f <= static_cast<int>(a.mappers.size()) && c.pass; ++f) {
      const auto& m = a.mappers[static_cast<std::size_t>(f - 1)];
      for (std::size_t i = 0; i < m.size() && c.pass; ++i) {
        if (m[i] < 1 || m[i] > K || (i > 0 && m[i] <= m[i - 1])) {
          c.pass = false;
          c.detail = "subfile " + std::to_string(f) + " has invalid mapper list";
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"reduce blocks partition keys", true, ""};
    const int Q = params.keys;
    if (static_cast<int>(a.reduce_keys.size()) != K) {
      c.pass = false;
      c.detail = "reduce table has wrong server count";
    } else if (Q > 0) {
      const int per_server = Q / K;
      for (int s = 1; s <= K && c.pass; ++s) {
        const auto& ks = a.reduce_keys[static_cast<std::size_t>(s - 1)];
        if (static_cast<int>(ks.size()) != per_server) {
          c.pass = false;
          c.detail = "server " + std::to_string(s) + " reduces " +
                     std::to_string(ks.size()) + " keys, expected " +
                     std::to_string(per_server);
          break;
        }
        for (std::size_t i = 0; i < ks.size(); ++i) {
          const int expect = (s - 1) * per_server + static_cast<int>(i) + 1;
          if (ks[i] != expect) {
            c.pass = false;
            c.detail = "server " + std::to_string(s) +
                       " keys are not the contiguous block starting at " +
                       std::to_string((s - 1) * per_server + 1);
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
}

void check_load(const ClusterTopology& topo, const MapAssignment& a,
                std::int64_t expected, ValidationReport& report) {
  CheckResult c{"per-server map load", true, ""};
  std::vector<std::int64_t> load(static_cast<std::size_t>(topo.servers()), 0);
  for (const auto& m : a.mappers) {
    for (int s : m) {
      if (s >= 1 && s <= topo.servers()) load[static_cast<std::size_t>(s - 1)]++;
    }
  }
  for (int s = 1; s <= topo.servers() && c.pass; ++s) {
    if (load[static_cast<std::size_t>(s - 1)] != expected) {
      c.pass = false;
      c.detail = "server " + std::to_string(s) + " maps " +
                 std::to_string(load[static_cast<std::size_t>(s - 1)]) +
                 " subfiles, expected " + std::to_string(expected);
    }
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

ValidationReport validate(const ClusterTopology& topo, const MapAssignment& a,
                          const JobParams& params) {
  ValidationReport report;
  check_common(topo, a, params, report);
  const int K = topo.servers();
  const int N = params.subfiles;

  if (a.scheme == Scheme::Uncoded) {
    check_load(topo, a, N / K, report);
  } else if (a.scheme == Scheme::Coded) {
    const int r = a.replication;
    const std::int64_t j = N / binomial(K, r);
    check_load(topo, a, binomial(K - 1, r - 1) * j, report);

    CheckResult c{"subset share counts", true, ""};
    std::map<std::vector<int>, std::int64_t> share;
    for (const auto& m : a.mappers) share[m]++;
    if (static_cast<std::int64_t>(share.size()) != binomial(K, r)) {
      c.pass = false;
      c.detail = "only " + std::to_string(share.size()) + " of " +
                 std::to_string(binomial(K, r)) + " r-subsets carry subfiles";
    } else {
      for (const auto& [subset, count] : share) {
        if (count != j) {
          c.pass = false;
          c.detail = "one subset carries " + std::to_string(count) +
                     " subfiles, expected J = " + std::to_string(j);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

ValidationReport validate(const ClusterTopology& topo, const HybridAssignment& a,
                          const JobParams& params) {
  ValidationReport report;
  check_common(topo, a, params, report);

  const int N = params.subfiles;
  const int P = topo.racks();
  const int r = a.replication;
  const int layers = topo.servers_per_rack();
  const int layer_size = N / layers;
  const int M = a.common_count;

  {
    CheckResult c{"layer sizes", true, ""};
    std::vector<int> count(static_cast<std::size_t>(layers), 0);
    for (int layer : a.layer_of) {
      if (layer < 1 || layer > layers) {
        c.pass = false;
        c.detail = "layer index out of range";
        break;
      }
      count[static_cast<std::size_t>(layer - 1)]++;
    }
    for (int l = 1; l <= layers && c.pass; ++l) {
      if (count[static_cast<std::size_t>(l - 1)] != layer_size) {
        c.pass = false;
        c.detail = "layer " + std::to_string(l) + " holds " +
                   std::to_string(count[static_cast<std::size_t>(l - 1)]) +
                   " subfiles, expected NP/K = " + std::to_string(layer_size);
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"slot sizes", true, ""};
    std::map<std::pair<int, std::vector<int>>, int> count;
    for (int f = 1; f <= N; ++f) {
      count[{a.layer_of[static_cast<std::size_t>(f - 1)],
             a.subset_of[static_cast<std::size_t>(f - 1)]}]++;
    }
    const std::int64_t expected_groups = layers * binomial(P, r);
    if (static_cast<std::int64_t>(count.size()) != expected_groups) {
      c.pass = false;
      c.detail = "found " + std::to_string(count.size()) +
                 " (layer, subset) blocks, expected " + std::to_string(expected_groups);
    } else {
      for (const auto& [slot, n] : count) {
        if (n != M) {
          c.pass = false;
          c.detail = "a (layer, subset) block holds " + std::to_string(n) +
                     " subfiles, expected M = " + std::to_string(M);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"structure mapping", true, ""};
    for (int f = 1; f <= N && c.pass; ++f) {
      std::vector<int> expect;
      for (int rack : a.subset_of[static_cast<std::size_t>(f - 1)]) {
        expect.push_back(a.grouping.flat_of(
            topo, rack, a.layer_of[static_cast<std::size_t>(f - 1)]));
      }
      std::sort(expect.begin(), expect.end());
      if (expect != a.mappers[static_cast<std::size_t>(f - 1)]) {
        c.pass = false;
        c.detail = "subfile " + std::to_string(f) +
                   " is not mapped at its layer's subset servers";
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"no common files in a rack", true, ""};
    for (int f = 1; f <= static_cast<int>(a.mappers.size()) && c.pass; ++f) {
      const auto& m = a.mappers[static_cast<std::size_t>(f - 1)];
      for (std::size_t i = 0; i + 1 < m.size() && c.pass; ++i) {
        for (std::size_t j2 = i + 1; j2 < m.size(); ++j2) {
          if (topo.same_rack(m[i], m[j2])) {
            c.pass = false;
            c.detail = "subfile " + std::to_string(f) + " mapped twice in rack " +
                       std::to_string(topo.rack_of(m[i]));
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  check_load(topo, a, binomial(P - 1, r - 1) * static_cast<std::int64_t>(M), report);
  return report;
}

namespace {

std::string csv_ints(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

void write_assignment(std::ostream& out, const MapAssignment& a) {
  for (int f = 1; f <= static_cast<int>(a.mappers.size()); ++f) {
    out << f << '\t' << 0 << '\t' << '-' << '\t' << 0 << '\t'
        << csv_ints(a.mappers[static_cast<std::size_t>(f - 1)]) << '\n';
  }
}

void write_assignment(std::ostream& out, const HybridAssignment& a) {
  for (int f = 1; f <= static_cast<int>(a.mappers.size()); ++f) {
    out << f << '\t' << a.layer_of[static_cast<std::size_t>(f - 1)] << '\t'
        << csv_ints(a.subset_of[static_cast<std::size_t>(f - 1)]) << '\t'
        << a.within_of[static_cast<std::size_t>(f - 1)] << '\t'
        << csv_ints(a.mappers[static_cast<std::size_t>(f - 1)]) << '\n';
  }
}

}  // namespace rackmr
