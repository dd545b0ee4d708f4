#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rackmr/topology.hpp"

namespace rackmr {

enum class Scheme { Uncoded, Coded, Hybrid };

const char* scheme_name(Scheme s);

struct JobParams {
  int subfiles = 0;     // N
  int keys = 0;         // Q
  int replication = 1;  // r (map task replication factor)
  Scheme scheme = Scheme::Uncoded;
};

// The structural divisibility conditions are needed to build an
// assignment at all; the shuffle adds the per-round split conditions
// (r | J, r | M) and the key conditions.
enum class ValidationScope { Assignment, Shuffle };

std::vector<std::string> violated_conditions(const ClusterTopology& topo,
                                             const JobParams& params,
                                             ValidationScope scope);
void require_valid(const ClusterTopology& topo, const JobParams& params,
                   ValidationScope scope);

// Map-task assignment common to all schemes: which servers run the Map
// task of each subfile, and which keys each server reduces. Reduce keys
// are contiguous blocks of Q/K in flat-index order, so a rack reduces one
// contiguous block of Q/P keys.
struct MapAssignment {
  Scheme scheme = Scheme::Uncoded;
  int subfiles = 0;
  int keys = 0;
  int replication = 1;

  std::vector<std::vector<int>> mappers;      // [subfile-1] -> sorted flat ids
  std::vector<std::vector<int>> reduce_keys;  // [flat-1] -> sorted key ids

  bool maps(int flat, int subfile) const;
  int reduce_owner(int key) const;            // flat id of the reducing server
  std::vector<int> subfiles_of(int flat) const;
};

// Which within-rack slot plays layer i in each rack. The canonical
// grouping is slot(t, i) = i, i.e. the paper's layers; the locality
// optimizer searches over the other choices.
struct LayerGrouping {
  std::vector<std::vector<int>> slot;  // [rack-1][layer-1] -> slot (1-based)

  static LayerGrouping canonical(const ClusterTopology& topo);
  bool valid(const ClusterTopology& topo) const;
  int flat_of(const ClusterTopology& topo, int rack, int layer) const;
  // layer whose group contains this server, under this grouping
  int layer_of_flat(const ClusterTopology& topo, int flat) const;
};

LayerGrouping random_grouping(const ClusterTopology& topo, std::uint64_t seed);

// Hybrid scheme assignment. Structural position p in [1,N] factors as
// (layer, r-subset of racks in lexicographic order, w in [1,M]); the
// permutation slot_subfile says which subfile id occupies each position.
struct HybridAssignment : MapAssignment {
  LayerGrouping grouping;
  std::vector<int> slot_subfile;           // [position-1] -> subfile id
  std::vector<int> layer_of;               // [subfile-1] -> layer
  std::vector<std::vector<int>> subset_of; // [subfile-1] -> sorted rack ids
  std::vector<int> within_of;              // [subfile-1] -> w in [1,M]
  int common_count = 0;                    // M = (NP/K)/C(P,r)

  int layer_subfile_count() const;         // NP/K
  // subfile ids of one (layer, rack-subset) block, ascending w
  std::vector<int> block_subfiles(int layer, std::span<const int> rack_subset,
                                  const ClusterTopology& topo) const;
};

MapAssignment assign_uncoded(const ClusterTopology& topo, const JobParams& params);
MapAssignment assign_coded(const ClusterTopology& topo, const JobParams& params);
HybridAssignment assign_hybrid(const ClusterTopology& topo, const JobParams& params);
HybridAssignment assign_hybrid(const ClusterTopology& topo, const JobParams& params,
                               const std::vector<int>& slot_subfile,
                               const LayerGrouping& grouping);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

ValidationReport validate(const ClusterTopology& topo, const MapAssignment& a,
                          const JobParams& params);
ValidationReport validate(const ClusterTopology& topo, const HybridAssignment& a,
                          const JobParams& params);

// Line format: subfile<TAB>layer<TAB>subset(csv of rack ids)<TAB>w<TAB>servers(csv
// of flat ids). Uncoded/coded assignments carry no layer structure and
// write 0/-/0 in those columns.
void write_assignment(std::ostream& out, const MapAssignment& a);
void write_assignment(std::ostream& out, const HybridAssignment& a);

}  // namespace rackmr
