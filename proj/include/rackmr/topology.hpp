#pragma once

#include <string>
#include <vector>

namespace rackmr {

// One server addressed both ways: by (rack, slot) and by its flattened
// index (rack-1)*(K/P) + slot. All indices are 1-based.
struct ServerRef {
  int rack = 0;
  int slot = 0;
  int flat = 0;

  friend bool operator==(const ServerRef&, const ServerRef&) = default;
};

std::string server_label(const ServerRef& s);  // "S_{i,j}"

// K servers split evenly over P racks. Servers with the same within-rack
// slot form a layer (one member per rack). Immutable after construction
// and safe to share across threads.
class ClusterTopology {
 public:
  ClusterTopology(int servers, int racks);

  int servers() const { return servers_; }          // K
  int racks() const { return racks_; }              // P
  int servers_per_rack() const { return per_rack_; }  // K/P

  ServerRef server(int flat) const;
  ServerRef server(int rack, int slot) const;
  int flat_index(int rack, int slot) const;
  int rack_of(int flat) const;

  bool same_rack(int flat_a, int flat_b) const;
  bool same_rack(const ServerRef& a, const ServerRef& b) const;

  std::vector<ServerRef> layer_members(int layer) const;
  std::vector<ServerRef> rack_members(int rack) const;

 private:
  void check_flat(int flat) const;

  int servers_ = 0;
  int racks_ = 0;
  int per_rack_ = 0;
};

}  // namespace rackmr
