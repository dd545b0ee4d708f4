#include "rackmr/topology.hpp"

#include <stdexcept>

namespace rackmr {

std::string server_label(const ServerRef& s) {
  return "S_{" + std::to_string(s.rack) + "," + std::to_string(s.slot) + "}";
}

ClusterTopology::ClusterTopology(int servers, int racks)
    : servers_(servers), racks_(racks) {
  if (servers < 2) {
    throw std::invalid_argument("topology: server count must be at least 2");
  }
  if (racks < 1) {
    throw std::invalid_argument("topology: rack count must be positive");
  }
  if (servers % racks != 0) {
    throw std::invalid_argument("topology: P does not divide K");
  }
  per_rack_ = servers / racks;
}

void ClusterTopology::check_flat(int flat) const {
  if (flat < 1 || flat > servers_) {
    throw std::out_of_range("topology: flat index " + std::to_string(flat) +
                            " outside [1," + std::to_string(servers_) + "]");
  }
}

ServerRef ClusterTopology::server(int flat) const {
  check_flat(flat);
  ServerRef s;
  s.flat = flat;
  s.rack = (flat - 1) / per_rack_ + 1;
  s.slot = (flat - 1) % per_rack_ + 1;
  return s;
}

ServerRef ClusterTopology::server(int rack, int slot) const {
  return server(flat_index(rack, slot));
}

int ClusterTopology::flat_index(int rack, int slot) const {
  if (rack < 1 || rack > racks_) {
    throw std::out_of_range("topology: rack index " + std::to_string(rack) +
                            " outside [1," + std::to_string(racks_) + "]");
  }
  if (slot < 1 || slot > per_rack_) {
    throw std::out_of_range("topology: slot index " + std::to_string(slot) +
                            " outside [1," + std::to_string(per_rack_) + "]");
  }
  return (rack - 1) * per_rack_ + slot;
}

int ClusterTopology::rack_of(int flat) const {
  check_flat(flat);
  return (flat - 1) / per_rack_ + 1;
}

bool ClusterTopology::same_rack(int flat_a, int flat_b) const {
  return rack_of(flat_a) == rack_of(flat_b);
}

bool ClusterTopology::same_rack(const ServerRef& a, const ServerRef& b) const {
  return same_rack(a.flat, b.flat);
}

std::vector<ServerRef> ClusterTopology::layer_members(int layer) const {
  if (layer < 1 || layer > per_rack_) {
    throw std::out_of_range("topology: layer index " + std::to_string(layer) +
                            " outside [1," + std::to_string(per_rack_) + "]");
  }
  std::vector<ServerRef> members;
  members.reserve(static_cast<std::size_t>(racks_));
  for (int rack = 1; rack <= racks_; ++rack) {
    members.push_back(server(rack, layer));
  }
  return members;
}

std::vector<ServerRef> ClusterTopology::rack_members(int rack) const {
  if (rack < 1 || rack > racks_) {
    throw std::out_of_range("topology: rack index " + std::to_string(rack) +
                            " outside [1," + std::to_string(racks_) + "]");
  }
  std::vector<ServerRef> members;
  members.reserve(static_cast<std::size_t>(per_rack_));
  for (int slot = 1; slot <= per_rack_; ++slot) {
    members.push_back(server(rack, slot));
  }
  return members;
}

}  // namespace rackmr
