#pragma once

#include <array>
#include <cstdint>

#include "nocpn/core.hpp"

namespace nocpn {

// One node's port congestion bits seen from outside: three ordered bits
// covering the cardinal ports minus one excluded port. Bit 2 (MSB) holds the
// first surviving port in canonical N, E, S, W order.
using PortCongestionBits = std::uint8_t;

// Directly observed output-port bits of a single node, indexed by dir_index.
// Off-mesh ports stay 0.
using LocalPortBits = std::array<std::uint8_t, kNumCardinals>;

// Slot (0 = MSB) of `port` within the group that excludes `excluded`.
int group_slot(Direction excluded, Direction port);

PortCongestionBits pack_group(const LocalPortBits& port_bits, Direction excluded);

std::uint8_t group_bit(PortCongestionBits group, Direction excluded, Direction port);

// A port is congested when strictly more than `threshold` of its VCs are
// occupied.
inline std::uint8_t encode_congestion_bit(int occupied_vcs, int threshold) {
  return occupied_vcs > threshold ? 1 : 0;
}

// The 9 free head-flit bits, most-significant first:
//   [sender ports minus send_dir : 3][1 hop upstream : 3][2 hops upstream : 3]
// Every group excludes the send direction, which is also the port each
// upstream node presents toward the receiver.
struct CongestionPayload {
  std::uint16_t bits = 0;

  PortCongestionBits sender_group() const { return bits >> 6; }
  PortCongestionBits hop1_group() const { return (bits >> 3) & 0x7; }
  PortCongestionBits hop2_group() const { return bits & 0x7; }

  static CongestionPayload make(PortCongestionBits sender, PortCongestionBits hop1,
                                PortCongestionBits hop2) {
    return {static_cast<std::uint16_t>((sender & 0x7) << 6 | (hop1 & 0x7) << 3 |
                                       (hop2 & 0x7))};
  }

  bool operator==(const CongestionPayload&) const = default;
};

// Per-router store: for each direction u and hop 1..3, the port bits of the
// node that many hops away in direction u, with the port facing back toward
// the owner (opposite(u)) excluded. Entries start 0 and are only ever
// overwritten by payloads; last write wins.
class CongestionTable {
 public:
  static constexpr int kMaxHops = 3;

  PortCongestionBits group(Direction u, int hop) const {
    assert(is_cardinal(u) && hop >= 1 && hop <= kMaxHops);
    return groups_[dir_index(u)][hop - 1];
  }

  void set_group(Direction u, int hop, PortCongestionBits g) {
    assert(is_cardinal(u) && hop >= 1 && hop <= kMaxHops);
    groups_[dir_index(u)][hop - 1] = g & 0x7;
  }

  // Stored bit of `port` at the node `hop` hops away in direction u.
  // Querying port == opposite(u) is a routing-logic bug: that bit is not
  // stored.
  std::uint8_t port_bit(Direction u, int hop, Direction port) const {
    return group_bit(group(u, hop), opposite(u), port);
  }

  void clear() { groups_ = {}; }

  bool operator==(const CongestionTable&) const = default;

 private:
  std::array<std::array<PortCongestionBits, kMaxHops>, kNumCardinals> groups_{};
};

// Payload stamped onto a head flit leaving on send_dir: the sender's own port
// bits plus the two table entries looking back along opposite(send_dir).
// Off-mesh upstream nodes contribute all-zero groups via never-written table
// entries.
CongestionPayload build_payload(const LocalPortBits& local_bits,
                                const CongestionTable& table, Direction send_dir);

// Table update on head-flit arrival; arrival_dir is the input port, i.e. the
// direction from the receiver toward the sender.
void apply_payload(CongestionTable& table, CongestionPayload payload,
                   Direction arrival_dir);

}  // namespace nocpn
