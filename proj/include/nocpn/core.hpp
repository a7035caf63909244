#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nocpn {

using Cycle = std::int64_t;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when credit accounting or buffer bounds are violated; indicates a
// flow-control bug, never an expected runtime condition.
class FlowControlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mesh ports in canonical order N, E, S, W plus the injection/ejection port.
enum class Direction : std::uint8_t { N = 0, E = 1, S = 2, W = 3, Local = 4 };

constexpr int kNumCardinals = 4;
constexpr int kNumPorts = 5;  // four mesh ports + local
constexpr std::array<Direction, kNumCardinals> kCardinals = {
    Direction::N, Direction::E, Direction::S, Direction::W};

constexpr int dir_index(Direction d) { return static_cast<int>(d); }

constexpr bool is_cardinal(Direction d) { return d != Direction::Local; }

inline Direction opposite(Direction d) {
  switch (d) {
    case Direction::N: return Direction::S;
    case Direction::E: return Direction::W;
    case Direction::S: return Direction::N;
    case Direction::W: return Direction::E;
    default: break;
  }
  assert(!"opposite() is undefined for the local port");
  return Direction::Local;
}

const char* dir_name(Direction d);

// Position on a k x k mesh; x is the column, y is the row, N increases y.
struct Coord {
  int x = 0;
  int y = 0;

  bool operator==(const Coord&) const = default;
};

inline int manhattan_distance(Coord a, Coord b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Adjacent coordinate in direction d, or nothing at a mesh edge.
struct MaybeCoord {
  Coord coord;
  bool valid = false;
};

inline MaybeCoord neighbor(Coord c, Direction d, int k) {
  assert(is_cardinal(d));
  Coord n = c;
  switch (d) {
    case Direction::N: n.y += 1; break;
    case Direction::E: n.x += 1; break;
    case Direction::S: n.y -= 1; break;
    case Direction::W: n.x -= 1; break;
    default: break;
  }
  bool ok = n.x >= 0 && n.x < k && n.y >= 0 && n.y < k;
  return {n, ok};
}

// Minimal (productive) directions toward dst, in canonical order.
// Empty when cur == dst; at most one X and one Y direction otherwise.
struct DirSet {
  std::array<Direction, 2> dirs = {Direction::Local, Direction::Local};
  int count = 0;

  void add(Direction d) {
    assert(count < 2);
    dirs[count++] = d;
  }
  bool contains(Direction d) const {
    return (count > 0 && dirs[0] == d) || (count > 1 && dirs[1] == d);
  }
};

DirSet productive_directions(Coord cur, Coord dst);

enum class RoutingAlgorithm : std::uint8_t { kDor, kLocal, kNocpn, kDbar };
enum class TrafficPattern : std::uint8_t {
  kUniform,
  kTranspose,
  kBitComp,
  kBitRev,
  kShuffle
};

const char* algorithm_name(RoutingAlgorithm a);
const char* pattern_name(TrafficPattern p);
RoutingAlgorithm algorithm_from_string(const std::string& s);
TrafficPattern pattern_from_string(const std::string& s);

// Bit-permutation destinations need node ids with a whole number of bits per
// dimension.
bool pattern_requires_pow2(TrafficPattern p);

struct SimConfig {
  int k = 8;                 // nodes per dimension
  int vcs_per_port = 8;      // VC 0 is the escape channel
  int buffer_depth_flits = 5;
  int min_packet_flits = 1;
  int max_packet_flits = 6;
  int router_delay_cycles = 2;
  int link_delay_cycles = 1;
  Cycle warmup_cycles = 10000;
  Cycle measure_cycles = 50000;
  Cycle drain_limit_cycles = 100000;
  std::uint64_t rng_seed = 1;
  RoutingAlgorithm routing_algorithm = RoutingAlgorithm::kNocpn;
  TrafficPattern traffic_pattern = TrafficPattern::kUniform;
  double injection_rate = 0.1;    // flits/node/cycle
  int congestion_threshold = 4;   // port bit is 1 when occupied VCs exceed this

  int num_nodes() const { return k * k; }
  double mean_packet_flits() const {
    return 0.5 * (min_packet_flits + max_packet_flits);
  }

  // Throws ConfigError naming the offending field.
  void validate() const;
};

enum class FlitKind : std::uint8_t { kHead, kBody, kTail, kHeadTail };

// Atomic transfer unit. Body and tail flits keep src/dst for bookkeeping but
// routers never consult them; they follow the head's VC.
struct Flit {
  FlitKind kind = FlitKind::kHead;
  std::uint64_t packet_id = 0;
  Coord src;
  Coord dst;
  std::uint16_t payload = 0;  // 9-bit congestion payload, head flits only
  Cycle birth_cycle = 0;
  int vc = -1;                // set at VC allocation
  int hops = 0;               // links traversed so far
};

inline bool is_head(const Flit& f) {
  return f.kind == FlitKind::kHead || f.kind == FlitKind::kHeadTail;
}
inline bool is_tail(const Flit& f) {
  return f.kind == FlitKind::kTail || f.kind == FlitKind::kHeadTail;
}

struct Packet {
  std::uint64_t packet_id = 0;
  Coord src;
  Coord dst;
  int length_flits = 1;
  Cycle birth_cycle = 0;
  Cycle delivery_cycle = -1;  // set when the tail ejects
};

// Flit kind at position idx of a length-n packet.
inline FlitKind flit_kind_at(int idx, int n) {
  assert(idx >= 0 && idx < n);
  if (n == 1) return FlitKind::kHeadTail;
  if (idx == 0) return FlitKind::kHead;
  return idx == n - 1 ? FlitKind::kTail : FlitKind::kBody;
}

}  // namespace nocpn
