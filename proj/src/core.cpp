#include "nocpn/core.hpp"

namespace nocpn {

const char* dir_name(Direction d) {
  switch (d) {
    case Direction::N: return "N";
    case Direction::E: return "E";
    case Direction::S: return "S";
    case Direction::W: return "W";
    case Direction::Local: return "local";
  }
  return "?";
}

DirSet productive_directions(Coord cur, Coord dst) {
  DirSet set;
  // Canonical order: the Y direction (N) sorts before E, S before W.
  if (dst.y > cur.y) set.add(Direction::N);
  if (dst.x > cur.x) set.add(Direction::E);
  if (dst.y < cur.y) set.add(Direction::S);
  if (dst.x < cur.x) set.add(Direction::W);
  return set;
}

const char* algorithm_name(RoutingAlgorithm a) {
  switch (a) {
    case RoutingAlgorithm::kDor: return "dor";
    case RoutingAlgorithm::kLocal: return "local";
    case RoutingAlgorithm::kNocpn: return "nocpn";
    case RoutingAlgorithm::kDbar: return "dbar";
  }
  return "?";
}

const char* pattern_name(TrafficPattern p) {
  switch (p) {
    case TrafficPattern::kUniform: return "uniform";
    case TrafficPattern::kTranspose: return "transpose";
    case TrafficPattern::kBitComp: return "bitcomp";
    case TrafficPattern::kBitRev: return "bitrev";
    case TrafficPattern::kShuffle: return "shuffle";
  }
  return "?";
}

RoutingAlgorithm algorithm_from_string(const std::string& s) {
  if (s == "dor") return RoutingAlgorithm::kDor;
  if (s == "local") return RoutingAlgorithm::kLocal;
  if (s == "nocpn") return RoutingAlgorithm::kNocpn;
  if (s == "dbar") return RoutingAlgorithm::kDbar;
  throw ConfigError("unknown routing algorithm: " + s);
}

TrafficPattern pattern_from_string(const std::string& s) {
  if (s == "uniform") return TrafficPattern::kUniform;
  if (s == "transpose") return TrafficPattern::kTranspose;
  if (s == "bitcomp") return TrafficPattern::kBitComp;
  if (s == "bitrev") return TrafficPattern::kBitRev;
  if (s == "shuffle") return TrafficPattern::kShuffle;
  throw ConfigError("unknown traffic pattern: " + s);
}

bool pattern_requires_pow2(TrafficPattern p) {
  return p != TrafficPattern::kUniform;
}

namespace {
bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }
}  // namespace

void SimConfig::validate() const {
  if (k < 2) throw ConfigError("k: mesh radix must be at least 2");
  if (vcs_per_port < 2)
    throw ConfigError("vcs: need at least 2 VCs (one escape + one adaptive)");
  if (buffer_depth_flits < 1) throw ConfigError("buf: buffer depth must be positive");
  if (min_packet_flits < 1 || min_packet_flits > max_packet_flits)
    throw ConfigError("packet length bounds: need 1 <= min <= max");
  if (!(injection_rate > 0.0) || injection_rate > 1.0)
    throw ConfigError("rate: injection rate must be in (0, 1]");
  if (congestion_threshold < 0 || congestion_threshold >= vcs_per_port)
    throw ConfigError("threshold: congestion threshold must be below the VC count");
  // The router pipeline has two stages (route/VC-alloc, switch-alloc/traversal);
  // extra router delay stretches the first stage.
  if (router_delay_cycles < 2)
    throw ConfigError("router-delay: must be at least 2 cycles");
  if (link_delay_cycles < 1) throw ConfigError("link-delay: must be at least 1 cycle");
  if (warmup_cycles < 0 || measure_cycles < 0 || drain_limit_cycles < 0)
    throw ConfigError("cycle windows must be non-negative");
  if (pattern_requires_pow2(traffic_pattern) && !is_pow2(k))
    throw ConfigError(std::string("pattern: ") + pattern_name(traffic_pattern) +
                      " requires a power-of-two k, got k=" + std::to_string(k));
}

}  // namespace nocpn
