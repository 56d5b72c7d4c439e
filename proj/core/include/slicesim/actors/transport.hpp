#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "slicesim/keys/algorithms.hpp"
#include "slicesim/nas/security.hpp"
#include "slicesim/sim/event_loop.hpp"

namespace slicesim::actors {

/// Pre-security NAS message on the wire: raw plaintext octets.
struct PlainPdu {
  Bytes octets;
};

using TransportUnit = std::variant<PlainPdu, nas::SecuredPdu>;

/// One NAS transfer between adjacent nodes. `ue_id` names the radio-link
/// context the message belongs to, so relays can route downlink traffic
/// without understanding the payload.
struct Envelope {
  std::string from;
  std::string to;
  std::string ue_id;
  keys::Direction direction = keys::Direction::Uplink;
  TransportUnit unit;
};

class NasNode {
 public:
  virtual ~NasNode() = default;
  virtual void receive(const Envelope& env) = 0;
  virtual const std::string& node_id() const = 0;
};

/// Message fabric between actors: fixed per-hop latency, delivery via the
/// event loop. Hop latencies are constant so a manipulated flow keeps the
/// timing shape of a benign one.
class Fabric {
 public:
  explicit Fabric(sim::EventLoop& loop) : loop_(loop) {}

  void register_node(NasNode& node) { nodes_[node.node_id()] = &node; }

  /// Schedules delivery after the radio hop (UE <-> gNB).
  void send_radio(Envelope env) { send(std::move(env), radio_latency_); }

  /// Schedules delivery after the backhaul hop (gNB <-> AMF).
  void send_backhaul(Envelope env) { send(std::move(env), backhaul_latency_); }

  /// Optional tap invoked at delivery time with the envelope, for PDU
  /// hex-dump trace logs.
  void set_trace_sink(std::function<void(sim::SimTime, const Envelope&)> sink) {
    trace_sink_ = std::move(sink);
  }

  sim::EventLoop& loop() { return loop_; }

 private:
  void send(Envelope env, sim::SimTime latency);

  sim::EventLoop& loop_;
  std::map<std::string, NasNode*> nodes_;
  sim::SimTime radio_latency_ = 2'000;     // 2 ms
  sim::SimTime backhaul_latency_ = 3'000;  // 3 ms
  std::function<void(sim::SimTime, const Envelope&)> trace_sink_;
};

}  // namespace slicesim::actors
