#include "slicesim/actors/transport.hpp"

#include <stdexcept>

namespace slicesim::actors {

void Fabric::send(Envelope env, sim::SimTime latency) {
  auto it = nodes_.find(env.to);
  if (it == nodes_.end()) {
    throw std::runtime_error("fabric: unknown node '" + env.to + "'");
  }
  NasNode* node = it->second;
  sim::SimTime at = loop_.now() + latency;
  loop_.schedule(at, "nas." + env.to,
                 [this, node, env = std::move(env), at]() {
                   if (trace_sink_) trace_sink_(at, env);
                   node->receive(env);
                 });
}

}  // namespace slicesim::actors
