#pragma once

#include <string>
#include <vector>

#include "slicesim/keys/chain.hpp"

namespace slicesim::harness {

/// Parameters for the key-derivation debug command, parsed from a
/// line-oriented key=value file: ck/ik/autn/abba in hex, snn and supi as
/// text, aid as an integer code point, mode = network | attacker. In
/// attacker mode, `observed` lists which of snn/autn/supi/abba/aid the
/// attacker saw, and absent parameters block their chain step.
struct KeyToolParams {
  Bytes ck;
  Bytes ik;
  std::optional<std::string> snn;
  std::optional<std::string> supi;
  std::optional<Bytes> abba;
  std::optional<keys::IntegrityAlg> aid;
  std::optional<Bytes> autn;
  bool attacker_mode = false;
};

KeyToolParams parse_keytool_params(const std::string& path);

/// The printed chain: one line per key with its FC label, stopping at the
/// first blocked step in attacker mode.
std::vector<std::string> derive_key_report(const KeyToolParams& params);

}  // namespace slicesim::harness
