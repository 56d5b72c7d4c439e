#pragma once

#include <optional>
#include <string>

#include "slicesim/common/bytes.hpp"

namespace slicesim {

/// Lowercase hex without separators, e.g. "0a1b2c".
std::string to_hex(BytesView data);

/// Lowercase hex with one space between octets ("0a 1b 2c"); the form used
/// by PDU trace logs.
std::string to_hex_spaced(BytesView data);

/// Parses plain hex (no separators, even length). Empty input gives empty
/// bytes; invalid digits give nullopt.
std::optional<Bytes> from_hex(const std::string& s);

}  // namespace slicesim
