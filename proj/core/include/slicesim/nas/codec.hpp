#pragma once

#include <stdexcept>

#include "slicesim/nas/message.hpp"

namespace slicesim::nas {

class CodecError : public std::runtime_error {
 public:
  enum class Kind {
    Truncated,
    UnknownTag,
    DuplicateField,
    KindFieldMismatch,
    InvalidMessage,
  };
  CodecError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Wire format (artifact-defined TLV, not 3GPP bit layout):
//   octet 0          message kind
//   per field        tag octet, length octet, value octets
// S-NSSAI value      sst octet [+ 3 SD octets big-endian]
// list field value   count octet, then per entry: entry-length octet (1 or
//                    4), entry value. The entry-length octet makes mixed
//                    SD-present/SD-absent lists decodable.
// Fields are emitted in ascending tag order; decode accepts any order but
// rejects duplicates and fields foreign to the message kind.

/// Throws CodecError{InvalidMessage} when msg violates its kind invariants.
Bytes encode(const NasMessage& msg);

/// Inverse of encode on its image; throws CodecError otherwise.
NasMessage decode(BytesView octets);

/// Encoded octets of one requested_nssai field (tag, length, value) as it
/// appears inside an encoded RegistrationRequest. Used by the keystream
/// leak checks.
Bytes encode_requested_nssai_field(const std::vector<Snssai>& list);

}  // namespace slicesim::nas
