#include "slicesim/nas/codec.hpp"

#include <algorithm>

namespace slicesim::nas {

namespace {

enum FieldTag : std::uint8_t {
  kTagSupi = 0x01,
  kTagSuci = 0x02,
  kTagRequestedNssai = 0x03,
  kTagAutn = 0x04,
  kTagAbba = 0x05,
  kTagIntegrityAid = 0x06,
  kTagCipherEid = 0x07,
  kTagEmbeddedRequest = 0x08,
  kTagAllowedNssai = 0x09,
  kTagRejectedNssai = 0x0A,
};

bool tag_allowed(MessageKind kind, std::uint8_t tag) {
  switch (kind) {
    case MessageKind::RegistrationRequest:
      return tag == kTagSupi || tag == kTagSuci || tag == kTagRequestedNssai;
    case MessageKind::AuthenticationRequest:
      return tag == kTagAutn || tag == kTagAbba;
    case MessageKind::SecurityModeCommand:
      return tag == kTagIntegrityAid || tag == kTagCipherEid;
    case MessageKind::SecurityModeComplete:
      return tag == kTagEmbeddedRequest;
    case MessageKind::RegistrationAccept:
      return tag == kTagAllowedNssai || tag == kTagRejectedNssai;
  }
  return false;
}

Bytes encode_snssai_list(const std::vector<Snssai>& list) {
  Bytes out;
  if (list.size() > 255) {
    throw CodecError(CodecError::Kind::InvalidMessage,
                     "S-NSSAI list longer than 255 entries");
  }
  out.push_back(static_cast<std::uint8_t>(list.size()));
  for (const auto& s : list) {
    out.push_back(s.sd ? 4 : 1);
    out.push_back(s.sst);
    if (s.sd) put_u24_be(out, *s.sd);
  }
  return out;
}

void put_field(Bytes& out, std::uint8_t tag, BytesView value) {
  if (value.size() > 255) {
    throw CodecError(CodecError::Kind::InvalidMessage,
                     "field value longer than 255 octets");
  }
  out.push_back(tag);
  out.push_back(static_cast<std::uint8_t>(value.size()));
  append(out, value);
}

class Reader {
 public:
  explicit Reader(BytesView data) : data_(data) {}

  bool done() const { return pos_ == data_.size(); }

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  BytesView take(std::size_t n) {
    need(n);
    BytesView v = data_.subspan(pos_, n);
    pos_ += n;
    return v;
  }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size()) {
      throw CodecError(CodecError::Kind::Truncated,
                       "input ends mid-field at offset " +
                           std::to_string(pos_));
    }
  }

  BytesView data_;
  std::size_t pos_ = 0;
};

std::vector<Snssai> decode_snssai_list(BytesView value) {
  Reader r(value);
  std::uint8_t count = r.u8();
  std::vector<Snssai> out;
  out.reserve(count);
  for (std::uint8_t i = 0; i < count; ++i) {
    std::uint8_t entry_len = r.u8();
    if (entry_len != 1 && entry_len != 4) {
      throw CodecError(CodecError::Kind::InvalidMessage,
                       "S-NSSAI entry length must be 1 or 4");
    }
    BytesView entry = r.take(entry_len);
    Snssai s;
    s.sst = entry[0];
    if (entry_len == 4) s.sd = read_u24_be(entry, 1);
    out.push_back(s);
  }
  if (!r.done()) {
    throw CodecError(CodecError::Kind::InvalidMessage,
                     "trailing octets after S-NSSAI list");
  }
  return out;
}

}  // namespace

Bytes encode_requested_nssai_field(const std::vector<Snssai>& list) {
  Bytes out;
  put_field(out, kTagRequestedNssai, encode_snssai_list(list));
  return out;
}

Bytes encode(const NasMessage& msg) {
  auto errs = msg.validate();
  if (!errs.empty()) {
    throw CodecError(CodecError::Kind::InvalidMessage, errs.front());
  }

  Bytes out;
  out.push_back(static_cast<std::uint8_t>(msg.kind));
  if (msg.supi) put_field(out, kTagSupi, to_bytes(*msg.supi));
  if (msg.suci) put_field(out, kTagSuci, *msg.suci);
  if (msg.requested_nssai) {
    put_field(out, kTagRequestedNssai, encode_snssai_list(*msg.requested_nssai));
  }
  if (msg.autn) put_field(out, kTagAutn, *msg.autn);
  if (msg.abba) put_field(out, kTagAbba, *msg.abba);
  if (msg.selected_integrity_aid) {
    put_field(out, kTagIntegrityAid, Bytes{*msg.selected_integrity_aid});
  }
  if (msg.selected_cipher_eid) {
    put_field(out, kTagCipherEid, Bytes{*msg.selected_cipher_eid});
  }
  if (msg.embedded_request) {
    put_field(out, kTagEmbeddedRequest, encode(**msg.embedded_request));
  }
  if (msg.allowed_nssai) {
    put_field(out, kTagAllowedNssai, encode_snssai_list(*msg.allowed_nssai));
  }
  if (msg.rejected_nssai) {
    put_field(out, kTagRejectedNssai, encode_snssai_list(*msg.rejected_nssai));
  }
  return out;
}

NasMessage decode(BytesView octets) {
  Reader r(octets);
  std::uint8_t kind_octet = r.u8();
  if (kind_octet < 1 || kind_octet > 5) {
    throw CodecError(CodecError::Kind::UnknownTag,
                     "unknown message kind " + std::to_string(kind_octet));
  }
  NasMessage msg;
  msg.kind = static_cast<MessageKind>(kind_octet);

  bool seen[256] = {};
  while (!r.done()) {
    std::uint8_t tag = r.u8();
    if (tag < kTagSupi || tag > kTagRejectedNssai) {
      throw CodecError(CodecError::Kind::UnknownTag,
                       "unknown field tag " + std::to_string(tag));
    }
    if (!tag_allowed(msg.kind, tag)) {
      throw CodecError(CodecError::Kind::KindFieldMismatch,
                       std::string("field tag ") + std::to_string(tag) +
                           " not valid in " + message_kind_name(msg.kind));
    }
    if (seen[tag]) {
      throw CodecError(CodecError::Kind::DuplicateField,
                       "duplicate field tag " + std::to_string(tag));
    }
    seen[tag] = true;
    std::uint8_t len = r.u8();
    BytesView value = r.take(len);

    switch (tag) {
      case kTagSupi:
        msg.supi = std::string(value.begin(), value.end());
        break;
      case kTagSuci:
        msg.suci = Bytes(value.begin(), value.end());
        break;
      case kTagRequestedNssai:
        msg.requested_nssai = decode_snssai_list(value);
        break;
      case kTagAutn:
        msg.autn = Bytes(value.begin(), value.end());
        break;
      case kTagAbba:
        msg.abba = Bytes(value.begin(), value.end());
        break;
      case kTagIntegrityAid:
        if (value.size() != 1) {
          throw CodecError(CodecError::Kind::InvalidMessage,
                           "integrity aid must be one octet");
        }
        msg.selected_integrity_aid = value[0];
        break;
      case kTagCipherEid:
        if (value.size() != 1) {
          throw CodecError(CodecError::Kind::InvalidMessage,
                           "cipher eid must be one octet");
        }
        msg.selected_cipher_eid = value[0];
        break;
      case kTagEmbeddedRequest:
        msg.embedded_request = MessageBox(decode(value));
        break;
      case kTagAllowedNssai:
        msg.allowed_nssai = decode_snssai_list(value);
        break;
      case kTagRejectedNssai:
        msg.rejected_nssai = decode_snssai_list(value);
        break;
      default:
        break;
    }
  }

  auto errs = msg.validate();
  if (!errs.empty()) {
    throw CodecError(CodecError::Kind::InvalidMessage, errs.front());
  }
  return msg;
}

}  // namespace slicesim::nas
