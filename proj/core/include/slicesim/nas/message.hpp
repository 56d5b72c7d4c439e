#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slicesim/common/bytes.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::nas {

enum class MessageKind : std::uint8_t {
  RegistrationRequest = 1,
  AuthenticationRequest = 2,
  SecurityModeCommand = 3,
  SecurityModeComplete = 4,
  RegistrationAccept = 5,
};

const char* message_kind_name(MessageKind k);

struct NasMessage;

/// Value-semantic heap cell for the one legal nesting level (the
/// REGISTRATION REQUEST re-sent inside SECURITY MODE COMPLETE).
class MessageBox {
 public:
  MessageBox();
  explicit MessageBox(NasMessage m);
  MessageBox(const MessageBox& other);
  MessageBox(MessageBox&&) noexcept = default;
  MessageBox& operator=(const MessageBox& other);
  MessageBox& operator=(MessageBox&&) noexcept = default;
  ~MessageBox();

  NasMessage& operator*() { return *ptr_; }
  const NasMessage& operator*() const { return *ptr_; }
  NasMessage* operator->() { return ptr_.get(); }
  const NasMessage* operator->() const { return ptr_.get(); }

  friend bool operator==(const MessageBox& a, const MessageBox& b);

 private:
  std::unique_ptr<NasMessage> ptr_;
};

/// One NAS message of the registration flow. Fields are optional and only a
/// kind-dependent subset may be present; validate() checks the rules the
/// codec enforces.
struct NasMessage {
  MessageKind kind = MessageKind::RegistrationRequest;

  // RegistrationRequest
  std::optional<std::string> supi;  // 15-digit identifier, sent in clear
  std::optional<Bytes> suci;        // concealed identifier, opaque octets
  std::optional<std::vector<Snssai>> requested_nssai;

  // AuthenticationRequest
  std::optional<Bytes> autn;  // 16 octets
  std::optional<Bytes> abba;  // 2 octets

  // SecurityModeCommand
  std::optional<std::uint8_t> selected_integrity_aid;  // 4-bit code point
  std::optional<std::uint8_t> selected_cipher_eid;     // 4-bit code point

  // SecurityModeComplete
  std::optional<MessageBox> embedded_request;

  // RegistrationAccept
  std::optional<std::vector<Snssai>> allowed_nssai;
  std::optional<std::vector<Snssai>> rejected_nssai;

  /// Empty when the message satisfies its kind invariants; otherwise one
  /// line per violation.
  std::vector<std::string> validate() const;

  friend bool operator==(const NasMessage&, const NasMessage&) = default;
};

NasMessage make_registration_request(std::optional<std::string> supi,
                                     std::optional<Bytes> suci,
                                     std::optional<std::vector<Snssai>> nssai);
NasMessage make_authentication_request(Bytes autn, Bytes abba);
NasMessage make_security_mode_command(std::uint8_t integrity_aid,
                                      std::uint8_t cipher_eid);
NasMessage make_security_mode_complete(NasMessage embedded);
NasMessage make_registration_accept(std::vector<Snssai> allowed,
                                    std::vector<Snssai> rejected);

}  // namespace slicesim::nas
