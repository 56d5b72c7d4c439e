#include "slicesim/nas/message.hpp"

namespace slicesim::nas {

const char* message_kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::RegistrationRequest:
      return "RegistrationRequest";
    case MessageKind::AuthenticationRequest:
      return "AuthenticationRequest";
    case MessageKind::SecurityModeCommand:
      return "SecurityModeCommand";
    case MessageKind::SecurityModeComplete:
      return "SecurityModeComplete";
    case MessageKind::RegistrationAccept:
      return "RegistrationAccept";
  }
  return "?";
}

MessageBox::MessageBox() : ptr_(std::make_unique<NasMessage>()) {}
MessageBox::MessageBox(NasMessage m)
    : ptr_(std::make_unique<NasMessage>(std::move(m))) {}
MessageBox::MessageBox(const MessageBox& other)
    : ptr_(std::make_unique<NasMessage>(*other.ptr_)) {}
MessageBox& MessageBox::operator=(const MessageBox& other) {
  if (this != &other) ptr_ = std::make_unique<NasMessage>(*other.ptr_);
  return *this;
}
MessageBox::~MessageBox() = default;

bool operator==(const MessageBox& a, const MessageBox& b) {
  return *a.ptr_ == *b.ptr_;
}

namespace {

void check_absent(std::vector<std::string>& errs, bool present,
                  const char* field, MessageKind kind) {
  if (present) {
    errs.push_back(std::string(field) + " not allowed in " +
                   message_kind_name(kind));
  }
}

}  // namespace

std::vector<std::string> NasMessage::validate() const {
  std::vector<std::string> errs;
  const MessageKind k = kind;

  if (k != MessageKind::RegistrationRequest) {
    check_absent(errs, supi.has_value(), "supi", k);
    check_absent(errs, suci.has_value(), "suci", k);
    check_absent(errs, requested_nssai.has_value(), "requested_nssai", k);
  }
  if (k != MessageKind::AuthenticationRequest) {
    check_absent(errs, autn.has_value(), "autn", k);
    check_absent(errs, abba.has_value(), "abba", k);
  }
  if (k != MessageKind::SecurityModeCommand) {
    check_absent(errs, selected_integrity_aid.has_value(),
                 "selected_integrity_aid", k);
    check_absent(errs, selected_cipher_eid.has_value(), "selected_cipher_eid",
                 k);
  }
  if (k != MessageKind::SecurityModeComplete) {
    check_absent(errs, embedded_request.has_value(), "embedded_request", k);
  }
  if (k != MessageKind::RegistrationAccept) {
    check_absent(errs, allowed_nssai.has_value(), "allowed_nssai", k);
    check_absent(errs, rejected_nssai.has_value(), "rejected_nssai", k);
  }

  switch (k) {
    case MessageKind::RegistrationRequest:
      if (supi && suci) errs.push_back("supi and suci are mutually exclusive");
      if (supi && supi->size() != 15) errs.push_back("supi must be 15 digits");
      break;
    case MessageKind::AuthenticationRequest:
      if (!autn) errs.push_back("autn required in AuthenticationRequest");
      if (!abba) errs.push_back("abba required in AuthenticationRequest");
      if (autn && autn->size() != 16) errs.push_back("autn must be 16 octets");
      if (abba && abba->size() != 2) errs.push_back("abba must be 2 octets");
      break;
    case MessageKind::SecurityModeCommand:
      if (!selected_integrity_aid || !selected_cipher_eid) {
        errs.push_back("SecurityModeCommand requires both algorithm ids");
      }
      if (selected_integrity_aid && *selected_integrity_aid > 0xf) {
        errs.push_back("integrity aid exceeds 4 bits");
      }
      if (selected_cipher_eid && *selected_cipher_eid > 0xf) {
        errs.push_back("cipher eid exceeds 4 bits");
      }
      break;
    case MessageKind::SecurityModeComplete:
      if (!embedded_request) {
        errs.push_back("embedded_request required in SecurityModeComplete");
      } else {
        if ((*embedded_request)->kind != MessageKind::RegistrationRequest) {
          errs.push_back("embedded message must be a RegistrationRequest");
        }
        auto inner = (*embedded_request)->validate();
        for (auto& e : inner) errs.push_back("embedded: " + e);
      }
      break;
    case MessageKind::RegistrationAccept:
      break;
  }

  auto check_sd_range = [&errs](const std::optional<std::vector<Snssai>>& v,
                                const char* field) {
    if (!v) return;
    for (const auto& s : *v) {
      if (s.sd && *s.sd > kSdMax) {
        errs.push_back(std::string(field) + ": sd exceeds 24 bits");
      }
    }
  };
  check_sd_range(requested_nssai, "requested_nssai");
  check_sd_range(allowed_nssai, "allowed_nssai");
  check_sd_range(rejected_nssai, "rejected_nssai");

  return errs;
}

NasMessage make_registration_request(std::optional<std::string> supi,
                                     std::optional<Bytes> suci,
                                     std::optional<std::vector<Snssai>> nssai) {
  NasMessage m;
  m.kind = MessageKind::RegistrationRequest;
  m.supi = std::move(supi);
  m.suci = std::move(suci);
  m.requested_nssai = std::move(nssai);
  return m;
}

NasMessage make_authentication_request(Bytes autn, Bytes abba) {
  NasMessage m;
  m.kind = MessageKind::AuthenticationRequest;
  m.autn = std::move(autn);
  m.abba = std::move(abba);
  return m;
}

NasMessage make_security_mode_command(std::uint8_t integrity_aid,
                                      std::uint8_t cipher_eid) {
  NasMessage m;
  m.kind = MessageKind::SecurityModeCommand;
  m.selected_integrity_aid = integrity_aid;
  m.selected_cipher_eid = cipher_eid;
  return m;
}

NasMessage make_security_mode_complete(NasMessage embedded) {
  NasMessage m;
  m.kind = MessageKind::SecurityModeComplete;
  m.embedded_request = MessageBox(std::move(embedded));
  return m;
}

NasMessage make_registration_accept(std::vector<Snssai> allowed,
                                    std::vector<Snssai> rejected) {
  NasMessage m;
  m.kind = MessageKind::RegistrationAccept;
  m.allowed_nssai = std::move(allowed);
  m.rejected_nssai = std::move(rejected);
  return m;
}

}  // namespace slicesim::nas
