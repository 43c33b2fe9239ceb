#pragma once

#include <optional>
#include <string>

#include "gtc/certificate.hpp"

namespace gtc {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct CertificateMetadata {
  std::string family;
  std::optional<long long> m;
  std::optional<long long> n;
  std::optional<std::string> r;
  std::string tool_version = kToolVersion;

  bool operator==(const CertificateMetadata&) const = default;
};

// Self-contained on-disk form: the presentation is embedded, words are
// arrays of signed generator indices (a = 1, A = -1, b = 2, ...).
struct CertificateDocument {
  int format_version = kFormatVersion;
  GtCertificate certificate;
  CertificateMetadata metadata;

  bool operator==(const CertificateDocument&) const = default;
};

// Canonical UTF-8 text (JSON with sorted keys); serializing the parse of a
// serialized document reproduces it byte for byte.
std::string serialize_certificate(const CertificateDocument& doc);

// Throws ParseError on anything malformed: bad JSON, missing or mistyped
// fields, letter indices out of range, non-permutations.
CertificateDocument parse_certificate(const std::string& text);

void write_certificate_file(const std::string& path, const CertificateDocument& doc);
CertificateDocument read_certificate_file(const std::string& path);

} // namespace gtc
