#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coarse/rational.hpp"

namespace coarse {

/// Serializable record of a construction: parameters, pass/fail verdicts,
/// exact measurements and integer witnesses, with nested sub-certificates.
/// Entries keep insertion order; keys and parameter values are single tokens.
struct CertificateDocument {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, ExtRational>> measures;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> witnesses;
  std::vector<CertificateDocument> children;

  CertificateDocument& param(std::string key, std::string value);
  CertificateDocument& param(std::string key, std::size_t value);
  CertificateDocument& verdict(std::string key, bool ok);
  CertificateDocument& measure(std::string key, ExtRational value);
  CertificateDocument& witness(std::string key, std::vector<std::int64_t> values);
  CertificateDocument& child(CertificateDocument doc);

  /// Every verdict passes, recursively.
  bool passed() const;
  /// First verdict or child found by key; nullptr when absent.
  const bool* find_verdict(const std::string& key) const;
  const ExtRational* find_measure(const std::string& key) const;
  const std::string* find_param(const std::string& key) const;
  const std::vector<std::int64_t>* find_witness(const std::string& key) const;
  const CertificateDocument* find_child(const std::string& construction) const;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

enum class ErrorKind { Input, Precondition, Internal };

struct ErrorDocument {
  ErrorKind kind = ErrorKind::Internal;
  std::string message;
  std::string witness;

  friend bool operator==(const ErrorDocument&, const ErrorDocument&) = default;
};

}  // namespace coarse
