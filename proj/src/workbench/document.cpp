#include "coarse/document.hpp"

#include <algorithm>

namespace coarse {

CertificateDocument& CertificateDocument::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

CertificateDocument& CertificateDocument::param(std::string key, std::size_t value) {
  return param(std::move(key), std::to_string(value));
}

CertificateDocument& CertificateDocument::verdict(std::string key, bool ok) {
  verdicts.emplace_back(std::move(key), ok);
  return *this;
}

CertificateDocument& CertificateDocument::measure(std::string key, ExtRational value) {
  measures.emplace_back(std::move(key), std::move(value));
  return *this;
}

CertificateDocument& CertificateDocument::witness(std::string key, std::vector<std::int64_t> values) {
  witnesses.emplace_back(std::move(key), std::move(values));
  return *this;
}

CertificateDocument& CertificateDocument::child(CertificateDocument doc) {
  children.push_back(std::move(doc));
  return *this;
}

bool CertificateDocument::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; }) &&
         std::all_of(children.begin(), children.end(), [](const auto& c) { return c.passed(); });
}

namespace {

template <class Vec>
auto* find_in(const Vec& entries, const std::string& key) {
  for (const auto& e : entries) {
    if (e.first == key) return &e.second;
  }
  return static_cast<decltype(&entries.front().second)>(nullptr);
}

}  // namespace

const bool* CertificateDocument::find_verdict(const std::string& key) const { return find_in(verdicts, key); }
const ExtRational* CertificateDocument::find_measure(const std::string& key) const { return find_in(measures, key); }
const std::string* CertificateDocument::find_param(const std::string& key) const { return find_in(params, key); }
const std::vector<std::int64_t>* CertificateDocument::find_witness(const std::string& key) const {
  return find_in(witnesses, key);
}

const CertificateDocument* CertificateDocument::find_child(const std::string& name) const {
  for (const auto& c : children) {
    if (c.construction == name) return &c;
  }
  return nullptr;
}

}  // namespace coarse
