#pragma once

#include <iosfwd>
#include <string>

#include "coarse/cover.hpp"
#include "coarse/document.hpp"
#include "coarse/metric.hpp"
#include "coarse/partition.hpp"

namespace coarse {

// Line-oriented text formats. Every document starts with "<type> 1" and ends
// with "end"; '#' starts a comment, blank lines are ignored. Rationals are
// written as "num den". Readers throw InputError with a line number.

void write_space(std::ostream& out, const FiniteCoarseSpace& space);
FiniteCoarseSpace read_space(std::istream& in);

void write_cover(std::ostream& out, const Cover& cover);
Cover read_cover(std::istream& in);

/// Sparse weights "w point vertex num den". The target complex is not stored.
void write_pu(std::ostream& out, const PartitionOfUnity& f);
PartitionOfUnity read_pu(std::istream& in);

/// "d i j num den" for every pair i < j.
void write_metric(std::ostream& out, const FiniteMetricSpace& m);
FiniteMetricSpace read_metric(std::istream& in);

void write_certificate(std::ostream& out, const CertificateDocument& doc);
CertificateDocument read_certificate(std::istream& in);

void write_error(std::ostream& out, const ErrorDocument& doc);
ErrorDocument read_error(std::istream& in);

std::string to_text(const CertificateDocument& doc);
CertificateDocument certificate_from_text(const std::string& text);

FiniteCoarseSpace load_space(const std::string& path);
Cover load_cover(const std::string& path);
PartitionOfUnity load_pu(const std::string& path);
FiniteMetricSpace load_metric(const std::string& path);

}  // namespace coarse
