#pragma once

#include <string>

#include "coarse/asdim.hpp"
#include "coarse/document.hpp"
#include "coarse/filler.hpp"
#include "coarse/metric.hpp"
#include "coarse/partition.hpp"

namespace coarse {

CertificateDocument to_document(const PUCertificate& cert, const std::string& construction = "certify_pu");
CertificateDocument to_document(const AsdimPairCertificate& cert);
CertificateDocument to_document(const DeltaPUCertificate& cert);
CertificateDocument to_document(const SkeletonPU& result);
CertificateDocument to_document(const TrimResult& result);
CertificateDocument to_document(const FillerParams& params);
CertificateDocument to_document(const FillerResult& result);
CertificateDocument to_document(const ForwardComparison& result);
CertificateDocument to_document(const BackwardComparison& result);

}  // namespace coarse
