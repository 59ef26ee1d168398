#ifndef KCOVER_CERTIFICATE_HPP
#define KCOVER_CERTIFICATE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "covering.hpp"

namespace kcover {

/// A certificate file that cannot be trusted at all: unreadable, not the
/// expected JSON shape, or its host hash disagrees with its graph6 string.
/// Failed covering conditions are NOT this; they land in the report.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// FNV-1a over the host's graph6 string, the integrity stamp in the file.
uint64_t certificate_hash(const std::string& graph6);

/// One certificate file's content. `host_name` may be empty; the engine
/// version and search config are echoes of whoever wrote the file.
struct StoredCertificate {
    CoveringCertificate certificate;
    std::string host_name;
    std::string engine_version;
    CoverSearchConfig config;
};

void write_certificate(const CoveringCertificate& cert,
                       const std::string& host_name,
                       const CoverSearchConfig& config,
                       const std::string& path);

/// Parse and shape-check a certificate file. Throws CertificateError when
/// it is malformed; stored condition outcomes are returned as-is.
StoredCertificate read_certificate(const std::string& path);

/// Re-run every covering check for a stored certificate with a cold
/// engine. `recorded_match` adds that the stored coverage witness and
/// probe outcomes equal the recomputed ones entry for entry.
struct CertificateVerification {
    CoveringReport report;
    bool recorded_match = false;

    bool pass() const { return report.pass() && recorded_match; }
};

CertificateVerification verify_certificate(const std::string& path);

}  // namespace kcover

#endif
