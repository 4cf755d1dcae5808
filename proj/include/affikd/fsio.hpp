#ifndef AFFIKD_FSIO_HPP
#define AFFIKD_FSIO_HPP

#include <cstdint>
#include <string>

namespace affikd {

std::string read_file(const std::string& path);

// Write-to-temp + rename in the target directory, so a failed run never
// leaves a partial primary output behind.
void write_file_atomic(const std::string& path, const std::string& content);

// FNV-1a 64-bit; used for input digests in run manifests (bookkeeping, not
// a cryptographic hash).
std::uint64_t fnv1a64(const std::string& data);

}  // namespace affikd

#endif
