#ifndef AFFIKD_MANIFEST_HPP
#define AFFIKD_MANIFEST_HPP

#include <json.hpp>

#include <string>

namespace affikd {

// Reproducibility record written next to every command's primary outputs:
// command name, full effective config snapshot, FNV-1a digests of every
// input file, tool version, wall-clock start/stop. Replaying the recorded
// command with the same inputs reproduces the outputs byte for byte
// (timestamps live only here, never in primary outputs).
class RunManifest {
public:
    explicit RunManifest(std::string command);

    void add_input(const std::string& path);
    void set(const std::string& key, const nlohmann::json& value);

    // Records the stop timestamp and writes atomically.
    void write(const std::string& path);

private:
    nlohmann::json doc_;
};

std::string now_utc_iso8601();

}  // namespace affikd

#endif
