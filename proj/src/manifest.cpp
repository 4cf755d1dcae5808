#include "affikd/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "affikd/fsio.hpp"
#include "affikd/version.hpp"

namespace affikd {

std::string now_utc_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                  tm.tm_min, tm.tm_sec);
    return buf;
}

RunManifest::RunManifest(std::string command) {
    doc_["command"] = std::move(command);
    doc_["tool_version"] = AFFIKD_VERSION;
    doc_["started"] = now_utc_iso8601();
    doc_["inputs"] = nlohmann::json::array();
}

void RunManifest::add_input(const std::string& path) {
    char digest[32];
    std::snprintf(digest, sizeof(digest), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(read_file(path))));
    doc_["inputs"].push_back({{"path", path}, {"digest", digest}});
}

void RunManifest::set(const std::string& key, const nlohmann::json& value) {
    doc_[key] = value;
}

void RunManifest::write(const std::string& path) {
    doc_["finished"] = now_utc_iso8601();
    write_file_atomic(path, doc_.dump(2) + "\n");
}

}  // namespace affikd
