#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond)
        throw engine_error(msg);
}

// FNV-1a, used for braiding/cache content hashes.
struct Fnv64 {
    uint64_t h = 1469598103934665603ull;
    void feed(const void* data, size_t n) {
        auto p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    }
    void feed(const std::string& s) { feed(s.data(), s.size()); }
    void feed(uint64_t v) { feed(&v, sizeof v); }
    std::string hex() const;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

// Runs f(i) for i in [0,n). Spawns threads only when threads > 1.
void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& f);

}  // namespace nichols
