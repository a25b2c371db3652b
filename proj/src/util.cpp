#include "nichols/util.hpp"

#include <atomic>
#include <thread>

namespace nichols {

std::string Fnv64::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    uint64_t v = h;
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned k = std::min<size_t>(threads, n);
    pool.reserve(k);
    for (unsigned i = 0; i < k; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
}

}  // namespace nichols
