#include "mpc/util.hpp"

#include <thread>

namespace mpc {

void parallel_chunks(uint64_t n, unsigned threads,
                     const std::function<void(uint64_t, uint64_t, unsigned)>& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        fn(0, n, 0);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    uint64_t base = n / threads, extra = n % threads, begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        uint64_t len = base + (t < extra ? 1 : 0);
        pool.emplace_back(fn, begin, begin + len, t);
        begin += len;
    }
    for (auto& th : pool) th.join();
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace mpc
