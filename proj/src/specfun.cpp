#include "casimir/specfun.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace casimir::specfun {

namespace {

struct Table {
    std::vector<double> ln_fac;
};

std::atomic<const Table*> g_table{nullptr};
std::mutex g_table_mutex;
std::vector<std::unique_ptr<const Table>> g_retired;  // keep old snapshots alive

// ln(n!) for n <= 20 from the exact integer factorials.
void fill_exact(std::vector<double>& t) {
    std::uint64_t f = 1;
    t[0] = 0.0;
    for (std::uint64_t n = 1; n <= 20; ++n) {
        f *= n;
        t[n] = std::log(static_cast<double>(f));
    }
}

const Table* grow_to(long max_n) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    const Table* cur = g_table.load(std::memory_order_acquire);
    if (cur && static_cast<long>(cur->ln_fac.size()) > max_n) return cur;
    auto next = std::make_unique<Table>();
    std::size_t n = static_cast<std::size_t>(max_n) + 1;
    if (n < 1024) n = 1024;
    next->ln_fac.resize(n);
    fill_exact(next->ln_fac);
    for (std::size_t i = 21; i < n; ++i)
        next->ln_fac[i] = std::lgamma(static_cast<double>(i) + 1.0);
    const Table* raw = next.get();
    g_retired.push_back(std::move(next));
    g_table.store(raw, std::memory_order_release);
    return raw;
}

}  // namespace

void ensure_tables(long max_n) {
    if (max_n < 0) return;
    if (max_n > kMaxArgument) max_n = kMaxArgument;
    const Table* t = g_table.load(std::memory_order_acquire);
    if (!t || static_cast<long>(t->ln_fac.size()) <= max_n) grow_to(max_n);
}

double log_factorial(long n) {
    if (n < 0 || n > kMaxArgument)
        throw std::domain_error("log_factorial: argument out of range [0, 1e6]");
    const Table* t = g_table.load(std::memory_order_acquire);
    if (!t || static_cast<long>(t->ln_fac.size()) <= n) t = grow_to(n);
    return t->ln_fac[static_cast<std::size_t>(n)];
}

double log_double_factorial(long n) {
    if (n < 0) throw std::domain_error("log_double_factorial: negative argument");
    if (n <= 1) return 0.0;
    if (n <= 50) {
        double p = 1.0;
        for (long k = n; k > 1; k -= 2) p *= static_cast<double>(k);
        return std::log(p);
    }
    // n = 2k:   n!! = 2^k k!
    // n = 2k+1: n!! = (2k+1)! / (2^k k!)
    constexpr double ln2 = 0.6931471805599453094;
    if (n % 2 == 0) {
        long k = n / 2;
        return k * ln2 + log_factorial(k);
    }
    long k = (n - 1) / 2;
    return log_factorial(n) - k * ln2 - log_factorial(k);
}

double log_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("log_binomial: require 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace casimir::specfun
