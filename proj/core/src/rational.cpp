#include "relstate/rational.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace relstate {

namespace {

// std::deque keeps references stable while the table grows, so readers
// below the watermark never race the writer.
std::deque<BigInt> g_factorials{BigInt(1)};
std::atomic<std::size_t> g_watermark{1};
std::mutex g_grow_mutex;

}  // namespace

const BigInt& factorial(unsigned n) {
    if (n >= g_watermark.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(g_grow_mutex);
        for (std::size_t i = g_factorials.size(); i <= n; ++i) {
            g_factorials.push_back(g_factorials[i - 1] * i);
        }
        g_watermark.store(g_factorials.size(), std::memory_order_release);
    }
    return g_factorials[n];
}

void warm_up_factorials(unsigned n) { factorial(n); }

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigRational pow_rational(const BigRational& base, unsigned exp) {
    BigRational result(1);
    BigRational b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

double to_double(const BigRational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const BigRational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace relstate
