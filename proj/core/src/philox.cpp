#include "truncvar/philox.hpp"

namespace truncvar {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, StreamDomain domain, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, static_cast<std::uint32_t>(domain), static_cast<std::uint32_t>(stream),
               static_cast<std::uint32_t>(stream >> 32)} {}

void PhiloxStream::refill() noexcept {
    const auto out = philox4x32_10(counter_, key_);
    ++counter_[0];
    buffer_[0] = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    buffer_[1] = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    buffered_ = 2;
}

double PhiloxStream::next_uniform() noexcept {
    if (buffered_ == 0) refill();
    const std::uint64_t bits = buffer_[2 - buffered_--];
    // Midpoint of one of 2^53 equal cells: never 0, never 1.
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace truncvar
