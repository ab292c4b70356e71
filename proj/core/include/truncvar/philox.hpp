#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11), and the
// stream layout every sampler in this library draws from.
//
// Stream layout (version 1):
//   key     = { seed low 32 bits, seed high 32 bits }
//   counter = { block index, domain tag, stream low 32 bits, stream high 32 bits }
// Each block yields two uniform doubles (64 bits each, top 53 used).
// Domains: 0 = Monte Carlo pairs (stream = chunk of 2^16 pairs),
//          1 = queue (stream = customer index), 2 = inventory (stream = period).

#include <array>
#include <cstdint>

namespace truncvar {

inline constexpr int kRandomStreamVersion = 1;

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

enum class StreamDomain : std::uint32_t { MonteCarlo = 0, Queue = 1, Inventory = 2 };

class PhiloxStream {
   public:
    PhiloxStream(std::uint64_t seed, StreamDomain domain, std::uint64_t stream) noexcept;

    // Uniform on the open interval (0, 1).
    double next_uniform() noexcept;

   private:
    void refill() noexcept;

    PhiloxKey key_;
    PhiloxCounter counter_;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
};

}  // namespace truncvar
