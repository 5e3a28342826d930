#pragma once

#include <cstdint>

namespace coevo {

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Counter-based deterministic random stream. Output n depends only on
// (key, n), so a copied stream replays the same sequence and the counter
// doubles as a draw count. Child streams have independent keys.
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        ++counter_;
        return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform in {0, ..., n-1}, n >= 1.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>((next_u64() >> 32) * n >> 32);
    }

    RngStream child(std::uint64_t stream_id) const {
        return RngStream(mix64(key_ ^ mix64(stream_id + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t draws() const { return counter_; }

    friend bool operator==(const RngStream&, const RngStream&) = default;

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace coevo
