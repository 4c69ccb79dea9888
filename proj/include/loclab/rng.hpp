#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loclab/errors.hpp"

namespace loclab {

// splitmix64 finalizer; the one fixed mixing primitive everything else is keyed from.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b), c);
}

// Deterministic stream of pseudo-random words. Copyable value type.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        require(n > 0, "Stream::below: n must be positive");
        std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

// Per-(seed, vertex, round) stream: identical executions regardless of
// scheduling order, since nothing depends on draw interleaving across vertices.
inline Stream vertex_round_stream(std::uint64_t seed, std::uint64_t vertex, std::uint64_t round) {
    return Stream(mix64(seed, vertex, round));
}

// Source of raw random bits handed to simulated algorithms. Concrete backends:
// a keyed PRNG stream (RandLOCAL runs) or a fixed tape (derandomization demo).
class BitSource {
public:
    virtual ~BitSource() = default;
    virtual std::uint64_t bits(int count) = 0; // 1..64 bits, low-aligned
    double unit() { return double(bits(53)) * 0x1.0p-53; }
};

class StreamBits final : public BitSource {
public:
    explicit StreamBits(Stream s) : s_(s) {}
    std::uint64_t bits(int count) override {
        require(count >= 1 && count <= 64, "StreamBits: count out of range");
        std::uint64_t w = s_.next();
        return count == 64 ? w : (w >> (64 - count));
    }

private:
    Stream s_;
};

// Fixed finite tape; drawing past the end is a defect (the algorithm declared
// its random-bit budget up front).
class TapeBits final : public BitSource {
public:
    explicit TapeBits(std::vector<bool> tape) : tape_(std::move(tape)) {}
    std::uint64_t bits(int count) override {
        require(count >= 1 && count <= 64, "TapeBits: count out of range");
        std::uint64_t out = 0;
        for (int i = 0; i < count; ++i) {
            check_invariant(pos_ < tape_.size(), "random tape exhausted");
            out = (out << 1) | (tape_[pos_++] ? 1u : 0u);
        }
        return out;
    }
    std::size_t consumed() const { return pos_; }

private:
    std::vector<bool> tape_;
    std::size_t pos_ = 0;
};

// Deterministic runs get a source that must never be touched.
class NoBits final : public BitSource {
public:
    std::uint64_t bits(int) override {
        throw Error(ErrorKind::defect, "deterministic execution requested random bits");
    }
};

} // namespace loclab
