#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solvgraph {

/// Thrown by every precondition and consistency failure in the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic in the prime field GF(p) for an odd prime p.
/// Residues are kept canonical in [0, p) everywhere; p is capped at 251 so
/// coordinates fit in a byte.
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (!is_odd_prime(p)) throw Error("GF(p): p must be an odd prime >= 3, got " + std::to_string(p));
        if (p > 251) throw Error("GF(p): p > 251 not supported");
    }

    uint32_t p() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>((static_cast<uint32_t>(a) * b) % p_);
    }
    uint8_t neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(p_ - a); }

    uint8_t inv(uint8_t a) const {
        if (a == 0) throw Error("GF(p): inverse of zero");
        // Fermat: a^(p-2)
        uint32_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint8_t>(result);
    }

    /// Canonical residue of an arbitrary signed integer.
    uint8_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint8_t>(r);
    }

    bool operator==(const Fp&) const = default;

    static bool is_odd_prime(uint64_t p) {
        if (p < 3 || p % 2 == 0) return false;
        for (uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

}  // namespace solvgraph
