#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kneserlab {

/// Raised on malformed input to an operation (wrong modulus, bad index, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a geometric object cannot be built (degenerate form, bad family/char pair).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

/// Prime field F_p for p in {2,3,5,7}. Elements are stored as residues in [0,p).
class Field {
public:
    explicit Field(int p) : p_(p)
    {
        if (!is_supported_prime(p)) {
            throw UsageError("unsupported field order " + std::to_string(p) + " (expected 2, 3, 5 or 7)");
        }
        inv_.fill(0);
        for (int a = 1; a < p; ++a) {
            for (int b = 1; b < p; ++b) {
                if ((a * b) % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
            }
        }
    }

    int order() const { return p_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + b) % p_); }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a * b) % p_); }
    std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
    std::uint8_t inv(std::uint8_t a) const
    {
        if (a == 0) throw UsageError("inverse of zero in F_" + std::to_string(p_));
        return inv_[a];
    }
    /// Maps any integer (including negatives such as -1) to its residue.
    std::uint8_t reduce(long long v) const { return static_cast<std::uint8_t>(((v % p_) + p_) % p_); }

private:
    int p_;
    std::array<std::uint8_t, 8> inv_{};
};

/// A field element that carries its modulus; arithmetic between different moduli is rejected.
struct Scalar {
    std::uint8_t value = 0;
    std::uint8_t p = 2;

    Scalar() = default;
    Scalar(long long v, int modulus) : p(static_cast<std::uint8_t>(modulus))
    {
        if (!is_supported_prime(modulus)) throw UsageError("unsupported field order " + std::to_string(modulus));
        value = static_cast<std::uint8_t>(((v % modulus) + modulus) % modulus);
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    friend Scalar operator+(Scalar a, Scalar b) { return {a.value + b.value, same(a, b)}; }
    friend Scalar operator-(Scalar a, Scalar b) { return {a.value - b.value, same(a, b)}; }
    friend Scalar operator*(Scalar a, Scalar b) { return {a.value * b.value, same(a, b)}; }
    Scalar operator-() const { return {-static_cast<long long>(value), p}; }
    Scalar inverse() const { return {Field(p).inv(value), p}; }

private:
    static int same(Scalar a, Scalar b)
    {
        if (a.p != b.p) throw UsageError("mixed moduli in scalar arithmetic");
        return a.p;
    }
};

} // namespace kneserlab
