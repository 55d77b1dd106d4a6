#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ppcf {

/// Gaussian integer, an element of Z[i].
struct Gint {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr Gint() = default;
    constexpr Gint(std::int64_t r, std::int64_t i_ = 0) : re(r), im(i_) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr std::int64_t norm2() const { return re * re + im * im; }
    constexpr Gint conj() const { return {re, -im}; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend constexpr Gint operator+(Gint a, Gint b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr Gint operator-(Gint a, Gint b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr Gint operator-(Gint a) { return {-a.re, -a.im}; }
    friend constexpr Gint operator*(Gint a, Gint b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(Gint a, Gint b) { return a.re == b.re && a.im == b.im; }
    friend constexpr bool operator!=(Gint a, Gint b) { return !(a == b); }

    // Lexicographic (Re, Im) order; used for deterministic tie-breaking.
    friend constexpr bool operator<(Gint a, Gint b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

/// Multiplies by the unit i^t (t taken mod 4).
constexpr Gint unit_pow_i(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

/// True when arg(z) lies in [-pi/4, pi/4]; exact integer test, z != 0.
constexpr bool arg_in_quarter(Gint z) {
    return z.re > 0 && -z.re <= z.im && z.im <= z.re;
}

using GintVec = std::vector<Gint>;

inline bool all_zero(const GintVec& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

inline std::int64_t norm2(const GintVec& a) {
    std::int64_t s = 0;
    for (const auto& c : a) s += c.norm2();
    return s;
}

// Flattened (Re, Im) lexicographic order across coordinates.
inline bool lex_less(const GintVec& a, const GintVec& b) {
    for (std::size_t j = 0; j < a.size() && j < b.size(); ++j) {
        if (a[j].re != b[j].re) return a[j].re < b[j].re;
        if (a[j].im != b[j].im) return a[j].im < b[j].im;
    }
    return a.size() < b.size();
}

std::string to_string(const Gint& z);
std::string to_string(const GintVec& a);

}  // namespace ppcf
