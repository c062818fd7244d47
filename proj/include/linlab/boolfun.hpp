#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "linlab/f2.hpp"
#include "linlab/rational.hpp"

namespace linlab {

// Deterministic across platforms: all sampling draws raw words from the
// engine and slices bits itself (std::*_distribution is not portable).
using Rng = std::mt19937_64;

// Low `count` bits drawn from the engine, count <= 64.
std::uint64_t draw_bits(Rng& rng, unsigned count);
// Uniform in [0, bound), bound >= 1, by rejection.
std::uint64_t draw_below(Rng& rng, std::uint64_t bound);
F2Vector random_vector(Rng& rng, std::size_t len);

std::size_t pair_count(std::size_t n);  // n choose 2
std::size_t moment_dim(std::size_t n);  // n + C(n,2)
// Offset of the product term x_{i+1} x_{j+1} inside the moment vector,
// 0-based i < j, pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),...
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

// Coordinates x_i followed by products x_i x_j (i < j, lexicographic).
// Linear dependence of moment vectors is exactly quadratic dependence of
// the underlying points.
F2Vector moment_vector(const F2Vector& x);

// f(x) = <a, x>.
class LinearFn {
public:
    explicit LinearFn(F2Vector coeffs) : a_(std::move(coeffs)) {}

    int operator()(const F2Vector& x) const { return a_.dot(x) ? 1 : 0; }
    const F2Vector& coeffs() const { return a_; }
    std::size_t n() const { return a_.size(); }

    friend bool operator==(const LinearFn&, const LinearFn&) = default;

private:
    F2Vector a_;
};

// f(x) = sum_{i<j} a_ij x_i x_j + sum_i b_i x_i, so f(0) = 0 always. The
// pair block uses the moment-vector ordering, making eval a dot product
// with the moment vector of x.
class QuadraticFn {
public:
    QuadraticFn(F2Vector linear, F2Vector pairs);
    // Split a combined coefficient vector of length moment_dim(n).
    static QuadraticFn from_coeffs(std::size_t n, const F2Vector& combined);

    int operator()(const F2Vector& x) const;

    const F2Vector& linear_part() const { return b_; }
    const F2Vector& pair_part() const { return pairs_; }
    F2Vector coeffs() const;  // (b, A) concatenated
    std::size_t n() const { return b_.size(); }

    // B = A + A^t: symmetric, zero diagonal.
    F2Matrix bilinear_form() const;

    friend bool operator==(const QuadraticFn&, const QuadraticFn&) = default;

private:
    F2Vector b_;
    F2Vector pairs_;
};

class TruthTable {
public:
    explicit TruthTable(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t size() const { return values_.size(); }  // 2^n

    // Index encodes x with x_1 as the least significant bit.
    int at(std::size_t index) const { return values_[index]; }
    void set(std::size_t index, int value) { values_[index] = value ? 1 : 0; }

    int operator()(const F2Vector& x) const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> values_;
};

TruthTable to_truth_table(const LinearFn& f);
TruthTable to_truth_table(const QuadraticFn& f);

// g(x) = f(x + y) + f(x).
TruthTable derivative(const TruthTable& f, const F2Vector& y);

// |P[f = g] - P[f != g]|, exact with denominator 2^n.
Rational agreement(const TruthTable& f, const TruthTable& g);

struct WalshSpectrum {
    std::size_t n;
    // Indexed by the integer encoding of a; coef[a] = P[f = <a,x>] - P[f != <a,x>].
    std::vector<Rational> coef;

    Rational max_abs() const;
    std::size_t support() const;  // count of nonzero coefficients
};

WalshSpectrum walsh_spectrum(const TruthTable& f);

// Largest agreement with any linear function: max_a |coef[a]|.
Rational distance_to_linear(const TruthTable& f);

struct FourierProfile {
    std::size_t rank_b;       // rank of B = A + A^t; always even
    std::uint64_t support;    // 2^rank_b
    Rational magnitude;       // 2^{-rank_b/2}, shared by all nonzero coefficients
};

FourierProfile fourier_profile(const QuadraticFn& f);

LinearFn sample_linear(std::size_t n, Rng& rng);
QuadraticFn sample_quadratic(std::size_t n, Rng& rng);
LinearFn sample_linear(std::size_t n, std::uint64_t seed);
QuadraticFn sample_quadratic(std::size_t n, std::uint64_t seed);

// Function literals: "linear:<n>:<hex of a>" and
// "quad:<n>:<hex of b>:<hex of A, pair order>". Hex is little-endian in the
// coefficient order: digit t carries coefficients 4t+1..4t+4, lowest bit
// first.
std::string hex_of_bits(const F2Vector& v);
F2Vector bits_of_hex(std::string_view hex, std::size_t len);

using FnLiteral = std::variant<LinearFn, QuadraticFn>;

std::string to_literal(const LinearFn& f);
std::string to_literal(const QuadraticFn& f);
FnLiteral parse_fn_literal(const std::string& text);

std::size_t literal_dimension(const FnLiteral& f);
TruthTable to_truth_table(const FnLiteral& f);

}  // namespace linlab
