#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linlab {

// Bit-packed vector over the two-element field. Addition is XOR. Values are
// plain value types: copies are independent, equality is elementwise, and
// unused high bits of the last word are kept at zero so word-level compares
// are exact.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static F2Vector unit(std::size_t len, std::size_t i);
    static F2Vector from_bits(std::initializer_list<int> bits);
    // "101" reads left to right as x_1, x_2, x_3.
    static F2Vector from_bitstring(std::string_view s);
    // Low `len` bits of an integer: bit i of `value` becomes x_{i+1}.
    static F2Vector from_index(std::size_t len, std::uint64_t value);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    bool is_zero() const;
    std::size_t popcount() const;
    // Index of the lowest set bit; size() when zero.
    std::size_t leading_bit() const;

    // Integer encoding with x_1 as the least significant bit; requires
    // size() <= 64.
    std::uint64_t to_index() const;

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

    // XOR of a vector of equal or smaller dimension into the low bits.
    F2Vector& xor_prefix(const F2Vector& o);

    // Parity of the elementwise AND.
    bool dot(const F2Vector& o) const;

    // Zero-extends or truncates; truncation clears dropped bits.
    void resize(std::size_t len);

    std::string to_bitstring() const;

    friend bool operator==(const F2Vector& a, const F2Vector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend bool operator!=(const F2Vector& a, const F2Vector& b) { return !(a == b); }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void mask_tail();

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// A sequence of equal-length rows. Rows are immutable once appended; rank
// and span queries work on copies and never mutate the matrix.
class F2Matrix {
public:
    explicit F2Matrix(std::size_t ncols) : ncols_(ncols) {}
    explicit F2Matrix(std::vector<F2Vector> rows);

    void append_row(F2Vector row);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const F2Vector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<F2Vector>& rows() const { return rows_; }

private:
    std::size_t ncols_;
    std::vector<F2Vector> rows_;
};

// Dimension of the row space, by forward elimination on a copy. Pivots are
// chosen leftmost column first, topmost row first.
std::size_t rank(const F2Matrix& m);
std::size_t rank(const std::vector<F2Vector>& rows);

// Coefficients c with sum c_i * basis_i = target, if target lies in the
// span; otherwise nullopt. The returned vector has one bit per basis entry
// (dependent basis entries always get coefficient 0). All vectors must
// share one dimension.
std::optional<F2Vector> express_in_span(const std::vector<F2Vector>& basis,
                                        const F2Vector& target);

// Single-pass basis builder. insert() either extends the basis or reports
// the exact combination of previously inserted independent vectors that
// produces the new one. Single-owner: not meant to be shared across
// threads.
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    struct InsertResult {
        bool independent;
        // For dependent inserts: one bit per previously inserted
        // independent vector, in insertion order. Empty for independent
        // inserts.
        F2Vector combination;
    };

    InsertResult insert(const F2Vector& v);

    // Would-be combination for v without inserting it.
    std::optional<F2Vector> express(const F2Vector& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    struct EchelonRow {
        F2Vector row;
        std::size_t pivot;
        F2Vector combo;  // over independent inserts, length = rank at insert time
    };

    std::size_t dim_;
    std::vector<EchelonRow> rows_;
};

}  // namespace linlab
