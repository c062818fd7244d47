#include "linlab/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace linlab {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

F2Vector F2Vector::unit(std::size_t len, std::size_t i) {
    F2Vector v(len);
    v.set(i, true);
    return v;
}

F2Vector F2Vector::from_bits(std::initializer_list<int> bits) {
    F2Vector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

F2Vector F2Vector::from_bitstring(std::string_view s) {
    F2Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("F2Vector: bad bitstring character");
    }
    return v;
}

F2Vector F2Vector::from_index(std::size_t len, std::uint64_t value) {
    if (len > 64) throw std::invalid_argument("F2Vector::from_index: len > 64");
    F2Vector v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? value : (value & ((std::uint64_t(1) << len) - 1));
    }
    return v;
}

bool F2Vector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("F2Vector::get");
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void F2Vector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("F2Vector::set");
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void F2Vector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("F2Vector::flip");
    words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
}

bool F2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::size_t F2Vector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::size_t F2Vector::leading_bit() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return len_;
}

std::uint64_t F2Vector::to_index() const {
    if (len_ > 64) throw std::invalid_argument("F2Vector::to_index: len > 64");
    return words_.empty() ? 0 : words_[0];
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    require_same_dim(len_, o.len_, "F2Vector::operator^=");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

F2Vector& F2Vector::xor_prefix(const F2Vector& o) {
    if (o.len_ > len_) throw std::invalid_argument("F2Vector::xor_prefix: operand too long");
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool F2Vector::dot(const F2Vector& o) const {
    require_same_dim(len_, o.len_, "F2Vector::dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

void F2Vector::resize(std::size_t len) {
    len_ = len;
    words_.resize((len + 63) / 64, 0);
    mask_tail();
}

void F2Vector::mask_tail() {
    if (len_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t(1) << (len_ % 64)) - 1;
}

std::string F2Vector::to_bitstring() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix::F2Matrix(std::vector<F2Vector> rows)
    : ncols_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
    for (const F2Vector& r : rows_) require_same_dim(r.size(), ncols_, "F2Matrix");
}

void F2Matrix::append_row(F2Vector row) {
    if (rows_.empty() && ncols_ == 0) ncols_ = row.size();
    require_same_dim(row.size(), ncols_, "F2Matrix::append_row");
    rows_.push_back(std::move(row));
}

std::size_t rank(const std::vector<F2Vector>& rows) {
    if (rows.empty()) return 0;
    std::vector<F2Vector> work = rows;
    std::size_t ncols = work.front().size();
    for (const F2Vector& r : work) require_same_dim(r.size(), ncols, "rank");

    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < work.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = r + 1; i < work.size(); ++i)
            if (work[i].get(col)) work[i] ^= work[r];
        ++r;
    }
    return r;
}

std::size_t rank(const F2Matrix& m) { return rank(m.rows()); }

IncrementalBasis::InsertResult IncrementalBasis::insert(const F2Vector& v) {
    require_same_dim(v.size(), dim_, "IncrementalBasis::insert");
    F2Vector residue = v;
    F2Vector combo(rows_.size());
    for (const EchelonRow& er : rows_) {
        if (residue.get(er.pivot)) {
            residue ^= er.row;
            combo.xor_prefix(er.combo);
        }
    }
    if (residue.is_zero()) return {false, std::move(combo)};

    // New independent vector: slot index = current rank. The stored row is
    // residue = v + (combination of earlier originals), so its combo is the
    // accumulated one with the new slot's bit set.
    combo.resize(rows_.size() + 1);
    combo.set(rows_.size(), true);
    rows_.push_back({std::move(residue), 0, std::move(combo)});
    rows_.back().pivot = rows_.back().row.leading_bit();
    return {true, F2Vector()};
}

std::optional<F2Vector> IncrementalBasis::express(const F2Vector& v) const {
    require_same_dim(v.size(), dim_, "IncrementalBasis::express");
    F2Vector residue = v;
    F2Vector combo(rows_.size());
    for (const EchelonRow& er : rows_) {
        if (residue.get(er.pivot)) {
            residue ^= er.row;
            combo.xor_prefix(er.combo);
        }
    }
    if (!residue.is_zero()) return std::nullopt;
    return combo;
}

std::optional<F2Vector> express_in_span(const std::vector<F2Vector>& basis,
                                        const F2Vector& target) {
    IncrementalBasis builder(target.size());
    std::vector<std::size_t> independent_at;  // original index of each basis slot
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (builder.insert(basis[i]).independent) independent_at.push_back(i);
    }
    std::optional<F2Vector> combo = builder.express(target);
    if (!combo) return std::nullopt;
    F2Vector coeffs(basis.size());
    for (std::size_t slot = 0; slot < combo->size(); ++slot)
        if (combo->get(slot)) coeffs.set(independent_at[slot], true);
    return coeffs;
}

}  // namespace linlab
