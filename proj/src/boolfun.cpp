#include "linlab/boolfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace linlab {

std::uint64_t draw_bits(Rng& rng, unsigned count) {
    if (count == 0) return 0;
    if (count > 64) throw std::invalid_argument("draw_bits: count > 64");
    std::uint64_t word = rng();
    return count == 64 ? word : (word & ((std::uint64_t(1) << count) - 1));
}

std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("draw_below: zero bound");
    if ((bound & (bound - 1)) == 0) {
        int bits = 0;
        while ((std::uint64_t(1) << bits) < bound) ++bits;
        return draw_bits(rng, bits);
    }
    // Rejection from the smallest covering power of two.
    unsigned bits = 1;
    while (bits < 64 && (std::uint64_t(1) << bits) < bound) ++bits;
    for (;;) {
        std::uint64_t v = draw_bits(rng, bits);
        if (v < bound) return v;
    }
}

F2Vector random_vector(Rng& rng, std::size_t len) {
    F2Vector v(len);
    for (std::size_t i = 0; i < len; i += 64) {
        unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(64, len - i));
        std::uint64_t word = draw_bits(rng, chunk);
        for (unsigned b = 0; b < chunk; ++b)
            if ((word >> b) & 1) v.set(i + b, true);
    }
    return v;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t moment_dim(std::size_t n) { return n + pair_count(n); }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= j || j >= n) throw std::invalid_argument("pair_index: need i < j < n");
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

F2Vector moment_vector(const F2Vector& x) {
    std::size_t n = x.size();
    F2Vector mu(moment_dim(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!x.get(i)) continue;
        mu.set(i, true);
        for (std::size_t j = i + 1; j < n; ++j)
            if (x.get(j)) mu.set(n + pair_index(n, i, j), true);
    }
    return mu;
}

QuadraticFn::QuadraticFn(F2Vector linear, F2Vector pairs)
    : b_(std::move(linear)), pairs_(std::move(pairs)) {
    if (pairs_.size() != pair_count(b_.size()))
        throw std::invalid_argument("QuadraticFn: pair block has wrong length");
}

QuadraticFn QuadraticFn::from_coeffs(std::size_t n, const F2Vector& combined) {
    if (combined.size() != moment_dim(n))
        throw std::invalid_argument("QuadraticFn::from_coeffs: wrong length");
    F2Vector b(n), pairs(pair_count(n));
    for (std::size_t i = 0; i < n; ++i) b.set(i, combined.get(i));
    for (std::size_t p = 0; p < pairs.size(); ++p) pairs.set(p, combined.get(n + p));
    return QuadraticFn(std::move(b), std::move(pairs));
}

int QuadraticFn::operator()(const F2Vector& x) const {
    if (x.size() != n()) throw std::invalid_argument("QuadraticFn: dimension mismatch");
    int acc = b_.dot(x) ? 1 : 0;
    std::size_t nn = n();
    for (std::size_t i = 0; i < nn; ++i) {
        if (!x.get(i)) continue;
        for (std::size_t j = i + 1; j < nn; ++j)
            if (x.get(j) && pairs_.get(pair_index(nn, i, j))) acc ^= 1;
    }
    return acc;
}

F2Vector QuadraticFn::coeffs() const {
    F2Vector c(moment_dim(n()));
    for (std::size_t i = 0; i < b_.size(); ++i)
        if (b_.get(i)) c.set(i, true);
    for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (pairs_.get(p)) c.set(n() + p, true);
    return c;
}

F2Matrix QuadraticFn::bilinear_form() const {
    std::size_t nn = n();
    std::vector<F2Vector> rows(nn, F2Vector(nn));
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j)
            if (pairs_.get(pair_index(nn, i, j))) {
                rows[i].set(j, true);
                rows[j].set(i, true);
            }
    return F2Matrix(std::move(rows));
}

TruthTable::TruthTable(std::size_t n) : n_(n), values_(std::size_t(1) << n, 0) {
    if (n > 24) throw std::invalid_argument("TruthTable: n > 24 unsupported");
}

int TruthTable::operator()(const F2Vector& x) const {
    if (x.size() != n_) throw std::invalid_argument("TruthTable: dimension mismatch");
    return values_[x.to_index()];
}

namespace {

template <class Fn>
TruthTable expand(std::size_t n, const Fn& f) {
    TruthTable t(n);
    for (std::size_t idx = 0; idx < t.size(); ++idx)
        t.set(idx, f(F2Vector::from_index(n, idx)));
    return t;
}

}  // namespace

TruthTable to_truth_table(const LinearFn& f) { return expand(f.n(), f); }
TruthTable to_truth_table(const QuadraticFn& f) { return expand(f.n(), f); }

TruthTable derivative(const TruthTable& f, const F2Vector& y) {
    if (y.size() != f.n()) throw std::invalid_argument("derivative: dimension mismatch");
    std::uint64_t shift = y.to_index();
    TruthTable g(f.n());
    for (std::size_t idx = 0; idx < f.size(); ++idx)
        g.set(idx, f.at(idx ^ shift) ^ f.at(idx));
    return g;
}

Rational agreement(const TruthTable& f, const TruthTable& g) {
    if (f.n() != g.n()) throw std::invalid_argument("agreement: dimension mismatch");
    std::int64_t equal = 0;
    for (std::size_t idx = 0; idx < f.size(); ++idx)
        if (f.at(idx) == g.at(idx)) ++equal;
    std::int64_t size = static_cast<std::int64_t>(f.size());
    std::int64_t signed_count = 2 * equal - size;
    return Rational(signed_count < 0 ? -signed_count : signed_count, size);
}

WalshSpectrum walsh_spectrum(const TruthTable& f) {
    std::size_t size = f.size();
    std::vector<std::int64_t> s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = f.at(i) ? -1 : 1;
    // In-place radix-2 transform; afterwards s[a] = sum_x (-1)^{f(x)+<a,x>}.
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                std::int64_t lo = s[i], hi = s[i + half];
                s[i] = lo + hi;
                s[i + half] = lo - hi;
            }
        }
    }
    WalshSpectrum spec;
    spec.n = f.n();
    spec.coef.reserve(size);
    for (std::size_t a = 0; a < size; ++a)
        spec.coef.emplace_back(s[a], static_cast<std::int64_t>(size));
    return spec;
}

Rational WalshSpectrum::max_abs() const {
    Rational best(0);
    for (const Rational& c : coef) {
        Rational a = c.abs();
        if (a > best) best = a;
    }
    return best;
}

std::size_t WalshSpectrum::support() const {
    std::size_t count = 0;
    for (const Rational& c : coef)
        if (!c.is_zero()) ++count;
    return count;
}

Rational distance_to_linear(const TruthTable& f) { return walsh_spectrum(f).max_abs(); }

FourierProfile fourier_profile(const QuadraticFn& f) {
    std::size_t r = rank(f.bilinear_form());
    if (r % 2 != 0) throw std::logic_error("fourier_profile: alternating form with odd rank");
    FourierProfile p;
    p.rank_b = r;
    p.support = std::uint64_t(1) << r;
    p.magnitude = Rational::pow2(-static_cast<int>(r / 2));
    return p;
}

LinearFn sample_linear(std::size_t n, Rng& rng) { return LinearFn(random_vector(rng, n)); }

QuadraticFn sample_quadratic(std::size_t n, Rng& rng) {
    F2Vector b = random_vector(rng, n);
    F2Vector pairs = random_vector(rng, pair_count(n));
    return QuadraticFn(std::move(b), std::move(pairs));
}

LinearFn sample_linear(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_linear(n, rng);
}

QuadraticFn sample_quadratic(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_quadratic(n, rng);
}

std::string hex_of_bits(const F2Vector& v) {
    static const char* digits = "0123456789abcdef";
    std::size_t ndigits = (v.size() + 3) / 4;
    std::string s(ndigits, '0');
    for (std::size_t t = 0; t < ndigits; ++t) {
        unsigned nibble = 0;
        for (unsigned u = 0; u < 4; ++u) {
            std::size_t bit = 4 * t + u;
            if (bit < v.size() && v.get(bit)) nibble |= 1u << u;
        }
        s[t] = digits[nibble];
    }
    return s;
}

F2Vector bits_of_hex(std::string_view hex, std::size_t len) {
    std::size_t ndigits = (len + 3) / 4;
    if (hex.size() != ndigits)
        throw std::invalid_argument("bits_of_hex: expected " + std::to_string(ndigits) +
                                    " hex digits");
    F2Vector v(len);
    for (std::size_t t = 0; t < ndigits; ++t) {
        char c = hex[t];
        unsigned nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F')
            nibble = 10 + (c - 'A');
        else
            throw std::invalid_argument("bits_of_hex: bad hex digit");
        for (unsigned u = 0; u < 4; ++u) {
            std::size_t bit = 4 * t + u;
            if ((nibble >> u) & 1) {
                if (bit >= len) throw std::invalid_argument("bits_of_hex: stray high bit");
                v.set(bit, true);
            }
        }
    }
    return v;
}

std::string to_literal(const LinearFn& f) {
    return "linear:" + std::to_string(f.n()) + ":" + hex_of_bits(f.coeffs());
}

std::string to_literal(const QuadraticFn& f) {
    return "quad:" + std::to_string(f.n()) + ":" + hex_of_bits(f.linear_part()) + ":" +
           hex_of_bits(f.pair_part());
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::size_t parse_dim(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("fn literal: empty dimension");
    std::size_t n = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("fn literal: bad dimension");
        n = n * 10 + (c - '0');
        if (n > 64) throw std::invalid_argument("fn literal: dimension > 64");
    }
    return n;
}

}  // namespace

FnLiteral parse_fn_literal(const std::string& text) {
    std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 3 && parts[0] == "linear") {
        std::size_t n = parse_dim(parts[1]);
        return LinearFn(bits_of_hex(parts[2], n));
    }
    if (parts.size() == 4 && parts[0] == "quad") {
        std::size_t n = parse_dim(parts[1]);
        return QuadraticFn(bits_of_hex(parts[2], n), bits_of_hex(parts[3], pair_count(n)));
    }
    throw std::invalid_argument("fn literal: expected linear:<n>:<hex> or quad:<n>:<hex>:<hex>");
}

std::size_t literal_dimension(const FnLiteral& f) {
    return std::visit([](const auto& fn) { return fn.n(); }, f);
}

TruthTable to_truth_table(const FnLiteral& f) {
    return std::visit([](const auto& fn) { return to_truth_table(fn); }, f);
}

}  // namespace linlab
