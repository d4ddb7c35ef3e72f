#include "homalg/fp_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace homalg {

FpMatrix::FpMatrix(FieldSpec f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative shape");
    if (packed()) {
        wpr_ = (cols_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(rows_) * wpr_, 0);
    } else {
        ent_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
    }
}

FpMatrix FpMatrix::identity(FieldSpec f, int n) {
    FpMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::uint32_t FpMatrix::get(int i, int j) const {
    if (packed())
        return (bits_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    return ent_[static_cast<std::size_t>(i) * cols_ + j];
}

void FpMatrix::set(int i, int j, std::uint32_t v) {
    v %= f_.p;
    if (packed()) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)];
        std::uint64_t mask = 1ull << (j & 63);
        w = v ? (w | mask) : (w & ~mask);
    } else {
        ent_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::uint16_t>(v);
    }
}

bool FpMatrix::is_zero() const {
    if (packed()) {
        for (auto w : bits_) if (w) return false;
        return true;
    }
    for (auto e : ent_) if (e) return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return packed() ? bits_ == o.bits_ : ent_ == o.ent_;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw std::invalid_argument("FpMatrix::+ shape/field mismatch");
    FpMatrix m = *this;
    if (packed()) {
        for (std::size_t k = 0; k < bits_.size(); ++k) m.bits_[k] ^= o.bits_[k];
    } else {
        for (std::size_t k = 0; k < ent_.size(); ++k)
            m.ent_[k] = static_cast<std::uint16_t>(f_.add(ent_[k], o.ent_[k]));
    }
    return m;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const { return *this + o.negated(); }

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
    c %= f_.p;
    if (packed()) return c ? *this : FpMatrix(f_, rows_, cols_);
    FpMatrix m = *this;
    for (auto& e : m.ent_) e = static_cast<std::uint16_t>(f_.mul(e, c));
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || f_ != o.f_)
        throw std::invalid_argument("FpMatrix::* shape/field mismatch");
    FpMatrix m(f_, rows_, o.cols_);
    if (packed()) {
        for (int i = 0; i < rows_; ++i) {
            const std::uint64_t* arow = &bits_[static_cast<std::size_t>(i) * wpr_];
            std::uint64_t* crow = &m.bits_[static_cast<std::size_t>(i) * m.wpr_];
            for (int jw = 0; jw < wpr_; ++jw) {
                std::uint64_t w = arow[jw];
                while (w) {
                    int b = __builtin_ctzll(w);
                    w &= w - 1;
                    const std::uint64_t* brow = &o.bits_[static_cast<std::size_t>(jw * 64 + b) * o.wpr_];
                    for (int t = 0; t < o.wpr_; ++t) crow[t] ^= brow[t];
                }
            }
        }
    } else {
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::uint32_t a = get(i, k);
                if (!a) continue;
                const std::uint16_t* brow = &o.ent_[static_cast<std::size_t>(k) * o.cols_];
                std::uint16_t* crow = &m.ent_[static_cast<std::size_t>(i) * m.cols_];
                for (int j = 0; j < o.cols_; ++j)
                    crow[j] = static_cast<std::uint16_t>((crow[j] + a * brow[j]) % f_.p);
            }
    }
    return m;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix m(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            auto v = get(i, j);
            if (v) m.set(j, i, v);
        }
    return m;
}

FpMatrix FpMatrix::kron(const FpMatrix& o) const {
    if (f_ != o.f_) throw std::invalid_argument("FpMatrix::kron field mismatch");
    FpMatrix m(f_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            std::uint32_t a = get(i, j);
            if (!a) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) {
                    std::uint32_t b = o.get(k, l);
                    if (b) m.set(i * o.rows_ + k, j * o.cols_ + l, f_.mul(a, b));
                }
        }
    return m;
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
    if (rows_ != o.rows_ || f_ != o.f_) throw std::invalid_argument("FpMatrix::hstack mismatch");
    FpMatrix m(f_, rows_, cols_ + o.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, o);
    return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
    if (cols_ != o.cols_ || f_ != o.f_) throw std::invalid_argument("FpMatrix::vstack mismatch");
    FpMatrix m(f_, rows_ + o.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, o);
    return m;
}

FpMatrix FpMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    FpMatrix m(f_, r1 - r0, c1 - c0);
    if (packed() && c0 % 64 == 0) {
        int w0 = c0 / 64;
        for (int i = r0; i < r1; ++i) {
            const std::uint64_t* src = &bits_[static_cast<std::size_t>(i) * wpr_];
            std::uint64_t* dst = &m.bits_[static_cast<std::size_t>(i - r0) * m.wpr_];
            for (int t = 0; t < m.wpr_; ++t) dst[t] = src[w0 + t];
            int rem = (c1 - c0) & 63;
            if (rem) dst[m.wpr_ - 1] &= (1ull << rem) - 1;
        }
        return m;
    }
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) {
            auto v = get(i, j);
            if (v) m.set(i - r0, j - c0, v);
        }
    return m;
}

FpMatrix FpMatrix::select_rows(const std::vector<int>& idx) const {
    FpMatrix m(f_, static_cast<int>(idx.size()), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (packed()) {
            std::memcpy(&m.bits_[k * wpr_], &bits_[static_cast<std::size_t>(idx[k]) * wpr_],
                        sizeof(std::uint64_t) * wpr_);
        } else {
            std::memcpy(&m.ent_[k * cols_], &ent_[static_cast<std::size_t>(idx[k]) * cols_],
                        sizeof(std::uint16_t) * cols_);
        }
    }
    return m;
}

void FpMatrix::set_block(int r0, int c0, const FpMatrix& b) {
    if (b.f_ != f_) throw std::invalid_argument("FpMatrix::set_block field mismatch");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("FpMatrix::set_block overflow");
    if (packed() && c0 % 64 == 0 && (b.cols_ % 64 == 0 || c0 / 64 + b.wpr_ == wpr_)) {
        for (int i = 0; i < b.rows_; ++i) {
            std::uint64_t* dst = &bits_[static_cast<std::size_t>(r0 + i) * wpr_ + c0 / 64];
            const std::uint64_t* src = &b.bits_[static_cast<std::size_t>(i) * b.wpr_];
            for (int t = 0; t < b.wpr_; ++t) dst[t] |= src[t];
        }
        return;
    }
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            auto v = b.get(i, j);
            if (v) set(r0 + i, c0 + j, v);
        }
}

void FpMatrix::xor_or_addmul_row(int dst, int src, std::uint32_t c) {
    if (packed()) {
        if (!(c & 1)) return;
        std::uint64_t* d = &bits_[static_cast<std::size_t>(dst) * wpr_];
        const std::uint64_t* s = &bits_[static_cast<std::size_t>(src) * wpr_];
        for (int t = 0; t < wpr_; ++t) d[t] ^= s[t];
    } else {
        c %= f_.p;
        if (!c) return;
        std::uint16_t* d = &ent_[static_cast<std::size_t>(dst) * cols_];
        const std::uint16_t* s = &ent_[static_cast<std::size_t>(src) * cols_];
        for (int t = 0; t < cols_; ++t)
            d[t] = static_cast<std::uint16_t>((d[t] + c * s[t]) % f_.p);
    }
}

void FpMatrix::addmul_row_from(int dst, const FpMatrix& src, int srow, std::uint32_t c) {
    if (cols_ != src.cols_ || f_ != src.f_) throw std::invalid_argument("addmul_row_from mismatch");
    if (packed()) {
        if (!(c & 1)) return;
        std::uint64_t* d = &bits_[static_cast<std::size_t>(dst) * wpr_];
        const std::uint64_t* s = &src.bits_[static_cast<std::size_t>(srow) * src.wpr_];
        for (int t = 0; t < wpr_; ++t) d[t] ^= s[t];
    } else {
        c %= f_.p;
        if (!c) return;
        std::uint16_t* d = &ent_[static_cast<std::size_t>(dst) * cols_];
        const std::uint16_t* s = &src.ent_[static_cast<std::size_t>(srow) * cols_];
        for (int t = 0; t < cols_; ++t)
            d[t] = static_cast<std::uint16_t>((d[t] + c * s[t]) % f_.p);
    }
}

void FpMatrix::scale_row(int i, std::uint32_t c) {
    if (packed()) return; // only c == 1 occurs
    c %= f_.p;
    std::uint16_t* r = &ent_[static_cast<std::size_t>(i) * cols_];
    for (int t = 0; t < cols_; ++t) r[t] = static_cast<std::uint16_t>((r[t] * c) % f_.p);
}

void FpMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    if (packed()) {
        for (int t = 0; t < wpr_; ++t)
            std::swap(bits_[static_cast<std::size_t>(i) * wpr_ + t], bits_[static_cast<std::size_t>(j) * wpr_ + t]);
    } else {
        for (int t = 0; t < cols_; ++t)
            std::swap(ent_[static_cast<std::size_t>(i) * cols_ + t], ent_[static_cast<std::size_t>(j) * cols_ + t]);
    }
}

Elim Elim::run(const FpMatrix& a, bool track_u) {
    Elim e{a, track_u ? FpMatrix::identity(a.field(), a.rows()) : FpMatrix(), {}};
    FpMatrix& r = e.r;
    const FieldSpec f = a.field();
    int piv = 0;
    for (int col = 0; col < r.cols() && piv < r.rows(); ++col) {
        int sel = -1;
        for (int i = piv; i < r.rows(); ++i)
            if (r.get(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        r.swap_rows(piv, sel);
        if (track_u) e.u.swap_rows(piv, sel);
        std::uint32_t inv = f.inv(r.get(piv, col));
        if (inv != 1) {
            r.scale_row(piv, inv);
            if (track_u) e.u.scale_row(piv, inv);
        }
        for (int i = 0; i < r.rows(); ++i) {
            if (i == piv) continue;
            std::uint32_t c = r.get(i, col);
            if (!c) continue;
            std::uint32_t k = f.neg(c);
            r.xor_or_addmul_row(i, piv, k);
            if (track_u) e.u.xor_or_addmul_row(i, piv, k);
        }
        e.pivots.push_back(col);
        ++piv;
    }
    return e;
}

FpMatrix FpMatrix::rref(std::vector<int>* pivots) const {
    Elim e = Elim::run(*this, false);
    if (pivots) *pivots = e.pivots;
    return e.r;
}

int FpMatrix::rank() const {
    // forward elimination only; transpose when that makes the pivot side smaller
    if (rows_ > 2 * cols_ && static_cast<long long>(rows_) * cols_ > (1 << 20))
        return transpose().rank();
    FpMatrix r = *this;
    const FieldSpec f = f_;
    int piv = 0;
    for (int col = 0; col < r.cols() && piv < r.rows(); ++col) {
        int sel = -1;
        for (int i = piv; i < r.rows(); ++i)
            if (r.get(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        r.swap_rows(piv, sel);
        std::uint32_t inv = f.inv(r.get(piv, col));
        if (inv != 1) r.scale_row(piv, inv);
        for (int i = piv + 1; i < r.rows(); ++i) {
            std::uint32_t c = r.get(i, col);
            if (c) r.xor_or_addmul_row(i, piv, f.neg(c));
        }
        ++piv;
    }
    return piv;
}

FpMatrix FpMatrix::left_kernel() const {
    Elim e = Elim::run(*this, true);
    int rk = static_cast<int>(e.pivots.size());
    if (rk == rows_) return FpMatrix(f_, 0, rows_);
    return e.u.submatrix(rk, rows_, 0, rows_).rref();
}

FpMatrix FpMatrix::row_basis() const {
    std::vector<int> piv;
    FpMatrix r = rref(&piv);
    return r.submatrix(0, static_cast<int>(piv.size()), 0, cols_);
}

std::optional<FpMatrix> Solver::solve(const FpMatrix& b) const {
    const FieldSpec f = b.field();
    FpMatrix x(f, b.rows(), arows_);
    FpMatrix res = b;
    for (int i = 0; i < b.rows(); ++i) {
        for (std::size_t k = 0; k < e_.pivots.size(); ++k) {
            std::uint32_t c = res.get(i, e_.pivots[k]);
            if (!c) continue;
            res.addmul_row_from(i, e_.r, static_cast<int>(k), f.neg(c));
            x.addmul_row_from(i, e_.u, static_cast<int>(k), c);
        }
        for (int j = 0; j < res.cols(); ++j)
            if (res.get(i, j)) return std::nullopt;
    }
    return x;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols() || a.field() != b.field())
        throw std::invalid_argument("FpMatrix::solve shape/field mismatch");
    return Solver(a).solve(b);
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::inverse: not square");
    Elim e = Elim::run(*this, true);
    if (static_cast<int>(e.pivots.size()) != rows_)
        throw std::domain_error("FpMatrix::inverse: singular matrix");
    return e.u;
}

} // namespace homalg
