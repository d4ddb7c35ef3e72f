#pragma once

#include "homalg/fp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homalg {

/* Dense matrix over GF(p), row-major. Maps are composed on the right:
 * a morphism f : U -> V of row spaces is a dim(U) x dim(V) matrix, applied
 * as v |-> v * f. GF(2) rows are bit-packed into 64-bit words; the observable
 * behaviour is identical to the generic path. */
class FpMatrix {
public:
    FpMatrix() : f_(FieldSpec(2)), rows_(0), cols_(0) {}
    FpMatrix(FieldSpec f, int rows, int cols);

    static FpMatrix zero(FieldSpec f, int rows, int cols) { return FpMatrix(f, rows, cols); }
    static FpMatrix identity(FieldSpec f, int n);

    const FieldSpec& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t get(int i, int j) const;
    void set(int i, int j, std::uint32_t v);
    void add_at(int i, int j, std::uint32_t v) { set(i, j, f_.add(get(i, j), v)); }

    bool is_zero() const;
    bool operator==(const FpMatrix& o) const;
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix negated() const { return scaled(f_.neg(1)); }
    FpMatrix transpose() const;

    /* tensor (Kronecker) product in row convention: (a kron b) represents the
     * map on u (x) v acting slotwise; index (i,j) |-> i*rows(b)+j */
    FpMatrix kron(const FpMatrix& o) const;

    FpMatrix hstack(const FpMatrix& o) const;
    FpMatrix vstack(const FpMatrix& o) const;
    FpMatrix submatrix(int r0, int r1, int c0, int c1) const; // half-open ranges
    FpMatrix select_rows(const std::vector<int>& idx) const;
    FpMatrix row(int i) const { return submatrix(i, i + 1, 0, cols_); }

    void set_block(int r0, int c0, const FpMatrix& b);

    /* v * this for a single row vector v (1 x rows) -> 1 x cols */
    FpMatrix apply_row(const FpMatrix& v) const { return v * (*this); }

    /* reduced row echelon form; pivots = pivot column per pivot row.
     * Deterministic: columns scanned left to right, the surviving row of
     * smallest index is chosen as pivot. */
    FpMatrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;

    /* basis of { v : v * this == 0 }, rows rref-canonical */
    FpMatrix left_kernel() const;
    /* rref-canonical basis of the row space */
    FpMatrix row_basis() const;

    /* some x with x * a == b, rows(x) = rows(b), cols(x) = rows(a);
     * nullopt when the system is inconsistent */
    static std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

    /* inverse of an invertible square matrix */
    FpMatrix inverse() const;

    /* internal row operations (used by elimination and generators) */
    void xor_or_addmul_row(int dst, int src, std::uint32_t c); // row[dst] += c*row[src]
    void addmul_row_from(int dst, const FpMatrix& src, int srow, std::uint32_t c);
    void scale_row(int i, std::uint32_t c);
    void swap_rows(int i, int j);

private:
    FieldSpec f_;
    int rows_, cols_;
    int wpr_ = 0;                      // words per row, p == 2 only
    std::vector<std::uint64_t> bits_;  // p == 2
    std::vector<std::uint16_t> ent_;   // p != 2

    bool packed() const { return f_.p == 2; }
    friend struct Elim;
};

/* row echelon data: u * a == r with u invertible */
struct Elim {
    FpMatrix r;
    FpMatrix u;
    std::vector<int> pivots;

    static Elim run(const FpMatrix& a, bool track_u);
};

/* reusable x * a = b solver; the elimination of a is done once */
class Solver {
public:
    explicit Solver(const FpMatrix& a) : e_(Elim::run(a, true)), arows_(a.rows()) {}
    std::optional<FpMatrix> solve(const FpMatrix& b) const;
    int rank() const { return static_cast<int>(e_.pivots.size()); }

private:
    Elim e_;
    int arows_;
};

} // namespace homalg
