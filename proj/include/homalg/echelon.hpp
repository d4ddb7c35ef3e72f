#pragma once

#include "homalg/fp_matrix.hpp"

#include <vector>

namespace homalg {

/* Incremental row echelon basis. Rows are kept normalized with recorded pivot
 * columns; reduce() subtracts the unique combination matching each pivot.
 * Rows are only appended, so expressing a vector in terms of the inserted rows
 * stays meaningful. */
class EchelonBasis {
public:
    explicit EchelonBasis(FieldSpec f, int ambient) : f_(f), ambient_(ambient), rows_(f, 0, ambient) {}

    int ambient() const { return ambient_; }
    int size() const { return rows_.rows(); }
    const FpMatrix& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /* reduce v (1 x ambient) against the basis in place; coeffs (optional)
     * receives, per basis row, the coefficient used */
    void reduce_inplace(FpMatrix& v, int vrow, std::vector<std::uint32_t>* coeffs = nullptr) const {
        if (coeffs) coeffs->assign(pivots_.size(), 0);
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            std::uint32_t c = v.get(vrow, pivots_[k]);
            if (!c) continue;
            v.addmul_row_from(vrow, rows_, static_cast<int>(k), f_.neg(c));
            if (coeffs) (*coeffs)[k] = c;
        }
    }

    bool row_is_zero(const FpMatrix& v, int vrow) const {
        for (int j = 0; j < ambient_; ++j)
            if (v.get(vrow, j)) return false;
        return true;
    }

    /* insert the row if independent; returns true when the basis grew */
    bool insert(const FpMatrix& v, int vrow) {
        FpMatrix w = v.submatrix(vrow, vrow + 1, 0, v.cols());
        reduce_inplace(w, 0);
        int pc = -1;
        for (int j = 0; j < ambient_; ++j)
            if (w.get(0, j)) { pc = j; break; }
        if (pc < 0) return false;
        std::uint32_t inv = f_.inv(w.get(0, pc));
        if (inv != 1) w.scale_row(0, inv);
        rows_ = rows_.vstack(w);
        pivots_.push_back(pc);
        return true;
    }

    void insert_all(const FpMatrix& m) {
        for (int i = 0; i < m.rows(); ++i) insert(m, i);
    }

    bool contains_row(const FpMatrix& v, int vrow) const {
        FpMatrix w = v.submatrix(vrow, vrow + 1, 0, v.cols());
        reduce_inplace(w, 0);
        return row_is_zero(w, 0);
    }

private:
    FieldSpec f_;
    int ambient_;
    FpMatrix rows_;
    std::vector<int> pivots_;
};

/* rank of [stack of basis rows; extra] minus size of basis, computed by
 * reducing extra against the basis incrementally */
inline int rank_added(const EchelonBasis& basis, const FpMatrix& extra) {
    EchelonBasis scratch = basis;
    int added = 0;
    for (int i = 0; i < extra.rows(); ++i)
        if (scratch.insert(extra, i)) ++added;
    return added;
}

} // namespace homalg
