#pragma once

#include "homalg/echelon.hpp"
#include "homalg/fp_matrix.hpp"

#include <stdexcept>

namespace homalg {

struct DimensionMismatch : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotContained : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotWellDefined : std::invalid_argument { using std::invalid_argument::invalid_argument; };

/* Subspace of GF(p)^ambient, kept as an rref-canonical row basis. Two equal
 * subspaces compare equal as values. */
struct Subspace {
    int ambient = 0;
    FpMatrix basis; // rref rows

    Subspace() = default;
    Subspace(int ambient_dim, FpMatrix rows_spanning)
        : ambient(ambient_dim), basis(rows_spanning.row_basis()) {
        if (basis.cols() != ambient) throw DimensionMismatch("Subspace: ambient mismatch");
    }

    static Subspace zero_space(FieldSpec f, int ambient_dim) {
        return Subspace(ambient_dim, FpMatrix(f, 0, ambient_dim));
    }
    static Subspace full(FieldSpec f, int ambient_dim) {
        return Subspace(ambient_dim, FpMatrix::identity(f, ambient_dim));
    }

    FieldSpec field() const { return basis.field(); }
    int dim() const { return basis.rows(); }

    bool contains_row(const FpMatrix& v) const {
        return FpMatrix::solve(basis, v).has_value();
    }
    bool contains(const Subspace& o) const {
        if (o.ambient != ambient) throw DimensionMismatch("Subspace::contains ambient mismatch");
        return FpMatrix::solve(basis, o.basis).has_value();
    }
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }

    Subspace sum(const Subspace& o) const {
        if (o.ambient != ambient) throw DimensionMismatch("Subspace::sum ambient mismatch");
        return Subspace(ambient, basis.vstack(o.basis));
    }

    /* Zassenhaus: row-reduce [A|A; B|0], intersection read off the trailing block */
    Subspace intersect(const Subspace& o) const {
        if (o.ambient != ambient) throw DimensionMismatch("Subspace::intersect ambient mismatch");
        FpMatrix top = basis.hstack(basis);
        FpMatrix bot = o.basis.hstack(FpMatrix(field(), o.basis.rows(), ambient));
        FpMatrix r = top.vstack(bot).rref();
        std::vector<int> keep;
        for (int i = 0; i < r.rows(); ++i) {
            bool left_zero = true;
            for (int j = 0; j < ambient && left_zero; ++j)
                if (r.get(i, j)) left_zero = false;
            bool right_nonzero = false;
            for (int j = ambient; j < 2 * ambient && !right_nonzero; ++j)
                if (r.get(i, j)) right_nonzero = true;
            if (left_zero && right_nonzero) keep.push_back(i);
        }
        return Subspace(ambient, r.select_rows(keep).submatrix(0, static_cast<int>(keep.size()), ambient, 2 * ambient));
    }
};

/* Presentation of V/U for U <= V <= GF(p)^ambient: representative rows for a
 * complement of U in V, and a projection matrix valid on all of V.
 * Basis completion is deterministic: first U's basis, then rows of V's basis
 * that remain independent, then the earliest standard vectors. */
struct Subquotient {
    Subspace u, v;
    FpMatrix reps; // dim(V/U) x ambient
    FpMatrix proj; // ambient x dim(V/U); w*proj = quotient coords for w in V

    int dim() const { return reps.rows(); }

    FpMatrix project(const FpMatrix& rows_in_ambient) const { return rows_in_ambient * proj; }

    /* quotient coords -> ambient representatives */
    FpMatrix lift(const FpMatrix& rows_in_quot) const { return rows_in_quot * reps; }
};

inline Subquotient make_subquotient(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw DimensionMismatch("make_subquotient ambient mismatch");
    if (!v.contains(u)) throw NotContained("make_subquotient: U not contained in V");
    FieldSpec f = u.field();
    int amb = u.ambient;
    EchelonBasis span(f, amb);
    span.insert_all(u.basis);
    FpMatrix t = u.basis;
    std::vector<int> compl_rows;
    // extend U by rows of V's canonical basis
    for (int i = 0; i < v.basis.rows(); ++i) {
        if (span.insert(v.basis, i)) {
            compl_rows.push_back(t.rows());
            t = t.vstack(v.basis.row(i));
        }
    }
    // complete to a basis of the ambient space by earliest standard vectors
    FpMatrix eye = FpMatrix::identity(f, amb);
    for (int j = 0; j < amb && t.rows() < amb; ++j) {
        if (span.insert(eye, j)) t = t.vstack(eye.row(j));
    }
    FpMatrix tinv = t.inverse();
    Subquotient q;
    q.u = u;
    q.v = v;
    q.reps = t.select_rows(compl_rows);
    FpMatrix proj(f, amb, static_cast<int>(compl_rows.size()));
    for (int j = 0; j < amb; ++j)
        for (std::size_t k = 0; k < compl_rows.size(); ++k)
            proj.set(j, static_cast<int>(k), tinv.get(j, compl_rows[k]));
    q.proj = proj;
    return q;
}

/* projection GF(p)^ambient -> V/U restricted to V, as a matrix */
inline FpMatrix quotient_map(const Subspace& u, const Subspace& v) {
    return make_subquotient(u, v).proj;
}

/* the map srcV/srcU -> tgtV/tgtU induced by f; throws NotWellDefined if f does
 * not respect the flags */
inline FpMatrix induced_map_on_subquotients(const FpMatrix& f, const Subquotient& src, const Subquotient& tgt) {
    if (f.rows() != src.u.ambient || f.cols() != tgt.u.ambient)
        throw DimensionMismatch("induced_map_on_subquotients: shape mismatch");
    if (!tgt.v.contains(Subspace(tgt.v.ambient, src.v.basis * f)))
        throw NotWellDefined("induced map: f(srcV) not inside tgtV");
    if (!tgt.u.contains(Subspace(tgt.u.ambient, src.u.basis * f)))
        throw NotWellDefined("induced map: f(srcU) not inside tgtU");
    return (src.reps * f) * tgt.proj;
}

} // namespace homalg
