#pragma once

#include "homalg/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace homalg {

struct ActionNotWellDefined : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct InverseCheckFailed : std::logic_error { using std::logic_error::logic_error; };

/* Hopf algebra with involutive antipode. Maps are stored as matrices in the
 * row convention: counit dim x 1, comultiplication dim x dim^2 (tensor basis
 * e_i (x) e_j at column i*dim+j), antipode dim x dim. Axioms (i)-(iv) are
 * verified at construction unless the unchecked tag is used (test hook for
 * corrupted instances). */
class HopfAlgebra {
public:
    HopfAlgebra(FdAlgebra algebra, FpMatrix counit, FpMatrix comult, FpMatrix antipode);
    static HopfAlgebra unchecked(FdAlgebra algebra, FpMatrix counit, FpMatrix comult, FpMatrix antipode);

    const FdAlgebra& algebra() const { return alg_; }
    FieldSpec field() const { return alg_.field(); }
    int dim() const { return alg_.dim(); }
    const FpMatrix& counit() const { return eps_; }
    const FpMatrix& comult() const { return delta_; }
    const FpMatrix& antipode() const { return s_; }

    /* multiplication map nabla: H (x) H -> H, row i*dim+j = b_i b_j */
    FpMatrix mult_map() const;
    /* twist tau on H (x) H */
    FpMatrix twist() const;
    /* unit eta: R -> H */
    FpMatrix unit_map() const { return alg_.unit(); }

    std::uint32_t counit_of(const FpMatrix& elem) const;
    FpMatrix antipode_of(const FpMatrix& elem) const { return elem * s_; }

    /* delta of an element as a dim x dim coefficient grid lambda[c][d] */
    FpMatrix delta_grid(int basis_index) const;

    /* axioms (i),(i'),(ii),(iii),(iii'),(iv) plus algebra-morphism conditions */
    std::vector<std::pair<std::string, bool>> check_axioms() const;
    bool axioms_hold() const;

    /* Remark-level identities (1)-(7') on all basis pairs */
    std::vector<std::pair<std::string, bool>> check_basic_identities() const;

private:
    HopfAlgebra(FdAlgebra algebra, FpMatrix counit, FpMatrix comult, FpMatrix antipode, bool check);

    FdAlgebra alg_;
    FpMatrix eps_;   // dim x 1
    FpMatrix delta_; // dim x dim^2
    FpMatrix s_;     // dim x dim
};

/* group Hopf algebra: delta g = g (x) g, S g = g^{-1}, eps g = 1 */
HopfAlgebra group_hopf(const GroupTable& g, FieldSpec f);

/* the diagonal H-action on M (x) N (declared in algebra.hpp) */
FdModule tensor_over_field(const FdModule& m, const FdModule& n, const HopfAlgebra* hopf,
                           const FdAlgebra* scalar_algebra);

/* Hopf subalgebra K with verified closure under delta and S plus the
 * normality condition on all basis pairs */
struct NormalHopfSubalgebra {
    const HopfAlgebra* hopf = nullptr;
    SubalgebraSpan k;

    static NormalHopfSubalgebra verified(const HopfAlgebra& h, SubalgebraSpan k);
    /* group case: span of a normal subgroup */
    static NormalHopfSubalgebra of_subgroup(const HopfAlgebra& h, const std::vector<int>& elems);
};

/* quotient Hopf algebra H/HK^+ with the verified Hopf-ideal structure */
struct QuotientHopf {
    const HopfAlgebra* source = nullptr;
    Subspace ideal;        // HK^+
    Subquotient coords;    // H -> Hbar coordinates
    HopfAlgebra hbar;
    FpMatrix projection;   // dim H x dim Hbar

    static QuotientHopf build(const NormalHopfSubalgebra& nk);
};

/* Hom_K(N, M) as an Hbar-module via [n](xbar . f) = sum_i x u_i . [x v_i S . n] f */
struct HomKModule {
    Subspace carrier;  // subspace of flattened dim N x dim M maps
    FdModule module;   // over qh.hbar, in carrier coordinates
};
HomKModule hom_k_module(const FdModule& n, const FdModule& m, const NormalHopfSubalgebra& nk,
                        const QuotientHopf& qh);

/* mutually inverse Hbar-linear isomorphisms
 *   Phi : Hom_K(H, M) -> Hom_R(Hbar, M),  Psi = Phi^{-1},
 * returned in carrier coordinates (Hom_R side is the full flat space) */
struct PhiPsi {
    HomKModule hom_k;      // Hom_K(H, M)
    FdModule hom_r;        // Hom_R(Hbar, M) as Hbar-module
    FpMatrix phi;          // hom_k.carrier.dim() x (dim Hbar * dim M)
    FpMatrix psi;          // inverse direction
};
PhiPsi phi_psi(const FdModule& m, const NormalHopfSubalgebra& nk, const QuotientHopf& qh);

/* adjunction alpha : Hom_Hbar(P, Hom_K(Q, M)) ~ Hom_H(P (x) Q, M) : beta,
 * both in carrier coordinates, with mutual inverse check */
struct AdjunctionData {
    HomKModule hom_k_qm;   // Hom_K(Q, M)
    Subspace lhs;          // Hom_Hbar(P, Hom_K(Q,M)) carrier
    Subspace rhs;          // Hom_H(P (x) Q, M) carrier
    FdModule p_as_h;       // P inflated to H
    FdModule pq;           // P (x) Q over H
    FpMatrix alpha;        // lhs.dim() x rhs.dim()
    FpMatrix beta;         // rhs.dim() x lhs.dim()
};
AdjunctionData adjunction_alpha_beta(const FdModule& p_over_hbar, const FdModule& q,
                                     const FdModule& m, const NormalHopfSubalgebra& nk,
                                     const QuotientHopf& qh, const HopfAlgebra& h);

/* Hbar-module structure on M^K (well-definedness verified: H K^+ annihilates) */
struct FixedPointsModule {
    Subspace carrier;
    FdModule module; // over qh.hbar
};
FixedPointsModule fixed_points_module(const FdModule& m, const NormalHopfSubalgebra& nk,
                                      const QuotientHopf& qh);

} // namespace homalg
