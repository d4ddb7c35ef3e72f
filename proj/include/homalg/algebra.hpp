#pragma once

#include "homalg/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homalg {

struct SubalgebraNotUnital : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotStable : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotNilpotent : std::invalid_argument { using std::invalid_argument::invalid_argument; };

/* Finite group given by its Cayley table: table[i][j] = index of g_i * g_j.
 * Latin-square property, associativity and the identity are checked. */
struct GroupTable {
    int n = 1;
    std::vector<std::vector<int>> table;
    int identity = 0;

    GroupTable() : table{{0}} {}
    GroupTable(int order, std::vector<std::vector<int>> t);

    int mul(int i, int j) const { return table[i][j]; }
    int inverse(int i) const;

    static GroupTable trivial() { return GroupTable(); }
    static GroupTable cyclic(int n);
    static GroupTable klein4();
    static GroupTable s3();
    static GroupTable q8();
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

    bool is_abelian() const;
    /* closure of the given element set; throws if not a subgroup when verify is set */
    std::vector<int> subgroup_closure(std::vector<int> elems) const;
    bool is_normal(const std::vector<int>& subgroup) const;
};

/* quotient group by a verified normal subgroup, with the coset projection */
struct QuotientGroup {
    GroupTable group;              // the quotient
    std::vector<int> proj;         // element of G -> coset index
    std::vector<int> reps;         // coset index -> smallest representative in G
};
QuotientGroup quotient_group(const GroupTable& g, const std::vector<int>& normal_subgroup);

/* Finite-dimensional unital associative algebra over GF(p), given by structure
 * constants. smul[i] holds the products b_i * b_j as rows j. */
class FdAlgebra {
public:
    FdAlgebra(FieldSpec f, std::vector<FpMatrix> structure_rows, FpMatrix unit_row,
              std::optional<GroupTable> group_tag = std::nullopt);

    FieldSpec field() const { return f_; }
    int dim() const { return dim_; }
    const FpMatrix& unit() const { return unit_; }

    /* product of basis elements as a coordinate row */
    FpMatrix basis_product(int i, int j) const { return structure_[i].row(j); }
    FpMatrix mul(const FpMatrix& a, const FpMatrix& b) const;

    /* matrix of left multiplication by a: x |-> a*x (row convention x * L) */
    FpMatrix left_mult(const FpMatrix& a) const;
    /* matrix of right multiplication by a: x |-> x*a */
    FpMatrix right_mult(const FpMatrix& a) const;

    const std::optional<GroupTable>& group() const { return group_; }
    /* counit of the group algebra (all-ones); only for group-tagged algebras */
    FpMatrix group_counit() const;

private:
    FieldSpec f_;
    int dim_;
    std::vector<FpMatrix> structure_; // structure_[i].row(j) = b_i * b_j
    FpMatrix unit_;
    std::optional<GroupTable> group_;

    void validate() const;
};

FdAlgebra group_algebra(const GroupTable& g, FieldSpec f);
FdAlgebra field_as_algebra(FieldSpec f);

/* Left module over an FdAlgebra; act[i] is the matrix of the action of b_i in
 * row convention, i.e. b_i . m = m * act[i]. */
class FdModule {
public:
    FdModule() = default;
    FdModule(const FdAlgebra* a, std::vector<FpMatrix> action, bool check = true);

    const FdAlgebra& algebra() const { return *alg_; }
    const FdAlgebra* algebra_ptr() const { return alg_; }
    FieldSpec field() const { return alg_->field(); }
    int dim() const { return dim_; }

    const FpMatrix& act(int i) const { return act_[i]; }
    FpMatrix act_of(const FpMatrix& elem) const; // action matrix of an algebra element

    void validate() const;

    static FdModule zero(const FdAlgebra* a);
    static FdModule trivial(const FdAlgebra* a); // group algebras only (counit action)
    static FdModule regular(const FdAlgebra* a);
    static FdModule direct_sum(const FdModule& m, const FdModule& n);

    /* dual module along the group antipode g |-> g^{-1} (group algebras only) */
    FdModule dual() const;

    /* submodule on a stable subspace, in the subspace's coordinates */
    FdModule submodule(const Subspace& s) const;
    /* quotient by a stable subspace, in quotient coordinates */
    FdModule quotient(const Subquotient& q) const;

private:
    const FdAlgebra* alg_ = nullptr;
    int dim_ = 0;
    std::vector<FpMatrix> act_;
};

/* module map f : M -> N (dim M x dim N), checked to commute with the action */
struct ModuleMap {
    const FdModule* src = nullptr;
    const FdModule* tgt = nullptr;
    FpMatrix matrix;
};
bool is_module_map(const FdModule& m, const FdModule& n, const FpMatrix& f);

/* spanning set data for a subalgebra; rows are coordinate vectors in A */
struct SubalgebraSpan {
    FpMatrix span; // rows spanning the subalgebra

    /* verified closure under multiplication and the unit; throws otherwise */
    static SubalgebraSpan verified(const FdAlgebra& a, FpMatrix rows);
    static SubalgebraSpan scalars(const FdAlgebra& a);
    static SubalgebraSpan whole(const FdAlgebra& a);
    /* span of a subgroup inside a group algebra */
    static SubalgebraSpan of_subgroup(const FdAlgebra& a, const std::vector<int>& elems);
};

/* k-linear maps M -> N commuting with every spanning element of the
 * subalgebra, as a subspace of the dim(M)*dim(N) coordinate space (row-major
 * flattening of the matrix) */
Subspace hom_module_space(const FdModule& m, const FdModule& n, const SubalgebraSpan& over);

/* sample deterministic "random" module maps out of hom_module_space */
std::vector<FpMatrix> sample_module_maps(const FdModule& m, const FdModule& n,
                                         const SubalgebraSpan& over, int count, std::uint64_t seed);

class HopfAlgebra; // hopf.hpp

/* tensor product over the base field; with a Hopf structure the diagonal
 * action is installed, otherwise the carrier is a module over GF(p) */
FdModule tensor_over_field(const FdModule& m, const FdModule& n, const HopfAlgebra* hopf,
                           const FdAlgebra* scalar_algebra);

/* M^K = { m : a.m = eps(a) m for a in the spanning set }; counit_row gives
 * eps on the coordinates of A */
Subspace fixed_points(const FdModule& m, const SubalgebraSpan& k, const FpMatrix& counit_row);

/* coinduced module Hom_k(A, M) with the left action [a'](x.f) = [a' x]f,
 * together with the canonical embedding M -> Hom_k(A, M) (verified injective
 * and A-linear) */
struct Coinduced {
    FdModule module;
    FpMatrix embedding; // dim M x dim A * dim M
};
Coinduced coinduced(const FdModule& m);

/* socle / radical submodule / top for a verified-nilpotent radical span */
struct RadicalSeries {
    Subspace socle;
    Subspace radical_submodule; // rad(A) . M
    Subquotient top;            // M / rad(A) . M
};
RadicalSeries socle_radical_top(const FdModule& m, const FpMatrix& radical_span);

/* radical span of a p-group algebra over F_p: the augmentation ideal,
 * verified nilpotent (NotNilpotent otherwise) */
FpMatrix local_radical_span(const FdAlgebra& a);

} // namespace homalg
