#include "homalg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace homalg {

GroupTable::GroupTable(int order, std::vector<std::vector<int>> t) : n(order), table(std::move(t)) {
    if (n < 1 || static_cast<int>(table.size()) != n)
        throw std::invalid_argument("GroupTable: bad table size");
    for (auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("GroupTable: ragged table");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("GroupTable: entry out of range");
    }
    // latin square
    for (int i = 0; i < n; ++i) {
        std::set<int> r(table[i].begin(), table[i].end());
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("GroupTable: not a latin square (row)");
        std::set<int> c;
        for (int j = 0; j < n; ++j) c.insert(table[j][i]);
        if (static_cast<int>(c.size()) != n) throw std::invalid_argument("GroupTable: not a latin square (col)");
    }
    // identity
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (table[e][i] != i || table[i][e] != i) ok = false;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw std::invalid_argument("GroupTable: no identity element");
    // associativity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw std::invalid_argument("GroupTable: not associative");
}

int GroupTable::inverse(int i) const {
    for (int j = 0; j < n; ++j)
        if (table[i][j] == identity) return j;
    throw std::logic_error("GroupTable: no inverse"); // unreachable after validation
}

GroupTable GroupTable::cyclic(int order) {
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) t[i][j] = (i + j) % order;
    return GroupTable(order, t);
}

GroupTable GroupTable::klein4() { return direct_product(cyclic(2), cyclic(2)); }

GroupTable GroupTable::s3() {
    // permutations of {0,1,2} in lexicographic one-line order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> a{0, 1, 2};
    do { perms.push_back(a); } while (std::next_permutation(a.begin(), a.end()));
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]]; // j first, then i
            t[i][j] = index_of(c);
        }
    return GroupTable(6, t);
}

GroupTable GroupTable::q8() {
    // elements 1, -1, i, -i, j, -j, k, -k as indices 0..7
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // base products on {1,i,j,k} = indices {0,2,4,6}
    auto base_mul = [&](int a, int b) -> int {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 1;            // i*i = -1
        if (a == 2 && b == 4) return 6;  // i*j = k
        if (a == 4 && b == 2) return 7;  // j*i = -k
        if (a == 4 && b == 6) return 2;  // j*k = i
        if (a == 6 && b == 4) return 3;  // k*j = -i
        if (a == 6 && b == 2) return 4;  // k*i = j
        if (a == 2 && b == 6) return 5;  // i*k = -j
        return -1;
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int r = base_mul(a & ~1, b & ~1);
            int sign = (a & 1) ^ (b & 1);
            t[a][b] = sign ? neg(r) : r;
        }
    return GroupTable(8, t);
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    int n = a.n * b.n;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i1 = 0; i1 < a.n; ++i1)
        for (int i2 = 0; i2 < b.n; ++i2)
            for (int j1 = 0; j1 < a.n; ++j1)
                for (int j2 = 0; j2 < b.n; ++j2)
                    t[i1 * b.n + i2][j1 * b.n + j2] = a.table[i1][j1] * b.n + b.table[i2][j2];
    return GroupTable(n, t);
}

bool GroupTable::is_abelian() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

std::vector<int> GroupTable::subgroup_closure(std::vector<int> elems) const {
    std::set<int> s(elems.begin(), elems.end());
    s.insert(identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur) {
            if (s.insert(inverse(a)).second) grew = true;
            for (int b : cur)
                if (s.insert(table[a][b]).second) grew = true;
        }
    }
    return {s.begin(), s.end()};
}

bool GroupTable::is_normal(const std::vector<int>& subgroup) const {
    std::set<int> s(subgroup.begin(), subgroup.end());
    for (int g = 0; g < n; ++g) {
        int gi = inverse(g);
        for (int h : subgroup)
            if (!s.count(table[table[g][h]][gi])) return false;
    }
    return true;
}

QuotientGroup quotient_group(const GroupTable& g, const std::vector<int>& normal_subgroup) {
    if (!g.is_normal(normal_subgroup))
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    std::set<int> nset(normal_subgroup.begin(), normal_subgroup.end());
    QuotientGroup q;
    q.proj.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x) {
        if (q.proj[x] >= 0) continue;
        int idx = static_cast<int>(q.reps.size());
        q.reps.push_back(x);
        for (int h : normal_subgroup) q.proj[g.mul(x, h)] = idx;
    }
    int m = static_cast<int>(q.reps.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = q.proj[g.mul(q.reps[i], q.reps[j])];
    q.group = GroupTable(m, t);
    return q;
}

FdAlgebra::FdAlgebra(FieldSpec f, std::vector<FpMatrix> structure_rows, FpMatrix unit_row,
                     std::optional<GroupTable> group_tag)
    : f_(f), dim_(static_cast<int>(structure_rows.size())), structure_(std::move(structure_rows)),
      unit_(std::move(unit_row)), group_(std::move(group_tag)) {
    validate();
}

void FdAlgebra::validate() const {
    for (const auto& s : structure_)
        if (s.rows() != dim_ || s.cols() != dim_)
            throw std::invalid_argument("FdAlgebra: bad structure constant block");
    if (unit_.rows() != 1 || unit_.cols() != dim_)
        throw std::invalid_argument("FdAlgebra: bad unit row");
    // unit laws
    for (int i = 0; i < dim_; ++i) {
        FpMatrix e(f_, 1, dim_);
        e.set(0, i, 1);
        if (mul(unit_, e) != e || mul(e, unit_) != e)
            throw std::invalid_argument("FdAlgebra: unit law fails");
    }
    // associativity on basis triples
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            FpMatrix bij = basis_product(i, j);
            for (int k = 0; k < dim_; ++k) {
                FpMatrix ek(f_, 1, dim_);
                ek.set(0, k, 1);
                FpMatrix jk = basis_product(j, k);
                FpMatrix ei(f_, 1, dim_);
                ei.set(0, i, 1);
                if (mul(bij, ek) != mul(ei, jk))
                    throw std::invalid_argument("FdAlgebra: associativity fails");
            }
        }
}

FpMatrix FdAlgebra::mul(const FpMatrix& a, const FpMatrix& b) const {
    // out = sum_{i} a_i (b * structure_[i]); row j of structure_[i] is b_i*b_j
    FpMatrix out(f_, 1, dim_);
    for (int i = 0; i < dim_; ++i) {
        std::uint32_t ai = a.get(0, i);
        if (!ai) continue;
        out = out + (b * structure_[i]).scaled(ai);
    }
    return out;
}

FpMatrix FdAlgebra::left_mult(const FpMatrix& a) const {
    // x |-> a*x: row j of the result matrix is a * b_j
    FpMatrix l(f_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        FpMatrix ej(f_, 1, dim_);
        ej.set(0, j, 1);
        l.set_block(j, 0, mul(a, ej));
    }
    return l;
}

FpMatrix FdAlgebra::right_mult(const FpMatrix& a) const {
    FpMatrix r(f_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        FpMatrix ej(f_, 1, dim_);
        ej.set(0, j, 1);
        r.set_block(j, 0, mul(ej, a));
    }
    return r;
}

FpMatrix FdAlgebra::group_counit() const {
    if (!group_) throw std::logic_error("group_counit: not a group algebra");
    FpMatrix e(f_, 1, dim_);
    for (int i = 0; i < dim_; ++i) e.set(0, i, 1);
    return e;
}

FdAlgebra group_algebra(const GroupTable& g, FieldSpec f) {
    std::vector<FpMatrix> structure;
    structure.reserve(g.n);
    for (int i = 0; i < g.n; ++i) {
        FpMatrix s(f, g.n, g.n);
        for (int j = 0; j < g.n; ++j) s.set(j, g.mul(i, j), 1);
        structure.push_back(s);
    }
    FpMatrix unit(f, 1, g.n);
    unit.set(0, g.identity, 1);
    return FdAlgebra(f, std::move(structure), unit, g);
}

FdAlgebra field_as_algebra(FieldSpec f) { return group_algebra(GroupTable::trivial(), f); }

FdModule::FdModule(const FdAlgebra* a, std::vector<FpMatrix> action, bool check)
    : alg_(a), act_(std::move(action)) {
    dim_ = act_.empty() ? 0 : act_[0].rows();
    if (static_cast<int>(act_.size()) != alg_->dim())
        throw std::invalid_argument("FdModule: one action matrix per algebra basis element required");
    if (check) validate();
}

void FdModule::validate() const {
    const FieldSpec f = field();
    for (const auto& m : act_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("FdModule: bad action shape");
    // unital
    if (act_of(alg_->unit()) != FpMatrix::identity(f, dim_))
        throw std::invalid_argument("FdModule: unit does not act as identity");
    // multiplicative on basis pairs: act(b_i b_j) == act(b_j) * act(b_i)
    for (int i = 0; i < alg_->dim(); ++i)
        for (int j = 0; j < alg_->dim(); ++j)
            if (act_of(alg_->basis_product(i, j)) != act_[j] * act_[i])
                throw std::invalid_argument("FdModule: action not multiplicative");
}

FpMatrix FdModule::act_of(const FpMatrix& elem) const {
    FpMatrix out(field(), dim_, dim_);
    for (int i = 0; i < alg_->dim(); ++i) {
        std::uint32_t c = elem.get(0, i);
        if (c) out = out + act_[i].scaled(c);
    }
    return out;
}

FdModule FdModule::zero(const FdAlgebra* a) {
    return FdModule(a, std::vector<FpMatrix>(a->dim(), FpMatrix(a->field(), 0, 0)), false);
}

FdModule FdModule::trivial(const FdAlgebra* a) {
    FpMatrix eps = a->group_counit();
    std::vector<FpMatrix> act;
    act.reserve(a->dim());
    for (int i = 0; i < a->dim(); ++i) {
        FpMatrix m(a->field(), 1, 1);
        m.set(0, 0, eps.get(0, i));
        act.push_back(m);
    }
    return FdModule(a, std::move(act));
}

FdModule FdModule::regular(const FdAlgebra* a) {
    std::vector<FpMatrix> act;
    act.reserve(a->dim());
    for (int i = 0; i < a->dim(); ++i) {
        FpMatrix e(a->field(), 1, a->dim());
        e.set(0, i, 1);
        act.push_back(a->left_mult(e));
    }
    return FdModule(a, std::move(act));
}

FdModule FdModule::direct_sum(const FdModule& m, const FdModule& n) {
    if (m.alg_ != n.alg_) throw std::invalid_argument("direct_sum: different algebras");
    std::vector<FpMatrix> act;
    for (int i = 0; i < m.alg_->dim(); ++i) {
        FpMatrix b(m.field(), m.dim() + n.dim(), m.dim() + n.dim());
        b.set_block(0, 0, m.act_[i]);
        b.set_block(m.dim(), m.dim(), n.act_[i]);
        act.push_back(b);
    }
    return FdModule(m.alg_, std::move(act), false);
}

FdModule FdModule::dual() const {
    const auto& g = alg_->group();
    if (!g) throw std::logic_error("FdModule::dual: needs a group algebra");
    std::vector<FpMatrix> act;
    act.reserve(alg_->dim());
    for (int i = 0; i < alg_->dim(); ++i)
        act.push_back(act_[g->inverse(i)].transpose());
    return FdModule(alg_, std::move(act));
}

FdModule FdModule::submodule(const Subspace& s) const {
    std::vector<FpMatrix> act;
    for (int i = 0; i < alg_->dim(); ++i) {
        FpMatrix img = s.basis * act_[i];
        auto x = FpMatrix::solve(s.basis, img);
        if (!x) throw NotStable("submodule: subspace not stable under the action");
        act.push_back(*x);
    }
    return FdModule(alg_, std::move(act), false);
}

FdModule FdModule::quotient(const Subquotient& q) const {
    std::vector<FpMatrix> act;
    for (int i = 0; i < alg_->dim(); ++i)
        act.push_back(induced_map_on_subquotients(act_[i], q, q));
    return FdModule(alg_, std::move(act), false);
}

bool is_module_map(const FdModule& m, const FdModule& n, const FpMatrix& f) {
    for (int i = 0; i < m.algebra().dim(); ++i)
        if (m.act(i) * f != f * n.act(i)) return false;
    return true;
}

SubalgebraSpan SubalgebraSpan::verified(const FdAlgebra& a, FpMatrix rows) {
    Subspace s(a.dim(), rows);
    if (!s.contains_row(a.unit()))
        throw SubalgebraNotUnital("subalgebra span does not contain the unit");
    for (int i = 0; i < s.basis.rows(); ++i)
        for (int j = 0; j < s.basis.rows(); ++j)
            if (!s.contains_row(a.mul(s.basis.row(i), s.basis.row(j))))
                throw std::invalid_argument("subalgebra span not closed under multiplication");
    return SubalgebraSpan{s.basis};
}

SubalgebraSpan SubalgebraSpan::scalars(const FdAlgebra& a) {
    return SubalgebraSpan{a.unit()};
}

SubalgebraSpan SubalgebraSpan::whole(const FdAlgebra& a) {
    return SubalgebraSpan{FpMatrix::identity(a.field(), a.dim())};
}

SubalgebraSpan SubalgebraSpan::of_subgroup(const FdAlgebra& a, const std::vector<int>& elems) {
    if (!a.group()) throw std::logic_error("of_subgroup: needs a group algebra");
    auto closed = a.group()->subgroup_closure(elems);
    FpMatrix rows(a.field(), static_cast<int>(closed.size()), a.dim());
    for (std::size_t i = 0; i < closed.size(); ++i) rows.set(static_cast<int>(i), closed[i], 1);
    return SubalgebraSpan{rows};
}

Subspace hom_module_space(const FdModule& m, const FdModule& n, const SubalgebraSpan& over) {
    const FieldSpec f = m.field();
    const int dm = m.dim(), dn = n.dim();
    // constraints: act_m(s) F - F act_n(s) = 0, linear in vec(F) (row-major)
    FpMatrix constraints(f, dm * dn, 0);
    for (int s = 0; s < over.span.rows(); ++s) {
        FpMatrix am = m.act_of(over.span.row(s));
        FpMatrix an = n.act_of(over.span.row(s));
        FpMatrix t = am.transpose().kron(FpMatrix::identity(f, dn)) -
                     FpMatrix::identity(f, dm).kron(an);
        constraints = constraints.hstack(t);
    }
    return Subspace(dm * dn, constraints.left_kernel());
}

std::vector<FpMatrix> sample_module_maps(const FdModule& m, const FdModule& n,
                                         const SubalgebraSpan& over, int count, std::uint64_t seed) {
    Subspace h = hom_module_space(m, n, over);
    std::vector<FpMatrix> out;
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        return state;
    };
    const FieldSpec f = m.field();
    for (int c = 0; c < count; ++c) {
        FpMatrix flat(f, 1, m.dim() * n.dim());
        for (int i = 0; i < h.dim(); ++i) {
            std::uint32_t coef = static_cast<std::uint32_t>(next() % f.p);
            if (coef) flat = flat + h.basis.row(i).scaled(coef);
        }
        FpMatrix mat(f, m.dim(), n.dim());
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < n.dim(); ++j) mat.set(i, j, flat.get(0, i * n.dim() + j));
        out.push_back(mat);
    }
    return out;
}

Subspace fixed_points(const FdModule& m, const SubalgebraSpan& k, const FpMatrix& counit_row) {
    const FieldSpec f = m.field();
    FpMatrix constraints(f, m.dim(), 0);
    for (int s = 0; s < k.span.rows(); ++s) {
        FpMatrix a = m.act_of(k.span.row(s));
        // eps(a) as scalar
        std::uint32_t e = 0;
        for (int i = 0; i < counit_row.cols(); ++i)
            e = f.add(e, f.mul(k.span.get(s, i), counit_row.get(0, i)));
        constraints = constraints.hstack(a - FpMatrix::identity(f, m.dim()).scaled(e));
    }
    return Subspace(m.dim(), constraints.left_kernel());
}

Coinduced coinduced(const FdModule& m) {
    const FdAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const int da = a.dim(), dm = m.dim();
    std::vector<FpMatrix> act;
    act.reserve(da);
    for (int i = 0; i < da; ++i) {
        FpMatrix ei(f, 1, da);
        ei.set(0, i, 1);
        // (x.f)(a') = f(a' x): F' = R_x F, as vec: kron(R_x^T, id)
        act.push_back(a.right_mult(ei).transpose().kron(FpMatrix::identity(f, dm)));
    }
    FdModule big(&a, std::move(act));
    // m |-> (a |-> a.m): basis vector e_t goes to the flat of (i,j) |-> act(i)[t][j]
    FpMatrix emb(f, dm, da * dm);
    for (int t = 0; t < dm; ++t)
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < dm; ++j) {
                auto v = m.act(i).get(t, j);
                if (v) emb.set(t, i * dm + j, v);
            }
    if (emb.rank() != dm) throw std::logic_error("coinduced: embedding not injective");
    for (int i = 0; i < da; ++i)
        if (m.act(i) * emb != emb * big.act(i))
            throw std::logic_error("coinduced: embedding not A-linear");
    return Coinduced{std::move(big), std::move(emb)};
}

FpMatrix local_radical_span(const FdAlgebra& a) {
    const FieldSpec f = a.field();
    if (!a.group()) throw std::logic_error("local_radical_span: needs a group algebra");
    const GroupTable& g = *a.group();
    // augmentation ideal basis: g_i - e for g_i != e
    FpMatrix rows(f, g.n - 1, a.dim());
    int r = 0;
    for (int i = 0; i < g.n; ++i) {
        if (i == g.identity) continue;
        rows.set(r, i, 1);
        rows.set(r, g.identity, f.neg(1));
        ++r;
    }
    // nilpotency of the span as an ideal power chain
    Subspace cur(a.dim(), rows);
    for (int iter = 0; iter <= a.dim() + 1 && cur.dim() > 0; ++iter) {
        FpMatrix next(f, 0, a.dim());
        for (int i = 0; i < cur.basis.rows(); ++i)
            for (int j = 0; j < rows.rows(); ++j)
                next = next.vstack(a.mul(cur.basis.row(i), rows.row(j)));
        Subspace ns(a.dim(), next);
        if (ns.dim() == cur.dim() && cur.contains(ns))
            throw NotNilpotent("radical span is not nilpotent (group is not a p-group over F_p)");
        cur = ns;
    }
    if (cur.dim() != 0) throw NotNilpotent("radical span is not nilpotent");
    return rows;
}

RadicalSeries socle_radical_top(const FdModule& m, const FpMatrix& radical_span) {
    const FieldSpec f = m.field();
    // socle: joint kernel of the radical generators; rad.M: span of their images
    FpMatrix stacked(f, m.dim(), 0);
    FpMatrix allimg(f, 0, m.dim());
    for (int s = 0; s < radical_span.rows(); ++s) {
        FpMatrix a = m.act_of(radical_span.row(s));
        stacked = stacked.hstack(a);
        allimg = allimg.vstack(a);
    }
    Subspace socle(m.dim(), stacked.left_kernel());
    Subspace rad(m.dim(), allimg);
    return RadicalSeries{socle, rad, make_subquotient(rad, Subspace::full(f, m.dim()))};
}

} // namespace homalg
