#include "qs/algebra.hpp"

#include <random>

namespace qs {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::No || b == Verdict::No) return Verdict::No;
    if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
    return Verdict::Yes;
}

// ---------------------------------------------------------------- Algebra

namespace {

Matrix combination(const std::vector<Matrix>& ms, const std::vector<Scalar>& coeffs, std::size_t n, Field f) {
    Matrix out(n, n, f);
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (coeffs[k]) out = out + ms[k].scaled(coeffs[k]);
    return out;
}

std::vector<Scalar> basis_vector(std::size_t n, std::size_t i) {
    std::vector<Scalar> v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

AlgebraPtr Algebra::create(std::string name, Field field, std::vector<std::string> labels, StructureConstants mul,
                           std::vector<Scalar> unit, std::vector<std::size_t> idempotents,
                           std::vector<std::size_t> radical) {
    const std::size_t n = labels.size();
    if (n == 0) throw MathError("algebra must have positive dimension");
    if (mul.size() != n) throw MathError("structure constants: expected " + std::to_string(n) + " blocks");
    for (auto& row : mul) {
        if (row.size() != n) throw MathError("structure constants: ragged block");
        for (auto& v : row) {
            if (v.size() != n) throw MathError("structure constants: ragged entry");
            for (auto& c : v) c %= field.p;
        }
    }
    if (unit.size() != n) throw MathError("unit vector has wrong length");
    for (auto& u : unit) u %= field.p;

    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->name_ = std::move(name);
    a->field_ = field;
    a->labels_ = std::move(labels);
    a->mul_ = std::move(mul);
    a->unit_ = std::move(unit);
    a->idempotents_ = std::move(idempotents);
    a->radical_ = std::move(radical);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(n, n, field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) l.set(k, j, a->mul_[i][j][k]);
        a->left_mult_.push_back(std::move(l));
    }

    // associativity: the left regular representation is multiplicative
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(a->left_mult_[i] * a->left_mult_[j] == combination(a->left_mult_, a->mul_[i][j], n, field)))
                throw MathError("multiplication is not associative at (" + a->labels_[i] + ", " + a->labels_[j] + ")");
    for (std::size_t j = 0; j < n; ++j) {
        const auto e = basis_vector(n, j);
        if (a->product(a->unit_, e) != e || a->product(e, a->unit_) != e)
            throw MathError("unit is not two-sided at " + a->labels_[j]);
    }

    std::vector<int> role(n, 0);
    for (std::size_t e : a->idempotents_) {
        if (e >= n || role[e]) throw MathError("idempotent index out of range or repeated");
        role[e] = 1;
    }
    for (std::size_t r : a->radical_) {
        if (r >= n || role[r]) throw MathError("radical index out of range or overlaps idempotents");
        role[r] = 2;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!role[i]) throw MathError("basis element " + a->labels_[i] + " is neither idempotent nor radical");

    std::vector<Scalar> sum(n, 0);
    for (std::size_t e : a->idempotents_) {
        sum[e] = field.add(sum[e], 1);
        for (std::size_t e2 : a->idempotents_) {
            const auto prod = a->product(basis_vector(n, e), basis_vector(n, e2));
            if (prod != (e == e2 ? basis_vector(n, e) : std::vector<Scalar>(n, 0)))
                throw MathError("designated idempotents are not orthogonal idempotents");
        }
    }
    if (sum != a->unit_) throw MathError("designated idempotents do not sum to the unit");

    auto in_radical = [&](const std::vector<Scalar>& v) {
        for (std::size_t e : a->idempotents_)
            if (v[e]) return false;
        return true;
    };
    for (std::size_t r : a->radical_)
        for (std::size_t i = 0; i < n; ++i)
            if (!in_radical(a->product(basis_vector(n, i), basis_vector(n, r))) ||
                !in_radical(a->product(basis_vector(n, r), basis_vector(n, i))))
                throw MathError("radical basis does not span a two-sided ideal");

    // nilpotence: J^(n+1) = 0
    std::vector<std::vector<Scalar>> power;
    for (std::size_t r : a->radical_) power.push_back(basis_vector(n, r));
    for (std::size_t step = 0; step <= n && !power.empty(); ++step) {
        Matrix span(n, 0, field);
        for (const auto& s : power)
            for (std::size_t r : a->radical_) span = hstack(span, Matrix::column(a->product(s, basis_vector(n, r)), field));
        const Matrix basis = column_basis(span);
        power.clear();
        for (std::size_t c = 0; c < basis.cols(); ++c) power.push_back(basis.col(c));
    }
    if (!power.empty()) throw MathError("radical is not nilpotent");
    return a;
}

Matrix Algebra::right_mult(std::size_t i) const {
    const std::size_t n = dim();
    Matrix r(n, n, field_);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r.set(k, j, mul_[j][i][k]);
    return r;
}

std::vector<Scalar> Algebra::product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    const std::size_t n = dim();
    std::vector<Scalar> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!v[j]) continue;
            const Scalar uv = field_.mul(u[i], v[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (mul_[i][j][k]) out[k] = field_.add(out[k], field_.mul(uv, mul_[i][j][k]));
        }
    }
    return out;
}

AlgebraPtr Algebra::opposite() const {
    StructureConstants op = mul_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) op[i][j] = mul_[j][i];
    return create(name_ + "^op", field_, labels_, std::move(op), unit_, idempotents_, radical_);
}

bool Algebra::same_as(const Algebra& o) const {
    return field_ == o.field_ && mul_ == o.mul_ && unit_ == o.unit_ && idempotents_ == o.idempotents_ &&
           radical_ == o.radical_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
    if (!alg_) throw MathError("module without algebra");
    const std::size_t n = alg_->dim();
    const Field f = alg_->field();
    if (action_.size() != n) throw MathError("module needs one action matrix per algebra basis element");
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_ || m.field().p != f.p)
            throw MathError("action matrix has wrong shape or field");
    if (!(combination(action_, alg_->unit(), dim_, f) == Matrix::identity(dim_, f)))
        throw MathError("unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(action_[i] * action_[j] == combination(action_, alg_->mul()[i][j], dim_, f)))
                throw MathError("action violates the relation for " + alg_->labels()[i] + "*" + alg_->labels()[j]);
}

Module Module::zero(AlgebraPtr alg) {
    std::vector<Matrix> act(alg->dim(), Matrix(0, 0, alg->field()));
    return Module(std::move(alg), 0, std::move(act));
}

bool Module::operator==(const Module& o) const {
    return dim_ == o.dim_ && same_algebra(alg_, o.alg_) && action_ == o.action_;
}

bool intertwines(const Module& src, const Module& tgt, const Matrix& m) {
    if (m.rows() != tgt.dim() || m.cols() != src.dim()) return false;
    if (!same_algebra(src.algebra(), tgt.algebra())) return false;
    for (std::size_t i = 0; i < src.actions().size(); ++i)
        if (!(tgt.action(i) * m == m * src.action(i))) return false;
    return true;
}

ModuleMap::ModuleMap(Module src, Module tgt, Matrix m) : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (!intertwines(source, target, matrix)) throw MathError("matrix is not a module homomorphism");
}

ModuleMap make_map_unchecked(Module src, Module tgt, Matrix m) {
    ModuleMap f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    f.matrix = std::move(m);
    return f;
}

ModuleMap ModuleMap::zero(const Module& src, const Module& tgt) {
    return make_map_unchecked(src, tgt, Matrix(tgt.dim(), src.dim(), src.field()));
}

ModuleMap ModuleMap::identity(const Module& m) { return make_map_unchecked(m, m, Matrix::identity(m.dim(), m.field())); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.source.dim() != f.target.dim()) throw MathError("composition of incompatible module maps");
    return make_map_unchecked(f.source, g.target, g.matrix * f.matrix);
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
    return make_map_unchecked(a.source, a.target, a.matrix + b.matrix);
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
    return make_map_unchecked(a.source, a.target, a.matrix - b.matrix);
}

Module regular_module(const AlgebraPtr& alg) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < alg->dim(); ++i) act.push_back(alg->left_mult(i));
    return Module(alg, alg->dim(), std::move(act));
}

Module simple_module(const AlgebraPtr& alg, std::size_t t) {
    if (t >= alg->idempotents().size()) throw MathError("simple module index out of range");
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Matrix m(1, 1, alg->field());
        if (i == alg->idempotents()[t]) m.set(0, 0, 1);
        act.push_back(std::move(m));
    }
    return Module(alg, 1, std::move(act));
}

Embedded indecomposable_projective(const AlgebraPtr& alg, std::size_t t) {
    if (t >= alg->idempotents().size()) throw MathError("idempotent index out of range");
    return submodule(regular_module(alg), alg->right_mult(alg->idempotents()[t]));
}

Embedded submodule(const Module& m, const Matrix& basis) {
    const Matrix b = column_basis(basis);
    std::vector<Matrix> act;
    for (const auto& a : m.actions()) {
        auto x = solve_matrix(b, a * b);
        if (!x) throw MathError("subspace is not a submodule");
        act.push_back(std::move(*x));
    }
    Module sub(m.algebra(), b.cols(), std::move(act));
    return {sub, make_map_unchecked(sub, m, b)};
}

Projected quotient(const Module& m, const Matrix& basis) {
    const Field f = m.field();
    const Matrix q = cokernel_projection(basis.cols() ? basis : Matrix(m.dim(), 0, f));
    const auto right_inv = solve_matrix(q, Matrix::identity(q.rows(), f));
    if (!right_inv) throw MathError("quotient projection is not surjective");
    std::vector<Matrix> act;
    for (const auto& a : m.actions()) {
        if (!(q * a * basis).is_zero()) throw MathError("subspace is not a submodule");
        act.push_back(q * a * *right_inv);
    }
    Module quo(m.algebra(), q.rows(), std::move(act));
    return {quo, make_map_unchecked(m, quo, q)};
}

Subquotients subquotients(const ModuleMap& f) {
    const Matrix k = kernel(f.matrix);
    const Matrix im = column_basis(f.matrix);
    Subquotients s{submodule(f.source, k), submodule(f.target, im), quotient(f.target, im), {}};
    auto co = solve_matrix(s.image.inclusion.matrix, f.matrix);
    s.corestriction = make_map_unchecked(f.source, s.image.module, *co);
    return s;
}

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& alg) {
    const Field f = alg->field();
    std::size_t total = 0;
    for (const auto& m : parts) total += m.dim();
    std::vector<Matrix> act(alg->dim(), Matrix(total, total, f));
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < alg->dim(); ++i) act[i].set_block(off, off, m.action(i));
        off += m.dim();
    }
    DirectSum ds;
    ds.sum = Module(alg, total, std::move(act));
    off = 0;
    for (const auto& m : parts) {
        Matrix inj(total, m.dim(), f), proj(m.dim(), total, f);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            inj.set(off + i, i, 1);
            proj.set(i, off + i, 1);
        }
        ds.injections.push_back(make_map_unchecked(m, ds.sum, inj));
        ds.projections.push_back(make_map_unchecked(ds.sum, m, proj));
        off += m.dim();
    }
    return ds;
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}, a.algebra()).sum; }

ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b) {
    return make_map_unchecked(direct_sum(a.source, b.source), direct_sum(a.target, b.target),
                              qs::direct_sum(a.matrix, b.matrix));
}

Module dual(const Module& m, const AlgebraPtr& over) {
    std::vector<Matrix> act;
    for (const auto& a : m.actions()) act.push_back(a.transpose());
    return Module(over, m.dim(), std::move(act));
}

ModuleMap dual(const ModuleMap& f, const Module& dual_source, const Module& dual_target) {
    // f: M -> N gives DN -> DM; dual_source = DN, dual_target = DM
    return make_map_unchecked(dual_source, dual_target, f.matrix.transpose());
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
    if (!same_algebra(m.algebra(), n.algebra())) throw MathError("hom_basis: modules over different algebras");
    const std::size_t dm = m.dim(), dn = n.dim();
    const Field f = m.field();
    std::vector<ModuleMap> out;
    if (dm == 0 || dn == 0) return out;
    const std::size_t vars = dm * dn;
    const std::size_t na = m.actions().size();
    Matrix eq(na * vars, vars, f);
    for (std::size_t i = 0; i < na; ++i) {
        const Matrix& am = m.action(i);
        const Matrix& an = n.action(i);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                const std::size_t row = i * vars + r * dm + c;
                for (std::size_t k = 0; k < dn; ++k)
                    if (an(r, k)) eq.add_to(row, k * dm + c, an(r, k));
                for (std::size_t k = 0; k < dm; ++k)
                    if (am(k, c)) eq.add_to(row, r * dm + k, f.neg(am(k, c)));
            }
    }
    const Matrix ker = kernel(eq);
    for (std::size_t t = 0; t < ker.cols(); ++t) {
        Matrix h(dn, dm, f);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) h.set(r, c, ker(r * dm + c, t));
        out.push_back(make_map_unchecked(m, n, std::move(h)));
    }
    return out;
}

namespace {

Matrix vectorized(const std::vector<Matrix>& ms, std::size_t rows, std::size_t cols, Field f) {
    Matrix a(rows * cols, ms.size(), f);
    for (std::size_t t = 0; t < ms.size(); ++t)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a.set(r * cols + c, t, ms[t](r, c));
    return a;
}

std::vector<Scalar> flatten(const Matrix& m) {
    std::vector<Scalar> v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

}  // namespace

std::optional<std::vector<Scalar>> hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
    if (basis.empty()) {
        if (f.matrix.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    std::vector<Matrix> ms;
    for (const auto& b : basis) ms.push_back(b.matrix);
    const auto sol = solve(vectorized(ms, f.matrix.rows(), f.matrix.cols(), f.matrix.field()), flatten(f.matrix));
    return sol.particular;
}

ModuleMap hom_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coeffs, const Module& m,
                          const Module& n) {
    Matrix acc(n.dim(), m.dim(), m.field());
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (coeffs[t]) acc = acc + basis[t].matrix.scaled(coeffs[t]);
    return make_map_unchecked(m, n, std::move(acc));
}

Embedded radical(const Module& m) {
    Matrix span(m.dim(), 0, m.field());
    for (std::size_t r : m.algebra()->radical()) span = hstack(span, m.action(r));
    return submodule(m, span);
}

ProjectiveCover projective_cover(const Module& m) {
    const auto& alg = m.algebra();
    const Field f = m.field();
    const Embedded rad = radical(m);
    const Matrix top = cokernel_projection(rad.inclusion.matrix);

    ProjectiveCover pc;
    std::vector<Module> parts;
    std::vector<Matrix> blocks;
    pc.multiplicities.assign(alg->idempotents().size(), 0);
    for (std::size_t t = 0; t < alg->idempotents().size(); ++t) {
        const Matrix& e_act = m.action(alg->idempotents()[t]);
        const auto pivots = rref(top * e_act).pivots;
        if (pivots.empty()) continue;
        const Embedded pt = indecomposable_projective(alg, t);
        const Matrix& basis = pt.inclusion.matrix;  // columns in algebra coordinates
        for (std::size_t j : pivots) {
            const Matrix v = Matrix::column(e_act.col(j), f);
            Matrix blk(m.dim(), basis.cols(), f);
            for (std::size_t s = 0; s < basis.cols(); ++s) {
                Matrix img(m.dim(), 1, f);
                for (std::size_t l = 0; l < alg->dim(); ++l)
                    if (basis(l, s)) img = img + (m.action(l) * v).scaled(basis(l, s));
                blk.set_block(0, s, img);
            }
            std::size_t off = 0;
            for (const auto& p : parts) off += p.dim();
            pc.summands.emplace_back(t, off);
            parts.push_back(pt.module);
            blocks.push_back(std::move(blk));
            ++pc.multiplicities[t];
        }
    }
    const DirectSum ds = direct_sum(parts, alg);
    Matrix epi(m.dim(), ds.sum.dim(), f);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        epi.set_block(0, off, b);
        off += b.cols();
    }
    pc.projective = ds.sum;
    pc.epi = make_map_unchecked(ds.sum, m, std::move(epi));
    if (!pc.epi.is_epi()) throw MathError("projective cover construction failed to be surjective");
    return pc;
}

InjectiveEnvelope injective_envelope(const Module& m) {
    const AlgebraPtr op = m.algebra()->opposite();
    const Module dm = dual(m, op);
    const ProjectiveCover pc = projective_cover(dm);
    const Module inj = dual(pc.projective, m.algebra());
    return {inj, make_map_unchecked(m, inj, pc.epi.matrix.transpose())};
}

std::optional<ModuleMap> factor_through_source(const ModuleMap& f, const ModuleMap& h) {
    // g o f = h, g : target(f) -> target(h)
    const auto basis = hom_basis(f.target, h.target);
    std::vector<Matrix> ms;
    for (const auto& g : basis) ms.push_back(g.matrix * f.matrix);
    if (ms.empty()) {
        if (h.matrix.is_zero()) return ModuleMap::zero(f.target, h.target);
        return std::nullopt;
    }
    const auto sol = solve(vectorized(ms, h.matrix.rows(), h.matrix.cols(), h.matrix.field()), flatten(h.matrix));
    if (!sol.particular) return std::nullopt;
    return hom_combination(basis, *sol.particular, f.target, h.target);
}

std::optional<ModuleMap> factor_through_target(const ModuleMap& f, const ModuleMap& h) {
    // f o g = h, g : source(h) -> source(f)
    const auto basis = hom_basis(h.source, f.source);
    std::vector<Matrix> ms;
    for (const auto& g : basis) ms.push_back(f.matrix * g.matrix);
    if (ms.empty()) {
        if (h.matrix.is_zero()) return ModuleMap::zero(h.source, f.source);
        return std::nullopt;
    }
    const auto sol = solve(vectorized(ms, h.matrix.rows(), h.matrix.cols(), h.matrix.field()), flatten(h.matrix));
    if (!sol.particular) return std::nullopt;
    return hom_combination(basis, *sol.particular, h.source, f.source);
}

bool factors_through_projective(const ModuleMap& f) {
    if (f.is_zero()) return true;
    const auto pc = projective_cover(f.target);
    return factor_through_target(pc.epi, f).has_value();
}

SplitClass split_class(const Module& m) {
    SplitClass sc;
    const auto pc = projective_cover(m);
    if (auto s = factor_through_target(pc.epi, ModuleMap::identity(m))) {
        sc.is_projective = true;
        sc.section = std::move(s);
    }
    const auto ie = injective_envelope(m);
    if (auto r = factor_through_source(ie.mono, ModuleMap::identity(m))) {
        sc.is_injective = true;
        sc.retraction = std::move(r);
    }
    return sc;
}

Module syzygy(const Module& m, int n) {
    Module cur = m;
    for (int i = 0; i < n; ++i) {
        if (cur.dim() == 0) break;
        const auto pc = projective_cover(cur);
        cur = submodule(pc.projective, kernel(pc.epi.matrix)).module;
    }
    for (int i = 0; i > n; --i) {
        if (cur.dim() == 0) break;
        const auto ie = injective_envelope(cur);
        cur = quotient(ie.injective, ie.mono.matrix).module;
    }
    return cur;
}

IsoSearch find_isomorphism(const Module& m, const Module& n, const IsoSearchOptions& opts) {
    IsoSearch out;
    if (!same_algebra(m.algebra(), n.algebra()) || m.dim() != n.dim()) {
        out.verdict = Verdict::No;
        return out;
    }
    if (m.dim() == 0) {
        out.verdict = Verdict::Yes;
        out.iso = ModuleMap::zero(m, n);
        return out;
    }
    for (std::size_t i = 0; i < m.actions().size(); ++i)
        if (rank(m.action(i)) != rank(n.action(i))) {
            out.verdict = Verdict::No;
            return out;
        }
    const auto basis = hom_basis(m, n);
    const Field f = m.field();
    auto try_coeffs = [&](const std::vector<Scalar>& c) -> bool {
        ModuleMap g = hom_combination(basis, c, m, n);
        if (rank(g.matrix) == m.dim()) {
            out.iso = std::move(g);
            return true;
        }
        return false;
    };
    if (basis.empty()) {
        out.verdict = Verdict::No;
        return out;
    }
    if (basis.size() <= opts.exhaustive_bound) {
        std::vector<Scalar> c(basis.size(), 0);
        while (true) {
            std::size_t k = 0;
            while (k < c.size() && c[k] == f.p - 1) c[k++] = 0;
            if (k == c.size()) break;
            ++c[k];
            if (try_coeffs(c)) {
                out.verdict = Verdict::Yes;
                return out;
            }
        }
        out.verdict = Verdict::No;
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Scalar> dist(0, f.p - 1);
    for (std::size_t t = 0; t < opts.random_tries; ++t) {
        std::vector<Scalar> c(basis.size());
        for (auto& x : c) x = dist(rng);
        if (try_coeffs(c)) {
            out.verdict = Verdict::Yes;
            return out;
        }
    }
    out.verdict = Verdict::Unknown;
    return out;
}

Pushout pushout(const ModuleMap& a, const ModuleMap& b) {
    const auto& alg = a.source.algebra();
    const DirectSum ds = direct_sum({a.target, b.target}, alg);
    const Matrix rel = vstack(a.matrix, -b.matrix);
    const Projected q = quotient(ds.sum, column_basis(rel));
    return {q.module, compose(q.projection, ds.injections[0]), compose(q.projection, ds.injections[1])};
}

}  // namespace qs
