#include "qs/functors.hpp"

#include "qs/homotopy.hpp"

namespace qs {

Projected omega(const Complex& x) {
    const Matrix d1 = x.diff(1);
    if (d1.is_zero()) return {x.term(0), ModuleMap::identity(x.term(0))};
    return quotient(x.term(0), column_basis(d1));
}

Embedded theta(const Complex& x) {
    const Matrix d0 = x.diff(0);
    if (d0.is_zero()) return {x.term(0), ModuleMap::identity(x.term(0))};
    return submodule(x.term(0), kernel(d0));
}

ModuleMap omega(const ChainMap& f) {
    const Projected s = omega(f.source());
    const Projected t = omega(f.target());
    const auto m = solve_left(s.projection.matrix, t.projection.matrix * f.component(0));
    if (!m) throw MathError("internal: map does not descend to Omega");
    return ModuleMap(s.module, t.module, *m);
}

ModuleMap theta(const ChainMap& f) {
    const Embedded s = theta(f.source());
    const Embedded t = theta(f.target());
    const auto m = solve_matrix(t.inclusion.matrix, f.component(0) * s.inclusion.matrix);
    if (!m) throw MathError("internal: map does not restrict to Theta");
    return ModuleMap(s.module, t.module, *m);
}

Complex apply_F(const Complex& x) { return stalk(omega(x).module); }
Complex apply_G(const Complex& x) { return stalk(theta(x).module); }

ChainMap stalk_map(const ModuleMap& m) {
    return ChainMap(stalk(m.source), stalk(m.target), MatrixSequence{Frame{0, 0, 0, 0}, {m.matrix}});
}

ChainMap apply_F(const ChainMap& f) { return stalk_map(omega(f)); }
ChainMap apply_G(const ChainMap& f) { return stalk_map(theta(f)); }

namespace {

ChainMap degree_zero_map(const Complex& x, const Complex& y, const Matrix& m) {
    return ChainMap(x, y, MatrixSequence{Frame{0, 0, 0, 0}, {m}});
}

}  // namespace

std::vector<Scalar> stalk_map_coordinates(const std::vector<ChainMap>& basis, const ChainMap& f) {
    const Matrix target = f.component(0);
    const std::size_t len = target.rows() * target.cols();
    Matrix a(len, basis.size(), f.source().field());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Matrix b = basis[k].component(0);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) a.set(i * b.cols() + j, k, b(i, j));
    }
    std::vector<Scalar> rhs(len);
    for (std::size_t i = 0; i < target.rows(); ++i)
        for (std::size_t j = 0; j < target.cols(); ++j) rhs[i * target.cols() + j] = target(i, j);
    const Solution s = solve(a, rhs);
    if (!s.particular) throw MathError("map is not in the span of the basis");
    return *s.particular;
}

ChainMap transpose(const AdjunctionWitness& w, const ChainMap& f, Direction dir) {
    const Projected om = omega(w.x);
    const Embedded th = theta(w.y);
    if (dir == Direction::Forward) {
        if (!(f.source() == stalk(om.module)) || !(f.target() == w.y))
            throw MathError("transpose: map is not in Hom(F X, Y)");
        const auto phi = solve_matrix(th.inclusion.matrix, f.component(0));
        if (!phi) throw MathError("transpose: degree-0 component does not land in Ker d_0");
        return degree_zero_map(w.x, stalk(th.module), *phi * om.projection.matrix);
    }
    if (!(f.source() == w.x) || !(f.target() == stalk(th.module)))
        throw MathError("transpose: map is not in Hom(X, G Y)");
    const auto phi = solve_left(om.projection.matrix, f.component(0));
    if (!phi) throw MathError("transpose: degree-0 component does not vanish on Im d_1");
    return degree_zero_map(stalk(om.module), w.y, th.inclusion.matrix * *phi);
}

AdjunctionWitness adjunction_witness(const Complex& x, const Complex& y) {
    AdjunctionWitness w{x, y, {}, {}, {}, {}};
    const Complex fx = apply_F(x);
    const Complex gy = apply_G(y);
    w.left_basis = chain_map_space(fx, y);
    w.right_basis = chain_map_space(x, gy);
    const Field fld = x.field();
    w.forward = Matrix(w.right_basis.size(), w.left_basis.size(), fld);
    w.backward = Matrix(w.left_basis.size(), w.right_basis.size(), fld);
    for (std::size_t k = 0; k < w.left_basis.size(); ++k) {
        const auto c = stalk_map_coordinates(w.right_basis, transpose(w, w.left_basis[k], Direction::Forward));
        for (std::size_t i = 0; i < c.size(); ++i) w.forward.set(i, k, c[i]);
    }
    for (std::size_t k = 0; k < w.right_basis.size(); ++k) {
        const auto c = stalk_map_coordinates(w.left_basis, transpose(w, w.right_basis[k], Direction::Backward));
        for (std::size_t i = 0; i < c.size(); ++i) w.backward.set(i, k, c[i]);
    }
    return w;
}

ChainMap counit(const Complex& y) {
    const Embedded th = theta(y);
    return degree_zero_map(apply_F(stalk(th.module)), y, th.inclusion.matrix);
}

ChainMap unit(const Complex& x) {
    const Projected om = omega(x);
    return degree_zero_map(x, apply_G(stalk(om.module)), om.projection.matrix);
}

ChainMap random_mono_quasi_iso(const Complex& x, std::mt19937_64& rng) {
    const Frame& fr = x.frame();
    std::vector<int> candidates;
    for (int n = fr.lo; n <= fr.hi + 1; ++n)
        if (x.term(n - 1).dim() > 0) candidates.push_back(n);
    if (candidates.empty()) candidates.push_back(fr.lo);
    const int n = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const Module& m = x.term(n - 1);
    const Field fld = x.field();
    Matrix alpha(m.dim(), m.dim(), fld);
    for (const auto& b : hom_basis(m, m))
        alpha = alpha + b.matrix.scaled(static_cast<Scalar>(rng() % fld.p));
    const Complex c = disk(m, n);
    const Complex target = direct_sum(x, c);
    const Frame mf = enclosing_frame({fr, c.frame()});
    return ChainMap::sample(x, target, mf, [&](int k) {
        const std::size_t xd = x.term(k).dim();
        Matrix h(c.term(k).dim(), xd, fld);
        if (k == n - 1) h = alpha;
        if (k == n) h = alpha * x.diff(n);
        return vstack(Matrix::identity(xd, fld), h);
    });
}

}  // namespace qs
