#include "qs/homotopy.hpp"

namespace qs {

GradedUnknown graded_unknown(const Complex& x, const Complex& y, int shift, Frame frame) {
    GradedUnknown u{frame, {}, {}};
    for (int n = frame.lo; n <= frame.hi; ++n) {
        const Module& s = x.term(n);
        const Module& t = y.term(n + shift);
        u.basis.push_back(hom_basis(s, t));
        u.shape.emplace_back(t.dim(), s.dim());
    }
    return u;
}

std::size_t LinearSystem::add_graded(GradedUnknown u) {
    if (!rows_.empty()) throw MathError("unknowns must be declared before equations");
    block_offset_.push_back(nvars_);
    std::vector<std::size_t> offs;
    for (const auto& b : u.basis) {
        offs.push_back(nvars_);
        nvars_ += b.size();
    }
    pos_offset_.push_back(std::move(offs));
    blocks_.push_back(std::move(u));
    return blocks_.size() - 1;
}

std::size_t LinearSystem::add_scalar() {
    if (!rows_.empty()) throw MathError("unknowns must be declared before equations");
    scalar_offset_.push_back(nvars_++);
    return scalar_offset_.size() - 1;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const std::vector<ScalarTerm>& scalars,
                                const Matrix& rhs) {
    const std::size_t r = rhs.rows(), c = rhs.cols();
    std::vector<std::vector<Scalar>> rows(r * c, std::vector<Scalar>(nvars_, 0));
    for (const auto& t : terms) {
        const GradedUnknown& u = blocks_.at(t.block);
        const auto pos = u.frame.locate(t.degree);
        if (!pos) continue;
        const auto [ur, uc] = u.shape[*pos];
        if (t.left.cols() != ur || t.right.rows() != uc || t.left.rows() != r || t.right.cols() != c)
            throw MathError("equation term has the wrong shape at degree " + std::to_string(t.degree));
        const std::size_t off = pos_offset_[t.block][*pos];
        for (std::size_t k = 0; k < u.basis[*pos].size(); ++k) {
            const Matrix m = t.left * u.basis[*pos][k].matrix * t.right;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    rows[i * c + j][off + k] = field_.add(rows[i * c + j][off + k], m(i, j));
        }
    }
    for (const auto& s : scalars) {
        if (s.coeff.rows() != r || s.coeff.cols() != c) throw MathError("scalar term has the wrong shape");
        const std::size_t v = scalar_offset_.at(s.scalar);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rows[i * c + j][v] = field_.add(rows[i * c + j][v], s.coeff(i, j));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            bool nonzero = rhs(i, j) != 0;
            for (Scalar v : rows[i * c + j]) nonzero = nonzero || v != 0;
            if (!nonzero) continue;
            rows_.push_back(std::move(rows[i * c + j]));
            rhs_.push_back(rhs(i, j));
        }
}

Solution LinearSystem::solve() const {
    Matrix a(rows_.size(), nvars_, field_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < nvars_; ++j) a.set(i, j, rows_[i][j]);
    return qs::solve(a, rhs_);
}

Matrix LinearSystem::value(std::size_t block, int degree, const std::vector<Scalar>& sol, std::size_t rows,
                           std::size_t cols) const {
    const GradedUnknown& u = blocks_.at(block);
    Matrix m(rows, cols, field_);
    const auto pos = u.frame.locate(degree);
    if (!pos) return m;
    if (u.shape[*pos] != std::make_pair(rows, cols)) throw MathError("unknown evaluated with the wrong shape");
    const std::size_t off = pos_offset_[block][*pos];
    for (std::size_t k = 0; k < u.basis[*pos].size(); ++k)
        if (sol[off + k]) m = m + u.basis[*pos][k].matrix.scaled(sol[off + k]);
    return m;
}

Scalar LinearSystem::scalar_value(std::size_t scalar, const std::vector<Scalar>& sol) const {
    return sol.at(scalar_offset_.at(scalar));
}

MatrixSequence LinearSystem::sequence(std::size_t block, const std::vector<Scalar>& sol) const {
    const GradedUnknown& u = blocks_.at(block);
    MatrixSequence seq{u.frame, {}};
    for (std::size_t p = 0; p < u.basis.size(); ++p) {
        Matrix m(u.shape[p].first, u.shape[p].second, field_);
        const std::size_t off = pos_offset_[block][p];
        for (std::size_t k = 0; k < u.basis[p].size(); ++k)
            if (sol[off + k]) m = m + u.basis[p][k].matrix.scaled(sol[off + k]);
        seq.core.push_back(std::move(m));
    }
    return seq;
}

// ---------------------------------------------------------------- certificates

const char* to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::NullHomotopy: return "null-homotopy";
        case Certificate::Kind::Contraction: return "contraction";
        case Certificate::Kind::HomotopyInverse: return "homotopy-inverse";
        case Certificate::Kind::Splitting: return "splitting";
        case Certificate::Kind::Orthogonality: return "orthogonality";
    }
    return "?";
}

bool Certificate::recheck() const {
    switch (kind) {
        case Kind::NullHomotopy:
        case Kind::Contraction:
            if (maps.empty() || homotopies.empty()) return false;
            if (kind == Kind::Contraction && !(maps[0].source() == maps[0].target())) return false;
            return verify_homotopy(maps[0], homotopies[0]);
        case Kind::HomotopyInverse: {
            if (maps.size() < 2 || homotopies.size() < 2) return false;
            const ChainMap& f = maps[0];
            const ChainMap& g = maps[1];
            return verify_homotopy(compose(g, f) - ChainMap::identity(f.source()), homotopies[0]) &&
                   verify_homotopy(compose(f, g) - ChainMap::identity(f.target()), homotopies[1]);
        }
        case Kind::Splitting:
            return maps.size() >= 2 && is_short_exact(maps[0], maps[1]);
        case Kind::Orthogonality:
            if (maps.size() != homotopies.size()) return false;
            for (std::size_t i = 0; i < maps.size(); ++i)
                if (!verify_homotopy(maps[i], homotopies[i])) return false;
            return true;
    }
    return false;
}

// ---------------------------------------------------------------- null-homotopies

bool is_self_injective(const AlgebraPtr& alg) {
    return split_class(regular_module(alg)).is_injective && split_class(regular_module(alg->opposite())).is_injective;
}

std::optional<Homotopy> find_homotopy(const ChainMap& f, int multiplier) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Frame fr = enclosing_frame({x.frame(), y.frame(), f.components().frame}, multiplier, true);
    LinearSystem sys(x.field());
    const std::size_t s = sys.add_graded(graded_unknown(x, y, 1, fr));
    const auto [first, last] = check_range({x.frame(), y.frame(), f.components().frame, fr});
    for (int n = first; n <= last; ++n) {
        const Field fld = x.field();
        sys.add_equation({{s, n, y.diff(n + 1), Matrix::identity(x.term(n).dim(), fld)},
                          {s, n - 1, Matrix::identity(y.term(n).dim(), fld), x.diff(n)}},
                         {}, f.component(n));
    }
    const Solution sol = sys.solve();
    if (!sol.particular) return std::nullopt;
    Homotopy h{x, y, sys.sequence(s, *sol.particular)};
    if (!verify_homotopy(f, h)) throw MathError("internal: solved homotopy fails verification");
    return h;
}

bool finite_homotopy_problem(const ChainMap& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    return !(x.has_left_tail() && y.has_left_tail()) && !(x.has_right_tail() && y.has_right_tail());
}

bool certified_totally_acyclic(const Complex& x, const HomotopyOptions& opts) {
    if (!opts.gorenstein || !opts.gorenstein(x.algebra())) return false;
    for (const auto& t : x.core_terms())
        if (!split_class(t).is_projective) return false;
    return is_exact(x);
}

ModuleMap omega_of_map(const ChainMap& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Projected qx = quotient(x.term(0), column_basis(x.diff(1)));
    const Projected qy = quotient(y.term(0), column_basis(y.diff(1)));
    const auto w = solve_left(qx.projection.matrix, qy.projection.matrix * f.component(0));
    if (!w) throw MathError("internal: chain map does not descend to cokernels");
    return ModuleMap(qx.module, qy.module, *w);
}

namespace {

NullHomotopyResult periodic_search(const ChainMap& f, int from, int to, char strategy) {
    NullHomotopyResult r;
    r.strategy = strategy;
    for (int m = from; m <= to; ++m) {
        if (auto h = find_homotopy(f, m)) {
            r.verdict = Verdict::Yes;
            r.homotopy = std::move(h);
            r.note = "homotopy tail period multiplier " + std::to_string(m);
            return r;
        }
    }
    r.note = "no homotopy with tail period multiplier <= " + std::to_string(to);
    return r;
}

}  // namespace

NullHomotopyResult null_homotopy_strategy(const ChainMap& f, char strategy, const HomotopyOptions& opts) {
    NullHomotopyResult r;
    r.strategy = strategy;
    if (strategy == 'a') {
        if (!finite_homotopy_problem(f)) {
            r.note = "both complexes have tails on one side";
            return r;
        }
        r = periodic_search(f, 1, 1, 'a');
        if (r.verdict != Verdict::Yes) {
            r.verdict = Verdict::No;
            r.note = "finite linear system has no solution";
        }
        return r;
    }
    if (strategy == 'b') {
        if (!certified_totally_acyclic(f.source(), opts) || !certified_totally_acyclic(f.target(), opts)) {
            r.note = "complexes not certified totally acyclic";
            return r;
        }
        if (!factors_through_projective(omega_of_map(f))) {
            r.verdict = Verdict::No;
            r.note = "induced map on Coker d_1 does not factor through a projective";
            return r;
        }
        r = periodic_search(f, 1, 4 * opts.period_bound, 'b');
        if (r.verdict != Verdict::Yes)
            r.note = "stably zero, but no periodic homotopy found with multiplier <= " +
                     std::to_string(4 * opts.period_bound);
        return r;
    }
    return periodic_search(f, 1, opts.period_bound, 'c');
}

NullHomotopyResult null_homotopy(const ChainMap& f, const HomotopyOptions& opts) {
    if (finite_homotopy_problem(f)) return null_homotopy_strategy(f, 'a', opts);
    if (certified_totally_acyclic(f.source(), opts) && certified_totally_acyclic(f.target(), opts))
        return null_homotopy_strategy(f, 'b', opts);
    return null_homotopy_strategy(f, 'c', opts);
}

EquivalenceResult homotopy_equivalence_certificate(const ChainMap& f, const HomotopyOptions& opts) {
    EquivalenceResult out;
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Complex c = cone(f);
    const NullHomotopyResult r = null_homotopy(ChainMap::identity(c), opts);
    out.verdict = r.verdict;
    out.note = "cone contraction: " + r.note;
    if (r.verdict != Verdict::Yes) return out;

    const Homotopy& s = *r.homotopy;
    const Frame sf = s.maps.frame;
    // s_n : X_{n-1} + Y_n -> X_n + Y_{n+1}
    auto block = [&](int n, int which) {
        const Matrix m = s.at(n);
        const std::size_t xa = x.term(n - 1).dim(), xb = x.term(n).dim();
        const std::size_t ya = y.term(n).dim(), yb = y.term(n + 1).dim();
        if (which == 0) return m.block(0, 0, xb, xa);   // a_n
        if (which == 1) return m.block(0, xa, xb, ya);  // g_n
        return -m.block(xb, xa, yb, ya);                // -t_n
    };
    ChainMap g = ChainMap::sample(y, x, sf, [&](int n) { return block(n, 1); });
    MatrixSequence hseq{sf.shifted(-1), {}};
    MatrixSequence kseq{sf, {}};
    for (int n = sf.lo; n <= sf.hi; ++n) {
        hseq.core.push_back(block(n, 0));
        kseq.core.push_back(block(n, 2));
    }
    Certificate cert;
    cert.kind = Certificate::Kind::HomotopyInverse;
    cert.maps = {f, g};
    cert.homotopies = {Homotopy{x, x, hseq}, Homotopy{y, y, kseq}};
    cert.checked = cert.recheck();
    if (!cert.checked) throw MathError("internal: extracted homotopy inverse fails verification");
    cert.note = out.note;
    out.certificate = std::move(cert);
    return out;
}

std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y, int multiplier) {
    const Frame fr = enclosing_frame({x.frame(), y.frame()}, multiplier, true);
    LinearSystem sys(x.field());
    const std::size_t b = sys.add_graded(graded_unknown(x, y, 0, fr));
    const Field fld = x.field();
    const auto [first, last] = check_range({x.frame(), y.frame(), fr});
    for (int n = first; n <= last; ++n)
        sys.add_equation({{b, n, y.diff(n), Matrix::identity(x.term(n).dim(), fld)},
                          {b, n - 1, -Matrix::identity(y.term(n - 1).dim(), fld), x.diff(n)}},
                         {}, Matrix(y.term(n - 1).dim(), x.term(n).dim(), fld));
    const Solution sol = sys.solve();
    std::vector<ChainMap> out;
    for (std::size_t k = 0; k < sol.kernel.cols(); ++k)
        out.emplace_back(x, y, sys.sequence(b, sol.kernel.col(k)));
    return out;
}

}  // namespace qs
