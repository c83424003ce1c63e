#include "qs/complex.hpp"

#include <algorithm>
#include <numeric>

namespace qs {

namespace {

int floor_mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

int lcm_nonzero(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::lcm(a, b);
}

}  // namespace

std::optional<std::size_t> Frame::locate(int n) const {
    if (n >= lo && n <= hi) return static_cast<std::size_t>(n - lo);
    if (n < lo) {
        if (left_period <= 0) return std::nullopt;
        return static_cast<std::size_t>(floor_mod(n - lo, left_period));
    }
    if (right_period <= 0) return std::nullopt;
    return static_cast<std::size_t>(hi - right_period + 1 + floor_mod(n - hi - 1, right_period) - lo);
}

std::pair<int, int> check_range(const std::vector<Frame>& frames) {
    int l = 0, r = 0, lo = frames.front().lo, hi = frames.front().hi;
    for (const auto& f : frames) {
        l = lcm_nonzero(l, f.left_period);
        r = lcm_nonzero(r, f.right_period);
        lo = std::min(lo, f.lo);
        hi = std::max(hi, f.hi);
    }
    return {lo - l - 1, hi + r + 1};
}

Frame enclosing_frame(const std::vector<Frame>& frames, int multiplier, bool both_tails_required) {
    int l = 0, r = 0, lo = frames.front().lo, hi = frames.front().hi;
    bool all_left = true, all_right = true;
    for (const auto& f : frames) {
        l = lcm_nonzero(l, f.left_period);
        r = lcm_nonzero(r, f.right_period);
        all_left = all_left && f.left_period > 0;
        all_right = all_right && f.right_period > 0;
        lo = std::min(lo, f.lo);
        hi = std::max(hi, f.hi);
    }
    if (both_tails_required && !all_left) l = 0;
    if (both_tails_required && !all_right) r = 0;
    l *= multiplier;
    r *= multiplier;
    return {lo - l - 2, hi + r + 2, l, r};
}

// ---------------------------------------------------------------- Complex

Complex::Complex(AlgebraPtr alg, Frame frame, std::vector<Module> terms, std::vector<Matrix> diffs)
    : alg_(std::move(alg)), frame_(frame), terms_(std::move(terms)), diffs_(std::move(diffs)), zero_(Module::zero(alg_)) {
    if (frame_.hi < frame_.lo) throw MathError("complex core must be nonempty");
    if (terms_.size() != frame_.size() || diffs_.size() != frame_.size())
        throw MathError("complex core needs one term and one differential per degree");
    if (frame_.left_period < 0 || frame_.right_period < 0) throw MathError("negative tail period");
    if (frame_.left_period > static_cast<int>(frame_.size())) throw MathError("left tail block exceeds the core");
    if (frame_.right_period > 0) {
        if (frame_.hi - frame_.right_period < frame_.lo) throw MathError("right tail block needs one extra core degree");
        if (!(terms_[frame_.size() - 1] == terms_[frame_.size() - 1 - frame_.right_period]))
            throw MathError("right tail block does not close up periodically");
    }
    for (const auto& t : terms_)
        if (!same_algebra(t.algebra(), alg_)) throw MathError("complex terms over different algebras");
    for (int n = frame_.lo; n <= frame_.hi; ++n) {
        const Matrix& d = diffs_[static_cast<std::size_t>(n - frame_.lo)];
        if (!intertwines(term(n), term(n - 1), d))
            throw MathError("differential d_" + std::to_string(n) + " is not a module map of the right shape");
    }
    const auto [first, last] = check_range({frame_});
    for (int n = first; n <= last; ++n)
        if (!(diff(n - 1) * diff(n)).is_zero())
            throw MathError("d o d != 0 at degree " + std::to_string(n));
}

Complex Complex::zero(const AlgebraPtr& alg) {
    return Complex(alg, Frame{0, 0, 0, 0}, {Module::zero(alg)}, {Matrix(0, 0, alg->field())});
}

Complex Complex::sample(const AlgebraPtr& alg, Frame frame, const std::function<Module(int)>& term,
                        const std::function<Matrix(int)>& diff) {
    std::vector<Module> ts;
    std::vector<Matrix> ds;
    for (int n = frame.lo; n <= frame.hi; ++n) {
        ts.push_back(term(n));
        ds.push_back(diff(n));
    }
    return Complex(alg, frame, std::move(ts), std::move(ds)).compacted();
}

const Module& Complex::term(int n) const {
    const auto pos = frame_.locate(n);
    return pos ? terms_[*pos] : zero_;
}

Matrix Complex::diff(int n) const {
    const auto pos = frame_.locate(n);
    if (pos) return diffs_[*pos];
    return Matrix(term(n - 1).dim(), term(n).dim(), field());
}

ModuleMap Complex::diff_map(int n) const { return make_map_unchecked(term(n), term(n - 1), diff(n)); }

Complex Complex::compacted() const {
    Frame f = frame_;
    std::vector<Module> ts = terms_;
    std::vector<Matrix> ds = diffs_;
    auto at = [&](int n) { return static_cast<std::size_t>(n - f.lo); };

    auto block_is_zero = [&](int from, int len) {
        for (int n = from; n < from + len; ++n)
            if (ts[at(n)].dim() != 0) return false;
        return true;
    };
    if (f.left_period > 0 && block_is_zero(f.lo, f.left_period)) f.left_period = 0;
    if (f.right_period > 0 && block_is_zero(f.hi - f.right_period + 1, f.right_period)) f.right_period = 0;

    bool changed = true;
    while (changed && f.hi > f.lo) {
        changed = false;
        const int L = f.left_period, R = f.right_period;
        const bool right_ok = R == 0 || f.hi - R >= f.lo + 1;
        if (L > 0 && f.lo + L <= f.hi && right_ok && ts[at(f.lo)] == ts[at(f.lo + L)] &&
            ds[at(f.lo)] == ds[at(f.lo + L)]) {
            changed = true;
        } else if (L == 0 && right_ok && ts[at(f.lo)].dim() == 0) {
            changed = true;
        }
        if (changed) {
            ts.erase(ts.begin());
            ds.erase(ds.begin());
            ++f.lo;
            if (L == 0) ds.front() = Matrix(0, ts.front().dim(), field());
            continue;
        }
        if (R > 0 && f.hi - 1 - R >= f.lo && f.hi - 1 >= f.lo + L - 1 && ts[at(f.hi - 1)] == ts[at(f.hi - 1 - R)] &&
            ds[at(f.hi)] == ds[at(f.hi - R)]) {
            changed = true;
        } else if (R == 0 && f.hi - 1 >= f.lo + L - 1 && ts[at(f.hi)].dim() == 0) {
            changed = true;
        }
        if (changed) {
            ts.pop_back();
            ds.pop_back();
            --f.hi;
        }
    }
    return Complex(alg_, f, std::move(ts), std::move(ds));
}

bool Complex::operator==(const Complex& o) const {
    return frame_ == o.frame_ && same_algebra(alg_, o.alg_) && terms_ == o.terms_ && diffs_ == o.diffs_;
}

// ---------------------------------------------------------------- maps

Matrix MatrixSequence::at(int n, std::size_t rows, std::size_t cols, Field f) const {
    if (!core.empty()) {
        if (const auto pos = frame.locate(n)) {
            const Matrix& m = core[*pos];
            if (m.rows() != rows || m.cols() != cols)
                throw MathError("map component at degree " + std::to_string(n) + " has the wrong shape");
            return m;
        }
    }
    return Matrix(rows, cols, f);
}

ChainMap::ChainMap(Complex source, Complex target, MatrixSequence components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    if (!same_algebra(source_.algebra(), target_.algebra())) throw MathError("chain map between different algebras");
    if (comps_.core.size() != comps_.frame.size()) throw MathError("chain map core has the wrong length");
    const auto [first, last] = check_range({source_.frame(), target_.frame(), comps_.frame});
    for (int n = first; n <= last; ++n) {
        const Matrix fn = component(n);
        if (!intertwines(source_.term(n), target_.term(n), fn))
            throw MathError("chain map component at degree " + std::to_string(n) + " is not a module map");
        if (!(target_.diff(n) * fn == component(n - 1) * source_.diff(n)))
            throw MathError("chain map does not commute with differentials at degree " + std::to_string(n));
    }
}

Matrix ChainMap::component(int n) const {
    return comps_.at(n, target_.term(n).dim(), source_.term(n).dim(), source_.field());
}

ModuleMap ChainMap::component_map(int n) const {
    return make_map_unchecked(source_.term(n), target_.term(n), component(n));
}

ChainMap ChainMap::identity(const Complex& x) {
    MatrixSequence seq{x.frame(), {}};
    for (const auto& t : x.core_terms()) seq.core.push_back(Matrix::identity(t.dim(), x.field()));
    return ChainMap(x, x, std::move(seq));
}

ChainMap ChainMap::zero(const Complex& x, const Complex& y) {
    return ChainMap(x, y, MatrixSequence{Frame{0, 0, 0, 0}, {Matrix(y.term(0).dim(), x.term(0).dim(), x.field())}});
}

ChainMap ChainMap::sample(const Complex& x, const Complex& y, Frame frame, const std::function<Matrix(int)>& comp) {
    MatrixSequence seq{frame, {}};
    for (int n = frame.lo; n <= frame.hi; ++n) seq.core.push_back(comp(n));
    return ChainMap(x, y, std::move(seq));
}

bool ChainMap::is_zero() const {
    for (const auto& m : comps_.core)
        if (!m.is_zero()) return false;
    return true;
}

bool ChainMap::is_degreewise_mono() const {
    const auto [first, last] = check_range({source_.frame(), target_.frame(), comps_.frame});
    for (int n = first; n <= last; ++n)
        if (rank(component(n)) != source_.term(n).dim()) return false;
    return true;
}

bool ChainMap::is_degreewise_epi() const {
    const auto [first, last] = check_range({source_.frame(), target_.frame(), comps_.frame});
    for (int n = first; n <= last; ++n)
        if (rank(component(n)) != target_.term(n).dim()) return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    const Frame fr = enclosing_frame({f.components().frame, g.components().frame, f.source().frame(),
                                      g.target().frame()},
                                     1, true);
    return ChainMap::sample(f.source(), g.target(), fr, [&](int n) { return g.component(n) * f.component(n); });
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    const Frame fr = enclosing_frame({a.components().frame, b.components().frame});
    return ChainMap::sample(a.source(), a.target(), fr, [&](int n) { return a.component(n) + b.component(n); });
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
    const Frame fr = enclosing_frame({a.components().frame, b.components().frame});
    return ChainMap::sample(a.source(), a.target(), fr, [&](int n) { return a.component(n) - b.component(n); });
}

ChainMap scaled(const ChainMap& f, Scalar s) {
    MatrixSequence seq = f.components();
    for (auto& m : seq.core) m = m.scaled(s);
    return ChainMap(f.source(), f.target(), std::move(seq));
}

Matrix Homotopy::at(int n) const { return maps.at(n, target.term(n + 1).dim(), source.term(n).dim(), source.field()); }

bool verify_homotopy(const ChainMap& f, const Homotopy& s) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    const auto [first, last] = check_range({x.frame(), y.frame(), f.components().frame, s.maps.frame});
    for (int n = first; n <= last; ++n) {
        if (!intertwines(x.term(n), y.term(n + 1), s.at(n))) return false;
        if (!(f.component(n) == y.diff(n + 1) * s.at(n) + s.at(n - 1) * x.diff(n))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- constructions

Complex stalk(const Module& m) {
    return Complex(m.algebra(), Frame{0, 0, 0, 0}, {m}, {Matrix(0, m.dim(), m.field())});
}

Complex reindex(const Complex& x, int k) {
    const Field f = x.field();
    const Scalar sign = (k % 2 != 0) ? f.neg(1) : 1;
    std::vector<Matrix> ds;
    for (const auto& d : x.core_diffs()) ds.push_back(d.scaled(sign));
    return Complex(x.algebra(), x.frame().shifted(k), x.core_terms(), std::move(ds));
}

ChainMap reindex(const ChainMap& f, int k) {
    MatrixSequence seq{f.components().frame.shifted(k), f.components().core};
    return ChainMap(reindex(f.source(), k), reindex(f.target(), k), std::move(seq));
}

Complex direct_sum(const Complex& a, const Complex& b) {
    const Frame fr = enclosing_frame({a.frame(), b.frame()});
    return Complex::sample(
        a.algebra(), fr, [&](int n) { return direct_sum(a.term(n), b.term(n)); },
        [&](int n) { return qs::direct_sum(a.diff(n), b.diff(n)); });
}

Complex disk(const Module& m, int n) {
    return Complex(m.algebra(), Frame{n - 1, n, 0, 0}, {m, m},
                   {Matrix(0, m.dim(), m.field()), Matrix::identity(m.dim(), m.field())});
}

Complex dual(const Complex& x, const AlgebraPtr& over) {
    const Frame& f = x.frame();
    const Frame fr{-f.hi - f.right_period - 2, -f.lo + f.left_period + 2, f.right_period, f.left_period};
    return Complex::sample(
        over, fr, [&](int n) { return dual(x.term(-n), over); },
        [&](int n) { return x.diff(1 - n).transpose(); });
}

ChainMap dual(const ChainMap& f, const Complex& dual_source, const Complex& dual_target) {
    const Frame& cf = f.components().frame;
    const Frame neg{-cf.hi, -cf.lo, cf.right_period, cf.left_period};
    const Frame fr = enclosing_frame({neg, dual_source.frame(), dual_target.frame()}, 1, true);
    return ChainMap::sample(dual_source, dual_target, fr, [&](int n) { return f.component(-n).transpose(); });
}

Complex cone(const ChainMap& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Frame fr = enclosing_frame({x.frame().shifted(1), y.frame(), f.components().frame.shifted(1)});
    const Field fld = x.field();
    return Complex::sample(
        x.algebra(), fr, [&](int n) { return direct_sum(x.term(n - 1), y.term(n)); },
        [&](int n) {
            const std::size_t xa = x.term(n - 1).dim(), ya = y.term(n).dim();
            const std::size_t xb = x.term(n - 2).dim(), yb = y.term(n - 1).dim();
            Matrix d(xb + yb, xa + ya, fld);
            d.set_block(0, 0, -x.diff(n - 1));
            d.set_block(xb, 0, f.component(n - 1));
            d.set_block(xb, xa, y.diff(n));
            return d;
        });
}

DegreewiseKernel kernel(const ChainMap& f) {
    const Complex& x = f.source();
    const Frame fr = enclosing_frame({x.frame(), f.target().frame(), f.components().frame});
    auto incl = [&](int n) { return column_basis(kernel(f.component(n))); };
    Complex k = Complex::sample(
        x.algebra(), fr, [&](int n) { return submodule(x.term(n), incl(n)).module; },
        [&](int n) {
            auto d = solve_matrix(incl(n - 1), x.diff(n) * incl(n));
            return *d;
        });
    ChainMap inc = ChainMap::sample(k, x, enclosing_frame({fr, k.frame()}), incl);
    return {k, inc};
}

DegreewiseCokernel cokernel(const ChainMap& f) {
    const Complex& y = f.target();
    const Frame fr = enclosing_frame({f.source().frame(), y.frame(), f.components().frame});
    auto proj = [&](int n) { return quotient(y.term(n), column_basis(f.component(n))).projection.matrix; };
    Complex c = Complex::sample(
        y.algebra(), fr, [&](int n) { return quotient(y.term(n), column_basis(f.component(n))).module; },
        [&](int n) {
            const Matrix q = proj(n);
            const auto right_inv = solve_matrix(q, Matrix::identity(q.rows(), y.field()));
            return proj(n - 1) * y.diff(n) * *right_inv;
        });
    ChainMap pr = ChainMap::sample(y, c, enclosing_frame({fr, c.frame()}), proj);
    return {c, pr};
}

Homology homology(const Complex& x, int n) {
    Embedded cycles = submodule(x.term(n), kernel(x.diff(n)));
    const auto boundaries = solve_matrix(cycles.inclusion.matrix, x.diff(n + 1));
    Module h = quotient(cycles.module, column_basis(*boundaries)).module;
    return {std::move(h), std::move(cycles)};
}

bool is_exact(const Complex& x) {
    const auto [first, last] = check_range({x.frame()});
    for (int n = first; n <= last; ++n)
        if (rank(x.diff(n)) + rank(x.diff(n + 1)) != x.term(n).dim()) return false;
    return true;
}

bool is_quasi_isomorphism(const ChainMap& f) { return is_exact(cone(f)); }

Complex hard_truncate(const Complex& x, TruncationMode mode, int n) {
    const Frame& f = x.frame();
    const Field fld = x.field();
    if (mode == TruncationMode::Above) {
        const Frame fr{n + 1, std::max(f.hi, n + 1) + f.right_period + 2, 0, f.right_period};
        return Complex::sample(
            x.algebra(), fr, [&](int m) { return x.term(m); },
            [&](int m) { return m == n + 1 ? Matrix(0, x.term(m).dim(), fld) : x.diff(m); });
    }
    const Frame fr{std::min(f.lo, n) - f.left_period - 2, n, f.left_period, 0};
    return Complex::sample(
        x.algebra(), fr, [&](int m) { return x.term(m); }, [&](int m) { return x.diff(m); });
}

TwoSidedSplit two_sided_split(const Complex& x, int n, const std::optional<ImageFactorization>& given) {
    ImageFactorization fac;
    if (given) {
        fac = *given;
    } else {
        const Subquotients sq = subquotients(x.diff_map(n));
        fac = {sq.corestriction, sq.image.inclusion};
    }
    if (!fac.pi.is_epi() || !fac.iota.is_mono() || !(fac.iota.matrix * fac.pi.matrix == x.diff(n)))
        throw MathError("supplied factorization of d_" + std::to_string(n) + " is not an image factorization");
    const Field fld = x.field();
    const Frame& f = x.frame();
    const Embedded ker_pi = submodule(x.term(n), kernel(fac.pi.matrix));
    const auto into_ker = solve_matrix(ker_pi.inclusion.matrix, x.diff(n + 1));
    if (!into_ker) throw MathError("d_" + std::to_string(n + 1) + " does not land in the kernel of the factorization");

    const Frame up{n, std::max(f.hi, n) + f.right_period + 2, 0, f.right_period};
    Complex upper = Complex::sample(
        x.algebra(), up, [&](int m) { return m == n ? ker_pi.module : x.term(m); },
        [&](int m) {
            if (m == n) return Matrix(0, ker_pi.module.dim(), fld);
            if (m == n + 1) return *into_ker;
            return x.diff(m);
        });
    const Frame low{std::min(f.lo, n) - f.left_period - 2, n, f.left_period, 0};
    Complex lower = Complex::sample(
        x.algebra(), low, [&](int m) { return m == n ? fac.pi.target : x.term(m); },
        [&](int m) { return m == n ? fac.iota.matrix : x.diff(m); });

    auto incl = [&](int m) {
        if (m > n) return Matrix::identity(x.term(m).dim(), fld);
        if (m == n) return ker_pi.inclusion.matrix;
        return Matrix(x.term(m).dim(), 0, fld);
    };
    auto proj = [&](int m) {
        if (m < n) return Matrix::identity(x.term(m).dim(), fld);
        if (m == n) return fac.pi.matrix;
        return Matrix(0, x.term(m).dim(), fld);
    };
    ChainMap inc = ChainMap::sample(upper, x, enclosing_frame({upper.frame(), f}, 1, true), incl);
    ChainMap pr = ChainMap::sample(x, lower, enclosing_frame({lower.frame(), f}, 1, true), proj);
    if (!is_short_exact(inc, pr)) throw MathError("split at degree " + std::to_string(n) + " is not short exact");
    return {std::move(upper), std::move(lower), std::move(inc), std::move(pr)};
}

bool is_short_exact(const ChainMap& mono, const ChainMap& epi) {
    const auto [first, last] = check_range({mono.source().frame(), mono.target().frame(), epi.target().frame(),
                                            mono.components().frame, epi.components().frame});
    for (int n = first; n <= last; ++n) {
        const Matrix a = mono.component(n), b = epi.component(n);
        if (rank(a) != mono.source().term(n).dim()) return false;
        if (rank(b) != epi.target().term(n).dim()) return false;
        if (!(b * a).is_zero()) return false;
        if (rank(a) + rank(b) != mono.target().term(n).dim()) return false;
    }
    return true;
}

}  // namespace qs
