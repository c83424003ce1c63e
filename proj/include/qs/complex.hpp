#pragma once

// Z-graded chain complexes X_n with d_n : X_n -> X_{n-1}, stored as a finite
// core [lo, hi] plus optional periodic tails.
//
// Left tail (period L > 0): for n < lo, X_n and d_n repeat the block
// [lo, lo + L - 1]; in particular d_lo : X_lo -> X_{lo + L - 1}.
// Right tail (period R > 0): for n > hi, X_n and d_n repeat the block
// [hi - R + 1, hi]; the core must satisfy X_{hi - R} == X_hi so that the
// wrapped differential d_{hi - R + 1} also serves as d_{hi + 1}.
// Without a tail the complex is zero beyond the core on that side.

#include "qs/algebra.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qs {

struct Frame {
    int lo = 0;
    int hi = 0;
    int left_period = 0;
    int right_period = 0;

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    /// Core position holding degree n, or nullopt when n is in an absent tail.
    std::optional<std::size_t> locate(int n) const;
    Frame shifted(int k) const { return {lo + k, hi + k, left_period, right_period}; }
    bool operator==(const Frame&) const = default;
};

/// Degrees [first, last] whose checks imply the checks at every degree, for
/// equations relating objects on the given frames.
std::pair<int, int> check_range(const std::vector<Frame>& frames);

/// A frame on which any periodic function built from objects on `frames` can
/// be sampled exactly. Tail periods are the lcm of the present tails, times
/// `multiplier`; when `both_tails_required`, a side with any missing tail gets
/// no tail (the setting for maps, which vanish where either end vanishes).
Frame enclosing_frame(const std::vector<Frame>& frames, int multiplier = 1, bool both_tails_required = false);

class Complex {
public:
    Complex() = default;
    /// diffs[i] is d_{lo + i}. Validates shapes, tail consistency and d o d = 0.
    Complex(AlgebraPtr alg, Frame frame, std::vector<Module> terms, std::vector<Matrix> diffs);

    static Complex zero(const AlgebraPtr& alg);
    /// Samples term/diff functions on a frame and compacts the result.
    static Complex sample(const AlgebraPtr& alg, Frame frame, const std::function<Module(int)>& term,
                          const std::function<Matrix(int)>& diff);

    const AlgebraPtr& algebra() const { return alg_; }
    const Field& field() const { return alg_->field(); }
    const Frame& frame() const { return frame_; }
    const std::vector<Module>& core_terms() const { return terms_; }
    const std::vector<Matrix>& core_diffs() const { return diffs_; }

    const Module& term(int n) const;
    Matrix diff(int n) const;
    ModuleMap diff_map(int n) const;

    bool has_left_tail() const { return frame_.left_period > 0; }
    bool has_right_tail() const { return frame_.right_period > 0; }
    bool is_bounded() const { return !has_left_tail() && !has_right_tail(); }

    /// Same complex with the smallest core this representation allows.
    Complex compacted() const;

    bool operator==(const Complex& o) const;

private:
    AlgebraPtr alg_;
    Frame frame_{};
    std::vector<Module> terms_;
    std::vector<Matrix> diffs_;
    Module zero_;
};

/// Finitely presented sequence of matrices on a frame (components of maps and homotopies).
struct MatrixSequence {
    Frame frame{};
    std::vector<Matrix> core;

    /// Stored component, or a zero matrix of the given shape outside the support.
    Matrix at(int n, std::size_t rows, std::size_t cols, Field f) const;
};

class ChainMap {
public:
    ChainMap() = default;
    /// Validates module-map components and commutation with the differentials.
    ChainMap(Complex source, Complex target, MatrixSequence components);

    static ChainMap identity(const Complex& x);
    static ChainMap zero(const Complex& x, const Complex& y);
    static ChainMap sample(const Complex& x, const Complex& y, Frame frame, const std::function<Matrix(int)>& comp);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    const MatrixSequence& components() const { return comps_; }
    Matrix component(int n) const;
    ModuleMap component_map(int n) const;

    bool is_zero() const;
    bool is_degreewise_mono() const;
    bool is_degreewise_epi() const;

private:
    Complex source_;
    Complex target_;
    MatrixSequence comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap scaled(const ChainMap& f, Scalar s);

/// s_n : X_n -> Y_{n+1}.
struct Homotopy {
    Complex source;
    Complex target;
    MatrixSequence maps;

    Matrix at(int n) const;
};

/// True iff f_n = d_{n+1} s_n + s_{n-1} d_n at every degree.
bool verify_homotopy(const ChainMap& f, const Homotopy& s);

Complex stalk(const Module& m);
/// X[k]_n = X_{n-k} with differential (-1)^k d.
Complex reindex(const Complex& x, int k);
ChainMap reindex(const ChainMap& f, int k);
Complex direct_sum(const Complex& a, const Complex& b);
/// Disk: M in degrees n and n-1 joined by the identity.
Complex disk(const Module& m, int n);

/// Vector-space dual: (DX)_n = D(X_{-n}), a complex over the opposite algebra.
Complex dual(const Complex& x, const AlgebraPtr& over);
ChainMap dual(const ChainMap& f, const Complex& dual_source, const Complex& dual_target);

Complex cone(const ChainMap& f);

struct DegreewiseKernel {
    Complex complex;
    ChainMap inclusion;
};
struct DegreewiseCokernel {
    Complex complex;
    ChainMap projection;
};
DegreewiseKernel kernel(const ChainMap& f);
DegreewiseCokernel cokernel(const ChainMap& f);

struct Homology {
    Module module;
    Embedded cycles;  // Ker d_n inside X_n
};

Homology homology(const Complex& x, int n);
bool is_exact(const Complex& x);
bool is_quasi_isomorphism(const ChainMap& f);

enum class TruncationMode { Above, Below };

/// Above: keep degrees > n; Below: keep degrees <= n.
Complex hard_truncate(const Complex& x, TruncationMode mode, int n);

/// d_n = iota o pi with pi : X_n -> W onto and iota : W -> X_{n-1} injective.
struct ImageFactorization {
    ModuleMap pi;
    ModuleMap iota;
};

struct TwoSidedSplit {
    Complex upper;  // ... -> X_{n+1} -> Ker pi -> 0
    Complex lower;  // 0 -> W -> X_{n-1} -> ...
    ChainMap inclusion;
    ChainMap projection;
};

/// 0 -> upper -> X -> lower -> 0, split at degree n. Uses the image
/// factorization of d_n unless one is supplied. Throws MathError if the
/// factorization does not produce complexes and chain maps.
TwoSidedSplit two_sided_split(const Complex& x, int n, const std::optional<ImageFactorization>& fac = std::nullopt);

/// Degreewise exactness of 0 -> a -> b -> c -> 0.
bool is_short_exact(const ChainMap& mono, const ChainMap& epi);

}  // namespace qs
