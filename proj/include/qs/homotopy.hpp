#pragma once

// Linear systems over graded unknowns, null-homotopies and homotopy
// equivalences between periodic-tailed complexes.

#include "qs/complex.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qs {

/// A degreewise family of module maps U_n : S_n -> T_{n + shift}, parametrized
/// by a hom basis at each core position of `frame`. Outside the frame support
/// U_n is zero.
struct GradedUnknown {
    Frame frame{};
    std::vector<std::vector<ModuleMap>> basis;              // per core position
    std::vector<std::pair<std::size_t, std::size_t>> shape;  // rows, cols per core position
};

/// Unknown maps X_n -> Y_{n + shift} on the given frame.
GradedUnknown graded_unknown(const Complex& x, const Complex& y, int shift, Frame frame);

class LinearSystem {
public:
    explicit LinearSystem(Field f) : field_(f) {}

    std::size_t add_graded(GradedUnknown u);
    std::size_t add_scalar();

    /// left * U_block(degree) * right
    struct Term {
        std::size_t block;
        int degree;
        Matrix left;
        Matrix right;
    };
    /// coeff * scalar unknown
    struct ScalarTerm {
        std::size_t scalar;
        Matrix coeff;
    };

    /// Sum of terms == rhs (entrywise).
    void add_equation(const std::vector<Term>& terms, const std::vector<ScalarTerm>& scalars, const Matrix& rhs);

    std::size_t variable_count() const { return nvars_; }

    /// Particular solution and the homogeneous solution space (columns).
    Solution solve() const;

    Matrix value(std::size_t block, int degree, const std::vector<Scalar>& sol, std::size_t rows,
                 std::size_t cols) const;
    Scalar scalar_value(std::size_t scalar, const std::vector<Scalar>& sol) const;
    /// Stored core components for the block (for building MatrixSequences).
    MatrixSequence sequence(std::size_t block, const std::vector<Scalar>& sol) const;

private:
    Field field_;
    std::size_t nvars_ = 0;
    std::vector<GradedUnknown> blocks_;
    std::vector<std::size_t> block_offset_;
    std::vector<std::vector<std::size_t>> pos_offset_;
    std::vector<std::size_t> scalar_offset_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<Scalar> rhs_;
};

struct Certificate {
    enum class Kind { NullHomotopy, Contraction, HomotopyInverse, Splitting, Orthogonality };

    Kind kind = Kind::NullHomotopy;
    bool checked = false;
    std::string note;
    // NullHomotopy / Contraction: maps = {f}, homotopies = {s}.
    // HomotopyInverse: maps = {f, g}, homotopies = {h, k} with gf - 1 ~ h, fg - 1 ~ k.
    // Splitting: maps = {mono, epi}.
    // Orthogonality: maps[i] null-homotopic via homotopies[i].
    std::vector<ChainMap> maps;
    std::vector<Homotopy> homotopies;

    /// Re-verifies every equation the certificate claims.
    bool recheck() const;
};

const char* to_string(Certificate::Kind k);

/// True iff A is injective on both sides; implies Gorenstein.
bool is_self_injective(const AlgebraPtr& alg);

struct HomotopyOptions {
    int period_bound = 4;
    /// Decides whether strategy (b) may treat the base algebra as Gorenstein.
    std::function<bool(const AlgebraPtr&)> gorenstein = is_self_injective;
};

struct NullHomotopyResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Homotopy> homotopy;
    char strategy = 'c';  // 'a' finite, 'b' stable criterion, 'c' periodic search
    std::string note;
};

/// Searches for s with f = ds + sd, homotopy tails of period multiplier * lcm.
std::optional<Homotopy> find_homotopy(const ChainMap& f, int multiplier);

/// Strategy (a) applies: on each side at most one of source/target has a tail.
bool finite_homotopy_problem(const ChainMap& f);

/// Degreewise projective terms and exact, over an algebra accepted by opts.gorenstein.
bool certified_totally_acyclic(const Complex& x, const HomotopyOptions& opts = {});

/// Induced map Coker d_1^X -> Coker d_1^Y.
ModuleMap omega_of_map(const ChainMap& f);

NullHomotopyResult null_homotopy(const ChainMap& f, const HomotopyOptions& opts = {});
NullHomotopyResult null_homotopy_strategy(const ChainMap& f, char strategy, const HomotopyOptions& opts = {});

struct EquivalenceResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;  // HomotopyInverse
    std::string note;
};

EquivalenceResult homotopy_equivalence_certificate(const ChainMap& f, const HomotopyOptions& opts = {});

/// Basis of chain maps X -> Y whose tails have period multiplier * lcm.
std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y, int multiplier = 1);

}  // namespace qs
