#pragma once

// Split basic finite-dimensional algebras over F_p and their finite-dimensional
// left modules, given by action matrices.

#include "qs/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qs {

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

/// Conjunction that never upgrades UNKNOWN: NO dominates, then UNKNOWN.
Verdict verdict_and(Verdict a, Verdict b);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    /// Structure constants: mul[i][j][k] is the coefficient of b_k in b_i * b_j.
    using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

    /// Validates associativity, the unit, the idempotent/radical split and the
    /// nilpotence of the radical; throws MathError on failure.
    static AlgebraPtr create(std::string name, Field field, std::vector<std::string> labels,
                             StructureConstants mul, std::vector<Scalar> unit, std::vector<std::size_t> idempotents,
                             std::vector<std::size_t> radical);

    const std::string& name() const { return name_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const StructureConstants& mul() const { return mul_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::vector<std::size_t>& idempotents() const { return idempotents_; }
    const std::vector<std::size_t>& radical() const { return radical_; }

    /// Matrix of left multiplication by b_i in the basis b.
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    /// Matrix of right multiplication by b_i in the basis b.
    Matrix right_mult(std::size_t i) const;

    std::vector<Scalar> product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

    /// Same multiplication with the factors swapped.
    AlgebraPtr opposite() const;

    bool same_as(const Algebra& o) const;

private:
    Algebra() = default;

    std::string name_;
    Field field_{};
    std::vector<std::string> labels_;
    StructureConstants mul_;
    std::vector<Scalar> unit_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> radical_;
    std::vector<Matrix> left_mult_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class Module {
public:
    Module() = default;
    /// Throws MathError unless the action matrices realize the algebra.
    Module(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action);

    static Module zero(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const Field& field() const { return alg_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }

    bool operator==(const Module& o) const;

private:
    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

struct ModuleMap {
    Module source;
    Module target;
    Matrix matrix;  // target.dim x source.dim

    ModuleMap() = default;
    /// Throws MathError unless the matrix intertwines the actions.
    ModuleMap(Module src, Module tgt, Matrix m);

    static ModuleMap zero(const Module& src, const Module& tgt);
    static ModuleMap identity(const Module& m);

    bool is_mono() const { return rank(matrix) == source.dim(); }
    bool is_epi() const { return rank(matrix) == target.dim(); }
    bool is_iso() const { return is_mono() && is_epi(); }
    bool is_zero() const { return matrix.is_zero(); }
};

/// Unchecked construction for maps already known to intertwine.
ModuleMap make_map_unchecked(Module src, Module tgt, Matrix m);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);

bool intertwines(const Module& src, const Module& tgt, const Matrix& m);

Module regular_module(const AlgebraPtr& alg);
/// Simple module at the t-th designated idempotent.
Module simple_module(const AlgebraPtr& alg, std::size_t t);

struct Embedded {
    Module module;
    ModuleMap inclusion;
};

struct Projected {
    Module module;
    ModuleMap projection;
};

/// A*e_t for the t-th designated idempotent, with its inclusion into the regular module.
Embedded indecomposable_projective(const AlgebraPtr& alg, std::size_t t);

/// Submodule spanned by the columns of `basis` (must be invariant).
Embedded submodule(const Module& m, const Matrix& basis);
/// Quotient by the span of the columns of `basis` (must be invariant).
Projected quotient(const Module& m, const Matrix& basis);

struct Subquotients {
    Embedded kernel;
    Embedded image;      // inside the target
    Projected cokernel;  // of the target
    /// Corestriction of f onto its image: f = image.inclusion o corestriction.
    ModuleMap corestriction;
};

Subquotients subquotients(const ModuleMap& f);

struct DirectSum {
    Module sum;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& alg);
Module direct_sum(const Module& a, const Module& b);
ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b);

/// Vector-space dual, a left module over `over` (which must be the opposite algebra).
Module dual(const Module& m, const AlgebraPtr& over);
ModuleMap dual(const ModuleMap& f, const Module& dual_source, const Module& dual_target);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);

/// Expresses `f` in the given hom basis; nullopt if it is not in the span.
std::optional<std::vector<Scalar>> hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f);
ModuleMap hom_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coeffs, const Module& m,
                          const Module& n);

Embedded radical(const Module& m);

struct ProjectiveCover {
    Module projective;
    ModuleMap epi;
    /// Multiplicity of A*e_t in the cover, per designated idempotent.
    std::vector<std::size_t> multiplicities;
    /// Position of each summand: (idempotent index t, offset in the cover).
    std::vector<std::pair<std::size_t, std::size_t>> summands;
};

ProjectiveCover projective_cover(const Module& m);

struct InjectiveEnvelope {
    Module injective;
    ModuleMap mono;
};

InjectiveEnvelope injective_envelope(const Module& m);

struct SplitClass {
    bool is_projective = false;
    bool is_injective = false;
    std::optional<ModuleMap> section;     // of the projective cover
    std::optional<ModuleMap> retraction;  // of the injective envelope
};

SplitClass split_class(const Module& m);

/// n > 0: iterated kernels of projective covers; n < 0: iterated cokernels of injective envelopes.
Module syzygy(const Module& m, int n);

struct IsoSearch {
    Verdict verdict = Verdict::Unknown;
    std::optional<ModuleMap> iso;
};

struct IsoSearchOptions {
    std::size_t exhaustive_bound = 12;  // max hom-basis size searched exhaustively
    std::size_t random_tries = 2000;
    std::uint64_t seed = 0x5eed;
};

IsoSearch find_isomorphism(const Module& m, const Module& n, const IsoSearchOptions& opts = {});

struct Pushout {
    Module object;
    ModuleMap from_left;   // X -> P
    ModuleMap from_right;  // Y -> P
};

/// Pushout of X <-a- C -b-> Y.
Pushout pushout(const ModuleMap& a, const ModuleMap& b);

/// Solves g o f = h for g in Hom(target f, target h), i.e. factors h through f.
std::optional<ModuleMap> factor_through_source(const ModuleMap& f, const ModuleMap& h);
/// Solves f o g = h for g in Hom(source h, source f), i.e. lifts h along f.
std::optional<ModuleMap> factor_through_target(const ModuleMap& f, const ModuleMap& h);

/// True when f factors through some projective module (it then factors
/// through the projective cover of its target).
bool factors_through_projective(const ModuleMap& f);

}  // namespace qs
