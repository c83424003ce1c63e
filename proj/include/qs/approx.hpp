#pragma once

// Gorenstein dimension, Gorenstein projective/injective approximations,
// complete resolutions and the stalk-complex replacements.

#include "qs/modelcat.hpp"

#include <optional>
#include <string>

namespace qs {

class PeriodicityError : public MathError {
public:
    using MathError::MathError;
};

/// Smallest n <= bound with the n-th syzygy projective (cosyzygy injective).
std::optional<int> projective_dimension(const Module& m, int bound);
std::optional<int> injective_dimension(const Module& m, int bound);

struct GorensteinCheck {
    Verdict verdict = Verdict::Unknown;
    std::optional<int> dimension;
    std::optional<int> left_injdim;   // of A as a left module
    std::optional<int> right_injdim;  // of A as a right module
    std::string note;
};

GorensteinCheck check_gorenstein(const AlgebraPtr& alg, int bound = 5);

/// Over a Gorenstein algebra of dimension d: Ext^i(M, A) = 0 for 1 <= i <= d.
bool is_gorenstein_projective(const Module& m, int gorenstein_dim);
bool is_gorenstein_injective(const Module& m, int gorenstein_dim);

/// Minimal left add(A)-approximation M -> P (every map M -> A factors through it).
ModuleMap left_projective_approximation(const Module& m);

enum class ApproxSide { GP, GI };

/// GP: 0 -> W -mono-> M -epi-> N -> 0 with M Gorenstein projective and W of finite projective dimension.
/// GI: 0 -> N -mono-> M -epi-> W -> 0 with M Gorenstein injective and W of finite injective dimension.
struct ApproximationTriple {
    ApproxSide side = ApproxSide::GP;
    Module n;
    Module m;
    Module w;
    ModuleMap mono;
    ModuleMap epi;

    bool verify(int gorenstein_dim) const;
};

ApproximationTriple gp_gi_approximation(const Module& n, ApproxSide side, int gorenstein_dim);

struct CompleteResolution {
    Complex complex;
    ModuleMap iso;  // projective: Omega(complex) -> M; injective: M -> Theta(complex)
};

/// Totally acyclic complex of projectives with Omega = M, periodic tails.
/// Throws PeriodicityError when no repetition appears within `bound` steps.
CompleteResolution complete_resolution(const Module& m, int bound = 8);
/// Dual construction: exact complex of injectives with Theta = M.
CompleteResolution complete_injective_resolution(const Module& m, int bound = 8);

/// Complete resolutions of the non-projective modules Omega^d(S), S simple (and
/// the dual family on the injective side).
GeneratorFamily default_family(const AlgebraPtr& alg, int shift_range = 3);

enum class ReplacementKind { CofibrantCtr, FibrantCo };
const char* to_string(ReplacementKind k);

struct StalkReplacement {
    ReplacementKind kind = ReplacementKind::CofibrantCtr;
    ApproximationTriple approximation;
    Complex complex;      // Q (cofibrant_ctr) or J (fibrant_co)
    ChainMap map;         // q : Q -> S or j : S -> J
    Complex defect;       // Ker q or Coker j
    TwoSidedSplit pieces; // of the defect at degree 0
    OrthogonalResult upper;
    OrthogonalResult lower;
    Verdict verdict = Verdict::Unknown;
};

StalkReplacement stalk_replacement(const Complex& stalk_complex, ReplacementKind which, const GeneratorFamily& fam,
                                   const HomotopyOptions& opts = {}, int bound = 8);

}  // namespace qs
