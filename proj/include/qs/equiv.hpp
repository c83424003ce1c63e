#pragma once

// F' = (fibrant replacement) o F and G' = (cofibrant replacement) o G between
// exP~ and exI~, and certified round trips.

#include "qs/approx.hpp"

#include <string>
#include <vector>

namespace qs {

struct PipelineResult {
    Complex input;
    Complex stalk;  // F(P) or G(I)
    StalkReplacement replacement;
    const Complex& output() const { return replacement.complex; }
};

/// P in exP~ to I in exI~.
PipelineResult f_prime(const Complex& p, const GeneratorFamily& fam, const HomotopyOptions& opts = {});
/// I in exI~ to P in exP~.
PipelineResult g_prime(const Complex& i, const GeneratorFamily& fam, const HomotopyOptions& opts = {});

/// Chain map f : X -> Y with Omega(f) - phi factoring through a projective.
/// Throws PeriodicityError when no lift with periodic tails exists within the bound.
ChainMap lift_stable_map(const ModuleMap& phi, const Complex& x, const Complex& y, const HomotopyOptions& opts = {});
/// Chain map f : X -> Y with Theta(f) - phi factoring through an injective.
ChainMap lift_costable_map(const ModuleMap& phi, const Complex& x, const Complex& y, const HomotopyOptions& opts = {});

enum class RoundTripSide { Projective, Injective };

struct RoundTripReport {
    RoundTripSide side = RoundTripSide::Projective;
    Complex input;
    PipelineResult first;   // F' (projective side) or G'
    PipelineResult second;  // G' or F'
    std::optional<ChainMap> comparison;
    EquivalenceResult equivalence;
    std::optional<WeakEquivalenceResult> composite;  // epsilon o F(q), co structure
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> notes;
};

/// Projective side: G'(F'(P)) -> P certified as a homotopy equivalence.
RoundTripReport verify_round_trip(const Complex& p, const GeneratorFamily& fam, const HomotopyOptions& opts = {});
/// Injective side: I -> F'(G'(I)).
RoundTripReport verify_round_trip_injective(const Complex& i, const GeneratorFamily& fam,
                                            const HomotopyOptions& opts = {});

}  // namespace qs
