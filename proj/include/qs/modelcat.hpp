#pragma once

// Membership in exP~, exI~, P~, I~, orthogonality against a finite generator
// family, and (trivial) (co)fibrations / weak equivalences in the singular
// contraderived (ctr) and coderived (co) model structures.

#include "qs/homotopy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qs {

enum class StructureTag { Ctr, Co };
const char* to_string(StructureTag t);

struct MembershipFlags {
    bool in_exP = false;
    bool in_exI = false;
    bool in_tildeP = false;
    bool in_tildeI = false;
};

MembershipFlags membership_flags(const Complex& x);

/// Finite surrogate for exP~ (projective_side) and exI~ (injective_side),
/// closed under shifts in [-shift_range, shift_range].
struct GeneratorFamily {
    std::string name;
    std::vector<Complex> projective_side;
    std::vector<Complex> injective_side;
    int shift_range = 3;
};

enum class OrthogonalSide { RightOfExP, LeftOfExI };
const char* to_string(OrthogonalSide s);

enum class Certification { Certified, Refuted, Unknown };
const char* to_string(Certification c);

struct OrthogonalResult {
    Certification verdict = Certification::Unknown;
    std::optional<ChainMap> witness;         // not null-homotopic (Refuted) or undecided (Unknown)
    std::optional<Certificate> certificate;  // Orthogonality, when Certified
    std::size_t maps_checked = 0;
    std::string family;
    std::string note;
};

/// right_of_exP: every chain map T[s] -> X is null-homotopic; left_of_exI:
/// every chain map X -> T[s] is. Checked on periodic chain-map bases.
OrthogonalResult orthogonal_certificate(const Complex& x, OrthogonalSide side, const GeneratorFamily& fam,
                                        const HomotopyOptions& opts = {});

struct Flag {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::optional<OrthogonalResult> orthogonality;
};

struct MapClassification {
    Flag cofibration;
    Flag trivial_cofibration;
    Flag fibration;
    Flag trivial_fibration;
};

MapClassification classify_map(const ChainMap& f, StructureTag tag, const GeneratorFamily& fam,
                               const HomotopyOptions& opts = {});

struct WeakEquivalenceResult {
    Verdict verdict = Verdict::Unknown;
    std::string route;
    std::optional<Certificate> certificate;
};

WeakEquivalenceResult is_weak_equivalence(const ChainMap& f, StructureTag tag, const GeneratorFamily& fam,
                                          const HomotopyOptions& opts = {});

}  // namespace qs
