#pragma once

// Omega(X) = X_0 / Im d_1, Theta(X) = Ker d_0, the stalk functor, F and G,
// the adjunction Hom(F X, Y) = Hom(X, G Y) and its unit/counit.

#include "qs/complex.hpp"

#include <random>

namespace qs {

/// Cokernel of d_1 with its projection from X_0. Equal to X_0 when d_1 = 0.
Projected omega(const Complex& x);
/// Kernel of d_0 with its inclusion into X_0. Equal to X_0 when d_0 = 0.
Embedded theta(const Complex& x);

ModuleMap omega(const ChainMap& f);
ModuleMap theta(const ChainMap& f);

Complex apply_F(const Complex& x);
Complex apply_G(const Complex& x);
ChainMap apply_F(const ChainMap& f);
ChainMap apply_G(const ChainMap& f);

/// Map between stalk complexes with the given degree-0 component.
ChainMap stalk_map(const ModuleMap& m);

enum class Direction { Forward, Backward };  // Forward: Hom(F X, Y) -> Hom(X, G Y)

struct AdjunctionWitness {
    Complex x;
    Complex y;
    std::vector<ChainMap> left_basis;   // Hom(F X, Y)
    std::vector<ChainMap> right_basis;  // Hom(X, G Y)
    Matrix forward;   // columns: coordinates of transposed left_basis elements
    Matrix backward;  // columns: coordinates of transposed right_basis elements
};

AdjunctionWitness adjunction_witness(const Complex& x, const Complex& y);

/// Forward: f : F X -> Y to X -> G Y. Backward: g : X -> G Y to F X -> Y.
ChainMap transpose(const AdjunctionWitness& w, const ChainMap& f, Direction dir);

/// Coordinates of a chain map out of, or into, a stalk complex in a basis of such maps.
std::vector<Scalar> stalk_map_coordinates(const std::vector<ChainMap>& basis, const ChainMap& f);

ChainMap counit(const Complex& y);  // FG(Y) -> Y
ChainMap unit(const Complex& x);    // X -> GF(X)

/// f = (id, h) : X -> X + C with C a disk on a term of X; a monomorphism and
/// a quasi-isomorphism.
ChainMap random_mono_quasi_iso(const Complex& x, std::mt19937_64& rng);

}  // namespace qs
