#include "random_complex.hpp"

#include "qs/functors.hpp"
#include "qs/homotopy.hpp"

#include <doctest.h>

using namespace qs;
namespace fx = qs::fixtures;

TEST_SUITE("functors") {

TEST_CASE("omega and theta of the fixtures") {
    const Complex t = fx::t_per();
    CHECK(find_isomorphism(omega(t).module, fx::k()).verdict == Verdict::Yes);
    CHECK(find_isomorphism(theta(t).module, fx::k()).verdict == Verdict::Yes);
    CHECK(omega(stalk(fx::A())).module == fx::A());
    CHECK(theta(stalk(fx::k())).module == fx::k());
    CHECK(omega(fx::contractible()).module.dim() == 0);
    CHECK(theta(reindex(fx::contractible(), -1)).module.dim() == 0);
    CHECK(omega(t).projection.matrix == Matrix::from_rows({{1, 0}}, 2, Field(2)));
    CHECK(theta(t).inclusion.matrix == Matrix::from_rows({{0}, {1}}, 1, Field(2)));
}

TEST_CASE("stalks") {
    const Complex z = stalk(Module::zero(fx::D2()));
    CHECK(z.term(0).dim() == 0);
    CHECK(is_exact(z));
    const Complex k = stalk(fx::k());
    CHECK(k.frame().lo == 0);
    CHECK(k.frame().hi == 0);
    CHECK_FALSE(is_exact(k));
}

TEST_CASE("F and G on objects and maps") {
    const Complex t = fx::t_per();
    CHECK(find_isomorphism(apply_F(t).term(0), fx::k()).verdict == Verdict::Yes);
    CHECK(find_isomorphism(apply_G(t).term(0), fx::k()).verdict == Verdict::Yes);
    CHECK(apply_F(ChainMap::identity(t)).component(0) == Matrix::identity(1, Field(2)));
    CHECK(apply_F(fx::x_times_identity()).is_zero());
    for (int s = -2; s <= 2; ++s) {
        const Complex y = reindex(t, s);
        CHECK(apply_F(apply_G(y)) == apply_G(y));
    }
}

TEST_CASE("counit and unit") {
    const Complex t = fx::t_per();
    const ChainMap e = counit(t);
    CHECK(e.is_degreewise_mono());
    CHECK(e.component(0) == Matrix::from_rows({{0}, {1}}, 1, Field(2)));
    const ChainMap u = unit(t);
    CHECK(u.component(0) == Matrix::from_rows({{1, 0}}, 2, Field(2)));
    const Complex s = stalk(fx::k());
    CHECK(counit(s).component(0) == Matrix::identity(1, Field(2)));
}

TEST_CASE("triangle identities") {
    for (const Complex& x : {fx::t_per(), stalk(fx::k()), fx::contractible(), reindex(fx::t_per(), 1)}) {
        // eps_F o F(eta) = id_F
        const ChainMap a = compose(counit(apply_F(x)), apply_F(unit(x)));
        CHECK(a.component(0) == ChainMap::identity(apply_F(x)).component(0));
        // G(eps) o eta_G = id_G
        const ChainMap b = compose(apply_G(counit(x)), unit(apply_G(x)));
        CHECK(b.component(0) == ChainMap::identity(apply_G(x)).component(0));
    }
}

TEST_CASE("adjunction on T_per") {
    const AdjunctionWitness w = adjunction_witness(fx::t_per(), fx::t_per());
    CHECK(w.left_basis.size() == 1);
    CHECK(w.right_basis.size() == 1);
    CHECK(w.forward * w.backward == Matrix::identity(1, Field(2)));
    const ChainMap z = ChainMap::zero(apply_F(fx::t_per()), fx::t_per());
    CHECK(transpose(w, z, Direction::Forward).is_zero());
    // the counit corresponds to the identity of G(Y)
    const Complex t = fx::t_per();
    const AdjunctionWitness wy = adjunction_witness(apply_G(t), t);
    const ChainMap id = transpose(wy, counit(t), Direction::Forward);
    CHECK(id.component(0) == Matrix::identity(1, Field(2)));
}

TEST_CASE("adjunction on random complexes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const Complex x = gen::random_complex(rng);
        for (const Complex& y : {fx::t_per(), stalk(fx::k()), stalk(fx::A())}) {
            const AdjunctionWitness w = adjunction_witness(x, y);
            CHECK(w.left_basis.size() == w.right_basis.size());
            const std::size_t n = w.left_basis.size();
            CHECK(w.forward * w.backward == Matrix::identity(n, Field(2)));
        }
    }
}

TEST_CASE("random mono quasi-isomorphisms stay injective on omega") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Complex x = i % 2 ? fx::t_per() : gen::random_complex(rng);
        const ChainMap f = random_mono_quasi_iso(x, rng);
        CHECK(f.is_degreewise_mono());
        CHECK(is_quasi_isomorphism(f));
        const Matrix m = omega(f).matrix;
        CHECK(rank(m) == m.cols());
    }
}

}
