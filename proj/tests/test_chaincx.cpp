#include "oracle.hpp"
#include "qs/fixtures.hpp"
#include "qs/homotopy.hpp"

#include <doctest.h>

using namespace qs;
namespace fx = qs::fixtures;

namespace {

Matrix xmat() { return fx::A().action(1); }

Homotopy alternating() {
    // s_n = (n mod 2) id_A on T_per
    const Complex t = fx::t_per();
    const Field f(2);
    MatrixSequence s{Frame{0, 1, 2, 2}, {Matrix(2, 2, f), Matrix::identity(2, f)}};
    return Homotopy{t, t, s};
}

}  // namespace

TEST_SUITE("chaincx") {

TEST_CASE("T_per is exact with zero homology") {
    const Complex t = fx::t_per();
    for (int n = -4; n <= 4; ++n) {
        CHECK(t.term(n).dim() == 2);
        CHECK(t.diff(n) == xmat());
        CHECK(homology(t, n).module.dim() == 0);
    }
    CHECK(is_exact(t));
}

TEST_CASE("stalk homology and exactness") {
    const Complex s = stalk(fx::k());
    CHECK(homology(s, 0).module == fx::k());
    CHECK(homology(s, 1).module.dim() == 0);
    CHECK_FALSE(is_exact(s));
    CHECK(is_exact(fx::contractible()));
    CHECK(is_exact(Complex::zero(fx::D2())));
}

TEST_CASE("d o d = 0 is enforced") {
    const Field f(2);
    CHECK_THROWS_AS(Complex(fx::D2(), Frame{0, 2, 0, 0}, {fx::A(), fx::A(), fx::A()},
                            {Matrix(0, 2, f), Matrix::identity(2, f), Matrix::identity(2, f)}),
                    MathError);
}

TEST_CASE("cones") {
    const Complex c = cone(ChainMap::identity(stalk(fx::k())));
    CHECK(c.term(0).dim() == 1);
    CHECK(c.term(1).dim() == 1);
    CHECK(c.diff(1) == Matrix::identity(1, Field(2)));
    CHECK(is_exact(c));
    for (int n = -3; n <= 3; ++n) CHECK(homology(c, n).module.dim() == 0);

    const Complex t = fx::t_per();
    const Complex z = cone(ChainMap::zero(t, Complex::zero(fx::D2())));
    for (int n = -3; n <= 3; ++n) CHECK(z.term(n).dim() == t.term(n - 1).dim());
    CHECK(is_exact(z));

    CHECK(is_exact(cone(fx::x_times_identity())));
}

TEST_CASE("quasi-isomorphism iff exact cone") {
    const Complex t = fx::t_per();
    CHECK(is_quasi_isomorphism(ChainMap::zero(t, t)));
    CHECK_FALSE(is_quasi_isomorphism(ChainMap::zero(stalk(fx::k()), stalk(fx::k()))));
    CHECK(is_quasi_isomorphism(ChainMap::identity(stalk(fx::k()))));
    CHECK(is_exact(cone(ChainMap::identity(stalk(fx::k())))));
}

TEST_CASE("x times identity is null-homotopic with period two") {
    const ChainMap f = fx::x_times_identity();
    CHECK(verify_homotopy(f, alternating()));
    CHECK_FALSE(find_homotopy(f, 1));
    const auto s = find_homotopy(f, 2);
    REQUIRE(s);
    CHECK(verify_homotopy(f, *s));

    // independent: no constant module map s with x = x s + s x
    int constant = 0;
    for (std::uint64_t b = 0; b < 16; ++b) {
        const Matrix m = oracle::from_bits(b, 2, 2);
        if (oracle::commutes(fx::A(), fx::A(), m) && xmat() * m + m * xmat() == xmat()) ++constant;
    }
    CHECK(constant == 0);

    const NullHomotopyResult r = null_homotopy(f);
    CHECK(r.verdict == Verdict::Yes);
    REQUIRE(r.homotopy);
    CHECK(verify_homotopy(f, *r.homotopy));
}

TEST_CASE("identity null-homotopies") {
    const NullHomotopyResult c = null_homotopy(ChainMap::identity(fx::contractible()));
    CHECK(c.verdict == Verdict::Yes);
    CHECK(c.strategy == 'a');
    const NullHomotopyResult t = null_homotopy(ChainMap::identity(fx::t_per()));
    CHECK(t.verdict == Verdict::No);
    CHECK(t.strategy == 'b');
    CHECK(null_homotopy_strategy(ChainMap::identity(fx::t_per()), 'c').verdict == Verdict::Unknown);
}

TEST_CASE("homotopy equivalences") {
    const Complex t = fx::t_per();
    const EquivalenceResult id = homotopy_equivalence_certificate(ChainMap::identity(t));
    CHECK(id.verdict == Verdict::Yes);
    REQUIRE(id.certificate);
    CHECK(id.certificate->recheck());
    CHECK(homotopy_equivalence_certificate(ChainMap::zero(t, t)).verdict == Verdict::No);
    CHECK(homotopy_equivalence_certificate(ChainMap::zero(fx::contractible(), Complex::zero(fx::D2()))).verdict ==
          Verdict::Yes);
}

TEST_CASE("truncations") {
    const Complex t = fx::t_per();
    const Complex up = hard_truncate(t, TruncationMode::Above, 0);
    CHECK(up.term(0).dim() == 0);
    CHECK(up.term(1).dim() == 2);
    CHECK(up.term(7).dim() == 2);
    CHECK(up.term(-3).dim() == 0);
    const Complex down = hard_truncate(t, TruncationMode::Below, 0);
    CHECK(down.term(1).dim() == 0);
    CHECK(down.term(-5).dim() == 2);
    const Complex s = stalk(fx::k());
    CHECK(hard_truncate(s, TruncationMode::Below, 0) == s);
}

TEST_CASE("two-sided split of the counit cokernel") {
    const Complex t = fx::t_per();
    const Field f(2);
    const ChainMap eps(stalk(fx::k()), t, MatrixSequence{Frame{0, 0, 0, 0}, {Matrix::from_rows({{0}, {1}}, 1, f)}});
    const Complex c = cokernel(eps).complex;
    const TwoSidedSplit sp = two_sided_split(c, 0);
    CHECK(is_short_exact(sp.inclusion, sp.projection));
    CHECK(sp.upper.term(1).dim() == 2);
    CHECK(sp.upper.term(0).dim() == 0);
    CHECK(sp.lower.term(-1).dim() == 2);
    CHECK(sp.lower.term(0).dim() == 1);
    CHECK(sp.lower.term(1).dim() == 0);
}

TEST_CASE("reindexing") {
    const Complex s1 = reindex(stalk(fx::k()), 1);
    CHECK(s1.term(1) == fx::k());
    CHECK(s1.term(0).dim() == 0);
    const Complex t = fx::t_per();
    CHECK(reindex(reindex(t, 3), -3) == t);
    CHECK(homotopy_equivalence_certificate(
              ChainMap(reindex(t, 1), t, MatrixSequence{Frame{0, 0, 1, 1}, {Matrix::identity(2, Field(2))}}))
              .verdict == Verdict::Yes);
}

TEST_CASE("chain map space of T_per") {
    CHECK(chain_map_space(fx::t_per(), fx::t_per()).size() == 9);
    CHECK(chain_map_space(stalk(fx::k()), fx::t_per()).size() == 1);
}

TEST_CASE("dual of T_per is exact") {
    const Complex t = fx::t_per();
    CHECK(is_exact(dual(t, fx::D2()->opposite())));
}

}
