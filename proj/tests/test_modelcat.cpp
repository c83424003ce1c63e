#include "qs/approx.hpp"
#include "qs/fixtures.hpp"
#include "qs/functors.hpp"

#include <doctest.h>

using namespace qs;
namespace fx = qs::fixtures;

namespace {

GeneratorFamily tper_family() { return {"tper", {fx::t_per()}, {fx::t_per()}, 3}; }

}  // namespace

TEST_SUITE("modelcat") {

TEST_CASE("membership flags") {
    const MembershipFlags t = membership_flags(fx::t_per());
    CHECK(t.in_exP);
    CHECK(t.in_exI);
    CHECK_FALSE(t.in_tildeP);
    CHECK_FALSE(t.in_tildeI);
    const MembershipFlags c = membership_flags(fx::contractible());
    CHECK((c.in_exP && c.in_exI && c.in_tildeP && c.in_tildeI));
    const MembershipFlags s = membership_flags(stalk(fx::k()));
    CHECK_FALSE((s.in_exP || s.in_exI || s.in_tildeP || s.in_tildeI));
}

TEST_CASE("orthogonality certificates") {
    const OrthogonalResult a = orthogonal_certificate(stalk(fx::A()), OrthogonalSide::LeftOfExI, tper_family());
    CHECK(a.verdict == Certification::Certified);
    REQUIRE(a.certificate);
    CHECK(a.certificate->recheck());

    const OrthogonalResult t = orthogonal_certificate(fx::t_per(), OrthogonalSide::RightOfExP, tper_family());
    CHECK(t.verdict == Certification::Refuted);
    REQUIRE(t.witness);
    CHECK(null_homotopy(*t.witness).verdict == Verdict::No);

    const Complex z = Complex::zero(fx::D2());
    CHECK(orthogonal_certificate(z, OrthogonalSide::LeftOfExI, tper_family()).verdict == Certification::Certified);
    CHECK(orthogonal_certificate(z, OrthogonalSide::RightOfExP, tper_family()).verdict == Certification::Certified);
}

TEST_CASE("stalk of k is not left orthogonal to exI") {
    // a plain ctr-cofibration 0 -> T_per has Coker F = stalk(k), which is refuted
    const OrthogonalResult r = orthogonal_certificate(stalk(fx::k()), OrthogonalSide::LeftOfExI, tper_family());
    CHECK(r.verdict == Certification::Refuted);
    const ChainMap f = ChainMap::zero(Complex::zero(fx::D2()), fx::t_per());
    const MapClassification c = classify_map(f, StructureTag::Ctr, tper_family());
    CHECK(c.cofibration.verdict == Verdict::Yes);
    CHECK(cokernel(apply_F(f)).complex.term(0) == fx::k());
}

TEST_CASE("a family member outside exP is an error") {
    const GeneratorFamily bad{"bad", {stalk(fx::k())}, {}, 1};
    CHECK_THROWS_AS(orthogonal_certificate(fx::t_per(), OrthogonalSide::RightOfExP, bad), MathError);
}

TEST_CASE("classification of 0 -> T_per") {
    const ChainMap f = ChainMap::zero(Complex::zero(fx::D2()), fx::t_per());
    const MapClassification c = classify_map(f, StructureTag::Ctr, tper_family());
    CHECK(c.cofibration.verdict == Verdict::Yes);
    CHECK(c.trivial_cofibration.verdict == Verdict::No);
}

TEST_CASE("classification of the counit") {
    const MapClassification c = classify_map(counit(fx::t_per()), StructureTag::Co, tper_family());
    CHECK(c.cofibration.verdict == Verdict::Yes);
    CHECK(c.trivial_cofibration.verdict == Verdict::Yes);
    CHECK(c.fibration.verdict == Verdict::No);
}

TEST_CASE("identities are everything") {
    for (const Complex& x : {fx::t_per(), fx::contractible()})
        for (StructureTag tag : {StructureTag::Ctr, StructureTag::Co}) {
            const MapClassification c = classify_map(ChainMap::identity(x), tag, tper_family());
            CHECK(c.cofibration.verdict == Verdict::Yes);
            CHECK(c.trivial_cofibration.verdict == Verdict::Yes);
            CHECK(c.fibration.verdict == Verdict::Yes);
            CHECK(c.trivial_fibration.verdict == Verdict::Yes);
            CHECK(is_weak_equivalence(ChainMap::identity(x), tag, tper_family()).verdict == Verdict::Yes);
        }
}

TEST_CASE("weak equivalences between copies of T_per") {
    const Complex t = fx::t_per();
    CHECK(is_weak_equivalence(ChainMap::zero(t, t), StructureTag::Ctr, tper_family()).verdict == Verdict::No);
    const WeakEquivalenceResult id = is_weak_equivalence(ChainMap::identity(t), StructureTag::Ctr, tper_family());
    CHECK(id.verdict == Verdict::Yes);
    CHECK(is_weak_equivalence(counit(t), StructureTag::Co, tper_family()).verdict == Verdict::Yes);
}

}
