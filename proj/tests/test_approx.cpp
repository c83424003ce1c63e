#include "qs/approx.hpp"
#include "qs/fixtures.hpp"
#include "qs/functors.hpp"

#include <doctest.h>

using namespace qs;
namespace fx = qs::fixtures;

TEST_SUITE("approx") {

TEST_CASE("Gorenstein dimensions") {
    CHECK(*check_gorenstein(fx::D2()).dimension == 0);
    CHECK(*check_gorenstein(fx::T2()).dimension == 1);
    CHECK(*check_gorenstein(fx::F2()).dimension == 0);
    CHECK(check_gorenstein(fx::T2()).verdict == Verdict::Yes);
}

TEST_CASE("projective and injective dimensions") {
    CHECK(*projective_dimension(fx::S2(), 5) == 1);
    CHECK(*projective_dimension(fx::S1(), 5) == 0);
    CHECK_FALSE(projective_dimension(fx::k(), 5));
    CHECK(*injective_dimension(fx::S1(), 5) == 1);
}

TEST_CASE("Gorenstein projective modules") {
    CHECK(is_gorenstein_projective(fx::k(), 0));
    CHECK(is_gorenstein_projective(fx::S1(), 1));
    CHECK_FALSE(is_gorenstein_projective(fx::S2(), 1));
    CHECK(is_gorenstein_injective(fx::S2(), 1));
    CHECK_FALSE(is_gorenstein_injective(fx::S1(), 1));
}

TEST_CASE("approximation triples") {
    const ApproximationTriple k = gp_gi_approximation(fx::k(), ApproxSide::GP, 0);
    CHECK(k.w.dim() == 0);
    CHECK(k.epi.is_iso());
    CHECK(k.verify(0));

    const ApproximationTriple s2 = gp_gi_approximation(fx::S2(), ApproxSide::GP, 1);
    CHECK(split_class(s2.m).is_projective);
    CHECK(s2.m.dim() == 2);
    CHECK(s2.w.dim() == 1);
    CHECK(s2.verify(1));

    const ApproximationTriple s1 = gp_gi_approximation(fx::S1(), ApproxSide::GI, 1);
    CHECK(split_class(s1.m).is_injective);
    CHECK(s1.verify(1));

    const ApproximationTriple z = gp_gi_approximation(Module::zero(fx::T2()), ApproxSide::GI, 1);
    CHECK(z.m.dim() == 0);
    CHECK(z.w.dim() == 0);
}

TEST_CASE("complete resolutions") {
    const CompleteResolution k = complete_resolution(fx::k());
    CHECK(k.complex == fx::t_per());
    CHECK(k.iso.is_iso());
    CHECK(k.complex.frame().left_period == 1);
    CHECK(k.complex.frame().right_period == 1);

    const CompleteResolution a = complete_resolution(fx::A());
    CHECK(membership_flags(a.complex).in_tildeP);
    CHECK(omega(a.complex).module == fx::A());

    const CompleteResolution f = complete_resolution(*fx::module_by_name("A_F2"));
    CHECK(membership_flags(f.complex).in_tildeP);

    const CompleteResolution inj = complete_injective_resolution(fx::k());
    CHECK(membership_flags(inj.complex).in_exI);
    CHECK(find_isomorphism(theta(inj.complex).module, fx::k()).verdict == Verdict::Yes);
}

TEST_CASE("default families") {
    const GeneratorFamily d = default_family(fx::D2());
    REQUIRE(d.projective_side.size() == 1);
    CHECK(d.projective_side[0] == fx::t_per());
    CHECK(d.injective_side.size() == 1);
    CHECK(d.shift_range == 3);
    const GeneratorFamily t = default_family(fx::T2());
    CHECK(t.projective_side.empty());
    CHECK(t.injective_side.empty());
}

TEST_CASE("stalk replacements of k") {
    const GeneratorFamily fam = default_family(fx::D2());
    const StalkReplacement q = stalk_replacement(stalk(fx::k()), ReplacementKind::CofibrantCtr, fam);
    CHECK(q.verdict == Verdict::Yes);
    CHECK(q.complex == fx::t_per());
    CHECK(q.map.component(0) == Matrix::from_rows({{1, 0}}, 2, Field(2)));
    CHECK(q.upper.verdict == Certification::Certified);
    CHECK(q.lower.verdict == Certification::Certified);

    const StalkReplacement j = stalk_replacement(stalk(fx::k()), ReplacementKind::FibrantCo, fam);
    CHECK(j.verdict == Verdict::Yes);
    CHECK(membership_flags(j.complex).in_exI);
    CHECK(j.complex.term(0).dim() == 2);
    CHECK(rank(j.map.component(0)) == 1);
    CHECK((j.complex.term(0).action(1) * j.map.component(0)).is_zero());
}

TEST_CASE("stalk replacement of a projective-injective module") {
    const GeneratorFamily fam = default_family(fx::D2());
    for (ReplacementKind kind : {ReplacementKind::CofibrantCtr, ReplacementKind::FibrantCo}) {
        const StalkReplacement r = stalk_replacement(stalk(fx::A()), kind, fam);
        CHECK(r.verdict == Verdict::Yes);
        CHECK(membership_flags(r.complex).in_tildeP);
        CHECK(r.map.component(0).is_square());
        CHECK(rank(r.map.component(0)) == 2);
    }
}

}
