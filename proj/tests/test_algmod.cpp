#include "oracle.hpp"
#include "qs/fixtures.hpp"

#include <doctest.h>

using namespace qs;
namespace fx = qs::fixtures;

namespace {

Matrix m2(std::vector<std::vector<long long>> rows, std::size_t cols) {
    return Matrix::from_rows(rows, cols, Field(2));
}

}  // namespace

TEST_SUITE("algmod") {

TEST_CASE("solve with a rank one matrix") {
    const Solution s = solve(m2({{1, 1}, {0, 0}}, 2), std::vector<Scalar>{1, 0});
    REQUIRE(s.particular);
    CHECK(*s.particular == std::vector<Scalar>{1, 0});
    CHECK(s.rank == 1);
    REQUIRE(s.kernel.cols() == 1);
    CHECK(s.kernel.col(0) == std::vector<Scalar>{1, 1});

    // every solution of the enumeration lies in x + span(kernel)
    int solutions = 0;
    for (int b = 0; b < 4; ++b) solutions += ((b & 1) ^ ((b >> 1) & 1)) == 1;
    CHECK(solutions == 2);
}

TEST_CASE("solve identity and zero") {
    const Solution id = solve(Matrix::identity(3, Field(5)), std::vector<Scalar>{4, 0, 2});
    REQUIRE(id.particular);
    CHECK(*id.particular == std::vector<Scalar>{4, 0, 2});
    CHECK(id.kernel.cols() == 0);
    CHECK(id.rank == 3);

    const Solution z = solve(Matrix(2, 2, Field(2)), std::vector<Scalar>{1, 0});
    CHECK_FALSE(z.particular);
    CHECK(z.kernel.cols() == 2);
    CHECK(z.rank == 0);
}

TEST_CASE("arithmetic mod p") {
    const Field f(7);
    for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-3) == 4);
    CHECK_THROWS_AS(Field(6), MathError);
}

TEST_CASE("hom dimensions over D2") {
    const auto k = fx::k(), a = fx::A();
    CHECK(hom_basis(k, a).size() == 1);
    CHECK(hom_basis(a, k).size() == 1);
    CHECK(hom_basis(a, a).size() == 2);
    CHECK(hom_basis(k, k).size() == 1);
    for (const auto& [m, n] : std::vector<std::pair<Module, Module>>{{k, a}, {a, k}, {a, a}, {k, k}})
        CHECK(hom_basis(m, n).size() == static_cast<std::size_t>(oracle::hom_dim(m, n)));

    const ModuleMap f = hom_basis(k, a).front();
    // image is span{x}
    CHECK(f.matrix(0, 0) == 0);
    CHECK(f.matrix(1, 0) == 1);
}

TEST_CASE("hom dimensions over T2 match enumeration") {
    const std::vector<Module> ms{fx::S1(), fx::S2(), *fx::module_by_name("A_T2")};
    for (const auto& m : ms)
        for (const auto& n : ms) CHECK(hom_basis(m, n).size() == static_cast<std::size_t>(oracle::hom_dim(m, n)));
}

TEST_CASE("subquotients of multiplication by x") {
    const Module a = fx::A();
    const ModuleMap x(a, a, a.action(1));
    const Subquotients s = subquotients(x);
    CHECK(find_isomorphism(s.kernel.module, fx::k()).verdict == Verdict::Yes);
    CHECK(find_isomorphism(s.image.module, fx::k()).verdict == Verdict::Yes);
    CHECK(find_isomorphism(s.cokernel.module, fx::k()).verdict == Verdict::Yes);

    const Subquotients id = subquotients(ModuleMap::identity(a));
    CHECK(id.kernel.module.dim() == 0);
    CHECK(id.image.module.dim() == 2);
    CHECK(id.cokernel.module.dim() == 0);

    const Subquotients z = subquotients(ModuleMap::zero(fx::k(), a));
    CHECK(z.kernel.module.dim() == 1);
    CHECK(z.image.module.dim() == 0);
    CHECK(z.cokernel.module.dim() == 2);
}

TEST_CASE("projective covers") {
    const ProjectiveCover k = projective_cover(fx::k());
    CHECK(k.projective == fx::A());
    CHECK(k.epi.is_epi());
    CHECK(k.epi.matrix == m2({{1, 0}}, 2));

    const ProjectiveCover a = projective_cover(fx::A());
    CHECK(a.projective.dim() == 2);
    CHECK(a.epi.is_iso());

    const ProjectiveCover s1 = projective_cover(fx::S1());
    CHECK(s1.projective.dim() == 1);
    CHECK(s1.epi.is_iso());
}

TEST_CASE("injective envelopes") {
    const InjectiveEnvelope k = injective_envelope(fx::k());
    CHECK(k.injective.dim() == 2);
    CHECK(k.mono.is_mono());
    // lands in the socle
    CHECK((k.injective.action(1) * k.mono.matrix).is_zero());

    CHECK(injective_envelope(fx::A()).mono.is_iso());

    const InjectiveEnvelope z = injective_envelope(Module::zero(fx::D2()));
    CHECK(z.injective.dim() == 0);
}

TEST_CASE("split classes") {
    const SplitClass a = split_class(fx::A());
    CHECK(a.is_projective);
    CHECK(a.is_injective);
    const SplitClass k = split_class(fx::k());
    CHECK_FALSE(k.is_projective);
    CHECK_FALSE(k.is_injective);
    const SplitClass s1 = split_class(fx::S1());
    CHECK(s1.is_projective);
    CHECK_FALSE(s1.is_injective);
    CHECK(injective_envelope(fx::S1()).injective.dim() == 2);
}

TEST_CASE("syzygies of k") {
    CHECK(find_isomorphism(syzygy(fx::k(), 1), fx::k()).verdict == Verdict::Yes);
    CHECK(find_isomorphism(syzygy(fx::k(), -1), fx::k()).verdict == Verdict::Yes);
    CHECK(syzygy(fx::A(), 0) == fx::A());
    CHECK(syzygy(fx::S2(), 1) == syzygy(fx::S2(), 1));
    CHECK(split_class(syzygy(fx::S2(), 1)).is_projective);
}

TEST_CASE("isomorphism search") {
    const IsoSearch yes = find_isomorphism(fx::k(), syzygy(fx::k(), 1));
    CHECK(yes.verdict == Verdict::Yes);
    REQUIRE(yes.iso);
    CHECK(yes.iso->is_iso());
    CHECK(find_isomorphism(fx::k(), fx::A()).verdict == Verdict::No);
    CHECK(find_isomorphism(fx::S1(), fx::S2()).verdict == Verdict::No);
    CHECK(find_isomorphism(fx::A(), fx::A()).verdict == Verdict::Yes);
}

TEST_CASE("invalid structures are rejected") {
    // x*x = 1 + x: the radical is not nilpotent
    CHECK_THROWS_AS(Algebra::create("bad", Field(2), {"1", "x"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {1, 0}, {0}, {1}),
                    MathError);
    CHECK_THROWS_AS(Module(fx::D2(), 1, {m2({{1}}, 1), m2({{1}}, 1)}), MathError);
    CHECK_THROWS_AS(ModuleMap(fx::A(), fx::k(), m2({{0, 1}}, 2)), MathError);
}

TEST_CASE("duality through the opposite algebra") {
    const AlgebraPtr op = fx::T2()->opposite();
    CHECK(same_algebra(op->opposite(), fx::T2()));
    const Module d = dual(fx::S1(), op);
    CHECK(d.dim() == 1);
    CHECK(split_class(dual(fx::S1(), op)).is_injective);
}

}
