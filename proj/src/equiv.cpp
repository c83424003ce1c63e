#include "qs/equiv.hpp"

#include "qs/functors.hpp"

namespace qs {

PipelineResult f_prime(const Complex& p, const GeneratorFamily& fam, const HomotopyOptions& opts) {
    if (!membership_flags(p).in_exP) throw MathError("F' expects a complex in exP~");
    const Complex s = apply_F(p);
    return {p, s, stalk_replacement(s, ReplacementKind::FibrantCo, fam, opts)};
}

PipelineResult g_prime(const Complex& i, const GeneratorFamily& fam, const HomotopyOptions& opts) {
    if (!membership_flags(i).in_exI) throw MathError("G' expects a complex in exI~");
    const Complex s = apply_G(i);
    return {i, s, stalk_replacement(s, ReplacementKind::CofibrantCtr, fam, opts)};
}

namespace {

ChainMap lift(const ModuleMap& phi, const Complex& x, const Complex& y, const HomotopyOptions& opts,
              bool projective) {
    const Field fld = x.field();
    Matrix rhs;
    Matrix left0, right0;  // degree-0 constraint: left0 * U_0 * right0
    std::vector<Matrix> corrections;
    if (projective) {
        const Projected ox = omega(x), oy = omega(y);
        if (!(phi.source == ox.module) || !(phi.target == oy.module))
            throw MathError("stable map must go from Omega of the source to Omega of the target");
        const ProjectiveCover pc = projective_cover(oy.module);
        for (const auto& g : hom_basis(ox.module, pc.projective))
            corrections.push_back(-(pc.epi.matrix * g.matrix * ox.projection.matrix));
        rhs = phi.matrix * ox.projection.matrix;
        left0 = oy.projection.matrix;
        right0 = Matrix::identity(x.term(0).dim(), fld);
    } else {
        const Embedded tx = theta(x), ty = theta(y);
        if (!(phi.source == tx.module) || !(phi.target == ty.module))
            throw MathError("costable map must go from Theta of the source to Theta of the target");
        const InjectiveEnvelope ie = injective_envelope(tx.module);
        for (const auto& g : hom_basis(ie.injective, ty.module))
            corrections.push_back(-(ty.inclusion.matrix * g.matrix * ie.mono.matrix));
        rhs = ty.inclusion.matrix * phi.matrix;
        left0 = Matrix::identity(y.term(0).dim(), fld);
        right0 = tx.inclusion.matrix;
    }
    for (int m = 1; m <= opts.period_bound; ++m) {
        const Frame fr = enclosing_frame({x.frame(), y.frame()}, m, true);
        LinearSystem sys(fld);
        const std::size_t u = sys.add_graded(graded_unknown(x, y, 0, fr));
        std::vector<LinearSystem::ScalarTerm> scalars;
        for (const auto& c : corrections) scalars.push_back({sys.add_scalar(), c});
        const auto [first, last] = check_range({x.frame(), y.frame(), fr});
        for (int n = first; n <= last; ++n)
            sys.add_equation({{u, n, y.diff(n), Matrix::identity(x.term(n).dim(), fld)},
                              {u, n - 1, -Matrix::identity(y.term(n - 1).dim(), fld), x.diff(n)}},
                             {}, Matrix(y.term(n - 1).dim(), x.term(n).dim(), fld));
        sys.add_equation({{u, 0, left0, right0}}, scalars, rhs);
        const Solution sol = sys.solve();
        if (sol.particular) return ChainMap(x, y, sys.sequence(u, *sol.particular));
    }
    throw PeriodicityError("no periodic lift within multiplier " + std::to_string(opts.period_bound));
}

RoundTripReport finish(RoundTripReport r, const ModuleMap& phi, const Complex& from, const Complex& to,
                       const Complex& fibrant, const ChainMap& q, const GeneratorFamily& fam,
                       const HomotopyOptions& opts, bool projective) {
    try {
        r.comparison = projective ? lift_stable_map(phi, from, to, opts) : lift_costable_map(phi, from, to, opts);
    } catch (const PeriodicityError& e) {
        r.notes.push_back(std::string("comparison lift: ") + e.what());
        r.verdict = Verdict::Unknown;
        return r;
    }
    r.equivalence = homotopy_equivalence_certificate(*r.comparison, opts);
    r.notes.push_back("comparison " + r.equivalence.note);

    const ChainMap composite = compose(counit(fibrant), apply_F(q));
    r.composite = is_weak_equivalence(composite, StructureTag::Co, fam, opts);
    r.notes.push_back(std::string("epsilon o F(q) weak equivalence (co): ") + to_string(r.composite->verdict));

    Verdict v = r.equivalence.verdict;
    if (v == Verdict::Yes && !(r.equivalence.certificate && r.equivalence.certificate->recheck())) v = Verdict::No;
    v = verdict_and(v, r.first.replacement.verdict);
    v = verdict_and(v, r.second.replacement.verdict);
    r.verdict = v;
    return r;
}

}  // namespace

ChainMap lift_stable_map(const ModuleMap& phi, const Complex& x, const Complex& y, const HomotopyOptions& opts) {
    return lift(phi, x, y, opts, true);
}

ChainMap lift_costable_map(const ModuleMap& phi, const Complex& x, const Complex& y, const HomotopyOptions& opts) {
    return lift(phi, x, y, opts, false);
}

RoundTripReport verify_round_trip(const Complex& p, const GeneratorFamily& fam, const HomotopyOptions& opts) {
    RoundTripReport r;
    r.side = RoundTripSide::Projective;
    r.input = p;
    r.first = f_prime(p, fam, opts);
    r.second = g_prime(r.first.output(), fam, opts);
    const Complex back = r.second.output();
    const Complex fibrant = r.first.output();
    const ChainMap q = r.second.replacement.map;

    // Omega(P') -> Theta(I) <- Omega(P)
    const ModuleMap a = omega(r.second.replacement.map);
    const ModuleMap b = theta(r.first.replacement.map);
    auto phi = factor_through_target(b, a);
    if (!phi) {
        phi = ModuleMap::zero(a.source, b.source);
        r.notes.push_back("no strict syzygy identification; lifting the zero map");
    }
    return finish(std::move(r), *phi, back, p, fibrant, q, fam, opts, true);
}

RoundTripReport verify_round_trip_injective(const Complex& i, const GeneratorFamily& fam,
                                            const HomotopyOptions& opts) {
    RoundTripReport r;
    r.side = RoundTripSide::Injective;
    r.input = i;
    r.first = g_prime(i, fam, opts);
    r.second = f_prime(r.first.output(), fam, opts);
    const Complex back = r.second.output();
    const ChainMap q = r.first.replacement.map;

    // Theta(I) <<- Omega(P) -> Theta(I')
    const ModuleMap a = omega(r.first.replacement.map);
    const ModuleMap b = theta(r.second.replacement.map);
    auto phi = factor_through_source(a, b);
    if (!phi) {
        phi = ModuleMap::zero(a.target, b.target);
        r.notes.push_back("no strict cosyzygy identification; lifting the zero map");
    }
    return finish(std::move(r), *phi, i, back, i, q, fam, opts, false);
}

}  // namespace qs
