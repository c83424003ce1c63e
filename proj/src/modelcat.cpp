#include "qs/modelcat.hpp"

#include "qs/approx.hpp"

namespace qs {

const char* to_string(StructureTag t) { return t == StructureTag::Ctr ? "ctr" : "co"; }

const char* to_string(OrthogonalSide s) { return s == OrthogonalSide::RightOfExP ? "right_of_exP" : "left_of_exI"; }

const char* to_string(Certification c) {
    switch (c) {
        case Certification::Certified: return "CERTIFIED";
        case Certification::Refuted: return "REFUTED";
        case Certification::Unknown: return "UNKNOWN";
    }
    return "?";
}

MembershipFlags membership_flags(const Complex& x) {
    MembershipFlags m;
    if (!is_exact(x)) return m;
    bool proj = true, inj = true;
    for (const auto& t : x.core_terms()) {
        const SplitClass sc = split_class(t);
        proj = proj && sc.is_projective;
        inj = inj && sc.is_injective;
    }
    m.in_exP = proj;
    m.in_exI = inj;
    if (!proj && !inj) return m;
    bool cyc_proj = proj, cyc_inj = inj;
    const auto [first, last] = check_range({x.frame()});
    for (int n = first; n <= last && (cyc_proj || cyc_inj); ++n) {
        const Module z = submodule(x.term(n), kernel(x.diff(n))).module;
        const SplitClass sc = split_class(z);
        cyc_proj = cyc_proj && sc.is_projective;
        cyc_inj = cyc_inj && sc.is_injective;
    }
    m.in_tildeP = cyc_proj;
    m.in_tildeI = cyc_inj;
    return m;
}

OrthogonalResult orthogonal_certificate(const Complex& x, OrthogonalSide side, const GeneratorFamily& fam,
                                        const HomotopyOptions& opts) {
    const bool right = side == OrthogonalSide::RightOfExP;
    const auto& members = right ? fam.projective_side : fam.injective_side;
    OrthogonalResult r;
    r.family = fam.name;
    Certificate cert;
    cert.kind = Certificate::Kind::Orthogonality;
    bool unknown = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const MembershipFlags mf = membership_flags(members[i]);
        if (right ? !mf.in_exP : !mf.in_exI)
            throw MathError("family member " + std::to_string(i) + " is not in " + (right ? "exP~" : "exI~"));
        for (int s = -fam.shift_range; s <= fam.shift_range; ++s) {
            const Complex t = reindex(members[i], s);
            const auto basis = right ? chain_map_space(t, x) : chain_map_space(x, t);
            for (const auto& f : basis) {
                ++r.maps_checked;
                const NullHomotopyResult nh = null_homotopy(f, opts);
                if (nh.verdict == Verdict::Yes) {
                    cert.maps.push_back(f);
                    cert.homotopies.push_back(*nh.homotopy);
                } else if (nh.verdict == Verdict::No) {
                    r.verdict = Certification::Refuted;
                    r.witness = f;
                    r.note = "member " + std::to_string(i) + " shift " + std::to_string(s) + ": " + nh.note;
                    return r;
                } else if (!unknown) {
                    unknown = true;
                    r.witness = f;
                    r.note = "member " + std::to_string(i) + " shift " + std::to_string(s) + ": " + nh.note;
                }
            }
        }
    }
    if (unknown) return r;
    cert.checked = cert.recheck();
    r.verdict = cert.checked ? Certification::Certified : Certification::Unknown;
    r.certificate = std::move(cert);
    return r;
}

namespace {

Flag yes(std::string why) { return {Verdict::Yes, std::move(why), std::nullopt}; }
Flag no(std::string why) { return {Verdict::No, std::move(why), std::nullopt}; }

Flag from_orthogonal(OrthogonalResult o, const std::string& what) {
    Flag f;
    f.verdict = o.verdict == Certification::Certified ? Verdict::Yes
                : o.verdict == Certification::Refuted ? Verdict::No
                                                      : Verdict::Unknown;
    f.reason = what + " " + to_string(o.verdict) + (o.note.empty() ? "" : " (" + o.note + ")");
    f.orthogonality = std::move(o);
    return f;
}

}  // namespace

MapClassification classify_map(const ChainMap& f, StructureTag tag, const GeneratorFamily& fam,
                               const HomotopyOptions& opts) {
    MapClassification c;
    const bool mono = f.is_degreewise_mono();
    const bool epi = f.is_degreewise_epi();
    std::optional<Complex> coker, ker;
    if (mono) coker = cokernel(f).complex;
    if (epi) ker = kernel(f).complex;

    if (tag == StructureTag::Ctr) {
        if (!mono) {
            c.cofibration = no("not a monomorphism");
            c.trivial_cofibration = no("not a monomorphism");
        } else {
            const MembershipFlags m = membership_flags(*coker);
            c.cofibration = m.in_exP ? yes("mono, cokernel in exP~") : no("cokernel not in exP~");
            c.trivial_cofibration = m.in_tildeP ? yes("mono, cokernel in P~") : no("cokernel not in P~");
        }
        if (!epi) {
            c.fibration = no("not an epimorphism");
            c.trivial_fibration = no("not an epimorphism");
        } else {
            c.fibration = yes("epi");
            c.trivial_fibration =
                from_orthogonal(orthogonal_certificate(*ker, OrthogonalSide::RightOfExP, fam, opts), "kernel");
        }
        return c;
    }
    if (!mono) {
        c.cofibration = no("not a monomorphism");
        c.trivial_cofibration = no("not a monomorphism");
    } else {
        c.cofibration = yes("mono");
        c.trivial_cofibration =
            from_orthogonal(orthogonal_certificate(*coker, OrthogonalSide::LeftOfExI, fam, opts), "cokernel");
    }
    if (!epi) {
        c.fibration = no("not an epimorphism");
        c.trivial_fibration = no("not an epimorphism");
    } else {
        const MembershipFlags m = membership_flags(*ker);
        c.fibration = m.in_exI ? yes("epi, kernel in exI~") : no("kernel not in exI~");
        c.trivial_fibration = m.in_tildeI ? yes("epi, kernel in I~") : no("kernel not in I~");
    }
    return c;
}

namespace {

bool bifibrant(const Complex& x, StructureTag tag) {
    const MembershipFlags m = membership_flags(x);
    return tag == StructureTag::Ctr ? m.in_exP : m.in_exI;
}

bool is_stalk(const Complex& x) {
    if (!x.is_bounded()) return false;
    for (int n = x.frame().lo; n <= x.frame().hi; ++n)
        if (n != 0 && x.term(n).dim() != 0) return false;
    return true;
}

struct Replaced {
    Verdict verdict = Verdict::Unknown;
    Complex object;
    ChainMap map;  // ctr: object -> x, co: x -> object
};

Replaced replace(const Complex& x, StructureTag tag, const GeneratorFamily& fam, const HomotopyOptions& opts) {
    if (bifibrant(x, tag)) return {Verdict::Yes, x, ChainMap::identity(x)};
    if (!is_stalk(x)) return {};
    const StalkReplacement r = stalk_replacement(
        x, tag == StructureTag::Ctr ? ReplacementKind::CofibrantCtr : ReplacementKind::FibrantCo, fam, opts);
    return {r.verdict, r.complex, r.map};
}

// ctr: solves qy o g = f o qx; co: g o jx = jy o f.
std::optional<ChainMap> transport(const ChainMap& f, const Replaced& rx, const Replaced& ry, StructureTag tag,
                                  const HomotopyOptions& opts) {
    const Complex& a = rx.object;
    const Complex& b = ry.object;
    const Field fld = a.field();
    for (int m = 1; m <= opts.period_bound; ++m) {
        const Frame fr = enclosing_frame({a.frame(), b.frame(), f.components().frame, rx.map.components().frame,
                                          ry.map.components().frame},
                                         m, true);
        LinearSystem sys(fld);
        const std::size_t g = sys.add_graded(graded_unknown(a, b, 0, fr));
        const auto [first, last] = check_range({a.frame(), b.frame(), fr, f.components().frame,
                                                rx.map.components().frame, ry.map.components().frame});
        for (int n = first; n <= last; ++n) {
            sys.add_equation({{g, n, b.diff(n), Matrix::identity(a.term(n).dim(), fld)},
                              {g, n - 1, -Matrix::identity(b.term(n - 1).dim(), fld), a.diff(n)}},
                             {}, Matrix(b.term(n - 1).dim(), a.term(n).dim(), fld));
            if (tag == StructureTag::Ctr)
                sys.add_equation({{g, n, ry.map.component(n), Matrix::identity(a.term(n).dim(), fld)}}, {},
                                 f.component(n) * rx.map.component(n));
            else
                sys.add_equation({{g, n, Matrix::identity(b.term(n).dim(), fld), rx.map.component(n)}}, {},
                                 ry.map.component(n) * f.component(n));
        }
        const Solution sol = sys.solve();
        if (sol.particular) return ChainMap(a, b, sys.sequence(g, *sol.particular));
    }
    return std::nullopt;
}

}  // namespace

WeakEquivalenceResult is_weak_equivalence(const ChainMap& f, StructureTag tag, const GeneratorFamily& fam,
                                          const HomotopyOptions& opts) {
    WeakEquivalenceResult r;
    const MapClassification c = classify_map(f, tag, fam, opts);
    if (c.trivial_cofibration.verdict == Verdict::Yes) {
        r.verdict = Verdict::Yes;
        r.route = "trivial cofibration: " + c.trivial_cofibration.reason;
        if (c.trivial_cofibration.orthogonality) r.certificate = c.trivial_cofibration.orthogonality->certificate;
        return r;
    }
    if (c.trivial_fibration.verdict == Verdict::Yes) {
        r.verdict = Verdict::Yes;
        r.route = "trivial fibration: " + c.trivial_fibration.reason;
        if (c.trivial_fibration.orthogonality) r.certificate = c.trivial_fibration.orthogonality->certificate;
        return r;
    }
    auto by_homotopy = [&](const ChainMap& g, const std::string& prefix) {
        const EquivalenceResult e = homotopy_equivalence_certificate(g, opts);
        r.verdict = e.verdict;
        r.route = prefix + "homotopy equivalence: " + e.note;
        r.certificate = e.certificate;
        return r;
    };
    if (bifibrant(f.source(), tag) && bifibrant(f.target(), tag)) return by_homotopy(f, "");

    const Replaced rx = replace(f.source(), tag, fam, opts);
    const Replaced ry = replace(f.target(), tag, fam, opts);
    if (rx.verdict != Verdict::Yes || ry.verdict != Verdict::Yes) {
        r.route = "no certified replacement for this shape";
        return r;
    }
    const auto g = transport(f, rx, ry, tag, opts);
    if (!g) {
        r.route = "replacement map not found within the period bound";
        return r;
    }
    return by_homotopy(*g, "after replacement, ");
}

}  // namespace qs
