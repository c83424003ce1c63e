#include "qs/cli.hpp"

#include "qs/approx.hpp"
#include "qs/equiv.hpp"
#include "qs/fixtures.hpp"
#include "qs/functors.hpp"
#include "qs/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace qs::cli {

using nlohmann::json;
namespace fs = std::filesystem;

Verdict Report::overall() const {
    bool unknown = false;
    for (const auto& e : entries) {
        if (e.verdict == Verdict::No) return Verdict::No;
        if (e.verdict == Verdict::Unknown && e.required) unknown = true;
    }
    return unknown ? Verdict::Unknown : Verdict::Yes;
}

int Report::exit_code() const {
    switch (overall()) {
        case Verdict::Yes: return Ok;
        case Verdict::No: return No;
        case Verdict::Unknown: return UnknownRequired;
    }
    return No;
}

json Report::to_json(bool with_timing) const {
    json j;
    j["command"] = command;
    j["seed"] = seed;
    json es = json::array();
    for (const auto& e : entries) {
        json x = {{"name", e.name}, {"verdict", qs::to_string(e.verdict)}, {"required", e.required},
                  {"detail", e.detail}, {"digest", e.digest}};
        if (with_timing) x["ms"] = e.ms;
        es.push_back(std::move(x));
    }
    j["entries"] = std::move(es);
    j["overall"] = qs::to_string(overall());
    if (!output.is_null()) j["output"] = output;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream s;
    s << "command: " << command << "\n";
    s << "seed: " << seed << "\n";
    for (const auto& e : entries) {
        s << std::left << std::setw(28) << e.name << " " << std::setw(7) << qs::to_string(e.verdict);
        if (!e.required) s << " (info)";
        if (!e.digest.empty()) s << " [" << e.digest << "]";
        s << " " << std::fixed << std::setprecision(1) << e.ms << " ms";
        if (!e.detail.empty()) s << "  " << e.detail;
        s << "\n";
    }
    if (!output.is_null()) s << "output:\n" << io::pretty(output) << "\n";
    s << "overall: " << qs::to_string(overall()) << "\n";
    return s.str();
}

std::string digest(const Certificate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["checked"] = c.checked;
    j["maps"] = json::array();
    for (const auto& m : c.maps) j["maps"].push_back(io::to_json(m));
    j["homotopies"] = json::array();
    for (const auto& h : c.homotopies) j["homotopies"].push_back(io::to_json(h));
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

template <class F>
ReportEntry timed(std::string name, F&& fn) {
    const auto t0 = Clock::now();
    ReportEntry e = fn();
    e.name = std::move(name);
    e.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return e;
}

ReportEntry entry(Verdict v, std::string detail, bool required = true) {
    ReportEntry e;
    e.verdict = v;
    e.detail = std::move(detail);
    e.required = required;
    return e;
}

ReportEntry entry(Verdict v, std::string detail, const std::optional<Certificate>& c, bool required = true) {
    ReportEntry e = entry(v, std::move(detail), required);
    if (c) e.digest = digest(*c);
    return e;
}

Verdict of(Certification c) {
    return c == Certification::Certified ? Verdict::Yes : c == Certification::Refuted ? Verdict::No : Verdict::Unknown;
}

std::string flags_text(const MembershipFlags& m) {
    std::string s;
    auto add = [&](bool b, const char* n) { s += std::string(s.empty() ? "" : " ") + (b ? "" : "!") + n; };
    add(m.in_exP, "exP~");
    add(m.in_exI, "exI~");
    add(m.in_tildeP, "P~");
    add(m.in_tildeI, "I~");
    return s;
}

std::string module_text(const Module& m) {
    return "module of dim " + std::to_string(m.dim()) + " over " + m.algebra()->name();
}

// Inputs: fixture names, or files.
Complex load_complex(io::Loader& l, const std::string& ref) {
    if (auto c = fixtures::complex_by_name(ref)) return *c;
    if (auto m = fixtures::module_by_name(ref)) return stalk(*m);
    const io::Document d = io::Document::from_file(ref);
    if (io::detect_kind(d.root()) == io::Kind::Module) return stalk(l.module_file(ref));
    return l.complex(d, io::json::json_pointer());
}

GeneratorFamily load_family(io::Loader& l, const std::string& ref, const AlgebraPtr& alg) {
    if (ref.empty() || ref == "default") return default_family(alg);
    const io::Document d = io::Document::from_file(ref);
    return l.family(d, io::json::json_pointer(), alg);
}

void cmd_validate(Report& r, io::Loader& l, const std::string& file) {
    const io::Document d = io::Document::from_file(file);
    const io::Kind kind = io::detect_kind(d.root());
    r.entries.push_back(timed("well_formed", [&] {
        try {
            switch (kind) {
                case io::Kind::Algebra: {
                    const AlgebraPtr a = l.algebra_file(file);
                    r.output = io::to_json(*a);
                    return entry(Verdict::Yes, "algebra of dim " + std::to_string(a->dim()) + " over F_" +
                                                   std::to_string(a->field().p));
                }
                case io::Kind::Module: {
                    const Module m = l.module_file(file);
                    r.output = io::to_json(m);
                    return entry(Verdict::Yes, module_text(m));
                }
                case io::Kind::Complex: {
                    const Complex c = l.complex(d, io::json::json_pointer());
                    r.output = io::to_json(c);
                    return entry(Verdict::Yes, "complex, " + flags_text(membership_flags(c)));
                }
                case io::Kind::Map: {
                    const ChainMap f = l.map(d, io::json::json_pointer());
                    r.output = io::to_json(f);
                    return entry(Verdict::Yes, "chain map");
                }
                case io::Kind::Family: {
                    const GeneratorFamily fam = l.family(d, io::json::json_pointer(), nullptr);
                    return entry(Verdict::Yes, "family with " + std::to_string(fam.projective_side.size()) + "+" +
                                                   std::to_string(fam.injective_side.size()) + " members");
                }
                case io::Kind::Unknown: break;
            }
            d.fail(io::json::json_pointer(), "cannot tell what kind of document this is");
        } catch (const io::ParseError& e) {
            if (!e.semantic) throw;
            return entry(Verdict::No, std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.reason);
        }
    }));
    if (kind == io::Kind::Algebra && r.entries.back().verdict == Verdict::Yes) {
        const AlgebraPtr a = l.algebra_file(file);
        r.entries.push_back(timed("gorenstein", [&] {
            const GorensteinCheck g = check_gorenstein(a);
            std::string detail = g.note;
            if (g.dimension) detail = "dimension " + std::to_string(*g.dimension);
            return entry(g.verdict, detail, false);
        }));
    }
}

void cmd_functor(Report& r, io::Loader& l, const std::string& which, const std::string& file) {
    const Complex x = load_complex(l, file);
    r.entries.push_back(timed(which, [&] {
        if (which == "F" || which == "G") {
            const Complex y = which == "F" ? apply_F(x) : apply_G(x);
            r.output = io::to_json(y);
            return entry(Verdict::Yes, "stalk " + module_text(y.term(0)));
        }
        const Module m = which == "omega" ? omega(x).module : theta(x).module;
        r.output = io::to_json(m);
        return entry(Verdict::Yes, module_text(m));
    }));
}

void cmd_classify(Report& r, io::Loader& l, const std::string& file, const std::string& structure,
                  const std::string& family, const HomotopyOptions& opts) {
    const io::Document d = io::Document::from_file(file);
    const ChainMap f = l.map(d, io::json::json_pointer());
    const GeneratorFamily fam = load_family(l, family, f.source().algebra());
    const StructureTag tag = structure == "ctr" ? StructureTag::Ctr : StructureTag::Co;
    MapClassification c;
    const auto t0 = Clock::now();
    c = classify_map(f, tag, fam, opts);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    auto add = [&](const char* name, const Flag& flag) {
        ReportEntry e = entry(flag.verdict, flag.reason,
                              flag.orthogonality ? flag.orthogonality->certificate : std::nullopt, false);
        e.name = name;
        e.ms = ms;
        r.entries.push_back(e);
    };
    add("cofibration", c.cofibration);
    add("trivial_cofibration", c.trivial_cofibration);
    add("fibration", c.fibration);
    add("trivial_fibration", c.trivial_fibration);
    r.entries.push_back(timed("weak_equivalence", [&] {
        const WeakEquivalenceResult w = is_weak_equivalence(f, tag, fam, opts);
        return entry(w.verdict, w.route, w.certificate, false);
    }));
}

void add_replacement(Report& r, const StalkReplacement& s, bool with_output) {
    r.entries.push_back(
        entry(s.verdict, std::string(to_string(s.kind)) + ", " + flags_text(membership_flags(s.complex))));
    r.entries.back().name = std::string("replacement_") + to_string(s.kind);
    auto piece = [&](const char* name, const OrthogonalResult& o) {
        ReportEntry e = entry(of(o.verdict), std::string(to_string(o.verdict)) + " " + o.note, o.certificate, false);
        e.name = name;
        r.entries.push_back(e);
    };
    piece("defect_upper_piece", s.upper);
    piece("defect_lower_piece", s.lower);
    if (with_output) r.output = {{"complex", io::to_json(s.complex)}, {"map", io::to_json(s.map)}};
}

void cmd_replace(Report& r, io::Loader& l, const std::string& file, const std::string& which,
                 const std::string& family, const HomotopyOptions& opts) {
    const Complex s = load_complex(l, file);
    const GeneratorFamily fam = load_family(l, family, s.algebra());
    const auto t0 = Clock::now();
    const StalkReplacement rep = stalk_replacement(
        s, which == "cofibrant-ctr" ? ReplacementKind::CofibrantCtr : ReplacementKind::FibrantCo, fam, opts);
    add_replacement(r, rep, true);
    r.entries.front().ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void add_round_trip(Report& r, const Complex& x, const GeneratorFamily& fam, const HomotopyOptions& opts) {
    const MembershipFlags m = membership_flags(x);
    r.entries.push_back(timed("membership", [&] {
        return entry(m.in_exP || m.in_exI ? Verdict::Yes : Verdict::No, flags_text(m));
    }));
    if (!m.in_exP && !m.in_exI) return;
    const auto t0 = Clock::now();
    const RoundTripReport rt = m.in_exP ? verify_round_trip(x, fam, opts) : verify_round_trip_injective(x, fam, opts);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    auto rep = [&](const PipelineResult& p) {
        ReportEntry e = entry(p.replacement.verdict, flags_text(membership_flags(p.output())));
        e.name = std::string("replacement_") + to_string(p.replacement.kind);
        r.entries.push_back(e);
    };
    rep(rt.first);
    rep(rt.second);
    ReportEntry eq = entry(rt.equivalence.verdict, rt.equivalence.note, rt.equivalence.certificate);
    eq.name = "comparison_equivalence";
    r.entries.push_back(eq);
    if (rt.composite) {
        ReportEntry c = entry(rt.composite->verdict, rt.composite->route, rt.composite->certificate, false);
        c.name = "composite_weak_equivalence";
        r.entries.push_back(c);
    }
    std::string notes;
    for (const auto& n : rt.notes) notes += (notes.empty() ? "" : "; ") + n;
    ReportEntry e = entry(rt.verdict, notes);
    e.name = "verify_round_trip";
    e.ms = ms;
    r.entries.push_back(e);
    r.output = {{"side", rt.side == RoundTripSide::Projective ? "projective" : "injective"},
                {"first", io::to_json(rt.first.output())},
                {"second", io::to_json(rt.second.output())}};
}

void cmd_verify(Report& r, io::Loader& l, const std::string& file, const std::string& family,
                const HomotopyOptions& opts) {
    const Complex x = load_complex(l, file);
    add_round_trip(r, x, load_family(l, family, x.algebra()), opts);
}

std::vector<std::string> demo_names() {
    return {"D2-Tper", "D2-Tper[k]", "D2-contractible", "D2-k", "T2-S1", "T2-A"};
}

void cmd_demo(Report& r, const std::string& name, const HomotopyOptions& opts) {
    Complex x;
    if (name == "D2-Tper") x = fixtures::t_per();
    else if (name.rfind("D2-Tper[", 0) == 0 && name.back() == ']') {
        auto c = fixtures::complex_by_name("T_per" + name.substr(7));
        if (!c) throw UsageError("bad shift in demo name '" + name + "'");
        x = *c;
    } else if (name == "D2-contractible") x = fixtures::contractible();
    else if (name == "D2-k") {
        const GeneratorFamily fam = default_family(fixtures::D2());
        add_replacement(r, stalk_replacement(stalk(fixtures::k()), ReplacementKind::CofibrantCtr, fam, opts), false);
        add_replacement(r, stalk_replacement(stalk(fixtures::k()), ReplacementKind::FibrantCo, fam, opts), false);
        return;
    } else if (name == "T2-S1") x = complete_resolution(fixtures::S1()).complex;
    else if (name == "T2-A") x = complete_resolution(*fixtures::module_by_name("A_T2")).complex;
    else {
        std::string known;
        for (const auto& n : demo_names()) known += " " + n;
        throw UsageError("unknown demo '" + name + "'; known:" + known);
    }
    const GeneratorFamily fam = default_family(x.algebra());
    add_round_trip(r, x, fam, opts);

    // seeded spot check: a random mono quasi-isomorphism out of X stays injective on Omega
    std::mt19937_64 rng(r.seed);
    r.entries.push_back(timed("random_mono_quasi_iso", [&] {
        const ChainMap f = random_mono_quasi_iso(x, rng);
        const Matrix om = omega(f).matrix;
        const bool ok = is_quasi_isomorphism(f) && f.is_degreewise_mono() && rank(om) == om.cols();
        return entry(ok ? Verdict::Yes : Verdict::No, "omega(f) rank " + std::to_string(rank(om)) + " of " +
                                                          std::to_string(om.cols()));
    }));
}

std::string join(const std::vector<std::string>& args) {
    std::string s = "qs";
    for (const auto& a : args) s += " " + a;
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quillen-equivalence verification harness for Gorenstein fixtures", "qs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::uint64_t seed = 1;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized checks");

    std::string file, which, structure, family;
    auto* validate = app.add_subcommand("validate", "check that an input document is well formed");
    validate->add_option("file", file)->required();
    auto* functor = app.add_subcommand("functor", "apply F, G, omega or theta to a complex");
    functor->add_option("which", which)->required()->check(CLI::IsMember({"F", "G", "omega", "theta"}));
    functor->add_option("file", file)->required();
    auto* classify = app.add_subcommand("classify", "classify a chain map in a model structure");
    classify->add_option("file", file)->required();
    classify->add_option("--structure", structure)->required()->check(CLI::IsMember({"ctr", "co"}));
    classify->add_option("--family", family, "generator family file, or 'default'");
    auto* replace = app.add_subcommand("replace", "cofibrant or fibrant replacement of a stalk complex");
    replace->add_option("file", file)->required();
    replace->add_option("--which", which)->required()->check(CLI::IsMember({"cofibrant-ctr", "fibrant-co"}));
    replace->add_option("--family", family, "generator family file, or 'default'");
    auto* verify = app.add_subcommand("verify-equivalence", "round trip through F' and G'");
    verify->add_option("file", file)->required();
    verify->add_option("--family", family, "generator family file, or 'default'");
    auto* demo = app.add_subcommand("demo", "run the pipeline on a built-in fixture");
    std::string demo_name;
    demo->add_option("fixture", demo_name)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "qs: " << e.what() << "\n";
        return Usage;
    }

    HomotopyOptions opts;
    if (const char* env = std::getenv("GH_HOMOTOPY_PERIOD_BOUND")) {
        try {
            std::size_t used = 0;
            const int m = std::stoi(env, &used);
            if (used != std::string(env).size() || m < 1) throw std::invalid_argument(env);
            opts.period_bound = m;
        } catch (const std::exception&) {
            err << "qs: GH_HOMOTOPY_PERIOD_BOUND must be a positive integer\n";
            return Usage;
        }
    }

    Report r;
    r.command = join(args);
    r.seed = seed;
    io::Loader loader;
    try {
        if (*validate) cmd_validate(r, loader, file);
        else if (*functor) cmd_functor(r, loader, which, file);
        else if (*classify) cmd_classify(r, loader, file, structure, family, opts);
        else if (*replace) cmd_replace(r, loader, file, which, family, opts);
        else if (*verify) cmd_verify(r, loader, file, family, opts);
        else if (*demo) cmd_demo(r, demo_name, opts);
    } catch (const io::ParseError& e) {
        err << e.what() << "\n";
        return DataError;
    } catch (const UsageError& e) {
        err << "qs: " << e.what() << "\n";
        return Usage;
    } catch (const PeriodicityError& e) {
        r.entries.push_back(entry(Verdict::Unknown, e.what()));
        r.entries.back().name = "periodicity";
    } catch (const MathError& e) {
        r.entries.push_back(entry(Verdict::No, e.what()));
        r.entries.back().name = "error";
    }
    out << (format == "json" ? io::pretty(r.to_json()) + "\n" : r.to_text());
    return r.exit_code();
}

}  // namespace qs::cli
