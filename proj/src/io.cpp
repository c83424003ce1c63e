#include "qs/io.hpp"

#include "qs/approx.hpp"
#include "qs/fixtures.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace qs::io {

namespace fs = std::filesystem;
using Ptr = json::json_pointer;

ParseError::ParseError(std::string f, int l, int c, std::string r, bool sem)
    : std::runtime_error(f + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + r),
      file(std::move(f)), line(l), column(c), reason(std::move(r)), semantic(sem) {}

namespace {

// Records the start of every value in already-valid JSON text.
class Indexer {
public:
    Indexer(const std::string& t, std::map<std::string, std::pair<int, int>>& out) : s_(t), out_(out) {}
    void run() { value(""); }

private:
    const std::string& s_;
    std::map<std::string, std::pair<int, int>>& out_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;

    void bump() {
        if (s_[i_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++i_;
    }
    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
    }
    std::string str() {
        std::string r;
        bump();
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') { r += s_[i_]; bump(); }
            r += s_[i_];
            bump();
        }
        bump();
        return r;
    }
    static std::string escape(const std::string& k) {
        std::string r;
        for (char c : k) {
            if (c == '~') r += "~0";
            else if (c == '/') r += "~1";
            else r += c;
        }
        return r;
    }
    void value(const std::string& path) {
        ws();
        if (i_ >= s_.size()) return;
        out_[path] = {line_, col_};
        const char c = s_[i_];
        if (c == '{') {
            bump();
            ws();
            if (s_[i_] == '}') { bump(); return; }
            while (true) {
                ws();
                const std::string k = str();
                ws();
                bump();  // ':'
                value(path + "/" + escape(k));
                ws();
                if (s_[i_] == ',') { bump(); continue; }
                bump();
                return;
            }
        }
        if (c == '[') {
            bump();
            ws();
            if (s_[i_] == ']') { bump(); return; }
            for (int k = 0;; ++k) {
                value(path + "/" + std::to_string(k));
                ws();
                if (s_[i_] == ',') { bump(); continue; }
                bump();
                return;
            }
        }
        if (c == '"') { str(); return; }
        while (i_ < s_.size() && !std::strchr(",]} \t\r\n", s_[i_])) bump();
    }
};

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    return {line, col};
}

}  // namespace

Document Document::from_text(std::string text, std::string name) {
    Document d;
    d.name_ = std::move(name);
    d.dir_ = fs::path(d.name_).parent_path();
    try {
        d.root_ = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        const auto [l, c] = line_col(text, at);
        std::string what = e.what();
        if (auto p = what.find(": ", what.find("parse error")); p != std::string::npos) what = what.substr(p + 2);
        throw ParseError(d.name_, l, c, what);
    }
    Indexer(text, d.positions_).run();
    return d;
}

Document Document::from_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError(p.string(), 0, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str(), p.string());
}

void Document::fail(const Ptr& at, const std::string& reason, bool semantic) const {
    Ptr p = at;
    while (true) {
        if (auto it = positions_.find(p.to_string()); it != positions_.end())
            throw ParseError(name_, it->second.first, it->second.second, reason, semantic);
        if (p.empty()) break;
        p = p.parent_pointer();
    }
    throw ParseError(name_, 1, 1, reason, semantic);
}

Kind detect_kind(const json& j) {
    if (!j.is_object()) return Kind::Unknown;
    if (j.contains("mul")) return Kind::Algebra;
    if (j.contains("action")) return Kind::Module;
    if (j.contains("window")) return Kind::Complex;
    if (j.contains("components")) return Kind::Map;
    if (j.contains("projective_side") || j.contains("injective_side")) return Kind::Family;
    return Kind::Unknown;
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::Algebra: return "algebra";
        case Kind::Module: return "module";
        case Kind::Complex: return "complex";
        case Kind::Map: return "map";
        case Kind::Family: return "family";
        case Kind::Unknown: break;
    }
    return "unknown";
}

namespace {

const json& at(const Document& d, const Ptr& p) {
    if (!d.root().contains(p)) d.fail(p, "missing field '" + p.back() + "'");
    return d.root()[p];
}

long long integer(const Document& d, const Ptr& p) {
    const json& v = at(d, p);
    if (!v.is_number_integer()) d.fail(p, "expected an integer");
    return v.get<long long>();
}

const json& array(const Document& d, const Ptr& p) {
    const json& v = at(d, p);
    if (!v.is_array()) d.fail(p, "expected an array");
    return v;
}

std::size_t index(const Document& d, const Ptr& p, std::size_t bound) {
    const long long v = integer(d, p);
    if (v < 0 || static_cast<std::size_t>(v) >= bound) d.fail(p, "index out of range");
    return static_cast<std::size_t>(v);
}

Matrix matrix(const Document& d, const Ptr& p, std::size_t rows, std::size_t cols, const Field& f) {
    const json& v = array(d, p);
    Matrix m(rows, cols, f);
    if (v.empty() && rows * cols == 0) return m;
    if (v.size() != rows)
        d.fail(p, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                      std::to_string(v.size()) + " rows");
    for (std::size_t i = 0; i < rows; ++i) {
        const Ptr rp = p / i;
        const json& row = array(d, rp);
        if (row.size() != cols)
            d.fail(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, f.reduce(integer(d, rp / j)));
    }
    return m;
}

template <class F>
auto semantic(const Document& d, const Ptr& p, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const MathError& e) {
        d.fail(p, e.what(), true);
    }
}

AlgebraPtr algebra_object(const Document& d, const Ptr& p) {
    const long long pr = integer(d, p / "p");
    if (pr < 2 || !is_prime(pr)) d.fail(p / "p", "p must be a prime", true);
    const Field f(pr);
    const json& basis = array(d, p / "basis");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string()) d.fail(p / "basis" / i, "expected a string");
        labels.push_back(basis[i].get<std::string>());
    }
    const std::size_t n = labels.size();
    if (n == 0) d.fail(p / "basis", "empty basis", true);
    Algebra::StructureConstants mul(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    const Ptr mp = p / "mul";
    if (array(d, mp).size() != n) d.fail(mp, "expected " + std::to_string(n) + " blocks");
    for (std::size_t i = 0; i < n; ++i) {
        if (array(d, mp / i).size() != n) d.fail(mp / i, "expected " + std::to_string(n) + " rows");
        for (std::size_t j = 0; j < n; ++j) {
            if (array(d, mp / i / j).size() != n) d.fail(mp / i / j, "expected " + std::to_string(n) + " entries");
            for (std::size_t k = 0; k < n; ++k) mul[i][j][k] = f.reduce(integer(d, mp / i / j / k));
        }
    }
    std::vector<Scalar> unit;
    if (array(d, p / "unit").size() != n) d.fail(p / "unit", "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < n; ++i) unit.push_back(f.reduce(integer(d, p / "unit" / i)));
    auto indices = [&](const char* key) {
        std::vector<std::size_t> r;
        const auto& a = array(d, p / key);
        for (std::size_t i = 0; i < a.size(); ++i) r.push_back(index(d, p / key / i, n));
        return r;
    };
    auto idem = indices("idempotents");
    auto rad = indices("radical");
    std::string name = "algebra";
    if (d.root()[p].contains("name") && d.root()[p]["name"].is_string()) name = d.root()[p]["name"].get<std::string>();
    else if (p.empty() && !d.name().empty()) name = fs::path(d.name()).stem().string();
    return semantic(d, p, [&] {
        return Algebra::create(name, f, labels, mul, unit, idem, rad);
    });
}

Module module_object(const Document& d, const Ptr& p, const AlgebraPtr& alg) {
    const long long dim = integer(d, p / "dim");
    if (dim < 0) d.fail(p / "dim", "negative dimension");
    const auto n = static_cast<std::size_t>(dim);
    const json& act = array(d, p / "action");
    if (act.size() != alg->dim()) d.fail(p / "action", "expected one matrix per basis element");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < act.size(); ++i) action.push_back(matrix(d, p / "action" / i, n, n, alg->field()));
    return semantic(d, p, [&] { return Module(alg, n, action); });
}

fs::path resolve(const Document& d, const std::string& ref) {
    fs::path r(ref);
    if (r.is_relative() && !d.directory().empty() && !fs::exists(r)) r = d.directory() / r;
    return r;
}

}  // namespace

const Document& Loader::keep(Document d) {
    docs_.push_back(std::make_unique<Document>(std::move(d)));
    return *docs_.back();
}

AlgebraPtr Loader::algebra(const Document& d, const Ptr& p) {
    const json& v = at(d, p);
    if (v.is_object()) return algebra_object(d, p);
    if (!v.is_string()) d.fail(p, "expected an algebra name, path or object");
    const std::string ref = v.get<std::string>();
    if (auto a = fixtures::algebra_by_name(ref)) return *a;
    const fs::path file = resolve(d, ref);
    if (!fs::exists(file)) d.fail(p, "unknown algebra '" + ref + "'");
    return algebra_file(file);
}

AlgebraPtr Loader::algebra_file(const fs::path& file) {
    const std::string key = fs::weakly_canonical(file).string();
    if (auto it = algebras_.find(key); it != algebras_.end()) return it->second;
    const Document& d = keep(Document::from_file(file));
    const AlgebraPtr a = algebra_object(d, Ptr());
    algebras_[key] = a;
    return a;
}

Module Loader::module(const Document& d, const Ptr& p, const AlgebraPtr& alg) {
    const json& v = at(d, p);
    Module m;
    if (v.is_object()) {
        const AlgebraPtr a = v.contains("algebra") ? algebra(d, p / "algebra") : alg;
        if (!a) d.fail(p, "module without an algebra");
        m = module_object(d, p, a);
    } else if (v.is_string()) {
        const std::string ref = v.get<std::string>();
        if (ref == "0") {
            if (!alg) d.fail(p, "zero module without an algebra");
            return Module::zero(alg);
        }
        if (auto f = fixtures::module_by_name(ref)) m = *f;
        else {
            const fs::path file = resolve(d, ref);
            if (!fs::exists(file)) d.fail(p, "unknown module '" + ref + "'");
            m = module_file(file);
        }
    } else {
        d.fail(p, "expected a module name, path or object");
    }
    if (alg && !same_algebra(m.algebra(), alg)) d.fail(p, "module is over a different algebra", true);
    return m;
}

Module Loader::module_file(const fs::path& file) {
    const Document& d = keep(Document::from_file(file));
    if (!d.root().is_object()) d.fail(Ptr(), "expected a module object");
    return module_object(d, Ptr(), algebra(d, Ptr("/algebra")));
}

namespace {

struct Block {
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
};

}  // namespace

Complex Loader::complex(const Document& d, const Ptr& p) {
    const json& v = at(d, p);
    if (v.is_string()) {
        const std::string ref = v.get<std::string>();
        if (auto c = fixtures::complex_by_name(ref)) return *c;
        const fs::path file = resolve(d, ref);
        if (!fs::exists(file)) d.fail(p, "unknown complex '" + ref + "'");
        return complex_file(file);
    }
    if (!v.is_object()) d.fail(p, "expected a complex name, path or object");

    AlgebraPtr alg;
    if (v.contains("algebra")) alg = algebra(d, p / "algebra");
    const Ptr w = p / "window";
    const long long lo = integer(d, w / "lo"), hi = integer(d, w / "hi");
    if (hi < lo) d.fail(w / "hi", "window must satisfy lo <= hi");
    const json& wt = array(d, w / "terms");
    if (wt.size() != static_cast<std::size_t>(hi - lo + 1)) d.fail(w / "terms", "expected hi - lo + 1 terms");

    std::vector<Module> window;
    for (std::size_t i = 0; i < wt.size(); ++i) {
        if (!alg && !(wt[i].is_string() && wt[i].get<std::string>() == "0")) {
            window.push_back(module(d, w / "terms" / i, nullptr));
            alg = window.back().algebra();
        } else {
            window.push_back(module(d, w / "terms" / i, alg));
        }
    }
    if (!alg) d.fail(p, "cannot determine the algebra; add an \"algebra\" field");
    for (auto& m : window)
        if (!m.algebra()) m = Module::zero(alg);
    const Field fld = alg->field();

    const json& wd = array(d, w / "diffs");
    if (wd.size() != window.size() - 1) d.fail(w / "diffs", "expected hi - lo differentials");
    std::vector<Matrix> wdiffs;
    for (std::size_t i = 0; i + 1 < window.size(); ++i)
        wdiffs.push_back(matrix(d, w / "diffs" / i, window[i].dim(), window[i + 1].dim(), fld));

    auto tail = [&](const char* key) -> std::optional<Block> {
        if (!v.contains(key) || v[key].is_null()) return std::nullopt;
        const Ptr tp = p / key;
        const long long q = integer(d, tp / "period");
        if (q <= 0) d.fail(tp / "period", "period must be positive");
        if (array(d, tp / "terms").size() != static_cast<std::size_t>(q)) d.fail(tp / "terms", "expected period terms");
        if (array(d, tp / "diffs").size() != static_cast<std::size_t>(q)) d.fail(tp / "diffs", "expected period diffs");
        Block b;
        for (long long i = 0; i < q; ++i) b.terms.push_back(module(d, tp / "terms" / i, alg));
        return b;
    };
    const auto neg = tail("neg_tail");
    const auto pos = tail("pos_tail");

    // Core: [lo - q-, hi + q+ + 1]; the extra right term closes the right block.
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    const int qn = neg ? static_cast<int>(neg->terms.size()) : 0;
    const int qp = pos ? static_cast<int>(pos->terms.size()) : 0;
    if (neg) {
        const Ptr tp = p / "neg_tail";
        for (int i = 0; i < qn; ++i) {
            terms.push_back(neg->terms[i]);
            const Module& below = neg->terms[(i + qn - 1) % qn];
            diffs.push_back(matrix(d, tp / "diffs" / i, below.dim(), neg->terms[i].dim(), fld));
        }
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
        terms.push_back(window[i]);
        if (i > 0) diffs.push_back(wdiffs[i - 1]);
        else if (neg) diffs.push_back(matrix(d, p / "neg_tail" / "seam", neg->terms.back().dim(), window[0].dim(), fld));
        else diffs.push_back(Matrix(0, window[0].dim(), fld));
    }
    if (pos) {
        const Ptr tp = p / "pos_tail";
        terms.push_back(pos->terms[0]);
        diffs.push_back(matrix(d, tp / "seam", window.back().dim(), pos->terms[0].dim(), fld));
        for (int i = 0; i < qp; ++i) {
            const Module& src = pos->terms[(i + 1) % qp];
            terms.push_back(src);
            diffs.push_back(matrix(d, tp / "diffs" / i, pos->terms[i].dim(), src.dim(), fld));
        }
    }
    const Frame fr{static_cast<int>(lo) - qn, static_cast<int>(hi) + (pos ? qp + 1 : 0), qn, qp};
    const Complex full = semantic(d, w, [&] { return Complex(alg, fr, terms, diffs); });

    // keep the written window when it already is a compact presentation
    std::vector<Matrix> core_diffs{diffs[static_cast<std::size_t>(qn)]};
    core_diffs.insert(core_diffs.end(), wdiffs.begin(), wdiffs.end());
    try {
        const Complex direct(alg, Frame{static_cast<int>(lo), static_cast<int>(hi), qn, qp}, window, core_diffs);
        const auto [first, last] = check_range({fr, direct.frame()});
        bool same = direct == direct.compacted();
        for (int n = first; n <= last && same; ++n)
            same = direct.term(n) == full.term(n) && direct.diff(n) == full.diff(n);
        if (same) return direct;
    } catch (const MathError&) {
    }
    return full.compacted();
}

Complex Loader::complex_file(const fs::path& file) {
    const Document& d = keep(Document::from_file(file));
    return complex(d, Ptr());
}

ChainMap Loader::map(const Document& d, const Ptr& p) {
    const json& v = at(d, p);
    if (!v.is_object()) d.fail(p, "expected a map object");
    const Complex x = complex(d, p / "source");
    const Complex y = complex(d, p / "target");
    if (!same_algebra(x.algebra(), y.algebra())) d.fail(p, "source and target over different algebras", true);
    const Field fld = x.field();
    const Ptr cp = p / "components";
    const json& comps = at(d, cp);
    if (!comps.is_object()) d.fail(cp, "expected an object keyed by degree");
    std::map<int, Ptr> given;
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument(it.key());
            given[n] = cp / it.key();
        } catch (const std::exception&) {
            d.fail(cp / it.key(), "degree keys must be integers");
        }
    }
    int lo = given.empty() ? 0 : given.begin()->first;
    int hi = given.empty() ? 0 : given.rbegin()->first;

    int qn = 0, qp = 0;
    const json* tails = nullptr;
    if (v.contains("tail_components") && !v["tail_components"].is_null()) tails = &v["tail_components"];
    auto period = [&](const char* key) {
        if (!tails || !tails->contains(key)) return 0;
        const Ptr tp = p / "tail_components" / key;
        const long long q = integer(d, tp / "period");
        if (q <= 0) d.fail(tp / "period", "period must be positive");
        if (array(d, tp / "components").size() != static_cast<std::size_t>(q))
            d.fail(tp / "components", "expected period components");
        return static_cast<int>(q);
    };
    qn = period("neg");
    qp = period("pos");
    MatrixSequence seq{Frame{lo - qn, hi + qp, qn, qp}, {}};
    for (int n = lo - qn; n <= hi + qp; ++n) {
        const std::size_t r = y.term(n).dim(), c = x.term(n).dim();
        if (n < lo)
            seq.core.push_back(matrix(d, p / "tail_components" / "neg" / "components" / (n - lo + qn), r, c, fld));
        else if (n > hi)
            seq.core.push_back(matrix(d, p / "tail_components" / "pos" / "components" / (n - hi - 1), r, c, fld));
        else if (auto it = given.find(n); it != given.end())
            seq.core.push_back(matrix(d, it->second, r, c, fld));
        else
            seq.core.push_back(Matrix(r, c, fld));
    }
    return semantic(d, p, [&] { return ChainMap(x, y, std::move(seq)); });
}

ChainMap Loader::map_file(const fs::path& file) {
    const Document& d = keep(Document::from_file(file));
    return map(d, Ptr());
}

GeneratorFamily Loader::family(const Document& d, const Ptr& p, const AlgebraPtr& alg) {
    const json& v = at(d, p);
    if (v.is_string() && v.get<std::string>() == "default") return default_family(alg);
    if (v.is_string()) {
        const fs::path file = resolve(d, v.get<std::string>());
        if (!fs::exists(file)) d.fail(p, "unknown family '" + v.get<std::string>() + "'");
        const Document& fd = keep(Document::from_file(file));
        return family(fd, Ptr(), alg);
    }
    if (!v.is_object()) d.fail(p, "expected a family object");
    GeneratorFamily fam;
    fam.name = v.value("name", d.name().empty() ? std::string("family") : fs::path(d.name()).stem().string());
    if (v.contains("shift_range")) {
        const long long r = integer(d, p / "shift_range");
        if (r < 0) d.fail(p / "shift_range", "shift range must be non-negative");
        fam.shift_range = static_cast<int>(r);
    }
    auto side = [&](const char* key, std::vector<Complex>& out) {
        if (!v.contains(key)) return;
        const json& a = array(d, p / key);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.push_back(complex(d, p / key / i));
            if (alg && !same_algebra(out.back().algebra(), alg))
                d.fail(p / key / i, "family member over a different algebra", true);
        }
    };
    side("projective_side", fam.projective_side);
    side("injective_side", fam.injective_side);
    return fam;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Algebra& a) {
    json j;
    j["name"] = a.name();
    j["p"] = a.field().p;
    j["basis"] = a.labels();
    j["mul"] = a.mul();
    j["unit"] = a.unit();
    j["idempotents"] = a.idempotents();
    j["radical"] = a.radical();
    return j;
}

namespace {

json algebra_ref(const AlgebraPtr& a) {
    if (auto f = fixtures::algebra_by_name(a->name()); f && same_algebra(*f, a)) return a->name();
    return to_json(*a);
}

}  // namespace

json to_json(const Module& m, bool with_algebra) {
    json j;
    if (with_algebra) j["algebra"] = algebra_ref(m.algebra());
    j["dim"] = m.dim();
    json act = json::array();
    for (const auto& a : m.actions()) act.push_back(to_json(a));
    j["action"] = std::move(act);
    return j;
}

json to_json(const Complex& c0) {
    const Complex c = c0.compacted();
    const Frame& f = c.frame();
    json j;
    j["algebra"] = algebra_ref(c.algebra());
    json terms = json::array(), diffs = json::array();
    for (int n = f.lo; n <= f.hi; ++n) {
        terms.push_back(to_json(c.term(n), false));
        if (n > f.lo) diffs.push_back(to_json(c.diff(n)));
    }
    j["window"] = {{"lo", f.lo}, {"hi", f.hi}, {"terms", terms}, {"diffs", diffs}};
    if (f.left_period > 0) {
        json t = json::array(), d = json::array();
        for (int n = f.lo - f.left_period; n < f.lo; ++n) {
            t.push_back(to_json(c.term(n), false));
            d.push_back(to_json(c.diff(n)));
        }
        j["neg_tail"] = {{"period", f.left_period}, {"terms", t}, {"diffs", d}, {"seam", to_json(c.diff(f.lo))}};
    }
    if (f.right_period > 0) {
        json t = json::array(), d = json::array();
        for (int n = f.hi + 1; n <= f.hi + f.right_period; ++n) {
            t.push_back(to_json(c.term(n), false));
            d.push_back(to_json(c.diff(n + 1)));
        }
        j["pos_tail"] = {{"period", f.right_period}, {"terms", t}, {"diffs", d}, {"seam", to_json(c.diff(f.hi + 1))}};
    }
    return j;
}

namespace {

json sequence_json(const MatrixSequence& s, const std::function<Matrix(int)>& at, json& out) {
    const Frame& f = s.frame;
    json comps = json::object();
    for (int n = f.lo; n <= f.hi; ++n) comps[std::to_string(n)] = to_json(at(n));
    json tails = json::object();
    if (f.left_period > 0) {
        json c = json::array();
        for (int n = f.lo - f.left_period; n < f.lo; ++n) c.push_back(to_json(at(n)));
        tails["neg"] = {{"period", f.left_period}, {"components", c}};
    }
    if (f.right_period > 0) {
        json c = json::array();
        for (int n = f.hi + 1; n <= f.hi + f.right_period; ++n) c.push_back(to_json(at(n)));
        tails["pos"] = {{"period", f.right_period}, {"components", c}};
    }
    out["components"] = comps;
    if (!tails.empty()) out["tail_components"] = tails;
    return out;
}

}  // namespace

json to_json(const ChainMap& f) {
    json j;
    j["source"] = to_json(f.source());
    j["target"] = to_json(f.target());
    return sequence_json(f.components(), [&](int n) { return f.component(n); }, j);
}

json to_json(const Homotopy& h) {
    json j;
    j["source"] = to_json(h.source);
    j["target"] = to_json(h.target);
    return sequence_json(h.maps, [&](int n) { return h.at(n); }, j);
}

namespace {

bool numeric(const json& j, int depth) {
    if (j.is_number()) return true;
    if (!j.is_array() || depth == 0) return false;
    for (const auto& e : j)
        if (!numeric(e, depth - 1)) return false;
    return true;
}

void pretty(const json& j, int indent, int level, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * level), ' ');
    if (numeric(j, 2) || j.empty() || !(j.is_array() || j.is_object())) {
        out += j.dump();
        return;
    }
    out += j.is_array() ? "[\n" : "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (j.is_object()) out += json(it.key()).dump() + ": ";
        pretty(*it, indent, level + 1, out);
    }
    out += "\n" + close + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string pretty(const json& j, int indent) {
    std::string out;
    pretty(j, indent, 0, out);
    return out;
}

Complex complex_from_json(const json& j, const AlgebraPtr& alg) {
    json copy = j;
    if (alg && !copy.contains("algebra")) copy["algebra"] = to_json(*alg);
    Loader l;
    const Document d = Document::from_text(copy.dump(), "");
    return l.complex(d, Ptr());
}

}  // namespace qs::io
