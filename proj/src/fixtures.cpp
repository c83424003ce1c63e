#include "qs/fixtures.hpp"

#include <cstdlib>

namespace qs::fixtures {

using SC = Algebra::StructureConstants;

AlgebraPtr F2() {
    static const AlgebraPtr a = Algebra::create("F2", Field(2), {"1"}, SC{{{1}}}, {1}, {0}, {});
    return a;
}

AlgebraPtr D2() {
    // 1*1 = 1, 1*x = x, x*1 = x, x*x = 0
    static const AlgebraPtr a =
        Algebra::create("D2", Field(2), {"1", "x"}, SC{{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0}, {0}, {1});
    return a;
}

AlgebraPtr T2() {
    SC m(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, 0)));
    m[0][0][0] = 1;  // e11 e11
    m[0][1][1] = 1;  // e11 e12
    m[1][2][1] = 1;  // e12 e22
    m[2][2][2] = 1;  // e22 e22
    static const AlgebraPtr a = Algebra::create("T2", Field(2), {"e11", "e12", "e22"}, m, {1, 0, 1}, {0, 2}, {1});
    return a;
}

Module k() { return simple_module(D2(), 0); }
Module A() { return regular_module(D2()); }
Module S1() { return simple_module(T2(), 0); }
Module S2() { return simple_module(T2(), 1); }

Complex t_per() {
    const Matrix x = A().action(1);
    return Complex(D2(), Frame{0, 1, 1, 1}, {A(), A()}, {x, x});
}

Complex contractible() { return disk(A(), 1); }

ChainMap x_times_identity() {
    const Complex t = t_per();
    const Matrix x = A().action(1);
    return ChainMap(t, t, MatrixSequence{t.frame(), {x, x}});
}

std::optional<AlgebraPtr> algebra_by_name(const std::string& name) {
    if (name == "F2") return F2();
    if (name == "D2") return D2();
    if (name == "T2") return T2();
    return std::nullopt;
}

std::optional<Module> module_by_name(const std::string& name) {
    if (name == "k") return k();
    if (name == "A") return A();
    if (name == "S1") return S1();
    if (name == "S2") return S2();
    if (name == "A_T2") return regular_module(T2());
    if (name == "A_F2") return regular_module(F2());
    return std::nullopt;
}

std::optional<Complex> complex_by_name(const std::string& name) {
    if (name == "T_per") return t_per();
    if (name == "contractible") return contractible();
    if (name.rfind("T_per[", 0) == 0 && name.back() == ']') {
        const std::string num = name.substr(6, name.size() - 7);
        char* end = nullptr;
        const long s = std::strtol(num.c_str(), &end, 10);
        if (num.empty() || *end != '\0') return std::nullopt;
        return reindex(t_per(), static_cast<int>(s));
    }
    return std::nullopt;
}

std::vector<std::string> algebra_names() { return {"F2", "D2", "T2"}; }
std::vector<std::string> module_names() { return {"k", "A", "S1", "S2", "A_T2", "A_F2"}; }
std::vector<std::string> complex_names() { return {"T_per", "T_per[k]", "contractible"}; }

}  // namespace qs::fixtures
