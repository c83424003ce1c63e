#pragma once

// JSON documents for algebras, modules, complexes, chain maps and generator
// families. Rejections carry a line/column location.

#include "qs/modelcat.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace qs::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, int column, std::string reason, bool semantic = false);
    std::string file;
    int line;
    int column;
    std::string reason;
    bool semantic;  // well-formed JSON describing an invalid mathematical object
};

/// A parsed JSON text with a map from JSON pointers to source positions.
class Document {
public:
    static Document from_text(std::string text, std::string name);
    static Document from_file(const std::filesystem::path& p);

    const json& root() const { return root_; }
    const std::string& name() const { return name_; }
    std::filesystem::path directory() const { return dir_; }

    [[noreturn]] void fail(const json::json_pointer& at, const std::string& reason, bool semantic = false) const;

private:
    std::string name_;
    std::filesystem::path dir_;
    json root_;
    std::map<std::string, std::pair<int, int>> positions_;
};

enum class Kind { Algebra, Module, Complex, Map, Family, Unknown };
Kind detect_kind(const json& j);
const char* to_string(Kind k);

/// Resolves references (fixture names or paths relative to the referring document).
class Loader {
public:
    AlgebraPtr algebra(const Document& d, const json::json_pointer& at);
    Module module(const Document& d, const json::json_pointer& at, const AlgebraPtr& alg);
    Complex complex(const Document& d, const json::json_pointer& at);
    ChainMap map(const Document& d, const json::json_pointer& at);
    GeneratorFamily family(const Document& d, const json::json_pointer& at, const AlgebraPtr& alg);

    AlgebraPtr algebra_file(const std::filesystem::path& p);
    Module module_file(const std::filesystem::path& p);
    Complex complex_file(const std::filesystem::path& p);
    ChainMap map_file(const std::filesystem::path& p);

private:
    std::map<std::string, AlgebraPtr> algebras_;
    const Document& keep(Document d);
    std::vector<std::unique_ptr<Document>> docs_;
};

json to_json(const Matrix& m);
json to_json(const Algebra& a);
json to_json(const Module& m, bool with_algebra = true);
json to_json(const Complex& c);
json to_json(const ChainMap& f);
json to_json(const Homotopy& h);

/// Indented JSON with numeric vectors and matrices kept on one line.
std::string pretty(const json& j, int indent = 2);

/// Inline complex document without an algebra reference resolves against `alg`.
Complex complex_from_json(const json& j, const AlgebraPtr& alg);

}  // namespace qs::io
