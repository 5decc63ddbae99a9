#pragma once

// File formats, bundled fixtures, and the job runner behind the CLI.
// Reports are ordered JSON stamped with kSchema; numbers that have an exact
// value carry both {"exact": "p/q", "float": x}.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equispectra/error.hpp"
#include "equispectra/index_assembly.hpp"
#include "equispectra/rep_theory.hpp"

namespace equispectra::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "equispectra/1";

enum class Mode { exact, float_ };

/// Matrix entry: number, "p/q", {"re", "im"}, {"cyclo": N, "c": [...]},
/// {"cospi": "a/b"} = cos(pi a/b), {"sinpi": "a/b"}.
Cyclotomic parse_exact(const Json& v);
Complex parse_float(const Json& v);

template <class Scalar>
Matrix<Scalar> parse_matrix(const Json& v);

Json read_json(const std::filesystem::path& path);

/// "kind" of a parsed input file: symbol | action | strata | beta | isotropy.
std::string kind_of(const Json& doc);

template <class Scalar>
CliffordSymbol<Scalar> load_symbol(const Json& doc, const std::filesystem::path& base, double tol);

FiniteGroup load_group(const Json& g);
/// Builtin table for builtin groups, or the explicit {"irreps": [...]} list.
CharacterTable load_characters(const Json& doc, const FiniteGroup& g);

template <class Scalar>
GroupAction<Scalar> load_action(const Json& doc, const std::filesystem::path& base, double tol);

StrataModel load_strata(const Json& doc);

/// Schema-stamped envelope.
Json envelope(const std::string& command, const std::string& input);
Json number(const Rational& q);
Json error_object(const Error& e);

struct Fixture {
    std::string name;
    std::string file;  // relative to the fixture directory
    std::string kind;
    std::string description;
};

std::filesystem::path fixture_dir();
std::vector<Fixture> bundled_fixtures(const std::filesystem::path& dir = fixture_dir());

struct JobSpec {
    std::string command;
    std::string in;
    std::optional<std::string> alpha;
    int mmax = 8;
    int lmax = 64;
    double tol = 1e-8;
    std::optional<std::string> out;
    Mode mode = Mode::exact;
    long p = 0, m = 0, n = 0;  // lens-eta
};

struct RunResult {
    int status = 0;  // 0 ok, 1 domain/validation, 2 oracle disagreement
    Json report;
};

/// Never throws: failures become {"error": {...}} with the matching status.
RunResult run(const JobSpec& job);

}  // namespace equispectra::io
