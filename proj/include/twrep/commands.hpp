#pragma once

#include <cstdint>
#include <string>

#include "twrep/error.hpp"
#include "twrep/io.hpp"

namespace twrep {

inline constexpr int kReportSchemaVersion = 1;

struct CommandArgs {
    std::string name;      // validate, hom, ext, resolve, coresolve, les-check, oracle-compare, preset
    std::string document;  // path; empty when not used
    std::string x, y;      // representation labels
    std::string field = "Q";
    std::uint64_t seed = 1;
    std::size_t max_degree = 4;
    std::string variant = "auto";  // auto, psi, phi, both
    bool emit_matrices = false;
    std::size_t trials = 100;
    // preset parameters
    std::string preset;             // framed, chain, vect
    std::size_t degree = 2;         // A = k[t]/t^degree
    std::string framing = "regular";  // regular or simple
    std::size_t tail = 2;
    std::string shape = "a2";       // a2, a3, kronecker, square
    std::size_t multiplicity = 1;
};

struct CommandOutput {
    std::string text;  // canonical JSON: a report, or a document for preset
    int exit_code = 0;
};

// 0 success, 1 parse or validation error, 2 hypothesis violation, 3 internal breach.
int exit_code_for(ErrorKind kind);

CommandOutput run_command(const CommandArgs& args);

// Preset documents, also used directly by tests.
Json preset_document(const CommandArgs& args);
// Document for a diagram and named representations; algebras are labelled
// "k" (ground field) or "A0", "A1", ..., bimodules "N_<arrow>".
Json diagram_document(const DiagramPtr& d, const std::vector<NamedRepresentation>& reps);

}  // namespace twrep
