#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twrep/rep.hpp"

namespace twrep {

using Json = nlohmann::json;  // std::map-backed: keys serialize in sorted order

// Scalars: rationals as "num/den" strings, prime-field elements as integers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where);
// Matrices as lists of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

enum class Form { Psi, Phi };

struct NamedRepresentation {
    std::string label;
    Form form = Form::Psi;
    Representation rep;
};

// A parsed and fully law-checked diagram document.
struct Document {
    Field field = Field::rationals();
    std::vector<std::pair<std::string, AlgebraPtr>> algebras;
    std::vector<std::pair<std::string, Module>> modules;
    std::vector<std::pair<std::string, Bimodule>> bimodules;
    std::vector<std::string> vertex_algebras;  // algebra label per vertex
    std::vector<std::string> arrow_bimodules;  // bimodule label per arrow
    DiagramPtr diagram;
    std::vector<NamedRepresentation> representations;

    const Representation& representation(const std::string& label) const;
};

// Throws Error(InvalidData) naming the offending location.
Document parse_document(const Json& j);
Document load_document(const std::string& path);

// Builds documents from in-memory objects; component modules are named "<rep>@<vertex>".
class DocumentBuilder {
public:
    explicit DocumentBuilder(Field f) : field_(f) {}
    void add_algebra(const std::string& label, const AlgebraPtr& a);
    void add_module(const std::string& label, const std::string& algebra, const Module& m);
    void add_bimodule(const std::string& label, const std::string& left, const std::string& right, const Bimodule& n);
    void set_quiver(const Quiver& q, const std::vector<std::string>& vertex_algebras,
                    const std::vector<std::string>& arrow_bimodules);
    void add_representation(const std::string& label, const Representation& x, Form form);
    Json build() const;

private:
    std::string algebra_label(const AlgebraPtr& a) const;

    Field field_;
    Json algebras_ = Json::array();
    Json modules_ = Json::array();
    Json bimodules_ = Json::array();
    Json quiver_ = Json::object();
    Json representations_ = Json::array();
    std::vector<std::pair<std::string, AlgebraPtr>> known_;
    std::vector<std::string> vertex_algebras_;
};

// Structure maps in the basis-free document layout: the psi form as a map on
// X_i (x)_k N (column index x * dim N + n), the phi form with one column per
// basis vector of X_i holding vec of a map N -> X_j (index y * dim N + n).
Matrix psi_document_matrix(const Representation& x, std::size_t a);
Matrix phi_document_matrix(const Representation& x, std::size_t a);

std::string sha256_hex(const std::string& bytes);
// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace twrep
