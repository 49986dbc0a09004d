#include "twrep/algebra.hpp"

#include "twrep/error.hpp"

namespace twrep {

Algebra::Algebra(Field field, std::vector<std::string> basis_labels,
                 const std::vector<Constant>& constants, Matrix unit)
    : field_(field), labels_(std::move(basis_labels)), unit_(std::move(unit)) {
    const std::size_t d = labels_.size();
    if (d == 0) throw Error(ErrorKind::InvalidData, "algebra must have positive dimension");
    if (unit_.rows() != d || unit_.cols() != 1 || !(unit_.field() == field_))
        throw Error(ErrorKind::InvalidData, "unit vector must be a column of length dim");
    left_mult_.assign(d, Matrix(field_, d, d));
    right_mult_.assign(d, Matrix(field_, d, d));
    for (const auto& c : constants) {
        if (c.i >= d || c.j >= d || c.k >= d)
            throw Error(ErrorKind::InvalidData, "structure constant index out of range");
        Scalar v = left_mult_[c.i].at(c.k, c.j) + c.value;
        left_mult_[c.i].set(c.k, c.j, v);
        right_mult_[c.j].set(c.k, c.i, v);
    }
    // Associativity is equivalent to left and right multiplications commuting.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (!(right_mult_[k] * left_mult_[i] == left_mult_[i] * right_mult_[k]))
                throw Error(ErrorKind::InvalidData,
                            "structure constants are not associative at (" + labels_[i] + ", " +
                                labels_[k] + ")");
    Matrix lu(field_, d, d), ru(field_, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (unit_.is_zero_at(i, 0)) continue;
        lu += left_mult_[i].scaled(unit_.at(i, 0));
        ru += right_mult_[i].scaled(unit_.at(i, 0));
    }
    if (!lu.is_identity() || !ru.is_identity())
        throw Error(ErrorKind::InvalidData, "unit vector is not a two-sided identity");
}

AlgebraPtr Algebra::ground_field(Field f) {
    return std::make_shared<const Algebra>(f, std::vector<std::string>{"1"},
                                           std::vector<Constant>{{0, 0, 0, Scalar::one(f)}},
                                           Matrix::identity(f, 1));
}

AlgebraPtr Algebra::truncated_polynomial(Field f, std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Constant> constants;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
        for (std::size_t j = 0; i + j < n; ++j) constants.push_back({i, j, i + j, Scalar::one(f)});
    }
    return std::make_shared<const Algebra>(f, labels, constants, Matrix::unit_column(f, n, 0));
}

AlgebraPtr Algebra::upper_triangular(Field f, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            units.emplace_back(r, c);
            labels.push_back("e" + std::to_string(r) + std::to_string(c));
        }
    std::vector<Constant> constants;
    Matrix unit(f, units.size(), 1);
    for (std::size_t a = 0; a < units.size(); ++a) {
        if (units[a].first == units[a].second) unit.set(a, 0, 1);
        for (std::size_t b = 0; b < units.size(); ++b) {
            if (units[a].second != units[b].first) continue;
            for (std::size_t k = 0; k < units.size(); ++k)
                if (units[k] == std::make_pair(units[a].first, units[b].second))
                    constants.push_back({a, b, k, Scalar::one(f)});
        }
    }
    return std::make_shared<const Algebra>(f, labels, constants, unit);
}

Scalar Algebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    return left_mult_[i].at(k, j);
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
    Matrix out(field_, dim(), 1);
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x.is_zero_at(i, 0)) out += (left_mult_[i] * y).scaled(x.at(i, 0));
    return out;
}

AlgebraPtr Algebra::opposite() const {
    std::vector<Constant> constants;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!left_mult_[j].is_zero_at(k, i))
                    constants.push_back({i, j, k, left_mult_[j].at(k, i)});
    return std::make_shared<const Algebra>(field_, labels_, constants, unit_);
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.labels_.size() == b.labels_.size() && a.unit_ == b.unit_ &&
           a.left_mult_ == b.left_mult_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context) {
    if (a && b && !(a->field() == b->field()))
        throw Error(ErrorKind::FieldMismatch, std::string(context));
    if (!same_algebra(a, b)) throw Error(ErrorKind::AlgebraMismatch, std::string(context));
}

// ---------------------------------------------------------------------------

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != algebra_->dim())
        throw Error(ErrorKind::InvalidData, "module needs one action matrix per basis element");
    for (const auto& a : action_)
        if (a.rows() != dim_ || a.cols() != dim_)
            throw Error(ErrorKind::InvalidData, "action matrix has wrong shape");
        else if (!(a.field() == algebra_->field()))
            throw Error(ErrorKind::FieldMismatch, "action matrix field");
}

Module Module::zero(AlgebraPtr algebra) {
    const Field f = algebra->field();
    std::vector<Matrix> action(algebra->dim(), Matrix(f, 0, 0));
    return Module(std::move(algebra), 0, std::move(action));
}

Module Module::checked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action) {
    Module m(std::move(algebra), dim, std::move(action));
    if (auto err = check_module_laws(m)) throw Error(ErrorKind::InvalidData, *err);
    return m;
}

Matrix Module::act(const Matrix& element) const {
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < action_.size(); ++i)
        if (!element.is_zero_at(i, 0)) out += action_[i].scaled(element.at(i, 0));
    return out;
}

bool operator==(const Module& a, const Module& b) {
    return a.dim_ == b.dim_ && same_algebra(a.algebra_, b.algebra_) && a.action_ == b.action_;
}

namespace {

// rho(b_j) rho(b_i) = sum_k c_ij^k rho(b_k) for right actions, the reverse
// order for left actions.
std::optional<std::string> check_action_law(const Algebra& a, const std::vector<Matrix>& act,
                                            std::size_t dim, bool right, const char* what) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = right ? act[j] * act[i] : act[i] * act[j];
            Matrix rhs(a.field(), dim, dim);
            for (std::size_t k = 0; k < d; ++k) {
                Scalar c = a.constant(i, j, k);
                if (!c.is_zero()) rhs += act[k].scaled(c);
            }
            if (!(lhs == rhs))
                return std::string(what) + " action law fails for (" + a.basis_labels()[i] + ", " +
                       a.basis_labels()[j] + ")";
        }
    Matrix u(a.field(), dim, dim);
    for (std::size_t i = 0; i < d; ++i)
        if (!a.unit().is_zero_at(i, 0)) u += act[i].scaled(a.unit().at(i, 0));
    if (!u.is_identity()) return std::string(what) + " action of the unit is not the identity";
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_module_laws(const Module& m) {
    return check_action_law(*m.algebra(), m.actions(), m.dim(), true, "right");
}

bool is_linear(const Matrix& f, const Module& source, const Module& target) {
    if (!same_algebra(source.algebra(), target.algebra())) return false;
    if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
    for (std::size_t i = 0; i < source.algebra()->dim(); ++i)
        if (!(f * source.action(i) == target.action(i) * f)) return false;
    return true;
}

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)) {
    if (left_action_.size() != left_->dim() || right_action_.size() != right_->dim())
        throw Error(ErrorKind::InvalidData, "bimodule needs one action matrix per basis element");
    for (const auto* acts : {&left_action_, &right_action_})
        for (const auto& a : *acts)
            if (a.rows() != dim_ || a.cols() != dim_)
                throw Error(ErrorKind::InvalidData, "bimodule action matrix has wrong shape");
}

Bimodule Bimodule::checked(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                           std::vector<Matrix> left_action, std::vector<Matrix> right_action) {
    Bimodule n(std::move(left), std::move(right), dim, std::move(left_action),
               std::move(right_action));
    if (auto err = check_bimodule_laws(n)) throw Error(ErrorKind::InvalidData, *err);
    return n;
}

Bimodule Bimodule::regular(AlgebraPtr a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(a->left_mult(i));
        r.push_back(a->right_mult(i));
    }
    const std::size_t d = a->dim();
    return Bimodule(a, a, d, std::move(l), std::move(r));
}

Bimodule Bimodule::vect(AlgebraPtr ground, std::size_t m) {
    Matrix id = Matrix::identity(ground->field(), m);
    return Bimodule(ground, ground, m, {id}, {id});
}

Bimodule Bimodule::from_right_module(AlgebraPtr ground, const Module& p) {
    return Bimodule(std::move(ground), p.algebra(), p.dim(),
                    {Matrix::identity(p.field(), p.dim())}, p.actions());
}

Bimodule Bimodule::from_left_module(AlgebraPtr a, AlgebraPtr ground, const Module& left) {
    return Bimodule(std::move(a), std::move(ground), left.dim(), left.actions(),
                    {Matrix::identity(left.field(), left.dim())});
}

Bimodule Bimodule::free(AlgebraPtr a, AlgebraPtr b) {
    const Field f = a->field();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i)
        l.push_back(kron(a->left_mult(i), Matrix::identity(f, b->dim())));
    for (std::size_t j = 0; j < b->dim(); ++j)
        r.push_back(kron(Matrix::identity(f, a->dim()), b->right_mult(j)));
    const std::size_t dim = a->dim() * b->dim();
    return Bimodule(std::move(a), std::move(b), dim, std::move(l), std::move(r));
}

Bimodule Bimodule::twisted_regular(AlgebraPtr a, const Matrix& sigma) {
    const std::size_t d = a->dim();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < d; ++i) {
        l.push_back(a->left_mult(i));
        Matrix acc(a->field(), d, d);
        for (std::size_t k = 0; k < d; ++k)
            if (!sigma.is_zero_at(k, i)) acc += a->right_mult(k).scaled(sigma.at(k, i));
        r.push_back(acc);
    }
    return Bimodule::checked(a, a, d, std::move(l), std::move(r));
}

Bimodule Bimodule::direct_sum(const Bimodule& x, const Bimodule& y) {
    require_same_algebra(x.left_, y.left_, "bimodule direct sum (left)");
    require_same_algebra(x.right_, y.right_, "bimodule direct sum (right)");
    const Field f = x.left_->field();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < x.left_action_.size(); ++i)
        l.push_back(Matrix::block_diag(f, {x.left_action_[i], y.left_action_[i]}));
    for (std::size_t i = 0; i < x.right_action_.size(); ++i)
        r.push_back(Matrix::block_diag(f, {x.right_action_[i], y.right_action_[i]}));
    return Bimodule(x.left_, x.right_, x.dim_ + y.dim_, std::move(l), std::move(r));
}

Matrix Bimodule::left_act(const Matrix& element) const {
    Matrix out(left_->field(), dim_, dim_);
    for (std::size_t i = 0; i < left_action_.size(); ++i)
        if (!element.is_zero_at(i, 0)) out += left_action_[i].scaled(element.at(i, 0));
    return out;
}

Module Bimodule::as_right_module() const { return Module(right_, dim_, right_action_); }

Module Bimodule::as_left_module() const { return Module(left_->opposite(), dim_, left_action_); }

Bimodule Bimodule::swapped() const {
    return Bimodule(right_->opposite(), left_->opposite(), dim_, right_action_, left_action_);
}

std::optional<std::string> check_bimodule_laws(const Bimodule& n) {
    if (!(n.left()->field() == n.right()->field())) return std::string("bimodule field mismatch");
    if (auto e = check_action_law(*n.left(), n.left_actions(), n.dim(), false, "left")) return e;
    if (auto e = check_action_law(*n.right(), n.right_actions(), n.dim(), true, "right")) return e;
    for (const auto& l : n.left_actions())
        for (const auto& r : n.right_actions())
            if (!(l * r == r * l)) return std::string("left and right actions do not commute");
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Module free_module(const AlgebraPtr& a, std::size_t n) {
    std::vector<Matrix> action;
    for (std::size_t j = 0; j < a->dim(); ++j)
        action.push_back(kron(Matrix::identity(a->field(), n), a->right_mult(j)));
    return Module(a, n * a->dim(), std::move(action));
}

Matrix DirectSum::injection(std::size_t i) const {
    Matrix m(module.field(), module.dim(), dims[i]);
    m.set_block(offsets[i], 0, Matrix::identity(module.field(), dims[i]));
    return m;
}

Matrix DirectSum::projection(std::size_t i) const {
    Matrix m(module.field(), dims[i], module.dim());
    m.set_block(0, offsets[i], Matrix::identity(module.field(), dims[i]));
    return m;
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
    DirectSum out;
    std::size_t total = 0;
    for (const auto& p : parts) {
        require_same_algebra(a, p.algebra(), "direct sum");
        out.offsets.push_back(total);
        out.dims.push_back(p.dim());
        total += p.dim();
    }
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.action(i));
        action.push_back(Matrix::block_diag(a->field(), blocks));
    }
    out.module = Module(a, total, std::move(action));
    return out;
}

Module submodule(const Module& m, const Matrix& basis) {
    std::vector<Matrix> action;
    for (const auto& r : m.actions()) {
        auto c = coordinates(basis, r * basis);
        if (!c) throw Error(ErrorKind::Internal, "subspace is not stable under the action");
        action.push_back(std::move(*c));
    }
    return Module(m.algebra(), basis.cols(), std::move(action));
}

Matrix generated_subspace(const Module& m, const Matrix& vectors) {
    std::vector<Matrix> parts;
    for (const auto& r : m.actions()) parts.push_back(r * vectors);
    return column_space_basis(Matrix::hstack(m.field(), m.dim(), parts));
}

Quotient quotient(const Module& m, const Matrix& subspace) {
    Cokernel ck = cokernel(subspace);
    std::vector<Matrix> action;
    for (const auto& r : m.actions()) action.push_back(ck.projection * r * ck.section);
    const std::size_t q = ck.dim();
    return Quotient{Module(m.algebra(), q, std::move(action)), std::move(ck)};
}

// ---------------------------------------------------------------------------

Matrix HomBasis::element(std::size_t j) const {
    return Matrix::unvec(space.basis.column(j), target_dim, source_dim);
}

Matrix HomBasis::combination(const Matrix& coefficients) const {
    return Matrix::unvec(space.basis * coefficients, target_dim, source_dim);
}

Matrix HomBasis::coefficients(const Matrix& f) const {
    return f.vec().select_rows(space.free_columns);
}

HomBasis hom_basis(const Module& m, const Module& n) {
    require_same_algebra(m.algebra(), n.algebra(), "hom_space");
    const Field f = m.field();
    const std::size_t sm = m.dim(), sn = n.dim();
    std::vector<Matrix> blocks;
    const Matrix im = Matrix::identity(f, sm), in = Matrix::identity(f, sn);
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        if (m.action(i).is_identity() && n.action(i).is_identity()) continue;
        blocks.push_back(kron(in, m.action(i).transpose()) - kron(n.action(i), im));
    }
    Matrix system = Matrix::vstack(f, sm * sn, blocks);
    return HomBasis{kernel(system), sm, sn};
}

std::vector<ModuleMorphism> hom_space(const Module& m, const Module& n) {
    HomBasis h = hom_basis(m, n);
    std::vector<ModuleMorphism> out;
    for (std::size_t j = 0; j < h.dim(); ++j) out.push_back({m, n, h.element(j)});
    return out;
}

TensorProduct tensor_over(const Module& m, const Bimodule& n) {
    require_same_algebra(m.algebra(), n.left(), "tensor_over");
    const Field f = m.field();
    const std::size_t sm = m.dim(), sn = n.dim();
    const Matrix im = Matrix::identity(f, sm), in = Matrix::identity(f, sn);
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        parts.push_back(kron(m.action(i), in) - kron(im, n.left_action(i)));
    Cokernel ck = cokernel(Matrix::hstack(f, sm * sn, parts));
    std::vector<Matrix> action;
    for (std::size_t j = 0; j < n.right()->dim(); ++j)
        action.push_back(ck.projection * kron(im, n.right_action(j)) * ck.section);
    const std::size_t q = ck.dim();
    return TensorProduct{Module(n.right(), q, std::move(action)), std::move(ck.projection),
                         std::move(ck.section), sm, sn};
}

Matrix tensor_morphism(const Matrix& f, const TensorProduct& source, const TensorProduct& target) {
    if (source.right_dim != target.right_dim)
        throw Error(ErrorKind::DimensionMismatch, "tensor_morphism over different bimodules");
    return target.projection * kron(f, Matrix::identity(f.field(), source.right_dim)) *
           source.section;
}

Matrix HomModule::element(const Matrix& c) const {
    return Matrix::unvec(space.basis * c, target_dim, bimodule_dim);
}

Matrix HomModule::coords(const Matrix& f) const { return f.vec().select_rows(space.free_columns); }

HomModule hom_from(const Bimodule& n, const Module& y) {
    require_same_algebra(n.right(), y.algebra(), "hom_from");
    HomBasis hb = hom_basis(n.as_right_module(), y);
    const Field f = y.field();
    const Matrix iy = Matrix::identity(f, y.dim());
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n.left()->dim(); ++i)
        action.push_back(
            (kron(iy, n.left_action(i).transpose()) * hb.space.basis).select_rows(hb.space.free_columns));
    const std::size_t h = hb.dim();
    return HomModule{Module(n.left(), h, std::move(action)), std::move(hb.space), n.dim(), y.dim()};
}

Matrix hom_morphism(const Matrix& g, const HomModule& source, const HomModule& target) {
    return (kron(g, Matrix::identity(g.field(), source.bimodule_dim)) * source.space.basis)
        .select_rows(target.space.free_columns);
}

Matrix adjoint_to_hom(const Matrix& f, const TensorProduct& mn, const HomModule& ny) {
    const Field fld = f.field();
    const std::size_t m = mn.left_dim, n = mn.right_dim, y = ny.target_dim;
    if (f.cols() != mn.module.dim() || f.rows() != y)
        throw Error(ErrorKind::DimensionMismatch, "adjoint_to_hom shape");
    Matrix g = f * mn.projection;
    Matrix out(fld, ny.module.dim(), m);
    for (std::size_t x = 0; x < m; ++x) {
        Matrix fx = g.block(0, x * n, y, n);
        out.set_block(0, x, ny.coords(fx));
    }
    return out;
}

Matrix adjoint_to_tensor(const Matrix& g, const TensorProduct& mn, const HomModule& ny) {
    const std::size_t m = mn.left_dim, n = mn.right_dim, y = ny.target_dim;
    if (g.cols() != m || g.rows() != ny.module.dim())
        throw Error(ErrorKind::DimensionMismatch, "adjoint_to_tensor shape");
    Matrix full(g.field(), y, m * n);
    for (std::size_t x = 0; x < m; ++x) full.set_block(0, x * n, ny.element(g.column(x)));
    return full * mn.section;
}

Module dualize(const Module& m) { return dualize_over(m, m.algebra()->opposite()); }

Module dualize_over(const Module& m, const AlgebraPtr& opposite) {
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) action.push_back(a.transpose());
    return Module(opposite, m.dim(), std::move(action));
}

// ---------------------------------------------------------------------------

Matrix free_extension(const Module& target, const Matrix& values, std::size_t rank) {
    const std::size_t d = target.algebra()->dim();
    Matrix out(target.field(), target.dim(), rank * d);
    for (std::size_t l = 0; l < rank; ++l) {
        Matrix v = values.column(l);
        for (std::size_t i = 0; i < d; ++i) out.set_block(0, l * d + i, target.action(i) * v);
    }
    return out;
}

FreeCover free_cover(const Module& m) {
    const Field f = m.field();
    const std::size_t n = m.dim();
    std::vector<std::size_t> gens;
    Matrix span(f, n, 0);
    auto columns_of = [&](const std::vector<std::size_t>& idx) {
        Matrix g(f, n, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) g.set(idx[j], j, 1);
        return g;
    };
    for (std::size_t c = 0; c < n && span.cols() < n; ++c) {
        Matrix e = Matrix::unit_column(f, n, c);
        if (rank(Matrix::hstack(f, n, {span, e})) == span.cols()) continue;
        gens.push_back(c);
        span = generated_subspace(m, columns_of(gens));
    }
    // Greedy choice can overshoot; drop generators the others already produce.
    for (std::size_t pos = 0; pos < gens.size();) {
        std::vector<std::size_t> trial = gens;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        if (generated_subspace(m, columns_of(trial)).cols() == n)
            gens = std::move(trial);
        else
            ++pos;
    }
    FreeCover cover;
    cover.generator_coords = gens;
    cover.generators = columns_of(gens);
    cover.free = free_module(m.algebra(), gens.size());
    cover.map = free_extension(m, cover.generators, gens.size());
    return cover;
}

ProjectivityCertificate is_projective(const Module& m) {
    ProjectivityCertificate cert;
    cert.cover = free_cover(m);
    const Field f = m.field();
    if (m.dim() == 0) {
        cert.projective = true;
        cert.section = Matrix(f, cert.cover.free.dim(), 0);
        return cert;
    }
    HomBasis h = hom_basis(m, cert.cover.free);
    Matrix system(f, m.dim() * m.dim(), h.dim());
    for (std::size_t j = 0; j < h.dim(); ++j) system.set_block(0, j, (cert.cover.map * h.element(j)).vec());
    auto coeffs = solve(system, Matrix::identity(f, m.dim()).vec());
    if (!coeffs) return cert;
    cert.projective = true;
    cert.section = h.combination(*coeffs);
    return cert;
}

}  // namespace twrep
