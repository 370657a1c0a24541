#include "laxforge/family.hpp"

#include <sstream>
#include <stdexcept>

namespace laxforge {

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Nilpotent: return "nilpotent";
        case FamilyKind::Hadamard: return "hadamard";
        case FamilyKind::Idempotent: return "idempotent";
        case FamilyKind::KIdempotent: return "kidempotent";
    }
    return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
    if (name == "nilpotent") return FamilyKind::Nilpotent;
    if (name == "hadamard") return FamilyKind::Hadamard;
    if (name == "idempotent") return FamilyKind::Idempotent;
    if (name == "kidempotent" || name == "k-idempotent") return FamilyKind::KIdempotent;
    return std::nullopt;
}

std::size_t CouplingFamily::slot_of_label(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > size())
        throw std::out_of_range("CouplingFamily: label out of range");
    if (kind == FamilyKind::KIdempotent) return static_cast<std::size_t>(3 - label);
    return static_cast<std::size_t>(label - 1);
}

int CouplingFamily::label_of_slot(std::size_t slot) const {
    if (slot >= size()) throw std::out_of_range("CouplingFamily: slot out of range");
    if (kind == FamilyKind::KIdempotent) return static_cast<int>(3 - slot);
    return static_cast<int>(slot + 1);
}

namespace {

ExactMatrix all_ones_strict_upper(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = Scalar(1);
    return m;
}

ExactMatrix leading_projector(std::size_t n, std::size_t j) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < j; ++k) m.at(k, k) = Scalar(1);
    return m;
}

}  // namespace

CouplingFamily build_family(FamilyKind kind, int size_param) {
    CouplingFamily f;
    f.kind = kind;
    f.param = size_param;
    switch (kind) {
        case FamilyKind::Nilpotent: {
            if (size_param < 1) throw std::invalid_argument("nilpotent family needs p >= 1");
            std::size_t dim = static_cast<std::size_t>(size_param) + 1;
            ExactMatrix n = all_ones_strict_upper(dim);
            f.basis.push_back(exact_identity(dim));
            ExactMatrix power = exact_identity(dim);
            for (int j = 1; j <= size_param; ++j) {
                power = power * n;
                f.basis.push_back(power);
            }
            break;
        }
        case FamilyKind::Hadamard: {
            ExactMatrix g(2, 2);
            g.at(0, 0) = Scalar(1);
            g.at(0, 1) = Scalar(-1);
            g.at(1, 0) = Scalar(1);
            g.at(1, 1) = Scalar(1);
            ExactMatrix gt = g.transposed();
            ExactMatrix g3 = (g - gt).scaled(Scalar::rat(1, 2));
            f.basis = {exact_identity(2), g, gt, g3};
            break;
        }
        case FamilyKind::Idempotent: {
            if (size_param < 2) throw std::invalid_argument("idempotent family needs n >= 2");
            std::size_t n = static_cast<std::size_t>(size_param);
            for (std::size_t j = 1; j <= n; ++j) f.basis.push_back(leading_projector(n, j));
            break;
        }
        case FamilyKind::KIdempotent: {
            Scalar half = Scalar::rat(1, 2);
            ExactMatrix p = pauli3().scaled(Scalar::i() * Scalar::sqrt7() * half) + pauli2() -
                            exact_identity(2).scaled(half);
            f.basis = {p, p * p, p * p * p};
            f.permutation = pauli1();
            break;
        }
    }
    return f;
}

bool CouplingFamily::basis_linearly_independent() const {
    // Exact Gaussian elimination on the vectorized basis.
    std::size_t dim = matrix_dim();
    std::size_t cols = size();
    std::vector<std::vector<Scalar>> m(dim * dim, std::vector<Scalar>(cols));
    for (std::size_t b = 0; b < cols; ++b)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m[i * dim + j][b] = basis[b].at(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) return false;  // dependent column
        std::swap(m[rank], m[pivot]);
        Scalar inv = m[rank][col].inverse();
        for (auto& x : m[rank]) x = x * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Scalar factor = m[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - factor * m[rank][cc];
        }
        ++rank;
    }
    return rank == cols;
}

std::optional<std::vector<Scalar>> decompose_over_basis(const CouplingFamily& f,
                                                        const ExactMatrix& m) {
    std::size_t nb = f.size();
    // Fast path: scalar multiple of a single basis element.
    for (std::size_t k = 0; k < nb; ++k) {
        const ExactMatrix& b = f.basis[k];
        Scalar ratio;
        bool seen = false, ok = true;
        for (std::size_t i = 0; i < b.rows() && ok; ++i) {
            for (std::size_t j = 0; j < b.cols() && ok; ++j) {
                const Scalar &be = b.at(i, j), &me = m.at(i, j);
                if (be.is_zero()) {
                    if (!me.is_zero()) ok = false;
                } else if (!seen) {
                    ratio = me * be.inverse();
                    seen = true;
                } else if (me != ratio * be) {
                    ok = false;
                }
            }
        }
        if (ok && seen) {
            std::vector<Scalar> coeffs(nb);
            coeffs[k] = ratio;
            return coeffs;
        }
    }
    if (m.is_zero()) return std::vector<Scalar>(nb);

    // General exact solve; free coefficients pinned to zero in basis order.
    std::size_t dim = f.matrix_dim();
    std::size_t rows = dim * dim;
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(nb + 1));
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) a[i * dim + j][b] = f.basis[b].at(i, j);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a[i * dim + j][nb] = m.at(i, j);

    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nb && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        Scalar inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Scalar factor = a[r][col];
            for (std::size_t cc = 0; cc <= nb; ++cc) a[r][cc] = a[r][cc] - factor * a[rank][cc];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!a[r][nb].is_zero()) return std::nullopt;  // inconsistent: outside span
    std::vector<Scalar> coeffs(nb);
    for (std::size_t r = 0; r < rank; ++r) coeffs[pivot_col_of_row[r]] = a[r][nb];
    // Free variables stay zero; verify exactly.
    ExactMatrix rebuilt(dim, dim);
    for (std::size_t b = 0; b < nb; ++b) rebuilt = rebuilt + f.basis[b].scaled(coeffs[b]);
    if (rebuilt != m) return std::nullopt;
    return coeffs;
}

ClosureTable closure_table(const CouplingFamily& f) {
    std::size_t n = f.size();
    ClosureTable t;
    t.n = n;
    t.c.assign(n * n * n, Scalar());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ExactMatrix prod = f.basis[i] * f.basis[j];
            auto coeffs = decompose_over_basis(f, prod);
            if (!coeffs) {
                std::ostringstream os;
                os << "closure failure: basis[" << i << "] * basis[" << j
                   << "] is outside the family span";
                throw std::runtime_error(os.str());
            }
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = (*coeffs)[k];
        }
    }
    return t;
}

namespace {

std::string basis_label(const CouplingFamily& f, std::size_t slot) {
    std::ostringstream os;
    switch (f.kind) {
        case FamilyKind::Nilpotent:
            if (slot == 0) return "1";
            os << "N";
            if (slot > 1) os << "^" << slot;
            break;
        case FamilyKind::Hadamard:
            if (slot == 0) return "1";
            os << "G" << slot;
            break;
        case FamilyKind::Idempotent: os << "P" << slot + 1; break;
        case FamilyKind::KIdempotent:
            os << "P";
            if (slot > 0) os << "^" << slot + 1;
            break;
    }
    return os.str();
}

}  // namespace

std::string closure_table_text(const CouplingFamily& f, const ClosureTable& t) {
    std::ostringstream os;
    std::size_t n = f.size();
    os << "      ";
    for (std::size_t j = 0; j < n; ++j) os << "| " << basis_label(f, j) << "\t";
    os << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << basis_label(f, i) << "\t";
        for (std::size_t j = 0; j < n; ++j) {
            std::string cell;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (c.is_zero()) continue;
                if (!cell.empty()) cell += " + ";
                if (c.is_one())
                    cell += basis_label(f, k);
                else
                    cell += c.str() + "*" + basis_label(f, k);
            }
            if (cell.empty()) cell = "0";
            os << "| " << cell << "\t";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

AxiomResult check(std::string name, bool ok, std::string note = "") {
    return AxiomResult{std::move(name), ok, std::move(note)};
}

}  // namespace

FamilyReport verify_family_axioms(const CouplingFamily& f) {
    FamilyReport rep;
    switch (f.kind) {
        case FamilyKind::Nilpotent: {
            std::size_t dim = f.matrix_dim();
            const ExactMatrix& n1 = f.basis[1];
            ExactMatrix np = exact_pow(n1, static_cast<unsigned>(f.param));
            ExactMatrix np1 = np * n1;
            rep.axioms.push_back(check("N^(p+1) = 0", np1.is_zero()));
            rep.axioms.push_back(check("N^p != 0", !np.is_zero()));
            rep.axioms.push_back(check("strictly upper triangular", [&] {
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j <= i; ++j)
                        if (!n1.at(i, j).is_zero()) return false;
                return true;
            }()));
            break;
        }
        case FamilyKind::Hadamard: {
            const ExactMatrix& g = f.basis[1];
            ExactMatrix gtg = g.transposed() * g;
            rep.axioms.push_back(check("G^T G = 2*1", gtg == exact_identity(2).scaled(Scalar(2)),
                                       "order-n condition read as n times the identity"));
            bool orth = gtg.at(0, 1).is_zero() && gtg.at(1, 0).is_zero();
            rep.axioms.push_back(check("rows/columns mutually orthogonal", orth));
            break;
        }
        case FamilyKind::Idempotent: {
            bool ok = true;
            for (const auto& p : f.basis) ok = ok && (p * p == p);
            rep.axioms.push_back(check("P_j^2 = P_j for all j", ok));
            break;
        }
        case FamilyKind::KIdempotent: {
            const ExactMatrix& p = f.basis[0];
            const ExactMatrix& p2 = f.basis[1];
            const ExactMatrix& p3 = f.basis[2];
            const ExactMatrix& k = *f.permutation;
            rep.axioms.push_back(check("K P^2 K = P", k * p2 * k == p));
            rep.axioms.push_back(check("K P K = P^2", k * p * k == p2));
            rep.axioms.push_back(check("K P = P^2 K", k * p == p2 * k));
            rep.axioms.push_back(check("K P^2 = P K", k * p2 == p * k));
            rep.axioms.push_back(check("P^3 K = K P^3", p3 * k == k * p3));
            rep.axioms.push_back(check("K P^3 K = P^3", k * p3 * k == p3));
            rep.axioms.push_back(check("P^3 = (KP)^2", p3 == (k * p) * (k * p)));
            rep.axioms.push_back(check("P^3 = (PK)^2", p3 == (p * k) * (p * k)));
            rep.axioms.push_back(check("P^3 = 1", p3 == exact_identity(2)));
            rep.axioms.push_back(check("tr P = -1", p.trace() == Scalar(-1)));
            rep.axioms.push_back(check("tr P^2 = -1", p2.trace() == Scalar(-1)));
            rep.axioms.push_back(check("tr P^3 = 2", p3.trace() == Scalar(2)));
            break;
        }
    }
    rep.basis_independent = f.basis_linearly_independent();
    return rep;
}

}  // namespace laxforge
