#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "structcanon/matrix.hpp"

namespace structcanon {

enum class StructureClass {
    normal,
    hamiltonian,
    skew_hamiltonian,
    per_hermitian,
    perskew_hermitian,
    unitary,
    symplectic,
    perplectic,
};

inline const char* to_string(StructureClass c) {
    switch (c) {
        case StructureClass::normal: return "normal";
        case StructureClass::hamiltonian: return "hamiltonian";
        case StructureClass::skew_hamiltonian: return "skew_hamiltonian";
        case StructureClass::per_hermitian: return "per_hermitian";
        case StructureClass::perskew_hermitian: return "perskew_hermitian";
        case StructureClass::unitary: return "unitary";
        case StructureClass::symplectic: return "symplectic";
        case StructureClass::perplectic: return "perplectic";
    }
    return "?";
}

/// Absolute Frobenius residuals of a square matrix against each structure
/// class. The four structured classes and the two automorphism groups need an
/// even dimension; for odd sizes those residuals are left unset.
struct StructureReport {
    std::size_t size = 0;
    double norm = 0.0;
    double residual_normal = 0.0;
    double residual_unitary = 0.0;
    std::optional<double> residual_hamiltonian;
    std::optional<double> residual_skew_hamiltonian;
    std::optional<double> residual_per_hermitian;
    std::optional<double> residual_perskew_hermitian;
    std::optional<double> residual_symplectic;
    std::optional<double> residual_perplectic;

    bool even_dimension() const { return residual_hamiltonian.has_value(); }
};

/// B = (A + A^H)/2.
inline Matrix hermitian_part(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("hermitian_part: matrix must be square");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

/// C = (A - A^H)/2.
inline Matrix skew_hermitian_part(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("skew_hermitian_part: matrix must be square");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = 0.5 * (a(i, j) - std::conj(a(j, i)));
    return r;
}

inline double hermitian_residual(const Matrix& m) {
    return frobenius_norm(skew_hermitian_part(m));
}

inline double skew_hermitian_residual(const Matrix& m) {
    return frobenius_norm(hermitian_part(m));
}

inline StructureReport structure_report(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("structure_report: matrix must be square");
    StructureReport rep;
    rep.size = a.rows();
    rep.norm = frobenius_norm(a);

    const Matrix ah = adjoint(a);
    rep.residual_normal = frobenius_norm(a * ah - ah * a);
    rep.residual_unitary = frobenius_norm(ah * a - Matrix::identity(a.rows()));

    if (a.rows() % 2 == 0) {
        const std::size_t n = a.rows() / 2;
        const Matrix j = j_matrix(n);
        const Matrix f = f_matrix(2 * n);
        const Matrix ja = j * a;
        const Matrix fa = f * a;
        // (JA)^H = JA defines Hamiltonian; the two residuals are the norms of
        // the skew-Hermitian and Hermitian parts of JA, so they satisfy
        // ham^2 + skew^2 = ||JA||_F^2 = ||A||_F^2 exactly.
        rep.residual_hamiltonian = hermitian_residual(ja);
        rep.residual_skew_hamiltonian = skew_hermitian_residual(ja);
        rep.residual_per_hermitian = hermitian_residual(fa);
        rep.residual_perskew_hermitian = skew_hermitian_residual(fa);
        rep.residual_symplectic = frobenius_norm(ah * ja - j);
        rep.residual_perplectic = frobenius_norm(ah * fa - f);
    }
    return rep;
}

inline double class_residual(const StructureReport& rep, StructureClass c) {
    auto require = [&](const std::optional<double>& r) -> double {
        if (!r)
            throw std::invalid_argument(std::string("structure residual for class ") +
                                        to_string(c) + " needs an even dimension");
        return *r;
    };
    switch (c) {
        case StructureClass::normal: return rep.residual_normal;
        case StructureClass::unitary: return rep.residual_unitary;
        case StructureClass::hamiltonian: return require(rep.residual_hamiltonian);
        case StructureClass::skew_hamiltonian: return require(rep.residual_skew_hamiltonian);
        case StructureClass::per_hermitian: return require(rep.residual_per_hermitian);
        case StructureClass::perskew_hermitian: return require(rep.residual_perskew_hermitian);
        case StructureClass::symplectic: return require(rep.residual_symplectic);
        case StructureClass::perplectic: return require(rep.residual_perplectic);
    }
    throw std::logic_error("class_residual: unknown class");
}

/// Thresholded classification: residual <= tol * max(1, ||a||_F).
inline bool is_structure(const Matrix& a, StructureClass c, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("is_structure: tol must be positive");
    if (a.rows() % 2 != 0 && c != StructureClass::normal && c != StructureClass::unitary)
        return false;
    const StructureReport rep = structure_report(a);
    return class_residual(rep, c) <= tol * std::max(1.0, rep.norm);
}

namespace detail {

inline void require_class(const Matrix& a, StructureClass c, double tol, const char* op) {
    if (!is_structure(a, c, tol))
        throw std::invalid_argument(std::string(op) + ": input is not " + to_string(c) +
                                    " within tolerance " + std::to_string(tol));
}

}  // namespace detail

// The four sets pair up under multiplication by the imaginary unit:
// W = iH maps Hamiltonian to skew-Hamiltonian and K = iM maps per-Hermitian
// to perskew-Hermitian, both with inverses -i(.).

inline Matrix skewham_from_ham(const Matrix& h, double tol = 1e-10) {
    detail::require_class(h, StructureClass::hamiltonian, tol, "skewham_from_ham");
    return kImag * h;
}

inline Matrix ham_from_skewham(const Matrix& w, double tol = 1e-10) {
    detail::require_class(w, StructureClass::skew_hamiltonian, tol, "ham_from_skewham");
    return -kImag * w;
}

inline Matrix perskewh_from_perh(const Matrix& m, double tol = 1e-10) {
    detail::require_class(m, StructureClass::per_hermitian, tol, "perskewh_from_perh");
    return kImag * m;
}

inline Matrix perh_from_perskewh(const Matrix& k, double tol = 1e-10) {
    detail::require_class(k, StructureClass::perskew_hermitian, tol, "perh_from_perskewh");
    return -kImag * k;
}

/// Projection onto the Hamiltonian set: H satisfies H = J H^H J.
inline Matrix project_hamiltonian(const Matrix& h) {
    if (!h.square() || h.rows() % 2 != 0)
        throw std::invalid_argument("project_hamiltonian: even square matrix required");
    const Matrix j = j_matrix(h.rows() / 2);
    return 0.5 * (h + j * adjoint(h) * j);
}

/// Projection onto the per-Hermitian set: M satisfies M = F M^H F.
inline Matrix project_per_hermitian(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("project_per_hermitian: square matrix required");
    const Matrix f = f_matrix(m.rows());
    return 0.5 * (m + f * adjoint(m) * f);
}

}  // namespace structcanon
