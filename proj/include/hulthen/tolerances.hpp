#pragma once

namespace hulthen {

/// Library-wide tolerance record. Every verification suite and every identity
/// check pins its threshold here; the CLI can override individual entries.
///
/// The identity residuals (contiguous relations, derivative decompositions)
/// are exact algebra, so their tolerances only cover floating-point round-off.
struct Tolerances {
    /// Relative residual for the contiguous-relation identities.
    double contiguous_identity = 1e-12;
    /// Relative residual for the family derivative decomposition.
    double family_identity = 1e-11;
    /// Pointwise relative residual for ladder actions on a grid.
    double ladder_pointwise = 1e-9;
    /// Pointwise relative residual for the derivative reconstruction from
    /// neighboring family members.
    double derivative_reconstruction = 1e-10;
    /// Relative error of the commutator eigenvalue fitted on a grid.
    double commutator_grid = 1e-8;
    /// Residual for the scalar ladder-algebra relations.
    double su2_scalar = 1e-10;
    /// Relative agreement between quadrature and symbolic normalization.
    double norm_consistency = 1e-10;
    /// Max-normalized residual of the radial equation for exact solutions.
    double ode_residual = 1e-10;
    /// Paper-mode residual must exceed this for the documented failure case.
    double ode_paper_mode_floor = 0.1;
    /// Relative error of shooting eigenvalues against closed forms.
    double shooting_rel = 1e-6;
    /// Convergence target for adaptive quadrature refinement.
    double quadrature = 1e-12;
};

inline Tolerances default_tolerances() { return Tolerances{}; }

} // namespace hulthen
