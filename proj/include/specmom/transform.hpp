#pragma once

#include "specmom/function.hpp"

namespace specmom {

/// Forward transform, normalized by 1/|G| so that entry 0 is the mean.
/// Evaluated axis by axis (the transform matrix is a Kronecker product of the
/// per-factor matrices, so a row-column pass per axis is exact); all-binary
/// groups take an in-place radix-2 butterfly path.
DenseFunction dft(const DenseFunction& f);

/// Inverse transform (adjoint, no normalization).
DenseFunction idft(const DenseFunction& fhat);

/// Spectrum with entry 0 reduced by a; everything else untouched.
DenseFunction diminish(const DenseFunction& fhat, MomentCenter a);
SparseSpectrum diminish(const SparseSpectrum& fhat, MomentCenter a);

/// Values listed in negative sequential order: out[j] = in[(-)j].
/// An involution; the identity map on all-binary groups.
DenseFunction reverse(const DenseFunction& v);
SparseSpectrum reverse(const SparseSpectrum& v);

/// Plain dot product sum_i f_i g_i (no conjugation).
cplx dot(const DenseFunction& f, const DenseFunction& g);

/// | <<f,g>> - |G| <<fhat, ghat_(-)>> | for primal-side inputs.
double parseval_gap(const DenseFunction& f, const DenseFunction& g);

DenseFunction to_dense(const SparseSpectrum& s);
SparseSpectrum to_sparse(const DenseFunction& dense, double threshold = 0.0);

/// Mean of a primal function / entry 0 of a spectrum.
cplx mean_of(const DenseFunction& f);

/// Largest |imaginary part| relative to the dominant magnitude.
bool is_real_valued(const DenseFunction& f, double rel_tol = 1e-9);

/// reverse(fhat) == conj(fhat) within rel_tol * max|coefficient|.
bool is_conjugate_symmetric(const DenseFunction& fhat, double rel_tol = 1e-9);

} // namespace specmom
