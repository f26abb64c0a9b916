//! Hyperedge averaging operators `J_B` / `J_B^(G)`, hypergraph Laplacians
//! in arbitrary representations, Hermitian eigenvalues, and the smallest
//! non-trivial eigenvalue `lambda*_min`.
//!
//! In any unitary representation the averaging operator over a subgroup is
//! the orthogonal projection onto its fixed space, so Laplacians
//! `sum_B c_B (I - J_B)` are Hermitian positive semidefinite. `lambda*_min`
//! of a regular representation is taken operationally as the minimum of
//! `lambda_min` over the non-trivial irreducible constituents.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::{
    subgroup_elements, subgroup_generators, symmetric_subgroup_permutations, SubgroupKind,
    WreathElement,
};
use crate::hypergraph::WeightedHypergraph;
use crate::linalg::{self, CMat};
use crate::scalar::Scalar;
use crate::sn_reps::{RepLabel, SnRep};
use crate::subset::Subset;
use crate::wreath_reps::WnRep;

/// Which group algebra the averaging element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `J_B`: average over `S_B` (embedded as `(e; sigma)` on `W_n`).
    Symmetric,
    /// `J_B^(G)`: average over `W_B`.
    Wreath,
}

/// A representation of either `S_n` or `W_n`.
#[derive(Debug, Clone)]
pub enum Rep<F: Scalar> {
    Sn(SnRep<F>),
    Wn(WnRep<F>),
}

impl<F: Scalar> Rep<F> {
    pub fn n(&self) -> usize {
        match self {
            Rep::Sn(r) => r.n(),
            Rep::Wn(r) => r.n(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Rep::Sn(r) => r.dimension(),
            Rep::Wn(r) => r.dimension(),
        }
    }

    pub fn label(&self) -> RepLabel {
        match self {
            Rep::Sn(r) => r.label().clone(),
            Rep::Wn(r) => r.label().clone(),
        }
    }

    pub fn is_trivial_irrep(&self) -> bool {
        match self {
            Rep::Sn(r) => r.is_trivial(),
            Rep::Wn(r) => r.is_trivial(),
        }
    }

    /// Default Laplacian flavor for the ambient group.
    pub fn natural_flavor(&self) -> Flavor {
        match self {
            Rep::Sn(_) => Flavor::Symmetric,
            Rep::Wn(_) => Flavor::Wreath,
        }
    }
}

/// Direct subgroup averaging below this size; fixed-space computation above.
pub const PROJECTOR_AVERAGE_GUARD: usize = 100_000;

/// The matrix of the averaging element: `rho(J_B)` (symmetric flavor) or
/// `rho(J_B^(G))` (wreath flavor). Hermitian and idempotent: the orthogonal
/// projection onto the subgroup-fixed subspace.
pub fn averaging_projector<F: Scalar>(
    rep: &Rep<F>,
    b: &Subset,
    flavor: Flavor,
) -> Result<CMat<F>> {
    averaging_projector_with_guard(rep, b, flavor, PROJECTOR_AVERAGE_GUARD)
}

/// Averaging projector with an explicit size guard for the direct-average
/// route; mainly for exercising the fixed-space fallback in tests.
#[doc(hidden)]
pub fn averaging_projector_with_guard<F: Scalar>(
    rep: &Rep<F>,
    b: &Subset,
    flavor: Flavor,
    average_guard: usize,
) -> Result<CMat<F>> {
    let n = rep.n();
    if b.ground_size() != n {
        return Err(Error::mismatch(format!(
            "subset over [{}] with a representation of degree {n}",
            b.ground_size()
        )));
    }
    match (rep, flavor) {
        (Rep::Sn(tau), Flavor::Symmetric) => {
            let perms = symmetric_subgroup_permutations(n, b);
            let scale = F::one() / F::from_usize(perms.len()).unwrap();
            let mut acc = linalg::zeros(tau.dimension(), tau.dimension());
            for p in &perms {
                acc = acc + tau.evaluate(p);
            }
            Ok(acc.mapv(|z: Complex<F>| z * Complex::new(scale, F::zero())))
        }
        (Rep::Sn(_), Flavor::Wreath) => Err(Error::mismatch(
            "wreath flavor needs a W_n representation",
        )),
        (Rep::Wn(rho), Flavor::Symmetric) => {
            let perms = symmetric_subgroup_permutations(n, b);
            let scale = F::one() / F::from_usize(perms.len()).unwrap();
            let mut acc = linalg::zeros(rho.dimension(), rho.dimension());
            for p in &perms {
                acc = acc + rho.evaluate(&WreathElement::from_perm(rho.group(), p.clone()));
            }
            Ok(acc.mapv(|z: Complex<F>| z * Complex::new(scale, F::zero())))
        }
        (Rep::Wn(rho), Flavor::Wreath) => {
            let g = rho.group();
            let wb_order = g.order().pow(b.len() as u32) * (1..=b.len()).product::<usize>();
            if wb_order <= average_guard {
                let elements = subgroup_elements(g.as_ref(), n, SubgroupKind::WreathOnB, b)?;
                let scale = F::one() / F::from_usize(elements.len()).unwrap();
                let mut acc = linalg::zeros(rho.dimension(), rho.dimension());
                for w in &elements {
                    acc = acc + rho.evaluate(w);
                }
                Ok(acc.mapv(|z: Complex<F>| z * Complex::new(scale, F::zero())))
            } else {
                // Fixed space as the joint kernel of rho(g) - I over a
                // generating set of W_B, then P = V V^dagger.
                let gens = subgroup_generators(g.as_ref(), n, SubgroupKind::WreathOnB, b)?;
                let dim = rho.dimension();
                let id = linalg::identity::<F>(dim);
                let mut h = linalg::zeros(dim, dim);
                for w in &gens {
                    let d = rho.evaluate(w) - &id;
                    h = h + linalg::adjoint(&d).dot(&d);
                }
                let (evals, vecs) = linalg::jacobi_hermitian(&h, true)?;
                let vecs = vecs.expect("vectors requested");
                let scale = evals.last().copied().unwrap_or(F::zero());
                let thresh =
                    F::from_f64_lossy(1e-8) * (F::one() + scale.abs());
                let kernel: Vec<usize> = (0..dim).filter(|&i| evals[i] <= thresh).collect();
                let mut p = linalg::zeros(dim, dim);
                for &k in &kernel {
                    for r in 0..dim {
                        for c in 0..dim {
                            p[[r, c]] = p[[r, c]] + vecs[[r, k]] * vecs[[c, k]].conj();
                        }
                    }
                }
                Ok(p)
            }
        }
    }
}

/// `rho(L_Gamma)` (symmetric flavor) or `rho(L_Gamma^(G))` (wreath flavor):
/// `sum_B c_B (I - J_B)` over the weighted edges.
pub fn laplacian_matrix<F: Scalar>(
    rep: &Rep<F>,
    gamma: &WeightedHypergraph,
    flavor: Flavor,
) -> Result<CMat<F>> {
    if gamma.n() != rep.n() {
        return Err(Error::mismatch(format!(
            "hypergraph on [{}] with a representation of degree {}",
            gamma.n(),
            rep.n()
        )));
    }
    let dim = rep.dimension();
    let id = linalg::identity::<F>(dim);
    let mut lap = linalg::zeros(dim, dim);
    for (b, w) in gamma.edges() {
        let proj = averaging_projector(rep, &b, flavor)?;
        let wf = Complex::new(F::from_f64_lossy(w), F::zero());
        lap = lap + (&id - &proj).mapv(|z| z * wf);
    }
    Ok(lap)
}

/// All eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi.
///
/// Rejects matrices whose deviation from Hermitian exceeds
/// `1e-8 * (1 + max|entry|)`; the input is symmetrized to `(M + M†)/2`
/// before solving.
pub fn hermitian_eigenvalues<F: Scalar>(m: &CMat<F>) -> Result<Vec<F>> {
    let guard = F::from_f64_lossy(1e-8).max(F::epsilon() * F::from_f64_lossy(8.0));
    let dev = linalg::hermitian_deviation(m);
    if dev > guard * (F::one() + linalg::max_abs(m)) {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64_lossy(),
        });
    }
    let half = Complex::new(F::from_f64_lossy(0.5), F::zero());
    let sym = (m + &linalg::adjoint(m)).mapv(|z| z * half);
    let (evals, _) = linalg::jacobi_hermitian(&sym, false)?;
    Ok(evals)
}

/// Spectrum of one representation's Laplacian.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub rep_label: String,
    pub dimension: usize,
    pub eigenvalues: Vec<f64>,
    pub lambda_min: f64,
    pub is_trivial_rep: bool,
}

/// Builds the Laplacian in `rep` and diagonalizes it.
pub fn spectral_report<F: Scalar>(
    rep: &Rep<F>,
    gamma: &WeightedHypergraph,
    flavor: Flavor,
) -> Result<SpectralReport> {
    let lap = laplacian_matrix(rep, gamma, flavor)?;
    let evals = hermitian_eigenvalues(&lap)?;
    let eigenvalues: Vec<f64> = evals.iter().map(|x| x.to_f64_lossy()).collect();
    Ok(SpectralReport {
        rep_label: rep.label().to_string(),
        dimension: rep.dimension(),
        lambda_min: eigenvalues.first().copied().unwrap_or(f64::INFINITY),
        eigenvalues,
        is_trivial_rep: rep.is_trivial_irrep(),
    })
}

/// The smallest non-trivial eigenvalue over an enumerated irrep list, with
/// every irrep attaining it (within tolerance) as a witness.
///
/// `value` is `None` when the list holds only trivial representations (the
/// "infinite" marker).
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaStar {
    pub value: Option<f64>,
    pub witnesses: Vec<String>,
    /// Per-irrep spectra, in input order.
    pub reports: Vec<SpectralReport>,
}

/// `lambda*_min` over a full list of irreducibles of `S_n` or `W_n`: the
/// minimum of `lambda_min(rho(L))` over the non-trivial entries. Each irrep
/// uses its natural Laplacian flavor.
pub fn lambda_min_star_regular<F: Scalar>(
    irreps: &[Rep<F>],
    gamma: &WeightedHypergraph,
    witness_tol: f64,
) -> Result<LambdaStar> {
    if irreps.is_empty() {
        return Err(Error::invalid("empty irrep list"));
    }
    let reports: Vec<SpectralReport> = irreps
        .par_iter()
        .map(|rep| spectral_report(rep, gamma, rep.natural_flavor()))
        .collect::<Result<Vec<_>>>()?;
    let nontrivial: Vec<&SpectralReport> =
        reports.iter().filter(|r| !r.is_trivial_rep).collect();
    if nontrivial.is_empty() {
        return Ok(LambdaStar {
            value: None,
            witnesses: Vec::new(),
            reports,
        });
    }
    let value = nontrivial
        .iter()
        .map(|r| r.lambda_min)
        .fold(f64::INFINITY, f64::min);
    let tol = witness_tol * (1.0 + value.abs());
    let witnesses = nontrivial
        .iter()
        .filter(|r| (r.lambda_min - value).abs() <= tol)
        .map(|r| r.rep_label.clone())
        .collect();
    Ok(LambdaStar {
        value: Some(value),
        witnesses,
        reports,
    })
}

/// Sorted-pairwise multiset comparison with tolerance
/// `tol * (1 + max|lambda|)`; returns the largest pairwise deviation on
/// success.
pub fn eigen_multisets_equal(a: &[f64], b: &[f64], tol: f64) -> (bool, f64) {
    if a.len() != b.len() {
        return (false, f64::INFINITY);
    }
    let mut aa = a.to_vec();
    let mut bb = b.to_vec();
    aa.sort_by(|x, y| x.partial_cmp(y).unwrap());
    bb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let scale = aa
        .iter()
        .chain(bb.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()));
    let tol_eff = tol * (1.0 + scale);
    let mut max_dev = 0.0f64;
    for (x, y) in aa.iter().zip(bb.iter()) {
        max_dev = max_dev.max((x - y).abs());
    }
    (max_dev <= tol_eff, max_dev)
}
