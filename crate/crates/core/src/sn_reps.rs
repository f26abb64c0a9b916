//! Irreducible representations of `S_n` in Young's orthogonal form, the
//! left-regular representation, and the standard representation on the
//! zero-sum subspace of C^n.
//!
//! Young's orthogonal form makes every irrep real orthogonal, so Laplacian
//! images are exactly Hermitian. Generator matrices for the adjacent
//! transpositions are precomputed at construction; arbitrary permutations
//! factor through `Permutation::adjacent_word`, so evaluation is pure and
//! safe under concurrent reads.

use std::collections::HashMap;
use std::fmt;

use ndarray::Array2;
use num_complex::Complex;

use crate::combinatorics::{tableaux_and_dimension, MultiPartition, Partition};
use crate::error::{Error, Result};
use crate::groups::{all_permutations, Permutation};
use crate::linalg::{self, CMat};
use crate::scalar::Scalar;

/// Origin metadata of a matrix representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepLabel {
    /// `tau_mu` for a partition of `n`.
    SnIrrep(Partition),
    /// The standard representation on the zero-sum subspace.
    SnStandard(usize),
    /// Left-regular representation of `S_n`.
    SnRegular(usize),
    /// `rho_mu` for a multi-partition indexing `Irr(W_n)`.
    WnIrrep(MultiPartition),
    /// Lift `tau ∘ pi` of an `S_n` representation to `W_n`.
    WnLift(Box<RepLabel>),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::SnIrrep(mu) => write!(f, "{mu}"),
            RepLabel::SnStandard(n) => write!(f, "std({n})"),
            RepLabel::SnRegular(n) => write!(f, "regular(S{n})"),
            RepLabel::WnIrrep(mv) => write!(f, "{mv}"),
            RepLabel::WnLift(inner) => write!(f, "lift[{inner}]"),
        }
    }
}

/// A matrix representation of `S_n`.
#[derive(Debug, Clone)]
pub struct SnRep<F: Scalar> {
    n: usize,
    dim: usize,
    label: RepLabel,
    kind: SnRepKind<F>,
}

#[derive(Debug, Clone)]
enum SnRepKind<F: Scalar> {
    /// Young's orthogonal form: matrices of `s_1, ..., s_{n-1}`.
    Yor { gens: Vec<CMat<F>> },
    /// Left multiplication on the indexed element list of `S_n`.
    Regular {
        perms: Vec<Permutation>,
        index: HashMap<Vec<usize>, usize>,
    },
    /// Conjugated permutation action on an orthonormal basis of the
    /// zero-sum subspace.
    Std { basis: Array2<F> },
}

impl<F: Scalar> SnRep<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    /// Whether this is the trivial irreducible representation.
    pub fn is_trivial(&self) -> bool {
        matches!(&self.label, RepLabel::SnIrrep(mu) if mu.num_rows() <= 1)
    }

    /// Unitary matrix of a permutation.
    pub fn evaluate(&self, sigma: &Permutation) -> CMat<F> {
        assert_eq!(sigma.degree(), self.n, "degree mismatch");
        match &self.kind {
            SnRepKind::Yor { gens } => {
                let mut m = linalg::identity::<F>(self.dim);
                for k in sigma.adjacent_word() {
                    m = m.dot(&gens[k]);
                }
                m
            }
            SnRepKind::Regular { perms, index } => {
                let mut m = linalg::zeros(self.dim, self.dim);
                for (col, g) in perms.iter().enumerate() {
                    let row = index[&sigma.compose(g).images().to_vec()];
                    m[[row, col]] = Complex::new(F::one(), F::zero());
                }
                m
            }
            SnRepKind::Std { basis } => {
                let n = self.n;
                let sigma_inv = sigma.inverse();
                let mut out = linalg::zeros(self.dim, self.dim);
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        let mut acc = F::zero();
                        for r in 0..n {
                            acc = acc + basis[[r, a]] * basis[[sigma_inv.apply(r), b]];
                        }
                        out[[a, b]] = Complex::new(acc, F::zero());
                    }
                }
                out
            }
        }
    }

    /// Character at a permutation.
    pub fn character(&self, sigma: &Permutation) -> Complex<F> {
        let m = self.evaluate(sigma);
        (0..self.dim)
            .map(|i| m[[i, i]])
            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
    }
}

/// Young's orthogonal form of the irrep indexed by `mu`.
///
/// On the tableau basis (last-letter order), the adjacent transposition
/// `s_k` acts with diagonal entry `1/r` for `r` the axial distance from `k`
/// to `k+1`, and off-diagonal `sqrt(1 - 1/r^2)` towards the tableau with
/// `k` and `k+1` exchanged.
pub fn sn_irrep<F: Scalar>(mu: &Partition) -> SnRep<F> {
    let n = mu.size();
    assert!(n >= 1, "sn_irrep needs a nonempty partition");
    let (tableaux, dim) = tableaux_and_dimension(mu);

    // Index tableaux by their row data for the swap lookup.
    let mut tab_index: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
    for (i, t) in tableaux.iter().enumerate() {
        tab_index.insert(t.rows().to_vec(), i);
    }

    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let mut m = linalg::zeros(dim, dim);
        for (ti, t) in tableaux.iter().enumerate() {
            let ck = t.content_of(k).unwrap();
            let ck1 = t.content_of(k + 1).unwrap();
            let r = ck1 - ck;
            let r_f = F::from_i64(r).unwrap();
            m[[ti, ti]] = Complex::new(F::one() / r_f, F::zero());
            if r.abs() >= 2 {
                let (rk, colk) = t.position_of(k).unwrap();
                let (rk1, colk1) = t.position_of(k + 1).unwrap();
                let mut rows = t.rows().to_vec();
                rows[rk][colk] = k + 1;
                rows[rk1][colk1] = k;
                let tj = tab_index[&rows];
                let off = (F::one() - F::one() / (r_f * r_f)).sqrt();
                m[[tj, ti]] = Complex::new(off, F::zero());
            }
        }
        gens.push(m);
    }

    SnRep {
        n,
        dim,
        label: RepLabel::SnIrrep(mu.clone()),
        kind: SnRepKind::Yor { gens },
    }
}

/// Size guard for the regular representation (dimension `n!`).
pub const REGULAR_MAX_N: usize = 5;

/// Left-regular representation of `S_n` on its lexicographically indexed
/// element list.
pub fn sn_regular_representation<F: Scalar>(n: usize) -> Result<SnRep<F>> {
    if !(2..=REGULAR_MAX_N).contains(&n) {
        return Err(Error::GuardExceeded {
            what: format!("regular representation of S_{n}"),
            size: n,
            limit: REGULAR_MAX_N,
        });
    }
    let perms = all_permutations(n);
    let index = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images().to_vec(), i))
        .collect();
    Ok(SnRep {
        n,
        dim: perms.len(),
        label: RepLabel::SnRegular(n),
        kind: SnRepKind::Regular { perms, index },
    })
}

/// The standard `(n-1)`-dimensional representation on
/// `V = {x in C^n : sum x_i = 0}`, with `S_n` permuting coordinates.
///
/// Realized on the Helmert orthonormal basis of `V`; isomorphic to
/// `sn_irrep((n-1,1))`, with equal characters `fix(sigma) - 1`.
pub fn std_rep<F: Scalar>(n: usize) -> SnRep<F> {
    assert!(n >= 2, "std_rep needs n >= 2");
    let mut basis = Array2::zeros((n, n - 1));
    for k in 1..n {
        let norm = (F::from_usize(k * (k + 1)).unwrap()).sqrt();
        for i in 0..k {
            basis[[i, k - 1]] = F::one() / norm;
        }
        basis[[k, k - 1]] = -F::from_usize(k).unwrap() / norm;
    }
    SnRep {
        n,
        dim: n - 1,
        label: RepLabel::SnStandard(n),
        kind: SnRepKind::Std { basis },
    }
}

/// All irreducible `S_n` representations in partition enumeration order.
pub fn all_sn_irreps<F: Scalar>(n: usize) -> Vec<SnRep<F>> {
    crate::combinatorics::enumerate_partitions(n)
        .iter()
        .map(sn_irrep)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{adjoint, identity, jacobi_hermitian, max_abs_diff};

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn trivial_and_sign() {
        let triv: SnRep<f64> = sn_irrep(&Partition::single_row(4));
        assert_eq!(triv.dimension(), 1);
        assert!(triv.is_trivial());
        for p in all_permutations(4) {
            assert!((triv.evaluate(&p)[[0, 0]].re - 1.0).abs() < 1e-15);
        }
        let sign: SnRep<f64> = sn_irrep(&Partition::new(vec![1, 1, 1, 1]).unwrap());
        assert_eq!(sign.dimension(), 1);
        for p in all_permutations(4) {
            let expected = p.parity() as f64;
            assert!((sign.evaluate(&p)[[0, 0]].re - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn two_one_at_adjacent_transposition() {
        // In last-letter tableau order, (1 2) acts as diag(1, -1).
        let rep: SnRep<f64> = sn_irrep(&Partition::new(vec![2, 1]).unwrap());
        let m = rep.evaluate(&Permutation::adjacent_transposition(3, 0));
        assert!((m[[0, 0]].re - 1.0).abs() < 1e-15);
        assert!((m[[1, 1]].re + 1.0).abs() < 1e-15);
        assert!(m[[0, 1]].norm() < 1e-15 && m[[1, 0]].norm() < 1e-15);
        // Its character at a transposition is 0.
        assert!(rep.character(&Permutation::adjacent_transposition(3, 0)).norm() < 1e-15);
    }

    #[test]
    fn yor_matrices_are_orthogonal_homomorphisms() {
        for n in 2..=5usize {
            for mu in crate::combinatorics::enumerate_partitions(n) {
                let rep: SnRep<f64> = sn_irrep(&mu);
                let perms = all_permutations(n);
                for p in perms.iter().take(8) {
                    let m = rep.evaluate(p);
                    let gram = adjoint(&m).dot(&m);
                    assert!(
                        max_abs_diff(&gram, &identity(rep.dimension())) < 1e-10,
                        "not orthogonal: mu={mu}, sigma={p}"
                    );
                }
                // Homomorphism on a handful of pairs.
                for (a, b) in [(1usize, 2usize), (2, 4), (3, 5), (0, 3)] {
                    if a >= perms.len() || b >= perms.len() {
                        continue;
                    }
                    let lhs = rep.evaluate(&perms[a].compose(&perms[b]));
                    let rhs = rep.evaluate(&perms[a]).dot(&rep.evaluate(&perms[b]));
                    assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn dimension_identity_sum_of_squares() {
        for n in 1..=5usize {
            let total: usize = all_sn_irreps::<f64>(n).iter().map(|r| r.dimension().pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 2..=4usize {
            let reps = all_sn_irreps::<f64>(n);
            let perms = all_permutations(n);
            for (i, a) in reps.iter().enumerate() {
                for (j, b) in reps.iter().enumerate() {
                    let mut inner = 0.0;
                    for p in &perms {
                        inner += a.character(p).re * b.character(p).re;
                    }
                    inner /= perms.len() as f64;
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (inner - expected).abs() < 1e-9,
                        "orthogonality fails at n={n}, ({i},{j}): {inner}"
                    );
                }
            }
        }
    }

    #[test]
    fn hook_character_is_fixed_points_minus_one() {
        for n in 2..=5usize {
            let rep: SnRep<f64> = sn_irrep(&Partition::standard_hook(n).unwrap());
            for p in all_permutations(n) {
                let expected = p.fixed_points() as f64 - 1.0;
                assert!(
                    (rep.character(&p).re - expected).abs() < 1e-10,
                    "n={n}, sigma={p}"
                );
            }
        }
    }

    #[test]
    fn std_rep_basics() {
        // n = 2: the sign character.
        let r2: SnRep<f64> = std_rep(2);
        assert_eq!(r2.dimension(), 1);
        let swap = Permutation::transposition(2, 0, 1);
        assert!((r2.evaluate(&swap)[[0, 0]].re + 1.0).abs() < 1e-14);

        // Character equals fix(sigma) - 1, and matches sn_irrep((n-1,1)).
        for n in 2..=5usize {
            let std_r: SnRep<f64> = std_rep(n);
            let hook: SnRep<f64> = sn_irrep(&Partition::standard_hook(n).unwrap());
            for p in all_permutations(n) {
                let cs = std_r.character(&p).re;
                assert!((cs - (p.fixed_points() as f64 - 1.0)).abs() < 1e-10);
                assert!((cs - hook.character(&p).re).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn std_rep_witness_vector_inner_products() {
        // v_{i0} = e_{i0} - (1/n) sum e_j has <v,v> = 1 - 1/n; expressing it
        // in the orthonormal basis of V preserves the norm.
        let n = 4usize;
        let rep: SnRep<f64> = std_rep(n);
        let basis = match &rep.kind {
            SnRepKind::Std { basis } => basis.clone(),
            _ => unreachable!(),
        };
        for i0 in 0..n {
            let v: Vec<f64> = (0..n)
                .map(|j| if j == i0 { 1.0 - 1.0 / n as f64 } else { -1.0 / n as f64 })
                .collect();
            let direct: f64 = v.iter().map(|x| x * x).sum();
            assert!((direct - (1.0 - 1.0 / n as f64)).abs() < 1e-14);
            let coords: Vec<f64> = (0..n - 1)
                .map(|a| (0..n).map(|r| basis[[r, a]] * v[r]).sum())
                .collect();
            let through_basis: f64 = coords.iter().map(|x| x * x).sum();
            assert!((direct - through_basis).abs() < 1e-12);
        }
    }

    #[test]
    fn regular_representation_properties() {
        let reg: SnRep<f64> = sn_regular_representation(2).unwrap();
        assert_eq!(reg.dimension(), 2);
        assert!(sn_regular_representation::<f64>(6).is_err());
        assert!(sn_regular_representation::<f64>(1).is_err());

        let reg3: SnRep<f64> = sn_regular_representation(3).unwrap();
        for p in all_permutations(3) {
            let tr = reg3.character(&p).re;
            let expected = if p.is_identity() { 6.0 } else { 0.0 };
            assert!((tr - expected).abs() < 1e-14, "regular character at {p}");
        }
        // Homomorphism spot check.
        let perms = all_permutations(3);
        let lhs = reg3.evaluate(&perms[1].compose(&perms[4]));
        let rhs = reg3.evaluate(&perms[1]).dot(&reg3.evaluate(&perms[4]));
        assert!(max_abs_diff(&lhs, &rhs) < 1e-14);
    }

    #[test]
    fn regular_image_of_central_element_matches_block_prediction() {
        // Sum of all transpositions is central in C[S_3]; its regular image
        // acts on the tau_mu block as the scalar |class| * chi(class) / dim,
        // i.e. 3 on trivial, -3 on sign, 0 on the 2-dim block (4 copies).
        let reg: SnRep<f64> = sn_regular_representation(3).unwrap();
        let mut m = crate::linalg::zeros::<f64>(6, 6);
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let t = Permutation::transposition(3, i, j);
            m = m + reg.evaluate(&t);
        }
        let (evals, _) = jacobi_hermitian(&m, false).unwrap();
        let expected = [-3.0, 0.0, 0.0, 0.0, 0.0, 3.0];
        for (a, b) in evals.iter().zip(expected.iter()) {
            assert!((a - b).abs() < 1e-10, "{evals:?}");
        }
    }
}
