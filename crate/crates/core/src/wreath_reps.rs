//! Irreducible representations of `W_n = G wr S_n`, indexed by
//! multi-partitions, via induction from Young-type subgroups.
//!
//! For a multi-partition with support `theta_1 < ... < theta_k` (ascending
//! base-irrep index) and block sizes `mot = (m_1, ..., m_k)`, the base
//! `G^n`-irrep is the tensor power `vartheta = theta_1^{m_1} x ... x
//! theta_k^{m_k}` on consecutive blocks. `W_mot = G^n ⋊ S_mot` acts on
//! `V_vartheta` with `G^n` componentwise and `S_mot` permuting tensor
//! coordinates; the outer factor is the lifted tensor product of Young's
//! orthogonal forms for the slot partitions. Induction along a left-coset
//! transversal of `S_n / S_mot` (lexicographically minimal representatives)
//! yields the irrep. The induced basis is transversal-major, then the
//! tensor basis of `V_vartheta ⊗ V_tau`, which makes `rho(g; e)`
//! block-diagonal.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use num_complex::Complex;

use crate::combinatorics::MultiPartition;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroupTable, Permutation, WreathElement};
use crate::linalg::{self, CMat};
use crate::scalar::Scalar;
use crate::sn_reps::{sn_irrep, RepLabel, SnRep};

/// Recommended ceiling on `sum dim^2 = |G|^n n!` for full enumeration.
pub const ENUM_SUM_DIM_SQ_GUARD: usize = 10_000;

/// Ceiling on `|G|^n` for the direct character-averaging projector; above
/// it the factored per-coordinate product is used.
pub const GN_DIRECT_GUARD: usize = 1_000_000;

/// Block data for `S_mot <= S_n` and a left-coset transversal of
/// `S_n / S_mot`.
#[derive(Debug, Clone)]
pub struct YoungSubgroupContext {
    n: usize,
    m_vec: Vec<usize>,
    block_ranges: Vec<Range<usize>>,
    transversal: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
}

impl YoungSubgroupContext {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m_vec(&self) -> &[usize] {
        &self.m_vec
    }

    pub fn block_ranges(&self) -> &[Range<usize>] {
        &self.block_ranges
    }

    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    /// Position of a transversal member.
    pub fn index_of(&self, t: &Permutation) -> Option<usize> {
        self.index.get(t.images()).copied()
    }

    /// The lexicographically minimal representative of `p S_mot`: within
    /// each block the image values are sorted ascending.
    pub fn coset_representative(&self, p: &Permutation) -> Permutation {
        let mut images = p.images().to_vec();
        for range in &self.block_ranges {
            images[range.clone()].sort_unstable();
        }
        Permutation::from_images(images).expect("sorting block images preserves bijectivity")
    }

    /// Whether `p` preserves every block setwise.
    pub fn is_in_young_subgroup(&self, p: &Permutation) -> bool {
        self.block_ranges.iter().all(|range| {
            range.clone().all(|i| range.contains(&p.apply(i)))
        })
    }
}

/// Transversal of the left cosets of `S_mot` in `S_n`, one representative
/// per coset, lexicographically minimal in image sequence.
pub fn coset_transversal(n: usize, m_vec: &[usize]) -> Result<YoungSubgroupContext> {
    if m_vec.is_empty() || m_vec.iter().any(|&m| m == 0) {
        return Err(Error::invalid(format!("bad composition {m_vec:?}")));
    }
    if m_vec.iter().sum::<usize>() != n {
        return Err(Error::invalid(format!(
            "composition {m_vec:?} does not sum to {n}"
        )));
    }
    let mut block_ranges = Vec::with_capacity(m_vec.len());
    let mut start = 0;
    for &m in m_vec {
        block_ranges.push(start..start + m);
        start += m;
    }

    // A representative is minimal iff its images ascend within each block;
    // equivalently: split the value set into blocks, each sorted.
    let mut transversal = Vec::new();
    fn rec(
        block: usize,
        m_vec: &[usize],
        available: &mut Vec<usize>,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if block == m_vec.len() {
            out.push(images.clone());
            return;
        }
        let m = m_vec[block];
        let avail = available.clone();
        let mut chosen = vec![0usize; m];
        fn choose(
            from: &[usize],
            start: usize,
            slot: usize,
            chosen: &mut Vec<usize>,
            cont: &mut dyn FnMut(&[usize]),
        ) {
            if slot == chosen.len() {
                cont(chosen);
                return;
            }
            for k in start..from.len() {
                chosen[slot] = from[k];
                choose(from, k + 1, slot + 1, chosen, cont);
            }
        }
        let mut results: Vec<Vec<usize>> = Vec::new();
        choose(&avail, 0, 0, &mut chosen, &mut |c| results.push(c.to_vec()));
        for subset in results {
            images.extend_from_slice(&subset);
            available.retain(|v| !subset.contains(v));
            rec(block + 1, m_vec, available, images, out);
            for v in &subset {
                available.push(*v);
            }
            available.sort_unstable();
            images.truncate(images.len() - m);
        }
    }
    let mut image_lists = Vec::new();
    rec(
        0,
        m_vec,
        &mut (0..n).collect(),
        &mut Vec::new(),
        &mut image_lists,
    );
    for images in image_lists {
        transversal.push(Permutation::from_images(images)?);
    }

    let index = transversal
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images().to_vec(), i))
        .collect();
    Ok(YoungSubgroupContext {
        n,
        m_vec: m_vec.to_vec(),
        block_ranges,
        transversal,
        index,
    })
}

/// Solves `w t = t' w'` with `t'` in the transversal and `w'` in `W_mot`.
///
/// No base-group products are needed: `w t = (g; sigma t)`, and the unique
/// factorization is `t' = rep(sigma t)`, `w' = (g ∘ t'; t'⁻¹ sigma t)`.
pub fn factorize_through_transversal(
    w: &WreathElement,
    t: &Permutation,
    ctx: &YoungSubgroupContext,
) -> (Permutation, WreathElement) {
    let p = w.perm.compose(t);
    let t_prime = ctx.coset_representative(&p);
    let s = t_prime.inverse().compose(&p);
    let gvec = (0..w.degree()).map(|i| w.gvec[t_prime.apply(i)]).collect();
    (
        t_prime,
        WreathElement::new(gvec, s).expect("factorization preserves degree"),
    )
}

#[derive(Debug, Clone)]
struct InducedData<F: Scalar> {
    mu_vec: MultiPartition,
    ctx: YoungSubgroupContext,
    /// Base-irrep index per coordinate of `[n]` (the signature of vartheta).
    coord_irrep: Vec<usize>,
    strides: Vec<usize>,
    vtheta_dim: usize,
    outer: Vec<SnRep<F>>,
    outer_dim: usize,
}

/// A matrix representation of `W_n`.
#[derive(Debug, Clone)]
pub struct WnRep<F: Scalar> {
    group: Arc<FiniteGroupTable<F>>,
    n: usize,
    dim: usize,
    label: RepLabel,
    kind: WnRepKind<F>,
}

#[derive(Debug, Clone)]
enum WnRepKind<F: Scalar> {
    Induced(InducedData<F>),
    Lift { inner: SnRep<F> },
}

impl<F: Scalar> WnRep<F> {
    pub fn group(&self) -> &Arc<FiniteGroupTable<F>> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    /// The indexing multi-partition, when this is a constructed irrep.
    pub fn mu_vec(&self) -> Option<&MultiPartition> {
        match &self.kind {
            WnRepKind::Induced(d) => Some(&d.mu_vec),
            WnRepKind::Lift { .. } => None,
        }
    }

    /// Base-irrep index per coordinate of the underlying `G^n`-irrep.
    pub fn theta_signature(&self) -> Option<&[usize]> {
        match &self.kind {
            WnRepKind::Induced(d) => Some(&d.coord_irrep),
            WnRepKind::Lift { .. } => None,
        }
    }

    /// Whether the representation factors through `pi: W_n -> S_n`.
    pub fn is_lift(&self) -> bool {
        match &self.kind {
            WnRepKind::Induced(d) => d.mu_vec.is_lift(),
            WnRepKind::Lift { .. } => true,
        }
    }

    /// Whether this is the trivial irreducible representation of `W_n`.
    pub fn is_trivial(&self) -> bool {
        match &self.kind {
            WnRepKind::Induced(d) => d.mu_vec.is_lift() && d.mu_vec.slot(0).num_rows() <= 1,
            WnRepKind::Lift { inner } => inner.is_trivial(),
        }
    }

    /// Unitary matrix of a wreath element.
    pub fn evaluate(&self, w: &WreathElement) -> CMat<F> {
        assert_eq!(w.degree(), self.n, "degree mismatch");
        match &self.kind {
            WnRepKind::Lift { inner } => inner.evaluate(&w.perm),
            WnRepKind::Induced(data) => {
                let db = data.vtheta_dim * data.outer_dim;
                let mut out = linalg::zeros(self.dim, self.dim);
                for (ti, t) in data.ctx.transversal().iter().enumerate() {
                    let (t_prime, w_prime) = factorize_through_transversal(w, t, &data.ctx);
                    let tpi = data
                        .ctx
                        .index_of(&t_prime)
                        .expect("coset representative is in the transversal");
                    let mv = vartheta_matrix(&self.group, data, &w_prime);
                    let mt = outer_matrix(data, &w_prime.perm);
                    let block = linalg::kron(&mv, &mt);
                    for r in 0..db {
                        for c in 0..db {
                            out[[tpi * db + r, ti * db + c]] = block[[r, c]];
                        }
                    }
                }
                out
            }
        }
    }

    /// Character at a wreath element.
    pub fn character(&self, w: &WreathElement) -> Complex<F> {
        let m = self.evaluate(w);
        (0..self.dim)
            .map(|i| m[[i, i]])
            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
    }
}

/// `varrho(w') = vartheta(h) · s_hat` on the tensor basis of `V_vartheta`.
fn vartheta_matrix<F: Scalar>(
    group: &FiniteGroupTable<F>,
    data: &InducedData<F>,
    w_prime: &WreathElement,
) -> CMat<F> {
    let n = data.coord_irrep.len();
    // Componentwise G^n action.
    let mut m_theta = linalg::identity::<F>(1);
    for t in 0..n {
        let irrep = &group.irreps()[data.coord_irrep[t]];
        m_theta = linalg::kron(&m_theta, &irrep.matrices[w_prime.gvec[t]]);
    }
    if w_prime.perm.is_identity() {
        return m_theta;
    }
    // Coordinate permutation: s_hat e_a = e_{a ∘ s^{-1}}.
    let d = data.vtheta_dim;
    let s_inv = w_prime.perm.inverse();
    let mut s_hat = linalg::zeros(d, d);
    for a_idx in 0..d {
        let mut rem = a_idx;
        let mut tuple = vec![0usize; n];
        for t in 0..n {
            tuple[t] = rem / data.strides[t];
            rem %= data.strides[t];
        }
        let mut b_idx = 0;
        for t in 0..n {
            b_idx += tuple[s_inv.apply(t)] * data.strides[t];
        }
        s_hat[[b_idx, a_idx]] = Complex::new(F::one(), F::zero());
    }
    m_theta.dot(&s_hat)
}

/// Lifted outer factor `tau_mot(s)`: Kronecker product over support blocks
/// of Young's orthogonal form evaluated at the block restriction of `s`.
fn outer_matrix<F: Scalar>(data: &InducedData<F>, s: &Permutation) -> CMat<F> {
    let mut m = linalg::identity::<F>(1);
    for (slot, range) in data.ctx.block_ranges().iter().enumerate() {
        let rep = &data.outer[slot];
        let images: Vec<usize> = range.clone().map(|i| s.apply(i) - range.start).collect();
        let block_perm = Permutation::from_images(images)
            .expect("Young-subgroup element preserves blocks");
        m = linalg::kron(&m, &rep.evaluate(&block_perm));
    }
    m
}

/// Constructs the irreducible `W_n`-representation indexed by `mu_vec`,
/// with the support ordered by ascending base-irrep index.
pub fn build_wreath_irrep<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    mu_vec: &MultiPartition,
) -> Result<WnRep<F>> {
    let support = mu_vec.support();
    build_with_support_order(g, mu_vec, &support)
}

/// Construction with an explicit support order; the resulting
/// representations for different orders are isomorphic (equal characters),
/// which the test suite checks. Not part of the stable API.
#[doc(hidden)]
pub fn build_with_support_order<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    mu_vec: &MultiPartition,
    support: &[usize],
) -> Result<WnRep<F>> {
    if mu_vec.num_slots() != g.num_irreps() {
        return Err(Error::mismatch(format!(
            "multi-partition has {} slots, group has {} irreps",
            mu_vec.num_slots(),
            g.num_irreps()
        )));
    }
    let n = mu_vec.order();
    if n < 1 {
        return Err(Error::invalid("multi-partition of order 0"));
    }
    {
        let mut sorted = support.to_vec();
        sorted.sort_unstable();
        if sorted != mu_vec.support() {
            return Err(Error::mismatch("support order must enumerate the support"));
        }
    }

    let m_vec: Vec<usize> = support.iter().map(|&t| mu_vec.slot(t).size()).collect();
    let ctx = coset_transversal(n, &m_vec)?;

    let mut coord_irrep = Vec::with_capacity(n);
    for (slot, &theta) in support.iter().enumerate() {
        for _ in 0..m_vec[slot] {
            coord_irrep.push(theta);
        }
    }
    let coord_dim: Vec<usize> = coord_irrep.iter().map(|&t| g.irrep_dim(t)).collect();
    let mut strides = vec![1usize; n];
    for t in (0..n.saturating_sub(1)).rev() {
        strides[t] = strides[t + 1] * coord_dim[t + 1];
    }
    let vtheta_dim: usize = coord_dim.iter().product();

    let outer: Vec<SnRep<F>> = support.iter().map(|&t| sn_irrep(mu_vec.slot(t))).collect();
    let outer_dim: usize = outer.iter().map(|r| r.dimension()).product();

    let dim = ctx.transversal().len() * vtheta_dim * outer_dim;
    Ok(WnRep {
        group: Arc::clone(g),
        n,
        dim,
        label: RepLabel::WnIrrep(mu_vec.clone()),
        kind: WnRepKind::Induced(InducedData {
            mu_vec: mu_vec.clone(),
            ctx,
            coord_irrep,
            strides,
            vtheta_dim,
            outer,
            outer_dim,
        }),
    })
}

/// Lift `tau ∘ pi` of an `S_n` representation along `pi: W_n -> S_n`.
pub fn lift_representation<F: Scalar>(tau: SnRep<F>, g: &Arc<FiniteGroupTable<F>>) -> WnRep<F> {
    WnRep {
        group: Arc::clone(g),
        n: tau.n(),
        dim: tau.dimension(),
        label: RepLabel::WnLift(Box::new(tau.label().clone())),
        kind: WnRepKind::Lift { inner: tau },
    }
}

/// All irreducible representations of `Irr(G^n)` as index vectors, mixed
/// radix ascending with coordinate 0 most significant.
pub fn theta_vectors<F: Scalar>(g: &FiniteGroupTable<F>, n: usize) -> Vec<Vec<usize>> {
    let k = g.num_irreps();
    let total = k.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0usize; n];
            for i in (0..n).rev() {
                v[i] = idx % k;
                idx /= k;
            }
            v
        })
        .collect()
}

/// Strategy for the `G^n`-isotypic projector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectorStrategy {
    /// Direct average below [`GN_DIRECT_GUARD`], else factored.
    Auto,
    /// `P_theta = (dim theta / |G^n|) sum_g chi_theta(g^{-1}) rho(g; e)`.
    DirectAverage,
    /// Product of per-coordinate averaging projectors; identical result.
    FactoredPerCoordinate,
}

/// Orthogonal projector onto the `theta`-isotypic component of the
/// restriction of `rho` to `G^n`.
pub fn gn_isotypic_projector<F: Scalar>(rho: &WnRep<F>, theta: &[usize]) -> Result<CMat<F>> {
    gn_isotypic_projector_with(rho, theta, ProjectorStrategy::Auto)
}

pub fn gn_isotypic_projector_with<F: Scalar>(
    rho: &WnRep<F>,
    theta: &[usize],
    strategy: ProjectorStrategy,
) -> Result<CMat<F>> {
    let n = rho.n();
    let g = rho.group();
    if theta.len() != n {
        return Err(Error::mismatch(format!(
            "theta has {} coordinates, expected {n}",
            theta.len()
        )));
    }
    if theta.iter().any(|&t| t >= g.num_irreps()) {
        return Err(Error::invalid("theta coordinate outside Irr(G)"));
    }

    let gn_order = g.order().checked_pow(n as u32).unwrap_or(usize::MAX);
    let direct = match strategy {
        ProjectorStrategy::Auto => gn_order <= GN_DIRECT_GUARD,
        ProjectorStrategy::DirectAverage => {
            if gn_order > GN_DIRECT_GUARD {
                return Err(Error::GuardExceeded {
                    what: "direct G^n average".into(),
                    size: gn_order,
                    limit: GN_DIRECT_GUARD,
                });
            }
            true
        }
        ProjectorStrategy::FactoredPerCoordinate => false,
    };

    let dim = rho.dimension();
    if direct {
        let dim_theta: usize = theta.iter().map(|&t| g.irrep_dim(t)).product();
        let mut acc = linalg::zeros(dim, dim);
        let k = g.order();
        let mut gvec = vec![0usize; n];
        loop {
            // chi_theta(g^{-1}) = prod_i chi_{theta_i}(g_i^{-1})
            let mut chi = Complex::new(F::one(), F::zero());
            for i in 0..n {
                chi = chi * g.char_value(theta[i], g.inv(gvec[i]));
            }
            let m = rho.evaluate(&WreathElement::from_gvec(gvec.clone()));
            acc = acc + m.mapv(|z| z * chi);

            // Mixed-radix increment.
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                gvec[i] += 1;
                if gvec[i] < k {
                    break;
                }
                gvec[i] = 0;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
        let scale = F::from_usize(dim_theta).unwrap() / F::from_usize(gn_order).unwrap();
        Ok(acc.mapv(|z: Complex<F>| z * Complex::new(scale, F::zero())))
    } else {
        // Product of commuting per-coordinate projectors.
        let mut p = linalg::identity::<F>(dim);
        let k = g.order();
        let order_f = F::from_usize(k).unwrap();
        for i in 0..n {
            let mut acc = linalg::zeros(dim, dim);
            for h in 0..k {
                let mut gvec = vec![g.identity(); n];
                gvec[i] = h;
                let chi = g.char_value(theta[i], g.inv(h));
                let m = rho.evaluate(&WreathElement::from_gvec(gvec));
                acc = acc + m.mapv(|z| z * chi);
            }
            let scale = F::from_usize(g.irrep_dim(theta[i])).unwrap() / order_f;
            p = p.dot(&acc.mapv(|z: Complex<F>| z * Complex::new(scale, F::zero())));
        }
        Ok(p)
    }
}

/// Enumerates `Irr(W_n)` as one constructed irrep per multi-partition of
/// order `n`, in multi-partition enumeration order.
///
/// `max_sum_dim_sq` overrides the default guard on `|G|^n n!`.
pub fn enumerate_wn_irreps<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    n: usize,
    max_sum_dim_sq: Option<usize>,
) -> Result<Vec<WnRep<F>>> {
    let limit = max_sum_dim_sq.unwrap_or(ENUM_SUM_DIM_SQ_GUARD);
    let order = g
        .order()
        .checked_pow(n as u32)
        .and_then(|x| x.checked_mul((1..=n).product::<usize>()))
        .unwrap_or(usize::MAX);
    if order > limit {
        return Err(Error::GuardExceeded {
            what: format!("enumeration of Irr({} wr S_{n}) with sum dim^2", g.name()),
            size: order,
            limit,
        });
    }
    crate::combinatorics::enumerate_multipartitions(g.num_irreps(), n)
        .iter()
        .map(|mv| build_wreath_irrep(g, mv))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        all_permutations, all_wreath_elements, builtin_group, wreath_multiply,
    };
    use crate::linalg::{adjoint, identity, max_abs, max_abs_diff};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c2() -> Arc<FiniteGroupTable<f64>> {
        Arc::new(builtin_group("C2").unwrap())
    }

    fn c3() -> Arc<FiniteGroupTable<f64>> {
        Arc::new(builtin_group("C3").unwrap())
    }

    #[test]
    fn transversal_identity_block() {
        let ctx = coset_transversal(4, &[4]).unwrap();
        assert_eq!(ctx.transversal().len(), 1);
        assert!(ctx.transversal()[0].is_identity());
    }

    #[test]
    fn transversal_n3_blocks_2_1() {
        let ctx = coset_transversal(3, &[2, 1]).unwrap();
        assert_eq!(ctx.transversal().len(), 3);
        // Cosets of S_{1,2} are distinguished by t(3); reps are lex-minimal.
        let images: Vec<Vec<usize>> = ctx.transversal().iter().map(|t| t.images().to_vec()).collect();
        assert_eq!(images, vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 2, 0]]);
        let t3: Vec<usize> = ctx.transversal().iter().map(|t| t.apply(2)).collect();
        assert_eq!(t3, vec![2, 1, 0]);
    }

    #[test]
    fn transversal_n4_blocks_2_2_exhaustive_coset_oracle() {
        let ctx = coset_transversal(4, &[2, 2]).unwrap();
        assert_eq!(ctx.transversal().len(), 6);
        // Partition all of S_4 into cosets by the sorted-block-image key and
        // check each coset holds exactly one transversal member.
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for p in all_permutations(4) {
            let rep = ctx.coset_representative(&p);
            *counts.entry(rep.images().to_vec()).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 6);
        for t in ctx.transversal() {
            assert_eq!(counts[t.images()], 4); // |S_mot| = 2! * 2!
            // Lex-minimality within the coset.
            for p in all_permutations(4) {
                if ctx.coset_representative(&p).images() == t.images() {
                    assert!(t.images() <= p.images());
                }
            }
        }
    }

    #[test]
    fn factorization_solves_wt_eq_tw() {
        let g = c2();
        let n = 3;
        let ctx = coset_transversal(n, &[2, 1]).unwrap();
        for w in all_wreath_elements(&g, n) {
            for t in ctx.transversal() {
                let (tp, wp) = factorize_through_transversal(&w, t, &ctx);
                assert!(ctx.index_of(&tp).is_some());
                assert!(ctx.is_in_young_subgroup(&wp.perm));
                let lhs =
                    wreath_multiply(&g, &w, &WreathElement::from_perm(&g, t.clone())).unwrap();
                let rhs = wreath_multiply(
                    &g,
                    &WreathElement::from_perm(&g, tp.clone()),
                    &wp,
                )
                .unwrap();
                assert_eq!(lhs, rhs, "w={w}, t={t}");
            }
        }
    }

    #[test]
    fn factorization_of_pure_gvec() {
        // g * t = t * (g ∘ t): t' = t and w' = (g ∘ t; e).
        let g = c2();
        let ctx = coset_transversal(3, &[2, 1]).unwrap();
        for gvec in crate::groups::all_gvecs(&g, 3) {
            let w = WreathElement::from_gvec(gvec.clone());
            for t in ctx.transversal() {
                let (tp, wp) = factorize_through_transversal(&w, t, &ctx);
                assert_eq!(&tp, t);
                assert!(wp.perm.is_identity());
                let expected: Vec<usize> = (0..3).map(|i| gvec[t.apply(i)]).collect();
                assert_eq!(wp.gvec, expected);
            }
        }
    }

    #[test]
    fn factorization_of_identity() {
        let g = c2();
        let ctx = coset_transversal(3, &[2, 1]).unwrap();
        let w = WreathElement::identity(&g, 3);
        for t in ctx.transversal() {
            let (tp, wp) = factorize_through_transversal(&w, t, &ctx);
            assert_eq!(&tp, t);
            assert!(wp.is_identity(&g));
        }
    }

    #[test]
    fn c2_n2_dimensions_and_sum_of_squares() {
        let g = c2();
        let irreps = enumerate_wn_irreps(&g, 2, None).unwrap();
        assert_eq!(irreps.len(), 5);
        let dims: Vec<usize> = irreps.iter().map(|r| r.dimension()).collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 1, 1, 2]);
        let total: usize = dims.iter().map(|d| d * d).sum();
        assert_eq!(total, 8);
        assert_eq!(irreps.iter().filter(|r| r.is_lift()).count(), 2);
        assert_eq!(irreps.iter().filter(|r| r.is_trivial()).count(), 1);
    }

    #[test]
    fn sum_dim_sq_various_groups() {
        let cases: Vec<(Arc<FiniteGroupTable<f64>>, usize, usize)> = vec![
            (c2(), 3, 48),
            (c3(), 2, 18),
            (Arc::new(builtin_group("S3").unwrap()), 2, 72),
        ];
        for (g, n, expected) in cases {
            let irreps = enumerate_wn_irreps(&g, n, None).unwrap();
            let total: usize = irreps.iter().map(|r| r.dimension().pow(2)).sum();
            assert_eq!(total, expected, "G={}, n={n}", g.name());
        }
    }

    #[test]
    fn enumeration_guard_trips() {
        let g = c2();
        assert!(matches!(
            enumerate_wn_irreps(&g, 8, None),
            Err(Error::GuardExceeded { .. })
        ));
        // Override admits it in principle (but we do not build it here).
        assert!(enumerate_wn_irreps(&g, 5, Some(100_000)).is_ok());
    }

    #[test]
    fn homomorphism_and_unitarity_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (g, n) in [(c2(), 2usize), (c3(), 2), (c2(), 3)] {
            let elements = all_wreath_elements(&g, n);
            for rho in enumerate_wn_irreps(&g, n, None).unwrap() {
                for _ in 0..40 {
                    let x = &elements[rng.gen_range(0..elements.len())];
                    let y = &elements[rng.gen_range(0..elements.len())];
                    let xy = wreath_multiply(&g, x, y).unwrap();
                    let lhs = rho.evaluate(&xy);
                    let rhs = rho.evaluate(x).dot(&rho.evaluate(y));
                    assert!(
                        max_abs_diff(&lhs, &rhs) < 1e-9,
                        "homomorphism fails for {} at x={x}, y={y}",
                        rho.label()
                    );
                }
                for _ in 0..10 {
                    let x = &elements[rng.gen_range(0..elements.len())];
                    let m = rho.evaluate(x);
                    let gram = adjoint(&m).dot(&m);
                    assert!(max_abs_diff(&gram, &identity(rho.dimension())) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn irreducibility_certificate_and_distinctness() {
        for (g, n) in [(c2(), 2usize), (c3(), 2), (c2(), 3)] {
            let elements = all_wreath_elements(&g, n);
            let irreps = enumerate_wn_irreps(&g, n, None).unwrap();
            let chars: Vec<Vec<Complex<f64>>> = irreps
                .iter()
                .map(|rho| elements.iter().map(|w| rho.character(w)).collect())
                .collect();
            let order = elements.len() as f64;
            for (i, chi) in chars.iter().enumerate() {
                let norm: f64 = chi.iter().map(|z| z.norm_sqr()).sum::<f64>() / order;
                assert!(
                    (norm - 1.0).abs() < 1e-8,
                    "character norm {norm} for {}",
                    irreps[i].label()
                );
                for (j, chj) in chars.iter().enumerate().skip(i + 1) {
                    let inner: Complex<f64> = chi
                        .iter()
                        .zip(chj.iter())
                        .map(|(a, b)| a * b.conj())
                        .sum::<Complex<f64>>()
                        / Complex::new(order, 0.0);
                    assert!(
                        inner.norm() < 1e-8,
                        "characters of {} and {} not orthogonal",
                        irreps[i].label(),
                        irreps[j].label()
                    );
                }
            }
        }
    }

    #[test]
    fn lift_matrices_equal_yor_exactly() {
        // supp = {triv}: the induced construction reproduces tau_mu ∘ pi.
        let g = c2();
        let n = 3;
        for mu in crate::combinatorics::enumerate_partitions(n) {
            let mut slots = vec![mu.clone()];
            slots.push(crate::combinatorics::Partition::empty());
            let mv = MultiPartition::new(slots);
            let rho = build_wreath_irrep(&g, &mv).unwrap();
            assert!(rho.is_lift());
            let tau = sn_irrep::<f64>(&mu);
            assert_eq!(rho.dimension(), tau.dimension());
            for w in all_wreath_elements(&g, n).iter().step_by(7) {
                let lhs = rho.evaluate(w);
                let rhs = tau.evaluate(&w.perm);
                assert!(max_abs_diff(&lhs, &rhs) < 1e-14);
            }
        }
    }

    #[test]
    fn lift_representation_kernel_is_gn() {
        let g = c2();
        let tau = sn_irrep::<f64>(&crate::combinatorics::Partition::new(vec![2, 1]).unwrap());
        let rho = lift_representation(tau, &g);
        for gvec in crate::groups::all_gvecs(&g, 3) {
            let m = rho.evaluate(&WreathElement::from_gvec(gvec));
            assert!(max_abs_diff(&m, &identity(rho.dimension())) < 1e-15);
        }
    }

    #[test]
    fn isotypic_projectors_lift_and_nonlift() {
        let g = c2();
        let n = 2;
        let irreps = enumerate_wn_irreps(&g, n, None).unwrap();
        let triv_theta = vec![0usize; n];
        for rho in &irreps {
            let p_triv = gn_isotypic_projector(rho, &triv_theta).unwrap();
            if rho.is_lift() {
                assert!(max_abs_diff(&p_triv, &identity(rho.dimension())) < 1e-12);
                let p_other = gn_isotypic_projector(rho, &[1, 0]).unwrap();
                assert!(max_abs(&p_other) < 1e-12);
            } else {
                assert!(max_abs(&p_triv) < 1e-12, "non-lift has G^n-trivial part 0");
            }
        }
    }

    #[test]
    fn isotypic_projectors_sum_to_identity_and_are_idempotent() {
        for (g, n) in [(c2(), 2usize), (c3(), 2)] {
            for rho in enumerate_wn_irreps(&g, n, None).unwrap() {
                let mut sum = linalg::zeros::<f64>(rho.dimension(), rho.dimension());
                for theta in theta_vectors(g.as_ref(), n) {
                    let p = gn_isotypic_projector(&rho, &theta).unwrap();
                    assert!(max_abs_diff(&p.dot(&p), &p) < 1e-10, "idempotence");
                    assert!(crate::linalg::hermitian_deviation(&p) < 1e-10);
                    sum = sum + p;
                }
                assert!(max_abs_diff(&sum, &identity(rho.dimension())) < 1e-10);
            }
        }
    }

    #[test]
    fn projector_strategies_agree() {
        let g = c3();
        let rho = enumerate_wn_irreps(&g, 2, None).unwrap().into_iter().nth(3).unwrap();
        for theta in theta_vectors(g.as_ref(), 2) {
            let direct =
                gn_isotypic_projector_with(&rho, &theta, ProjectorStrategy::DirectAverage)
                    .unwrap();
            let factored = gn_isotypic_projector_with(
                &rho,
                &theta,
                ProjectorStrategy::FactoredPerCoordinate,
            )
            .unwrap();
            assert!(max_abs_diff(&direct, &factored) < 1e-12);
        }
    }

    #[test]
    fn restriction_law_isotypic_ranks() {
        // Res to G^n of rho_mu has dim(tau_mot) copies of each of the |T|
        // signature permutations of vartheta, and nothing else.
        for (g, n) in [(c2(), 2usize), (c3(), 2)] {
            for rho in enumerate_wn_irreps(&g, n, None).unwrap() {
                let sig = rho.theta_signature().unwrap().to_vec();
                let outer_dim: usize = rho
                    .mu_vec()
                    .unwrap()
                    .support()
                    .iter()
                    .map(|&t| {
                        crate::combinatorics::tableaux_and_dimension(
                            rho.mu_vec().unwrap().slot(t),
                        )
                        .1
                    })
                    .product();
                for theta in theta_vectors(g.as_ref(), n) {
                    let p = gn_isotypic_projector(&rho, &theta).unwrap();
                    let rank: f64 = (0..rho.dimension()).map(|i| p[[i, i]].re).sum();
                    let mut a = theta.clone();
                    let mut b = sig.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    let expected = if a == b { outer_dim as f64 } else { 0.0 };
                    assert!(
                        (rank - expected).abs() < 1e-8,
                        "rank {rank} vs {expected} for {} at theta={theta:?}",
                        rho.label()
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_isotypic_is_subrepresentation() {
        let g = c2();
        let n = 2;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let elements = all_wreath_elements(&g, n);
        for rho in enumerate_wn_irreps(&g, n, None).unwrap() {
            let p = gn_isotypic_projector(&rho, &vec![0; n]).unwrap();
            for _ in 0..25 {
                let w = &elements[rng.gen_range(0..elements.len())];
                let m = rho.evaluate(w);
                let lhs = m.dot(&p);
                let rhs = p.dot(&m).dot(&p);
                assert!(max_abs_diff(&lhs, &rhs) < 1e-10);
            }
        }
    }

    #[test]
    fn support_order_does_not_change_characters() {
        let g = c3();
        let n = 2;
        let mv = MultiPartition::parse("(();(1);(1))").unwrap();
        let asc = build_with_support_order(&g, &mv, &[1, 2]).unwrap();
        let desc = build_with_support_order(&g, &mv, &[2, 1]).unwrap();
        assert_eq!(asc.dimension(), desc.dimension());
        for w in all_wreath_elements(&g, n) {
            let a = asc.character(&w);
            let b = desc.character(&w);
            assert!((a - b).norm() < 1e-10, "characters differ at {w}");
        }
    }

    #[test]
    fn dimension_formula() {
        // dim = (n!/prod m_i!) * prod dim(theta_i)^{m_i} * prod dim(tau_i).
        let g = Arc::new(builtin_group::<f64>("S3").unwrap());
        let mv = MultiPartition::parse("((1);();(1))").unwrap();
        let rho = build_wreath_irrep(&g, &mv).unwrap();
        // n=2, m=(1,1): 2!/1 = 2 cosets, dims 1 and 2, outer 1*1.
        assert_eq!(rho.dimension(), 2 * (1 * 2) * 1);
    }
}
