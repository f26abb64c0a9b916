//! Permutations, finite base groups as explicit tables, and wreath-product
//! elements `(g; sigma)` of `W_n = G wr S_n`.
//!
//! Base-group irreps must be supplied (built in or from a file); nothing is
//! computed from a bare multiplication table. Elements of `G` are opaque
//! indices into the table. Permutations act on the left, and the product in
//! `W_n` follows `(g; sigma)(h; tau) = (g · (h ∘ sigma⁻¹); sigma tau)`.

use std::fmt;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// A permutation of `{0, ..., n-1}` in image form: `images[i] = sigma(i)`.
///
/// Vertices are 1-based in display output and file formats; all internal
/// indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::validation(format!("not a bijection: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n && i != j);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// Adjacent transposition `s_k = (k, k+1)`, `k` 0-based.
    pub fn adjacent_transposition(n: usize, k: usize) -> Self {
        Permutation::transposition(n, k, k + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: (0..self.degree())
                .map(|i| self.images[other.images[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// 0-based points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree() - self.support().len()
    }

    /// Sign of the permutation: `+1` or `-1`.
    pub fn parity(&self) -> i32 {
        let mut seen = vec![false; self.degree()];
        let mut sign = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Decomposition into adjacent transpositions: `self = s_{k_1} ... s_{k_m}`
    /// with the returned `k`s 0-based, product taken left to right.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sort the image array to the identity; swapping positions
        // (i, i+1) multiplies by s_i on the right, so sigma * s_{k_1} * ...
        // * s_{k_m} = e and sigma = s_{k_m} * ... * s_{k_1}.
        let mut v = self.images.clone();
        let mut swaps = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    v.swap(i, i + 1);
                    swaps.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps.reverse();
        swaps
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Checked composition `a ∘ b`, i.e. `(a ∘ b)(i) = a(b(i))`.
pub fn perm_compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(Error::mismatch(format!(
            "permutation degrees {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    Ok(a.compose(b))
}

/// Rank of a permutation in the lexicographic order of image arrays, i.e.
/// its position in `all_permutations(n)`, via the Lehmer code.
pub fn perm_lex_rank(p: &Permutation) -> usize {
    let n = p.degree();
    let mut rank = 0usize;
    let mut factorial = 1usize;
    for i in (0..n).rev() {
        let smaller_after = (i + 1..n).filter(|&j| p.apply(j) < p.apply(i)).count();
        rank += smaller_after * factorial;
        factorial *= n - i;
    }
    rank
}

/// All permutations of `{0, ..., n-1}` in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(Permutation {
                images: current.clone(),
            });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// One irreducible representation of the base group: unitary matrices
/// indexed by element.
#[derive(Debug, Clone)]
pub struct GroupIrrep<F: Scalar> {
    pub dim: usize,
    pub matrices: Vec<CMat<F>>,
}

/// A finite group given by its multiplication table together with a
/// complete list of unitary irreducible matrix representations.
///
/// Immutable after validation; irrep index 0 is always the trivial
/// representation.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable<F: Scalar> {
    name: String,
    order: usize,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    irreps: Vec<GroupIrrep<F>>,
}

/// Full associativity check below this order; random sampling above.
const FULL_CHECK_ORDER: usize = 24;

impl<F: Scalar> FiniteGroupTable<F> {
    /// Builds and validates a table. Inverses are derived from `mult`.
    pub fn new(
        name: impl Into<String>,
        mult: Vec<Vec<usize>>,
        identity: usize,
        generators: Vec<usize>,
        irreps: Vec<GroupIrrep<F>>,
    ) -> Result<Self> {
        let order = mult.len();
        if order == 0 {
            return Err(Error::validation("empty multiplication table"));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != order {
                return Err(Error::validation(format!("row {i} has wrong length")));
            }
            if row.iter().any(|&v| v >= order) {
                return Err(Error::validation(format!("row {i} has an out-of-range entry")));
            }
        }
        if identity >= order {
            return Err(Error::validation("identity index out of range"));
        }
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mult[a][b] == identity && mult[b][a] == identity {
                    inverses[a] = b;
                    break;
                }
            }
            if inverses[a] == usize::MAX {
                return Err(Error::validation(format!("element {a} has no inverse")));
            }
        }
        let table = FiniteGroupTable {
            name: name.into(),
            order,
            mult,
            identity,
            inverses,
            generators,
            irreps,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        let tol = F::epsilon().sqrt();

        for x in 0..n {
            if self.mult[self.identity][x] != x || self.mult[x][self.identity] != x {
                return Err(Error::validation(format!("identity law fails at {x}")));
            }
        }

        // Associativity: full below FULL_CHECK_ORDER, else a seeded sample.
        if n <= FULL_CHECK_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                            return Err(Error::validation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
            for _ in 0..200 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                    return Err(Error::validation(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }

        // Generators must generate.
        if !self.generators.is_empty() {
            let mut reached = vec![false; n];
            reached[self.identity] = true;
            let mut frontier = vec![self.identity];
            while let Some(x) = frontier.pop() {
                for &g in &self.generators {
                    if g >= n {
                        return Err(Error::validation("generator index out of range"));
                    }
                    let y = self.mult[x][g];
                    if !reached[y] {
                        reached[y] = true;
                        frontier.push(y);
                    }
                }
            }
            if reached.iter().any(|&r| !r) {
                return Err(Error::validation("generators do not generate the group"));
            }
        }

        if self.irreps.is_empty() {
            return Err(Error::validation("no irreps supplied"));
        }
        let dim_sq: usize = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if dim_sq != n {
            return Err(Error::validation(format!(
                "sum of dim^2 is {dim_sq}, expected {n} (irrep list incomplete or overcomplete)"
            )));
        }
        let triv = &self.irreps[0];
        if triv.dim != 1 {
            return Err(Error::validation("irrep 0 must be the trivial representation"));
        }
        for mat in &triv.matrices {
            if (mat[[0, 0]] - Complex::new(F::one(), F::zero())).norm() > tol {
                return Err(Error::validation("irrep 0 must be the trivial representation"));
            }
        }

        for (k, irrep) in self.irreps.iter().enumerate() {
            if irrep.matrices.len() != n {
                return Err(Error::validation(format!(
                    "irrep {k} has {} matrices, expected {n}",
                    irrep.matrices.len()
                )));
            }
            for (g, mat) in irrep.matrices.iter().enumerate() {
                if mat.dim() != (irrep.dim, irrep.dim) {
                    return Err(Error::validation(format!("irrep {k}, element {g}: wrong shape")));
                }
                let prod = linalg::adjoint(mat).dot(mat);
                if linalg::max_abs_diff(&prod, &linalg::identity(irrep.dim)) > tol {
                    return Err(Error::validation(format!(
                        "irrep {k}, element {g}: matrix not unitary"
                    )));
                }
            }
            // Homomorphism: full below FULL_CHECK_ORDER, sampled above.
            let check_pair = |a: usize, b: usize| -> bool {
                let prod = irrep.matrices[a].dot(&irrep.matrices[b]);
                linalg::max_abs_diff(&prod, &irrep.matrices[self.mult[a][b]]) <= tol
            };
            if n <= FULL_CHECK_ORDER {
                for a in 0..n {
                    for b in 0..n {
                        if !check_pair(a, b) {
                            return Err(Error::validation(format!(
                                "irrep {k} is not a homomorphism at ({a},{b})"
                            )));
                        }
                    }
                }
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(0x51ed2701 ^ k as u64);
                for _ in 0..200 {
                    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if !check_pair(a, b) {
                        return Err(Error::validation(format!(
                            "irrep {k} is not a homomorphism at ({a},{b})"
                        )));
                    }
                }
            }
        }

        // Character orthonormality rules out reducible or repeated entries
        // that happen to satisfy the dimension count.
        let chars: Vec<Vec<Complex<F>>> = self
            .irreps
            .iter()
            .map(|irrep| {
                (0..n)
                    .map(|g| {
                        (0..irrep.dim)
                            .map(|i| irrep.matrices[g][[i, i]])
                            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
                    })
                    .collect()
            })
            .collect();
        let order_f = F::from_usize(n).unwrap();
        for a in 0..self.irreps.len() {
            for b in a..self.irreps.len() {
                let mut inner = Complex::new(F::zero(), F::zero());
                for g in 0..n {
                    inner = inner + chars[a][g] * chars[b][g].conj();
                }
                inner = inner / Complex::new(order_f, F::zero());
                let expected = if a == b { F::one() } else { F::zero() };
                if (inner - Complex::new(expected, F::zero())).norm() > tol {
                    return Err(Error::validation(format!(
                        "irreps {a} and {b} fail character orthonormality"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn irreps(&self) -> &[GroupIrrep<F>] {
        &self.irreps
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn irrep_dim(&self, k: usize) -> usize {
        self.irreps[k].dim
    }

    /// Character value `chi_k(g)`.
    pub fn char_value(&self, k: usize, g: usize) -> Complex<F> {
        let irrep = &self.irreps[k];
        (0..irrep.dim)
            .map(|i| irrep.matrices[g][[i, i]])
            .fold(Complex::new(F::zero(), F::zero()), |a, b| a + b)
    }
}

/// An element `(g; sigma)` of `W_n`: `gvec[i]` is the `G`-index in
/// coordinate `i`, `perm` the permutation part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub gvec: Vec<usize>,
    pub perm: Permutation,
}

impl WreathElement {
    pub fn new(gvec: Vec<usize>, perm: Permutation) -> Result<Self> {
        if gvec.len() != perm.degree() {
            return Err(Error::mismatch(format!(
                "gvec length {} vs permutation degree {}",
                gvec.len(),
                perm.degree()
            )));
        }
        Ok(WreathElement { gvec, perm })
    }

    pub fn identity<F: Scalar>(g: &FiniteGroupTable<F>, n: usize) -> Self {
        WreathElement {
            gvec: vec![g.identity(); n],
            perm: Permutation::identity(n),
        }
    }

    /// Embedding of `S_n`: `sigma -> (e; sigma)`.
    pub fn from_perm<F: Scalar>(g: &FiniteGroupTable<F>, perm: Permutation) -> Self {
        let n = perm.degree();
        WreathElement {
            gvec: vec![g.identity(); n],
            perm,
        }
    }

    /// Embedding of `G^n`: `g -> (g; e)`.
    pub fn from_gvec(gvec: Vec<usize>) -> Self {
        let n = gvec.len();
        WreathElement {
            gvec,
            perm: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.gvec.len()
    }

    pub fn is_identity<F: Scalar>(&self, g: &FiniteGroupTable<F>) -> bool {
        self.perm.is_identity() && self.gvec.iter().all(|&x| x == g.identity())
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {})", self.gvec, self.perm)
    }
}

/// Product `(g; sigma)(h; tau) = (g · (h ∘ sigma⁻¹); sigma tau)`.
pub fn wreath_multiply<F: Scalar>(
    g: &FiniteGroupTable<F>,
    x: &WreathElement,
    y: &WreathElement,
) -> Result<WreathElement> {
    let n = x.degree();
    if y.degree() != n {
        return Err(Error::mismatch(format!(
            "wreath degrees {} and {}",
            n,
            y.degree()
        )));
    }
    if x.gvec.iter().chain(y.gvec.iter()).any(|&v| v >= g.order()) {
        return Err(Error::mismatch("G-index outside the group table"));
    }
    let sigma_inv = x.perm.inverse();
    let gvec = (0..n)
        .map(|i| g.mul(x.gvec[i], y.gvec[sigma_inv.apply(i)]))
        .collect();
    Ok(WreathElement {
        gvec,
        perm: x.perm.compose(&y.perm),
    })
}

pub fn wreath_inverse<F: Scalar>(g: &FiniteGroupTable<F>, x: &WreathElement) -> WreathElement {
    let n = x.degree();
    let gvec = (0..n).map(|i| g.inv(x.gvec[x.perm.apply(i)])).collect();
    WreathElement {
        gvec,
        perm: x.perm.inverse(),
    }
}

/// All `|G|^n` vectors over the group indices, mixed-radix ascending with
/// the first coordinate most significant.
pub fn all_gvecs<F: Scalar>(g: &FiniteGroupTable<F>, n: usize) -> Vec<Vec<usize>> {
    let k = g.order();
    let total = k.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0; n];
            for i in (0..n).rev() {
                v[i] = idx % k;
                idx /= k;
            }
            v
        })
        .collect()
}

/// All elements of `W_n`, permutation-major then gvec mixed-radix.
pub fn all_wreath_elements<F: Scalar>(g: &FiniteGroupTable<F>, n: usize) -> Vec<WreathElement> {
    let gvecs = all_gvecs(g, n);
    let mut out = Vec::with_capacity(gvecs.len() * (1..=n).product::<usize>());
    for perm in all_permutations(n) {
        for gv in &gvecs {
            out.push(WreathElement {
                gvec: gv.clone(),
                perm: perm.clone(),
            });
        }
    }
    out
}

/// Which subgroup of `W_n` supported on `B` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupKind {
    /// `S_B`: permutations with support in `B`, embedded as `(e; sigma)`.
    SymmetricOnB,
    /// `G^B`: vectors supported on `B`, with the identity permutation.
    GPowerB,
    /// `W_B = G^B ⋊ S_B`.
    WreathOnB,
}

/// All permutations with support inside `B` (the subgroup `S_B`), in
/// lexicographic order of the arrangement of the members of `B`.
pub fn symmetric_subgroup_permutations(n: usize, b: &Subset) -> Vec<Permutation> {
    sb_permutations(n, b)
}

/// Lexicographic permutations of the members of `B`, extended by the
/// identity outside `B`.
fn sb_permutations(n: usize, b: &Subset) -> Vec<Permutation> {
    let members = b.indices();
    let mut out = Vec::new();
    let mut used = vec![false; members.len()];
    let mut arrangement = Vec::with_capacity(members.len());
    fn rec(
        n: usize,
        members: &[usize],
        used: &mut Vec<bool>,
        arrangement: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if arrangement.len() == members.len() {
            let mut images: Vec<usize> = (0..n).collect();
            for (slot, &target) in arrangement.iter().enumerate() {
                images[members[slot]] = target;
            }
            out.push(Permutation { images });
            return;
        }
        for k in 0..members.len() {
            if !used[k] {
                used[k] = true;
                arrangement.push(members[k]);
                rec(n, members, used, arrangement, out);
                arrangement.pop();
                used[k] = false;
            }
        }
    }
    rec(n, &members, &mut used, &mut arrangement, &mut out);
    out
}

fn gb_vectors<F: Scalar>(g: &FiniteGroupTable<F>, n: usize, b: &Subset) -> Vec<Vec<usize>> {
    let members = b.indices();
    let k = g.order();
    let total = k.pow(members.len() as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![g.identity(); n];
            for &coord in members.iter().rev() {
                v[coord] = idx % k;
                idx /= k;
            }
            v
        })
        .collect()
}

/// All elements of the named subgroup, each exactly once, in a fixed order.
pub fn subgroup_elements<F: Scalar>(
    g: &FiniteGroupTable<F>,
    n: usize,
    kind: SubgroupKind,
    b: &Subset,
) -> Result<Vec<WreathElement>> {
    if b.ground_size() != n {
        return Err(Error::mismatch(format!(
            "subset over [{}] used with n = {n}",
            b.ground_size()
        )));
    }
    let out = match kind {
        SubgroupKind::SymmetricOnB => sb_permutations(n, b)
            .into_iter()
            .map(|p| WreathElement::from_perm(g, p))
            .collect(),
        SubgroupKind::GPowerB => gb_vectors(g, n, b)
            .into_iter()
            .map(WreathElement::from_gvec)
            .collect(),
        SubgroupKind::WreathOnB => {
            let perms = sb_permutations(n, b);
            let gvecs = gb_vectors(g, n, b);
            let mut all = Vec::with_capacity(perms.len() * gvecs.len());
            for p in &perms {
                for gv in &gvecs {
                    all.push(WreathElement {
                        gvec: gv.clone(),
                        perm: p.clone(),
                    });
                }
            }
            all
        }
    };
    Ok(out)
}

/// Generators of the named subgroup: adjacent transpositions within `B`
/// (sorted order) and/or one copy of each `G`-generator per coordinate.
pub fn subgroup_generators<F: Scalar>(
    g: &FiniteGroupTable<F>,
    n: usize,
    kind: SubgroupKind,
    b: &Subset,
) -> Result<Vec<WreathElement>> {
    if b.ground_size() != n {
        return Err(Error::mismatch(format!(
            "subset over [{}] used with n = {n}",
            b.ground_size()
        )));
    }
    let members = b.indices();
    let mut out = Vec::new();
    if matches!(kind, SubgroupKind::SymmetricOnB | SubgroupKind::WreathOnB) {
        for w in members.windows(2) {
            out.push(WreathElement::from_perm(
                g,
                Permutation::transposition(n, w[0], w[1]),
            ));
        }
    }
    if matches!(kind, SubgroupKind::GPowerB | SubgroupKind::WreathOnB) {
        for &coord in &members {
            for &gen in g.generators() {
                let mut gvec = vec![g.identity(); n];
                gvec[coord] = gen;
                out.push(WreathElement::from_gvec(gvec));
            }
        }
    }
    Ok(out)
}

fn cyclic_group<F: Scalar>(k: usize) -> Result<FiniteGroupTable<F>> {
    let mult: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    let tau = std::f64::consts::TAU;
    let irreps = (0..k)
        .map(|j| {
            let matrices = (0..k)
                .map(|g| {
                    let r = (j * g) % k;
                    // Exact values on the real axis keep C2 characters at ±1.
                    let z = if r == 0 {
                        Complex::new(F::one(), F::zero())
                    } else if 2 * r == k {
                        Complex::new(-F::one(), F::zero())
                    } else {
                        let angle = tau * (r as f64) / (k as f64);
                        Complex::new(
                            F::from_f64_lossy(angle.cos()),
                            F::from_f64_lossy(angle.sin()),
                        )
                    };
                    let mut m = linalg::zeros(1, 1);
                    m[[0, 0]] = z;
                    m
                })
                .collect();
            GroupIrrep { dim: 1, matrices }
        })
        .collect();
    let generators = if k > 1 { vec![1] } else { vec![] };
    FiniteGroupTable::new(format!("C{k}"), mult, 0, generators, irreps)
}

fn symmetric_group_3<F: Scalar>() -> Result<FiniteGroupTable<F>> {
    let perms = all_permutations(3);
    let index_of = |p: &Permutation| perms.iter().position(|q| q == p).unwrap();
    let mult: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index_of(&a.compose(b))).collect())
        .collect();

    let trivial = GroupIrrep {
        dim: 1,
        matrices: (0..6).map(|_| linalg::identity::<F>(1)).collect(),
    };
    let sign = GroupIrrep {
        dim: 1,
        matrices: perms
            .iter()
            .map(|p| {
                let mut m = linalg::zeros(1, 1);
                let s = if p.parity() > 0 { F::one() } else { -F::one() };
                m[[0, 0]] = Complex::new(s, F::zero());
                m
            })
            .collect(),
    };
    let standard = {
        let rep = crate::sn_reps::sn_irrep::<F>(
            &crate::combinatorics::Partition::new(vec![2, 1]).unwrap(),
        );
        GroupIrrep {
            dim: 2,
            matrices: perms.iter().map(|p| rep.evaluate(p)).collect(),
        }
    };

    let s1 = index_of(&Permutation::adjacent_transposition(3, 0));
    let s2 = index_of(&Permutation::adjacent_transposition(3, 1));
    FiniteGroupTable::new(
        "S3",
        mult,
        index_of(&Permutation::identity(3)),
        vec![s1, s2],
        vec![trivial, sign, standard],
    )
}

/// Built-in validated base groups: `C2`, `C3`, `C4`, `S3`.
pub fn builtin_group<F: Scalar>(name: &str) -> Result<FiniteGroupTable<F>> {
    match name {
        "C2" => cyclic_group(2),
        "C3" => cyclic_group(3),
        "C4" => cyclic_group(4),
        "S3" => symmetric_group_3(),
        other => Err(Error::Unknown {
            kind: "group",
            name: other.to_string(),
        }),
    }
}

#[derive(Deserialize)]
struct GroupFile {
    #[serde(default)]
    name: Option<String>,
    order: usize,
    mult: Vec<Vec<usize>>,
    identity: usize,
    #[serde(default)]
    generators: Vec<usize>,
    irreps: Vec<IrrepFile>,
}

#[derive(Deserialize)]
struct IrrepFile {
    dim: usize,
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

/// Parses and validates the JSON group file format.
pub fn parse_group_file<F: Scalar>(text: &str) -> Result<FiniteGroupTable<F>> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("group file: {e}")))?;
    if file.mult.len() != file.order {
        return Err(Error::parse(format!(
            "order is {} but mult has {} rows",
            file.order,
            file.mult.len()
        )));
    }
    let irreps = file
        .irreps
        .into_iter()
        .enumerate()
        .map(|(k, ir)| {
            let matrices = ir
                .matrices
                .into_iter()
                .map(|rows| {
                    if rows.len() != ir.dim || rows.iter().any(|r| r.len() != ir.dim) {
                        return Err(Error::parse(format!("irrep {k}: matrix shape != dim {}", ir.dim)));
                    }
                    let mut m = linalg::zeros(ir.dim, ir.dim);
                    for (i, row) in rows.iter().enumerate() {
                        for (j, &[re, im]) in row.iter().enumerate() {
                            m[[i, j]] = Complex::new(F::from_f64_lossy(re), F::from_f64_lossy(im));
                        }
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupIrrep {
                dim: ir.dim,
                matrices,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroupTable::new(
        file.name.unwrap_or_else(|| "custom".into()),
        file.mult,
        file.identity,
        file.generators,
        irreps,
    )
}

/// Resolves a `--group` argument: a builtin name or a path to a group file.
pub fn load_group<F: Scalar>(name_or_path: &str) -> Result<FiniteGroupTable<F>> {
    match builtin_group(name_or_path) {
        Ok(g) => Ok(g),
        Err(Error::Unknown { .. }) => {
            let text = std::fs::read_to_string(name_or_path)?;
            parse_group_file(&text)
        }
        Err(e) => Err(e),
    }
}
