//! Weighted hypergraphs on `[n]`: parsing and canonical serialization,
//! degree profiles with the almost-isolated predicate, and the corpus
//! generators.
//!
//! Subsets are stored as bitmasks; weights are nonnegative `f64` and are
//! converted to the working scalar only when a Laplacian is assembled.
//! Hyperedges with `|B| <= 1` are accepted: they are spectrally inert for
//! the symmetric-group Laplacian, though they do enter vertex degrees.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::subset::Subset;

/// A weighted hypergraph `([n], c)` with nonnegative weights on subsets.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedHypergraph {
    n: usize,
    weights: BTreeMap<u32, f64>,
}

impl WeightedHypergraph {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::validation(format!("need n >= 2 vertices, got {n}")));
        }
        if n > crate::subset::MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "vertex set".into(),
                size: n,
                limit: crate::subset::MAX_VERTICES,
            });
        }
        Ok(WeightedHypergraph {
            n,
            weights: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets `c_B`; zero weights are dropped from storage.
    pub fn set_weight(&mut self, b: &Subset, weight: f64) -> Result<()> {
        if b.ground_size() != self.n {
            return Err(Error::mismatch(format!(
                "subset over [{}] in a hypergraph on [{}]",
                b.ground_size(),
                self.n
            )));
        }
        if !(weight >= 0.0) || !weight.is_finite() {
            return Err(Error::validation(format!(
                "weight {weight} for {b} must be a nonnegative finite real"
            )));
        }
        if weight == 0.0 {
            self.weights.remove(&b.mask());
        } else {
            self.weights.insert(b.mask(), weight);
        }
        Ok(())
    }

    pub fn weight(&self, b: &Subset) -> f64 {
        self.weights.get(&b.mask()).copied().unwrap_or(0.0)
    }

    /// Weighted edges sorted by `(|B|, lexicographic vertex list)`.
    pub fn edges(&self) -> Vec<(Subset, f64)> {
        let mut out: Vec<(Subset, f64)> = self
            .weights
            .iter()
            .map(|(&mask, &w)| (Subset::from_mask(mask, self.n).unwrap(), w))
            .collect();
        out.sort_by_key(|(b, _)| (b.len(), b.vertices()));
        out
    }

    pub fn num_edges(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.values().sum()
    }

    /// All weights multiplied by `s >= 0`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        let mut out = WeightedHypergraph::new(self.n)?;
        for (b, w) in self.edges() {
            out.set_weight(&b, w * s)?;
        }
        Ok(out)
    }

    /// Image under a vertex relabeling: the new weight of `sigma(B)` is the
    /// old weight of `B`.
    pub fn relabeled(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.n {
            return Err(Error::mismatch("relabeling degree differs from n"));
        }
        let mut out = WeightedHypergraph::new(self.n)?;
        for (b, w) in self.edges() {
            let image: Vec<usize> = b.indices().iter().map(|&i| sigma.apply(i)).collect();
            out.set_weight(&Subset::from_indices(&image, self.n)?, w)?;
        }
        Ok(out)
    }

    /// Whether the support lies in `{B : B ⊇ B0, |B \ B0| <= 2}`.
    pub fn is_akp_anchored(&self, b0: &Subset) -> bool {
        self.edges().iter().all(|(b, _)| {
            b0.is_subset_of(b) && b.len() - b0.len() <= 2
        })
    }
}

/// Per-vertex weighted degrees, their minimum, and the almost-isolated
/// vertices (1-based): `i` with `c_B = 0` for every `i ∈ B ⊊ [n]`, the full
/// edge `c_{[n]}` being exempt.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub per_vertex: Vec<f64>,
    pub min_degree: f64,
    pub almost_isolated: Vec<usize>,
}

pub fn degree_profile(gamma: &WeightedHypergraph) -> DegreeProfile {
    let n = gamma.n();
    let mut per_vertex = vec![0.0; n];
    let mut proper_touch = vec![false; n];
    for (b, w) in gamma.edges() {
        for i in b.indices() {
            per_vertex[i] += w;
            if !b.is_full() {
                proper_touch[i] = true;
            }
        }
    }
    let min_degree = per_vertex.iter().copied().fold(f64::INFINITY, f64::min);
    let almost_isolated = (0..n).filter(|&i| !proper_touch[i]).map(|i| i + 1).collect();
    DegreeProfile {
        per_vertex,
        min_degree,
        almost_isolated,
    }
}

#[derive(Deserialize)]
struct HypergraphFile {
    n: usize,
    edges: Vec<EdgeFile>,
}

#[derive(Deserialize)]
struct EdgeFile {
    vertices: Vec<usize>,
    weight: f64,
}

/// Parses the JSON hypergraph file format. Duplicate subsets and negative
/// weights are rejected.
pub fn parse_hypergraph(text: &str) -> Result<WeightedHypergraph> {
    let file: HypergraphFile =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("hypergraph file: {e}")))?;
    let mut gamma = WeightedHypergraph::new(file.n)?;
    for edge in &file.edges {
        let b = Subset::from_vertices(&edge.vertices, file.n)?;
        if gamma.weights.contains_key(&b.mask()) {
            return Err(Error::validation(format!("duplicate edge {b}")));
        }
        if edge.weight < 0.0 {
            return Err(Error::validation(format!(
                "negative weight {} on {b}",
                edge.weight
            )));
        }
        gamma.set_weight(&b, edge.weight)?;
    }
    Ok(gamma)
}

/// Serializes to the file format, edges sorted by `(|B|, lexicographic)`.
pub fn serialize_hypergraph(gamma: &WeightedHypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{{\"n\":{},\"edges\":[", gamma.n()));
    for (k, (b, w)) in gamma.edges().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let verts: Vec<String> = b.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "{{\"vertices\":[{}],\"weight\":{}}}",
            verts.join(","),
            format_weight(*w)
        ));
    }
    out.push_str("]}");
    out
}

fn format_weight(w: f64) -> String {
    // Shortest representation that round-trips; integral weights keep a
    // decimal point so the document stays visibly float-typed.
    let s = format!("{w}");
    if s.contains('.') || s.contains('e') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        format!("{s}.0")
    }
}

/// Hypergraph corpus generators matching the verified-instance classes.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// Unit weights on all pairs.
    CompleteGraph { n: usize },
    /// `c_B = f(|B|)`: one weight per edge size.
    MeanField {
        n: usize,
        size_weights: BTreeMap<usize, f64>,
    },
    /// Random weights on singletons and pairs.
    PairsRandom { n: usize, seed: u64 },
    /// Random weights on subsets of size `>= n-1`.
    TopHeavy { n: usize, seed: u64 },
    /// Random weights on `B ⊇ B0` with `|B \ B0| <= 2` (1-based anchor).
    Akp { n: usize, b0: Vec<usize>, seed: u64 },
    /// Random sparse weights on subsets of size `>= 2`, plus occasional
    /// singletons.
    Random { n: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn n(&self) -> usize {
        match self {
            GeneratorSpec::CompleteGraph { n }
            | GeneratorSpec::MeanField { n, .. }
            | GeneratorSpec::PairsRandom { n, .. }
            | GeneratorSpec::TopHeavy { n, .. }
            | GeneratorSpec::Akp { n, .. }
            | GeneratorSpec::Random { n, .. } => *n,
        }
    }

    /// Short tag for reports.
    pub fn tag(&self) -> String {
        match self {
            GeneratorSpec::CompleteGraph { .. } => "complete_graph".into(),
            GeneratorSpec::MeanField { .. } => "mean_field".into(),
            GeneratorSpec::PairsRandom { seed, .. } => format!("pairs_random[seed={seed}]"),
            GeneratorSpec::TopHeavy { seed, .. } => format!("top_heavy[seed={seed}]"),
            GeneratorSpec::Akp { b0, seed, .. } => format!("akp[b0={b0:?},seed={seed}]"),
            GeneratorSpec::Random { seed, .. } => format!("random[seed={seed}]"),
        }
    }
}

/// Uniform draw from `[lo, hi)` built from raw `u32`s, so the byte stream
/// of a seeded generator fully determines the weights.
fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let u = rng.next_u32() as f64 / (u32::MAX as f64 + 1.0);
    lo + u * (hi - lo)
}

/// Deterministic hypergraph generation: identical spec, identical weights.
pub fn generate(spec: &GeneratorSpec) -> Result<WeightedHypergraph> {
    let n = spec.n();
    let mut gamma = WeightedHypergraph::new(n)?;
    match spec {
        GeneratorSpec::CompleteGraph { .. } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    gamma.set_weight(&Subset::from_vertices(&[i, j], n)?, 1.0)?;
                }
            }
        }
        GeneratorSpec::MeanField { size_weights, .. } => {
            for (&size, &w) in size_weights {
                if size > n {
                    return Err(Error::invalid(format!("edge size {size} exceeds n = {n}")));
                }
                for b in Subset::all(n).filter(|b| b.len() == size) {
                    gamma.set_weight(&b, w)?;
                }
            }
        }
        GeneratorSpec::PairsRandom { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for b in Subset::all(n).filter(|b| (1..=2).contains(&b.len())) {
                gamma.set_weight(&b, uniform(&mut rng, 0.25, 4.0))?;
            }
        }
        GeneratorSpec::TopHeavy { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for b in Subset::all(n).filter(|b| b.len() >= n - 1) {
                gamma.set_weight(&b, uniform(&mut rng, 0.25, 4.0))?;
            }
        }
        GeneratorSpec::Akp { b0, seed, .. } => {
            let anchor = Subset::from_vertices(b0, n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for b in Subset::all(n) {
                if anchor.is_subset_of(&b) && b.len() - anchor.len() <= 2 {
                    gamma.set_weight(&b, uniform(&mut rng, 0.25, 4.0))?;
                }
            }
        }
        GeneratorSpec::Random { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for b in Subset::all(n) {
                if b.len() >= 2 {
                    if rng.next_u32() % 2 == 0 {
                        gamma.set_weight(&b, uniform(&mut rng, 0.25, 4.0))?;
                    }
                } else if b.len() == 1 && rng.next_u32() % 4 == 0 {
                    gamma.set_weight(&b, uniform(&mut rng, 0.25, 4.0))?;
                }
            }
            // Keep the instance connected in spirit: guarantee at least one
            // proper edge touching every vertex when n allows it.
            let profile = degree_profile(&gamma);
            for v in profile.almost_isolated {
                let other = if v == 1 { 2 } else { 1 };
                gamma.set_weight(
                    &Subset::from_vertices(&[other.min(v), other.max(v)], n)?,
                    uniform(&mut rng, 0.25, 4.0),
                )?;
            }
        }
    }
    Ok(gamma)
}
