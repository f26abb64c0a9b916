//! Executable checks for the spectral-gap statements, a brute-force
//! regular-representation oracle, and the corpus runner.
//!
//! Every check is deterministic given its inputs and seed. Size guards are
//! static (not time-based); the corpus runner converts guard overruns into
//! `Skipped` results with the reason attached.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use crate::combinatorics::{enumerate_partitions, MultiPartition, Partition};
use crate::error::{Error, Result};
use crate::groups::{
    all_gvecs, all_permutations, all_wreath_elements, load_group, subgroup_elements,
    FiniteGroupTable, SubgroupKind, WreathElement,
};
use crate::hypergraph::{
    degree_profile, generate, parse_hypergraph, GeneratorSpec, WeightedHypergraph,
};
use crate::linalg;
use crate::scalar::Scalar;
use crate::sn_reps::{all_sn_irreps, sn_irrep, std_rep};
use crate::spectral::{
    averaging_projector, eigen_multisets_equal, hermitian_eigenvalues, laplacian_matrix,
    lambda_min_star_regular, spectral_report, Flavor, Rep,
};
use crate::subset::Subset;
use crate::wreath_reps::{
    enumerate_wn_irreps, gn_isotypic_projector, lift_representation, theta_vectors,
};

/// Default ceiling on the regular-representation dimension for the oracle.
pub const ORACLE_ORDER_GUARD: usize = 2000;

/// Size guards for the expensive paths. `WREATHGAP_MAX_ORDER` overrides the
/// oracle guard.
#[derive(Debug, Clone)]
pub struct Guards {
    pub max_regular_order: usize,
    pub max_enum_sum_dim_sq: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_regular_order: ORACLE_ORDER_GUARD,
            max_enum_sum_dim_sq: crate::wreath_reps::ENUM_SUM_DIM_SQ_GUARD,
        }
    }
}

impl Guards {
    pub fn from_env() -> Self {
        let mut guards = Guards::default();
        if let Ok(v) = std::env::var("WREATHGAP_MAX_ORDER") {
            if let Ok(limit) = v.trim().parse::<usize>() {
                guards.max_regular_order = limit;
                guards.max_enum_sum_dim_sq = guards.max_enum_sum_dim_sq.max(limit);
            }
        }
        guards
    }

    /// Lifts every limit; used by `--guard-override`.
    pub fn unguarded() -> Self {
        Guards {
            max_regular_order: usize::MAX,
            max_enum_sum_dim_sq: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Skipped => write!(f, "skipped"),
        }
    }
}

/// Outcome of one check: both numeric sides on failure, a guard reason on
/// skips, witnesses where the statement names them.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub check_name: String,
    pub status: CheckStatus,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub witnesses: Vec<String>,
    pub tolerance: f64,
    pub elapsed_secs: f64,
    pub note: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, tolerance: f64) -> Self {
        CheckResult {
            check_name: name.into(),
            status: CheckStatus::Pass,
            lhs: None,
            rhs: None,
            margin: None,
            witnesses: Vec::new(),
            tolerance,
            elapsed_secs: 0.0,
            note: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

fn rel_close(lhs: f64, rhs: f64, tol: f64) -> bool {
    (lhs - rhs).abs() <= tol * (1.0 + lhs.abs())
}

fn sn_reps_for<F: Scalar>(n: usize) -> Vec<Rep<F>> {
    all_sn_irreps(n).into_iter().map(Rep::Sn).collect()
}

fn wn_reps_for<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    n: usize,
    guards: &Guards,
) -> Result<Vec<Rep<F>>> {
    Ok(enumerate_wn_irreps(g, n, Some(guards.max_enum_sum_dim_sq))?
        .into_iter()
        .map(Rep::Wn)
        .collect())
}

/// Main theorem: `lambda*_min(Gamma, Reg_{W_n}) = lambda*_min(Gamma,
/// Reg_{S_n})`, with the strengthened strictness clause when no vertex is
/// almost-isolated: every non-lift irrep stays above `lambda*_min` by more
/// than `10 * tol`.
pub fn check_main_theorem<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    gamma: &WeightedHypergraph,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    let start = Instant::now();
    let n = gamma.n();
    let mut result = CheckResult::new(format!("main_theorem[G={},n={n}]", g.name()), tol);

    let sn_star = lambda_min_star_regular(&sn_reps_for::<F>(n), gamma, tol)?;
    let wn_irreps = wn_reps_for(g, n, guards)?;
    let wn_star = lambda_min_star_regular(&wn_irreps, gamma, tol)?;

    let lhs = wn_star.value.expect("W_n has non-trivial irreps");
    let rhs = sn_star.value.expect("S_n has non-trivial irreps for n >= 2");
    result.lhs = Some(lhs);
    result.rhs = Some(rhs);
    result.witnesses = wn_star.witnesses.clone();
    if !rel_close(lhs, rhs, tol) {
        result.status = CheckStatus::Fail;
        result.note = "lambda*_min differs between Reg_W and Reg_S".into();
    }

    let profile = degree_profile(gamma);
    if profile.almost_isolated.is_empty() {
        // Strict clause: non-lift irreps sit strictly above the minimum.
        let mut min_margin = f64::INFINITY;
        let mut offender = None;
        for (rep, report) in wn_irreps.iter().zip(wn_star.reports.iter()) {
            let is_lift = matches!(rep, Rep::Wn(r) if r.is_lift());
            if is_lift {
                continue;
            }
            let margin = report.lambda_min - lhs;
            if margin < min_margin {
                min_margin = margin;
                offender = Some(report.rep_label.clone());
            }
        }
        result.margin = Some(min_margin);
        if min_margin <= 10.0 * tol {
            result.status = CheckStatus::Fail;
            result.note = format!(
                "strictness fails: non-lift {} within {min_margin:e} of lambda*_min",
                offender.unwrap_or_default()
            );
        }
    } else {
        result.note = format!(
            "strictness clause skipped: almost-isolated vertices {:?}",
            profile.almost_isolated
        );
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Proposition star: `lambda_min(Gamma, std) <= min-degree`, strict when no
/// vertex is almost-isolated, and the standard representation agrees with
/// its lift over each supplied base group.
pub fn check_prop_star<F: Scalar>(
    gamma: &WeightedHypergraph,
    lift_groups: &[Arc<FiniteGroupTable<F>>],
    tol: f64,
) -> Result<CheckResult> {
    let start = Instant::now();
    let n = gamma.n();
    let mut result = CheckResult::new(format!("prop_star[n={n}]"), tol);

    let std_report = spectral_report(&Rep::Sn(std_rep::<F>(n)), gamma, Flavor::Symmetric)?;
    let profile = degree_profile(gamma);
    let lam = std_report.lambda_min;
    let deg = profile.min_degree;
    result.lhs = Some(lam);
    result.rhs = Some(deg);
    result.margin = Some(deg - lam);

    if lam > deg + tol {
        result.status = CheckStatus::Fail;
        result.note = format!("lambda_min(std) = {lam} exceeds min-degree = {deg}");
    } else if profile.almost_isolated.is_empty() && deg - lam <= 10.0 * tol {
        result.status = CheckStatus::Fail;
        result.note = format!("strictness fails: margin {:e}", deg - lam);
    } else if !profile.almost_isolated.is_empty() {
        result.note = format!(
            "strictness skipped: almost-isolated vertices {:?}",
            profile.almost_isolated
        );
    }

    // lambda_min(tau_(n-1,1)) = lambda_min(lift) over each base group.
    let hook = Partition::standard_hook(n)?;
    let hook_report =
        spectral_report(&Rep::Sn(sn_irrep::<F>(&hook)), gamma, Flavor::Symmetric)?;
    if !rel_close(hook_report.lambda_min, lam, tol) {
        result.status = CheckStatus::Fail;
        result.note = format!(
            "std model and YOR hook disagree: {} vs {lam}",
            hook_report.lambda_min
        );
    }
    for g in lift_groups {
        let lifted = lift_representation(std_rep::<F>(n), g);
        let lift_report = spectral_report(&Rep::Wn(lifted), gamma, Flavor::Wreath)?;
        if !rel_close(lift_report.lambda_min, lam, tol) {
            result.status = CheckStatus::Fail;
            result.note = format!(
                "lift over {} disagrees with std: {} vs {lam}",
                g.name(),
                lift_report.lambda_min
            );
        }
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Proposition gap: every non-lift irrep satisfies
/// `lambda_min >= min-degree - tol`; reports the tightest irrep.
pub fn check_prop_gap<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    gamma: &WeightedHypergraph,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    let start = Instant::now();
    let n = gamma.n();
    let mut result = CheckResult::new(format!("prop_gap[G={},n={n}]", g.name()), tol);
    let profile = degree_profile(gamma);
    let deg = profile.min_degree;
    result.rhs = Some(deg);

    let wn_irreps = wn_reps_for(g, n, guards)?;
    let mut tightest: Option<(f64, String)> = None;
    for rep in &wn_irreps {
        let is_lift = matches!(rep, Rep::Wn(r) if r.is_lift());
        if is_lift {
            continue;
        }
        let report = spectral_report(rep, gamma, Flavor::Wreath)?;
        if report.lambda_min < deg - tol {
            result.status = CheckStatus::Fail;
            result.witnesses.push(report.rep_label.clone());
        }
        if tightest.as_ref().map_or(true, |(v, _)| report.lambda_min < *v) {
            tightest = Some((report.lambda_min, report.rep_label.clone()));
        }
    }
    match tightest {
        Some((v, label)) => {
            result.lhs = Some(v);
            result.margin = Some(v - deg);
            if result.witnesses.is_empty() {
                result.witnesses.push(label);
            }
        }
        None => {
            result.note = "no non-lift irreps (trivial base group)".into();
        }
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Structural suite: projector laws, PSD, `G^n`-commutation, lift equality
/// of Laplacians, isotypic block invariance and the two-case action of
/// `J_B^(G)` on isotypic blocks. Tolerances are pinned per statement.
pub fn check_structural<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    gamma: &WeightedHypergraph,
    guards: &Guards,
    seed: u64,
) -> Result<CheckResult> {
    const PROJ_TOL: f64 = 1e-9;
    const LIFT_TOL: f64 = 1e-10;
    const COMMUTE_TOL: f64 = 1e-9;
    const PSD_TOL: f64 = 1e-9;

    let start = Instant::now();
    let n = gamma.n();
    let mut result = CheckResult::new(format!("structural[G={},n={n}]", g.name()), PROJ_TOL);
    let mut failures: Vec<String> = Vec::new();
    let mut subchecks = 0usize;

    let wn_irreps = enumerate_wn_irreps(g, n, Some(guards.max_enum_sum_dim_sq))?;
    let edges = gamma.edges();
    let proj_tol_f = F::from_f64_lossy(PROJ_TOL);
    let lift_tol_f = F::from_f64_lossy(LIFT_TOL);
    let commute_tol_f = F::from_f64_lossy(COMMUTE_TOL);

    // Sampled G^n elements for the commutation law.
    let gn_order = g.order().pow(n as u32);
    let gvec_samples: Vec<Vec<usize>> = if gn_order <= 128 {
        all_gvecs(g.as_ref(), n)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..100)
            .map(|_| (0..n).map(|_| rng.gen_range(0..g.order())).collect())
            .collect()
    };

    for rho in &wn_irreps {
        let rep = Rep::Wn(rho.clone());

        // Projector law and G^n-commutation per weighted hyperedge.
        for (b, _) in &edges {
            for flavor in [Flavor::Symmetric, Flavor::Wreath] {
                let p = averaging_projector(&rep, b, flavor)?;
                subchecks += 2;
                if linalg::max_abs_diff(&p.dot(&p), &p) > proj_tol_f {
                    failures.push(format!("idempotence[{},B={b},{flavor:?}]", rho.label()));
                }
                if linalg::hermitian_deviation(&p) > proj_tol_f {
                    failures.push(format!("hermiticity[{},B={b},{flavor:?}]", rho.label()));
                }
                if flavor == Flavor::Wreath {
                    for gv in &gvec_samples {
                        subchecks += 1;
                        let m = rho.evaluate(&WreathElement::from_gvec(gv.clone()));
                        if linalg::commutator_norm(&p, &m) > commute_tol_f {
                            failures.push(format!(
                                "gn_commutation[{},B={b}]",
                                rho.label()
                            ));
                            break;
                        }
                    }
                }
            }
        }

        // PSD of the wreath Laplacian.
        let lap = laplacian_matrix(&rep, gamma, Flavor::Wreath)?;
        let evals = hermitian_eigenvalues(&lap)?;
        subchecks += 1;
        let bound = -PSD_TOL * (1.0 + linalg::max_abs(&lap).to_f64_lossy());
        if evals.first().map_or(false, |e| e.to_f64_lossy() < bound) {
            failures.push(format!("psd[{}]", rho.label()));
        }

        // Isotypic block structure for non-lifts.
        if !rho.is_lift() {
            for theta in theta_vectors(g.as_ref(), n) {
                let p_theta = gn_isotypic_projector(rho, &theta)?;
                let rank: F = (0..rho.dimension()).map(|i| p_theta[[i, i]].re).sum();
                if rank.to_f64_lossy() < 0.5 {
                    continue; // V_theta = 0
                }
                subchecks += 1;
                if linalg::commutator_norm(&p_theta, &lap) > commute_tol_f {
                    failures.push(format!(
                        "block_invariance[{},theta={theta:?}]",
                        rho.label()
                    ));
                }
                let supp = Subset::from_indices(
                    &(0..n).filter(|&i| theta[i] != 0).collect::<Vec<_>>(),
                    n,
                )?;
                for (b, _) in &edges {
                    subchecks += 1;
                    let jg = averaging_projector(&rep, b, Flavor::Wreath)?;
                    let restricted = p_theta.dot(&jg).dot(&p_theta);
                    if b.intersects(&supp) {
                        if linalg::max_abs(&restricted) > commute_tol_f {
                            failures.push(format!(
                                "j_action_zero[{},B={b},theta={theta:?}]",
                                rho.label()
                            ));
                        }
                    } else {
                        let j = averaging_projector(&rep, b, Flavor::Symmetric)?;
                        let expected = p_theta.dot(&j).dot(&p_theta);
                        if linalg::max_abs_diff(&restricted, &expected) > commute_tol_f {
                            failures.push(format!(
                                "j_action_symmetric[{},B={b},theta={theta:?}]",
                                rho.label()
                            ));
                        }
                    }
                }
            }
        }
    }

    // Lift equality of Laplacian images, entrywise.
    for mu in enumerate_partitions(n) {
        subchecks += 1;
        let tau = sn_irrep::<F>(&mu);
        let lap_sn = laplacian_matrix(&Rep::Sn(tau.clone()), gamma, Flavor::Symmetric)?;
        let lifted = lift_representation(tau, g);
        let lap_wn = laplacian_matrix(&Rep::Wn(lifted), gamma, Flavor::Wreath)?;
        if linalg::max_abs_diff(&lap_sn, &lap_wn) > lift_tol_f {
            failures.push(format!("lift_equality[mu={mu}]"));
        }
    }

    if !failures.is_empty() {
        result.status = CheckStatus::Fail;
        failures.truncate(8);
        result.witnesses = failures.clone();
    }
    result.note = format!("{subchecks} structural subchecks");
    result.margin = Some(failures.len() as f64);
    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

enum OracleSide<'a, F: Scalar> {
    Sn,
    Wn(&'a Arc<FiniteGroupTable<F>>),
}

/// Builds the left-regular Laplacian directly from the Cayley action and
/// compares its eigenvalue multiset with the per-irrep prediction
/// `union of dim(rho) copies of spec(rho(L))`, plus the trace identity
/// `trace = |group| * sum_B c_B (1 - 1/|subgroup_B|)`.
fn brute_force_oracle_impl<F: Scalar>(
    side: OracleSide<'_, F>,
    gamma: &WeightedHypergraph,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    let start = Instant::now();
    let n = gamma.n();
    let (name, order): (String, usize) = match &side {
        OracleSide::Sn => (format!("oracle[Reg_S,n={n}]"), (1..=n).product()),
        OracleSide::Wn(g) => (
            format!("oracle[Reg_W,G={},n={n}]", g.name()),
            g.order().pow(n as u32) * (1..=n).product::<usize>(),
        ),
    };
    if order > guards.max_regular_order {
        return Err(Error::GuardExceeded {
            what: format!("regular representation for {name}"),
            size: order,
            limit: guards.max_regular_order,
        });
    }
    let mut result = CheckResult::new(name, tol);

    // Regular Laplacian from the Cayley action; real symmetric. Element
    // indices come from the lexicographic permutation rank plus (for W_n)
    // the mixed-radix gvec offset, matching the enumeration orders of
    // `all_permutations` / `all_wreath_elements`.
    let mut lap: Array2<F> = Array2::zeros((order, order));
    let mut trace_formula = 0.0f64;
    match &side {
        OracleSide::Sn => {
            let elements = all_permutations(n);
            for (b, w) in gamma.edges() {
                let sub = crate::groups::symmetric_subgroup_permutations(n, &b);
                let inv_size = 1.0 / sub.len() as f64;
                trace_formula += w * (1.0 - inv_size);
                let wf = F::from_f64_lossy(w);
                let avg = F::from_f64_lossy(w * inv_size);
                for x in 0..order {
                    lap[[x, x]] = lap[[x, x]] + wf;
                }
                for s in &sub {
                    for (x, elem) in elements.iter().enumerate() {
                        let y = crate::groups::perm_lex_rank(&s.compose(elem));
                        lap[[y, x]] = lap[[y, x]] - avg;
                    }
                }
            }
        }
        OracleSide::Wn(g) => {
            let elements = all_wreath_elements(g.as_ref(), n);
            let gn_order = g.order().pow(n as u32);
            let wn_index = |w: &WreathElement| -> usize {
                let mut gvec_offset = 0usize;
                for &v in &w.gvec {
                    gvec_offset = gvec_offset * g.order() + v;
                }
                crate::groups::perm_lex_rank(&w.perm) * gn_order + gvec_offset
            };
            for (b, w) in gamma.edges() {
                let sub = subgroup_elements(g.as_ref(), n, SubgroupKind::WreathOnB, &b)?;
                let inv_size = 1.0 / sub.len() as f64;
                trace_formula += w * (1.0 - inv_size);
                let wf = F::from_f64_lossy(w);
                let avg = F::from_f64_lossy(w * inv_size);
                for x in 0..order {
                    lap[[x, x]] = lap[[x, x]] + wf;
                }
                for s in &sub {
                    for (x, elem) in elements.iter().enumerate() {
                        let prod = crate::groups::wreath_multiply(g.as_ref(), s, elem)?;
                        let y = wn_index(&prod);
                        lap[[y, x]] = lap[[y, x]] - avg;
                    }
                }
            }
        }
    }
    trace_formula *= order as f64;
    let trace: f64 = (0..order).map(|i| lap[[i, i]].to_f64_lossy()).sum();

    let regular_spectrum: Vec<f64> = linalg::sym_eigenvalues(lap)?
        .into_iter()
        .map(|x| x.to_f64_lossy())
        .collect();

    // Per-irrep prediction.
    let irreps: Vec<Rep<F>> = match &side {
        OracleSide::Sn => sn_reps_for(n),
        OracleSide::Wn(g) => wn_reps_for(g, n, guards)?,
    };
    let spectra: Vec<(usize, Vec<f64>)> = irreps
        .par_iter()
        .map(|rep| {
            spectral_report(rep, gamma, rep.natural_flavor())
                .map(|r| (rep.dimension(), r.eigenvalues))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut predicted: Vec<f64> = Vec::with_capacity(order);
    for (dim, evals) in &spectra {
        for _ in 0..*dim {
            predicted.extend_from_slice(evals);
        }
    }

    let (multiset_ok, max_dev) = eigen_multisets_equal(&regular_spectrum, &predicted, tol);
    result.lhs = Some(trace);
    result.rhs = Some(trace_formula);
    result.margin = Some(max_dev);
    result.note = format!("regular dimension {order}, multiset deviation {max_dev:e}");
    if !multiset_ok {
        result.status = CheckStatus::Fail;
        result.note = format!("eigenvalue multisets differ by {max_dev:e}");
    }
    if !rel_close(trace, trace_formula, tol) {
        result.status = CheckStatus::Fail;
        result.note = format!("trace {trace} != formula {trace_formula}");
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Oracle over `Reg_{S_n}` (when `g` is `None`) or `Reg_{W_n}`.
pub fn brute_force_oracle<F: Scalar>(
    g: Option<&Arc<FiniteGroupTable<F>>>,
    gamma: &WeightedHypergraph,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    match g {
        None => brute_force_oracle_impl(OracleSide::<F>::Sn, gamma, tol, guards),
        Some(g) => brute_force_oracle_impl(OracleSide::Wn(g), gamma, tol, guards),
    }
}

/// Hypergraph classes with verified transfer of Caputo's conjecture.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum CaputoClass {
    /// Support on `|B| <= 2`.
    PairsAndSingletons,
    /// Support on `|B| >= n-1`.
    TuplesNMinus1,
    /// `c_B` depends only on `|B|`.
    MeanField,
    /// Support on `B ⊇ B0` with `|B \ B0| <= 2` (1-based anchor).
    Akp { b0: Vec<usize> },
}

impl CaputoClass {
    /// The class a generator produces, when one applies.
    pub fn for_generator(spec: &GeneratorSpec) -> Option<CaputoClass> {
        match spec {
            GeneratorSpec::CompleteGraph { .. } | GeneratorSpec::PairsRandom { .. } => {
                Some(CaputoClass::PairsAndSingletons)
            }
            GeneratorSpec::MeanField { .. } => Some(CaputoClass::MeanField),
            GeneratorSpec::TopHeavy { .. } => Some(CaputoClass::TuplesNMinus1),
            GeneratorSpec::Akp { b0, .. } => Some(CaputoClass::Akp { b0: b0.clone() }),
            GeneratorSpec::Random { .. } => None,
        }
    }

    fn validate(&self, gamma: &WeightedHypergraph) -> Result<()> {
        let n = gamma.n();
        let ok = match self {
            CaputoClass::PairsAndSingletons => gamma.edges().iter().all(|(b, _)| b.len() <= 2),
            CaputoClass::TuplesNMinus1 => {
                gamma.edges().iter().all(|(b, _)| b.len() >= n - 1)
            }
            CaputoClass::MeanField => {
                let mut by_size: BTreeMap<usize, f64> = BTreeMap::new();
                let mut consistent = true;
                for (b, w) in gamma.edges() {
                    match by_size.get(&b.len()) {
                        Some(&prev) if prev != w => consistent = false,
                        _ => {
                            by_size.insert(b.len(), w);
                        }
                    }
                }
                // Every subset of a weighted size must be weighted.
                consistent
                    && by_size.iter().all(|(&size, _)| {
                        Subset::all(n)
                            .filter(|b| b.len() == size)
                            .all(|b| gamma.weight(&b) > 0.0)
                    })
            }
            CaputoClass::Akp { b0 } => {
                let anchor = Subset::from_vertices(b0, n)?;
                gamma.is_akp_anchored(&anchor)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "hypergraph is not in the claimed class {self:?}"
            )))
        }
    }
}

/// Verified-instance corollary: three-way equality
/// `lambda*_min(Reg_W) = lambda*_min(Reg_S) = lambda_min(std)` on the
/// supported hypergraph classes.
pub fn check_caputo_instances<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    gamma: &WeightedHypergraph,
    class: &CaputoClass,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    let start = Instant::now();
    class.validate(gamma)?;
    let n = gamma.n();
    let mut result = CheckResult::new(
        format!("caputo[G={},n={n},{class:?}]", g.name()),
        tol,
    );

    let wn_star = lambda_min_star_regular(&wn_reps_for(g, n, guards)?, gamma, tol)?;
    let sn_star = lambda_min_star_regular(&sn_reps_for::<F>(n), gamma, tol)?;
    let std_report = spectral_report(&Rep::Sn(std_rep::<F>(n)), gamma, Flavor::Symmetric)?;

    let w = wn_star.value.unwrap();
    let s = sn_star.value.unwrap();
    let d = std_report.lambda_min;
    result.lhs = Some(w);
    result.rhs = Some(d);
    result.margin = Some((w - d).abs().max((s - d).abs()));
    if !(rel_close(w, s, tol) && rel_close(s, d, tol)) {
        result.status = CheckStatus::Fail;
        result.note = format!("three-way equality fails: W={w}, S={s}, std={d}");
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Remark on `(n-1)`-tuples: when the weights live on `|B| >= n-1`, every
/// irrep outside the family `{mu(triv) = (n-1,1)}` and
/// `{mu(triv) = (n-1), mu(theta) = (1)}` has the flat spectrum
/// `{sum_B c_B}` (the trivial representation excepted), and some family
/// member attains `lambda*_min`.
pub fn check_remark_tuples<F: Scalar>(
    g: &Arc<FiniteGroupTable<F>>,
    gamma: &WeightedHypergraph,
    tol: f64,
    guards: &Guards,
) -> Result<CheckResult> {
    let start = Instant::now();
    let n = gamma.n();
    if !gamma.edges().iter().all(|(b, _)| b.len() >= n - 1) {
        return Err(Error::validation(
            "remark check needs weights supported on |B| >= n-1",
        ));
    }
    let mut result = CheckResult::new(format!("remark_tuples[G={},n={n}]", g.name()), tol);
    let total: f64 = gamma.total_weight();
    result.rhs = Some(total);

    let family: Vec<MultiPartition> = remark_family(g.num_irreps(), n);
    let wn_irreps = enumerate_wn_irreps(g, n, Some(guards.max_enum_sum_dim_sq))?;

    let mut family_min = f64::INFINITY;
    let mut star_min = f64::INFINITY;
    for rho in &wn_irreps {
        if rho.is_trivial() {
            continue;
        }
        let report = spectral_report(&Rep::Wn(rho.clone()), gamma, Flavor::Wreath)?;
        star_min = star_min.min(report.lambda_min);
        let in_family = rho
            .mu_vec()
            .map_or(false, |mv| family.contains(mv));
        if in_family {
            family_min = family_min.min(report.lambda_min);
        } else {
            let flat = report
                .eigenvalues
                .iter()
                .all(|&ev| (ev - total).abs() <= tol * (1.0 + total.abs()));
            if !flat {
                result.status = CheckStatus::Fail;
                result.witnesses.push(report.rep_label.clone());
                result.note = format!(
                    "irrep outside the family has non-flat spectrum: {:?}",
                    report.eigenvalues
                );
            }
        }
    }
    result.lhs = Some(family_min);
    result.margin = Some(family_min - star_min);
    if (family_min - star_min).abs() > tol * (1.0 + star_min.abs()) {
        result.status = CheckStatus::Fail;
        result.note = format!(
            "no family irrep attains lambda*_min: family {family_min} vs {star_min}"
        );
    }

    result.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(result)
}

/// The remark's family: `mu(triv) = (n-1,1)` alone, or `mu(triv) = (n-1)`
/// with a single box on one non-trivial base irrep.
fn remark_family(num_slots: usize, n: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    if n >= 2 {
        let mut slots = vec![Partition::empty(); num_slots];
        slots[0] = Partition::new(vec![n - 1, 1]).unwrap();
        out.push(MultiPartition::new(slots));
        for theta in 1..num_slots {
            let mut slots = vec![Partition::empty(); num_slots];
            slots[0] = Partition::single_row(n - 1);
            slots[theta] = Partition::single_row(1);
            out.push(MultiPartition::new(slots));
        }
    }
    out
}

/// Which checks to run on a corpus entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Main,
    Star,
    Gap,
    Oracle,
    Caputo,
    Tuples,
    Structural,
}

impl CheckKind {
    pub fn parse(name: &str) -> Result<CheckKind> {
        match name {
            "main" => Ok(CheckKind::Main),
            "star" => Ok(CheckKind::Star),
            "gap" => Ok(CheckKind::Gap),
            "oracle" => Ok(CheckKind::Oracle),
            "caputo" => Ok(CheckKind::Caputo),
            "tuples" => Ok(CheckKind::Tuples),
            "structural" => Ok(CheckKind::Structural),
            other => Err(Error::Unknown {
                kind: "check",
                name: other.into(),
            }),
        }
    }
}

/// Where an entry's hypergraph comes from.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypergraphSource {
    Generator(GeneratorSpec),
    Inline(serde_json::Value),
    File(String),
}

impl HypergraphSource {
    pub fn resolve(&self) -> Result<WeightedHypergraph> {
        match self {
            HypergraphSource::Generator(spec) => generate(spec),
            HypergraphSource::Inline(value) => parse_hypergraph(&value.to_string()),
            HypergraphSource::File(path) => {
                parse_hypergraph(&std::fs::read_to_string(path)?)
            }
        }
    }

    pub fn tag(&self) -> String {
        match self {
            HypergraphSource::Generator(spec) => spec.tag(),
            HypergraphSource::Inline(_) => "inline".into(),
            HypergraphSource::File(path) => format!("file:{path}"),
        }
    }
}

/// One corpus entry: a group, a hypergraph and the checks to run.
#[derive(Debug, Clone, Deserialize)]
pub struct CorpusEntry {
    pub group: String,
    pub n: usize,
    pub hypergraph: HypergraphSource,
    #[serde(default)]
    pub seed: u64,
    pub checks: Vec<CheckKind>,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default)]
    pub caputo_class: Option<CaputoClass>,
}

fn default_tol() -> f64 {
    1e-8
}

#[derive(Debug, Clone, Deserialize)]
pub struct CorpusSpec {
    pub entries: Vec<CorpusEntry>,
}

/// Accepts either a bare JSON list of entries or `{"entries": [...]}`.
pub fn parse_corpus_spec(text: &str) -> Result<CorpusSpec> {
    if let Ok(entries) = serde_json::from_str::<Vec<CorpusEntry>>(text) {
        return Ok(CorpusSpec { entries });
    }
    serde_json::from_str(text).map_err(|e| Error::parse(format!("corpus spec: {e}")))
}

/// Results of one corpus entry, in check order.
#[derive(Debug, Clone)]
pub struct EntryResult {
    pub label: String,
    pub group: String,
    pub n: usize,
    pub hypergraph_tag: String,
    pub results: Vec<CheckResult>,
}

impl EntryResult {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status != CheckStatus::Fail)
    }
}

fn error_to_result(name: String, tol: f64, err: Error) -> CheckResult {
    let mut r = CheckResult::new(name, tol);
    match err {
        Error::GuardExceeded { .. } => {
            r.status = CheckStatus::Skipped;
            r.note = err.to_string();
        }
        other => {
            r.status = CheckStatus::Fail;
            r.note = other.to_string();
        }
    }
    r
}

fn run_entry<F: Scalar>(entry: &CorpusEntry, guards: &Guards) -> EntryResult {
    let label = format!(
        "G={},n={},Gamma={}",
        entry.group,
        entry.n,
        entry.hypergraph.tag()
    );
    let mut results = Vec::new();

    let group: Result<Arc<FiniteGroupTable<F>>> = load_group(&entry.group).map(Arc::new);
    let gamma = entry.hypergraph.resolve();
    let (g, gamma) = match (group, gamma) {
        (Ok(g), Ok(gamma)) => (g, gamma),
        (Err(e), _) | (_, Err(e)) => {
            results.push(error_to_result("setup".into(), entry.tol, e));
            return EntryResult {
                label,
                group: entry.group.clone(),
                n: entry.n,
                hypergraph_tag: entry.hypergraph.tag(),
                results,
            };
        }
    };
    if gamma.n() != entry.n {
        results.push(error_to_result(
            "setup".into(),
            entry.tol,
            Error::mismatch(format!("hypergraph has n={}, entry says {}", gamma.n(), entry.n)),
        ));
        return EntryResult {
            label,
            group: entry.group.clone(),
            n: entry.n,
            hypergraph_tag: entry.hypergraph.tag(),
            results,
        };
    }

    for check in &entry.checks {
        let outcome = match check {
            CheckKind::Main => check_main_theorem(&g, &gamma, entry.tol, guards),
            CheckKind::Star => check_prop_star(&gamma, std::slice::from_ref(&g), entry.tol),
            CheckKind::Gap => check_prop_gap(&g, &gamma, entry.tol, guards),
            CheckKind::Oracle => {
                // Both regular representations: S_n and W_n.
                let sn = brute_force_oracle::<F>(None, &gamma, entry.tol, guards);
                match sn {
                    Ok(r) => results.push(r),
                    Err(e) => results.push(error_to_result(
                        format!("oracle[Reg_S,n={}]", entry.n),
                        entry.tol,
                        e,
                    )),
                }
                brute_force_oracle(Some(&g), &gamma, entry.tol, guards)
            }
            CheckKind::Caputo => {
                let class = entry.caputo_class.clone().or_else(|| {
                    if let HypergraphSource::Generator(spec) = &entry.hypergraph {
                        CaputoClass::for_generator(spec)
                    } else {
                        None
                    }
                });
                match class {
                    Some(class) => {
                        check_caputo_instances(&g, &gamma, &class, entry.tol, guards)
                    }
                    None => Err(Error::validation(
                        "caputo check needs a class (generator-derived or explicit)",
                    )),
                }
            }
            CheckKind::Tuples => check_remark_tuples(&g, &gamma, entry.tol, guards),
            CheckKind::Structural => check_structural(&g, &gamma, guards, entry.seed),
        };
        match outcome {
            Ok(r) => results.push(r),
            Err(e) => results.push(error_to_result(format!("{check:?}").to_lowercase(), entry.tol, e)),
        }
    }

    // Proof-structure implication: star + gap + lift equality => main.
    let find = |prefix: &str| results.iter().find(|r| r.check_name.starts_with(prefix));
    if let (Some(main), Some(star), Some(gap), Some(structural)) = (
        find("main_theorem"),
        find("prop_star"),
        find("prop_gap"),
        find("structural"),
    ) {
        let premises = star.passed() && gap.passed() && structural.passed();
        let mut imp = CheckResult::new("implication[star+gap+lift=>main]", entry.tol);
        if premises && !main.passed() {
            imp.status = CheckStatus::Fail;
            imp.note = "propositions pass but the main theorem check fails".into();
        }
        results.push(imp);
    }

    EntryResult {
        label,
        group: entry.group.clone(),
        n: entry.n,
        hypergraph_tag: entry.hypergraph.tag(),
        results,
    }
}

/// Runs every entry (in parallel), results merged in input order.
pub fn run_corpus<F: Scalar>(spec: &CorpusSpec, guards: &Guards) -> Vec<EntryResult> {
    spec.entries
        .par_iter()
        .map(|entry| run_entry::<F>(entry, guards))
        .collect()
}

/// The built-in verification corpus.
///
/// Coverage: `(G, n)` over `{C2, C3, S3} x {2, 3}` with all six hypergraph
/// classes; the `(S3, 3)` block is kept small because its regular
/// representation has dimension 1296; `(C2, 4)` entries exercise the
/// `(n-1)`-tuples remark at `n = 4`.
pub fn default_corpus() -> CorpusSpec {
    let mut entries = Vec::new();
    let full: Vec<CheckKind> = vec![
        CheckKind::Main,
        CheckKind::Star,
        CheckKind::Gap,
        CheckKind::Oracle,
        CheckKind::Structural,
    ];
    let with_caputo = |mut v: Vec<CheckKind>| {
        v.push(CheckKind::Caputo);
        v
    };

    let mean_field_weights = |n: usize| -> BTreeMap<usize, f64> {
        let mut m = BTreeMap::new();
        m.insert(2, 1.0);
        if n >= 3 {
            m.insert(3, 0.5);
        }
        m
    };

    for (group, n) in [
        ("C2", 2usize),
        ("C2", 3),
        ("C3", 2),
        ("C3", 3),
        ("S3", 2),
    ] {
        entries.push(CorpusEntry {
            group: group.into(),
            n,
            hypergraph: HypergraphSource::Generator(GeneratorSpec::CompleteGraph { n }),
            seed: 0,
            checks: with_caputo(full.clone()),
            tol: 1e-8,
            caputo_class: None,
        });
        entries.push(CorpusEntry {
            group: group.into(),
            n,
            hypergraph: HypergraphSource::Generator(GeneratorSpec::MeanField {
                n,
                size_weights: mean_field_weights(n),
            }),
            seed: 0,
            checks: with_caputo(full.clone()),
            tol: 1e-8,
            caputo_class: None,
        });
        for seed in [1u64, 2, 3] {
            entries.push(CorpusEntry {
                group: group.into(),
                n,
                hypergraph: HypergraphSource::Generator(GeneratorSpec::PairsRandom { n, seed }),
                seed,
                checks: with_caputo(full.clone()),
                tol: 1e-8,
                caputo_class: None,
            });
            let mut top_heavy_checks = with_caputo(full.clone());
            if group == "C2" && n == 3 {
                top_heavy_checks.push(CheckKind::Tuples);
            }
            entries.push(CorpusEntry {
                group: group.into(),
                n,
                hypergraph: HypergraphSource::Generator(GeneratorSpec::TopHeavy { n, seed }),
                seed,
                checks: top_heavy_checks,
                tol: 1e-8,
                caputo_class: None,
            });
            entries.push(CorpusEntry {
                group: group.into(),
                n,
                hypergraph: HypergraphSource::Generator(GeneratorSpec::Akp {
                    n,
                    b0: vec![1],
                    seed,
                }),
                seed,
                checks: with_caputo(full.clone()),
                tol: 1e-8,
                caputo_class: None,
            });
            entries.push(CorpusEntry {
                group: group.into(),
                n,
                hypergraph: HypergraphSource::Generator(GeneratorSpec::Random { n, seed }),
                seed,
                checks: full.clone(),
                tol: 1e-8,
                caputo_class: None,
            });
        }
    }

    // (S3, 3): regular dimension 1296, so a small but complete block.
    for hypergraph in [
        GeneratorSpec::CompleteGraph { n: 3 },
        GeneratorSpec::MeanField {
            n: 3,
            size_weights: mean_field_weights(3),
        },
        GeneratorSpec::PairsRandom { n: 3, seed: 1 },
        GeneratorSpec::TopHeavy { n: 3, seed: 1 },
    ] {
        let class = CaputoClass::for_generator(&hypergraph);
        entries.push(CorpusEntry {
            group: "S3".into(),
            n: 3,
            hypergraph: HypergraphSource::Generator(hypergraph),
            seed: 1,
            checks: if class.is_some() {
                with_caputo(full.clone())
            } else {
                full.clone()
            },
            tol: 1e-8,
            caputo_class: None,
        });
    }

    // (C2, 4): the (n-1)-tuples remark at n = 4.
    for seed in [1u64, 2] {
        entries.push(CorpusEntry {
            group: "C2".into(),
            n: 4,
            hypergraph: HypergraphSource::Generator(GeneratorSpec::TopHeavy { n: 4, seed }),
            seed,
            checks: vec![
                CheckKind::Main,
                CheckKind::Star,
                CheckKind::Gap,
                CheckKind::Oracle,
                CheckKind::Structural,
                CheckKind::Caputo,
                CheckKind::Tuples,
            ],
            tol: 1e-8,
            caputo_class: None,
        });
    }
    // Unit weights on all (n-1)-subsets alone.
    let mut size_weights = BTreeMap::new();
    size_weights.insert(3, 1.0);
    entries.push(CorpusEntry {
        group: "C2".into(),
        n: 4,
        hypergraph: HypergraphSource::Generator(GeneratorSpec::MeanField {
            n: 4,
            size_weights,
        }),
        seed: 0,
        checks: vec![
            CheckKind::Main,
            CheckKind::Star,
            CheckKind::Gap,
            CheckKind::Oracle,
            CheckKind::Structural,
            CheckKind::Caputo,
            CheckKind::Tuples,
        ],
        tol: 1e-8,
        caputo_class: Some(CaputoClass::TuplesNMinus1),
    });

    CorpusSpec { entries }
}

/// Pass/fail/skip tally over a batch of results.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize<'a>(results: impl IntoIterator<Item = &'a CheckResult>) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.status {
            CheckStatus::Pass => s.pass += 1,
            CheckStatus::Fail => s.fail += 1,
            CheckStatus::Skipped => s.skipped += 1,
        }
    }
    s
}
