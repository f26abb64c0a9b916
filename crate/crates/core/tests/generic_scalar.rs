//! The numeric core is generic over the real scalar: everything from group
//! tables through Laplacian spectra instantiates at `f32` as well as the
//! default `f64`, with tolerances loosened to single precision.

use std::sync::Arc;

use wreathgap::groups::{builtin_group, FiniteGroupTable};
use wreathgap::hypergraph::{generate, GeneratorSpec, WeightedHypergraph};
use wreathgap::sn_reps::std_rep;
use wreathgap::spectral::{
    hermitian_eigenvalues, lambda_min_star_regular, laplacian_matrix, Flavor, Rep,
};
use wreathgap::subset::Subset;
use wreathgap::wreath_reps::enumerate_wn_irreps;

#[test]
fn f32_standard_spectrum_on_k3() {
    let gamma = generate(&GeneratorSpec::CompleteGraph { n: 3 }).unwrap();
    let rep = Rep::Sn(std_rep::<f32>(3));
    let lap = laplacian_matrix(&rep, &gamma, Flavor::Symmetric).unwrap();
    let evals = hermitian_eigenvalues(&lap).unwrap();
    assert_eq!(evals.len(), 2);
    for ev in evals {
        assert!((ev - 1.5).abs() < 1e-5, "f32 eigenvalue {ev}");
    }
}

#[test]
fn f32_wreath_lambda_star_matches_f64() {
    let mut gamma = WeightedHypergraph::new(2).unwrap();
    gamma.set_weight(&Subset::full(2), 1.0).unwrap();

    let g32: Arc<FiniteGroupTable<f32>> = Arc::new(builtin_group("C2").unwrap());
    let irreps32: Vec<Rep<f32>> = enumerate_wn_irreps(&g32, 2, None)
        .unwrap()
        .into_iter()
        .map(Rep::Wn)
        .collect();
    let star32 = lambda_min_star_regular(&irreps32, &gamma, 1e-5).unwrap();

    let g64: Arc<FiniteGroupTable<f64>> = Arc::new(builtin_group("C2").unwrap());
    let irreps64: Vec<Rep<f64>> = enumerate_wn_irreps(&g64, 2, None)
        .unwrap()
        .into_iter()
        .map(Rep::Wn)
        .collect();
    let star64 = lambda_min_star_regular(&irreps64, &gamma, 1e-8).unwrap();

    let v32 = star32.value.unwrap();
    let v64 = star64.value.unwrap();
    assert!((v32 - v64).abs() < 1e-5, "f32 {v32} vs f64 {v64}");
    assert_eq!(star32.witnesses.len(), star64.witnesses.len());
}
