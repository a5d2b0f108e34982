// Error paths construct JS values and only work under wasm, so these stay on
// the success paths.
use linkcohesion_web::Demo;

#[test]
fn karate_curve_peaks_at_28() {
    let d = Demo::karate().unwrap();
    assert_eq!((d.vertices(), d.edges()), (34, 78));
    let rho = d.density_curve(1.0, 1.0, 1.0).unwrap();
    assert_eq!(rho.len(), 79);
    let best = rho
        .iter()
        .enumerate()
        .fold(0, |b, (i, &r)| if r > rho[b] { i } else { b });
    assert_eq!(best, 28);
}

#[test]
fn truss_levels_report_original_and_pruned() {
    let d = Demo::karate().unwrap();
    let original = d.truss_levels(vec![], 4).unwrap();
    assert_eq!(&original[..8], &[2.0, 1.0, 3.0, 1.0, 4.0, 2.0, 5.0, 1.0]);
    assert_eq!(&original[8..10], &[4.0, 2.0]);
    assert!((original[10] - 11.0 / 23.0).abs() < 1e-12);

    let pruned = d.truss_levels(vec![1.0, 1.0, 1.0], 4).unwrap();
    assert_eq!(&pruned[..4], &[2.0, 2.0, 3.0, 4.0]);
    assert_eq!(&pruned[4..6], &[0.0, 0.0]);
    assert!(pruned[6].is_nan());
}

#[test]
fn scatter_pairs_every_edge() {
    let mut d = Demo::planted(120, 3, 0.3, 0.02, 5).unwrap();
    let out = d.cohesion_vs_betweenness(1.0, 0.0, 1.0).unwrap();
    assert_eq!(out.len(), 2 * d.edges() + 1);
    let r = *out.last().unwrap();
    assert!((-1.0..=1.0).contains(&r));
    // Betweenness is cached; a second call with other weights reuses it.
    let again = d.cohesion_vs_betweenness(1.0, 1.0, 1.0).unwrap();
    assert_eq!(out[1], again[1]);
}
