//! Explicit cochain systems: serialize the full system of the arc covering,
//! reload it through the validating JSON path, and build one with an extra
//! base summand whose cohomology above the nerve dimension is forced to die
//! in the comparison map.

use leray::fixtures;
use leray::leray::vanishing_check;
use leray::systems::CochainSystem;

fn main() {
    let (_, arcs) = fixtures::circle3_with_arcs();
    let nerve = arcs.nerve();

    let full = CochainSystem::full(&nerve).unwrap();
    let json = full.to_json(&nerve);
    let text = serde_json::to_string_pretty(&json).unwrap();
    println!("serialized full system: {} bytes", text.len());
    let reloaded = CochainSystem::from_json(&nerve, &json).unwrap();
    println!(
        "reloaded and validated; base has dims {:?} over degrees 0..{}",
        (0..reloaded.degree_count())
            .map(|q| reloaded.support(&[]).unwrap().dim(q))
            .collect::<Vec<_>>(),
        reloaded.degree_count()
    );

    // an engineered system: one extra line in degree 2 at the base only
    let engineered =
        CochainSystem::full_with_extra_at_base(&nerve, &[0, 0, 1], &[]).unwrap();
    let round_trip =
        CochainSystem::from_json(&nerve, &engineered.to_json(&nerve)).unwrap();
    let report = vanishing_check(&arcs, &round_trip).unwrap();
    for (degree, rank_sys, rank_space, zero) in &report.rows {
        println!(
            "degree {degree} (above the 1-dimensional nerve): system rank {rank_sys}, \
             target rank {rank_space}, comparison map vanishes: {zero}"
        );
    }
}
