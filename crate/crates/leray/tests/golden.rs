//! Golden-file check of the double-complex debug dump: the grid of the arc
//! covering of the circle, block dimensions and both differentials.

use leray::fixtures;
use leray::leray::CoveringComplex;
use leray::systems::CochainSystem;

#[test]
fn arc_covering_grid_matches_golden_dump() {
    let (_, a3) = fixtures::circle3_with_arcs();
    let system = CochainSystem::full(&a3.nerve()).unwrap();
    let kc = CoveringComplex::new(&a3, system).unwrap();
    let dump = serde_json::to_string_pretty(&kc.double.to_debug_value()).unwrap();
    let golden = include_str!("golden/arc_covering_grid.json");
    assert_eq!(dump.trim(), golden.trim());
}
