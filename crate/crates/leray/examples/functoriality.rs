//! Covering morphisms and the naturality of the canonical homomorphism: a
//! map of based coverings induces a map of nerves (independent of the chosen
//! element assignment) and the square relating the two canonical
//! homomorphisms commutes exactly.

use leray::covering::{Covering, CoveringMorphism};
use leray::fixtures;
use leray::leray::leray_map;
use leray::simplicial::{MapVariance, SimplicialMap};

fn main() {
    // rotate the circle by one vertex; the arc covering maps into itself
    let (circle, arcs) = fixtures::circle3_with_arcs();
    let rotation = SimplicialMap::new(circle.clone(), circle.clone(), vec![1, 2, 0]).unwrap();
    let morphism = CoveringMorphism::new(rotation, arcs.clone(), arcs.clone()).unwrap();
    let nerve_map = morphism.nerve_map().unwrap();
    println!("rotation induces the nerve map {:?}", nerve_map.vertex_map);
    for (j, alternatives) in (0..arcs.len())
        .map(|j| morphism.admissible_targets(j))
        .enumerate()
    {
        println!("  element {j} may map to any of {alternatives:?}");
    }

    let l = leray_map(&arcs).unwrap();
    for n in 0..=1usize {
        let phi_star = nerve_map.induced_map(n as i32, MapVariance::Cohomology);
        let f_star = morphism.map.induced_map(n as i32, MapVariance::Cohomology);
        let lhs = f_star.mul(&l.matrices[n]);
        let rhs = l.matrices[n].mul(&phi_star);
        println!(
            "degree {n}: pullback then canonical equals canonical then nerve pullback: {}",
            lhs == rhs
        );
        assert_eq!(lhs, rhs);
    }

    // collapsing into the one-element covering gives the constant nerve map
    let whole = Covering::whole(circle.clone());
    let collapse = CoveringMorphism::new(SimplicialMap::identity(&circle), arcs, whole).unwrap();
    println!(
        "collapse to the one-element covering: nerve map {:?}",
        collapse.nerve_map().unwrap().vertex_map
    );
}
