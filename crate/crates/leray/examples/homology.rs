//! Computes the homology and cohomology of the shipped fixtures, then
//! subdivides the circle barycentrically and checks that the comparison map
//! induces an isomorphism.

use leray::fixtures;
use leray::simplicial::{induced_on_quotients, is_invertible};

fn main() {
    for (name, x) in [
        ("circle (3 vertices)", fixtures::circle3()),
        ("full triangle", fixtures::full_triangle()),
        ("2-sphere", fixtures::sphere2()),
        ("circle + point", fixtures::circle3_disjoint_point()),
    ] {
        let betti: Vec<usize> = (0..=x.dim())
            .map(|p| x.homology_basis(p).dim())
            .collect();
        let cobetti: Vec<usize> = (0..=x.dim())
            .map(|p| x.cohomology_basis(p).dim())
            .collect();
        println!("{name}: betti {betti:?}, cohomology ranks {cobetti:?}");
        assert_eq!(betti, cobetti);
    }

    let circle = fixtures::circle3();
    let (sd, chain_maps) = circle.barycentric_subdivision();
    println!(
        "subdivided circle: {} vertices, {} edges",
        sd.simplices_of_dim(0).len(),
        sd.simplices_of_dim(1).len()
    );
    for p in 0..=circle.dim() {
        let induced = induced_on_quotients(
            &chain_maps[p as usize],
            &circle.homology_basis(p),
            &sd.homology_basis(p),
        );
        println!(
            "  comparison map on H_{p} is {}invertible",
            if is_invertible(&induced) { "" } else { "NOT " }
        );
        assert!(is_invertible(&induced));
    }
}
