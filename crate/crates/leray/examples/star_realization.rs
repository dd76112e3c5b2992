//! The closed vertex stars of a barycentric subdivision form a covering
//! whose nerve is the original complex, and the canonical homomorphism
//! composed with the subdivision comparison is exactly the identity — the
//! finite form of the statement that the canonical construction realizes
//! the tautological covering correctly.

use leray::fixtures;
use leray::leray::leray_map;
use leray::matrix::RatMatrix;
use leray::simplicial::induced_on_quotients;

fn main() {
    for (name, complex) in [
        ("boundary of the 2-simplex", fixtures::circle3()),
        ("boundary of the 3-simplex", fixtures::sphere2()),
        ("circle + point", fixtures::circle3_disjoint_point()),
    ] {
        let (sd, chain_maps, covering) = fixtures::closed_star_covering(&complex);
        let nerve = covering.nerve();
        println!(
            "{name}: subdivision has {} simplices; nerve of the star covering equals the complex: {}",
            sd.simplex_count(),
            nerve.complex().simplex_set() == complex.simplex_set()
        );
        let l = leray_map(&covering).unwrap();
        for n in 0..=(complex.dim().max(0) as usize) {
            let back = induced_on_quotients(
                &chain_maps[n].transpose(),
                &sd.cohomology_basis(n as i32),
                &complex.cohomology_basis(n as i32),
            );
            let composite = back.mul(&l.matrices[n]);
            let identity = composite == RatMatrix::identity(composite.rows());
            println!("  degree {n}: composite is the identity: {identity}");
            assert!(identity);
        }
    }
}
