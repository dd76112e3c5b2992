//! The edge complexes of a double complex and the constructive reductions:
//! when rows are exact in positive degrees, the inclusion of the edge
//! complex and the reduction algorithm are mutually inverse isomorphisms on
//! total cohomology, and the homological quotient map pairs with the
//! constructive lift the same way.

use leray::bicomplex::{
    edge_iso_matrix, edge_iso_matrix_homological, edge_lift_matrix_homological,
    edge_projection_matrix,
};
use leray::fixtures;
use leray::leray::{CoveringComplex, HomCoveringComplex};
use leray::matrix::RatMatrix;
use leray::systems::{ChainSystem, CochainSystem};

fn main() {
    let (_, arcs) = fixtures::circle3_with_arcs();
    let nerve = arcs.nerve();

    let system = CochainSystem::full(&nerve).unwrap();
    let kc = CoveringComplex::new(&arcs, system).unwrap();
    println!(
        "cohomological grid: rows exact in positive degrees: {}",
        kc.double.rows_exact().is_ok()
    );
    for n in 0..=2usize {
        let inc = edge_iso_matrix(&kc.double, n).unwrap();
        let proj = edge_projection_matrix(&kc.double, n).unwrap();
        let id_edge = proj.mul(&inc) == RatMatrix::identity(proj.rows());
        let id_total = inc.mul(&proj) == RatMatrix::identity(inc.rows());
        println!(
            "  degree {n}: edge rank {}, inclusion and reduction invert each other: {}",
            inc.cols(),
            id_edge && id_total
        );
    }

    let hsystem = ChainSystem::full(&nerve).unwrap();
    let hkc = HomCoveringComplex::new(&arcs, hsystem).unwrap();
    println!(
        "homological grid: rows exact in positive degrees: {}",
        hkc.double.rows_exact().is_ok()
    );
    for n in 0..=2usize {
        let quo = edge_iso_matrix_homological(&hkc.double, n).unwrap();
        let lift = edge_lift_matrix_homological(&hkc.double, n).unwrap();
        let inverse = quo.mul(&lift) == RatMatrix::identity(quo.rows())
            && lift.mul(&quo) == RatMatrix::identity(lift.rows());
        println!(
            "  degree {n}: edge rank {}, quotient and lift invert each other: {}",
            quo.rows(),
            inverse
        );
    }

    // the debug dump used by the golden-file tests
    let dump = kc.double.to_debug_value();
    println!(
        "grid dump: {} blocks over p <= {}, q <= {}",
        dump["blocks"].as_array().unwrap().len(),
        dump["p_max"],
        dump["q_max"]
    );
}
