//! The homological canonical map `H_*(base) -> H_*(nerve)` and its
//! compatibility with the cohomological map under the evaluation pairings.

use leray::fixtures;
use leray::leray::{homology_leray_map, leray_map};
use leray::rat::Rational;
use leray::simplicial::is_invertible;

fn main() {
    let (circle, arcs) = fixtures::circle3_with_arcs();
    let hom = homology_leray_map(&arcs).unwrap();
    let coh = leray_map(&arcs).unwrap();
    let nerve = arcs.nerve();
    for (n, m) in hom.matrices.iter().enumerate() {
        println!(
            "degree {n}: H_{n}(base) -> H_{n}(nerve) invertible: {}",
            is_invertible(m)
        );
    }
    // adjointness: evaluating the pushed-forward cycle against a nerve
    // cocycle equals evaluating the cycle against the pulled-back cocycle
    for n in 0..=1usize {
        let hx = circle.homology_basis(n as i32);
        let hxc = circle.cohomology_basis(n as i32);
        let hn = nerve.complex().homology_basis(n as i32);
        let hnc = nerve.complex().cohomology_basis(n as i32);
        for i in 0..hx.dim() {
            for j in 0..hnc.dim() {
                let pushed = hn.representative(&hom.matrices[n].column(i));
                let lhs: Rational = pushed
                    .iter()
                    .zip(&hnc.representatives()[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let pulled = hxc.representative(&coh.matrices[n].column(j));
                let rhs: Rational = hx.representatives()[i]
                    .iter()
                    .zip(&pulled)
                    .map(|(a, b)| a * b)
                    .sum();
                assert_eq!(lhs, rhs);
                println!("degree {n}: <push h_{i}, a_{j}> = <h_{i}, pull a_{j}> = {lhs}");
            }
        }
    }
}
