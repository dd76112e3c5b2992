//! Finite-set refinement combinatorics: stars, barycentric and star
//! refinements, and the fact that two barycentric refinements in a row give
//! a star refinement.

use std::collections::BTreeSet;

use leray::families::{
    is_barycentric_refinement, is_combinatorial_refinement, is_star_refinement, star, SetFamily,
};

fn main() {
    let u = SetFamily::over(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    println!("St({{1}}, U) = {:?}", star(&BTreeSet::from([1]), &u));
    println!("St({{}}, U)  = {:?}", star(&BTreeSet::new(), &u));

    // an overlapping pair never star-refines itself
    let a = SetFamily::over(3, vec![vec![0, 1], vec![1, 2]]);
    println!(
        "overlapping pair star-refines itself: {}",
        is_star_refinement(&a, &a).unwrap()
    );
    // a partition always does
    let p = SetFamily::over(4, vec![vec![0, 1], vec![2, 3]]);
    println!(
        "partition star-refines itself: {}",
        is_star_refinement(&p, &p).unwrap()
    );

    // combinatorial refinement shrinks members and therefore the nerve
    let g = SetFamily::over(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 0]]);
    let f = SetFamily::over(4, vec![vec![0, 1], vec![2, 3], vec![3, 0]]);
    println!(
        "f combinatorially refines g: {}",
        is_combinatorial_refinement(&f, &g).unwrap()
    );
    println!(
        "nerve of f inside nerve of g: {}",
        f.nerve_simplices().is_subset(&g.nerve_simplices())
    );

    // singletons barycentrically refine everything; twice gives a star
    // refinement of the outer covering
    let c = SetFamily::over(5, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    let b = SetFamily::over(5, vec![vec![0, 1], vec![2], vec![3, 4]]);
    let a = SetFamily::over(5, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    assert!(is_barycentric_refinement(&b, &c).unwrap());
    assert!(is_barycentric_refinement(&a, &b).unwrap());
    println!(
        "a barycentric b, b barycentric c, so a star-refines c: {}",
        is_star_refinement(&a, &c).unwrap()
    );
}
