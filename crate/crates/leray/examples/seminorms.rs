//! Seminorms on the circle by exact linear programming: the fundamental
//! class has l1 seminorm 3, its dual partner has sup-seminorm 1/3, and the
//! LP duality report confirms the best pairing attains the l1 value.

use leray::fixtures;
use leray::norms::{duality_check, l1_seminorm, linf_seminorm, pairing};
use leray::rat::rat_int;

fn main() {
    let circle = fixtures::circle3();
    let l1 = l1_seminorm(&circle, 1, &[rat_int(1)]).unwrap();
    println!("l1 seminorm of the fundamental class: {}", l1.value);
    let chain: Vec<String> = l1.optimizer.iter().map(|x| x.to_string()).collect();
    println!("  achieved by the cycle [{}]", chain.join(", "));
    let dual: Vec<String> = l1.dual.iter().map(|x| x.to_string()).collect();
    println!("  dual certificate [{}]", dual.join(", "));

    // normalize the cohomology generator so it pairs to 1 with the cycle
    let pair = pairing(&circle, 1, &[rat_int(1)], &[rat_int(1)]).unwrap();
    let normalized = vec![pair.recip()];
    let linf = linf_seminorm(&circle, 1, &normalized).unwrap();
    println!("sup seminorm of the normalized dual class: {}", linf.value);
    println!(
        "product of the two seminorms: {}",
        l1.value.clone() * linf.value
    );

    let duality = duality_check(&circle, 1).unwrap();
    for row in &duality.rows {
        println!(
            "class {}: l1 = {}, best pairing against sup-norm <= 1 classes = {}, equal = {}",
            row.class_index, row.l1, row.max_pairing, row.equal
        );
    }
}
