//! Builds the 3-circle with its arc covering and prints the nerve with the
//! support of every simplex.

use leray::fixtures;

fn main() {
    let (circle, arcs) = fixtures::circle3_with_arcs();
    println!(
        "base complex: {} simplices, dimension {}",
        circle.simplex_count(),
        circle.dim()
    );
    let nerve = arcs.nerve();
    println!(
        "nerve: {} simplices, dimension {}",
        nerve.complex().simplex_count(),
        nerve.dim()
    );
    let mut keys = vec![Vec::new()];
    keys.extend(nerve.complex().simplex_set().iter().cloned());
    for sigma in keys {
        let name = if sigma.is_empty() {
            "{}".to_string()
        } else {
            nerve.complex().simplex_name(&sigma)
        };
        let support = nerve.support(&sigma).unwrap();
        let simplices: Vec<String> = support
            .simplex_set()
            .iter()
            .map(|s| support.simplex_name(s))
            .collect();
        println!("  |{name}| = {{{}}}", simplices.join(", "));
    }
}
