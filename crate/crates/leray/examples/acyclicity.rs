//! Acyclicity of coverings: every support must have an exact augmented
//! complex. The arc covering of the circle passes; the one-element covering
//! fails at the whole circle, and the two-arc covering of the square fails
//! at the disconnected double overlap.

use leray::covering::Covering;
use leray::fixtures;
use leray::leray::is_acyclic;
use leray::systems::CochainSystem;

fn report(name: &str, covering: &Covering) {
    let nerve = covering.nerve();
    let system = CochainSystem::full(&nerve).unwrap();
    let report = is_acyclic(&nerve, &system).unwrap();
    println!("{name}: acyclic = {}", report.acyclic);
    for (sigma, degree) in &report.failures {
        println!(
            "  fails at |{}| in degree {degree}",
            nerve.complex().simplex_name(sigma)
        );
    }
}

fn main() {
    let (circle, arcs) = fixtures::circle3_with_arcs();
    report("arc covering of the circle", &arcs);
    report("one-element covering of the circle", &Covering::whole(circle));
    let (_, two_arcs) = fixtures::circle4_two_arcs();
    report("two long arcs on the square", &two_arcs);
    let (_, hemispheres) = fixtures::sphere2_two_hemispheres();
    report("two hemispheres on the sphere", &hemispheres);
}
