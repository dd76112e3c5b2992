//! Shared fixtures and seeded random generators used by the examples, the
//! verification suites and the tests.

use std::collections::BTreeSet;

use rand::prelude::*;

use crate::covering::{Covering, CoveringMorphism};
use crate::families::SetFamily;
use crate::matrix::RatMatrix;
use crate::simplicial::{SimplicialComplex, SimplicialMap};

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The circle with three vertices: edges 01, 02, 12.
pub fn circle3() -> SimplicialComplex {
    SimplicialComplex::closure_indexed(named(&["0", "1", "2"]), &[vec![0, 1], vec![1, 2], vec![0, 2]])
}

/// The full 2-simplex on vertices a, b, c.
pub fn full_triangle() -> SimplicialComplex {
    SimplicialComplex::closure_indexed(named(&["a", "b", "c"]), &[vec![0, 1, 2]])
}

/// The boundary of the 3-simplex: a triangulated 2-sphere.
pub fn sphere2() -> SimplicialComplex {
    SimplicialComplex::closure_indexed(
        named(&["a", "b", "c", "d"]),
        &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
}

/// An `n`-gon circle, `n >= 3`.
pub fn polygon(n: usize) -> SimplicialComplex {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut gens: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
    gens.push(vec![0, n - 1]);
    SimplicialComplex::closure_indexed(names, &gens)
}

/// A path with `n` edges.
pub fn path(n: usize) -> SimplicialComplex {
    let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let gens: Vec<Vec<usize>> = (0..n).map(|i| vec![i, i + 1]).collect();
    SimplicialComplex::closure_indexed(names, &gens)
}

/// A single point.
pub fn point() -> SimplicialComplex {
    SimplicialComplex::closure_indexed(named(&["p"]), &[vec![0]])
}

/// The disjoint union of the 3-circle and a point.
pub fn circle3_disjoint_point() -> SimplicialComplex {
    SimplicialComplex::closure_indexed(
        named(&["0", "1", "2", "p"]),
        &[vec![0, 1], vec![1, 2], vec![0, 2], vec![3]],
    )
}

/// The circle with its arc covering: three closed edges.
pub fn circle3_with_arcs() -> (SimplicialComplex, Covering) {
    let c3 = circle3();
    let a3 = Covering::new(
        c3.clone(),
        named(&["U0", "U1", "U2"]),
        vec![vec![vec![0, 1]], vec![vec![1, 2]], vec![vec![0, 2]]],
    )
    .expect("arc covering is fine");
    (c3, a3)
}

/// The `n`-gon covered by its `n` closed edges; always an acyclic covering.
pub fn polygon_arc_covering(n: usize) -> (SimplicialComplex, Covering) {
    let x = polygon(n);
    let mut gens: Vec<Vec<Vec<usize>>> = (0..n - 1).map(|i| vec![vec![i, i + 1]]).collect();
    gens.push(vec![vec![0, n - 1]]);
    let names: Vec<String> = (0..n).map(|i| format!("U{i}")).collect();
    let u = Covering::new(x.clone(), names, gens).expect("arcs cover the polygon");
    (x, u)
}

/// The 4-circle covered by two long arcs whose intersection has two
/// components; the covering is fine but not acyclic.
pub fn circle4_two_arcs() -> (SimplicialComplex, Covering) {
    let c4 = polygon(4);
    let u = Covering::new(
        c4.clone(),
        named(&["U0", "U1"]),
        vec![
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![2, 3], vec![0, 3]],
        ],
    )
    .expect("two arcs cover the square");
    (c4, u)
}

/// The two-hemisphere covering of the 2-sphere; the overlap is a 4-cycle, so
/// the covering is fine but not acyclic.
pub fn sphere2_two_hemispheres() -> (SimplicialComplex, Covering) {
    let s = sphere2();
    let u = Covering::new(
        s.clone(),
        named(&["N", "S"]),
        vec![
            vec![vec![0, 1, 2], vec![0, 1, 3]],
            vec![vec![0, 2, 3], vec![1, 2, 3]],
        ],
    )
    .expect("hemispheres cover the sphere");
    (s, u)
}

/// Barycentric subdivision of `n_complex` together with the covering of the
/// subdivision by the closed stars of the original vertices. The nerve of
/// this covering is `n_complex` again.
pub fn closed_star_covering(
    n_complex: &SimplicialComplex,
) -> (SimplicialComplex, Vec<RatMatrix>, Covering) {
    let (sd, chain_maps) = n_complex.barycentric_subdivision();
    let mut element_generators = Vec::new();
    for name in n_complex.vertex_names() {
        let sd_vertex = sd
            .vertex_index(&format!("{{{name}}}"))
            .expect("original vertices appear as barycenters");
        let star: Vec<Vec<usize>> = sd.closed_star(sd_vertex).into_iter().collect();
        element_generators.push(star);
    }
    let covering = Covering::new(
        sd.clone(),
        n_complex.vertex_names().to_vec(),
        element_generators,
    )
    .expect("closed vertex stars cover the subdivision");
    (sd, chain_maps, covering)
}

/// True when the augmented cochain complex of the subcomplex is exact, i.e.
/// the subcomplex is nonempty, connected and has trivial reduced cohomology.
pub fn is_acyclic_complex(x: &SimplicialComplex) -> bool {
    if x.is_empty() {
        return false;
    }
    let augmented = x.cochain_complex(true);
    (-1..=x.dim()).all(|q| augmented.betti(q) == 0)
}

/// A random complex with at most `max_vertices` vertices.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let gens = rng.gen_range(1..=(n + 2));
    let mut tuples = Vec::new();
    for _ in 0..gens {
        let size = rng.gen_range(1..=3.min(n));
        let mut t: Vec<usize> = (0..n).collect();
        t.shuffle(rng);
        t.truncate(size);
        tuples.push(t);
    }
    SimplicialComplex::closure_indexed(names, &tuples)
}

/// A random fine covering: every facet is assigned to at least one element,
/// occasionally to two, so elements overlap.
pub fn random_fine_covering(rng: &mut impl Rng, x: &SimplicialComplex) -> Covering {
    let facets: Vec<Vec<usize>> = x
        .simplex_set()
        .iter()
        .filter(|s| {
            !x.simplex_set()
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
        })
        .cloned()
        .collect();
    let k = rng.gen_range(2..=4usize).min(facets.len().max(1));
    let mut gens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
    for f in &facets {
        let first = rng.gen_range(0..k);
        gens[first].push(f.clone());
        if rng.gen_bool(0.4) {
            let second = rng.gen_range(0..k);
            gens[second].push(f.clone());
        }
    }
    // make sure no element is empty so every index is a nerve vertex
    for (i, g) in gens.iter_mut().enumerate() {
        if g.is_empty() {
            g.push(facets[i % facets.len()].clone());
        }
    }
    let names: Vec<String> = (0..k).map(|i| format!("U{i}")).collect();
    Covering::new(x.clone(), names, gens).expect("facet assignment is fine")
}

/// A random fine covering all of whose supports are acyclic. Falls back to a
/// polygon arc covering when rejection sampling runs out of attempts.
pub fn random_acyclic_covering(rng: &mut impl Rng) -> (SimplicialComplex, Covering) {
    for _ in 0..200 {
        let x = random_complex(rng, 8);
        if x.is_empty() {
            continue;
        }
        let u = random_fine_covering(rng, &x);
        let nerve = u.nerve();
        let all_acyclic = nerve.complex().simplex_set().iter().all(|sigma| {
            let support = nerve.support(sigma).expect("simplex of the nerve");
            is_acyclic_complex(&support)
        });
        if all_acyclic {
            return (x, u);
        }
    }
    let n = rng.gen_range(3..=6);
    polygon_arc_covering(n)
}

/// A random covering of `0..ground` by subsets.
pub fn random_set_covering(rng: &mut impl Rng, ground: usize, members: usize) -> SetFamily {
    loop {
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); members];
        for z in 0..ground {
            let home = rng.gen_range(0..members);
            sets[home].push(z);
            if rng.gen_bool(0.3) {
                sets[rng.gen_range(0..members)].push(z);
            }
        }
        let family = SetFamily::over(ground, sets);
        if family.is_covering() {
            return family;
        }
    }
}

/// A random covering that barycentrically refines `coarse`: a partition whose
/// blocks are grouped inside members of `coarse`, with occasional extra
/// singleton members.
pub fn random_barycentric_refinement(rng: &mut impl Rng, coarse: &SetFamily) -> SetFamily {
    let ground = coarse.ground_size();
    // assign every point a home member of `coarse` it belongs to, and split
    // each group into one or two blocks
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..coarse.len() {
        let mut group: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
        for &z in coarse.member(i) {
            // claim z only if no earlier member already owns it
            let owner = (0..coarse.len()).find(|&j| coarse.member(j).contains(&z)).unwrap();
            if owner == i {
                group[rng.gen_range(0..2)].push(z);
            }
        }
        for g in group {
            if !g.is_empty() {
                blocks.push(g);
            }
        }
    }
    if rng.gen_bool(0.5) {
        blocks.push(vec![rng.gen_range(0..ground)]);
    }
    SetFamily::over(ground, blocks)
}

/// A random triple `(a, b, c)` with `a` barycentrically refining `b` and `b`
/// barycentrically refining `c`.
pub fn random_refinement_triple(rng: &mut impl Rng) -> (SetFamily, SetFamily, SetFamily) {
    let ground = rng.gen_range(3..=8);
    let members = rng.gen_range(2..=3);
    let c = random_set_covering(rng, ground, members);
    let b = random_barycentric_refinement(rng, &c);
    let a = random_barycentric_refinement(rng, &b);
    (a, b, c)
}

/// A random morphism of coverings. Half the time the base map is the
/// identity and the source covering shrinks the target's elements; otherwise
/// the base map identifies vertices and the target is the image covering.
pub fn random_covering_morphism(rng: &mut impl Rng) -> CoveringMorphism {
    loop {
        let y = random_complex(rng, 6);
        if y.is_empty() {
            continue;
        }
        let v = random_fine_covering(rng, &y);
        if rng.gen_bool(0.5) {
            // shrink every element around an assignment of simplices
            let k = v.len();
            let mut gens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
            for s in y.simplex_set() {
                let homes: Vec<usize> =
                    (0..k).filter(|&i| v.element(i).contains(s)).collect();
                let pick = homes[rng.gen_range(0..homes.len())];
                gens[pick].push(s.clone());
            }
            let names: Vec<String> = (0..k).map(|i| format!("W{i}")).collect();
            let u = Covering::new(y.clone(), names, gens).expect("assignment stays fine");
            let map = SimplicialMap::identity(&y);
            return CoveringMorphism::new(map, u, v).expect("shrinking is a morphism");
        } else {
            // identify vertices along a random merge
            let n = y.vertex_names().len();
            let targets = rng.gen_range(1..=n);
            let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..targets)).collect();
            let z_names: Vec<String> = (0..targets).map(|i| format!("z{i}")).collect();
            let gens: Vec<Vec<usize>> = y
                .simplex_set()
                .iter()
                .map(|s| {
                    let mut img: Vec<usize> = s.iter().map(|&v| assignment[v]).collect();
                    img.sort_unstable();
                    img.dedup();
                    img
                })
                .collect();
            let z = SimplicialComplex::closure_indexed(z_names, &gens);
            let map = SimplicialMap::new(y.clone(), z.clone(), assignment.clone())
                .expect("image complex contains all images");
            let image_gens: Vec<Vec<Vec<usize>>> = (0..v.len())
                .map(|i| {
                    v.element(i)
                        .iter()
                        .map(|s| {
                            let mut img: Vec<usize> =
                                s.iter().map(|&vv| assignment[vv]).collect();
                            img.sort_unstable();
                            img.dedup();
                            img
                        })
                        .collect()
                })
                .collect();
            let names: Vec<String> = (0..v.len()).map(|i| format!("V{i}")).collect();
            let w = Covering::new(z, names, image_gens).expect("image covering is fine");
            return CoveringMorphism::new(map, v, w).expect("images are contained by construction");
        }
    }
}

/// Enumerates every admissible element assignment of a covering morphism,
/// capped to keep the search small.
pub fn admissible_assignments(m: &CoveringMorphism, cap: usize) -> Vec<Vec<usize>> {
    let choices: Vec<Vec<usize>> = (0..m.source.len())
        .map(|j| m.admissible_targets(j))
        .collect();
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for c in &choices {
        let mut next = Vec::new();
        for partial in &out {
            for &k in c {
                if next.len() >= cap {
                    break;
                }
                let mut longer = partial.clone();
                longer.push(k);
                next.push(longer);
            }
        }
        out = next;
    }
    out
}

/// A random subset of `0..n`, possibly empty.
pub fn random_subset(rng: &mut impl Rng, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn acyclicity_oracle() {
        assert!(is_acyclic_complex(&full_triangle()));
        assert!(is_acyclic_complex(&point()));
        assert!(!is_acyclic_complex(&circle3()));
        assert!(!is_acyclic_complex(&circle3_disjoint_point()));
    }

    #[test]
    fn random_generators_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = random_complex(&mut rng, 8);
            if x.is_empty() {
                continue;
            }
            let u = random_fine_covering(&mut rng, &x);
            let nerve = u.nerve();
            assert!(nerve.complex().simplex_count() >= 1);
        }
        for _ in 0..5 {
            let (a, b, c) = random_refinement_triple(&mut rng);
            assert!(crate::families::is_barycentric_refinement(&a, &b).unwrap());
            assert!(crate::families::is_barycentric_refinement(&b, &c).unwrap());
        }
    }

    #[test]
    fn closed_star_covering_nerve_is_original() {
        for n in [circle3(), full_triangle(), sphere2()] {
            let (_, _, covering) = closed_star_covering(&n);
            let nerve = covering.nerve();
            assert_eq!(nerve.complex().simplex_set(), n.simplex_set());
        }
    }
}
