//! Randomized property suites behind the `verify` subcommand: every
//! structural identity of the crate, checked exactly on the shipped fixtures
//! and on seeded random instances. Failures carry a human-readable
//! counterexample description.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bicomplex::{compare_totals, edge_iso_matrix, edge_projection_matrix, BiMorphism};
use crate::covering::Covering;
use crate::families::{is_barycentric_refinement, is_combinatorial_refinement, is_star_refinement};
use crate::fixtures;
use crate::leray::{
    homology_leray_map, is_acyclic, leray_map, ChainHomotopy, CochainHomotopy, CoveringComplex,
    HomCoveringComplex,
};
use crate::matrix::{vec_is_zero, QuotientBasis, RatMatrix};
use crate::norms::{l1_norm, l1_seminorm, l1_seminorm_cycle, linf_seminorm, pairing};
use crate::rat::{rat_int, one, zero, Rational};
use crate::simplicial::{is_invertible, induced_on_quotients, MapVariance, SimplicialMap};
use crate::systems::{ChainSystem, CochainSystem};

#[derive(Clone, Debug)]
pub struct PropertyOutcome {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    fn new(name: &str) -> Self {
        PropertyOutcome {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    pub fn to_value(&self) -> Value {
        json!({
            "seed": self.seed,
            "verdict": if self.passed() { "pass" } else { "fail" },
            "suites": self
                .outcomes
                .iter()
                .map(|o| json!({
                    "name": o.name,
                    "checks": o.checks,
                    "failures": o.failures,
                }))
                .collect::<Vec<_>>(),
        })
    }

    /// The first failing property, if any.
    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.outcomes.iter().find_map(|o| {
            o.failures
                .first()
                .map(|f| (o.name.as_str(), f.as_str()))
        })
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    let mut m = RatMatrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.5) {
                m.set(i, j, rat_int(rng.gen_range(-3..=3)));
            }
        }
    }
    m
}

fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rat_int(rng.gen_range(-3..=3))).collect()
}

fn exact_linear_algebra(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 1);
    let mut kernels = PropertyOutcome::new("exactla.rank_nullity_and_kernels");
    for _ in 0..40 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, rows, cols);
        let k = m.kernel_basis();
        kernels.check(m.rank() + k.len() == m.cols(), || {
            format!("rank-nullity fails on {:?}", m.to_strings())
        });
        for v in &k {
            kernels.check(vec_is_zero(&m.mul_vec(v)), || {
                format!("kernel vector is not annihilated on {:?}", m.to_strings())
            });
        }
        // solving a consistent system succeeds exactly
        let x = random_vector(&mut rng, cols);
        let b = m.mul_vec(&x);
        let sol = m.solve_particular(&b).unwrap();
        kernels.check(
            sol.map(|s| m.mul_vec(&s) == b).unwrap_or(false),
            || format!("solve fails on {:?}", m.to_strings()),
        );
        // determinism
        kernels.check(m.kernel_basis() == k && m.rank() + k.len() == cols, || {
            "repeated runs disagree".to_string()
        });
    }
    let mut quotients = PropertyOutcome::new("exactla.quotient_linearity");
    for _ in 0..25 {
        let ambient = rng.gen_range(1..=5);
        let big = RatMatrix::identity(ambient);
        let sub_cols = rng.gen_range(0..=ambient);
        let sub = random_matrix(&mut rng, ambient, sub_cols);
        let q = QuotientBasis::new(&big, &sub).unwrap();
        let w1 = random_vector(&mut rng, ambient);
        let w2 = random_vector(&mut rng, ambient);
        let lhs = q
            .coords(&crate::matrix::vec_add(&w1, &w2))
            .unwrap();
        let rhs = crate::matrix::vec_add(&q.coords(&w1).unwrap(), &q.coords(&w2).unwrap());
        quotients.check(lhs == rhs, || "coordinates are not additive".to_string());
        for j in 0..sub.cols() {
            let c = q.coords(&sub.column(j)).unwrap();
            quotients.check(vec_is_zero(&c), || {
                "a sub-space column has nonzero class".to_string()
            });
        }
    }
    vec![kernels, quotients]
}

fn simplicial_suites(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 2);
    let mut boundaries = PropertyOutcome::new("simplicial.boundary_squares_to_zero");
    let mut betti = PropertyOutcome::new("simplicial.homology_equals_cohomology_rank");
    for _ in 0..12 {
        let x = fixtures::random_complex(&mut rng, 8);
        for p in 1..=x.dim() {
            let second = x.boundary_matrix(p - 1);
            let first = x.boundary_matrix(p);
            boundaries.check(second.mul(&first).is_zero_matrix(), || {
                format!("boundary squared nonzero at degree {p}")
            });
        }
        for p in 0..=x.dim() {
            betti.check(
                x.homology_basis(p).dim() == x.cohomology_basis(p).dim(),
                || format!("betti mismatch at degree {p}"),
            );
        }
    }
    let mut subdivision = PropertyOutcome::new("simplicial.subdivision_comparison");
    for x in [
        fixtures::circle3(),
        fixtures::full_triangle(),
        fixtures::sphere2(),
    ]
    .into_iter()
    .chain((0..3).map(|_| fixtures::random_complex(&mut rng, 5)))
    {
        if x.is_empty() {
            continue;
        }
        let (sd, maps) = x.barycentric_subdivision();
        for p in 1..=x.dim() {
            let lhs = sd.boundary_matrix(p).mul(&maps[p as usize]);
            let rhs = maps[(p - 1) as usize].mul(&x.boundary_matrix(p));
            subdivision.check(lhs == rhs, || {
                format!("subdivision map fails to be a chain map at degree {p}")
            });
        }
        for p in 0..=x.dim() {
            let induced = induced_on_quotients(
                &maps[p as usize],
                &x.homology_basis(p),
                &sd.homology_basis(p),
            );
            subdivision.check(is_invertible(&induced), || {
                format!("subdivision does not induce an isomorphism at degree {p}")
            });
        }
    }
    let mut functorial = PropertyOutcome::new("simplicial.induced_map_functoriality");
    for _ in 0..10 {
        // random pair of composable vertex merges
        let x = fixtures::random_complex(&mut rng, 5);
        if x.is_empty() {
            continue;
        }
        let n = x.vertex_names().len();
        let merge1: Vec<usize> = (0..n).map(|v| rng.gen_range(0..=v)).collect();
        let y_gens: Vec<Vec<usize>> = x
            .simplex_set()
            .iter()
            .map(|s| s.iter().map(|&v| merge1[v]).collect())
            .collect();
        let y = crate::simplicial::SimplicialComplex::closure_indexed(
            (0..n).map(|i| format!("y{i}")).collect(),
            &y_gens,
        );
        let f = SimplicialMap::new(x.clone(), y.clone(), merge1).unwrap();
        let m = y.vertex_names().len();
        let merge2: Vec<usize> = (0..m).map(|v| rng.gen_range(0..=v)).collect();
        let z_gens: Vec<Vec<usize>> = y
            .simplex_set()
            .iter()
            .map(|s| s.iter().map(|&v| merge2[v]).collect())
            .collect();
        let z = crate::simplicial::SimplicialComplex::closure_indexed(
            (0..m).map(|i| format!("z{i}")).collect(),
            &z_gens,
        );
        let g = SimplicialMap::new(y.clone(), z.clone(), merge2).unwrap();
        let gf = f.compose(&g).unwrap();
        for p in 0..=x.dim() {
            let lhs = gf.induced_map(p, MapVariance::Homology);
            let rhs = g
                .induced_map(p, MapVariance::Homology)
                .mul(&f.induced_map(p, MapVariance::Homology));
            functorial.check(lhs == rhs, || {
                format!("homology functoriality fails at degree {p}")
            });
        }
    }
    vec![boundaries, betti, subdivision, functorial]
}

fn covering_suites(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 3);
    let mut monotone = PropertyOutcome::new("coverings.support_monotone");
    for _ in 0..10 {
        let x = fixtures::random_complex(&mut rng, 7);
        if x.is_empty() {
            continue;
        }
        let u = fixtures::random_fine_covering(&mut rng, &x);
        let nerve = u.nerve();
        for sigma in nerve.complex().simplex_set() {
            for i in 0..sigma.len() {
                let mut tau = sigma.clone();
                tau.remove(i);
                if tau.is_empty() {
                    continue;
                }
                let sup_small = nerve.support_set(sigma).unwrap();
                let sup_big = nerve.support_set(&tau).unwrap();
                monotone.check(sup_small.is_subset(sup_big), || {
                    format!("support not monotone at {sigma:?}")
                });
            }
        }
    }
    let mut refinement = PropertyOutcome::new("coverings.refinement_nerve_containment");
    for _ in 0..20 {
        let ground = rng.gen_range(3..=8);
        let members = rng.gen_range(2..=4);
        let g = fixtures::random_set_covering(&mut rng, ground, members);
        // shrink members to build a combinatorial refinement
        let shrunk: Vec<Vec<usize>> = (0..g.len())
            .map(|i| {
                g.member(i)
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.7))
                    .collect()
            })
            .collect();
        let f = crate::families::SetFamily::over(ground, shrunk);
        if !is_combinatorial_refinement(&f, &g).unwrap() {
            continue;
        }
        refinement.check(
            f.nerve_simplices().is_subset(&g.nerve_simplices()),
            || "nerve of a refinement is not contained".to_string(),
        );
    }
    let mut double = PropertyOutcome::new("families.double_refinement");
    for _ in 0..200 {
        let (a, b, c) = fixtures::random_refinement_triple(&mut rng);
        let hyp = is_barycentric_refinement(&a, &b).unwrap()
            && is_barycentric_refinement(&b, &c).unwrap();
        double.check(hyp, || "generated triple misses the hypothesis".to_string());
        double.check(is_star_refinement(&a, &c).unwrap(), || {
            "barycentric twice does not star-refine".to_string()
        });
    }
    let mut phi = PropertyOutcome::new("coverings.nerve_map_choice_independence");
    let mut tried = 0;
    while tried < 20 {
        let m = fixtures::random_covering_morphism(&mut rng);
        let assignments = fixtures::admissible_assignments(&m, 24);
        if assignments.len() < 2 {
            continue;
        }
        tried += 1;
        let reference = m.nerve_map_with(&assignments[0]).unwrap();
        let top = m.source.nerve().dim().max(m.target.nerve().dim()).max(0);
        for alt in assignments.iter().skip(1) {
            let other = m.nerve_map_with(alt).unwrap();
            for p in 0..=top {
                phi.check(
                    reference.induced_map(p, MapVariance::Cohomology)
                        == other.induced_map(p, MapVariance::Cohomology),
                    || format!("induced maps differ for choices {:?} vs {alt:?}", assignments[0]),
                );
            }
        }
    }
    vec![monotone, refinement, double, phi]
}

fn bicomplex_suites(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 4);
    let mut squares = PropertyOutcome::new("bicomplex.grid_identities");
    for _ in 0..8 {
        let x = fixtures::random_complex(&mut rng, 6);
        if x.is_empty() {
            continue;
        }
        let u = fixtures::random_fine_covering(&mut rng, &x);
        let system = match CochainSystem::full(&u.nerve()) {
            Ok(s) => s,
            Err(e) => {
                squares.check(false, || format!("system construction failed: {e}"));
                continue;
            }
        };
        // the constructors check d^2 = 0, commutation and the twist; reaching
        // here means the grid identities hold
        match CoveringComplex::new(&u, system) {
            Ok(kc) => squares.check(
                kc.total.complex.check().is_ok(),
                || "total differential does not square to zero".to_string(),
            ),
            Err(e) => squares.check(false, || format!("grid construction failed: {e}")),
        }
    }
    let mut edges = PropertyOutcome::new("bicomplex.edge_reduction_two_routes");
    {
        let (_, a3) = fixtures::circle3_with_arcs();
        let system = CochainSystem::full(&a3.nerve()).unwrap();
        let kc = CoveringComplex::new(&a3, system).unwrap();
        for n in 0..=2usize {
            let inc = edge_iso_matrix(&kc.double, n).unwrap();
            let proj = edge_projection_matrix(&kc.double, n).unwrap();
            edges.check(
                inc.mul(&proj) == RatMatrix::identity(inc.rows())
                    && proj.mul(&inc) == RatMatrix::identity(proj.rows()),
                || format!("edge inclusion and reduction are not inverse in degree {n}"),
            );
        }
        // postcondition on random coboundaries
        for n in 1..=2usize {
            for _ in 0..10 {
                let w = random_vector(&mut rng, kc.total.dim(n as i32 - 1));
                let z = kc.total.complex.map_at(n as i32 - 1).mul_vec(&w);
                let red =
                    crate::bicomplex::edge_reduce_cocycle(&kc.double, &kc.total, n, &z).unwrap();
                let back = crate::matrix::vec_add(
                    &kc.total.inject(n, n.min(1), 0, &red.edge_element)
                        .iter()
                        .map(|x| x.clone())
                        .collect::<Vec<_>>(),
                    &kc.total.complex.map_at(n as i32 - 1).mul_vec(&red.correction),
                );
                edges.check(back == z, || {
                    format!("reduction postcondition fails in degree {n}")
                });
            }
        }
    }
    let mut comparison = PropertyOutcome::new("bicomplex.quasi_isomorphism_comparison");
    let mut built = 0;
    while built < 50 {
        // base grid from a random covering, target = base plus an exact row
        // summand; the inclusion is a row-quasi-isomorphism by construction
        let x = fixtures::random_complex(&mut rng, 5);
        if x.is_empty() {
            continue;
        }
        let u = fixtures::random_fine_covering(&mut rng, &x);
        let Ok(system) = CochainSystem::full(&u.nerve()) else {
            continue;
        };
        let Ok(kc) = CoveringComplex::new(&u, system) else {
            continue;
        };
        let k = &kc.double;
        if k.q_max() < 1 {
            continue;
        }
        built += 1;
        let p_max = k.p_max();
        let q_max = k.q_max();
        // pad each row with an identity two-term complex at a random spot
        let spot = rng.gen_range(0..q_max);
        let pad = rng.gen_range(0..=2usize);
        let mut labels = Vec::new();
        let mut d = Vec::new();
        let mut delta = Vec::new();
        let mut blocks = Vec::new();
        for p in 0..=p_max {
            let mut row_labels = Vec::new();
            let mut row_d = Vec::new();
            let mut row_delta = Vec::new();
            let mut row_blocks = Vec::new();
            for q in 0..=q_max {
                let extra = if q == spot || q == spot + 1 { pad } else { 0 };
                let dim = k.dim(p, q) + extra;
                row_labels.push((0..dim).map(|i| format!("b{p}.{q}.{i}")).collect::<Vec<_>>());
                // d: diagonal blocks (original, identity on the pad)
                let next_extra = if q + 1 == spot || q + 1 == spot + 1 { pad } else { 0 };
                let mut dm = RatMatrix::zero(
                    if q == q_max { 0 } else { k.dim(p, q + 1) + next_extra },
                    dim,
                );
                if q < q_max {
                    dm.paste(0, 0, k.d(p, q));
                    if q == spot && pad > 0 {
                        dm.paste(k.dim(p, q + 1), k.dim(p, q), &RatMatrix::identity(pad));
                    }
                }
                row_d.push(dm);
                // delta: original blocks, zero on the pad
                let down_dim = if p == p_max { 0 } else { k.dim(p + 1, q) + if q == spot || q == spot + 1 { pad } else { 0 } };
                let mut em = RatMatrix::zero(down_dim, dim);
                if p < p_max {
                    em.paste(0, 0, k.delta_raw(p, q));
                }
                row_delta.push(em);
                // the inclusion of the original block
                let mut f = RatMatrix::zero(dim, k.dim(p, q));
                f.paste(0, 0, &RatMatrix::identity(k.dim(p, q)));
                row_blocks.push(f);
            }
            labels.push(row_labels);
            d.push(row_d);
            delta.push(row_delta);
            blocks.push(row_blocks);
        }
        let padded = match crate::bicomplex::DoubleComplex::from_commuting(
            crate::bicomplex::BiVariance::Cohomological,
            labels,
            d,
            delta,
        ) {
            Ok(p) => p,
            Err(e) => {
                comparison.check(false, || format!("padded grid invalid: {e}"));
                continue;
            }
        };
        let f = BiMorphism { blocks };
        for n in 0..=(p_max + q_max) {
            match compare_totals(&f, k, &padded, n) {
                Ok(m) => comparison.check(is_invertible(&m), || {
                    format!("comparison map is not invertible in degree {n}")
                }),
                Err(e) => comparison.check(false, || format!("comparison failed: {e}")),
            }
        }
    }
    vec![squares, edges, comparison]
}

fn leray_suites(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 5);
    let mut homotopy = PropertyOutcome::new("leray.contracting_homotopy_identities");
    {
        let (_, a3) = fixtures::circle3_with_arcs();
        let system = CochainSystem::full(&a3.nerve()).unwrap();
        let kc = CoveringComplex::new(&a3, system).unwrap();
        let h = CochainHomotopy::new(&a3, &kc);
        for q in 0..2usize {
            let k1 = h.k_matrix(1, q);
            let d0 = kc.double.delta_raw(0, q).clone();
            for _ in 0..50 {
                let c = random_vector(&mut rng, kc.double.dim(1, q));
                let lhs = d0.mul_vec(&k1.mul_vec(&c));
                homotopy.check(lhs == c, || format!("cochain identity fails at q={q}"));
            }
        }
        let hsystem = ChainSystem::full(&a3.nerve()).unwrap();
        let hkc = HomCoveringComplex::new(&a3, hsystem).unwrap();
        let hh = ChainHomotopy::new(&a3, &hkc);
        for q in 0..2usize {
            let k0 = hh.k_matrix(0, q);
            let d1 = hkc.double.delta_raw(1, q).clone();
            for _ in 0..50 {
                let c = random_vector(&mut rng, hkc.double.dim(1, q));
                let lhs = k0.mul_vec(&d1.mul_vec(&c));
                homotopy.check(lhs == c, || format!("chain identity fails at q={q}"));
            }
        }
    }
    let mut acyclic_lambda = PropertyOutcome::new("leray.acyclic_lambda_isomorphism");
    let mut tau_fine = PropertyOutcome::new("leray.tau_isomorphism_on_fine_coverings");
    let mut two_routes = PropertyOutcome::new("leray.two_route_equality");
    for i in 0..6 {
        let (x, u) = if i == 0 {
            let (c3, a3) = fixtures::circle3_with_arcs();
            (c3, a3)
        } else {
            fixtures::random_acyclic_covering(&mut rng)
        };
        let nerve = u.nerve();
        let system = CochainSystem::full(&nerve).unwrap();
        let report = is_acyclic(&nerve, &system).unwrap();
        if !report.acyclic {
            acyclic_lambda.check(false, || "generator returned a non-acyclic covering".into());
            continue;
        }
        let kc = CoveringComplex::new(&u, system).unwrap();
        let top = nerve.dim().max(x.dim()).max(0) as usize;
        for n in 0..=top {
            acyclic_lambda.check(is_invertible(&kc.lambda_star(n)), || {
                format!("lambda_* not invertible in degree {n}")
            });
            tau_fine.check(is_invertible(&kc.tau_star(n)), || {
                format!("tau_* not invertible in degree {n}")
            });
        }
        match leray_map(&u) {
            Ok(l) => {
                two_routes.check(l.matrices == l.matrices_by_reduction, || {
                    "routes disagree".to_string()
                });
                for m in &l.matrices {
                    two_routes.check(is_invertible(m), || {
                        "canonical map of an acyclic covering is not invertible".to_string()
                    });
                }
            }
            Err(e) => two_routes.check(false, || format!("canonical map failed: {e}")),
        }
        match homology_leray_map(&u) {
            Ok(l) => two_routes.check(l.matrices == l.matrices_by_reduction, || {
                "homology routes disagree".to_string()
            }),
            Err(e) => two_routes.check(false, || format!("homology map failed: {e}")),
        }
    }
    // tau is an isomorphism for every fine covering, acyclic or not
    for _ in 0..4 {
        let x = fixtures::random_complex(&mut rng, 6);
        if x.is_empty() {
            continue;
        }
        let u = fixtures::random_fine_covering(&mut rng, &x);
        let nerve = u.nerve();
        let system = CochainSystem::full(&nerve).unwrap();
        let kc = CoveringComplex::new(&u, system).unwrap();
        for n in 0..=(nerve.dim().max(x.dim()).max(0) as usize) {
            tau_fine.check(is_invertible(&kc.tau_star(n)), || {
                format!("tau_* not invertible in degree {n} on a fine covering")
            });
        }
        match leray_map(&u) {
            Ok(l) => two_routes.check(l.matrices == l.matrices_by_reduction, || {
                "routes disagree on a non-acyclic covering".to_string()
            }),
            Err(e) => two_routes.check(false, || format!("canonical map failed: {e}")),
        }
    }
    let mut functorial = PropertyOutcome::new("leray.transformation_square");
    let mut built = 0;
    while built < 20 {
        let m = fixtures::random_covering_morphism(&mut rng);
        built += 1;
        let l_u = match leray_map(&m.source) {
            Ok(l) => l,
            Err(e) => {
                functorial.check(false, || format!("source map failed: {e}"));
                continue;
            }
        };
        let l_v = match leray_map(&m.target) {
            Ok(l) => l,
            Err(e) => {
                functorial.check(false, || format!("target map failed: {e}"));
                continue;
            }
        };
        let nerve_map = m.nerve_map().unwrap();
        let top = (m.source.nerve().dim())
            .max(m.target.nerve().dim())
            .max(m.source.base().dim())
            .max(m.target.base().dim())
            .max(0) as usize;
        for n in 0..=top {
            let phi_star = nerve_map.induced_map(n as i32, MapVariance::Cohomology);
            let f_star = m.map.induced_map(n as i32, MapVariance::Cohomology);
            let zero_u = RatMatrix::zero(
                m.source.base().cohomology_basis(n as i32).dim(),
                m.source.nerve().complex().cohomology_basis(n as i32).dim(),
            );
            let lu = l_u.matrices.get(n).unwrap_or(&zero_u);
            let zero_v = RatMatrix::zero(
                m.target.base().cohomology_basis(n as i32).dim(),
                m.target.nerve().complex().cohomology_basis(n as i32).dim(),
            );
            let lv = l_v.matrices.get(n).unwrap_or(&zero_v);
            let lhs = f_star.mul(lv);
            let rhs = lu.mul(&phi_star);
            functorial.check(lhs == rhs, || {
                format!("the square does not commute in degree {n}")
            });
        }
    }
    let mut degree_zero = PropertyOutcome::new("leray.degree_zero_normalization");
    for x in [
        fixtures::circle3(),
        fixtures::full_triangle(),
        fixtures::sphere2(),
    ] {
        let u = Covering::whole(x);
        let l = leray_map(&u).unwrap();
        degree_zero.check(l.matrices[0] == RatMatrix::identity(1), || {
            "degree-0 map of the one-element covering is not the canonical isomorphism"
                .to_string()
        });
    }
    vec![
        homotopy,
        acyclic_lambda,
        tau_fine,
        two_routes,
        functorial,
        degree_zero,
    ]
}

fn norm_suites(seed: u64) -> Vec<PropertyOutcome> {
    let mut rng = rng_for(seed, 6);
    let mut axioms = PropertyOutcome::new("norms.seminorm_axioms");
    let mut independence = PropertyOutcome::new("norms.representative_independence");
    let mut duality = PropertyOutcome::new("norms.strong_duality_certificates");
    let mut bound = PropertyOutcome::new("norms.pairing_bound");
    let mut dims = PropertyOutcome::new("norms.l1_homology_rank");
    let fixtures_list = vec![
        fixtures::circle3(),
        fixtures::circle3_disjoint_point(),
        fixtures::polygon(4),
    ];
    for x in &fixtures_list {
        for p in 0..=x.dim() {
            let basis = x.homology_basis(p);
            dims.check(
                basis.dim() == x.chain_complex(false).homology(p).dim(),
                || "chain-level rank disagrees".to_string(),
            );
            if basis.dim() == 0 {
                continue;
            }
            let h = random_vector(&mut rng, basis.dim());
            let r = l1_seminorm(x, p, &h).unwrap();
            duality.check(!r.dual.is_empty() || r.value == zero(), || {
                "missing dual certificate".to_string()
            });
            // homogeneity and the triangle inequality
            let lam = rat_int(rng.gen_range(-3..=3));
            let scaled: Vec<Rational> = h.iter().map(|c| c * &lam).collect();
            let r_scaled = l1_seminorm(x, p, &scaled).unwrap();
            axioms.check(
                r_scaled.value == crate::rat::abs(&lam) * r.value.clone(),
                || "homogeneity fails".to_string(),
            );
            let h2 = random_vector(&mut rng, basis.dim());
            let r2 = l1_seminorm(x, p, &h2).unwrap();
            let sum: Vec<Rational> = h.iter().zip(&h2).map(|(a, b)| a + b).collect();
            let r_sum = l1_seminorm(x, p, &sum).unwrap();
            axioms.check(
                r_sum.value <= r.value.clone() + r2.value.clone(),
                || "triangle inequality fails".to_string(),
            );
            let zero_class = vec![zero(); basis.dim()];
            axioms.check(
                l1_seminorm(x, p, &zero_class).unwrap().value == zero(),
                || "zero class has nonzero seminorm".to_string(),
            );
            // representative independence: shift by a random boundary
            let z = basis.representative(&h);
            let boundary = x.boundary_matrix(p + 1);
            let b = random_vector(&mut rng, boundary.cols());
            let shifted = crate::matrix::vec_add(&z, &boundary.mul_vec(&b));
            let r_shifted = l1_seminorm_cycle(x, p, &shifted).unwrap();
            independence.check(r_shifted.value == r.value, || {
                "seminorm depends on the representative".to_string()
            });
        }
    }
    // pairing bound on many random pairs
    for x in &fixtures_list {
        for p in 0..=x.dim() {
            let hb = x.homology_basis(p);
            let cb = x.cohomology_basis(p);
            if hb.dim() == 0 || cb.dim() == 0 {
                continue;
            }
            for _ in 0..40 {
                let h = random_vector(&mut rng, hb.dim());
                let a = random_vector(&mut rng, cb.dim());
                let val = pairing(x, p, &h, &a).unwrap();
                let l1 = l1_seminorm(x, p, &h).unwrap().value;
                let linf = linf_seminorm(x, p, &a).unwrap().value;
                bound.check(crate::rat::abs(&val) <= l1.clone() * linf.clone(), || {
                    "pairing exceeds the product of seminorms".to_string()
                });
            }
        }
    }
    // duality equality on the basis classes of the fixtures
    let mut lp_duality = PropertyOutcome::new("norms.l1_linf_duality");
    for x in &fixtures_list {
        for p in 0..=x.dim() {
            let rep = crate::norms::duality_check(x, p).unwrap();
            lp_duality.check(rep.all_equal, || {
                format!("duality fails in degree {p}")
            });
        }
    }
    // l1 norms are exact on explicit chains too
    let mut explicit = PropertyOutcome::new("norms.norm_evaluation");
    let v = vec![rat_int(2), rat_int(-3), zero(), one()];
    explicit.check(l1_norm(&v) == rat_int(6), || "l1 of a vector".to_string());
    vec![
        axioms,
        independence,
        duality,
        bound,
        dims,
        lp_duality,
        explicit,
    ]
}

/// Runs every suite with the given seed.
pub fn run_all(seed: u64) -> SuiteReport {
    let mut outcomes = Vec::new();
    outcomes.extend(exact_linear_algebra(seed));
    outcomes.extend(simplicial_suites(seed));
    outcomes.extend(covering_suites(seed));
    outcomes.extend(bicomplex_suites(seed));
    outcomes.extend(leray_suites(seed));
    outcomes.extend(norm_suites(seed));
    SuiteReport { seed, outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_seed_zero() {
        let report = run_all(0);
        if let Some((name, failure)) = report.first_failure() {
            panic!("{name}: {failure}");
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let a = run_all(3).to_value();
        let b = run_all(3).to_value();
        assert_eq!(a, b);
    }

    #[test]
    fn failing_reports_name_the_property() {
        let report = SuiteReport {
            seed: 0,
            outcomes: vec![
                PropertyOutcome {
                    name: "fine".into(),
                    checks: 3,
                    failures: vec![],
                },
                PropertyOutcome {
                    name: "broken.identity".into(),
                    checks: 1,
                    failures: vec!["counterexample at degree 2".into()],
                },
            ],
        };
        assert!(!report.passed());
        let (name, failure) = report.first_failure().unwrap();
        assert_eq!(name, "broken.identity");
        assert!(failure.contains("degree 2"));
        assert_eq!(report.to_value()["verdict"], "fail");
    }
}
