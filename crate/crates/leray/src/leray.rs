//! The covering double complex and the canonical homomorphisms between the
//! (co)homology of a space and of the nerve of a fine covering.
//!
//! The cohomological side assembles the grid `C^p(N, A^q)`, the morphisms
//! `lambda` (nerve cochains into the first column via augmentations) and
//! `tau` (base cochains into the first row via restrictions), and computes
//! the canonical homomorphism `H^n(N) -> H^n(X)` two independent ways: by
//! matching bases through the total cohomology, and by an explicit zig-zag
//! that pushes a cocycle across the grid with the contracting homotopy. The
//! two answers must agree exactly; a mismatch is a bug, never tolerance.
//!
//! The homological side mirrors this with direct sums `c_p(N, e_q)` and
//! produces the canonical map `H_n(X) -> H_n(N)`.

use num_traits::Zero;

use crate::bicomplex::{BiVariance, DoubleComplex, TotalComplex};
use crate::covering::{Covering, Nerve};
use crate::matrix::{vec_add, vec_is_zero, vec_sub, RatMatrix};
use crate::rat::{one, Rational};
use crate::simplicial::{induced_on_quotients, is_invertible, solve_through};
use crate::systems::{ChainSystem, CochainSystem};
use crate::{Error, Result};

/// The cohomological covering double complex with provenance tables mapping
/// each block coordinate back to its `(sigma, local index)` origin.
pub struct CoveringComplex {
    pub nerve: Nerve,
    pub system: CochainSystem,
    pub double: DoubleComplex,
    pub total: TotalComplex,
    /// nerve `p`-simplices in block order
    sigma_order: Vec<Vec<Vec<usize>>>,
    /// per `p`, per simplex position: offset of its slice inside block `(p,q)`
    offsets: Vec<Vec<Vec<usize>>>,
}

impl CoveringComplex {
    pub fn new(covering: &Covering, system: CochainSystem) -> Result<CoveringComplex> {
        let nerve = covering.nerve();
        let q_len = system.degree_count();
        let p_len = (nerve.dim().max(0) as usize) + 1;
        let mut sigma_order = Vec::new();
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        let mut d = Vec::new();
        let mut delta = Vec::new();
        for p in 0..p_len {
            let sigmas = nerve.simplices_of_dim(p as i32);
            let mut row_offsets = vec![Vec::new(); q_len];
            let mut row_labels = Vec::new();
            let mut row_d = Vec::new();
            for q in 0..q_len {
                let mut names = Vec::new();
                let mut offset = 0;
                for sigma in &sigmas {
                    row_offsets[q].push(offset);
                    let data = system.support(sigma)?;
                    for l in &data.labels[q] {
                        names.push(format!("{sigma:?}:{l}"));
                    }
                    offset += data.dim(q);
                }
                row_labels.push(names);
                // blockwise differential of the systems
                let rows: usize = if q + 1 < q_len {
                    sigmas
                        .iter()
                        .map(|s| system.support(s).map(|d| d.dim(q + 1)).unwrap_or(0))
                        .sum()
                } else {
                    0
                };
                let cols: usize = sigmas
                    .iter()
                    .map(|s| system.support(s).map(|d| d.dim(q)).unwrap_or(0))
                    .sum();
                let mut m = RatMatrix::zero(rows, cols);
                if q + 1 < q_len {
                    let mut ro = 0;
                    let mut co = 0;
                    for sigma in &sigmas {
                        let data = system.support(sigma)?;
                        m.paste(ro, co, &data.diffs[q]);
                        ro += data.dim(q + 1);
                        co += data.dim(q);
                    }
                }
                row_d.push(m);
            }
            sigma_order.push(sigmas);
            offsets.push(row_offsets);
            labels.push(row_labels);
            d.push(row_d);
        }
        for p in 0..p_len {
            let mut row_delta = Vec::new();
            for q in 0..q_len {
                if p + 1 >= p_len {
                    row_delta.push(RatMatrix::zero(0, labels[p][q].len()));
                    continue;
                }
                let mut m = RatMatrix::zero(labels[p + 1][q].len(), labels[p][q].len());
                for (si, sigma) in sigma_order[p + 1].iter().enumerate() {
                    let row_off = offsets[p + 1][q][si];
                    let mut sign = one();
                    for i in 0..sigma.len() {
                        let mut face = sigma.clone();
                        face.remove(i);
                        let fi = sigma_order[p]
                            .binary_search(&face)
                            .expect("face of a nerve simplex is a nerve simplex");
                        let col_off = offsets[p][q][fi];
                        let res = system.restriction(&face, sigma, q)?;
                        let signed = res.scale(&sign);
                        m.paste(row_off, col_off, &signed);
                        sign = -sign;
                    }
                }
                row_delta.push(m);
            }
            delta.push(row_delta);
        }
        let double = DoubleComplex::from_commuting(BiVariance::Cohomological, labels, d, delta)?;
        let total = double.total();
        Ok(CoveringComplex {
            nerve,
            system,
            double,
            total,
            sigma_order,
            offsets,
        })
    }

    fn q_len(&self) -> usize {
        self.system.degree_count()
    }

    fn p_len(&self) -> usize {
        self.sigma_order.len()
    }

    /// Offset of the `(sigma, local)` coordinate inside block `(p, q)`.
    pub fn coordinate(&self, p: usize, q: usize, sigma: &[usize], local: usize) -> usize {
        let si = self.sigma_order[p]
            .binary_search(&sigma.to_vec())
            .expect("simplex in block order");
        self.offsets[p][q][si] + local
    }

    /// Matrix of `lambda` in degree `p`: nerve cochains into the `(p, 0)`
    /// block of `T^p` through the augmentations of the supports.
    pub fn lambda_matrix(&self, p: usize) -> RatMatrix {
        let cols = self.sigma_order.get(p).map_or(0, Vec::len);
        let rows = self.total.dim(p as i32);
        let mut m = RatMatrix::zero(rows, cols);
        if p >= self.p_len() {
            return m;
        }
        for (j, sigma) in self.sigma_order[p].iter().enumerate() {
            let data = self.system.support(sigma).expect("support data");
            let block = self.total.inject(p, p, 0, &{
                let mut v = vec![Rational::zero(); self.double.dim(p, 0)];
                let off = self.offsets[p][0][j];
                for (i, x) in data.aug.column(0).into_iter().enumerate() {
                    v[off + i] = x;
                }
                v
            });
            m.set_column(j, &block);
        }
        m
    }

    /// Matrix of `tau` in degree `q`: base system cochains restricted into
    /// the `(0, q)` block of `T^q`.
    pub fn tau_matrix(&self, q: usize) -> RatMatrix {
        let base_dim = self.system.support(&[]).map(|d| d.dim(q)).unwrap_or(0);
        let rows = self.total.dim(q as i32);
        let mut m = RatMatrix::zero(rows, base_dim);
        if q >= self.q_len() {
            return m;
        }
        let mut block = RatMatrix::zero(self.double.dim(0, q), base_dim);
        for (si, sigma) in self.sigma_order[0].iter().enumerate() {
            let res = self
                .system
                .restriction(&[], sigma, q)
                .expect("restriction to a vertex support");
            block.paste(self.offsets[0][q][si], 0, &res);
        }
        for j in 0..base_dim {
            let v = self.total.inject(q, 0, q, &block.column(j));
            m.set_column(j, &v);
        }
        m
    }

    /// The cochain complex `A(X)` with the augmentation omitted, whose
    /// cohomology is the system cohomology of the base.
    pub fn base_system_complex(&self) -> crate::chain::ChainComplexRat {
        let data = self.system.support(&[]).expect("base support");
        crate::chain::ChainComplexRat::new(
            crate::chain::Variance::Cochain,
            0,
            data.labels.clone(),
            data.diffs.clone(),
        )
        .expect("system differentials compose to zero")
    }

    /// Induced `lambda_*: H^n(N) -> H^n(T)`.
    pub fn lambda_star(&self, n: usize) -> RatMatrix {
        let h_nerve = self.nerve.complex().cohomology_basis(n as i32);
        let h_total = self.total.complex.homology(n as i32);
        induced_on_quotients(&self.lambda_matrix(n), &h_nerve, &h_total)
    }

    /// Induced `tau_*: H_A^n(X) -> H^n(T)`.
    pub fn tau_star(&self, n: usize) -> RatMatrix {
        let h_base = self.base_system_complex().homology(n as i32);
        let h_total = self.total.complex.homology(n as i32);
        induced_on_quotients(&self.tau_matrix(n), &h_base, &h_total)
    }
}

/// Contracting-homotopy operators for the full simplicial cochain system of
/// a covering; the deterministic choice sends every simplex of the base to
/// the smallest covering element containing it.
pub struct CochainHomotopy<'a> {
    covering: &'a Covering,
    complex: &'a CoveringComplex,
}

impl<'a> CochainHomotopy<'a> {
    pub fn new(covering: &'a Covering, complex: &'a CoveringComplex) -> Self {
        CochainHomotopy { covering, complex }
    }

    /// `k_p: C^p(N, C^q) -> C^{p-1}(N, C^q)` for `p >= 1`.
    pub fn k_matrix(&self, p: usize, q: usize) -> RatMatrix {
        let kc = self.complex;
        let rows = kc.double.dim(p - 1, q);
        let cols = kc.double.dim(p, q);
        let mut m = RatMatrix::zero(rows, cols);
        for (ti, tau) in kc.sigma_order[p - 1].iter().enumerate() {
            let support = kc.system.support_complex(tau);
            for (ri, r) in support.simplices_of_dim(q as i32).iter().enumerate() {
                let u = self.covering.smallest_element_containing(r);
                if tau.contains(&u) {
                    continue;
                }
                let mut sigma = tau.clone();
                sigma.push(u);
                sigma.sort_unstable();
                let a = sigma.iter().position(|&v| v == u).unwrap();
                let sig_support = kc.system.support_complex(&sigma);
                let local = sig_support
                    .simplices_of_dim(q as i32)
                    .binary_search(r)
                    .expect("simplex lies in the smaller support");
                let row = kc.offsets[p - 1][q][ti] + ri;
                let col = kc.coordinate(p, q, &sigma, local);
                let sign = if a % 2 == 0 { one() } else { -one() };
                m.set(row, col, sign);
            }
        }
        m
    }

    /// The gluing map `C^0(N, C^q) -> C^q(X)` reading each base simplex off
    /// the chosen element.
    pub fn glue_matrix(&self, q: usize) -> RatMatrix {
        let kc = self.complex;
        let base = kc.system.support_complex(&[]);
        let simplices = base.simplices_of_dim(q as i32);
        let mut m = RatMatrix::zero(simplices.len(), kc.double.dim(0, q));
        for (i, r) in simplices.iter().enumerate() {
            let u = self.covering.smallest_element_containing(r);
            let support = kc.system.support_complex(&[u]);
            let local = support
                .simplices_of_dim(q as i32)
                .binary_search(r)
                .expect("simplex lies in its chosen element");
            m.set(i, kc.coordinate(0, q, &[u], local), one());
        }
        m
    }
}

/// Per-degree canonical homomorphisms `H^n(N) -> H^n(X)` with the witnesses
/// produced by the reduction route.
pub struct LerayResult {
    /// matrices indexed by degree
    pub matrices: Vec<RatMatrix>,
    /// the same maps computed by the zig-zag reduction
    pub matrices_by_reduction: Vec<RatMatrix>,
    /// per degree, per nerve class: the reduced base cocycle
    pub witnesses: Vec<Vec<Vec<Rational>>>,
}

impl LerayResult {
    pub fn matrix(&self, n: usize) -> &RatMatrix {
        &self.matrices[n]
    }

    pub fn degree_count(&self) -> usize {
        self.matrices.len()
    }
}

/// The canonical homomorphism for a fine covering, computed with the full
/// simplicial cochain system along both routes.
pub fn leray_map(covering: &Covering) -> Result<LerayResult> {
    let system = CochainSystem::full(&covering.nerve())?;
    let kc = CoveringComplex::new(covering, system)?;
    let homotopy = CochainHomotopy::new(covering, &kc);
    let base = kc.system.support_complex(&[]).clone();
    let n_max = kc.nerve.dim().max(base.dim()).max(0) as usize;
    let mut matrices = Vec::new();
    let mut matrices_by_reduction = Vec::new();
    let mut witnesses = Vec::new();
    for n in 0..=n_max {
        let h_nerve = kc.nerve.complex().cohomology_basis(n as i32);
        let h_base = base.cohomology_basis(n as i32);
        let lambda_star = kc.lambda_star(n);
        let tau_star = kc.tau_star(n);
        if !is_invertible(&tau_star) {
            return Err(Error::Precondition(format!(
                "tau does not induce an isomorphism in degree {n}"
            )));
        }
        let basis_route = solve_through(&tau_star, &lambda_star)?;
        // reduction route: push each lambda image across the grid
        let mut reduction = RatMatrix::zero(h_base.dim(), h_nerve.dim());
        let mut degree_witnesses = Vec::new();
        for (j, class_rep) in h_nerve.representatives().iter().enumerate() {
            let z = kc.lambda_matrix(n).mul_vec(class_rep);
            let gamma = reduce_to_base(&kc, &homotopy, n, &z)?;
            let coords = h_base.coords(&gamma)?;
            reduction.set_column(j, &coords);
            degree_witnesses.push(gamma);
        }
        if basis_route != reduction {
            return Err(Error::Precondition(format!(
                "the two routes for the canonical homomorphism disagree in degree {n}"
            )));
        }
        matrices.push(basis_route);
        matrices_by_reduction.push(reduction);
        witnesses.push(degree_witnesses);
    }
    Ok(LerayResult {
        matrices,
        matrices_by_reduction,
        witnesses,
    })
}

/// Pushes a total cocycle into the `(0, n)` corner with the contracting
/// homotopy and glues it to a base cocycle.
fn reduce_to_base(
    kc: &CoveringComplex,
    homotopy: &CochainHomotopy,
    n: usize,
    z: &[Rational],
) -> Result<Vec<Rational>> {
    debug_assert!(vec_is_zero(
        &kc.total.complex.map_at(n as i32).mul_vec(z)
    ));
    let mut z = z.to_vec();
    for p in (1..=n.min(kc.p_len() - 1)).rev() {
        let q = n - p;
        if q >= kc.q_len() {
            continue;
        }
        let block = kc
            .total
            .component(n, p, q, &z, kc.double.dim(p, q));
        if vec_is_zero(&block) {
            continue;
        }
        // the homotopy provides a preimage under the untwisted delta; fix the
        // sign so the twisted total differential cancels the block
        let y = homotopy.k_matrix(p, q).mul_vec(&block);
        let sign = if q % 2 == 0 { one() } else { -one() };
        let y_signed: Vec<Rational> = y.iter().map(|x| x * &sign).collect();
        let y_total = kc.total.inject(n - 1, p - 1, q, &y_signed);
        let dy = kc.total.complex.map_at(n as i32 - 1).mul_vec(&y_total);
        z = vec_sub(&z, &dy);
    }
    let corner = kc.total.component(n, 0, n, &z, kc.double.dim(0, n));
    debug_assert!(vec_is_zero(&vec_sub(&z, &kc.total.inject(n, 0, n, &corner))));
    let gamma = homotopy.glue_matrix(n).mul_vec(&corner);
    // the glued cochain reproduces the corner, i.e. the corner is a tau image
    debug_assert_eq!(kc.tau_matrix(n).mul_vec(&gamma), kc.total.inject(n, 0, n, &corner));
    Ok(gamma)
}

/// Per-simplex acyclicity report for a covering with a cochain system.
pub struct AcyclicityReport {
    pub acyclic: bool,
    /// failing `(sigma, degree)` pairs; degree -1 is the augmentation spot
    pub failures: Vec<(Vec<usize>, i32)>,
}

/// Checks that the augmented complex of every nonempty support is exact.
pub fn is_acyclic(nerve: &Nerve, system: &CochainSystem) -> Result<AcyclicityReport> {
    let mut failures = Vec::new();
    for sigma in nerve.complex().simplex_set() {
        let data = system.support(sigma)?;
        let q_len = system.degree_count();
        if data.aug.rank() != 1 {
            failures.push((sigma.clone(), -1));
        }
        for q in 0..q_len {
            let outgoing = if q + 1 < q_len {
                data.diffs[q].clone()
            } else {
                RatMatrix::zero(0, data.dim(q))
            };
            let kernel_dim = outgoing.cols() - outgoing.rank();
            let image_rank = if q == 0 {
                data.aug.rank()
            } else {
                data.diffs[q - 1].rank()
            };
            if kernel_dim != image_rank {
                failures.push((sigma.clone(), q as i32));
            }
        }
    }
    Ok(AcyclicityReport {
        acyclic: failures.is_empty(),
        failures,
    })
}

/// Acyclicity of a chain system: every nonempty support has an exact
/// augmented chain complex.
pub fn is_acyclic_chain(nerve: &Nerve, system: &ChainSystem) -> Result<AcyclicityReport> {
    let mut failures = Vec::new();
    for sigma in nerve.complex().simplex_set() {
        let data = system.support(sigma)?;
        let q_len = system.degree_count();
        if data.aug.rank() != 1 {
            failures.push((sigma.clone(), -1));
        }
        for q in 0..q_len {
            let outgoing = if q == 0 {
                data.aug.clone()
            } else {
                data.diffs[q].clone()
            };
            let kernel_dim = outgoing.cols() - outgoing.rank();
            let image_rank = if q + 1 < q_len {
                data.diffs[q + 1].rank()
            } else {
                0
            };
            if kernel_dim != image_rank {
                failures.push((sigma.clone(), q as i32));
            }
        }
    }
    Ok(AcyclicityReport {
        acyclic: failures.is_empty(),
        failures,
    })
}

/// The factorization identity: the system-to-simplicial comparison map on
/// base cohomology equals the canonical homomorphism composed with the map
/// induced through the covering grid.
pub struct FactorizationReport {
    /// per degree: the direct map `H_A^n(X) -> H^n(X)` induced by `phi`
    pub direct: Vec<RatMatrix>,
    /// per degree: the composite through `H^n(N)`
    pub through_nerve: Vec<RatMatrix>,
    /// per degree: the middle map `H_A^n(X) -> H^n(N)`
    pub to_nerve: Vec<RatMatrix>,
    pub equal: bool,
}

/// Verifies the cohomological factorization for an acyclic system on a fine
/// covering.
pub fn factorization_check(
    covering: &Covering,
    system: &CochainSystem,
) -> Result<FactorizationReport> {
    let nerve = covering.nerve();
    let report = is_acyclic(&nerve, system)?;
    if !report.acyclic {
        return Err(Error::Precondition(
            "factorization requires an acyclic system on the covering".into(),
        ));
    }
    let kc = CoveringComplex::new(covering, system.clone())?;
    let leray = leray_map(covering)?;
    let base = kc.system.support_complex(&[]).clone();
    let base_system = kc.base_system_complex();
    let n_max = (kc.q_len() - 1)
        .max(base.dim().max(0) as usize)
        .max(kc.nerve.dim().max(0) as usize);
    let mut direct = Vec::new();
    let mut through = Vec::new();
    let mut to_nerve_all = Vec::new();
    let mut equal = true;
    for n in 0..=n_max {
        let h_a = base_system.homology(n as i32);
        let h_x = base.cohomology_basis(n as i32);
        let data = kc.system.support(&[]).expect("base data");
        let phi = data
            .phi
            .get(n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zero(base.simplices_of_dim(n as i32).len(), 0));
        let m_direct = induced_on_quotients(&phi, &h_a, &h_x);
        // middle map: invert lambda on the A-grid, then apply the canonical map
        let lambda_star = kc.lambda_star(n);
        if !is_invertible(&lambda_star) {
            return Err(Error::Precondition(format!(
                "lambda does not induce an isomorphism in degree {n}; the system is not acyclic"
            )));
        }
        let tau_star = kc.tau_star(n);
        let to_nerve = solve_through(&lambda_star, &tau_star)?;
        let l_n = leray
            .matrices
            .get(n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zero(h_x.dim(), 0));
        let m_through = l_n.mul(&to_nerve);
        if m_direct != m_through {
            equal = false;
        }
        direct.push(m_direct);
        through.push(m_through);
        to_nerve_all.push(to_nerve);
    }
    Ok(FactorizationReport {
        direct,
        through_nerve: through,
        to_nerve: to_nerve_all,
        equal,
    })
}

/// Degrees above the nerve dimension where the comparison map is verified to
/// vanish, with the dimensions involved.
pub struct VanishingReport {
    /// `(degree, dim H_A, dim H^n(X), is zero)`
    pub rows: Vec<(usize, usize, usize, bool)>,
    pub all_zero: bool,
}

/// Verifies that the comparison map vanishes above the nerve dimension for
/// an acyclic system: it factors through the cohomology of the nerve, which
/// is zero there.
pub fn vanishing_check(covering: &Covering, system: &CochainSystem) -> Result<VanishingReport> {
    let factorization = factorization_check(covering, system)?;
    let nerve_dim = covering.nerve().dim().max(0) as usize;
    let mut rows = Vec::new();
    let mut all_zero = true;
    for (n, m) in factorization.direct.iter().enumerate() {
        if n <= nerve_dim {
            continue;
        }
        let zero = m.is_zero_matrix();
        if !zero {
            all_zero = false;
        }
        rows.push((n, m.cols(), m.rows(), zero));
    }
    Ok(VanishingReport { rows, all_zero })
}

/// The homological covering double complex `c_p(N, e_q)` with direct-sum
/// blocks.
pub struct HomCoveringComplex {
    pub nerve: Nerve,
    pub system: ChainSystem,
    pub double: DoubleComplex,
    pub total: TotalComplex,
    sigma_order: Vec<Vec<Vec<usize>>>,
    offsets: Vec<Vec<Vec<usize>>>,
}

impl HomCoveringComplex {
    pub fn new(covering: &Covering, system: ChainSystem) -> Result<HomCoveringComplex> {
        let nerve = covering.nerve();
        let q_len = system.degree_count();
        let p_len = (nerve.dim().max(0) as usize) + 1;
        let mut sigma_order = Vec::new();
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        let mut d = Vec::new();
        for p in 0..p_len {
            let sigmas = nerve.simplices_of_dim(p as i32);
            let mut row_offsets = vec![Vec::new(); q_len];
            let mut row_labels = Vec::new();
            let mut row_d = Vec::new();
            for q in 0..q_len {
                let mut names = Vec::new();
                let mut offset = 0;
                for sigma in &sigmas {
                    row_offsets[q].push(offset);
                    let data = system.support(sigma)?;
                    for l in &data.labels[q] {
                        names.push(format!("{sigma:?}:{l}"));
                    }
                    offset += data.dim(q);
                }
                row_labels.push(names);
                let rows: usize = if q > 0 {
                    sigmas
                        .iter()
                        .map(|s| system.support(s).map(|d| d.dim(q - 1)).unwrap_or(0))
                        .sum()
                } else {
                    0
                };
                let cols: usize = sigmas
                    .iter()
                    .map(|s| system.support(s).map(|d| d.dim(q)).unwrap_or(0))
                    .sum();
                let mut m = RatMatrix::zero(rows, cols);
                if q > 0 {
                    let mut ro = 0;
                    let mut co = 0;
                    for sigma in &sigmas {
                        let data = system.support(sigma)?;
                        m.paste(ro, co, &data.diffs[q]);
                        ro += data.dim(q - 1);
                        co += data.dim(q);
                    }
                }
                row_d.push(m);
            }
            sigma_order.push(sigmas);
            offsets.push(row_offsets);
            labels.push(row_labels);
            d.push(row_d);
        }
        let mut delta = Vec::new();
        for p in 0..p_len {
            let mut row_delta = Vec::new();
            for q in 0..q_len {
                if p == 0 {
                    row_delta.push(RatMatrix::zero(0, labels[p][q].len()));
                    continue;
                }
                let mut m = RatMatrix::zero(labels[p - 1][q].len(), labels[p][q].len());
                for (si, sigma) in sigma_order[p].iter().enumerate() {
                    let col_off = offsets[p][q][si];
                    let mut sign = one();
                    for i in 0..sigma.len() {
                        let mut face = sigma.clone();
                        face.remove(i);
                        let fi = sigma_order[p - 1]
                            .binary_search(&face)
                            .expect("face of a nerve simplex is a nerve simplex");
                        let row_off = offsets[p - 1][q][fi];
                        let inc = system.inclusion(sigma, &face, q)?;
                        let signed = inc.scale(&sign);
                        m.paste(row_off, col_off, &signed);
                        sign = -sign;
                    }
                }
                row_delta.push(m);
            }
            delta.push(row_delta);
        }
        let double = DoubleComplex::from_commuting(BiVariance::Homological, labels, d, delta)?;
        let total = double.total();
        Ok(HomCoveringComplex {
            nerve,
            system,
            double,
            total,
            sigma_order,
            offsets,
        })
    }

    fn q_len(&self) -> usize {
        self.system.degree_count()
    }

    fn p_len(&self) -> usize {
        self.sigma_order.len()
    }

    pub fn coordinate(&self, p: usize, q: usize, sigma: &[usize], local: usize) -> usize {
        let si = self.sigma_order[p]
            .binary_search(&sigma.to_vec())
            .expect("simplex in block order");
        self.offsets[p][q][si] + local
    }

    /// Matrix of `lambda`: the `(p, 0)` block of `t_p` onto nerve `p`-chains
    /// through the augmentations.
    pub fn lambda_matrix(&self, p: usize) -> RatMatrix {
        let rows = self.sigma_order.get(p).map_or(0, Vec::len);
        let cols = self.total.dim(p as i32);
        let mut m = RatMatrix::zero(rows, cols);
        if p >= self.p_len() {
            return m;
        }
        for (si, sigma) in self.sigma_order[p].iter().enumerate() {
            let data = self.system.support(sigma).expect("support data");
            for local in 0..data.dim(0) {
                let col = self.total_coordinate(p, p, 0, sigma, local);
                m.set(si, col, data.aug.get(0, local));
            }
        }
        m
    }

    fn total_coordinate(
        &self,
        n: usize,
        p: usize,
        q: usize,
        sigma: &[usize],
        local: usize,
    ) -> usize {
        let inner = self.coordinate(p, q, sigma, local);
        let v = {
            let mut v = vec![Rational::zero(); self.double.dim(p, q)];
            v[inner] = one();
            v
        };
        let total = self.total.inject(n, p, q, &v);
        total
            .iter()
            .position(|x| !x.is_zero())
            .expect("unit vector lands somewhere")
    }

    /// Matrix of `tau`: the `(0, q)` block of `t_q` into the base chains by
    /// the element inclusions.
    pub fn tau_matrix(&self, q: usize) -> RatMatrix {
        let base_dim = self.system.support(&[]).map(|d| d.dim(q)).unwrap_or(0);
        let cols = self.total.dim(q as i32);
        let mut m = RatMatrix::zero(base_dim, cols);
        if q >= self.q_len() {
            return m;
        }
        for (si, sigma) in self.sigma_order[0].iter().enumerate() {
            let inc = self
                .system
                .inclusion(sigma, &[], q)
                .expect("inclusion of a vertex support");
            let data = self.system.support(sigma).expect("support data");
            for local in 0..data.dim(q) {
                let col = self.total.inject(q, 0, q, &{
                    let mut v = vec![Rational::zero(); self.double.dim(0, q)];
                    v[self.offsets[0][q][si] + local] = one();
                    v
                });
                let col_idx = col.iter().position(|x| !x.is_zero()).unwrap();
                for r in 0..base_dim {
                    let val = inc.get(r, local);
                    if !val.is_zero() {
                        m.set(r, col_idx, val);
                    }
                }
            }
        }
        m
    }

    /// The chain complex `e(X)` with the augmentation omitted.
    pub fn base_system_complex(&self) -> crate::chain::ChainComplexRat {
        let data = self.system.support(&[]).expect("base support");
        crate::chain::ChainComplexRat::new(
            crate::chain::Variance::Chain,
            0,
            data.labels.clone(),
            data.diffs.clone(),
        )
        .expect("system differentials compose to zero")
    }

    /// Induced `lambda_*: H_n(t) -> H_n(N)`.
    pub fn lambda_star(&self, n: usize) -> RatMatrix {
        let h_total = self.total.complex.homology(n as i32);
        let h_nerve = self.nerve.complex().homology_basis(n as i32);
        induced_on_quotients(&self.lambda_matrix(n), &h_total, &h_nerve)
    }

    /// Induced `tau_*: H_n(t) -> H_n^e(X)`.
    pub fn tau_star(&self, n: usize) -> RatMatrix {
        let h_total = self.total.complex.homology(n as i32);
        let h_base = self.base_system_complex().homology(n as i32);
        induced_on_quotients(&self.tau_matrix(n), &h_total, &h_base)
    }
}

/// Contracting homotopies for the full chain system.
pub struct ChainHomotopy<'a> {
    covering: &'a Covering,
    complex: &'a HomCoveringComplex,
}

impl<'a> ChainHomotopy<'a> {
    pub fn new(covering: &'a Covering, complex: &'a HomCoveringComplex) -> Self {
        ChainHomotopy { covering, complex }
    }

    /// `k_p: c_p(N, C_q) -> c_{p+1}(N, C_q)`.
    pub fn k_matrix(&self, p: usize, q: usize) -> RatMatrix {
        let kc = self.complex;
        if p + 1 >= kc.p_len() {
            return RatMatrix::zero(0, kc.double.dim(p, q));
        }
        let rows = kc.double.dim(p + 1, q);
        let cols = kc.double.dim(p, q);
        let mut m = RatMatrix::zero(rows, cols);
        for (si, sigma) in kc.sigma_order[p].iter().enumerate() {
            let support = kc.system.support_complex(sigma);
            for (li, s) in support.simplices_of_dim(q as i32).iter().enumerate() {
                let u = self.covering.smallest_element_containing(s);
                if sigma.contains(&u) {
                    continue;
                }
                let mut rho = sigma.clone();
                rho.push(u);
                rho.sort_unstable();
                let a = rho.iter().position(|&v| v == u).unwrap();
                let rho_support = kc.system.support_complex(&rho);
                let local = rho_support
                    .simplices_of_dim(q as i32)
                    .binary_search(s)
                    .expect("simplex lies in the smaller support");
                let row = kc.coordinate(p + 1, q, &rho, local);
                let col = kc.offsets[p][q][si] + li;
                let sign = if a % 2 == 0 { one() } else { -one() };
                m.set(row, col, sign);
            }
        }
        m
    }

    /// `k_{-1}: C_q(X) -> c_0(N, C_q)` placing each simplex in its chosen
    /// element.
    pub fn k_start_matrix(&self, q: usize) -> RatMatrix {
        let kc = self.complex;
        let base = kc.system.support_complex(&[]);
        let simplices = base.simplices_of_dim(q as i32);
        let mut m = RatMatrix::zero(kc.double.dim(0, q), simplices.len());
        for (j, s) in simplices.iter().enumerate() {
            let u = self.covering.smallest_element_containing(s);
            let support = kc.system.support_complex(&[u]);
            let local = support
                .simplices_of_dim(q as i32)
                .binary_search(s)
                .expect("simplex lies in its chosen element");
            m.set(kc.coordinate(0, q, &[u], local), j, one());
        }
        m
    }
}

/// Canonical homomorphisms `H_n(X) -> H_n(N)` along both routes.
pub struct HomologyLerayResult {
    pub matrices: Vec<RatMatrix>,
    pub matrices_by_reduction: Vec<RatMatrix>,
}

pub fn homology_leray_map(covering: &Covering) -> Result<HomologyLerayResult> {
    let system = ChainSystem::full(&covering.nerve())?;
    let kc = HomCoveringComplex::new(covering, system)?;
    let homotopy = ChainHomotopy::new(covering, &kc);
    let base = kc.system.support_complex(&[]).clone();
    let n_max = kc.nerve.dim().max(base.dim()).max(0) as usize;
    let mut matrices = Vec::new();
    let mut by_reduction = Vec::new();
    for n in 0..=n_max {
        let h_base = base.homology_basis(n as i32);
        let h_nerve = kc.nerve.complex().homology_basis(n as i32);
        let lambda_star = kc.lambda_star(n);
        let tau_star = kc.tau_star(n);
        if !is_invertible(&tau_star) {
            return Err(Error::Precondition(format!(
                "tau does not induce an isomorphism in homology degree {n}"
            )));
        }
        // canonical = lambda_star composed with the inverse of tau_star
        let inv_tau = invert(&tau_star)?;
        let basis_route = lambda_star.mul(&inv_tau);
        // constructive route: lift each base cycle to a total cycle
        let mut reduction = RatMatrix::zero(h_nerve.dim(), h_base.dim());
        for (j, rep) in h_base.representatives().iter().enumerate() {
            let lifted = lift_base_cycle(&kc, &homotopy, n, rep)?;
            let in_nerve = kc.lambda_matrix(n).mul_vec(&lifted);
            let coords = h_nerve.coords(&in_nerve)?;
            reduction.set_column(j, &coords);
        }
        if basis_route != reduction {
            return Err(Error::Precondition(format!(
                "the two routes for the canonical homology map disagree in degree {n}"
            )));
        }
        matrices.push(basis_route);
        by_reduction.push(reduction);
    }
    Ok(HomologyLerayResult {
        matrices,
        matrices_by_reduction: by_reduction,
    })
}

/// Lifts a base cycle to a total cycle whose image under `tau` is the cycle.
fn lift_base_cycle(
    kc: &HomCoveringComplex,
    homotopy: &ChainHomotopy,
    n: usize,
    gamma: &[Rational],
) -> Result<Vec<Rational>> {
    let mut z_p = homotopy.k_start_matrix(n).mul_vec(gamma);
    let mut total = kc.total.inject(n, 0, n, &z_p);
    for p in 0..n {
        let q = n - p;
        // the unmatched component of the boundary at block (p, q-1)
        let d_block = kc.double.d(p, q).mul_vec(&z_p);
        if vec_is_zero(&d_block) {
            if p + 1 >= kc.p_len() {
                break;
            }
            z_p = vec![Rational::zero(); kc.double.dim(p + 1, q - 1)];
            continue;
        }
        if p + 1 >= kc.p_len() || q > kc.q_len() {
            return Err(Error::NotExact(p, q - 1));
        }
        // need delta(z_{p+1}) = -(twist) d(z_p); the homotopy inverts delta
        let sign = if (q - 1) % 2 == 0 { -one() } else { one() };
        let target: Vec<Rational> = d_block.iter().map(|x| x * &sign).collect();
        let next = homotopy.k_matrix(p, q - 1).mul_vec(&target);
        total = vec_add(&total, &kc.total.inject(n, p + 1, q - 1, &next));
        z_p = next;
    }
    debug_assert!(vec_is_zero(&kc.total.complex.map_at(n as i32).mul_vec(&total)));
    debug_assert_eq!(kc.tau_matrix(n).mul_vec(&total), gamma.to_vec());
    Ok(total)
}

/// Inverse of a square invertible matrix by columnwise solving.
pub fn invert(m: &RatMatrix) -> Result<RatMatrix> {
    if !is_invertible(m) {
        return Err(Error::Precondition("matrix is not invertible".into()));
    }
    solve_through(m, &RatMatrix::identity(m.rows()))
}

/// Homological factorization: the chain comparison map factors through the
/// canonical map `H_n(X) -> H_n(N)`.
pub struct HomFactorizationReport {
    pub direct: Vec<RatMatrix>,
    pub through_nerve: Vec<RatMatrix>,
    pub equal: bool,
}

pub fn homology_factorization_check(
    covering: &Covering,
    system: &ChainSystem,
) -> Result<HomFactorizationReport> {
    let nerve = covering.nerve();
    let report = is_acyclic_chain(&nerve, system)?;
    if !report.acyclic {
        return Err(Error::Precondition(
            "homological factorization requires an acyclic system".into(),
        ));
    }
    let kc = HomCoveringComplex::new(covering, system.clone())?;
    let canonical = homology_leray_map(covering)?;
    let base = kc.system.support_complex(&[]).clone();
    let base_system = kc.base_system_complex();
    let n_max = (kc.q_len() - 1)
        .max(base.dim().max(0) as usize)
        .max(kc.nerve.dim().max(0) as usize);
    let mut direct = Vec::new();
    let mut through = Vec::new();
    let mut equal = true;
    for n in 0..=n_max {
        let h_x = base.homology_basis(n as i32);
        let h_e = base_system.homology(n as i32);
        let data = kc.system.support(&[]).expect("base data");
        let phi = data
            .phi
            .get(n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zero(0, base.simplices_of_dim(n as i32).len()));
        let m_direct = induced_on_quotients(&phi, &h_x, &h_e);
        // composite: canonical into the nerve, then back through the e-grid
        let lambda_star = kc.lambda_star(n);
        if !is_invertible(&lambda_star) {
            return Err(Error::Precondition(format!(
                "lambda does not induce an isomorphism in homology degree {n}"
            )));
        }
        let tau_star = kc.tau_star(n);
        let canonical_n = canonical
            .matrices
            .get(n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zero(0, h_x.dim()));
        let m_through = tau_star.mul(&invert(&lambda_star)?).mul(&canonical_n);
        if m_direct != m_through {
            equal = false;
        }
        direct.push(m_direct);
        through.push(m_through);
    }
    Ok(HomFactorizationReport {
        direct,
        through_nerve: through,
        equal,
    })
}
