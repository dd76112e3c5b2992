//! Generalized cochain and chain systems over the supports of a covering: an
//! assignment of an augmented complex to the base and to every support, with
//! restriction (or inclusion) maps along face relations and a natural
//! transformation to (or from) the honest simplicial (co)chains.
//!
//! Three constructions are built in: `FULL` is the simplicial (co)chain
//! functor itself, `TRUNC(m)` replaces degree `m` by the cocycles (or the
//! chains modulo boundaries) and vanishes above, and explicit systems are
//! loaded from JSON and validated against every structural identity they
//! must satisfy.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::covering::Nerve;
use crate::matrix::RatMatrix;
use crate::rat::{one, parse_rational, show_rational};
use crate::simplicial::{solve_through, SimplicialComplex};
use crate::{Error, Result};

/// Which built-in system to attach to a covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSpec {
    Full,
    Truncated(usize),
    Explicit(String),
}

impl SystemSpec {
    pub fn parse(s: &str) -> Result<SystemSpec> {
        if s.eq_ignore_ascii_case("full") {
            return Ok(SystemSpec::Full);
        }
        if let Some(m) = s.strip_prefix("TRUNC:").or_else(|| s.strip_prefix("trunc:")) {
            let m: usize = m
                .parse()
                .map_err(|_| Error::Parse(format!("bad truncation level in `{s}`")))?;
            return Ok(SystemSpec::Truncated(m));
        }
        if let Some(path) = s
            .strip_prefix("EXPLICIT:")
            .or_else(|| s.strip_prefix("explicit:"))
        {
            return Ok(SystemSpec::Explicit(path.to_string()));
        }
        Err(Error::Parse(format!(
            "unknown system `{s}` (expected FULL, TRUNC:m or EXPLICIT:path)"
        )))
    }
}

/// The data of one augmented complex attached to a support.
#[derive(Clone, Debug)]
pub struct SupportData {
    /// basis labels per degree `0..q_len`
    pub labels: Vec<Vec<String>>,
    /// differential leaving each degree (up for cochain systems, down for
    /// chain systems); boundary maps have zero rows
    pub diffs: Vec<RatMatrix>,
    /// cochain: `R -> A^0` as a one-column matrix; chain: `e_0 -> R` as a
    /// one-row matrix
    pub aug: RatMatrix,
    /// cochain: `phi_q: A^q -> C^q(Z)`; chain: `phi_q: C_q(Z) -> e_q`
    pub phi: Vec<RatMatrix>,
}

impl SupportData {
    pub fn dim(&self, q: usize) -> usize {
        self.labels.get(q).map_or(0, Vec::len)
    }
}

fn simplex_key_name(nerve: &Nerve, key: &[usize]) -> String {
    key.iter()
        .map(|&i| nerve.complex().vertex_names()[i].clone())
        .collect::<Vec<_>>()
        .join(",")
}

/// All support keys: the empty tuple plus every nerve simplex.
fn support_keys(nerve: &Nerve) -> Vec<Vec<usize>> {
    let mut keys = vec![Vec::new()];
    keys.extend(nerve.complex().simplex_set().iter().cloned());
    keys
}

/// Single-step face pairs `(from, to)` where `to` extends `from` by one
/// vertex: every `(face, simplex)` pair plus `([], vertex)`.
fn step_pairs(nerve: &Nerve) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for sigma in nerve.complex().simplex_set() {
        if sigma.len() == 1 {
            out.push((Vec::new(), sigma.clone()));
        } else {
            for i in 0..sigma.len() {
                let mut face = sigma.clone();
                face.remove(i);
                out.push((face, sigma.clone()));
            }
        }
    }
    out
}

/// Restriction of simplicial cochains along `Y ⊆ Z`: picks the coordinates
/// of the simplices of `Y`.
pub fn cochain_restriction(z: &SimplicialComplex, y: &SimplicialComplex, q: i32) -> RatMatrix {
    let dom = z.simplices_of_dim(q);
    let cod = y.simplices_of_dim(q);
    let mut m = RatMatrix::zero(cod.len(), dom.len());
    for (i, s) in cod.iter().enumerate() {
        if let Ok(j) = dom.binary_search(s) {
            m.set(i, j, one());
        }
    }
    m
}

/// Inclusion of simplicial chains along `Y ⊆ Z`.
pub fn chain_inclusion(y: &SimplicialComplex, z: &SimplicialComplex, q: i32) -> RatMatrix {
    cochain_restriction(z, y, q).transpose()
}

/// A contravariant system of augmented cochain complexes over the supports.
#[derive(Clone, Debug)]
pub struct CochainSystem {
    q_len: usize,
    supports: BTreeMap<Vec<usize>, SupportData>,
    support_complexes: BTreeMap<Vec<usize>, SimplicialComplex>,
    /// single-step restrictions `(face, simplex) -> [matrix per degree]`
    steps: BTreeMap<(Vec<usize>, Vec<usize>), Vec<RatMatrix>>,
}

/// A covariant system of augmented chain complexes over the supports.
#[derive(Clone, Debug)]
pub struct ChainSystem {
    q_len: usize,
    supports: BTreeMap<Vec<usize>, SupportData>,
    support_complexes: BTreeMap<Vec<usize>, SimplicialComplex>,
    /// single-step inclusions `(simplex, face) -> [matrix per degree]`,
    /// mapping `e(|simplex|) -> e(|face|)`
    steps: BTreeMap<(Vec<usize>, Vec<usize>), Vec<RatMatrix>>,
}

fn full_support_data_cochain(z: &SimplicialComplex, q_len: usize) -> SupportData {
    let mut labels = Vec::new();
    let mut diffs = Vec::new();
    let mut phi = Vec::new();
    for q in 0..q_len {
        let simplices = z.simplices_of_dim(q as i32);
        labels.push(simplices.iter().map(|s| z.simplex_name(s)).collect());
        let rows = if q + 1 < q_len {
            z.simplices_of_dim(q as i32 + 1).len()
        } else {
            0
        };
        let d = if q + 1 < q_len {
            z.coboundary_matrix(q as i32)
        } else {
            RatMatrix::zero(rows, simplices.len())
        };
        diffs.push(d);
        phi.push(RatMatrix::identity(simplices.len()));
    }
    let n0 = z.simplices_of_dim(0).len();
    let mut aug = RatMatrix::zero(n0, 1);
    for i in 0..n0 {
        aug.set(i, 0, one());
    }
    SupportData {
        labels,
        diffs,
        aug,
        phi,
    }
}

fn full_support_data_chain(z: &SimplicialComplex, q_len: usize) -> SupportData {
    let mut labels = Vec::new();
    let mut diffs = Vec::new();
    let mut phi = Vec::new();
    for q in 0..q_len {
        let simplices = z.simplices_of_dim(q as i32);
        labels.push(simplices.iter().map(|s| z.simplex_name(s)).collect::<Vec<String>>());
        let d = if q == 0 {
            RatMatrix::zero(0, simplices.len())
        } else {
            z.boundary_matrix(q as i32)
        };
        diffs.push(d);
        phi.push(RatMatrix::identity(simplices.len()));
    }
    let n0 = z.simplices_of_dim(0).len();
    let mut aug = RatMatrix::zero(1, n0);
    for i in 0..n0 {
        aug.set(0, i, one());
    }
    SupportData {
        labels,
        diffs,
        aug,
        phi,
    }
}

impl CochainSystem {
    pub fn degree_count(&self) -> usize {
        self.q_len
    }

    pub fn support(&self, key: &[usize]) -> Result<&SupportData> {
        self.supports
            .get(key)
            .ok_or_else(|| Error::Precondition(format!("system lacks support {key:?}")))
    }

    pub fn support_complex(&self, key: &[usize]) -> &SimplicialComplex {
        &self.support_complexes[key]
    }

    /// The simplicial cochain functor itself: `A = C`, `phi` the identity.
    pub fn full(nerve: &Nerve) -> Result<CochainSystem> {
        let q_len = (nerve.base().dim().max(0) as usize) + 1;
        let mut supports = BTreeMap::new();
        let mut support_complexes = BTreeMap::new();
        for key in support_keys(nerve) {
            let z = nerve.support(&key)?;
            supports.insert(key.clone(), full_support_data_cochain(&z, q_len));
            support_complexes.insert(key, z);
        }
        let mut steps = BTreeMap::new();
        for (from, to) in step_pairs(nerve) {
            let zf = &support_complexes[&from];
            let zt = &support_complexes[&to];
            let mats: Vec<RatMatrix> = (0..q_len)
                .map(|q| cochain_restriction(zf, zt, q as i32))
                .collect();
            steps.insert((from, to), mats);
        }
        let system = CochainSystem {
            q_len,
            supports,
            support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }

    /// `A^q = C^q` below `m`, the cocycles in degree `m`, zero above.
    pub fn truncated(nerve: &Nerve, m: usize) -> Result<CochainSystem> {
        let full = CochainSystem::full(nerve)?;
        let q_len = full.q_len;
        let mut supports = BTreeMap::new();
        let mut kernel_inclusions: BTreeMap<Vec<usize>, RatMatrix> = BTreeMap::new();
        for (key, data) in &full.supports {
            let z = &full.support_complexes[key];
            let mut labels = Vec::new();
            let mut diffs = Vec::new();
            let mut phi = Vec::new();
            let coboundary_m = if (m as i32) <= z.dim() {
                z.coboundary_matrix(m as i32)
            } else {
                RatMatrix::zero(0, data.dim(m))
            };
            let kernel = RatMatrix::from_columns(data.dim(m), coboundary_m.kernel_basis());
            kernel_inclusions.insert(key.clone(), kernel.clone());
            for q in 0..q_len {
                match q.cmp(&m) {
                    std::cmp::Ordering::Less => {
                        labels.push(data.labels[q].clone());
                        phi.push(data.phi[q].clone());
                        if q + 1 == m {
                            // coboundary into the kernel, in kernel coordinates
                            let into_kernel = solve_through(&kernel, &data.diffs[q])
                                .expect("coboundaries are cocycles");
                            diffs.push(into_kernel);
                        } else {
                            diffs.push(data.diffs[q].clone());
                        }
                    }
                    std::cmp::Ordering::Equal => {
                        labels.push(
                            (0..kernel.cols()).map(|i| format!("z{m}:{i}")).collect(),
                        );
                        phi.push(kernel.clone());
                        diffs.push(RatMatrix::zero(0, kernel.cols()));
                    }
                    std::cmp::Ordering::Greater => {
                        labels.push(Vec::new());
                        phi.push(RatMatrix::zero(data.dim(q), 0));
                        diffs.push(RatMatrix::zero(0, 0));
                    }
                }
            }
            let aug = if m == 0 {
                solve_through(&kernel, &data.aug).expect("constants are cocycles")
            } else {
                data.aug.clone()
            };
            supports.insert(
                key.clone(),
                SupportData {
                    labels,
                    diffs,
                    aug,
                    phi,
                },
            );
        }
        let mut steps = BTreeMap::new();
        for ((from, to), mats) in &full.steps {
            let mut out = Vec::new();
            for (q, mat) in mats.iter().enumerate() {
                match q.cmp(&m) {
                    std::cmp::Ordering::Less => out.push(mat.clone()),
                    std::cmp::Ordering::Equal => {
                        let kf = &kernel_inclusions[from];
                        let kt = &kernel_inclusions[to];
                        let restricted = mat.mul(kf);
                        out.push(
                            solve_through(kt, &restricted)
                                .expect("restriction preserves cocycles"),
                        );
                    }
                    std::cmp::Ordering::Greater => out.push(RatMatrix::zero(0, 0)),
                }
            }
            steps.insert((from.clone(), to.clone()), out);
        }
        let system = CochainSystem {
            q_len,
            supports,
            support_complexes: full.support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }

    /// The full system augmented at the base support by extra summands with
    /// a prescribed internal differential; restrictions and `phi` kill the
    /// extra part. Used to build explicit systems whose base cohomology
    /// persists above the nerve dimension.
    pub fn full_with_extra_at_base(
        nerve: &Nerve,
        extra_dims: &[usize],
        extra_diffs: &[RatMatrix],
    ) -> Result<CochainSystem> {
        let mut system = CochainSystem::full(nerve)?;
        let q_len = system.q_len.max(extra_dims.len());
        system.resize_degrees(q_len);
        let extra_dim = |q: usize| extra_dims.get(q).copied().unwrap_or(0);
        let base = system.supports.get_mut(&Vec::new()).expect("base support");
        let mut new_labels = Vec::new();
        let mut new_diffs = Vec::new();
        let mut new_phi = Vec::new();
        for q in 0..q_len {
            let mut labels = base.labels[q].clone();
            labels.extend((0..extra_dim(q)).map(|i| format!("e{q}:{i}")));
            new_labels.push(labels);
            let old = &base.diffs[q];
            let rows_extra = extra_dim(q + 1);
            let mut d = RatMatrix::zero(old.rows() + rows_extra, old.cols() + extra_dim(q));
            d.paste(0, 0, old);
            if rows_extra > 0 && extra_dim(q) > 0 {
                let block = extra_diffs
                    .get(q)
                    .cloned()
                    .unwrap_or_else(|| RatMatrix::zero(rows_extra, extra_dim(q)));
                d.paste(old.rows(), old.cols(), &block);
            }
            new_diffs.push(d);
            let oldphi = &base.phi[q];
            let mut p = RatMatrix::zero(oldphi.rows(), oldphi.cols() + extra_dim(q));
            p.paste(0, 0, oldphi);
            new_phi.push(p);
        }
        let mut aug = RatMatrix::zero(new_labels[0].len(), 1);
        aug.paste(0, 0, &base.aug);
        base.labels = new_labels;
        base.diffs = new_diffs;
        base.phi = new_phi;
        base.aug = aug;
        // widen the restrictions leaving the base: extra coordinates go to 0
        let base_dims: Vec<usize> = (0..q_len)
            .map(|q| system.supports[&Vec::new()].dim(q))
            .collect();
        for ((from, _), mats) in system.steps.iter_mut() {
            if !from.is_empty() {
                continue;
            }
            for (q, m) in mats.iter_mut().enumerate() {
                if m.cols() < base_dims[q] {
                    let mut widened = RatMatrix::zero(m.rows(), base_dims[q]);
                    widened.paste(0, 0, m);
                    *m = widened;
                }
            }
        }
        system.validate()?;
        Ok(system)
    }

    fn resize_degrees(&mut self, q_len: usize) {
        if q_len <= self.q_len {
            return;
        }
        for (key, data) in self.supports.iter_mut() {
            let z = &self.support_complexes[key];
            while data.labels.len() < q_len {
                let q = data.labels.len();
                data.labels.push(Vec::new());
                data.diffs.push(RatMatrix::zero(0, 0));
                data.phi
                    .push(RatMatrix::zero(z.simplices_of_dim(q as i32).len(), 0));
            }
            // the old top differential now has a genuine target
        }
        for mats in self.steps.values_mut() {
            while mats.len() < q_len {
                mats.push(RatMatrix::zero(0, 0));
            }
        }
        self.q_len = q_len;
    }

    /// Composite restriction `A(|from|) -> A(|to|)` for `from ⊆ to`, built
    /// from single steps by inserting the missing vertices in order.
    pub fn restriction(&self, from: &[usize], to: &[usize], q: usize) -> Result<RatMatrix> {
        if !from.iter().all(|v| to.contains(v)) {
            return Err(Error::Precondition(format!(
                "restriction goes along a face relation: {from:?} is not a face of {to:?}"
            )));
        }
        let mut current: Vec<usize> = from.to_vec();
        let mut m = RatMatrix::identity(self.support(from)?.dim(q));
        for &v in to {
            if current.contains(&v) {
                continue;
            }
            let mut next = current.clone();
            next.push(v);
            next.sort_unstable();
            let step = self
                .steps
                .get(&(current.clone(), next.clone()))
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "system lacks the restriction step {current:?} -> {next:?}"
                    ))
                })?;
            let mat = step
                .get(q)
                .cloned()
                .unwrap_or_else(|| RatMatrix::zero(0, 0));
            let mat = fit(&mat, self.support(&next).map(|d| d.dim(q)).unwrap_or(0), m.rows());
            m = mat.mul(&m);
            current = next;
        }
        Ok(m)
    }

    /// Every structural identity an explicit system must satisfy; built-ins
    /// are validated through the same path.
    pub fn validate(&self) -> Result<()> {
        for (key, data) in &self.supports {
            let name = format!("support [{key:?}]");
            if data.labels.len() != self.q_len
                || data.diffs.len() != self.q_len
                || data.phi.len() != self.q_len
            {
                return Err(Error::Dimension(format!(
                    "{name}: expected data in {} degrees",
                    self.q_len
                )));
            }
            let z = &self.support_complexes[key];
            for q in 0..self.q_len {
                let next_dim = if q + 1 < self.q_len { data.dim(q + 1) } else { 0 };
                if data.diffs[q].cols() != data.dim(q) || data.diffs[q].rows() != next_dim {
                    return Err(Error::Dimension(format!(
                        "{name}: differential at degree {q} has the wrong shape"
                    )));
                }
                if q + 1 < self.q_len
                    && !data.diffs[q + 1].mul(&data.diffs[q]).is_zero_matrix()
                {
                    return Err(Error::Precondition(format!(
                        "{name}: differentials at degree {q} do not compose to zero"
                    )));
                }
                let c_dim = z.simplices_of_dim(q as i32).len();
                if data.phi[q].rows() != c_dim || data.phi[q].cols() != data.dim(q) {
                    return Err(Error::Dimension(format!(
                        "{name}: phi at degree {q} has the wrong shape"
                    )));
                }
                // phi is a chain map into the simplicial cochains
                if q + 1 < self.q_len {
                    let c_cob = z.coboundary_matrix(q as i32);
                    let c_cob = fit(&c_cob, z.simplices_of_dim(q as i32 + 1).len(), c_dim);
                    let lhs = data.phi[q + 1].mul(&data.diffs[q]);
                    let rhs = c_cob.mul(&data.phi[q]);
                    if lhs != rhs {
                        return Err(Error::Precondition(format!(
                            "{name}: phi does not commute with the differential at degree {q}"
                        )));
                    }
                }
            }
            if data.aug.cols() != 1 || data.aug.rows() != data.dim(0) {
                return Err(Error::Dimension(format!("{name}: bad augmentation shape")));
            }
            if self.q_len > 1 && !data.diffs[0].mul(&data.aug).is_zero_matrix() {
                return Err(Error::Precondition(format!(
                    "{name}: d_0 after the augmentation is nonzero"
                )));
            }
            // phi carries the augmentation to the all-ones cochain
            let ones = {
                let n0 = z.simplices_of_dim(0).len();
                let mut v = RatMatrix::zero(n0, 1);
                for i in 0..n0 {
                    v.set(i, 0, one());
                }
                v
            };
            if data.phi[0].mul(&data.aug) != ones {
                return Err(Error::Precondition(format!(
                    "{name}: phi does not carry the augmentation to constants"
                )));
            }
        }
        // steps: chain maps commuting with augmentations and phi
        for ((from, to), mats) in &self.steps {
            let df = self.support(from)?;
            let dt = self.support(to)?;
            let zf = &self.support_complexes[from];
            let zt = &self.support_complexes[to];
            let name = format!("restriction {from:?} -> {to:?}");
            for q in 0..self.q_len {
                let m = fit(mats.get(q).unwrap_or(&RatMatrix::zero(0, 0)), dt.dim(q), df.dim(q));
                if q + 1 < self.q_len {
                    let m1 = fit(&mats[q + 1], dt.dim(q + 1), df.dim(q + 1));
                    if m1.mul(&df.diffs[q]) != dt.diffs[q].mul(&m) {
                        return Err(Error::Precondition(format!(
                            "{name}: not a chain map at degree {q}"
                        )));
                    }
                }
                // naturality of phi: restricting then comparing agrees
                let c_res = cochain_restriction(zf, zt, q as i32);
                if dt.phi[q].mul(&m) != c_res.mul(&df.phi[q]) {
                    return Err(Error::Precondition(format!(
                        "{name}: phi is not natural at degree {q}"
                    )));
                }
            }
            let m0 = fit(&mats[0], dt.dim(0), df.dim(0));
            if m0.mul(&df.aug) != dt.aug {
                return Err(Error::Precondition(format!(
                    "{name}: augmentations do not match"
                )));
            }
        }
        // path independence of two-step restrictions
        for sigma in self.supports.keys() {
            if sigma.len() < 2 {
                continue;
            }
            for a in 0..sigma.len() {
                for b in (a + 1)..sigma.len() {
                    let mut fa = sigma.clone();
                    fa.remove(b);
                    fa.remove(a);
                    for q in 0..self.q_len {
                        let via_1 = {
                            let mut mid = sigma.clone();
                            mid.remove(a);
                            self.composed_step(&fa, &mid, sigma, q)?
                        };
                        let via_2 = {
                            let mut mid = sigma.clone();
                            mid.remove(b);
                            self.composed_step(&fa, &mid, sigma, q)?
                        };
                        if via_1 != via_2 {
                            return Err(Error::Precondition(format!(
                                "restrictions into {sigma:?} are not functorial at degree {q}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn composed_step(
        &self,
        from: &[usize],
        mid: &[usize],
        to: &[usize],
        q: usize,
    ) -> Result<RatMatrix> {
        let first = self
            .steps
            .get(&(from.to_vec(), mid.to_vec()))
            .ok_or_else(|| Error::Precondition(format!("missing step {from:?} -> {mid:?}")))?;
        let second = self
            .steps
            .get(&(mid.to_vec(), to.to_vec()))
            .ok_or_else(|| Error::Precondition(format!("missing step {mid:?} -> {to:?}")))?;
        let f = fit(
            &first[q],
            self.support(mid)?.dim(q),
            self.support(from)?.dim(q),
        );
        let s = fit(
            &second[q],
            self.support(to)?.dim(q),
            self.support(mid)?.dim(q),
        );
        Ok(s.mul(&f))
    }

    /// Serializes the system; matrices are row-major `p/q` strings.
    pub fn to_json(&self, nerve: &Nerve) -> Value {
        let mut supports = Map::new();
        for (key, data) in &self.supports {
            supports.insert(simplex_key_name(nerve, key), support_to_json(data));
        }
        let mut restrictions = Map::new();
        for ((from, to), mats) in &self.steps {
            let k = format!(
                "{}|{}",
                simplex_key_name(nerve, from),
                simplex_key_name(nerve, to)
            );
            restrictions.insert(k, json!(mats.iter().map(matrix_to_json).collect::<Vec<_>>()));
        }
        json!({
            "kind": "cochain",
            "degrees": self.q_len,
            "supports": Value::Object(supports),
            "restrictions": Value::Object(restrictions),
        })
    }

    /// Loads an explicit system for the given nerve and validates it.
    pub fn from_json(nerve: &Nerve, v: &Value) -> Result<CochainSystem> {
        if v.get("kind").and_then(Value::as_str) != Some("cochain") {
            return Err(Error::Parse("explicit system kind must be `cochain`".into()));
        }
        let (q_len, supports, support_complexes, steps) = parse_system_common(nerve, v)?;
        let system = CochainSystem {
            q_len,
            supports,
            support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }
}

impl ChainSystem {
    pub fn degree_count(&self) -> usize {
        self.q_len
    }

    pub fn support(&self, key: &[usize]) -> Result<&SupportData> {
        self.supports
            .get(key)
            .ok_or_else(|| Error::Precondition(format!("system lacks support {key:?}")))
    }

    pub fn support_complex(&self, key: &[usize]) -> &SimplicialComplex {
        &self.support_complexes[key]
    }

    /// The simplicial chain functor itself.
    pub fn full(nerve: &Nerve) -> Result<ChainSystem> {
        let q_len = (nerve.base().dim().max(0) as usize) + 1;
        let mut supports = BTreeMap::new();
        let mut support_complexes = BTreeMap::new();
        for key in support_keys(nerve) {
            let z = nerve.support(&key)?;
            supports.insert(key.clone(), full_support_data_chain(&z, q_len));
            support_complexes.insert(key, z);
        }
        let mut steps = BTreeMap::new();
        for (face, simplex) in step_pairs(nerve) {
            let zf = &support_complexes[&face];
            let zs = &support_complexes[&simplex];
            let mats: Vec<RatMatrix> = (0..q_len)
                .map(|q| chain_inclusion(zs, zf, q as i32))
                .collect();
            steps.insert((simplex, face), mats);
        }
        let system = ChainSystem {
            q_len,
            supports,
            support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }

    /// `e_q = C_q` below `m`, the chains modulo boundaries in degree `m`,
    /// zero above.
    pub fn truncated(nerve: &Nerve, m: usize) -> Result<ChainSystem> {
        let full = ChainSystem::full(nerve)?;
        let q_len = full.q_len;
        let mut supports = BTreeMap::new();
        let mut quotient_maps: BTreeMap<Vec<usize>, (RatMatrix, crate::matrix::QuotientBasis)> =
            BTreeMap::new();
        for (key, data) in &full.supports {
            let dim_m = data.dim(m);
            let boundary_in = if m + 1 < q_len {
                data.diffs[m + 1].clone()
            } else {
                RatMatrix::zero(dim_m, 0)
            };
            let quo = crate::matrix::QuotientBasis::new(&RatMatrix::identity(dim_m), &boundary_in)
                .expect("boundaries live in the chain space");
            // matrix of the projection C_m -> C_m / im(boundary)
            let mut proj = RatMatrix::zero(quo.dim(), dim_m);
            for j in 0..dim_m {
                let mut e = vec![crate::rat::zero(); dim_m];
                e[j] = one();
                proj.set_column(j, &quo.coords(&e).expect("identity columns lie in the space"));
            }
            quotient_maps.insert(key.clone(), (proj, quo));
        }
        for (key, data) in &full.supports {
            let (proj, quo) = &quotient_maps[key];
            let mut labels = Vec::new();
            let mut diffs = Vec::new();
            let mut phi = Vec::new();
            for q in 0..q_len {
                match q.cmp(&m) {
                    std::cmp::Ordering::Less => {
                        labels.push(data.labels[q].clone());
                        phi.push(data.phi[q].clone());
                        diffs.push(data.diffs[q].clone());
                    }
                    std::cmp::Ordering::Equal => {
                        labels.push((0..quo.dim()).map(|i| format!("q{m}:{i}")).collect());
                        phi.push(proj.clone());
                        // boundary descends to the quotient
                        if m == 0 {
                            diffs.push(RatMatrix::zero(0, quo.dim()));
                        } else {
                            let mut d = RatMatrix::zero(data.dim(m - 1), quo.dim());
                            for (j, rep) in quo.representatives().iter().enumerate() {
                                d.set_column(j, &data.diffs[m].mul_vec(rep));
                            }
                            diffs.push(d);
                        }
                    }
                    std::cmp::Ordering::Greater => {
                        labels.push(Vec::new());
                        phi.push(RatMatrix::zero(0, data.phi[q].cols()));
                        diffs.push(RatMatrix::zero(
                            if q == m + 1 { quo.dim() } else { 0 },
                            0,
                        ));
                    }
                }
            }
            let aug = if m == 0 {
                let mut a = RatMatrix::zero(1, quo.dim());
                for (j, rep) in quo.representatives().iter().enumerate() {
                    a.set(0, j, data.aug.mul_vec(rep)[0].clone());
                }
                a
            } else {
                data.aug.clone()
            };
            supports.insert(
                key.clone(),
                SupportData {
                    labels,
                    diffs,
                    aug,
                    phi,
                },
            );
        }
        let mut steps = BTreeMap::new();
        for ((from, to), mats) in &full.steps {
            let mut out = Vec::new();
            for (q, mat) in mats.iter().enumerate() {
                match q.cmp(&m) {
                    std::cmp::Ordering::Less => out.push(mat.clone()),
                    std::cmp::Ordering::Equal => {
                        let (proj_to, _) = &quotient_maps[to];
                        let (_, quo_from) = &quotient_maps[from];
                        let mut m2 = RatMatrix::zero(proj_to.rows(), quo_from.dim());
                        for (j, rep) in quo_from.representatives().iter().enumerate() {
                            m2.set_column(j, &proj_to.mul_vec(&mat.mul_vec(rep)));
                        }
                        out.push(m2);
                    }
                    std::cmp::Ordering::Greater => out.push(RatMatrix::zero(0, 0)),
                }
            }
            steps.insert((from.clone(), to.clone()), out);
        }
        let system = ChainSystem {
            q_len,
            supports,
            support_complexes: full.support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }

    /// The full system with extra base summands; `phi` and the inclusions
    /// never touch them.
    pub fn full_with_extra_at_base(
        nerve: &Nerve,
        extra_dims: &[usize],
        extra_diffs: &[RatMatrix],
    ) -> Result<ChainSystem> {
        let mut system = ChainSystem::full(nerve)?;
        let q_len = system.q_len.max(extra_dims.len());
        system.resize_degrees(q_len);
        let extra_dim = |q: usize| extra_dims.get(q).copied().unwrap_or(0);
        let base = system.supports.get_mut(&Vec::new()).expect("base support");
        let mut new_labels = Vec::new();
        let mut new_diffs = Vec::new();
        let mut new_phi = Vec::new();
        for q in 0..q_len {
            let mut labels = base.labels[q].clone();
            labels.extend((0..extra_dim(q)).map(|i| format!("e{q}:{i}")));
            new_labels.push(labels);
            let old = &base.diffs[q];
            let rows_extra = if q == 0 { 0 } else { extra_dim(q - 1) };
            let mut d = RatMatrix::zero(old.rows() + rows_extra, old.cols() + extra_dim(q));
            d.paste(0, 0, old);
            if rows_extra > 0 && extra_dim(q) > 0 {
                let block = extra_diffs
                    .get(q)
                    .cloned()
                    .unwrap_or_else(|| RatMatrix::zero(rows_extra, extra_dim(q)));
                d.paste(old.rows(), old.cols(), &block);
            }
            new_diffs.push(d);
            let oldphi = &base.phi[q];
            let mut p = RatMatrix::zero(oldphi.rows() + extra_dim(q), oldphi.cols());
            p.paste(0, 0, oldphi);
            new_phi.push(p);
        }
        let mut aug = RatMatrix::zero(1, new_labels[0].len());
        aug.paste(0, 0, &base.aug);
        base.labels = new_labels;
        base.diffs = new_diffs;
        base.phi = new_phi;
        base.aug = aug;
        // widen the inclusions into the base: nothing maps to the extra part
        let base_dims: Vec<usize> = (0..q_len)
            .map(|q| system.supports[&Vec::new()].dim(q))
            .collect();
        for ((_, to), mats) in system.steps.iter_mut() {
            if !to.is_empty() {
                continue;
            }
            for (q, m) in mats.iter_mut().enumerate() {
                if m.rows() < base_dims[q] {
                    let mut widened = RatMatrix::zero(base_dims[q], m.cols());
                    widened.paste(0, 0, m);
                    *m = widened;
                }
            }
        }
        system.validate()?;
        Ok(system)
    }

    fn resize_degrees(&mut self, q_len: usize) {
        if q_len <= self.q_len {
            return;
        }
        for (key, data) in self.supports.iter_mut() {
            let z = &self.support_complexes[key];
            while data.labels.len() < q_len {
                let q = data.labels.len();
                let below = data.labels[q - 1].len();
                data.labels.push(Vec::new());
                data.diffs.push(RatMatrix::zero(below, 0));
                data.phi
                    .push(RatMatrix::zero(0, z.simplices_of_dim(q as i32).len()));
            }
        }
        for mats in self.steps.values_mut() {
            while mats.len() < q_len {
                mats.push(RatMatrix::zero(0, 0));
            }
        }
        self.q_len = q_len;
    }

    /// Composite inclusion `e(|from|) -> e(|to|)` for `to ⊆ from`, removing
    /// the extra vertices one at a time.
    pub fn inclusion(&self, from: &[usize], to: &[usize], q: usize) -> Result<RatMatrix> {
        if !to.iter().all(|v| from.contains(v)) {
            return Err(Error::Precondition(format!(
                "inclusion goes along a face relation: {to:?} is not a face of {from:?}"
            )));
        }
        let mut current: Vec<usize> = from.to_vec();
        let mut m = RatMatrix::identity(self.support(from)?.dim(q));
        let extras: Vec<usize> = from.iter().copied().filter(|v| !to.contains(v)).collect();
        for v in extras {
            let mut next = current.clone();
            next.retain(|&u| u != v);
            let step = self
                .steps
                .get(&(current.clone(), next.clone()))
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "system lacks the inclusion step {current:?} -> {next:?}"
                    ))
                })?;
            let mat = fit(
                step.get(q).unwrap_or(&RatMatrix::zero(0, 0)),
                self.support(&next)?.dim(q),
                m.rows(),
            );
            m = mat.mul(&m);
            current = next;
        }
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        for (key, data) in &self.supports {
            let name = format!("support [{key:?}]");
            if data.labels.len() != self.q_len
                || data.diffs.len() != self.q_len
                || data.phi.len() != self.q_len
            {
                return Err(Error::Dimension(format!(
                    "{name}: expected data in {} degrees",
                    self.q_len
                )));
            }
            let z = &self.support_complexes[key];
            for q in 0..self.q_len {
                let below = if q == 0 { 0 } else { data.dim(q - 1) };
                if data.diffs[q].cols() != data.dim(q) || data.diffs[q].rows() != below {
                    return Err(Error::Dimension(format!(
                        "{name}: differential at degree {q} has the wrong shape"
                    )));
                }
                if q >= 1 && !data.diffs[q - 1].mul(&data.diffs[q]).is_zero_matrix() {
                    return Err(Error::Precondition(format!(
                        "{name}: differentials at degree {q} do not compose to zero"
                    )));
                }
                let c_dim = z.simplices_of_dim(q as i32).len();
                if data.phi[q].cols() != c_dim || data.phi[q].rows() != data.dim(q) {
                    return Err(Error::Dimension(format!(
                        "{name}: phi at degree {q} has the wrong shape"
                    )));
                }
                if q >= 1 {
                    let boundary = fit(
                        &z.boundary_matrix(q as i32),
                        z.simplices_of_dim(q as i32 - 1).len(),
                        c_dim,
                    );
                    let lhs = data.phi[q - 1].mul(&boundary);
                    let rhs = data.diffs[q].mul(&data.phi[q]);
                    if lhs != rhs {
                        return Err(Error::Precondition(format!(
                            "{name}: phi does not commute with the boundary at degree {q}"
                        )));
                    }
                }
            }
            if data.aug.rows() != 1 || data.aug.cols() != data.dim(0) {
                return Err(Error::Dimension(format!("{name}: bad augmentation shape")));
            }
            if self.q_len > 1 && !data.aug.mul(&data.diffs[1]).is_zero_matrix() {
                return Err(Error::Precondition(format!(
                    "{name}: the augmentation after d_1 is nonzero"
                )));
            }
            // phi respects the augmentation of chains
            let ones = {
                let n0 = z.simplices_of_dim(0).len();
                let mut v = RatMatrix::zero(1, n0);
                for i in 0..n0 {
                    v.set(0, i, one());
                }
                v
            };
            if data.aug.mul(&data.phi[0]) != ones {
                return Err(Error::Precondition(format!(
                    "{name}: the augmentation does not extend the chain augmentation"
                )));
            }
        }
        for ((from, to), mats) in &self.steps {
            let df = self.support(from)?;
            let dt = self.support(to)?;
            let zf = &self.support_complexes[from];
            let zt = &self.support_complexes[to];
            let name = format!("inclusion {from:?} -> {to:?}");
            for q in 0..self.q_len {
                let m = fit(mats.get(q).unwrap_or(&RatMatrix::zero(0, 0)), dt.dim(q), df.dim(q));
                if q >= 1 {
                    let m1 = fit(&mats[q - 1], dt.dim(q - 1), df.dim(q - 1));
                    if m1.mul(&df.diffs[q]) != dt.diffs[q].mul(&m) {
                        return Err(Error::Precondition(format!(
                            "{name}: not a chain map at degree {q}"
                        )));
                    }
                }
                let c_inc = chain_inclusion(zf, zt, q as i32);
                if m.mul(&df.phi[q]) != dt.phi[q].mul(&c_inc) {
                    return Err(Error::Precondition(format!(
                        "{name}: phi is not natural at degree {q}"
                    )));
                }
            }
            let m0 = fit(&mats[0], dt.dim(0), df.dim(0));
            if dt.aug.mul(&m0) != df.aug {
                return Err(Error::Precondition(format!(
                    "{name}: augmentations do not match"
                )));
            }
        }
        for sigma in self.supports.keys() {
            if sigma.len() < 2 {
                continue;
            }
            for a in 0..sigma.len() {
                for b in (a + 1)..sigma.len() {
                    let mut fa = sigma.clone();
                    fa.remove(b);
                    fa.remove(a);
                    for q in 0..self.q_len {
                        let via_1 = {
                            let mut mid = sigma.clone();
                            mid.remove(a);
                            self.composed_step(sigma, &mid, &fa, q)?
                        };
                        let via_2 = {
                            let mut mid = sigma.clone();
                            mid.remove(b);
                            self.composed_step(sigma, &mid, &fa, q)?
                        };
                        if via_1 != via_2 {
                            return Err(Error::Precondition(format!(
                                "inclusions out of {sigma:?} are not functorial at degree {q}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn composed_step(
        &self,
        from: &[usize],
        mid: &[usize],
        to: &[usize],
        q: usize,
    ) -> Result<RatMatrix> {
        let first = self
            .steps
            .get(&(from.to_vec(), mid.to_vec()))
            .ok_or_else(|| Error::Precondition(format!("missing step {from:?} -> {mid:?}")))?;
        let second = self
            .steps
            .get(&(mid.to_vec(), to.to_vec()))
            .ok_or_else(|| Error::Precondition(format!("missing step {mid:?} -> {to:?}")))?;
        let f = fit(
            &first[q],
            self.support(mid)?.dim(q),
            self.support(from)?.dim(q),
        );
        let s = fit(
            &second[q],
            self.support(to)?.dim(q),
            self.support(mid)?.dim(q),
        );
        Ok(s.mul(&f))
    }

    pub fn to_json(&self, nerve: &Nerve) -> Value {
        let mut supports = Map::new();
        for (key, data) in &self.supports {
            supports.insert(simplex_key_name(nerve, key), support_to_json(data));
        }
        let mut inclusions = Map::new();
        for ((from, to), mats) in &self.steps {
            let k = format!(
                "{}|{}",
                simplex_key_name(nerve, from),
                simplex_key_name(nerve, to)
            );
            inclusions.insert(k, json!(mats.iter().map(matrix_to_json).collect::<Vec<_>>()));
        }
        json!({
            "kind": "chain",
            "degrees": self.q_len,
            "supports": Value::Object(supports),
            "restrictions": Value::Object(inclusions),
        })
    }

    pub fn from_json(nerve: &Nerve, v: &Value) -> Result<ChainSystem> {
        if v.get("kind").and_then(Value::as_str) != Some("chain") {
            return Err(Error::Parse("explicit system kind must be `chain`".into()));
        }
        let (q_len, supports, support_complexes, steps) = parse_system_common(nerve, v)?;
        let system = ChainSystem {
            q_len,
            supports,
            support_complexes,
            steps,
        };
        system.validate()?;
        Ok(system)
    }
}

/// Pads a possibly zero-shaped placeholder matrix to the expected shape.
fn fit(m: &RatMatrix, rows: usize, cols: usize) -> RatMatrix {
    if m.rows() == rows && m.cols() == cols {
        return m.clone();
    }
    if m.is_zero_matrix() {
        return RatMatrix::zero(rows, cols);
    }
    let mut out = RatMatrix::zero(rows, cols);
    out.paste(0, 0, m);
    out
}

fn matrix_to_json(m: &RatMatrix) -> Value {
    json!(m
        .to_dense()
        .iter()
        .map(|row| row.iter().map(show_rational).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn matrix_from_json(v: &Value, rows: usize, cols: usize) -> Result<RatMatrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    if arr.is_empty() {
        return Ok(RatMatrix::zero(rows, cols));
    }
    if arr.len() != rows {
        return Err(Error::Parse(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut m = RatMatrix::zero(rows, cols);
    for (i, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "matrix row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (j, cell) in row.iter().enumerate() {
            let s = cell
                .as_str()
                .ok_or_else(|| Error::Parse("matrix entries are `p/q` strings".into()))?;
            m.set(i, j, parse_rational(s)?);
        }
    }
    Ok(m)
}

fn support_to_json(data: &SupportData) -> Value {
    json!({
        "dims": data.labels.iter().map(Vec::len).collect::<Vec<_>>(),
        "diff": data.diffs.iter().map(matrix_to_json).collect::<Vec<_>>(),
        "aug": matrix_to_json(&data.aug),
        "phi": data.phi.iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

type ParsedSystem = (
    usize,
    BTreeMap<Vec<usize>, SupportData>,
    BTreeMap<Vec<usize>, SimplicialComplex>,
    BTreeMap<(Vec<usize>, Vec<usize>), Vec<RatMatrix>>,
);

fn parse_system_common(nerve: &Nerve, v: &Value) -> Result<ParsedSystem> {
    let is_chain = v.get("kind").and_then(Value::as_str) == Some("chain");
    let q_len = v
        .get("degrees")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("explicit system needs a `degrees` count".into()))? as usize;
    let key_of = |name: &str| -> Result<Vec<usize>> {
        if name.is_empty() {
            return Ok(Vec::new());
        }
        let mut key = Vec::new();
        for part in name.split(',') {
            key.push(nerve.complex().vertex_index(part)?);
        }
        key.sort_unstable();
        Ok(key)
    };
    let supports_json = v
        .get("supports")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("explicit system needs `supports`".into()))?;
    let mut supports = BTreeMap::new();
    let mut support_complexes = BTreeMap::new();
    for key in support_keys(nerve) {
        support_complexes.insert(key.clone(), nerve.support(&key)?);
    }
    for (name, body) in supports_json {
        let key = key_of(name)?;
        let z = support_complexes
            .get(&key)
            .ok_or_else(|| Error::Parse(format!("`{name}` is not a support of the covering")))?;
        let dims: Vec<usize> = body
            .get("dims")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("support `{name}` needs `dims`")))?
            .iter()
            .map(|d| d.as_u64().unwrap_or(0) as usize)
            .collect();
        if dims.len() != q_len {
            return Err(Error::Parse(format!(
                "support `{name}` declares {} degrees, expected {q_len}",
                dims.len()
            )));
        }
        let dim = |q: usize| dims.get(q).copied().unwrap_or(0);
        let get_mats = |field: &str, rows: &dyn Fn(usize) -> usize, cols: &dyn Fn(usize) -> usize| -> Result<Vec<RatMatrix>> {
            let arr = body
                .get(field)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("support `{name}` needs `{field}`")))?;
            if arr.len() != q_len {
                return Err(Error::Parse(format!(
                    "support `{name}`: `{field}` needs one matrix per degree"
                )));
            }
            arr.iter()
                .enumerate()
                .map(|(q, m)| matrix_from_json(m, rows(q), cols(q)))
                .collect()
        };
        let diffs = if is_chain {
            get_mats("diff", &|q| if q == 0 { 0 } else { dim(q - 1) }, &dim)?
        } else {
            get_mats("diff", &|q| if q + 1 < q_len { dim(q + 1) } else { 0 }, &dim)?
        };
        let c_dim = |q: usize| z.simplices_of_dim(q as i32).len();
        let phi = if is_chain {
            get_mats("phi", &dim, &c_dim)?
        } else {
            get_mats("phi", &c_dim, &dim)?
        };
        let aug = if is_chain {
            matrix_from_json(
                body.get("aug")
                    .ok_or_else(|| Error::Parse(format!("support `{name}` needs `aug`")))?,
                1,
                dim(0),
            )?
        } else {
            matrix_from_json(
                body.get("aug")
                    .ok_or_else(|| Error::Parse(format!("support `{name}` needs `aug`")))?,
                dim(0),
                1,
            )?
        };
        supports.insert(
            key,
            SupportData {
                labels: dims
                    .iter()
                    .enumerate()
                    .map(|(q, &d)| (0..d).map(|i| format!("a{q}:{i}")).collect())
                    .collect(),
                diffs,
                aug,
                phi,
            },
        );
    }
    for key in support_keys(nerve) {
        if !supports.contains_key(&key) {
            return Err(Error::Parse(format!(
                "explicit system misses the support `{}`",
                simplex_key_name(nerve, &key)
            )));
        }
    }
    let restrictions_json = v
        .get("restrictions")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("explicit system needs `restrictions`".into()))?;
    let mut steps = BTreeMap::new();
    for (k, mats) in restrictions_json {
        let (from_name, to_name) = k
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bad restriction key `{k}`")))?;
        let from = key_of(from_name)?;
        let to = key_of(to_name)?;
        let df = supports
            .get(&from)
            .ok_or_else(|| Error::Parse(format!("restriction from unknown `{from_name}`")))?;
        let dt = supports
            .get(&to)
            .ok_or_else(|| Error::Parse(format!("restriction to unknown `{to_name}`")))?;
        let arr = mats
            .as_array()
            .ok_or_else(|| Error::Parse("restriction value must be an array".into()))?;
        if arr.len() != q_len {
            return Err(Error::Parse(format!(
                "restriction `{k}` needs one matrix per degree"
            )));
        }
        let parsed: Vec<RatMatrix> = arr
            .iter()
            .enumerate()
            .map(|(q, m)| matrix_from_json(m, dt.dim(q), df.dim(q)))
            .collect::<Result<_>>()?;
        steps.insert((from, to), parsed);
    }
    // every single-step pair must be present
    let expected: Vec<(Vec<usize>, Vec<usize>)> = if is_chain {
        step_pairs(nerve).into_iter().map(|(a, b)| (b, a)).collect()
    } else {
        step_pairs(nerve)
    };
    for pair in expected {
        if !steps.contains_key(&pair) {
            return Err(Error::Parse(format!(
                "explicit system misses the step {} -> {}",
                simplex_key_name(nerve, &pair.0),
                simplex_key_name(nerve, &pair.1)
            )));
        }
    }
    Ok((q_len, supports, support_complexes, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn full_cochain_system_validates() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys = CochainSystem::full(&nerve).unwrap();
        assert_eq!(sys.degree_count(), 2);
        assert_eq!(sys.support(&[]).unwrap().dim(0), 3);
        assert_eq!(sys.support(&[0]).unwrap().dim(0), 2);
        assert_eq!(sys.support(&[0, 1]).unwrap().dim(0), 1);
    }

    #[test]
    fn truncated_cochain_system_validates() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys = CochainSystem::truncated(&nerve, 0).unwrap();
        // degree 0 of an arc support: constants form a line
        assert_eq!(sys.support(&[0]).unwrap().dim(0), 1);
        assert_eq!(sys.support(&[0]).unwrap().dim(1), 0);
        let sys1 = CochainSystem::truncated(&nerve, 1).unwrap();
        assert_eq!(sys1.support(&[0]).unwrap().dim(0), 2);
    }

    #[test]
    fn full_chain_system_validates() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys = ChainSystem::full(&nerve).unwrap();
        assert_eq!(sys.support(&[]).unwrap().dim(1), 3);
        let sys_t = ChainSystem::truncated(&nerve, 1).unwrap();
        assert_eq!(sys_t.degree_count(), 2);
    }

    #[test]
    fn json_round_trip() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys = CochainSystem::full(&nerve).unwrap();
        let v = sys.to_json(&nerve);
        let back = CochainSystem::from_json(&nerve, &v).unwrap();
        assert_eq!(back.degree_count(), sys.degree_count());
        for key in [vec![], vec![0], vec![0, 1]] {
            assert_eq!(
                back.support(&key).unwrap().diffs,
                sys.support(&key).unwrap().diffs
            );
        }
        let hsys = ChainSystem::full(&nerve).unwrap();
        let v = hsys.to_json(&nerve);
        let back = ChainSystem::from_json(&nerve, &v).unwrap();
        assert_eq!(back.degree_count(), hsys.degree_count());
    }

    #[test]
    fn extra_summand_system_validates() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys =
            CochainSystem::full_with_extra_at_base(&nerve, &[0, 0, 1], &[]).unwrap();
        assert_eq!(sys.support(&[]).unwrap().dim(2), 1);
        assert_eq!(sys.support(&[0]).unwrap().dim(2), 0);
        let hsys = ChainSystem::full_with_extra_at_base(&nerve, &[0, 0, 1], &[]).unwrap();
        assert_eq!(hsys.support(&[]).unwrap().dim(2), 1);
    }

    #[test]
    fn corrupted_explicit_system_rejected() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        let sys = CochainSystem::full(&nerve).unwrap();
        let mut v = sys.to_json(&nerve);
        // break one restriction entry
        let r = v
            .get_mut("restrictions")
            .and_then(|r| r.as_object_mut())
            .unwrap();
        let first_key = r.keys().next().unwrap().clone();
        let mats = r.get_mut(&first_key).unwrap().as_array_mut().unwrap();
        if let Some(row) = mats[0].as_array_mut().unwrap().first_mut() {
            row.as_array_mut().unwrap()[0] = json!("7");
        }
        assert!(CochainSystem::from_json(&nerve, &v).is_err());
    }
}
