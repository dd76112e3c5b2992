//! Double complexes, their total and edge complexes, and the constructive
//! edge-isomorphism reductions.
//!
//! Internally every double complex is stored with anticommuting squares: a
//! commuting input has its vertical differential on block `(p, q)` multiplied
//! by `(-1)^q` on construction, after which the total differential is simply
//! `d + delta` blockwise and squares to zero. The untwisted differential is
//! kept alongside for callers that need the original commuting grid.

use crate::chain::{ChainComplexRat, Variance};
use crate::matrix::{vec_add, vec_is_zero, vec_sub, QuotientBasis, RatMatrix};
use crate::rat::{one, Rational};
use crate::simplicial::induced_on_quotients;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiVariance {
    /// `d: (p,q) -> (p,q+1)`, `delta: (p,q) -> (p+1,q)`
    Cohomological,
    /// `d: (p,q) -> (p,q-1)`, `delta: (p,q) -> (p-1,q)`
    Homological,
}

#[derive(Clone, Debug)]
pub struct DoubleComplex {
    variance: BiVariance,
    labels: Vec<Vec<Vec<String>>>,
    d: Vec<Vec<RatMatrix>>,
    delta_raw: Vec<Vec<RatMatrix>>,
    delta: Vec<Vec<RatMatrix>>,
}

impl DoubleComplex {
    /// Builds a double complex from a commuting grid of differentials.
    /// `labels[p][q]` names the basis of block `(p, q)`; ragged rows are
    /// padded with zero spaces, and zero-shaped placeholder matrices are
    /// resized to fit. Checks `d∘d = 0`, `delta∘delta = 0` and commutation,
    /// then twists `delta` so squares anticommute.
    pub fn from_commuting(
        variance: BiVariance,
        labels: Vec<Vec<Vec<String>>>,
        d: Vec<Vec<RatMatrix>>,
        delta_raw: Vec<Vec<RatMatrix>>,
    ) -> Result<Self> {
        let p_max = labels.len().saturating_sub(1);
        let q_max = labels
            .iter()
            .map(|r| r.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1);
        let mut labels = labels;
        let mut d = d;
        let mut delta_raw = delta_raw;
        for p in 0..=p_max {
            labels[p].resize(q_max + 1, Vec::new());
            d[p].resize(q_max + 1, RatMatrix::zero(0, 0));
            delta_raw[p].resize(q_max + 1, RatMatrix::zero(0, 0));
        }
        let dim = |labels: &Vec<Vec<Vec<String>>>, p: usize, q: usize| -> usize {
            labels
                .get(p)
                .and_then(|r: &Vec<Vec<String>>| r.get(q))
                .map_or(0, Vec::len)
        };
        for p in 0..=p_max {
            for q in 0..=q_max {
                let cols = dim(&labels, p, q);
                let d_rows = match variance {
                    BiVariance::Cohomological => {
                        if q == q_max {
                            0
                        } else {
                            dim(&labels, p, q + 1)
                        }
                    }
                    BiVariance::Homological => {
                        if q == 0 {
                            0
                        } else {
                            dim(&labels, p, q - 1)
                        }
                    }
                };
                if d[p][q].rows() == 0 && d[p][q].cols() == 0 {
                    d[p][q] = RatMatrix::zero(d_rows, cols);
                }
                if d[p][q].rows() != d_rows || d[p][q].cols() != cols {
                    return Err(Error::Dimension(format!(
                        "double complex: d at ({p},{q}) is {}x{}, expected {}x{}",
                        d[p][q].rows(),
                        d[p][q].cols(),
                        d_rows,
                        cols
                    )));
                }
                let delta_rows = match variance {
                    BiVariance::Cohomological => {
                        if p == p_max {
                            0
                        } else {
                            dim(&labels, p + 1, q)
                        }
                    }
                    BiVariance::Homological => {
                        if p == 0 {
                            0
                        } else {
                            dim(&labels, p - 1, q)
                        }
                    }
                };
                if delta_raw[p][q].rows() == 0 && delta_raw[p][q].cols() == 0 {
                    delta_raw[p][q] = RatMatrix::zero(delta_rows, cols);
                }
                if delta_raw[p][q].rows() != delta_rows || delta_raw[p][q].cols() != cols {
                    return Err(Error::Dimension(format!(
                        "double complex: delta at ({p},{q}) is {}x{}, expected {}x{}",
                        delta_raw[p][q].rows(),
                        delta_raw[p][q].cols(),
                        delta_rows,
                        cols
                    )));
                }
            }
        }
        // twist the vertical differential by the column sign
        let mut delta = delta_raw.clone();
        for row in delta.iter_mut() {
            for (q, m) in row.iter_mut().enumerate() {
                if q % 2 == 1 {
                    *m = m.scale(&-one());
                }
            }
        }
        let k = DoubleComplex {
            variance,
            labels,
            d,
            delta_raw,
            delta,
        };
        k.check()?;
        Ok(k)
    }

    fn check(&self) -> Result<()> {
        let (p_max, q_max) = (self.p_max(), self.q_max());
        for p in 0..=p_max {
            for q in 0..=q_max {
                if let Some(t) = self.d_target(p, q) {
                    if self.d_target(t.0, t.1).is_some() {
                        let second = &self.d[t.0][t.1];
                        if !second.mul(&self.d[p][q]).is_zero_matrix() {
                            return Err(Error::Precondition(format!(
                                "double complex: d after d is nonzero at ({p},{q})"
                            )));
                        }
                    }
                }
                if let Some(t) = self.delta_target(p, q) {
                    if self.delta_target(t.0, t.1).is_some() {
                        let second = &self.delta_raw[t.0][t.1];
                        if !second.mul(&self.delta_raw[p][q]).is_zero_matrix() {
                            return Err(Error::Precondition(format!(
                                "double complex: delta after delta is nonzero at ({p},{q})"
                            )));
                        }
                    }
                }
                if let (Some(dt), Some(et)) = (self.d_target(p, q), self.delta_target(p, q)) {
                    let via_d = self.delta_raw[dt.0][dt.1].mul(&self.d[p][q]);
                    let via_delta = self.d[et.0][et.1].mul(&self.delta_raw[p][q]);
                    if via_d != via_delta {
                        return Err(Error::Precondition(format!(
                            "double complex: square at ({p},{q}) does not commute"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn variance(&self) -> BiVariance {
        self.variance
    }

    pub fn p_max(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    pub fn q_max(&self) -> usize {
        self.labels.first().map_or(0, |r| r.len().saturating_sub(1))
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.labels
            .get(p)
            .and_then(|r| r.get(q))
            .map_or(0, Vec::len)
    }

    pub fn labels(&self, p: usize, q: usize) -> &[String] {
        &self.labels[p][q]
    }

    pub fn d(&self, p: usize, q: usize) -> &RatMatrix {
        &self.d[p][q]
    }

    /// The anticommuting (twisted) vertical differential.
    pub fn delta(&self, p: usize, q: usize) -> &RatMatrix {
        &self.delta[p][q]
    }

    /// The commuting vertical differential as originally supplied.
    pub fn delta_raw(&self, p: usize, q: usize) -> &RatMatrix {
        &self.delta_raw[p][q]
    }

    fn d_target(&self, p: usize, q: usize) -> Option<(usize, usize)> {
        match self.variance {
            BiVariance::Cohomological => (q < self.q_max()).then(|| (p, q + 1)),
            BiVariance::Homological => (q > 0).then(|| (p, q - 1)),
        }
    }

    fn delta_target(&self, p: usize, q: usize) -> Option<(usize, usize)> {
        match self.variance {
            BiVariance::Cohomological => (p < self.p_max()).then(|| (p + 1, q)),
            BiVariance::Homological => (p > 0).then(|| (p - 1, q)),
        }
    }

    /// Positive-degree exactness of each row `(K^{p,•}, d)`, the hypothesis
    /// of the edge theorems. The first failing block is reported.
    pub fn rows_exact(&self) -> Result<()> {
        for p in 0..=self.p_max() {
            for q in 1..=self.q_max() {
                let outgoing = &self.d[p][q];
                let incoming = match self.variance {
                    BiVariance::Cohomological => self.d[p][q - 1].clone(),
                    BiVariance::Homological => {
                        if q == self.q_max() {
                            RatMatrix::zero(self.dim(p, q), 0)
                        } else {
                            self.d[p][q + 1].clone()
                        }
                    }
                };
                let kernel_dim = outgoing.cols() - outgoing.rank();
                if kernel_dim != incoming.rank() {
                    return Err(Error::NotExact(p, q));
                }
            }
        }
        Ok(())
    }

    /// The total complex with differential `d + delta` blockwise.
    pub fn total(&self) -> TotalComplex {
        let n_max = self.p_max() + self.q_max();
        let variance = match self.variance {
            BiVariance::Cohomological => Variance::Cochain,
            BiVariance::Homological => Variance::Chain,
        };
        let mut layout: Vec<Vec<(usize, usize, usize)>> = Vec::new();
        let mut labels = Vec::new();
        for n in 0..=n_max {
            let mut blocks = Vec::new();
            let mut names = Vec::new();
            let mut offset = 0;
            for p in 0..=self.p_max().min(n) {
                let q = n - p;
                if q > self.q_max() {
                    continue;
                }
                blocks.push((p, q, offset));
                for l in self.labels(p, q) {
                    names.push(format!("({p},{q}):{l}"));
                }
                offset += self.dim(p, q);
            }
            layout.push(blocks);
            labels.push(names);
        }
        let mut maps = Vec::new();
        for n in 0..=n_max {
            let target_n = match variance {
                Variance::Cochain => {
                    if n == n_max {
                        None
                    } else {
                        Some(n + 1)
                    }
                }
                Variance::Chain => n.checked_sub(1),
            };
            let rows = target_n.map_or(0, |t| labels[t].len());
            let cols = labels[n].len();
            let mut m = RatMatrix::zero(rows, cols);
            if let Some(t) = target_n {
                let target_offset = |p: usize, q: usize| -> Option<usize> {
                    layout[t]
                        .iter()
                        .find(|&&(bp, bq, _)| bp == p && bq == q)
                        .map(|&(_, _, o)| o)
                };
                for &(p, q, off) in &layout[n] {
                    if let Some(dt) = self.d_target(p, q) {
                        if let Some(to) = target_offset(dt.0, dt.1) {
                            m.paste(to, off, &self.d[p][q]);
                        }
                    }
                    if let Some(et) = self.delta_target(p, q) {
                        if let Some(to) = target_offset(et.0, et.1) {
                            m.paste(to, off, &self.delta[p][q]);
                        }
                    }
                }
            }
            maps.push(m);
        }
        let complex = ChainComplexRat::new(variance, 0, labels, maps)
            .expect("anticommuting squares make the total differential square to zero");
        TotalComplex { complex, layout }
    }

    /// Debug dump: per-block dimensions and differentials as rational
    /// matrices, for golden-file comparisons.
    pub fn to_debug_value(&self) -> serde_json::Value {
        let mut blocks = Vec::new();
        for p in 0..=self.p_max() {
            for q in 0..=self.q_max() {
                blocks.push(serde_json::json!({
                    "p": p,
                    "q": q,
                    "dim": self.dim(p, q),
                    "d": self.d[p][q].to_strings(),
                    "delta": self.delta_raw[p][q].to_strings(),
                }));
            }
        }
        serde_json::json!({
            "variance": match self.variance {
                BiVariance::Cohomological => "cohomological",
                BiVariance::Homological => "homological",
            },
            "p_max": self.p_max(),
            "q_max": self.q_max(),
            "blocks": blocks,
        })
    }

    /// The cohomological edge complex `L^p = ker(d: K^{p,0} -> K^{p,1})` with
    /// the differential induced by the twisted `delta`.
    pub fn edge_cochain(&self) -> EdgeComplex {
        assert_eq!(self.variance, BiVariance::Cohomological);
        let mut inclusions = Vec::new();
        let mut labels = Vec::new();
        for p in 0..=self.p_max() {
            let kernel = self.d[p][0].kernel_basis();
            let dim0 = self.dim(p, 0);
            let inc = RatMatrix::from_columns(dim0, kernel);
            labels.push((0..inc.cols()).map(|i| format!("L{p}:{i}")).collect());
            inclusions.push(inc);
        }
        let mut maps = Vec::new();
        for p in 0..=self.p_max() {
            if p == self.p_max() {
                maps.push(RatMatrix::zero(0, inclusions[p].cols()));
                continue;
            }
            let image = self.delta[p][0].mul(&inclusions[p]);
            let m = crate::simplicial::solve_through(&inclusions[p + 1], &image)
                .expect("delta preserves the kernel of the first row differential");
            maps.push(m);
        }
        let complex = ChainComplexRat::new(Variance::Cochain, 0, labels, maps)
            .expect("edge differential squares to zero");
        EdgeComplex {
            complex,
            inclusions,
        }
    }

    /// The homological edge complex `L_p = coker(d: K_{p,1} -> K_{p,0})` with
    /// the differential induced by the twisted `delta` on the quotient.
    pub fn edge_chain(&self) -> EdgeQuotient {
        assert_eq!(self.variance, BiVariance::Homological);
        let mut quotients = Vec::new();
        let mut labels: Vec<Vec<String>> = Vec::new();
        for p in 0..=self.p_max() {
            let dim0 = self.dim(p, 0);
            let big = RatMatrix::identity(dim0);
            let sub = if self.q_max() >= 1 {
                self.d[p][1].clone()
            } else {
                RatMatrix::zero(dim0, 0)
            };
            let q = QuotientBasis::new(&big, &sub).expect("image lies in the block");
            labels.push((0..q.dim()).map(|i| format!("L{p}:{i}")).collect());
            quotients.push(q);
        }
        let mut maps = Vec::new();
        for p in 0..=self.p_max() {
            if p == 0 {
                maps.push(RatMatrix::zero(0, quotients[0].dim()));
                continue;
            }
            let mut m = RatMatrix::zero(quotients[p - 1].dim(), quotients[p].dim());
            for (j, rep) in quotients[p].representatives().iter().enumerate() {
                let image = self.delta[p][0].mul_vec(rep);
                let coords = quotients[p - 1]
                    .coords(&image)
                    .expect("quotient coordinates of a block vector");
                m.set_column(j, &coords);
            }
            maps.push(m);
        }
        let complex = ChainComplexRat::new(Variance::Chain, 0, labels, maps)
            .expect("induced quotient differential squares to zero");
        EdgeQuotient {
            complex,
            quotients,
        }
    }
}

/// The total complex of a double complex with its block layout.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    pub complex: ChainComplexRat,
    /// per total degree: blocks `(p, q, offset)` in order of increasing `p`
    layout: Vec<Vec<(usize, usize, usize)>>,
}

impl TotalComplex {
    pub fn dim(&self, n: i32) -> usize {
        self.complex.dim(n)
    }

    pub fn blocks(&self, n: usize) -> &[(usize, usize, usize)] {
        static EMPTY: Vec<(usize, usize, usize)> = Vec::new();
        self.layout.get(n).unwrap_or(&EMPTY)
    }

    fn block_offset(&self, n: usize, p: usize, q: usize) -> Option<usize> {
        self.layout
            .get(n)?
            .iter()
            .find(|&&(bp, bq, _)| bp == p && bq == q)
            .map(|&(_, _, o)| o)
    }

    /// Embeds a block vector into total degree `n`.
    pub fn inject(&self, n: usize, p: usize, q: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.complex.dim(n as i32)];
        if v.is_empty() {
            return out;
        }
        let off = self
            .block_offset(n, p, q)
            .expect("block exists in this total degree");
        out[off..off + v.len()].clone_from_slice(v);
        out
    }

    /// Extracts the `(p, q)` component of a total vector.
    pub fn component(
        &self,
        n: usize,
        p: usize,
        q: usize,
        v: &[Rational],
        block_dim: usize,
    ) -> Vec<Rational> {
        match self.block_offset(n, p, q) {
            Some(off) => v[off..off + block_dim].to_vec(),
            None => vec![Rational::zero(); block_dim],
        }
    }
}

use num_traits::Zero;

/// Cohomological edge complex with inclusions `L^p -> K^{p,0}`.
#[derive(Clone, Debug)]
pub struct EdgeComplex {
    pub complex: ChainComplexRat,
    pub inclusions: Vec<RatMatrix>,
}

/// Homological edge complex with quotient data `K_{p,0} -> L_p`.
#[derive(Clone, Debug)]
pub struct EdgeQuotient {
    pub complex: ChainComplexRat,
    pub quotients: Vec<QuotientBasis>,
}

/// Result of reducing a total cocycle to the edge.
pub struct EdgeReduction {
    /// element of `K^{n,0}` with `d y = 0`
    pub edge_element: Vec<Rational>,
    /// element of `T^{n-1}` with `z - inject(edge_element) = D w`
    pub correction: Vec<Rational>,
}

/// Reduces a total cocycle to the edge by repeatedly removing its lowest-`p`
/// block with a `d`-preimage; the hypothesis is positive-degree exactness of
/// the rows. Fails, naming the block, when a preimage is missing.
pub fn edge_reduce_cocycle(
    k: &DoubleComplex,
    total: &TotalComplex,
    n: usize,
    z: &[Rational],
) -> Result<EdgeReduction> {
    assert_eq!(k.variance(), BiVariance::Cohomological);
    let boundary_out = total.complex.map_at(n as i32);
    assert!(
        vec_is_zero(&boundary_out.mul_vec(z)),
        "edge reduction expects a cocycle"
    );
    let mut z = z.to_vec();
    let mut w = vec![Rational::zero(); total.complex.dim(n as i32 - 1)];
    for p in 0..n {
        if p > k.p_max() {
            break;
        }
        let q = n - p;
        if q == 0 || q > k.q_max() {
            continue;
        }
        let block = total.component(n, p, q, &z, k.dim(p, q));
        if vec_is_zero(&block) {
            continue;
        }
        let pre = k
            .d(p, q - 1)
            .solve_particular(&block)?
            .ok_or(Error::NotExact(p, q))?;
        let y_total = total.inject(n - 1, p, q - 1, &pre);
        let dy = total.complex.map_at(n as i32 - 1).mul_vec(&y_total);
        z = vec_sub(&z, &dy);
        w = vec_add(&w, &y_total);
    }
    let edge_element = if n <= k.p_max() {
        total.component(n, n, 0, &z, k.dim(n, 0))
    } else {
        Vec::new()
    };
    debug_assert!({
        let back = if n <= k.p_max() {
            total.inject(n, n, 0, &edge_element)
        } else {
            vec![Rational::zero(); total.complex.dim(n as i32)]
        };
        vec_is_zero(&vec_sub(&z, &back))
    });
    Ok(EdgeReduction {
        edge_element,
        correction: w,
    })
}

/// Matrix of `H^n(L) -> H^n(T)` induced by the inclusion of the edge
/// complex, in the stored bases. Requires exact rows.
pub fn edge_iso_matrix(k: &DoubleComplex, n: usize) -> Result<RatMatrix> {
    k.rows_exact()?;
    let total = k.total();
    let edge = k.edge_cochain();
    let h_edge = edge.complex.homology(n as i32);
    let h_total = total.complex.homology(n as i32);
    let mut m = RatMatrix::zero(h_total.dim(), h_edge.dim());
    if n > k.p_max() {
        return Ok(m);
    }
    for (j, rep) in h_edge.representatives().iter().enumerate() {
        let in_block = edge.inclusions[n].mul_vec(rep);
        let in_total = total.inject(n, n, 0, &in_block);
        let coords = h_total.coords(&in_total)?;
        m.set_column(j, &coords);
    }
    Ok(m)
}

/// Matrix of `H^n(T) -> H^n(L)` computed with the reduction algorithm; it is
/// a two-sided inverse of [`edge_iso_matrix`].
pub fn edge_projection_matrix(k: &DoubleComplex, n: usize) -> Result<RatMatrix> {
    k.rows_exact()?;
    let total = k.total();
    let edge = k.edge_cochain();
    let h_edge = edge.complex.homology(n as i32);
    let h_total = total.complex.homology(n as i32);
    let mut m = RatMatrix::zero(h_edge.dim(), h_total.dim());
    if n > k.p_max() {
        return Ok(m);
    }
    for (j, rep) in h_total.representatives().iter().enumerate() {
        let reduced = edge_reduce_cocycle(k, &total, n, rep)?;
        let in_edge = crate::simplicial::solve_through(
            &edge.inclusions[n],
            &RatMatrix::from_columns(
                reduced.edge_element.len(),
                vec![reduced.edge_element.clone()],
            ),
        )?;
        let coords = h_edge.coords(&in_edge.column(0))?;
        m.set_column(j, &coords);
    }
    Ok(m)
}

/// Matrix of `H_n(T) -> H_n(L)` induced by the quotient map. Requires exact
/// rows of the homological double complex.
pub fn edge_iso_matrix_homological(k: &DoubleComplex, n: usize) -> Result<RatMatrix> {
    assert_eq!(k.variance(), BiVariance::Homological);
    k.rows_exact()?;
    let total = k.total();
    let edge = k.edge_chain();
    let h_total = total.complex.homology(n as i32);
    let h_edge = edge.complex.homology(n as i32);
    let mut m = RatMatrix::zero(h_edge.dim(), h_total.dim());
    if n > k.p_max() {
        return Ok(m);
    }
    for (j, rep) in h_total.representatives().iter().enumerate() {
        let block = total.component(n, n, 0, rep, k.dim(n, 0));
        let class = edge.quotients[n].coords(&block)?;
        let coords = h_edge.coords(&class)?;
        m.set_column(j, &coords);
    }
    Ok(m)
}

/// Matrix of `H_n(L) -> H_n(T)` built by the constructive lifting passes; it
/// inverts [`edge_iso_matrix_homological`].
pub fn edge_lift_matrix_homological(k: &DoubleComplex, n: usize) -> Result<RatMatrix> {
    assert_eq!(k.variance(), BiVariance::Homological);
    k.rows_exact()?;
    let total = k.total();
    let edge = k.edge_chain();
    let h_total = total.complex.homology(n as i32);
    let h_edge = edge.complex.homology(n as i32);
    let mut m = RatMatrix::zero(h_total.dim(), h_edge.dim());
    if n > k.p_max() {
        return Ok(m);
    }
    for (j, class_rep) in h_edge.representatives().iter().enumerate() {
        let w_top = edge.quotients[n].representative(class_rep);
        let cycle = lift_edge_cycle(k, &total, n, &w_top)?;
        let coords = h_total.coords(&cycle)?;
        m.set_column(j, &coords);
    }
    Ok(m)
}

/// Extends a block vector `w_n` in `K_{n,0}`, whose class is a cycle of the
/// edge complex, to a cycle of the total complex with `(n, 0)` component
/// `w_n`.
pub fn lift_edge_cycle(
    k: &DoubleComplex,
    total: &TotalComplex,
    n: usize,
    w_top: &[Rational],
) -> Result<Vec<Rational>> {
    let mut cycle = total.inject(n, n, 0, w_top);
    // the block the previous step produced, starting at (n, 0)
    let mut current = w_top.to_vec();
    let mut current_block = (n, 0usize);
    for p in (0..n).rev() {
        let q = n - p;
        // the unmatched boundary component sits in block (p, q - 1)
        let down = if current_block.1 <= k.q_max() && !current.is_empty() {
            k.delta(current_block.0, current_block.1).mul_vec(&current)
        } else {
            vec![Rational::zero(); k.dim(p, q - 1)]
        };
        if q > k.q_max() {
            if !vec_is_zero(&down) {
                return Err(Error::NotExact(p, q - 1));
            }
            current = Vec::new();
            current_block = (p, q);
            continue;
        }
        let target: Vec<Rational> = down.iter().map(|x| -x.clone()).collect();
        let pre = k
            .d(p, q)
            .solve_particular(&target)?
            .ok_or(Error::NotExact(p, q - 1))?;
        cycle = vec_add(&cycle, &total.inject(n, p, q, &pre));
        current = pre;
        current_block = (p, q);
    }
    debug_assert!(vec_is_zero(&total.complex.map_at(n as i32).mul_vec(&cycle)));
    Ok(cycle)
}

/// A morphism of double complexes: one matrix per block, commuting with both
/// untwisted differentials.
pub struct BiMorphism {
    pub blocks: Vec<Vec<RatMatrix>>,
}

impl BiMorphism {
    pub fn check(&self, src: &DoubleComplex, dst: &DoubleComplex) -> Result<()> {
        if src.variance() != dst.variance() {
            return Err(Error::InvalidMap("variance mismatch".into()));
        }
        if src.p_max() != dst.p_max() || src.q_max() != dst.q_max() {
            return Err(Error::InvalidMap(
                "morphism needs matching degree bounds".into(),
            ));
        }
        for p in 0..=src.p_max() {
            for q in 0..=src.q_max() {
                let f = &self.blocks[p][q];
                if f.rows() != dst.dim(p, q) || f.cols() != src.dim(p, q) {
                    return Err(Error::Dimension(format!(
                        "morphism block ({p},{q}) has the wrong shape"
                    )));
                }
                if let Some(t) = src.d_target(p, q) {
                    let lhs = self.blocks[t.0][t.1].mul(src.d(p, q));
                    let rhs = dst.d(p, q).mul(f);
                    if lhs != rhs {
                        return Err(Error::InvalidMap(format!(
                            "morphism does not commute with d at ({p},{q})"
                        )));
                    }
                }
                if let Some(t) = src.delta_target(p, q) {
                    let lhs = self.blocks[t.0][t.1].mul(src.delta_raw(p, q));
                    let rhs = dst.delta_raw(p, q).mul(f);
                    if lhs != rhs {
                        return Err(Error::InvalidMap(format!(
                            "morphism does not commute with delta at ({p},{q})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The induced map of total complexes in degree `n`.
    pub fn total_map(&self, src: &TotalComplex, dst: &TotalComplex, n: usize) -> RatMatrix {
        let rows = dst.complex.dim(n as i32);
        let cols = src.complex.dim(n as i32);
        let mut m = RatMatrix::zero(rows, cols);
        for &(p, q, off) in src.blocks(n) {
            let block = &self.blocks[p][q];
            if let Some(to) = dst.block_offset(n, p, q) {
                m.paste(to, off, block);
            }
        }
        m
    }
}

/// Matrix of `H^n(T_src) -> H^n(T_dst)` induced by a morphism of double
/// complexes.
pub fn compare_totals(
    f: &BiMorphism,
    src: &DoubleComplex,
    dst: &DoubleComplex,
    n: usize,
) -> Result<RatMatrix> {
    f.check(src, dst)?;
    let ts = src.total();
    let td = dst.total();
    let total = f.total_map(&ts, &td, n);
    let hs = ts.complex.homology(n as i32);
    let hd = td.complex.homology(n as i32);
    Ok(induced_on_quotients(&total, &hs, &hd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn line() -> Vec<String> {
        vec!["x".to_string()]
    }

    #[test]
    fn single_space_total() {
        let k = DoubleComplex::from_commuting(
            BiVariance::Cohomological,
            vec![vec![line()]],
            vec![vec![RatMatrix::zero(0, 1)]],
            vec![vec![RatMatrix::zero(0, 1)]],
        )
        .unwrap();
        let t = k.total();
        assert_eq!(t.complex.dim(0), 1);
        assert_eq!(t.complex.betti(0), 1);
    }

    #[test]
    fn identity_row_total_is_exact() {
        let k = DoubleComplex::from_commuting(
            BiVariance::Cohomological,
            vec![vec![line(), line()]],
            vec![vec![RatMatrix::identity(1), RatMatrix::zero(0, 1)]],
            vec![vec![RatMatrix::zero(0, 1), RatMatrix::zero(0, 1)]],
        )
        .unwrap();
        let t = k.total();
        assert_eq!(t.complex.betti(0), 0);
        assert_eq!(t.complex.betti(1), 0);
    }

    /// 2x2 grid of lines, all differentials the identity before twisting.
    fn square_grid() -> DoubleComplex {
        DoubleComplex::from_commuting(
            BiVariance::Cohomological,
            vec![vec![line(), line()], vec![line(), line()]],
            vec![
                vec![RatMatrix::identity(1), RatMatrix::zero(0, 1)],
                vec![RatMatrix::identity(1), RatMatrix::zero(0, 1)],
            ],
            vec![
                vec![RatMatrix::identity(1), RatMatrix::identity(1)],
                vec![RatMatrix::zero(0, 1), RatMatrix::zero(0, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn twist_makes_total_square_zero() {
        // the ChainComplexRat constructor inside total() checks D after D = 0
        let t = square_grid().total();
        assert_eq!(t.complex.dim(0), 1);
        assert_eq!(t.complex.dim(1), 2);
        assert_eq!(t.complex.dim(2), 1);
    }

    #[test]
    fn single_column_edge_iso_is_identity() {
        let k = DoubleComplex::from_commuting(
            BiVariance::Cohomological,
            vec![vec![line()], vec![line()]],
            vec![vec![RatMatrix::zero(0, 1)], vec![RatMatrix::zero(0, 1)]],
            vec![vec![RatMatrix::zero(1, 1)], vec![RatMatrix::zero(0, 1)]],
        )
        .unwrap();
        for n in 0..=1 {
            let m = edge_iso_matrix(&k, n).unwrap();
            assert_eq!(m, RatMatrix::identity(1));
        }
    }

    #[test]
    fn reduction_recovers_coboundaries() {
        let k = square_grid();
        let t = k.total();
        assert!(k.rows_exact().is_ok());
        assert_eq!(t.complex.betti(1), 0);
        let w = vec![rat_int(1)];
        let z = t.complex.map_at(0).mul_vec(&t.inject(0, 0, 0, &w));
        let red = edge_reduce_cocycle(&k, &t, 1, &z).unwrap();
        let back = vec_add(
            &t.inject(1, 1, 0, &red.edge_element),
            &t.complex.map_at(0).mul_vec(&red.correction),
        );
        assert_eq!(back, z);
    }

    #[test]
    fn zero_complex_edges() {
        let k = DoubleComplex::from_commuting(
            BiVariance::Homological,
            vec![vec![Vec::<String>::new()]],
            vec![vec![RatMatrix::zero(0, 0)]],
            vec![vec![RatMatrix::zero(0, 0)]],
        )
        .unwrap();
        let m = edge_iso_matrix_homological(&k, 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }

    #[test]
    fn projection_inverts_inclusion() {
        let k = square_grid();
        for n in 0..=2usize {
            let inc = edge_iso_matrix(&k, n).unwrap();
            let proj = edge_projection_matrix(&k, n).unwrap();
            let a = inc.mul(&proj);
            let b = proj.mul(&inc);
            assert_eq!(a, RatMatrix::identity(a.rows()));
            assert_eq!(b, RatMatrix::identity(b.rows()));
        }
    }

    #[test]
    fn homological_edge_on_the_arc_covering() {
        // rows of the homological grid of a fine covering are exact in
        // positive degrees, so the quotient to the edge is an isomorphism
        // and the constructive lift inverts it
        let (_, a3) = crate::fixtures::circle3_with_arcs();
        let system = crate::systems::ChainSystem::full(&a3.nerve()).unwrap();
        let kc = crate::leray::HomCoveringComplex::new(&a3, system).unwrap();
        assert!(kc.double.rows_exact().is_ok());
        for n in 0..=2usize {
            let quo = edge_iso_matrix_homological(&kc.double, n).unwrap();
            let lift = edge_lift_matrix_homological(&kc.double, n).unwrap();
            assert_eq!(quo.mul(&lift), RatMatrix::identity(quo.rows()));
            assert_eq!(lift.mul(&quo), RatMatrix::identity(lift.rows()));
            if n == 1 {
                assert_eq!(quo.rows(), 1, "one class in degree one");
            }
        }
    }

    #[test]
    fn tall_thin_grid_edges() {
        // two points covered by three copies of the whole base: the nerve is
        // a full 2-simplex while the grid has a single column, so lifts walk
        // off the grid and must handle the empty blocks
        let base = crate::simplicial::SimplicialComplex::closure_indexed(
            vec!["a".into(), "b".into()],
            &[vec![0], vec![1]],
        );
        let u = crate::covering::Covering::new(
            base,
            vec!["U0".into(), "U1".into(), "U2".into()],
            vec![
                vec![vec![0], vec![1]],
                vec![vec![0], vec![1]],
                vec![vec![0], vec![1]],
            ],
        )
        .unwrap();
        let system = crate::systems::ChainSystem::full(&u.nerve()).unwrap();
        let kc = crate::leray::HomCoveringComplex::new(&u, system).unwrap();
        assert_eq!(kc.double.p_max(), 2);
        assert_eq!(kc.double.q_max(), 0);
        for n in 0..=2usize {
            let quo = edge_iso_matrix_homological(&kc.double, n).unwrap();
            let lift = edge_lift_matrix_homological(&kc.double, n).unwrap();
            assert_eq!(quo.mul(&lift), RatMatrix::identity(quo.rows()));
            assert_eq!(lift.mul(&quo), RatMatrix::identity(lift.rows()));
        }
    }

    #[test]
    fn one_block_homological_edge_is_identity() {
        let k = DoubleComplex::from_commuting(
            BiVariance::Homological,
            vec![vec![line()]],
            vec![vec![RatMatrix::zero(0, 1)]],
            vec![vec![RatMatrix::zero(0, 1)]],
        )
        .unwrap();
        assert_eq!(
            edge_iso_matrix_homological(&k, 0).unwrap(),
            RatMatrix::identity(1)
        );
    }
}
