//! Sparse matrices over the rationals and the elimination kernels everything
//! else is built on: rank, kernel bases, particular solutions and quotient
//! space data. Elimination always pivots on the leftmost column, smallest row
//! index, so every result is deterministic; no numerical pivoting is needed
//! because the arithmetic is exact.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rat::{one, show_rational, Rational};
use crate::{Error, Result};

/// A `rows x cols` matrix; absent entries are zero and stored entries are
/// never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = RatMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::rat::rat_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Rational) {
        if x.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, cur + x);
    }

    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.data[i].iter().map(|(&j, x)| (j, x))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for (j, x) in self.data[i].iter() {
                t.set(*j, i, x.clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        let mut m = RatMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, x) in self.data[i].iter() {
                m.set(i, *j, x * c);
            }
        }
        m
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for i in 0..other.rows {
            for (j, x) in other.data[i].iter() {
                m.add_to(i, *j, x);
            }
        }
        m
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add(&other.scale(&-one()))
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in mul: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut m = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter() {
                for (j, b) in other.data[*k].iter() {
                    m.add_to(i, *j, &(a * b));
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            for (j, a) in self.data[i].iter() {
                if !v[*j].is_zero() {
                    out[i] += a * &v[*j];
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Rational]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<Rational>>) -> RatMatrix {
        let mut m = RatMatrix::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            m.set_column(j, c);
        }
        m
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = RatMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for (j, x) in self.data[i].iter() {
                m.set(i, *j, x.clone());
            }
            for (j, x) in other.data[i].iter() {
                m.set(i, self.cols + j, x.clone());
            }
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(i0, j0)`.
    pub fn paste(&mut self, i0: usize, j0: usize, block: &RatMatrix) {
        assert!(i0 + block.rows <= self.rows && j0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for (j, x) in block.data[i].iter() {
                self.set(i0 + i, j0 + j, x.clone());
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Row-major serialization as `p/q` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_dense()
            .iter()
            .map(|r| r.iter().map(show_rational).collect())
            .collect()
    }

    /// Reduced row echelon form; returns the pivot (row, col) pairs in order.
    fn rref(&self) -> (Vec<BTreeMap<usize, Rational>>, Vec<(usize, usize)>) {
        let mut work = self.data.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            // leftmost column, smallest available row index
            let pivot_row = (next_row..self.rows).find(|&r| work[r].contains_key(&col));
            let Some(pr) = pivot_row else { continue };
            work.swap(next_row, pr);
            let pivot_val = work[next_row][&col].clone();
            if !pivot_val.is_one() {
                let inv = pivot_val.recip();
                let row: Vec<(usize, Rational)> =
                    work[next_row].iter().map(|(&j, x)| (j, x * &inv)).collect();
                work[next_row] = row.into_iter().collect();
            }
            let pivot_row_data: Vec<(usize, Rational)> = work[next_row]
                .iter()
                .map(|(&j, x)| (j, x.clone()))
                .collect();
            for r in 0..self.rows {
                if r == next_row {
                    continue;
                }
                let Some(factor) = work[r].get(&col).cloned() else {
                    continue;
                };
                for (j, x) in &pivot_row_data {
                    let delta = &factor * x;
                    match work[r].get(j).cloned() {
                        Some(cur) => {
                            let new = cur - delta;
                            if new.is_zero() {
                                work[r].remove(j);
                            } else {
                                work[r].insert(*j, new);
                            }
                        }
                        None => {
                            if !delta.is_zero() {
                                work[r].insert(*j, -delta);
                            }
                        }
                    }
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        (work, pivots)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel, one vector per free column of the reduced form.
    /// The basis is canonical: vector for free column `f` has a 1 in slot `f`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = one();
            for &(r, c) in &pivots {
                if let Some(x) = rref[r].get(&f) {
                    v[c] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve_particular(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "solve: matrix has {} rows, rhs has {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = RatMatrix::from_columns(self.rows, vec![b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (rref, pivots) = aug.rref();
        // a pivot in the rhs column means no solution
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(r, c) in &pivots {
            x[c] = rref[r].get(&self.cols).cloned().unwrap_or_else(Rational::zero);
        }
        Ok(Some(x))
    }

    /// Indices of a maximal independent subset of columns, in column order.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1.iter().map(|&(_, c)| c).collect()
    }
}

/// A basis of a quotient `W / V` of subspaces of an ambient coordinate space,
/// together with the linear coordinate map it induces.
///
/// `W` is spanned by the columns of `big`, `V` by the columns of `sub`; the
/// constructor checks `V ⊆ W`. Representatives are actual ambient vectors in
/// `W`, and [`QuotientBasis::coords`] expresses any `w ∈ W` in the basis
/// modulo `V`.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    ambient_dim: usize,
    sub_basis: Vec<Vec<Rational>>,
    reps: Vec<Vec<Rational>>,
    solver: RatMatrix,
}

impl QuotientBasis {
    pub fn new(big: &RatMatrix, sub: &RatMatrix) -> Result<QuotientBasis> {
        if big.rows() != sub.rows() {
            return Err(Error::Dimension(format!(
                "quotient: ambient dims differ ({} vs {})",
                big.rows(),
                sub.rows()
            )));
        }
        let ambient = big.rows();
        // containment: adding sub's columns to big must not raise the rank
        let joint = big.hstack(sub);
        if joint.rank() != big.rank() {
            return Err(Error::Precondition(
                "quotient: sub space is not contained in the big space".into(),
            ));
        }
        let sub_cols = sub.independent_columns();
        let sub_basis: Vec<Vec<Rational>> = sub_cols.iter().map(|&j| sub.column(j)).collect();
        // extend the V-basis by columns of big, keeping those that raise the rank
        let mut stack = RatMatrix::from_columns(ambient, sub_basis.clone());
        let mut reps: Vec<Vec<Rational>> = Vec::new();
        let mut rank = stack.rank();
        for j in 0..big.cols() {
            let cand = big.column(j);
            let trial = stack.hstack(&RatMatrix::from_columns(ambient, vec![cand.clone()]));
            let r = trial.rank();
            if r > rank {
                rank = r;
                stack = trial;
                reps.push(cand);
            }
        }
        let solver = stack;
        Ok(QuotientBasis {
            ambient_dim: ambient,
            sub_basis,
            reps,
            solver,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Representatives of the quotient basis, as ambient vectors.
    pub fn representatives(&self) -> &[Vec<Rational>] {
        &self.reps
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_basis.len()
    }

    /// Coordinates of `w` modulo `V` in the stored basis. Errors when
    /// `w ∉ W`.
    pub fn coords(&self, w: &[Rational]) -> Result<Vec<Rational>> {
        let x = self
            .solver
            .solve_particular(w)?
            .ok_or(Error::NotInSubspace)?;
        Ok(x[self.sub_basis.len()..].to_vec())
    }

    /// The ambient vector `sum coords_i * rep_i`.
    pub fn representative(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, rep) in coords.iter().zip(&self.reps) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(rep) {
                *o += c * r;
            }
        }
        out
    }
}

/// Vector helpers used across the crate.
pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn c3_boundary_1() -> RatMatrix {
        // edges 01, 02, 12 over vertices 0, 1, 2
        RatMatrix::from_int_rows(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zero(3, 4).rank(), 0);
        assert_eq!(c3_boundary_1().rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        let k = RatMatrix::zero(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v[i], rat_int(1));
        }
        let k = c3_boundary_1().kernel_basis();
        assert_eq!(k.len(), 1);
        // fundamental cycle direction e01 - e02 + e12
        assert_eq!(k[0], vec![rat_int(1), rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn solve_examples() {
        let id = RatMatrix::identity(2);
        let b = vec![rat(1, 2), rat_int(3)];
        assert_eq!(id.solve_particular(&b).unwrap().unwrap(), b);

        let z = RatMatrix::zero(2, 2);
        assert!(z.solve_particular(&b).unwrap().is_none());

        // boundary of C3 with b = v1 - v0 solved by the indicator of edge 01
        let m = c3_boundary_1();
        let b = vec![rat_int(-1), rat_int(1), rat_int(0)];
        let x = m.solve_particular(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let bad = m.solve_particular(&[rat_int(1), rat_int(0)]);
        assert!(bad.is_err());
    }

    #[test]
    fn solve_no_solution_rank_criterion() {
        let m = RatMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        let b = vec![rat_int(1), rat_int(3)];
        assert!(m.solve_particular(&b).unwrap().is_none());
        let aug = m.hstack(&RatMatrix::from_columns(2, vec![b]));
        assert!(aug.rank() > m.rank());
    }

    #[test]
    fn quotient_examples() {
        // W = plane, V = 0
        let w = RatMatrix::identity(2);
        let v = RatMatrix::zero(2, 0);
        let q = QuotientBasis::new(&w, &v).unwrap();
        assert_eq!(q.dim(), 2);
        let c = q.coords(&[rat_int(2), rat_int(5)]).unwrap();
        assert_eq!(c, vec![rat_int(2), rat_int(5)]);

        // W = V
        let q = QuotientBasis::new(&w, &w).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(q.coords(&[rat_int(1), rat_int(1)]).unwrap().is_empty());

        // H_1 of the circle: ker boundary / 0
        let ker = RatMatrix::from_columns(3, c3_boundary_1().kernel_basis());
        let q = QuotientBasis::new(&ker, &RatMatrix::zero(3, 0)).unwrap();
        assert_eq!(q.dim(), 1);
        let c = q
            .coords(&[rat_int(1), rat_int(-1), rat_int(1)])
            .unwrap();
        assert_eq!(c, vec![rat_int(1)]);

        // containment violation
        let bad = QuotientBasis::new(&RatMatrix::zero(2, 0), &w);
        assert!(bad.is_err());
    }

    #[test]
    fn quotient_kills_sub() {
        let big = RatMatrix::identity(3);
        let sub = RatMatrix::from_int_rows(&[&[1], &[1], &[0]]);
        let q = QuotientBasis::new(&big, &sub).unwrap();
        assert_eq!(q.dim(), 2);
        let c = q.coords(&sub.column(0)).unwrap();
        assert!(vec_is_zero(&c));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-4i64..5, 12)) {
            let m = RatMatrix::from_rows(
                entries.chunks(4).map(|r| r.iter().map(|&n| rat_int(n)).collect()).collect(),
            );
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(vec_is_zero(&m.mul_vec(v)));
            }
        }

        #[test]
        fn solve_is_exact(entries in proptest::collection::vec(-3i64..4, 9),
                          xs in proptest::collection::vec(-3i64..4, 3)) {
            let m = RatMatrix::from_rows(
                entries.chunks(3).map(|r| r.iter().map(|&n| rat_int(n)).collect()).collect(),
            );
            let x: Vec<Rational> = xs.iter().map(|&n| rat_int(n)).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve_particular(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }

    #[test]
    fn determinism() {
        let m = RatMatrix::from_int_rows(&[&[2, 4, 1], &[0, 3, 5], &[2, 7, 6]]);
        let a = (m.rank(), m.kernel_basis());
        let b = (m.rank(), m.kernel_basis());
        assert_eq!(a, b);
    }
}
