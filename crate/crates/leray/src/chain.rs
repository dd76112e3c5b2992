//! Graded complexes of rational vector spaces with labeled bases.
//!
//! One type covers both variances: a `Cochain` complex has maps raising the
//! degree by one, a `Chain` complex has maps lowering it. Augmented complexes
//! simply start at degree -1 with a one-dimensional space.

use crate::matrix::{QuotientBasis, RatMatrix};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    /// maps go `degree -> degree + 1`
    Cochain,
    /// maps go `degree -> degree - 1`
    Chain,
}

#[derive(Clone, Debug)]
pub struct ChainComplexRat {
    variance: Variance,
    lo: i32,
    labels: Vec<Vec<String>>,
    /// `maps[i]` leaves the space of degree `lo + i`. For `Cochain` the last
    /// map has zero rows; for `Chain` the first map has zero rows.
    maps: Vec<RatMatrix>,
}

impl ChainComplexRat {
    pub fn new(
        variance: Variance,
        lo: i32,
        labels: Vec<Vec<String>>,
        maps: Vec<RatMatrix>,
    ) -> Result<Self> {
        let c = ChainComplexRat {
            variance,
            lo,
            labels,
            maps,
        };
        c.check()?;
        Ok(c)
    }

    pub fn check(&self) -> Result<()> {
        if self.maps.len() != self.labels.len() {
            return Err(Error::Dimension(
                "complex: one differential per degree is required".into(),
            ));
        }
        let n = self.labels.len();
        for i in 0..n {
            let dim_i = self.labels[i].len();
            if self.maps[i].cols() != dim_i {
                return Err(Error::Dimension(format!(
                    "complex: map at degree {} has {} cols, space has dim {}",
                    self.lo + i as i32,
                    self.maps[i].cols(),
                    dim_i
                )));
            }
            let target = match self.variance {
                Variance::Cochain => {
                    if i + 1 < n {
                        Some(i + 1)
                    } else {
                        None
                    }
                }
                Variance::Chain => i.checked_sub(1),
            };
            let expected_rows = target.map_or(0, |t| self.labels[t].len());
            if self.maps[i].rows() != expected_rows {
                return Err(Error::Dimension(format!(
                    "complex: map at degree {} has {} rows, expected {}",
                    self.lo + i as i32,
                    self.maps[i].rows(),
                    expected_rows
                )));
            }
        }
        for i in 0..n {
            let next = match self.variance {
                Variance::Cochain => i + 1 < n,
                Variance::Chain => i > 0,
            };
            if next {
                let j = match self.variance {
                    Variance::Cochain => i + 1,
                    Variance::Chain => i - 1,
                };
                if !self.maps[j].mul(&self.maps[i]).is_zero_matrix() {
                    return Err(Error::Precondition(format!(
                        "complex: consecutive differentials at degree {} do not compose to zero",
                        self.lo + i as i32
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.labels.len() as i32 - 1
    }

    fn idx(&self, degree: i32) -> Option<usize> {
        if degree < self.lo || degree > self.hi() {
            None
        } else {
            Some((degree - self.lo) as usize)
        }
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.idx(degree).map_or(0, |i| self.labels[i].len())
    }

    pub fn labels(&self, degree: i32) -> &[String] {
        static EMPTY: Vec<String> = Vec::new();
        self.idx(degree).map_or(&EMPTY, |i| &self.labels[i])
    }

    /// The differential leaving `degree`; a zero-shaped matrix outside range.
    pub fn map_at(&self, degree: i32) -> RatMatrix {
        match self.idx(degree) {
            Some(i) => self.maps[i].clone(),
            None => {
                let target = match self.variance {
                    Variance::Cochain => degree + 1,
                    Variance::Chain => degree - 1,
                };
                RatMatrix::zero(self.dim(target), 0)
            }
        }
    }

    /// The differential arriving at `degree`.
    pub fn map_into(&self, degree: i32) -> RatMatrix {
        let source = match self.variance {
            Variance::Cochain => degree - 1,
            Variance::Chain => degree + 1,
        };
        match self.idx(source) {
            Some(i) => self.maps[i].clone(),
            None => RatMatrix::zero(self.dim(degree), 0),
        }
    }

    /// (Co)homology at `degree` as quotient data `ker / im` with explicit
    /// representatives in the degree-`degree` coordinate space.
    pub fn homology(&self, degree: i32) -> QuotientBasis {
        let dim = self.dim(degree);
        let out = self.map_at(degree);
        let kernel = RatMatrix::from_columns(dim, out.kernel_basis());
        let image_src = self.map_into(degree);
        QuotientBasis::new(&kernel, &image_src)
            .expect("image of a complex differential lies in the kernel")
    }

    pub fn betti(&self, degree: i32) -> usize {
        self.homology(degree).dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_complex() {
        // 0 -> Q --id--> Q -> 0 as a cochain complex in degrees 0, 1
        let c = ChainComplexRat::new(
            Variance::Cochain,
            0,
            vec![vec!["a".into()], vec!["b".into()]],
            vec![RatMatrix::identity(1), RatMatrix::zero(0, 1)],
        )
        .unwrap();
        assert_eq!(c.betti(0), 0);
        assert_eq!(c.betti(1), 0);
        assert_eq!(c.betti(5), 0);
    }

    #[test]
    fn composition_checked() {
        let bad = ChainComplexRat::new(
            Variance::Cochain,
            0,
            vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]],
            vec![
                RatMatrix::identity(1),
                RatMatrix::identity(1),
                RatMatrix::zero(0, 1),
            ],
        );
        assert!(bad.is_err());
    }
}
