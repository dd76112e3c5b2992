//! Seminorms on the (co)homology of a finite complex, computed by exact
//! linear programming: the l1 seminorm of a homology class is the least
//! l1-norm of a representing cycle, the linf seminorm of a cohomology class
//! the least sup-norm of a representing cocycle, and the evaluation pairing
//! relates the two through LP duality. Everything here is over the
//! simplicial (co)chain complex of the given triangulation.



use crate::lp::{solve, verify_certificate, LpOutcome, LpProblem, Relation, VarBound};
use crate::matrix::RatMatrix;
use crate::rat::{abs, one, zero, Rational};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

/// An exactly solved seminorm: the value, an optimizer achieving it, and the
/// dual vector certifying optimality (primal and dual objectives are equal
/// rationals by construction).
#[derive(Clone, Debug)]
pub struct SeminormResult {
    pub value: Rational,
    pub optimizer: Vec<Rational>,
    pub dual: Vec<Rational>,
}

fn class_representative(
    basis: &crate::matrix::QuotientBasis,
    coords: &[Rational],
) -> Result<Vec<Rational>> {
    if coords.len() != basis.dim() {
        return Err(Error::Precondition(format!(
            "class has {} coordinates, the group has rank {}",
            coords.len(),
            basis.dim()
        )));
    }
    Ok(basis.representative(coords))
}

/// `sum_j |v_j|` of a chain or cochain.
pub fn l1_norm(v: &[Rational]) -> Rational {
    v.iter().map(abs).sum()
}

/// `max_j |v_j|`, zero for the empty vector.
pub fn linf_norm(v: &[Rational]) -> Rational {
    v.iter().map(abs).max().unwrap_or_else(zero)
}

/// Minimizes `‖z + boundary(b)‖_1` over all `(p+1)`-chains `b`, where `z`
/// represents the class `h` in the stored homology basis.
pub fn l1_seminorm(x: &SimplicialComplex, p: i32, h: &[Rational]) -> Result<SeminormResult> {
    let basis = x.homology_basis(p);
    let z = class_representative(&basis, h)?;
    l1_seminorm_cycle(x, p, &z)
}

/// The same minimization for an explicit representing cycle; the answer only
/// depends on its homology class.
pub fn l1_seminorm_cycle(
    x: &SimplicialComplex,
    p: i32,
    z: &[Rational],
) -> Result<SeminormResult> {
    let boundary = x.boundary_matrix(p + 1);
    let z = z.to_vec();
    let n_p = z.len();
    let n_b = boundary.cols();
    // variables: b (free), then t (nonnegative slack per p-simplex)
    let mut objective = vec![zero(); n_b];
    objective.extend(std::iter::repeat_n(one(), n_p));
    let mut bounds = vec![VarBound::Free; n_b];
    bounds.extend(std::iter::repeat_n(VarBound::NonNegative, n_p));
    let mut lp = LpProblem::new(objective, bounds);
    for j in 0..n_p {
        // (z + Db)_j <= t_j and -(z + Db)_j <= t_j
        let mut row_pos = vec![zero(); n_b + n_p];
        let mut row_neg = vec![zero(); n_b + n_p];
        for k in 0..n_b {
            let a = boundary.get(j, k);
            row_pos[k] = a.clone();
            row_neg[k] = -a;
        }
        row_pos[n_b + j] = -one();
        row_neg[n_b + j] = -one();
        lp.add_row(row_pos, Relation::Le, -z[j].clone());
        lp.add_row(row_neg, Relation::Le, z[j].clone());
    }
    let out = solve(&lp);
    verify_certificate(&lp, &out).map_err(Error::Precondition)?;
    let LpOutcome::Optimal {
        value,
        primal,
        dual,
    } = out
    else {
        return Err(Error::Precondition(
            "the seminorm program is feasible and bounded by construction".into(),
        ));
    };
    let b = &primal[..n_b];
    let mut optimizer = z.clone();
    let db = boundary.mul_vec(b);
    for (o, d) in optimizer.iter_mut().zip(&db) {
        *o += d;
    }
    debug_assert_eq!(l1_norm(&optimizer), value);
    Ok(SeminormResult {
        value,
        optimizer,
        dual,
    })
}

/// Minimizes the sup-norm of `alpha + coboundary(c)` over all `(p-1)`-cochains
/// `c`, where `alpha` represents the class `a` in the stored cohomology basis.
pub fn linf_seminorm(x: &SimplicialComplex, p: i32, a: &[Rational]) -> Result<SeminormResult> {
    let basis = x.cohomology_basis(p);
    let alpha = class_representative(&basis, a)?;
    linf_seminorm_cocycle(x, p, &alpha)
}

/// The same minimization for an explicit representing cocycle.
pub fn linf_seminorm_cocycle(
    x: &SimplicialComplex,
    p: i32,
    alpha: &[Rational],
) -> Result<SeminormResult> {
    let coboundary = if p >= 1 {
        x.coboundary_matrix(p - 1)
    } else {
        RatMatrix::zero(alpha.len(), 0)
    };
    let alpha = alpha.to_vec();
    let n_p = alpha.len();
    let n_c = coboundary.cols();
    // variables: c (free), then the single bound t
    let mut objective = vec![zero(); n_c];
    objective.push(one());
    let mut bounds = vec![VarBound::Free; n_c];
    bounds.push(VarBound::NonNegative);
    let mut lp = LpProblem::new(objective, bounds);
    for j in 0..n_p {
        let mut row_pos = vec![zero(); n_c + 1];
        let mut row_neg = vec![zero(); n_c + 1];
        for k in 0..n_c {
            let v = coboundary.get(j, k);
            row_pos[k] = v.clone();
            row_neg[k] = -v;
        }
        row_pos[n_c] = -one();
        row_neg[n_c] = -one();
        lp.add_row(row_pos, Relation::Le, -alpha[j].clone());
        lp.add_row(row_neg, Relation::Le, alpha[j].clone());
    }
    let out = solve(&lp);
    verify_certificate(&lp, &out).map_err(Error::Precondition)?;
    let LpOutcome::Optimal {
        value,
        primal,
        dual,
    } = out
    else {
        return Err(Error::Precondition(
            "the seminorm program is feasible and bounded by construction".into(),
        ));
    };
    let c = &primal[..n_c];
    let mut optimizer = alpha.clone();
    let dc = coboundary.mul_vec(c);
    for (o, d) in optimizer.iter_mut().zip(&dc) {
        *o += d;
    }
    debug_assert_eq!(linf_norm(&optimizer), value);
    Ok(SeminormResult {
        value,
        optimizer,
        dual,
    })
}

/// The evaluation pairing of a homology class against a cohomology class of
/// the same degree; independent of the chosen representatives.
pub fn pairing(x: &SimplicialComplex, p: i32, h: &[Rational], a: &[Rational]) -> Result<Rational> {
    let z = class_representative(&x.homology_basis(p), h)?;
    let alpha = class_representative(&x.cohomology_basis(p), a)?;
    Ok(z.iter().zip(&alpha).map(|(c, v)| c * v).sum())
}

/// One line of the duality report: for a basis class `h` of `H_p`, the l1
/// seminorm must equal the best pairing against cohomology classes with
/// sup-norm at most one.
#[derive(Clone, Debug)]
pub struct DualityRow {
    pub class_index: usize,
    pub l1: Rational,
    pub max_pairing: Rational,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub degree: i32,
    pub rows: Vec<DualityRow>,
    pub all_equal: bool,
}

/// Runs the LP-duality check in degree `p`: for every basis class of `H_p`,
/// `‖h‖_1 = max { <h, a> : ‖a‖_inf <= 1 }`, the maximum taken over cocycles
/// with entries in `[-1, 1]`.
pub fn duality_check(x: &SimplicialComplex, p: i32) -> Result<DualityReport> {
    let basis = x.homology_basis(p);
    let mut rows = Vec::new();
    let mut all_equal = true;
    for idx in 0..basis.dim() {
        let mut coords = vec![zero(); basis.dim()];
        coords[idx] = one();
        let l1 = l1_seminorm(x, p, &coords)?;
        let z = basis.representative(&coords);
        let max_pairing = best_pairing(x, p, &z)?;
        let equal = l1.value == max_pairing;
        if !equal {
            all_equal = false;
        }
        rows.push(DualityRow {
            class_index: idx,
            l1: l1.value,
            max_pairing,
            equal,
        });
    }
    Ok(DualityReport {
        degree: p,
        rows,
        all_equal,
    })
}

/// `max { <z, alpha> : alpha a p-cocycle, -1 <= alpha_j <= 1 }` as an exact
/// linear program.
pub fn best_pairing(x: &SimplicialComplex, p: i32, z: &[Rational]) -> Result<Rational> {
    let n_p = z.len();
    let coboundary = x.coboundary_matrix(p);
    // maximize z'alpha = minimize -z'alpha over the cocycle polytope
    let objective: Vec<Rational> = z.iter().map(|v| -v.clone()).collect();
    let mut lp = LpProblem::new(objective, vec![VarBound::Free; n_p]);
    for r in 0..coboundary.rows() {
        let row: Vec<Rational> = (0..n_p).map(|j| coboundary.get(r, j)).collect();
        lp.add_row(row, Relation::Eq, zero());
    }
    for j in 0..n_p {
        let mut row = vec![zero(); n_p];
        row[j] = one();
        lp.add_row(row.clone(), Relation::Le, one());
        row[j] = -one();
        lp.add_row(row, Relation::Le, one());
    }
    let out = solve(&lp);
    verify_certificate(&lp, &out).map_err(Error::Precondition)?;
    match out {
        LpOutcome::Optimal { value, .. } => Ok(-value),
        _ => Err(Error::Precondition(
            "the pairing program is feasible and bounded".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::{rat, rat_int};

    #[test]
    fn zero_class_has_zero_norm() {
        let c3 = fixtures::circle3();
        let r = l1_seminorm(&c3, 1, &[rat_int(0)]).unwrap();
        assert_eq!(r.value, rat_int(0));
        let r = linf_seminorm(&c3, 1, &[rat_int(0)]).unwrap();
        assert_eq!(r.value, rat_int(0));
    }

    #[test]
    fn circle_fundamental_class() {
        let c3 = fixtures::circle3();
        let r = l1_seminorm(&c3, 1, &[rat_int(1)]).unwrap();
        assert_eq!(r.value, rat_int(3));
        assert_eq!(l1_norm(&r.optimizer), rat_int(3));
        // homogeneity
        let r2 = l1_seminorm(&c3, 1, &[rat_int(2)]).unwrap();
        assert_eq!(r2.value, rat_int(6));
    }

    #[test]
    fn circle_cocycle_sup_norm() {
        let c3 = fixtures::circle3();
        // cohomology basis of C3 in degree 1 is one class; its best
        // representative spreads the winding sum around the three edges
        let r = linf_seminorm(&c3, 1, &[rat_int(1)]).unwrap();
        // the stored representative has pairing s with the fundamental cycle,
        // so the seminorm is |s| / 3
        let basis = c3.cohomology_basis(1);
        let alpha = basis.representative(&[rat_int(1)]);
        let cycle = c3.homology_basis(1).representative(&[rat_int(1)]);
        let s: Rational = alpha.iter().zip(&cycle).map(|(a, b)| a * b).sum();
        assert_eq!(r.value * rat_int(3), abs(&s));
    }

    #[test]
    fn triangle_degree_one_is_trivial() {
        let tri = fixtures::full_triangle();
        assert_eq!(tri.cohomology_basis(1).dim(), 0);
        let r = linf_seminorm(&tri, 1, &[]).unwrap();
        assert_eq!(r.value, rat_int(0));
    }

    #[test]
    fn pairing_values() {
        let c3 = fixtures::circle3();
        let p = pairing(&c3, 1, &[rat_int(1)], &[rat_int(1)]).unwrap();
        // both maps send basis class to basis class; the pairing of the
        // fundamental cycle with the stored cocycle generator is +-1
        assert_eq!(abs(&p), rat_int(1));
        assert_eq!(pairing(&c3, 1, &[rat_int(0)], &[rat_int(1)]).unwrap(), rat_int(0));
        assert_eq!(pairing(&c3, 1, &[rat_int(1)], &[rat_int(0)]).unwrap(), rat_int(0));
    }

    #[test]
    fn duality_on_the_circle() {
        let c3 = fixtures::circle3();
        let rep = duality_check(&c3, 1).unwrap();
        assert!(rep.all_equal);
        assert_eq!(rep.rows[0].l1, rat_int(3));
        assert_eq!(rep.rows[0].max_pairing, rat_int(3));
        // the witnessing class has sup-norm 1/3 after normalization
        let linf = linf_seminorm(&c3, 1, &[rat_int(1)]).unwrap();
        let product = rep.rows[0].l1.clone() * linf.value.clone()
            / abs(&pairing(&c3, 1, &[rat_int(1)], &[rat_int(1)]).unwrap());
        assert_eq!(product, rat_int(1));
        assert_eq!(linf.value, rat(1, 3));
    }

    #[test]
    fn duality_vacuous_when_trivial() {
        let tri = fixtures::full_triangle();
        let rep = duality_check(&tri, 1).unwrap();
        assert!(rep.all_equal);
        assert!(rep.rows.is_empty());
    }

    #[test]
    fn norms_add_across_components() {
        // two disjoint circles: the sum class costs the sum of the parts
        let names: Vec<String> = ["0", "1", "2", "3", "4", "5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let x = crate::simplicial::SimplicialComplex::closure_indexed(
            names,
            &[
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ],
        );
        let basis = x.homology_basis(1);
        assert_eq!(basis.dim(), 2);
        let sum = l1_seminorm(&x, 1, &[rat_int(1), rat_int(1)]).unwrap();
        let first = l1_seminorm(&x, 1, &[rat_int(1), rat_int(0)]).unwrap();
        let second = l1_seminorm(&x, 1, &[rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(sum.value, first.value + second.value);
        let rep = duality_check(&x, 1).unwrap();
        assert!(rep.all_equal);
    }

    #[test]
    fn invalid_class_rejected() {
        let c3 = fixtures::circle3();
        assert!(l1_seminorm(&c3, 1, &[rat_int(1), rat_int(2)]).is_err());
    }
}
