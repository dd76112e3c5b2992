//! An exact rational linear-programming solver: two-phase primal simplex on
//! a dense tableau with Bland's anti-cycling rule. There is no tolerance
//! parameter anywhere; feasibility, optimality and the primal/dual optimal
//! values are exact statements about rationals, and every optimal answer
//! ships both certificates.

use num_traits::Zero;

use crate::rat::{one, zero, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarBound {
    Free,
    NonNegative,
}

/// `minimize c'x subject to A x (<=|=|>=) b`, with per-variable bounds.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub rows: Vec<(Vec<Rational>, Relation, Rational)>,
    pub bounds: Vec<VarBound>,
}

impl LpProblem {
    pub fn new(objective: Vec<Rational>, bounds: Vec<VarBound>) -> Self {
        assert_eq!(objective.len(), bounds.len());
        LpProblem {
            objective,
            rows: Vec::new(),
            bounds,
        }
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.objective.len());
        self.rows.push((coeffs, rel, rhs));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        /// values of the problem's own variables
        primal: Vec<Rational>,
        /// one multiplier per constraint row
        dual: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// m constraint rows then the cost row; each row has `cols + 1` entries,
    /// the last being the right-hand side
    rows: Vec<Vec<Rational>>,
    cols: usize,
    basis: Vec<usize>,
    /// columns barred from entering (artificials in phase 2)
    barred: Vec<bool>,
    /// rows dropped as redundant after phase 1
    dropped: Vec<bool>,
}

impl Tableau {
    fn m(&self) -> usize {
        self.rows.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.rows[r][c].clone();
        debug_assert!(!pivot.is_zero());
        let inv = pivot.recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// One phase of the simplex loop with Bland's rule; returns false on
    /// unboundedness.
    fn run(&mut self) -> bool {
        loop {
            let cost_row = self.m();
            // entering: smallest column index with a negative reduced cost
            let entering = (0..self.cols).find(|&j| {
                !self.barred[j] && self.rows[cost_row][j] < zero()
            });
            let Some(j) = entering else {
                return true;
            };
            // leaving: minimal ratio, ties by smallest basis variable
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.m() {
                if self.dropped[i] {
                    continue;
                }
                let a = &self.rows[i][j];
                if *a <= zero() {
                    continue;
                }
                let ratio = &self.rows[i][self.cols] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, j);
        }
    }
}

/// Solves the problem exactly. Free variables are split into differences of
/// nonnegative parts internally; the reported primal solution is in the
/// problem's own variables and the dual carries one multiplier per row, with
/// signs matching the row relations (`<=` gives nonpositive, `>=`
/// nonnegative, `=` free multipliers).
pub fn solve(p: &LpProblem) -> LpOutcome {
    let m = p.rows.len();
    // layout: for each variable one or two columns, then slack/artificial
    let mut col_of_var: Vec<(usize, Option<usize>)> = Vec::new();
    let mut cols = 0usize;
    for b in &p.bounds {
        match b {
            VarBound::NonNegative => {
                col_of_var.push((cols, None));
                cols += 1;
            }
            VarBound::Free => {
                col_of_var.push((cols, Some(cols + 1)));
                cols += 2;
            }
        }
    }
    let structural = cols;
    // row normalization: make rhs nonnegative, remember the flip
    let mut flips = vec![false; m];
    let mut rels = Vec::new();
    for (i, (_, rel, rhs)) in p.rows.iter().enumerate() {
        let mut rel = *rel;
        if *rhs < zero() {
            flips[i] = true;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rels.push(rel);
    }
    let slack_count = rels
        .iter()
        .filter(|r| matches!(r, Relation::Le | Relation::Ge))
        .count();
    let art_count = rels
        .iter()
        .filter(|r| matches!(r, Relation::Eq | Relation::Ge))
        .count();
    let total = structural + slack_count + art_count;
    let mut rows: Vec<Vec<Rational>> = vec![vec![zero(); total + 1]; m + 1];
    let mut basis = vec![0usize; m];
    let mut is_artificial = vec![false; total];
    let mut anchor_col = vec![0usize; m];
    let mut next_slack = structural;
    let mut next_art = structural + slack_count;
    for (i, (coeffs, _, rhs)) in p.rows.iter().enumerate() {
        let sign = if flips[i] { -one() } else { one() };
        for (v, c) in coeffs.iter().enumerate() {
            let val = c * &sign;
            if val.is_zero() {
                continue;
            }
            let (plus, minus) = col_of_var[v];
            rows[i][plus] = val.clone();
            if let Some(mc) = minus {
                rows[i][mc] = -val;
            }
        }
        rows[i][total] = rhs.clone() * &sign;
        match rels[i] {
            Relation::Le => {
                rows[i][next_slack] = one();
                basis[i] = next_slack;
                anchor_col[i] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                rows[i][next_slack] = -one();
                next_slack += 1;
                rows[i][next_art] = one();
                is_artificial[next_art] = true;
                basis[i] = next_art;
                anchor_col[i] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                rows[i][next_art] = one();
                is_artificial[next_art] = true;
                basis[i] = next_art;
                anchor_col[i] = next_art;
                next_art += 1;
            }
        }
    }
    let mut t = Tableau {
        rows,
        cols: total,
        basis,
        barred: vec![false; total],
        dropped: vec![false; m],
    };
    // phase 1: minimize the sum of artificials
    if art_count > 0 {
        for j in 0..total {
            if is_artificial[j] {
                t.rows[m][j] = one();
            }
        }
        // reduce against the artificial basis rows
        for i in 0..m {
            if is_artificial[t.basis[i]] {
                let row = t.rows[i].clone();
                for (x, r) in t.rows[m].iter_mut().zip(&row) {
                    *x -= r;
                }
            }
        }
        if !t.run() {
            unreachable!("phase 1 objective is bounded below by zero");
        }
        if !t.rows[m][total].is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive artificials out of the basis or drop redundant rows
        for i in 0..m {
            if !is_artificial[t.basis[i]] {
                continue;
            }
            let col = (0..structural + slack_count).find(|&j| !t.rows[i][j].is_zero());
            match col {
                Some(j) => t.pivot(i, j),
                None => t.dropped[i] = true,
            }
        }
        for j in 0..total {
            if is_artificial[j] {
                t.barred[j] = true;
            }
        }
    }
    // phase 2: the real objective
    for x in t.rows[m].iter_mut() {
        *x = zero();
    }
    for (v, c) in p.objective.iter().enumerate() {
        let (plus, minus) = col_of_var[v];
        t.rows[m][plus] = c.clone();
        if let Some(mc) = minus {
            t.rows[m][mc] = -c.clone();
        }
    }
    for i in 0..m {
        if t.dropped[i] {
            continue;
        }
        let c_b = t.rows[m][t.basis[i]].clone();
        if c_b.is_zero() {
            continue;
        }
        let row = t.rows[i].clone();
        for (x, r) in t.rows[m].iter_mut().zip(&row) {
            *x -= &c_b * r;
        }
    }
    if !t.run() {
        return LpOutcome::Unbounded;
    }
    // read off the primal solution
    let mut values = vec![zero(); total];
    for i in 0..m {
        if !t.dropped[i] {
            values[t.basis[i]] = t.rows[i][total].clone();
        }
    }
    let mut primal = Vec::new();
    for (v, _) in p.objective.iter().enumerate() {
        let (plus, minus) = col_of_var[v];
        let x = match minus {
            Some(mc) => values[plus].clone() - &values[mc],
            None => values[plus].clone(),
        };
        primal.push(x);
    }
    let value: Rational = p
        .objective
        .iter()
        .zip(&primal)
        .map(|(c, x)| c * x)
        .sum();
    // duals from the reduced costs of each row's anchor column
    let mut dual = Vec::new();
    for i in 0..m {
        if t.dropped[i] {
            dual.push(zero());
            continue;
        }
        let r = t.rows[m][anchor_col[i]].clone();
        let mut y = -r;
        if flips[i] {
            y = -y;
        }
        dual.push(y);
    }
    LpOutcome::Optimal {
        value,
        primal,
        dual,
    }
}

/// Exact verification of an optimal answer: primal feasibility, dual
/// feasibility (with the sign conventions of the row relations and bounds)
/// and equality of the two objective values.
pub fn verify_certificate(p: &LpProblem, out: &LpOutcome) -> Result<(), String> {
    let LpOutcome::Optimal {
        value,
        primal,
        dual,
    } = out
    else {
        return Ok(());
    };
    for (x, b) in primal.iter().zip(&p.bounds) {
        if *b == VarBound::NonNegative && *x < zero() {
            return Err("primal violates a nonnegativity bound".into());
        }
    }
    for (i, (coeffs, rel, rhs)) in p.rows.iter().enumerate() {
        let lhs: Rational = coeffs.iter().zip(primal).map(|(a, x)| a * x).sum();
        let ok = match rel {
            Relation::Le => lhs <= *rhs,
            Relation::Ge => lhs >= *rhs,
            Relation::Eq => lhs == *rhs,
        };
        if !ok {
            return Err(format!("primal violates row {i}"));
        }
        let y = &dual[i];
        let sign_ok = match rel {
            Relation::Le => *y <= zero(),
            Relation::Ge => *y >= zero(),
            Relation::Eq => true,
        };
        if !sign_ok {
            return Err(format!("dual multiplier {i} has the wrong sign"));
        }
    }
    // A'y <= c on nonnegative variables, = c on free ones
    for v in 0..p.objective.len() {
        let aty: Rational = p
            .rows
            .iter()
            .zip(dual)
            .map(|((coeffs, _, _), y)| &coeffs[v] * y)
            .sum();
        match p.bounds[v] {
            VarBound::NonNegative => {
                if aty > p.objective[v] {
                    return Err(format!("dual infeasible at variable {v}"));
                }
            }
            VarBound::Free => {
                if aty != p.objective[v] {
                    return Err(format!("dual not tight at free variable {v}"));
                }
            }
        }
    }
    let dual_value: Rational = p.rows.iter().zip(dual).map(|((_, _, b), y)| b * y).sum();
    if dual_value != *value {
        return Err(format!(
            "strong duality fails: primal {value}, dual {dual_value}"
        ));
    }
    let primal_value: Rational = p.objective.iter().zip(primal).map(|(c, x)| c * x).sum();
    if primal_value != *value {
        return Err("reported value disagrees with the primal".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn solved(p: &LpProblem) -> (Rational, Vec<Rational>, Vec<Rational>) {
        let out = solve(p);
        verify_certificate(p, &out).expect("certificates check out");
        match out {
            LpOutcome::Optimal {
                value,
                primal,
                dual,
            } => (value, primal, dual),
            other => panic!("expected an optimum, got {other:?}"),
        }
    }

    #[test]
    fn minimize_with_lower_bound() {
        // min x s.t. x >= 1
        let mut p = LpProblem::new(vec![rat_int(1)], vec![VarBound::NonNegative]);
        p.add_row(vec![rat_int(1)], Relation::Ge, rat_int(1));
        let (v, x, _) = solved(&p);
        assert_eq!(v, rat_int(1));
        assert_eq!(x, vec![rat_int(1)]);
    }

    #[test]
    fn simplex_on_a_segment() {
        // min x + y s.t. x + y = 1, x, y >= 0
        let mut p = LpProblem::new(
            vec![rat_int(1), rat_int(1)],
            vec![VarBound::NonNegative, VarBound::NonNegative],
        );
        p.add_row(vec![rat_int(1), rat_int(1)], Relation::Eq, rat_int(1));
        let (v, _, dual) = solved(&p);
        assert_eq!(v, rat_int(1));
        assert_eq!(dual, vec![rat_int(1)]);
    }

    #[test]
    fn free_variable_absolute_value() {
        // min t s.t. -t <= 1 - b <= t over free b and t: optimum 0 at b = 1
        let mut p = LpProblem::new(
            vec![rat_int(0), rat_int(1)],
            vec![VarBound::Free, VarBound::NonNegative],
        );
        // 1 - b <= t  ->  -b - t <= -1
        p.add_row(vec![rat_int(-1), rat_int(-1)], Relation::Le, rat_int(-1));
        // -(1 - b) <= t  ->  b - t <= 1
        p.add_row(vec![rat_int(1), rat_int(-1)], Relation::Le, rat_int(1));
        let (v, x, _) = solved(&p);
        assert_eq!(v, rat_int(0));
        assert_eq!(x[0], rat_int(1));
    }

    #[test]
    fn infeasible_detected() {
        let mut p = LpProblem::new(vec![rat_int(1)], vec![VarBound::NonNegative]);
        p.add_row(vec![rat_int(1)], Relation::Le, rat_int(-1));
        assert_eq!(solve(&p), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut p = LpProblem::new(vec![rat_int(-1)], vec![VarBound::NonNegative]);
        p.add_row(vec![rat_int(0)], Relation::Le, rat_int(1));
        assert_eq!(solve(&p), LpOutcome::Unbounded);
    }

    #[test]
    fn fractional_optimum() {
        // min max-norm relaxation style: min t s.t. 3t >= 1
        let mut p = LpProblem::new(vec![rat_int(1)], vec![VarBound::NonNegative]);
        p.add_row(vec![rat_int(3)], Relation::Ge, rat_int(1));
        let (v, _, dual) = solved(&p);
        assert_eq!(v, rat(1, 3));
        assert_eq!(dual, vec![rat(1, 3)]);
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 1 stated twice
        let mut p = LpProblem::new(
            vec![rat_int(2), rat_int(3)],
            vec![VarBound::NonNegative, VarBound::NonNegative],
        );
        p.add_row(vec![rat_int(1), rat_int(1)], Relation::Eq, rat_int(1));
        p.add_row(vec![rat_int(1), rat_int(1)], Relation::Eq, rat_int(1));
        let (v, _, _) = solved(&p);
        assert_eq!(v, rat_int(2));
    }

    #[test]
    fn degenerate_cycling_guard() {
        // classic degenerate instance; Bland's rule must terminate
        let mut p = LpProblem::new(
            vec![rat(-3, 4), rat_int(150), rat(-1, 50), rat_int(6)],
            vec![VarBound::NonNegative; 4],
        );
        p.add_row(
            vec![rat(1, 4), rat_int(-60), rat(-1, 25), rat_int(9)],
            Relation::Le,
            rat_int(0),
        );
        p.add_row(
            vec![rat(1, 2), rat_int(-90), rat(-1, 50), rat_int(3)],
            Relation::Le,
            rat_int(0),
        );
        p.add_row(
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
            Relation::Le,
            rat_int(1),
        );
        let (v, _, _) = solved(&p);
        assert_eq!(v, rat(-1, 20));
    }
}
