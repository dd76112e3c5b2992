//! Indexed families of subsets of a finite ground set and the refinement
//! combinatorics between coverings: combinatorial refinement, stars, and
//! barycentric / star refinements.

use std::collections::BTreeSet;

use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct SetFamily {
    ground: Vec<String>,
    index: Vec<String>,
    members: Vec<BTreeSet<usize>>,
}

impl SetFamily {
    pub fn new(ground: Vec<String>, index: Vec<String>, members: Vec<BTreeSet<usize>>) -> Result<Self> {
        if index.len() != members.len() {
            return Err(Error::Dimension(
                "family: one member per index is required".into(),
            ));
        }
        for m in &members {
            if let Some(&bad) = m.iter().find(|&&z| z >= ground.len()) {
                return Err(Error::Precondition(format!(
                    "family member uses element {bad} outside the ground set"
                )));
            }
        }
        Ok(SetFamily {
            ground,
            index,
            members,
        })
    }

    /// Family over `0..n` with unnamed indices; handy in tests.
    pub fn over(n: usize, members: Vec<Vec<usize>>) -> Self {
        SetFamily::new(
            (0..n).map(|z| z.to_string()).collect(),
            (0..members.len()).map(|i| format!("F{i}")).collect(),
            members.into_iter().map(|m| m.into_iter().collect()).collect(),
        )
        .expect("members within ground set")
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, i: usize) -> &BTreeSet<usize> {
        &self.members[i]
    }

    pub fn index_names(&self) -> &[String] {
        &self.index
    }

    /// True when the members cover the ground set.
    pub fn is_covering(&self) -> bool {
        let mut seen = vec![false; self.ground.len()];
        for m in &self.members {
            for &z in m {
                seen[z] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Nerve simplices: nonempty index subsets with a common element.
    pub fn nerve_simplices(&self) -> BTreeSet<Vec<usize>> {
        let n = self.members.len();
        let mut out = BTreeSet::new();
        let mut frontier: Vec<(Vec<usize>, BTreeSet<usize>)> = (0..n)
            .filter(|&i| !self.members[i].is_empty())
            .map(|i| (vec![i], self.members[i].clone()))
            .collect();
        while let Some((sigma, inter)) = frontier.pop() {
            out.insert(sigma.clone());
            let last = *sigma.last().unwrap();
            for j in (last + 1)..n {
                let smaller: BTreeSet<usize> =
                    inter.intersection(&self.members[j]).cloned().collect();
                if !smaller.is_empty() {
                    let mut bigger = sigma.clone();
                    bigger.push(j);
                    frontier.push((bigger, smaller));
                }
            }
        }
        out
    }
}

/// `F` combinatorially refines `G` when they share the index set and
/// `F_i ⊆ G_i` for every `i`.
pub fn is_combinatorial_refinement(f: &SetFamily, g: &SetFamily) -> Result<bool> {
    if f.len() != g.len() || f.ground_size() != g.ground_size() {
        return Err(Error::Dimension(
            "combinatorial refinement needs matching index and ground sets".into(),
        ));
    }
    Ok((0..f.len()).all(|i| f.member(i).is_subset(g.member(i))))
}

/// `St(A, U)`: the union of the members of `U` meeting `A`.
pub fn star(a: &BTreeSet<usize>, u: &SetFamily) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for m in &u.members {
        if !m.is_disjoint(a) {
            out.extend(m.iter().cloned());
        }
    }
    out
}

/// `A` barycentrically refines `U` when every point-star of `A` fits in a
/// member of `U`. Both families must cover the same ground set.
pub fn is_barycentric_refinement(a: &SetFamily, u: &SetFamily) -> Result<bool> {
    check_coverings(a, u)?;
    Ok((0..a.ground_size()).all(|z| {
        let st = star(&BTreeSet::from([z]), a);
        (0..u.len()).any(|i| st.is_subset(u.member(i)))
    }))
}

/// `A` star-refines `U` when every member-star of `A` fits in a member of `U`.
pub fn is_star_refinement(a: &SetFamily, u: &SetFamily) -> Result<bool> {
    check_coverings(a, u)?;
    Ok((0..a.len()).all(|s| {
        let st = star(a.member(s), a);
        (0..u.len()).any(|i| st.is_subset(u.member(i)))
    }))
}

fn check_coverings(a: &SetFamily, u: &SetFamily) -> Result<()> {
    if a.ground_size() != u.ground_size() {
        return Err(Error::Dimension(
            "refinement needs families over the same ground set".into(),
        ));
    }
    if !a.is_covering() || !u.is_covering() {
        return Err(Error::Precondition(
            "refinement relations are defined for coverings".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorial_refinement_cases() {
        let g = SetFamily::over(2, vec![vec![0], vec![1]]);
        assert!(is_combinatorial_refinement(&g, &g).unwrap());
        let empty = SetFamily::over(2, vec![vec![], vec![]]);
        assert!(is_combinatorial_refinement(&empty, &g).unwrap());
        let f = SetFamily::over(2, vec![vec![0, 1], vec![1]]);
        assert!(!is_combinatorial_refinement(&f, &g).unwrap());
        let mismatched = SetFamily::over(2, vec![vec![0]]);
        assert!(is_combinatorial_refinement(&mismatched, &g).is_err());
    }

    #[test]
    fn star_cases() {
        let u = SetFamily::over(3, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(star(&BTreeSet::from([0]), &u), BTreeSet::from([0, 1]));
        assert_eq!(star(&BTreeSet::from([1]), &u), BTreeSet::from([0, 1, 2]));
        assert_eq!(star(&BTreeSet::new(), &u), BTreeSet::new());
    }

    #[test]
    fn barycentric_cases() {
        let partition = SetFamily::over(4, vec![vec![0, 1], vec![2, 3]]);
        assert!(is_barycentric_refinement(&partition, &partition).unwrap());
        let whole = SetFamily::over(4, vec![vec![0, 1, 2, 3]]);
        assert!(!is_barycentric_refinement(&whole, &partition).unwrap());
        let singletons = SetFamily::over(2, vec![vec![0], vec![1]]);
        let blocks = SetFamily::over(2, vec![vec![0], vec![1]]);
        assert!(is_barycentric_refinement(&singletons, &blocks).unwrap());
    }

    #[test]
    fn star_refinement_cases() {
        let whole = SetFamily::over(3, vec![vec![0, 1, 2]]);
        assert!(is_star_refinement(&whole, &whole).unwrap());
        let partition = SetFamily::over(4, vec![vec![0, 1], vec![2, 3]]);
        assert!(is_star_refinement(&partition, &partition).unwrap());
        // overlapping pair: St({0,1}) = {0,1,2} fits in no member
        let a = SetFamily::over(3, vec![vec![0, 1], vec![1, 2]]);
        assert!(!is_star_refinement(&a, &a).unwrap());
    }

    #[test]
    fn nerve_containment_under_refinement() {
        let g = SetFamily::over(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 0]]);
        let f = SetFamily::over(4, vec![vec![0, 1], vec![2, 3], vec![3, 0]]);
        assert!(is_combinatorial_refinement(&f, &g).unwrap());
        let nf = f.nerve_simplices();
        let ng = g.nerve_simplices();
        assert!(nf.is_subset(&ng));
    }
}
