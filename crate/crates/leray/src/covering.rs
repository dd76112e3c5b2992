//! Indexed coverings of a complex by subcomplexes, their nerves and supports,
//! and covering morphisms with the induced maps between nerves.
//!
//! A covering must be fine: every simplex of the base lies in some element.
//! This is the simplicial counterpart of the smallness hypothesis under which
//! restriction to small cochains changes nothing, and it is what makes the
//! morphism `tau` induce isomorphisms; coverings failing it are rejected when
//! they are built.

use std::collections::BTreeSet;

use crate::matrix::RatMatrix;
use crate::simplicial::{MapVariance, SimplicialComplex, SimplicialMap};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Covering {
    base: SimplicialComplex,
    index_names: Vec<String>,
    /// Simplex sets of the elements; each is closed under faces.
    elements: Vec<BTreeSet<Vec<usize>>>,
}

impl Covering {
    /// Builds a covering, closing each element under faces and checking
    /// fineness.
    pub fn new(
        base: SimplicialComplex,
        index_names: Vec<String>,
        element_generators: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if index_names.len() != element_generators.len() {
            return Err(Error::Dimension(
                "covering: one element per index is required".into(),
            ));
        }
        let mut elements = Vec::new();
        let vertex_count = base.vertex_names().len();
        for gens in &element_generators {
            for g in gens {
                if let Some(&bad) = g.iter().find(|&&v| v >= vertex_count) {
                    return Err(Error::UnknownVertex(format!("index {bad}")));
                }
            }
            let sub = base.subcomplex_from(&gens.iter().cloned().collect());
            for s in sub.simplex_set() {
                if !base.contains(s) {
                    return Err(Error::NotASimplex(format!(
                        "element simplex {} is not in the base",
                        base.simplex_name(s)
                    )));
                }
            }
            elements.push(sub.simplex_set().clone());
        }
        let covering = Covering {
            base,
            index_names,
            elements,
        };
        covering.check_fine()?;
        Ok(covering)
    }

    fn check_fine(&self) -> Result<()> {
        for s in self.base.simplex_set() {
            if !self.elements.iter().any(|e| e.contains(s)) {
                return Err(Error::NotFine(self.base.simplex_name(s)));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn index_names(&self) -> &[String] {
        &self.index_names
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &BTreeSet<Vec<usize>> {
        &self.elements[i]
    }

    pub fn element_complex(&self, i: usize) -> SimplicialComplex {
        self.base.subcomplex_from(&self.elements[i])
    }

    /// The single-element covering of a complex by itself.
    pub fn whole(base: SimplicialComplex) -> Covering {
        let all = base.simplex_set().clone();
        Covering {
            index_names: vec!["U".to_string()],
            elements: vec![all],
            base,
        }
    }

    /// Smallest element index containing the given simplex; fineness
    /// guarantees one exists.
    pub fn smallest_element_containing(&self, simplex: &[usize]) -> usize {
        self.elements
            .iter()
            .position(|e| e.contains(simplex))
            .expect("covering is fine")
    }

    /// The nerve: finite nonempty index sets whose elements intersect.
    pub fn nerve(&self) -> Nerve {
        let n = self.elements.len();
        let mut supports: Vec<(Vec<usize>, BTreeSet<Vec<usize>>)> = Vec::new();
        supports.push((Vec::new(), self.base.simplex_set().clone()));
        // grow simplices one index at a time; supports shrink monotonically
        let mut frontier: Vec<(Vec<usize>, BTreeSet<Vec<usize>>)> = Vec::new();
        for i in 0..n {
            if !self.elements[i].is_empty() {
                frontier.push((vec![i], self.elements[i].clone()));
            }
        }
        let mut nerve_simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
        while let Some((sigma, support)) = frontier.pop() {
            nerve_simplices.insert(sigma.clone());
            supports.push((sigma.clone(), support.clone()));
            let last = *sigma.last().unwrap();
            for j in (last + 1)..n {
                let inter: BTreeSet<Vec<usize>> = support
                    .intersection(&self.elements[j])
                    .cloned()
                    .collect();
                if !inter.is_empty() {
                    let mut bigger = sigma.clone();
                    bigger.push(j);
                    frontier.push((bigger, inter));
                }
            }
        }
        supports.sort_by(|a, b| a.0.cmp(&b.0));
        supports.dedup_by(|a, b| a.0 == b.0);
        let complex = SimplicialComplex::closure_indexed(
            self.index_names.clone(),
            &nerve_simplices.iter().cloned().collect::<Vec<_>>(),
        );
        Nerve {
            base: self.base.clone(),
            complex,
            supports: supports.into_iter().collect(),
        }
    }
}

/// The nerve of a covering together with the support of each of its
/// simplices. The empty simplex is never stored in the complex; its support
/// is the whole base.
#[derive(Clone, Debug)]
pub struct Nerve {
    base: SimplicialComplex,
    complex: SimplicialComplex,
    supports: std::collections::BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>>,
}

impl Nerve {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn dim(&self) -> i32 {
        self.complex.dim()
    }

    /// Simplex set of the support `|sigma|`; `sigma = []` yields the base.
    pub fn support_set(&self, sigma: &[usize]) -> Result<&BTreeSet<Vec<usize>>> {
        self.supports
            .get(sigma)
            .ok_or_else(|| Error::NotASimplex(format!("{sigma:?}")))
    }

    /// The support as a complex sharing the base's vertex order.
    pub fn support(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        Ok(self.base.subcomplex_from(self.support_set(sigma)?))
    }

    /// Nerve simplices of dimension `p`, lexicographically ordered.
    pub fn simplices_of_dim(&self, p: i32) -> Vec<Vec<usize>> {
        self.complex.simplices_of_dim(p)
    }
}

/// A morphism of coverings: a simplicial map of the bases carrying each
/// source element into some target element.
#[derive(Clone, Debug)]
pub struct CoveringMorphism {
    pub map: SimplicialMap,
    pub source: Covering,
    pub target: Covering,
}

impl CoveringMorphism {
    pub fn new(map: SimplicialMap, source: Covering, target: Covering) -> Result<Self> {
        let m = CoveringMorphism {
            map,
            source,
            target,
        };
        for j in 0..m.source.len() {
            if m.admissible_targets(j).is_empty() {
                return Err(Error::InvalidMap(format!(
                    "image of element `{}` is contained in no target element",
                    m.source.index_names()[j]
                )));
            }
        }
        Ok(m)
    }

    /// Indices of target elements containing the image of source element `j`.
    pub fn admissible_targets(&self, j: usize) -> Vec<usize> {
        let image: BTreeSet<Vec<usize>> = self
            .source
            .element(j)
            .iter()
            .map(|s| {
                let mut img: Vec<usize> = s.iter().map(|&v| self.map.vertex_map[v]).collect();
                img.sort_unstable();
                img.dedup();
                img
            })
            .collect();
        (0..self.target.len())
            .filter(|&k| image.iter().all(|s| self.target.element(k).contains(s)))
            .collect()
    }

    /// The induced simplicial map of nerves for a deterministic choice of
    /// element assignment: each source element goes to the smallest target
    /// index containing its image.
    pub fn nerve_map(&self) -> Result<SimplicialMap> {
        let phi: Vec<usize> = (0..self.source.len())
            .map(|j| self.admissible_targets(j)[0])
            .collect();
        self.nerve_map_with(&phi)
    }

    /// The nerve map for an explicit assignment; fails when the assignment is
    /// not admissible. Any two admissible assignments induce the same maps on
    /// cohomology.
    pub fn nerve_map_with(&self, phi: &[usize]) -> Result<SimplicialMap> {
        if phi.len() != self.source.len() {
            return Err(Error::InvalidMap("assignment covers every element".into()));
        }
        for (j, &k) in phi.iter().enumerate() {
            if !self.admissible_targets(j).contains(&k) {
                return Err(Error::InvalidMap(format!(
                    "element `{}` does not map into `{}`",
                    self.source.index_names()[j],
                    self.target.index_names()[k]
                )));
            }
        }
        SimplicialMap::new(
            self.source.nerve().complex().clone(),
            self.target.nerve().complex().clone(),
            phi.to_vec(),
        )
    }

    /// Induced map on nerve cohomology, independent of the admissible choice.
    pub fn nerve_cohomology_map(&self, p: i32) -> Result<RatMatrix> {
        Ok(self.nerve_map()?.induced_map(p, MapVariance::Cohomology))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn nerve_of_arc_covering() {
        let (c3, a3) = fixtures::circle3_with_arcs();
        assert_eq!(c3.simplex_count(), 6);
        let nerve = a3.nerve();
        // boundary of the 2-simplex: 3 vertices, 3 edges, no triangle
        assert_eq!(nerve.complex().simplices_of_dim(0).len(), 3);
        assert_eq!(nerve.complex().simplices_of_dim(1).len(), 3);
        assert_eq!(nerve.complex().simplices_of_dim(2).len(), 0);
        // |{u0, u1}| is the single vertex 1
        let s = nerve.support_set(&[0, 1]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&vec![1usize]));
        // |{u0}| is the arc with 2 vertices and 1 edge
        assert_eq!(nerve.support_set(&[0]).unwrap().len(), 3);
        // |empty| is the base
        assert_eq!(nerve.support_set(&[]).unwrap().len(), 6);
        // |{u0, u2}| is the single vertex 0
        let s = nerve.support_set(&[0, 2]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&vec![0usize]));
    }

    #[test]
    fn single_element_covering() {
        let c3 = fixtures::circle3();
        let u = Covering::whole(c3);
        let nerve = u.nerve();
        assert_eq!(nerve.complex().simplex_count(), 1);
        assert_eq!(nerve.dim(), 0);
    }

    #[test]
    fn non_fine_covering_rejected() {
        let tri = fixtures::full_triangle();
        // three closed edges miss the triangle itself
        let r = Covering::new(
            tri,
            vec!["E0".into(), "E1".into(), "E2".into()],
            vec![vec![vec![0, 1]], vec![vec![0, 2]], vec![vec![1, 2]]],
        );
        match r {
            Err(Error::NotFine(name)) => assert_eq!(name, "a,b,c"),
            other => panic!("expected a fineness error, got {other:?}"),
        }
    }

    #[test]
    fn support_monotone() {
        let (_, a3) = fixtures::circle3_with_arcs();
        let nerve = a3.nerve();
        for sigma in nerve.complex().simplex_set() {
            for tau in nerve.complex().simplex_set() {
                if tau.iter().all(|v| sigma.contains(v)) {
                    let big = nerve.support_set(tau).unwrap();
                    let small = nerve.support_set(sigma).unwrap();
                    assert!(small.is_subset(big));
                }
            }
        }
    }

    #[test]
    fn nerve_map_examples() {
        let (c3, a3) = fixtures::circle3_with_arcs();
        // identity morphism induces the identity on the nerve
        let id = CoveringMorphism::new(
            SimplicialMap::identity(&c3),
            a3.clone(),
            a3.clone(),
        )
        .unwrap();
        let nm = id.nerve_map().unwrap();
        assert_eq!(nm.vertex_map, vec![0, 1, 2]);

        // morphism into the single-element covering is constant
        let whole = Covering::whole(c3.clone());
        let to_whole =
            CoveringMorphism::new(SimplicialMap::identity(&c3), a3.clone(), whole).unwrap();
        assert_eq!(to_whole.nerve_map().unwrap().vertex_map, vec![0, 0, 0]);

        // rotating the circle by one vertex rotates the nerve: the image of
        // U0 = {0,1,01} is {1,2,12} = U1, and so on around
        let rot = SimplicialMap::new(c3.clone(), c3.clone(), vec![1, 2, 0]).unwrap();
        let m = CoveringMorphism::new(rot, a3.clone(), a3.clone()).unwrap();
        assert_eq!(m.nerve_map().unwrap().vertex_map, vec![1, 2, 0]);
    }
}
