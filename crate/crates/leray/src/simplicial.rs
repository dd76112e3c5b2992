//! Finite abstract simplicial complexes with totally ordered vertices,
//! their chain and cochain complexes over the rationals, barycentric
//! subdivision together with its chain-level comparison map, and simplicial
//! maps with induced maps on (co)homology.
//!
//! The vertex order is fixed when a complex is built and every orientation
//! convention derives from it: simplices are stored as strictly increasing
//! index tuples and the boundary of `[v0..vp]` is the alternating sum of the
//! facets obtained by dropping one vertex.

use std::collections::BTreeSet;

use crate::chain::{ChainComplexRat, Variance};
use crate::matrix::{QuotientBasis, RatMatrix};
use crate::rat::one;
use crate::{Error, Result};

/// Sorts a vertex tuple, returning the parity sign of the sorting
/// permutation, or `None` when a vertex repeats (degenerate simplex).
pub fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1i64;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_names: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The smallest simplicial complex containing the generator tuples.
    /// Vertex names are declared up front; their listed order is the total
    /// order used for all sign conventions.
    pub fn closure(vertex_names: Vec<String>, generators: &[Vec<String>]) -> Result<Self> {
        let index = |name: &str| -> Result<usize> {
            vertex_names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut gens_idx = Vec::new();
        for g in generators {
            let mut tuple = Vec::new();
            for name in g {
                tuple.push(index(name)?);
            }
            gens_idx.push(tuple);
        }
        Ok(Self::closure_indexed(vertex_names, &gens_idx))
    }

    /// Closure from index tuples; used internally and by the fixtures.
    pub fn closure_indexed(vertex_names: Vec<String>, generators: &[Vec<usize>]) -> Self {
        let mut simplices = BTreeSet::new();
        for g in generators {
            let mut sorted: Vec<usize> = g.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.is_empty() {
                continue;
            }
            insert_with_faces(&mut simplices, &sorted);
        }
        SimplicialComplex {
            vertex_names,
            simplices,
        }
    }

    /// A complex with the same vertex order but only the given simplices
    /// (closure is taken).
    pub fn subcomplex_from(&self, simplices: &BTreeSet<Vec<usize>>) -> SimplicialComplex {
        let gens: Vec<Vec<usize>> = simplices.iter().cloned().collect();
        Self::closure_indexed(self.vertex_names.clone(), &gens)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_names
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn simplex_set(&self) -> &BTreeSet<Vec<usize>> {
        &self.simplices
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Dimension; -1 for the empty complex.
    pub fn dim(&self) -> i32 {
        self.simplices
            .iter()
            .map(|s| s.len() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All `p`-simplices in lexicographic order of their index tuples.
    pub fn simplices_of_dim(&self, p: i32) -> Vec<Vec<usize>> {
        if p < 0 {
            return Vec::new();
        }
        self.simplices
            .iter()
            .filter(|s| s.len() as i32 == p + 1)
            .cloned()
            .collect()
    }

    pub fn simplex_name(&self, s: &[usize]) -> String {
        let names: Vec<&str> = s.iter().map(|&i| self.vertex_names[i].as_str()).collect();
        names.join(",")
    }

    fn basis_labels(&self, p: i32) -> Vec<String> {
        self.simplices_of_dim(p)
            .iter()
            .map(|s| self.simplex_name(s))
            .collect()
    }

    /// Matrix of the boundary `C_p -> C_{p-1}` in the sorted-tuple bases.
    /// For `p = 0` this is the 0-row matrix; the augmentation is handled by
    /// the augmented complex constructors.
    pub fn boundary_matrix(&self, p: i32) -> RatMatrix {
        let domain = self.simplices_of_dim(p);
        let codomain = self.simplices_of_dim(p - 1);
        let mut m = RatMatrix::zero(codomain.len(), domain.len());
        if p <= 0 {
            return m;
        }
        let pos = |t: &Vec<usize>| codomain.binary_search(t).expect("face must be present");
        for (j, s) in domain.iter().enumerate() {
            let mut sign = one();
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                m.add_to(pos(&face), j, &sign);
                sign = -sign;
            }
        }
        m
    }

    /// Coboundary `C^p -> C^{p+1}`, the transpose of the boundary one degree up.
    pub fn coboundary_matrix(&self, p: i32) -> RatMatrix {
        self.boundary_matrix(p + 1).transpose()
    }

    /// The simplicial chain complex; with `augmented` a degree -1 line is
    /// added and the degree-0 differential is the all-ones augmentation row.
    pub fn chain_complex(&self, augmented: bool) -> ChainComplexRat {
        let top = self.dim().max(0);
        let lo: i32 = if augmented { -1 } else { 0 };
        let mut labels = Vec::new();
        let mut maps = Vec::new();
        for degree in lo..=top {
            if degree == -1 {
                labels.push(vec!["R".to_string()]);
                maps.push(RatMatrix::zero(0, 1));
                continue;
            }
            labels.push(self.basis_labels(degree));
            if degree == 0 {
                if augmented {
                    let n = self.simplices_of_dim(0).len();
                    let mut aug = RatMatrix::zero(1, n);
                    for j in 0..n {
                        aug.set(0, j, one());
                    }
                    maps.push(aug);
                } else {
                    maps.push(RatMatrix::zero(0, self.simplices_of_dim(0).len()));
                }
            } else {
                maps.push(self.boundary_matrix(degree));
            }
        }
        ChainComplexRat::new(Variance::Chain, lo, labels, maps)
            .expect("boundary maps compose to zero")
    }

    /// The simplicial cochain complex; with `augmented` the degree -1 line
    /// maps into constants via the all-ones column.
    pub fn cochain_complex(&self, augmented: bool) -> ChainComplexRat {
        let top = self.dim().max(0);
        let lo: i32 = if augmented { -1 } else { 0 };
        let mut labels = Vec::new();
        let mut maps = Vec::new();
        for degree in lo..=top {
            if degree == -1 {
                labels.push(vec!["R".to_string()]);
                let n = self.simplices_of_dim(0).len();
                let mut aug = RatMatrix::zero(n, 1);
                for i in 0..n {
                    aug.set(i, 0, one());
                }
                maps.push(aug);
                continue;
            }
            labels.push(self.basis_labels(degree));
            if degree == top {
                maps.push(RatMatrix::zero(0, self.simplices_of_dim(degree).len()));
            } else {
                maps.push(self.coboundary_matrix(degree));
            }
        }
        ChainComplexRat::new(Variance::Cochain, lo, labels, maps)
            .expect("coboundary maps compose to zero")
    }

    /// `H_p(X; Q)` as quotient data with explicit representative cycles.
    pub fn homology_basis(&self, p: i32) -> QuotientBasis {
        self.chain_complex(false).homology(p)
    }

    /// `H^p(X; Q)` as quotient data with explicit representative cocycles.
    pub fn cohomology_basis(&self, p: i32) -> QuotientBasis {
        self.cochain_complex(false).homology(p)
    }

    /// Barycentric subdivision together with the chain-level comparison map
    /// `sd_#`: one matrix `C_p(X) -> C_p(sd X)` per degree. The subdivision
    /// has one vertex per simplex of `X`, ordered by dimension then
    /// lexicographically, and its simplices are the flags of `X`.
    pub fn barycentric_subdivision(&self) -> (SimplicialComplex, Vec<RatMatrix>) {
        // vertices of sd X: simplices of X sorted by (dim, lex)
        let mut sd_vertices: Vec<Vec<usize>> = self.simplices.iter().cloned().collect();
        sd_vertices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let sd_names: Vec<String> = sd_vertices
            .iter()
            .map(|s| format!("{{{}}}", self.simplex_name(s)))
            .collect();
        let vertex_of = |s: &Vec<usize>| -> usize {
            sd_vertices
                .iter()
                .position(|t| t == s)
                .expect("flag entry is a simplex")
        };

        // flags: chains tau_0 < tau_1 < ... under strict inclusion
        let mut flags: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<Vec<usize>>> =
            self.simplices.iter().map(|s| vec![s.clone()]).collect();
        while let Some(chain) = frontier.pop() {
            let tuple: Vec<usize> = chain.iter().map(vertex_of).collect();
            let (sorted, _) = sort_with_sign(tuple).expect("flags have distinct entries");
            if !flags.insert(sorted) {
                continue;
            }
            let smallest = &chain[0];
            for t in &self.simplices {
                if t.len() < smallest.len() && t.iter().all(|v| smallest.contains(v)) {
                    let mut longer = vec![t.clone()];
                    longer.extend(chain.iter().cloned());
                    frontier.push(longer);
                }
            }
        }
        let gens: Vec<Vec<usize>> = flags.into_iter().collect();
        let sd = SimplicialComplex::closure_indexed(sd_names, &gens);

        // chain map: a p-simplex goes to the signed sum of its p! maximal flags
        let top = self.dim().max(0);
        let mut chain_maps = Vec::new();
        for p in 0..=top {
            let domain = self.simplices_of_dim(p);
            let codomain = sd.simplices_of_dim(p);
            let mut m = RatMatrix::zero(codomain.len(), domain.len());
            for (j, s) in domain.iter().enumerate() {
                for (perm, sign) in permutations_with_sign(s.len()) {
                    let mut prefix: Vec<usize> = Vec::new();
                    let mut flag = Vec::new();
                    for &k in &perm {
                        prefix.push(s[k]);
                        let (sorted, _) = sort_with_sign(prefix.clone()).unwrap();
                        flag.push(vertex_of(&sorted));
                    }
                    let (sorted_flag, reorder_sign) =
                        sort_with_sign(flag).expect("distinct flag entries");
                    let i = codomain
                        .binary_search(&sorted_flag)
                        .expect("flag simplex present in sd X");
                    let coeff = if sign * reorder_sign > 0 { one() } else { -one() };
                    m.add_to(i, j, &coeff);
                }
            }
            chain_maps.push(m);
        }
        (sd, chain_maps)
    }

    /// The closed star of a vertex: all simplices contained in a simplex
    /// through the vertex.
    pub fn closed_star(&self, vertex: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            if s.contains(&vertex) {
                insert_with_faces(&mut out, s);
            }
        }
        out
    }
}

fn insert_with_faces(set: &mut BTreeSet<Vec<usize>>, simplex: &[usize]) {
    let n = simplex.len();
    for mask in 1u32..(1 << n) {
        let face: Vec<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| simplex[i])
            .collect();
        set.insert(face);
    }
}

/// All permutations of `0..n` with their parity signs, in lexicographic order.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn go(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<(Vec<usize>, i64)>,
    ) {
        if current.len() == n {
            let (_, sign) = sort_with_sign(current.clone()).unwrap();
            out.push((current.clone(), sign));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                current.push(k);
                go(n, current, used, out);
                current.pop();
                used[k] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// A simplicial map given by its vertex assignment.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
    pub vertex_map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapVariance {
    Homology,
    Cohomology,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_names().len() {
            return Err(Error::InvalidMap(
                "vertex map must cover every source vertex".into(),
            ));
        }
        if let Some(&bad) = vertex_map
            .iter()
            .find(|&&v| v >= target.vertex_names().len())
        {
            return Err(Error::InvalidMap(format!(
                "vertex image {bad} is out of range"
            )));
        }
        let map = SimplicialMap {
            source,
            target,
            vertex_map,
        };
        for s in map.source.simplex_set() {
            let mut image: Vec<usize> = s.iter().map(|&v| map.vertex_map[v]).collect();
            image.sort_unstable();
            image.dedup();
            if !map.target.contains(&image) {
                return Err(Error::InvalidMap(format!(
                    "image of simplex {} is not a simplex of the target",
                    map.source.simplex_name(s)
                )));
            }
        }
        Ok(map)
    }

    /// Identity map of a complex.
    pub fn identity(x: &SimplicialComplex) -> Self {
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            vertex_map: (0..x.vertex_names().len()).collect(),
        }
    }

    pub fn compose(&self, after: &SimplicialMap) -> Result<SimplicialMap> {
        if after.source.simplex_set() != self.target.simplex_set() {
            return Err(Error::InvalidMap(
                "composition: inner target differs from outer source".into(),
            ));
        }
        SimplicialMap::new(
            self.source.clone(),
            after.target.clone(),
            self.vertex_map.iter().map(|&v| after.vertex_map[v]).collect(),
        )
    }

    /// Matrix of the induced chain map `C_p(source) -> C_p(target)`:
    /// degenerate images collapse to zero, otherwise the image simplex is
    /// sorted and the permutation sign recorded.
    pub fn chain_map(&self, p: i32) -> RatMatrix {
        let domain = self.source.simplices_of_dim(p);
        let codomain = self.target.simplices_of_dim(p);
        let mut m = RatMatrix::zero(codomain.len(), domain.len());
        for (j, s) in domain.iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&v| self.vertex_map[v]).collect();
            if let Some((sorted, sign)) = sort_with_sign(image) {
                let i = codomain
                    .binary_search(&sorted)
                    .expect("image simplex is in the target");
                let coeff = if sign > 0 { one() } else { -one() };
                m.add_to(i, j, &coeff);
            }
        }
        m
    }

    /// Matrix of `f_*` on homology or `f^*` on cohomology in the stored bases.
    pub fn induced_map(&self, p: i32, variance: MapVariance) -> RatMatrix {
        match variance {
            MapVariance::Homology => {
                let hs = self.source.homology_basis(p);
                let ht = self.target.homology_basis(p);
                let f = self.chain_map(p);
                induced_on_quotients(&f, &hs, &ht)
            }
            MapVariance::Cohomology => {
                let hs = self.source.cohomology_basis(p);
                let ht = self.target.cohomology_basis(p);
                let f = self.chain_map(p).transpose();
                induced_on_quotients(&f, &ht, &hs)
            }
        }
    }
}

/// Matrix of the map induced by `f` from the quotient with basis `from` to
/// the quotient with basis `to`: each representative is pushed through `f`
/// and re-expressed in the target basis.
pub fn induced_on_quotients(
    f: &RatMatrix,
    from: &QuotientBasis,
    to: &QuotientBasis,
) -> RatMatrix {
    let mut m = RatMatrix::zero(to.dim(), from.dim());
    for (j, rep) in from.representatives().iter().enumerate() {
        let image = f.mul_vec(rep);
        let coords = to
            .coords(&image)
            .expect("chain maps send cycles to cycles");
        m.set_column(j, &coords);
    }
    m
}

/// Solves `unknown` from `known = target_iso * unknown` columnwise, i.e.
/// computes `target_iso^{-1} * known` when `target_iso` is invertible.
pub fn solve_through(target_iso: &RatMatrix, known: &RatMatrix) -> Result<RatMatrix> {
    let mut out = RatMatrix::zero(target_iso.cols(), known.cols());
    for j in 0..known.cols() {
        let col = known.column(j);
        let x = target_iso
            .solve_particular(&col)?
            .ok_or(Error::NotInSubspace)?;
        out.set_column(j, &x);
    }
    Ok(out)
}

/// True when the matrix is square and invertible.
pub fn is_invertible(m: &RatMatrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::vec_is_zero;
    use crate::rat::rat_int;

    #[test]
    fn closure_full_triangle() {
        let x = SimplicialComplex::closure(
            vec!["a".into(), "b".into(), "c".into()],
            &[vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        assert_eq!(x.simplices_of_dim(0).len(), 3);
        assert_eq!(x.simplices_of_dim(1).len(), 3);
        assert_eq!(x.simplices_of_dim(2).len(), 1);
    }

    #[test]
    fn closure_empty() {
        let x = SimplicialComplex::closure(vec![], &[]).unwrap();
        assert!(x.is_empty());
        assert_eq!(x.dim(), -1);
    }

    #[test]
    fn closure_unknown_vertex() {
        let r = SimplicialComplex::closure(vec!["a".into()], &[vec!["b".into()]]);
        assert!(matches!(r, Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn c3_boundary_matrix() {
        let x = fixtures::circle3();
        assert_eq!(x.simplices_of_dim(1).len(), 3);
        let d1 = x.boundary_matrix(1);
        assert_eq!(
            d1,
            RatMatrix::from_int_rows(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]])
        );
        // above top dimension: no columns
        assert_eq!(x.boundary_matrix(5).cols(), 0);
    }

    #[test]
    fn triangle_boundary_2() {
        let x = fixtures::full_triangle();
        let d2 = x.boundary_matrix(2);
        // faces of abc in sorted-face order ab, ac, bc receive +1, -1, +1
        assert_eq!(d2, RatMatrix::from_int_rows(&[&[1], &[-1], &[1]]));
    }

    #[test]
    fn homology_dimensions() {
        let c3 = fixtures::circle3();
        assert_eq!(c3.homology_basis(0).dim(), 1);
        assert_eq!(c3.homology_basis(1).dim(), 1);
        assert_eq!(c3.cohomology_basis(1).dim(), 1);
        assert_eq!(c3.cohomology_basis(2).dim(), 0);

        let tri = fixtures::full_triangle();
        assert_eq!(tri.homology_basis(1).dim(), 0);

        let pt = SimplicialComplex::closure(vec!["p".into()], &[vec!["p".into()]]).unwrap();
        assert_eq!(pt.cohomology_basis(0).dim(), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for x in [
            fixtures::circle3(),
            fixtures::full_triangle(),
            fixtures::sphere2(),
        ] {
            for p in 1..=x.dim() {
                let a = x.boundary_matrix(p);
                let b = x.boundary_matrix(p - 1);
                assert!(b.mul(&a).is_zero_matrix());
            }
        }
    }

    #[test]
    fn subdivision_of_edge() {
        let edge = SimplicialComplex::closure(
            vec!["0".into(), "1".into()],
            &[vec!["0".into(), "1".into()]],
        )
        .unwrap();
        let (sd, maps) = edge.barycentric_subdivision();
        assert_eq!(sd.simplices_of_dim(0).len(), 3);
        assert_eq!(sd.simplices_of_dim(1).len(), 2);
        // sd_# is a chain map: boundary of the image equals image of boundary
        let img = maps[1].column(0);
        let bnd = sd.boundary_matrix(1).mul_vec(&img);
        // boundary of the edge is v1 - v0; vertex {1} minus vertex {0} in sd
        let v0 = sd.vertex_index("{0}").unwrap();
        let v1 = sd.vertex_index("{1}").unwrap();
        let mut expect = vec![rat_int(0); 3];
        expect[v0] = rat_int(-1);
        expect[v1] = rat_int(1);
        assert_eq!(bnd, expect);
    }

    #[test]
    fn subdivision_point() {
        let pt = SimplicialComplex::closure(vec!["p".into()], &[vec!["p".into()]]).unwrap();
        let (sd, maps) = pt.barycentric_subdivision();
        assert_eq!(sd.simplex_count(), 1);
        assert_eq!(maps[0], RatMatrix::identity(1));
    }

    #[test]
    fn subdivision_is_chain_map_and_iso_on_circle() {
        let c3 = fixtures::circle3();
        let (sd, maps) = c3.barycentric_subdivision();
        assert_eq!(sd.simplices_of_dim(0).len(), 6);
        assert_eq!(sd.simplices_of_dim(1).len(), 6);
        for p in 1..=c3.dim() {
            let lhs = sd.boundary_matrix(p).mul(&maps[p as usize]);
            let rhs = maps[(p - 1) as usize].mul(&c3.boundary_matrix(p));
            assert_eq!(lhs, rhs);
        }
        // induced map on H_1 is invertible and sends the fundamental class to
        // the fundamental class
        let h_src = c3.homology_basis(1);
        let h_tgt = sd.homology_basis(1);
        let induced = induced_on_quotients(&maps[1], &h_src, &h_tgt);
        assert!(is_invertible(&induced));
    }

    #[test]
    fn iterated_subdivision() {
        let c3 = fixtures::circle3();
        let (sd1, _) = c3.barycentric_subdivision();
        let (sd2, maps) = sd1.barycentric_subdivision();
        assert_eq!(sd2.simplices_of_dim(0).len(), 12);
        assert_eq!(sd2.simplices_of_dim(1).len(), 12);
        for p in 1..=sd1.dim() {
            let lhs = sd2.boundary_matrix(p).mul(&maps[p as usize]);
            let rhs = maps[(p - 1) as usize].mul(&sd1.boundary_matrix(p));
            assert_eq!(lhs, rhs);
        }
        let induced = induced_on_quotients(&maps[1], &sd1.homology_basis(1), &sd2.homology_basis(1));
        assert!(is_invertible(&induced));
    }

    #[test]
    fn induced_map_examples() {
        let c3 = fixtures::circle3();
        // identity
        let id = SimplicialMap::identity(&c3);
        assert_eq!(
            id.induced_map(1, MapVariance::Homology),
            RatMatrix::identity(1)
        );
        // constant map to a point kills H_1
        let pt = SimplicialComplex::closure(vec!["p".into()], &[vec!["p".into()]]).unwrap();
        let konst = SimplicialMap::new(c3.clone(), pt, vec![0, 0, 0]).unwrap();
        let m = konst.induced_map(1, MapVariance::Homology);
        assert!(m.is_zero_matrix());
        // rotation by one vertex is the identity on H_1
        let rot = SimplicialMap::new(c3.clone(), c3.clone(), vec![1, 2, 0]).unwrap();
        assert_eq!(
            rot.induced_map(1, MapVariance::Homology),
            RatMatrix::identity(1)
        );
        assert_eq!(
            rot.induced_map(1, MapVariance::Cohomology),
            RatMatrix::identity(1)
        );
    }

    #[test]
    fn degenerate_images_collapse() {
        let edge = SimplicialComplex::closure(
            vec!["0".into(), "1".into()],
            &[vec!["0".into(), "1".into()]],
        )
        .unwrap();
        let pt = SimplicialComplex::closure(vec!["p".into()], &[vec!["p".into()]]).unwrap();
        let f = SimplicialMap::new(edge, pt, vec![0, 0]).unwrap();
        assert!(f.chain_map(1).is_zero_matrix());
        let col = f.chain_map(0);
        assert!(!col.is_zero_matrix());
        assert!(vec_is_zero(
            &crate::matrix::vec_sub(&col.column(0), &col.column(1))
        ));
    }

    #[test]
    fn invalid_map_rejected() {
        let c3 = fixtures::circle3();
        let tri = fixtures::full_triangle();
        // collapsing an edge of the bare circle is not simplicial into itself
        let r = SimplicialMap::new(c3.clone(), c3.clone(), vec![0, 0, 2]);
        assert!(r.is_ok(), "edge image {{0,2}} is still a simplex of C3");
        // but mapping the triangle onto C3 cannot be simplicial
        let r = SimplicialMap::new(tri, c3, vec![0, 1, 2]);
        assert!(r.is_err());
    }
}
