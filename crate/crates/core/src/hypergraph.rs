//! Hypergraphs on (optionally partitioned) vertex sets.
//!
//! Singleton edges are allowed: they show up as factors `Kₙ¹` of products.
//! Simplicity is a property checked by [`Hypergraph::validate_simple`],
//! not a construction invariant. The only hard invariants are that edges are
//! nonempty subsets of the ground set, and that the edge set has no repeats.

use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{minimal_transversals, Face, VertexUniverse};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    universe: Arc<VertexUniverse>,
    ground: Face,
    edges: Vec<Face>,
}

/// Findings of [`Hypergraph::validate_simple`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicityReport {
    /// Edges with fewer than two vertices.
    pub small_edges: Vec<Face>,
    /// Pairs `(e, f)` with `e ⊊ f`.
    pub containments: Vec<(Face, Face)>,
}

impl SimplicityReport {
    pub fn is_simple(&self) -> bool {
        self.small_edges.is_empty() && self.containments.is_empty()
    }

    /// Acceptable once singleton edges are allowed.
    pub fn is_relaxed_simple(&self) -> bool {
        self.containments.is_empty()
    }
}

/// Squarefree monomial generators of the edge ideal, as exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdealView {
    pub vertex_count: usize,
    pub generators: Vec<Face>,
}

impl EdgeIdealView {
    /// Exponent vector of generator `k` over the universe, as `0/1` entries.
    pub fn exponent_vector(&self, k: usize) -> Vec<u8> {
        let g = self.generators[k];
        (0..self.vertex_count).map(|v| g.contains(v) as u8).collect()
    }
}

impl Hypergraph {
    pub fn new(universe: VertexUniverse, edges: Vec<Face>) -> Result<Self> {
        let ground = universe.all();
        Self::new_on(Arc::new(universe), ground, edges)
    }

    pub fn new_on(universe: Arc<VertexUniverse>, ground: Face, mut edges: Vec<Face>) -> Result<Self> {
        universe.check(ground)?;
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::Input("edges must be nonempty".into()));
            }
            if !e.is_subset(ground) {
                return Err(Error::FaceOutOfUniverse { face: e.bits(), ground: ground.bits() });
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { universe, ground, edges })
    }

    pub fn universe(&self) -> &VertexUniverse {
        &self.universe
    }

    pub fn ground(&self) -> Face {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    /// Edges sorted by bit pattern.
    pub fn edges(&self) -> &[Face] {
        &self.edges
    }

    pub fn validate_simple(&self) -> SimplicityReport {
        let mut report = SimplicityReport::default();
        for &e in &self.edges {
            if e.len() < 2 {
                report.small_edges.push(e);
            }
            for &g in &self.edges {
                if e != g && e.is_subset(g) {
                    report.containments.push((e, g));
                }
            }
        }
        report
    }

    /// Common edge size, if any. An edgeless hypergraph is uniform for
    /// whatever size the caller declares.
    pub fn uniformity(&self, declared: Option<usize>) -> Option<usize> {
        let mut sizes = self.edges.iter().map(|e| e.len());
        match sizes.next() {
            None => declared,
            Some(d) => sizes.all(|s| s == d).then_some(d),
        }
    }

    pub fn induced(&self, subset: Face) -> Result<Hypergraph> {
        self.universe.check(subset)?;
        let ground = self.ground.intersection(subset);
        let edges = self.edges.iter().copied().filter(|e| e.is_subset(ground)).collect();
        Ok(Hypergraph { universe: self.universe.clone(), ground, edges })
    }

    /// `H·K` on the disjoint union of the two universes: every edge is `E ∪ F`
    /// with `E ∈ E(H)`, `F ∈ E(K)`.
    pub fn product(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let universe = self.universe.disjoint_union(&other.universe)?;
        let offset = self.universe.size();
        let ground = self.ground.union(other.ground.shifted(offset));
        let edges = self
            .edges
            .iter()
            .flat_map(|e| other.edges.iter().map(move |f| e.union(f.shifted(offset))))
            .collect();
        Hypergraph::new_on(Arc::new(universe), ground, edges)
    }

    /// Product of two hypergraphs on disjoint ground sets of one universe.
    pub fn product_within(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if *self.universe != *other.universe {
            return Err(Error::Input("product_within needs a common universe".into()));
        }
        let overlap = self.ground.intersection(other.ground);
        if !overlap.is_empty() {
            return Err(Error::OverlappingUniverses(overlap.bits()));
        }
        let edges = self
            .edges
            .iter()
            .flat_map(|e| other.edges.iter().map(move |f| e.union(*f)))
            .collect();
        Hypergraph::new_on(self.universe.clone(), self.ground.union(other.ground), edges)
    }

    /// `Δ(H)`: subsets of the ground set containing no edge. Its facets are
    /// the complements of the minimal vertex covers.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let facets: Vec<Face> = minimal_transversals(&self.edges)
            .into_iter()
            .map(|t| self.ground.difference(t))
            .collect();
        SimplicialComplex::from_parts_unchecked(
            self.universe.clone(),
            self.ground,
            crate::face::antichain(facets),
        )
    }

    pub fn edge_ideal(&self) -> EdgeIdealView {
        EdgeIdealView { vertex_count: self.universe.size(), generators: self.edges.clone() }
    }

    /// Number of families of `i` pairwise disjoint edges whose union induces
    /// exactly those `i` edges.
    pub fn count_disjoint_edge_families(&self, i: usize) -> Result<u64> {
        if !self.edges.is_empty() && self.uniformity(None).is_none() {
            return Err(Error::NonUniform);
        }
        let mut count = 0;
        let mut chosen = Vec::with_capacity(i);
        self.disjoint_families(0, i, Face::EMPTY, &mut chosen, &mut count);
        Ok(count)
    }

    fn disjoint_families(&self, start: usize, left: usize, used: Face, chosen: &mut Vec<Face>, count: &mut u64) {
        if left == 0 {
            let induced = self.edges.iter().filter(|e| e.is_subset(used)).count();
            if induced == chosen.len() {
                *count += 1;
            }
            return;
        }
        for k in start..self.edges.len() {
            let e = self.edges[k];
            if e.is_disjoint(used) {
                chosen.push(e);
                self.disjoint_families(k + 1, left - 1, used.union(e), chosen, count);
                chosen.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(VertexUniverse::new(n).unwrap(), edges.iter().map(|e| f(e)).collect()).unwrap()
    }

    #[test]
    fn simplicity() {
        assert!(hg(3, &[&[0, 1], &[1, 2]]).validate_simple().is_simple());
        let r = hg(3, &[&[0, 1], &[0, 1, 2]]).validate_simple();
        assert!(!r.is_simple());
        assert_eq!(r.containments, vec![(f(&[0, 1]), f(&[0, 1, 2]))]);
        let r = hg(3, &[&[0], &[1, 2]]).validate_simple();
        assert!(!r.is_simple());
        assert!(r.is_relaxed_simple());
    }

    #[test]
    fn uniformity() {
        let k53 = hg(5, &[]).universe().all().subsets_of_size(3);
        assert_eq!(Hypergraph::new(VertexUniverse::new(5).unwrap(), k53).unwrap().uniformity(None), Some(3));
        assert_eq!(hg(5, &[&[0, 1], &[2, 3, 4]]).uniformity(None), None);
        assert_eq!(hg(5, &[]).uniformity(None), None);
        assert_eq!(hg(5, &[]).uniformity(Some(3)), Some(3));
    }

    #[test]
    fn induced_subgraph() {
        let k4 = Hypergraph::new(VertexUniverse::new(4).unwrap(), Face::full(4).subsets_of_size(2)).unwrap();
        let k3 = k4.induced(f(&[0, 1, 2])).unwrap();
        assert_eq!(k3.edges(), Face::full(3).subsets_of_size(2).as_slice());
        assert_eq!(k3.ground(), f(&[0, 1, 2]));
        assert_eq!(k4.induced(k4.universe().all()).unwrap(), k4);
    }

    #[test]
    fn products() {
        let k21 = hg(2, &[&[0], &[1]]);
        let k22 = k21.product(&k21).unwrap();
        assert_eq!(k22.edges(), &[f(&[0, 2]), f(&[1, 2]), f(&[0, 3]), f(&[1, 3])]);
        assert_eq!(k22.universe().partition().unwrap().len(), 2);
        let e = hg(2, &[&[0, 1]]);
        assert_eq!(e.product(&e).unwrap().edges(), &[f(&[0, 1, 2, 3])]);
    }

    #[test]
    fn product_within_overlap() {
        let u = Arc::new(VertexUniverse::new(4).unwrap());
        let a = Hypergraph::new_on(u.clone(), f(&[0, 1]), vec![f(&[0])]).unwrap();
        let b = Hypergraph::new_on(u.clone(), f(&[1, 2]), vec![f(&[2])]).unwrap();
        assert!(matches!(a.product_within(&b), Err(Error::OverlappingUniverses(_))));
        let c = Hypergraph::new_on(u, f(&[2, 3]), vec![f(&[2]), f(&[3])]).unwrap();
        assert_eq!(a.product_within(&c).unwrap().edges(), &[f(&[0, 2]), f(&[0, 3])]);
    }

    #[test]
    fn independence_complexes() {
        let k41 = hg(4, &[&[0], &[1], &[2], &[3]]);
        assert!(k41.independence_complex().is_empty_complex());
        let none = hg(3, &[]);
        assert!(none.independence_complex().is_full_simplex());
        let k4 = Hypergraph::new(VertexUniverse::new(4).unwrap(), Face::full(4).subsets_of_size(2)).unwrap();
        let d = k4.independence_complex();
        assert_eq!(d.facets(), Face::full(4).subsets_of_size(1).as_slice());
        assert_eq!(d.minimal_nonfaces(), k4.edges());
    }

    #[test]
    fn edge_ideal_generators() {
        let k3 = Hypergraph::new(VertexUniverse::new(3).unwrap(), Face::full(3).subsets_of_size(2)).unwrap();
        let ideal = k3.edge_ideal();
        let vecs: Vec<Vec<u8>> = (0..3).map(|k| ideal.exponent_vector(k)).collect();
        assert_eq!(vecs, vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(hg(3, &[]).edge_ideal().generators.is_empty());
    }

    #[test]
    fn disjoint_families() {
        assert_eq!(hg(4, &[&[0, 1], &[2, 3]]).count_disjoint_edge_families(2).unwrap(), 1);
        assert_eq!(hg(3, &[&[0, 1], &[1, 2]]).count_disjoint_edge_families(2).unwrap(), 0);
        // 4-cycle: the two perfect matchings each induce all four edges
        let c4 = hg(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(c4.count_disjoint_edge_families(2).unwrap(), 0);
        assert_eq!(c4.count_disjoint_edge_families(1).unwrap(), 4);
        assert_eq!(c4.count_disjoint_edge_families(0).unwrap(), 1);
        assert_eq!(hg(4, &[&[0, 1], &[1, 2, 3]]).count_disjoint_edge_families(1), Err(Error::NonUniform));
    }
}
