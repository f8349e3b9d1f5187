//! Abstract simplicial complexes stored by their facets.
//!
//! Three cases are kept apart: the void complex (no faces at all), the
//! complex `{∅}` whose only face is the empty set, and everything else. The
//! void complex has an empty facet list; `{∅}` has the single facet `∅`.
//!
//! Every complex lives on a *ground set* inside its [`VertexUniverse`].
//! Restriction shrinks the ground set instead of re-indexing, so vertex
//! identities survive into multigraded bookkeeping.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::face::{antichain, minimal_transversals, Face, VertexUniverse};

/// Dimension of a complex; the void complex has dimension `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    NegInfinity,
    Finite(isize),
}

impl Dimension {
    pub fn finite(self) -> Option<isize> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::NegInfinity => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    universe: Arc<VertexUniverse>,
    ground: Face,
    facets: Vec<Face>,
    faces: Arc<OnceLock<Vec<Vec<Face>>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.ground == other.ground && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    fn build(universe: Arc<VertexUniverse>, ground: Face, facets: Vec<Face>) -> Self {
        SimplicialComplex { universe, ground, facets, faces: Arc::new(OnceLock::new()) }
    }

    /// The complex generated by `candidates` on the whole universe. Dominated
    /// and repeated faces are dropped; an empty list gives `{∅}`.
    pub fn from_facets(universe: VertexUniverse, candidates: Vec<Face>) -> Result<Self> {
        let ground = universe.all();
        Self::from_facets_on(Arc::new(universe), ground, candidates)
    }

    /// Like [`SimplicialComplex::from_facets`] but on a sub-ground set.
    pub fn from_facets_on(
        universe: Arc<VertexUniverse>,
        ground: Face,
        candidates: Vec<Face>,
    ) -> Result<Self> {
        universe.check(ground)?;
        for &f in &candidates {
            if !f.is_subset(ground) {
                return Err(Error::FaceOutOfUniverse { face: f.bits(), ground: ground.bits() });
            }
        }
        let facets = if candidates.is_empty() { vec![Face::EMPTY] } else { antichain(candidates) };
        Ok(Self::build(universe, ground, facets))
    }

    pub fn void(universe: VertexUniverse) -> Self {
        let ground = universe.all();
        Self::build(Arc::new(universe), ground, Vec::new())
    }

    /// `{∅}` on the whole universe.
    pub fn empty_complex(universe: VertexUniverse) -> Self {
        let ground = universe.all();
        Self::build(Arc::new(universe), ground, vec![Face::EMPTY])
    }

    /// Every subset of the universe is a face.
    pub fn simplex(universe: VertexUniverse) -> Self {
        let ground = universe.all();
        Self::build(Arc::new(universe), ground, vec![ground])
    }

    pub(crate) fn from_parts_unchecked(universe: Arc<VertexUniverse>, ground: Face, facets: Vec<Face>) -> Self {
        Self::build(universe, ground, facets)
    }

    pub fn universe(&self) -> &VertexUniverse {
        &self.universe
    }

    pub(crate) fn universe_arc(&self) -> &Arc<VertexUniverse> {
        &self.universe
    }

    /// Vertex set the complex lives on.
    pub fn ground(&self) -> Face {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.ground]
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn dimension(&self) -> Dimension {
        match self.facets.iter().map(|f| f.len()).max() {
            None => Dimension::NegInfinity,
            Some(k) => Dimension::Finite(k as isize - 1),
        }
    }

    /// Faces grouped by cardinality: entry `k` holds the faces with `k`
    /// vertices, sorted. Computed once per complex.
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        self.faces.get_or_init(|| {
            let top = self.facets.iter().map(|f| f.len()).max().map_or(0, |k| k + 1);
            (0..top)
                .map(|k| {
                    let mut all: Vec<Face> =
                        self.facets.iter().flat_map(|f| f.subsets_of_size(k)).collect();
                    all.sort_unstable();
                    all.dedup();
                    all
                })
                .collect()
        })
    }

    /// Faces of dimension `r` (`r = -1` gives `[∅]` unless void).
    pub fn faces_of_dim(&self, r: isize) -> &[Face] {
        if r < -1 {
            return &[];
        }
        self.faces_by_size().get((r + 1) as usize).map_or(&[], |v| v.as_slice())
    }

    /// `(f₋₁, f₀, …, f_{e-1})` with `e = dim + 1`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(self.faces_by_size().iter().map(|v| v.len() as u64).collect())
    }

    /// Faces of dimension at most `r`.
    pub fn skeleton(&self, r: isize) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        let k = (r + 1).max(0) as usize;
        let mut candidates = Vec::new();
        for &f in &self.facets {
            if f.len() <= k {
                candidates.push(f);
            } else {
                candidates.extend(f.subsets_of_size(k));
            }
        }
        Self::build(self.universe.clone(), self.ground, antichain(candidates))
    }

    /// Faces of `self` inside `subset`, living on the ground set `subset ∩ ground`.
    pub fn restriction(&self, subset: Face) -> Result<SimplicialComplex> {
        self.universe.check(subset)?;
        let ground = self.ground.intersection(subset);
        if self.is_void() {
            return Ok(Self::build(self.universe.clone(), ground, Vec::new()));
        }
        let cut = self.facets.iter().map(|f| f.intersection(subset)).collect();
        Ok(Self::build(self.universe.clone(), ground, antichain(cut)))
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        // a set is a nonface iff it meets the complement of every facet
        let complements: Vec<Face> = self.facets.iter().map(|f| self.ground.difference(*f)).collect();
        minimal_transversals(&complements)
    }

    /// `Δ* = {F ⊆ ground : ground \ F ∉ Δ}`. Its facets are the complements of
    /// the minimal nonfaces of `Δ`. The dual of the full simplex is void and
    /// the dual of the void complex is the full simplex.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets: Vec<Face> =
            self.minimal_nonfaces().into_iter().map(|n| self.ground.difference(n)).collect();
        Self::build(self.universe.clone(), self.ground, antichain(facets))
    }

    /// `Δ * Γ` on the disjoint union of the two universes; `Γ`'s vertices are
    /// renumbered after `Δ`'s.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let universe = self.universe.disjoint_union(&other.universe)?;
        let offset = self.universe.size();
        let ground = self.ground.union(other.ground.shifted(offset));
        let facets = self
            .facets
            .iter()
            .flat_map(|f| other.facets.iter().map(move |g| f.union(g.shifted(offset))))
            .collect();
        Ok(Self::build(Arc::new(universe), ground, antichain(facets)))
    }

    /// `Δ * Γ` for two complexes on disjoint ground sets of the same universe.
    pub fn join_within(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if *self.universe != *other.universe {
            return Err(Error::Input("join_within needs a common universe".into()));
        }
        let overlap = self.ground.intersection(other.ground);
        if !overlap.is_empty() {
            return Err(Error::OverlappingUniverses(overlap.bits()));
        }
        let facets = self
            .facets
            .iter()
            .flat_map(|f| other.facets.iter().map(move |g| f.union(*g)))
            .collect();
        Ok(Self::build(self.universe.clone(), self.ground.union(other.ground), antichain(facets)))
    }

    /// The same complex viewed on a larger ground set (extra vertices are
    /// nonfaces).
    pub fn on_ground(&self, ground: Face) -> Result<SimplicialComplex> {
        self.universe.check(ground)?;
        if !self.ground.is_subset(ground) {
            return Err(Error::Input("new ground set must contain the old one".into()));
        }
        Ok(Self::build(self.universe.clone(), ground, self.facets.clone()))
    }
}
