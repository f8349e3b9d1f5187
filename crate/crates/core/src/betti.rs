//! Betti numbers of Stanley-Reisner rings via Hochster's formula, plus the
//! ring statistics and Hilbert series derived from them.
//!
//! For `V ⊆ ground`, `β_{i,V} = dim H̃_{|V|-i-1}(Δ_V)`. The sweep visits all
//! `2^m` subsets of the `m`-vertex ground set. Restrictions that are cones
//! are acyclic and skipped without building any matrix.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexUniverse};
use crate::families::binomial;
use crate::field::FieldSpec;
use crate::homology::homology_by_size;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// Knobs for the subset sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest ground set the sweep accepts.
    pub limit: usize,
    /// Worker threads: `None` uses the global rayon pool, `Some(1)` runs on
    /// the calling thread.
    pub jobs: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { limit: DEFAULT_ENUMERATION_LIMIT, jobs: None }
    }
}

/// N-graded Betti numbers `β_{i,j}`. Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    vertex_count: usize,
    field: Option<FieldSpec>,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// A table holding only `β₀,₀ = 1`.
    pub fn new(vertex_count: usize, field: Option<FieldSpec>) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        BettiTable { vertex_count, field, entries }
    }

    /// Adds to `β_{i,j}`; zero increments are ignored.
    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Coefficient field, or `None` for field-independent closed forms.
    pub fn field(&self) -> Option<FieldSpec> {
        self.field
    }

    pub fn with_field(mut self, field: Option<FieldSpec>) -> Self {
        self.field = field;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; projective_dimension(self) + 1];
        for (i, _, b) in self.entries() {
            t[i] += b;
        }
        t
    }

    /// The `d` with `j = i + d - 1` for every entry with `i > 0`, if there
    /// is such an entry and a single `d` works.
    pub fn linear_degree(&self) -> Option<usize> {
        let mut degrees = self.entries().filter(|&(i, _, _)| i > 0).map(|(i, j, _)| j + 1 - i);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Entries equal up to the field annotation.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.vertex_count == other.vertex_count && self.entries == other.entries
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            beta: u64,
        }
        let pd = projective_dimension(self);
        let mut st = s.serialize_struct("BettiTable", 6)?;
        st.serialize_field("n", &self.vertex_count)?;
        st.serialize_field("field", &self.field.map(|f| f.to_string()))?;
        let entries: Vec<Entry> = self.entries().map(|(i, j, beta)| Entry { i, j, beta }).collect();
        st.serialize_field("entries", &entries)?;
        st.serialize_field("pd", &pd)?;
        st.serialize_field("depth", &self.vertex_count.checked_sub(pd))?;
        st.serialize_field("linear_for_d", &self.linear_degree())?;
        st.end()
    }
}

/// Multigraded Betti numbers `β_{i,V}` over squarefree degrees `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    universe: Arc<VertexUniverse>,
    ground: Face,
    field: FieldSpec,
    entries: BTreeMap<(usize, Face), u64>,
}

impl MultigradedBettiTable {
    pub fn get(&self, i: usize, degree: Face) -> u64 {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Face, u64)> + '_ {
        self.entries.iter().map(|(&(i, v), &b)| (i, v, b))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `β_{i,j} = Σ_{|V| = j} β_{i,V}`.
    pub fn to_graded(&self) -> BettiTable {
        let mut t = BettiTable::new(self.ground.len(), Some(self.field));
        t.entries.clear();
        for (i, v, b) in self.entries() {
            t.add(i, v.len(), b);
        }
        t
    }
}

impl Serialize for MultigradedBettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Entry<'a>(usize, Vec<&'a str>, u64);
        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("i", &self.0)?;
                m.serialize_entry("degree", &self.1)?;
                m.serialize_entry("beta", &self.2)?;
                m.end()
            }
        }
        let mut labeled: Vec<Entry> = self
            .entries()
            .map(|(i, v, b)| {
                let mut labels = self.universe.face_labels(v);
                labels.sort_unstable();
                Entry(i, labels, b)
            })
            .collect();
        labeled.sort_by(|a, b| (a.0, a.1.len(), &a.1).cmp(&(b.0, b.1.len(), &b.1)));
        let mut st = s.serialize_struct("MultigradedBettiTable", 3)?;
        st.serialize_field("n", &self.ground.len())?;
        st.serialize_field("field", &self.field.to_string())?;
        st.serialize_field("entries", &labeled)?;
        st.end()
    }
}

/// Ground set of the complex in compressed form, ready for the sweep.
struct SweepInput {
    m: usize,
    /// `is_face[V]` for every compressed `V ⊆ [m]`.
    is_face: Vec<bool>,
    /// Union of the minimal nonfaces contained in `V`.
    nonface_cover: Vec<u32>,
}

impl SweepInput {
    fn new(complex: &SimplicialComplex, limit: usize) -> Result<Self> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        let ground = complex.ground();
        let m = ground.len();
        // the cover table packs subsets into u32
        let limit = limit.min(32);
        if m > limit {
            return Err(Error::EnumerationLimit { n: m, limit });
        }
        let size = 1usize << m;
        let mut is_face = vec![false; size];
        for f in complex.facets() {
            is_face[f.compress(ground).bits() as usize] = true;
        }
        // downward closure, one coordinate at a time
        for b in 0..m {
            let bit = 1usize << b;
            for v in 0..size {
                if v & bit != 0 && is_face[v] {
                    is_face[v ^ bit] = true;
                }
            }
        }
        // a nonface is minimal when dropping any one vertex gives a face
        let mut nonface_cover = vec![0u32; size];
        for v in 0..size {
            if !is_face[v] && Face::from_bits(v as u64).iter().all(|b| is_face[v ^ (1 << b)]) {
                nonface_cover[v] = v as u32;
            }
        }
        // upward closure of the unions
        for b in 0..m {
            let bit = 1usize << b;
            for v in 0..size {
                if v & bit != 0 {
                    nonface_cover[v] |= nonface_cover[v ^ bit];
                }
            }
        }
        Ok(SweepInput { m, is_face, nonface_cover })
    }

    /// `(i, β_{i,V})` pairs for one compressed `V`.
    fn betti_at(&self, v: usize, field: FieldSpec) -> Vec<(usize, u64)> {
        if v == 0 {
            return vec![(0, 1)];
        }
        // a vertex of V outside every minimal nonface is a cone point
        if self.nonface_cover[v] as usize != v {
            return Vec::new();
        }
        let size = v.count_ones() as usize;
        let mut faces: Vec<Vec<Face>> = vec![Vec::new(); size + 1];
        let mut sub = v;
        loop {
            if self.is_face[sub] {
                faces[sub.count_ones() as usize].push(Face::from_bits(sub as u64));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & v;
        }
        while faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        for layer in &mut faces {
            layer.sort_unstable();
        }
        homology_by_size(&faces, field)
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d > 0)
            .map(|(k, d)| (size - k, d))
            .collect()
    }

    fn sweep(&self, field: FieldSpec, jobs: Option<usize>) -> Result<Vec<(usize, usize, u64)>> {
        let total = 1usize << self.m;
        // chunks keyed by the high-order bits of V
        let low = self.m.saturating_sub(8);
        let chunks = total >> low;
        let run_chunk = |c: usize| -> Vec<(usize, usize, u64)> {
            let mut out = Vec::new();
            for v in (c << low)..((c + 1) << low) {
                for (i, b) in self.betti_at(v, field) {
                    out.push((i, v, b));
                }
            }
            out
        };
        let collect = || -> Vec<(usize, usize, u64)> {
            (0..chunks).into_par_iter().flat_map_iter(run_chunk).collect()
        };
        Ok(match jobs {
            Some(1) => (0..chunks).flat_map(run_chunk).collect(),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Input(format!("thread pool: {e}")))?
                .install(collect),
            None => collect(),
        })
    }
}

pub fn hochster_multigraded(complex: &SimplicialComplex, field: FieldSpec) -> Result<MultigradedBettiTable> {
    hochster_multigraded_with(complex, field, &SweepConfig::default())
}

pub fn hochster_multigraded_with(
    complex: &SimplicialComplex,
    field: FieldSpec,
    config: &SweepConfig,
) -> Result<MultigradedBettiTable> {
    let input = SweepInput::new(complex, config.limit)?;
    let ground = complex.ground();
    let entries = input
        .sweep(field, config.jobs)?
        .into_iter()
        .map(|(i, v, b)| ((i, Face::from_bits(v as u64).expand(ground)), b))
        .collect();
    Ok(MultigradedBettiTable {
        universe: complex.universe_arc().clone(),
        ground,
        field,
        entries,
    })
}

pub fn hochster_graded(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    hochster_graded_with(complex, field, &SweepConfig::default())
}

pub fn hochster_graded_with(complex: &SimplicialComplex, field: FieldSpec, config: &SweepConfig) -> Result<BettiTable> {
    let input = SweepInput::new(complex, config.limit)?;
    let mut table = BettiTable::new(complex.vertex_count(), Some(field));
    table.entries.clear();
    for (i, v, b) in input.sweep(field, config.jobs)? {
        table.add(i, v.count_ones() as usize, b);
    }
    Ok(table)
}

/// Largest `i` with a nonzero `β_{i,j}`.
pub fn projective_dimension(table: &BettiTable) -> usize {
    table.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
}

/// `depth = N − pd`.
pub fn depth_via_ab(vertex_count: usize, pd: usize) -> Result<usize> {
    vertex_count
        .checked_sub(pd)
        .ok_or_else(|| Error::Input(format!("projective dimension {pd} exceeds {vertex_count} variables")))
}

/// `dim k[Δ] = dim Δ + 1`.
pub fn krull_dimension(complex: &SimplicialComplex) -> Result<usize> {
    complex
        .dimension()
        .finite()
        .map(|d| (d + 1) as usize)
        .ok_or(Error::VoidComplex)
}

pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    is_cohen_macaulay_with(complex, field, &SweepConfig::default())
}

pub fn is_cohen_macaulay_with(complex: &SimplicialComplex, field: FieldSpec, config: &SweepConfig) -> Result<bool> {
    let table = hochster_graded_with(complex, field, config)?;
    let depth = depth_via_ab(complex.vertex_count(), projective_dimension(&table))?;
    Ok(depth == krull_dimension(complex)?)
}

/// Every entry with `i > 0` sits at `j = i + d − 1`.
pub fn has_linear_resolution(table: &BettiTable, d: usize) -> bool {
    table.entries().all(|(i, j, _)| i == 0 || j + 1 == i + d)
}

/// `H(t) = numerator(t) / (1 − t)^denominator_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficients by degree, without trailing zeros.
    pub numerator: Vec<i128>,
    pub denominator_power: usize,
}

/// `Σ_r f_{r−1} t^r (1 − t)^{n−r}`, expanded.
pub fn hilbert_from_fvector(complex: &SimplicialComplex) -> Result<HilbertSeries> {
    let f = complex.f_vector()?;
    let n = complex.vertex_count();
    let mut num = vec![0i128; n + 1];
    for (r, &fr) in f.iter().enumerate() {
        // t^r (1 − t)^{n−r}
        for k in 0..=(n - r) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            num[r + k] += sign * fr as i128 * binomial((n - r) as i64, k as i64);
        }
    }
    Ok(HilbertSeries { numerator: trim(num), denominator_power: n })
}

/// `S(t) = Σ (−1)^i β_{i,j} t^j`.
pub fn hilbert_numerator_from_betti(table: &BettiTable) -> Vec<i128> {
    let top = table.entries().map(|(_, j, _)| j).max().unwrap_or(0);
    let mut num = vec![0i128; top + 1];
    for (i, j, b) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        num[j] += sign * b as i128;
    }
    trim(num)
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Betti numbers from the f-vector, assuming a `d`-linear resolution:
/// `β_{i,j} = Σ_{r=0}^{e} (−1)^{j−i−r} f_{r−1} C(n−r, j−r)` at `j = i + d − 1`,
/// where `e = dim Δ + 1`. A negative value proves the assumption false.
pub fn betti_from_fvector_linear(complex: &SimplicialComplex, d: usize) -> Result<BettiTable> {
    if d == 0 {
        return Err(Error::Input("linear degree must be at least 1".into()));
    }
    let f = complex.f_vector()?;
    let n = complex.vertex_count();
    let mut table = BettiTable::new(n, None);
    for i in 1..=n {
        let j = i + d - 1;
        if j > n {
            break;
        }
        let mut beta: i128 = 0;
        for (r, &fr) in f.iter().enumerate() {
            let sign = if (j - i + r) % 2 == 0 { 1 } else { -1 };
            beta += sign * fr as i128 * binomial((n - r) as i64, j as i64 - r as i64);
        }
        if beta < 0 {
            return Err(Error::NotLinear { i, j });
        }
        table.add(i, j, beta as u64);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    fn complete(n: usize, d: usize) -> SimplicialComplex {
        Hypergraph::new(VertexUniverse::new(n).unwrap(), Face::full(n).subsets_of_size(d))
            .unwrap()
            .independence_complex()
    }

    #[test]
    fn triangle_graph_multigraded() {
        let t = hochster_multigraded(&complete(3, 2), FieldSpec::GF2).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(
            entries,
            vec![(0, Face::EMPTY, 1), (1, f(&[0, 1]), 1), (1, f(&[0, 2]), 1), (1, f(&[1, 2]), 1), (2, f(&[0, 1, 2]), 2)]
        );
        assert_eq!(t.to_graded(), hochster_graded(&complete(3, 2), FieldSpec::GF2).unwrap());
    }

    #[test]
    fn full_simplex_has_trivial_table() {
        let s = SimplicialComplex::simplex(VertexUniverse::new(5).unwrap());
        let t = hochster_graded(&s, FieldSpec::Rational).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        assert_eq!(projective_dimension(&t), 0);
        assert!(has_linear_resolution(&t, 2));
        assert_eq!(t.linear_degree(), None);
    }

    #[test]
    fn complete_graph_k4() {
        let t = hochster_graded(&complete(4, 2), FieldSpec::GF2).unwrap();
        assert_eq!((t.get(1, 2), t.get(2, 3), t.get(3, 4)), (6, 8, 3));
        assert_eq!(t.totals(), vec![1, 6, 8, 3]);
        assert_eq!(t.linear_degree(), Some(2));
    }

    #[test]
    fn four_cycle() {
        // K_{2,2} = Δ of edges 02, 03, 12, 13
        let h = Hypergraph::new(
            VertexUniverse::new(4).unwrap(),
            vec![f(&[0, 2]), f(&[0, 3]), f(&[1, 2]), f(&[1, 3])],
        )
        .unwrap();
        let t = hochster_graded(&h.independence_complex(), FieldSpec::GF2).unwrap();
        assert_eq!(t.totals(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn two_disjoint_edges_are_not_linear() {
        let h = Hypergraph::new(VertexUniverse::new(4).unwrap(), vec![f(&[0, 1]), f(&[2, 3])]).unwrap();
        let cx = h.independence_complex();
        let t = hochster_graded(&cx, FieldSpec::GF2).unwrap();
        assert_eq!(t.get(2, 4), 1);
        assert!(!has_linear_resolution(&t, 2));
        assert!(matches!(betti_from_fvector_linear(&cx, 2), Err(Error::NotLinear { .. })));
    }

    #[test]
    fn singleton_nonfaces_give_diagonal_entries() {
        // K₂¹: both vertices are nonfaces, Δ = {∅}
        let h = Hypergraph::new(VertexUniverse::new(2).unwrap(), vec![f(&[0]), f(&[1])]).unwrap();
        let t = hochster_graded(&h.independence_complex(), FieldSpec::GF2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    }

    #[test]
    fn enumeration_limit() {
        let cx = complete(6, 2);
        let cfg = SweepConfig { limit: 5, jobs: None };
        assert_eq!(hochster_graded_with(&cx, FieldSpec::GF2, &cfg), Err(Error::EnumerationLimit { n: 6, limit: 5 }));
        let void = SimplicialComplex::void(VertexUniverse::new(3).unwrap());
        assert_eq!(hochster_graded(&void, FieldSpec::GF2), Err(Error::VoidComplex));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let cx = complete(10, 4);
        let base = hochster_graded_with(&cx, FieldSpec::GF2, &SweepConfig { limit: 24, jobs: Some(1) }).unwrap();
        for jobs in [None, Some(2), Some(3)] {
            let t = hochster_graded_with(&cx, FieldSpec::GF2, &SweepConfig { limit: 24, jobs }).unwrap();
            assert_eq!(t, base);
        }
    }

    #[test]
    fn restricted_ground_set() {
        // K₃² living on vertices {1, 3, 4} of a 6-vertex universe
        let u = Arc::new(VertexUniverse::new(6).unwrap());
        let g = f(&[1, 3, 4]);
        let h = Hypergraph::new_on(u, g, g.subsets_of_size(2)).unwrap();
        let t = hochster_multigraded(&h.independence_complex(), FieldSpec::GF2).unwrap();
        assert_eq!(t.get(2, g), 2);
        assert_eq!(t.get(1, f(&[3, 4])), 1);
        assert_eq!(t.to_graded().vertex_count(), 3);
    }

    #[test]
    fn ring_statistics() {
        let cx = complete(5, 3);
        assert_eq!(krull_dimension(&cx).unwrap(), 2);
        let t = hochster_graded(&cx, FieldSpec::GF2).unwrap();
        assert_eq!(projective_dimension(&t), 3);
        assert_eq!(depth_via_ab(5, 3).unwrap(), 2);
        assert!(depth_via_ab(2, 3).is_err());
        assert!(is_cohen_macaulay(&cx, FieldSpec::GF2).unwrap());
        let e = SimplicialComplex::empty_complex(VertexUniverse::new(3).unwrap());
        assert_eq!(krull_dimension(&e).unwrap(), 0);
    }

    #[test]
    fn hilbert_numerators() {
        let cx = complete(3, 2);
        let h = hilbert_from_fvector(&cx).unwrap();
        assert_eq!(h.numerator, vec![1, 0, -3, 2]);
        assert_eq!(h.denominator_power, 3);
        let t = hochster_graded(&cx, FieldSpec::GF2).unwrap();
        assert_eq!(hilbert_numerator_from_betti(&t), h.numerator);
        let s = SimplicialComplex::simplex(VertexUniverse::new(4).unwrap());
        assert_eq!(hilbert_from_fvector(&s).unwrap().numerator, vec![1]);
        let e = SimplicialComplex::empty_complex(VertexUniverse::new(3).unwrap());
        assert_eq!(hilbert_from_fvector(&e).unwrap().numerator, vec![1, -3, 3, -1]);
        let edge = Hypergraph::new(VertexUniverse::new(2).unwrap(), vec![f(&[0, 1])]).unwrap();
        let t = hochster_graded(&edge.independence_complex(), FieldSpec::GF2).unwrap();
        assert_eq!(hilbert_numerator_from_betti(&t), vec![1, 0, -1]);
    }

    #[test]
    fn fvector_route_on_triangle_graph() {
        let t = betti_from_fvector_linear(&complete(3, 2), 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn json_shape() {
        let t = hochster_graded(&complete(3, 2), FieldSpec::GF2).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"field":"GF(2)","entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":3},{"i":2,"j":3,"beta":2}],"pd":2,"depth":1,"linear_for_d":2}"#
        );
        let m = hochster_multigraded(&complete(3, 2), FieldSpec::GF2).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains(r#"{"i":2,"degree":["a","b","c"],"beta":2}"#), "{json}");
    }
}
