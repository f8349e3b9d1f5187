//! Reduced simplicial homology with field coefficients.
//!
//! The reduced chain complex includes degree `-1`, spanned by the empty face,
//! so `{∅}` has `H̃₋₁ = k` and every nonempty complex has `∂₀ = [1 1 … 1]`.
//! Boundary signs follow ascending vertex order: removing the vertex in
//! position `q` (0-based) contributes `(-1)^q`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::field::FieldSpec;
use crate::rank::{rank_sparse, IntMatrix};

/// `dim H̃_r` for `-1 ≤ r ≤ dim Δ`. Degrees not stored are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<isize, u64>,
}

impl HomologyProfile {
    pub fn dim(&self, r: isize) -> u64 {
        self.dims.get(&r).copied().unwrap_or(0)
    }

    /// `(degree, dim)` pairs for every degree from `-1` to the top dimension.
    pub fn iter(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.dims.iter().map(|(&r, &d)| (r, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// `Σ (-1)^r dim H̃_r`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(r, d)| if r.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    pub(crate) fn from_dims_by_size(dims: &[u64]) -> Self {
        HomologyProfile {
            dims: dims.iter().enumerate().map(|(k, &d)| (k as isize - 1, d)).collect(),
        }
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.dims.len()))?;
        for (r, d) in &self.dims {
            map.serialize_entry(&r.to_string(), d)?;
        }
        map.end()
    }
}

/// `∂_r : C_r → C_{r-1}` with rows indexed by the `(r-1)`-faces and columns
/// by the `r`-faces, both in increasing bit order. Entries are `0, ±1` and
/// are read in whatever field the caller works over.
pub fn boundary_matrix(complex: &SimplicialComplex, r: isize) -> IntMatrix {
    if complex.is_void() || r < 0 {
        // ∂₋₁ maps onto the zero space
        let cols = if r == -1 && !complex.is_void() { 1 } else { 0 };
        return IntMatrix::zeros(0, cols);
    }
    let rows = complex.faces_of_dim(r - 1);
    let cols = complex.faces_of_dim(r);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &face) in cols.iter().enumerate() {
        for (row, sign) in boundary_of(face, rows) {
            m.set(row, c, sign);
        }
    }
    m
}

/// `(row index, sign)` for every codimension-one face of `face` within `rows`.
fn boundary_of(face: Face, rows: &[Face]) -> impl Iterator<Item = (usize, i64)> + '_ {
    face.iter().enumerate().filter_map(move |(q, v)| {
        let sign = if q % 2 == 0 { 1 } else { -1 };
        rows.binary_search(&face.without(v)).ok().map(|row| (row, sign))
    })
}

pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    if complex.is_void() {
        return HomologyProfile::default();
    }
    HomologyProfile::from_dims_by_size(&homology_by_size(complex.faces_by_size(), field))
}

/// Homology dimensions from faces grouped by size (`faces[k]` sorted, `k`
/// vertices each). Entry `k` of the result is `dim H̃_{k-1}`.
///
/// Boundary ranks are computed from the top down; an `r`-face that became a
/// pivot while reducing `∂_{r+1}` is skipped in `∂_r`, since the reduced
/// vector with that pivot is a cycle and can replace it in the basis.
pub(crate) fn homology_by_size(faces: &[Vec<Face>], field: FieldSpec) -> Vec<u64> {
    let top = faces.len();
    // rank of the boundary leaving faces of size k
    let mut ranks = vec![0usize; top + 1];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..top).rev() {
        let cols = &faces[k];
        let rows = &faces[k - 1];
        let vectors: Vec<Vec<(usize, i64)>> = cols
            .iter()
            .enumerate()
            .filter(|(c, _)| !cleared.get(*c).copied().unwrap_or(false))
            .map(|(_, &f)| boundary_of(f, rows).collect())
            .collect();
        let (rank, pivots) = rank_sparse(field, rows.len(), &vectors);
        ranks[k] = rank;
        cleared = vec![false; rows.len()];
        for p in pivots {
            cleared[p] = true;
        }
    }
    (0..top)
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::VertexUniverse;

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(VertexUniverse::new(n).unwrap(), facets.iter().map(|v| f(v)).collect())
            .unwrap()
    }

    #[test]
    fn triangle_boundary_matrix() {
        let tri = SimplicialComplex::simplex(VertexUniverse::new(3).unwrap());
        let d1 = boundary_matrix(&tri, 1);
        // columns {0,1}, {0,2}, {1,2}; rows {0}, {1}, {2}
        let expected = IntMatrix::from_rows(vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1, expected);
        let pts = cx(3, &[&[0], &[1], &[2]]);
        assert_eq!(boundary_matrix(&pts, 0), IntMatrix::from_rows(vec![vec![1, 1, 1]]));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let full = SimplicialComplex::simplex(VertexUniverse::new(5).unwrap());
        for r in 0..=4 {
            let prod = boundary_matrix(&full, r).mul(&boundary_matrix(&full, r + 1));
            assert!(prod.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn circle() {
        let circle = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let h = reduced_homology(&circle, FieldSpec::GF2);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(-1, 0), (0, 0), (1, 1)]);
    }

    #[test]
    fn empty_and_void() {
        let e = cx(4, &[]);
        let h = reduced_homology(&e, FieldSpec::Rational);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(-1, 1)]);
        let void = SimplicialComplex::void(VertexUniverse::new(4).unwrap());
        assert!(reduced_homology(&void, FieldSpec::GF2).is_acyclic());
    }

    #[test]
    fn complete_graph_k5() {
        // 1-skeleton of Δ₅ = Δ(K₅³)
        let full = SimplicialComplex::simplex(VertexUniverse::new(5).unwrap());
        let g = full.skeleton(1);
        for field in [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational] {
            let h = reduced_homology(&g, field);
            assert_eq!(h.dim(1), 6);
            assert_eq!(h.dim(0), 0);
        }
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP²
        let rp2 = cx(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[2, 3, 5],
                &[1, 3, 4],
                &[1, 3, 5],
                &[2, 4, 5],
            ],
        );
        let gf2 = reduced_homology(&rp2, FieldSpec::GF2);
        assert_eq!((gf2.dim(1), gf2.dim(2)), (1, 1));
        let q = reduced_homology(&rp2, FieldSpec::Rational);
        assert!(q.is_acyclic());
        assert!(reduced_homology(&rp2, FieldSpec::Prime(3)).is_acyclic());
    }

    #[test]
    fn serializes_with_string_degrees() {
        let circle = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let json = serde_json::to_string(&reduced_homology(&circle, FieldSpec::GF2)).unwrap();
        assert_eq!(json, r#"{"-1":0,"0":0,"1":1}"#);
    }
}
