//! Vertex sets as machine words.
//!
//! A [`Face`] is a subset of a vertex universe of at most 63 vertices, stored
//! as a bit set where bit `k` is vertex `k`. The same value doubles as a
//! squarefree multidegree: its characteristic vector is the bit pattern and
//! its norm is the popcount.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported universe.
pub const MAX_VERTICES: usize = 63;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1 << v)
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            Face(0)
        } else {
            Face(u64::MAX >> (64 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Face(indices.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Moves every vertex up by `offset` positions.
    pub fn shifted(self, offset: usize) -> Face {
        debug_assert!(offset == 0 || self.0.leading_zeros() as usize > offset);
        Face(self.0 << offset)
    }

    /// Vertex indices in ascending order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// Packs the vertices of `self` that lie in `ground` into the low bits,
    /// preserving order (a software `pext`).
    pub fn compress(self, ground: Face) -> Face {
        let mut out = 0u64;
        for (k, v) in ground.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        Face(out)
    }

    /// Inverse of [`Face::compress`].
    pub fn expand(self, ground: Face) -> Face {
        let mut out = 0u64;
        for (k, v) in ground.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << v;
            }
        }
        Face(out)
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bit order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        let m = self.len();
        if k > m {
            return Vec::new();
        }
        if k == 0 {
            return vec![Face::EMPTY];
        }
        // Gosper's hack over the packed positions, then spread back out
        let limit = 1u64 << m;
        let mut comb = (1u64 << k) - 1;
        let mut out = Vec::new();
        while comb < limit {
            out.push(Face(comb).expand(self));
            let low = comb & comb.wrapping_neg();
            let ripple = comb + low;
            comb = (((ripple ^ comb) >> 2) / low) | ripple;
        }
        out
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// Removes duplicates and every face strictly contained in another one.
/// The result is sorted by bit pattern.
pub fn antichain(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    // larger faces first so that dominated ones are seen after their cover
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|g| f.is_subset(*g)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps only the inclusion-minimal members (no duplicates), sorted by bit pattern.
pub fn minimal_members(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|g| g.is_subset(f)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Inclusion-minimal sets meeting every member of `family` (Berge's
/// incremental algorithm). A family containing the empty set has no
/// transversal; the empty family has the single transversal `{}`.
pub fn minimal_transversals(family: &[Face]) -> Vec<Face> {
    let mut members = minimal_members(family.to_vec());
    // small sets first keeps the intermediate antichains small
    members.sort_by_key(|f| f.len());
    let mut current = vec![Face::EMPTY];
    for &edge in &members {
        let mut next = Vec::with_capacity(current.len());
        for &t in &current {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_members(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// A finite vertex set `[n]`, optionally split into ordered blocks
/// `[n_1] ⊔ ... ⊔ [n_t]`, with a display label per vertex.
///
/// Equality is structural: labels are ignored.
#[derive(Clone, Debug)]
pub struct VertexUniverse {
    size: usize,
    labels: Vec<String>,
    partition: Option<Vec<Face>>,
}

impl PartialEq for VertexUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.partition == other.partition
    }
}

impl Eq for VertexUniverse {}

impl VertexUniverse {
    /// Unpartitioned universe with auto-generated labels.
    pub fn new(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(VertexUniverse { size, labels: auto_labels(&[size]), partition: None })
    }

    /// Consecutive blocks of the given sizes with auto-generated labels
    /// (`a b | A B C | d e f`, ...).
    pub fn with_blocks(sizes: &[usize]) -> Result<Self> {
        let size = sizes.iter().sum();
        check_size(size)?;
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidUniverse("blocks must be nonempty".into()));
        }
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut offset = 0;
        for &s in sizes {
            blocks.push(Face::full(s).shifted(offset));
            offset += s;
        }
        Ok(VertexUniverse { size, labels: auto_labels(sizes), partition: Some(blocks) })
    }

    /// Fully specified universe. Blocks, when given, must be nonempty,
    /// disjoint and cover every vertex; labels must be distinct.
    pub fn from_parts(labels: Vec<String>, partition: Option<Vec<Face>>) -> Result<Self> {
        let size = labels.len();
        check_size(size)?;
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) || l.contains('|') {
                return Err(Error::InvalidUniverse(format!("bad vertex label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidUniverse(format!("duplicate vertex label {l:?}")));
            }
        }
        if let Some(blocks) = &partition {
            let mut covered = Face::EMPTY;
            for b in blocks {
                if b.is_empty() {
                    return Err(Error::InvalidUniverse("empty block".into()));
                }
                if !b.is_disjoint(covered) {
                    return Err(Error::InvalidUniverse("blocks overlap".into()));
                }
                covered = covered.union(*b);
            }
            if covered != Face::full(size) {
                return Err(Error::InvalidUniverse("blocks do not cover the vertex set".into()));
            }
        }
        Ok(VertexUniverse { size, labels, partition })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn all(&self) -> Face {
        Face::full(self.size)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn partition(&self) -> Option<&[Face]> {
        self.partition.as_deref()
    }

    /// Blocks of the partition, or the whole vertex set as a single block.
    pub fn blocks(&self) -> Vec<Face> {
        match &self.partition {
            Some(b) => b.clone(),
            None if self.size == 0 => Vec::new(),
            None => vec![self.all()],
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check(&self, face: Face) -> Result<()> {
        if face.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::FaceOutOfUniverse { face: face.bits(), ground: self.all().bits() })
        }
    }

    /// Labels of a face, in vertex order.
    pub fn face_labels(&self, face: Face) -> Vec<&str> {
        face.iter().map(|v| self.labels[v].as_str()).collect()
    }

    /// `self ⊔ other`: the vertices of `other` are renumbered after those of
    /// `self`. Blocks are concatenated (an unpartitioned operand counts as
    /// one block). Labels are kept when they stay distinct and regenerated
    /// per block otherwise.
    pub fn disjoint_union(&self, other: &VertexUniverse) -> Result<VertexUniverse> {
        let size = self.size + other.size;
        check_size(size)?;
        let mut blocks = self.blocks();
        blocks.extend(other.blocks().into_iter().map(|b| b.shifted(self.size)));
        let mut labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        let distinct = labels.iter().collect::<std::collections::HashSet<_>>().len() == size;
        if !distinct {
            let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
            labels = auto_labels(&sizes);
        }
        Ok(VertexUniverse { size, labels, partition: Some(blocks) })
    }

    /// Parses a whitespace separated label list into a face.
    pub fn parse_face<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<Face> {
        let mut face = Face::EMPTY;
        for l in labels {
            let v = self
                .index_of(l)
                .ok_or_else(|| Error::Input(format!("unknown vertex label {l:?}")))?;
            face = face.with(v);
        }
        Ok(face)
    }
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_VERTICES {
        Err(Error::UniverseTooLarge(size))
    } else {
        Ok(())
    }
}

/// Block-wise labels: even blocks draw from `a..z`, odd blocks from `A..Z`,
/// each pool continuing where it left off. Falls back to `v1, v2, ...` when
/// a pool runs dry.
pub fn auto_labels(block_sizes: &[usize]) -> Vec<String> {
    let total: usize = block_sizes.iter().sum();
    let mut next = [b'a', b'A'];
    let mut out = Vec::with_capacity(total);
    for (k, &s) in block_sizes.iter().enumerate() {
        let pool = k % 2;
        for _ in 0..s {
            let c = next[pool];
            let last = if pool == 0 { b'z' } else { b'Z' };
            if c > last {
                return (1..=total).map(|i| format!("v{i}")).collect();
            }
            out.push((c as char).to_string());
            next[pool] += 1;
        }
    }
    out
}
