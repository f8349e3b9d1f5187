//! The complete uniform hypergraph families and their closed-form Betti
//! numbers.
//!
//! * `Kₙᵈ`: all `d`-subsets of `[n]`.
//! * `K^d_{n₁…nₜ}`: all `d`-subsets not inside a single block.
//! * `K^{d(a)}`: exactly `aₛ` vertices from block `s`.
//! * `K^{d(I)}`: the union of `K^{d(a)}` over all `a` with `aₛ ∈ Iₛ`,
//!   `Σ aₛ = d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::betti::{hochster_graded_with, BettiTable, SweepConfig};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexUniverse};
use crate::field::FieldSpec;
use crate::hypergraph::Hypergraph;

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    acc
}

fn binom(n: usize, k: isize) -> i128 {
    binomial(n as i64, k as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Knd,
    Multipartite,
    Da,
    #[serde(rename = "dI")]
    DI,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Knd => "knd",
            FamilyKind::Multipartite => "multipartite",
            FamilyKind::Da => "da",
            FamilyKind::DI => "dI",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "knd" => Ok(FamilyKind::Knd),
            "multipartite" => Ok(FamilyKind::Multipartite),
            "da" => Ok(FamilyKind::Da),
            "dI" | "di" => Ok(FamilyKind::DI),
            _ => Err(Error::InvalidFamily(format!("unknown family {s:?}"))),
        }
    }
}

/// One closed interval `[α, β]` per block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalSpec(pub Vec<(usize, usize)>);

impl FromStr for IntervalSpec {
    type Err = Error;

    /// `1:2,1,2:3` means `[1,2], {1}, [2,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidIntervals(format!("bad bound {t:?}")))
        };
        s.split(',')
            .map(|part| match part.split_once(':') {
                Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
                None => parse(part).map(|a| (a, a)),
            })
            .collect::<Result<Vec<_>>>()
            .map(IntervalSpec)
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Serializable description of a family instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<IntervalSpec>,
}

impl FamilySpec {
    pub fn knd(n: usize, d: usize) -> Self {
        FamilySpec { kind: FamilyKind::Knd, n: vec![n], d: Some(d), a: None, intervals: None }
    }

    pub fn multipartite(n: &[usize], d: usize) -> Self {
        FamilySpec { kind: FamilyKind::Multipartite, n: n.to_vec(), d: Some(d), a: None, intervals: None }
    }

    pub fn da(n: &[usize], a: &[usize]) -> Self {
        FamilySpec { kind: FamilyKind::Da, n: n.to_vec(), d: Some(a.iter().sum()), a: Some(a.to_vec()), intervals: None }
    }

    pub fn d_i(n: &[usize], d: usize, intervals: IntervalSpec) -> Self {
        FamilySpec { kind: FamilyKind::DI, n: n.to_vec(), d: Some(d), a: None, intervals: Some(intervals) }
    }

    pub fn vertex_count(&self) -> usize {
        self.n.iter().sum()
    }

    /// Edge size `d`. For `da` it defaults to `Σ aₛ`.
    pub fn degree(&self) -> Result<usize> {
        match (self.kind, self.d, &self.a) {
            (FamilyKind::Da, d, Some(a)) => {
                let sum = a.iter().sum();
                match d {
                    Some(d) if d != sum => Err(Error::InvalidFamily(format!("d = {d} but the parts of a sum to {sum}"))),
                    _ => Ok(sum),
                }
            }
            (FamilyKind::Da, _, None) => Err(Error::InvalidFamily("da needs a composition a".into())),
            (_, Some(d), _) => Ok(d),
            (kind, None, _) => Err(Error::InvalidFamily(format!("{kind} needs d"))),
        }
    }

    fn single_block(&self) -> Result<usize> {
        match self.n.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::InvalidFamily("knd takes a single n".into())),
        }
    }

    fn composition(&self) -> Result<&[usize]> {
        self.a.as_deref().ok_or_else(|| Error::InvalidFamily("da needs a composition a".into()))
    }

    fn interval_spec(&self) -> Result<&IntervalSpec> {
        self.intervals
            .as_ref()
            .ok_or_else(|| Error::InvalidFamily("dI needs intervals".into()))
    }

    /// Builds the hypergraph. With `strict`, `dI` intervals that need
    /// shrinking are an error instead of being normalized.
    pub fn hypergraph(&self, strict: bool) -> Result<Hypergraph> {
        let d = self.degree()?;
        match self.kind {
            FamilyKind::Knd => make_knd(self.single_block()?, d),
            FamilyKind::Multipartite => make_multipartite(&self.n, d),
            FamilyKind::Da => make_da(&self.n, self.composition()?),
            FamilyKind::DI => {
                let spec = self.interval_spec()?;
                if strict {
                    normalize_intervals_strict(spec, &self.n, d)?;
                }
                make_d_i(&self.n, d, spec)
            }
        }
    }

    /// Closed-form table where one exists. `dI` has none and is left to
    /// the f-vector route.
    pub fn closed_betti(&self) -> Result<BettiTable> {
        let d = self.degree()?;
        match self.kind {
            FamilyKind::Knd => closed_betti_knd(self.single_block()?, d),
            FamilyKind::Multipartite => closed_betti_multipartite(&self.n, d),
            FamilyKind::Da => closed_betti_da(&self.n, self.composition()?),
            FamilyKind::DI => Err(Error::InvalidFamily("no closed form for dI; use the f-vector route".into())),
        }
    }

    /// True when the instance has at least one edge.
    pub fn has_edges(&self) -> Result<bool> {
        Ok(!self.hypergraph(false)?.edges().is_empty())
    }

    /// Projective dimension predicted by the family formulas: `N − d + 1`
    /// when there are edges, `0` otherwise.
    pub fn predicted_pd(&self) -> Result<usize> {
        let n = self.vertex_count();
        Ok(if self.has_edges()? { n + 1 - self.degree()? } else { 0 })
    }

    /// Cohen-Macaulay verdict of the family classification, where one is
    /// stated: `nₛ ≤ d − 1` for every block of a multipartite instance with
    /// at least two blocks; for `d(a)`, `aₛ = nₛ` except possibly at one
    /// block `i` whose `aᵢ + Σ_{j≠i} nⱼ` is maximal.
    pub fn cm_prediction(&self) -> Result<Option<bool>> {
        let d = self.degree()?;
        Ok(match self.kind {
            FamilyKind::Knd => Some(true),
            FamilyKind::Multipartite if self.n.len() >= 2 => Some(self.n.iter().all(|&n| n + 1 <= d)),
            FamilyKind::Multipartite => None,
            FamilyKind::Da => {
                let a = self.composition()?;
                let total = self.vertex_count();
                let term = |i: usize| total - self.n[i] + a[i];
                let best = (0..a.len()).map(term).max().unwrap_or(0);
                Some((0..a.len()).any(|i| term(i) == best && (0..a.len()).all(|j| j == i || a[j] == self.n[j])))
            }
            FamilyKind::DI => None,
        })
    }
}

/// `Kₙᵈ`: every `d`-subset of `[n]`. Empty when `n < d`.
pub fn make_knd(n: usize, d: usize) -> Result<Hypergraph> {
    if d == 0 {
        return Err(Error::InvalidFamily("d must be at least 1".into()));
    }
    let universe = VertexUniverse::new(n)?;
    let edges = universe.all().subsets_of_size(d);
    Hypergraph::new(universe, edges)
}

fn block_universe(n: &[usize]) -> Result<VertexUniverse> {
    if n.is_empty() {
        return Err(Error::InvalidFamily("at least one block is required".into()));
    }
    VertexUniverse::with_blocks(n).map_err(|e| match e {
        Error::InvalidUniverse(msg) => Error::InvalidFamily(msg),
        e => e,
    })
}

/// `K^d_{n₁…nₜ}`: every `d`-subset meeting at least two blocks.
pub fn make_multipartite(n: &[usize], d: usize) -> Result<Hypergraph> {
    if d < 2 {
        return Err(Error::InvalidFamily("multipartite needs d ≥ 2".into()));
    }
    let universe = block_universe(n)?;
    let blocks = universe.blocks();
    let edges = universe
        .all()
        .subsets_of_size(d)
        .into_iter()
        .filter(|e| !blocks.iter().any(|b| e.is_subset(*b)))
        .collect();
    Hypergraph::new(universe, edges)
}

/// Unions of one `aₛ`-subset from each block.
fn composition_edges(blocks: &[Face], a: &[usize], out: &mut Vec<Face>) {
    let mut partial = vec![Face::EMPTY];
    for (b, &k) in blocks.iter().zip(a) {
        let choices = b.subsets_of_size(k);
        partial = partial
            .iter()
            .flat_map(|p| choices.iter().map(move |c| p.union(*c)))
            .collect();
    }
    out.extend(partial);
}

/// `K^{d(a)}` with `d = Σ aₛ`. A part larger than its block leaves no edges.
pub fn make_da(n: &[usize], a: &[usize]) -> Result<Hypergraph> {
    if a.len() != n.len() {
        return Err(Error::InvalidFamily(format!("{} blocks but {} parts in a", n.len(), a.len())));
    }
    if a.iter().any(|&x| x == 0) {
        return Err(Error::InvalidFamily("parts of a must be at least 1".into()));
    }
    let universe = block_universe(n)?;
    let mut edges = Vec::new();
    composition_edges(&universe.blocks(), a, &mut edges);
    Hypergraph::new(universe, edges)
}

/// Compositions `(a₁…aₜ)` of `total` with `αₛ ≤ aₛ ≤ βₛ`, in lexicographic
/// order.
pub fn bounded_compositions(bounds: &[(usize, usize)], total: usize) -> Vec<Vec<usize>> {
    fn go(bounds: &[(usize, usize)], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match bounds.split_first() {
            None => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&(lo, hi), rest)) => {
                for x in lo..=hi.min(left) {
                    cur.push(x);
                    go(rest, left - x, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(bounds, total, &mut Vec::new(), &mut out);
    out
}

fn check_intervals(spec: &IntervalSpec, n: &[usize]) -> Result<()> {
    if spec.0.len() != n.len() {
        return Err(Error::InvalidIntervals(format!("{} blocks but {} intervals", n.len(), spec.0.len())));
    }
    for (s, (&(lo, hi), &ns)) in spec.0.iter().zip(n).enumerate() {
        if lo > hi || hi > ns {
            return Err(Error::InvalidIntervals(format!("interval {lo}:{hi} of block {} not inside [0, {ns}]", s + 1)));
        }
    }
    Ok(())
}

/// Shrinks the intervals until `αₛ + Σ_{j≠s} βⱼ ≥ d` and
/// `βₛ + Σ_{j≠s} αⱼ ≤ d` hold for every `s`; afterwards every value of
/// every interval occurs in some composition of `d`.
pub fn normalize_intervals(spec: &IntervalSpec, n: &[usize], d: usize) -> Result<IntervalSpec> {
    check_intervals(spec, n)?;
    let mut iv: Vec<(isize, isize)> = spec.0.iter().map(|&(a, b)| (a as isize, b as isize)).collect();
    let d = d as isize;
    loop {
        let mut changed = false;
        let sum_lo: isize = iv.iter().map(|x| x.0).sum();
        let sum_hi: isize = iv.iter().map(|x| x.1).sum();
        for s in 0..iv.len() {
            let (lo, hi) = iv[s];
            let new_lo = lo.max(d - (sum_hi - hi));
            let new_hi = hi.min(d - (sum_lo - lo));
            if new_lo > new_hi {
                return Err(Error::InvalidIntervals(format!(
                    "no composition of {d} fits the intervals {spec}"
                )));
            }
            if (new_lo, new_hi) != (lo, hi) {
                iv[s] = (new_lo, new_hi);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(IntervalSpec(iv.into_iter().map(|(a, b)| (a as usize, b as usize)).collect()))
}

/// Like [`normalize_intervals`], but any needed shrinking is an error.
pub fn normalize_intervals_strict(spec: &IntervalSpec, n: &[usize], d: usize) -> Result<IntervalSpec> {
    let norm = normalize_intervals(spec, n, d)?;
    if norm != *spec {
        return Err(Error::InvalidIntervals(format!("{spec} is not normalized (would become {norm})")));
    }
    Ok(norm)
}

/// `K^{d(I₁…Iₜ)}`: every `d`-set taking `aₛ ∈ Iₛ` vertices from block `s`.
pub fn make_d_i(n: &[usize], d: usize, intervals: &IntervalSpec) -> Result<Hypergraph> {
    if d < 2 {
        return Err(Error::InvalidFamily("dI needs d ≥ 2".into()));
    }
    let norm = normalize_intervals(intervals, n, d)?;
    let universe = block_universe(n)?;
    let blocks = universe.blocks();
    let mut edges = Vec::new();
    for a in bounded_compositions(&norm.0, d) {
        composition_edges(&blocks, &a, &mut edges);
    }
    Hypergraph::new(universe, edges)
}

fn table_from(n: usize, values: impl IntoIterator<Item = (usize, usize, i128)>) -> BettiTable {
    let mut t = BettiTable::new(n, None);
    for (i, j, b) in values {
        assert!(b >= 0, "closed form produced a negative value at ({i}, {j})");
        t.add(i, j, u64::try_from(b).expect("Betti number exceeds u64"));
    }
    t
}

/// `β_{i,i+d−1}(Kₙᵈ) = C(n, j)·C(j − 1, d − 1)`.
pub fn closed_betti_knd(n: usize, d: usize) -> Result<BettiTable> {
    if d == 0 {
        return Err(Error::InvalidFamily("d must be at least 1".into()));
    }
    let values = (1..=n).map(|i| {
        let j = i + d - 1;
        (i, j, binom(n, j as isize) * binom(j - 1, d as isize - 1))
    });
    Ok(table_from(n, values))
}

/// Polynomial product, coefficients by degree.
fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (x, &p) in a.iter().enumerate() {
        for (y, &q) in b.iter().enumerate() {
            out[x + y] += p * q;
        }
    }
    out
}

/// `Σ_{(j₁…jₜ) ⊢ j} ∏ C(nₛ, jₛ) · Σₛ C(jₛ − 1, d − 1)`, the correction term
/// of the multipartite formula, as a polynomial in `j`.
fn multipartite_correction(n: &[usize], d: usize) -> Vec<i128> {
    let plain: Vec<Vec<i128>> = n.iter().map(|&m| (0..=m).map(|k| binom(m, k as isize)).collect()).collect();
    let marked: Vec<Vec<i128>> = n
        .iter()
        .map(|&m| (0..=m).map(|k| binom(m, k as isize) * binomial(k as i64 - 1, d as i64 - 1)).collect())
        .collect();
    let total: usize = n.iter().sum();
    let mut sum = vec![0i128; total + 1];
    for s in 0..n.len() {
        let mut p = marked[s].clone();
        for (u, q) in plain.iter().enumerate() {
            if u != s {
                p = poly_mul(&p, q);
            }
        }
        for (k, c) in p.into_iter().enumerate() {
            sum[k] += c;
        }
    }
    sum
}

/// `β_{i,j}(K^d_{n₁…nₜ}) = C(N, j)·C(j − 1, d − 1) − correction(j)` at
/// `j = i + d − 1`.
pub fn closed_betti_multipartite(n: &[usize], d: usize) -> Result<BettiTable> {
    if n.is_empty() || d < 2 {
        return Err(Error::InvalidFamily("multipartite needs t ≥ 1 and d ≥ 2".into()));
    }
    let total: usize = n.iter().sum();
    let corr = multipartite_correction(n, d);
    let values = (1..=total).filter_map(|i| {
        let j = i + d - 1;
        (j <= total).then(|| (i, j, binom(total, j as isize) * binom(j - 1, d as isize - 1) - corr[j]))
    });
    Ok(table_from(total, values))
}

/// `β_{i,i+d−1}(K^{d(a)}) = Σ_{r₁+…+rₜ = i+t−1, rₗ ≥ 1} ∏ β_{rₗ, rₗ+aₗ−1}(K_{nₗ}^{aₗ})`
/// with `β_{r, r+a−1}(Kₙᵃ) = C(n, r + a − 1)·C(r + a − 2, a − 1)`.
pub fn closed_betti_da(n: &[usize], a: &[usize]) -> Result<BettiTable> {
    if a.len() != n.len() || n.is_empty() {
        return Err(Error::InvalidFamily("da needs one part of a per block".into()));
    }
    if a.iter().any(|&x| x == 0) {
        return Err(Error::InvalidFamily("parts of a must be at least 1".into()));
    }
    let total: usize = n.iter().sum();
    let d: usize = a.iter().sum();
    let t = n.len();
    // factor[l][r] = β_{r, r+a_l−1}(K_{n_l}^{a_l})
    let factors: Vec<Vec<i128>> = n
        .iter()
        .zip(a)
        .map(|(&nl, &al)| {
            (0..=nl)
                .map(|r| if r == 0 { 0 } else { binom(nl, (r + al - 1) as isize) * binom(r + al - 2, al as isize - 1) })
                .collect()
        })
        .collect();
    let conv = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| poly_mul(&acc, f));
    let values = (1..=total).filter_map(|i| {
        let j = i + d - 1;
        let k = i + t - 1;
        (j <= total).then(|| (i, j, conv.get(k).copied().unwrap_or(0)))
    });
    Ok(table_from(total, values))
}

/// Per-component counts `T[k][r + 1] = Σ_{|V| = k, V ≠ ∅} dim H̃_r(Δ_V)`.
fn restriction_homology(complex: &SimplicialComplex, field: FieldSpec, config: &SweepConfig) -> Result<Vec<Vec<u64>>> {
    let n = complex.vertex_count();
    let table = hochster_graded_with(complex, field, config)?;
    let mut out = vec![vec![0u64; n + 1]; n + 1];
    for (i, k, b) in table.entries() {
        if k > 0 {
            // r = k − i − 1 ≥ −1
            out[k][k - i] += b;
        }
    }
    Ok(out)
}

/// Betti numbers of the product `H₁⋯Hₜ` from the restrictions of the
/// factors' independence complexes:
/// `β_{i,j} = Σ_{V = ⊔Vₗ, |V| = j} Σ_{Σrₗ = j−i−(2t−1)} ∏ dim H̃_{rₗ}(Δ(Hₗ)_{Vₗ})`.
/// Every `Vₗ` is nonempty (otherwise `Δ_V` is a simplex) and `rₗ` starts at
/// `−1` so that factors with singleton edges are covered.
///
/// When every factor's table is linear, only `rₗ = aₗ − 2` contributes.
pub fn closed_betti_product(
    components: &[SimplicialComplex],
    field: FieldSpec,
    config: &SweepConfig,
) -> Result<BettiTable> {
    let tables = components
        .iter()
        .map(|c| hochster_graded_with(c, field, config))
        .collect::<Result<Vec<_>>>()?;
    match tables.iter().map(|t| t.linear_degree()).collect::<Option<Vec<usize>>>() {
        Some(a) => product_linear(components, &a, field, config),
        None => closed_betti_product_general(components, field, config),
    }
}

/// The product formula without the linear shortcut.
pub fn closed_betti_product_general(
    components: &[SimplicialComplex],
    field: FieldSpec,
    config: &SweepConfig,
) -> Result<BettiTable> {
    if components.is_empty() {
        return Err(Error::Input("a product needs at least one factor".into()));
    }
    let t = components.len();
    // acc[(size, Σ(r+1))]
    let mut acc: Vec<Vec<u64>> = vec![vec![1]];
    for c in components {
        let h = restriction_homology(c, field, config)?;
        let mut next = vec![vec![0u64; acc[0].len() + h[0].len() - 1]; acc.len() + h.len() - 1];
        for (k1, row1) in acc.iter().enumerate() {
            for (r1, &x) in row1.iter().enumerate().filter(|(_, &x)| x > 0) {
                for (k2, row2) in h.iter().enumerate().skip(1) {
                    for (r2, &y) in row2.iter().enumerate().filter(|(_, &y)| y > 0) {
                        next[k1 + k2][r1 + r2] += x * y;
                    }
                }
            }
        }
        acc = next;
    }
    let total: usize = components.iter().map(|c| c.vertex_count()).sum();
    let mut table = BettiTable::new(total, Some(field));
    for (j, row) in acc.iter().enumerate().skip(1) {
        for (shifted, &b) in row.iter().enumerate() {
            // Σrₗ = shifted − t = j − i − (2t − 1)
            let i = (j + 1) as isize - (shifted + t) as isize;
            if b > 0 && i >= 0 {
                table.add(i as usize, j, b);
            }
        }
    }
    Ok(table)
}

/// `β_{i,j} = Σ_{V = ⊔Vₗ, |V| = j} ∏ dim H̃_{aₗ−2}(Δ(Hₗ)_{Vₗ})`, nonzero only at
/// `j = i + Σaₗ − 1`.
fn product_linear(
    components: &[SimplicialComplex],
    a: &[usize],
    field: FieldSpec,
    config: &SweepConfig,
) -> Result<BettiTable> {
    let mut acc = vec![1u64];
    for (c, &al) in components.iter().zip(a) {
        let h = restriction_homology(c, field, config)?;
        // H̃_{a−2} sits at column a − 1 of the shifted table
        let layer: Vec<u64> = h.iter().enumerate().map(|(k, row)| if k == 0 { 0 } else { row[al - 1] }).collect();
        let mut next = vec![0u64; acc.len() + layer.len() - 1];
        for (x, &p) in acc.iter().enumerate() {
            for (y, &q) in layer.iter().enumerate() {
                next[x + y] += p * q;
            }
        }
        acc = next;
    }
    let total: usize = components.iter().map(|c| c.vertex_count()).sum();
    let d: usize = a.iter().sum();
    let mut table = BettiTable::new(total, Some(field));
    for (j, &b) in acc.iter().enumerate().skip(1) {
        if b > 0 && j + 1 >= d {
            table.add(j + 1 - d, j, b);
        }
    }
    Ok(table)
}

/// `Σ_{r=0}^{d−1} (−1)^{d−1−r} C(n, r)·C(n − r, j − r) = C(n, j)·C(j − 1, d − 1)`.
pub fn check_identity_a(n: usize, d: usize, j: usize) -> bool {
    let lhs: i128 = (0..d)
        .map(|r| {
            let sign = if (d - 1 - r) % 2 == 0 { 1 } else { -1 };
            sign * binom(n, r as isize) * binomial(n as i64 - r as i64, j as i64 - r as i64)
        })
        .sum();
    lhs == binom(n, j as isize) * binomial(j as i64 - 1, d as i64 - 1)
}

/// `Σ_{r=d}^{e} (−1)^{d−r} C(N − r, j − r)·Σₛ C(nₛ, r)` equals the
/// multipartite correction term at `j`, with `e = max(max nₛ, d − 1)`.
pub fn check_identity_b(n: &[usize], d: usize, j: usize) -> bool {
    let total: usize = n.iter().sum();
    let e = n.iter().copied().max().unwrap_or(0).max(d.saturating_sub(1));
    let lhs: i128 = (d..=e)
        .map(|r| {
            let sign = if (r - d) % 2 == 0 { 1 } else { -1 };
            let inner: i128 = n.iter().map(|&m| binom(m, r as isize)).sum();
            sign * binomial(total as i64 - r as i64, j as i64 - r as i64) * inner
        })
        .sum();
    let rhs = if d < 1 { 0 } else { multipartite_correction(n, d).get(j).copied().unwrap_or(0) };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::hochster_graded;

    fn labels(h: &Hypergraph) -> Vec<String> {
        h.edges().iter().map(|&e| h.universe().face_labels(e).concat()).collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn knd_edges() {
        assert_eq!(make_knd(4, 2).unwrap().edges().len(), 6);
        assert_eq!(make_knd(3, 3).unwrap().edges(), &[Face::full(3)]);
        assert!(make_knd(2, 3).unwrap().edges().is_empty());
    }

    #[test]
    fn multipartite_edges() {
        let h = make_multipartite(&[2, 3], 3).unwrap();
        let mut got = labels(&h);
        got.sort();
        let mut want: Vec<String> =
            ["abA", "abB", "abC", "aAB", "bAB", "aAC", "bAC", "aBC", "bBC"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(got, want);
        // small blocks make it the complete hypergraph
        assert_eq!(make_multipartite(&[2, 2, 1], 3).unwrap().edges(), make_knd(5, 3).unwrap().edges());
        assert_eq!(make_multipartite(&[2, 3], 2).unwrap().edges().len(), 6);
    }

    #[test]
    fn da_edges() {
        let h = make_da(&[3, 3, 3], &[1, 1, 3]).unwrap();
        assert_eq!(h.edges().len(), 9);
        assert!(labels(&h).contains(&"aAdef".to_string()));
        let k23 = make_da(&[2, 3], &[1, 1]).unwrap();
        assert_eq!(k23.edges(), make_multipartite(&[2, 3], 2).unwrap().edges());
        assert!(make_da(&[2, 2], &[3, 1]).unwrap().edges().is_empty());
        let prod = make_knd(3, 1).unwrap().product(&make_knd(3, 2).unwrap()).unwrap();
        assert_eq!(make_da(&[3, 3], &[1, 2]).unwrap().edges(), prod.edges());
    }

    #[test]
    fn interval_normalization() {
        let iv: IntervalSpec = "0:3,1,2:3".parse().unwrap();
        assert_eq!(iv.0, vec![(0, 3), (1, 1), (2, 3)]);
        let norm = normalize_intervals(&iv, &[3, 3, 3], 5).unwrap();
        assert_eq!(norm.0, vec![(1, 2), (1, 1), (2, 3)]);
        assert!(normalize_intervals_strict(&iv, &[3, 3, 3], 5).is_err());
        assert_eq!(normalize_intervals_strict(&norm, &[3, 3, 3], 5).unwrap(), norm);
        let tight: IntervalSpec = "1,1,3".parse().unwrap();
        assert_eq!(normalize_intervals(&tight, &[3, 3, 3], 5).unwrap(), tight);
        let bad: IntervalSpec = "2,2".parse().unwrap();
        assert!(matches!(normalize_intervals(&bad, &[3, 3], 5), Err(Error::InvalidIntervals(_))));
        let out_of_range: IntervalSpec = "0:4,1".parse().unwrap();
        assert!(normalize_intervals(&out_of_range, &[3, 3], 3).is_err());
    }

    #[test]
    fn d_i_edges() {
        let iv: IntervalSpec = "1:2,1,2:3".parse().unwrap();
        assert_eq!(make_d_i(&[3, 3, 3], 5, &iv).unwrap().edges().len(), 36);
        let full: IntervalSpec = "0:2,0:2".parse().unwrap();
        assert_eq!(make_d_i(&[2, 3], 3, &full).unwrap().edges(), make_multipartite(&[2, 3], 3).unwrap().edges());
        let single: IntervalSpec = "1,1,3".parse().unwrap();
        assert_eq!(make_d_i(&[3, 3, 3], 5, &single).unwrap().edges(), make_da(&[3, 3, 3], &[1, 1, 3]).unwrap().edges());
    }

    #[test]
    fn knd_formula() {
        let t = closed_betti_knd(4, 3).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 4), (2, 4, 3)]);
        let t = closed_betti_knd(5, 5).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 5, 1)]);
        for i in 1..6 {
            assert_eq!(closed_betti_knd(6, 2).unwrap().get(i, i + 1) as i128, binomial(6, i as i64 + 1) * i as i128);
        }
        assert_eq!(closed_betti_knd(2, 3).unwrap().totals(), vec![1]);
    }

    #[test]
    fn multipartite_formula() {
        assert_eq!(closed_betti_multipartite(&[2, 3], 3).unwrap().totals(), vec![1, 9, 13, 5]);
        // bipartite graphs
        let t = closed_betti_multipartite(&[3, 4], 2).unwrap();
        for i in 1..=6 {
            let j = i + 1;
            let want: i128 = (1..j).map(|p| binomial(3, p as i64) * binomial(4, (j - p) as i64)).sum();
            assert_eq!(t.get(i, j) as i128, want);
        }
        assert_eq!(closed_betti_multipartite(&[2, 1, 2], 3).unwrap(), closed_betti_knd(5, 3).unwrap());
        assert_eq!(closed_betti_multipartite(&[4], 2).unwrap().totals(), vec![1]);
    }

    #[test]
    fn da_formula() {
        assert_eq!(closed_betti_da(&[3, 3, 3], &[1, 1, 3]).unwrap().totals(), vec![1, 9, 18, 15, 6, 1]);
        let t = closed_betti_da(&[2, 3], &[1, 1]).unwrap();
        assert_eq!(t, closed_betti_multipartite(&[2, 3], 2).unwrap());
        assert_eq!(closed_betti_da(&[2, 2], &[1, 1]).unwrap().totals(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn product_formula() {
        let k22 = make_knd(2, 2).unwrap().independence_complex();
        let cfg = SweepConfig::default();
        let t = closed_betti_product(&[k22.clone(), k22.clone()], FieldSpec::GF2, &cfg).unwrap();
        assert!(t.same_numbers(&closed_betti_knd(4, 4).unwrap()));
        let k21 = make_knd(2, 1).unwrap().independence_complex();
        let t = closed_betti_product_general(&[k21.clone(), k21.clone()], FieldSpec::GF2, &cfg).unwrap();
        assert_eq!(t.totals(), vec![1, 4, 4, 1]);
        // a non-linear factor goes through the general formula
        let two_edges = Hypergraph::new(
            VertexUniverse::new(4).unwrap(),
            vec![Face::from_indices([0, 1]), Face::from_indices([2, 3])],
        )
        .unwrap();
        let direct = two_edges.product(&make_knd(2, 1).unwrap()).unwrap();
        let formula = closed_betti_product(&[two_edges.independence_complex(), k21], FieldSpec::GF2, &cfg).unwrap();
        assert_eq!(formula, hochster_graded(&direct.independence_complex(), FieldSpec::GF2).unwrap());
    }

    #[test]
    fn identities() {
        assert!(check_identity_a(5, 3, 4));
        assert!(check_identity_a(7, 4, 4));
        assert!(check_identity_b(&[2, 3], 3, 3));
        assert!(check_identity_b(&[2, 3], 3, 2));
        assert!(check_identity_b(&[3, 3, 2], 4, 6));
    }

    #[test]
    fn cm_predictions() {
        assert_eq!(FamilySpec::multipartite(&[2, 2], 3).cm_prediction().unwrap(), Some(true));
        assert_eq!(FamilySpec::multipartite(&[2, 3], 3).cm_prediction().unwrap(), Some(false));
        assert_eq!(FamilySpec::da(&[2, 3], &[2, 3]).cm_prediction().unwrap(), Some(true));
        assert_eq!(FamilySpec::da(&[2, 3], &[1, 3]).cm_prediction().unwrap(), Some(false));
        assert_eq!(FamilySpec::da(&[4], &[2]).cm_prediction().unwrap(), Some(true));
    }

    #[test]
    fn family_spec_json() {
        let spec = FamilySpec::d_i(&[3, 3, 3], 5, "1:2,1,2:3".parse().unwrap());
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"kind":"dI","n":[3,3,3],"d":5,"intervals":[[1,2],[1,1],[2,3]]}"#);
        let back: FamilySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let da: FamilySpec = serde_json::from_str(r#"{"kind":"da","n":[3,3,3],"a":[1,1,3]}"#).unwrap();
        assert_eq!(da.degree().unwrap(), 5);
        assert_eq!(da.hypergraph(false).unwrap().edges().len(), 9);
        assert!(FamilySpec::knd(3, 2).closed_betti().is_ok());
    }
}
