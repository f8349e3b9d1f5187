//! Text and JSON formats for complexes, hypergraphs and Betti tables.
//!
//! ```text
//! # K_{2,3}^3
//! vertices: a b | A B C
//! edge: a b A
//! edge: a A B
//! ```
//!
//! Complex files use `facet:` lines instead of `edge:` lines. A complex
//! without facet lines is `{∅}`; the single line `void` gives the void
//! complex. Vertex bits follow declaration order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::betti::{projective_dimension, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexUniverse};
use crate::hypergraph::Hypergraph;

struct Parsed {
    universe: VertexUniverse,
    faces: Vec<Face>,
    void: bool,
}

fn parse_universe(rest: &str) -> Result<VertexUniverse> {
    let blocks: Vec<Vec<String>> = rest
        .split('|')
        .map(|b| b.split_whitespace().map(str::to_string).collect())
        .collect();
    if blocks.len() == 1 {
        return VertexUniverse::from_parts(blocks.into_iter().next().unwrap(), None);
    }
    let mut labels = Vec::new();
    let mut partition = Vec::new();
    for b in blocks {
        partition.push(Face::full(b.len()).shifted(labels.len()));
        labels.extend(b);
    }
    VertexUniverse::from_parts(labels, Some(partition))
}

fn parse_lines(text: &str, keyword: &str) -> Result<Parsed> {
    let mut universe: Option<VertexUniverse> = None;
    let mut faces = Vec::new();
    let mut void = false;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(':').map_or((line, ""), |(h, r)| (h.trim(), r));
        match (head, &universe) {
            ("vertices", None) => {
                universe = Some(parse_universe(rest).map_err(|e| err(e.to_string()))?);
            }
            ("vertices", Some(_)) => return Err(err("repeated vertices line".into())),
            (_, None) => return Err(err("expected a `vertices:` line first".into())),
            ("void", Some(_)) if keyword == "facet" && rest.trim().is_empty() => void = true,
            (h, Some(u)) if h == keyword => {
                faces.push(u.parse_face(rest.split_whitespace()).map_err(|e| err(e.to_string()))?);
            }
            (h, _) => return Err(err(format!("unexpected `{h}` line"))),
        }
    }
    let universe = universe.ok_or(Error::Parse { line: 0, msg: "missing `vertices:` line".into() })?;
    if void && !faces.is_empty() {
        return Err(Error::Parse { line: 0, msg: "a void complex has no facets".into() });
    }
    Ok(Parsed { universe, faces, void })
}

fn write_universe(out: &mut String, u: &VertexUniverse) {
    let blocks: Vec<String> = u.blocks().iter().map(|&b| u.face_labels(b).join(" ")).collect();
    let _ = writeln!(out, "vertices: {}", blocks.join(" | ").trim_end());
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let p = parse_lines(text, "facet")?;
    if p.void {
        return Ok(SimplicialComplex::void(p.universe));
    }
    SimplicialComplex::from_facets(p.universe, p.faces)
}

pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    write_universe(&mut out, complex.universe());
    if complex.is_void() {
        out.push_str("void\n");
    }
    for &f in complex.facets() {
        // a bare `facet:` line is the empty face
        let labels = complex.universe().face_labels(f);
        let _ = writeln!(out, "facet:{}", labels.iter().map(|l| format!(" {l}")).collect::<String>());
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let p = parse_lines(text, "edge")?;
    Hypergraph::new(p.universe, p.faces)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    write_universe(&mut out, h.universe());
    for &e in h.edges() {
        let _ = writeln!(out, "edge: {}", h.universe().face_labels(e).join(" "));
    }
    out
}

/// JSON mirror of the text formats: vertex labels per block, and faces as
/// label lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<Vec<String>>,
    /// `[]` is the void complex, `[[]]` is `{∅}`.
    pub facets: Vec<Vec<String>>,
}

fn block_labels(u: &VertexUniverse) -> Vec<Vec<String>> {
    let blocks = u.blocks();
    if blocks.is_empty() {
        return vec![Vec::new()];
    }
    blocks.iter().map(|&b| u.face_labels(b).into_iter().map(str::to_string).collect()).collect()
}

fn universe_from_blocks(blocks: &[Vec<String>]) -> Result<VertexUniverse> {
    let text = blocks.iter().map(|b| b.join(" ")).collect::<Vec<_>>().join(" | ");
    parse_universe(&text)
}

fn face_labels(u: &VertexUniverse, faces: &[Face]) -> Vec<Vec<String>> {
    faces.iter().map(|&f| u.face_labels(f).into_iter().map(str::to_string).collect()).collect()
}

fn parse_faces(u: &VertexUniverse, faces: &[Vec<String>]) -> Result<Vec<Face>> {
    faces.iter().map(|f| u.parse_face(f.iter().map(String::as_str))).collect()
}

impl HypergraphJson {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphJson { vertices: block_labels(h.universe()), edges: face_labels(h.universe(), h.edges()) }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let u = universe_from_blocks(&self.vertices)?;
        let edges = parse_faces(&u, &self.edges)?;
        Hypergraph::new(u, edges)
    }
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        ComplexJson { vertices: block_labels(c.universe()), facets: face_labels(c.universe(), c.facets()) }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let u = universe_from_blocks(&self.vertices)?;
        if self.facets.is_empty() {
            return Ok(SimplicialComplex::void(u));
        }
        let facets = parse_faces(&u, &self.facets)?;
        SimplicialComplex::from_facets(u, facets)
    }
}

/// Betti diagram with rows `j − i` and columns `i`, zeros shown as `.`.
pub fn betti_text(table: &BettiTable) -> String {
    let pd = projective_dimension(table);
    let rows = table.entries().map(|(i, j, _)| j.saturating_sub(i)).max().unwrap_or(0);
    let totals = table.totals();
    let cell = |i: usize, row: usize| match table.get(i, i + row) {
        0 => ".".to_string(),
        b => b.to_string(),
    };
    let widths: Vec<usize> = (0..=pd)
        .map(|i| {
            let w = (0..=rows).map(|r| cell(i, r).len()).max().unwrap_or(1);
            w.max(totals[i].to_string().len()).max(i.to_string().len())
        })
        .collect();
    let label_width = "total:".len().max(format!("{rows}:").len());
    let mut out = String::new();
    let line = |out: &mut String, label: &str, cells: Vec<String>| {
        let _ = write!(out, "{label:>label_width$}");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(out, " {c:>w$}");
        }
        out.push('\n');
    };
    line(&mut out, "", (0..=pd).map(|i| i.to_string()).collect());
    line(&mut out, "total:", totals.iter().map(|t| t.to_string()).collect());
    for r in 0..=rows {
        line(&mut out, &format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect());
    }
    out
}

/// Reads a table in the JSON shape written for [`BettiTable`]. Only `n`,
/// `field` and `entries` are read; derived fields are ignored.
pub fn parse_betti_json(text: &str) -> Result<BettiTable> {
    #[derive(Deserialize)]
    struct Entry {
        i: usize,
        j: usize,
        beta: u64,
    }
    #[derive(Deserialize)]
    struct Table {
        n: usize,
        #[serde(default)]
        field: Option<String>,
        entries: Vec<Entry>,
    }
    let t: Table = serde_json::from_str(text).map_err(|e| Error::Input(format!("bad Betti table JSON: {e}")))?;
    let field = t.field.map(|f| f.parse()).transpose()?;
    let mut table = BettiTable::new(t.n, field);
    let mut seen_origin = false;
    for e in t.entries {
        if (e.i, e.j) == (0, 0) {
            seen_origin = true;
            if e.beta != 1 {
                return Err(Error::Input("β₀,₀ must be 1".into()));
            }
            continue;
        }
        table.add(e.i, e.j, e.beta);
    }
    if !seen_origin {
        return Err(Error::Input("table lacks β₀,₀".into()));
    }
    Ok(table)
}

/// `i,j,beta` rows with a header.
pub fn betti_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,j,beta\n");
    for (i, j, b) in table.entries() {
        let _ = writeln!(out, "{i},{j},{b}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::hochster_graded;
    use crate::families::make_multipartite;
    use crate::field::FieldSpec;

    #[test]
    fn hypergraph_round_trip() {
        let h = make_multipartite(&[2, 3], 3).unwrap();
        let text = write_hypergraph(&h);
        assert!(text.starts_with("vertices: a b | A B C\n"));
        assert!(text.contains("edge: a b A\n"));
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(HypergraphJson::from_hypergraph(&h).to_hypergraph().unwrap(), h);
    }

    #[test]
    fn complex_round_trip() {
        let text = "# circle\nvertices: x y z\nfacet: x y\nfacet: y z\nfacet: x z\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.universe().partition(), None);
        assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        let empty = parse_complex("vertices: a b\n").unwrap();
        assert!(empty.is_empty_complex());
        assert_eq!(parse_complex(&write_complex(&empty)).unwrap(), empty);
        let void = parse_complex("vertices: a b\nvoid\n").unwrap();
        assert!(void.is_void());
        assert_eq!(parse_complex(&write_complex(&void)).unwrap(), void);
        for c in [&c, &empty, &void] {
            assert_eq!(ComplexJson::from_complex(c).to_complex().unwrap(), *c);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_complex("facet: a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("vertices: a b\nfacet: c\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_complex("vertices: a a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hypergraph("vertices: a\nfacet: a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_hypergraph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn diagram() {
        let h = make_multipartite(&[2, 3], 3).unwrap();
        let t = hochster_graded(&h.independence_complex(), FieldSpec::GF2).unwrap();
        let want = "       0 1  2 3\ntotal: 1 9 13 5\n    0: 1 .  . .\n    1: . .  . .\n    2: . 9 13 5\n";
        assert_eq!(betti_text(&t), want);
        assert_eq!(betti_csv(&t), "i,j,beta\n0,0,1\n1,3,9\n2,4,13\n3,5,5\n");
        let back = parse_betti_json(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        assert!(parse_betti_json(r#"{"n":2,"entries":[]}"#).is_err());
    }
}
