//! Cross-checks for a family instance: Hochster over several fields, the
//! closed form, the f-vector route, ring statistics and the dual.

use std::fmt::Write as _;

use serde::Serialize;

use crate::betti::{
    betti_from_fvector_linear, depth_via_ab, has_linear_resolution, hochster_graded_with, krull_dimension,
    projective_dimension, BettiTable, SweepConfig,
};
use crate::error::Result;
use crate::families::{FamilyKind, FamilySpec};
use crate::field::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub family: FamilySpec,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
        }
        let _ = writeln!(out, "{}", if self.pass { "all checks passed" } else { "verification FAILED" });
        out
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    fn tables(&mut self, name: &str, got: &BettiTable, want: &BettiTable) {
        let pass = got.same_numbers(want);
        let detail = if pass {
            format!("totals {:?}", got.totals())
        } else {
            format!("got {:?}, expected {:?}", entries(got), entries(want))
        };
        self.push(name, pass, detail);
    }
}

fn entries(t: &BettiTable) -> Vec<(usize, usize, u64)> {
    t.entries().collect()
}

pub struct VerifyOptions<'a> {
    pub fields: Vec<FieldSpec>,
    pub config: SweepConfig,
    pub strict_intervals: bool,
    /// A table the Hochster result must reproduce.
    pub expected: Option<&'a BettiTable>,
}

impl Default for VerifyOptions<'_> {
    fn default() -> Self {
        VerifyOptions {
            fields: vec![FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational],
            config: SweepConfig::default(),
            strict_intervals: false,
            expected: None,
        }
    }
}

pub fn verify_family(spec: &FamilySpec, opts: &VerifyOptions) -> Result<VerifyReport> {
    let h = spec.hypergraph(opts.strict_intervals)?;
    let d = spec.degree()?;
    let n = spec.vertex_count();
    let cx = h.independence_complex();
    let mut checks = Checks::default();

    let fields = if opts.fields.is_empty() { vec![FieldSpec::GF2] } else { opts.fields.clone() };
    let tables = fields
        .iter()
        .map(|&f| hochster_graded_with(&cx, f, &opts.config))
        .collect::<Result<Vec<_>>>()?;
    let base = &tables[0];
    checks.push("hochster", true, format!("{} over {}: totals {:?}", spec.kind, fields[0], base.totals()));
    for (f, t) in fields.iter().zip(&tables).skip(1) {
        checks.tables(&format!("field {} vs {}", f, fields[0]), t, base);
    }

    if spec.kind != FamilyKind::DI {
        checks.tables("closed form", &spec.closed_betti()?, base);
    }
    match betti_from_fvector_linear(&cx, d) {
        Ok(t) => checks.tables("f-vector route", &t, base),
        Err(e) => checks.push("f-vector route", false, e.to_string()),
    }
    checks.push(
        "linear resolution",
        has_linear_resolution(base, d),
        format!("entries at j = i + {}", d - 1),
    );

    let pd = projective_dimension(base);
    let predicted = spec.predicted_pd()?;
    checks.push("projective dimension", pd == predicted, format!("pd = {pd}, predicted {predicted}"));

    let depth = depth_via_ab(n, pd)?;
    let krull = krull_dimension(&cx)?;
    let cm = depth == krull;
    match spec.cm_prediction()? {
        Some(p) => checks.push(
            "Cohen-Macaulay",
            p == cm,
            format!("depth {depth}, dim {krull}, predicted {}", if p { "CM" } else { "not CM" }),
        ),
        None => checks.push("Cohen-Macaulay", true, format!("depth {depth}, dim {krull}, no prediction")),
    }

    if !h.edges().is_empty() {
        let dual = cx.alexander_dual();
        let dual_dim = dual.dimension().finite().unwrap_or(-2);
        let want_dim = n as isize - d as isize - 1;
        checks.push("dual dimension", dual_dim == want_dim, format!("dim {dual_dim}, expected {want_dim}"));
        let dual_table = hochster_graded_with(&dual, fields[0], &opts.config)?;
        let dual_pd = projective_dimension(&dual_table);
        checks.push("dual projective dimension", dual_pd == d, format!("pd {dual_pd}, expected {d}"));
        let dual_krull = krull_dimension(&dual)?;
        let dual_depth = depth_via_ab(n, dual_pd)?;
        checks.push(
            "dual Cohen-Macaulay",
            dual_krull == n - d && dual_depth == dual_krull,
            format!("depth {dual_depth}, dim {dual_krull}, expected {}", n - d),
        );
    }

    if let Some(expected) = opts.expected {
        checks.tables("expected table", base, expected);
    }

    let pass = checks.0.iter().all(|c| c.pass);
    Ok(VerifyReport { family: spec.clone(), checks: checks.0, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::closed_betti_knd;

    #[test]
    fn example_families_pass() {
        for spec in [
            FamilySpec::knd(6, 3),
            FamilySpec::multipartite(&[2, 3], 3),
            FamilySpec::multipartite(&[4], 2),
            FamilySpec::da(&[3, 3, 3], &[1, 1, 3]),
            FamilySpec::d_i(&[3, 3, 3], 5, "1:2,1,2:3".parse().unwrap()),
        ] {
            let report = verify_family(&spec, &VerifyOptions::default()).unwrap();
            assert!(report.pass, "{}", report.to_text());
        }
    }

    #[test]
    fn corrupted_expectation_fails() {
        let mut bad = closed_betti_knd(5, 3).unwrap();
        bad.add(1, 3, 1);
        let opts = VerifyOptions { expected: Some(&bad), ..Default::default() };
        let report = verify_family(&FamilySpec::knd(5, 3), &opts).unwrap();
        assert!(!report.pass);
        assert_eq!(report.checks.iter().filter(|c| !c.pass).count(), 1);
    }
}
