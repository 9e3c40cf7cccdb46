//! Full instance report: every check the library knows how to run, with a
//! pass/fail entry per check.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::cohomology::{basis, classes_supported_on, expected_dimension};
use crate::error::{GkmError, Result};
use crate::geometry::{is_boundary_by_hull, is_interior_vertex, sign_witnesses, SignWitness};
use crate::graph::{GkmGraph, OrientedGkmGraph, ValidationReport};
use crate::lefschetz::{ColumnWitness, LefschetzContext, LefschetzReport, TypeGWitness};
use crate::polyring::{format_rational, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum XiSource {
    Document,
    Override,
    Search,
}

/// Candidate covectors tried when none is given, in order.
pub fn xi_candidates(rank: usize) -> Vec<WeightVector> {
    let mut out = Vec::new();
    if rank == 2 {
        for n in 3i64..=12 {
            let mut round = Vec::new();
            for a in 1..=n {
                for b in 1..=n {
                    let fresh = if n == 3 { a.max(b) <= 3 } else { a.max(b) == n };
                    if a != b && fresh && a.gcd(&b) == 1 {
                        round.push((a, b));
                    }
                }
            }
            let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
            for (sa, sb) in signs {
                for &(a, b) in &round {
                    out.push(WeightVector::from_ints(&[sa * a, sb * b]));
                }
            }
        }
    } else {
        for t in 2i64..=40 {
            let mut comps = Vec::with_capacity(rank);
            let mut power = 1i64;
            for _ in 0..rank {
                comps.push(power);
                power = power.saturating_mul(t);
            }
            out.push(WeightVector::from_ints(&comps));
        }
    }
    out
}

/// First candidate that is generic and index-increasing.
pub fn search_xi(g: &GkmGraph) -> Result<WeightVector> {
    xi_candidates(g.rank())
        .into_iter()
        .find(|xi| g.orient(xi).map(|og| og.is_index_increasing()).unwrap_or(false))
        .ok_or_else(|| GkmError::NotGeneric("no generic index-increasing covector among the candidates".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub id: String,
    pub mu: String,
    /// Number of distinct heights ⟨μ, ξ⟩ strictly below this vertex.
    pub level: usize,
    pub down_degree: usize,
    pub morse_index: usize,
    pub interior: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub xi: Vec<String>,
    pub xi_source: XiSource,
    pub validation: ValidationReport,
    pub index_increasing: bool,
    pub vertices: Vec<VertexRow>,
    pub betti: Vec<usize>,
    pub lefschetz: Option<LefschetzReport>,
    pub sign_conditions: Vec<SignWitness>,
    pub column_independence: Option<ColumnWitness>,
    pub type_g: Option<TypeGWitness>,
    pub assertions: Vec<Assertion>,
    pub ok: bool,
}

struct Collector(Vec<Assertion>);

impl Collector {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Assertion {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn result<T>(&mut self, name: &str, r: Result<T>, ok_detail: impl FnOnce(&T) -> String) -> Option<T> {
        match r {
            Ok(v) => {
                let d = ok_detail(&v);
                self.push(name, true, d);
                Some(v)
            }
            Err(e) => {
                self.push(name, false, e.to_string());
                None
            }
        }
    }
}

/// Picks ξ (explicit override, then the document's, then the search) and
/// orients. Orientation failures are errors: nothing else can run without it.
pub fn orient_for_report(
    g: &GkmGraph,
    document_xi: Option<WeightVector>,
    override_xi: Option<WeightVector>,
) -> Result<(OrientedGkmGraph, XiSource)> {
    let (xi, source) = match (override_xi, document_xi) {
        (Some(x), _) => (x, XiSource::Override),
        (None, Some(x)) => (x, XiSource::Document),
        (None, None) => (search_xi(g)?, XiSource::Search),
    };
    Ok((g.orient(&xi)?, source))
}

/// Runs every check on an oriented graph.
pub fn build_report(og: &OrientedGkmGraph, xi_source: XiSource) -> Report {
    let g = og.graph();
    let mut checks = Collector(Vec::new());

    let validation = g.validate();
    checks.push("validation", validation.is_valid(), if validation.is_valid() {
        "all axioms hold".to_string()
    } else {
        validation.to_string()
    });

    let index_increasing = og.is_index_increasing();
    checks.push(
        "index increasing",
        index_increasing,
        match og.index_violation() {
            None => "every edge raises the index".to_string(),
            Some(e) => format!("edge {} does not raise the index", g.edge_label(e)),
        },
    );

    let profile = og.morse_profile();
    let heights: BTreeSet<_> = (0..g.vertex_count()).map(|v| og.height(v).clone()).collect();
    let vertices: Vec<VertexRow> = (0..g.vertex_count())
        .map(|v| VertexRow {
            id: g.id(v).to_string(),
            mu: g.mu(v).to_string(),
            level: heights.range(..og.height(v).clone()).count(),
            down_degree: og.down_degree(v),
            morse_index: og.morse_index(v),
            interior: is_interior_vertex(g, v),
        })
        .collect();

    let mut report = Report {
        xi: og.xi().components().iter().map(format_rational).collect(),
        xi_source,
        validation: validation.clone(),
        index_increasing,
        vertices,
        betti: profile.betti.clone(),
        lefschetz: None,
        sign_conditions: Vec::new(),
        column_independence: None,
        type_g: None,
        assertions: Vec::new(),
        ok: false,
    };

    if validation.is_valid() && index_increasing {
        run_checks(og, &mut checks, &mut report);
    }

    report.ok = checks.0.iter().all(|a| a.passed);
    report.assertions = checks.0;
    report
}

fn run_checks(og: &OrientedGkmGraph, checks: &mut Collector, report: &mut Report) {
    let g = og.graph();
    let n = og.valence();
    let six_dim = og.require_six_dim().is_ok();

    if six_dim {
        checks.result("six-dimensional structure", og.check_six_dim_structure(), |_| {
            "at most eight vertices; index-two vertices meet o, index-four vertices meet r".into()
        });
        let half = og.morse_profile().half_count_check == Some(true);
        checks.push(
            "index-two count",
            half,
            format!("b_2 = {}, |V|/2 - 1 = {}", report.betti[1], g.vertex_count() as i64 / 2 - 1),
        );
    }

    let integ = crate::localization::Integrator::new(g);
    let mut dims = Vec::new();
    let mut dims_ok = true;
    for d in 0..=n + 1 {
        match basis(g, d) {
            Ok(b) => {
                let expected = expected_dimension(og, d);
                dims_ok &= b.len() == expected;
                dims.push(format!("d={d}: {} (expected {expected})", b.len()));
                if d < n {
                    if let Some(f) = b.iter().find(|f| integ.integrate_low_degree_zero(f).is_err()) {
                        checks.push(
                            "localization vanishing",
                            false,
                            format!("degree {d} class {:?} has a nonzero numerator", f.to_map()),
                        );
                    }
                }
            }
            Err(e) => {
                dims_ok = false;
                dims.push(format!("d={d}: {e}"));
            }
        }
    }
    checks.push("dimension count", dims_ok, dims.join(", "));
    if !checks.0.iter().any(|a| a.name == "localization vanishing") {
        checks.push("localization vanishing", true, format!("every basis class of degree below {n}"));
    }

    if six_dim {
        let mut single = Vec::new();
        for v in 0..g.vertex_count() {
            match classes_supported_on(g, 2, &BTreeSet::from([v])) {
                Ok(b) if !b.is_empty() => single.push(g.id(v).to_string()),
                Ok(_) => {}
                Err(e) => single.push(format!("{}: {e}", g.id(v))),
            }
        }
        checks.push(
            "no single-vertex degree-2 classes",
            single.is_empty(),
            if single.is_empty() {
                "every such class vanishes".to_string()
            } else {
                format!("nonzero classes at {}", single.join(", "))
            },
        );

        let mismatched: Vec<&str> = (0..g.vertex_count())
            .filter(|&v| is_interior_vertex(g, v) == is_boundary_by_hull(g, v))
            .map(|v| g.id(v))
            .collect();
        checks.push(
            "interior by weights matches hull",
            mismatched.is_empty(),
            if mismatched.is_empty() {
                "weight cone and hull agree at every vertex".to_string()
            } else {
                format!("disagreement at {}", mismatched.join(", "))
            },
        );
    }

    let ctx = match LefschetzContext::new(og) {
        Ok(ctx) => ctx,
        Err(e) => {
            checks.push("Thom classes", false, e.to_string());
            return;
        }
    };
    checks.push("Thom classes", true, "unique class at every vertex, both directions");
    checks.result(
        "Kronecker pairing",
        ctx.kronecker_defect().and_then(|d| match d {
            None => Ok(()),
            Some(msg) => Err(GkmError::Mismatch(msg)),
        }),
        |_| "∫ τ_v^+ τ_w^- is the identity on equal indices".into(),
    );

    if !six_dim {
        let hl = checks.result("hard Lefschetz", ctx.hard_lefschetz(), |v| {
            format!("{} degrees checked", v.len())
        });
        if let Some(hl) = hl {
            if !hl.iter().all(|v| v.nonsingular) {
                checks.push("hard Lefschetz", false, "a pairing is singular");
            }
        }
        return;
    }

    let Some(lr) = checks.result("coefficient identity", ctx.report(), |r| {
        format!("a = -c*l on {} pairs, routes agree, a nonzero exactly on edges", r.pairs.len())
    }) else {
        return;
    };

    checks.push(
        "table type",
        lr.table_type.is_some(),
        match (&lr.table_type, &lr.table_error) {
            (Some(t), _) => format!("({t})"),
            (None, Some(e)) => e.clone(),
            (None, None) => String::new(),
        },
    );

    match sign_witnesses(&ctx) {
        Ok(ws) => {
            let failed: Vec<String> = ws
                .iter()
                .filter(|w| !w.holds)
                .map(|w| format!("{:?} at {}{}", w.rule, w.p, w.q.as_ref().map(|q| format!("/{q}")).unwrap_or_default()))
                .collect();
            checks.push(
                "sign conditions",
                failed.is_empty(),
                if failed.is_empty() {
                    format!("{} checks", ws.len())
                } else {
                    failed.join(", ")
                },
            );
            report.sign_conditions = ws;
        }
        Err(e) => checks.push("sign conditions", false, e.to_string()),
    }

    match lr.table_type {
        Some('d') | Some('f') => {
            report.column_independence = checks.result("column independence", ctx.check_column_independence(), |w| {
                format!("t0 = {}, second entry {}", format_rational(&w.t0), format_rational(&w.second))
            });
        }
        Some('g') => {
            report.type_g = checks.result("determinant sign pattern", ctx.check_type_g_pattern(), |w| {
                format!("det = {}", format_rational(&w.permuted_determinant))
            });
        }
        _ => {}
    }

    let failing: Vec<String> = lr
        .hr
        .iter()
        .filter(|v| !v.nonsingular)
        .map(|v| format!("k={}", v.k))
        .collect();
    checks.push(
        "hard Lefschetz",
        lr.holds,
        if lr.holds {
            lr.hr
                .iter()
                .filter_map(|v| v.determinant.as_ref().map(|d| format!("det HR_{} = {d}", v.k)))
                .collect::<Vec<_>>()
                .join(", ")
        } else {
            format!("singular at {}", failing.join(", "))
        },
    );
    report.lefschetz = Some(lr);
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "xi = ({}) [{:?}]", self.xi.join(", "), self.xi_source);
        let _ = writeln!(s, "\nvertices");
        for v in &self.vertices {
            let _ = writeln!(
                s,
                "  {:<8} mu = {:<14} level {:<3} d = {}  index {}  {}",
                v.id,
                v.mu,
                v.level,
                v.down_degree,
                v.morse_index,
                if v.interior { "interior" } else { "boundary" }
            );
        }
        let betti: Vec<String> = self
            .betti
            .iter()
            .enumerate()
            .map(|(i, b)| format!("b{}={b}", 2 * i))
            .collect();
        let _ = writeln!(s, "betti: {}", betti.join(" "));
        if let Some(lr) = &self.lefschetz {
            let _ = writeln!(
                s,
                "\ntable type: {}",
                lr.table_type.map(|t| format!("({t})")).unwrap_or_else(|| "none".into())
            );
            let c = &lr.table_criteria;
            let _ = writeln!(
                s,
                "  hull vertices {}, fixed points {}, o adjacent to r: {}, tetragonal cycles {}",
                c.hull_shape,
                c.vertex_count,
                if c.o_adjacent_r { "yes" } else { "no" },
                c.tetragonal_cycle_count
            );
            let _ = writeln!(s, "\nascending cycles");
            for cy in &lr.cycles {
                let _ = writeln!(
                    s,
                    "  {:<8} [{}] {:?}{}",
                    cy.start,
                    cy.vertices.join(" "),
                    cy.kind,
                    cy.tetragon.map(|t| format!(" {t}")).unwrap_or_default()
                );
            }
            let _ = writeln!(s, "\n  {:<8} {:<8} {:>8} {:>8} {:>8}", "p", "q", "l", "c", "a");
            for p in &lr.pairs {
                let _ = writeln!(
                    s,
                    "  {:<8} {:<8} {:>8} {:>8} {:>8}",
                    p.p,
                    p.q,
                    format_rational(&p.l),
                    format_rational(&p.c),
                    format_rational(&p.a)
                );
            }
            let _ = writeln!(s, "\na-matrix (rows {}, columns {})", lr.a_matrix.rows.join(" "), lr.a_matrix.cols.join(" "));
            for row in &lr.a_matrix.entries {
                let cells: Vec<String> = row.iter().map(|q| format!("{:>8}", format_rational(q))).collect();
                let _ = writeln!(s, "  {}", cells.join(""));
            }
            let _ = writeln!(s, "  det = {}", format_rational(&lr.a_matrix.determinant));
            let _ = writeln!(s, "\nHodge-Riemann pairings");
            for v in &lr.hr {
                match &v.determinant {
                    Some(d) => {
                        let _ = writeln!(s, "  k={} dim {} det {} {}", v.k, v.dimension, d, if v.nonsingular { "ok" } else { "SINGULAR" });
                    }
                    None => {
                        let _ = writeln!(s, "  k={} trivial", v.k);
                    }
                }
            }
            let _ = writeln!(s, "hard Lefschetz: {}", if lr.holds { "holds" } else { "FAILS" });
        }
        let _ = writeln!(s, "\nchecks");
        for a in &self.assertions {
            let _ = writeln!(s, "  [{}] {:<34} {}", if a.passed { "pass" } else { "FAIL" }, a.name, a.detail);
        }
        let _ = writeln!(s, "\n{}", if self.ok { "all checks passed" } else { "some checks FAILED" });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn candidate_order_starts_as_documented() {
        let c = xi_candidates(2);
        let first: Vec<WeightVector> = [[1, 2], [1, 3], [2, 1], [2, 3], [3, 1], [3, 2]]
            .iter()
            .map(|p| WeightVector::from_ints(p))
            .collect();
        assert_eq!(&c[..6], first.as_slice());
        assert_eq!(c[6], WeightVector::from_ints(&[1, -2]));
        let distinct: BTreeSet<String> = c.iter().map(|w| w.to_string()).collect();
        assert_eq!(distinct.len(), c.len());
    }

    #[test]
    fn search_finds_a_covector_for_every_instance() {
        for inst in corpus::instances() {
            let g = inst.graph().unwrap();
            let xi = search_xi(&g).unwrap();
            assert!(g.orient(&xi).unwrap().is_index_increasing(), "{}", inst.name);
        }
    }

    #[test]
    fn cp3_report_passes() {
        let g = corpus::graph("cp3-k4").unwrap();
        let (og, source) = orient_for_report(&g, Some(WeightVector::from_ints(&[1, 3])), None).unwrap();
        assert_eq!(source, XiSource::Document);
        let r = build_report(&og, source);
        assert!(r.ok, "{}", r.to_text());
        assert_eq!(r.lefschetz.as_ref().unwrap().table_type, Some('a'));
        assert!(r.to_json().contains("\"table_type\": \"a\""));
    }

    #[test]
    fn orthogonal_override_is_rejected() {
        let g = corpus::graph("cp3-k4").unwrap();
        let err = orient_for_report(&g, None, Some(WeightVector::from_ints(&[0, 1]))).unwrap_err();
        assert!(matches!(err, GkmError::NotGeneric(_)));
    }
}
