//! Planar geometry of moment images: side tests, tetragon shapes, convex
//! hulls, interior vertices and the seven-row classification of
//! six-dimensional index-increasing moment graphs.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{GkmError, Result};
use crate::graph::{GkmGraph, OrientedGkmGraph};
use crate::lefschetz::LefschetzContext;
use crate::polyring::{Rational, WeightVector};

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn perp(w: &WeightVector) -> WeightVector {
    let c = w.components();
    WeightVector::new(vec![-c[1].clone(), c[0].clone()])
}

/// Orientation of the triple `a, b, c`: cross(b - a, c - b).
pub fn turn(a: &WeightVector, b: &WeightVector, c: &WeightVector) -> Rational {
    (b - a).cross(&(c - b))
}

/// Whether `a` and `b` lie in the same closed half-plane cut out by the line
/// through the origin spanned by `line_dir`.
pub fn same_side(a: &WeightVector, b: &WeightVector, line_dir: &WeightVector) -> bool {
    let v0 = perp(line_dir);
    sign(&a.dot(&v0)) * sign(&b.dot(&v0)) >= 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TetragonClass {
    Convex,
    Concave,
    Crossed,
}

impl fmt::Display for TetragonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TetragonClass::Convex => "convex",
            TetragonClass::Concave => "concave",
            TetragonClass::Crossed => "crossed",
        })
    }
}

/// Shape of the closed polygon A→B→C→D→A from the signs of its four turns:
/// all equal is convex, three against one is concave, two against two is
/// crossed.
pub fn classify_tetragon(pts: [&WeightVector; 4]) -> Result<TetragonClass> {
    let mut pos = 0;
    let mut neg = 0;
    for i in 0..4 {
        match sign(&turn(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4])) {
            1 => pos += 1,
            -1 => neg += 1,
            _ => {
                return Err(GkmError::Degenerate(format!(
                    "points {}, {}, {} are collinear",
                    pts[i],
                    pts[(i + 1) % 4],
                    pts[(i + 2) % 4]
                )))
            }
        }
    }
    Ok(match pos.max(neg) {
        4 => TetragonClass::Convex,
        3 => TetragonClass::Concave,
        _ => TetragonClass::Crossed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    Triangular,
    Tetragonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleShape {
    pub start: String,
    pub vertices: Vec<String>,
    pub kind: CycleKind,
    pub tetragon: Option<TetragonClass>,
}

pub fn cycle_shape(og: &OrientedGkmGraph, p: usize) -> Result<CycleShape> {
    let cycle = og.ascending_cycle(p)?;
    let g = og.graph();
    let (kind, tetragon) = if cycle.len() == 3 {
        (CycleKind::Triangular, None)
    } else {
        let pts = [g.mu(cycle[0]), g.mu(cycle[1]), g.mu(cycle[2]), g.mu(cycle[3])];
        (CycleKind::Tetragonal, Some(classify_tetragon(pts)?))
    };
    Ok(CycleShape {
        start: g.id(p).to_string(),
        vertices: cycle.iter().map(|&v| g.id(v).to_string()).collect(),
        kind,
        tetragon,
    })
}

/// Ascending cycles of every index-two vertex, ordered like the vertices.
pub fn cycle_shapes(og: &OrientedGkmGraph) -> Result<Vec<CycleShape>> {
    og.vertices_of_degree(1)
        .into_iter()
        .map(|p| cycle_shape(og, p))
        .collect()
}

/// Indices of the extreme points of the convex hull, counterclockwise,
/// starting from the lowest-then-leftmost point. Points on hull edges are
/// not included.
pub fn convex_hull(points: &[WeightVector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        let (pa, pb) = (points[a].components(), points[b].components());
        pa[0].cmp(&pb[0]).then_with(|| pa[1].cmp(&pb[1]))
    });
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let cross = |o: usize, a: usize, b: usize| (&points[a] - &points[o]).cross(&(&points[b] - &points[o]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && !cross(lower[lower.len() - 2], lower[lower.len() - 1], i).is_positive() {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && !cross(upper[upper.len() - 2], upper[upper.len() - 1], i).is_positive() {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let start = (0..lower.len())
        .min_by(|&a, &b| {
            let (pa, pb) = (points[lower[a]].components(), points[lower[b]].components());
            pa[1].cmp(&pb[1]).then_with(|| pa[0].cmp(&pb[0]))
        })
        .unwrap_or(0);
    lower.rotate_left(start);
    lower
}

/// Whether `point` lies on the boundary of the convex polygon `hull`
/// (counterclockwise extreme points).
pub fn on_hull_boundary(points: &[WeightVector], hull: &[usize], point: &WeightVector) -> bool {
    let h = hull.len();
    if h < 3 {
        return true;
    }
    (0..h).any(|i| {
        let a = &points[hull[i]];
        let b = &points[hull[(i + 1) % h]];
        if !(b - a).cross(&(point - a)).is_zero() {
            return false;
        }
        let t = (point - a).dot(&(b - a));
        !t.is_negative() && t <= (b - a).dot(&(b - a))
    })
}

/// Whether the outward weights at `v` positively span the plane, which is
/// the same as no closed half-plane through the origin containing them all.
pub fn is_interior_vertex(g: &GkmGraph, v: usize) -> bool {
    let weights: Vec<WeightVector> = g
        .incident_edges(v)
        .iter()
        .map(|&e| g.outward_weight(e, v))
        .collect();
    if weights.is_empty() {
        return false;
    }
    for w in &weights {
        let u = perp(w);
        for u in [u.clone(), -&u] {
            if weights.iter().all(|x| !x.dot(&u).is_negative()) {
                return false;
            }
        }
    }
    true
}

/// Whether `v` lies on the boundary of the hull of all vertex positions.
pub fn is_boundary_by_hull(g: &GkmGraph, v: usize) -> bool {
    let points: Vec<WeightVector> = g.vertices().iter().map(|x| x.mu.clone()).collect();
    let hull = convex_hull(&points);
    on_hull_boundary(&points, &hull, g.mu(v))
}

/// The four quantities the table rows are keyed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCriteria {
    pub hull_shape: usize,
    pub vertex_count: usize,
    pub o_adjacent_r: bool,
    pub tetragonal_cycle_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableType {
    pub criteria: TableCriteria,
    pub label: char,
}

pub const TABLE_ROWS: [(char, TableCriteria); 7] = [
    ('a', row(3, 4, true, 0)),
    ('b', row(4, 4, true, 0)),
    ('c', row(4, 6, false, 1)),
    ('d', row(4, 6, true, 2)),
    ('e', row(5, 6, false, 1)),
    ('f', row(6, 6, true, 2)),
    ('g', row(6, 8, false, 3)),
];

const fn row(hull_shape: usize, vertex_count: usize, o_adjacent_r: bool, tetragonal_cycle_count: usize) -> TableCriteria {
    TableCriteria {
        hull_shape,
        vertex_count,
        o_adjacent_r,
        tetragonal_cycle_count,
    }
}

pub fn table_criteria(og: &OrientedGkmGraph) -> Result<TableCriteria> {
    og.require_six_dim()?;
    og.require_index_increasing()?;
    let g = og.graph();
    let points: Vec<WeightVector> = g.vertices().iter().map(|x| x.mu.clone()).collect();
    let o = og.require_bottom()?;
    let r = og.require_top()?;
    let shapes = cycle_shapes(og)?;
    Ok(TableCriteria {
        hull_shape: convex_hull(&points).len(),
        vertex_count: g.vertex_count(),
        o_adjacent_r: g.adjacent(o, r),
        tetragonal_cycle_count: shapes.iter().filter(|s| s.kind == CycleKind::Tetragonal).count(),
    })
}

pub fn classify_type(og: &OrientedGkmGraph) -> Result<TableType> {
    let criteria = table_criteria(og)?;
    TABLE_ROWS
        .iter()
        .find(|(_, r)| *r == criteria)
        .map(|(label, _)| TableType {
            criteria: criteria.clone(),
            label: *label,
        })
        .ok_or_else(|| {
            GkmError::Unclassifiable(format!(
                "hull with {} vertices, {} fixed points, o{} adjacent to r, {} tetragonal cycles",
                criteria.hull_shape,
                criteria.vertex_count,
                if criteria.o_adjacent_r { "" } else { " not" },
                criteria.tetragonal_cycle_count
            ))
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignRule {
    /// Same side of the line through α_{p,q} ⟺ c_{p,q} > 0.
    SameSide,
    /// A convex tetragonal ascending cycle forces c_{p,q} > 0.
    ConvexCycle,
    /// Eight fixed points force every ascending cycle to be convex.
    EightVertices,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignWitness {
    pub rule: SignRule,
    pub p: String,
    pub q: Option<String>,
    pub holds: bool,
}

/// Evaluates every sign rule on the instance; the list includes failures.
pub fn sign_witnesses(ctx: &LefschetzContext<'_>) -> Result<Vec<SignWitness>> {
    let og = ctx.oriented();
    let g = og.graph();
    let mut out = Vec::new();
    for &p in ctx.index_two() {
        let down = og.descending_edges(p);
        let nu_dir = g.outward_weight(down[0], p);
        for &q in ctx.index_four() {
            let Some(pq) = g.edge_between(p, q) else { continue };
            let v = ctx.below_neighbor(p, q)?;
            let qv = g.edge_between(q, v).expect("below neighbour is adjacent");
            let alpha_qv = g.outward_weight(qv, q);
            let alpha_pq = g.outward_weight(pq, p);
            let c = ctx.c_pq(p, q)?;
            out.push(SignWitness {
                rule: SignRule::SameSide,
                p: g.id(p).to_string(),
                q: Some(g.id(q).to_string()),
                holds: same_side(&nu_dir, &alpha_qv, &alpha_pq) == c.is_positive(),
            });
        }
    }
    let shapes = cycle_shapes(og)?;
    for (shape, &p) in shapes.iter().zip(ctx.index_two()) {
        if shape.tetragon != Some(TetragonClass::Convex) {
            continue;
        }
        for name in [&shape.vertices[1], &shape.vertices[3]] {
            let q = g.lookup(name)?;
            out.push(SignWitness {
                rule: SignRule::ConvexCycle,
                p: g.id(p).to_string(),
                q: Some(name.clone()),
                holds: ctx.c_pq(p, q)?.is_positive(),
            });
        }
    }
    if g.vertex_count() == 8 {
        for shape in &shapes {
            out.push(SignWitness {
                rule: SignRule::EightVertices,
                p: shape.start.clone(),
                q: None,
                holds: shape.tetragon == Some(TetragonClass::Convex),
            });
        }
    }
    Ok(out)
}

/// Like [`sign_witnesses`] but fails on the first violated rule.
pub fn check_sign_conditions(ctx: &LefschetzContext<'_>) -> Result<Vec<SignWitness>> {
    let witnesses = sign_witnesses(ctx)?;
    if let Some(w) = witnesses.iter().find(|w| !w.holds) {
        return Err(GkmError::ConditionViolated(format!(
            "{:?} fails at p = {}{}",
            w.rule,
            w.p,
            w.q.as_ref().map(|q| format!(", q = {q}")).unwrap_or_default()
        )));
    }
    Ok(witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polyring::rational;

    fn wv(a: i64, b: i64) -> WeightVector {
        WeightVector::from_ints(&[a, b])
    }

    fn q(a: i64, b: i64) -> Rational {
        rational(a, b)
    }

    fn wq(a: Rational, b: Rational) -> WeightVector {
        WeightVector::new(vec![a, b])
    }

    #[test]
    fn side_tests() {
        assert!(same_side(&wv(1, 1), &wv(2, 3), &wv(1, 0)));
        assert!(!same_side(&wv(1, 1), &wv(1, -1), &wv(1, 0)));
        assert!(same_side(&wv(5, 0), &wv(1, -1), &wv(1, 0)));
        assert!(same_side(&wv(5, 0), &wv(1, 1), &wv(1, 0)));
    }

    #[test]
    fn tetragon_examples() {
        let square = [&wv(0, 0), &wv(1, 0), &wv(1, 1), &wv(0, 1)];
        assert_eq!(classify_tetragon(square).unwrap(), TetragonClass::Convex);
        let (a, b, c, d) = (wv(0, 0), wq(q(2, 1), q(3, 2)), wv(0, 2), wq(q(1, 2), q(1, 1)));
        assert_eq!(classify_tetragon([&a, &b, &c, &d]).unwrap(), TetragonClass::Concave);
        let (a, b, c, d) = (wv(0, 0), wq(q(2, 1), q(1, 2)), wv(0, 2), wv(2, 2));
        assert_eq!(classify_tetragon([&a, &b, &c, &d]).unwrap(), TetragonClass::Crossed);
        let line = [&wv(0, 0), &wv(1, 0), &wv(2, 0), &wv(0, 1)];
        assert!(matches!(classify_tetragon(line), Err(GkmError::Degenerate(_))));
    }

    #[test]
    fn hull_of_square_with_edge_point() {
        let pts = vec![wv(0, 0), wv(2, 0), wv(1, 0), wv(2, 2), wv(0, 2), wv(1, 1)];
        let hull = convex_hull(&pts);
        assert_eq!(hull, vec![0, 1, 3, 4]);
        assert!(on_hull_boundary(&pts, &hull, &wv(1, 0)));
        assert!(!on_hull_boundary(&pts, &hull, &wv(1, 1)));
        assert!(on_hull_boundary(&pts, &hull, &wv(0, 2)));
    }

    #[test]
    fn interior_vertices_of_cp3() {
        let g = corpus::graph("cp3-k4").unwrap();
        assert!(is_interior_vertex(&g, g.lookup("A").unwrap()));
        assert!(!is_interior_vertex(&g, g.lookup("D").unwrap()));
        for v in 0..g.vertex_count() {
            assert_eq!(is_interior_vertex(&g, v), !is_boundary_by_hull(&g, v));
        }
    }

    #[test]
    fn tol_d_interior() {
        let g = corpus::graph("tol-d").unwrap();
        assert!(is_interior_vertex(&g, g.lookup("p1").unwrap()));
        assert!(!is_interior_vertex(&g, g.lookup("p2").unwrap()));
    }

    #[test]
    fn cp3_is_type_a() {
        let g = corpus::graph("cp3-k4").unwrap();
        let og = g.orient(&wv(1, 3)).unwrap();
        let t = classify_type(&og).unwrap();
        assert_eq!(t.label, 'a');
        assert_eq!(t.criteria, row(3, 4, true, 0));
        let a = og.graph().lookup("A").unwrap();
        let shape = cycle_shape(&og, a).unwrap();
        assert_eq!(shape.kind, CycleKind::Triangular);
        assert_eq!(shape.vertices, vec!["A", "B", "C"]);
    }
}
