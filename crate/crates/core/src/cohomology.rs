//! Graph cohomology: vertex-wise polynomials that agree modulo the edge
//! weights, degree slices by exact linear algebra, and Thom classes.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use num_traits::Zero;

use crate::error::{GkmError, Result};
use crate::graph::{GkmGraph, OrientedGkmGraph};
use crate::linalg::{nullspace, solve, Matrix, Solution};
use crate::localization::{euler_class, EulerVariant};
use crate::polyring::{congruent_mod_linear, Monomial, Polynomial, Rational};

pub fn is_class(g: &GkmGraph, values: &[Polynomial]) -> bool {
    values.len() == g.vertex_count()
        && g.edges().iter().all(|e| {
            congruent_mod_linear(&values[e.from], &values[e.to], &Polynomial::lin_form(&e.weight))
        })
}

/// A graph cohomology class: one polynomial per vertex.
#[derive(Clone, Debug)]
pub struct CohomologyElement<'g> {
    graph: &'g GkmGraph,
    values: Vec<Polynomial>,
}

impl PartialEq for CohomologyElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.values == other.values
    }
}

impl<'g> CohomologyElement<'g> {
    pub fn new(graph: &'g GkmGraph, values: Vec<Polynomial>) -> Result<Self> {
        if values.len() != graph.vertex_count() {
            return Err(GkmError::NotAClass(format!(
                "{} values for {} vertices",
                values.len(),
                graph.vertex_count()
            )));
        }
        if let Some(v) = values.iter().find(|p| p.rank() != graph.rank()) {
            return Err(GkmError::RankMismatch {
                expected: graph.rank(),
                found: v.rank(),
            });
        }
        if let Some(e) = graph.edges().iter().position(|e| {
            !congruent_mod_linear(&values[e.from], &values[e.to], &Polynomial::lin_form(&e.weight))
        }) {
            return Err(GkmError::NotAClass(format!(
                "values disagree modulo the weight of edge {}",
                graph.edge_label(e)
            )));
        }
        Ok(CohomologyElement { graph, values })
    }

    pub fn from_ids(graph: &'g GkmGraph, values: &BTreeMap<String, Polynomial>) -> Result<Self> {
        let mut out = vec![Polynomial::zero(graph.rank()); graph.vertex_count()];
        for (id, p) in values {
            out[graph.lookup(id)?] = p.clone();
        }
        Self::new(graph, out)
    }

    pub fn constant(graph: &'g GkmGraph, c: Rational) -> Self {
        CohomologyElement {
            graph,
            values: vec![Polynomial::constant(graph.rank(), c); graph.vertex_count()],
        }
    }

    pub fn unity(graph: &'g GkmGraph) -> Self {
        Self::constant(graph, Rational::from_integer(1.into()))
    }

    pub fn zero(graph: &'g GkmGraph) -> Self {
        Self::constant(graph, Rational::zero())
    }

    pub fn graph(&self) -> &'g GkmGraph {
        self.graph
    }

    pub fn value(&self, v: usize) -> &Polynomial {
        &self.values[v]
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.values.len())
            .filter(|&v| !self.values[v].is_zero())
            .collect()
    }

    /// Polynomial degree when every nonzero value is homogeneous of one
    /// common degree; `None` for the zero class or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut found = None;
        for p in &self.values {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return None;
            }
            let d = p.degree();
            if found.is_some() && found != d {
                return None;
            }
            found = d;
        }
        found
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn same_graph(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.graph, other.graph) {
            Ok(())
        } else {
            Err(GkmError::Mismatch("classes live on different graphs".into()))
        }
    }

    fn rebuild(&self, values: Vec<Polynomial>) -> Result<Self> {
        Self::new(self.graph, values)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_graph(other)?;
        self.rebuild(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_graph(other)?;
        self.rebuild(self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_graph(other)?;
        self.rebuild(self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CohomologyElement {
            graph: self.graph,
            values: self.values.iter().map(|p| p.scale(s)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        CohomologyElement {
            graph: self.graph,
            values: self.values.iter().map(|p| p.pow(e)).collect(),
        }
    }

    /// Vertex id to polynomial text.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        (0..self.values.len())
            .map(|v| (self.graph.id(v).to_string(), self.values[v].to_string()))
            .collect()
    }
}

/// The degree-one class `v -> <mu(v), x>`.
pub fn equivariant_symplectic(g: &GkmGraph) -> Result<CohomologyElement<'_>> {
    let values = g
        .vertices()
        .iter()
        .map(|v| Polynomial::lin_form(&v.mu))
        .collect();
    CohomologyElement::new(g, values)
}

/// Scalar `k` with `f(nonvanishing endpoint) = k * <alpha, x>`, where alpha is
/// the weight of the edge read from `from` toward `to`. `f` must vanish at one
/// of the two endpoints.
pub fn scalar_multiple_of_weight(f: &CohomologyElement<'_>, from: usize, to: usize) -> Result<Rational> {
    let g = f.graph();
    let e = g.edge_between(from, to).ok_or_else(|| {
        GkmError::Malformed(format!("{} and {} are not adjacent", g.id(from), g.id(to)))
    })?;
    let value = match (f.value(from).is_zero(), f.value(to).is_zero()) {
        (_, true) => f.value(from),
        (true, false) => f.value(to),
        (false, false) => {
            return Err(GkmError::Mismatch(format!(
                "class vanishes at neither {} nor {}",
                g.id(from),
                g.id(to)
            )))
        }
    };
    let alpha = Polynomial::lin_form(&g.outward_weight(e, from));
    let q = value.divide_by_linear(&alpha)?;
    q.as_constant().ok_or_else(|| {
        GkmError::DegreeError(format!("{value} is not a scalar multiple of {alpha}"))
    })
}

/// Linear system for degree-`d` classes. Vertices with `unknown[v]` get a
/// full set of free coefficients; the others are pinned to `fixed[v]`.
struct ClassSystem {
    monomials: Vec<Monomial>,
    offsets: Vec<Option<usize>>,
    cols: usize,
    rows: Matrix,
    rhs: Vec<Rational>,
}

impl ClassSystem {
    fn build(g: &GkmGraph, d: usize, unknown: &[bool], fixed: &[Polynomial]) -> Result<Self> {
        let k = g.rank();
        let monomials = Monomial::all_of_degree(k, d);
        let m = monomials.len();
        let mut offsets = Vec::with_capacity(g.vertex_count());
        let mut cols = 0;
        for &u in unknown {
            if u {
                offsets.push(Some(cols));
                cols += m;
            } else {
                offsets.push(None);
            }
        }
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for e in g.edges() {
            let (a, b) = (e.from, e.to);
            if offsets[a].is_none() && offsets[b].is_none() && fixed[a] == fixed[b] {
                continue;
            }
            let ell = Polynomial::lin_form(&e.weight);
            let images: Vec<Polynomial> = monomials
                .iter()
                .map(|mono| {
                    Polynomial::monomial(k, mono.clone(), Rational::from_integer(1.into()))
                        .restrict_to_kernel(&ell)
                })
                .collect::<Result<_>>()?;
            let mut constant = Polynomial::zero(k);
            if offsets[a].is_none() {
                constant = &constant + &fixed[a];
            }
            if offsets[b].is_none() {
                constant = &constant - &fixed[b];
            }
            let constant = constant.restrict_to_kernel(&ell)?;
            let mut keys: BTreeSet<Monomial> = constant.terms().map(|(mono, _)| mono.clone()).collect();
            for img in &images {
                keys.extend(img.terms().map(|(mono, _)| mono.clone()));
            }
            for key in keys {
                let mut row = vec![Rational::zero(); cols];
                for (i, img) in images.iter().enumerate() {
                    let c = img.coefficient(&key);
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(off) = offsets[a] {
                        row[off + i] += &c;
                    }
                    if let Some(off) = offsets[b] {
                        row[off + i] -= &c;
                    }
                }
                rows.push(row);
                rhs.push(-constant.coefficient(&key));
            }
        }
        Ok(ClassSystem {
            monomials,
            offsets,
            cols,
            rows,
            rhs,
        })
    }

    fn assemble(&self, g: &GkmGraph, x: &[Rational], fixed: &[Polynomial]) -> Vec<Polynomial> {
        (0..g.vertex_count())
            .map(|v| match self.offsets[v] {
                None => fixed[v].clone(),
                Some(off) => Polynomial::from_terms(
                    g.rank(),
                    self.monomials
                        .iter()
                        .enumerate()
                        .map(|(i, mono)| (mono.clone(), x[off + i].clone())),
                ),
            })
            .collect()
    }
}

/// Basis of the degree-`d` homogeneous classes vanishing outside `support`.
pub fn classes_supported_on<'g>(
    g: &'g GkmGraph,
    d: usize,
    support: &BTreeSet<usize>,
) -> Result<Vec<CohomologyElement<'g>>> {
    let unknown: Vec<bool> = (0..g.vertex_count()).map(|v| support.contains(&v)).collect();
    let fixed = vec![Polynomial::zero(g.rank()); g.vertex_count()];
    let sys = ClassSystem::build(g, d, &unknown, &fixed)?;
    nullspace(&sys.rows, sys.cols)
        .into_iter()
        .map(|x| CohomologyElement::new(g, sys.assemble(g, &x, &fixed)))
        .collect()
}

/// Basis of the rational vector space of degree-`d` homogeneous classes.
pub fn basis(g: &GkmGraph, d: usize) -> Result<Vec<CohomologyElement<'_>>> {
    let all = (0..g.vertex_count()).collect();
    classes_supported_on(g, d, &all)
}

/// Dimension predicted by the free-module structure over the Thom classes:
/// `sum_v binom(d - d_v + k - 1, k - 1)`.
pub fn expected_dimension(og: &OrientedGkmGraph, d: usize) -> usize {
    let k = og.rank();
    (0..og.vertex_count())
        .map(|v| og.down_degree(v))
        .filter(|&dv| dv <= d)
        .map(|dv| binomial(d - dv + k - 1, k - 1))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Plus,
    Minus,
}

/// The Thom class of `v`: for `Plus`, the unique class of degree d_v
/// supported on vertices reachable upward from `v` with value ν_v^+ at `v`;
/// `Minus` is the mirror image (downward, degree n - d_v, value ν_v^-).
pub fn thom_class<'g>(og: &'g OrientedGkmGraph, v: usize, dir: Direction) -> Result<CohomologyElement<'g>> {
    og.require_index_increasing()?;
    let g = og.graph();
    let (support, degree, normal) = match dir {
        Direction::Plus => (
            og.ascending_reachable(v),
            og.down_degree(v),
            euler_class(og, v, EulerVariant::Plus),
        ),
        Direction::Minus => (
            og.descending_reachable(v),
            og.valence() - og.down_degree(v),
            euler_class(og, v, EulerVariant::Minus),
        ),
    };
    let unknown: Vec<bool> = (0..g.vertex_count())
        .map(|u| u != v && support.contains(&u))
        .collect();
    let mut fixed = vec![Polynomial::zero(g.rank()); g.vertex_count()];
    fixed[v] = normal;
    let sys = ClassSystem::build(g, degree, &unknown, &fixed)?;
    match solve(&sys.rows, &sys.rhs, sys.cols) {
        Solution::Inconsistent => Err(GkmError::Infeasible(g.id(v).to_string())),
        Solution::Solved { nullity, .. } if nullity > 0 => {
            Err(GkmError::NonUnique(g.id(v).to_string(), nullity))
        }
        Solution::Solved { x, .. } => CohomologyElement::new(g, sys.assemble(g, &x, &fixed)),
    }
}

/// All Thom classes of an oriented graph, indexed by vertex.
#[derive(Clone, Debug)]
pub struct ThomBasis<'g> {
    pub plus: Vec<CohomologyElement<'g>>,
    pub minus: Vec<CohomologyElement<'g>>,
}

impl<'g> ThomBasis<'g> {
    pub fn new(og: &'g OrientedGkmGraph) -> Result<Self> {
        let n = og.vertex_count();
        let plus = (0..n)
            .map(|v| thom_class(og, v, Direction::Plus))
            .collect::<Result<_>>()?;
        let minus = (0..n)
            .map(|v| thom_class(og, v, Direction::Minus))
            .collect::<Result<_>>()?;
        Ok(ThomBasis { plus, minus })
    }

    pub fn get(&self, v: usize, dir: Direction) -> &CohomologyElement<'g> {
        match dir {
            Direction::Plus => &self.plus[v],
            Direction::Minus => &self.minus[v],
        }
    }
}
