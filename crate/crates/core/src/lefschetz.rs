//! Hodge-Riemann pairings and the hard Lefschetz test, together with the
//! coefficients `l_{p,q}`, `c_{p,q}` and the mixed matrix `a_{jk}` between
//! index-two and index-four Thom classes.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::cohomology::{equivariant_symplectic, scalar_multiple_of_weight, CohomologyElement, Direction, ThomBasis};
use crate::error::{GkmError, Result};
use crate::geometry::{classify_type, cycle_shapes, CycleShape, TableCriteria, TetragonClass};
use crate::graph::OrientedGkmGraph;
use crate::linalg::{determinant, Matrix};
use crate::localization::{euler_factors, EulerVariant, Integrator};
use crate::polyring::{serialize_matrix, serialize_rational, Polynomial, Rational};

/// Thom classes, the symplectic class and cached integration data for one
/// oriented graph.
pub struct LefschetzContext<'a> {
    og: &'a OrientedGkmGraph,
    thom: ThomBasis<'a>,
    integrator: Integrator<'a>,
    omega: CohomologyElement<'a>,
    index_two: Vec<usize>,
    index_four: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientPair {
    pub p: String,
    pub q: String,
    pub adjacent: bool,
    #[serde(serialize_with = "serialize_rational")]
    pub l: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub c: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub a: Rational,
}

/// The mixed matrix: rows are index-four vertices, columns index-two
/// vertices, both ordered by height then id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    #[serde(serialize_with = "serialize_matrix")]
    pub entries: Matrix,
    #[serde(serialize_with = "serialize_rational")]
    pub determinant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HrMatrix {
    pub k: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    #[serde(serialize_with = "serialize_matrix")]
    pub entries: Matrix,
    #[serde(serialize_with = "serialize_rational")]
    pub determinant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HrVerdict {
    pub k: usize,
    pub dimension: usize,
    /// Absent for odd k, where the pairing is trivially nonsingular.
    pub determinant: Option<String>,
    pub nonsingular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnWitness {
    #[serde(serialize_with = "serialize_rational")]
    pub t0: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub second: Rational,
    pub noncollinear: bool,
    /// `d` with τ_{p_k}^+(r) = d · α_{r,o}, one per column.
    pub top_coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeGWitness {
    /// Row order (indices into the a-matrix rows) placing zeros on the diagonal.
    pub row_order: Vec<usize>,
    #[serde(serialize_with = "serialize_rational")]
    pub triple_product_sum: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub permuted_determinant: Rational,
    pub all_cycles_convex: bool,
    pub off_diagonal_negative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub betti: Vec<usize>,
    pub index_two: Vec<String>,
    pub index_four: Vec<String>,
    pub pairs: Vec<CoefficientPair>,
    pub a_matrix: AMatrix,
    pub hr: Vec<HrVerdict>,
    pub hr2: HrMatrix,
    pub table_type: Option<char>,
    pub table_criteria: TableCriteria,
    pub table_error: Option<String>,
    pub cycles: Vec<CycleShape>,
    pub holds: bool,
}

impl<'a> LefschetzContext<'a> {
    pub fn new(og: &'a OrientedGkmGraph) -> Result<Self> {
        og.require_index_increasing()?;
        let g = og.graph();
        Ok(LefschetzContext {
            og,
            thom: ThomBasis::new(og)?,
            integrator: Integrator::new(g),
            omega: equivariant_symplectic(g)?,
            index_two: og.vertices_of_degree(1),
            index_four: og.vertices_of_degree(2),
        })
    }

    pub fn oriented(&self) -> &'a OrientedGkmGraph {
        self.og
    }

    pub fn thom(&self) -> &ThomBasis<'a> {
        &self.thom
    }

    pub fn integrator(&self) -> &Integrator<'a> {
        &self.integrator
    }

    pub fn omega(&self) -> &CohomologyElement<'a> {
        &self.omega
    }

    /// Index-two vertices ordered by height then id.
    pub fn index_two(&self) -> &[usize] {
        &self.index_two
    }

    /// Index-four vertices ordered by height then id.
    pub fn index_four(&self) -> &[usize] {
        &self.index_four
    }

    fn require_pair(&self, p: usize, q: usize) -> Result<()> {
        self.og.require_six_dim()?;
        if self.og.down_degree(p) != 1 || self.og.down_degree(q) != 2 {
            return Err(GkmError::ScopeError(format!(
                "expected an index-two and an index-four vertex, got {} and {}",
                self.og.id(p),
                self.og.id(q)
            )));
        }
        Ok(())
    }

    /// `(μ(q) − μ(p)) / α_{p,q}` for adjacent vertices, else zero.
    pub fn l_pq(&self, p: usize, q: usize) -> Result<Rational> {
        self.require_pair(p, q)?;
        let g = self.og.graph();
        let Some(e) = g.edge_between(p, q) else {
            return Ok(Rational::zero());
        };
        let diff = g.mu(q) - g.mu(p);
        diff.ratio_to(&g.outward_weight(e, p)).ok_or_else(|| {
            GkmError::NotParallel(format!(
                "μ({}) − μ({}) is not parallel to the weight of {}",
                g.id(q),
                g.id(p),
                g.edge_label(e)
            ))
        })
    }

    /// The lower neighbour of `q` other than `p`.
    pub fn below_neighbor(&self, p: usize, q: usize) -> Result<usize> {
        let g = self.og.graph();
        let others: Vec<usize> = self
            .og
            .descending_edges(q)
            .into_iter()
            .map(|e| g.edges()[e].other_end(q))
            .filter(|&v| v != p)
            .collect();
        match others.as_slice() {
            [v] => Ok(*v),
            _ => Err(GkmError::AmbiguousBelowNeighbor(g.id(q).to_string(), g.id(p).to_string())),
        }
    }

    /// The constant `c` with τ_p^+(q) = c · α_{q,v}, where `v` is the other
    /// lower neighbour of `q`; zero when `p` and `q` are not adjacent.
    pub fn c_pq(&self, p: usize, q: usize) -> Result<Rational> {
        self.require_pair(p, q)?;
        let g = self.og.graph();
        if !g.adjacent(p, q) {
            return Ok(Rational::zero());
        }
        let v = self.below_neighbor(p, q)?;
        let tau = &self.thom.plus[p];
        if !tau.value(v).is_zero() {
            return Err(GkmError::Mismatch(format!(
                "Thom class of {} does not vanish at {}",
                g.id(p),
                g.id(v)
            )));
        }
        scalar_multiple_of_weight(tau, q, v)
    }

    /// ∫ τ_p^+ · (ω̃ − μ(p)) · τ_q^−.
    pub fn a_entry_integral(&self, p: usize, q: usize) -> Result<Rational> {
        let g = self.og.graph();
        let shift = Polynomial::lin_form(g.mu(p));
        let shifted: Vec<Polynomial> = self.omega.values().iter().map(|w| w - &shift).collect();
        let shifted = CohomologyElement::new(g, shifted)?;
        let product = self.thom.plus[p].mul(&shifted)?.mul(&self.thom.minus[q])?;
        self.integrator.integrate(&product)
    }

    /// The single surviving localization term `[τ_p^+ · (ω̃ − μ(p))](q) / ν_q^+`.
    pub fn a_entry_shortcut(&self, p: usize, q: usize) -> Result<Rational> {
        let g = self.og.graph();
        let mut value = self.thom.plus[p].value(q) * &Polynomial::lin_form(&(g.mu(q) - g.mu(p)));
        for ell in euler_factors(self.og, q, EulerVariant::Plus) {
            value = value.divide_by_linear(&ell).map_err(|_| {
                GkmError::NonConstant(format!("value at {} is not divisible by {ell}", g.id(q)))
            })?;
        }
        value
            .as_constant()
            .ok_or_else(|| GkmError::NonConstant(format!("{value} is not constant")))
    }

    /// The mixed matrix, every entry computed by full localization and by the
    /// single-vertex shortcut, which must agree.
    pub fn a_matrix(&self) -> Result<AMatrix> {
        let mut entries = Vec::with_capacity(self.index_four.len());
        for &q in &self.index_four {
            let mut row = Vec::with_capacity(self.index_two.len());
            for &p in &self.index_two {
                let full = self.a_entry_integral(p, q)?;
                let short = self.a_entry_shortcut(p, q)?;
                if full != short {
                    return Err(GkmError::Mismatch(format!(
                        "a-entry for ({}, {}): integral {full}, shortcut {short}",
                        self.og.id(p),
                        self.og.id(q)
                    )));
                }
                row.push(full);
            }
            entries.push(row);
        }
        let determinant = if entries.len() == self.index_two.len() {
            determinant(&entries)
        } else {
            Rational::zero()
        };
        Ok(AMatrix {
            rows: self.names(&self.index_four),
            cols: self.names(&self.index_two),
            entries,
            determinant,
        })
    }

    fn names(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.og.id(v).to_string()).collect()
    }

    /// The pairing on cohomological degree `k` (even). For `k ≤ n` this is
    /// `(u, v) ↦ ∫ τ_u τ_v ω̃^{n−k}` on the degree-k Thom basis; above `n` it
    /// is the Poincaré pairing between degrees `k` and `2n − k`.
    pub fn hr_matrix(&self, k: usize) -> Result<HrMatrix> {
        let n = self.og.valence();
        if k % 2 == 1 || k > 2 * n {
            return Err(GkmError::DegreeError(format!(
                "pairing needs an even degree between 0 and {}, got {k}",
                2 * n
            )));
        }
        let rows = self.og.vertices_of_degree(k / 2);
        let (cols, extra) = if k <= n {
            (rows.clone(), n - k)
        } else {
            (self.og.vertices_of_degree((2 * n - k) / 2), 0)
        };
        let power = self.omega.pow(extra);
        let mut entries = Vec::with_capacity(rows.len());
        for &u in &rows {
            let left = self.thom.plus[u].mul(&power)?;
            let mut row = Vec::with_capacity(cols.len());
            for &v in &cols {
                row.push(self.integrator.integrate(&left.mul(&self.thom.plus[v])?)?);
            }
            entries.push(row);
        }
        let determinant = if rows.len() == cols.len() {
            determinant(&entries)
        } else {
            Rational::zero()
        };
        Ok(HrMatrix {
            k,
            rows: self.names(&rows),
            cols: self.names(&cols),
            entries,
            determinant,
        })
    }

    /// Nonsingularity of the pairing for every degree `0..=n`.
    pub fn hard_lefschetz(&self) -> Result<Vec<HrVerdict>> {
        (0..=self.og.valence())
            .map(|k| {
                if k % 2 == 1 {
                    return Ok(HrVerdict {
                        k,
                        dimension: 0,
                        determinant: None,
                        nonsingular: true,
                    });
                }
                let m = self.hr_matrix(k)?;
                Ok(HrVerdict {
                    k,
                    dimension: m.rows.len(),
                    determinant: Some(crate::polyring::format_rational(&m.determinant)),
                    nonsingular: !m.determinant.is_zero(),
                })
            })
            .collect()
    }

    pub fn coefficient_pairs(&self) -> Result<Vec<CoefficientPair>> {
        let mut out = Vec::new();
        for &p in &self.index_two {
            for &q in &self.index_four {
                out.push(CoefficientPair {
                    p: self.og.id(p).to_string(),
                    q: self.og.id(q).to_string(),
                    adjacent: self.og.graph().adjacent(p, q),
                    l: self.l_pq(p, q)?,
                    c: self.c_pq(p, q)?,
                    a: self.a_entry_integral(p, q)?,
                });
            }
        }
        Ok(out)
    }

    /// Checks a = −c·l and a ≠ 0 ⟺ adjacency for every pair.
    pub fn check_coefficient_identity(&self) -> Result<Vec<CoefficientPair>> {
        let pairs = self.coefficient_pairs()?;
        for pair in &pairs {
            if pair.a != -(&pair.c * &pair.l) {
                return Err(GkmError::Mismatch(format!(
                    "({}, {}): a = {}, but −c·l = {}",
                    pair.p,
                    pair.q,
                    pair.a,
                    -(&pair.c * &pair.l)
                )));
            }
            if pair.a.is_zero() == pair.adjacent {
                return Err(GkmError::Mismatch(format!(
                    "({}, {}): a = {} while adjacency is {}",
                    pair.p, pair.q, pair.a, pair.adjacent
                )));
            }
        }
        Ok(pairs)
    }

    /// For two-by-two mixed matrices of the quadrilateral and hexagonal
    /// six-vertex types: the column combination killing the first entry does
    /// not kill the second, and μ(r), μ(p_1), μ(p_2) are not collinear.
    pub fn check_column_independence(&self) -> Result<ColumnWitness> {
        let label = classify_type(self.og)?.label;
        if label != 'd' && label != 'f' {
            return Err(GkmError::TypeMismatch(format!(
                "column independence applies to types (d) and (f), not ({label})"
            )));
        }
        let a = self.a_matrix()?.entries;
        if a[0][0].is_zero() {
            return Err(GkmError::ConditionViolated("a_11 vanishes".into()));
        }
        let t0 = -(&a[0][1] / &a[0][0]);
        let second = &a[1][1] + &t0 * &a[1][0];
        let g = self.og.graph();
        let r = self.og.require_top()?;
        let o = self.og.require_bottom()?;
        let (p1, p2) = (self.index_two[0], self.index_two[1]);
        let noncollinear = !(g.mu(p1) - g.mu(r)).cross(&(g.mu(p2) - g.mu(r))).is_zero();
        let top_coefficients = self
            .index_two
            .iter()
            .map(|&p| scalar_multiple_of_weight(&self.thom.plus[p], r, o).map(|d| crate::polyring::format_rational(&d)))
            .collect::<Result<Vec<_>>>()?;
        if second.is_zero() {
            return Err(GkmError::ConditionViolated(format!(
                "a_22 + t0·a_21 vanishes for t0 = {t0}"
            )));
        }
        if !noncollinear {
            return Err(GkmError::ConditionViolated(format!(
                "μ({}), μ({}), μ({}) are collinear",
                g.id(r),
                g.id(p1),
                g.id(p2)
            )));
        }
        Ok(ColumnWitness {
            t0,
            second,
            noncollinear,
            top_coefficients,
        })
    }

    /// For the eight-vertex type: reorders rows so the zeros sit on the
    /// diagonal, confirms the determinant equals a12·a23·a31 + a13·a21·a32,
    /// and, when every ascending cycle is convex, that all other entries are
    /// negative so the determinant is negative.
    pub fn check_type_g_pattern(&self) -> Result<TypeGWitness> {
        let label = classify_type(self.og)?.label;
        if label != 'g' {
            return Err(GkmError::TypeMismatch(format!("expected type (g), got ({label})")));
        }
        let a = self.a_matrix()?.entries;
        let mut row_order = Vec::with_capacity(3);
        for col in 0..3 {
            let zeros: Vec<usize> = (0..3).filter(|&j| a[j][col].is_zero()).collect();
            match zeros.as_slice() {
                [j] if !row_order.contains(j) => row_order.push(*j),
                _ => {
                    return Err(GkmError::ConditionViolated(format!(
                        "column {col} does not have exactly one zero in a fresh row"
                    )))
                }
            }
        }
        let b: Matrix = row_order.iter().map(|&j| a[j].clone()).collect();
        let triple_product_sum = &b[0][1] * &b[1][2] * &b[2][0] + &b[0][2] * &b[1][0] * &b[2][1];
        let permuted_determinant = determinant(&b);
        if triple_product_sum != permuted_determinant {
            return Err(GkmError::Mismatch(format!(
                "determinant {permuted_determinant} differs from the triple products {triple_product_sum}"
            )));
        }
        let all_cycles_convex = cycle_shapes(self.og)?
            .iter()
            .all(|s| s.tetragon == Some(TetragonClass::Convex));
        let off_diagonal_negative = (0..3).all(|i| (0..3).all(|j| i == j || b[i][j].is_negative()));
        if all_cycles_convex && (!off_diagonal_negative || !permuted_determinant.is_negative()) {
            return Err(GkmError::ConditionViolated(format!(
                "convex cycles but determinant {permuted_determinant} is not negative"
            )));
        }
        Ok(TypeGWitness {
            row_order,
            triple_product_sum,
            permuted_determinant,
            all_cycles_convex,
            off_diagonal_negative,
        })
    }

    /// Kronecker matrix `∫ τ_v^+ τ_w^−` over vertices of equal index.
    pub fn kronecker_defect(&self) -> Result<Option<String>> {
        let n = self.og.vertex_count();
        for v in 0..n {
            for w in 0..n {
                if self.og.down_degree(v) != self.og.down_degree(w) {
                    continue;
                }
                let value = self
                    .integrator
                    .integrate(&self.thom.get(v, Direction::Plus).mul(self.thom.get(w, Direction::Minus))?)?;
                let expected = if v == w { Rational::from_integer(1.into()) } else { Rational::zero() };
                if value != expected {
                    return Ok(Some(format!(
                        "∫ τ_{}^+ τ_{}^− = {value}",
                        self.og.id(v),
                        self.og.id(w)
                    )));
                }
            }
        }
        Ok(None)
    }

    pub fn report(&self) -> Result<LefschetzReport> {
        self.og.require_six_dim()?;
        let a_matrix = self.a_matrix()?;
        let hr2 = self.hr_matrix(2)?;
        if a_matrix.determinant.is_zero() != hr2.determinant.is_zero() {
            return Err(GkmError::Mismatch(format!(
                "det a = {} but det HR_2 = {}",
                a_matrix.determinant, hr2.determinant
            )));
        }
        let hr = self.hard_lefschetz()?;
        let holds = hr.iter().all(|v| v.nonsingular);
        let (table_type, table_error) = match classify_type(self.og) {
            Ok(t) => (Some(t.label), None),
            Err(GkmError::Unclassifiable(msg)) => (None, Some(msg)),
            Err(e) => return Err(e),
        };
        Ok(LefschetzReport {
            betti: self.og.morse_profile().betti,
            index_two: self.names(&self.index_two),
            index_four: self.names(&self.index_four),
            pairs: self.check_coefficient_identity()?,
            a_matrix,
            hr,
            hr2,
            table_type,
            table_criteria: crate::geometry::table_criteria(self.og)?,
            table_error,
            cycles: cycle_shapes(self.og)?,
            holds,
        })
    }
}

pub fn hard_lefschetz_report(og: &OrientedGkmGraph) -> Result<LefschetzReport> {
    LefschetzContext::new(og)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polyring::{int, rational, WeightVector};

    fn oriented(name: &str, xi: [i64; 2]) -> OrientedGkmGraph {
        corpus::graph(name)
            .unwrap()
            .orient(&WeightVector::from_ints(&xi))
            .unwrap()
    }

    #[test]
    fn cp3_coefficients() {
        let og = oriented("cp3-k4", [1, 3]);
        let ctx = LefschetzContext::new(&og).unwrap();
        let g = og.graph();
        let (a, b) = (g.lookup("A").unwrap(), g.lookup("B").unwrap());
        assert_eq!(ctx.l_pq(a, b).unwrap(), int(1));
        assert_eq!(ctx.c_pq(a, b).unwrap(), int(1));
        let m = ctx.a_matrix().unwrap();
        assert_eq!(m.entries, vec![vec![int(-1)]]);
        assert_eq!(ctx.hr_matrix(2).unwrap().entries, vec![vec![int(-1)]]);
        assert_eq!(ctx.hr_matrix(6).unwrap().entries, vec![vec![int(1)]]);
        assert_eq!(ctx.hr_matrix(0).unwrap().entries, vec![vec![int(-1)]]);
        assert!(matches!(ctx.hr_matrix(3), Err(GkmError::DegreeError(_))));
        assert!(matches!(ctx.hr_matrix(8), Err(GkmError::DegreeError(_))));
        assert!(ctx.hard_lefschetz().unwrap().iter().all(|v| v.nonsingular));
        assert!(matches!(ctx.check_column_independence(), Err(GkmError::TypeMismatch(_))));
    }

    #[test]
    fn doubling_positions_doubles_l() {
        let mut doc = corpus::instance("cp3-k4").unwrap().document();
        for v in &mut doc.vertices {
            for c in &mut v.mu {
                *c = (2 * c.parse::<i64>().unwrap()).to_string();
            }
        }
        let g = doc.to_validated_graph().unwrap();
        let og = g.orient(&WeightVector::from_ints(&[1, 3])).unwrap();
        let ctx = LefschetzContext::new(&og).unwrap();
        let base = oriented("cp3-k4", [1, 3]);
        let base_ctx = LefschetzContext::new(&base).unwrap();
        for &p in ctx.index_two() {
            for &q in ctx.index_four() {
                assert_eq!(ctx.l_pq(p, q).unwrap(), int(2) * base_ctx.l_pq(p, q).unwrap());
            }
        }
    }

    #[test]
    fn tol_d_values() {
        let og = oriented("tol-d", [0, 1]);
        let ctx = LefschetzContext::new(&og).unwrap();
        let g = og.graph();
        let at = |id: &str| g.lookup(id).unwrap();
        assert_eq!(ctx.c_pq(at("p1"), at("q1")).unwrap(), rational(-3, 5));
        assert_eq!(ctx.l_pq(at("p1"), at("q1")).unwrap(), rational(1, 3));
        let m = ctx.a_matrix().unwrap();
        assert_eq!(m.cols, vec!["p2", "p1"]);
        assert_eq!(m.rows, vec!["q1", "q2"]);
        assert_eq!(
            m.entries,
            vec![
                vec![rational(-3, 5), rational(1, 5)],
                vec![rational(-8, 15), rational(-3, 5)]
            ]
        );
        assert_eq!(m.determinant, rational(7, 15));
        assert_eq!(ctx.hr_matrix(2).unwrap().determinant, rational(-7, 15));
        let w = ctx.check_column_independence().unwrap();
        assert!(w.noncollinear);
        assert!(!w.second.is_zero());
    }

    #[test]
    fn flag_values() {
        let og = oriented("flag-su3", [1, 2]);
        let ctx = LefschetzContext::new(&og).unwrap();
        let m = ctx.a_matrix().unwrap();
        assert_eq!(m.entries, vec![vec![int(-1), int(-2)], vec![int(-2), int(-1)]]);
        assert_eq!(m.determinant, int(-3));
        assert_eq!(ctx.hr_matrix(2).unwrap().determinant, int(-3));
        ctx.check_coefficient_identity().unwrap();
        ctx.check_column_independence().unwrap();
    }

    #[test]
    fn cube_pattern() {
        let og = oriented("cube-g", [1, 1]);
        let ctx = LefschetzContext::new(&og).unwrap();
        let m = ctx.a_matrix().unwrap();
        assert_eq!(m.determinant, int(12));
        let w = ctx.check_type_g_pattern().unwrap();
        assert!(w.all_cycles_convex);
        assert_eq!(w.triple_product_sum, int(-12));
        assert_eq!(ctx.hr_matrix(2).unwrap().determinant, int(-12));
    }
}
