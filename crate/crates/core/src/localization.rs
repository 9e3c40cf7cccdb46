//! Localization: integrals of classes as sums over vertices of the value
//! divided by the equivariant Euler class, evaluated exactly.

use num_traits::Zero;

use crate::cohomology::CohomologyElement;
use crate::error::{GkmError, Result};
use crate::graph::{GkmGraph, OrientedGkmGraph};
use crate::polyring::{Polynomial, Rational, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerVariant {
    /// Product over every edge at the vertex.
    Full,
    /// Product over the descending edges.
    Plus,
    /// Product over the ascending edges.
    Minus,
}

/// Outward weight forms at `v` for the selected edges, as linear polynomials.
pub fn euler_factors(og: &OrientedGkmGraph, v: usize, variant: EulerVariant) -> Vec<Polynomial> {
    let g = og.graph();
    let edges = match variant {
        EulerVariant::Full => g.incident_edges(v).to_vec(),
        EulerVariant::Plus => og.descending_edges(v),
        EulerVariant::Minus => og.ascending_edges(v),
    };
    edges
        .into_iter()
        .map(|e| Polynomial::lin_form(&g.outward_weight(e, v)))
        .collect()
}

pub fn euler_class(og: &OrientedGkmGraph, v: usize, variant: EulerVariant) -> Polynomial {
    euler_factors(og, v, variant)
        .iter()
        .fold(Polynomial::one(og.rank()), |acc, f| &acc * f)
}

fn full_factors(g: &GkmGraph, v: usize) -> Vec<Polynomial> {
    g.incident_edges(v)
        .iter()
        .map(|&e| Polynomial::lin_form(&g.outward_weight(e, v)))
        .collect()
}

/// Euler classes of every vertex of an oriented graph.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerData {
    pub full: Vec<Polynomial>,
    pub plus: Vec<Polynomial>,
    pub minus: Vec<Polynomial>,
}

impl EulerData {
    pub fn new(og: &OrientedGkmGraph) -> Self {
        let per = |variant| {
            (0..og.vertex_count())
                .map(|v| euler_class(og, v, variant))
                .collect()
        };
        EulerData {
            full: per(EulerVariant::Full),
            plus: per(EulerVariant::Plus),
            minus: per(EulerVariant::Minus),
        }
    }
}

/// Cached common-denominator data for repeated integration over one graph.
#[derive(Clone, Debug)]
pub struct Integrator<'g> {
    graph: &'g GkmGraph,
    euler: Vec<Polynomial>,
    /// ∏_{w ≠ v} ν_w for each v.
    cofactors: Vec<Polynomial>,
    /// Every linear factor of ∏_v ν_v.
    factors: Vec<Polynomial>,
}

impl<'g> Integrator<'g> {
    pub fn new(graph: &'g GkmGraph) -> Self {
        let n = graph.vertex_count();
        let k = graph.rank();
        let per_vertex: Vec<Vec<Polynomial>> = (0..n).map(|v| full_factors(graph, v)).collect();
        let euler: Vec<Polynomial> = per_vertex
            .iter()
            .map(|fs| fs.iter().fold(Polynomial::one(k), |acc, f| &acc * f))
            .collect();
        let mut prefix = vec![Polynomial::one(k)];
        for e in &euler {
            let next = prefix.last().expect("nonempty") * e;
            prefix.push(next);
        }
        let mut suffix = vec![Polynomial::one(k); n + 1];
        for v in (0..n).rev() {
            suffix[v] = &suffix[v + 1] * &euler[v];
        }
        let cofactors = (0..n).map(|v| &prefix[v] * &suffix[v + 1]).collect();
        Integrator {
            graph,
            euler,
            cofactors,
            factors: per_vertex.into_iter().flatten().collect(),
        }
    }

    pub fn euler(&self, v: usize) -> &Polynomial {
        &self.euler[v]
    }

    /// `Σ_v f(v) ∏_{w≠v} ν_w`.
    pub fn numerator(&self, f: &CohomologyElement<'_>) -> Polynomial {
        f.values()
            .iter()
            .zip(&self.cofactors)
            .filter(|(value, _)| !value.is_zero())
            .fold(Polynomial::zero(self.graph.rank()), |acc, (value, co)| &acc + &(value * co))
    }

    /// Exact integral of a homogeneous class of degree equal to the valence.
    pub fn integrate(&self, f: &CohomologyElement<'_>) -> Result<Rational> {
        let n = self.graph.valence();
        if f.is_zero() {
            return Ok(Rational::zero());
        }
        match f.degree() {
            Some(d) if d == n => {}
            other => {
                return Err(GkmError::DegreeError(format!(
                    "integrand must be homogeneous of degree {n}, got {}",
                    other.map_or("a mixed-degree class".to_string(), |d| format!("degree {d}"))
                )))
            }
        }
        let mut quotient = self.numerator(f);
        for ell in &self.factors {
            quotient = quotient
                .divide_by_linear(ell)
                .map_err(|_| GkmError::NonConstant(format!("numerator is not divisible by {ell}")))?;
        }
        quotient
            .as_constant()
            .ok_or_else(|| GkmError::NonConstant(format!("quotient {quotient} is not constant")))
    }

    /// The numerator for a class of degree below the valence must vanish.
    pub fn integrate_low_degree_zero(&self, f: &CohomologyElement<'_>) -> Result<()> {
        let n = self.graph.valence();
        if let Some(d) = f.degree() {
            if d >= n {
                return Err(GkmError::DegreeError(format!(
                    "expected degree below {n}, got {d}"
                )));
            }
        }
        let num = self.numerator(f);
        if num.is_zero() {
            Ok(())
        } else {
            Err(GkmError::NonZero(num.to_string()))
        }
    }

    /// `Σ_v f(v)(x) / ν_v(x)` at a point; `None` when some ν_v vanishes there.
    pub fn evaluate_at(&self, f: &CohomologyElement<'_>, point: &WeightVector) -> Result<Option<Rational>> {
        let mut total = Rational::zero();
        for (value, nu) in f.values().iter().zip(&self.euler) {
            let denom = nu.evaluate(point)?;
            if denom.is_zero() {
                return Ok(None);
            }
            total += value.evaluate(point)? / denom;
        }
        Ok(Some(total))
    }

    /// The first `count` points `(1, t, t^2, ...)` for primes t = 2, 3, 5, ...
    /// at which no Euler class vanishes.
    pub fn generic_points(&self, count: usize) -> Vec<WeightVector> {
        let k = self.graph.rank();
        let mut out = Vec::new();
        let mut t: i64 = 1;
        while out.len() < count {
            t += 1;
            if !is_prime(t) {
                continue;
            }
            let mut comps = Vec::with_capacity(k);
            let mut power = 1i64;
            for _ in 0..k {
                comps.push(power);
                power = power.saturating_mul(t);
            }
            let point = WeightVector::from_ints(&comps);
            let clear = self
                .euler
                .iter()
                .all(|nu| !nu.evaluate(&point).map(|x| x.is_zero()).unwrap_or(true));
            if clear {
                out.push(point);
            }
        }
        out
    }

    /// Integrates exactly and confirms the value by evaluating the
    /// localization sum at two generic points.
    pub fn integrate_checked(&self, f: &CohomologyElement<'_>) -> Result<Rational> {
        let exact = self.integrate(f)?;
        for point in self.generic_points(2) {
            let sampled = self.evaluate_at(f, &point)?.expect("generic point");
            if sampled != exact {
                return Err(GkmError::Mismatch(format!(
                    "localization sum at {point} is {sampled}, exact quotient is {exact}"
                )));
            }
        }
        Ok(exact)
    }
}

fn is_prime(t: i64) -> bool {
    t >= 2 && (2..).take_while(|d| d * d <= t).all(|d| t % d != 0)
}

pub fn integrate(f: &CohomologyElement<'_>) -> Result<Rational> {
    Integrator::new(f.graph()).integrate(f)
}

pub fn integrate_low_degree_zero(f: &CohomologyElement<'_>) -> Result<()> {
    Integrator::new(f.graph()).integrate_low_degree_zero(f)
}
