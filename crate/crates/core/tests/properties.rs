use gkm_core::cohomology::{basis, thom_class, CohomologyElement, Direction};
use gkm_core::corpus;
use gkm_core::document::GraphDocument;
use gkm_core::geometry::{classify_tetragon, TetragonClass};
use gkm_core::linalg::determinant;
use gkm_core::localization::integrate;
use gkm_core::polyring::{congruent_mod_linear, rational, Monomial, Polynomial, Rational, WeightVector};
use gkm_core::GkmGraph;
use proptest::prelude::*;

const RANK: usize = 2;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

fn polynomial(max_degree: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0..=max_degree), (0..=max_degree), small_rational()), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            RANK,
            terms.into_iter().map(|(a, b, c)| (Monomial::new(vec![a, b]), c)),
        )
    })
}

fn nonzero_weight() -> impl Strategy<Value = WeightVector> {
    (-5i64..=5, -5i64..=5)
        .prop_filter("nonzero", |&(a, b)| a != 0 || b != 0)
        .prop_map(|(a, b)| WeightVector::from_ints(&[a, b]))
}

fn point() -> impl Strategy<Value = WeightVector> {
    (small_rational(), small_rational()).prop_map(|(a, b)| WeightVector::new(vec![a, b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero(RANK));
        prop_assert_eq!(&a * &Polynomial::one(RANK), a.clone());
    }

    #[test]
    fn division_undoes_multiplication(q in polynomial(3), w in nonzero_weight()) {
        let l = Polynomial::lin_form(&w);
        prop_assert_eq!((&q * &l).divide_by_linear(&l).unwrap(), q);
    }

    #[test]
    fn congruence_is_divisibility(f in polynomial(2), g in polynomial(2), w in nonzero_weight(), q in polynomial(2), tie in any::<bool>()) {
        let l = Polynomial::lin_form(&w);
        // half the time force a genuine congruence
        let g = if tie { &f + &(&q * &l) } else { g };
        let divisible = (&f - &g).divide_by_linear(&l).is_ok();
        prop_assert_eq!(congruent_mod_linear(&f, &g, &l), divisible);
        if tie {
            prop_assert!(divisible);
        }
        // restriction to the kernel vanishes exactly on multiples
        prop_assert_eq!((&f - &g).restrict_to_kernel(&l).unwrap().is_zero(), divisible);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(3), b in polynomial(3), p in point()) {
        let (ea, eb) = (a.evaluate(&p).unwrap(), b.evaluate(&p).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&p).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&p).unwrap(), &ea + &eb);
    }
}

fn cofactor_determinant(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return rational(1, 1);
    }
    let n = m.len();
    let mut total = rational(0, 1);
    for j in 0..n {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_determinant(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn square_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (0usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(prop_oneof![Just(rational(0, 1)), small_rational()], n), n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn elimination_determinant_matches_cofactor_expansion(m in square_matrix()) {
        prop_assert_eq!(determinant(&m), cofactor_determinant(&m));
    }
}

type Pt = (i64, i64);

fn orient(a: Pt, b: Pt, c: Pt) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn segments_cross(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

/// Shape from first principles: crossed when a pair of opposite sides meet,
/// concave when one point lies inside the triangle of the other three.
fn tetragon_oracle(p: [Pt; 4]) -> TetragonClass {
    if segments_cross(p[0], p[1], p[2], p[3]) || segments_cross(p[1], p[2], p[3], p[0]) {
        return TetragonClass::Crossed;
    }
    for i in 0..4 {
        let t: Vec<Pt> = (0..4).filter(|&j| j != i).map(|j| p[j]).collect();
        let s = [orient(t[0], t[1], p[i]), orient(t[1], t[2], p[i]), orient(t[2], t[0], p[i])];
        if s.iter().all(|&x| x == s[0]) {
            return TetragonClass::Concave;
        }
    }
    TetragonClass::Convex
}

fn general_quad() -> impl Strategy<Value = [Pt; 4]> {
    prop::array::uniform4((-8i64..=8, -8i64..=8)).prop_filter("no three collinear", |p| {
        (0..4).all(|i| orient(p[(i + 1) % 4], p[(i + 2) % 4], p[(i + 3) % 4]) != 0)
    })
}

fn wv(p: Pt) -> WeightVector {
    WeightVector::from_ints(&[p.0, p.1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tetragon_shape_matches_oracle_and_symmetries(p in general_quad(), shift in 0usize..4) {
        let w: Vec<WeightVector> = p.iter().map(|&x| wv(x)).collect();
        let base = classify_tetragon([&w[0], &w[1], &w[2], &w[3]]).unwrap();
        prop_assert_eq!(base, tetragon_oracle(p));
        let r = |i: usize| &w[(i + shift) % 4];
        prop_assert_eq!(classify_tetragon([r(0), r(1), r(2), r(3)]).unwrap(), base);
        prop_assert_eq!(classify_tetragon([&w[3], &w[2], &w[1], &w[0]]).unwrap(), base);
    }
}

fn respell(q: &str, k: i64) -> String {
    let (n, d) = match q.split_once('/') {
        Some((n, d)) => (n.parse::<i64>().unwrap(), d.parse::<i64>().unwrap()),
        None => (q.parse::<i64>().unwrap(), 1),
    };
    format!("{}/{}", n * k, d * k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn documents_round_trip(which in 0usize..8, k in prop_oneof![1i64..=7, -7i64..=-1]) {
        let inst = &corpus::instances()[which % corpus::instances().len()];
        let doc = inst.document();
        let mut noisy = doc.clone();
        for v in &mut noisy.vertices {
            v.mu = v.mu.iter().map(|s| respell(s, k)).collect();
        }
        for e in &mut noisy.edges {
            e.weight = e.weight.iter().map(|s| respell(s, k)).collect();
        }
        let canonical = doc.canonicalized().unwrap();
        let reparsed = GraphDocument::from_json(&noisy.to_json()).unwrap();
        prop_assert_eq!(&reparsed, &noisy);
        prop_assert_eq!(reparsed.canonicalized().unwrap(), canonical.clone());
        prop_assert_eq!(GraphDocument::from_json(&canonical.to_json()).unwrap(), canonical);
    }

    #[test]
    fn reversing_xi_complements_the_index(which in 0usize..8, a in -9i64..=9, b in -9i64..=9) {
        let g = corpus::instances()[which % corpus::instances().len()].graph().unwrap();
        let xi = WeightVector::from_ints(&[a, b]);
        let Ok(up) = g.orient(&xi) else {
            prop_assert!(g.orient(&-&xi).is_err());
            return Ok(());
        };
        let down = g.orient(&-&xi).unwrap();
        for v in 0..g.vertex_count() {
            prop_assert_eq!(down.down_degree(v), g.valence() - up.down_degree(v));
        }
        prop_assert_eq!(up.is_index_increasing(), down.is_index_increasing());
    }
}

fn generic_index_increasing(g: &GkmGraph, a: i64, b: i64) -> Option<WeightVector> {
    let xi = WeightVector::from_ints(&[a, b]);
    g.orient(&xi).ok().filter(|og| og.is_index_increasing()).map(|_| xi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn thom_classes_swap_under_reversal(which in 0usize..8, a in -7i64..=7, b in -7i64..=7) {
        let g = corpus::instances()[which % corpus::instances().len()].graph().unwrap();
        let Some(xi) = generic_index_increasing(&g, a, b) else { return Ok(()) };
        let up = g.orient(&xi).unwrap();
        let down = g.orient(&-&xi).unwrap();
        for v in 0..g.vertex_count() {
            let plus = thom_class(&up, v, Direction::Plus).unwrap();
            let minus = thom_class(&down, v, Direction::Minus).unwrap();
            prop_assert_eq!(plus.values(), minus.values());
        }
    }

    #[test]
    fn integration_is_linear(coeffs in prop::collection::vec(small_rational(), 10)) {
        let g = corpus::graph("cp3-k4").unwrap();
        let top = basis(&g, 3).unwrap();
        let mut sum = CohomologyElement::zero(&g);
        let mut expected = rational(0, 1);
        for (f, c) in top.iter().zip(&coeffs) {
            sum = sum.add(&f.scale(c)).unwrap();
            expected += c * integrate(f).unwrap();
        }
        prop_assert_eq!(integrate(&sum).unwrap(), expected);
    }
}

/// Exhaustive search for integer multiples `k_e` (1..=16) of the primitive
/// edge directions of `tol-d` that satisfy the pairing condition at every
/// edge, in plain i64 arithmetic.
#[test]
fn tol_d_axial_function_is_unique_up_to_scale() {
    let names = ["o", "p1", "q1", "p2", "q2", "r"];
    let mu: [Pt; 6] = [(0, 0), (2, 3), (2, 5), (8, 2), (8, 6), (0, 8)];
    // o-p2, p2-q2, q2-r, o-r, o-p1, p1-q1, q1-r, p2-q1, p1-q2
    let edges: [(usize, usize); 9] = [(0, 3), (3, 4), (4, 5), (0, 5), (0, 1), (1, 2), (2, 5), (3, 2), (1, 4)];
    let gcd = |a: i64, b: i64| -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let dirs: Vec<Pt> = edges
        .iter()
        .map(|&(f, t)| {
            let d = (mu[t].0 - mu[f].0, mu[t].1 - mu[f].1);
            let g = gcd(d.0, d.1);
            (d.0 / g, d.1 / g)
        })
        .collect();
    let at = |v: usize| -> Vec<usize> { (0..9).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect() };
    let incident: Vec<Vec<usize>> = (0..6).map(at).collect();
    assert!(incident.iter().all(|x| x.len() == 3), "{names:?}");

    let outward = |k: &[i64], e: usize, v: usize| -> Pt {
        let s = if edges[e].0 == v { k[e] } else { -k[e] };
        (dirs[e].0 * s, dirs[e].1 * s)
    };
    let cross = |a: Pt, b: Pt| a.0 * b.1 - a.1 * b.0;
    let pairing_holds = |k: &[i64], e: usize| -> bool {
        let (p, q) = edges[e];
        let alpha = outward(k, e, p);
        let a: Vec<Pt> = incident[p].iter().filter(|&&x| x != e).map(|&x| outward(k, x, p)).collect();
        let b: Vec<Pt> = incident[q].iter().filter(|&&x| x != e).map(|&x| outward(k, x, q)).collect();
        let ok = |x: Pt, y: Pt| cross((y.0 - x.0, y.1 - x.1), alpha) == 0;
        (ok(a[0], b[0]) && ok(a[1], b[1])) || (ok(a[0], b[1]) && ok(a[1], b[0]))
    };
    let order = [0usize, 3, 4, 1, 7, 5, 8, 6, 2];
    let closes: Vec<Vec<usize>> = (0..9)
        .map(|step| {
            let known: Vec<usize> = order[..=step].to_vec();
            let was: Vec<usize> = order[..step].to_vec();
            (0..9)
                .filter(|&e| {
                    let need: Vec<usize> = incident[edges[e].0].iter().chain(&incident[edges[e].1]).copied().collect();
                    need.iter().all(|x| known.contains(x)) && !need.iter().all(|x| was.contains(x))
                })
                .collect()
        })
        .collect();

    fn search(
        step: usize,
        k: &mut [i64; 9],
        order: &[usize; 9],
        closes: &[Vec<usize>],
        holds: &dyn Fn(&[i64], usize) -> bool,
        found: &mut Vec<[i64; 9]>,
    ) {
        if step == 9 {
            found.push(*k);
            return;
        }
        for value in 1..=16 {
            k[order[step]] = value;
            if closes[step].iter().all(|&e| holds(&k[..], e)) {
                search(step + 1, k, order, closes, holds, found);
            }
        }
        k[order[step]] = 0;
    }

    let mut found = Vec::new();
    search(0, &mut [0; 9], &order, &closes, &pairing_holds, &mut found);
    assert_eq!(found, vec![[2, 6, 2, 6, 3, 6, 3, 5, 5], [4, 12, 4, 12, 6, 12, 6, 10, 10]]);

    let shipped = corpus::graph("tol-d").unwrap();
    for (e, &(f, t)) in edges.iter().enumerate() {
        let w = shipped.edge_between(shipped.lookup(names[f]).unwrap(), shipped.lookup(names[t]).unwrap()).unwrap();
        let got = shipped.outward_weight(w, shipped.lookup(names[f]).unwrap());
        assert_eq!(got, WeightVector::from_ints(&[dirs[e].0 * found[0][e], dirs[e].1 * found[0][e]]));
    }
}
