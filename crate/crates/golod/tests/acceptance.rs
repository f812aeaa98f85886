//! Desk-scale acceptance suite. Each criterion prints a single pass/fail
//! line; run with `cargo test --test acceptance -- --nocapture` to see the
//! full list at once.

use std::collections::BTreeMap;
use std::time::Instant;

use golod::corpus::{random_complex, random_ideal, rng_from_seed, IdealParams};
use golod::field::{Field, PrimeField, Rationals};
use golod::golod::{
    build_product_order, check_strong_gcd, golod_bound_series, taylor_betti, BettiTable,
};
use golod::homology::{coboundary_matrix, faces_of_degree, is_coboundary, Cochain};
use golod::ideal::{probe_symbolic_factorization, squarefree_product_check, MonomialIdeal};
use golod::moment_angle::{
    check_triviality, hochster_betti, ma_basis, ma_product, verify_join_dual_pipeline,
    CohomologyClass, Verdict,
};
use golod::monomial::{parse_monomial, Monomial, MonomialOrderSpec};
use golod::simplicial::{
    complex_from_squarefree_ideal, join, shift_ideal, widen_ideal, SimplicialComplex,
};

fn report(number: u32, name: &str, ok: bool) {
    println!(
        "criterion {number:02} {name}: {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {number:02} {name} failed");
}

fn product_corpus(count: usize) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let params = IdealParams {
        width: 5,
        max_generators: 5,
        max_degree: 3,
        squarefree: false,
    };
    let mut rng = rng_from_seed(0xA1);
    (0..count)
        .map(|_| (random_ideal(&mut rng, &params), random_ideal(&mut rng, &params)))
        .collect()
}

fn product_order_passes(ideal: &MonomialIdeal) -> bool {
    let ord = MonomialOrderSpec::default_lex(ideal.width());
    let order = build_product_order(ideal, &ord);
    check_strong_gcd(ideal, &order).unwrap().passed
}

#[test]
fn criterion_01_product_ideals_satisfy_strong_gcd() {
    let start = Instant::now();
    let ok = product_corpus(500)
        .iter()
        .all(|(i, j)| product_order_passes(&i.product(j).unwrap()));
    let in_time = start.elapsed().as_secs() < 60;
    report(1, "product ideals pass the product order", ok && in_time);
}

#[test]
fn criterion_02_powers_satisfy_strong_gcd() {
    let ok = product_corpus(250).iter().all(|(i, j)| {
        [i, j].into_iter().all(|ideal| {
            [2u32, 3].into_iter().all(|k| {
                product_order_passes(&ideal.power(k).unwrap())
            })
        })
    });
    report(2, "squares and cubes pass the product order", ok);
}

#[test]
fn criterion_03_factoring_symbolic_powers_satisfy_strong_gcd() {
    let params = IdealParams {
        width: 4,
        max_generators: 3,
        max_degree: 3,
        squarefree: true,
    };
    let mut rng = rng_from_seed(0xA3);
    let mut ok = true;
    let mut least_counts: BTreeMap<(u32, Option<u32>), usize> = BTreeMap::new();
    for _ in 0..50 {
        let ideal = random_ideal(&mut rng, &params);
        let probe = probe_symbolic_factorization(&ideal, 8).unwrap();
        for (&k, &least) in &probe.least_factor {
            *least_counts.entry((k, least)).or_insert(0) += 1;
            if least.is_some() {
                ok &= product_order_passes(&ideal.symbolic_power(k).unwrap());
            }
        }
    }
    let summary: Vec<String> = least_counts
        .iter()
        .map(|((k, c), n)| match c {
            Some(c) => format!("k={k} c={c}:{n}"),
            None => format!("k={k} none:{n}"),
        })
        .collect();
    println!("criterion 03 least-factor report: {}", summary.join(", "));
    report(3, "factoring symbolic powers pass the product order", ok);
}

#[test]
fn criterion_04_squarefree_product_predicate_matches_oracle() {
    let params = IdealParams {
        width: 4,
        max_generators: 4,
        max_degree: 3,
        squarefree: false,
    };
    let mut rng = rng_from_seed(0xA4);
    let ok = (0..500).all(|_| {
        let i = random_ideal(&mut rng, &params);
        let j = random_ideal(&mut rng, &params);
        let predicate = squarefree_product_check(&i, &j).unwrap().holds();
        predicate == i.product(&j).unwrap().is_squarefree()
    });
    report(4, "squarefree-product predicate agrees with the oracle", ok);
}

#[test]
fn criterion_05_join_dual_identity_on_random_pairs() {
    let mut rng = rng_from_seed(0xA5);
    let ok = (0..100).all(|_| {
        let d1 = random_complex(&mut rng, 4);
        let d2 = random_complex(&mut rng, 4);
        let lhs = widen_ideal(&d1.stanley_reisner_ideal().unwrap(), 4)
            .product(&shift_ideal(&d2.stanley_reisner_ideal().unwrap(), 4))
            .unwrap();
        let joined = join(&d1.alexander_dual().unwrap(), &d2.alexander_dual().unwrap()).unwrap();
        let gamma = joined.complex.alexander_dual().unwrap();
        gamma.stanley_reisner_ideal().unwrap() == lhs
    });
    report(5, "dual-join-dual reproduces the product ideal", ok);
}

#[test]
fn criterion_06_hochster_equals_taylor() {
    let params = IdealParams {
        width: 5,
        max_generators: 5,
        max_degree: 3,
        squarefree: true,
    };
    let mut rng = rng_from_seed(0xA6);
    let q = Rationals;
    let f2 = PrimeField::new(2).unwrap();
    let ok = (0..100).all(|_| {
        let ideal = random_ideal(&mut rng, &params);
        hochster_betti(&ideal, &q).unwrap() == taylor_betti(&ideal, &q).unwrap()
            && hochster_betti(&ideal, &f2).unwrap() == taylor_betti(&ideal, &f2).unwrap()
    });
    report(6, "Hochster and Taylor Betti tables agree", ok);
}

#[test]
fn criterion_07_product_complexes_have_trivial_multiplication() {
    let q = Rationals;
    let mut rng = rng_from_seed(0xA7);
    let pipeline_ok = (0..50).all(|_| {
        let d1 = random_complex(&mut rng, 4);
        let d2 = random_complex(&mut rng, 4);
        let rep = verify_join_dual_pipeline(&d1, &d2, &q).unwrap();
        rep.product_identity_holds && rep.triviality.verdict == Verdict::Trivial
    });

    let params = IdealParams {
        width: 3,
        max_generators: 2,
        max_degree: 2,
        squarefree: false,
    };
    let mut done = 0;
    let mut polarized_ok = true;
    while done < 50 {
        let i = random_ideal(&mut rng, &params);
        let j = random_ideal(&mut rng, &params);
        let product = i.product(&j).unwrap();
        let polarized = product.polarize().unwrap();
        if polarized.width() > 7 {
            continue;
        }
        let gamma = complex_from_squarefree_ideal(&polarized).unwrap();
        polarized_ok &= check_triviality(&gamma, &q).unwrap().verdict == Verdict::Trivial;
        done += 1;
    }
    report(
        7,
        "pipeline and polarized products are trivial",
        pipeline_ok && polarized_ok,
    );
}

#[test]
fn criterion_08_four_cycle_negative_control() {
    let start = Instant::now();
    let q = Rationals;
    let ideal = MonomialIdeal::from_generators(
        4,
        vec![
            parse_monomial("x1*x3", 4).unwrap(),
            parse_monomial("x2*x4", 4).unwrap(),
        ],
    )
    .unwrap();
    let mut expected = BettiTable::default();
    expected.entries.insert((0, Monomial::unit(4)), 1);
    expected
        .entries
        .insert((1, parse_monomial("x1*x3", 4).unwrap()), 1);
    expected
        .entries
        .insert((1, parse_monomial("x2*x4", 4).unwrap()), 1);
    expected
        .entries
        .insert((2, parse_monomial("x1*x2*x3*x4", 4).unwrap()), 1);
    let betti_ok = hochster_betti(&ideal, &q).unwrap() == expected;

    let four_cycle = SimplicialComplex::from_facet_lists(
        4,
        &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
    )
    .unwrap();
    let mut degrees: Vec<usize> = ma_basis(&four_cycle, &q)
        .unwrap()
        .iter()
        .map(|c| c.total_degree())
        .collect();
    degrees.sort();
    let basis_ok = degrees == vec![0, 3, 3, 6];

    let verdict = check_triviality(&four_cycle, &q).unwrap();
    let witness_ok = match (&verdict.verdict, &verdict.witness) {
        (Verdict::Nontrivial, Some((a, b))) => {
            (a.sigma == vec![1, 3] && b.sigma == vec![2, 4]
                || a.sigma == vec![2, 4] && b.sigma == vec![1, 3])
                && a.p == 0
                && b.p == 0
        }
        _ => false,
    };
    let in_time = start.elapsed().as_millis() < 1000;
    report(
        8,
        "four-cycle negative control",
        betti_ok && basis_ok && witness_ok && in_time,
    );
}

#[test]
fn criterion_09_triangle_symbolic_square() {
    let triangle = MonomialIdeal::from_generators(
        3,
        vec![
            parse_monomial("x1*x2", 3).unwrap(),
            parse_monomial("x1*x3", 3).unwrap(),
            parse_monomial("x2*x3", 3).unwrap(),
        ],
    )
    .unwrap();
    let symbolic = triangle.symbolic_power(2).unwrap();
    let mut expected: Vec<Monomial> = ["x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"]
        .iter()
        .map(|s| parse_monomial(s, 3).unwrap())
        .collect();
    expected.sort();
    let mut got = symbolic.generators().to_vec();
    got.sort();
    let generators_ok = got == expected;

    let vertex_product = parse_monomial("x1*x2*x3", 3).unwrap();
    let membership_ok = triangle.symbolic_membership(&vertex_product, 2).unwrap()
        && !triangle.power(2).unwrap().contains(&vertex_product).unwrap();
    report(9, "triangle symbolic square", generators_ok && membership_ok);
}

#[test]
fn criterion_10_bound_series() {
    let hypersurface =
        MonomialIdeal::from_generators(1, vec![parse_monomial("x1^2", 1).unwrap()]).unwrap();
    let q = Rationals;
    let betti = taylor_betti(&hypersurface, &q).unwrap();
    let series = golod_bound_series(&betti, 1, 10).unwrap();
    let ones_ok = series
        .coefficients
        .iter()
        .all(|c| *c == num::BigRational::from_integer(1.into()));

    let empty = BettiTable::default();
    let binomial = golod_bound_series(&empty, 4, 10).unwrap();
    let expected = [1i64, 4, 6, 4, 1, 0, 0, 0, 0, 0, 0];
    let binomial_ok = binomial
        .coefficients
        .iter()
        .zip(expected.iter())
        .all(|(c, &e)| *c == num::BigRational::from_integer(e.into()));
    report(10, "bound series worked examples", ones_ok && binomial_ok);
}

fn combine(
    q: &Rationals,
    left: &Option<CohomologyClass<Rationals>>,
    sign: i64,
    right: &Option<CohomologyClass<Rationals>>,
    sigma: u32,
    degree: i32,
    delta: &SimplicialComplex,
) -> Cochain<Rationals> {
    let len = faces_of_degree(&delta.induced_subcomplex(sigma), degree)
        .unwrap()
        .len();
    let mut out = Cochain::zero(q, degree, len);
    if let Some(c) = left {
        for (o, e) in out.coeffs.iter_mut().zip(c.representative.coeffs.iter()) {
            *o = q.add(o, e);
        }
    }
    if let Some(c) = right {
        let s = q.from_i64(sign);
        for (o, e) in out.coeffs.iter_mut().zip(c.representative.coeffs.iter()) {
            *o = q.sub(o, &q.mul(&s, e));
        }
    }
    out
}

fn vanishes_in(
    delta: &SimplicialComplex,
    sigma: u32,
    cochain: &Cochain<Rationals>,
    q: &Rationals,
) -> bool {
    is_coboundary(&delta.induced_subcomplex(sigma), cochain, q)
        .unwrap()
        .is_some()
}

#[test]
fn criterion_11_algebra_axioms() {
    let q = Rationals;
    let mut rng = rng_from_seed(0xAB);
    let mut ok = true;
    for trial in 0..30 {
        let n = 2 + trial % 4;
        let delta = random_complex(&mut rng, n);
        let basis = ma_basis(&delta, &q).unwrap();
        let unit = CohomologyClass::unit(&q);
        for a in &basis {
            // unit law, exact at the cochain level
            let ua = ma_product(&delta, &unit, a, &q).unwrap();
            ok &= ua.as_ref() == Some(a) || (a.representative.is_zero(&q) && ua.is_none());
        }
        for (i, a) in basis.iter().enumerate() {
            for b in basis.iter().skip(i) {
                if a.sigma & b.sigma != 0 {
                    continue;
                }
                let ab = ma_product(&delta, a, b, &q).unwrap();
                let ba = ma_product(&delta, b, a, &q).unwrap();
                // cocycle closure
                if let Some(c) = &ab {
                    let sub = delta.induced_subcomplex(c.sigma);
                    let m = coboundary_matrix(&sub, c.p, &q).unwrap();
                    ok &= m
                        .apply(&q, &c.representative.coeffs)
                        .iter()
                        .all(|e| q.is_zero(e));
                }
                // graded commutativity with respect to total degree
                let sign = if (a.total_degree() * b.total_degree()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let sigma = a.sigma | b.sigma;
                let degree = a.p + b.p + 1;
                let diff = combine(&q, &ab, sign, &ba, sigma, degree, &delta);
                ok &= vanishes_in(&delta, sigma, &diff, &q);
                // associativity modulo coboundaries
                for c in basis.iter() {
                    if c.sigma & sigma != 0 {
                        continue;
                    }
                    let left = match &ab {
                        Some(p) => ma_product(&delta, p, c, &q).unwrap(),
                        None => None,
                    };
                    let bc = ma_product(&delta, b, c, &q).unwrap();
                    let right = match &bc {
                        Some(p) => ma_product(&delta, a, p, &q).unwrap(),
                        None => None,
                    };
                    let all = sigma | c.sigma;
                    let deg = a.p + b.p + c.p + 2;
                    let diff = combine(&q, &left, 1, &right, all, deg, &delta);
                    ok &= vanishes_in(&delta, all, &diff, &q);
                }
            }
        }
    }
    report(11, "cohomology algebra axioms", ok);
}
