//! End-to-end intersection-cycle runs on the cone corpus, against traces
//! frozen from an independent computer-algebra run: component primes,
//! multiplicities, step indices and conservation totals.

use num_bigint::BigInt;

use formring_core::poly::{parse_polynomial, RingDescriptor};
use formring_core::sv::{bezout_check, build_product_join, sv_cycle, SvTrace};
use formring_core::Ideal;

fn cone(vars: &[&str], gens: &[&str]) -> Ideal {
    let r = RingDescriptor::new(vars.to_vec()).unwrap();
    Ideal::new(
        &r,
        gens.iter()
            .map(|t| parse_polynomial(t, &r).unwrap())
            .collect(),
    )
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn run(x: &Ideal, y: &Ideal, seed: u64) -> SvTrace {
    let setup = build_product_join(x, y, seed, 10_000).unwrap();
    let trace = sv_cycle(&setup).unwrap();
    assert!(trace.exhausted, "chain must reach the unit ideal");
    let report = bezout_check(&trace).unwrap();
    assert!(
        report.conserved,
        "conservation failed: {} vs {}",
        report.total, report.expected
    );
    trace
}

/// (step, dimension, multiplicity, degree) per component, sorted.
fn shape(trace: &SvTrace) -> Vec<(usize, i64, BigInt, BigInt)> {
    trace.shape()
}

#[test]
fn transverse_lines_total_one() {
    let x = cone(&["x0", "x1"], &["x0"]);
    let y = cone(&["x0", "x1"], &["x1"]);
    let trace = run(&x, &y, 1);
    assert_eq!(trace.bezout_total, big(1));
    // single harvested component: the diagonal point-cone at step 2
    assert_eq!(shape(&trace), vec![(2, 0, big(1), big(1))]);
    let comp = &trace.v_cycles[1].1[0];
    assert_eq!(comp.prime.ideal.canonical_key(), "x0, x1, y0, y1");

    // two-seed agreement: same multiset of (dim, mult, deg)
    let trace2 = run(&x, &y, 2);
    assert_eq!(shape(&trace), shape(&trace2));
}

#[test]
fn coordinate_cross_total_four() {
    // two coordinate lines in the projective plane, self-intersection
    let x = cone(&["x0", "x1", "x2"], &["x0*x1"]);
    let trace = run(&x, &x, 1);
    assert_eq!(trace.bezout_total, big(4));
    // frozen trace: two diagonal planes at step 2, the axis line with
    // multiplicity 2 at step 3
    assert_eq!(
        shape(&trace),
        vec![
            (2, 2, big(1), big(1)),
            (2, 2, big(1), big(1)),
            (3, 1, big(2), big(1)),
        ]
    );
    let step2: Vec<String> = trace.v_cycles[1]
        .1
        .iter()
        .map(|c| c.prime.ideal.canonical_key())
        .collect();
    assert_eq!(
        step2,
        vec![
            "x0 - y0, x1, x2 - y2, y1",
            "x0, x1 - y1, x2 - y2, y0"
        ]
    );
    let step3: Vec<String> = trace.v_cycles[2]
        .1
        .iter()
        .map(|c| c.prime.ideal.canonical_key())
        .collect();
    assert_eq!(step3, vec!["x0, x1, x2 - y2, y0, y1"]);

    let trace2 = run(&x, &x, 2);
    assert_eq!(shape(&trace), shape(&trace2));
}

#[test]
fn three_concurrent_lines_total_nine() {
    // three concurrent lines in the projective plane, self-intersection:
    // the conservation law forces 9; the split (three diagonal planes of
    // weight 1, the common-point axis with multiplicity 6) is recorded from
    // the independent oracle run, not asserted a priori
    let x = cone(&["x0", "x1", "x2"], &["x0^2*x1 + x0*x1^2"]);
    let trace = run(&x, &x, 1);
    assert_eq!(trace.bezout_total, big(9));
    assert_eq!(
        shape(&trace),
        vec![
            (2, 2, big(1), big(1)),
            (2, 2, big(1), big(1)),
            (2, 2, big(1), big(1)),
            (3, 1, big(6), big(1)),
        ]
    );
    let trace2 = run(&x, &x, 2);
    assert_eq!(shape(&trace), shape(&trace2));
}
