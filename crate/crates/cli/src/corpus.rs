//! The bundled corpus: run the full audit on every instance, the cycle runs
//! where an sv block is present, and the cross-module property suites.

use anyhow::Result;
use serde_json::json;

use formring_core::error::Error;
use formring_core::gb::groebner_basis;
use formring_core::graded::{assoc_graded, minimal_primes, PresentedAlgebra};
use formring_core::monomial::MonomialIdeal;
use formring_core::poly::{coeff_int, MonomialOrder, Polynomial};
use formring_core::severi::{full_check, AuditVerdict, Verdict};
use formring_core::sv::{bezout_check, build_product_join, sv_cycle};
use formring_core::Ideal;

use crate::commands::{check_exit_code, report_from_check, trace_payload, Ctx};
use crate::instance::{parse_instance, InstanceFile};
use crate::report::Report;

pub const BUNDLED: &[(&str, &str)] = &[
    (
        "example-xy-xz",
        include_str!("../instances/example-xy-xz.ideal"),
    ),
    ("example-2-4", include_str!("../instances/example-2-4.ideal")),
    (
        "principal-line",
        include_str!("../instances/principal-line.ideal"),
    ),
    (
        "codim2-plane",
        include_str!("../instances/codim2-plane.ideal"),
    ),
    ("triangle", include_str!("../instances/triangle.ideal")),
    (
        "product-diagonal-p1",
        include_str!("../instances/product-diagonal-p1.ideal"),
    ),
    (
        "transverse-lines-p1",
        include_str!("../instances/transverse-lines-p1.ideal"),
    ),
    ("cross-p2", include_str!("../instances/cross-p2.ideal")),
    (
        "three-lines-p2",
        include_str!("../instances/three-lines-p2.ideal"),
    ),
];

pub fn bundled_instances() -> Result<Vec<InstanceFile>> {
    BUNDLED
        .iter()
        .map(|(name, text)| parse_instance(text, name))
        .collect()
}

struct PropertyOutcome {
    name: &'static str,
    passed: usize,
    failed: Vec<String>,
}

impl PropertyOutcome {
    fn new(name: &'static str) -> Self {
        PropertyOutcome {
            name,
            passed: 0,
            failed: Vec::new(),
        }
    }

    fn record(&mut self, label: &str, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(label.to_string());
        }
    }
}

fn key_ideals(file: &InstanceFile) -> Result<Vec<(String, Ideal)>, Error> {
    let inst = &file.instance;
    let mut out = Vec::new();
    let mut gens = inst.ambient_gens.clone();
    gens.extend(inst.ideal_gens.iter().cloned());
    out.push((
        format!("{}:zero-part", inst.name),
        Ideal::new(&inst.ring, gens),
    ));
    let a = PresentedAlgebra::new(&inst.ring, Ideal::new(&inst.ring, inst.ambient_gens.clone()))?;
    let g = assoc_graded(&a, &inst.ideal_gens)?;
    out.push((
        format!("{}:graded-defining", inst.name),
        g.defining_ideal().clone(),
    ));
    Ok(out)
}

/// The property suites of the acceptance gate, evaluated over every bundled
/// instance. Returns (per-suite results, all passed).
fn run_property_suites(files: &[InstanceFile]) -> Result<(Vec<serde_json::Value>, bool), Error> {
    let order = MonomialOrder::DegRevLex;
    let mut gb_idem = PropertyOutcome::new("gb-idempotence");
    let mut membership = PropertyOutcome::new("membership-consistency");
    let mut counting = PropertyOutcome::new("minimal-prime-counting");
    let mut equidim = PropertyOutcome::new("equidimensionality-transfer");
    let mut closure_chain = PropertyOutcome::new("closure-and-symbolic-chains");
    let mut dim_orders = PropertyOutcome::new("dimension-order-independence");
    let mut zero_recovery = PropertyOutcome::new("zero-part-recovery");
    let mut normality = PropertyOutcome::new("reduced-monomial-presentation-normality");

    for file in files {
        let inst = &file.instance;
        for (label, ideal) in key_ideals(file)? {
            // reduced basis is a fixed point of the engine
            let gb = ideal.canonical_gens();
            let again = groebner_basis(&gb, ideal.ring(), &order);
            gb_idem.record(&label, again == *gb);

            // generators and pairwise products reduce to zero; 1 does not
            // reduce to zero for proper ideals
            let mut ok = ideal
                .generators()
                .iter()
                .all(|g| ideal.normal_form(g, &order).is_zero());
            for (i, a) in ideal.generators().iter().enumerate() {
                for b in &ideal.generators()[i..] {
                    ok &= ideal.normal_form(&a.mul(b), &order).is_zero();
                }
            }
            if ideal.is_proper() {
                ok &= !ideal
                    .normal_form(&Polynomial::one(ideal.ring()), &order)
                    .is_zero();
            }
            membership.record(&label, ok);

            // dimension independent of the order used for the basis: compare
            // against the lex leading-term route
            let dim_a = ideal.krull_dimension();
            let lex = MonomialOrder::Lex;
            let lex_lt = Ideal::new(
                ideal.ring(),
                ideal
                    .groebner(&lex)
                    .iter()
                    .map(|p| {
                        Polynomial::from_term(
                            ideal.ring(),
                            p.leading_term(&lex).expect("nonzero").0.clone(),
                            coeff_int(1),
                        )
                    })
                    .collect(),
            );
            dim_orders.record(&label, dim_a == lex_lt.krull_dimension());
        }

        let a = PresentedAlgebra::new(
            &inst.ring,
            Ideal::new(&inst.ring, inst.ambient_gens.clone()),
        )?;
        let g = assoc_graded(&a, &inst.ideal_gens)?;
        zero_recovery.record(&inst.name, g.verify_zero_part_recovery());

        // counting: |Min(G)| >= |Min(A/I)| where both sides resolve
        match (
            minimal_primes(g.defining_ideal()),
            minimal_primes(g.zero_part_ideal()),
        ) {
            (Ok(gm), Ok(zm)) => counting.record(&inst.name, gm.len() >= zm.len()),
            (Err(Error::Unresolved(_)), _) | (_, Err(Error::Unresolved(_))) => {}
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }

        // equidimensional A transfers to G
        let ambient_equidim = if a.ambient_ideal().is_zero_ideal() {
            true
        } else {
            match minimal_primes(a.ambient_ideal()) {
                Ok(ws) => {
                    let dims: Vec<i64> =
                        ws.iter().map(|w| w.ideal.krull_dimension()).collect();
                    dims.windows(2).all(|w| w[0] == w[1])
                }
                Err(Error::Unresolved(_)) => false,
                Err(e) => return Err(e),
            }
        };
        if ambient_equidim {
            if let Ok(ws) = minimal_primes(g.defining_ideal()) {
                let dim_g = g.dimension();
                equidim.record(
                    &inst.name,
                    ws.iter().all(|w| w.ideal.krull_dimension() == dim_g),
                );
            }
        }

        // monomial chains: I^n ⊆ I^(n), I^n ⊆ closure(I^n), closure
        // idempotence, for n ≤ 3
        if inst.ambient_gens.is_empty() {
            if let Ok(mono) =
                MonomialIdeal::from_ideal(&Ideal::new(&inst.ring, inst.ideal_gens.clone()))
            {
                let mut ok = true;
                for n in 1..=3u32 {
                    let p = mono.power(n);
                    let s = mono.symbolic_power(n)?;
                    let c = mono.closure_of_power(n)?;
                    ok &= s.contains(&p) && c.contains(&p);
                }
                let c1 = mono.integral_closure()?;
                ok &= c1.integral_closure()? == c1;
                closure_chain.record(&inst.name, ok);

                // a reduced monomial presentation of G makes I normal
                if let Ok(g_mono) = MonomialIdeal::from_ideal(g.defining_ideal()) {
                    if g_mono.radical() == g_mono {
                        let mut normal = true;
                        for n in 1..=3u32 {
                            normal &= mono.closure_of_power(n)? == mono.power(n);
                        }
                        normality.record(&inst.name, normal);
                    }
                }
            }
        }
    }

    let outcomes = [
        gb_idem,
        membership,
        counting,
        equidim,
        closure_chain,
        dim_orders,
        zero_recovery,
        normality,
    ];
    let all_ok = outcomes.iter().all(|o| o.failed.is_empty());
    let values = outcomes
        .iter()
        .map(|o| {
            json!({
                "suite": o.name,
                "passed": o.passed,
                "failed": o.failed,
            })
        })
        .collect();
    Ok((values, all_ok))
}

/// Run every bundled instance and the property suites. Exit code is the
/// worst over all parts.
pub fn cmd_corpus(files: &[InstanceFile], ctx: &Ctx) -> (Report, i32, Vec<(String, Report)>) {
    let start = std::time::Instant::now();
    let mut report = Report::new("corpus", "corpus");
    let mut sub_reports: Vec<(String, Report)> = Vec::new();
    let mut worst = 0i32;
    let mut summary = Vec::new();

    for file in files {
        let name = file.instance.name.clone();
        // full audit
        let mut check_report = Report::new(&name, "check");
        let code = match full_check(&file.instance) {
            Ok(check) => {
                report_from_check(&mut check_report, &check);
                let code = check_exit_code(&check);
                summary.push(json!({
                    "instance": name,
                    "part": "check",
                    "audit": check_report.verdicts.get("audit").cloned(),
                    "exit": code,
                }));
                code
            }
            Err(e) => {
                check_report.verdict("error", e.to_string());
                let code = crate::commands::exit_code_for(&e);
                summary.push(json!({
                    "instance": name, "part": "check", "error": e.to_string(), "exit": code,
                }));
                code
            }
        };
        worst = worst.max(code);
        sub_reports.push((format!("{name}-check"), check_report));

        // cycle runs for instances with an sv block, two seeds
        if let Some(sv) = &file.sv {
            let seeds = if ctx.seeds.is_empty() {
                vec![1, 2]
            } else {
                ctx.seeds.clone()
            };
            let bound = ctx.bound.or(sv.bound).unwrap_or(10_000);
            let mut sv_report = Report::new(&name, "svcycle");
            sv_report.seeds = seeds.clone();
            let mut code = 0;
            let mut traces = Vec::new();
            let mut shapes = Vec::new();
            let mut conserved = true;
            for &seed in &seeds {
                match build_product_join(&sv.x_ideal(), &sv.y_ideal(), seed, bound)
                    .and_then(|setup| sv_cycle(&setup))
                {
                    Ok(trace) => {
                        let rep = bezout_check(&trace).map(|r| r.conserved).unwrap_or(false);
                        conserved &= rep;
                        shapes.push(trace.shape());
                        traces.push(trace_payload(&trace, seed));
                    }
                    Err(e) => {
                        sv_report.verdict("error", e.to_string());
                        code = crate::commands::exit_code_for(&e);
                        break;
                    }
                }
            }
            if code == 0 {
                let agreement = shapes.windows(2).all(|w| w[0] == w[1]);
                sv_report.verdict("bezout-conserved", conserved);
                sv_report.verdict("seed-agreement", agreement);
                sv_report.payload.insert("traces".into(), json!(traces));
                if !(conserved && agreement) {
                    code = 1;
                }
            }
            summary.push(json!({
                "instance": name, "part": "svcycle", "exit": code,
            }));
            worst = worst.max(code);
            sub_reports.push((format!("{name}-svcycle"), sv_report));
        }
    }

    // property suites
    match run_property_suites(files) {
        Ok((suites, all_ok)) => {
            report.payload.insert("property-suites".into(), json!(suites));
            report.verdict("properties-pass", all_ok);
            if !all_ok {
                worst = worst.max(1);
            }
        }
        Err(e) => {
            report.verdict("properties-error", e.to_string());
            worst = worst.max(crate::commands::exit_code_for(&e));
        }
    }

    report.payload.insert("runs".into(), json!(summary));
    report.verdict("instances", files.len());
    report.verdict("exit", worst);
    if ctx.timings {
        let mut t = std::collections::BTreeMap::new();
        t.insert("total-ms".to_string(), start.elapsed().as_millis());
        report.timings_ms = Some(t);
    }
    (report, worst, sub_reports)
}

/// Sanity marker used by the acceptance suite to assert the expected audit
/// pattern over the bundle.
pub fn expected_audit(name: &str) -> Option<AuditVerdict> {
    match name {
        "example-xy-xz" => Some(AuditVerdict::RecordedDivergence),
        "example-2-4" | "principal-line" | "codim2-plane" | "triangle"
        | "product-diagonal-p1" | "transverse-lines-p1" | "cross-p2" | "three-lines-p2" => {
            Some(AuditVerdict::ConsistentEquivalence)
        }
        _ => None,
    }
}

/// Expected decided verdict for condition (i), used by the acceptance gate.
pub fn expected_condition_i(name: &str) -> Option<Verdict> {
    match name {
        "example-2-4" | "principal-line" | "codim2-plane" | "transverse-lines-p1" => {
            Some(Verdict::Holds)
        }
        "example-xy-xz" | "triangle" | "product-diagonal-p1" | "cross-p2"
        | "three-lines-p2" => Some(Verdict::Fails),
        _ => None,
    }
}
