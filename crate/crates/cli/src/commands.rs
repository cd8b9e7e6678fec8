//! One function per subcommand: compute, assemble the report, pick the exit
//! code. Exit codes: 0 = all audits pass, 1 = verdict failure, 2 =
//! unresolved/unverified encountered, 3 = input error.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::Result;
use serde_json::{json, Value};

use formring_core::error::Error;
use formring_core::graded::{assoc_graded, rees_presentation, PresentedAlgebra};
use formring_core::monomial::MonomialIdeal;
use formring_core::poly::MonomialOrder;
use formring_core::severi::{full_check, AuditVerdict, ConditionReport, Verdict};
use formring_core::sv::{
    bezout_check, build_product_join, distinguished_varieties, sv_cycle, SvTrace,
};
use formring_core::Ideal;

use crate::instance::InstanceFile;
use crate::report::Report;

pub struct Ctx {
    pub order: MonomialOrder,
    pub nmax: Option<u32>,
    pub seeds: Vec<u64>,
    pub bound: Option<u64>,
    pub timings: bool,
}

impl Ctx {
    fn resolved_nmax(&self, file: &InstanceFile) -> u32 {
        self.nmax.unwrap_or(file.instance.n_max)
    }

    fn resolved_seeds(&self, file: &InstanceFile) -> Vec<u64> {
        if !self.seeds.is_empty() {
            return self.seeds.clone();
        }
        if let Some(sv) = &file.sv {
            if let Some(s) = sv.seed {
                return vec![s];
            }
        }
        if let Ok(env) = std::env::var("FORMRING_SEED") {
            if let Ok(s) = env.parse() {
                return vec![s];
            }
        }
        vec![1]
    }

    fn resolved_bound(&self, file: &InstanceFile) -> u64 {
        self.bound
            .or_else(|| file.sv.as_ref().and_then(|sv| sv.bound))
            .unwrap_or(10_000)
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Unresolved(_) => 2,
        Error::Internal(_) => 1,
        _ => 3,
    }
}

fn finish(mut report: Report, start: Instant, ctx: &Ctx, code: i32) -> (Report, i32) {
    if ctx.timings {
        let mut t = BTreeMap::new();
        t.insert("total-ms".to_string(), start.elapsed().as_millis());
        report.timings_ms = Some(t);
    }
    (report, code)
}

fn zero_plus_ideal(file: &InstanceFile) -> Ideal {
    let inst = &file.instance;
    let mut gens = inst.ambient_gens.clone();
    gens.extend(inst.ideal_gens.iter().cloned());
    Ideal::new(&inst.ring, gens)
}

fn algebra(file: &InstanceFile) -> Result<PresentedAlgebra, Error> {
    let inst = &file.instance;
    PresentedAlgebra::new(&inst.ring, Ideal::new(&inst.ring, inst.ambient_gens.clone()))
}

pub fn cmd_gb(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "gb");
    let ideal = zero_plus_ideal(file);
    let basis = ideal.groebner(&ctx.order);
    report.verdict("basis-size", basis.len());
    report.payload.insert(
        "order".into(),
        json!(match ctx.order {
            MonomialOrder::Lex => "lex",
            _ => "degrevlex",
        }),
    );
    report.payload.insert(
        "basis".into(),
        json!(basis.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    );
    finish(report, start, ctx, 0)
}

pub fn cmd_dim(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "dim");
    let ideal = zero_plus_ideal(file);
    let dim = ideal.krull_dimension();
    report.verdict("dimension", dim);
    report.verdict("unit-ideal", dim == -1);
    finish(report, start, ctx, 0)
}

pub fn cmd_minprimes(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "minprimes");
    let ideal = zero_plus_ideal(file);
    match formring_core::graded::minimal_primes(&ideal) {
        Ok(ws) => {
            report.verdict("count", ws.len());
            report.payload.insert(
                "components".into(),
                json!(ws
                    .iter()
                    .map(|w| {
                        json!({
                            "generators": w.ideal.canonical_key(),
                            "certificate": serde_json::to_value(w.certificate).expect("serializable"),
                        })
                    })
                    .collect::<Vec<_>>()),
            );
            finish(report, start, ctx, 0)
        }
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn cmd_rees(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "rees");
    let mut run = || -> Result<(), Error> {
        let a = algebra(file)?;
        let j = rees_presentation(&a, &file.instance.ideal_gens)?;
        report
            .payload
            .insert("ring".into(), json!(j.ring().vars()));
        report.payload.insert(
            "kernel".into(),
            json!(j
                .canonical_gens()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()),
        );
        report.verdict("kernel-size", j.canonical_gens().len());
        Ok(())
    };
    match run() {
        Ok(()) => finish(report, start, ctx, 0),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn cmd_assocgraded(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "assocgraded");
    let mut run = || -> Result<(), Error> {
        let a = algebra(file)?;
        let g = assoc_graded(&a, &file.instance.ideal_gens)?;
        report
            .payload
            .insert("ring".into(), json!(g.ambient().vars()));
        report.payload.insert(
            "defining".into(),
            json!(g
                .defining_ideal()
                .canonical_gens()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()),
        );
        report.payload.insert(
            "zero-part".into(),
            json!(g
                .zero_part_ideal()
                .canonical_gens()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()),
        );
        report.verdict("t-homogeneous", g.verify_t_homogeneous());
        report.verdict("zero-part-recovered", g.verify_zero_part_recovery());
        report.verdict("dimension", g.dimension());
        Ok(())
    };
    match run() {
        Ok(()) => finish(report, start, ctx, 0),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn cmd_spread(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "spread");
    let mut run = || -> Result<i32, Error> {
        let a = algebra(file)?;
        let g = assoc_graded(&a, &file.instance.ideal_gens)?;
        let candidates = formring_core::severi::condition_ii_candidates(
            &a,
            g.zero_part_ideal(),
            &file.instance.user_candidates,
        )?;
        let (verdict, rows, witnesses) =
            formring_core::severi::check_condition_ii(&g, &candidates)?;
        report.verdict("condition-ii", format!("{verdict:?}").to_lowercase());
        report.payload.insert(
            "rows".into(),
            serde_json::to_value(&rows).expect("serializable"),
        );
        for w in witnesses {
            report.witnesses.push(json!(w));
        }
        Ok(0)
    };
    match run() {
        Ok(code) => finish(report, start, ctx, code),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

fn monomial_ideal_of(file: &InstanceFile) -> Result<MonomialIdeal, Error> {
    if !file.instance.ambient_gens.is_empty() {
        return Err(Error::Input(
            "symbolic powers and closures need a monomial ideal in a polynomial ring".into(),
        ));
    }
    MonomialIdeal::from_ideal(&Ideal::new(
        &file.instance.ring,
        file.instance.ideal_gens.clone(),
    ))
}

pub fn cmd_symbolic(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "symbolic");
    let n_max = ctx.resolved_nmax(file);
    let mut run = || -> Result<(), Error> {
        let ideal = monomial_ideal_of(file)?;
        let mut powers = Vec::new();
        let mut contains_all = true;
        for n in 1..=n_max {
            let s = ideal.symbolic_power(n)?;
            contains_all &= s.contains(&ideal.power(n));
            powers.push(json!({
                "n": n,
                "generators": s.generator_strings(),
            }));
        }
        report.payload.insert("powers".into(), json!(powers));
        report.verdict("contains-ordinary-powers", contains_all);
        Ok(())
    };
    match run() {
        Ok(()) => finish(report, start, ctx, 0),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn cmd_closure(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "closure");
    let n_max = ctx.resolved_nmax(file);
    let mut run = || -> Result<(), Error> {
        let ideal = monomial_ideal_of(file)?;
        let mut closures = Vec::new();
        let mut contains_all = true;
        for n in 1..=n_max {
            let c = ideal.closure_of_power(n)?;
            contains_all &= c.contains(&ideal.power(n));
            closures.push(json!({
                "n": n,
                "generators": c.generator_strings(),
            }));
        }
        let c1 = ideal.integral_closure()?;
        report.verdict("idempotent", c1.integral_closure()? == c1);
        report.verdict("contains-powers", contains_all);
        report.payload.insert("closures".into(), json!(closures));
        Ok(())
    };
    match run() {
        Ok(()) => finish(report, start, ctx, 0),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "not-applicable",
        Verdict::Unverified => "unverified",
    }
}

pub fn report_from_check(report: &mut Report, check: &ConditionReport) {
    report.verdict("i", verdict_str(check.verdict_i));
    report.verdict("i-prime", verdict_str(check.verdict_i_prime));
    report.verdict("ii", verdict_str(check.verdict_ii));
    report.verdict("iii", verdict_str(check.verdict_iii));
    report.verdict("iv", verdict_str(check.verdict_iv));
    report.verdict("equality", verdict_str(check.verdict_equality));
    report.verdict(
        "audit",
        match check.audit {
            AuditVerdict::ConsistentEquivalence => "consistent-equivalence",
            AuditVerdict::RecordedDivergence => "recorded-divergence",
            AuditVerdict::BuildFailure => "build-failure",
            AuditVerdict::Inconclusive => "inconclusive",
        },
    );
    if let Some((g, z)) = check.minimal_prime_counts {
        report.verdict("minimal-primes-graded", g);
        report.verdict("minimal-primes-zero-part", z);
    }
    for (p, c) in &check.witnesses_i {
        report
            .witnesses
            .push(json!({"condition": "i", "prime": p, "contraction": c}));
    }
    for q in &check.witnesses_ii {
        report
            .witnesses
            .push(json!({"condition": "ii", "prime": q}));
    }
    if let Some((n, m)) = &check.witness_iii {
        report
            .witnesses
            .push(json!({"condition": "iii", "n": n, "element": m}));
    }
    if let Some((n, side)) = &check.equality_failure {
        report
            .witnesses
            .push(json!({"condition": "equality", "n": n, "inclusion": side}));
    }
    report.proxies.insert(
        "equidimensional-at".into(),
        json!(check
            .proxies
            .equidimensional_at
            .iter()
            .map(|(p, ok)| json!({"prime": p, "equidimensional": ok}))
            .collect::<Vec<_>>()),
    );
    report
        .proxies
        .insert("all-pass".into(), json!(check.proxies.all_pass));
    report.proxies.insert(
        "g-red-domain-at".into(),
        json!(check
            .proxies
            .g_red_domain_at
            .iter()
            .map(|(p, v)| json!({"prime": p, "verdict": verdict_str(*v)}))
            .collect::<Vec<_>>()),
    );
    report.payload.insert(
        "candidate-rows".into(),
        serde_json::to_value(&check.candidate_rows).expect("serializable"),
    );
    report.verdict("n-max", check.n_max);
    report.notes.extend(check.notes.iter().cloned());
}

pub fn check_exit_code(check: &ConditionReport) -> i32 {
    if check.audit == AuditVerdict::BuildFailure {
        return 1;
    }
    let unverified = [
        check.verdict_i,
        check.verdict_i_prime,
        check.verdict_ii,
    ].contains(&Verdict::Unverified);
    if unverified {
        2
    } else {
        0
    }
}

pub fn cmd_check(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "check");
    let mut inst = file.instance.clone();
    if let Some(n) = ctx.nmax {
        inst.n_max = n;
    }
    match full_check(&inst) {
        Ok(check) => {
            report_from_check(&mut report, &check);
            let code = check_exit_code(&check);
            finish(report, start, ctx, code)
        }
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn trace_payload(trace: &SvTrace, seed: u64) -> Value {
    json!({
        "seed": seed,
        "bezout": {
            "expected": trace.bezout_expected.to_string(),
            "total": trace.bezout_total.to_string(),
            "conserved": trace.bezout_total == trace.bezout_expected,
        },
        "exhausted": trace.exhausted,
        "beta-dims": trace
            .beta_chain
            .iter()
            .map(|b| b.krull_dimension())
            .collect::<Vec<_>>(),
        "v": trace
            .v_cycles
            .iter()
            .flat_map(|(k, comps)| {
                comps.iter().map(move |c| {
                    json!({
                        "step": k,
                        "prime": c.prime.ideal.canonical_key(),
                        "certificate": serde_json::to_value(c.prime.certificate)
                            .expect("serializable"),
                        "multiplicity": c.multiplicity.to_string(),
                        "dimension": c.dimension,
                        "degree": c.degree.to_string(),
                    })
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn cmd_svcycle(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "svcycle");
    let sv = match &file.sv {
        Some(sv) => sv,
        None => {
            report.verdict("error", "instance has no sv block");
            return finish(report, start, ctx, 3);
        }
    };
    let seeds = ctx.resolved_seeds(file);
    let bound = ctx.resolved_bound(file);
    report.seeds = seeds.clone();
    let mut run = || -> Result<i32, Error> {
        let mut traces = Vec::new();
        let mut shapes = Vec::new();
        let mut conserved = true;
        for &seed in &seeds {
            let setup = build_product_join(&sv.x_ideal(), &sv.y_ideal(), seed, bound)?;
            let trace = sv_cycle(&setup)?;
            let rep = bezout_check(&trace)?;
            conserved &= rep.conserved;
            shapes.push(trace.shape());
            traces.push(trace_payload(&trace, seed));
        }
        let agreement = shapes.windows(2).all(|w| w[0] == w[1]);
        report.verdict("bezout-conserved", conserved);
        report.verdict("seed-agreement", agreement);
        report.payload.insert("traces".into(), json!(traces));
        report.notes.push(
            "hyperplane count = dim(product); rows beyond the diagonal form count are fresh random recombinations"
                .into(),
        );
        report
            .notes
            .push("two-seed agreement substitutes for genericity of the coefficients".into());
        Ok(if conserved && agreement { 0 } else { 1 })
    };
    match run() {
        Ok(code) => finish(report, start, ctx, code),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

pub fn cmd_distinguished(file: &InstanceFile, ctx: &Ctx) -> (Report, i32) {
    let start = Instant::now();
    let mut report = Report::new(&file.instance.name, "distinguished");
    let mut run = || -> Result<i32, Error> {
        let a = algebra(file)?;
        let (g, dv) = distinguished_varieties(&a, &file.instance.ideal_gens)?;
        let embedded_count = dv.iter().filter(|d| d.embedded).count();
        let (verdict_i, _) = formring_core::severi::check_condition_i(&g)?;
        let consistent = match verdict_i {
            Verdict::Holds => embedded_count == 0,
            Verdict::Fails => embedded_count > 0,
            _ => false,
        };
        report.verdict("embedded-count", embedded_count);
        report.verdict("condition-i", verdict_str(verdict_i));
        report.verdict("cross-check-consistent", consistent);
        report.payload.insert(
            "varieties".into(),
            json!(dv
                .iter()
                .map(|d| {
                    json!({
                        "graded-prime": d.graded_prime.ideal.canonical_key(),
                        "contraction": d.contraction.canonical_key(),
                        "embedded": d.embedded,
                    })
                })
                .collect::<Vec<_>>()),
        );
        for d in dv.iter().filter(|d| d.embedded) {
            report
                .witnesses
                .push(json!({"embedded-contraction": d.contraction.canonical_key()}));
        }
        Ok(if consistent { 0 } else { 1 })
    };
    match run() {
        Ok(code) => finish(report, start, ctx, code),
        Err(e) => {
            report.verdict("error", e.to_string());
            let code = exit_code_for(&e);
            finish(report, start, ctx, code)
        }
    }
}

