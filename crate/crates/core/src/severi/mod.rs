//! Checker for the contraction behaviour of the minimal primes of G_I A:
//! evaluates the equivalent conditions
//!   (i)   every minimal prime of G contracts to a minimal prime of A/I,
//!   (i')  G and A/I have the same number of minimal primes,
//!   (ii)  the analytic spread is strictly below the local dimension at
//!         every candidate prime strictly containing a minimal prime of I,
//!   (iii) symbolic powers sit inside integral closures of powers (n ≤ n_max),
//!   (iv)  the same for the tail of the window (evidence only),
//! and audits the expected agreement pattern under an equidimensionality
//! proxy for the quasi-unmixedness hypothesis.

use serde::Serialize;

use crate::error::Error;
use crate::gb::Ideal;
use crate::graded::{
    analytic_spread, assoc_graded, local_dimension, minimal_primes, GradedPresentation,
    PresentedAlgebra,
};
use crate::monomial::MonomialIdeal;
use crate::poly::{Polynomial, RingDescriptor};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    Unverified,
}

impl Verdict {
    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            _ => None,
        }
    }
}

/// One row of the condition (ii) table.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateRow {
    pub prime: String,
    pub spread: i64,
    pub local_dim: i64,
    pub strict: bool,
    /// Exact fiber computation (maximal substitutable prime) vs the flagged
    /// general-prime difference formula.
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Proxies {
    /// (prime, localized components equidimensional?) at every tested prime.
    pub equidimensional_at: Vec<(String, bool)>,
    pub all_pass: bool,
    /// Reduced localized graded ring is a domain, per minimal prime of I.
    pub g_red_domain_at: Vec<(String, Verdict)>,
}

/// Verdicts and re-checkable witnesses for one instance.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub instance: String,
    pub verdict_i: Verdict,
    /// Offending graded primes (canonical keys) with their contractions.
    pub witnesses_i: Vec<(String, String)>,
    pub verdict_i_prime: Verdict,
    pub minimal_prime_counts: Option<(usize, usize)>,
    pub verdict_ii: Verdict,
    pub candidate_rows: Vec<CandidateRow>,
    pub witnesses_ii: Vec<String>,
    pub verdict_iii: Verdict,
    /// (n, offending generator) for the first failing inclusion.
    pub witness_iii: Option<(u32, String)>,
    pub verdict_iv: Verdict,
    pub verdict_equality: Verdict,
    pub equality_failure: Option<(u32, String)>,
    pub proxies: Proxies,
    pub n_max: u32,
    pub notes: Vec<String>,
    pub audit: AuditVerdict,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditVerdict {
    /// Proxy passed and the applicable verdicts agree.
    ConsistentEquivalence,
    /// Proxy failed; divergence recorded, expected by the theory.
    RecordedDivergence,
    /// Proxy passed but the verdicts disagree: an implementation failure.
    BuildFailure,
    /// Not enough decided verdicts to audit.
    Inconclusive,
}

/// A corpus instance: the presented algebra, the ideal, optional extra
/// condition-(ii) candidates and the window bound.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub ring: RingDescriptor,
    pub ambient_gens: Vec<Polynomial>,
    pub ideal_gens: Vec<Polynomial>,
    pub user_candidates: Vec<Vec<Polynomial>>,
    pub n_max: u32,
}

impl Instance {
    pub fn algebra(&self) -> Result<PresentedAlgebra, Error> {
        PresentedAlgebra::new(&self.ring, Ideal::new(&self.ring, self.ambient_gens.clone()))
    }

    pub fn graded(&self) -> Result<GradedPresentation, Error> {
        assoc_graded(&self.algebra()?, &self.ideal_gens)
    }
}

/// (offending prime, its contraction) pairs.
pub type ConditionWitnesses = Vec<(String, String)>;
/// Per-prime hypothesis verdicts.
pub type HypothesisTable = Vec<(String, Verdict)>;
/// (verdict, (|Min G|, |Min A/I|) when resolved, hypothesis table).
pub type CountsAndHypothesis = (Verdict, Option<(usize, usize)>, HypothesisTable);
/// ((iii), (iv), first failing (n, element)).
pub type WindowVerdicts = (Verdict, Verdict, Option<(u32, String)>);

/// Condition (i): each minimal prime of G must contract to a minimal prime
/// of A/I.
pub fn check_condition_i(
    g: &GradedPresentation,
) -> Result<(Verdict, ConditionWitnesses), Error> {
    let graded_min = match g.minimal_primes() {
        Ok(ws) => ws,
        Err(Error::Unresolved(_)) => return Ok((Verdict::Unverified, vec![])),
        Err(e) => return Err(e),
    };
    let zero_min = match minimal_primes(g.zero_part_ideal()) {
        Ok(ws) => ws,
        Err(Error::Unresolved(_)) => return Ok((Verdict::Unverified, vec![])),
        Err(e) => return Err(e),
    };
    let mut witnesses = Vec::new();
    for w in &graded_min {
        let c = g.contract_degree_zero(&w.ideal)?;
        if !zero_min.iter().any(|m| m.ideal.equals(&c)) {
            witnesses.push((w.canonical_key(), c.canonical_key()));
        }
    }
    let verdict = if witnesses.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok((verdict, witnesses))
}

/// Condition (i'): |Min(G)| = |Min(A/I)|, with the contraction bijection
/// verified when the counts agree. Also evaluates the side hypothesis that
/// the reduced localized graded ring is a domain at every minimal prime of
/// I (through the localization correspondence: exactly one minimal prime
/// of G contracts into the given prime).
pub fn check_condition_i_prime(g: &GradedPresentation) -> Result<CountsAndHypothesis, Error> {
    let graded_min = match g.minimal_primes() {
        Ok(ws) => ws,
        Err(Error::Unresolved(_)) => return Ok((Verdict::Unverified, None, vec![])),
        Err(e) => return Err(e),
    };
    let zero_min = match minimal_primes(g.zero_part_ideal()) {
        Ok(ws) => ws,
        Err(Error::Unresolved(_)) => return Ok((Verdict::Unverified, None, vec![])),
        Err(e) => return Err(e),
    };
    let counts = (graded_min.len(), zero_min.len());

    let contractions: Result<Vec<Ideal>, Error> = graded_min
        .iter()
        .map(|w| g.contract_degree_zero(&w.ideal))
        .collect();
    let contractions = contractions?;

    let mut hypothesis = Vec::new();
    for m in &zero_min {
        let into: usize = contractions
            .iter()
            .filter(|c| {
                c.generators()
                    .iter()
                    .all(|gen| m.ideal.radical_membership(gen))
            })
            .count();
        let v = if into == 1 { Verdict::Holds } else { Verdict::Fails };
        hypothesis.push((m.canonical_key(), v));
    }

    let mut verdict = if counts.0 == counts.1 {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    if verdict == Verdict::Holds {
        // the correspondence must be a bijection onto Min(A/I)
        let mut hit = vec![false; zero_min.len()];
        for c in &contractions {
            match zero_min.iter().position(|m| m.ideal.equals(c)) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => {
                    verdict = Verdict::Fails;
                    break;
                }
            }
        }
        if verdict == Verdict::Holds && !hit.iter().all(|&b| b) {
            verdict = Verdict::Fails;
        }
    }
    Ok((verdict, Some(counts), hypothesis))
}

/// Auto-generated candidate primes for condition (ii): minimal primes of
/// pairwise sums of Min(I), plus the irrelevant maximal ideal, plus any
/// user-supplied primes, all filtered to those strictly containing some
/// minimal prime of I. The quantifier over all primes is not decided;
/// verdicts are relative to this documented finite set.
pub fn condition_ii_candidates(
    algebra: &PresentedAlgebra,
    zero_ideal: &Ideal,
    user: &[Vec<Polynomial>],
) -> Result<Vec<Ideal>, Error> {
    let ring = algebra.ring();
    let zero_min = minimal_primes(zero_ideal)?;
    let mut candidates: Vec<Ideal> = Vec::new();
    for i in 0..zero_min.len() {
        for j in i + 1..zero_min.len() {
            let sum = zero_min[i].ideal.sum(&zero_min[j].ideal);
            if sum.is_unit() {
                continue;
            }
            for w in minimal_primes(&sum)? {
                candidates.push(w.ideal);
            }
        }
    }
    let maximal = Ideal::new(
        ring,
        (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, i))
            .collect(),
    );
    candidates.push(maximal);
    for gens in user {
        candidates.push(Ideal::new(ring, gens.clone()));
    }
    // strict containment of some minimal prime
    let mut filtered: Vec<Ideal> = Vec::new();
    for q in candidates {
        let strict = zero_min.iter().any(|m| {
            m.ideal.generators().iter().all(|g| q.contains(g)) && !q.equals(&m.ideal)
        });
        if strict && !filtered.iter().any(|p| p.equals(&q)) {
            filtered.push(q);
        }
    }
    filtered.sort_by_key(|q| q.canonical_key());
    Ok(filtered)
}

/// Condition (ii) on the candidate set: analytic spread strictly below the
/// local dimension at every candidate.
pub fn check_condition_ii(
    g: &GradedPresentation,
    candidates: &[Ideal],
) -> Result<(Verdict, Vec<CandidateRow>, Vec<String>), Error> {
    let algebra = g.origin_algebra();
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for q in candidates {
        let spread = analytic_spread(g, q)?;
        let dim = local_dimension(algebra, q)?;
        let strict = spread.value < dim;
        if !strict {
            witnesses.push(q.canonical_key());
        }
        rows.push(CandidateRow {
            prime: q.canonical_key(),
            spread: spread.value,
            local_dim: dim,
            strict,
            exact: spread.exact,
        });
    }
    let verdict = if rows.iter().all(|r| r.strict) {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok((verdict, rows, witnesses))
}

/// Conditions (iii) and (iv) for a monomial ideal in a polynomial ring:
/// I^(n) ⊆ closure(I^n) for n = 1..n_max, with the tail window
/// [ceil(n_max/2), n_max] as the (iv) evidence.
pub fn check_condition_iii_iv(ideal: &MonomialIdeal, n_max: u32) -> Result<WindowVerdicts, Error> {
    if n_max < 1 {
        return Err(Error::BadExponent(n_max as i64));
    }
    let mut first_failure: Option<(u32, String)> = None;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let symbolic = ideal.symbolic_power(n)?;
        let missing = symbolic
            .generators()
            .iter()
            .find(|m| !ideal.closure_member(m, n));
        if let Some(m) = missing {
            let s = MonomialIdeal::new(ideal.ring(), vec![(*m).clone()])
                .generator_strings()
                .pop()
                .expect("one generator");
            if first_failure.is_none() {
                first_failure = Some((n, s));
            }
            failures.push(n);
        }
    }
    let verdict_iii = if failures.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let tail_start = n_max.div_ceil(2);
    let tail_fails = failures.iter().any(|&n| n >= tail_start);
    let verdict_iv = if tail_fails { Verdict::Fails } else { Verdict::Holds };
    Ok((verdict_iii, verdict_iv, first_failure))
}

/// Equality I^(n) = closure(I^n) for n ≤ n_max, reporting the first n and
/// the inclusion that fails.
pub fn check_equality_symbolic_closure(
    ideal: &MonomialIdeal,
    n_max: u32,
) -> Result<(Verdict, Option<(u32, String)>), Error> {
    for n in 1..=n_max {
        let symbolic = ideal.symbolic_power(n)?;
        let closure = ideal.closure_of_power(n)?;
        let sym_in_closure = closure.contains(&symbolic);
        let closure_in_sym = symbolic.contains(&closure);
        if !(sym_in_closure && closure_in_sym) {
            let side = if !closure_in_sym {
                "closure not inside symbolic power"
            } else {
                "symbolic power not inside closure"
            };
            return Ok((Verdict::Fails, Some((n, side.to_string()))));
        }
    }
    Ok((Verdict::Holds, None))
}

/// Equidimensionality proxy at a prime: all minimal primes of the ambient
/// ideal contained in q have equal dimension.
fn equidimensional_at(algebra: &PresentedAlgebra, q: &Ideal) -> Result<bool, Error> {
    if algebra.ambient_ideal().is_zero_ideal() {
        return Ok(true);
    }
    let comps = minimal_primes(algebra.ambient_ideal())?;
    let dims: Vec<i64> = comps
        .iter()
        .filter(|w| w.ideal.generators().iter().all(|g| q.contains(g)))
        .map(|w| w.ideal.krull_dimension())
        .collect();
    Ok(dims.windows(2).all(|w| w[0] == w[1]))
}

/// The audit: under a passing proxy the decided verdicts among (i), (ii),
/// (iii) must agree; disagreement is a build failure, never theory. Under
/// a failing proxy any divergence is recorded as the expected behaviour.
pub fn audit_equivalences(report: &ConditionReport) -> AuditVerdict {
    let decided: Vec<bool> = [report.verdict_i, report.verdict_ii, report.verdict_iii]
        .iter()
        .filter_map(|v| v.decided())
        .collect();
    if decided.len() < 2 {
        return AuditVerdict::Inconclusive;
    }
    let agree = decided.windows(2).all(|w| w[0] == w[1]);
    // within the window, (iii) => (iv)
    let window_ok = !(report.verdict_iii == Verdict::Holds && report.verdict_iv == Verdict::Fails);
    if report.proxies.all_pass {
        if agree && window_ok {
            AuditVerdict::ConsistentEquivalence
        } else {
            AuditVerdict::BuildFailure
        }
    } else if agree && window_ok {
        AuditVerdict::ConsistentEquivalence
    } else {
        AuditVerdict::RecordedDivergence
    }
}

/// Run every check on an instance and assemble the report.
pub fn full_check(instance: &Instance) -> Result<ConditionReport, Error> {
    let algebra = instance.algebra()?;
    let g = instance.graded()?;
    let mut notes = vec![
        "computed over Q".to_string(),
        "condition (ii) evaluated on the documented finite candidate set".to_string(),
        format!(
            "conditions (iii)/(iv) audited inside the window n <= {}; (iv) verdicts are window-bounded evidence, not proof",
            instance.n_max
        ),
        "quasi-unmixedness replaced by the affine equidimensionality proxy".to_string(),
    ];

    let (verdict_i, witnesses_i) = check_condition_i(&g)?;
    let (verdict_i_prime, counts, hypothesis) = check_condition_i_prime(&g)?;

    let candidates = condition_ii_candidates(&algebra, g.zero_part_ideal(), &instance.user_candidates)?;
    let (verdict_ii, rows, witnesses_ii) = check_condition_ii(&g, &candidates)?;
    if rows.is_empty() {
        notes.push("condition (ii) holds vacuously: no candidate strictly contains a minimal prime".into());
    }
    if rows.iter().any(|r| !r.exact) {
        notes.push(
            "non-maximal candidate rows use the difference formula: heuristic under the equidimensional-fiber hypothesis"
                .into(),
        );
    }

    // (iii)/(iv)/(equality) only for monomial ideals in a polynomial ring
    let monomial_path = algebra.ambient_ideal().is_zero_ideal();
    let (verdict_iii, verdict_iv, witness_iii, verdict_equality, equality_failure) =
        if monomial_path {
            match MonomialIdeal::from_ideal(&Ideal::new(&instance.ring, instance.ideal_gens.clone()))
            {
                Ok(mono) => {
                    let (v3, v4, w3) = check_condition_iii_iv(&mono, instance.n_max)?;
                    let (ve, we) = check_equality_symbolic_closure(&mono, instance.n_max)?;
                    (v3, v4, w3, ve, we)
                }
                Err(_) => (
                    Verdict::NotApplicable,
                    Verdict::NotApplicable,
                    None,
                    Verdict::NotApplicable,
                    None,
                ),
            }
        } else {
            (
                Verdict::NotApplicable,
                Verdict::NotApplicable,
                None,
                Verdict::NotApplicable,
                None,
            )
        };

    // proxies at every tested prime
    let mut equidim = Vec::new();
    let mut all_pass = true;
    for q in &candidates {
        let ok = equidimensional_at(&algebra, q)?;
        all_pass &= ok;
        equidim.push((q.canonical_key(), ok));
    }
    let proxies = Proxies {
        equidimensional_at: equidim,
        all_pass,
        g_red_domain_at: hypothesis,
    };

    let mut report = ConditionReport {
        instance: instance.name.clone(),
        verdict_i,
        witnesses_i,
        verdict_i_prime,
        minimal_prime_counts: counts,
        verdict_ii,
        candidate_rows: rows,
        witnesses_ii,
        verdict_iii,
        witness_iii,
        verdict_iv,
        verdict_equality,
        equality_failure,
        proxies,
        n_max: instance.n_max,
        notes,
        audit: AuditVerdict::Inconclusive,
    };
    report.audit = audit_equivalences(&report);
    if report.audit == AuditVerdict::RecordedDivergence {
        report
            .notes
            .push("equidimensionality proxy fails: divergence between conditions recorded".into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn instance(
        name: &str,
        vars: &[&str],
        ambient: &[&str],
        ideal: &[&str],
        n_max: u32,
    ) -> Instance {
        let ring = RingDescriptor::new(vars.to_vec()).unwrap();
        Instance {
            name: name.into(),
            ambient_gens: ambient
                .iter()
                .map(|t| parse_polynomial(t, &ring).unwrap())
                .collect(),
            ideal_gens: ideal
                .iter()
                .map(|t| parse_polynomial(t, &ring).unwrap())
                .collect(),
            user_candidates: vec![],
            n_max,
            ring,
        }
    }

    #[test]
    fn two_plane_union_records_divergence() {
        let inst = instance("xy-xz", &["x", "y", "z"], &["x*y", "x*z"], &["x"], 3);
        let report = full_check(&inst).unwrap();
        assert_eq!(report.verdict_i, Verdict::Fails);
        assert_eq!(report.witnesses_i.len(), 1);
        assert_eq!(report.witnesses_i[0].1, "x, y, z");
        assert_eq!(report.verdict_i_prime, Verdict::Fails);
        assert_eq!(report.minimal_prime_counts, Some((2, 1)));
        assert_eq!(report.verdict_ii, Verdict::Holds);
        assert_eq!(report.candidate_rows.len(), 1);
        assert_eq!(report.candidate_rows[0].spread, 1);
        assert_eq!(report.candidate_rows[0].local_dim, 2);
        assert_eq!(report.verdict_iii, Verdict::NotApplicable);
        assert!(!report.proxies.all_pass);
        assert_eq!(report.audit, AuditVerdict::RecordedDivergence);
    }

    #[test]
    fn primary_square_ideal_all_hold() {
        let inst = instance("example-2-4", &["x", "y"], &[], &["x^2", "y^2"], 3);
        let report = full_check(&inst).unwrap();
        assert_eq!(report.verdict_i, Verdict::Holds);
        assert_eq!(report.verdict_i_prime, Verdict::Holds);
        assert_eq!(report.minimal_prime_counts, Some((1, 1)));
        assert_eq!(report.verdict_ii, Verdict::Holds);
        assert!(report.candidate_rows.is_empty());
        assert_eq!(report.verdict_iii, Verdict::Holds);
        assert_eq!(report.verdict_iv, Verdict::Holds);
        // closure strictly bigger already at n = 1
        assert_eq!(report.verdict_equality, Verdict::Fails);
        assert_eq!(report.equality_failure.as_ref().unwrap().0, 1);
        assert!(report.proxies.all_pass);
        assert!(report
            .proxies
            .g_red_domain_at
            .iter()
            .all(|(_, v)| *v == Verdict::Holds));
        assert_eq!(report.audit, AuditVerdict::ConsistentEquivalence);
    }

    #[test]
    fn triangle_fails_all_three_consistently() {
        let inst = instance(
            "triangle",
            &["x", "y", "z"],
            &[],
            &["x*y", "x*z", "y*z"],
            3,
        );
        let report = full_check(&inst).unwrap();
        assert_eq!(report.verdict_i, Verdict::Fails);
        assert_eq!(report.verdict_i_prime, Verdict::Fails);
        assert_eq!(report.minimal_prime_counts, Some((4, 3)));
        assert_eq!(report.verdict_ii, Verdict::Fails);
        let m_row = report
            .candidate_rows
            .iter()
            .find(|r| r.prime == "x, y, z")
            .unwrap();
        assert_eq!((m_row.spread, m_row.local_dim), (3, 3));
        assert_eq!(report.verdict_iii, Verdict::Fails);
        let (n, w) = report.witness_iii.clone().unwrap();
        assert_eq!(n, 2);
        assert_eq!(w, "x*y*z");
        assert_eq!(report.verdict_iv, Verdict::Fails);
        assert!(report.proxies.all_pass);
        assert_eq!(report.audit, AuditVerdict::ConsistentEquivalence);
    }

    #[test]
    fn principal_and_plane_instances_hold() {
        for (name, vars, ideal) in [
            ("principal-line", &["x", "y"][..], &["x"][..]),
            ("codim2-plane", &["x", "y", "z"][..], &["x", "y"][..]),
        ] {
            let inst = instance(name, vars, &[], ideal, 3);
            let report = full_check(&inst).unwrap();
            assert_eq!(report.verdict_i, Verdict::Holds, "{name}");
            assert_eq!(report.verdict_ii, Verdict::Holds, "{name}");
            assert_eq!(report.verdict_iii, Verdict::Holds, "{name}");
            assert_eq!(report.verdict_equality, Verdict::Holds, "{name}");
            assert_eq!(report.audit, AuditVerdict::ConsistentEquivalence, "{name}");
        }
    }

    #[test]
    fn product_diagonal_plane_case() {
        let inst = instance(
            "product-diagonal-p1",
            &["x0", "x1", "y0", "y1"],
            &["x0*x1", "y0*y1"],
            &["x0 - y0", "x1 - y1"],
            3,
        );
        let report = full_check(&inst).unwrap();
        assert_eq!(report.verdict_i, Verdict::Fails);
        assert_eq!(report.minimal_prime_counts, Some((3, 2)));
        assert_eq!(report.verdict_ii, Verdict::Fails);
        assert!(report.proxies.all_pass);
        assert_eq!(report.audit, AuditVerdict::ConsistentEquivalence);
    }
}
