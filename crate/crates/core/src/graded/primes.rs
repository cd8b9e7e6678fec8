//! Minimal primes of presented quotients by recursive splitting.
//!
//! The splitter is deliberately partial: it decomposes along supported
//! factorizations (monomial content, binary-form linear factors) and
//! certifies leaves through a small set of airtight certificate classes.
//! Anything outside that fragment is reported, never guessed.

use crate::error::Error;
use crate::gb::Ideal;
use crate::monomial::MonomialIdeal;
use crate::poly::{MonomialOrder, Polynomial};

use super::factor::{irreducible_supported, split_factors};

/// How a leaf of the splitting tree was certified prime.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Generated by variables.
    VariableGenerated,
    /// Reduced basis is a coordinate section v_i - h_i (quotient is a
    /// polynomial ring); covers all ideals of linear forms.
    CoordinateSection,
    /// Variables plus one polynomial passing a supported irreducibility
    /// test.
    VariablesPlusIrreducible,
    /// Exited the splitter unfactored and uncertified; flagged, not trusted.
    AssertedBySplitExhaustion,
}

impl Certificate {
    pub fn is_certified(self) -> bool {
        self != Certificate::AssertedBySplitExhaustion
    }
}

#[derive(Clone, Debug)]
pub struct PrimeWitness {
    pub ideal: Ideal,
    pub certificate: Certificate,
}

impl PrimeWitness {
    pub fn canonical_key(&self) -> String {
        self.ideal.canonical_key()
    }
}

/// Minimal primes of a proper ideal. Strict mode: an uncertified leaf that
/// survives pruning aborts with `Unresolved` rather than guessing.
pub fn minimal_primes(ideal: &Ideal) -> Result<Vec<PrimeWitness>, Error> {
    let all = minimal_primes_asserted(ideal)?;
    if let Some(bad) = all.iter().find(|w| !w.certificate.is_certified()) {
        return Err(Error::Unresolved(format!(
            "leaf ({}) admits no supported factorization or certificate",
            bad.canonical_key()
        )));
    }
    Ok(all)
}

/// Best-effort variant: uncertified leaves are kept with the
/// split-exhaustion certificate so callers can flag them.
pub fn minimal_primes_asserted(ideal: &Ideal) -> Result<Vec<PrimeWitness>, Error> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut leaves: Vec<PrimeWitness> = Vec::new();
    let mut work: Vec<Ideal> = vec![ideal.canonicalized()];
    let mut steps = 0usize;
    while let Some(current) = work.pop() {
        steps += 1;
        if steps > 20_000 {
            return Err(Error::Unresolved(
                "splitting recursion exceeded its step budget".into(),
            ));
        }
        if current.is_unit() {
            continue;
        }
        if current.is_monomial_ideal() {
            let mono = MonomialIdeal::from_ideal(&current).expect("monomial basis");
            for p in mono.minimal_primes() {
                let gens: Vec<Polynomial> = p
                    .iter()
                    .map(|&i| Polynomial::variable(current.ring(), i))
                    .collect();
                leaves.push(PrimeWitness {
                    ideal: Ideal::new(current.ring(), gens),
                    certificate: Certificate::VariableGenerated,
                });
            }
            continue;
        }
        if let Some(branches) = find_split(&current) {
            work.extend(branches);
            continue;
        }
        leaves.push(certify_leaf(&current));
    }
    Ok(prune_components(leaves))
}

/// Branch ideals from the first basis element with a supported
/// factorization; every factor must lie outside the ideal for the split to
/// make progress.
fn find_split(ideal: &Ideal) -> Option<Vec<Ideal>> {
    let gb = ideal.canonical_gens();
    for g in gb.iter() {
        if let Some(factors) = split_factors(g) {
            if factors.iter().all(|f| !ideal.contains(f)) {
                return Some(
                    factors
                        .into_iter()
                        .map(|f| ideal.with_generators(&[f]).canonicalized())
                        .collect(),
                );
            }
        }
    }
    None
}

/// Re-certify an ideal already known to be prime-shaped (used when a
/// certified prime is transported to another presentation).
pub fn certify(ideal: &Ideal) -> Certificate {
    certify_leaf(ideal).certificate
}

fn certify_leaf(ideal: &Ideal) -> PrimeWitness {
    let order = MonomialOrder::DegRevLex;
    let gb = ideal.canonical_gens();
    let all_variables = gb.iter().all(|g| {
        g.num_terms() == 1
            && g.leading_term(&order)
                .is_some_and(|(m, _)| m.as_variable().is_some())
    });
    if all_variables {
        return PrimeWitness {
            ideal: ideal.clone(),
            certificate: Certificate::VariableGenerated,
        };
    }
    // coordinate section: every leading monomial is a bare variable; the
    // reduced basis then reads v_i - h_i with no v_j in any h, so the
    // quotient is a polynomial ring in the remaining variables
    let section = gb.iter().all(|g| {
        g.leading_term(&order)
            .is_some_and(|(m, _)| m.as_variable().is_some())
    });
    if section {
        return PrimeWitness {
            ideal: ideal.clone(),
            certificate: Certificate::CoordinateSection,
        };
    }
    // variables plus one irreducible polynomial
    let (vars, rest): (Vec<&Polynomial>, Vec<&Polynomial>) = gb.iter().partition(|g| {
        g.num_terms() == 1
            && g.leading_term(&order)
                .is_some_and(|(m, _)| m.as_variable().is_some())
    });
    if rest.len() == 1 {
        let _ = &vars;
        if irreducible_supported(rest[0]) == Some(true) {
            return PrimeWitness {
                ideal: ideal.clone(),
                certificate: Certificate::VariablesPlusIrreducible,
            };
        }
    }
    PrimeWitness {
        ideal: ideal.clone(),
        certificate: Certificate::AssertedBySplitExhaustion,
    }
}

/// Drop duplicates and components whose variety is strictly contained in
/// another's; order deterministically by canonical key.
fn prune_components(leaves: Vec<PrimeWitness>) -> Vec<PrimeWitness> {
    let mut sorted = leaves;
    sorted.sort_by_key(|w| (w.canonical_key(), !w.certificate.is_certified()));
    sorted.dedup_by_key(|w| w.canonical_key());
    let n = sorted.len();
    let mut drop = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || drop[j] {
                continue;
            }
            // V(sorted[i]) ⊆ V(sorted[j]) iff sorted[j] ⊆ √(sorted[i])
            let i_inside_j = sorted[j]
                .ideal
                .generators()
                .iter()
                .all(|g| sorted[i].ideal.radical_membership(g));
            if i_inside_j {
                let j_inside_i = sorted[i]
                    .ideal
                    .generators()
                    .iter()
                    .all(|g| sorted[j].ideal.radical_membership(g));
                if !j_inside_i || i > j {
                    drop[i] = true;
                    break;
                }
            }
        }
    }
    sorted
        .into_iter()
        .zip(drop)
        .filter(|(_, d)| !d)
        .map(|(w, _)| w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, RingDescriptor};

    fn ring(vars: &[&str]) -> RingDescriptor {
        RingDescriptor::new(vars.to_vec()).unwrap()
    }

    fn ideal(r: &RingDescriptor, texts: &[&str]) -> Ideal {
        Ideal::new(
            r,
            texts
                .iter()
                .map(|t| parse_polynomial(t, r).unwrap())
                .collect(),
        )
    }

    fn keys(ws: &[PrimeWitness]) -> Vec<String> {
        ws.iter().map(|w| w.canonical_key()).collect()
    }

    #[test]
    fn monomial_fast_path() {
        let r = ring(&["x", "y", "z", "T0"]);
        let i = ideal(&r, &["x", "y*T0", "z*T0"]);
        let ws = minimal_primes(&i).unwrap();
        assert_eq!(keys(&ws), vec!["T0, x", "x, y, z"]);
        assert!(ws
            .iter()
            .all(|w| w.certificate == Certificate::VariableGenerated));
    }

    #[test]
    fn radical_of_primary_monomial() {
        let r = ring(&["x", "y", "T0", "T1"]);
        let ws = minimal_primes(&ideal(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(keys(&ws), vec!["x, y"]);
    }

    #[test]
    fn linear_ideal_is_a_section() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = ideal(&r, &["x - y", "3*z + 2*w - y"]);
        let ws = minimal_primes(&i).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].certificate, Certificate::CoordinateSection);
    }

    #[test]
    fn koszul_relation_is_irreducible() {
        let r = ring(&["x", "y", "T0", "T1"]);
        let i = ideal(&r, &["y^2*T0 - x^2*T1"]);
        let ws = minimal_primes(&i).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].certificate, Certificate::VariablesPlusIrreducible);
    }

    #[test]
    fn splitting_mixed_products() {
        // (xy, xz): components (x), (y,z)
        let r = ring(&["x", "y", "z"]);
        let ws = minimal_primes(&ideal(&r, &["x*y", "x*z"])).unwrap();
        assert_eq!(keys(&ws), vec!["x", "y, z"]);
    }

    #[test]
    fn splitting_with_linear_cofactor() {
        // x0*x1*(x0+x1): three concurrent lines
        let r = ring(&["x0", "x1"]);
        let ws = minimal_primes(&ideal(&r, &["x0^2*x1 + x0*x1^2"])).unwrap();
        assert_eq!(ws.len(), 3);
        assert_eq!(keys(&ws), vec!["x0", "x0 + x1", "x1"]);
    }

    #[test]
    fn triangle_graded_presentation_resolves() {
        // oracle-verified decomposition of the edge-ideal graded presentation
        let r = ring(&["x", "y", "z", "T0", "T1", "T2"]);
        let i = ideal(
            &r,
            &[
                "T2*x^2",
                "x*y",
                "x*z",
                "y*z",
                "T0*z - T2*x",
                "T1*y - T2*x",
            ],
        );
        let ws = minimal_primes(&i).unwrap();
        assert_eq!(
            keys(&ws),
            vec!["T0, x, y", "T1, x, z", "T2, y, z", "x, y, z"]
        );
    }

    #[test]
    fn product_diagonal_presentation_resolves() {
        // oracle-verified: G for the product of two coordinate crosses cut
        // by the diagonal, in the plane case
        let r = ring(&["x0", "x1", "y0", "y1", "T0", "T1"]);
        let i = ideal(
            &r,
            &["T1*y0^2", "y0*y1", "T0*y1 + T1*y0", "x0 - y0", "x1 - y1"],
        );
        let ws = minimal_primes(&i).unwrap();
        assert_eq!(ws.len(), 3);
        assert_eq!(
            keys(&ws),
            vec![
                "T0, x0, x1 - y1, y0",
                "T1, x0 - y0, x1, y1",
                "x0, x1, y0, y1"
            ]
        );
    }

    #[test]
    fn unresolved_outside_supported_fragment() {
        // an irreducible cubic surface generator: no supported factorization
        // or certificate applies (degree 3, no linear variable)
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^3 + y^3 + z^3 + x*y*z"]);
        match minimal_primes(&i) {
            Err(Error::Unresolved(_)) => {}
            other => panic!("expected Unresolved, got {other:?}"),
        }
        let asserted = minimal_primes_asserted(&i).unwrap();
        assert_eq!(asserted.len(), 1);
        assert!(!asserted[0].certificate.is_certified());
    }
}
