//! Exact combinatorial algorithms for monomial ideals: primary
//! decomposition by coprime splitting, symbolic powers, Newton-polyhedron
//! integral closures, associated and asymptotic primes.

mod newton;

use std::collections::BTreeSet;

use crate::error::Error;
use crate::gb::Ideal;
use crate::poly::{coeff_int, Monomial, Polynomial, RingDescriptor};

pub use newton::in_scaled_polyhedron;

/// Set of variable indices generating a monomial prime.
pub type VarPrime = BTreeSet<usize>;

/// A monomial ideal held by its unique minimal generating set (no generator
/// divides another), sorted for determinism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ring: RingDescriptor,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &RingDescriptor, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// Extract from a polynomial ideal whose reduced basis is monomial.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self, Error> {
        let gb = ideal.canonical_gens();
        let mut gens = Vec::with_capacity(gb.len());
        for p in gb.iter() {
            if p.num_terms() != 1 {
                return Err(Error::NonMonomialGenerator(p.to_string()));
            }
            gens.push(p.terms().next().expect("single term").0.clone());
        }
        Ok(MonomialIdeal::new(ideal.ring(), gens))
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(
            &self.ring,
            self.gens
                .iter()
                .map(|m| Polynomial::from_term(&self.ring, m.clone(), coeff_int(1)))
                .collect(),
        )
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains_monomial(m))
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        assert!(n >= 1);
        let mut acc = self.clone();
        for _ in 1..n {
            let mut gens = Vec::new();
            for a in &acc.gens {
                for b in &self.gens {
                    gens.push(a.mul(b));
                }
            }
            acc = MonomialIdeal::new(&self.ring, gens);
        }
        acc
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|m| {
                Monomial::new(
                    m.exps()
                        .iter()
                        .map(|&e| if e > 0 { 1 } else { 0 })
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(&self.ring, gens)
    }

    /// Primary iff every variable that occurs appears as a pure power among
    /// the generators (then the radical is the prime on those variables).
    pub fn is_primary(&self) -> bool {
        if self.gens.is_empty() {
            return false;
        }
        let occurring: BTreeSet<usize> = self.gens.iter().flat_map(|m| m.support()).collect();
        occurring.iter().all(|&v| {
            self.gens
                .iter()
                .any(|m| m.support().count() == 1 && m.exps()[v] > 0)
        })
    }

    pub fn variable_support(&self) -> VarPrime {
        self.gens.iter().flat_map(|m| m.support()).collect()
    }

    /// Irredundant primary decomposition by coprime splitting: the first
    /// generator with mixed support `m = v^a · w` splits the ideal as
    /// (I + v^a) ∩ (I + w); leaves are primary, same-radical leaves are
    /// merged, redundant components dropped. Components sorted canonically.
    pub fn primary_decomposition(&self) -> Vec<MonomialIdeal> {
        if self.is_unit() || self.is_zero() {
            return vec![];
        }
        let mut leaves: Vec<MonomialIdeal> = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(current) = stack.pop() {
            match current.split_candidate() {
                None => leaves.push(current),
                Some((u, w)) => {
                    let mut a = current.gens.clone();
                    a.push(u);
                    let mut b = current.gens.clone();
                    b.push(w);
                    stack.push(MonomialIdeal::new(&self.ring, a));
                    stack.push(MonomialIdeal::new(&self.ring, b));
                }
            }
        }
        // merge leaves with equal radical
        let mut merged: Vec<MonomialIdeal> = Vec::new();
        for leaf in leaves {
            debug_assert!(leaf.is_primary(), "split leaf must be primary");
            match merged.iter_mut().find(|q| q.radical() == leaf.radical()) {
                Some(q) => *q = q.intersect(&leaf),
                None => merged.push(leaf),
            }
        }
        // drop redundant components
        let mut keep: Vec<bool> = vec![true; merged.len()];
        for i in 0..merged.len() {
            let inter = intersect_all(
                merged
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i && keep[*j])
                    .map(|(_, q)| q),
            );
            if let Some(inter) = inter {
                if merged[i].contains(&inter) {
                    keep[i] = false;
                }
            }
        }
        let mut out: Vec<MonomialIdeal> = merged
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(q, _)| q)
            .collect();
        out.sort_by_key(sort_key);
        debug_assert_eq!(
            intersect_all(out.iter()).as_ref(),
            Some(self),
            "decomposition must intersect to the input"
        );
        out
    }

    /// First generator (in the sorted minimal basis) with at least two
    /// distinct variables, split at its first variable's full power.
    fn split_candidate(&self) -> Option<(Monomial, Monomial)> {
        for m in &self.gens {
            let support: Vec<usize> = m.support().collect();
            if support.len() >= 2 {
                let v = support[0];
                let mut u_exps = vec![0; m.nvars()];
                u_exps[v] = m.exps()[v];
                let u = Monomial::new(u_exps);
                let w = m.div(&u).expect("factor divides");
                return Some((u, w));
            }
        }
        None
    }

    /// Inclusion-minimal radicals of the primary decomposition.
    pub fn minimal_primes(&self) -> Vec<VarPrime> {
        let all = self.associated_primes();
        let mut out: Vec<VarPrime> = Vec::new();
        for p in &all {
            if !all.iter().any(|q| q != p && q.is_subset(p)) {
                out.push(p.clone());
            }
        }
        out
    }

    /// Radicals of every component (minimal and embedded) of the
    /// irredundant decomposition.
    pub fn associated_primes(&self) -> Vec<VarPrime> {
        let mut out: Vec<VarPrime> = self
            .primary_decomposition()
            .iter()
            .map(|q| q.variable_support())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// n-th symbolic power: intersection of the primary components of I^n
    /// whose radical is a minimal prime of I.
    pub fn symbolic_power(&self, n: u32) -> Result<MonomialIdeal, Error> {
        if n < 1 {
            return Err(Error::BadExponent(n as i64));
        }
        let min: Vec<VarPrime> = self.minimal_primes();
        let power = self.power(n);
        let comps = power.primary_decomposition();
        let keep: Vec<&MonomialIdeal> = comps
            .iter()
            .filter(|q| min.contains(&q.variable_support()))
            .collect();
        let result = intersect_all(keep.into_iter())
            .ok_or_else(|| Error::Internal("no minimal components".into()))?;
        if !result.contains(&power) {
            return Err(Error::Internal(
                "I^n must be contained in the symbolic power".into(),
            ));
        }
        Ok(result)
    }

    /// Exponent-vector membership in the integral closure of I^n.
    pub fn closure_member(&self, a: &Monomial, n: u32) -> bool {
        let gens: Vec<Vec<u32>> = self.gens.iter().map(|m| m.exps().to_vec()).collect();
        in_scaled_polyhedron(&gens, a.exps(), n)
    }

    pub fn integral_closure(&self) -> Result<MonomialIdeal, Error> {
        self.closure_of_power(1)
    }

    /// Integral closure of I^n: minimal integer points of n·NP(I). The
    /// generator search is bounded by (max generator degree of I^n) +
    /// #variables: a minimal point exceeds some point of the scaled hull
    /// by less than one in every positive coordinate, which caps its total
    /// degree under that bound. A sweep one degree past the bound
    /// re-checks this at runtime instead of truncating silently.
    pub fn closure_of_power(&self, n: u32) -> Result<MonomialIdeal, Error> {
        if n < 1 {
            return Err(Error::BadExponent(n as i64));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let d = self.ring.nvars() as u64;
        let bound = self.max_generator_degree() * n as u64 + d;
        let mut found: Vec<Monomial> = Vec::new();
        let nv = self.ring.nvars();
        for deg in 0..=bound + 1 {
            for exps in monomials_of_degree(nv, deg) {
                let m = Monomial::new(exps);
                if found.iter().any(|g| g.divides(&m)) {
                    continue;
                }
                if self.closure_member(&m, n) {
                    if deg > bound {
                        return Err(Error::ClosureBoundExceeded(format!(
                            "minimal closure generator of degree {deg} past bound {bound}"
                        )));
                    }
                    found.push(m);
                }
            }
        }
        Ok(MonomialIdeal::new(&self.ring, found))
    }

    /// Canonical display of the minimal generating set.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|m| Polynomial::from_term(&self.ring, m.clone(), coeff_int(1)).to_string())
            .collect()
    }
}

/// Ass(R/closure(I^n)) for n = 1..n_max: the union over the window and the
/// smallest n from which the per-n set stays constant to the end of the
/// window. Window evidence only: a constant tail of length one is reported
/// as not stabilized.
pub struct AsymptoticPrimes {
    pub per_n: Vec<Vec<VarPrime>>,
    pub union: Vec<VarPrime>,
    pub stabilized_at: Option<u32>,
    pub n_max: u32,
}

pub fn asymptotic_primes(ideal: &MonomialIdeal, n_max: u32) -> Result<AsymptoticPrimes, Error> {
    if n_max < 1 {
        return Err(Error::BadExponent(n_max as i64));
    }
    let mut per_n = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let closure = ideal.closure_of_power(n)?;
        per_n.push(closure.associated_primes());
    }
    let mut union: Vec<VarPrime> = per_n.iter().flatten().cloned().collect();
    union.sort();
    union.dedup();
    let last = per_n.last().expect("n_max >= 1").clone();
    let mut first_constant = n_max;
    for n in (1..=n_max).rev() {
        if per_n[(n - 1) as usize] == last {
            first_constant = n;
        } else {
            break;
        }
    }
    let stabilized_at = if n_max - first_constant >= 1 {
        Some(first_constant)
    } else {
        None
    };
    Ok(AsymptoticPrimes {
        per_n,
        union,
        stabilized_at,
        n_max,
    })
}

fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut sorted = gens;
    sorted.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn sort_key(q: &MonomialIdeal) -> (usize, Vec<Vec<u32>>) {
    (
        q.variable_support().len(),
        q.gens.iter().map(|m| m.exps().to_vec()).collect(),
    )
}

fn intersect_all<'a>(mut it: impl Iterator<Item = &'a MonomialIdeal>) -> Option<MonomialIdeal> {
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, q| acc.intersect(q)))
}

/// Exponent vectors of all monomials of the given total degree.
fn monomials_of_degree(nvars: usize, degree: u64) -> Vec<Vec<u32>> {
    fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, at: usize, left: u64) {
        if at + 1 == current.len() {
            current[at] = left as u32;
            out.push(current.clone());
            current[at] = 0;
            return;
        }
        for e in 0..=left {
            current[at] = e as u32;
            fill(out, current, at + 1, left - e);
        }
        current[at] = 0;
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out
}
