//! Krull dimension via independent variable subsets of the leading-term
//! ideal, and Hilbert-series dimension/degree data for monomial ideals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::Monomial;

use super::Ideal;

impl Ideal {
    /// Krull dimension of R/I: the maximal size of a variable subset S such
    /// that no leading monomial of the reduced degrevlex basis is supported
    /// inside S. The unit ideal reports the -1 sentinel (the only way to get
    /// -1, since proper ideals have nonzero quotients).
    pub fn krull_dimension(&self) -> i64 {
        let n = self.ring().nvars();
        assert!(n <= 26, "dimension search is exponential in #variables");
        let lms = self.leading_monomials();
        if lms.iter().any(|m| m.is_one()) {
            return -1;
        }
        let gen_masks: Vec<u64> = lms.iter().map(support_mask).collect();
        let mut best = 0u32;
        for s in 0..(1u64 << n) {
            if s.count_ones() <= best {
                continue;
            }
            if gen_masks.iter().all(|&g| g & !s != 0) {
                best = s.count_ones();
            }
        }
        best as i64
    }

    /// Dimension and degree of R/M for a monomial ideal M, from the Hilbert
    /// series numerator computed by pivot splitting. For dim 0 the degree is
    /// the number of standard monomials.
    pub fn hilbert_data(&self) -> Result<(i64, BigInt), Error> {
        let gb = self.canonical_gens();
        let mut gens = Vec::with_capacity(gb.len());
        for p in gb.iter() {
            if p.num_terms() != 1 {
                return Err(Error::NonMonomialGenerator(p.to_string()));
            }
            gens.push(p.terms().next().expect("one term").0.clone());
        }
        let n = self.ring().nvars();
        let numer = hilbert_numerator(minimalize(gens));
        Ok(dim_degree_from_numerator(&numer, n))
    }
}

fn support_mask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for i in m.support() {
        mask |= 1 << i;
    }
    mask
}

fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/M, as coefficient
/// vector. Splits on the most frequent variable among mixed-support
/// generators; base case is a pairwise-coprime (regular) sequence.
fn hilbert_numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut num = vec![BigInt::one()];
        for m in &gens {
            // multiply by (1 - t^deg)
            let d = m.degree() as usize;
            let mut next = vec![BigInt::zero(); num.len() + d];
            for (i, c) in num.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            num = next;
        }
        return num;
    }
    // pivot variable: most frequent among generators with mixed support
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for m in &gens {
        if m.support().count() >= 2 {
            for i in m.support() {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, n - i))
        .map(|(i, _)| i)
        .expect("nonempty ring");
    let v = Monomial::var(n, pivot);
    // N(M) = t * N(M : v) + N(M + (v))
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.div(&m.gcd(&v)).expect("gcd divides"))
        .collect();
    let plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exps()[pivot] == 0)
        .cloned()
        .chain(std::iter::once(v.clone()))
        .collect();
    let a = hilbert_numerator(minimalize(colon));
    let b = hilbert_numerator(minimalize(plus));
    let mut out = vec![BigInt::zero(); (a.len() + 1).max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i + 1] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Factor N(t) = (1-t)^e * Q(t) with Q(1) != 0; dimension is n - e and the
/// degree is Q(1). The zero numerator (unit ideal) reports (-1, 0).
fn dim_degree_from_numerator(numer: &[BigInt], nvars: usize) -> (i64, BigInt) {
    if numer.iter().all(|c| c.is_zero()) {
        return (-1, BigInt::zero());
    }
    let mut q = numer.to_vec();
    let mut e = 0usize;
    loop {
        let at_one: BigInt = q.iter().sum();
        if !at_one.is_zero() {
            let deg = at_one;
            debug_assert!(e <= nvars, "numerator vanishing order exceeds #vars");
            debug_assert!(deg.is_positive(), "degree must be positive");
            return ((nvars - e) as i64, deg);
        }
        // synthetic division by (1 - t)
        let mut next = vec![BigInt::zero(); q.len().saturating_sub(1)];
        let mut carry = BigInt::zero();
        for i in 0..q.len().saturating_sub(1) {
            carry = &q[i] + &carry;
            next[i] = carry.clone();
        }
        q = next;
        e += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, RingDescriptor};

    fn ideal(r: &RingDescriptor, texts: &[&str]) -> Ideal {
        Ideal::new(
            r,
            texts
                .iter()
                .map(|t| parse_polynomial(t, r).unwrap())
                .collect(),
        )
    }

    #[test]
    fn dimension_examples() {
        let r3 = RingDescriptor::new(vec!["x", "y", "z"]).unwrap();
        assert_eq!(ideal(&r3, &["x*y", "x*z"]).krull_dimension(), 2);

        let r4 = RingDescriptor::new(vec!["x", "y", "z", "T0"]).unwrap();
        assert_eq!(ideal(&r4, &["x", "y*T0", "z*T0"]).krull_dimension(), 2);

        let r2 = RingDescriptor::new(vec!["x", "y"]).unwrap();
        assert_eq!(Ideal::zero(&r2).krull_dimension(), 2);
        assert_eq!(ideal(&r2, &["x", "x - 1"]).krull_dimension(), -1);
    }

    #[test]
    fn dimension_is_order_insensitive_on_samples() {
        // dimension uses the degrevlex basis internally; cross-check against
        // an independent count through the lex leading terms
        let r = RingDescriptor::new(vec!["x", "y", "z"]).unwrap();
        for gens in [
            vec!["x*y - z^2", "x^2 - y*z"],
            vec!["x*y", "x*z"],
            vec!["x^2", "y^2"],
        ] {
            let i = ideal(&r, &gens);
            let dim_drl = i.krull_dimension();
            let lex_lms: Vec<Monomial> = i
                .groebner(&crate::poly::MonomialOrder::Lex)
                .iter()
                .map(|p| {
                    p.leading_term(&crate::poly::MonomialOrder::Lex)
                        .unwrap()
                        .0
                        .clone()
                })
                .collect();
            let lex_ideal = Ideal::new(
                &r,
                lex_lms
                    .iter()
                    .map(|m| crate::poly::Polynomial::from_term(&r, m.clone(), crate::poly::coeff_int(1)))
                    .collect(),
            );
            assert_eq!(dim_drl, lex_ideal.krull_dimension(), "gens {gens:?}");
        }
    }

    #[test]
    fn hilbert_examples() {
        let r2 = RingDescriptor::new(vec!["x", "y"]).unwrap();
        let (d, deg) = ideal(&r2, &["x"]).hilbert_data().unwrap();
        assert_eq!((d, deg), (1, BigInt::from(1)));

        let (d, deg) = ideal(&r2, &["x^2", "x*y", "y^2"]).hilbert_data().unwrap();
        assert_eq!((d, deg), (0, BigInt::from(3)));

        let (d, deg) = ideal(&r2, &["x*y"]).hilbert_data().unwrap();
        assert_eq!((d, deg), (1, BigInt::from(2)));
    }

    #[test]
    fn hilbert_degree_of_zero_dimensional_counts_standard_monomials() {
        // (x^3, y^2): standard monomials {1,x,x^2,y,xy,x^2 y} -> 6
        let r2 = RingDescriptor::new(vec!["x", "y"]).unwrap();
        let (d, deg) = ideal(&r2, &["x^3", "y^2"]).hilbert_data().unwrap();
        assert_eq!((d, deg), (0, BigInt::from(6)));
    }

    #[test]
    fn hilbert_rejects_non_monomial() {
        let r2 = RingDescriptor::new(vec!["x", "y"]).unwrap();
        assert!(ideal(&r2, &["x + y^2"]).hilbert_data().is_err());
    }

    #[test]
    fn hilbert_of_complete_intersection_quadrics() {
        // (x0*x1, y0*y1): dim 4, degree 4 in 6 variables
        let r6 = RingDescriptor::new(vec!["x0", "x1", "x2", "y0", "y1", "y2"]).unwrap();
        let (d, deg) = ideal(&r6, &["x0*x1", "y0*y1"]).hilbert_data().unwrap();
        assert_eq!((d, deg), (4, BigInt::from(4)));
    }
}
