use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

use super::{Monomial, MonomialOrder, RingDescriptor};

pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Multivariate polynomial over the rationals in canonical form: a term map
/// with no zero coefficients. Equal polynomials have identical
/// representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ring: RingDescriptor,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &RingDescriptor) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &RingDescriptor, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &RingDescriptor, i: usize) -> Self {
        Polynomial::from_term(ring, Monomial::var(ring.nvars(), i), Coeff::one())
    }

    pub fn from_term(ring: &RingDescriptor, m: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(
        ring: &RingDescriptor,
        it: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// Nonzero constant polynomials are the units of the ring.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u64]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn check_same_ring(&self, other: &Polynomial) -> Result<(), Error> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    /// Monic scalar multiple with respect to `order`; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// GCD of all term monomials; 1 for the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.ring.nvars()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Primitive integer normalization: multiply by the positive rational
    /// that makes all coefficients coprime integers (sign of the `order`
    /// leading coefficient is preserved by construction). Keeps GB
    /// intermediates small without changing the generated ideal.
    pub fn primitive_part(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        self.scale(&factor)
    }

    /// Substitute rational values for the variables listed in `values`
    /// (index, value); other variables stay symbolic.
    pub fn substitute(&self, values: &[(usize, Coeff)]) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exps().to_vec();
            for (i, v) in values {
                let e = exps[*i];
                if e > 0 {
                    if v.is_zero() {
                        continue 'terms;
                    }
                    let mut p = Coeff::one();
                    for _ in 0..e {
                        p *= v;
                    }
                    coeff *= p;
                    exps[*i] = 0;
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Move into `target` ring, mapping source variable `i` to target
    /// variable `embed[i]`.
    pub fn embedded(&self, target: &RingDescriptor, embed: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.embedded(target.nvars(), embed), c.clone());
        }
        out
    }

    /// Restrict to a smaller ring; fails when a dropped variable occurs.
    /// `map[j]` is the source index of target variable `j`.
    pub fn restricted(&self, target: &RingDescriptor, map: &[usize]) -> Result<Polynomial, Error> {
        let kept: Vec<bool> = {
            let mut kept = vec![false; self.ring.nvars()];
            for &j in map {
                kept[j] = true;
            }
            kept
        };
        for m in self.terms.keys() {
            for i in m.support() {
                if !kept[i] {
                    return Err(Error::VariableNotInSubring(
                        self.ring.var_name(i).to_string(),
                    ));
                }
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.remapped(map), c.clone());
        }
        Ok(out)
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending degrevlex, so printed forms are stable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        let order = MonomialOrder::DegRevLex;
        terms.sort_by(|(a, _), (b, _)| order.compare(b, a));
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || m.is_one();
            if show_coeff {
                write_coeff(f, &abs)?;
            }
            let mut first_factor = !show_coeff;
            for i in m.support() {
                if !first_factor || show_coeff {
                    write!(f, "*")?;
                }
                first_factor = false;
                let e = m.exps()[i];
                if e == 1 {
                    write!(f, "{}", self.ring.var_name(i))?;
                } else {
                    write!(f, "{}^{}", self.ring.var_name(i), e)?;
                }
            }
            let _ = first_factor;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xy() -> RingDescriptor {
        RingDescriptor::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn cancellation_gives_zero() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let xy = x.mul(&y);
        assert!(xy.sub(&xy).is_zero());
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn binomial_cube() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let p = x.add(&y).pow(3);
        assert_eq!(p.to_string(), "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
    }

    #[test]
    fn addition_is_commutative_bit_exact() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let f = x.mul(&x).add(&y.scale(&coeff_ratio(2, 3)));
        let g = y.mul(&y).sub(&x);
        assert_eq!(f.add(&g), g.add(&f));
    }

    #[test]
    fn rational_scaling_is_exact() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let f = x.pow(2).add(&y.scale(&coeff_ratio(7, 5)));
        let third = coeff_ratio(1, 3);
        let three = coeff_int(3);
        assert_eq!(f.scale(&third).scale(&three), f);
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let f = x.scale(&coeff_ratio(4, 6)).add(&y.scale(&coeff_ratio(2, 9)));
        let p = f.primitive_part();
        // 2/3 x + 2/9 y -> 6x + 2y -> 3x + y
        let expect = x.scale(&coeff_int(3)).add(&y);
        assert_eq!(p, expect);
    }

    #[test]
    fn checked_ops_reject_ring_mismatch() {
        let r = ring_xy();
        let s = RingDescriptor::new(vec!["a", "b"]).unwrap();
        let x = Polynomial::variable(&r, 0);
        let a = Polynomial::variable(&s, 0);
        assert!(x.try_add(&a).is_err());
        assert!(x.try_mul(&a).is_err());
        assert!(x.try_sub(&x).unwrap().is_zero());
        // mul(x*y, x*z) over three variables
        let r3 = RingDescriptor::new(vec!["x", "y", "z"]).unwrap();
        let xy = Polynomial::variable(&r3, 0).mul(&Polynomial::variable(&r3, 1));
        let xz = Polynomial::variable(&r3, 0).mul(&Polynomial::variable(&r3, 2));
        assert_eq!(xy.try_mul(&xz).unwrap().to_string(), "x^2*y*z");
    }

    #[test]
    fn monomial_content_extraction() {
        let r = ring_xy();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        // x^2 y + x y^2 has content x*y
        let f = x.pow(2).mul(&y).add(&x.mul(&y.pow(2)));
        assert_eq!(f.monomial_content(), Monomial::new(vec![1, 1]));
    }
}
