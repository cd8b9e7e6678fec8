//! Derived ideal operations on top of the Buchberger kernel: elimination,
//! sums/products/powers, intersection, quotient, saturation and radical
//! membership. Auxiliary-variable constructions always use a fresh variable
//! appended to the ring and eliminate it again before returning.

use crate::error::Error;
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingDescriptor};

use super::buchberger::divide_exact;
use super::Ideal;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineOp {
    Sum,
    Product,
    Power(u32),
}

impl Ideal {
    /// Generators of the contraction to the subring of variables not in
    /// `drop`, returned in the same ambient ring. Realized by a block-style
    /// elimination order restricted to basis elements free of `drop`.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        let n = self.ring().nvars();
        let mut mask = vec![false; n];
        for &i in drop {
            mask[i] = true;
        }
        let order = MonomialOrder::elimination(&mask);
        let gb = self.groebner(&order);
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|p| p.support().iter().all(|&i| !mask[i]))
            .cloned()
            .collect();
        Ideal::new(self.ring(), kept)
    }

    pub fn eliminate_by_name(&self, drop: &[&str]) -> Result<Ideal, Error> {
        let idx: Result<Vec<usize>, Error> = drop
            .iter()
            .map(|d| {
                self.ring()
                    .var_index(d)
                    .ok_or_else(|| Error::UnknownVariable(d.to_string()))
            })
            .collect();
        Ok(self.eliminate(&idx?))
    }

    /// Move the ideal into the subring of the variables at `keep`; every
    /// generator must already avoid the other variables.
    pub fn restricted(&self, keep: &[usize]) -> Result<Ideal, Error> {
        let target = self.ring().restricted(keep)?;
        let gens: Result<Vec<Polynomial>, Error> = self
            .generators()
            .iter()
            .map(|g| g.restricted(&target, keep))
            .collect();
        Ok(Ideal::new(&target, gens?))
    }

    /// Move the ideal into a bigger ring; `embed[i]` is the target index of
    /// source variable `i`.
    pub fn embedded(&self, target: &RingDescriptor, embed: &[usize]) -> Ideal {
        let gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.embedded(target, embed))
            .collect();
        Ideal::new(target, gens)
    }

    pub fn combine(&self, op: CombineOp, other: &Ideal) -> Result<Ideal, Error> {
        self.check_same_ring(other)?;
        match op {
            CombineOp::Sum => {
                let mut gens = self.generators().to_vec();
                gens.extend_from_slice(other.generators());
                Ok(Ideal::new(self.ring(), sorted_dedup(gens)))
            }
            CombineOp::Product => {
                let mut gens = Vec::new();
                for f in self.generators() {
                    for g in other.generators() {
                        gens.push(f.mul(g));
                    }
                }
                Ok(Ideal::new(self.ring(), sorted_dedup(gens)))
            }
            CombineOp::Power(n) => {
                if n < 1 {
                    return Err(Error::BadExponent(n as i64));
                }
                let mut acc = self.clone();
                for _ in 1..n {
                    acc = acc.combine(CombineOp::Product, self)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.combine(CombineOp::Sum, other).expect("same ring")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        self.combine(CombineOp::Product, other).expect("same ring")
    }

    pub fn power(&self, n: u32) -> Result<Ideal, Error> {
        self.combine(CombineOp::Power(n), self)
    }

    /// Sum with extra polynomial generators.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(extra);
        Ideal::new(self.ring(), gens)
    }

    /// I ∩ J via the auxiliary-variable construction (w·I + (1-w)·J) ∩ R.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_same_ring(other)?;
        let n = self.ring().nvars();
        let name = self.ring().fresh_name("_w");
        let big = self.ring().extended(vec![name])?;
        let embed: Vec<usize> = (0..n).collect();
        let w = Polynomial::variable(&big, n);
        let one_minus_w = Polynomial::one(&big).sub(&w);
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in self.generators() {
            gens.push(f.embedded(&big, &embed).mul(&w));
        }
        for g in other.generators() {
            gens.push(g.embedded(&big, &embed).mul(&one_minus_w));
        }
        let aux = Ideal::new(&big, gens);
        let elim = aux.eliminate(&[n]);
        let back = elim.restricted(&embed)?;
        Ok(back)
    }

    /// Ideal quotient I : (f), computed as (I ∩ (f))/f.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pf = Ideal::new(self.ring(), vec![f.clone()]);
        let inter = self.intersect(&pf)?;
        let order = MonomialOrder::DegRevLex;
        let gens: Vec<Polynomial> = inter
            .canonical_gens()
            .iter()
            .map(|g| {
                divide_exact(g, f, &order)
                    .expect("element of I ∩ (f) is divisible by f")
            })
            .collect();
        Ok(Ideal::new(self.ring(), gens))
    }

    /// Saturation I : f^∞ via the fresh-variable construction
    /// (I + (1 - w·f)) ∩ R, together with the stabilization exponent k such
    /// that I : f^k = I : f^∞, found by iterated quotient.
    pub fn saturate(&self, f: &Polynomial) -> Result<(Ideal, usize), Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sat = self.saturation_only(f)?;
        let mut current = self.canonicalized();
        let mut k = 0usize;
        while !current.equals(&sat) {
            current = current.quotient(f)?;
            k += 1;
            if k > 10_000 {
                return Err(Error::Internal(
                    "saturation exponent did not stabilize".into(),
                ));
            }
        }
        Ok((sat, k))
    }

    /// Just I : f^∞, skipping the stabilization-exponent search.
    pub fn saturation_only(&self, f: &Polynomial) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.ring().nvars();
        let name = self.ring().fresh_name("_w");
        let big = self.ring().extended(vec![name])?;
        let embed: Vec<usize> = (0..n).collect();
        let w = Polynomial::variable(&big, n);
        let mut gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.embedded(&big, &embed))
            .collect();
        gens.push(Polynomial::one(&big).sub(&w.mul(&f.embedded(&big, &embed))));
        let aux = Ideal::new(&big, gens);
        let elim = aux.eliminate(&[n]);
        elim.restricted(&embed)
    }

    /// Sequential saturation by several polynomials: I : (f1 ⋯ fm)^∞.
    pub fn saturate_all(&self, fs: &[Polynomial]) -> Result<Ideal, Error> {
        let mut acc = self.canonicalized();
        for f in fs {
            acc = acc.saturation_only(f)?;
        }
        Ok(acc)
    }

    /// f ∈ √I, via 1 ∈ I + (1 - w·f).
    pub fn radical_membership(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            // 0 is in every radical of a proper ideal's ring
            return true;
        }
        let n = self.ring().nvars();
        let name = self.ring().fresh_name("_w");
        let big = self.ring().extended(vec![name]).expect("fresh name");
        let embed: Vec<usize> = (0..n).collect();
        let w = Polynomial::variable(&big, n);
        let mut gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.embedded(&big, &embed))
            .collect();
        gens.push(Polynomial::one(&big).sub(&w.mul(&f.embedded(&big, &embed))));
        Ideal::new(&big, gens).is_unit()
    }

    /// Leading monomials of the reduced degrevlex basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let order = MonomialOrder::DegRevLex;
        self.groebner(&order)
            .iter()
            .map(|p| p.leading_term(&order).expect("basis nonzero").0.clone())
            .collect()
    }
}

fn sorted_dedup(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.sort_by(|a, b| {
        a.num_terms()
            .cmp(&b.num_terms())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    gens.dedup();
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

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

    #[test]
    fn elimination_of_rees_parameter() {
        // hand elimination: y*(T0 - t*x) + t*(x*y) = y*T0
        let r = ring(&["x", "y", "z", "t", "T0"]);
        let i = ideal(&r, &["x*y", "x*z", "T0 - t*x"]);
        let e = i.eliminate_by_name(&["t"]).unwrap();
        let expect = ideal(&r, &["x*y", "x*z", "y*T0", "z*T0"]);
        assert!(e.equals(&expect));
    }

    #[test]
    fn elimination_of_substitution_graph() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x - y"]);
        let e = i.eliminate_by_name(&["x"]).unwrap();
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn elimination_to_degree_zero_part() {
        let r = ring(&["x", "y", "z", "T0"]);
        let i = ideal(&r, &["x", "y*T0", "z*T0"]);
        let e = i.eliminate_by_name(&["T0"]).unwrap();
        assert!(e.equals(&ideal(&r, &["x"])));
    }

    #[test]
    fn combine_examples() {
        let r = ring(&["x", "y"]);
        let p2 = ideal(&r, &["x^2", "y^2"]).power(2).unwrap();
        assert!(p2.equals(&ideal(&r, &["x^4", "x^2*y^2", "y^4"])));

        let s = ideal(&r, &["x"]).sum(&ideal(&r, &["y"]));
        assert!(s.equals(&ideal(&r, &["x", "y"])));

        let r3 = ring(&["x", "y", "z"]);
        let i = ideal(&r3, &["x*y", "x*z"]);
        let prod = i.product(&i);
        assert!(prod.equals(&ideal(&r3, &["x^2*y^2", "x^2*y*z", "x^2*z^2"])));
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x", "y", "z"]);
        let a = ideal(&r, &["x"]).intersect(&ideal(&r, &["y", "z"])).unwrap();
        assert!(a.equals(&ideal(&r, &["x*y", "x*z"])));

        let r4 = ring(&["x", "y", "z", "T0"]);
        let b = ideal(&r4, &["x", "y", "z"])
            .intersect(&ideal(&r4, &["x", "T0"]))
            .unwrap();
        assert!(b.equals(&ideal(&r4, &["x", "y*T0", "z*T0"])));

        let i = ideal(&r, &["x*y", "x*z"]);
        assert!(i.intersect(&i).unwrap().equals(&i));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z"]);
        let x = parse_polynomial("x", &r).unwrap();
        let (sat, k) = i.saturate(&x).unwrap();
        assert!(sat.equals(&ideal(&r, &["y", "z"])));
        assert_eq!(k, 1);

        let j = ideal(&r, &["x^2"]);
        let y = parse_polynomial("y", &r).unwrap();
        let (sat2, k2) = j.saturate(&y).unwrap();
        assert!(sat2.equals(&j));
        assert_eq!(k2, 0);

        let r4 = ring(&["x", "y", "z", "T0"]);
        let t0 = parse_polynomial("T0", &r4).unwrap();
        let (sat3, _) = ideal(&r4, &["x", "y*T0", "z*T0"]).saturate(&t0).unwrap();
        assert!(sat3.equals(&ideal(&r4, &["x", "y", "z"])));
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_membership(&parse_polynomial("x", &r).unwrap()));
        assert!(!i.radical_membership(&parse_polynomial("y", &r).unwrap()));
        let j = ideal(&r, &["x^2", "y^2"]);
        assert!(j.radical_membership(&parse_polynomial("x + y", &r).unwrap()));
    }

    #[test]
    fn containment_invariants_on_derived_ideals() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z"]);
        let j = ideal(&r, &["y", "z^2"]);
        let inter = i.intersect(&j).unwrap();
        assert!(i.contains_ideal(&inter));
        assert!(j.contains_ideal(&inter));
        let x = parse_polynomial("x", &r).unwrap();
        let (sat, _) = i.saturate(&x).unwrap();
        assert!(sat.contains_ideal(&i));
    }
}
