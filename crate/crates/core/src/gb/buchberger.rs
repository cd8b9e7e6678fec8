//! Buchberger engine with the product and chain criteria, normal pair
//! selection, and full inter-reduction. Output is the reduced Groebner
//! basis: monic, pairwise irreducible, sorted ascending by leading monomial
//! under the active order, unique per (ideal, order), which the golden
//! tests rely on.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial, RingDescriptor};

/// Terms sorted strictly descending under the active order.
#[derive(Clone, Debug)]
pub(crate) struct OrdPoly {
    pub terms: Vec<(Monomial, Coeff)>,
}

impl OrdPoly {
    pub fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> OrdPoly {
        let mut terms: Vec<(Monomial, Coeff)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.compare(b, a));
        OrdPoly { terms }
    }

    pub fn to_polynomial(&self, ring: &RingDescriptor) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> &(Monomial, Coeff) {
        &self.terms[0]
    }

    /// self - c * x^m * other, merging the sorted term lists.
    fn sub_scaled(&self, other: &OrdPoly, c: &Coeff, m: &Monomial, order: &MonomialOrder) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let mb = other.terms[j].0.mul(m);
            match order.compare(ma, &mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, -(&other.terms[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let cc = ca - &(&other.terms[j].1 * c);
                    if !cc.is_zero() {
                        out.push((ma.clone(), cc));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(self.terms[i].clone());
            i += 1;
        }
        while j < other.terms.len() {
            out.push((other.terms[j].0.mul(m), -(&other.terms[j].1 * c)));
            j += 1;
        }
        OrdPoly { terms: out }
    }

    /// Divide all coefficients so they become coprime integers with the
    /// leading coefficient positive.
    fn primitive(&mut self) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_rational::BigRational;
        use num_traits::{One, Signed};
        if self.terms.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        if self.terms[0].1.is_negative() {
            num_gcd = -num_gcd;
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        for (_, c) in &mut self.terms {
            *c *= &factor;
        }
    }
}

/// Fully reduce `f` by `basis`: no term of the result is divisible by any
/// basis leading monomial. Deterministic: first matching reducer wins.
pub(crate) fn reduce_full(f: &OrdPoly, basis: &[OrdPoly], order: &MonomialOrder) -> OrdPoly {
    let mut done: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = work.lt().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lt();
            if let Some(q) = lm.div(gm) {
                let c = &lc / gc;
                work = work.sub_scaled(g, &c, &q, order);
                continue 'outer;
            }
        }
        done.push((lm, lc));
        work.terms.remove(0);
    }
    OrdPoly { terms: done }
}

fn s_polynomial(f: &OrdPoly, g: &OrdPoly, order: &MonomialOrder) -> OrdPoly {
    let (fm, fc) = f.lt();
    let (gm, gc) = g.lt();
    let l = fm.lcm(gm);
    let mf = l.div(fm).expect("lcm divisible");
    let mg = l.div(gm).expect("lcm divisible");
    // (l/fm)/fc * f - (l/gm)/gc * g
    let scaled_f = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mf), c / fc))
            .collect(),
    };
    scaled_f.sub_scaled(g, &gc.recip(), &mg, order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

fn pair_less(a: &Pair, b: &Pair, order: &MonomialOrder) -> bool {
    match a.degree.cmp(&b.degree) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match order.compare(&a.lcm, &b.lcm) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => (a.i, a.j) < (b.i, b.j),
        },
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    gens: &[Polynomial],
    ring: &RingDescriptor,
    order: &MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut seed: Vec<OrdPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OrdPoly::from_polynomial(p, order))
        .collect();
    // deterministic start: ascending leading monomial, then shorter first
    seed.sort_by(|a, b| match order.compare(&a.lt().0, &b.lt().0) {
        Ordering::Equal => a.terms.len().cmp(&b.terms.len()),
        ord => ord,
    });

    let mut pairs: Vec<Pair> = Vec::new();
    let add_to_basis = |basis: &mut Vec<OrdPoly>, pairs: &mut Vec<Pair>, mut p: OrdPoly| {
        p.primitive();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let lcm = g.lt().0.lcm(&p.lt().0);
            pairs.push(Pair {
                i,
                j: k,
                degree: lcm.degree(),
                lcm,
            });
        }
        basis.push(p);
    };

    for p in seed {
        let red = reduce_full(&p, &basis, order);
        if !red.is_zero() {
            add_to_basis(&mut basis, &mut pairs, red);
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest (degree, lcm) pair
        let mut best = 0;
        for k in 1..pairs.len() {
            if pair_less(&pairs[k], &pairs[best], order) {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        if fi.is_zero() || fj.is_zero() {
            continue;
        }
        // product criterion: coprime leading monomials
        if fi.lt().0.is_coprime(&fj.lt().0) {
            continue;
        }
        // chain criterion: some k with lt(k) | lcm and both (i,k), (j,k)
        // pairs already handled
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && !basis[k].is_zero()
                && basis[k].lt().0.divides(&pair.lcm)
                && !pairs.iter().any(|p| {
                    (p.i == k.min(pair.i) && p.j == k.max(pair.i))
                        || (p.i == k.min(pair.j) && p.j == k.max(pair.j))
                })
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj, order);
        let red = reduce_full(&s, &basis, order);
        if !red.is_zero() {
            add_to_basis(&mut basis, &mut pairs, red);
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    let mut keep: Vec<OrdPoly> = Vec::new();
    let mut idx: Vec<usize> = (0..basis.len()).filter(|&i| !basis[i].is_zero()).collect();
    idx.sort_by(|&a, &b| order.compare(&basis[a].lt().0, &basis[b].lt().0));
    for &i in &idx {
        let lm = &basis[i].lt().0;
        if !keep.iter().any(|g| g.lt().0.divides(lm)) {
            keep.push(basis[i].clone());
        }
    }

    // inter-reduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<OrdPoly> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let red = reduce_full(&keep[i], &others, order);
            debug_assert!(!red.is_zero(), "minimal basis element reduced to zero");
            if red.terms != keep[i].terms {
                keep[i] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // monic, ascending by leading monomial
    let mut out: Vec<Polynomial> = keep
        .iter()
        .map(|g| {
            let lc = g.lt().1.clone();
            let inv = lc.recip();
            Polynomial::from_terms(ring, g.terms.iter().map(|(m, c)| (m.clone(), c * &inv)))
        })
        .collect();
    out.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        order.compare(la, lb)
    });
    out
}

/// Remainder of `f` on full division by `basis` (assumed a Groebner basis
/// when membership semantics are needed).
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Polynomial {
    let fo = OrdPoly::from_polynomial(f, order);
    let bo: Vec<OrdPoly> = basis
        .iter()
        .map(|p| OrdPoly::from_polynomial(p, order))
        .collect();
    reduce_full(&fo, &bo, order).to_polynomial(f.ring())
}

/// Exact division: `Some(q)` with `f = q*g` when `g` divides `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    if f.is_zero() {
        return Some(Polynomial::zero(f.ring()));
    }
    let go = OrdPoly::from_polynomial(g, order);
    let mut work = OrdPoly::from_polynomial(f, order);
    let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
    let (gm, gc) = go.lt().clone();
    while !work.is_zero() {
        let (lm, lc) = work.lt().clone();
        let q = lm.div(&gm)?;
        let c = &lc / &gc;
        work = work.sub_scaled(&go, &c, &q, order);
        quot.push((q, c));
    }
    Some(Polynomial::from_terms(f.ring(), quot))
}
