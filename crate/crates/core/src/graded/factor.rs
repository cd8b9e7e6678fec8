//! Factor detection and the supported irreducibility tests backing prime
//! certificates: monomial content, rational-root linear factors of binary
//! forms, v-linear splits with term cofactor, and the quadratic
//! discriminant test with exact polynomial square roots.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::gb::divide_exact;
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(c: &Coeff) -> Option<Coeff> {
    if c.is_negative() {
        return None;
    }
    let ns = c.numer().sqrt();
    let ds = c.denom().sqrt();
    if &(&ns * &ns) == c.numer() && &(&ds * &ds) == c.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Exact polynomial square root: `Some(s)` with `s*s = f`.
pub fn poly_sqrt(f: &Polynomial) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let order = MonomialOrder::DegRevLex;
    let (lm, lc) = f.leading_term(&order)?;
    if lm.exps().iter().any(|e| e % 2 != 0) {
        return None;
    }
    let root_m = Monomial::new(lm.exps().iter().map(|e| e / 2).collect());
    let root_c = rational_sqrt(lc)?;
    let mut s = Polynomial::from_term(f.ring(), root_m, root_c);
    let two_lt = s
        .leading_term(&order)
        .map(|(m, c)| (m.clone(), c + c))
        .expect("nonzero");
    loop {
        let rem = f.sub(&s.mul(&s));
        if rem.is_zero() {
            return Some(s);
        }
        let (rm, rc) = rem.leading_term(&order).expect("nonzero remainder");
        let qm = rm.div(&two_lt.0)?;
        let qc = rc / &two_lt.1;
        let term = Polynomial::from_term(f.ring(), qm.clone(), qc);
        // the corrected remainder's lead must strictly drop, else no root
        let next = s.add(&term);
        let next_rem = f.sub(&next.mul(&next));
        if let Some((nm, _)) = next_rem.leading_term(&order) {
            if order.compare(nm, rm) != std::cmp::Ordering::Less {
                return None;
            }
        }
        s = next;
    }
}

/// Divisors of a nonzero integer, as positive values.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    // trial division; generator coefficients stay small in practice
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
        if out.len() > 400 {
            break; // cap candidate growth on huge coefficients
        }
    }
    out.sort();
    out
}

/// Linear factor of a polynomial supported on exactly two variables, found
/// by trial division against rational-root candidates built from the
/// extreme coefficients. Returns (factor, cofactor).
pub fn binary_linear_factor(f: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let support = f.support();
    if support.len() != 2 {
        return None;
    }
    let (v, w) = (support[0], support[1]);
    let ring = f.ring();
    let order = MonomialOrder::DegRevLex;
    // candidate a*v + b*w needs (a : b) from roots of the trailing/leading
    // coefficient pattern; try p/q over divisors of the two extreme
    // coefficients in the v-degree direction
    let dv = f
        .terms()
        .map(|(m, _)| m.exps()[v])
        .max()
        .expect("nonzero");
    let mut lead_c: Option<Coeff> = None;
    let mut trail_c: Option<Coeff> = None;
    for (m, c) in f.terms() {
        if m.exps()[v] == dv {
            lead_c = Some(lead_c.map_or(c.clone(), |acc| acc + c));
        }
        if m.exps()[v] == 0 {
            trail_c = Some(trail_c.map_or(c.clone(), |acc| acc + c));
        }
    }
    let lead = lead_c.unwrap_or_else(Coeff::zero);
    let trail = trail_c.unwrap_or_else(Coeff::zero);
    let mut candidates: Vec<(BigInt, BigInt)> = vec![
        (BigInt::from(1), BigInt::from(0)),
        (BigInt::from(0), BigInt::from(1)),
        (BigInt::from(1), BigInt::from(1)),
        (BigInt::from(1), BigInt::from(-1)),
    ];
    if !lead.is_zero() && !trail.is_zero() {
        // integer-normalized content divisors
        let pnum = positive_divisors(&(trail.numer() * lead.denom()));
        let qnum = positive_divisors(&(lead.numer() * trail.denom()));
        for p in &pnum {
            for q in &qnum {
                candidates.push((q.clone(), p.clone()));
                candidates.push((q.clone(), -p.clone()));
            }
        }
    }
    for (a, b) in candidates {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let cand = Polynomial::from_terms(
            ring,
            [
                (Monomial::var(ring.nvars(), v), BigRational::from_integer(a)),
                (Monomial::var(ring.nvars(), w), BigRational::from_integer(b)),
            ],
        );
        if cand.is_zero() {
            continue;
        }
        if let Some(cof) = divide_exact(f, &cand, &order) {
            return Some((cand, cof));
        }
    }
    None
}

/// Three-valued supported irreducibility test for a content-free
/// polynomial: `Some(true)`/`Some(false)` when a supported test decides,
/// `None` when the polynomial is outside the supported fragment.
pub fn irreducible_supported(f: &Polynomial) -> Option<bool> {
    let deg = f.total_degree()?;
    if deg == 0 {
        return Some(false);
    }
    if deg == 1 {
        return Some(true);
    }
    if !f.monomial_content().is_one() {
        return Some(false);
    }
    // v-linear with a single-term cofactor: A*v + B with A a term and no
    // variable of A dividing every term of B
    'vars: for v in f.support() {
        let dv = f.terms().map(|(m, _)| m.exps()[v]).max().expect("nonzero");
        if dv != 1 {
            continue;
        }
        let ring = f.ring();
        let mut a = Polynomial::zero(ring);
        let mut b = Polynomial::zero(ring);
        for (m, c) in f.terms() {
            if m.exps()[v] == 1 {
                let mut exps = m.exps().to_vec();
                exps[v] = 0;
                a.add_term(Monomial::new(exps), c.clone());
            } else {
                b.add_term(m.clone(), c.clone());
            }
        }
        if b.is_zero() {
            return Some(false); // f = A*v, content split applies
        }
        if a.num_terms() != 1 {
            continue;
        }
        let am = a.terms().next().expect("single term").0.clone();
        for u in am.support() {
            let u_mono = Monomial::var(ring.nvars(), u);
            if b.terms().all(|(m, _)| u_mono.divides(m)) {
                continue 'vars; // common variable factor, not decided here
            }
        }
        return Some(true);
    }
    if deg == 2 {
        // quadratic in v with constant v^2 coefficient: discriminant test
        for v in f.support() {
            let dv = f.terms().map(|(m, _)| m.exps()[v]).max().expect("nonzero");
            if dv != 2 {
                continue;
            }
            let ring = f.ring();
            let mut a = Coeff::zero();
            let mut b = Polynomial::zero(ring);
            let mut c = Polynomial::zero(ring);
            for (m, coeff) in f.terms() {
                match m.exps()[v] {
                    2 => {
                        if !m.support().all(|i| i == v) {
                            a = Coeff::zero();
                            break;
                        }
                        a = coeff.clone();
                    }
                    1 => {
                        let mut exps = m.exps().to_vec();
                        exps[v] = 0;
                        b.add_term(Monomial::new(exps), coeff.clone());
                    }
                    _ => c.add_term(m.clone(), coeff.clone()),
                }
            }
            if a.is_zero() {
                continue;
            }
            // D = B^2 - 4AC
            let four_a = &a + &a + &a + &a;
            let disc = b.mul(&b).sub(&c.scale(&four_a));
            return Some(poly_sqrt(&disc).is_none());
        }
    }
    None
}

/// Nontrivial factor list of one polynomial, if a supported pattern fires:
/// monomial-content variables plus the content-free part, a binary-form
/// linear factor, a pure variable power (radical shrink to the variable),
/// or a perfect square (radical shrink to the root). One-element lists are
/// variety-preserving replacements, not case splits.
pub fn split_factors(f: &Polynomial) -> Option<Vec<Polynomial>> {
    let ring = f.ring();
    let content = f.monomial_content();
    if !content.is_one() {
        let mut out: Vec<Polynomial> = content
            .support()
            .map(|i| Polynomial::variable(ring, i))
            .collect();
        let content_degree = content.degree();
        let content_poly = Polynomial::from_term(ring, content, num_traits::One::one());
        let cof = divide_exact(f, &content_poly, &MonomialOrder::DegRevLex)
            .expect("content divides");
        if !cof.is_constant() {
            out.push(cof);
        }
        if out.len() >= 2 {
            return Some(out);
        }
        // pure power of one variable: same vanishing locus as the variable
        if content_degree >= 2 {
            return Some(out);
        }
        return None;
    }
    if let Some((l, cof)) = binary_linear_factor(f) {
        if !cof.is_constant() {
            if l == cof {
                return Some(vec![l]);
            }
            return Some(vec![l, cof]);
        }
    }
    if f.total_degree().unwrap_or(0) >= 2 {
        if let Some(root) = poly_sqrt(f) {
            return Some(vec![root]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, RingDescriptor};

    fn ring(vars: &[&str]) -> RingDescriptor {
        RingDescriptor::new(vars.to_vec()).unwrap()
    }

    fn p(r: &RingDescriptor, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn sqrt_of_squares() {
        let r = ring(&["x", "y"]);
        for s in ["x^2 - 2*x*y + y^2", "4*x^2", "9/4*x^4*y^2", "x^2 + 2*x + 1"] {
            let f = p(&r, s);
            let root = poly_sqrt(&f).unwrap_or_else(|| panic!("expected square: {s}"));
            assert_eq!(root.mul(&root), f, "sqrt of {s}");
        }
        assert!(poly_sqrt(&p(&r, "x^2 + y")).is_none());
        assert!(poly_sqrt(&p(&r, "2*x^2")).is_none());
        assert!(poly_sqrt(&p(&r, "x^3")).is_none());
    }

    #[test]
    fn binary_factor_by_rational_roots() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^2 - y^2");
        let (l, c) = binary_linear_factor(&f).unwrap();
        assert_eq!(l.mul(&c), f);

        let g = p(&r, "2*x^2 + 5*x*y + 3*y^2"); // (2x+3y)(x+y)
        let (l, c) = binary_linear_factor(&g).unwrap();
        assert_eq!(l.mul(&c), g);

        // irreducible quadratic form
        assert!(binary_linear_factor(&p(&r, "x^2 + y^2")).is_none());
    }

    #[test]
    fn supported_irreducibility() {
        let r = ring(&["x", "y", "T0", "T1"]);
        // linear in T0 with coprime term cofactors
        assert_eq!(irreducible_supported(&p(&r, "y^2*T0 - x^2*T1")), Some(true));
        // discriminant square => reducible
        assert_eq!(irreducible_supported(&p(&r, "x^2 - y^2")), Some(false));
        // sum of squares: discriminant -4y^2 is no square
        assert_eq!(irreducible_supported(&p(&r, "x^2 + y^2")), Some(true));
        assert_eq!(irreducible_supported(&p(&r, "x + y")), Some(true));
        // xy + T0*T1: v-linear in x with cofactor y, T0T1 not divisible by y
        assert_eq!(irreducible_supported(&p(&r, "x*y + T0*T1")), Some(true));
    }

    #[test]
    fn split_factor_patterns() {
        let r = ring(&["x", "y"]);
        // content x*y with linear cofactor
        let f = p(&r, "x^2*y + x*y^2");
        let fs = split_factors(&f).unwrap();
        assert_eq!(fs.len(), 3); // x, y, x + y
        // pure power shrinks to its variable (single-branch replacement)
        let fs = split_factors(&p(&r, "x^3")).unwrap();
        assert_eq!(fs, vec![p(&r, "x")]);
        // a bare variable is already radical: nothing to do
        assert!(split_factors(&p(&r, "x")).is_none());
        // perfect square shrinks to its root
        let fs = split_factors(&p(&r, "x^2 + 2*x*y + y^2")).unwrap();
        assert_eq!(fs, vec![p(&r, "x + y")]);
        // difference of squares via rational roots
        let fs = split_factors(&p(&r, "x^2 - 4*y^2")).unwrap();
        assert_eq!(fs.len(), 2);
    }
}
