//! Local dimensions and analytic spread of presented algebras, through the
//! catenary difference formulas valid for affine algebras over a field.

use crate::error::Error;
use crate::gb::Ideal;

use super::{minimal_primes, substitutable_point, GradedPresentation, PresentedAlgebra};

/// dim A_p for a prime p ⊇ 𝔞 of the presented algebra A = R/𝔞: the maximum
/// of dim R/P − dim R/p over the minimal primes P of 𝔞 contained in p.
/// Primality of p is the caller's assertion and is recorded upstream.
pub fn local_dimension(algebra: &PresentedAlgebra, p: &Ideal) -> Result<i64, Error> {
    if p.ring() != algebra.ring() {
        return Err(Error::RingMismatch);
    }
    for g in algebra.ambient_ideal().generators() {
        if !p.contains(g) {
            return Err(Error::NotContaining(g.to_string()));
        }
    }
    let dim_p = p.krull_dimension();
    if algebra.ambient_ideal().is_zero_ideal() {
        return Ok(algebra.ring().nvars() as i64 - dim_p);
    }
    let comps = minimal_primes(algebra.ambient_ideal())?;
    let mut best: Option<i64> = None;
    for w in &comps {
        let inside = w.ideal.generators().iter().all(|g| p.contains(g));
        if inside {
            let d = w.ideal.krull_dimension() - dim_p;
            best = Some(best.map_or(d, |b: i64| b.max(d)));
        }
    }
    best.ok_or_else(|| {
        Error::Internal("a prime containing the ambient ideal contains a minimal prime".into())
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SpreadResult {
    pub value: i64,
    /// Exact fiber-cone computation at a substitutable maximal ideal; false
    /// means the general-q difference formula, which assumes an
    /// equidimensional fiber and is reported as a heuristic.
    pub exact: bool,
}

/// Analytic spread ℓ(I_q) = dim (G ⊗ κ(q)).
///
/// Exact mode applies when q is maximal and generated by variables minus
/// coordinates: the T-fiber presentation is evaluated at the point and its
/// Krull dimension returned. For other primes the difference formula
/// dim(R[T]/(defining + q)) − dim(R/q) is used and flagged.
pub fn analytic_spread(g: &GradedPresentation, q: &Ideal) -> Result<SpreadResult, Error> {
    if q.ring() != g.origin_algebra().ring() {
        return Err(Error::RingMismatch);
    }
    for f in g
        .origin_algebra()
        .ambient_ideal()
        .generators()
        .iter()
        .chain(g.origin_ideal_gens())
    {
        if !q.contains(f) {
            return Err(Error::NotContaining(f.to_string()));
        }
    }
    if let Some(point) = substitutable_point(q) {
        // substitute the point into the defining ideal; what is left lives
        // in the T variables and presents the fiber cone over κ(q)
        let ambient = g.ambient();
        let t_ring = ambient.restricted(&g.t_indices())?;
        let mut fiber_gens = Vec::new();
        for gen in g.defining_ideal().generators() {
            let sub = gen.substitute(&point);
            if !sub.is_zero() {
                fiber_gens.push(sub.restricted(&t_ring, &g.t_indices())?);
            }
        }
        let fiber = Ideal::new(&t_ring, fiber_gens);
        return Ok(SpreadResult {
            value: fiber.krull_dimension(),
            exact: true,
        });
    }
    // general q: difference formula
    let ambient = g.ambient();
    let embed: Vec<usize> = (0..g.base_vars()).collect();
    let q_up = q.embedded(ambient, &embed);
    let total = g.defining_ideal().sum(&q_up);
    let value = total.krull_dimension() - q.krull_dimension();
    Ok(SpreadResult {
        value,
        exact: false,
    })
}

/// Localized dimension of a quotient D of G at a prime p of A containing
/// the degree-zero contraction: the maximum of dim(R[T]/Q) − dim(R/p) over
/// minimal primes Q of D whose contraction lies inside p.
pub fn localized_graded_dimension(
    g: &GradedPresentation,
    d: &Ideal,
    p: &Ideal,
) -> Result<i64, Error> {
    if d.ring() != g.ambient() || p.ring() != g.origin_algebra().ring() {
        return Err(Error::RingMismatch);
    }
    let contraction = g.contract_degree_zero(d)?;
    for c in contraction.generators() {
        if !p.contains(c) {
            return Err(Error::NotContaining(c.to_string()));
        }
    }
    let dim_p = p.krull_dimension();
    let comps = minimal_primes(d)?;
    let mut best: Option<i64> = None;
    for w in &comps {
        let c = g.contract_degree_zero(&w.ideal)?;
        let inside = c.generators().iter().all(|gen| p.contains(gen));
        if inside {
            let v = w.ideal.krull_dimension() - dim_p;
            best = Some(best.map_or(v, |b: i64| b.max(v)));
        }
    }
    best.ok_or_else(|| Error::Unresolved("no component localizes into the given prime".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::assoc_graded;
    use crate::poly::{parse_polynomial, Polynomial as Poly, RingDescriptor};

    fn ring(vars: &[&str]) -> RingDescriptor {
        RingDescriptor::new(vars.to_vec()).unwrap()
    }

    fn polys(r: &RingDescriptor, texts: &[&str]) -> Vec<Poly> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, r).unwrap())
            .collect()
    }

    fn ideal(r: &RingDescriptor, texts: &[&str]) -> Ideal {
        Ideal::new(r, polys(r, texts))
    }

    #[test]
    fn local_dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let m = ideal(&r, &["x", "y", "z"]);
        assert_eq!(local_dimension(&a, &m).unwrap(), 2);

        let r2 = ring(&["x", "y"]);
        let a2 = PresentedAlgebra::polynomial_ring(&r2);
        assert_eq!(
            local_dimension(&a2, &ideal(&r2, &["x", "y"])).unwrap(),
            2
        );

        // at (y,z) only the line component survives the localization and the
        // local ring is a field
        let yz = ideal(&r, &["y", "z"]);
        assert_eq!(local_dimension(&a, &yz).unwrap(), 0);
    }

    #[test]
    fn analytic_spread_examples() {
        // two-plane union, principal ideal: spread 1 < 2 = local dimension
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let g = assoc_graded(&a, &polys(&r, &["x"])).unwrap();
        let m = ideal(&r, &["x", "y", "z"]);
        let s = analytic_spread(&g, &m).unwrap();
        assert_eq!(s, SpreadResult { value: 1, exact: true });

        // maximal-primary ideal: spread = dim A
        let r2 = ring(&["x", "y"]);
        let a2 = PresentedAlgebra::polynomial_ring(&r2);
        let g2 = assoc_graded(&a2, &polys(&r2, &["x^2", "y^2"])).unwrap();
        let s2 = analytic_spread(&g2, &ideal(&r2, &["x", "y"])).unwrap();
        assert_eq!(s2, SpreadResult { value: 2, exact: true });

        // triangle edge ideal: the fiber cone is a full polynomial ring
        let r3 = ring(&["x", "y", "z"]);
        let a3 = PresentedAlgebra::polynomial_ring(&r3);
        let g3 = assoc_graded(&a3, &polys(&r3, &["x*y", "x*z", "y*z"])).unwrap();
        let s3 = analytic_spread(&g3, &ideal(&r3, &["x", "y", "z"])).unwrap();
        assert_eq!(s3, SpreadResult { value: 3, exact: true });
    }

    #[test]
    fn spread_requires_containment() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::polynomial_ring(&r);
        let g = assoc_graded(&a, &polys(&r, &["x*y", "x*z", "y*z"])).unwrap();
        let q = ideal(&r, &["x"]);
        assert!(matches!(
            analytic_spread(&g, &q),
            Err(Error::NotContaining(_))
        ));
    }

    #[test]
    fn localized_graded_dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let g = assoc_graded(&a, &polys(&r, &["x"])).unwrap();
        let m = ideal(&r, &["x", "y", "z"]);
        // dim (G ⊗ A_m) = 2
        assert_eq!(
            localized_graded_dimension(&g, g.defining_ideal(), &m).unwrap(),
            2
        );
        // dim (G/P ⊗ A_m) = 1 for P = (x,y,z)R[T]
        let p = ideal(g.ambient(), &["x", "y", "z"]);
        assert_eq!(localized_graded_dimension(&g, &p, &m).unwrap(), 1);
    }

    #[test]
    fn heuristic_mode_flags_general_primes() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::polynomial_ring(&r);
        let g = assoc_graded(&a, &polys(&r, &["x", "y"])).unwrap();
        // q = (x, y) is not maximal: general mode
        let q = ideal(&r, &["x", "y"]);
        let s = analytic_spread(&g, &q).unwrap();
        assert!(!s.exact);
        // fiber of the Koszul presentation over V(x,y): dim R[T]/(def + q) =
        // 1 (T-line over each point) + dim V(q) = 1; spread of (x,y) at the
        // generic point of V(x,y) is 2 by the difference formula
        assert_eq!(s.value, 2);
    }
}
