//! Presentations of Rees algebras, associated graded rings and fiber
//! cones; minimal primes of presented quotients; analytic spread and local
//! dimensions. Ambient category throughout: affine algebras over the
//! rationals presented as R/𝔞, with catenary difference formulas for local
//! dimensions.

mod factor;
mod primes;
mod spread;

pub use primes::{certify, minimal_primes, minimal_primes_asserted, Certificate, PrimeWitness};
pub use spread::{analytic_spread, local_dimension, localized_graded_dimension, SpreadResult};

use crate::error::Error;
use crate::gb::Ideal;
use crate::poly::{Coeff, Polynomial, RingDescriptor};

/// An affine algebra A = R/𝔞 presented by its ambient ring and ideal.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    ring: RingDescriptor,
    ambient_ideal: Ideal,
}

impl PresentedAlgebra {
    pub fn new(ring: &RingDescriptor, ambient_ideal: Ideal) -> Result<Self, Error> {
        if !ambient_ideal.is_proper() {
            return Err(Error::UnitIdeal);
        }
        Ok(PresentedAlgebra {
            ring: ring.clone(),
            ambient_ideal,
        })
    }

    pub fn polynomial_ring(ring: &RingDescriptor) -> Self {
        PresentedAlgebra {
            ring: ring.clone(),
            ambient_ideal: Ideal::zero(ring),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn ambient_ideal(&self) -> &Ideal {
        &self.ambient_ideal
    }

    pub fn dimension(&self) -> i64 {
        self.ambient_ideal.krull_dimension()
    }

    /// Is the image of f zero in A?
    pub fn is_zero_in_quotient(&self, f: &Polynomial) -> bool {
        self.ambient_ideal.contains(f)
    }
}

/// Presentation of G = G_I A as R[T0..T_{s-1}]/defining, T-degree graded
/// (deg x_j = 0, deg T_i = 1), with the Rees kernel kept alongside.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    ambient: RingDescriptor,
    base_vars: usize,
    t_vars: usize,
    defining_ideal: Ideal,
    rees_kernel: Ideal,
    zero_part_ideal: Ideal,
    origin: PresentedAlgebra,
    origin_ideal_gens: Vec<Polynomial>,
}

impl GradedPresentation {
    pub fn ambient(&self) -> &RingDescriptor {
        &self.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining_ideal
    }

    pub fn rees_kernel(&self) -> &Ideal {
        &self.rees_kernel
    }

    /// 𝔞 + I in the base ring R; G_0 = R/(𝔞 + I).
    pub fn zero_part_ideal(&self) -> &Ideal {
        &self.zero_part_ideal
    }

    pub fn origin_algebra(&self) -> &PresentedAlgebra {
        &self.origin
    }

    pub fn origin_ideal_gens(&self) -> &[Polynomial] {
        &self.origin_ideal_gens
    }

    pub fn base_vars(&self) -> usize {
        self.base_vars
    }

    pub fn t_vars(&self) -> usize {
        self.t_vars
    }

    pub fn t_indices(&self) -> Vec<usize> {
        (self.base_vars..self.base_vars + self.t_vars).collect()
    }

    /// T-degree weight vector (0 on base variables, 1 on T variables).
    pub fn t_weights(&self) -> Vec<u64> {
        let mut w = vec![0u64; self.base_vars + self.t_vars];
        for slot in w.iter_mut().skip(self.base_vars) {
            *slot = 1;
        }
        w
    }

    pub fn dimension(&self) -> i64 {
        self.defining_ideal.krull_dimension()
    }

    /// Contraction [P]_0 = P ∩ G_0 of an ideal of R[T] containing the
    /// defining ideal, returned as an ideal of the base ring R (it contains
    /// 𝔞 + I).
    pub fn contract_degree_zero(&self, p: &Ideal) -> Result<Ideal, Error> {
        let elim = p.eliminate(&self.t_indices());
        let keep: Vec<usize> = (0..self.base_vars).collect();
        let restricted = elim.restricted(&keep)?;
        Ok(restricted.sum(&self.zero_part_ideal))
    }

    /// Minimal primes of the defining ideal (strict certificates).
    pub fn minimal_primes(&self) -> Result<Vec<PrimeWitness>, Error> {
        minimal_primes(&self.defining_ideal)
    }

    /// Every defining basis element is homogeneous for the T-grading.
    pub fn verify_t_homogeneous(&self) -> bool {
        let w = self.t_weights();
        self.defining_ideal
            .canonical_gens()
            .iter()
            .all(|g| g.is_weighted_homogeneous(&w))
    }

    /// Eliminating every T from the defining ideal recovers 𝔞 + I.
    pub fn verify_zero_part_recovery(&self) -> bool {
        let elim = self.defining_ideal.eliminate(&self.t_indices());
        let keep: Vec<usize> = (0..self.base_vars).collect();
        match elim.restricted(&keep) {
            Ok(r) => r.equals(&self.zero_part_ideal),
            Err(_) => false,
        }
    }
}

/// Kernel J of R[T] -> (R/𝔞)[t], T_i -> t·f_i, by eliminating the single
/// fresh variable t from 𝔞·R[t,T] + (T_i − t·f_i). R[T]/J is the Rees
/// algebra A[It].
pub fn rees_presentation(
    algebra: &PresentedAlgebra,
    ideal_gens: &[Polynomial],
) -> Result<Ideal, Error> {
    build(algebra, ideal_gens).map(|g| g.rees_kernel)
}

/// Full presentation of the associated graded ring G = A[It]/I·A[It]:
/// defining ideal J + (f_1..f_s) with the T-degree grading recorded.
pub fn assoc_graded(
    algebra: &PresentedAlgebra,
    ideal_gens: &[Polynomial],
) -> Result<GradedPresentation, Error> {
    build(algebra, ideal_gens)
}

fn build(
    algebra: &PresentedAlgebra,
    ideal_gens: &[Polynomial],
) -> Result<GradedPresentation, Error> {
    let ring = algebra.ring();
    let n = ring.nvars();
    let s = ideal_gens.len();
    if s == 0 {
        return Err(Error::Input("the ideal needs at least one generator".into()));
    }
    for f in ideal_gens {
        if f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if algebra.is_zero_in_quotient(f) {
            return Err(Error::DegenerateGenerator(f.to_string()));
        }
    }

    // R[t, T0..T_{s-1}] with t at index n, T_i at n+1+i
    let t_name = ring.fresh_name("_t");
    let mut names: Vec<String> = vec![t_name];
    for i in 0..s {
        names.push(ring.fresh_name(&format!("T{i}")));
    }
    let big = ring.extended(names.clone())?;
    let embed: Vec<usize> = (0..n).collect();
    let t = Polynomial::variable(&big, n);

    let mut gens: Vec<Polynomial> = algebra
        .ambient_ideal()
        .generators()
        .iter()
        .map(|g| g.embedded(&big, &embed))
        .collect();
    for (i, f) in ideal_gens.iter().enumerate() {
        let ti = Polynomial::variable(&big, n + 1 + i);
        gens.push(ti.sub(&t.mul(&f.embedded(&big, &embed))));
    }
    let graph = Ideal::new(&big, gens);
    let elim = graph.eliminate(&[n]);

    // restrict R[t,T] -> R[T]
    let mut keep: Vec<usize> = (0..n).collect();
    keep.extend(n + 1..n + 1 + s);
    let rees_ring = ring.extended(names[1..].to_vec())?;
    let kernel_gens: Result<Vec<Polynomial>, Error> = elim
        .generators()
        .iter()
        .map(|g| g.restricted(&rees_ring, &keep))
        .collect();
    let rees_kernel = Ideal::new(&rees_ring, kernel_gens?);

    let embed_rt: Vec<usize> = (0..n).collect();
    let mut defining_gens = rees_kernel.generators().to_vec();
    for f in ideal_gens {
        defining_gens.push(f.embedded(&rees_ring, &embed_rt));
    }
    let defining_ideal = Ideal::new(&rees_ring, defining_gens).canonicalized();

    let zero_part_ideal = algebra
        .ambient_ideal()
        .with_generators(ideal_gens)
        .canonicalized();

    let presentation = GradedPresentation {
        ambient: rees_ring,
        base_vars: n,
        t_vars: s,
        defining_ideal,
        rees_kernel,
        zero_part_ideal,
        origin: algebra.clone(),
        origin_ideal_gens: ideal_gens.to_vec(),
    };
    debug_assert!(presentation.verify_t_homogeneous());
    debug_assert!(presentation.verify_zero_part_recovery());
    Ok(presentation)
}

/// A point q = (x_0 - a_0, ..., x_{n-1} - a_{n-1}) read off a maximal ideal
/// whose reduced basis solves every variable; `None` when q is not of that
/// shape.
pub(crate) fn substitutable_point(q: &Ideal) -> Option<Vec<(usize, Coeff)>> {
    let order = crate::poly::MonomialOrder::DegRevLex;
    let gb = q.groebner(&order);
    let n = q.ring().nvars();
    if gb.len() != n {
        return None;
    }
    let mut values: Vec<Option<Coeff>> = vec![None; n];
    for g in gb.iter() {
        let (lm, _) = g.leading_term(&order)?;
        let v = lm.as_variable()?;
        // g = v - a with a constant
        let tail = Polynomial::variable(q.ring(), v).sub(g);
        if !tail.is_constant() {
            return None;
        }
        values[v] = Some(tail.constant_term());
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.map(|c| (i, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(vars: &[&str]) -> RingDescriptor {
        RingDescriptor::new(vars.to_vec()).unwrap()
    }

    fn polys(r: &RingDescriptor, texts: &[&str]) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, r).unwrap())
            .collect()
    }

    fn ideal(r: &RingDescriptor, texts: &[&str]) -> Ideal {
        Ideal::new(r, polys(r, texts))
    }

    #[test]
    fn rees_kernel_of_principal_in_two_plane_union() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let g = assoc_graded(&a, &polys(&r, &["x"])).unwrap();
        let expect = ideal(g.rees_kernel().ring(), &["x*y", "x*z", "y*T0", "z*T0"]);
        assert!(g.rees_kernel().equals(&expect));
    }

    #[test]
    fn rees_kernel_of_regular_sequence_is_koszul() {
        let r = ring(&["x", "y"]);
        let a = PresentedAlgebra::polynomial_ring(&r);
        let j = rees_presentation(&a, &polys(&r, &["x^2", "y^2"])).unwrap();
        let expect = ideal(j.ring(), &["y^2*T0 - x^2*T1"]);
        assert!(j.equals(&expect));
    }

    #[test]
    fn rees_kernel_of_principal_is_zero() {
        let r = ring(&["x"]);
        let a = PresentedAlgebra::polynomial_ring(&r);
        let j = rees_presentation(&a, &polys(&r, &["x"])).unwrap();
        assert!(j.is_zero_ideal());
    }

    #[test]
    fn graded_presentation_examples() {
        // G for (A = Q[x,y,z]/(xy,xz), I = (x)) is (x, yT0, zT0)
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let g = assoc_graded(&a, &polys(&r, &["x"])).unwrap();
        let expect = ideal(g.ambient(), &["x", "y*T0", "z*T0"]);
        assert!(g.defining_ideal().equals(&expect));
        assert!(g.verify_t_homogeneous());
        assert!(g.verify_zero_part_recovery());
        assert_eq!(g.dimension(), 2);

        // G for (Q[x,y], (x^2,y^2)) reduces to (x^2, y^2): a polynomial
        // extension of A/I
        let r2 = ring(&["x", "y"]);
        let a2 = PresentedAlgebra::polynomial_ring(&r2);
        let g2 = assoc_graded(&a2, &polys(&r2, &["x^2", "y^2"])).unwrap();
        let expect2 = ideal(g2.ambient(), &["x^2", "y^2"]);
        assert!(g2.defining_ideal().equals(&expect2));

        // G for (Q[x], (x)) is the polynomial ring Q[T0]
        let r1 = ring(&["x"]);
        let a1 = PresentedAlgebra::polynomial_ring(&r1);
        let g1 = assoc_graded(&a1, &polys(&r1, &["x"])).unwrap();
        let expect1 = ideal(g1.ambient(), &["x"]);
        assert!(g1.defining_ideal().equals(&expect1));
        assert!(g1
            .zero_part_ideal()
            .equals(&ideal(g1.origin_algebra().ring(), &["x"])));
    }

    #[test]
    fn degenerate_generator_rejected() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        assert!(matches!(
            assoc_graded(&a, &polys(&r, &["x*y"])),
            Err(Error::DegenerateGenerator(_))
        ));
    }

    #[test]
    fn contraction_of_graded_primes() {
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let g = assoc_graded(&a, &polys(&r, &["x"])).unwrap();
        // P = (x,y,z) in R[T0] contracts to the maximal ideal of A/I
        let p = ideal(g.ambient(), &["x", "y", "z"]);
        let c = g.contract_degree_zero(&p).unwrap();
        assert!(c.equals(&ideal(&r, &["x", "y", "z"])));
        // P1 = (x, T0) contracts to (x), i.e. zero in A/I
        let p1 = ideal(g.ambient(), &["x", "T0"]);
        let c1 = g.contract_degree_zero(&p1).unwrap();
        assert!(c1.equals(&ideal(&r, &["x"])));
        // the defining ideal itself contracts to the kernel of A/I -> G_0
        let c2 = g.contract_degree_zero(g.defining_ideal()).unwrap();
        assert!(c2.equals(&ideal(&r, &["x"])));
    }

    #[test]
    fn point_extraction() {
        let r = ring(&["x", "y"]);
        let q = ideal(&r, &["x - 1", "y + 2"]);
        let pt = substitutable_point(&q).unwrap();
        assert_eq!(pt.len(), 2);
        let q2 = ideal(&r, &["x - y"]);
        assert!(substitutable_point(&q2).is_none());
        let q3 = ideal(&r, &["x^2 - 1", "y"]);
        assert!(substitutable_point(&q3).is_none());
    }
}
