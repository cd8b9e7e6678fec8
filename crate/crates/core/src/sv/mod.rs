//! Intersection cycles on affine cones: the iterative hyperplane-cut
//! algorithm on the product of two cones, harvesting the diagonal-supported
//! part of the top-dimensional cycle at each step, with exact Bezout
//! accounting and distinguished-variety extraction from the normal cone.

mod rng;

pub use rng::XorShift64Star;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::gb::Ideal;
use crate::graded::{
    assoc_graded, minimal_primes, GradedPresentation, PresentedAlgebra, PrimeWitness,
};
use crate::poly::{Monomial, Polynomial, RingDescriptor};

/// Product-of-cones setup: ambient Q[x_0..x_n, y_0..y_n], the relabeled
/// product ideal, the n+1 diagonal forms x_j − y_j, and the seeded integer
/// hyperplane matrix (one row per expected iteration).
#[derive(Clone, Debug)]
pub struct JoinSetup {
    ambient: RingDescriptor,
    n: usize,
    product_ideal: Ideal,
    diagonal_forms: Vec<Polynomial>,
    hyperplanes: Vec<Polynomial>,
    u_matrix: Vec<Vec<i64>>,
    seed: u64,
    bound: u64,
    deg_x: BigInt,
    deg_y: BigInt,
}

impl JoinSetup {
    pub fn ambient(&self) -> &RingDescriptor {
        &self.ambient
    }

    pub fn product_ideal(&self) -> &Ideal {
        &self.product_ideal
    }

    pub fn diagonal_forms(&self) -> &[Polynomial] {
        &self.diagonal_forms
    }

    pub fn hyperplanes(&self) -> &[Polynomial] {
        &self.hyperplanes
    }

    pub fn u_matrix(&self) -> &[Vec<i64>] {
        &self.u_matrix
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn bezout_number(&self) -> BigInt {
        &self.deg_x * &self.deg_y
    }

    pub fn degrees(&self) -> (BigInt, BigInt) {
        (self.deg_x.clone(), self.deg_y.clone())
    }

    /// The product algebra A = R/(I(X)+I(Y)) with the diagonal ideal, as a
    /// presented-algebra instance for the normal-cone side.
    pub fn as_algebra_instance(&self) -> Result<(PresentedAlgebra, Vec<Polynomial>), Error> {
        let a = PresentedAlgebra::new(&self.ambient, self.product_ideal.clone())?;
        Ok((a, self.diagonal_forms.clone()))
    }
}

/// One prime of the cycle with its multiplicity (length at the prime),
/// dimension and degree.
#[derive(Clone, Debug)]
pub struct CycleComponent {
    pub prime: PrimeWitness,
    pub multiplicity: BigInt,
    pub dimension: i64,
    pub degree: BigInt,
}

impl CycleComponent {
    pub fn weight(&self) -> BigInt {
        &self.multiplicity * &self.degree
    }
}

/// The chain β_0 ⊇ β_1 ⊇ ... with the harvested diagonal cycles v_k.
#[derive(Clone, Debug)]
pub struct SvTrace {
    pub beta_chain: Vec<Ideal>,
    pub v_cycles: Vec<(usize, Vec<CycleComponent>)>,
    pub bezout_expected: BigInt,
    pub bezout_total: BigInt,
    pub seed: u64,
    pub exhausted: bool,
}

impl SvTrace {
    pub fn total_weight(&self) -> BigInt {
        self.v_cycles
            .iter()
            .flat_map(|(_, comps)| comps.iter())
            .map(|c| c.weight())
            .sum()
    }

    /// Multiset of (dimension, multiplicity, degree) triples, sorted;
    /// seed-independent for generic hyperplanes.
    pub fn shape(&self) -> Vec<(usize, i64, BigInt, BigInt)> {
        let mut out: Vec<(usize, i64, BigInt, BigInt)> = self
            .v_cycles
            .iter()
            .flat_map(|(k, comps)| {
                comps
                    .iter()
                    .map(|c| (*k, c.dimension, c.multiplicity.clone(), c.degree.clone()))
            })
            .collect();
        out.sort();
        out
    }
}

/// Degree data of the top-dimensional part via the leading-term ideal
/// (valid for the homogeneous ideals handled here).
fn top_data(ideal: &Ideal) -> Result<(i64, BigInt), Error> {
    if ideal.is_unit() {
        return Ok((-1, BigInt::zero()));
    }
    let ring = ideal.ring();
    let lt = Ideal::new(
        ring,
        ideal
            .leading_monomials()
            .into_iter()
            .map(|m| Polynomial::from_term(ring, m, crate::poly::coeff_int(1)))
            .collect(),
    );
    lt.hilbert_data()
}

/// Relabel two homogeneous cone ideals into the product ring and draw the
/// hyperplane matrix from the seeded generator; same seed, same matrix.
pub fn build_product_join(
    x_ideal: &Ideal,
    y_ideal: &Ideal,
    seed: u64,
    bound: u64,
) -> Result<JoinSetup, Error> {
    let nx = x_ideal.ring().nvars();
    if y_ideal.ring().nvars() != nx {
        return Err(Error::RingMismatch);
    }
    for g in x_ideal.generators().iter().chain(y_ideal.generators()) {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let n = nx - 1;
    let mut names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    names.extend((0..=n).map(|i| format!("y{i}")));
    let ambient = RingDescriptor::new(names)?;
    let embed_x: Vec<usize> = (0..=n).collect();
    let embed_y: Vec<usize> = (nx..2 * nx).collect();
    let mut gens = Vec::new();
    for g in x_ideal.generators() {
        gens.push(g.embedded(&ambient, &embed_x));
    }
    for g in y_ideal.generators() {
        gens.push(g.embedded(&ambient, &embed_y));
    }
    let product_ideal = Ideal::new(&ambient, gens);
    let diagonal_forms: Vec<Polynomial> = (0..=n)
        .map(|i| {
            Polynomial::variable(&ambient, i).sub(&Polynomial::variable(&ambient, nx + i))
        })
        .collect();
    let rows = product_ideal.krull_dimension();
    if rows < 0 {
        return Err(Error::UnitIdeal);
    }
    let mut rng = XorShift64Star::new(seed);
    let mut u_matrix = Vec::with_capacity(rows as usize);
    let mut hyperplanes = Vec::with_capacity(rows as usize);
    for _ in 0..rows {
        let row: Vec<i64> = (0..=n).map(|_| rng.next_in_band(bound)).collect();
        let mut h = Polynomial::zero(&ambient);
        for (j, &c) in row.iter().enumerate() {
            h = h.add(&diagonal_forms[j].scale(&crate::poly::coeff_int(c)));
        }
        u_matrix.push(row);
        hyperplanes.push(h);
    }
    let (_, deg_x) = top_data(x_ideal)?;
    let (_, deg_y) = top_data(y_ideal)?;
    Ok(JoinSetup {
        ambient,
        n,
        product_ideal,
        diagonal_forms,
        hyperplanes,
        u_matrix,
        seed,
        bound,
        deg_x,
        deg_y,
    })
}

/// Substitute y_i := x_i, mapping the ambient onto the small diagonal ring.
fn project_to_diagonal(
    p: &Polynomial,
    small: &RingDescriptor,
    n: usize,
) -> Polynomial {
    let mut out = Polynomial::zero(small);
    for (m, c) in p.terms() {
        let mut exps = vec![0u32; n + 1];
        for (i, &e) in m.exps().iter().enumerate() {
            exps[if i <= n { i } else { i - n - 1 }] += e;
        }
        out.add_term(Monomial::new(exps), c.clone());
    }
    out
}

/// Ideal saturation B : D^∞ for D = (d_1..d_m): the intersection of the
/// single-polynomial saturations B : d_i^∞ (both sides drop exactly the
/// primary components whose radical contains the relevant elements).
fn saturate_by_ideal(b: &Ideal, ds: &[Polynomial]) -> Result<Ideal, Error> {
    let mut acc: Option<Ideal> = None;
    for d in ds {
        let s = b.saturation_only(d)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => prev.intersect(&s)?,
        });
    }
    acc.ok_or_else(|| Error::Input("empty saturation ideal".into()))
}

/// Diagonal-supported top components of B with their multiplicities,
/// computed through the quotient to the small diagonal ring where the
/// splitter stays inside its supported fragment.
fn diagonal_top_components(
    setup: &JoinSetup,
    b: &Ideal,
    top_dim: i64,
) -> Result<Vec<CycleComponent>, Error> {
    let n = setup.n;
    let small = RingDescriptor::new((0..=n).map(|i| format!("x{i}")).collect::<Vec<_>>())?;
    let projected: Vec<Polynomial> = b
        .generators()
        .iter()
        .map(|g| project_to_diagonal(g, &small, n))
        .collect();
    let bq = Ideal::new(&small, projected);
    if bq.is_unit() {
        return Ok(vec![]);
    }
    let comps = minimal_primes(&bq)?;
    let lift: Vec<usize> = (0..=n).collect();
    // pull back to the ambient ring: lifted generators plus the diagonal
    let mut tops: Vec<(PrimeWitness, Ideal)> = Vec::new();
    for w in comps {
        let mut gens: Vec<Polynomial> = w
            .ideal
            .generators()
            .iter()
            .map(|g| g.embedded(setup.ambient(), &lift))
            .collect();
        gens.extend(setup.diagonal_forms.iter().cloned());
        let pulled = Ideal::new(setup.ambient(), gens).canonicalized();
        if pulled.krull_dimension() == top_dim {
            let certificate = crate::graded::certify(&pulled);
            tops.push((
                PrimeWitness {
                    ideal: pulled.clone(),
                    certificate,
                },
                pulled,
            ));
        }
    }
    // per-component multiplicity: isolate against the other diagonal tops,
    // then subtract the non-diagonal remainder
    let mut out = Vec::new();
    for (idx, (witness, prime)) in tops.iter().enumerate() {
        let mut isolators: Vec<Polynomial> = Vec::new();
        for (jdx, (_, other)) in tops.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            let g = other
                .generators()
                .iter()
                .find(|g| !prime.contains(g))
                .ok_or_else(|| {
                    Error::Internal("distinct components must separate".into())
                })?;
            isolators.push(g.clone());
        }
        let isolated = if isolators.is_empty() {
            b.canonicalized()
        } else {
            let mut acc = b.canonicalized();
            for g in &isolators {
                acc = acc.saturation_only(g)?;
            }
            acc
        };
        let (d1, t1) = top_data(&isolated)?;
        if d1 != top_dim {
            return Err(Error::Internal(
                "isolation must keep the diagonal component".into(),
            ));
        }
        let rest = saturate_by_ideal(&isolated, &setup.diagonal_forms)?;
        let (d2, t2) = top_data(&rest)?;
        let diagonal_weight = if d2 == top_dim { t1 - t2 } else { t1 };
        let (dp, deg_p) = top_data(prime)?;
        debug_assert_eq!(dp, top_dim);
        if (&diagonal_weight % &deg_p) != BigInt::zero() || diagonal_weight <= BigInt::zero() {
            return Err(Error::Internal(format!(
                "non-integral multiplicity {diagonal_weight}/{deg_p}"
            )));
        }
        out.push(CycleComponent {
            prime: witness.clone(),
            multiplicity: &diagonal_weight / &deg_p,
            dimension: top_dim,
            degree: deg_p,
        });
    }
    out.sort_by_key(|c| c.prime.canonical_key());
    Ok(out)
}

/// Run the cut-and-harvest chain: B := β_k + (H_k); v_{k+1} := the
/// diagonal-supported top components of B; β_{k+1} := B : Δ^∞. Stops when β
/// becomes the unit ideal (for cones the vertex contribution arrives last)
/// or the hyperplanes run out.
pub fn sv_cycle(setup: &JoinSetup) -> Result<SvTrace, Error> {
    let d_product = setup.product_ideal.krull_dimension();
    let mut beta = setup.product_ideal.canonicalized();
    let mut beta_chain = vec![beta.clone()];
    let mut v_cycles = Vec::new();
    for (k, h) in setup.hyperplanes.iter().enumerate() {
        if beta.is_unit() {
            break;
        }
        // dimension law: top dim of beta_k is dim(product) - k
        let dim_beta = beta.krull_dimension();
        if dim_beta != d_product - k as i64 {
            return Err(Error::Internal(format!(
                "dimension law violated at step {k}: {dim_beta} vs {}",
                d_product - k as i64
            )));
        }
        let b = beta.with_generators(std::slice::from_ref(h)).canonicalized();
        let top_dim = b.krull_dimension();
        let v = if top_dim >= 0 {
            diagonal_top_components(setup, &b, top_dim)?
        } else {
            vec![]
        };
        // support law, recheck on the harvested primes
        for comp in &v {
            for d in &setup.diagonal_forms {
                if !comp.prime.ideal.radical_membership(d) {
                    return Err(Error::Internal(
                        "harvested component does not lie in the diagonal".into(),
                    ));
                }
            }
        }
        v_cycles.push((k + 1, v));
        beta = saturate_by_ideal(&b, &setup.diagonal_forms)?.canonicalized();
        beta_chain.push(beta.clone());
    }
    let exhausted = beta.is_unit();
    let mut trace = SvTrace {
        beta_chain,
        v_cycles,
        bezout_expected: setup.bezout_number(),
        bezout_total: BigInt::zero(),
        seed: setup.seed,
        exhausted,
    };
    trace.bezout_total = trace.total_weight();
    Ok(trace)
}

/// Top-dimensional cycle of an arbitrary ideal: for each top-dimensional
/// minimal prime P, the primary part is isolated by saturating against one
/// generator of every other top component, and the multiplicity is the
/// degree ratio.
pub fn cycle_of_top_components(b: &Ideal) -> Result<Vec<CycleComponent>, Error> {
    let top_dim = b.krull_dimension();
    if top_dim < 0 {
        return Ok(vec![]);
    }
    let comps = minimal_primes(b)?;
    let tops: Vec<&PrimeWitness> = comps
        .iter()
        .filter(|w| w.ideal.krull_dimension() == top_dim)
        .collect();
    let mut out = Vec::new();
    for (idx, w) in tops.iter().enumerate() {
        let mut isolated = b.canonicalized();
        for (jdx, other) in tops.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            let g = other
                .ideal
                .generators()
                .iter()
                .find(|g| !w.ideal.contains(g))
                .ok_or_else(|| Error::Internal("components must separate".into()))?;
            isolated = isolated.saturation_only(g)?;
        }
        let (dq, deg_q) = top_data(&isolated)?;
        if dq != top_dim {
            return Err(Error::Internal("isolation lost the component".into()));
        }
        let (_, deg_p) = top_data(&w.ideal)?;
        if (&deg_q % &deg_p) != BigInt::zero() {
            return Err(Error::Internal(format!(
                "non-integral multiplicity {deg_q}/{deg_p}"
            )));
        }
        out.push(CycleComponent {
            prime: (*w).clone(),
            multiplicity: &deg_q / &deg_p,
            dimension: top_dim,
            degree: deg_p,
        });
    }
    out.sort_by_key(|c| c.prime.canonical_key());
    Ok(out)
}

/// A contraction of a minimal prime of the normal cone, flagged embedded
/// when it is not a minimal prime of A/I.
#[derive(Clone, Debug)]
pub struct DistinguishedVariety {
    pub graded_prime: PrimeWitness,
    pub contraction: Ideal,
    pub embedded: bool,
}

/// Contractions [P]_0 of the minimal primes of G_I A; embedded iff the
/// contraction is not among the minimal primes of A/I. The embedded flags
/// are empty exactly when every minimal prime of G contracts minimally.
pub fn distinguished_varieties(
    algebra: &PresentedAlgebra,
    ideal_gens: &[Polynomial],
) -> Result<(GradedPresentation, Vec<DistinguishedVariety>), Error> {
    let g = assoc_graded(algebra, ideal_gens)?;
    let graded_primes = g.minimal_primes()?;
    let zero_min = minimal_primes(g.zero_part_ideal())?;
    let mut out = Vec::new();
    for w in graded_primes {
        let contraction = g.contract_degree_zero(&w.ideal)?;
        let embedded = !zero_min.iter().any(|m| m.ideal.equals(&contraction));
        out.push(DistinguishedVariety {
            graded_prime: w,
            contraction,
            embedded,
        });
    }
    Ok((g, out))
}

/// Conservation report: Σ multiplicity·degree over the harvested cycles
/// must equal deg X̂ · deg Ŷ on a complete trace.
#[derive(Clone, Debug)]
pub struct BezoutReport {
    pub expected: BigInt,
    pub total: BigInt,
    pub conserved: bool,
}

pub fn bezout_check(trace: &SvTrace) -> Result<BezoutReport, Error> {
    if !trace.exhausted {
        return Err(Error::Internal(
            "trace incomplete: the chain did not reach the unit ideal".into(),
        ));
    }
    let total = trace.total_weight();
    Ok(BezoutReport {
        expected: trace.bezout_expected.clone(),
        conserved: total == trace.bezout_expected,
        total,
    })
}

/// Dimension and degree of the top-dimensional part of a homogeneous cone
/// ideal, through its leading-term ideal.
pub fn cone_degree(ideal: &Ideal) -> Result<(i64, BigInt), Error> {
    top_data(ideal)
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

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn join_setup_examples() {
        let r2 = ring(&["x0", "x1", "x2"]);
        let x = ideal(&r2, &["x0*x1"]);
        let setup = build_product_join(&x, &x, 1, 10_000).unwrap();
        assert_eq!(setup.ambient().nvars(), 6);
        assert_eq!(setup.diagonal_forms().len(), 3);
        assert_eq!(setup.product_ideal().generators().len(), 2);
        assert_eq!(setup.bezout_number(), big(4));
        assert_eq!(setup.hyperplanes().len(), 4);

        let setup2 = build_product_join(&x, &x, 1, 10_000).unwrap();
        assert_eq!(setup.u_matrix(), setup2.u_matrix());

        let bad = ideal(&r2, &["x0*x1 + x2"]);
        assert!(matches!(
            build_product_join(&bad, &x, 1, 10_000),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn cycle_of_top_components_examples() {
        // double point
        let r = ring(&["x", "y"]);
        let comps = cycle_of_top_components(&ideal(&r, &["x^2", "y"])).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].multiplicity, big(2));
        assert_eq!(comps[0].dimension, 0);
        assert_eq!(comps[0].degree, big(1));

        // reduced hypersurface with two factors
        let r3 = ring(&["x0", "x1", "x2"]);
        let comps = cycle_of_top_components(&ideal(&r3, &["x0*x1"])).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.multiplicity == big(1)));

        // lower-dimensional component excluded
        let comps = cycle_of_top_components(&ideal(&r3, &["x0*x1", "x0*x2"])).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].prime.ideal.canonical_key(), "x0");
        assert_eq!(comps[0].multiplicity, big(1));
        assert_eq!(comps[0].dimension, 2);
    }

    #[test]
    fn transverse_lines_cycle() {
        // X = V(x0), Y = V(x1) in the plane: one diagonal point, weight 1
        let r = ring(&["x0", "x1"]);
        let x = ideal(&r, &["x0"]);
        let y = ideal(&r, &["x1"]);
        let setup = build_product_join(&x, &y, 1, 10_000).unwrap();
        let trace = sv_cycle(&setup).unwrap();
        assert!(trace.exhausted);
        assert_eq!(trace.bezout_total, big(1));
        let comps: Vec<_> = trace
            .v_cycles
            .iter()
            .flat_map(|(_, c)| c.iter())
            .collect();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].dimension, 0);
        assert_eq!(comps[0].multiplicity, big(1));
        // the diagonal point-cone is the origin
        assert_eq!(comps[0].prime.ideal.canonical_key(), "x0, x1, y0, y1");
        let report = bezout_check(&trace).unwrap();
        assert!(report.conserved);
    }

    #[test]
    fn distinguished_varieties_examples() {
        // two-plane union with principal ideal: the maximal contraction is
        // embedded
        let r = ring(&["x", "y", "z"]);
        let a = PresentedAlgebra::new(&r, ideal(&r, &["x*y", "x*z"])).unwrap();
        let (_, dv) = distinguished_varieties(
            &a,
            &[parse_polynomial("x", &r).unwrap()],
        )
        .unwrap();
        assert_eq!(dv.len(), 2);
        let embedded: Vec<_> = dv.iter().filter(|d| d.embedded).collect();
        assert_eq!(embedded.len(), 1);
        assert_eq!(embedded[0].contraction.canonical_key(), "x, y, z");

        // polynomial ring, principal prime: nothing embedded
        let r2 = ring(&["x", "y"]);
        let a2 = PresentedAlgebra::polynomial_ring(&r2);
        let (_, dv2) = distinguished_varieties(
            &a2,
            &[parse_polynomial("x", &r2).unwrap()],
        )
        .unwrap();
        assert_eq!(dv2.len(), 1);
        assert!(!dv2[0].embedded);
        assert_eq!(dv2[0].contraction.canonical_key(), "x");
    }
}
