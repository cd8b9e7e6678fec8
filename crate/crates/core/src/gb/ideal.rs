use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::Error;
use crate::poly::{MonomialOrder, Polynomial, RingDescriptor};

use super::buchberger::{groebner_basis, normal_form};

/// An ideal presented by generators, with reduced Groebner bases cached per
/// term order. The cache is write-once per order: concurrent fills compute
/// the same (unique) reduced basis, so double computation is benign.
pub struct Ideal {
    ring: RingDescriptor,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("ideal cache poisoned").clone();
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}

impl Ideal {
    pub fn new(ring: &RingDescriptor, gens: Vec<Polynomial>) -> Self {
        let mut clean: Vec<Polynomial> = Vec::new();
        for g in gens {
            debug_assert!(g.ring() == ring);
            if !g.is_zero() && !clean.contains(&g) {
                clean.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: clean,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis under `order`, cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(gb) = self.cache.lock().expect("ideal cache poisoned").get(order) {
            return gb.clone();
        }
        let gb = Arc::new(groebner_basis(&self.gens, &self.ring, order));
        let mut cache = self.cache.lock().expect("ideal cache poisoned");
        cache.entry(order.clone()).or_insert(gb).clone()
    }

    pub fn normal_form(&self, f: &Polynomial, order: &MonomialOrder) -> Polynomial {
        let gb = self.groebner(order);
        normal_form(f, &gb, order)
    }

    /// Membership via normal form under degrevlex.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f, &MonomialOrder::DegRevLex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Ideal equality via the unique reduced basis.
    pub fn equals(&self, other: &Ideal) -> bool {
        if self.ring != other.ring {
            return false;
        }
        let o = MonomialOrder::DegRevLex;
        *self.groebner(&o) == *other.groebner(&o)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner(&MonomialOrder::DegRevLex);
        gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Canonical generator set: the reduced degrevlex basis.
    pub fn canonical_gens(&self) -> Arc<Vec<Polynomial>> {
        self.groebner(&MonomialOrder::DegRevLex)
    }

    /// Stable sort/display key for component ordering: the reduced basis
    /// elements as strings, sorted.
    pub fn canonical_key(&self) -> String {
        let gb = self.canonical_gens();
        let mut parts: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        parts.sort();
        parts.join(", ")
    }

    /// True when every reduced basis element is a single term.
    pub fn is_monomial_ideal(&self) -> bool {
        self.canonical_gens().iter().all(|p| p.num_terms() == 1)
    }

    /// Test-time invariant: every cached basis generates the same ideal as
    /// the stored generators, checked by mutual reduction to zero.
    pub fn verify_cache_consistency(&self) -> bool {
        let cache = self.cache.lock().expect("ideal cache poisoned").clone();
        for (order, gb) in cache {
            let from_gens = groebner_basis(&self.gens, &self.ring, &order);
            let a = gb
                .iter()
                .all(|g| normal_form(g, &from_gens, &order).is_zero());
            let b = from_gens
                .iter()
                .all(|g| normal_form(g, &gb, &order).is_zero());
            if !(a && b) {
                return false;
            }
        }
        true
    }

    /// Rebuild from the canonical basis (drops stale generators).
    pub fn canonicalized(&self) -> Ideal {
        let gb = self.canonical_gens();
        Ideal::new(&self.ring, gb.as_ref().clone())
    }

    pub fn check_same_ring(&self, other: &Ideal) -> Result<(), Error> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(ring: &RingDescriptor, texts: &[&str]) -> Ideal {
        Ideal::new(
            ring,
            texts
                .iter()
                .map(|t| parse_polynomial(t, ring).unwrap())
                .collect(),
        )
    }

    #[test]
    fn membership_by_normal_form() {
        let r = RingDescriptor::new(vec!["x", "y"]).unwrap();
        let i = ideal(&r, &["x"]);
        let xy = parse_polynomial("x*y", &r).unwrap();
        assert!(i.contains(&xy));
        assert_eq!(
            i.normal_form(&xy, &MonomialOrder::DegRevLex),
            Polynomial::zero(&r)
        );

        // xy not in (x^2, y^2)
        let j = ideal(&r, &["x^2", "y^2"]);
        let nf = j.normal_form(&xy, &MonomialOrder::DegRevLex);
        assert_eq!(nf, xy);
    }

    #[test]
    fn cache_consistency_invariant() {
        let r = RingDescriptor::new(vec!["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x*y - z^2", "x^2 - y*z"]);
        let _ = i.groebner(&MonomialOrder::DegRevLex);
        let _ = i.groebner(&MonomialOrder::Lex);
        assert!(i.verify_cache_consistency());
    }

    #[test]
    fn unit_ideal_detection() {
        let r = RingDescriptor::new(vec!["x"]).unwrap();
        let i = ideal(&r, &["x", "x - 1"]);
        assert!(i.is_unit());
        assert!(!ideal(&r, &["x"]).is_unit());
    }

    #[test]
    fn handles_are_shareable_and_cache_fills_race_benignly() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Ideal>();
        assert_send_sync::<Polynomial>();
        assert_send_sync::<RingDescriptor>();

        let r = RingDescriptor::new(vec!["x", "y", "z"]).unwrap();
        let i = std::sync::Arc::new(ideal(&r, &["x*y - z^2", "x^2 - y*z"]));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let i = i.clone();
                std::thread::spawn(move || i.groebner(&MonomialOrder::DegRevLex))
            })
            .collect();
        let bases: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for b in &bases[1..] {
            assert_eq!(**b, *bases[0]);
        }
    }
}
