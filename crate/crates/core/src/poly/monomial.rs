use std::cmp::Ordering;

/// Exponent vector of a power product; length always matches the ring's
/// variable count. The derived `Ord` (plain lexicographic on the vector) is
/// only used for canonical storage, never as a term order; see
/// [`MonomialOrder`](super::MonomialOrder) for those.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True when the exponent vector is a standard basis vector.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match (e, found) {
                (0, _) => {}
                (1, None) => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * n).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponents permuted/selected by `map`: entry `i` of the result is the
    /// exponent of source variable `map[i]`.
    pub fn remapped(&self, map: &[usize]) -> Monomial {
        Monomial {
            exps: map.iter().map(|&j| self.exps[j]).collect(),
        }
    }

    /// Embed into a ring with `nvars` variables, placing the exponent of
    /// source variable `i` at target slot `embed[i]`.
    pub fn embedded(&self, nvars: usize, embed: &[usize]) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[embed[i]] = e;
        }
        Monomial { exps }
    }
}

/// Term orders. Every variant is a multiplicative total order with 1 minimal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonomialOrder {
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Total degree, ties by reverse lexicographic (last variable smallest).
    DegRevLex,
    /// Compare the first `split` exponents with `first`, ties broken on the
    /// remaining exponents with `second`.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
    /// Compare weighted degrees, ties broken by `tie`. With 0/1 weights this
    /// is an elimination order for the weight-1 variables.
    Weighted {
        weights: Vec<u64>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for the variables selected by `eliminate`.
    pub fn elimination(eliminate: &[bool]) -> MonomialOrder {
        MonomialOrder::Weighted {
            weights: eliminate.iter().map(|&b| b as u64).collect(),
            tie: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exps(), b.exps())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for (x, y) in a.iter().zip(b).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        // smaller exponent in the last differing position wins
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split, first, second } => {
                let s = (*split).min(a.len());
                match first.cmp_slices(&a[..s], &b[..s]) {
                    Ordering::Equal => second.cmp_slices(&a[s..], &b[s..]),
                    ord => ord,
                }
            }
            MonomialOrder::Weighted { weights, tie } => {
                let wa: u64 = a.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum();
                let wb: u64 = b.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum();
                match wa.cmp(&wb) {
                    Ordering::Equal => tie.cmp_slices(a, b),
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_puts_first_variable_on_top() {
        // x vs y^2 in Q[x,y]
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn degrevlex_prefers_degree() {
        assert_eq!(
            MonomialOrder::DegRevLex.compare(&m(&[1, 0]), &m(&[0, 2])),
            Ordering::Less
        );
        // same degree: xz vs y^2 in Q[x,y,z].
        // exps (1,0,1) vs (0,2,0): last differing position is z: 1 vs 0, larger z
        // exponent loses under degrevlex.
        assert_eq!(
            MonomialOrder::DegRevLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_order_separates_marked_variables() {
        // eliminate t in Q[x, t]: any monomial containing t beats any t-free one
        let ord = MonomialOrder::elimination(&[false, true]);
        assert_eq!(ord.compare(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2]);
        let b = m(&[2, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), m(&[2, 2]));
        assert_eq!(a.gcd(&b), m(&[1, 1]));
        assert_eq!(a.mul(&b), m(&[3, 3]));
        assert_eq!(m(&[2, 2]).div(&a), Some(m(&[1, 0])));
        assert_eq!(a.div(&b), None);
    }
}
