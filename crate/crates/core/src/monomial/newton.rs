//! Newton-polyhedron membership by exact rational feasibility.
//!
//! A monomial x^a lies in the integral closure of I^n (I monomial with
//! generator exponents e_1..e_k) iff a ∈ n·NP(I), i.e. there are λ_i ≥ 0
//! with Σλ_i = n and Σλ_i·e_i ≤ a componentwise. That feasibility problem
//! is decided by a small exact phase-1 simplex with Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

/// Is the system  E^T λ ≤ a,  Σλ = n,  λ ≥ 0  feasible?
/// `gens[i]` is the exponent vector e_i; `a` the candidate exponent vector.
pub fn in_scaled_polyhedron(gens: &[Vec<u32>], a: &[u32], n: u32) -> bool {
    if gens.is_empty() {
        return false;
    }
    let d = a.len();
    let k = gens.len();
    // slack form: Σ λ_i e_ij + s_j = a_j  (j = 0..d),  Σ λ_i = n
    // variables: λ (k), s (d); artificials added per row in phase 1
    let rows = d + 1;
    let cols = k + d;
    let mut mat: Vec<Vec<Q>> = vec![vec![Q::zero(); cols]; rows];
    let mut rhs: Vec<Q> = Vec::with_capacity(rows);
    for (j, row) in mat.iter_mut().take(d).enumerate() {
        for (i, gen) in gens.iter().enumerate() {
            row[i] = Q::from_integer(gen[j].into());
        }
        row[k + j] = Q::one();
        rhs.push(Q::from_integer(a[j].into()));
    }
    for cell in mat[d].iter_mut().take(k) {
        *cell = Q::one();
    }
    rhs.push(Q::from_integer(n.into()));
    phase_one_feasible(mat, rhs)
}

/// Phase-1 simplex: minimize the sum of one artificial variable per row;
/// feasible iff the optimum is zero. RHS must be nonnegative (it is here).
fn phase_one_feasible(mat: Vec<Vec<Q>>, rhs: Vec<Q>) -> bool {
    let rows = mat.len();
    let cols = mat[0].len();
    let total = cols + rows; // artificials appended
    // tableau rows: [A | I | b]; objective minimizes Σ artificials
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(rows);
    for (r, row) in mat.into_iter().enumerate() {
        let mut v = row;
        v.extend((0..rows).map(|i| if i == r { Q::one() } else { Q::zero() }));
        v.push(rhs[r].clone());
        t.push(v);
    }
    let mut basis: Vec<usize> = (cols..total).collect();
    // objective row: cost 1 on artificials, reduced by current basis rows
    let mut obj: Vec<Q> = vec![Q::zero(); total + 1];
    for slot in obj.iter_mut().take(total).skip(cols) {
        *slot = Q::one();
    }
    for row in &t {
        for c in 0..=total {
            let delta = &row[c];
            obj[c] -= delta;
        }
    }
    loop {
        // Bland: entering = smallest index with negative reduced cost
        let enter = (0..total).find(|&c| obj[c].is_negative());
        let enter = match enter {
            Some(c) => c,
            None => break,
        };
        // ratio test, Bland tie-break by smallest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][total] / &t[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let leave = match leave {
            Some(r) => r,
            None => return false, // unbounded phase-1 cannot happen; treat as infeasible
        };
        // pivot
        let piv = t[leave][enter].clone();
        for cell in t[leave].iter_mut() {
            *cell /= &piv;
        }
        for r in 0..rows {
            if r != leave && !t[r][enter].is_zero() {
                let f = t[r][enter].clone();
                let pivot_row = t[leave].clone();
                for (cell, pv) in t[r].iter_mut().zip(&pivot_row) {
                    *cell -= pv * &f;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (cell, pv) in obj.iter_mut().zip(&t[leave]) {
                *cell -= pv * &f;
            }
        }
        basis[leave] = enter;
    }
    // optimum of phase 1 is -obj[last]
    obj[total].is_zero()
}
