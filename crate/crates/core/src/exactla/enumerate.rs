//! Exhaustive enumeration of subspaces over a prime field.
//!
//! Every subspace of `GF(p)^n` has a unique RREF basis, so subspaces are in
//! bijection with (pivot set, free entries) pairs. The number of subspaces of
//! dimension `d` is the Gaussian binomial `[n choose d]_p`.

use super::field::FieldSpec;
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Rough subspace counts for the default cap, for documentation and the CLI.
///
/// | field | n | subspaces |
/// |-------|---|-----------|
/// | GF(2) | 4 | 67        |
/// | GF(2) | 6 | 2825      |
/// | GF(3) | 4 | 212       |
/// | GF(3) | 6 | 56632     |
/// | GF(5) | 4 | 1312      |
pub const DEFAULT_CAP: usize = 6;

fn require_finite(field: FieldSpec) -> Result<u64> {
    field.order().ok_or_else(|| {
        Error::EnumerationUnsupported(
            "subspaces of a vector space over Q cannot be enumerated; use the \
             formula-based operations (psi_regular, coinvariants_q) instead"
                .into(),
        )
    })
}

/// All subspaces of `GF(p)^n` of dimension `d`, sorted canonically.
pub fn subspaces_of_dim(field: FieldSpec, n: usize, d: usize) -> Result<Vec<Subspace>> {
    let p = require_finite(field)?;
    if d > n {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: (row r, column c) with c > pivot_r and c not a pivot
        let mut free = Vec::new();
        for (r, &pr) in pivots.iter().enumerate() {
            for c in pr + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut m = Matrix::zeros(field, d, n);
            for (r, &pr) in pivots.iter().enumerate() {
                *m.at_mut(r, pr) = field.one();
            }
            for (&(r, c), &v) in free.iter().zip(&digits) {
                *m.at_mut(r, c) = field.elem_index(v);
            }
            out.push(Subspace::from_canonical(m, pivots.clone()));
            if !increment(&mut digits, p) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All subspaces of `GF(p)^n`, ordered by dimension and then by RREF entries.
pub fn all_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for d in 0..=n {
        out.extend(subspaces_of_dim(field, n, d)?);
    }
    Ok(out)
}

/// All subspaces `W` with `base ⊆ W ⊆ k^n`, in canonical order.
///
/// Enumerates subspaces of the quotient `k^n / base` and lifts them through
/// the coordinate section.
pub fn subspaces_containing(base: &Subspace) -> Result<Vec<Subspace>> {
    let field = base.field();
    let q = base.quotient_data();
    let quotient_dim = q.section.cols();
    let mut out: Vec<Subspace> = all_subspaces(field, quotient_dim)?
        .into_iter()
        .map(|w| {
            let lifted = w.image_under(&q.section);
            base.sum(&lifted).expect("same ambient space")
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Number of subspaces of `GF(q)^n`, summed over all dimensions.
pub fn subspace_count(q: u64, n: usize) -> u128 {
    (0..=n).map(|d| gaussian_binomial(q, n, d)).sum()
}

/// `[n choose d]_q`.
pub fn gaussian_binomial(q: u64, n: usize, d: usize) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

fn increment(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
pub(crate) fn all_vectors(field: FieldSpec, n: usize) -> Result<Vec<Vec<super::field::Elem>>> {
    let p = require_finite(field)?;
    let mut digits = vec![0u64; n];
    let mut out = Vec::new();
    loop {
        out.push(digits.iter().map(|&v| field.elem_index(v)).collect());
        if !increment(&mut digits, p) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const GF2: FieldSpec = FieldSpec::Prime(2);
    const GF3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn counts_match_gaussian_binomials() {
        for (field, q, n) in [(GF2, 2, 4), (GF3, 3, 3), (GF3, 3, 4), (GF2, 2, 5)] {
            for d in 0..=n {
                let subs = subspaces_of_dim(field, n, d).unwrap();
                assert_eq!(subs.len() as u128, gaussian_binomial(q, n, d), "n={n} d={d}");
            }
            assert_eq!(all_subspaces(field, n).unwrap().len() as u128, subspace_count(q, n));
        }
        assert_eq!(subspace_count(3, 4), 212);
        assert_eq!(subspace_count(2, 6), 2825);
        assert_eq!(subspace_count(3, 2), 6);
    }

    /// Brute force: spans of all pairs of vectors in GF(3)^3 give every
    /// subspace of dimension ≤ 2.
    #[test]
    fn enumeration_agrees_with_brute_force_spans() {
        let vs = all_vectors(GF3, 3).unwrap();
        let mut seen = HashSet::new();
        for a in &vs {
            for b in &vs {
                seen.insert(Subspace::from_elem_vectors(GF3, 3, vec![a.clone(), b.clone()]));
            }
        }
        let enumerated: HashSet<Subspace> = all_subspaces(GF3, 3)
            .unwrap()
            .into_iter()
            .filter(|s| s.dim() <= 2)
            .collect();
        assert_eq!(seen, enumerated);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let subs = all_subspaces(GF3, 3).unwrap();
        for w in subs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn containing_base() {
        let base = Subspace::span_i64(GF3, 3, &[[1, 0, 0]]);
        let subs = subspaces_containing(&base).unwrap();
        assert_eq!(subs.len() as u128, subspace_count(3, 2));
        assert!(subs.iter().all(|s| base.is_subset_of(s)));
    }

    #[test]
    fn rationals_are_refused() {
        assert!(matches!(
            all_subspaces(FieldSpec::Rational, 2),
            Err(Error::EnumerationUnsupported(_))
        ));
    }
}
