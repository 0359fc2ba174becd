//! Exact rank of sparse integer matrices (rank over the rationals).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, i64)>;

trait Entry: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

fn reduce<T: Entry>(row: &mut [(usize, T)]) {
    let mut g: Option<T> = None;
    for (_, v) in row.iter() {
        g = Some(match g {
            None => v.clone(),
            Some(g) => g.gcd(v),
        });
        if g.as_ref().is_some_and(|g| g.is_unit()) {
            return;
        }
    }
    if let Some(g) = g {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// `a*r - b*p` on sparse rows.
fn combine<T: Entry>(
    a: &T,
    r: &[(usize, T)],
    b: &T,
    p: &[(usize, T)],
    zero: &T,
) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (c, x, y) = if j == p.len() || (i < r.len() && r[i].0 < p[j].0) {
            i += 1;
            (r[i - 1].0, &r[i - 1].1, zero)
        } else if i == r.len() || p[j].0 < r[i].0 {
            j += 1;
            (p[j - 1].0, zero, &p[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, &r[i - 1].1, &p[j - 1].1)
        };
        let v = T::comb(a, x, b, y)?;
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn rank_generic<T: Entry>(rows: Vec<Vec<(usize, T)>>, zero: T) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut r in rows {
        reduce(&mut r);
        while let Some((c, lead)) = r.first().cloned() {
            match pivots.get(&c) {
                Some(p) => {
                    let a = p[0].1.clone();
                    r = combine(&a, &r, &lead, p, &zero)?;
                    reduce(&mut r);
                }
                None => {
                    pivots.insert(c, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals. Runs on `i64` and falls back to big integers on overflow.
pub fn rank(rows: &[SparseRow]) -> usize {
    let small: Vec<Vec<(usize, i64)>> = rows
        .iter()
        .map(|r| r.iter().filter(|(_, v)| *v != 0).cloned().collect())
        .collect();
    if let Some(r) = rank_generic(small, 0i64) {
        return r;
    }
    let big: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter(|(_, v)| *v != 0)
                .map(|(c, v)| (*c, BigInt::from(*v)))
                .collect()
        })
        .collect();
    rank_generic(big, BigInt::zero()).expect("big integers do not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]]), 1);
        assert_eq!(rank(&[vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]]), 2);
        assert_eq!(rank(&[vec![(0, 0)]]), 0);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 2;
        let rows = vec![
            vec![(0, big), (1, 3)],
            vec![(0, 3), (1, big)],
            vec![(0, big - 1), (1, big - 7)],
        ];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn boundary_of_triangle() {
        // Edges 01, 02, 12 onto vertices 0, 1, 2.
        let rows = vec![
            vec![(0, -1), (1, -1)],
            vec![(0, 1), (2, -1)],
            vec![(1, 1), (2, 1)],
        ];
        assert_eq!(rank(&rows), 2);
    }
}
