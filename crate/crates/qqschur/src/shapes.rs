//! Bicompositions and bipartitions.
//!
//! A bicomposition of `r` is a pair of compositions with non-negative parts
//! (zero parts allowed); the first component sums to `a`, the second to
//! `r - a`.  The family `Lambda(n, r)` collects those whose total number of
//! parts is `n`.

use serde::Serialize;

use crate::weyl::{SimpleSubset, Situation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bicomposition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Bicomposition {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Self {
        Bicomposition { first, second }
    }

    /// Sum of the first component.
    pub fn a(&self) -> usize {
        self.first.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.a() + self.second.iter().sum::<usize>()
    }

    /// Total number of parts, counting zero parts.
    pub fn n(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_bipartition(&self) -> bool {
        let dec = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        dec(&self.first) && dec(&self.second)
    }

    /// The component swap `(second, first)`.
    pub fn hat(&self) -> Bicomposition {
        Bicomposition {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// `((), (1^r))`, the shape of the regular module.
    pub fn omega(r: usize) -> Bicomposition {
        Bicomposition {
            first: Vec::new(),
            second: vec![1; r],
        }
    }

    /// Same parts per component up to reordering.
    pub fn associated(&self, other: &Bicomposition) -> bool {
        let sorted = |v: &[usize]| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s
        };
        sorted(&self.first) == sorted(&other.first)
            && sorted(&self.second) == sorted(&other.second)
    }

    /// Number of bitabloids: `2^{r-a} * r! / (prod of part factorials)`.
    pub fn bitabloid_count(&self) -> u64 {
        let r = self.r();
        let a = self.a();
        let mut num: u64 = 1;
        for k in 2..=r as u64 {
            num *= k;
        }
        for &p in self.first.iter().chain(&self.second) {
            for k in 2..=p as u64 {
                num /= k;
            }
        }
        num << (r - a)
    }

    /// The subset of `Delta` whose parabolic is the row stabilizer of the
    /// row-reading filling: `alpha_i` is in iff `i` and `i+1` sit in the
    /// same row.
    pub fn row_subset(&self) -> SimpleSubset {
        let r = self.r();
        let a = self.a();
        let mut s = SimpleSubset::empty(r);
        let mut boundaries = Vec::new();
        let mut acc = 0;
        for &p in &self.first {
            acc += p;
            boundaries.push(acc);
        }
        for &p in &self.second {
            acc += p;
            boundaries.push(acc);
        }
        debug_assert_eq!(acc, r);
        for i in 1..r {
            if i == a {
                continue;
            }
            if !boundaries.contains(&i) {
                s.insert(i);
            }
        }
        s
    }

    /// Flatten to a single composition with `2n` parts: the first component
    /// occupies slots `1..n_1`, the second slots `n+1..n+n_2`.
    pub fn tilde(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![0; 2 * n];
        for (i, &p) in self.first.iter().enumerate() {
            out[i] = p;
        }
        for (i, &p) in self.second.iter().enumerate() {
            out[n + i] = p;
        }
        out
    }

    /// Lexicographic order on bipartitions: all `a`-bipartitions precede all
    /// `b`-bipartitions when `a > b`; ties compare the components
    /// lexicographically (larger first part earlier).
    pub fn lex_precedes(&self, other: &Bicomposition) -> bool {
        use std::cmp::Ordering;
        self.lex_cmp(other) == Ordering::Less
    }

    pub fn lex_cmp(&self, other: &Bicomposition) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match other.a().cmp(&self.a()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match part_lex(&self.first, &other.first) {
            Ordering::Equal => part_lex(&self.second, &other.second),
            ord => ord,
        }
    }
}

/// Compare compositions entrywise, padding with zeros; a larger entry at the
/// first difference sorts earlier.
fn part_lex(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match y.cmp(&x) {
            std::cmp::Ordering::Equal => {}
            ord => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

impl std::fmt::Debug for Bicomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.first, self.second)
    }
}

impl std::fmt::Display for Bicomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_comp = |f: &mut std::fmt::Formatter<'_>, v: &[usize]| -> std::fmt::Result {
            write!(f, "(")?;
            for (i, p) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")
        };
        write!(f, "(")?;
        fmt_comp(f, &self.first)?;
        write!(f, ",")?;
        fmt_comp(f, &self.second)?;
        write!(f, ")")
    }
}

/// All compositions of `total` into exactly `parts` non-negative parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for head in (0..=total).rev() {
        for mut tail in compositions(total - head, parts - 1) {
            let mut c = Vec::with_capacity(parts);
            c.push(head);
            c.append(&mut tail);
            out.push(c);
        }
    }
    out
}

/// All partitions of `total` (positive weakly decreasing parts).
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(total)).rev() {
            prefix.push(p);
            rec(total - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// The set `Lambda(n, r)`, in deterministic order.
pub fn shapes(n: usize, r: usize) -> Vec<Bicomposition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for a in 0..=r {
            for c1 in compositions(a, k) {
                for c2 in compositions(r - a, n - k) {
                    out.push(Bicomposition::new(c1.clone(), c2));
                }
            }
        }
    }
    out
}

/// All bipartitions of `r` (canonical representatives, no zero parts),
/// sorted in the lexicographic order used for the decomposition matrix.
pub fn bipartitions(r: usize) -> Vec<Bicomposition> {
    let mut out = Vec::new();
    for a in (0..=r).rev() {
        for p1 in partitions(a) {
            for p2 in partitions(r - a) {
                out.push(Bicomposition::new(p1.clone(), p2));
            }
        }
    }
    out.sort_by(|x, y| x.lex_cmp(y));
    out
}

/// The subset data for a pair of shapes of the same `r`.
pub fn situation(lambda: &Bicomposition, mu: &Bicomposition) -> Situation {
    let r = lambda.r();
    assert_eq!(r, mu.r(), "shapes must have the same size");
    Situation::new(
        r,
        lambda.a(),
        lambda.row_subset(),
        mu.a(),
        mu.row_subset(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_counts() {
        // |Lambda(n,r)| = (n+1) * C(r+n-1, n-1)
        assert_eq!(shapes(2, 1).len(), 6);
        assert_eq!(shapes(2, 2).len(), 9);
        assert_eq!(shapes(3, 3).len(), 40);
        // the two one-part-per-component shapes of Lambda(2,1)
        let s = shapes(2, 1);
        assert!(s.contains(&Bicomposition::new(vec![1], vec![0])));
        assert!(s.contains(&Bicomposition::new(vec![0], vec![1])));
    }

    #[test]
    fn bipartition_basics() {
        let l = Bicomposition::new(vec![4, 3, 1], vec![3, 2]);
        assert!(l.is_bipartition());
        assert_eq!(l.r(), 13);
        assert_eq!(l.n(), 5);
        assert!(!Bicomposition::new(vec![1, 2], vec![]).is_bipartition());
    }

    #[test]
    fn lex_order() {
        // ((1),(1)) is a 1-bipartition, ((),(2)) a 0-bipartition: a > b first
        let x = Bicomposition::new(vec![1], vec![1]);
        let y = Bicomposition::new(vec![], vec![2]);
        assert!(x.lex_precedes(&y));
        // within the same a: (3) precedes (2,1)
        let p = Bicomposition::new(vec![3], vec![]);
        let q = Bicomposition::new(vec![2, 1], vec![]);
        assert!(p.lex_precedes(&q));
    }

    #[test]
    fn bipartition_enumeration() {
        assert_eq!(bipartitions(2).len(), 5);
        assert_eq!(bipartitions(3).len(), 10);
        assert_eq!(bipartitions(4).len(), 20);
        let bs = bipartitions(3);
        for w in bs.windows(2) {
            assert!(w[0].lex_precedes(&w[1]));
        }
    }

    #[test]
    fn bitabloid_counts() {
        // ((1),(1)): 2 * 2!/1 = 4
        assert_eq!(Bicomposition::new(vec![1], vec![1]).bitabloid_count(), 4);
        assert_eq!(Bicomposition::omega(2).bitabloid_count(), 8);
        assert_eq!(Bicomposition::omega(3).bitabloid_count(), 48);
    }

    #[test]
    fn row_subsets() {
        // ((2,1),(1)) with r=4: rows {1,2},{3},{4}: J = {alpha_1}
        let l = Bicomposition::new(vec![2, 1], vec![1]);
        assert_eq!(l.row_subset().indices(), vec![1]);
        // omega: no two adjacent in a row
        assert_eq!(Bicomposition::omega(3).row_subset().indices(), Vec::<usize>::new());
        // ((3),()) with r=3: J = {alpha_1, alpha_2}
        let l = Bicomposition::new(vec![3], vec![]);
        assert_eq!(l.row_subset().indices(), vec![1, 2]);
        // alpha_a is never included: ((2),(2)) r=4: rows {1,2},{3,4}: J = {1,3}
        let l = Bicomposition::new(vec![2], vec![2]);
        assert_eq!(l.row_subset().indices(), vec![1, 3]);
    }

    #[test]
    fn tilde_flattening() {
        let l = Bicomposition::new(vec![3, 2], vec![1, 1]);
        // n = 4: slots 1..2 then 5..6 of 8
        assert_eq!(l.tilde(), vec![3, 2, 0, 0, 1, 1, 0, 0]);
    }
}
