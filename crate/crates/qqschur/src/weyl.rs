//! The Weyl group of type B as signed permutations.
//!
//! Elements are windows `w(1),...,w(r)` of nonzero integers whose absolute
//! values permute `1..r`, extended to negatives by `w(-i) = -w(i)`.
//! Composition applies the left factor first, matching the right action on
//! points, roots and tableaux used throughout.
//!
//! [`WeylGroup`] enumerates the whole group once per rank (at most 3840
//! elements at the default cap) and precomputes lengths, inverses,
//! multiplication by generators and canonical reduced words.  Everything
//! above works with element indices into this table.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

/// Element of the hyperoctahedral group, stored as its window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(r: usize) -> Self {
        SignedPerm {
            window: (1..=r as i32).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self, crate::Error> {
        let r = window.len();
        let mut seen = vec![false; r];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a == 0 || a > r || seen[a - 1] {
                return Err(crate::Error::IndexOutOfRange(format!(
                    "window {:?} is not a signed permutation",
                    window
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn r(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of the point `i` (sign-equivariant: `w(-i) = -w(i)`).
    pub fn apply(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.window.len());
        let v = self.window[(i.unsigned_abs() - 1) as usize];
        if i > 0 {
            v
        } else {
            -v
        }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.r(), other.r());
        SignedPerm {
            window: self.window.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut window = vec![0; self.r()];
        for (i, &v) in self.window.iter().enumerate() {
            let a = (v.unsigned_abs() - 1) as usize;
            window[a] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPerm { window }
    }

    /// The generator `s_i`: `s_0 = (1,-1)`, `s_i = (i,i+1)(-i,-i-1)`.
    pub fn gen(r: usize, i: usize) -> SignedPerm {
        assert!(i < r);
        let mut w = SignedPerm::identity(r);
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 1, i);
        }
        w
    }

    /// `s_{i,j}`, the cycle moving `i` to `j` through the interval.
    pub fn s_ij(r: usize, i: usize, j: usize) -> Result<SignedPerm, crate::Error> {
        if i < 1 || j < 1 || i > r || j > r {
            return Err(crate::Error::IndexOutOfRange(format!(
                "s_{{{},{}}} with r = {}",
                i, j, r
            )));
        }
        let mut w = SignedPerm::identity(r);
        if i <= j {
            for k in i..j {
                w = w.compose(&SignedPerm::gen(r, k));
            }
        } else {
            for k in (j..i).rev() {
                w = w.compose(&SignedPerm::gen(r, k));
            }
        }
        Ok(w)
    }

    /// `w_{a,r-a} = (s_{1,r})^a`.
    pub fn w_a(r: usize, a: usize) -> Result<SignedPerm, crate::Error> {
        if a > r {
            return Err(crate::Error::IndexOutOfRange(format!(
                "w_{{{},{}}}",
                a,
                r as i64 - a as i64
            )));
        }
        let c = if r == 0 {
            SignedPerm::identity(0)
        } else {
            SignedPerm::s_ij(r, 1, r)?
        };
        let mut w = SignedPerm::identity(r);
        for _ in 0..a {
            w = w.compose(&c);
        }
        Ok(w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let r = self.r();
        let mut len = 0;
        for i in 1..=r {
            if self.window[i - 1] < 0 {
                len += 1;
            }
            for j in (i + 1)..=r {
                let (wi, wj) = (self.window[i - 1], self.window[j - 1]);
                // e_i + e_j: negative iff the larger image index carries -1
                let neg_sum = if wi.abs() > wj.abs() { wi < 0 } else { wj < 0 };
                if neg_sum {
                    len += 1;
                }
                // e_j - e_i
                let neg_diff = if wj.abs() > wi.abs() { wj < 0 } else { wi > 0 };
                if neg_diff {
                    len += 1;
                }
            }
        }
        len
    }

    /// Number of window entries that are negative; the count of `s_0`
    /// letters in any reduced expression.
    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Exponents `(a, b)` with `q^a Q^b` the monomial attached to this
    /// element: `b` counts sign changes, `a` the remaining length.
    pub fn qlt_exponents(&self) -> (i32, i32) {
        let b = self.neg_count();
        let a = self.length() - b;
        (a as i32, b as i32)
    }

    /// True when the element lies in the symmetric-group part.
    pub fn is_positive(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

/// A root as its coordinate vector in the `e_i` basis.
pub fn simple_root(r: usize, j: usize) -> Vec<i32> {
    assert!(j < r);
    let mut v = vec![0; r];
    if j == 0 {
        v[0] = 1;
    } else {
        v[j] = 1;
        v[j - 1] = -1;
    }
    v
}

pub fn root_apply(w: &SignedPerm, root: &[i32]) -> Vec<i32> {
    let mut out = vec![0; root.len()];
    for (i, &c) in root.iter().enumerate() {
        if c != 0 {
            let img = w.window()[i];
            let a = (img.unsigned_abs() - 1) as usize;
            out[a] += if img > 0 { c } else { -c };
        }
    }
    out
}

/// Positive iff the nonzero coordinate of largest index is `+1`.
pub fn root_is_positive(root: &[i32]) -> bool {
    for &c in root.iter().rev() {
        if c != 0 {
            return c > 0;
        }
    }
    false
}

/// `Some(m)` iff the vector is the simple root `alpha_m`.
pub fn root_as_simple(root: &[i32]) -> Option<usize> {
    let nz: Vec<(usize, i32)> = root
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    match nz.as_slice() {
        [(0, 1)] => Some(0),
        [(a, -1), (b, 1)] if *b == *a + 1 => Some(*b),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// subsets of the simple roots
// ---------------------------------------------------------------------------

/// Subset of the simple roots `alpha_0, ..., alpha_{r-1}` as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    r: usize,
    bits: u32,
}

impl SimpleSubset {
    pub fn empty(r: usize) -> Self {
        assert!(r <= 31);
        SimpleSubset { r, bits: 0 }
    }

    /// All of `Delta_0`.
    pub fn full(r: usize) -> Self {
        assert!(r <= 31);
        SimpleSubset {
            r,
            bits: if r == 0 { 0 } else { (1u32 << r) - 1 },
        }
    }

    /// `Delta = Delta_0 \ {alpha_0}`.
    pub fn delta(r: usize) -> Self {
        let mut s = SimpleSubset::full(r);
        s.bits &= !1;
        s
    }

    pub fn from_indices(r: usize, idx: &[usize]) -> Self {
        let mut s = SimpleSubset::empty(r);
        for &i in idx {
            assert!(i < r);
            s.bits |= 1 << i;
        }
        s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.r && self.bits & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.r);
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.bits &= !(1 << i);
    }

    pub fn intersect(&self, other: &SimpleSubset) -> SimpleSubset {
        assert_eq!(self.r, other.r);
        SimpleSubset {
            r: self.r,
            bits: self.bits & other.bits,
        }
    }

    pub fn union(&self, other: &SimpleSubset) -> SimpleSubset {
        assert_eq!(self.r, other.r);
        SimpleSubset {
            r: self.r,
            bits: self.bits | other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &SimpleSubset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.r).filter(|&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// `{ m : alpha_k w = alpha_m for some k in K }`, i.e. `Kw ∩ Delta_0`.
pub fn transport(k: &SimpleSubset, w: &SignedPerm) -> SimpleSubset {
    let mut out = SimpleSubset::empty(k.r());
    for j in k.iter() {
        let img = root_apply(w, &simple_root(k.r(), j));
        if let Some(m) = root_as_simple(&img) {
            out.insert(m);
        }
    }
    out
}

/// Whether `alpha_0 ∈ Jw`.
pub fn alpha0_in_transport(j: &SimpleSubset, w: &SignedPerm) -> bool {
    transport(j, w).contains(0)
}

// ---------------------------------------------------------------------------
// the enumerated group
// ---------------------------------------------------------------------------

pub type ElemIdx = u32;

/// The whole group `W_r` with lookup tables.
pub struct WeylGroup {
    r: usize,
    elements: Vec<SignedPerm>,
    index: HashMap<Vec<i32>, ElemIdx>,
    lengths: Vec<u32>,
    inverses: Vec<ElemIdx>,
    /// `right[e][i] = e * s_i`
    right: Vec<Vec<ElemIdx>>,
    /// `left[e][i] = s_i * e`
    left: Vec<Vec<ElemIdx>>,
    /// canonical reduced word, produced by stripping the smallest right
    /// descent repeatedly
    words: Vec<Vec<u8>>,
    negs: Vec<u8>,
}

impl WeylGroup {
    pub fn new(r: usize) -> Self {
        assert!(r <= 8, "rank {} would enumerate 2^{}*{}! elements", r, r, r);
        let mut elements = Vec::new();
        let mut perm: Vec<i32> = (1..=r as i32).collect();
        permute_signed(&mut perm, 0, &mut elements);
        elements.sort_by_key(|w| (w.length(), w.window().to_vec()));
        let index: HashMap<Vec<i32>, ElemIdx> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.window().to_vec(), i as ElemIdx))
            .collect();
        let n = elements.len();
        let lengths: Vec<u32> = elements.iter().map(|w| w.length() as u32).collect();
        let negs: Vec<u8> = elements.iter().map(|w| w.neg_count() as u8).collect();
        let inverses: Vec<ElemIdx> = elements
            .iter()
            .map(|w| index[w.inverse().window()])
            .collect();
        let mut right = vec![vec![0; r]; n];
        let mut left = vec![vec![0; r]; n];
        for (e, w) in elements.iter().enumerate() {
            for i in 0..r {
                let s = SignedPerm::gen(r, i);
                right[e][i] = index[w.compose(&s).window()];
                left[e][i] = index[s.compose(w).window()];
            }
        }
        let mut words = vec![Vec::new(); n];
        #[allow(clippy::needless_range_loop)]
        for e in 0..n {
            let mut cur = e as ElemIdx;
            let mut letters = Vec::new();
            while lengths[cur as usize] > 0 {
                let i = (0..r)
                    .find(|&i| lengths[right[cur as usize][i] as usize] < lengths[cur as usize])
                    .expect("nontrivial element must have a right descent");
                letters.push(i as u8);
                cur = right[cur as usize][i];
            }
            letters.reverse();
            words[e] = letters;
        }
        WeylGroup {
            r,
            elements,
            index,
            lengths,
            inverses,
            right,
            left,
            words,
            negs,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn id(&self) -> ElemIdx {
        0
    }

    pub fn perm(&self, e: ElemIdx) -> &SignedPerm {
        &self.elements[e as usize]
    }

    pub fn idx(&self, w: &SignedPerm) -> ElemIdx {
        self.index[w.window()]
    }

    pub fn len(&self, e: ElemIdx) -> usize {
        self.lengths[e as usize] as usize
    }

    pub fn inv(&self, e: ElemIdx) -> ElemIdx {
        self.inverses[e as usize]
    }

    pub fn right_mul(&self, e: ElemIdx, i: usize) -> ElemIdx {
        self.right[e as usize][i]
    }

    pub fn left_mul(&self, e: ElemIdx, i: usize) -> ElemIdx {
        self.left[e as usize][i]
    }

    pub fn word(&self, e: ElemIdx) -> &[u8] {
        &self.words[e as usize]
    }

    pub fn mul(&self, a: ElemIdx, b: ElemIdx) -> ElemIdx {
        let mut acc = a;
        for &i in self.word(b) {
            acc = self.right_mul(acc, i as usize);
        }
        acc
    }

    /// `(a, b)` exponents of the monomial `q^a Q^b` attached to `e`.
    pub fn qlt_exp(&self, e: ElemIdx) -> (i32, i32) {
        let b = self.negs[e as usize] as i32;
        (self.lengths[e as usize] as i32 - b, b)
    }

    pub fn all(&self) -> impl Iterator<Item = ElemIdx> {
        0..self.order() as ElemIdx
    }

    /// Right descent: `l(e s_i) < l(e)`.
    pub fn right_descent(&self, e: ElemIdx, i: usize) -> bool {
        self.lengths[self.right[e as usize][i] as usize] < self.lengths[e as usize]
    }

    pub fn left_descent(&self, e: ElemIdx, i: usize) -> bool {
        self.lengths[self.left[e as usize][i] as usize] < self.lengths[e as usize]
    }

    /// Membership in the parabolic subgroup `W_K`: every reduced expression
    /// of an element of `W_K` uses letters from `K` only.
    pub fn in_parabolic(&self, e: ElemIdx, k: &SimpleSubset) -> bool {
        self.word(e).iter().all(|&i| k.contains(i as usize))
    }

    /// Elements of `W_K`, in table order.
    pub fn parabolic(&self, k: &SimpleSubset) -> Vec<ElemIdx> {
        self.all().filter(|&e| self.in_parabolic(e, k)).collect()
    }

    /// `e ∈ D_K`: minimal in its coset `W_K e`, i.e. maps `K` to positive
    /// roots.
    pub fn is_dist(&self, e: ElemIdx, k: &SimpleSubset) -> bool {
        k.iter().all(|i| !self.left_descent(e, i))
    }

    /// `e ∈ D_K ∩ D_L^{-1}`.
    pub fn is_dist_double(&self, e: ElemIdx, k: &SimpleSubset, l: &SimpleSubset) -> bool {
        self.is_dist(e, k) && l.iter().all(|i| !self.right_descent(e, i))
    }

    /// `D^M_{K,L} = D_K ∩ D_L^{-1} ∩ W_M`.
    pub fn dist_double_in(
        &self,
        k: &SimpleSubset,
        l: &SimpleSubset,
        m: &SimpleSubset,
    ) -> Vec<ElemIdx> {
        self.all()
            .filter(|&e| self.in_parabolic(e, m) && self.is_dist_double(e, k, l))
            .collect()
    }

    pub fn dist_double(&self, k: &SimpleSubset, l: &SimpleSubset) -> Vec<ElemIdx> {
        self.dist_double_in(k, l, &SimpleSubset::full(self.r))
    }

    /// `D^M_K = D_K ∩ W_M`.
    pub fn dist_in(&self, k: &SimpleSubset, m: &SimpleSubset) -> Vec<ElemIdx> {
        self.all()
            .filter(|&e| self.in_parabolic(e, m) && self.is_dist(e, k))
            .collect()
    }

    pub fn dist(&self, k: &SimpleSubset) -> Vec<ElemIdx> {
        self.dist_in(k, &SimpleSubset::full(self.r))
    }

    /// The set `W_K c W_L` as element indices (sorted, deduplicated).
    pub fn double_coset(&self, k: &SimpleSubset, c: ElemIdx, l: &SimpleSubset) -> Vec<ElemIdx> {
        let wk = self.parabolic(k);
        let wl = self.parabolic(l);
        let mut out: Vec<ElemIdx> = Vec::with_capacity(wk.len() * wl.len());
        for &x in &wk {
            let xc = self.mul(x, c);
            for &y in &wl {
                out.push(self.mul(xc, y));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The minimal-length representative of `W_K w W_L`, found by peeling
    /// descents from either side.
    pub fn min_double_rep(&self, k: &SimpleSubset, w: ElemIdx, l: &SimpleSubset) -> ElemIdx {
        let mut cur = w;
        loop {
            if let Some(i) = k.iter().find(|&i| self.left_descent(cur, i)) {
                cur = self.left_mul(cur, i);
                continue;
            }
            if let Some(i) = l.iter().find(|&i| self.right_descent(cur, i)) {
                cur = self.right_mul(cur, i);
                continue;
            }
            return cur;
        }
    }

    /// The unique factorization `w = x d y` over a double coset: `d` the
    /// minimal representative, lengths additive, `y` in `W_L` and `x` the
    /// distinguished prefix.
    pub fn double_coset_split(
        &self,
        k: &SimpleSubset,
        w: ElemIdx,
        l: &SimpleSubset,
    ) -> (ElemIdx, ElemIdx, ElemIdx) {
        let d = self.min_double_rep(k, w, l);
        let mut y_word = Vec::new();
        let mut p = w;
        while let Some(i) = l.iter().find(|&i| self.right_descent(p, i)) {
            p = self.right_mul(p, i);
            y_word.push(i);
        }
        let mut y = self.id();
        for &i in y_word.iter().rev() {
            y = self.right_mul(y, i);
        }
        let x = self.mul(p, self.inv(d));
        debug_assert!(self.in_parabolic(x, k));
        debug_assert_eq!(self.mul(self.mul(x, d), y), w);
        debug_assert_eq!(self.len(x) + self.len(d) + self.len(y), self.len(w));
        (x, d, y)
    }

    /// `transport` on element indices.
    pub fn transport_idx(&self, k: &SimpleSubset, e: ElemIdx) -> SimpleSubset {
        transport(k, self.perm(e))
    }
}

fn permute_signed(perm: &mut Vec<i32>, at: usize, out: &mut Vec<SignedPerm>) {
    let r = perm.len();
    if at == r {
        // every sign pattern on the current arrangement
        for mask in 0..(1u32 << r) {
            let window: Vec<i32> = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                .collect();
            out.push(SignedPerm { window });
        }
        return;
    }
    for i in at..r {
        perm.swap(at, i);
        permute_signed(perm, at + 1, out);
        perm.swap(at, i);
    }
}

// ---------------------------------------------------------------------------
// admissible triples
// ---------------------------------------------------------------------------

/// The subset data attached to a pair of bicompositions: `J` and `I` encode
/// the row stabilizers, `A ⊂ Ã` and `B ⊂ B̃` the ambient parabolics on the
/// source and target sides.
#[derive(Clone, Debug)]
pub struct Situation {
    pub a: usize,
    pub b: usize,
    pub j: SimpleSubset,
    pub i: SimpleSubset,
    pub a_tilde: SimpleSubset,
    pub b_tilde: SimpleSubset,
    pub a_set: SimpleSubset,
    pub b_set: SimpleSubset,
}

impl Situation {
    pub fn new(r: usize, a: usize, j: SimpleSubset, b: usize, i: SimpleSubset) -> Self {
        let mut a_tilde = SimpleSubset::full(r);
        if a != r {
            a_tilde.remove(a);
        }
        let mut b_tilde = SimpleSubset::full(r);
        if b != r {
            b_tilde.remove(b);
        }
        let mut a_set = a_tilde;
        a_set.remove(0);
        let mut b_set = b_tilde;
        b_set.remove(0);
        Situation {
            a,
            b,
            j,
            i,
            a_tilde,
            b_tilde,
            a_set,
            b_set,
        }
    }
}

/// A triple of distinguished representatives indexing one standard basis
/// element of the homomorphism space for a fixed pair of shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleTriple {
    pub d: ElemIdx,
    pub v: ElemIdx,
    pub u: ElemIdx,
    /// `c = u d v^{-1}`
    pub c: ElemIdx,
    /// whether `c` lies in the symmetric-group part, i.e. in `D^Delta_{I,J}`
    pub in_delta: bool,
}

/// Enumerate all admissible triples for the situation, in deterministic
/// order (outer `d`, then `v`, then `u`, each in table order).
pub fn admissible_triples(g: &WeylGroup, sit: &Situation) -> Vec<AdmissibleTriple> {
    let mut out = Vec::new();
    for d in g.dist_double(&sit.b_tilde, &sit.a_tilde) {
        let bd_a = g.transport_idx(&sit.b_set, d).intersect(&sit.a_set);
        for v in g.dist_double_in(&sit.j, &bd_a, &sit.a_set) {
            let vdinv = g.mul(v, g.inv(d));
            let b_jvd = g.transport_idx(&sit.j, vdinv).intersect(&sit.b_set);
            for u in g.dist_double_in(&sit.i, &b_jvd, &sit.b_set) {
                let c = g.mul(g.mul(u, d), g.inv(v));
                debug_assert!(g.is_dist_double(c, &sit.i, &sit.j));
                let in_delta = g.perm(c).is_positive();
                out.push(AdmissibleTriple {
                    d,
                    v,
                    u,
                    c,
                    in_delta,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(SignedPerm::identity(3).length(), 0);
        // s_0 = (1,-1)
        assert_eq!(SignedPerm::gen(2, 0).length(), 1);
        // l(w_{a,r-a}) = a(r-a)
        for r in 1..=4 {
            for a in 0..=r {
                assert_eq!(SignedPerm::w_a(r, a).unwrap().length(), a * (r - a));
            }
        }
        // l(s_{i,j}) = |j - i|
        assert_eq!(SignedPerm::s_ij(4, 2, 4).unwrap().length(), 2);
        assert_eq!(SignedPerm::s_ij(4, 4, 2).unwrap().length(), 2);
    }

    #[test]
    fn s_1r_cycle() {
        // s_{1,r} sends r -> r-1 -> ... -> 1 -> r on the positive points
        let w = SignedPerm::s_ij(3, 1, 3).unwrap();
        assert_eq!(w.apply(3), 2);
        assert_eq!(w.apply(2), 1);
        assert_eq!(w.apply(1), 3);
        assert_eq!(w.apply(-3), -2);
    }

    #[test]
    fn compose_inverse() {
        let g = WeylGroup::new(3);
        for e in g.all() {
            let w = g.perm(e);
            assert_eq!(w.compose(&w.inverse()), SignedPerm::identity(3));
            assert_eq!(g.mul(e, g.inv(e)), g.id());
            // reduced word reassembles the element
            let mut acc = g.id();
            for &i in g.word(e) {
                acc = g.right_mul(acc, i as usize);
            }
            assert_eq!(acc, e);
            assert_eq!(g.word(e).len(), g.len(e));
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(WeylGroup::new(0).order(), 1);
        assert_eq!(WeylGroup::new(1).order(), 2);
        assert_eq!(WeylGroup::new(2).order(), 8);
        assert_eq!(WeylGroup::new(3).order(), 48);
    }

    #[test]
    fn s0_count_matches_reduced_word() {
        let g = WeylGroup::new(3);
        for e in g.all() {
            let zeros = g.word(e).iter().filter(|&&i| i == 0).count();
            assert_eq!(zeros, g.perm(e).neg_count());
        }
    }

    #[test]
    fn length_subadditive_and_generator_steps() {
        let g = WeylGroup::new(3);
        for a in g.all() {
            for i in 0..3 {
                let b = g.right_mul(a, i);
                let diff = g.len(b) as i64 - g.len(a) as i64;
                assert!(diff == 1 || diff == -1);
            }
            for b in g.all() {
                assert!(g.len(g.mul(a, b)) <= g.len(a) + g.len(b));
            }
        }
    }

    #[test]
    fn distinguished_reps_small() {
        let g = WeylGroup::new(2);
        // K = L = {alpha_0}: double coset reps are e, s_1, s_1 s_0 s_1
        let k = SimpleSubset::from_indices(2, &[0]);
        let reps = g.dist_double(&k, &k);
        let expect: Vec<ElemIdx> = vec![
            g.id(),
            g.idx(&SignedPerm::gen(2, 1)),
            g.idx(
                &SignedPerm::gen(2, 1)
                    .compose(&SignedPerm::gen(2, 0))
                    .compose(&SignedPerm::gen(2, 1)),
            ),
        ];
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(reps, expect);
        // full subsets leave only the identity
        let full = SimpleSubset::full(2);
        assert_eq!(g.dist_double(&full, &full), vec![g.id()]);
        // empty J: every element is distinguished
        assert_eq!(g.dist(&SimpleSubset::empty(2)).len(), 8);
    }

    #[test]
    fn double_coset_split_roundtrip() {
        let g = WeylGroup::new(3);
        let k = SimpleSubset::from_indices(3, &[0, 1]);
        let l = SimpleSubset::from_indices(3, &[2]);
        for w in g.all() {
            let (x, d, y) = g.double_coset_split(&k, w, &l);
            assert!(g.in_parabolic(x, &k));
            assert!(g.in_parabolic(y, &l));
            assert!(g.is_dist_double(d, &k, &l));
            assert_eq!(g.mul(g.mul(x, d), y), w);
            assert_eq!(g.len(x) + g.len(d) + g.len(y), g.len(w));
        }
    }

    #[test]
    fn double_coset_partition() {
        let g = WeylGroup::new(3);
        let k = SimpleSubset::from_indices(3, &[0, 2]);
        let l = SimpleSubset::from_indices(3, &[1]);
        let reps = g.dist_double(&k, &l);
        let mut seen = vec![false; g.order()];
        for &d in &reps {
            let coset = g.double_coset(&k, d, &l);
            // rep is the unique minimal element
            let min_len = coset.iter().map(|&e| g.len(e)).min().unwrap();
            let mins: Vec<_> = coset.iter().filter(|&&e| g.len(e) == min_len).collect();
            assert_eq!(mins.len(), 1);
            assert_eq!(*mins[0], d);
            for e in coset {
                assert!(!seen[e as usize]);
                seen[e as usize] = true;
                assert_eq!(g.min_double_rep(&k, e, &l), d);
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn transport_matches_conjugation() {
        // Kd ∩ Delta_0 via roots agrees with conjugating reflections
        let g = WeylGroup::new(3);
        let k = SimpleSubset::from_indices(3, &[0, 1]);
        for d in g.dist(&k) {
            let t = g.transport_idx(&k, d);
            for m in t.iter() {
                // alpha_k d = alpha_m means d^{-1} s_k d = s_m
                let dp = g.perm(d).clone();
                let found = k.iter().any(|kk| {
                    let s_k = SignedPerm::gen(3, kk);
                    let conj = dp.inverse().compose(&s_k).compose(&dp);
                    conj == SignedPerm::gen(3, m)
                });
                assert!(found);
            }
        }
    }

    #[test]
    fn alpha0_transport_examples() {
        let g2 = WeylGroup::new(2);
        let j_full = SimpleSubset::from_indices(2, &[0]);
        assert!(alpha0_in_transport(&j_full, g2.perm(g2.id())));
        // w = s_0, J = {alpha_0}: alpha_0 s_0 = -alpha_0, not in Delta_0
        let s0 = SignedPerm::gen(2, 0);
        assert!(!alpha0_in_transport(&j_full, &s0));
        // J empty: never
        let j_empty = SimpleSubset::empty(2);
        for e in g2.all() {
            assert!(!alpha0_in_transport(&j_empty, g2.perm(e)));
        }
    }
}
