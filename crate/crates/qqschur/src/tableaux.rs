//! Bitableaux, bitabloids and typed tableaux.
//!
//! A bitableau fills the pair of diagrams of a bicomposition with one of
//! `{i, -i}` for each `i` in `1..r`.  A bitabloid is a row-equivalence
//! class, represented canonically by its unique row standard member (first
//! component positive with sorted rows, second component rows sorted with
//! signs kept).  Typed tableaux repeat entries with multiplicities taken
//! from a second shape and carry the semistandard combinatorics.

use std::collections::BTreeMap;

use crate::shapes::Bicomposition;
use crate::weyl::SignedPerm;

/// Position of a cell: component (0 or 1), row, column.
pub type Cell = (usize, usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    pub shape: Bicomposition,
    pub first: Vec<Vec<i32>>,
    pub second: Vec<Vec<i32>>,
}

impl Bitableau {
    pub fn rows(&self, comp: usize) -> &Vec<Vec<i32>> {
        if comp == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn entry(&self, cell: Cell) -> i32 {
        self.rows(cell.0)[cell.1][cell.2]
    }

    /// Cells of the diagram in row-major order, first component first.
    pub fn cells(shape: &Bicomposition) -> Vec<Cell> {
        let mut out = Vec::new();
        for (comp, parts) in [(0, &shape.first), (1, &shape.second)] {
            for (row, &len) in parts.iter().enumerate() {
                for col in 0..len {
                    out.push((comp, row, col));
                }
            }
        }
        out
    }

    /// Cells in column-major order within each component.
    fn cells_colwise(parts: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let maxw = parts.iter().copied().max().unwrap_or(0);
        for col in 0..maxw {
            for (row, &len) in parts.iter().enumerate() {
                if col < len {
                    out.push((row, col));
                }
            }
        }
        out
    }

    fn blank(shape: &Bicomposition) -> Bitableau {
        Bitableau {
            first: shape.first.iter().map(|&l| vec![0; l]).collect(),
            second: shape.second.iter().map(|&l| vec![0; l]).collect(),
            shape: shape.clone(),
        }
    }

    fn set(&mut self, cell: Cell, v: i32) {
        let rows = if cell.0 == 0 {
            &mut self.first
        } else {
            &mut self.second
        };
        rows[cell.1][cell.2] = v;
    }

    /// The row-reading filling: `1..a` by rows in the first component,
    /// `a+1..r` by rows in the second.
    pub fn t_row(shape: &Bicomposition) -> Bitableau {
        let mut t = Bitableau::blank(shape);
        for (k, cell) in Bitableau::cells(shape).into_iter().enumerate() {
            t.set(cell, k as i32 + 1);
        }
        t
    }

    /// The swapped row-reading filling: `1..r-a` by rows in the second
    /// component, the rest by rows in the first.
    pub fn t_row_hat(shape: &Bicomposition) -> Bitableau {
        let mut t = Bitableau::blank(shape);
        let a = shape.a();
        let r = shape.r();
        let mut v = (r - a) as i32;
        let mut first_cells = Vec::new();
        for cell in Bitableau::cells(shape) {
            if cell.0 == 0 {
                first_cells.push(cell);
            }
        }
        for cell in first_cells {
            v += 1;
            t.set(cell, v);
        }
        let mut v = 0;
        for cell in Bitableau::cells(shape) {
            if cell.0 == 1 {
                v += 1;
                t.set(cell, v);
            }
        }
        t
    }

    /// The column-reading filling: `1..a` down columns of the first
    /// component, `a+1..r` down columns of the second.
    pub fn t_col(shape: &Bicomposition) -> Bitableau {
        let mut t = Bitableau::blank(shape);
        let mut v = 0;
        for (row, col) in Bitableau::cells_colwise(&shape.first) {
            v += 1;
            t.set((0, row, col), v);
        }
        for (row, col) in Bitableau::cells_colwise(&shape.second) {
            v += 1;
            t.set((1, row, col), v);
        }
        t
    }

    /// The swapped column-reading filling: `1..r-a` down columns of the
    /// second component, the rest down columns of the first.
    pub fn t_col_hat(shape: &Bicomposition) -> Bitableau {
        let mut t = Bitableau::blank(shape);
        let mut v = 0;
        for (row, col) in Bitableau::cells_colwise(&shape.second) {
            v += 1;
            t.set((1, row, col), v);
        }
        for (row, col) in Bitableau::cells_colwise(&shape.first) {
            v += 1;
            t.set((0, row, col), v);
        }
        t
    }

    pub fn is_row_standard(&self) -> bool {
        let inc = |row: &[i32]| row.windows(2).all(|w| w[0] < w[1]);
        self.first.iter().all(|r| r.iter().all(|&v| v > 0) && inc(r))
            && self.second.iter().all(|r| inc(r))
    }

    pub fn is_standard(&self) -> bool {
        if !self.is_row_standard() {
            return false;
        }
        if self.second.iter().any(|r| r.iter().any(|&v| v < 0)) {
            return false;
        }
        for comp in [&self.first, &self.second] {
            for i in 1..comp.len() {
                let width = comp[i].len().min(comp[i - 1].len());
                if (0..width).any(|c| comp[i - 1][c] >= comp[i][c]) {
                    return false;
                }
            }
        }
        true
    }

    /// Entry-wise action of a signed permutation.
    pub fn apply(&self, w: &SignedPerm) -> Bitableau {
        let map = |rows: &Vec<Vec<i32>>| {
            rows.iter()
                .map(|r| r.iter().map(|&v| w.apply(v)).collect())
                .collect()
        };
        Bitableau {
            shape: self.shape.clone(),
            first: map(&self.first),
            second: map(&self.second),
        }
    }

    /// Cell holding `i` or `-i`, with the sign found there.
    pub fn find(&self, i: i32) -> (Cell, i32) {
        debug_assert!(i > 0);
        for cell in Bitableau::cells(&self.shape) {
            let v = self.entry(cell);
            if v.abs() == i {
                return (cell, v);
            }
        }
        panic!("value {} not present", i);
    }

    /// `row(i)` in the combined numbering: row `j` of the first component is
    /// `j`, row `j` of the second is `n + j` (both 1-based).
    pub fn row_of(&self, i: i32) -> usize {
        let ((comp, row, _), _) = self.find(i.abs());
        if comp == 0 {
            row + 1
        } else {
            self.shape.n() + row + 1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.first, self.second])
    }
}

impl std::fmt::Debug for Bitableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.first, self.second)
    }
}

/// The canonical row standard representative of a row-equivalence class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitabloid(Bitableau);

impl Bitabloid {
    /// Canonicalize: absolute values and sorted rows in the first
    /// component, sorted rows (signs kept) in the second.
    pub fn new(t: &Bitableau) -> Bitabloid {
        let first = t
            .first
            .iter()
            .map(|r| {
                let mut row: Vec<i32> = r.iter().map(|v| v.abs()).collect();
                row.sort_unstable();
                row
            })
            .collect();
        let second = t
            .second
            .iter()
            .map(|r| {
                let mut row = r.clone();
                row.sort_unstable();
                row
            })
            .collect();
        Bitabloid(Bitableau {
            shape: t.shape.clone(),
            first,
            second,
        })
    }

    pub fn rep(&self) -> &Bitableau {
        &self.0
    }

    pub fn shape(&self) -> &Bicomposition {
        &self.0.shape
    }

    pub fn act(&self, w: &SignedPerm) -> Bitabloid {
        Bitabloid::new(&self.0.apply(w))
    }

    /// Whether the second component contains a negative entry.
    pub fn is_minus(&self) -> bool {
        self.0.second.iter().any(|r| r.iter().any(|&v| v < 0))
    }

    /// The unique `w` with `t_row(shape) . w` in this class.
    pub fn perm_from_row_filling(&self) -> SignedPerm {
        let t0 = Bitableau::t_row(self.shape());
        let mut window = vec![0; self.shape().r()];
        for cell in Bitableau::cells(self.shape()) {
            let i = t0.entry(cell);
            window[(i - 1) as usize] = self.0.entry(cell);
        }
        SignedPerm::from_window(window).expect("bitabloid rep is a valid filling")
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0.to_json()
    }
}

impl std::fmt::Debug for Bitabloid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{:?}}}", self.0)
    }
}

/// `pi` with `t_row(shape) . pi = t_col(shape)`.
pub fn pi(shape: &Bicomposition) -> SignedPerm {
    let tr = Bitableau::t_row(shape);
    let tc = Bitableau::t_col(shape);
    let mut window = vec![0; shape.r()];
    for cell in Bitableau::cells(shape) {
        window[(tr.entry(cell) - 1) as usize] = tc.entry(cell);
    }
    SignedPerm::from_window(window).unwrap()
}

/// `pi_hat = pi(hat(shape))`: `t_row_hat . pi_hat = t_col_hat`.
pub fn pi_hat(shape: &Bicomposition) -> SignedPerm {
    let tr = Bitableau::t_row_hat(shape);
    let tc = Bitableau::t_col_hat(shape);
    let mut window = vec![0; shape.r()];
    for cell in Bitableau::cells(shape) {
        window[(tr.entry(cell) - 1) as usize] = tc.entry(cell);
    }
    SignedPerm::from_window(window).unwrap()
}

fn subsets_of_size(values: &[i32], k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if values.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if values.len() - i < k {
            break;
        }
        for mut tail in subsets_of_size(&values[i + 1..], k - 1) {
            let mut s = Vec::with_capacity(k);
            s.push(v);
            s.append(&mut tail);
            out.push(s);
        }
    }
    out
}

/// All bitabloids of the shape, sorted canonically.
pub fn bitabloids(shape: &Bicomposition) -> Vec<Bitabloid> {
    fn rec(
        shape: &Bicomposition,
        blocks: &[(usize, usize)], // (component, size)
        remaining: Vec<i32>,
        acc: &mut Vec<Vec<i32>>,
        out: &mut Vec<Bitabloid>,
    ) {
        let Some(&(comp, size)) = blocks.first() else {
            let nfirst = shape.first.len();
            let t = Bitableau {
                shape: shape.clone(),
                first: acc[..nfirst].to_vec(),
                second: acc[nfirst..].to_vec(),
            };
            debug_assert!(t.is_row_standard());
            out.push(Bitabloid(t));
            return;
        };
        for subset in subsets_of_size(&remaining, size) {
            let rest: Vec<i32> = remaining
                .iter()
                .copied()
                .filter(|v| !subset.contains(v))
                .collect();
            if comp == 0 {
                acc.push(subset.clone());
                rec(shape, &blocks[1..], rest.clone(), acc, out);
                acc.pop();
            } else {
                // each element independently signed, rows sorted after
                for mask in 0..(1u32 << size) {
                    let mut row: Vec<i32> = subset
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                        .collect();
                    row.sort_unstable();
                    acc.push(row);
                    rec(shape, &blocks[1..], rest.clone(), acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut blocks = Vec::new();
    for &l in &shape.first {
        blocks.push((0, l));
    }
    for &l in &shape.second {
        blocks.push((1, l));
    }
    let values: Vec<i32> = (1..=shape.r() as i32).collect();
    let mut out = Vec::new();
    rec(shape, &blocks, values, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All standard bitableaux (positive, rows and columns increasing).
pub fn standard_bitableaux(shape: &Bicomposition) -> Vec<Bitableau> {
    bitabloids(shape)
        .into_iter()
        .map(|b| b.rep().clone())
        .filter(|t| t.second.iter().all(|r| r.iter().all(|&v| v > 0)) && t.is_standard())
        .collect()
}

/// Stabilizer of the row-reading bitabloid inside the enumerated group:
/// sign changes on the first `a` values and row permutations.
pub fn bitabloid_stabilizer(shape: &Bicomposition, group: &crate::weyl::WeylGroup) -> Vec<crate::weyl::ElemIdx> {
    let base = Bitabloid::new(&Bitableau::t_row(shape));
    group
        .all()
        .filter(|&e| base.act(group.perm(e)) == base)
        .collect()
}

// ---------------------------------------------------------------------------
// typed tableaux
// ---------------------------------------------------------------------------

/// A filling of the diagram of `shape` by typed values: `j` (small, always
/// positive) counted by the first component of the type, `±(n+j)` counted by
/// the second.  `n` is the total number of parts of the type shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypedBitableau {
    pub shape: Bicomposition,
    pub n: usize,
    pub first: Vec<Vec<i32>>,
    pub second: Vec<Vec<i32>>,
}

impl TypedBitableau {
    pub fn rows(&self, comp: usize) -> &Vec<Vec<i32>> {
        if comp == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn entry(&self, cell: Cell) -> i32 {
        self.rows(cell.0)[cell.1][cell.2]
    }

    fn set(&mut self, cell: Cell, v: i32) {
        let rows = if cell.0 == 0 {
            &mut self.first
        } else {
            &mut self.second
        };
        rows[cell.1][cell.2] = v;
    }

    fn blank(shape: &Bicomposition, n: usize) -> TypedBitableau {
        TypedBitableau {
            first: shape.first.iter().map(|&l| vec![0; l]).collect(),
            second: shape.second.iter().map(|&l| vec![0; l]).collect(),
            shape: shape.clone(),
            n,
        }
    }

    /// Multiplicity check against a type shape.
    pub fn has_type(&self, mu: &Bicomposition) -> bool {
        if mu.n() != self.n {
            return false;
        }
        let mut small: BTreeMap<i32, usize> = BTreeMap::new();
        let mut big: BTreeMap<i32, usize> = BTreeMap::new();
        for comp in [&self.first, &self.second] {
            for row in comp {
                for &v in row {
                    if v > 0 && v <= self.n as i32 {
                        *small.entry(v).or_default() += 1;
                    } else if v.abs() > self.n as i32 && v.abs() <= 2 * self.n as i32 {
                        *big.entry(v.abs() - self.n as i32).or_default() += 1;
                    } else {
                        return false;
                    }
                }
            }
        }
        for (i, &m) in mu.first.iter().enumerate() {
            if small.remove(&(i as i32 + 1)).unwrap_or(0) != m {
                return false;
            }
        }
        for (i, &m) in mu.second.iter().enumerate() {
            if big.remove(&(i as i32 + 1)).unwrap_or(0) != m {
                return false;
            }
        }
        small.into_values().all(|m| m == 0) && big.into_values().all(|m| m == 0)
    }

    /// All first-component entries positive and all second-component
    /// entries greater than `n`.
    pub fn is_positive(&self) -> bool {
        self.first.iter().all(|r| r.iter().all(|&v| v > 0))
            && self.second.iter().all(|r| r.iter().all(|&v| v > self.n as i32))
    }

    /// Rows weakly increasing, columns strictly increasing, and positive.
    pub fn is_semistandard(&self) -> bool {
        if !self.is_positive() {
            return false;
        }
        for comp in [&self.first, &self.second] {
            for row in comp {
                if row.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
            }
            for i in 1..comp.len() {
                let width = comp[i].len().min(comp[i - 1].len());
                if (0..width).any(|c| comp[i - 1][c] >= comp[i][c]) {
                    return false;
                }
            }
        }
        true
    }

    /// All entries positive integers (no sign flips) and rows weakly
    /// increasing.  Weaker than [`TypedBitableau::is_positive`], which also
    /// constrains where small values may sit.
    pub fn is_row_standard(&self) -> bool {
        [&self.first, &self.second].iter().all(|comp| {
            comp.iter().all(|row| {
                row.iter().all(|&v| v > 0) && row.windows(2).all(|w| w[0] <= w[1])
            })
        })
    }

    /// Sign of the tableau: `+1` iff the second component has an even
    /// number of negative entries.
    pub fn epsilon(&self) -> i64 {
        let negs = self
            .second
            .iter()
            .flat_map(|r| r.iter())
            .filter(|&&v| v < 0)
            .count();
        if negs % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Flatten into a single tableau on the `2n`-row diagram, first
    /// component rows at slots `1..`, second component rows at `n+1..`.
    pub fn tilde(&self) -> Vec<Vec<i32>> {
        let mut out = vec![Vec::new(); 2 * self.n];
        for (i, row) in self.first.iter().enumerate() {
            out[i] = row.clone();
        }
        for (i, row) in self.second.iter().enumerate() {
            out[self.n + i] = row.clone();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.first, self.second])
    }
}

impl std::fmt::Debug for TypedBitableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.first, self.second)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TypedKind {
    All,
    Positive,
    Semistandard,
}

/// Enumerate the typed tableaux of shape `lambda` and type `mu`.
pub fn typed_tableaux(
    lambda: &Bicomposition,
    mu: &Bicomposition,
    kind: TypedKind,
) -> Vec<TypedBitableau> {
    assert_eq!(lambda.r(), mu.r());
    let n = mu.n();
    let cells = Bitableau::cells(lambda);
    // remaining multiplicities of base values: small i -> mu.first[i-1],
    // big n+i -> mu.second[i-1]
    let mut counts: Vec<(i32, usize, bool)> = Vec::new(); // (base value, count, signable)
    for (i, &m) in mu.first.iter().enumerate() {
        if m > 0 {
            counts.push((i as i32 + 1, m, false));
        }
    }
    for (i, &m) in mu.second.iter().enumerate() {
        if m > 0 {
            counts.push(((n + i + 1) as i32, m, true));
        }
    }
    let mut out = Vec::new();
    let mut t = TypedBitableau::blank(lambda, n);
    fn rec(
        cells: &[Cell],
        at: usize,
        counts: &mut Vec<(i32, usize, bool)>,
        t: &mut TypedBitableau,
        out: &mut Vec<TypedBitableau>,
    ) {
        if at == cells.len() {
            out.push(t.clone());
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            let (base, _, signable) = counts[k];
            counts[k].1 -= 1;
            t.set(cells[at], base);
            rec(cells, at + 1, counts, t, out);
            if signable {
                t.set(cells[at], -base);
                rec(cells, at + 1, counts, t, out);
            }
            counts[k].1 += 1;
        }
    }
    rec(&cells, 0, &mut counts, &mut t, &mut out);
    out.retain(|t| match kind {
        TypedKind::All => true,
        TypedKind::Positive => t.is_positive(),
        TypedKind::Semistandard => t.is_semistandard(),
    });
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// the three coordinate maps
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoordMap {
    /// positions read off the row-reading filling
    Alpha,
    /// positions read off the swapped row-reading filling
    Beta,
    /// positions read off the swapped column-reading filling
    Gamma,
}

fn position_filling(map: CoordMap, lambda: &Bicomposition) -> Bitableau {
    match map {
        CoordMap::Alpha => Bitableau::t_row(lambda),
        CoordMap::Beta => Bitableau::t_row_hat(lambda),
        CoordMap::Gamma => Bitableau::t_col_hat(lambda),
    }
}

/// Turn a bitabloid of shape `mu` into a typed tableau of shape `lambda`:
/// the place occupied by `i` in the position filling receives the row label
/// of `±i` in the bitabloid (`j` for first-component rows, `±(n+j)` for
/// second-component rows).
pub fn coord_map(map: CoordMap, lambda: &Bicomposition, toid: &Bitabloid) -> TypedBitableau {
    let mu = toid.shape();
    assert_eq!(lambda.r(), mu.r());
    let n = mu.n();
    let pos = position_filling(map, lambda);
    let mut out = TypedBitableau::blank(lambda, n);
    for cell in Bitableau::cells(lambda) {
        let i = pos.entry(cell);
        let ((comp, row, _), signed) = toid.rep().find(i);
        let v = if comp == 0 {
            (row + 1) as i32
        } else {
            let base = (n + row + 1) as i32;
            if signed > 0 {
                base
            } else {
                -base
            }
        };
        out.set(cell, v);
    }
    out
}

/// Inverse of [`coord_map`]: rebuild the `mu`-bitabloid from a typed
/// tableau.
pub fn coord_map_inv(
    map: CoordMap,
    mu: &Bicomposition,
    t: &TypedBitableau,
) -> Result<Bitabloid, crate::Error> {
    let lambda = &t.shape;
    if lambda.r() != mu.r() || !t.has_type(mu) {
        return Err(crate::Error::ShapeMismatch(format!(
            "tableau {:?} does not have type {:?}",
            t, mu
        )));
    }
    let n = mu.n();
    let pos = position_filling(map, lambda);
    let mut first: Vec<Vec<i32>> = mu.first.iter().map(|_| Vec::new()).collect();
    let mut second: Vec<Vec<i32>> = mu.second.iter().map(|_| Vec::new()).collect();
    for cell in Bitableau::cells(lambda) {
        let i = pos.entry(cell);
        let v = t.entry(cell);
        if v > 0 && v <= n as i32 {
            first[(v - 1) as usize].push(i);
        } else {
            let row = (v.abs() - n as i32 - 1) as usize;
            second[row].push(if v > 0 { i } else { -i });
        }
    }
    let raw = Bitableau {
        shape: mu.clone(),
        first,
        second,
    };
    Ok(Bitabloid::new(&raw))
}

// ---------------------------------------------------------------------------
// sign expansion and column antisymmetrization in V(lambda, mu)
// ---------------------------------------------------------------------------

/// Formal integer combination of typed tableaux.
pub type TypedSum = BTreeMap<TypedBitableau, i64>;

/// `sigma`: sum over all sign patterns on entries greater than `n`, each
/// weighted by the sign of the resulting tableau.
pub fn sigma(t: &TypedBitableau) -> TypedSum {
    let cells: Vec<Cell> = Bitableau::cells(&t.shape)
        .into_iter()
        .filter(|&c| t.entry(c).abs() > t.n as i32)
        .collect();
    let mut out = TypedSum::new();
    for mask in 0..(1u64 << cells.len()) {
        let mut s = t.clone();
        for (k, &cell) in cells.iter().enumerate() {
            if mask & (1 << k) != 0 {
                s.set(cell, -s.entry(cell));
            }
        }
        let eps = s.epsilon();
        *out.entry(s).or_insert(0) += eps;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Linear extension of `sigma` to formal sums.
pub fn sigma_sum(v: &TypedSum) -> TypedSum {
    let mut out = TypedSum::new();
    for (t, &c) in v {
        for (s, &e) in &sigma(t) {
            let entry = out.entry(s.clone()).or_insert(0);
            *entry += c * e;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations_of(k: usize) -> Vec<(Vec<usize>, i64)> {
    // all permutations of 0..k with their signs
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            let mut sign = 1i64;
            for i in 0..k {
                for j in (i + 1)..k {
                    if cur[i] > cur[j] {
                        sign = -sign;
                    }
                }
            }
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Row-equivalence class sum followed by the signed column symmetrizer.
pub fn e_element(t: &TypedBitableau) -> TypedSum {
    // distinct row rearrangements
    let mut class: Vec<TypedBitableau> = vec![t.clone()];
    for comp in 0..2 {
        for row in 0..t.rows(comp).len() {
            let mut next = Vec::new();
            for s in &class {
                let mut rows_seen = std::collections::BTreeSet::new();
                let base = s.rows(comp)[row].clone();
                for (perm, _) in permutations_of(base.len()) {
                    let newrow: Vec<i32> = perm.iter().map(|&i| base[i]).collect();
                    if rows_seen.insert(newrow.clone()) {
                        let mut s2 = s.clone();
                        if comp == 0 {
                            s2.first[row] = newrow;
                        } else {
                            s2.second[row] = newrow;
                        }
                        next.push(s2);
                    }
                }
            }
            class = next;
        }
    }
    class.sort();
    class.dedup();
    // columns of both components, as cell lists
    let mut columns: Vec<Vec<Cell>> = Vec::new();
    for (comp, parts) in [(0usize, &t.shape.first), (1usize, &t.shape.second)] {
        let maxw = parts.iter().copied().max().unwrap_or(0);
        for col in 0..maxw {
            let cells: Vec<Cell> = parts
                .iter()
                .enumerate()
                .filter(|&(_, &l)| col < l)
                .map(|(row, _)| (comp, row, col))
                .collect();
            if cells.len() > 1 {
                columns.push(cells);
            }
        }
    }
    let mut out = TypedSum::new();
    for member in class {
        // signed sum over column-stabilizing place permutations
        let mut terms: Vec<(TypedBitableau, i64)> = vec![(member, 1)];
        for col in &columns {
            let mut next = Vec::new();
            for (s, sign) in &terms {
                for (perm, psign) in permutations_of(col.len()) {
                    let mut s2 = s.clone();
                    for (k, &cell) in col.iter().enumerate() {
                        s2.set(cell, s.entry(col[perm[k]]));
                    }
                    next.push((s2, sign * psign));
                }
            }
            terms = next;
        }
        for (s, sign) in terms {
            let e = out.entry(s).or_insert(0);
            *e += sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

// ---------------------------------------------------------------------------
// the total order on positive typed tableaux
// ---------------------------------------------------------------------------

/// Reading word: `word[i-1]` is the entry of `t` at the place occupied by
/// `i` in the swapped column-reading filling of the shape.
pub fn reading_word(t: &TypedBitableau) -> Vec<i32> {
    let pos = Bitableau::t_col_hat(&t.shape);
    let r = t.shape.r();
    let mut out = vec![0; r];
    for cell in Bitableau::cells(&t.shape) {
        out[(pos.entry(cell) - 1) as usize] = t.entry(cell);
    }
    out
}

/// Sort key realizing a total order refining the required comparisons:
/// primary key the sum of the first `r - a` reading-word entries, then a
/// linear extension of the cumulative-count dominance (larger counts
/// earlier), then the reading word itself.
pub fn order_key(t: &TypedBitableau) -> (i64, Vec<i64>, Vec<i32>) {
    let word = reading_word(t);
    let a = t.shape.a();
    let r = t.shape.r();
    let head: i64 = word[..r - a].iter().map(|&v| v as i64).sum();
    // columns in the filling order of the swapped column reading: second
    // component first, then first component
    let pos = Bitableau::t_col_hat(&t.shape);
    let mut col_of = vec![0usize; r];
    let mut columns: Vec<Vec<Cell>> = Vec::new();
    for (comp, parts) in [(1usize, &t.shape.second), (0usize, &t.shape.first)] {
        let maxw = parts.iter().copied().max().unwrap_or(0);
        for col in 0..maxw {
            let cells: Vec<Cell> = parts
                .iter()
                .enumerate()
                .filter(|&(_, &l)| col < l)
                .map(|(row, _)| (comp, row, col))
                .collect();
            columns.push(cells);
        }
    }
    for (k, col) in columns.iter().enumerate() {
        for &cell in col {
            col_of[(pos.entry(cell) - 1) as usize] = k;
        }
    }
    let maxval = 2 * t.n as i64;
    let mut cum = Vec::with_capacity(columns.len() * maxval as usize);
    for k in 0..columns.len() {
        for j in 1..=maxval {
            let count = (0..r)
                .filter(|&i| col_of[i] <= k && (word[i] as i64) <= j)
                .count() as i64;
            // negated: larger cumulative counts sort earlier
            cum.push(-count);
        }
    }
    (head, cum, word)
}

pub fn order_less(a: &TypedBitableau, b: &TypedBitableau) -> bool {
    order_key(a) < order_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc(first: &[usize], second: &[usize]) -> Bicomposition {
        Bicomposition::new(first.to_vec(), second.to_vec())
    }

    #[test]
    fn special_fillings_large_example() {
        let l = bc(&[4, 3, 1], &[3, 2]);
        let tr = Bitableau::t_row(&l);
        assert_eq!(tr.first, vec![vec![1, 2, 3, 4], vec![5, 6, 7], vec![8]]);
        assert_eq!(tr.second, vec![vec![9, 10, 11], vec![12, 13]]);
        let trh = Bitableau::t_row_hat(&l);
        assert_eq!(trh.first, vec![vec![6, 7, 8, 9], vec![10, 11, 12], vec![13]]);
        assert_eq!(trh.second, vec![vec![1, 2, 3], vec![4, 5]]);
        let tc = Bitableau::t_col(&l);
        assert_eq!(tc.first, vec![vec![1, 4, 6, 8], vec![2, 5, 7], vec![3]]);
        assert_eq!(tc.second, vec![vec![9, 11, 13], vec![10, 12]]);
        let tch = Bitableau::t_col_hat(&l);
        assert_eq!(tch.first, vec![vec![6, 9, 11, 13], vec![7, 10, 12], vec![8]]);
        assert_eq!(tch.second, vec![vec![1, 3, 5], vec![2, 4]]);
    }

    #[test]
    fn special_fillings_small_example() {
        let l = bc(&[2, 1], &[1]);
        assert_eq!(Bitableau::t_row(&l).first, vec![vec![1, 2], vec![3]]);
        assert_eq!(Bitableau::t_row(&l).second, vec![vec![4]]);
        assert_eq!(Bitableau::t_col(&l).first, vec![vec![1, 3], vec![2]]);
        assert_eq!(Bitableau::t_col(&l).second, vec![vec![4]]);
        assert_eq!(Bitableau::t_row_hat(&l).first, vec![vec![2, 3], vec![4]]);
        assert_eq!(Bitableau::t_row_hat(&l).second, vec![vec![1]]);
        assert_eq!(Bitableau::t_col_hat(&l).first, vec![vec![2, 4], vec![3]]);
        assert_eq!(Bitableau::t_col_hat(&l).second, vec![vec![1]]);
    }

    #[test]
    fn row_filling_times_w_a_is_hat() {
        for l in [bc(&[2, 1], &[1]), bc(&[1], &[1]), bc(&[4, 3, 1], &[3, 2])] {
            let r = l.r();
            let a = l.a();
            let w = SignedPerm::w_a(r, a).unwrap();
            assert_eq!(Bitableau::t_row(&l).apply(&w), Bitableau::t_row_hat(&l));
        }
    }

    #[test]
    fn pi_maps() {
        let l = bc(&[1], &[1]);
        assert_eq!(pi_hat(&l), SignedPerm::identity(2));
        for l in [bc(&[2, 1], &[1]), bc(&[4, 3, 1], &[3, 2])] {
            let p = pi(&l);
            assert!(p.is_positive());
            assert_eq!(Bitableau::t_row(&l).apply(&p), Bitableau::t_col(&l));
            assert_eq!(pi_hat(&l), pi(&l.hat()));
            assert_eq!(Bitableau::t_row_hat(&l).apply(&pi_hat(&l)), Bitableau::t_col_hat(&l));
        }
    }

    #[test]
    fn bitabloid_enumeration() {
        let l = bc(&[1], &[1]);
        let bs = bitabloids(&l);
        assert_eq!(bs.len(), 4);
        type Rows = Vec<Vec<i32>>;
        let reps: Vec<(Rows, Rows)> = bs
            .iter()
            .map(|b| (b.rep().first.clone(), b.rep().second.clone()))
            .collect();
        assert!(reps.contains(&(vec![vec![1]], vec![vec![2]])));
        assert!(reps.contains(&(vec![vec![2]], vec![vec![1]])));
        assert!(reps.contains(&(vec![vec![1]], vec![vec![-2]])));
        assert!(reps.contains(&(vec![vec![2]], vec![vec![-1]])));
        assert_eq!(standard_bitableaux(&l).len(), 2);
        assert_eq!(bitabloids(&Bicomposition::omega(2)).len(), 8);
        // counts match the closed formula on a spread of shapes
        for l in [bc(&[2, 1], &[1]), bc(&[1, 1], &[2]), bc(&[0, 2], &[1, 1])] {
            assert_eq!(bitabloids(&l).len() as u64, l.bitabloid_count());
        }
    }

    #[test]
    fn canonical_rep_unique_per_class() {
        let l = bc(&[2], &[1]);
        let g = crate::weyl::WeylGroup::new(3);
        // orbit map w -> {t_row . w} is |stabilizer|-to-one onto all classes
        let mut hits: BTreeMap<Bitabloid, usize> = BTreeMap::new();
        let base = Bitabloid::new(&Bitableau::t_row(&l));
        for e in g.all() {
            *hits.entry(base.act(g.perm(e))).or_default() += 1;
        }
        assert_eq!(hits.len() as u64, l.bitabloid_count());
        let stab = bitabloid_stabilizer(&l, &g).len();
        assert!(hits.values().all(|&c| c == stab));
        assert_eq!(stab as u64, (g.order() as u64) / l.bitabloid_count());
    }

    #[test]
    fn perm_from_row_filling_roundtrip() {
        let l = bc(&[2, 1], &[1]);
        for b in bitabloids(&l) {
            let w = b.perm_from_row_filling();
            assert_eq!(Bitabloid::new(&Bitableau::t_row(&l).apply(&w)), b);
        }
    }

    #[test]
    fn typed_membership_example() {
        // r = n = 7, lambda = ((3,2),(1,1)), mu = ((3,1),(2,1)) padded with
        // zero parts so that the type shape really has n = 7 parts
        let lambda = bc(&[3, 2], &[1, 1]);
        let mu = bc(&[3, 1, 0, 0, 0], &[2, 1]);
        let t1 = TypedBitableau {
            shape: lambda.clone(),
            n: 7,
            first: vec![vec![1, 8, 9], vec![2, 1]],
            second: vec![vec![1], vec![-8]],
        };
        assert!(t1.has_type(&mu));
        assert!(!t1.is_positive());
        let t2 = TypedBitableau {
            shape: lambda.clone(),
            n: 7,
            first: vec![vec![1, 1, 1], vec![2, 8]],
            second: vec![vec![8], vec![9]],
        };
        assert!(t2.has_type(&mu));
        assert!(t2.is_semistandard());
        let all = typed_tableaux(&lambda, &mu, TypedKind::All);
        assert!(all.contains(&t1));
        let ss = typed_tableaux(&lambda, &mu, TypedKind::Semistandard);
        assert!(ss.contains(&t2));
    }

    #[test]
    fn canonical_type_filling_is_semistandard() {
        let l = bc(&[2, 1], &[1]);
        let ss = typed_tableaux(&l, &l, TypedKind::Semistandard);
        let n = l.n() as i32;
        let canonical = TypedBitableau {
            shape: l.clone(),
            n: l.n(),
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![n + 1]],
        };
        assert!(ss.contains(&canonical));
    }

    #[test]
    fn no_positive_tableaux_when_a_smaller() {
        // lambda an a-bipartition, mu a b-bicomposition with a < b
        let lambda = bc(&[1], &[2]); // a = 1
        let mu = bc(&[2], &[1]); // b = 2
        assert!(typed_tableaux(&lambda, &mu, TypedKind::Positive).is_empty());
    }

    #[test]
    fn sigma_golden() {
        // first component rows (1,1),(2); second component row (5,6); n = 4
        let shape = bc(&[2, 1], &[2]);
        let t = TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![5, 6]],
        };
        let s = sigma(&t);
        assert_eq!(s.len(), 4);
        assert_eq!(s[&t], 1);
        let flip = |a: i32, b: i32| TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![a, b]],
        };
        assert_eq!(s[&flip(-5, 6)], -1);
        assert_eq!(s[&flip(5, -6)], -1);
        assert_eq!(s[&flip(-5, -6)], 1);
    }

    #[test]
    fn e_element_golden() {
        // first component rows (1,1),(2); second component rows (5),(6); n = 4
        let shape = bc(&[2, 1], &[1, 1]);
        let t = TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![5], vec![6]],
        };
        let e = e_element(&t);
        let make = |f: Vec<Vec<i32>>, s: Vec<Vec<i32>>| TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: f,
            second: s,
        };
        assert_eq!(e.len(), 4);
        assert_eq!(e[&make(vec![vec![1, 1], vec![2]], vec![vec![5], vec![6]])], 1);
        assert_eq!(e[&make(vec![vec![2, 1], vec![1]], vec![vec![5], vec![6]])], -1);
        assert_eq!(e[&make(vec![vec![1, 1], vec![2]], vec![vec![6], vec![5]])], -1);
        assert_eq!(e[&make(vec![vec![2, 1], vec![1]], vec![vec![6], vec![5]])], 1);
    }

    #[test]
    fn coord_maps_golden() {
        // r = n = 6, lambda = ((2,2),(2)), mu = ((3,1),(1,1)) padded to six
        // parts
        let lambda = bc(&[2, 2], &[2]);
        let mu = bc(&[3, 1, 0, 0], &[1, 1]);
        let t = Bitableau {
            shape: mu.clone(),
            first: vec![vec![3, 4, 6], vec![1], vec![], vec![]],
            second: vec![vec![-2], vec![5]],
        };
        let toid = Bitabloid::new(&t);
        let alpha = coord_map(CoordMap::Alpha, &lambda, &toid);
        assert_eq!(alpha.first, vec![vec![2, -7], vec![1, 1]]);
        assert_eq!(alpha.second, vec![vec![8, 1]]);
        let beta = coord_map(CoordMap::Beta, &lambda, &toid);
        assert_eq!(beta.first, vec![vec![1, 1], vec![8, 1]]);
        assert_eq!(beta.second, vec![vec![2, -7]]);
        let gamma = coord_map(CoordMap::Gamma, &lambda, &toid);
        assert_eq!(gamma.first, vec![vec![1, 8], vec![1, 1]]);
        assert_eq!(gamma.second, vec![vec![2, -7]]);
        // inverses round-trip
        for m in [CoordMap::Alpha, CoordMap::Beta, CoordMap::Gamma] {
            let fwd = coord_map(m, &lambda, &toid);
            assert_eq!(coord_map_inv(m, &mu, &fwd).unwrap(), toid);
        }
    }

    #[test]
    fn coord_maps_are_bijections() {
        let lambda = bc(&[1, 1], &[1]);
        let mu = bc(&[2], &[1]);
        let toids = bitabloids(&mu);
        let all = typed_tableaux(&lambda, &mu, TypedKind::All);
        for m in [CoordMap::Alpha, CoordMap::Beta, CoordMap::Gamma] {
            let mut images: Vec<TypedBitableau> =
                toids.iter().map(|b| coord_map(m, &lambda, b)).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), toids.len());
            assert_eq!(images, all);
        }
    }

    #[test]
    fn order_trichotomy() {
        let lambda = bc(&[2], &[1]);
        for mu in crate::shapes::shapes(3, 3) {
            if !mu.is_bipartition() {
                continue;
            }
            let ts = typed_tableaux(&lambda, &mu, TypedKind::Positive);
            for a in &ts {
                for b in &ts {
                    let lt = order_less(a, b);
                    let gt = order_less(b, a);
                    if a == b {
                        assert!(!lt && !gt);
                    } else {
                        assert!(lt ^ gt);
                    }
                }
            }
        }
    }

    #[test]
    fn tilde_flatten_golden() {
        // the positive tableau from the type example flattens into the
        // 2n-slot diagram with second-component rows at slots n+1..
        let lambda = bc(&[3, 2], &[1, 1]);
        let t = TypedBitableau {
            shape: lambda,
            n: 7,
            first: vec![vec![1, 1, 1], vec![2, 8]],
            second: vec![vec![8], vec![9]],
        };
        let flat = t.tilde();
        assert_eq!(flat.len(), 14);
        assert_eq!(flat[0], vec![1, 1, 1]);
        assert_eq!(flat[1], vec![2, 8]);
        assert_eq!(flat[7], vec![8]);
        assert_eq!(flat[8], vec![9]);
        assert!(flat[2].is_empty() && flat[13].is_empty());
    }
}
