//! Matrices with polynomial entries and their ideals of minors.

use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};

use super::matrix::QMatrix;
use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use super::rational::Rational;
use super::ArithError;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Poly::zero(ring); rows * cols] }
    }

    /// Panics on ragged input or entries from another ring.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>) -> PolyMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        assert!(entries.iter().all(|p| p.ring().same(ring)), "entry from a different ring");
        PolyMatrix { ring: ring.clone(), rows: r, cols: c, entries }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(p.ring().same(&self.ring), "entry from a different ring");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Appends `col` as a new last column.
    pub fn with_column(&self, col: &[Poly]) -> PolyMatrix {
        assert_eq!(col.len(), self.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(col[i].clone());
                r
            })
            .collect();
        PolyMatrix::from_rows(&self.ring, rows)
    }

    /// Substitutes a value for every ring variable.
    pub fn eval(&self, point: &[Rational]) -> QMatrix {
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval(point)).collect())
            .collect::<Vec<Vec<Rational>>>();
        if self.rows == 0 {
            return QMatrix::zeros(0, self.cols);
        }
        QMatrix::from_rows(rows)
    }

    /// Drops rows that are identically zero.
    pub fn without_zero_rows(&self) -> PolyMatrix {
        let rows = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|p| !p.is_zero()))
            .map(|i| self.row(i).to_vec())
            .collect::<Vec<_>>();
        let mut m = PolyMatrix::from_rows(&self.ring, rows);
        m.cols = self.cols;
        m
    }

    /// Replaces the rows by a basis of their ℚ-span, viewing each row as a
    /// rational vector indexed by (column, monomial).
    ///
    /// Maximal minors in the column direction (`r = cols`) generate the same
    /// ideal before and after, since each new minor is a rational combination
    /// of old ones and vice versa.
    pub fn rational_row_basis(&self) -> PolyMatrix {
        let mut index: FxHashMap<(usize, Monomial), usize> = FxHashMap::default();
        let mut keys: Vec<(usize, Monomial)> = Vec::new();
        for i in 0..self.rows {
            for (j, p) in self.row(i).iter().enumerate() {
                for (m, _) in p.terms() {
                    index.entry((j, *m)).or_insert_with(|| {
                        keys.push((j, *m));
                        keys.len() - 1
                    });
                }
            }
        }
        let mut q = QMatrix::zeros(self.rows, keys.len());
        for i in 0..self.rows {
            for (j, p) in self.row(i).iter().enumerate() {
                for (m, c) in p.terms() {
                    q.set(i, index[&(j, *m)], c.clone());
                }
            }
        }
        let rr = q.rref();
        let mut rows = Vec::with_capacity(rr.rank);
        for i in 0..rr.rank {
            let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.cols];
            for (k, x) in rr.matrix.row(i).iter().enumerate() {
                if !x.is_zero() {
                    let (j, m) = keys[k];
                    buckets[j].push((m, x.clone()));
                }
            }
            rows.push(buckets.into_iter().map(|b| Poly::from_terms(&self.ring, b)).collect());
        }
        let mut m = PolyMatrix::from_rows(&self.ring, rows);
        m.cols = self.cols;
        m
    }

    /// All nonzero `r × r` minors, scaled to leading coefficient 1 and
    /// deduplicated, in canonical order.
    ///
    /// Minors are built by Laplace expansion column by column from the right,
    /// keeping only row sets whose partial minor is nonzero; partial minors
    /// are shared by every column set with the same suffix.
    pub fn minors(&self, r: usize) -> Result<Vec<Poly>, ArithError> {
        if r == 0 || r > self.rows.min(self.cols) {
            return Err(ArithError::MinorOrder { order: r, rows: self.rows, cols: self.cols });
        }
        let mut seen = FxHashSet::default();
        let mut out = Vec::new();
        self.for_each_minor(r, |p| {
            let p = p.monic();
            if seen.insert(p.clone()) {
                out.push(p);
            }
        });
        out.sort();
        Ok(out)
    }

    /// Calls `emit` on every nonzero `r × r` minor (with repetitions and
    /// arbitrary scaling).
    pub fn for_each_minor(&self, r: usize, mut emit: impl FnMut(Poly)) {
        let live_rows: Vec<usize> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|p| !p.is_zero()))
            .collect();
        let live_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
            .collect();
        if r == 0 || r > live_rows.len().min(live_cols.len()) {
            return;
        }
        let sub = self.submatrix(&live_rows, &live_cols);
        let mut start: FxHashMap<RowSet, Poly> = FxHashMap::default();
        start.insert(RowSet::empty(sub.rows), Poly::one(&self.ring));
        sub.expand(&start, sub.cols, r, &mut emit);
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let data = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        PolyMatrix::from_rows(&self.ring, data)
    }

    fn expand(
        &self,
        suffix: &FxHashMap<RowSet, Poly>,
        min_col: usize,
        left: usize,
        emit: &mut impl FnMut(Poly),
    ) {
        if left == 0 {
            for p in suffix.values() {
                emit(p.clone());
            }
            return;
        }
        for c in (left - 1..min_col).rev() {
            let next = self.extend_left(suffix, c);
            if next.is_empty() {
                continue;
            }
            if left == 1 {
                for p in next.into_values() {
                    emit(p);
                }
            } else {
                self.expand(&next, c, left - 1, emit);
            }
        }
    }

    /// Adds column `c` on the left of every partial minor.
    fn extend_left(&self, suffix: &FxHashMap<RowSet, Poly>, c: usize) -> FxHashMap<RowSet, Poly> {
        let nonzero: Vec<usize> = (0..self.rows).filter(|&i| !self.get(i, c).is_zero()).collect();
        let mut next: FxHashMap<RowSet, Poly> = FxHashMap::default();
        for (set, minor) in suffix {
            for &i in &nonzero {
                if set.contains(i) {
                    continue;
                }
                let term = self.get(i, c) * minor;
                let term = if set.count_below(i) % 2 == 1 { -term } else { term };
                let key = set.with(i);
                match next.get_mut(&key) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        next
    }
}

/// A set of row indices as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn empty(n: usize) -> RowSet {
        RowSet(vec![0; n.div_ceil(64).max(1)])
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn with(&self, i: usize) -> RowSet {
        let mut s = self.clone();
        s.0[i / 64] |= 1 << (i % 64);
        s
    }

    fn count_below(&self, i: usize) -> u32 {
        let w = i / 64;
        let mut n: u32 = self.0[..w].iter().map(|x| x.count_ones()).sum();
        n += (self.0[w] & ((1u64 << (i % 64)) - 1)).count_ones();
        n
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
