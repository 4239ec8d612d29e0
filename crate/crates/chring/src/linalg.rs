//! Dense linear algebra over the prime field F_p.
//!
//! Everything downstream (idempotent cutting, Frobenius kernels, radical
//! chains) reduces to rank/kernel/span bookkeeping on small dense matrices.
//! Subspaces are kept in reduced row echelon form, which is a canonical basis
//! of the row space, so span comparisons and output ordering are
//! deterministic.

use crate::exactnum::mod_inverse;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.into_iter().map(|x| x % p));
        }
        FpMat {
            p,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.data[i * other.cols + j] = (cur + mul_mod(a, other.get(l, j), self.p)) % self.p;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> FpMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = FpMat::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc: u128 = 0;
            for j in 0..self.cols {
                acc += self.get(i, j) as u128 * v[j] as u128;
            }
            out[i] = (acc % self.p as u128) as u64;
        }
        out
    }

    /// Canonical basis of the null space {x : M x = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let mut pivot = None;
            for r in row..m.rows {
                if m.get(r, col) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else { continue };
            for j in 0..m.cols {
                let tmp = m.get(row, j);
                m.set(row, j, m.get(pr, j));
                m.set(pr, j, tmp);
            }
            let inv = mod_inverse(m.get(row, col), p);
            for j in 0..m.cols {
                m.set(row, j, mul_mod(m.get(row, j), inv, p));
            }
            for r in 0..m.rows {
                if r != row {
                    let f = m.get(r, col);
                    if f != 0 {
                        for j in 0..m.cols {
                            let v = sub_mod(m.get(r, j), mul_mod(f, m.get(row, j), p), p);
                            m.set(r, j, v);
                        }
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; m.cols];
            v[free] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = sub_mod(0, m.get(r, free), p);
            }
            basis.push(v);
        }
        basis
    }
}

/// Incrementally maintained subspace of F_p^n in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(p: u64, cols: usize) -> Self {
        Span {
            p,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical (RREF) basis, rows ordered by pivot column.
    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn reduce(&self, v: &mut [u64]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for j in 0..self.cols {
                    v[j] = sub_mod(v[j], mul_mod(f, row[j], self.p), self.p);
                }
            }
        }
    }

    /// Add a vector to the span; returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = mod_inverse(v[pc], self.p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, self.p);
        }
        // Back-substitute into existing rows to keep full RREF.
        for row in &mut self.rows {
            let f = row[pc];
            if f != 0 {
                for j in 0..self.cols {
                    row[j] = sub_mod(row[j], mul_mod(f, v[j], self.p), self.p);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Coordinates of v in the canonical basis, or None when v is outside.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let coords: Vec<u64> = self.pivots.iter().map(|&pc| v[pc] % self.p).collect();
        let mut check = vec![0u64; self.cols];
        for (c, row) in coords.iter().zip(&self.rows) {
            for j in 0..self.cols {
                check[j] = (check[j] + mul_mod(*c, row[j], self.p)) % self.p;
            }
        }
        if check.iter().zip(v).all(|(a, b)| *a == b % self.p) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn same_space(&self, other: &Span) -> bool {
        self.rows == other.rows && self.pivots == other.pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_singular_matrix() {
        // over F_2: rows (1,1,0), (0,0,1) -> kernel spanned by (1,1,0)
        let m = FpMat::from_rows(2, vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![1, 1, 0]]);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let m = FpMat::identity(5, 4);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn span_is_canonical_under_insertion_order() {
        let vectors = [vec![1u64, 2, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let mut a = Span::new(3, 3);
        let mut b = Span::new(3, 3);
        for v in &vectors {
            a.insert(v);
        }
        for v in vectors.iter().rev() {
            b.insert(v);
        }
        assert!(a.same_space(&b));
        assert_eq!(a.dim(), b.dim());
    }

    #[test]
    fn coordinates_round_trip() {
        let mut s = Span::new(7, 3);
        s.insert(&[1, 2, 3]);
        s.insert(&[0, 1, 5]);
        let v = vec![2, 4 + 3, 6 + 15 % 7];
        let v: Vec<u64> = v.iter().map(|x| x % 7).collect();
        if let Some(coords) = s.coordinates(&v) {
            let mut rebuilt = vec![0u64; 3];
            for (c, row) in coords.iter().zip(s.basis()) {
                for j in 0..3 {
                    rebuilt[j] = (rebuilt[j] + c * row[j]) % 7;
                }
            }
            assert_eq!(rebuilt, v);
        } else {
            panic!("vector should be inside the span");
        }
    }

    #[test]
    fn matrix_power() {
        // nilpotent shift over F_3
        let m = FpMat::from_rows(3, vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(m.pow(3), FpMat::zeros(3, 3, 3));
        assert_eq!(m.pow(0), FpMat::identity(3, 3));
    }
}
