//! Dense linear algebra over GF(p) with a runtime prime modulus.

use crate::modular::{add_mod, inv_mod, mul_mod, sub_mod};

/// Row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().map(|&x| x % p));
        }
        Self { p, rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = add_mod(out[(i, j)], mul_mod(a, other[(k, j)], p), p);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = add_mod(acc, mul_mod(self[(i, j)], v[j], p), p);
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.p, self.rows);
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

    /// Reduced row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self[(r, c)], p);
            for j in c..self.cols {
                self[(r, j)] = mul_mod(self[(r, j)], inv, p);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let f = self[(i, c)];
                    for j in c..self.cols {
                        let t = mul_mod(f, self[(r, j)], p);
                        self[(i, j)] = sub_mod(self[(i, j)], t, p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space, one vector per row of the result.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = sub_mod(0, m[(r, free)], p);
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix; None if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        let mut aug = Self::zeros(p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Self::zeros(p, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    pub fn det(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let p = self.p;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[(i, c)] != 0) else {
                return 0;
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = sub_mod(0, det, p);
            }
            det = mul_mod(det, m[(c, c)], p);
            let inv = inv_mod(m[(c, c)], p);
            for i in c + 1..n {
                if m[(i, c)] != 0 {
                    let f = mul_mod(m[(i, c)], inv, p);
                    for j in c..n {
                        let t = mul_mod(f, m[(c, j)], p);
                        m[(i, j)] = sub_mod(m[(i, j)], t, p);
                    }
                }
            }
        }
        det
    }

    /// Characteristic polynomial coefficients c_0..c_n with
    /// det(xI - A) = sum c_k x^k, via Hessenberg reduction.
    ///
    /// Divisions are only by nonzero field elements, so any prime modulus is safe.
    pub fn char_poly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // Reduce to upper Hessenberg by similarity transforms.
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = (c + 1..n).find(|&i| h[(i, c)] != 0) else {
                continue;
            };
            if pr != c + 1 {
                h.swap_rows(c + 1, pr);
                h.swap_cols(c + 1, pr);
            }
            let inv = inv_mod(h[(c + 1, c)], p);
            for i in c + 2..n {
                if h[(i, c)] == 0 {
                    continue;
                }
                let f = mul_mod(h[(i, c)], inv, p);
                // row_i -= f * row_{c+1}; col_{c+1} += f * col_i
                for j in 0..n {
                    let t = mul_mod(f, h[(c + 1, j)], p);
                    h[(i, j)] = sub_mod(h[(i, j)], t, p);
                }
                for r in 0..n {
                    let t = mul_mod(f, h[(r, i)], p);
                    h[(r, c + 1)] = add_mod(h[(r, c + 1)], t, p);
                }
            }
        }
        // char poly of leading k x k Hessenberg blocks by recurrence.
        // poly[k] holds coefficients of det(xI_k - H_k), length k+1.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut q = shift_poly(&polys[k - 1]);
            let d = sub_mod(0, h[(k - 1, k - 1)], p);
            add_scaled(&mut q, &polys[k - 1], d, p);
            let mut prod = 1u64;
            for m in 1..k {
                // product of subdiagonal entries h[k-m..k-1][one below]
                prod = mul_mod(prod, h[(k - m, k - m - 1)], p);
                let coeff = mul_mod(prod, h[(k - m - 1, k - 1)], p);
                let s = sub_mod(0, coeff, p);
                add_scaled(&mut q, &polys[k - m - 1], s, p);
            }
            polys.push(q);
        }
        polys.pop().unwrap()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl std::ops::Index<(usize, usize)> for ModMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ModMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

fn shift_poly(c: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; c.len() + 1];
    out[1..].copy_from_slice(c);
    out
}

fn add_scaled(target: &mut [u64], src: &[u64], s: u64, p: u64) {
    for (t, &c) in target.iter_mut().zip(src) {
        *t = add_mod(*t, mul_mod(s, c, p), p);
    }
}

pub fn eval_poly(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = add_mod(mul_mod(acc, x, p), c, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let p = 31;
        let m = ModMatrix::from_rows(p, &[vec![2, 0], vec![0, 16]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ModMatrix::identity(p, 2));
        let sing = ModMatrix::from_rows(p, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.det(), 0);
    }

    #[test]
    fn char_poly_matches_direct_expansion() {
        // 2x2: x^2 - tr x + det
        let p = 101;
        let m = ModMatrix::from_rows(p, &[vec![3, 7], vec![11, 5]]);
        let cp = m.char_poly();
        let tr = 8u64;
        let det = (3 * 5 + p - (7 * 11) % p) % p;
        assert_eq!(cp, vec![det, p - tr, 1]);
    }

    #[test]
    fn char_poly_roots_are_eigenvalues() {
        let p = 13;
        // companion matrix of x^3 - 1: eigenvalues are the cube roots of unity mod 13
        let m = ModMatrix::from_rows(p, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let cp = m.char_poly();
        let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&cp, x, p) == 0).collect();
        assert_eq!(roots, vec![1, 3, 9]);
        for &r in &roots {
            let mut shifted = m.clone();
            for i in 0..3 {
                shifted[(i, i)] = sub_mod(shifted[(i, i)], r, p);
            }
            assert!(!shifted.nullspace().is_empty());
        }
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let p = 7;
        let m = ModMatrix::from_rows(p, &[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }
}
