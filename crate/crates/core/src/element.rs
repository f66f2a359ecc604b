//! Group elements and their realizations.
//!
//! An element is a flat `Box<[u32]>` interpreted through its group's
//! [`Layout`]: first a permutation image sequence over `0..degree`, then for
//! each affine block over GF(r) a translation vector (n entries) followed by
//! an invertible n x n matrix in row-major order. A pure permutation group has
//! no blocks; an affine group over a single field has degree 0 and one block.
//! Mixed layouts arise from products where the factors realize differently.

use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use serde::{Deserialize, Serialize};

use crate::modular::{inv_mod, mul_mod};

/// One affine block: pairs (v, M) with v in GF(r)^n and M in GL(n, r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub r: u64,
    pub n: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.n + self.n * self.n
    }
}

/// Realization descriptor shared by all elements of one group.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Layout {
    pub degree: usize,
    pub blocks: Vec<Block>,
}

impl Layout {
    pub fn permutation(degree: usize) -> Self {
        Self { degree, blocks: Vec::new() }
    }

    pub fn affine(r: u64, n: usize) -> Self {
        Self { degree: 0, blocks: vec![Block { r, n }] }
    }

    pub fn element_len(&self) -> usize {
        self.degree + self.blocks.iter().map(Block::len).sum::<usize>()
    }

    /// Offset of block `b`'s data within an element.
    pub fn block_offset(&self, b: usize) -> usize {
        self.degree + self.blocks[..b].iter().map(Block::len).sum::<usize>()
    }

    /// Concatenation for direct products: permutation domains first, then blocks.
    pub fn concat(parts: &[&Layout]) -> Self {
        Self {
            degree: parts.iter().map(|l| l.degree).sum(),
            blocks: parts.iter().flat_map(|l| l.blocks.iter().copied()).collect(),
        }
    }

    pub fn identity(&self) -> Element {
        let mut data = vec![0u32; self.element_len()];
        for (i, slot) in data[..self.degree].iter_mut().enumerate() {
            *slot = i as u32;
        }
        let mut off = self.degree;
        for b in &self.blocks {
            for i in 0..b.n {
                data[off + b.n + i * b.n + i] = 1;
            }
            off += b.len();
        }
        Element { data: data.into_boxed_slice() }
    }

    /// c = a * b, meaning "apply b, then a": permutation images compose as
    /// a[b[i]]; affine pairs as (v_a + M_a v_b, M_a M_b).
    pub fn compose_into(&self, a: &[u32], b: &[u32], out: &mut Vec<u32>) {
        out.clear();
        out.reserve(self.element_len());
        for i in 0..self.degree {
            out.push(a[b[i] as usize]);
        }
        let mut off = self.degree;
        for blk in &self.blocks {
            let r = blk.r;
            let n = blk.n;
            let (va, ma) = (&a[off..off + n], &a[off + n..off + blk.len()]);
            let (vb, mb) = (&b[off..off + n], &b[off + n..off + blk.len()]);
            // v = v_a + M_a v_b
            for i in 0..n {
                let mut acc = va[i] as u64;
                for j in 0..n {
                    acc += ma[i * n + j] as u64 * vb[j] as u64;
                }
                out.push((acc % r) as u32);
            }
            // M = M_a M_b
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0u64;
                    for k in 0..n {
                        acc += ma[i * n + k] as u64 * mb[k * n + j] as u64;
                    }
                    out.push((acc % r) as u32);
                }
            }
            off += blk.len();
        }
    }

    pub fn compose(&self, a: &Element, b: &Element) -> Element {
        let mut buf = Vec::new();
        self.compose_into(&a.data, &b.data, &mut buf);
        Element { data: buf.into_boxed_slice() }
    }

    /// Inverse: permutation images invert; affine pairs map to (-M^{-1} v, M^{-1}).
    pub fn invert(&self, a: &Element) -> Element {
        let mut out = vec![0u32; self.element_len()];
        for i in 0..self.degree {
            out[a.data[i] as usize] = i as u32;
        }
        let mut off = self.degree;
        for blk in &self.blocks {
            let r = blk.r;
            let n = blk.n;
            let v = &a.data[off..off + n];
            let m = &a.data[off + n..off + blk.len()];
            let minv = invert_block_matrix(m, n, r);
            for i in 0..n {
                let mut acc = 0u64;
                for j in 0..n {
                    acc += minv[i * n + j] * v[j] as u64;
                }
                out[off + i] = ((r - acc % r) % r) as u32;
            }
            for i in 0..n * n {
                out[off + n + i] = minv[i] as u32;
            }
            off += blk.len();
        }
        Element { data: out.into_boxed_slice() }
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.degree > 0 {
            parts.push(format!("perm({})", self.degree));
        }
        for b in &self.blocks {
            parts.push(format!("affine({},{})", b.r, b.n));
        }
        if parts.is_empty() {
            parts.push("trivial".to_string());
        }
        parts.join("+")
    }

    /// Validity check: permutation part bijective, matrix parts invertible.
    pub fn is_valid(&self, e: &Element) -> bool {
        if e.data.len() != self.element_len() {
            return false;
        }
        let mut seen = vec![false; self.degree];
        for i in 0..self.degree {
            let img = e.data[i] as usize;
            if img >= self.degree || seen[img] {
                return false;
            }
            seen[img] = true;
        }
        let mut off = self.degree;
        for blk in &self.blocks {
            let n = blk.n;
            if e.data[off..off + blk.len()].iter().any(|&x| x as u64 >= blk.r) {
                return false;
            }
            let m = crate::matrix::ModMatrix::from_rows(
                blk.r,
                &(0..n)
                    .map(|i| (0..n).map(|j| e.data[off + n + i * n + j] as u64).collect())
                    .collect::<Vec<_>>(),
            );
            if n > 0 && m.det() == 0 {
                return false;
            }
            off += blk.len();
        }
        true
    }

    pub fn display<'a>(&'a self, e: &'a Element) -> ElementDisplay<'a> {
        ElementDisplay { layout: self, element: e }
    }
}

fn invert_block_matrix(m: &[u32], n: usize, r: u64) -> Vec<u64> {
    // Gauss-Jordan on [M | I]; panics on singular input, which enumeration
    // never produces (closures of invertible generators stay invertible).
    let mut a: Vec<u64> = m.iter().map(|&x| x as u64).collect();
    let mut inv = vec![0u64; n * n];
    for i in 0..n {
        inv[i * n + i] = 1;
    }
    for c in 0..n {
        let pr = (c..n).find(|&i| a[i * n + c] != 0).expect("singular matrix in element");
        if pr != c {
            for j in 0..n {
                a.swap(c * n + j, pr * n + j);
                inv.swap(c * n + j, pr * n + j);
            }
        }
        let f = inv_mod(a[c * n + c], r);
        for j in 0..n {
            a[c * n + j] = mul_mod(a[c * n + j], f, r);
            inv[c * n + j] = mul_mod(inv[c * n + j], f, r);
        }
        for i in 0..n {
            if i != c && a[i * n + c] != 0 {
                let f = a[i * n + c];
                for j in 0..n {
                    a[i * n + j] = (a[i * n + j] + r * r - mul_mod(f, a[c * n + j], r)) % r;
                    inv[i * n + j] = (inv[i * n + j] + r * r - mul_mod(f, inv[c * n + j], r)) % r;
                }
            }
        }
    }
    inv
}

/// A group element; interpretation requires the owning group's [`Layout`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pub data: Box<[u32]>,
}

impl Element {
    pub fn from_vec(data: Vec<u32>) -> Self {
        Self { data: data.into_boxed_slice() }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }
}

/// Debug text form: cycle notation for the permutation part, `(v | M)` row-major
/// per affine block.
pub struct ElementDisplay<'a> {
    layout: &'a Layout,
    element: &'a Element,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.element.data;
        let l = self.layout;
        let mut wrote = false;
        if l.degree > 0 {
            let mut seen = vec![false; l.degree];
            let mut any_cycle = false;
            for start in 0..l.degree {
                if seen[start] || e[start] as usize == start {
                    seen[start] = true;
                    continue;
                }
                write!(f, "(")?;
                let mut x = start;
                let mut first = true;
                while !seen[x] {
                    seen[x] = true;
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                    first = false;
                    x = e[x] as usize;
                }
                write!(f, ")")?;
                any_cycle = true;
            }
            if !any_cycle {
                write!(f, "()")?;
            }
            wrote = true;
        }
        let mut off = l.degree;
        for blk in &l.blocks {
            if wrote {
                write!(f, " ")?;
            }
            let v: Vec<String> = (0..blk.n).map(|i| e[off + i].to_string()).collect();
            let m: Vec<String> =
                (0..blk.n * blk.n).map(|i| e[off + blk.n + i].to_string()).collect();
            write!(f, "({} | {})", v.join(","), m.join(","))?;
            off += blk.len();
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Deterministic multiply-xor hasher; the std default hasher would work but
/// this one is faster on the short fixed-width keys every hot loop hashes.
#[derive(Default, Clone)]
pub struct FixedHasher {
    state: u64,
}

const SEED: u64 = 0x51_7c_c1_b7_27_22_0a_95;

impl Hasher for FixedHasher {
    fn finish(&self) -> u64 {
        self.state
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.state = (self.state.rotate_left(5) ^ b as u64).wrapping_mul(SEED);
        }
    }

    fn write_u32(&mut self, v: u32) {
        self.state = (self.state.rotate_left(5) ^ v as u64).wrapping_mul(SEED);
    }

    fn write_u64(&mut self, v: u64) {
        self.state = (self.state.rotate_left(5) ^ v).wrapping_mul(SEED);
    }

    fn write_usize(&mut self, v: usize) {
        self.write_u64(v as u64);
    }
}

pub type FixedState = BuildHasherDefault<FixedHasher>;
pub type ElementMap<V> = std::collections::HashMap<Box<[u32]>, V, FixedState>;

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[u32]) -> Element {
        Element::from_vec(images.to_vec())
    }

    #[test]
    fn permutation_composition_applies_right_first() {
        let l = Layout::permutation(3);
        let a = perm(&[1, 0, 2]); // (0 1)
        let b = perm(&[1, 2, 0]); // (0 1 2)
        // (a*b)(x) = a(b(x)): 0->1->0, 1->2->2, 2->0->1
        assert_eq!(l.compose(&a, &b), perm(&[0, 2, 1]));
        assert_eq!(l.compose(&a, &l.invert(&a)), l.identity());
    }

    #[test]
    fn affine_group_laws() {
        let l = Layout::affine(7, 1);
        // x -> 2x + 3 over GF(7)
        let g = Element::from_vec(vec![3, 2]);
        let gi = l.invert(&g);
        assert_eq!(l.compose(&g, &gi), l.identity());
        assert_eq!(l.compose(&gi, &g), l.identity());
        // associativity spot check
        let h = Element::from_vec(vec![1, 4]);
        let k = Element::from_vec(vec![5, 2]);
        let ab_c = l.compose(&l.compose(&g, &h), &k);
        let a_bc = l.compose(&g, &l.compose(&h, &k));
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn mixed_layout_identity_and_validity() {
        let l = Layout {
            degree: 3,
            blocks: vec![Block { r: 5, n: 2 }, Block { r: 2, n: 1 }],
        };
        let id = l.identity();
        assert!(l.is_valid(&id));
        assert_eq!(l.compose(&id, &id), id);
        let bad = Element::from_vec(vec![0, 0, 2, 0, 0, 1, 0, 0, 1, 0, 1]);
        assert!(!l.is_valid(&bad)); // duplicate permutation image
    }

    #[test]
    fn cycle_notation_display() {
        let l = Layout::permutation(4);
        assert_eq!(l.display(&perm(&[1, 0, 3, 2])).to_string(), "(0 1)(2 3)");
        assert_eq!(l.display(&l.identity()).to_string(), "()");
        let la = Layout::affine(7, 2);
        let e = Element::from_vec(vec![3, 0, 1, 2, 0, 1]);
        assert_eq!(la.display(&e).to_string(), "(3,0 | 1,2,0,1)");
    }
}
