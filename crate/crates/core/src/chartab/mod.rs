//! Exact irreducible character data via the modular method: class constants,
//! common-eigenvector splitting over GF(p), degree recovery, root-of-unity
//! multiplicity lifting, kernels, and codegrees.

pub mod cache;

use crate::error::TableError;
use crate::group::{ConjugacyData, FiniteGroup};
use crate::matrix::{eval_poly, ModMatrix};
use crate::modular::{add_mod, dixon_prime, inv_mod, mul_mod, pow_mod, sub_mod};

/// Class algebra structure constants: `a[i][j*k + t]` counts pairs
/// (x, y) in C_i x C_j with x y = g_t.
pub struct ClassConstants {
    pub k: usize,
    mats: Vec<Vec<u32>>,
}

impl ClassConstants {
    /// O(k * |G|) construction: for each x in C_i and each representative g_t,
    /// the product class of x^{-1} g_t locates the increment.
    pub fn compute(g: &FiniteGroup, classes: &ConjugacyData) -> Self {
        let k = classes.class_count();
        let reps: Vec<u32> = classes.classes.iter().map(|c| c.rep).collect();
        let mut mats = vec![vec![0u32; k * k]; k];
        let mut buf = Vec::new();
        for (i, info) in classes.classes.iter().enumerate() {
            let mat = &mut mats[i];
            for &x in &info.members {
                let xi = g.inv(x);
                for (t, &rep) in reps.iter().enumerate() {
                    let y = g.mul_buf(xi, rep, &mut buf);
                    let j = classes.class_of[y as usize] as usize;
                    mat[j * k + t] += 1;
                }
            }
        }
        let cc = Self { k, mats };
        cc.assert_consistent(classes);
        cc
    }

    pub fn entry(&self, i: usize, j: usize, t: usize) -> u32 {
        self.mats[i][j * self.k + t]
    }

    /// M_i^T reduced mod p (columns of M_i become rows), the shape the
    /// row-vector splitting code consumes.
    fn transposed_mod(&self, i: usize, p: u64) -> ModMatrix {
        let k = self.k;
        let mut m = ModMatrix::zeros(p, k, k);
        for j in 0..k {
            for t in 0..k {
                m[(t, j)] = self.mats[i][j * k + t] as u64 % p;
            }
        }
        m
    }

    fn assert_consistent(&self, classes: &ConjugacyData) {
        let k = self.k;
        // identity class acts as the identity matrix
        for j in 0..k {
            for t in 0..k {
                let expect = u32::from(j == t);
                assert_eq!(self.entry(0, j, t), expect, "a_{{0,{j},{t}}}");
            }
        }
        // sum_t a_{ijt} |C_t| = |C_i| |C_j|
        for i in 0..k {
            for j in 0..k {
                let total: u64 = (0..k)
                    .map(|t| self.entry(i, j, t) as u64 * classes.classes[t].size)
                    .sum();
                assert_eq!(
                    total,
                    classes.classes[i].size * classes.classes[j].size,
                    "class constant consistency at ({i},{j})"
                );
            }
        }
    }
}

/// One irreducible character in its mod-p form.
#[derive(Debug, Clone)]
pub struct ModPCharacter {
    pub p: u64,
    /// Eigenvalue row omega_i = |C_i| theta(g_i) / theta(1), with omega_0 = 1.
    pub omega: Vec<u64>,
    /// Character values theta(g_i) in GF(p).
    pub theta: Vec<u64>,
    /// Recovered integer degree.
    pub degree: u64,
}

/// Common eigenvector rows of all class matrices over GF(p), one per
/// irreducible character, normalized so the identity-class coordinate is 1.
///
/// Matrices are consumed in ascending class index and subspaces processed in
/// creation order, so the output order is deterministic.
pub fn common_eigenrows(cc: &ClassConstants, p: u64) -> Result<Vec<Vec<u64>>, TableError> {
    let k = cc.k;
    let mut subspaces: Vec<ModMatrix> = vec![ModMatrix::identity(p, k)];
    for i in 1..k {
        if subspaces.iter().all(|b| b.rows == 1) {
            break;
        }
        let mt = cc.transposed_mod(i, p);
        let mut next: Vec<ModMatrix> = Vec::new();
        for basis in &subspaces {
            let d = basis.rows;
            if d == 1 {
                next.push(basis.clone());
                continue;
            }
            let image = basis.mul(&mt);
            let restriction = solve_restriction(basis, &image, p);
            let cp = restriction.char_poly();
            let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&cp, x, p) == 0).collect();
            if roots.len() <= 1 {
                next.push(basis.clone());
                continue;
            }
            // coordinate rows c with c R = lambda c are left eigenvectors,
            // i.e. right null vectors of R^T - lambda I
            let rt = restriction.transpose();
            let mut split_dim = 0;
            for &lambda in &roots {
                let mut shifted = rt.clone();
                for r in 0..d {
                    shifted[(r, r)] = sub_mod(shifted[(r, r)], lambda, p);
                }
                let coords = shifted.nullspace();
                if coords.is_empty() {
                    continue;
                }
                let eigen = ModMatrix::from_rows(p, &coords).mul(basis);
                split_dim += eigen.rows;
                next.push(eigen);
            }
            // the class algebra mod p is semisimple, so eigenspaces fill the subspace
            assert_eq!(split_dim, d, "eigenspaces must exhaust the subspace");
        }
        subspaces = next;
    }
    if let Some(bad) = subspaces.iter().find(|b| b.rows != 1) {
        return Err(TableError::SplitIncomplete { dim: bad.rows });
    }
    let mut rows = Vec::with_capacity(k);
    for b in &subspaces {
        let v = b.row(0);
        assert!(v[0] != 0, "eigenvector identity coordinate must be nonzero");
        let f = inv_mod(v[0], p);
        rows.push(v.iter().map(|&x| mul_mod(x, f, p)).collect());
    }
    Ok(rows)
}

/// Solve R * basis = image for the restriction matrix R (basis rows are
/// independent, so the system is exactly determined).
fn solve_restriction(basis: &ModMatrix, image: &ModMatrix, p: u64) -> ModMatrix {
    let d = basis.rows;
    let k = basis.cols;
    // transpose into columns: [basis^T | image^T], rref, read off R^T
    let mut aug = ModMatrix::zeros(p, k, 2 * d);
    for r in 0..d {
        for c in 0..k {
            aug[(c, r)] = basis[(r, c)];
            aug[(c, d + r)] = image[(r, c)];
        }
    }
    let pivots = aug.rref();
    assert_eq!(pivots.len(), d, "basis rows must be independent");
    let mut rest = ModMatrix::zeros(p, d, d);
    for r in 0..d {
        for c in 0..d {
            rest[(r, c)] = aug[(c, d + r)];
        }
    }
    rest
}

/// Integer degrees from eigenvalue rows: d is the unique integer in (0, p/2)
/// with d^2 = |G| * (sum_i omega_i omega_{i*} / |C_i|)^{-1} mod p.
pub fn character_degrees(
    omegas: &[Vec<u64>],
    classes: &ConjugacyData,
    order: u64,
    p: u64,
) -> Result<Vec<u64>, TableError> {
    let sqrt_bound = (order as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(omegas.len());
    for (idx, omega) in omegas.iter().enumerate() {
        let mut s = 0u64;
        for (i, info) in classes.classes.iter().enumerate() {
            let istar = classes.inverse_class[i] as usize;
            let term = mul_mod(omega[i], omega[istar], p);
            s = add_mod(s, mul_mod(term, inv_mod(info.size % p, p), p), p);
        }
        if s == 0 {
            return Err(TableError::NoSquareRoot { index: idx });
        }
        let target = mul_mod(order % p, inv_mod(s, p), p);
        let d = (1..=sqrt_bound)
            .find(|&d| mul_mod(d, d, p) == target)
            .ok_or(TableError::NoSquareRoot { index: idx })?;
        assert!(d * d <= order, "degree must satisfy d^2 <= |G|");
        degrees.push(d);
    }
    let total: u64 = degrees.iter().map(|&d| d * d).sum();
    if total != order {
        return Err(TableError::DegreeSumMismatch { got: total, order });
    }
    Ok(degrees)
}

/// One lifted (exact) irreducible character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedCharacter {
    pub degree: u64,
    /// Per class c, the nonzero-stride slice of the exponent-length
    /// multiplicity vector: `mults[c][t]` is m_{c, t*(e/o_c)}, where o_c is the
    /// class element order. All other full-length entries are zero, since
    /// character values on C_c are sums of o_c-th roots of unity.
    pub mults: Vec<Vec<u64>>,
    /// Classes with multiplicity vector concentrated at index 0.
    pub kernel_classes: Vec<u32>,
    pub kernel_order: u64,
    pub codegree: u64,
}

impl LiftedCharacter {
    /// m_{c,j} in full exponent-length indexing.
    pub fn multiplicity(&self, class: usize, j: u64, exponent: u64, class_order: u64) -> u64 {
        let stride = exponent / class_order;
        if j % stride != 0 {
            return 0;
        }
        self.mults[class][(j / stride) as usize]
    }
}

/// Lift one mod-p character to exact multiplicity vectors, kernel, codegree.
///
/// m_{c,t} = o^{-1} sum_j theta(g_c^j) y^{-jt} over GF(p) with y = z^{e/o} of
/// order o = |g_c| (the full-exponent DFT collapses onto this stride), read as
/// the unique integer in [0, d].
pub fn lift_character(
    chi_index: usize,
    theta: &[u64],
    degree: u64,
    classes: &ConjugacyData,
    order: u64,
    p: u64,
    z: u64,
) -> Result<LiftedCharacter, TableError> {
    let e = classes.exponent;
    let mut mults = Vec::with_capacity(classes.class_count());
    let mut kernel_classes = Vec::new();
    let mut kernel_order = 0u64;
    for (c, info) in classes.classes.iter().enumerate() {
        let o = info.order;
        let y = pow_mod(z, e / o, p);
        let yinv = inv_mod(y, p);
        let oinv = inv_mod(o % p, p);
        let theta_pows: Vec<u64> =
            (0..o).map(|j| theta[classes.power_map[c][j as usize] as usize]).collect();
        let mut row = Vec::with_capacity(o as usize);
        for t in 0..o {
            let mut acc = 0u64;
            let step = pow_mod(yinv, t, p);
            let mut w = 1u64;
            for &tp in &theta_pows {
                acc = add_mod(acc, mul_mod(tp, w, p), p);
                w = mul_mod(w, step, p);
            }
            let m = mul_mod(acc, oinv, p);
            // valid because p > 2 sqrt|G| >= 2d bounds multiplicities away from wrap
            if m > degree {
                return Err(TableError::MultiplicityOutOfRange {
                    value: m,
                    degree,
                    chi: chi_index,
                    class: c,
                });
            }
            row.push(m);
        }
        let total: u64 = row.iter().sum();
        assert_eq!(total, degree, "multiplicities must sum to the degree");
        if row[0] == degree {
            kernel_classes.push(c as u32);
            kernel_order += info.size;
        }
        mults.push(row);
    }
    assert_eq!(order % kernel_order, 0, "kernel size must divide |G|");
    let index = order / kernel_order;
    if index % degree != 0 {
        return Err(TableError::NonIntegralCodegree {
            chi: chi_index,
            kernel_order,
            degree,
        });
    }
    Ok(LiftedCharacter {
        degree,
        mults,
        kernel_classes,
        kernel_order,
        codegree: index / degree,
    })
}

/// The full exact character table of a group.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub order: u64,
    pub p: u64,
    /// Primitive e-th root of unity in GF(p) used for the lift.
    pub z: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub inverse_class: Vec<u32>,
    /// Lifted characters, sorted by (degree, mod-p value row).
    pub characters: Vec<LiftedCharacter>,
    /// Mod-p value rows aligned with `characters`.
    pub theta: Vec<Vec<u64>>,
    /// Deduplicated codegree set, ascending.
    pub codegrees: Vec<u64>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// Re-verify first orthogonality from the stored mod-p rows; cheap enough
    /// to run on cached tables.
    pub fn first_orthogonality_holds(&self) -> bool {
        let (p, k) = (self.p, self.theta.len());
        for a in 0..k {
            for b in 0..k {
                let mut acc = 0u64;
                for c in 0..k {
                    let cstar = self.inverse_class[c] as usize;
                    let term = mul_mod(self.theta[a][c], self.theta[b][cstar], p);
                    acc = add_mod(acc, mul_mod(self.class_sizes[c] % p, term, p), p);
                }
                let expect = if a == b { self.order % p } else { 0 };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    pub fn kernel_orders(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.kernel_order).collect()
    }

    pub fn per_character_codegrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.codegree).collect()
    }
}

/// Build the table: class constants, Dixon prime, eigen splitting, degree
/// recovery, lifting, and the orthogonality assertions.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable, TableError> {
    let classes = g.conjugacy();
    let order = g.order();
    let (p, z) = dixon_prime(order, classes.exponent);
    let cc = ClassConstants::compute(g, &classes);
    let omegas = common_eigenrows(&cc, p)?;
    assert_eq!(omegas.len(), classes.class_count(), "character count = class count");
    let degrees = character_degrees(&omegas, &classes, order, p)?;
    verify_class_algebra_hom(&cc, &omegas, p)?;
    drop(cc);

    let k = classes.class_count();
    let mut theta: Vec<Vec<u64>> = Vec::with_capacity(k);
    for (omega, &d) in omegas.iter().zip(&degrees) {
        theta.push(
            (0..k)
                .map(|i| {
                    let ci = inv_mod(classes.classes[i].size % p, p);
                    mul_mod(mul_mod(d % p, omega[i], p), ci, p)
                })
                .collect(),
        );
    }
    verify_first_orthogonality(&theta, &classes, order, p)?;

    let mut lifted: Vec<(LiftedCharacter, Vec<u64>)> = Vec::with_capacity(k);
    for (idx, (row, &d)) in theta.iter().zip(&degrees).enumerate() {
        let ch = lift_character(idx, row, d, &classes, order, p, z)?;
        lifted.push((ch, row.clone()));
    }
    lifted.sort_by(|a, b| (a.0.degree, &a.1).cmp(&(b.0.degree, &b.1)));

    let mut codegrees: Vec<u64> = lifted.iter().map(|(c, _)| c.codegree).collect();
    codegrees.sort_unstable();
    codegrees.dedup();
    assert!(codegrees.contains(&1), "the trivial character contributes codegree 1");

    let (characters, theta): (Vec<_>, Vec<_>) = lifted.into_iter().unzip();
    Ok(CharacterTable {
        order,
        p,
        z,
        exponent: classes.exponent,
        class_sizes: classes.classes.iter().map(|c| c.size).collect(),
        class_orders: classes.classes.iter().map(|c| c.order).collect(),
        inverse_class: classes.inverse_class.clone(),
        characters,
        theta,
        codegrees,
    })
}

/// Deduplicated codegree set of a group.
pub fn codegree_set(g: &FiniteGroup) -> Result<Vec<u64>, TableError> {
    Ok(character_table(g)?.codegrees)
}

/// Every class matrix scales every eigen-row by the row's own i-th entry:
/// sum_t a_{ijt} omega_t = omega_i omega_j over GF(p).
fn verify_class_algebra_hom(
    cc: &ClassConstants,
    omegas: &[Vec<u64>],
    p: u64,
) -> Result<(), TableError> {
    let k = cc.k;
    for (alpha, omega) in omegas.iter().enumerate() {
        for i in 0..k {
            let mat = &cc.mats[i];
            for j in 0..k {
                let row = &mat[j * k..(j + 1) * k];
                let mut acc: u64 = 0;
                for t in 0..k {
                    // entries < 2^32 and omega < p <= 2^31 keep the sum in u64
                    acc = acc.wrapping_add(row[t] as u64 % p * omega[t]);
                    if t % 64 == 63 {
                        acc %= p;
                    }
                }
                if acc % p != mul_mod(omega[i], omega[j], p) {
                    return Err(TableError::OrthogonalityViolated { a: alpha, b: i });
                }
            }
        }
    }
    Ok(())
}

/// sum_c |C_c| theta_a(g_c) theta_b(g_c^{-1}) = delta_{ab} |G| over GF(p).
fn verify_first_orthogonality(
    theta: &[Vec<u64>],
    classes: &ConjugacyData,
    order: u64,
    p: u64,
) -> Result<(), TableError> {
    let k = theta.len();
    for a in 0..k {
        for b in 0..k {
            let mut acc = 0u64;
            for c in 0..k {
                let cstar = classes.inverse_class[c] as usize;
                let term = mul_mod(theta[a][c], theta[b][cstar], p);
                acc = add_mod(acc, mul_mod(classes.classes[c].size % p, term, p), p);
            }
            let expect = if a == b { order % p } else { 0 };
            if acc != expect {
                return Err(TableError::OrthogonalityViolated { a, b });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{Element, Layout};
    use crate::group::DEFAULT_ELEMENT_LIMIT;

    fn symmetric(d: usize) -> FiniteGroup {
        let mut swap: Vec<u32> = (0..d as u32).collect();
        swap.swap(0, 1);
        let cycle: Vec<u32> = (0..d as u32).map(|i| (i + 1) % d as u32).collect();
        FiniteGroup::from_generators(
            Layout::permutation(d),
            vec![Element::from_vec(swap), Element::from_vec(cycle)],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap()
    }

    fn trivial() -> FiniteGroup {
        FiniteGroup::from_generators(Layout::permutation(1), vec![], DEFAULT_ELEMENT_LIMIT)
            .unwrap()
    }

    #[test]
    fn s3_class_constants() {
        let g = symmetric(3);
        let classes = g.conjugacy();
        let cc = ClassConstants::compute(&g, &classes);
        // classes ordered (1, transpositions, 3-cycles)
        assert_eq!(cc.entry(1, 1, 0), 3); // transposition pairs multiplying to identity
        assert_eq!(cc.entry(1, 1, 2), 3); // transposition pairs hitting a fixed 3-cycle
        for j in 0..3 {
            for t in 0..3 {
                assert_eq!(cc.entry(0, j, t), u32::from(j == t));
            }
        }
    }

    #[test]
    fn s3_has_three_common_eigenrows_mod_7() {
        let g = symmetric(3);
        let classes = g.conjugacy();
        let cc = ClassConstants::compute(&g, &classes);
        let rows = common_eigenrows(&cc, 7).unwrap();
        assert_eq!(rows.len(), 3);
        for r in &rows {
            assert_eq!(r[0], 1);
        }
    }

    #[test]
    fn s3_degrees_and_codegrees() {
        let t = character_table(&symmetric(3)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert_eq!(t.codegrees, vec![1, 2, 3]);
    }

    #[test]
    fn s4_degrees_and_codegrees() {
        let t = character_table(&symmetric(4)).unwrap();
        let mut d = t.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2, 3, 3]);
        assert_eq!(t.codegrees, vec![1, 2, 3, 8]);
        // textbook: the degree-2 character has kernel V4 (order 4), codegree 3
        let deg2 = t.characters.iter().find(|c| c.degree == 2).unwrap();
        assert_eq!(deg2.kernel_order, 4);
        assert_eq!(deg2.codegree, 3);
    }

    #[test]
    fn trivial_group_table() {
        let t = character_table(&trivial()).unwrap();
        assert_eq!(t.degrees(), vec![1]);
        assert_eq!(t.codegrees, vec![1]);
        assert_eq!(t.characters[0].kernel_order, 1);
    }

    #[test]
    fn s3_degree2_multiplicities_on_transpositions() {
        let t = character_table(&symmetric(3)).unwrap();
        let chi = t.characters.iter().find(|c| c.degree == 2).unwrap();
        // transposition class has order 2; value 1 + zeta_6^3 = 0
        let c = t.class_orders.iter().position(|&o| o == 2).unwrap();
        assert_eq!(chi.multiplicity(c, 0, t.exponent, 2), 1);
        assert_eq!(chi.multiplicity(c, 3, t.exponent, 2), 1);
        for j in [1, 2, 4, 5] {
            assert_eq!(chi.multiplicity(c, j, t.exponent, 2), 0);
        }
    }

    #[test]
    fn trivial_character_kernel_is_everything() {
        let t = character_table(&symmetric(4)).unwrap();
        let chi = &t.characters[0];
        assert_eq!(chi.degree, 1);
        assert_eq!(chi.kernel_order, 24);
        assert_eq!(chi.codegree, 1);
        for c in 0..t.class_count() {
            assert_eq!(chi.mults[c][0], 1);
        }
    }

    /// The collapsed stride-DFT must agree with the direct full-exponent DFT.
    #[test]
    fn lift_matches_direct_dft() {
        for g in [symmetric(3), symmetric(4)] {
            let classes = g.conjugacy();
            let t = character_table(&g).unwrap();
            let (p, z, e) = (t.p, t.z, t.exponent);
            let einv = inv_mod(e % p, p);
            for (chi, theta) in t.characters.iter().zip(&t.theta) {
                for (c, info) in classes.classes.iter().enumerate() {
                    for j in 0..e {
                        let mut acc = 0u64;
                        for s in 0..e {
                            let th = theta[classes.power_map[c][s as usize] as usize];
                            let w = pow_mod(inv_mod(z, p), (s * j) % e, p);
                            acc = add_mod(acc, mul_mod(th, w, p), p);
                        }
                        let direct = mul_mod(acc, einv, p);
                        assert_eq!(
                            direct,
                            chi.multiplicity(c, j, e, info.order) % p,
                            "class {c} index {j}"
                        );
                    }
                }
            }
        }
    }
}
