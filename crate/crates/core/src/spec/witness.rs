//! Verified Frobenius/2-Frobenius assembly and the two witness families,
//! plus the builtin fixture aliases.

use super::{build, ActionSpec, GroupSpec};
use crate::element::Layout;
use crate::error::BuildError;
use crate::group::{generated_subgroup, fixed_point_witness, FiniteGroup, SubgroupMeta};
use crate::matrix::ModMatrix;
use crate::modular::{is_prime, mul_mod, pow_mod, primitive_root};

/// Frobenius assembly Fro(N, A): the semidirect product with the
/// fixed-point-free action verified at build time.
pub fn make_frobenius(
    kernel: GroupSpec,
    complement: GroupSpec,
    action: ActionSpec,
    limit: usize,
) -> Result<FiniteGroup, BuildError> {
    build(
        &GroupSpec::Frobenius {
            kernel: Box::new(kernel),
            complement: Box::new(complement),
            action,
        },
        limit,
    )
}

/// 2-Frobenius assembly bottom ⋊ (middle ⋊ top), verified fixed-point-free on
/// both layers and classified with the expected type triple.
pub fn make_two_frobenius(
    bottom: GroupSpec,
    middle: GroupSpec,
    top: GroupSpec,
    top_on_middle: ActionSpec,
    complement_on_bottom: ActionSpec,
    limit: usize,
) -> Result<FiniteGroup, BuildError> {
    build(
        &GroupSpec::TwoFrobenius {
            bottom: Box::new(bottom),
            middle: Box::new(middle),
            top: Box::new(top),
            top_on_middle,
            complement_on_bottom,
        },
        limit,
    )
}

/// Spec tree for the divergence family: V ⋊ (Q ⋊ P) with P = Z4 acting
/// fixed-point-freely on Q = Zq x Zq and V a faithful irreducible
/// 4-dimensional GF(r)-module induced from a nontrivial q-th-root character
/// of Q.
pub fn qian_family_spec(q: u64, r: u64) -> Result<GroupSpec, BuildError> {
    if !is_prime(q) || q == 2 {
        return Err(BuildError::PreconditionViolated(format!("q must be an odd prime, got {q}")));
    }
    if !is_prime(r) {
        return Err(BuildError::PreconditionViolated(format!("r must be prime, got {r}")));
    }
    if 4 % r == 0 || q % r == 0 {
        return Err(BuildError::PreconditionViolated(format!("r = {r} must not divide 4q^2")));
    }
    if r % q != 1 {
        return Err(BuildError::PreconditionViolated(format!(
            "GF({r}) must contain q-th roots of unity (r = 1 mod {q})"
        )));
    }
    // order-4 matrix without eigenvalue 1 in any nontrivial power: M^2 = -I
    let m = vec![0, q - 1, 1, 0];
    let zeta = pow_mod(primitive_root(r), (r - 1) / q, r);

    // deterministic character scan: nonzero dual vectors w in lexicographic
    // order; retry on an unfaithful or reducible induced module
    let mut last_err = BuildError::ModuleReducible;
    for w0 in 0..q {
        for w1 in 0..q {
            if w0 == 0 && w1 == 0 {
                continue;
            }
            match induced_module(q, r, &m, zeta, (w0, w1)) {
                Ok(rho) => {
                    return Ok(GroupSpec::Semidirect {
                        kernel: Box::new(GroupSpec::ElementaryAbelian { p: r, k: 4 }),
                        complement: Box::new(GroupSpec::Frobenius {
                            kernel: Box::new(GroupSpec::ElementaryAbelian { p: q, k: 2 }),
                            complement: Box::new(GroupSpec::Cyclic { n: 4 }),
                            action: ActionSpec::Matrix { matrices: vec![vec![m.clone()]] },
                        }),
                        action: ActionSpec::Matrix {
                            matrices: rho.into_iter().map(|mat| vec![mat]).collect(),
                        },
                    })
                }
                Err(e) => last_err = e,
            }
        }
    }
    Err(last_err)
}

/// Build the Proposition 5.4 divergence family member for (q, r).
pub fn qian_family(q: u64, r: u64, limit: usize) -> Result<FiniteGroup, BuildError> {
    let spec = qian_family_spec(q, r)?;
    let expected = r.pow(4) * 4 * q * q;
    let g = build(&spec, limit)?;
    assert_eq!(g.order(), expected, "family member order must be 4 q^2 r^4");
    Ok(g)
}

/// Monomial matrices of the module induced from the character
/// lambda(v) = zeta^(w . v): one 4x4 matrix over GF(r) per generator of
/// Q ⋊ P in construction order (e0, e1, a). Fails if the module is not
/// faithful or not irreducible.
fn induced_module(
    q: u64,
    r: u64,
    m: &[u64],
    zeta: u64,
    w: (u64, u64),
) -> Result<Vec<Vec<u64>>, BuildError> {
    // a-conjugation on translations is v -> M v; basis vector b_i carries the
    // coset a^i, so a acts as the 4-cycle b_i -> b_{i+1} and a translation t
    // acts diagonally by lambda(M^{-i} t) on b_i.
    let mm = ModMatrix::from_rows(
        q,
        &[vec![m[0], m[1]], vec![m[2], m[3]]],
    );
    let minv = mm.inverse().expect("action matrix invertible");
    let lambda = |v: &[u64]| -> u64 {
        let dot = (mul_mod(w.0, v[0], q) + mul_mod(w.1, v[1], q)) % q;
        pow_mod(zeta, dot, r)
    };
    let mut rho = Vec::new();
    for e in [[1u64, 0], [0, 1]] {
        let mut mat = vec![0u64; 16];
        let mut v = e.to_vec();
        for i in 0..4 {
            mat[i * 4 + i] = lambda(&v);
            v = minv.mul_vec(&v);
        }
        rho.push(mat);
    }
    let mut cycle = vec![0u64; 16];
    for i in 0..4 {
        cycle[((i + 1) % 4) * 4 + i] = 1;
    }
    rho.push(cycle);

    // faithfulness: the matrix group must have the full order 4 q^2
    let layout = Layout { degree: 0, blocks: vec![crate::element::Block { r, n: 4 }] };
    let gens: Vec<crate::element::Element> = rho
        .iter()
        .map(|mat| {
            let mut data = vec![0u32; 4 + 16];
            for (i, &x) in mat.iter().enumerate() {
                data[4 + i] = x as u32;
            }
            crate::element::Element::from_vec(data)
        })
        .collect();
    let image = FiniteGroup::from_generators(layout, gens, (4 * q * q) as usize + 1)
        .map_err(|_| BuildError::ModuleReducible)?;
    if image.order() != 4 * q * q {
        return Err(BuildError::ModuleReducible);
    }

    // irreducibility: spinning any nonzero orbit representative must fill the
    // whole space
    let mats: Vec<ModMatrix> = rho
        .iter()
        .map(|mat| {
            ModMatrix::from_rows(r, &(0..4).map(|i| mat[i * 4..(i + 1) * 4].to_vec()).collect::<Vec<_>>())
        })
        .collect();
    let total = (r.pow(4) - 1) as usize;
    let index_of = |v: &[u64]| -> usize {
        let mut acc = 0u64;
        for &x in v {
            acc = acc * r + x;
        }
        acc as usize - 1
    };
    let vector_of = |mut i: u64| -> Vec<u64> {
        i += 1;
        let mut v = vec![0u64; 4];
        for slot in (0..4).rev() {
            v[slot] = i % r;
            i /= r;
        }
        v
    };
    let mut seen = vec![false; total];
    for start in 0..total as u64 {
        if seen[start as usize] {
            continue;
        }
        // orbit of the representative
        let rep = vector_of(start);
        let mut orbit = vec![rep.clone()];
        seen[start as usize] = true;
        let mut pos = 0;
        while pos < orbit.len() {
            let v = orbit[pos].clone();
            for mat in &mats {
                let img = mat.mul_vec(&v);
                let idx = index_of(&img);
                if !seen[idx] {
                    seen[idx] = true;
                    orbit.push(img);
                }
            }
            pos += 1;
        }
        if spin_dimension(&mats, &rep, r) != 4 {
            return Err(BuildError::ModuleReducible);
        }
    }
    Ok(rho)
}

/// Dimension of the smallest invariant subspace containing `seed`.
fn spin_dimension(mats: &[ModMatrix], seed: &[u64], r: u64) -> usize {
    let mut basis: Vec<Vec<u64>> = vec![seed.to_vec()];
    let mut queue = vec![seed.to_vec()];
    while let Some(v) = queue.pop() {
        for mat in mats {
            let img = mat.mul_vec(&v);
            let mut trial = basis.clone();
            trial.push(img.clone());
            if ModMatrix::from_rows(r, &trial).rank() > basis.len() {
                basis.push(img.clone());
                queue.push(img);
                if basis.len() == 4 {
                    return 4;
                }
            }
        }
    }
    basis.len()
}

/// Spec tree for the frozen 5-cycle witness on primes (a,b,c,d,e) =
/// (2,5,31,3,7): G = (C x E) ⋊ (B ⋊ (A x D)) of order 201810.
pub fn five_cycle_spec() -> GroupSpec {
    GroupSpec::Semidirect {
        kernel: Box::new(GroupSpec::DirectProduct {
            factors: vec![
                GroupSpec::ElementaryAbelian { p: 31, k: 2 },
                GroupSpec::Cyclic { n: 7 },
            ],
        }),
        complement: Box::new(GroupSpec::Semidirect {
            kernel: Box::new(GroupSpec::Cyclic { n: 5 }),
            complement: Box::new(GroupSpec::DirectProduct {
                factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 3 }],
            }),
            // A inverts B, D centralizes B
            action: ActionSpec::Matrix { matrices: vec![vec![vec![4]], vec![vec![1]]] },
        }),
        // complement generators in construction order (b, a, d) acting on the
        // blocks (C over GF(31)^2, E over GF(7)):
        //   b: diag(2, 2^{-1}) on C, trivial on E
        //   a: coordinate swap on C (inverting b's action), inversion on E
        //   d: scalar 5 on C, x -> 2x on E
        action: ActionSpec::Matrix {
            matrices: vec![
                vec![vec![2, 0, 0, 16], vec![1]],
                vec![vec![0, 1, 1, 0], vec![6]],
                vec![vec![5, 0, 0, 5], vec![2]],
            ],
        },
    }
}

/// The frozen Theorem 1.2 condition-(1) witness. All construction assertions
/// (action relations, the dashed fixed-point-free pairs of the 5-cycle
/// orientation, and the joint actions on C and E) are verified before
/// returning; any failure panics, since the construction is pinned.
pub fn five_cycle_instance(limit: usize) -> Result<FiniteGroup, BuildError> {
    let spec = five_cycle_spec();
    let mut g = build(&spec, limit)?;
    assert_eq!(g.order(), 201_810, "witness order is 2*3*5*7*31^2");

    let mut meta = g.metadata().clone();
    {
        // generators in construction order: c1, c2, e, b, a, d
        let gens = g.generators().to_vec();
        assert_eq!(gens.len(), 6);
        let (c_set, e_set) = (vec![gens[0], gens[1]], vec![gens[2]]);
        let (b_el, a_el, d_el) = (gens[3], gens[4], gens[5]);

        let sub = |seeds: &[u32]| generated_subgroup(&g, seeds);
        let a = sub(&[a_el]);
        let b = sub(&[b_el]);
        let c = sub(&c_set);
        let d = sub(&[d_el]);
        let e = sub(&e_set);
        assert_eq!(
            (a.order(), b.order(), c.order(), d.order(), e.order()),
            (2, 5, 961, 3, 7),
            "component orders"
        );

        // dashed pairs of the 5-cycle orientation act fixed-point-freely
        for (actor, target, label) in [
            (&a, &b, "A on B"),
            (&a, &e, "A on E"),
            (&d, &e, "D on E"),
            (&d, &c, "D on C"),
            (&b, &c, "B on C"),
        ] {
            assert_eq!(
                fixed_point_witness(actor, target).unwrap_or_else(|err| {
                    panic!("{label}: normalization failed: {err}")
                }),
                None,
                "{label} must be fixed-point-free"
            );
        }
        // joint fixed-point-freeness of <B,D> on C and <A,D> on E
        let bd = sub(&[b_el, d_el]);
        let ad = sub(&[a_el, d_el]);
        assert_eq!(bd.order(), 15);
        assert_eq!(ad.order(), 6);
        assert_eq!(fixed_point_witness(&bd, &c).unwrap(), None, "<B,D> on C");
        assert_eq!(fixed_point_witness(&ad, &e).unwrap(), None, "<A,D> on E");

        // record the positional component names
        for (name, handle) in [("A", &a), ("B", &b), ("C", &c), ("D", &d), ("E", &e)] {
            meta.insert(
                name.to_string(),
                SubgroupMeta {
                    elements: handle.elements.clone(),
                    generators: handle.generators.clone(),
                },
            );
        }
    }
    g.set_metadata(meta);
    Ok(g)
}

/// Builtin fixture aliases understood by the CLI and the default corpus.
pub fn builtin_aliases() -> Vec<&'static str> {
    vec!["s3", "s4", "a4", "a5", "s5", "d8", "q8", "z6", "f21", "f42", "qian:3,7", "five-cycle"]
}

/// Spec tree for an alias like `s4`, `qian:3,7`, or `five-cycle`.
pub fn alias_spec(alias: &str) -> Result<GroupSpec, BuildError> {
    let frobenius = |n: u64, k: u64, gen: u64| GroupSpec::Frobenius {
        kernel: Box::new(GroupSpec::Cyclic { n }),
        complement: Box::new(GroupSpec::Cyclic { n: k }),
        action: ActionSpec::Matrix { matrices: vec![vec![vec![gen]]] },
    };
    match alias {
        "s3" => Ok(GroupSpec::Symmetric { degree: 3 }),
        "s4" => Ok(GroupSpec::Symmetric { degree: 4 }),
        "s5" => Ok(GroupSpec::Symmetric { degree: 5 }),
        "a4" => Ok(GroupSpec::Alternating { degree: 4 }),
        "a5" => Ok(GroupSpec::Alternating { degree: 5 }),
        "z6" => Ok(GroupSpec::Cyclic { n: 6 }),
        "d8" => Ok(GroupSpec::Semidirect {
            kernel: Box::new(GroupSpec::Cyclic { n: 4 }),
            complement: Box::new(GroupSpec::Cyclic { n: 2 }),
            // inversion: the kernel generator maps to its cube
            action: ActionSpec::Automorphism { images: vec![vec![vec![0, 0, 0]]] },
        }),
        "q8" => Ok(GroupSpec::PermutationGroup {
            degree: 8,
            // left multiplication by i and j on (1, -1, i, -i, j, -j, k, -k)
            generators: vec![vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
        }),
        "f21" => Ok(frobenius(7, 3, 2)),
        "f42" => Ok(frobenius(7, 6, 3)),
        "five-cycle" => Ok(five_cycle_spec()),
        other => {
            if let Some(args) = other.strip_prefix("qian:") {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 2 {
                    return Err(BuildError::Parse(format!("expected qian:q,r, got {other}")));
                }
                let q = parts[0].trim().parse::<u64>().map_err(|e| BuildError::Parse(e.to_string()))?;
                let r = parts[1].trim().parse::<u64>().map_err(|e| BuildError::Parse(e.to_string()))?;
                qian_family_spec(q, r)
            } else {
                Err(BuildError::Parse(format!("unknown alias {other}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ELEMENT_LIMIT as LIMIT;

    #[test]
    fn builds_basic_fixtures() {
        for (alias, order) in [
            ("s3", 6),
            ("s4", 24),
            ("a4", 12),
            ("a5", 60),
            ("s5", 120),
            ("d8", 8),
            ("q8", 8),
            ("z6", 6),
            ("f21", 21),
            ("f42", 42),
        ] {
            let g = build(&alias_spec(alias).unwrap(), LIMIT).unwrap();
            assert_eq!(g.order(), order, "{alias}");
        }
    }

    #[test]
    fn q8_is_the_quaternion_group() {
        let g = build(&alias_spec("q8").unwrap(), LIMIT).unwrap();
        assert_eq!(g.order(), 8);
        let orders: Vec<u64> = (0..8).map(|i| g.element_order(i)).collect();
        let count = |o: u64| orders.iter().filter(|&&x| x == o).count();
        // unique involution distinguishes Q8 from D8
        assert_eq!(count(2), 1);
        assert_eq!(count(4), 6);
    }

    #[test]
    fn d8_has_five_classes() {
        let g = build(&alias_spec("d8").unwrap(), LIMIT).unwrap();
        assert_eq!(g.conjugacy().class_count(), 5);
    }

    #[test]
    fn build_is_deterministic_for_equal_digests() {
        let s1 = alias_spec("five-cycle").unwrap();
        let s2 = five_cycle_spec();
        assert_eq!(s1.digest(), s2.digest());
        let a = build(&alias_spec("f21").unwrap(), LIMIT).unwrap();
        let b = build(&alias_spec("f21").unwrap(), LIMIT).unwrap();
        assert_eq!(a.universe().unwrap(), b.universe().unwrap());
    }

    #[test]
    fn make_frobenius_examples() {
        let g = make_frobenius(
            GroupSpec::Cyclic { n: 7 },
            GroupSpec::Cyclic { n: 3 },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
            LIMIT,
        )
        .unwrap();
        assert_eq!(g.order(), 21);

        let g = make_frobenius(
            GroupSpec::Cyclic { n: 7 },
            GroupSpec::Cyclic { n: 2 },
            ActionSpec::Matrix { matrices: vec![vec![vec![6]]] },
            LIMIT,
        )
        .unwrap();
        assert_eq!(g.order(), 14);

        // coordinate swap on Z3 x Z3 fixes the diagonal
        let err = make_frobenius(
            GroupSpec::ElementaryAbelian { p: 3, k: 2 },
            GroupSpec::Cyclic { n: 2 },
            ActionSpec::Matrix { matrices: vec![vec![vec![0, 1, 1, 0]]] },
            LIMIT,
        )
        .unwrap_err();
        assert!(matches!(err, BuildError::NotFixedPointFree { .. }));
    }

    #[test]
    fn make_two_frobenius_s4_copy() {
        // (V4, Z3, Z2) with the S4 actions: Z3 cycles the involutions, the
        // top transposition swaps two of them and inverts the 3-cycle
        let g = make_two_frobenius(
            GroupSpec::ElementaryAbelian { p: 2, k: 2 },
            GroupSpec::Cyclic { n: 3 },
            GroupSpec::Cyclic { n: 2 },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
            ActionSpec::Matrix {
                matrices: vec![vec![vec![0, 1, 1, 1]], vec![vec![0, 1, 1, 0]]],
            },
            LIMIT,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn impossible_order_42_two_frobenius_is_rejected() {
        // an order-3 action on Z7 cannot coexist with an inverted middle:
        // conjugation in Aut(Z7) is abelian, so the relations force a larger
        // closure and the build detects a non-homomorphism
        let err = make_two_frobenius(
            GroupSpec::Cyclic { n: 7 },
            GroupSpec::Cyclic { n: 3 },
            GroupSpec::Cyclic { n: 2 },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]], vec![vec![1]]] },
            LIMIT,
        )
        .unwrap_err();
        assert!(matches!(err, BuildError::ActionNotHomomorphism { .. }));
    }

    #[test]
    fn two_frobenius_7_3_2_witness_exists_at_order_294() {
        // bottom Z7^2 with B acting as diag(2, 2^{-1}) and the top swapping
        // the eigenspaces
        let g = make_two_frobenius(
            GroupSpec::ElementaryAbelian { p: 7, k: 2 },
            GroupSpec::Cyclic { n: 3 },
            GroupSpec::Cyclic { n: 2 },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
            ActionSpec::Matrix {
                matrices: vec![vec![vec![2, 0, 0, 4]], vec![vec![0, 1, 1, 0]]],
            },
            LIMIT,
        )
        .unwrap();
        assert_eq!(g.order(), 294);
    }

    #[test]
    fn frobenius_then_whole_group_frobenius_mismatch() {
        // Z5 ⋊ Z4 with trivial top: the assembled group is plain Frobenius
        let err = make_two_frobenius(
            GroupSpec::Cyclic { n: 5 },
            GroupSpec::Cyclic { n: 4 },
            GroupSpec::Cyclic { n: 1 },
            ActionSpec::Matrix { matrices: vec![] },
            ActionSpec::Matrix { matrices: vec![vec![vec![2]]] },
            LIMIT,
        )
        .unwrap_err();
        assert!(matches!(err, BuildError::StructureMismatch { .. }));
    }

    #[test]
    fn qian_preconditions() {
        assert!(matches!(
            qian_family_spec(3, 5),
            Err(BuildError::PreconditionViolated(_))
        ));
        assert!(matches!(
            qian_family_spec(4, 7),
            Err(BuildError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn qian_3_7_builds_with_order_86436() {
        let g = qian_family(3, 7, LIMIT).unwrap();
        assert_eq!(g.order(), 86_436);
    }

    #[test]
    fn five_cycle_builds_with_metadata() {
        let g = five_cycle_instance(LIMIT).unwrap();
        assert_eq!(g.order(), 201_810);
        let meta = g.metadata();
        for (name, order) in [("A", 2), ("B", 5), ("C", 961), ("D", 3), ("E", 7)] {
            assert_eq!(meta[name].elements.len() as u64, order, "{name}");
        }
    }
}
