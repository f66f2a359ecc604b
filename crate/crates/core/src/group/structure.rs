//! Structural subgroups (derived series, Sylow, p-cores, Fitting, Hall) and
//! the Frobenius / 2-Frobenius classifier.

use super::subgroup::{
    closure, closure_bounded, generated_subgroup, is_normal_set, normal_closure,
    small_generating_set, SubgroupHandle,
};
use super::{Backend, FiniteGroup};
use crate::error::GroupError;
use crate::modular::{factorize, gcd, prime_divisors};

/// Derived series G ⊇ G' ⊇ G'' ... until stable, plus the solvability verdict.
pub fn derived_series(g: &FiniteGroup) -> (Vec<SubgroupHandle>, bool) {
    let mut chain = vec![SubgroupHandle::full(g)];
    let mut buf = Vec::new();
    loop {
        let current = chain.last().unwrap();
        let gens = &current.generators;
        let mut commutators = Vec::new();
        for &x in gens {
            for &y in gens {
                let c = g.mul_buf(
                    g.mul_buf(g.inv(x), g.inv(y), &mut buf),
                    g.mul_buf(x, y, &mut buf),
                    &mut buf,
                );
                if c != 0 {
                    commutators.push(c);
                }
            }
        }
        let next = normal_closure(g, &commutators, gens);
        if next.order() == current.order() {
            return (chain, next.is_trivial());
        }
        let trivial = next.is_trivial();
        chain.push(next);
        if trivial {
            return (chain, true);
        }
    }
}

/// Largest power p^a with p^a | n.
fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut m = n;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    part
}

fn is_p_power(mut o: u64, p: u64) -> bool {
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

/// A Sylow p-subgroup: seeded with a maximal-order p-element, then repeatedly
/// extended by p-power-order normalizer elements until the full p-part of |G|
/// is reached. Candidates are scanned in universe order, so the result is
/// deterministic. Memoized per group.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<SubgroupHandle, GroupError> {
    if let Some(data) = g.inner.sylow_memo.lock().unwrap().get(&p) {
        return Ok(SubgroupHandle {
            ambient: g.clone(),
            elements: data.elements.clone(),
            generators: data.generators.clone(),
            normal: data.normal,
        });
    }
    let target = p_part(g.order(), p);
    assert!(target > 1, "p must divide the group order");
    let n = g.order() as u32;
    let orders = g.element_orders();

    // maximal p-power order element
    let mut seed = 0u32;
    let mut best = 1u64;
    for i in 0..n {
        let o = orders[i as usize] as u64;
        if o > best && is_p_power(o, p) {
            best = o;
            seed = i;
            if best == target {
                break;
            }
        }
    }
    let mut gens = vec![seed];
    let mut elems = closure(g, &gens);
    let mut buf = Vec::new();
    while (elems.len() as u64) < target {
        // scan the normalizer for a p-element outside the current subgroup
        let mut extended = false;
        'scan: for cand in 0..n {
            if !is_p_power(orders[cand as usize] as u64, p)
                || elems.binary_search(&cand).is_ok()
            {
                continue;
            }
            // normalizing: cand s cand^{-1} in P for every generator s
            let ci = g.inv(cand);
            for &s in &gens {
                let t = g.mul_buf(g.mul_buf(cand, s, &mut buf), ci, &mut buf);
                if elems.binary_search(&t).is_err() {
                    continue 'scan;
                }
            }
            gens.push(cand);
            elems = closure(g, &gens);
            extended = true;
            break;
        }
        if !extended {
            return Err(GroupError::InternalSearchFailure {
                p,
                reached: elems.len() as u64,
                target,
            });
        }
    }
    debug_assert_eq!(elems.len() as u64, target);
    let normal = is_normal_set(g, &elems, &gens);
    g.inner.sylow_memo.lock().unwrap().insert(
        p,
        super::SylowData { elements: elems.clone(), generators: gens.clone(), normal },
    );
    Ok(SubgroupHandle { ambient: g.clone(), elements: elems, generators: gens, normal })
}

/// O_p(G): intersect a Sylow p-subgroup with its conjugates under the group's
/// generators until the set stabilizes; the fixpoint is the p-core.
pub fn p_core(g: &FiniteGroup, p: u64) -> Result<SubgroupHandle, GroupError> {
    let sylow = sylow_subgroup(g, p)?;
    let mut current = sylow.elements;
    let mut buf = Vec::new();
    loop {
        let mut changed = false;
        for &c in g.generators() {
            let ci = g.inv(c);
            let mut conj: Vec<u32> = current
                .iter()
                .map(|&x| g.mul_buf(g.mul_buf(c, x, &mut buf), ci, &mut buf))
                .collect();
            conj.sort_unstable();
            let inter: Vec<u32> = intersect_sorted(&current, &conj);
            if inter.len() != current.len() {
                current = inter;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let generators = small_generating_set(g, &current);
    let normal = is_normal_set(g, &current, &generators);
    assert!(normal, "p-core fixpoint must be normal");
    Ok(SubgroupHandle { ambient: g.clone(), elements: current, generators, normal })
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Fit(G): the subgroup generated by all p-cores. The order is asserted to be
/// the product of the p-core orders.
pub fn fitting_subgroup(g: &FiniteGroup) -> Result<SubgroupHandle, GroupError> {
    let mut gens = Vec::new();
    let mut expected = 1u64;
    for p in g.primes() {
        let core = p_core(g, p)?;
        expected *= core.order();
        gens.extend(core.generators);
    }
    let handle = generated_subgroup(g, &gens);
    assert_eq!(handle.order(), expected, "Fitting subgroup must be the product of the p-cores");
    assert!(handle.normal);
    Ok(handle)
}

/// First fixed point (actor element, target element) of the conjugation action,
/// or None when the action is fixed-point-free. Errors if `actor` does not
/// normalize `target`.
pub fn fixed_point_witness(
    actor: &SubgroupHandle,
    target: &SubgroupHandle,
) -> Result<Option<(u32, u32)>, GroupError> {
    assert!(actor.ambient.same_group(&target.ambient), "handles must share an ambient group");
    let g = &actor.ambient;
    let mut buf = Vec::new();
    for &a in &actor.generators {
        let ai = g.inv(a);
        for &t in &target.generators {
            let c = g.mul_buf(g.mul_buf(a, t, &mut buf), ai, &mut buf);
            if !target.contains(c) {
                return Err(GroupError::NotNormalized { actor: a, target: t });
            }
        }
    }
    for &a in &actor.elements {
        if a == 0 {
            continue;
        }
        let ai = g.inv(a);
        for &t in &target.elements {
            if t == 0 {
                continue;
            }
            if g.mul_buf(g.mul_buf(a, t, &mut buf), ai, &mut buf) == t {
                return Ok(Some((a, t)));
            }
        }
    }
    Ok(None)
}

/// True iff every non-identity element of `actor` centralizes no non-identity
/// element of `target`.
pub fn is_fixed_point_free(
    actor: &SubgroupHandle,
    target: &SubgroupHandle,
) -> Result<bool, GroupError> {
    Ok(fixed_point_witness(actor, target)?.is_none())
}

/// Quotient G/N by a normal subgroup, realized by coset-representative tables
/// (least-index representatives).
pub fn quotient(g: &FiniteGroup, n: &SubgroupHandle) -> Result<FiniteGroup, GroupError> {
    assert!(n.ambient.same_group(g));
    if !n.normal || !is_normal_set(g, &n.elements, &n.generators) {
        return Err(GroupError::QuotientFailure { order: n.order() });
    }
    let size = g.order() as usize;
    let mut coset_of = vec![u32::MAX; size];
    let mut reps = Vec::new();
    let mut buf = Vec::new();
    for x in 0..size as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &k in &n.elements {
            let y = g.mul_buf(x, k, &mut buf);
            coset_of[y as usize] = c;
        }
    }
    let gens: Vec<u32> = g.generators().iter().map(|&x| coset_of[x as usize]).collect();
    let order = reps.len() as u64;
    Ok(FiniteGroup::from_backend(Backend::Quotient { parent: g.clone(), reps, coset_of }, order, gens))
}

/// Hall {p,q}-subgroup search. Tries construction-metadata Sylow products
/// first, then closures of P with conjugates of Q, scanning conjugators in
/// universe order up to `retries` attempts.
pub fn hall_pq(
    g: &FiniteGroup,
    p: u64,
    q: u64,
    retries: usize,
) -> Result<SubgroupHandle, GroupError> {
    hall_pq_candidates(g, p, q, retries, 1)?
        .into_iter()
        .next()
        .ok_or(GroupError::HallNotFound { p, q, retries })
}

/// Up to `max_found` distinct Hall {p,q}-subgroups discovered within the retry
/// budget; used by the orientation well-definedness checks.
pub fn hall_pq_candidates(
    g: &FiniteGroup,
    p: u64,
    q: u64,
    retries: usize,
    max_found: usize,
) -> Result<Vec<SubgroupHandle>, GroupError> {
    assert!(p != q);
    let target = p_part(g.order(), p) * p_part(g.order(), q);
    let mut found: Vec<SubgroupHandle> = Vec::new();
    let push = |elems: Vec<u32>, gens: Vec<u32>, found: &mut Vec<SubgroupHandle>| {
        if found.iter().any(|h| h.elements == elems) {
            return;
        }
        let normal = is_normal_set(g, &elems, &gens);
        found.push(SubgroupHandle { ambient: g.clone(), elements: elems, generators: gens, normal });
    };

    // metadata fast path: named full Sylow subgroups for p and q
    let p_target = p_part(g.order(), p);
    let q_target = p_part(g.order(), q);
    let mut meta_p = Vec::new();
    let mut meta_q = Vec::new();
    for meta in g.metadata().values() {
        let len = meta.elements.len() as u64;
        if len == p_target && len > 1 {
            meta_p.push(meta);
        }
        if len == q_target && len > 1 {
            meta_q.push(meta);
        }
    }
    for mp in &meta_p {
        for mq in &meta_q {
            let gens: Vec<u32> =
                mp.generators.iter().chain(mq.generators.iter()).copied().collect();
            if let Some(elems) = closure_bounded(g, &gens, target as usize) {
                if elems.len() as u64 == target {
                    push(elems, gens, &mut found);
                    if found.len() >= max_found {
                        return Ok(found);
                    }
                }
            }
        }
    }

    let sp = sylow_subgroup(g, p)?;
    let sq = sylow_subgroup(g, q)?;
    let direct: Vec<u32> =
        sp.generators.iter().chain(sq.generators.iter()).copied().collect();
    let mut last: Vec<u32> = Vec::new();
    if let Some(elems) = closure_bounded(g, &direct, target as usize) {
        if elems.len() as u64 == target {
            push(elems, direct, &mut found);
            if found.len() >= max_found {
                return Ok(found);
            }
        } else {
            last = elems;
        }
    }
    let mut attempts = 0usize;
    let mut buf = Vec::new();
    for cand in 0..g.order() as u32 {
        if attempts >= retries || found.len() >= max_found {
            break;
        }
        if last.binary_search(&cand).is_ok() {
            continue;
        }
        attempts += 1;
        let ci = g.inv(cand);
        let conj_q: Vec<u32> = sq
            .generators
            .iter()
            .map(|&x| g.mul_buf(g.mul_buf(cand, x, &mut buf), ci, &mut buf))
            .collect();
        let gens: Vec<u32> = sp.generators.iter().copied().chain(conj_q).collect();
        match closure_bounded(g, &gens, target as usize) {
            Some(elems) if elems.len() as u64 == target => {
                push(elems, gens, &mut found);
            }
            Some(elems) => last = elems,
            None => {}
        }
    }
    if found.is_empty() {
        Err(GroupError::HallNotFound { p, q, retries })
    } else {
        Ok(found)
    }
}

/// Structural classification of a solvable-by-construction candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobeniusClass {
    Frobenius {
        kernel_primes: Vec<u64>,
        complement_primes: Vec<u64>,
        kernel_order: u64,
    },
    TwoFrobenius {
        /// Layer primes (bottom, middle, top) per the typed definition.
        kind: (u64, u64, u64),
    },
    Neither,
}

impl FrobeniusClass {
    pub fn describe(&self) -> String {
        match self {
            FrobeniusClass::Frobenius { kernel_primes, complement_primes, .. } => format!(
                "Frobenius(kernel primes {:?}, complement primes {:?})",
                kernel_primes, complement_primes
            ),
            FrobeniusClass::TwoFrobenius { kind } => {
                format!("TwoFrobenius(type ({}, {}, {}))", kind.0, kind.1, kind.2)
            }
            FrobeniusClass::Neither => "NeitherStructure".to_string(),
        }
    }
}

/// Classify a Hall {p,q}-subgroup per the orientation rules. The order of `h`
/// must be divisible by exactly the primes p and q.
pub fn frobenius_structure(
    h: &SubgroupHandle,
    p: u64,
    q: u64,
) -> Result<FrobeniusClass, GroupError> {
    let primes = prime_divisors(h.order());
    assert!(
        primes.iter().all(|&r| r == p || r == q) && primes.len() == 2,
        "expected a {{p,q}}-group with both primes present"
    );
    classify_structure(&h.as_group())
}

/// Kernel-chain classification via K1 = Fit(H) and K2 = the preimage of
/// Fit(H/K1): Frobenius when K2 = H (with a fixed-point-free Hall complement on
/// K1), 2-Frobenius when K1 < K2 < H with both quotient steps Frobenius.
pub fn classify_structure(hg: &FiniteGroup) -> Result<FrobeniusClass, GroupError> {
    let k1 = fitting_subgroup(hg)?;
    if k1.is_trivial() || k1.order() == hg.order() {
        // trivial Fitting cannot arise for these solvable candidates; nilpotent
        // groups are neither Frobenius nor 2-Frobenius
        return Ok(FrobeniusClass::Neither);
    }
    let q1 = quotient(hg, &k1)?;
    let fit_q = fitting_subgroup(&q1)?;
    let k2 = preimage(hg, &q1, &k1, &fit_q);

    if k2.order() == hg.order() {
        // Frobenius candidate with kernel K1
        let comp_order = hg.order() / k1.order();
        if gcd(comp_order, k1.order()) != 1 {
            return Ok(FrobeniusClass::Neither);
        }
        let Some(complement) = hall_complement(hg, comp_order) else {
            return Ok(FrobeniusClass::Neither);
        };
        if fixed_point_witness(&complement, &k1)?.is_some() {
            return Ok(FrobeniusClass::Neither);
        }
        return Ok(FrobeniusClass::Frobenius {
            kernel_primes: prime_divisors(k1.order()),
            complement_primes: prime_divisors(comp_order),
            kernel_order: k1.order(),
        });
    }

    // 2-Frobenius candidate: K1 < K2 < H with prime-power layers.
    let bottom = single_prime(k1.order());
    let middle = single_prime(k2.order() / k1.order());
    let top = single_prime(hg.order() / k2.order());
    let (Some(pb), Some(pm), Some(pt)) = (bottom, middle, top) else {
        return Ok(FrobeniusClass::Neither);
    };
    // M = K2 Frobenius with kernel K1
    let k2g = k2.as_group();
    let k1_in_k2 = restrict(&k2, &k2g, &k1);
    let comp_m = match sylow_subgroup(&k2g, pm) {
        Ok(s) => s,
        Err(_) => return Ok(FrobeniusClass::Neither),
    };
    if fixed_point_witness(&comp_m, &k1_in_k2).map(|w| w.is_some()).unwrap_or(true) {
        return Ok(FrobeniusClass::Neither);
    }
    // H/K1 Frobenius with kernel K2/K1 = Fit(H/K1)
    let comp_top = match sylow_subgroup(&q1, pt) {
        Ok(s) => s,
        Err(_) => return Ok(FrobeniusClass::Neither),
    };
    if fixed_point_witness(&comp_top, &fit_q).map(|w| w.is_some()).unwrap_or(true) {
        return Ok(FrobeniusClass::Neither);
    }
    Ok(FrobeniusClass::TwoFrobenius { kind: (pb, pm, pt) })
}

fn single_prime(n: u64) -> Option<u64> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0].0)
    } else {
        None
    }
}

/// Preimage in `hg` of a subgroup of the quotient `q1 = hg / k1`.
fn preimage(
    hg: &FiniteGroup,
    q1: &FiniteGroup,
    k1: &SubgroupHandle,
    sub_of_quotient: &SubgroupHandle,
) -> SubgroupHandle {
    let Backend::Quotient { reps, .. } = &q1.inner.backend else {
        unreachable!("quotient backend expected")
    };
    let mut gens = k1.generators.clone();
    gens.extend(sub_of_quotient.generators.iter().map(|&c| reps[c as usize]));
    generated_subgroup(hg, &gens)
}

/// Rewrites a handle on the ambient group as a handle on `og`, the
/// subgroup-as-group built from `outer`.
fn restrict(outer: &SubgroupHandle, og: &FiniteGroup, inner: &SubgroupHandle) -> SubgroupHandle {
    let og = og.clone();
    let map = |idx: u32| outer.elements.binary_search(&idx).expect("contained") as u32;
    SubgroupHandle {
        ambient: og,
        elements: inner.elements.iter().map(|&x| map(x)).collect(),
        generators: inner.generators.iter().map(|&x| map(x)).collect(),
        normal: false,
    }
}

/// Fixed-point-free Hall complement of the Fitting subgroup, if one is found.
fn hall_complement(hg: &FiniteGroup, comp_order: u64) -> Option<SubgroupHandle> {
    let primes = prime_divisors(comp_order);
    let sylows: Vec<SubgroupHandle> =
        primes.iter().filter_map(|&r| sylow_subgroup(hg, r).ok()).collect();
    if sylows.len() != primes.len() {
        return None;
    }
    if primes.len() == 1 {
        return Some(sylows.into_iter().next().unwrap());
    }
    // try the straight product, then conjugates of the later factors
    let direct: Vec<u32> =
        sylows.iter().flat_map(|s| s.generators.iter().copied()).collect();
    if let Some(elems) = closure_bounded(hg, &direct, comp_order as usize) {
        if elems.len() as u64 == comp_order {
            let normal = is_normal_set(hg, &elems, &direct);
            return Some(SubgroupHandle {
                ambient: hg.clone(),
                elements: elems,
                generators: direct,
                normal,
            });
        }
    }
    let mut buf = Vec::new();
    for cand in 0..hg.order() as u32 {
        let ci = hg.inv(cand);
        let mut gens: Vec<u32> = sylows[0].generators.clone();
        for s in &sylows[1..] {
            gens.extend(
                s.generators
                    .iter()
                    .map(|&x| hg.mul_buf(hg.mul_buf(cand, x, &mut buf), ci, &mut buf)),
            );
        }
        if let Some(elems) = closure_bounded(hg, &gens, comp_order as usize) {
            if elems.len() as u64 == comp_order {
                let normal = is_normal_set(hg, &elems, &gens);
                return Some(SubgroupHandle {
                    ambient: hg.clone(),
                    elements: elems,
                    generators: gens,
                    normal,
                });
            }
        }
        if cand > 4096 {
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::tests::symmetric;
    use super::super::{FiniteGroup, DEFAULT_ELEMENT_LIMIT};
    use super::*;
    use crate::element::{Element, Layout};

    fn alternating5() -> FiniteGroup {
        FiniteGroup::from_generators(
            Layout::permutation(5),
            vec![
                Element::from_vec(vec![1, 2, 0, 3, 4]),
                Element::from_vec(vec![1, 2, 3, 4, 0]),
            ],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap()
    }

    fn cyclic6() -> FiniteGroup {
        FiniteGroup::from_generators(
            Layout::permutation(6),
            vec![Element::from_vec(vec![1, 2, 3, 4, 5, 0])],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap()
    }

    fn f21() -> FiniteGroup {
        FiniteGroup::from_generators(
            Layout::affine(7, 1),
            vec![Element::from_vec(vec![1, 1]), Element::from_vec(vec![0, 2])],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap()
    }

    #[test]
    fn derived_series_s4() {
        let g = symmetric(4);
        let (chain, solvable) = derived_series(&g);
        let orders: Vec<u64> = chain.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(solvable);
    }

    #[test]
    fn derived_series_a5_not_solvable() {
        let g = alternating5();
        assert_eq!(g.order(), 60);
        let (chain, solvable) = derived_series(&g);
        assert!(!solvable);
        assert_eq!(chain.last().unwrap().order(), 60);
    }

    #[test]
    fn derived_series_z6() {
        let (chain, solvable) = derived_series(&cyclic6());
        let orders: Vec<u64> = chain.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![6, 1]);
        assert!(solvable);
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow_subgroup(&symmetric(4), 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&cyclic6(), 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&alternating5(), 2).unwrap().order(), 4);
    }

    #[test]
    fn p_cores() {
        assert_eq!(p_core(&symmetric(4), 2).unwrap().order(), 4);
        assert_eq!(p_core(&alternating5(), 2).unwrap().order(), 1);
        assert_eq!(p_core(&cyclic6(), 2).unwrap().order(), 2);
    }

    #[test]
    fn fitting_subgroups() {
        assert_eq!(fitting_subgroup(&symmetric(4)).unwrap().order(), 4);
        assert_eq!(fitting_subgroup(&alternating5()).unwrap().order(), 1);
        assert_eq!(fitting_subgroup(&cyclic6()).unwrap().order(), 6);
    }

    #[test]
    fn fitting_subgroup_is_nilpotent() {
        // each Sylow subgroup of Fit(G) normal in it, and the derived series terminates
        for g in [symmetric(4), f21()] {
            let fit = fitting_subgroup(&g).unwrap();
            let fg = fit.as_group();
            let (_, solvable) = derived_series(&fg);
            assert!(solvable);
            for p in fg.primes() {
                assert!(sylow_subgroup(&fg, p).unwrap().normal);
            }
        }
    }

    #[test]
    fn fixed_point_freeness() {
        let g = f21();
        // kernel Z7 = translations, complement Z3 = <x -> 2x>
        let t = g.find(&Element::from_vec(vec![1, 1])).unwrap();
        let m = g.find(&Element::from_vec(vec![0, 2])).unwrap();
        let kernel = generated_subgroup(&g, &[t]);
        let comp = generated_subgroup(&g, &[m]);
        assert!(is_fixed_point_free(&comp, &kernel).unwrap());
        // the kernel does not normalize the complement
        assert!(matches!(
            is_fixed_point_free(&kernel, &comp),
            Err(GroupError::NotNormalized { .. })
        ));
    }

    #[test]
    fn trivial_action_has_fixed_points() {
        // Z2 x Z3: the Z2 factor acts trivially on the Z3 factor
        let g = cyclic6();
        let x = (0..6u32).find(|&i| g.element_order(i) == 2).unwrap();
        let y = (0..6u32).find(|&i| g.element_order(i) == 3).unwrap();
        let a = generated_subgroup(&g, &[x]);
        let b = generated_subgroup(&g, &[y]);
        assert!(!is_fixed_point_free(&a, &b).unwrap());
    }

    #[test]
    fn hall_in_s4_is_everything() {
        let g = symmetric(4);
        let h = hall_pq(&g, 2, 3, 64).unwrap();
        assert_eq!(h.order(), 24);
    }

    #[test]
    fn a5_has_no_hall_2_5() {
        let g = alternating5();
        assert!(matches!(hall_pq(&g, 2, 5, 64), Err(GroupError::HallNotFound { .. })));
    }

    #[test]
    fn classify_s3_frobenius() {
        let g = symmetric(3);
        let h = SubgroupHandle::full(&g);
        let c = frobenius_structure(&h, 2, 3).unwrap();
        assert_eq!(
            c,
            FrobeniusClass::Frobenius {
                kernel_primes: vec![3],
                complement_primes: vec![2],
                kernel_order: 3
            }
        );
    }

    #[test]
    fn classify_s4_two_frobenius() {
        let g = symmetric(4);
        let h = SubgroupHandle::full(&g);
        let c = frobenius_structure(&h, 2, 3).unwrap();
        assert_eq!(c, FrobeniusClass::TwoFrobenius { kind: (2, 3, 2) });
    }

    #[test]
    fn classify_z6_neither() {
        let g = cyclic6();
        let h = SubgroupHandle::full(&g);
        assert_eq!(frobenius_structure(&h, 2, 3).unwrap(), FrobeniusClass::Neither);
    }

    #[test]
    fn classify_f21_frobenius_kernel_7() {
        let g = f21();
        let h = SubgroupHandle::full(&g);
        let c = frobenius_structure(&h, 3, 7).unwrap();
        assert_eq!(
            c,
            FrobeniusClass::Frobenius {
                kernel_primes: vec![7],
                complement_primes: vec![3],
                kernel_order: 7
            }
        );
    }

    #[test]
    fn quotient_s4_by_v4_is_s3_shaped() {
        let g = symmetric(4);
        let v4 = p_core(&g, 2).unwrap();
        let q = quotient(&g, &v4).unwrap();
        assert_eq!(q.order(), 6);
        let c = q.conjugacy();
        let sizes: Vec<u64> = c.classes.iter().map(|x| x.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = symmetric(4);
        let t = generated_subgroup(&g, &[g.find(&Element::from_vec(vec![1, 0, 2, 3])).unwrap()]);
        assert!(matches!(quotient(&g, &t), Err(GroupError::QuotientFailure { .. })));
    }
}
