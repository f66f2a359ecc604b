//! Subgroup closures and handles.

use super::{Backend, FiniteGroup};

/// A subgroup of an ambient group, held as an ascending element index set.
#[derive(Clone)]
pub struct SubgroupHandle {
    pub(crate) ambient: FiniteGroup,
    /// Ambient indices, ascending; always contains 0 (the identity).
    pub elements: Vec<u32>,
    /// A generating set (ambient indices).
    pub generators: Vec<u32>,
    /// Whether conjugation by every ambient generator preserves the set.
    pub normal: bool,
}

impl SubgroupHandle {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Whole ambient group as a handle.
    pub fn full(g: &FiniteGroup) -> Self {
        Self {
            ambient: g.clone(),
            elements: (0..g.order() as u32).collect(),
            generators: g.generators().to_vec(),
            normal: true,
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self { ambient: g.clone(), elements: vec![0], generators: Vec::new(), normal: true }
    }

    /// View the subgroup as a group in its own right, sharing the parent's
    /// element data. Index i corresponds to `self.elements[i]`.
    pub fn as_group(&self) -> FiniteGroup {
        if self.elements.len() as u64 == self.ambient.order() {
            return self.ambient.clone();
        }
        let gens: Vec<u32> = self
            .generators
            .iter()
            .map(|g| self.elements.binary_search(g).expect("generator in subgroup") as u32)
            .collect();
        FiniteGroup::from_backend(
            Backend::Sub { parent: self.ambient.clone(), elems: self.elements.clone() },
            self.elements.len() as u64,
            gens,
        )
    }

    /// Set equality against another handle of the same ambient group.
    pub fn same_elements(&self, other: &SubgroupHandle) -> bool {
        self.elements == other.elements
    }
}

impl std::fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupHandle(order {}, normal: {})", self.order(), self.normal)
    }
}

/// Closure of `seeds` under multiplication, as ascending ambient indices.
pub(crate) fn closure(g: &FiniteGroup, seeds: &[u32]) -> Vec<u32> {
    closure_bounded(g, seeds, usize::MAX).expect("unbounded closure")
}

/// Closure that aborts with `None` once more than `bound` elements appear.
pub(crate) fn closure_bounded(g: &FiniteGroup, seeds: &[u32], bound: usize) -> Option<Vec<u32>> {
    let n = g.order() as usize;
    let mut member = vec![false; n];
    member[0] = true;
    let mut list: Vec<u32> = vec![0];
    let mut gens: Vec<u32> = seeds.iter().copied().filter(|&s| s != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    for &s in &gens {
        if !member[s as usize] {
            member[s as usize] = true;
            list.push(s);
        }
    }
    if list.len() > bound {
        return None;
    }
    let mut buf = Vec::new();
    let mut pos = 0;
    while pos < list.len() {
        let x = list[pos];
        for &s in &gens {
            let y = g.mul_buf(x, s, &mut buf);
            if !member[y as usize] {
                member[y as usize] = true;
                list.push(y);
                if list.len() > bound {
                    return None;
                }
            }
        }
        pos += 1;
    }
    list.sort_unstable();
    Some(list)
}

/// Does conjugation by every ambient generator preserve the set generated by `gens`?
pub(crate) fn is_normal_set(g: &FiniteGroup, elements: &[u32], gens: &[u32]) -> bool {
    let mut buf = Vec::new();
    for &c in g.generators() {
        let ci = g.inv(c);
        for &s in gens {
            let t = g.mul_buf(g.mul_buf(c, s, &mut buf), ci, &mut buf);
            if elements.binary_search(&t).is_err() {
                return false;
            }
        }
    }
    true
}

/// Subgroup generated by `seeds`; also reports normality in the ambient group.
pub fn generated_subgroup(g: &FiniteGroup, seeds: &[u32]) -> SubgroupHandle {
    let elements = closure(g, seeds);
    let mut generators: Vec<u32> = seeds.iter().copied().filter(|&s| s != 0).collect();
    generators.sort_unstable();
    generators.dedup();
    let normal = is_normal_set(g, &elements, &generators);
    SubgroupHandle { ambient: g.clone(), elements, generators, normal }
}

/// Greedy small generating set for a closed element set.
pub(crate) fn small_generating_set(g: &FiniteGroup, elements: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut closed: Vec<u32> = vec![0];
    for &x in elements {
        if closed.binary_search(&x).is_err() {
            gens.push(x);
            closed = closure(g, &gens);
            if closed.len() == elements.len() {
                break;
            }
        }
    }
    gens
}

/// Normal closure of `seeds` under conjugation by `conjugators`, inside the
/// subgroup context those conjugators generate.
pub(crate) fn normal_closure(g: &FiniteGroup, seeds: &[u32], conjugators: &[u32]) -> SubgroupHandle {
    let mut gens: Vec<u32> = seeds.iter().copied().filter(|&s| s != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut buf = Vec::new();
    loop {
        let set = closure(g, &gens);
        let mut extra = Vec::new();
        for &c in conjugators {
            let ci = g.inv(c);
            for &s in &gens {
                let t = g.mul_buf(g.mul_buf(c, s, &mut buf), ci, &mut buf);
                if set.binary_search(&t).is_err() {
                    extra.push(t);
                }
            }
        }
        if extra.is_empty() {
            let normal = is_normal_set(g, &set, &gens);
            return SubgroupHandle { ambient: g.clone(), elements: set, generators: gens, normal };
        }
        gens.extend(extra);
        gens.sort_unstable();
        gens.dedup();
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::symmetric;
    use super::*;
    use crate::element::Element;

    fn idx(g: &FiniteGroup, images: &[u32]) -> u32 {
        g.find(&Element::from_vec(images.to_vec())).unwrap()
    }

    #[test]
    fn v4_in_s4_is_normal() {
        let g = symmetric(4);
        let a = idx(&g, &[1, 0, 3, 2]); // (0 1)(2 3)
        let b = idx(&g, &[2, 3, 0, 1]); // (0 2)(1 3)
        let h = generated_subgroup(&g, &[a, b]);
        assert_eq!(h.order(), 4);
        assert!(h.normal);
    }

    #[test]
    fn transposition_not_normal() {
        let g = symmetric(4);
        let t = idx(&g, &[1, 0, 2, 3]);
        let h = generated_subgroup(&g, &[t]);
        assert_eq!(h.order(), 2);
        assert!(!h.normal);
    }

    #[test]
    fn identity_seed_gives_trivial_normal_subgroup() {
        let g = symmetric(4);
        let h = generated_subgroup(&g, &[0]);
        assert_eq!(h.order(), 1);
        assert!(h.normal);
    }

    #[test]
    fn closing_a_closed_set_is_idempotent() {
        let g = symmetric(4);
        let a = idx(&g, &[1, 0, 3, 2]);
        let b = idx(&g, &[2, 3, 0, 1]);
        let h = generated_subgroup(&g, &[a, b]);
        let again = generated_subgroup(&g, &h.elements);
        assert!(h.same_elements(&again));
    }

    #[test]
    fn subgroup_as_group_multiplies_consistently() {
        let g = symmetric(4);
        let a = idx(&g, &[1, 0, 3, 2]);
        let b = idx(&g, &[2, 3, 0, 1]);
        let h = generated_subgroup(&g, &[a, b]);
        let hg = h.as_group();
        assert_eq!(hg.order(), 4);
        for i in 0..4u32 {
            for j in 0..4u32 {
                let parent = g.mul(h.elements[i as usize], h.elements[j as usize]);
                let sub = hg.mul(i, j);
                assert_eq!(h.elements[sub as usize], parent);
            }
        }
    }

    #[test]
    fn small_generating_set_regenerates() {
        let g = symmetric(4);
        let full: Vec<u32> = (0..24).collect();
        let gens = small_generating_set(&g, &full);
        assert!(gens.len() <= 2);
        assert_eq!(closure(&g, &gens).len(), 24);
    }
}
