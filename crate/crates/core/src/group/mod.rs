//! Finite group arithmetic: enumerated element universes, conjugacy data,
//! subgroup machinery, and structure classification.

mod conjugacy;
mod structure;
mod subgroup;

pub use conjugacy::{ClassInfo, ConjugacyData};
pub use structure::{
    classify_structure, derived_series, fitting_subgroup, fixed_point_witness, frobenius_structure,
    hall_pq, hall_pq_candidates, is_fixed_point_free, p_core, quotient, sylow_subgroup,
    FrobeniusClass,
};
pub use subgroup::{generated_subgroup, SubgroupHandle};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::element::{Element, ElementMap, Layout};
use crate::error::GroupError;

/// Default cap on enumerated universe size.
pub const DEFAULT_ELEMENT_LIMIT: usize = 2_000_000;

/// Named component subgroup recorded by the declarative constructors.
#[derive(Debug, Clone)]
pub struct SubgroupMeta {
    /// Ambient element indices, ascending.
    pub elements: Vec<u32>,
    /// Generating indices within the ambient group.
    pub generators: Vec<u32>,
}

pub(crate) enum Backend {
    Elements {
        layout: Layout,
        universe: Vec<Element>,
        index: ElementMap<u32>,
    },
    /// Subgroup of `parent` reusing its element data; `elems` holds ascending
    /// parent indices.
    Sub { parent: FiniteGroup, elems: Vec<u32> },
    /// Quotient by a normal subgroup, realized by coset-representative tables.
    Quotient {
        parent: FiniteGroup,
        reps: Vec<u32>,
        coset_of: Vec<u32>,
    },
}

/// Memoized Sylow subgroup data (handles would create an Arc cycle).
#[derive(Clone)]
pub(crate) struct SylowData {
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
    pub normal: bool,
}

pub(crate) struct Inner {
    backend: Backend,
    order: u64,
    generators: Vec<u32>,
    metadata: BTreeMap<String, SubgroupMeta>,
    spec_digest: Option<String>,
    conjugacy: OnceLock<Arc<ConjugacyData>>,
    inverses: OnceLock<Vec<u32>>,
    orders: OnceLock<Vec<u32>>,
    pub(crate) sylow_memo: Mutex<BTreeMap<u64, SylowData>>,
}

/// An immutable, fully enumerated finite group. Cheap to clone.
#[derive(Clone)]
pub struct FiniteGroup {
    pub(crate) inner: Arc<Inner>,
}

impl FiniteGroup {
    /// Breadth-first closure of `generators` under multiplication.
    ///
    /// The universe is ordered with the identity first, then discovery order
    /// with the generator list sorted, so equal inputs give identical
    /// orderings.
    pub fn from_generators(
        layout: Layout,
        generators: Vec<Element>,
        limit: usize,
    ) -> Result<Self, GroupError> {
        let expected = layout.element_len();
        for g in &generators {
            if g.data.len() != expected || !layout.is_valid(g) {
                return Err(GroupError::MixedRealization {
                    expected: layout.describe(),
                    found: format!("element of width {}", g.data.len()),
                });
            }
        }
        let identity = layout.identity();
        let mut sorted: Vec<Element> = generators.clone();
        sorted.sort();
        sorted.dedup();
        sorted.retain(|g| *g != identity);

        let mut universe = vec![identity];
        let mut index: ElementMap<u32> = ElementMap::default();
        index.insert(universe[0].data.clone(), 0);
        let mut buf = Vec::new();
        let mut pos = 0usize;
        while pos < universe.len() {
            let current = universe[pos].clone();
            for g in &sorted {
                layout.compose_into(&current.data, &g.data, &mut buf);
                if !index.contains_key(&buf[..]) {
                    if universe.len() >= limit {
                        return Err(GroupError::LimitExceeded { limit });
                    }
                    let e = Element::from_vec(buf.clone());
                    index.insert(e.data.clone(), universe.len() as u32);
                    universe.push(e);
                }
            }
            pos += 1;
        }

        let gen_indices: Vec<u32> =
            generators.iter().map(|g| *index.get(&g.data[..]).expect("generator enumerated")).collect();
        let order = universe.len() as u64;
        Ok(Self {
            inner: Arc::new(Inner {
                backend: Backend::Elements { layout, universe, index },
                order,
                generators: gen_indices,
                metadata: BTreeMap::new(),
                spec_digest: None,
                conjugacy: OnceLock::new(),
                inverses: OnceLock::new(),
                orders: OnceLock::new(),
                sylow_memo: Mutex::new(BTreeMap::new()),
            }),
        })
    }

    pub(crate) fn from_backend(backend: Backend, order: u64, generators: Vec<u32>) -> Self {
        Self {
            inner: Arc::new(Inner {
                backend,
                order,
                generators,
                metadata: BTreeMap::new(),
                spec_digest: None,
                conjugacy: OnceLock::new(),
                inverses: OnceLock::new(),
                orders: OnceLock::new(),
                sylow_memo: Mutex::new(BTreeMap::new()),
            }),
        }
    }

    /// Attach construction metadata; only callable while this is the sole handle.
    pub fn set_metadata(&mut self, metadata: BTreeMap<String, SubgroupMeta>) {
        Arc::get_mut(&mut self.inner).expect("group already shared").metadata = metadata;
    }

    pub fn set_spec_digest(&mut self, digest: String) {
        Arc::get_mut(&mut self.inner).expect("group already shared").spec_digest = Some(digest);
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn generators(&self) -> &[u32] {
        &self.inner.generators
    }

    pub fn metadata(&self) -> &BTreeMap<String, SubgroupMeta> {
        &self.inner.metadata
    }

    pub fn spec_digest(&self) -> Option<&str> {
        self.inner.spec_digest.as_deref()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Product of elements `a * b` by index.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut buf = Vec::new();
        self.mul_buf(a, b, &mut buf)
    }

    /// Product with caller-provided scratch; the hot-loop variant.
    pub fn mul_buf(&self, a: u32, b: u32, buf: &mut Vec<u32>) -> u32 {
        match &self.inner.backend {
            Backend::Elements { layout, universe, index } => {
                layout.compose_into(
                    &universe[a as usize].data,
                    &universe[b as usize].data,
                    buf,
                );
                *index.get(&buf[..]).expect("universe closed under product")
            }
            Backend::Sub { parent, elems } => {
                let p = parent.mul_buf(elems[a as usize], elems[b as usize], buf);
                sub_index(elems, p)
            }
            Backend::Quotient { parent, reps, coset_of } => {
                let p = parent.mul_buf(reps[a as usize], reps[b as usize], buf);
                coset_of[p as usize]
            }
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse_table()[a as usize]
    }

    /// Full inverse index table, computed once.
    pub fn inverse_table(&self) -> &[u32] {
        self.inner.inverses.get_or_init(|| match &self.inner.backend {
            Backend::Elements { layout, universe, index } => universe
                .iter()
                .map(|e| *index.get(&layout.invert(e).data[..]).expect("closed under inverse"))
                .collect(),
            Backend::Sub { parent, elems } => {
                elems.iter().map(|&p| sub_index(elems, parent.inv(p))).collect()
            }
            Backend::Quotient { parent, reps, coset_of } => {
                reps.iter().map(|&r| coset_of[parent.inv(r) as usize]).collect()
            }
        })
    }

    /// Conjugate `g x g^{-1}`.
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: u32) -> u64 {
        self.element_orders()[a as usize] as u64
    }

    /// Orders of every element, computed once.
    pub fn element_orders(&self) -> &[u32] {
        self.inner.orders.get_or_init(|| {
            let n = self.order() as usize;
            let mut orders = vec![0u32; n];
            orders[0] = 1;
            let mut buf = Vec::new();
            for a in 1..n as u32 {
                if orders[a as usize] != 0 {
                    continue;
                }
                // walk the cyclic subgroup once; each power's order follows
                // from the generator's
                let mut powers = vec![0u32]; // identity at exponent 0
                let mut t = a;
                while t != 0 {
                    powers.push(t);
                    t = self.mul_buf(t, a, &mut buf);
                }
                let o = powers.len() as u32;
                for (j, &x) in powers.iter().enumerate().skip(1) {
                    if orders[x as usize] == 0 {
                        orders[x as usize] = o / crate::modular::gcd(o as u64, j as u64) as u32;
                    }
                }
            }
            orders
        })
    }

    /// Element data for display or embedding. For quotient groups this is the
    /// coset representative's data.
    pub fn repr_element(&self, a: u32) -> Element {
        match &self.inner.backend {
            Backend::Elements { universe, .. } => universe[a as usize].clone(),
            Backend::Sub { parent, elems } => parent.repr_element(elems[a as usize]),
            Backend::Quotient { parent, reps, .. } => parent.repr_element(reps[a as usize]),
        }
    }

    pub fn layout(&self) -> &Layout {
        match &self.inner.backend {
            Backend::Elements { layout, .. } => layout,
            Backend::Sub { parent, .. } | Backend::Quotient { parent, .. } => parent.layout(),
        }
    }

    /// Index of an element given by data, if present.
    pub fn find(&self, e: &Element) -> Option<u32> {
        match &self.inner.backend {
            Backend::Elements { index, .. } => index.get(&e.data[..]).copied(),
            Backend::Sub { parent, elems } => {
                let p = parent.find(e)?;
                match elems.binary_search(&p) {
                    Ok(i) => Some(i as u32),
                    Err(_) => None,
                }
            }
            Backend::Quotient { parent, coset_of, .. } => {
                parent.find(e).map(|p| coset_of[p as usize])
            }
        }
    }

    /// Direct access to the element universe; only element-backed groups.
    pub fn universe(&self) -> Option<&[Element]> {
        match &self.inner.backend {
            Backend::Elements { universe, .. } => Some(universe),
            _ => None,
        }
    }

    pub fn conjugacy(&self) -> Arc<ConjugacyData> {
        self.inner
            .conjugacy
            .get_or_init(|| Arc::new(ConjugacyData::compute(self)))
            .clone()
    }

    /// Primes dividing the group order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        crate::modular::prime_divisors(self.order())
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {}, {})", self.order(), self.layout().describe())
    }
}

fn sub_index(elems: &[u32], parent_idx: u32) -> u32 {
    elems.binary_search(&parent_idx).expect("subgroup closed") as u32
}

/// Convenience: enumerate from generators with the default limit.
pub fn enumerate_elements(
    layout: Layout,
    generators: Vec<Element>,
    limit: usize,
) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_generators(layout, generators, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;

    pub(crate) fn symmetric(d: usize) -> FiniteGroup {
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

    #[test]
    fn s3_has_order_six() {
        let g = symmetric(3);
        assert_eq!(g.order(), 6);
        // group laws by exhaustion
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn s4_has_order_24() {
        assert_eq!(symmetric(4).order(), 24);
    }

    #[test]
    fn affine_f21_enumerates() {
        // Z7 x Z3 as x -> x+1 and x -> 2x over GF(7)
        let g = FiniteGroup::from_generators(
            Layout::affine(7, 1),
            vec![Element::from_vec(vec![1, 1]), Element::from_vec(vec![0, 2])],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap();
        assert_eq!(g.order(), 21);
    }

    #[test]
    fn limit_is_enforced() {
        let err = FiniteGroup::from_generators(
            Layout::permutation(5),
            vec![
                Element::from_vec(vec![1, 0, 2, 3, 4]),
                Element::from_vec(vec![1, 2, 3, 4, 0]),
            ],
            100,
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::LimitExceeded { limit: 100 }));
    }

    #[test]
    fn mixed_realization_rejected() {
        let err = FiniteGroup::from_generators(
            Layout::permutation(3),
            vec![Element::from_vec(vec![1, 0, 2]), Element::from_vec(vec![1, 0])],
            1000,
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::MixedRealization { .. }));
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let build = || symmetric(4);
        let a = build();
        let b = build();
        let ua = a.universe().unwrap();
        let ub = b.universe().unwrap();
        assert_eq!(ua, ub);
        assert_eq!(ua[0], a.layout().identity());
    }
}
