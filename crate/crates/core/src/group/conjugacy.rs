//! Conjugacy classes, the exponent, and the class power map.

use super::FiniteGroup;
use crate::modular::lcm;

#[derive(Debug, Clone)]
pub struct ClassInfo {
    /// Least member index, used as the class representative.
    pub rep: u32,
    pub size: u64,
    /// Order of the class elements.
    pub order: u64,
    /// Member indices, ascending.
    pub members: Vec<u32>,
}

#[derive(Debug)]
pub struct ConjugacyData {
    pub classes: Vec<ClassInfo>,
    /// Element index -> class index.
    pub class_of: Vec<u32>,
    /// lcm of all element orders.
    pub exponent: u64,
    /// `power_map[c][j]` = class of `rep_c^j`, for j in `0..exponent`.
    pub power_map: Vec<Vec<u32>>,
    /// Class containing the inverses of class `c`.
    pub inverse_class: Vec<u32>,
}

impl ConjugacyData {
    /// Conjugation-orbit partition with classes ordered by
    /// (element order, size, least member index).
    pub fn compute(g: &FiniteGroup) -> Self {
        let n = g.order() as usize;
        let gens = g.generators().to_vec();
        let inv_gens: Vec<u32> = gens.iter().map(|&x| g.inv(x)).collect();
        let mut assigned = vec![false; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let mut buf = Vec::new();
        for start in 0..n as u32 {
            if assigned[start as usize] {
                continue;
            }
            let mut members = vec![start];
            assigned[start as usize] = true;
            let mut pos = 0;
            while pos < members.len() {
                let x = members[pos];
                for (&s, &si) in gens.iter().zip(&inv_gens) {
                    let y = g.mul_buf(g.mul_buf(s, x, &mut buf), si, &mut buf);
                    if !assigned[y as usize] {
                        assigned[y as usize] = true;
                        members.push(y);
                    }
                }
                pos += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }

        let mut keyed: Vec<(u64, u64, u32, Vec<u32>)> = raw
            .into_iter()
            .map(|members| {
                let rep = members[0];
                (g.element_order(rep), members.len() as u64, rep, members)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));

        let classes: Vec<ClassInfo> = keyed
            .into_iter()
            .map(|(order, size, rep, members)| ClassInfo { rep, size, order, members })
            .collect();

        let mut class_of = vec![0u32; n];
        for (c, info) in classes.iter().enumerate() {
            for &m in &info.members {
                class_of[m as usize] = c as u32;
            }
        }

        let exponent = classes.iter().fold(1u64, |e, c| lcm(e, c.order));

        // Rows are periodic with the element order, so compute one period and tile.
        let power_map: Vec<Vec<u32>> = classes
            .iter()
            .map(|info| {
                let o = info.order as usize;
                let mut period = Vec::with_capacity(o);
                let mut cur = 0u32; // rep^0
                for _ in 0..o {
                    period.push(class_of[cur as usize]);
                    cur = g.mul_buf(cur, info.rep, &mut buf);
                }
                debug_assert_eq!(cur, 0);
                (0..exponent as usize).map(|j| period[j % o]).collect()
            })
            .collect();

        let inverse_class: Vec<u32> =
            classes.iter().map(|info| class_of[g.inv(info.rep) as usize]).collect();

        let data = Self { classes, class_of, exponent, power_map, inverse_class };
        data.assert_consistent(g.order());
        data
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Set of element orders (one per class, deduplicated).
    pub fn element_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.classes.iter().map(|c| c.order).collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }

    fn assert_consistent(&self, order: u64) {
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, order, "class sizes must sum to |G|");
        for c in &self.classes {
            assert_eq!(order % c.size, 0, "class size must divide |G|");
            assert_eq!(order % c.order, 0, "element order must divide |G|");
        }
        assert_eq!(order % self.exponent, 0, "exponent must divide |G|");
        for (c, row) in self.power_map.iter().enumerate() {
            assert_eq!(row[0], 0, "j=0 row must land in the identity class");
            if self.exponent > 1 {
                assert_eq!(row[1], c as u32, "j=1 row must be the identity map");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::symmetric;
    use super::super::{FiniteGroup, DEFAULT_ELEMENT_LIMIT};
    use crate::element::{Element, Layout};

    fn cyclic(n: usize) -> FiniteGroup {
        let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        FiniteGroup::from_generators(
            Layout::permutation(n),
            vec![Element::from_vec(cycle)],
            DEFAULT_ELEMENT_LIMIT,
        )
        .unwrap()
    }

    #[test]
    fn s3_classes() {
        let g = symmetric(3);
        let c = g.conjugacy();
        let sizes: Vec<u64> = c.classes.iter().map(|x| x.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(c.exponent, 6);
    }

    #[test]
    fn s4_classes() {
        let g = symmetric(4);
        let c = g.conjugacy();
        let mut sizes: Vec<u64> = c.classes.iter().map(|x| x.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(c.exponent, 12);
        // ordering key: (order, size, least rep)
        let orders: Vec<u64> = c.classes.iter().map(|x| x.order).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(orders, sorted);
    }

    #[test]
    fn z6_all_singletons() {
        let g = cyclic(6);
        let c = g.conjugacy();
        assert_eq!(c.class_count(), 6);
        assert!(c.classes.iter().all(|x| x.size == 1));
        assert_eq!(c.exponent, 6);
    }

    #[test]
    fn power_map_tracks_element_powers() {
        let g = symmetric(4);
        let c = g.conjugacy();
        for (ci, info) in c.classes.iter().enumerate() {
            let mut cur = 0u32;
            for j in 0..c.exponent as usize {
                assert_eq!(c.power_map[ci][j], c.class_of[cur as usize]);
                cur = g.mul(cur, info.rep);
            }
        }
    }

    #[test]
    fn inverse_class_is_involutive() {
        let g = symmetric(4);
        let c = g.conjugacy();
        for ci in 0..c.class_count() {
            let inv = c.inverse_class[ci] as usize;
            assert_eq!(c.inverse_class[inv] as usize, ci);
        }
    }
}
