//! The build engine: realizes a construction tree as a `FiniteGroup` in the
//! cheapest faithful realization, records named component subgroups, and
//! verifies every action along the way.

use std::collections::BTreeMap;

use super::{ActionSpec, GroupSpec};
use crate::element::{Block, Element, Layout};
use crate::error::BuildError;
use crate::group::{
    fixed_point_witness, generated_subgroup, classify_structure, FiniteGroup, FrobeniusClass,
    SubgroupHandle, SubgroupMeta,
};
use crate::matrix::ModMatrix;
use crate::modular::{factorize, is_prime};

/// Build a group from its spec, attach the spec digest and the construction
/// metadata (kernel/complement/factor/Sylow component subgroups).
pub fn build(spec: &GroupSpec, limit: usize) -> Result<FiniteGroup, BuildError> {
    let mut built = build_node(spec, limit)?;
    let meta: BTreeMap<String, SubgroupMeta> = built
        .named
        .iter()
        .map(|(name, gens)| {
            let idx: Vec<u32> = gens
                .iter()
                .map(|e| built.group.find(e).expect("metadata generator enumerated"))
                .collect();
            let handle = generated_subgroup(&built.group, &idx);
            (name.clone(), SubgroupMeta { elements: handle.elements, generators: idx })
        })
        .collect();
    built.group.set_metadata(meta);
    built.group.set_spec_digest(spec.digest());
    Ok(built.group)
}

struct Built {
    group: FiniteGroup,
    /// Construction-order generator elements.
    gens: Vec<Element>,
    /// Named component subgroups, as generator element lists.
    named: Vec<(String, Vec<Element>)>,
}

fn build_node(spec: &GroupSpec, limit: usize) -> Result<Built, BuildError> {
    match spec {
        GroupSpec::Cyclic { n } => build_cyclic(*n, limit),
        GroupSpec::ElementaryAbelian { p, k } => build_elementary_abelian(*p, *k, limit),
        GroupSpec::Symmetric { degree } => build_symmetric(*degree, limit),
        GroupSpec::Alternating { degree } => build_alternating(*degree, limit),
        GroupSpec::PermutationGroup { degree, generators } => {
            build_permutation(*degree, generators, limit)
        }
        GroupSpec::DirectProduct { factors } => build_direct_product(factors, limit),
        GroupSpec::Semidirect { kernel, complement, action } => {
            build_semidirect(kernel, complement, action, limit)
        }
        GroupSpec::Frobenius { kernel, complement, action } => {
            let built = build_semidirect(kernel, complement, action, limit)?;
            verify_frobenius(&built)?;
            Ok(built)
        }
        GroupSpec::TwoFrobenius { bottom, middle, top, top_on_middle, complement_on_bottom } => {
            build_two_frobenius(bottom, middle, top, top_on_middle, complement_on_bottom, limit)
        }
    }
}

fn group_of(layout: Layout, gens: Vec<Element>, limit: usize) -> Result<FiniteGroup, BuildError> {
    Ok(FiniteGroup::from_generators(layout, gens, limit)?)
}

fn build_cyclic(n: u64, limit: usize) -> Result<Built, BuildError> {
    if n == 0 {
        return Err(BuildError::Parse("cyclic group order must be positive".into()));
    }
    if n == 1 {
        let group = group_of(Layout::permutation(1), vec![], limit)?;
        return Ok(Built { group, gens: vec![], named: vec![] });
    }
    let (layout, gen) = if is_prime(n) {
        (Layout::affine(n, 1), Element::from_vec(vec![1, 1]))
    } else {
        let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        (Layout::permutation(n as usize), Element::from_vec(cycle))
    };
    let group = group_of(layout.clone(), vec![gen.clone()], limit)?;
    let mut named = Vec::new();
    let factors = factorize(n);
    if factors.len() > 1 {
        for (p, a) in factors {
            let power = element_pow(&layout, &gen, n / p.pow(a));
            named.push((format!("sylow{p}"), vec![power]));
        }
    }
    Ok(Built { group, gens: vec![gen], named })
}

fn element_pow(layout: &Layout, e: &Element, mut k: u64) -> Element {
    let mut acc = layout.identity();
    let mut base = e.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = layout.compose(&acc, &base);
        }
        base = layout.compose(&base, &base);
        k >>= 1;
    }
    acc
}

fn build_elementary_abelian(p: u64, k: u32, limit: usize) -> Result<Built, BuildError> {
    if !is_prime(p) || k == 0 {
        return Err(BuildError::Parse(format!(
            "elementary abelian group needs a prime and positive rank, got ({p}, {k})"
        )));
    }
    let layout = Layout::affine(p, k as usize);
    let gens: Vec<Element> = (0..k as usize)
        .map(|i| {
            let mut id = layout.identity();
            id.data[i] = 1;
            id
        })
        .collect();
    let group = group_of(layout, gens.clone(), limit)?;
    Ok(Built { group, gens, named: vec![] })
}

fn build_symmetric(degree: u32, limit: usize) -> Result<Built, BuildError> {
    let d = degree as usize;
    let layout = Layout::permutation(d.max(1));
    let mut gens = Vec::new();
    if d >= 2 {
        let mut swap: Vec<u32> = (0..d as u32).collect();
        swap.swap(0, 1);
        gens.push(Element::from_vec(swap));
    }
    if d >= 3 {
        let cycle: Vec<u32> = (0..d as u32).map(|i| (i + 1) % d as u32).collect();
        gens.push(Element::from_vec(cycle));
    }
    let group = group_of(layout, gens.clone(), limit)?;
    Ok(Built { group, gens, named: vec![] })
}

fn build_alternating(degree: u32, limit: usize) -> Result<Built, BuildError> {
    let d = degree as usize;
    let layout = Layout::permutation(d.max(1));
    let mut gens = Vec::new();
    if d >= 3 {
        let mut three: Vec<u32> = (0..d as u32).collect();
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push(Element::from_vec(three));
        if d > 3 {
            let cycle: Vec<u32> = if d % 2 == 1 {
                (0..d as u32).map(|i| (i + 1) % d as u32).collect()
            } else {
                // (1 2 ... d-1), an even cycle on d-1 points
                (0..d as u32)
                    .map(|i| if i == 0 { 0 } else if i == d as u32 - 1 { 1 } else { i + 1 })
                    .collect()
            };
            gens.push(Element::from_vec(cycle));
        }
    }
    let group = group_of(layout, gens.clone(), limit)?;
    Ok(Built { group, gens, named: vec![] })
}

fn build_permutation(degree: u32, generators: &[Vec<u32>], limit: usize) -> Result<Built, BuildError> {
    let layout = Layout::permutation(degree.max(1) as usize);
    let gens: Vec<Element> = generators.iter().map(|g| Element::from_vec(g.clone())).collect();
    for g in &gens {
        if !layout.is_valid(g) {
            return Err(BuildError::Parse(format!(
                "not a permutation of 0..{degree}: {:?}",
                g.data
            )));
        }
    }
    let group = group_of(layout, gens.clone(), limit)?;
    Ok(Built { group, gens, named: vec![] })
}

fn build_direct_product(factors: &[GroupSpec], limit: usize) -> Result<Built, BuildError> {
    let parts: Vec<Built> = factors
        .iter()
        .map(|f| build_node(f, limit))
        .collect::<Result<_, _>>()?;
    let layouts: Vec<&Layout> = parts.iter().map(|b| b.group.layout()).collect();
    let layout = Layout::concat(&layouts);
    // embedding of factor i: identity everywhere except factor i's regions
    let embed = |i: usize, e: &Element| -> Element {
        let mut out = layout.identity();
        let deg_off: usize = layouts[..i].iter().map(|l| l.degree).sum();
        let li = layouts[i];
        for (j, &img) in e.data[..li.degree].iter().enumerate() {
            out.data[deg_off + j] = img + deg_off as u32;
        }
        let pre_blocks: usize = layouts[..i].iter().map(|l| l.blocks.len()).sum();
        for (bi, _) in li.blocks.iter().enumerate() {
            let src = li.block_offset(bi);
            let dst = layout.block_offset(pre_blocks + bi);
            let len = li.blocks[bi].len();
            out.data[dst..dst + len].copy_from_slice(&e.data[src..src + len]);
        }
        out
    };
    let mut gens = Vec::new();
    let mut named = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let embedded: Vec<Element> = part.gens.iter().map(|e| embed(i, e)).collect();
        named.push((format!("factor{i}"), embedded.clone()));
        for (name, child_gens) in &part.named {
            named.push((
                format!("factor{i}.{name}"),
                child_gens.iter().map(|e| embed(i, e)).collect(),
            ));
        }
        gens.extend(embedded);
    }
    let group = group_of(layout, gens.clone(), limit)?;
    let expected: u64 = parts.iter().map(|p| p.group.order()).product();
    assert_eq!(group.order(), expected, "direct product order");
    Ok(Built { group, gens, named })
}

fn build_semidirect(
    kernel: &GroupSpec,
    complement: &GroupSpec,
    action: &ActionSpec,
    limit: usize,
) -> Result<Built, BuildError> {
    let k = build_node(kernel, limit)?;
    let c = build_node(complement, limit)?;
    if c.group.order() == 1 {
        // degenerate product: the complement contributes nothing
        let mut named = vec![
            ("kernel".to_string(), k.gens.clone()),
            ("complement".to_string(), Vec::new()),
        ];
        for (name, gens) in &k.named {
            named.push((format!("kernel.{name}"), gens.clone()));
        }
        return Ok(Built { group: k.group, gens: k.gens, named });
    }
    match action {
        ActionSpec::Matrix { matrices } => semidirect_matrix(k, c, matrices, limit),
        ActionSpec::Automorphism { images } => semidirect_automorphism(k, c, images, limit),
    }
}

/// Kernel blocks become affine blocks acted on by per-generator matrices; the
/// complement keeps its own faithful components alongside.
fn semidirect_matrix(
    k: Built,
    c: Built,
    matrices: &[Vec<Vec<u64>>],
    limit: usize,
) -> Result<Built, BuildError> {
    let kl = k.group.layout().clone();
    let cl = c.group.layout().clone();
    // the kernel must be a full translation group on its blocks
    let full: u64 = kl.blocks.iter().map(|b| b.r.pow(b.n as u32)).product();
    if kl.degree != 0 || k.group.order() != full {
        return Err(BuildError::KernelNotTranslations { kernel: kl.describe() });
    }
    if matrices.len() != c.gens.len() {
        return Err(BuildError::Parse(format!(
            "action lists {} generator matrices, complement has {} generators",
            matrices.len(),
            c.gens.len()
        )));
    }
    for per_gen in matrices {
        if per_gen.len() != kl.blocks.len() {
            return Err(BuildError::Parse(format!(
                "action lists {} block matrices, kernel has {} blocks",
                per_gen.len(),
                kl.blocks.len()
            )));
        }
        for (block, mat) in kl.blocks.iter().zip(per_gen) {
            if mat.len() != block.n * block.n {
                return Err(BuildError::Parse(format!(
                    "block matrix has {} entries, expected {}",
                    mat.len(),
                    block.n * block.n
                )));
            }
            let rows: Vec<Vec<u64>> =
                mat.chunks(block.n).map(|r| r.iter().map(|&x| x % block.r).collect()).collect();
            if ModMatrix::from_rows(block.r, &rows).det() == 0 {
                return Err(BuildError::SingularActionMatrix { modulus: block.r });
            }
        }
    }

    let layout = Layout {
        degree: cl.degree,
        blocks: kl.blocks.iter().chain(cl.blocks.iter()).copied().collect(),
    };
    let kernel_width: usize = kl.blocks.iter().map(Block::len).sum();

    // kernel element: translations carried over, identity complement part
    let embed_kernel = |e: &Element| -> Element {
        let mut out = layout.identity();
        let mut src = 0usize;
        let mut dst = cl.degree;
        for b in &kl.blocks {
            out.data[dst..dst + b.n].copy_from_slice(&e.data[src..src + b.n]);
            src += b.len();
            dst += b.len();
        }
        out
    };
    // complement generator: own components plus its action matrices
    let embed_comp_gen = |gen_idx: usize, e: &Element| -> Element {
        let mut out = layout.identity();
        out.data[..cl.degree].copy_from_slice(&e.data[..cl.degree]);
        let mut dst = cl.degree;
        for (bi, b) in kl.blocks.iter().enumerate() {
            let mat = &matrices[gen_idx][bi];
            for (t, &entry) in mat.iter().enumerate() {
                out.data[dst + b.n + t] = (entry % b.r) as u32;
            }
            dst += b.len();
        }
        out.data[cl.degree + kernel_width..]
            .copy_from_slice(&e.data[cl.degree..]);
        out
    };

    let kernel_gens: Vec<Element> = k.gens.iter().map(embed_kernel).collect();
    let comp_gens: Vec<Element> =
        c.gens.iter().enumerate().map(|(i, e)| embed_comp_gen(i, e)).collect();
    let mut gens = kernel_gens;
    gens.extend(comp_gens.clone());
    let group = group_of(layout.clone(), gens.clone(), limit)?;
    let expected = k.group.order() * c.group.order();
    if group.order() != expected {
        return Err(BuildError::ActionNotHomomorphism { expected, got: group.order() });
    }

    // complement copy for metadata embedding: elements with zero kernel translations
    let comp_map = complement_map(&group, &c.group, |data: &[u32]| {
        let mut zero = true;
        let mut off = cl.degree;
        for b in &kl.blocks {
            if data[off..off + b.n].iter().any(|&x| x != 0) {
                zero = false;
                break;
            }
            off += b.len();
        }
        if !zero {
            return None;
        }
        let mut child = Vec::with_capacity(cl.element_len());
        child.extend_from_slice(&data[..cl.degree]);
        child.extend_from_slice(&data[cl.degree + kernel_width..]);
        Some(Element::from_vec(child))
    });

    let named = assemble_semidirect_names(&k, &c, embed_kernel, |e: &Element| {
        comp_map(e).expect("complement element embeds")
    });
    Ok(Built { group, gens, named })
}

/// The complement acts on the kernel's points by automorphisms; the kernel
/// acts on its own points by left multiplication.
fn semidirect_automorphism(
    k: Built,
    c: Built,
    images: &[Vec<Vec<u32>>],
    limit: usize,
) -> Result<Built, BuildError> {
    let cl = c.group.layout().clone();
    let kn = k.group.order() as usize;
    if images.len() != c.gens.len() {
        return Err(BuildError::Parse(format!(
            "action lists {} generator images, complement has {} generators",
            images.len(),
            c.gens.len()
        )));
    }
    // realize each complement generator's automorphism as a permutation of the
    // kernel universe
    let mut autos: Vec<Vec<u32>> = Vec::with_capacity(images.len());
    for per_gen in images {
        if per_gen.len() != k.gens.len() {
            return Err(BuildError::Parse(format!(
                "automorphism images cover {} kernel generators, kernel has {}",
                per_gen.len(),
                k.gens.len()
            )));
        }
        let image_idx: Vec<u32> = per_gen
            .iter()
            .map(|word| {
                let mut acc = 0u32;
                for &gi in word {
                    let gen = *k
                        .group
                        .generators()
                        .get(gi as usize)
                        .ok_or_else(|| BuildError::Parse(format!("word references kernel generator {gi}")))?;
                    acc = k.group.mul(acc, gen);
                }
                Ok::<u32, BuildError>(acc)
            })
            .collect::<Result<_, _>>()?;
        autos.push(extend_automorphism(&k.group, &image_idx)?);
    }

    let layout = Layout {
        degree: kn + cl.degree,
        blocks: cl.blocks.clone(),
    };
    let embed_kernel = |e: &Element| -> Element {
        let idx = k.group.find(e).expect("kernel element");
        let mut out = layout.identity();
        for x in 0..kn {
            out.data[x] = k.group.mul(idx, x as u32);
        }
        out
    };
    let embed_comp_gen = |gen_idx: usize, e: &Element| -> Element {
        let mut out = layout.identity();
        for x in 0..kn {
            out.data[x] = autos[gen_idx][x];
        }
        for (j, &img) in e.data[..cl.degree].iter().enumerate() {
            out.data[kn + j] = img + kn as u32;
        }
        out.data[layout.degree..].copy_from_slice(&e.data[cl.degree..]);
        out
    };

    let kernel_gens: Vec<Element> = k.gens.iter().map(embed_kernel).collect();
    let comp_gens: Vec<Element> =
        c.gens.iter().enumerate().map(|(i, e)| embed_comp_gen(i, e)).collect();
    let mut gens = kernel_gens;
    gens.extend(comp_gens);
    let group = group_of(layout.clone(), gens.clone(), limit)?;
    let expected = k.group.order() * c.group.order();
    if group.order() != expected {
        return Err(BuildError::ActionNotHomomorphism { expected, got: group.order() });
    }

    let comp_map = complement_map(&group, &c.group, |data: &[u32]| {
        if data[0] != 0 {
            return None; // image of the kernel identity point pins the kernel part
        }
        let mut child = Vec::with_capacity(cl.element_len());
        child.extend(data[kn..kn + cl.degree].iter().map(|&x| x - kn as u32));
        child.extend_from_slice(&data[layout.degree..]);
        Some(Element::from_vec(child))
    });
    let named = assemble_semidirect_names(&k, &c, embed_kernel, |e: &Element| {
        comp_map(e).expect("complement element embeds")
    });
    Ok(Built { group, gens, named })
}

/// Extend kernel-generator images to the whole kernel universe and verify the
/// result is an automorphism.
fn extend_automorphism(kg: &FiniteGroup, gen_images: &[u32]) -> Result<Vec<u32>, BuildError> {
    let n = kg.order() as usize;
    let gens = kg.generators();
    let mut img = vec![u32::MAX; n];
    img[0] = 0;
    // propagate along a BFS of the kernel from its construction generators
    let mut queue = vec![0u32];
    let mut pos = 0;
    while pos < queue.len() {
        let x = queue[pos];
        for (gi, &g) in gens.iter().enumerate() {
            let y = kg.mul(x, g);
            if img[y as usize] == u32::MAX {
                img[y as usize] = kg.mul(img[x as usize], gen_images[gi]);
                queue.push(y);
            }
        }
        pos += 1;
    }
    // well-defined homomorphism: img(x * g) = img(x) * img(g) everywhere
    for x in 0..n as u32 {
        for (gi, &g) in gens.iter().enumerate() {
            if img[kg.mul(x, g) as usize] != kg.mul(img[x as usize], gen_images[gi]) {
                return Err(BuildError::Parse(
                    "generator images do not extend to an automorphism".into(),
                ));
            }
        }
    }
    let mut seen = vec![false; n];
    for &v in &img {
        if v == u32::MAX || seen[v as usize] {
            return Err(BuildError::Parse("automorphism images are not bijective".into()));
        }
        seen[v as usize] = true;
    }
    Ok(img)
}

/// Map complement elements into the product by scanning the product universe
/// for the complement copy (the zero-kernel slice) and keying it by the
/// complement's own coordinates.
fn complement_map(
    group: &FiniteGroup,
    comp: &FiniteGroup,
    extract: impl Fn(&[u32]) -> Option<Element>,
) -> impl Fn(&Element) -> Option<Element> {
    let mut table: Vec<Option<Element>> = vec![None; comp.order() as usize];
    for parent in group.universe().expect("element backend") {
        if let Some(child) = extract(&parent.data) {
            if let Some(ci) = comp.find(&child) {
                table[ci as usize] = Some(parent.clone());
            }
        }
    }
    let comp = comp.clone();
    move |e: &Element| comp.find(e).and_then(|ci| table[ci as usize].clone())
}

fn assemble_semidirect_names(
    k: &Built,
    c: &Built,
    embed_kernel: impl Fn(&Element) -> Element,
    embed_comp: impl Fn(&Element) -> Element,
) -> Vec<(String, Vec<Element>)> {
    let mut named = Vec::new();
    named.push(("kernel".to_string(), k.gens.iter().map(&embed_kernel).collect()));
    for (name, gens) in &k.named {
        named.push((format!("kernel.{name}"), gens.iter().map(&embed_kernel).collect()));
    }
    named.push(("complement".to_string(), c.gens.iter().map(&embed_comp).collect()));
    for (name, gens) in &c.named {
        named.push((format!("complement.{name}"), gens.iter().map(&embed_comp).collect()));
    }
    named
}

fn handle_from_named(
    group: &FiniteGroup,
    named: &[(String, Vec<Element>)],
    name: &str,
) -> SubgroupHandle {
    let gens = named
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g.clone())
        .unwrap_or_else(|| panic!("named subgroup {name} recorded"));
    let idx: Vec<u32> = gens.iter().map(|e| group.find(e).expect("metadata element")).collect();
    generated_subgroup(group, &idx)
}

fn verify_frobenius(built: &Built) -> Result<(), BuildError> {
    let kernel = handle_from_named(&built.group, &built.named, "kernel");
    let complement = handle_from_named(&built.group, &built.named, "complement");
    match fixed_point_witness(&complement, &kernel) {
        Ok(None) => Ok(()),
        Ok(Some((a, t))) => Err(BuildError::NotFixedPointFree { actor: a, target: t }),
        Err(e) => Err(e.into()),
    }
}

fn build_two_frobenius(
    bottom: &GroupSpec,
    middle: &GroupSpec,
    top: &GroupSpec,
    top_on_middle: &ActionSpec,
    complement_on_bottom: &ActionSpec,
    limit: usize,
) -> Result<Built, BuildError> {
    let comp_spec = GroupSpec::Semidirect {
        kernel: Box::new(middle.clone()),
        complement: Box::new(top.clone()),
        action: top_on_middle.clone(),
    };
    let built = build_semidirect(bottom, &comp_spec, complement_on_bottom, limit)?;
    let g = &built.group;

    let bottom_h = handle_from_named(g, &built.named, "kernel");
    let middle_h = handle_from_named(g, &built.named, "complement.kernel");
    let top_h = handle_from_named(g, &built.named, "complement.complement");
    let layer_prime = |h: &SubgroupHandle, what: &str| -> Result<Option<u64>, BuildError> {
        let f = factorize(h.order());
        match f.len() {
            0 => Ok(None), // trivial layer; classification will flag the mismatch
            1 => Ok(Some(f[0].0)),
            _ => Err(BuildError::PreconditionViolated(format!(
                "{what} layer must have prime-power order, got {}",
                h.order()
            ))),
        }
    };
    let pb = layer_prime(&bottom_h, "bottom")?;
    let pm = layer_prime(&middle_h, "middle")?;
    let pt = layer_prime(&top_h, "top")?;

    // middle acts fixed-point-freely on the bottom, top on the middle
    if let Some((a, t)) = fixed_point_witness(&middle_h, &bottom_h).map_err(BuildError::from)? {
        return Err(BuildError::NotFixedPointFree { actor: a, target: t });
    }
    match fixed_point_witness(&top_h, &middle_h) {
        Ok(None) => {}
        Ok(Some((a, t))) => return Err(BuildError::NotFixedPointFree { actor: a, target: t }),
        Err(e) => return Err(e.into()),
    }

    let class = classify_structure(g).map_err(BuildError::from)?;
    let expected = match (pb, pm, pt) {
        (Some(pb), Some(pm), Some(pt)) => FrobeniusClass::TwoFrobenius { kind: (pb, pm, pt) },
        _ => {
            return Err(BuildError::StructureMismatch {
                expected: "TwoFrobenius with three nontrivial layers".to_string(),
                got: class.describe(),
            })
        }
    };
    if class != expected {
        return Err(BuildError::StructureMismatch {
            expected: expected.describe(),
            got: class.describe(),
        });
    }
    Ok(built)
}
