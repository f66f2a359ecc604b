//! Shared test oracles and embedded textbook data.

use codegree::graph::LabeledGraph;

pub const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// (degree, kernel order, codegree) triples, sorted, plus the codegree set.
pub struct TextbookTable {
    pub rows: Vec<(u64, u64, u64)>,
    pub codegrees: Vec<u64>,
}

fn table(mut rows: Vec<(u64, u64, u64)>) -> TextbookTable {
    rows.sort_unstable();
    let mut codegrees: Vec<u64> = rows.iter().map(|r| r.2).collect();
    codegrees.sort_unstable();
    codegrees.dedup();
    TextbookTable { rows, codegrees }
}

/// Classic character table data for the fixture groups.
pub fn textbook(name: &str) -> TextbookTable {
    match name {
        "s3" => table(vec![(1, 6, 1), (1, 3, 2), (2, 1, 3)]),
        "a4" => table(vec![(1, 12, 1), (1, 4, 3), (1, 4, 3), (3, 1, 4)]),
        "s4" => table(vec![(1, 24, 1), (1, 12, 2), (2, 4, 3), (3, 1, 8), (3, 1, 8)]),
        "d8" | "q8" => {
            table(vec![(1, 8, 1), (1, 4, 2), (1, 4, 2), (1, 4, 2), (2, 1, 4)])
        }
        "a5" => table(vec![(1, 60, 1), (3, 1, 20), (3, 1, 20), (4, 1, 15), (5, 1, 12)]),
        "s5" => table(vec![
            (1, 120, 1),
            (1, 60, 2),
            (4, 1, 30),
            (4, 1, 30),
            (5, 1, 24),
            (5, 1, 24),
            (6, 1, 20),
        ]),
        "f21" => table(vec![(1, 21, 1), (1, 7, 3), (1, 7, 3), (3, 1, 7), (3, 1, 7)]),
        other => {
            if let Some(n) = other.strip_prefix('z').and_then(|s| s.parse::<u64>().ok()) {
                return table(cyclic_rows(n));
            }
            panic!("no textbook table for {other}")
        }
    }
}

/// Z_n: one character per n-th root of unity; a character of order d has
/// kernel of order n/d and codegree d.
fn cyclic_rows(n: u64) -> Vec<(u64, u64, u64)> {
    (1..=n)
        .map(|j| {
            let d = n / codegree::modular::gcd(n, j);
            (1, n / d, d)
        })
        .collect()
}

/// Brute-force realizability oracle: complement triangles by full triple
/// enumeration, complement 3-colorability by exhaustive assignment
/// enumeration. Independent of the decision procedure under test.
pub fn oracle_realizable(g: &LabeledGraph) -> bool {
    let comp = g.complement();
    let n = comp.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            if !comp.has_edge(comp.vertices[i], comp.vertices[j]) {
                continue;
            }
            for t in j + 1..n {
                if comp.has_edge(comp.vertices[i], comp.vertices[t])
                    && comp.has_edge(comp.vertices[j], comp.vertices[t])
                {
                    return false;
                }
            }
        }
    }
    if n == 0 {
        return true;
    }
    let mut assignment = vec![0u8; n];
    'outer: loop {
        let ok = comp.edges.iter().all(|&(a, b)| {
            let ia = comp.vertices.binary_search(&a).unwrap();
            let ib = comp.vertices.binary_search(&b).unwrap();
            assignment[ia] != assignment[ib]
        });
        if ok {
            return true;
        }
        for slot in assignment.iter_mut() {
            if *slot < 2 {
                *slot += 1;
                continue 'outer;
            }
            *slot = 0;
        }
        return false;
    }
}

/// Every labeled graph on the first `n` primes, as edge bitmasks.
pub fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let vertices: Vec<u64> = PRIMES[..n].to_vec();
    let pairs: Vec<(u64, u64)> = {
        let mut p = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                p.push((vertices[i], vertices[j]));
            }
        }
        p
    };
    let count = 1u32 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<(u64, u64)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        LabeledGraph::new(vertices.clone(), edges)
    })
}

pub fn petersen() -> LabeledGraph {
    let v: Vec<u64> = PRIMES.to_vec();
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((v[i], v[(i + 1) % 5]));
        edges.push((v[i], v[i + 5]));
        edges.push((v[5 + i], v[5 + (i + 2) % 5]));
    }
    LabeledGraph::new(v, edges)
}
