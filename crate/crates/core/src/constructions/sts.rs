use rand::seq::SliceRandom;

use super::ConstructionError;
use crate::hypercore::{LinearHypergraph, Vertex};
use crate::rng::SeedStream;

/// Steiner triple system of order `n` (`n` = 1 or 3 mod 6): Bose's
/// construction for 3 mod 6, Skolem's for 1 mod 6. Vertices are then
/// shuffled by the seed and the edge list sorted.
pub fn gen_sts(n: usize, seed: u64) -> Result<LinearHypergraph, ConstructionError> {
    let triples = match n % 6 {
        3 => bose(n / 3),
        1 => skolem((n - 1) / 6),
        _ => return Err(ConstructionError::UnsupportedOrder(n)),
    };
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut SeedStream::new(seed).derive("sts").rng());
    let mut edges: Vec<Vec<Vertex>> = triples
        .into_iter()
        .map(|t| {
            let mut e: Vec<Vertex> = t.iter().map(|&v| perm[v]).collect();
            e.sort_unstable();
            e
        })
        .collect();
    edges.sort();
    Ok(LinearHypergraph::new(3, n, edges).expect("Steiner triple systems are linear"))
}

/// Points (x, i) with x in Z_q (q odd), i in Z_3, numbered 3x + i.
fn bose(q: usize) -> Vec<[Vertex; 3]> {
    let half = q.div_ceil(2); // inverse of 2 mod q
    let op = |x: usize, y: usize| (x + y) * half % q;
    let pt = |x: usize, i: usize| 3 * x + i % 3;
    let mut out = Vec::new();
    for x in 0..q {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..q {
        for y in x + 1..q {
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

/// Points (x, i) with x in [0, 2v), i in Z_3, numbered 3x + i, plus the
/// point at infinity 6v. Uses the half-idempotent commutative quasigroup
/// obtained from Z_{2v} by renaming 2a -> a and 2a + 1 -> v + a.
fn skolem(v: usize) -> Vec<[Vertex; 3]> {
    let order = 2 * v;
    let rename = |a: usize| if a.is_multiple_of(2) { a / 2 } else { v + a / 2 };
    let op = |x: usize, y: usize| rename((x + y) % order);
    let pt = |x: usize, i: usize| 3 * x + i % 3;
    let inf = 6 * v;
    let mut out = Vec::new();
    for x in 0..v {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            out.push([inf, pt(x + v, i), pt(x, i + 1)]);
        }
    }
    for x in 0..order {
        for y in x + 1..order {
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn covers_every_pair_once(h: &LinearHypergraph) -> bool {
        let mut seen = HashSet::new();
        for e in h.edges() {
            for (a, b) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
                if !seen.insert((a, b)) {
                    return false;
                }
            }
        }
        seen.len() == h.n() * (h.n() - 1) / 2
    }

    #[test]
    fn small_orders() {
        for n in [1, 3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 37, 39, 43, 45] {
            let h = gen_sts(n, 5).unwrap();
            assert_eq!(h.m(), n * (n - 1) / 6, "n = {n}");
            assert!(n == 1 || covers_every_pair_once(&h), "n = {n}");
        }
    }

    #[test]
    fn sts9_has_four_parallel_classes() {
        let h = gen_sts(9, 11).unwrap();
        // two triples are parallel iff disjoint; classes are the components
        // of the disjointness relation, each of size 3
        let disjoint = |a: &[usize], b: &[usize]| a.iter().all(|x| !b.contains(x));
        let mut classes = 0;
        let mut used = [false; 12];
        for i in 0..12 {
            if used[i] {
                continue;
            }
            let class: Vec<usize> = (0..12).filter(|&j| j == i || disjoint(h.edge(i), h.edge(j))).collect();
            assert_eq!(class.len(), 3);
            for &j in &class {
                used[j] = true;
            }
            classes += 1;
        }
        assert_eq!(classes, 4);
    }

    #[test]
    fn unsupported_and_deterministic() {
        assert_eq!(gen_sts(8, 0), Err(ConstructionError::UnsupportedOrder(8)));
        assert_eq!(gen_sts(13, 4), gen_sts(13, 4));
        assert_ne!(gen_sts(13, 4), gen_sts(13, 5));
    }
}
