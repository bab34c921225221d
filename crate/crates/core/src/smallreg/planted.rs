use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::hypercore::ColouredGraph;
use crate::rng::SeedStream;

/// Two vertex-disjoint rainbow `2 ell`-cycles with the same colour sequence,
/// hidden in proper-coloured random noise. `planted` lists the 4l cycle
/// edges. Equal colour sets in different cyclic orders would not form a
/// cycle in the pair product graph.
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub graph: ColouredGraph,
    pub planted: Vec<usize>,
}

/// `noise_edges` random edges over `colours >= 2 ell` colours are added
/// around the planted cycles, skipping any that would break properness or
/// simplicity (so fewer may land).
pub fn planted_instance(n: usize, ell: usize, colours: usize, noise_edges: usize, seed: u64) -> PlantedInstance {
    let len = 2 * ell;
    assert!(ell >= 2 && n >= 2 * len && colours >= len);
    let mut rng = SeedStream::new(seed).derive("planted").rng();
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(&mut rng);
    let mut used = vec![vec![false; colours]; n];
    let mut adjacent = std::collections::HashSet::new();
    let mut edges = Vec::new();
    let mut cs: Vec<usize> = (0..colours).collect();
    cs.shuffle(&mut rng);
    for half in [&vs[..len], &vs[len..2 * len]] {
        for i in 0..len {
            let (a, b) = (half[i], half[(i + 1) % len]);
            used[a][cs[i]] = true;
            used[b][cs[i]] = true;
            adjacent.insert((a.min(b), a.max(b)));
            edges.push((a, b, cs[i]));
        }
    }
    let planted = (0..edges.len()).collect();
    let mut tries = 0;
    while edges.len() < 2 * len + noise_edges && tries < 50 * (noise_edges + 1) {
        tries += 1;
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let c = rng.gen_range(0..colours);
        if a == b || used[a][c] || used[b][c] || !adjacent.insert((a.min(b), a.max(b))) {
            continue;
        }
        used[a][c] = true;
        used[b][c] = true;
        edges.push((a, b, c));
    }
    PlantedInstance {
        graph: ColouredGraph::new(n, colours, edges).expect("construction keeps the colouring proper"),
        planted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::TwoRegularColouredCertificate;

    #[test]
    fn planted_edges_form_certificate() {
        for seed in 0..5 {
            let inst = planted_instance(60, 3, 12, 80, seed);
            assert_eq!(inst.planted.len(), 12);
            let cert = TwoRegularColouredCertificate::new(inst.planted.clone());
            assert!(cert.check(&inst.graph).unwrap().is_valid());
            assert!(inst.graph.m() > 12);
        }
    }
}
