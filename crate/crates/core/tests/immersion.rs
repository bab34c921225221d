use hyperreg::constructions::gen_sts;
use hyperreg::hypercore::fixtures;
use hyperreg::immersion::{
    check_immersion_document, classify_surface, clone_decompose, clone_decompose_with_order, find_zero_immersion,
    ImmersionBudget,
};
use hyperreg::{Hypergraph, SearchOutcome};
use proptest::prelude::*;

fn pairs(h: &Hypergraph) -> usize {
    let mut ps: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .flat_map(|e| [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    ps.sort_unstable();
    ps.dedup();
    ps.len()
}

/// Tetrahedra, octahedra and tori sharing vertex 0 with each other.
fn pinched(which: &[u8]) -> Hypergraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &w in which {
        let src = match w % 3 {
            0 => fixtures::tetrahedron(),
            1 => fixtures::octahedron(),
            _ => fixtures::torus7(),
        };
        let map: Vec<usize> = (0..src.n()).map(|v| if v == 0 { 0 } else { next + v - 1 }).collect();
        next += src.n() - 1;
        for e in src.edges() {
            let mut f: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            f.sort_unstable();
            edges.push(f);
        }
    }
    Hypergraph::new(3, next, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cloning_preserves_faces_and_ignores_order(which in prop::collection::vec(any::<u8>(), 1..4), order_seed in any::<u64>()) {
        let h = pinched(&which);
        let base = clone_decompose(&h).unwrap();
        let mut order: Vec<usize> = (0..h.n()).collect();
        let mut x = order_seed | 1;
        for i in (1..order.len()).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            order.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let d = clone_decompose_with_order(&h, &order).unwrap();
        prop_assert_eq!(d.surface.triangles.len(), h.m());
        prop_assert_eq!(d.surface.one_faces(), pairs(&h));
        prop_assert_eq!(d.surface.components.len(), which.len());
        for (i, t) in d.surface.triangles.iter().enumerate() {
            let mut img: Vec<usize> = t.iter().map(|&v| d.phi[v]).collect();
            img.sort_unstable();
            prop_assert_eq!(&img, h.edge(i));
        }
        let mut a: Vec<(i64, bool)> = base.surface.components.iter().map(|c| (c.classification.euler, c.classification.orientable)).collect();
        let mut b: Vec<(i64, bool)> = d.surface.components.iter().map(|c| (c.classification.euler, c.classification.orientable)).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        for c in &d.surface.components {
            let tris: Vec<[usize; 3]> = c.triangles.iter().map(|&i| d.surface.triangles[i]).collect();
            prop_assert_eq!(&classify_surface(&tris).unwrap(), &c.classification);
        }
    }
}

#[test]
fn tetrahedron_immersion_round_trips() {
    let h = fixtures::tetrahedron();
    let (out, lift) = find_zero_immersion(&h, &ImmersionBudget::default(), 0).unwrap();
    let cert = out.found().unwrap();
    assert!(cert.check(&h).unwrap().is_valid());
    let doc = cert.to_document(Some(&lift));
    assert!(check_immersion_document(&h, &doc).unwrap().is_valid());
}

#[test]
fn sts9_has_no_zero_immersion() {
    let h = gen_sts(9, 0).unwrap();
    let (out, _) = find_zero_immersion(&h, &ImmersionBudget::default(), 0).unwrap();
    assert_eq!(out, SearchOutcome::NotFound);
}
