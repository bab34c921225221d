use std::collections::BTreeMap;

use super::surface::{graph_components, SurfaceComplex};
use super::ImmersionError;
use crate::hypercore::{Hypergraph, Vertex};

/// Output of the cloning procedure: a surface complex whose triangle `i`
/// maps onto edge `i` of the input, and the vertex map into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub surface: SurfaceComplex,
    pub phi: Vec<Vertex>,
    /// Vertices that were split, in processing order.
    pub cloned: Vec<Vertex>,
}

fn link_of(triangles: &[[Vertex; 3]], v: Vertex) -> BTreeMap<Vertex, Vec<Vertex>> {
    let mut l: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for t in triangles.iter().filter(|t| t.contains(&v)) {
        let mut o = t.iter().copied().filter(|&x| x != v);
        let (a, b) = (o.next().unwrap(), o.next().unwrap());
        l.entry(a).or_default().push(b);
        l.entry(b).or_default().push(a);
    }
    l
}

fn one_faces(triangles: &[[Vertex; 3]]) -> usize {
    let mut ps: Vec<(Vertex, Vertex)> = triangles
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    ps.sort_unstable();
    ps.dedup();
    ps.len()
}

/// Splits every vertex whose link has several cycles into one clone per
/// cycle, lowest vertex id first. Isolated vertices are dropped and the
/// survivors renumbered in order of their smallest preimage.
pub fn clone_decompose(g: &Hypergraph) -> Result<Decomposition, ImmersionError> {
    let order: Vec<Vertex> = (0..g.n()).collect();
    clone_decompose_with_order(g, &order)
}

/// As [`clone_decompose`] with an explicit processing order (a permutation
/// of the vertices).
pub fn clone_decompose_with_order(g: &Hypergraph, order: &[Vertex]) -> Result<Decomposition, ImmersionError> {
    g.require_uniformity(3)?;
    let mut triangles: Vec<[Vertex; 3]> = g.edges().iter().map(|e| [e[0], e[1], e[2]]).collect();
    for v in 0..g.n() {
        let l = link_of(&triangles, v);
        if let Some((&a, nb)) = l.iter().find(|(_, nb)| nb.len() != 2) {
            return Err(ImmersionError::LinkNotTwoRegular {
                vertex: v,
                detail: format!("link vertex {a} has degree {}", nb.len()),
            });
        }
    }
    let faces1 = one_faces(&triangles);
    let faces2 = triangles.len();
    let mut phi: Vec<Vertex> = (0..g.n()).collect();
    let mut cloned = Vec::new();
    for &v in order {
        let comps = graph_components(&link_of(&triangles, v));
        if comps.len() < 2 {
            continue;
        }
        cloned.push(v);
        for comp in comps {
            let clone = phi.len();
            phi.push(v);
            for t in triangles.iter_mut().filter(|t| t.contains(&v)) {
                let other = t.iter().copied().find(|&x| x != v).unwrap();
                if comp.binary_search(&other).is_ok() {
                    for x in t.iter_mut().filter(|x| **x == v) {
                        *x = clone;
                    }
                }
            }
        }
        assert_eq!(one_faces(&triangles), faces1, "cloning changed the 1-faces");
        assert_eq!(triangles.len(), faces2);
    }
    // a clone never needs cloning again
    for c in g.n()..phi.len() {
        assert_eq!(
            graph_components(&link_of(&triangles, c)).len(),
            1,
            "clone {c} has a split link"
        );
    }

    let mut used = vec![false; phi.len()];
    for t in &triangles {
        for &x in t {
            used[x] = true;
        }
    }
    let mut new_id = vec![usize::MAX; phi.len()];
    let mut final_phi = Vec::new();
    for (x, _) in used.iter().enumerate().filter(|(_, &u)| u) {
        new_id[x] = final_phi.len();
        final_phi.push(phi[x]);
    }
    let renamed: Vec<[Vertex; 3]> = triangles.iter().map(|t| t.map(|x| new_id[x])).collect();
    let surface = SurfaceComplex::new(final_phi.len(), renamed)?;
    Ok(Decomposition {
        surface,
        phi: final_phi,
        cloned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::fixtures;
    use crate::rng::SeedStream;
    use rand::seq::SliceRandom;

    #[test]
    fn tetrahedron_unchanged() {
        let d = clone_decompose(&fixtures::tetrahedron()).unwrap();
        assert!(d.cloned.is_empty());
        assert_eq!(d.phi, vec![0, 1, 2, 3]);
        assert_eq!(d.surface.components.len(), 1);
        assert_eq!(d.surface.components[0].classification.name, "sphere");
    }

    #[test]
    fn glued_tetrahedra_split() {
        let d = clone_decompose(&fixtures::glued_tetrahedra()).unwrap();
        assert_eq!(d.cloned, vec![0]);
        assert_eq!(d.surface.n, 8);
        assert_eq!(d.phi.iter().filter(|&&v| v == 0).count(), 2);
        let names: Vec<_> = d.surface.components.iter().map(|c| c.classification.euler).collect();
        assert_eq!(names, vec![2, 2]);
    }

    #[test]
    fn octahedron_sphere() {
        let d = clone_decompose(&fixtures::octahedron()).unwrap();
        assert_eq!(d.surface.euler_characteristic(), 2);
    }

    #[test]
    fn open_link_rejected() {
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        assert!(matches!(
            clone_decompose(&h),
            Err(ImmersionError::LinkNotTwoRegular { vertex: 0, .. })
        ));
    }

    #[test]
    fn order_does_not_matter() {
        // three spheres pinched at shared vertices
        let mut faces = Vec::new();
        for base in [[0, 1, 2, 3], [0, 4, 5, 6], [4, 7, 8, 9]] {
            for skip in 0..4 {
                faces.push(
                    base.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        let h = Hypergraph::new(3, 10, faces).unwrap();
        let reference = clone_decompose(&h).unwrap();
        let key = |d: &Decomposition| {
            let mut chis: Vec<_> = d.surface.components.iter().map(|c| c.classification.euler).collect();
            chis.sort_unstable();
            (d.surface.components.len(), chis)
        };
        let mut rng = SeedStream::new(9).rng();
        for _ in 0..10 {
            let mut order: Vec<Vertex> = (0..10).collect();
            order.shuffle(&mut rng);
            let d = clone_decompose_with_order(&h, &order).unwrap();
            assert_eq!(key(&d), key(&reference));
        }
        assert_eq!(key(&reference), (3, vec![2, 2, 2]));
    }
}
